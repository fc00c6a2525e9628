/// Largest `j` for which `B_{2j}` is tabulated.
pub const MAX_BERNOULLI_INDEX: usize = 30;

// B_2, B_4, ..., B_60 rounded to nearest from the exact rationals.
const B_EVEN: [f64; MAX_BERNOULLI_INDEX] = [
    0.16666666666666666,     // 1/6
    -0.03333333333333333,    // -1/30
    0.023809523809523808,    // 1/42
    -0.03333333333333333,    // -1/30
    0.07575757575757576,     // 5/66
    -0.2531135531135531,     // -691/2730
    1.1666666666666667,      // 7/6
    -7.092156862745098,      // -3617/510
    54.971177944862156,      // 43867/798
    -529.1242424242424,      // -174611/330
    6192.123188405797,       // 854513/138
    -86580.25311355312,      // -236364091/2730
    1425517.1666666667,      // 8553103/6
    -27298231.067816094,     // -23749461029/870
    601580873.9006424,       // 8615841276005/14322
    -15116315767.092157,     // -7709321041217/510
    429614643061.1667,       // 2577687858367/6
    -13711655205088.332,     // -26315271553053477373/1919190
    488332318973593.2,       // 2929993913841559/6
    -1.9296579341940068e16,  // -261082718496449122051/13530
    8.416930475736826e17,    // 1520097643918070802691/1806
    -4.0338071854059454e19,  // -27833269579301024235023/690
    2.1150748638081993e21,   // 596451111593912163277961/282
    -1.2086626522296526e23,
    7.500866746076964e24,
    -5.038778101481069e26,
    3.6528776484818122e28,
    -2.849876930245088e30,
    2.3865427499683627e32,
    -2.1399949257225335e34,
];

/// Even Bernoulli number `B_{2j}` for `1 <= j <= 30`.
pub fn bernoulli_2j(j: usize) -> f64 {
    assert!(
        (1..=MAX_BERNOULLI_INDEX).contains(&j),
        "B_2j tabulated only for 1 <= j <= {MAX_BERNOULLI_INDEX}"
    );
    B_EVEN[j - 1]
}
