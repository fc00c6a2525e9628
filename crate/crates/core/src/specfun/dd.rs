//! Double-double arithmetic (about 32 significant digits) for the
//! cancellation-prone side of the Hurwitz zeta evaluation.
//!
//! Only what the Euler–Maclaurin sum needs is here: field operations, `exp`,
//! `ln`, `sin`/`cos`, `atan2`, and a thin complex wrapper.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

const LN2: Dd = Dd::new(std::f64::consts::LN_2, 2.3190468138462996e-17);
const TWO_PI: Dd = Dd::new(std::f64::consts::TAU, 2.4492935982947064e-16);
const HALF_PI: Dd = Dd::new(std::f64::consts::FRAC_PI_2, 6.123233995736766e-17);

impl Dd {
    pub const ZERO: Dd = Dd::new(0.0, 0.0);
    pub const ONE: Dd = Dd::new(1.0, 0.0);

    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (p, e) = quick_two_sum(p, e + self.lo * b);
        Dd::new(p, e)
    }

    fn ldexp(self, k: i32) -> Self {
        let f = 2f64.powi(k);
        Dd::new(self.hi * f, self.lo * f)
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let s = self.hi.sqrt();
        let s_dd = Dd::from_f64(s);
        s_dd + (self - s_dd.sqr()) / Dd::from_f64(2.0 * s)
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        // r = (x - k ln2) / 2^9, |r| <= 6.8e-4
        let r = (self - LN2.mul_f64(k)).ldexp(-9);
        let mut term = r;
        let mut s = r;
        for n in 2..=12 {
            term = term * r / Dd::from_f64(n as f64);
            s = s + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        // (1+s)^2 - 1 = 2s + s^2
        for _ in 0..9 {
            s = s.ldexp(1) + s.sqr();
        }
        (s + Dd::ONE).ldexp(k as i32)
    }

    pub fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0);
        let y = Dd::from_f64(self.hi.ln());
        // one Newton step on exp(y) = x
        y + self * (-y).exp() - Dd::ONE
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self.hi / TWO_PI.hi).round();
        let r = self - TWO_PI.mul_f64(k);
        let j = (r.hi / HALF_PI.hi).round();
        let t = r - HALF_PI.mul_f64(j);
        let t2 = t.sqr();
        // Taylor series, |t| <= pi/4
        let mut sin = t;
        let mut cos = Dd::ONE;
        let mut term_s = t;
        let mut term_c = Dd::ONE;
        for n in 1..=16 {
            let a = (2 * n) as f64;
            term_c = -(term_c * t2) / Dd::from_f64((a - 1.0) * a);
            term_s = -(term_s * t2) / Dd::from_f64(a * (a + 1.0));
            cos = cos + term_c;
            sin = sin + term_s;
            if term_s.hi.abs() < 1e-36 && term_c.hi.abs() < 1e-36 {
                break;
            }
        }
        match (j as i64).rem_euclid(4) {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }

    pub fn atan2(y: Dd, x: Dd) -> Dd {
        if x.hi == 0.0 && y.hi == 0.0 {
            return Dd::ZERO;
        }
        let z = Dd::from_f64(y.hi.atan2(x.hi));
        let r = (x.sqr() + y.sqr()).sqrt();
        let (xn, yn) = (x / r, y / r);
        let (s, c) = z.sin_cos();
        if xn.hi.abs() > yn.hi.abs() {
            z + (yn - s) / c
        } else {
            z - (xn - c) / s
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (s, e) = quick_two_sum(s, e + f);
        Dd::new(s, e)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd::new(-self.hi, -self.lo)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (p, e) = quick_two_sum(p, e);
        Dd::new(p, e)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Dd::new(q1, q2) + Dd::from_f64(q3)
    }
}

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub const ZERO: CDd = CDd::new(Dd::ZERO, Dd::ZERO);

    pub const fn new(re: Dd, im: Dd) -> Self {
        Self { re, im }
    }

    pub fn from_c64(z: super::CNum) -> Self {
        Self::new(Dd::from_f64(z.re), Dd::from_f64(z.im))
    }

    pub fn from_real(x: Dd) -> Self {
        Self::new(x, Dd::ZERO)
    }

    pub fn to_c64(self) -> super::CNum {
        super::CNum::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    /// Magnitude as a plain double, for step control only.
    pub fn norm_f64(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    pub fn ln(self) -> CDd {
        let re = self.norm_sqr().ln().ldexp(-1);
        CDd::new(re, Dd::atan2(self.im, self.re))
    }

    pub fn exp(self) -> CDd {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        CDd::new(m * c, m * s)
    }

    pub fn scale(self, k: Dd) -> CDd {
        CDd::new(self.re * k, self.im * k)
    }

    pub fn add_f64(self, x: f64) -> CDd {
        CDd::new(self.re + Dd::from_f64(x), self.im)
    }
}

impl Add for CDd {
    type Output = CDd;
    fn add(self, b: CDd) -> CDd {
        CDd::new(self.re + b.re, self.im + b.im)
    }
}

impl Sub for CDd {
    type Output = CDd;
    fn sub(self, b: CDd) -> CDd {
        CDd::new(self.re - b.re, self.im - b.im)
    }
}

impl Neg for CDd {
    type Output = CDd;
    fn neg(self) -> CDd {
        CDd::new(-self.re, -self.im)
    }
}

impl Mul for CDd {
    type Output = CDd;
    fn mul(self, b: CDd) -> CDd {
        CDd::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

impl Div for CDd {
    type Output = CDd;
    fn div(self, b: CDd) -> CDd {
        let d = b.norm_sqr();
        let n = self * CDd::new(b.re, -b.im);
        CDd::new(n.re / d, n.im / d)
    }
}

/// `B_{2j} / (2j)!` for `j = 1..=60`, split into leading and trailing doubles.
pub(crate) const BERNOULLI_OVER_FACTORIAL: [Dd; 60] = [
    Dd::new(0.08333333333333333, 4.625929269271485e-18),
    Dd::new(-0.001388888888888889, 5.300543954373577e-20),
    Dd::new(3.306878306878307e-05, -2.2300719288557665e-21),
    Dd::new(-8.267195767195768e-07, 3.457597454003665e-23),
    Dd::new(2.08767569878681e-08, -1.2073450591132599e-24),
    Dd::new(-5.284190138687493e-10, 3.517096671929869e-27),
    Dd::new(1.3382536530684679e-11, -2.828354019907999e-29),
    Dd::new(-3.3896802963225827e-13, -1.4986928409964295e-29),
    Dd::new(8.586062056277845e-15, -6.05252374381974e-31),
    Dd::new(-2.174868698558062e-16, 4.961617782549996e-33),
    Dd::new(5.5090028283602295e-18, -1.49827152194499e-35),
    Dd::new(-1.3954464685812522e-19, -1.0350590497256251e-35),
    Dd::new(3.534707039629467e-21, 1.894231142684204e-37),
    Dd::new(-8.953517427037546e-23, -5.728752743153026e-39),
    Dd::new(2.267952452337683e-24, 1.3043458462619563e-40),
    Dd::new(-5.744790668872202e-26, 1.663242973708004e-43),
    Dd::new(1.455172475614865e-27, -5.613265715443096e-44),
    Dd::new(-3.6859949406653103e-29, 1.0778256413554197e-45),
    Dd::new(9.336734257095045e-31, -3.9347970210731877e-47),
    Dd::new(-2.36502241570063e-32, 2.0347170931532494e-49),
    Dd::new(5.990671762482134e-34, 1.6265467158179092e-50),
    Dd::new(-1.5174548844682903e-35, 5.493014407946745e-52),
    Dd::new(3.843758125454189e-37, -3.685053096067968e-53),
    Dd::new(-9.736353072646691e-39, 2.258059165188444e-55),
    Dd::new(2.466247044200681e-40, -1.505641802268162e-56),
    Dd::new(-6.247076741820743e-42, -2.7106815859687654e-58),
    Dd::new(1.5824030244644914e-43, 2.545428531496969e-60),
    Dd::new(-4.008273685948936e-45, -2.2124211668946826e-61),
    Dd::new(1.0153075855569557e-46, -9.404269751258486e-63),
    Dd::new(-2.5718041582418717e-48, -6.537655454012542e-65),
    Dd::new(6.514456035233815e-50, -2.763626172529861e-66),
    Dd::new(-1.6501309906896525e-51, 3.1794529475063687e-68),
    Dd::new(4.179830628539476e-53, 2.617556823159939e-69),
    Dd::new(-1.058763466770291e-54, 6.6915528436035195e-71),
    Dd::new(2.6818791912607708e-56, -8.70695425146146e-73),
    Dd::new(-6.793279351107421e-58, 2.795667911354165e-74),
    Dd::new(1.7207577616681404e-59, 4.65433497191727e-76),
    Dd::new(-4.358730329348894e-61, 2.8840522874209336e-77),
    Dd::new(1.1040792903684666e-62, 6.624841731022409e-79),
    Dd::new(-2.7966655133781345e-64, 2.628041826403209e-81),
    Dd::new(7.084036501679471e-66, -5.026235239023924e-82),
    Dd::new(-1.794407408289224e-67, 1.5372719769275798e-84),
    Dd::new(4.545287063611096e-69, 9.87696151726261e-87),
    Dd::new(-1.1513346631982051e-70, -7.192856523313341e-87),
    Dd::new(2.9163647710923614e-72, -3.8911087510195904e-89),
    Dd::new(-7.387238263497337e-74, -6.923136687699924e-90),
    Dd::new(1.8712093117637953e-75, 1.5886680102062367e-92),
    Dd::new(-4.739828557761799e-77, -9.517121002177184e-94),
    Dd::new(1.2006125993354507e-78, -1.109850335891779e-95),
    Dd::new(-3.0411872415142924e-80, 5.125117133572647e-97),
    Dd::new(7.703417274705106e-82, 3.948211996024456e-99),
    Dd::new(-1.951298390909883e-83, -1.2533409416284754e-99),
    Dd::new(4.942696565159462e-85, -2.8094990080509668e-101),
    Dd::new(-1.2519996659171848e-86, -2.5859037541718075e-103),
    Dd::new(3.1713522017635153e-88, 1.808466797142321e-104),
    Dd::new(-8.033128970735334e-90, -5.501602254025203e-106),
    Dd::new(2.0348153391661465e-91, 4.956249311149982e-108),
    Dd::new(-5.154247466447474e-93, -2.4639060810936437e-109),
    Dd::new(1.3055861352149468e-94, -3.669056422783558e-111),
    Dd::new(-3.307088314175091e-96, -6.886640190175871e-113),
];
