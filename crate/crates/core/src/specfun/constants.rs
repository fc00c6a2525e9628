use super::{zeta_derivative, CNum, SpecFunConfig};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// Classical constants that appear in the fixed-parameter rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    EulerGamma,
    Catalan,
    /// `ln A` for the Glaisher–Kinkelin constant `A`.
    GlaisherLog,
    Pi,
}

impl Constant {
    pub const ALL: [Constant; 4] = [
        Constant::EulerGamma,
        Constant::Catalan,
        Constant::GlaisherLog,
        Constant::Pi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::EulerGamma => "euler_gamma",
            Constant::Catalan => "catalan",
            Constant::GlaisherLog => "glaisher_log",
            Constant::Pi => "pi",
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Constant::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown constant '{s}'"))
    }
}

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub fn constant(c: Constant) -> f64 {
    match c {
        Constant::EulerGamma => EULER_GAMMA,
        Constant::Pi => std::f64::consts::PI,
        Constant::Catalan => {
            static CATALAN: OnceLock<f64> = OnceLock::new();
            *CATALAN.get_or_init(|| alternating_sum(|n| 1.0 / ((2 * n + 1) as f64).powi(2), 30))
        }
        Constant::GlaisherLog => {
            static GLAISHER_LOG: OnceLock<f64> = OnceLock::new();
            *GLAISHER_LOG.get_or_init(|| {
                let d = zeta_derivative(CNum::new(-1.0, 0.0), &SpecFunConfig::default())
                    .expect("zeta'(-1) is regular");
                1.0 / 12.0 - d.re
            })
        }
    }
}

/// `sum_{k>=0} (-1)^k a(k)` by the Cohen–Rodriguez Villegas–Zagier
/// acceleration, using `n` terms. Error is about `5.8^-n` for totally
/// monotone `a`.
pub fn alternating_sum(a: impl Fn(usize) -> f64, n: usize) -> f64 {
    let nf = n as f64;
    let d = (3.0 + 8f64.sqrt()).powf(nf);
    let d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        s += c * a(k);
        let kf = k as f64;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}
