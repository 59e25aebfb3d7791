//! Best rational approximations by continued fractions.

use std::fmt;

use serde::Serialize;

/// Default bound on the denominator.
pub const MAX_DENOMINATOR: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Closest fraction with denominator at most `max_den`, chosen among the
/// convergents and the last admissible semiconvergent.
pub fn rationalize(x: f64, max_den: i64) -> Option<Fraction> {
    if !x.is_finite() || max_den < 1 || x.abs() > i64::MAX as f64 / 2.0 {
        return None;
    }
    let negative = x < 0.0;
    let target = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut rest = target;
    loop {
        let a = rest.floor();
        if a > i64::MAX as f64 / 2.0 {
            break;
        }
        let a = a as i64;
        let q2 = match a.checked_mul(q1).and_then(|v| v.checked_add(q0)) {
            Some(q) if q <= max_den => q,
            _ => {
                // largest semiconvergent that still fits
                if q1 == 0 {
                    break;
                }
                let k = (max_den - q0) / q1;
                let (ps, qs) = (p0 + k * p1, q0 + k * q1);
                if qs > 0
                    && (ps as f64 / qs as f64 - target).abs() < (p1 as f64 / q1 as f64 - target).abs()
                {
                    p1 = ps;
                    q1 = qs;
                }
                break;
            }
        };
        let p2 = match a.checked_mul(p1).and_then(|v| v.checked_add(p0)) {
            Some(p) => p,
            None => break,
        };
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = rest - a as f64;
        if frac.abs() < 1e-15 || (p1 as f64 / q1 as f64 - target).abs() <= f64::EPSILON * target {
            break;
        }
        rest = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    Some(Fraction {
        num: if negative { -p1 } else { p1 },
        den: q1,
    })
}
