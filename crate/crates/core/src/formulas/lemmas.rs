//! Two ceiling inequalities used by the closure formulas, evaluated exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ceil_div;
use crate::error::{Error, Result};

/// Both sides of
/// `⌈(L+c)A − s⌉ > ⌈(L−1+c)A − s⌉` and
/// `⌈(L+c)A − s⌉ ≥ (L−t) + ⌈(c+t)A − s⌉`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeilStep {
    pub lhs: BigInt,
    /// `⌈(L−1+c)A − s⌉`.
    pub rhs1: BigInt,
    /// `(L−t) + ⌈(c+t)A − s⌉`.
    pub rhs2: BigInt,
}

impl CeilStep {
    pub fn holds1(&self) -> bool {
        self.lhs > self.rhs1
    }

    pub fn holds2(&self) -> bool {
        self.lhs >= self.rhs2
    }
}

/// Requires `A ≥ 1`, `−1 < c ≤ 0`, `0 ≤ s ≤ 1` and `1 ≤ t ≤ L`.
pub fn ceil_step(l: u64, t: u64, a: &BigRational, c: &BigRational, s: &BigRational) -> Result<CeilStep> {
    let one = BigRational::one();
    if *a < one {
        return Err(Error::domain("A must be at least 1"));
    }
    if *c <= -one.clone() || *c > BigRational::zero() {
        return Err(Error::domain("c must lie in (-1, 0]"));
    }
    if *s < BigRational::zero() || *s > one {
        return Err(Error::domain("s must lie in [0, 1]"));
    }
    if t == 0 || t > l {
        return Err(Error::domain("t must lie in 1..=L"));
    }
    let int = |v: u64| BigRational::from_integer(BigInt::from(v));
    let eval = |k: BigRational| ((k + c) * a - s).ceil().to_integer();
    Ok(CeilStep { lhs: eval(int(l)), rhs1: eval(int(l - 1)), rhs2: BigInt::from(l - t) + eval(int(t)) })
}

/// `b ≥ ⌈b/a⌉ + 1`, checked against its characterization `a ≥ 2 ∧ b ≥ 2`.
pub fn b_mod_helper(a: u64, b: u64) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::domain("a and b must be positive"));
    }
    let lhs = b > ceil_div(b, a);
    if lhs != (a >= 2 && b >= 2) {
        return Err(Error::Violation(format!("b >= ceil(b/a) + 1 characterization fails at a={a}, b={b}")));
    }
    Ok(lhs)
}
