//! Exact primal simplex for the Newton-polyhedron membership LP
//!
//! ```text
//! maximize Σ λ_j   subject to   V λ ≤ a,  λ ≥ 0
//! ```
//!
//! where the columns of `V` are generator exponent vectors. Since `V ≥ 0`,
//! the point `a` lies in `conv(V) + ℝ^m_{≥0}` iff the optimum is at least 1
//! (rescale an optimal `λ` by its sum). The origin is feasible, so no phase 1
//! is needed. Pivoting follows Bland's rule, which cannot cycle.
//!
//! The arithmetic type is pluggable: `Ratio<i64>` runs first and reports
//! overflow as `None`, then the caller retries with `BigRational`.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

/// Exact ordered field with fallible operations.
pub(crate) trait Exact: Clone + Ord + Zero + One {
    fn from_u64(v: u64) -> Option<Self>;
    fn add_(&self, o: &Self) -> Option<Self>;
    fn sub_(&self, o: &Self) -> Option<Self>;
    fn mul_(&self, o: &Self) -> Option<Self>;
    fn div_(&self, o: &Self) -> Option<Self>;
    fn is_pos(&self) -> bool;
}

impl Exact for Ratio<i64> {
    fn from_u64(v: u64) -> Option<Self> {
        i64::try_from(v).ok().map(Ratio::from_integer)
    }
    fn add_(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
}

impl Exact for BigRational {
    fn from_u64(v: u64) -> Option<Self> {
        Some(Ratio::from_integer(BigInt::from(v)))
    }
    fn add_(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            None
        } else {
            Some(self / o)
        }
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
}

/// Decides `max Σλ ≥ 1` over `{λ ≥ 0 : Σ_j cols[j][i] λ_j ≤ rhs[i]}`.
///
/// Every column must be nonzero on some row, which keeps the LP bounded.
/// Returns `None` if `T` overflowed.
pub(crate) fn max_sum_reaches_one<T: Exact>(cols: &[Vec<u64>], rhs: &[u64]) -> Option<bool> {
    let m = rhs.len();
    let n = cols.len();
    let width = n + m;
    // tableau rows: [V | I | b]; basis[r] = column basic in row r
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(m);
    for (i, &b) in rhs.iter().enumerate() {
        let mut row = Vec::with_capacity(width + 1);
        for col in cols {
            row.push(T::from_u64(col[i])?);
        }
        for k in 0..m {
            row.push(if k == i { T::one() } else { T::zero() });
        }
        row.push(T::from_u64(b)?);
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n..width).collect();
    // reduced profits c_j - z_j; objective value tracked separately
    let mut profit: Vec<T> = (0..width).map(|j| if j < n { T::one() } else { T::zero() }).collect();
    let mut value = T::zero();
    let one = T::one();

    loop {
        if value >= one {
            return Some(true);
        }
        let Some(enter) = (0..width).find(|&j| profit[j].is_pos()) else {
            return Some(false);
        };
        let mut leave: Option<(usize, T)> = None;
        for r in 0..m {
            let coef = &tab[r][enter];
            if !coef.is_pos() {
                continue;
            }
            let ratio = tab[r][width].div_(coef)?;
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // bounded by construction; an unbounded ray would mean a zero column
        let (pr, _) = leave.expect("membership LP is bounded");

        let piv = tab[pr][enter].clone();
        for cell in tab[pr].iter_mut() {
            *cell = cell.div_(&piv)?;
        }
        let prow = tab[pr].clone();
        for (r, row) in tab.iter_mut().enumerate() {
            if r == pr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for c in 0..=width {
                if !prow[c].is_zero() {
                    row[c] = row[c].sub_(&f.mul_(&prow[c])?)?;
                }
            }
        }
        let f = profit[enter].clone();
        for c in 0..width {
            if !prow[c].is_zero() {
                profit[c] = profit[c].sub_(&f.mul_(&prow[c])?)?;
            }
        }
        value = value.add_(&f.mul_(&prow[width])?)?;
        basis[pr] = enter;
    }
}
