//! Integral closure of monomial ideals.
//!
//! A monomial `x^a` lies in `Ī` iff `a` lies in the Newton polyhedron
//! `conv(G(I)) + ℝ^m_{≥0}`. Membership is an exact LP (see [`simplex`]);
//! for pure-power ideals it collapses to `Σ a_i / b_i ≥ 1`.
//!
//! Generators of `Ī` are found by scanning the box `∏ [0, M_i]` with `M_i`
//! the largest exponent of `x_i` in `G(I)`. The box suffices: if `a_i > M_i`
//! and `a ∈ NP(I)` then the convex part contributes at most `M_i` in
//! coordinate `i`, so `a - e_i ∈ NP(I)` as well and `a` is not minimal.

mod simplex;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

use crate::budget::Budget;
use crate::decompose::{irreducible_decomposition, is_complete_intersection, IrredComponent};
use crate::error::{Error, Result};
use crate::ring::{minimalize_unchecked, Exp, Monomial, MonomialIdeal};

/// `Σ_l a_{i_l} / b_{i_l} ≥ 1` over the component's variables.
pub fn pure_power_membership(powers: &IrredComponent, a: &Monomial) -> bool {
    let mut sum = BigRational::from_integer(BigInt::from(0));
    let one = BigRational::from_integer(BigInt::from(1));
    for (&i, &b) in powers.powers() {
        let ai = a.exps()[i];
        if ai >= b {
            return true;
        }
        sum += Ratio::new(BigInt::from(ai), BigInt::from(b));
        if sum >= one {
            return true;
        }
    }
    false
}

/// Whether `x^a ∈ Ī`, decided by exact Newton-polyhedron feasibility.
pub fn np_membership(ideal: &MonomialIdeal, a: &Monomial) -> Result<bool> {
    ideal.ring().check(a)?;
    ideal.require_nonzero("Newton polyhedron membership")?;
    if ideal.contains(a) {
        return Ok(true);
    }
    // NP(I) lies on or above the hyperplane Σ = α
    if a.degree() < ideal.alpha()? {
        return Ok(false);
    }
    Ok(lp_membership(ideal, a))
}

fn lp_membership(ideal: &MonomialIdeal, a: &Monomial) -> bool {
    let rows: Vec<usize> = ideal.support_union().into_iter().collect();
    let cols: Vec<Vec<u64>> =
        ideal.gens().iter().map(|g| rows.iter().map(|&i| u64::from(g.exps()[i])).collect()).collect();
    let rhs: Vec<u64> = rows.iter().map(|&i| u64::from(a.exps()[i])).collect();
    simplex::max_sum_reaches_one::<Ratio<i64>>(&cols, &rhs)
        .or_else(|| simplex::max_sum_reaches_one::<BigRational>(&cols, &rhs))
        .expect("arbitrary precision cannot overflow")
}

/// Minimal generators of `Ī`.
pub fn closure_generators(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    closure_generators_within(ideal, &Budget::unlimited())
}

/// [`closure_generators`] with a wall-clock budget.
pub fn closure_generators_within(ideal: &MonomialIdeal, budget: &Budget) -> Result<MonomialIdeal> {
    closure_in_box(ideal, &ideal.max_exponents(), budget)
}

fn closure_in_box(ideal: &MonomialIdeal, bounds: &[Exp], budget: &Budget) -> Result<MonomialIdeal> {
    ideal.require_nonzero("integral closure")?;
    let ring = ideal.ring();
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let pure = if ideal.is_pure_power() { Some(IrredComponent::from_ideal(ideal)?) } else { None };
    let alpha = ideal.alpha()?;
    let member = |m: &Monomial| -> bool {
        if let Some(c) = &pure {
            return pure_power_membership(c, m);
        }
        if ideal.contains(m) {
            return true;
        }
        m.degree() >= alpha && lp_membership(ideal, m)
    };

    let vars: Vec<usize> = (0..bounds.len()).filter(|&i| bounds[i] > 0).collect();
    let (&last, prefix) = vars.split_last().expect("proper nonzero ideal has support");
    let mut exps = vec![0 as Exp; ring.num_vars()];
    let mut found = Vec::new();
    let mut scanned: u64 = 0;
    loop {
        // walk the fiber along the last variable; past the first member
        // every point is a multiple of it
        for e in 0..=bounds[last] {
            exps[last] = e;
            let m = Monomial::new(exps.clone());
            if member(&m) {
                found.push(m);
                break;
            }
        }
        exps[last] = 0;
        scanned += 1;
        if scanned.is_multiple_of(256) {
            budget.check()?;
        }
        // lexicographic odometer on the prefix
        let mut k = prefix.len();
        loop {
            if k == 0 {
                let out = minimalize_unchecked(ring, found);
                debug_assert!(out.gens().iter().all(|g| g.exps().iter().zip(bounds).all(|(a, b)| a <= b)));
                return Ok(out);
            }
            k -= 1;
            let i = prefix[k];
            if exps[i] < bounds[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
        }
    }
}

/// Minimal generators of `\overline{I^n}`, computed from `⟨u^n : u ∈ G(I)⟩`,
/// which has the same Newton polyhedron as `I^n`.
pub fn closure_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    closure_power_within(ideal, n, &Budget::unlimited())
}

pub fn closure_power_within(ideal: &MonomialIdeal, n: u32, budget: &Budget) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::domain("closure power exponent must be positive"));
    }
    closure_generators_within(&ideal.generator_powers(n)?, budget)
}

/// For a complete intersection, `\overline{I^n}` as the intersection of the
/// closed powers of its irreducible components.
pub fn closure_power_ci(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if !is_complete_intersection(ideal)? {
        return Err(Error::domain(format!("{ideal} is not a complete intersection")));
    }
    let mut acc = MonomialIdeal::unit(ideal.ring());
    for c in irreducible_decomposition(ideal)?.components() {
        acc = acc.intersect(&closure_power(&c.to_ideal(), n)?)?;
    }
    Ok(acc)
}

/// Whether `Ī = I`.
pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(closure_generators(ideal)? == *ideal)
}
