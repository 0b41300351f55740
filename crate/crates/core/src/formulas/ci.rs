//! Complete intersections: `v(I)` and `v(Iⁿ)`.

use super::{mono, FormulaResult};
use crate::decompose::{associated_primes, irreducible_decomposition, is_complete_intersection, MonomialPrime};
use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialIdeal};
use crate::vnum::check_witness;

const CITE_CI: &str = "complete intersection: v(I) = sum deg u_i - r";
const CITE_CI_POWER: &str = "complete intersection powers: v(I^n) = n*alpha + v(I) - alpha";
const CITE_PRIMARY: &str = "primary ideal: v(I) = min over irreducible components";

/// A complete intersection with a chosen associated prime `P`, and for each
/// generator `u_i` the unique variable `y_i ∈ supp(u_i) ∩ P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIIdealSpec {
    ideal: MonomialIdeal,
    prime: MonomialPrime,
    /// `ys[i]` pairs with `ideal.gens()[i]`; `gens()[0]` has degree `α`.
    ys: Vec<usize>,
}

impl CIIdealSpec {
    pub fn new(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<Self> {
        if !is_complete_intersection(ideal)? {
            return Err(Error::domain(format!("{ideal} is not a complete intersection")));
        }
        if !associated_primes(ideal)?.contains(prime) {
            return Err(Error::domain(format!("{prime} is not associated to {ideal}")));
        }
        let mut ys = Vec::with_capacity(ideal.num_gens());
        for u in ideal.gens() {
            let hits: Vec<usize> = u.support().into_iter().filter(|&i| prime.contains_var(i)).collect();
            if hits.len() != 1 {
                return Err(Error::domain(format!("{prime} does not meet each generator once")));
            }
            ys.push(hits[0]);
        }
        Ok(CIIdealSpec { ideal: ideal.clone(), prime: prime.clone(), ys })
    }

    /// The spec at the first associated prime in canonical order.
    pub fn for_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let p = associated_primes(ideal)?.remove(0);
        Self::new(ideal, &p)
    }

    /// One spec per associated prime.
    pub fn all(ideal: &MonomialIdeal) -> Result<Vec<Self>> {
        associated_primes(ideal)?.iter().map(|p| Self::new(ideal, p)).collect()
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn prime(&self) -> &MonomialPrime {
        &self.prime
    }

    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    pub fn r(&self) -> usize {
        self.ys.len()
    }

    pub fn alpha(&self) -> u64 {
        self.ideal.gens()[0].degree()
    }

    /// `g = Π u_i / Π y_i`.
    pub fn g(&self) -> Monomial {
        let n = self.ideal.ring().num_vars();
        let mut exps = vec![0; n];
        for (u, &y) in self.ideal.gens().iter().zip(&self.ys) {
            for (e, &ue) in exps.iter_mut().zip(u.exps()) {
                *e += ue;
            }
            exps[y] -= 1;
        }
        Monomial::new(exps)
    }
}

pub fn v_ci(spec: &CIIdealSpec) -> FormulaResult {
    let total: u64 = spec.ideal.gens().iter().map(Monomial::degree).sum();
    FormulaResult::exact(total - spec.r() as u64, Some(spec.g()), CITE_CI)
}

/// [`v_ci`] on an arbitrary ideal, not applicable unless it is a CI.
pub fn v_ci_of(ideal: &MonomialIdeal) -> Result<FormulaResult> {
    if !is_complete_intersection(ideal)? {
        return Ok(FormulaResult::not_applicable(CITE_CI, "not a complete intersection"));
    }
    Ok(v_ci(&CIIdealSpec::for_ideal(ideal)?))
}

/// Value and the witness `(u_1ⁿ / y_1) · Π_{i≥2} (u_i / y_i)`.
pub fn v_ci_power(spec: &CIIdealSpec, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    let gens = spec.ideal.gens();
    let alpha = spec.alpha();
    let v = v_ci(spec).value.unwrap();
    let mut f = gens[0].pow(n)?;
    for u in &gens[1..] {
        f = f.mul(u)?;
    }
    let mut exps = f.exps().to_vec();
    for &y in &spec.ys {
        exps[y] -= 1;
    }
    let value = u64::from(n) * alpha + v - alpha;
    Ok(FormulaResult::exact(value, Some(Monomial::new(exps)), CITE_CI_POWER))
}

/// For a primary ideal, the least `Σ exps − r` over its irreducible
/// components. The component's own witness is reported when it also works
/// for `I`.
pub fn v_primary_min(ideal: &MonomialIdeal) -> Result<FormulaResult> {
    let ass = associated_primes(ideal)?;
    if ass.len() != 1 {
        return Ok(FormulaResult::not_applicable(CITE_PRIMARY, "more than one associated prime"));
    }
    let n = ideal.ring().num_vars();
    let mut best: Option<(u64, Monomial)> = None;
    for c in irreducible_decomposition(ideal)?.components() {
        let value: u64 = c.powers().values().map(|&e| u64::from(e) - 1).sum();
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            let entries: Vec<(usize, u64)> = c.powers().iter().map(|(&i, &e)| (i, u64::from(e) - 1)).collect();
            best = Some((value, mono(n, &entries)?));
        }
    }
    let (value, w) = best.unwrap();
    let witness = check_witness(ideal, &w, &ass[0]).then_some(w);
    Ok(FormulaResult::exact(value, witness, CITE_PRIMARY))
}
