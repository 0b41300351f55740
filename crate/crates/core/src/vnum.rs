//! v-numbers by exhaustive search with explicit witnesses.
//!
//! `v_P(I)` is the least degree of a monomial `f` with `(I : f) = P`, and
//! `v(I)` is the minimum over `Ass(I)`. The search only visits `f` with
//! `supp(f) ⊆ ⋃ supp(u)` and `f_i ≤ M_i` (largest exponent of `x_i` in
//! `G(I)`). Both restrictions are harmless: a variable outside every
//! generator never changes the colon, and any `f_i ≥ M_i` already kills `x_i`
//! in every `u / gcd(u, f)`.
//!
//! Candidates are visited degree by degree, and within a degree in canonical
//! monomial order, so the reported witness is the canonically smallest one
//! of minimal degree.

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::Budget;
use crate::decompose::{associated_primes, MonomialPrime};
use crate::error::{Error, Result};
use crate::ring::{Exp, Monomial, MonomialIdeal};

/// A monomial `f` with `(I : f) = P`, checked at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    monomial: Monomial,
    prime: MonomialPrime,
}

impl Witness {
    pub fn new(ideal: &MonomialIdeal, monomial: Monomial, prime: MonomialPrime) -> Result<Self> {
        if !check_witness(ideal, &monomial, &prime) {
            return Err(Error::Violation(format!(
                "({ideal} : {}) is not {prime}",
                ideal.ring().format_monomial(&monomial)
            )));
        }
        Ok(Witness { monomial, prime })
    }

    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn prime(&self) -> &MonomialPrime {
        &self.prime
    }

    pub fn degree(&self) -> u64 {
        self.monomial.degree()
    }
}

/// Whether `(I : f) = P`.
pub fn check_witness(ideal: &MonomialIdeal, f: &Monomial, prime: &MonomialPrime) -> bool {
    if ideal.ring() != prime.ring() || ideal.ring().check(f).is_err() {
        return false;
    }
    match ideal.colon_monomial(f) {
        Ok(colon) => colon == prime.to_ideal(),
        Err(_) => false,
    }
}

/// Variables of `(I : f)` when that colon is a monomial prime.
///
/// With `w_u = u / gcd(u, f)`, the colon is prime iff no `w_u` is 1 and every
/// `w_u` is divisible by some `w_v` that is a single variable.
pub(crate) fn colon_prime_vars(gens: &[Monomial], f: &[Exp]) -> Option<Vec<usize>> {
    let n = f.len();
    let mut in_v = vec![false; n];
    for u in gens {
        let mut deg = 0u64;
        let mut var = 0;
        for (i, (&ui, &fi)) in u.exps().iter().zip(f).enumerate() {
            if ui > fi {
                deg += u64::from(ui - fi);
                var = i;
                if deg > 1 {
                    break;
                }
            }
        }
        match deg {
            0 => return None,
            1 => in_v[var] = true,
            _ => {}
        }
    }
    let covered = gens.iter().all(|u| u.exps().iter().zip(f).enumerate().any(|(i, (&ui, &fi))| ui > fi && in_v[i]));
    if !covered {
        return None;
    }
    Some((0..n).filter(|&i| in_v[i]).collect())
}

/// All local v-numbers and their minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VNumberReport {
    pub ideal: MonomialIdeal,
    pub locals: BTreeMap<MonomialPrime, (u64, Witness)>,
    pub v: u64,
}

impl VNumberReport {
    /// A witness attaining `v`; the first prime in canonical order wins ties.
    pub fn witness(&self) -> &Witness {
        self.locals.values().find(|(d, _)| *d == self.v).map(|(_, w)| w).unwrap()
    }

    pub fn local(&self, prime: &MonomialPrime) -> Option<u64> {
        self.locals.get(prime).map(|(d, _)| *d)
    }
}

/// `v_P(I)` with a minimal-degree witness.
pub fn local_v_number(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<(u64, Witness)> {
    local_v_number_within(ideal, prime, &Budget::unlimited())
}

pub fn local_v_number_within(ideal: &MonomialIdeal, prime: &MonomialPrime, budget: &Budget) -> Result<(u64, Witness)> {
    ideal.ring().check_same(prime.ring())?;
    let ass = associated_primes(ideal)?;
    if !ass.contains(prime) {
        return Err(Error::domain(format!("{prime} is not associated to {ideal}")));
    }
    let targets = BTreeSet::from([prime.clone()]);
    let mut found = search(ideal, &targets, budget)?;
    Ok(found.remove(prime).expect("associated primes are realised as colons"))
}

/// `v(I)` together with every local value.
pub fn v_number(ideal: &MonomialIdeal) -> Result<VNumberReport> {
    v_number_within(ideal, &Budget::unlimited())
}

pub fn v_number_within(ideal: &MonomialIdeal, budget: &Budget) -> Result<VNumberReport> {
    let targets: BTreeSet<MonomialPrime> = associated_primes(ideal)?.into_iter().collect();
    let locals = search(ideal, &targets, budget)?;
    if locals.len() != targets.len() {
        return Err(Error::Violation(format!("some associated prime of {ideal} has no witness")));
    }
    let v = locals.values().map(|(d, _)| *d).min().unwrap();
    Ok(VNumberReport { ideal: ideal.clone(), locals, v })
}

/// Only the global value, stopping at the first witness of any prime.
pub fn v_number_min(ideal: &MonomialIdeal, budget: &Budget) -> Result<(u64, Witness)> {
    ideal.require_proper("v-number")?;
    let ring = ideal.ring();
    let mut out = None;
    walk(ideal, budget, |f, vars| {
        let p = MonomialPrime::new(ring, vars.iter().copied()).unwrap();
        out = Some((f.degree(), Witness { monomial: f.clone(), prime: p }));
        false
    })?;
    out.ok_or_else(|| Error::Violation(format!("no witness found for {ideal}")))
}

// First witness per target prime.
fn search(
    ideal: &MonomialIdeal,
    targets: &BTreeSet<MonomialPrime>,
    budget: &Budget,
) -> Result<BTreeMap<MonomialPrime, (u64, Witness)>> {
    let ring = ideal.ring();
    let mut found: BTreeMap<MonomialPrime, (u64, Witness)> = BTreeMap::new();
    walk(ideal, budget, |f, vars| {
        let p = MonomialPrime::new(ring, vars.iter().copied()).unwrap();
        if targets.contains(&p) && !found.contains_key(&p) {
            debug_assert!(check_witness(ideal, f, &p));
            found.insert(p.clone(), (f.degree(), Witness { monomial: f.clone(), prime: p }));
        }
        found.len() < targets.len()
    })?;
    Ok(found)
}

// Visits the restricted search space by degree, then canonical order, and
// calls `hit` on every f whose colon is prime until it returns false.
fn walk(ideal: &MonomialIdeal, budget: &Budget, mut hit: impl FnMut(&Monomial, &[usize]) -> bool) -> Result<()> {
    ideal.require_proper("v-number")?;
    let n = ideal.ring().num_vars();
    let bounds = ideal.max_exponents();
    let total: u64 = bounds.iter().map(|&b| u64::from(b)).sum();
    let gens = ideal.gens();
    let mut exps = vec![0 as Exp; n];
    let mut visited: u64 = 0;
    for d in 0..=total {
        let mut stop = false;
        let mut err = None;
        compositions(&bounds, d, 0, &mut exps, &mut |e| {
            visited += 1;
            if visited.is_multiple_of(4096) {
                if let Err(x) = budget.check() {
                    err = Some(x);
                    return false;
                }
            }
            if let Some(vars) = colon_prime_vars(gens, e) {
                if !hit(&Monomial::new(e.to_vec()), &vars) {
                    stop = true;
                    return false;
                }
            }
            true
        });
        if let Some(e) = err {
            return Err(e);
        }
        if stop {
            return Ok(());
        }
    }
    Ok(())
}

// Exponent vectors with `Σ = remaining` and `e_i ≤ bounds[i]`, in descending
// lexicographic order. Returns false once `visit` asks to stop.
fn compositions(
    bounds: &[Exp],
    remaining: u64,
    i: usize,
    exps: &mut [Exp],
    visit: &mut impl FnMut(&[Exp]) -> bool,
) -> bool {
    if i == bounds.len() {
        return remaining == 0 && visit(exps);
    }
    let tail: u64 = bounds[i + 1..].iter().map(|&b| u64::from(b)).sum();
    let hi = remaining.min(u64::from(bounds[i]));
    let lo = remaining.saturating_sub(tail);
    if lo > hi {
        return true;
    }
    for e in (lo..=hi).rev() {
        exps[i] = e as Exp;
        if !compositions(bounds, remaining - e, i + 1, exps, visit) {
            exps[i] = 0;
            return false;
        }
    }
    exps[i] = 0;
    true
}
