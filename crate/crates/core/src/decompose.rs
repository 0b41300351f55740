//! Irredundant irreducible decompositions and everything derived from them:
//! associated primes, height, complete-intersection detection, primary
//! components, saturation and symbolic powers.
//!
//! Associated primes are read off as the radicals of the irredundant
//! irreducible components. For monomial ideals this is a standard fact; the
//! test-suite cross-checks it by exhibiting `(I : f) = P` for every returned
//! prime.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{minimalize_unchecked, Exp, Monomial, MonomialIdeal, Ring};

/// `⟨x_i : i ∈ vars⟩`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialPrime {
    ring: Ring,
    vars: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        if vars.is_empty() {
            return Err(Error::domain("a monomial prime needs at least one variable"));
        }
        if let Some(&i) = vars.iter().find(|&&i| i >= ring.num_vars()) {
            return Err(Error::RingMismatch(format!("variable index {i} out of range")));
        }
        Ok(MonomialPrime { ring: ring.clone(), vars })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.vars.contains(&i)
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.vars.is_subset(&other.vars)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        // variables in index order are already canonical: equal degree, descending lex
        MonomialIdeal::from_canonical(&self.ring, self.vars.iter().map(|&i| Monomial::var(n, i)).collect())
    }

    /// Product of the variables outside this prime.
    pub fn complement_product(&self) -> Monomial {
        let n = self.ring.num_vars();
        Monomial::new((0..n).map(|i| Exp::from(!self.vars.contains(&i))).collect())
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vars.len().cmp(&other.vars.len()).then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|&i| self.ring.vars()[i].as_str()).collect();
        write!(f, "({})", names.join(", "))
    }
}

/// An irreducible monomial ideal `⟨x_{i_1}^{a_1}, …, x_{i_k}^{a_k}⟩`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrredComponent {
    ring: Ring,
    powers: BTreeMap<usize, Exp>,
}

impl IrredComponent {
    pub fn new(ring: &Ring, powers: impl IntoIterator<Item = (usize, Exp)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, e) in powers {
            if i >= ring.num_vars() {
                return Err(Error::RingMismatch(format!("variable index {i} out of range")));
            }
            if e == 0 {
                return Err(Error::domain("irreducible component exponents must be positive"));
            }
            if map.insert(i, e).is_some() {
                return Err(Error::domain(format!("variable index {i} given twice")));
            }
        }
        if map.is_empty() {
            return Err(Error::domain("an irreducible component needs at least one generator"));
        }
        Ok(IrredComponent { ring: ring.clone(), powers: map })
    }

    /// Reads a pure-power ideal as a component.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_proper("irreducible component")?;
        if !ideal.is_pure_power() {
            return Err(Error::domain(format!("{ideal} is not generated by pure powers")));
        }
        let powers = ideal.gens().iter().map(|g| {
            let i = g.support()[0];
            (i, g.exps()[i])
        });
        IrredComponent::new(ideal.ring(), powers)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn powers(&self) -> &BTreeMap<usize, Exp> {
        &self.powers
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime { ring: self.ring.clone(), vars: self.powers.keys().copied().collect() }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        let gens = self.powers.iter().map(|(&i, &e)| Monomial::pure_power(n, i, e)).collect();
        minimalize_unchecked(&self.ring, gens)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.powers.iter().any(|(&i, &e)| m.exps()[i] >= e)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &IrredComponent) -> bool {
        self.powers.iter().all(|(&i, &e)| other.powers.get(&i).is_some_and(|&f| f <= e))
    }
}

impl Ord for IrredComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.powers
            .len()
            .cmp(&other.powers.len())
            .then_with(|| self.powers.keys().cmp(other.powers.keys()))
            .then_with(|| self.powers.values().cmp(other.powers.values()))
    }
}

impl PartialOrd for IrredComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IrredComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ideal().fmt(f)
    }
}

/// Symbolic power flavour.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymbolicMode {
    /// `I^(n)`: intersect over minimal primes.
    MinimalPrimes,
    /// `I^⟨n⟩`: intersect over all associated primes.
    AllAssociated,
}

/// The unique irredundant irreducible decomposition of a monomial ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    components: Vec<IrredComponent>,
}

impl Decomposition {
    pub fn components(&self) -> &[IrredComponent] {
        &self.components
    }

    /// Intersection of all components.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        let ring = self.components[0].ring();
        let mut acc = MonomialIdeal::unit(ring);
        for c in &self.components {
            acc = acc.intersect(&c.to_ideal())?;
        }
        Ok(acc)
    }
}

/// Irredundant decomposition of a proper nonzero monomial ideal into
/// pure-power components, sorted canonically.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    ideal.require_proper("irreducible decomposition")?;
    let ring = ideal.ring();
    let mut raw = Vec::new();
    split(ring, ideal.gens().to_vec(), &mut raw);

    raw.sort();
    raw.dedup();
    // a component containing another one is redundant
    let mut pruned: Vec<IrredComponent> = Vec::new();
    for (k, c) in raw.iter().enumerate() {
        let dominated =
            raw.iter().enumerate().any(|(j, d)| j != k && d.is_subset_of(c) && !(c.is_subset_of(d) && j > k));
        if !dominated {
            pruned.push(c.clone());
        }
    }
    let components = drop_redundant(ring, pruned)?;
    Ok(Decomposition { components })
}

// Splits the first generator with mixed support at its first variable:
// ⟨rest, x_i^a·w⟩ = ⟨rest, x_i^a⟩ ∩ ⟨rest, w⟩.
fn split(ring: &Ring, gens: Vec<Monomial>, out: &mut Vec<IrredComponent>) {
    let gens = minimalize_unchecked(ring, gens).gens().to_vec();
    let mixed = gens.iter().position(|g| g.support().len() >= 2);
    match mixed {
        None => {
            let powers = gens.iter().map(|g| {
                let i = g.support()[0];
                (i, g.exps()[i])
            });
            out.push(IrredComponent::new(ring, powers).expect("pure powers of distinct variables"));
        }
        Some(k) => {
            let u = &gens[k];
            let i = u.support()[0];
            let xi = Monomial::pure_power(ring.num_vars(), i, u.exps()[i]);
            let w = u.strip(&xi);
            let rest: Vec<Monomial> =
                gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g.clone()).collect();
            let mut left = rest.clone();
            left.push(xi);
            let mut right = rest;
            right.push(w);
            split(ring, left, out);
            split(ring, right, out);
        }
    }
}

// C is redundant iff the intersection of the others is contained in C.
fn drop_redundant(ring: &Ring, mut comps: Vec<IrredComponent>) -> Result<Vec<IrredComponent>> {
    let mut k = 0;
    while k < comps.len() {
        if comps.len() == 1 {
            break;
        }
        let mut others = MonomialIdeal::unit(ring);
        for (j, c) in comps.iter().enumerate() {
            if j != k {
                others = others.intersect(&c.to_ideal())?;
            }
        }
        if others.gens().iter().all(|g| comps[k].contains(g)) {
            comps.remove(k);
        } else {
            k += 1;
        }
    }
    Ok(comps)
}

/// `Ass(S/I)` as variable subsets, sorted by height then lexicographically.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let dec = irreducible_decomposition(ideal)?;
    let mut primes: Vec<MonomialPrime> = dec.components.iter().map(IrredComponent::radical).collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// Minimal elements of `Ass(S/I)` under inclusion.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    Ok(ass.iter().filter(|p| !ass.iter().any(|q| q != *p && q.is_subset_of(p))).cloned().collect())
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?.iter().map(MonomialPrime::height).min().unwrap())
}

/// `height(I) = μ(I)`.
pub fn is_complete_intersection(ideal: &MonomialIdeal) -> Result<bool> {
    let ci = height(ideal)? == ideal.num_gens();
    if ci {
        let g = ideal.gens();
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                debug_assert!(g[a].gcd(&g[b]).is_one(), "CI generators must be coprime");
            }
        }
    }
    Ok(ci)
}

/// The `P`-primary component of the canonical irredundant decomposition.
pub fn primary_component(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    ideal.ring().check_same(prime.ring())?;
    let dec = irreducible_decomposition(ideal)?;
    let mut acc: Option<MonomialIdeal> = None;
    for c in dec.components.iter().filter(|c| c.radical() == *prime) {
        let ci = c.to_ideal();
        acc = Some(match acc {
            None => ci,
            Some(a) => a.intersect(&ci)?,
        });
    }
    acc.ok_or_else(|| Error::domain(format!("{prime} is not associated to {ideal}")))
}

/// `(I : f^∞)`, iterating colons until they stabilize.
pub fn saturate(ideal: &MonomialIdeal, f: &Monomial) -> Result<MonomialIdeal> {
    let mut cur = ideal.colon_monomial(f)?;
    if f.is_one() {
        return Ok(cur);
    }
    loop {
        let next = cur.colon_monomial(f)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Symbolic power via localization-contraction. For a monomial prime `Q`,
/// `I^n S_Q ∩ S` is the saturation of `I^n` by the product of the variables
/// outside `Q`.
pub fn symbolic_power(ideal: &MonomialIdeal, n: u32, mode: SymbolicMode) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::domain("symbolic power exponent must be positive"));
    }
    let primes = match mode {
        SymbolicMode::MinimalPrimes => minimal_primes(ideal)?,
        SymbolicMode::AllAssociated => associated_primes(ideal)?,
    };
    let pw = ideal.power(n)?;
    let mut acc = MonomialIdeal::unit(ideal.ring());
    for q in &primes {
        acc = acc.intersect(&saturate(&pw, &q.complement_product())?)?;
    }
    Ok(acc)
}
