//! Monomials and monomial ideals over a fixed polynomial ring.
//!
//! Coefficients never appear: a monomial is its exponent vector and a monomial
//! ideal is its (unique) minimal generating set. Generators are kept in the
//! canonical order below, so two ideals are equal exactly when their
//! generator lists are.
//!
//! Canonical order: total degree ascending, then exponent vectors in
//! descending lexicographic order (`x^2 < x*y < y^2` in two variables).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exponent of a single variable.
pub type Exp = u32;

/// An ordered list of variable names; coordinate `i` of every monomial
/// refers to `vars()[i]`.
#[derive(Clone)]
pub struct Ring {
    vars: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::RingMismatch("a ring needs at least one variable".into()));
        }
        let mut seen = BTreeSet::new();
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::RingMismatch(format!("invalid variable name {name:?}")));
            }
            if !seen.insert(name) {
                return Err(Error::RingMismatch(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Ring { vars: names.iter().map(|s| s.as_ref().to_string()).collect() })
    }

    /// `prefix1, ..., prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Ring::new(&names).expect("indexed names are valid")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.num_vars())
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.num_vars(), i)
    }

    /// Renders `m` in the `x^2*y` grammar; the unit monomial renders as `1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.vars.iter().zip(m.exps()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub(crate) fn check(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.num_vars() {
            return Err(Error::RingMismatch(format!(
                "monomial has {} coordinates, ring has {} variables",
                m.num_vars(),
                self.num_vars()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(format!("[{}] vs [{}]", self.vars.join(" "), other.vars.join(" "))));
        }
        Ok(())
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &self.vars[..])
    }
}

/// A monomial `x^a`, stored as its exponent vector `a`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<Exp>,
}

impl Monomial {
    pub fn new(exps: Vec<Exp>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    /// `x_i^e`.
    pub fn pure_power(num_vars: usize, i: usize, e: Exp) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.min(b))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// Exact quotient; `None` unless `other | self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.strip(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("monomial product")))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, n: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::Overflow("monomial power")))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(Exp, Exp) -> Exp) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect() }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal, stored as its canonical antichain of minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(ring: &Ring, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: vec![ring.one()] }
    }

    /// Parses comma-separated `x^2*y` terms over `ring`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        crate::io::parse_generators(ring, text, 1, 1)
    }

    /// Builds an ideal from raw exponent rows.
    pub fn from_exponents(ring: &Ring, rows: &[Vec<Exp>]) -> Result<Self> {
        minimalize(ring, rows.iter().cloned().map(Monomial::new).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper(&self, what: &str) -> Result<()> {
        if self.is_zero() {
            return Err(Error::domain(format!("{what}: zero ideal")));
        }
        if self.is_unit() {
            return Err(Error::domain(format!("{what}: unit ideal")));
        }
        Ok(())
    }

    pub(crate) fn require_nonzero(&self, what: &str) -> Result<()> {
        if self.is_zero() {
            return Err(Error::domain(format!("{what}: zero ideal")));
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// `(I : v)`, generated by `u / gcd(u, v)` over `u ∈ G(I)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        self.ring.check(v)?;
        Ok(minimalize_unchecked(&self.ring, self.gens.iter().map(|u| u.strip(v)).collect()))
    }

    /// `(I : J) = ⋂_{g ∈ G(J)} (I : g)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut acc = MonomialIdeal::unit(&self.ring);
        for g in &other.gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// Generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                out.push(u.lcm(v));
            }
        }
        Ok(minimalize_unchecked(&self.ring, out))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(minimalize_unchecked(&self.ring, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                out.push(u.mul(v)?);
            }
        }
        Ok(minimalize_unchecked(&self.ring, out))
    }

    /// `I^n`. By convention `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(&self.ring);
        let mut base = self.clone();
        let mut k = n;
        // square-and-multiply; every intermediate is minimalized
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.product(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(acc)
    }

    /// `⟨u^n : u ∈ G(I)⟩`; has the same Newton polyhedron as `I^n`.
    pub fn generator_powers(&self, n: u32) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().map(|u| u.pow(n)).collect::<Result<Vec<_>>>()?;
        Ok(minimalize_unchecked(&self.ring, gens))
    }

    /// `α(I)`: least degree of a minimal generator.
    pub fn alpha(&self) -> Result<u64> {
        self.require_nonzero("alpha")?;
        Ok(self.gens.iter().map(Monomial::degree).min().unwrap())
    }

    /// `δ(I)`: largest degree of a minimal generator.
    pub fn delta(&self) -> Result<u64> {
        self.require_nonzero("delta")?;
        Ok(self.gens.iter().map(Monomial::degree).max().unwrap())
    }

    pub fn is_equigenerated(&self) -> bool {
        match self.gens.first() {
            None => true,
            Some(g) => self.gens.iter().all(|h| h.degree() == g.degree()),
        }
    }

    /// Variables occurring in some minimal generator.
    pub fn support_union(&self) -> BTreeSet<usize> {
        self.gens.iter().flat_map(|g| g.support()).collect()
    }

    /// Largest exponent of each variable over `G(I)`.
    pub fn max_exponents(&self) -> Vec<Exp> {
        let mut out = vec![0; self.ring.num_vars()];
        for g in &self.gens {
            for (m, &e) in out.iter_mut().zip(g.exps()) {
                *m = (*m).max(e);
            }
        }
        out
    }

    /// True when every minimal generator is a pure power of a variable.
    pub fn is_pure_power(&self) -> bool {
        self.gens.iter().all(|g| g.support().len() == 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub(crate) fn from_canonical(ring: &Ring, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format_monomial(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Canonical minimal generating set of the ideal generated by `gens`.
pub fn minimalize(ring: &Ring, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    for g in &gens {
        ring.check(g)?;
    }
    Ok(minimalize_unchecked(ring, gens))
}

pub(crate) fn minimalize_unchecked(ring: &Ring, mut gens: Vec<Monomial>) -> MonomialIdeal {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // sorted by degree, so any divisor of g precedes it
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    MonomialIdeal::from_canonical(ring, kept)
}
