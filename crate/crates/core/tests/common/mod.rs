//! A deliberately naive oracle working on raw exponent vectors.
//!
//! Nothing here calls into the library's colon, closure or search code:
//! ideals are lists of exponent rows, membership is divisibility, and
//! witnesses are found by scanning a full box in degree order.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Row = Vec<u32>;

/// Membership of a point in an ideal, given as a predicate.
pub trait Member {
    fn contains(&self, f: &[u32]) -> bool;
    fn num_vars(&self) -> usize;
    /// Per-variable exponent past which membership no longer changes.
    fn saturation(&self) -> Row;
}

/// The ideal generated by a list of monomials.
pub struct Gens(pub Vec<Row>);

impl Member for Gens {
    fn contains(&self, f: &[u32]) -> bool {
        self.0.iter().any(|g| g.iter().zip(f).all(|(a, b)| a <= b))
    }

    fn num_vars(&self) -> usize {
        self.0[0].len()
    }

    fn saturation(&self) -> Row {
        (0..self.num_vars()).map(|i| self.0.iter().map(|g| g[i]).max().unwrap()).collect()
    }
}

/// `\overline{I^n}` for `I` generated by monomials with pairwise disjoint
/// supports: the point lies in the closure iff
/// `Σ_i min_{j ∈ supp u_i} f_j / u_ij ≥ n`.
pub struct CiClosure {
    pub gens: Vec<Row>,
    pub n: u32,
}

impl Member for CiClosure {
    fn contains(&self, f: &[u32]) -> bool {
        let l: u128 = self.gens.iter().flatten().filter(|&&e| e > 0).fold(1, |acc, &e| lcm(acc, u128::from(e)));
        let mut total: u128 = 0;
        for u in &self.gens {
            let part = u
                .iter()
                .zip(f)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, &x)| u128::from(x) * (l / u128::from(e)))
                .min()
                .unwrap();
            total += part;
        }
        total >= u128::from(self.n) * l
    }

    fn num_vars(&self) -> usize {
        self.gens[0].len()
    }

    fn saturation(&self) -> Row {
        (0..self.num_vars()).map(|i| self.n * self.gens.iter().map(|g| g[i]).max().unwrap()).collect()
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

/// All products of `n` generators, with repetition.
pub fn power_rows(gens: &[Row], n: u32) -> Vec<Row> {
    let mut out = vec![vec![0; gens[0].len()]];
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for a in &out {
            for g in gens {
                next.insert(a.iter().zip(g).map(|(x, y)| x + y).collect::<Row>());
            }
        }
        out = next.into_iter().collect();
    }
    out
}

/// The variable set `P` with `(J : f) = P`, if that colon is prime.
pub fn colon_prime(j: &dyn Member, f: &[u32], sat: &[u32]) -> Option<BTreeSet<usize>> {
    if j.contains(f) {
        return None;
    }
    let mut g = f.to_vec();
    let mut p = BTreeSet::new();
    for i in 0..f.len() {
        g[i] += 1;
        if j.contains(&g) {
            p.insert(i);
        }
        g[i] -= 1;
    }
    if p.is_empty() {
        return None;
    }
    // the largest monomial avoiding P must stay outside (J : f)
    for i in 0..f.len() {
        if !p.contains(&i) {
            g[i] = g[i].max(sat[i]);
        }
    }
    (!j.contains(&g)).then_some(p)
}

/// Every box point, in increasing degree.
pub fn box_points(sat: &[u32]) -> Vec<Row> {
    let mut pts: Vec<Row> = vec![vec![]];
    for &m in sat {
        pts = pts.into_iter().flat_map(|p| (0..=m).map(move |e| [p.clone(), vec![e]].concat())).collect();
    }
    pts.sort_by_key(|p| p.iter().map(|&e| u64::from(e)).sum::<u64>());
    pts
}

pub struct NaiveV {
    /// Least witness degree per associated prime.
    pub locals: BTreeMap<BTreeSet<usize>, u64>,
    /// Every witness inside the box.
    pub witnesses: Vec<(Row, BTreeSet<usize>)>,
}

impl NaiveV {
    pub fn v(&self) -> u64 {
        *self.locals.values().min().unwrap()
    }
}

/// Scans the whole saturation box. Witnesses are only collected up to
/// degree `keep_upto` to bound memory.
pub fn naive_v(j: &dyn Member, keep_upto: u64) -> NaiveV {
    let sat = j.saturation();
    let mut locals = BTreeMap::new();
    let mut witnesses = Vec::new();
    for f in box_points(&sat) {
        if let Some(p) = colon_prime(j, &f, &sat) {
            let d: u64 = f.iter().map(|&e| u64::from(e)).sum();
            locals.entry(p.clone()).or_insert(d);
            if d <= keep_upto {
                witnesses.push((f, p));
            }
        }
    }
    NaiveV { locals, witnesses }
}

pub fn degree(f: &[u32]) -> u64 {
    f.iter().map(|&e| u64::from(e)).sum()
}

/// Exponent rows of a library ideal.
pub fn rows(ideal: &monideal::MonomialIdeal) -> Vec<Row> {
    ideal.gens().iter().map(|g| g.exps().to_vec()).collect()
}

/// The same prime as a variable set.
pub fn var_set(p: &monideal::MonomialPrime) -> BTreeSet<usize> {
    p.vars().clone()
}

/// Minimal degree of the closure `\overline{I^n}` for disjoint-support `I`,
/// scanned directly over degrees.
pub fn ci_closure_alpha(gens: &[Row], n: u32) -> u64 {
    let c = CiClosure { gens: gens.to_vec(), n };
    box_points(&c.saturation()).into_iter().find(|f| c.contains(f)).map(|f| degree(&f)).unwrap()
}

pub mod strategies {
    use monideal::instances::random_ci_ideal;
    use monideal::{Monomial, MonomialIdeal, Ring};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// A proper nonzero ideal on `x1..xk`, `k ≤ max_vars`.
    pub fn ideal(max_vars: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
        (1..=max_vars).prop_flat_map(move |k| {
            let row =
                proptest::collection::vec(0..=max_exp, k).prop_filter("nonconstant", |r| r.iter().any(|&e| e > 0));
            proptest::collection::vec(row, 1..=max_gens).prop_map(move |gens| {
                MonomialIdeal::new(&Ring::indexed("x", k), gens.into_iter().map(Monomial::new).collect()).unwrap()
            })
        })
    }

    /// Two proper nonzero ideals on a common ring.
    pub fn ideal_pair(
        max_vars: usize,
        max_gens: usize,
        max_exp: u32,
    ) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
        (1..=max_vars).prop_flat_map(move |k| {
            let row =
                proptest::collection::vec(0..=max_exp, k).prop_filter("nonconstant", |r| r.iter().any(|&e| e > 0));
            let gens = proptest::collection::vec(row, 1..=max_gens);
            (gens.clone(), gens).prop_map(move |(a, b)| {
                let ring = Ring::indexed("x", k);
                let mk =
                    |g: Vec<Vec<u32>>| MonomialIdeal::new(&ring, g.into_iter().map(Monomial::new).collect()).unwrap();
                (mk(a), mk(b))
            })
        })
    }

    /// A monomial on `k` variables.
    pub fn monomial(k: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0..=max_exp, k).prop_map(Monomial::new)
    }

    /// A complete intersection drawn through a seeded generator.
    pub fn ci(max_gens: usize, max_vars: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
        any::<u64>()
            .prop_map(move |seed| random_ci_ideal(&mut ChaCha8Rng::seed_from_u64(seed), max_gens, max_vars, max_exp))
    }
}
