//! Closures of powers of irreducible (pure-power) ideals.

use serde::Serialize;

use super::{ceil_div, mono, Applicability, FormulaResult, RegGapInterval};
use crate::error::{Error, Result};
use crate::ring::{Exp, Monomial, MonomialIdeal, Ring};

const CITE_GEN: &str =
    "irreducible ideals: n*alpha + ceil(a2/alpha - a2/delta) - 1 <= v <= n*alpha + ceil(delta/alpha) - 2";
const CITE_TWO_BLOCK: &str = "irreducible ideals, two exponent values: v = n*alpha + ceil(delta/alpha) - 2";
const CITE_PRINCIPAL: &str = "principal ideals: closed powers, v = n*deg a - 1";
const CITE_THREE: &str = "three pure powers: v via the monomials f_m";
const CITE_WOG: &str = "complete bipartite weighted oriented graphs: v = n*alpha - 1";

/// `⟨x_{v_1}^{a_1}, …, x_{v_k}^{a_k}⟩` with `a_1 ≤ … ≤ a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleSpec {
    ring: Ring,
    exps: Vec<Exp>,
    vars: Vec<usize>,
}

impl IrreducibleSpec {
    /// Exponents on `x1, …, xk` of a fresh ring.
    pub fn new(exps: &[Exp]) -> Result<Self> {
        let ring = Ring::indexed("x", exps.len().max(1));
        Self::with_vars(&ring, exps, &(0..exps.len()).collect::<Vec<_>>())
    }

    pub fn with_vars(ring: &Ring, exps: &[Exp], vars: &[usize]) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::domain("need at least one exponent"));
        }
        if exps.len() != vars.len() {
            return Err(Error::domain("one variable per exponent"));
        }
        if exps.contains(&0) {
            return Err(Error::domain("exponents must be positive"));
        }
        if exps.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::domain("exponents must be sorted ascending"));
        }
        let mut seen = vars.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != vars.len() || seen.last().is_some_and(|&v| v >= ring.num_vars()) {
            return Err(Error::domain("variables must be distinct ring variables"));
        }
        Ok(IrreducibleSpec { ring: ring.clone(), exps: exps.to_vec(), vars: vars.to_vec() })
    }

    /// Reads a pure-power ideal, ordering its generators by exponent.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_proper("irreducible spec")?;
        if !ideal.is_pure_power() {
            return Err(Error::domain(format!("{ideal} is not generated by pure powers")));
        }
        let mut pairs: Vec<(Exp, usize)> = ideal
            .gens()
            .iter()
            .map(|g| {
                let i = g.support()[0];
                (g.exps()[i], i)
            })
            .collect();
        pairs.sort_unstable();
        let exps: Vec<Exp> = pairs.iter().map(|p| p.0).collect();
        let vars: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        Self::with_vars(ideal.ring(), &exps, &vars)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn k(&self) -> usize {
        self.exps.len()
    }

    pub fn alpha(&self) -> u64 {
        u64::from(self.exps[0])
    }

    pub fn delta(&self) -> u64 {
        u64::from(*self.exps.last().unwrap())
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        let gens = self.exps.iter().zip(&self.vars).map(|(&e, &v)| Monomial::pure_power(n, v, e)).collect();
        MonomialIdeal::new(&self.ring, gens).expect("arity matches ring")
    }

    fn distinct_values(&self) -> usize {
        let mut v = self.exps.clone();
        v.dedup();
        v.len()
    }

    // x_{v_1}^{nα−1} · x_{v_k}^{⌈δ/α⌉−1}
    fn upper_witness(&self, n: u32) -> Result<Monomial> {
        let (a, d) = (self.alpha(), self.delta());
        mono(
            self.ring.num_vars(),
            &[(self.vars[0], u64::from(n) * a - 1), (*self.vars.last().unwrap(), ceil_div(d, a) - 1)],
        )
    }
}

/// `v(\overline{(a)^n}) = n·deg a − 1` for a principal ideal `⟨x^{a_1}⟩`.
pub fn v_principal_power(a1: Exp, n: u32) -> Result<FormulaResult> {
    if a1 == 0 || n == 0 {
        return Err(Error::domain("exponent and power must be positive"));
    }
    let value = u64::from(n) * u64::from(a1) - 1;
    Ok(FormulaResult::exact(value, Some(mono(1, &[(0, value)])?), CITE_PRINCIPAL))
}

/// Lower and upper bounds on `v(Īⁿ)`; the upper one carries its witness.
pub fn v_closure_irred_bounds(spec: &IrreducibleSpec, n: u32) -> Result<(FormulaResult, FormulaResult)> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    if spec.k() < 2 {
        let why = format!("k = 1: principal case, v = n*a1 - 1 = {}", u64::from(n) * spec.alpha() - 1);
        return Ok((
            FormulaResult::not_applicable(CITE_GEN, why.clone()),
            FormulaResult::not_applicable(CITE_GEN, why),
        ));
    }
    let (a, d) = (spec.alpha(), spec.delta());
    let a2 = u64::from(spec.exps[1]);
    let na = u64::from(n) * a;
    // ⌈a2/α − a2/δ⌉ = ⌈a2(δ − α) / (αδ)⌉
    let lower = na + ceil_div(a2 * (d - a), a * d) - 1;
    let upper = na + ceil_div(d, a) - 2;
    debug_assert!(spec.k() != 2 || lower == upper);
    Ok((
        FormulaResult::bound(lower, None, Applicability::LowerBound, CITE_GEN),
        FormulaResult::bound(upper, Some(spec.upper_witness(n)?), Applicability::UpperBound, CITE_GEN),
    ))
}

/// Exact when the exponents take at most two distinct values and `k ≥ 2`.
pub fn v_closure_irred_two_block(spec: &IrreducibleSpec, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    if spec.k() < 2 {
        return Ok(FormulaResult::not_applicable(CITE_TWO_BLOCK, "needs k >= 2"));
    }
    if spec.distinct_values() > 2 {
        return Ok(FormulaResult::not_applicable(CITE_TWO_BLOCK, "more than two distinct exponents"));
    }
    let (a, d) = (spec.alpha(), spec.delta());
    let value = u64::from(n) * a + ceil_div(d, a) - 2;
    Ok(FormulaResult::exact(value, Some(spec.upper_witness(n)?), CITE_TWO_BLOCK))
}

/// Upper end of `reg(S/Īⁿ) − v(Īⁿ)`, with `dim S/I = num_vars − k`.
pub fn reg_gap_bounds(spec: &IrreducibleSpec, n: u32, num_vars: usize) -> Result<RegGapInterval> {
    if spec.k() < 2 {
        return Err(Error::domain("needs k >= 2"));
    }
    if num_vars < spec.k() {
        return Err(Error::domain("ring has fewer variables than generators"));
    }
    let (a, d) = (spec.alpha() as i64, spec.delta() as i64);
    let dim = (num_vars - spec.k()) as i64;
    let a2 = i64::from(spec.exps[1]);
    let upper = (d - a) * i64::from(n) + dim - if a2 == d { 0 } else { 1 };
    let equigenerated_value = (a == d).then(|| u64::from(n) * a as u64 - 1);
    Ok(RegGapInterval { lower: 0, upper, equigenerated_value })
}

fn check_three(a1: Exp, a2: Exp, a3: Exp) -> Result<()> {
    if a1 == 0 || a1 > a2 || a2 > a3 {
        return Err(Error::domain("need 1 <= a1 <= a2 <= a3"));
    }
    Ok(())
}

fn f_m_exps(a1: u64, a2: u64, a3: u64, m: u64) -> [u64; 3] {
    let c = ceil_div(m * a2, a1);
    // (a3/a2)(m·a2/a1 − c + 1) = a3(m·a2 − a1(c − 1)) / (a1·a2), numerator > 0
    let num = u128::from(a3) * u128::from(m * a2 - a1 * (c - 1));
    let den = u128::from(a1) * u128::from(a2);
    let e3 = num.div_ceil(den) as u64 - 1;
    [a1 - m, c - 1, e3]
}

/// `f_m` as a monomial in three variables.
pub fn f_m_witness(a1: Exp, a2: Exp, a3: Exp, m: Exp) -> Result<Monomial> {
    check_three(a1, a2, a3)?;
    if m == 0 || m > a1 {
        return Err(Error::domain(format!("m must lie in 1..={a1}")));
    }
    let e = f_m_exps(a1.into(), a2.into(), a3.into(), m.into());
    mono(3, &[(0, e[0]), (1, e[1]), (2, e[2])])
}

/// Which statement about three pure powers produced (or confirms) a value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThreeGenCase {
    /// `a1 = 1`: `n + a2 + ⌈a3/a2⌉ − 3`.
    UnitFirst,
    /// `(n−1)a1 + deg f_l` with `l` the least minimizer over `1..a1−1`.
    Argmin,
    /// `a2 ≡ 0` or `1 (mod a1)`, so `l = 1`.
    Residue,
    /// `⌈a2/a1⌉ − 1 = ⌈a2/a1 − a2/a3⌉`, value `n·a1 + ⌈a2/a1⌉ − 2`.
    CeilMatch,
    /// `⌈(a1−1)a3/(a1·a2)⌉ = 1`, so `l = 1`.
    SmallRatio,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeGenResult {
    pub result: FormulaResult,
    pub case: ThreeGenCase,
    /// The minimizing `m` when `a1 ≥ 2`.
    pub l: Option<Exp>,
    /// Special cases whose hypotheses hold.
    pub fired: Vec<ThreeGenCase>,
}

pub fn v_closure_3gen(a1: Exp, a2: Exp, a3: Exp, n: u32) -> Result<ThreeGenResult> {
    check_three(a1, a2, a3)?;
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    let (b1, b2, b3, nn) = (u64::from(a1), u64::from(a2), u64::from(a3), u64::from(n));
    if a1 == 1 {
        let q = ceil_div(b3, b2);
        let w = mono(3, &[(0, nn - 1), (1, b2 - 1), (2, q - 1)])?;
        return Ok(ThreeGenResult {
            result: FormulaResult::exact(nn + b2 + q - 3, Some(w), CITE_THREE),
            case: ThreeGenCase::UnitFirst,
            l: None,
            fired: Vec::new(),
        });
    }
    let deg = |m: u64| -> u64 { f_m_exps(b1, b2, b3, m).iter().sum() };
    let l = (1..b1).min_by_key(|&m| (deg(m), m)).unwrap();
    let value = (nn - 1) * b1 + deg(l);
    let fl = f_m_exps(b1, b2, b3, l);
    let w = mono(3, &[(0, (nn - 1) * b1 + fl[0]), (1, fl[1]), (2, fl[2])])?;

    let mut fired = Vec::new();
    if b2 % b1 <= 1 {
        fired.push(ThreeGenCase::Residue);
    }
    // ⌈a2/a1 − a2/a3⌉ = ⌈a2(a3 − a1)/(a1·a3)⌉
    if ceil_div(b2, b1) - 1 == ceil_div(b2 * (b3 - b1), b1 * b3) {
        fired.push(ThreeGenCase::CeilMatch);
    }
    if ceil_div((b1 - 1) * b3, b1 * b2) == 1 {
        fired.push(ThreeGenCase::SmallRatio);
    }
    let mut result = FormulaResult::exact(value, Some(w), CITE_THREE).note(format!("l = {l}"));
    for c in &fired {
        result = result.note(format!("special case {c:?} applies"));
    }
    Ok(ThreeGenResult { result, case: ThreeGenCase::Argmin, l: Some(l as Exp), fired })
}

fn wog_ring(p1: usize, p2: usize) -> Result<Ring> {
    let names: Vec<String> = (1..=p1).map(|i| format!("x{i}")).chain((1..=p2).map(|j| format!("y{j}"))).collect();
    Ring::new(&names)
}

/// `I(D) = ⟨x_i · y_j^{β_j}⟩` over `x1..x{p1}, y1..y{p2}`.
pub fn wog_ideal(p1: usize, weights: &[Exp]) -> Result<MonomialIdeal> {
    let p2 = weights.len();
    if p1 == 0 || p2 == 0 || weights.contains(&0) {
        return Err(Error::domain("need p1, p2 >= 1 and positive weights"));
    }
    let ring = wog_ring(p1, p2)?;
    let n = ring.num_vars();
    let mut gens = Vec::new();
    for i in 0..p1 {
        for (j, &b) in weights.iter().enumerate() {
            gens.push(mono(n, &[(i, 1), (p1 + j, u64::from(b))])?);
        }
    }
    MonomialIdeal::new(&ring, gens)
}

/// `n·(1 + min β) − 1`, witness `x1^{n−1} · y_{j*}^{n·β_{j*}}` for the first
/// lightest `y_{j*}`.
pub fn wog_v_closure(p1: usize, weights: &[Exp], n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    let ideal = wog_ideal(p1, weights)?;
    let (j, &b) = weights.iter().enumerate().min_by_key(|&(j, &b)| (b, j)).unwrap();
    let nn = u64::from(n);
    let alpha = 1 + u64::from(b);
    let w = mono(ideal.ring().num_vars(), &[(0, nn - 1), (p1 + j, nn * u64::from(b))])?;
    Ok(FormulaResult::exact(nn * alpha - 1, Some(w), CITE_WOG))
}
