//! Height-two complete intersections and the general CI witness.

use super::{ceil_div, mono, FormulaResult};
use crate::closure::closure_power;
use crate::decompose::{irreducible_decomposition, is_complete_intersection, IrredComponent};
use crate::error::{Error, Result};
use crate::ring::{Exp, Monomial, MonomialIdeal, Ring};
use crate::vnum::Witness;

const CITE_PRODUCT: &str = "height two, u1 = (x1..xq)^alpha: v = n*q*alpha + sum ceil(beta_j/alpha) - 2";
const CITE_SPLIT: &str = "height two, u1 = x^alpha, deg u2 = alpha: v >= n*alpha, equality if some 2*beta_j >= alpha";
const CITE_GAP_REG: &str = "reg(S/closure(I^n)) = n*alpha + a - 1 for this family (cited, not computed)";

/// The monomial `f` with `(\overline{I^n} : f) = √Q` built from a complete
/// intersection `I` and one of its irreducible components `Q`.
///
/// `u_1` is the first canonical generator, so `deg u_1 = α(I)`, and `x_{i_1}`
/// is the variable of `Q` dividing `u_i`.
pub fn icci_upper_monomial(ideal: &MonomialIdeal, component: &IrredComponent, n: u32) -> Result<Monomial> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    if !is_complete_intersection(ideal)? {
        return Err(Error::domain(format!("{ideal} is not a complete intersection")));
    }
    if !irreducible_decomposition(ideal)?.components().contains(component) {
        return Err(Error::domain(format!("{} is not a component of {ideal}", component.to_ideal())));
    }
    let gens = ideal.gens();
    let lead: Vec<usize> = gens
        .iter()
        .map(|u| u.support().into_iter().find(|&i| component.powers().contains_key(&i)).expect("component meets u_i"))
        .collect();
    let a = |i: usize| u64::from(gens[i].exps()[lead[i]]);
    let a11 = a(0);
    let l = (0..gens.len()).fold(0, |best, i| if a(i) > a(best) { i } else { best });
    let nn = u64::from(n);

    let mut entries = vec![(lead[0], nn * a11 - 1), (lead[l], ceil_div(a(l), a11) - 1)];
    for j in gens[0].support() {
        if j != lead[0] {
            entries.push((j, nn * u64::from(gens[0].exps()[j])));
        }
    }
    for (i, u) in gens.iter().enumerate().skip(1) {
        let supp = u.support();
        if supp.len() >= 2 {
            for j in supp {
                if j != lead[i] {
                    entries.push((j, ceil_div(u64::from(u.exps()[j]), a11)));
                }
            }
        }
    }
    mono(ideal.ring().num_vars(), &entries)
}

/// [`icci_upper_monomial`], checked against `\overline{I^n}`.
pub fn icci_upper_witness(ideal: &MonomialIdeal, component: &IrredComponent, n: u32) -> Result<Witness> {
    let f = icci_upper_monomial(ideal, component, n)?;
    Witness::new(&closure_power(ideal, n)?, f, component.radical())
}

/// `I = ⟨(x_1⋯x_q)^α, y_1^{β_1}⋯y_l^{β_l}⟩` with all variables distinct.
///
/// Any positive data is accepted here; each formula checks its own
/// hypotheses and reports not-applicable otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Height2Spec {
    ring: Ring,
    alpha: Exp,
    xs: Vec<usize>,
    betas: Vec<Exp>,
    ys: Vec<usize>,
}

impl Height2Spec {
    /// Over a fresh ring `x1..xq, y1..yl`.
    pub fn new(q: usize, alpha: Exp, betas: &[Exp]) -> Result<Self> {
        let names: Vec<String> =
            (1..=q).map(|i| format!("x{i}")).chain((1..=betas.len()).map(|j| format!("y{j}"))).collect();
        let ring = Ring::new(&names)?;
        Self::with_vars(&ring, alpha, &(0..q).collect::<Vec<_>>(), betas, &(q..q + betas.len()).collect::<Vec<_>>())
    }

    pub fn with_vars(ring: &Ring, alpha: Exp, xs: &[usize], betas: &[Exp], ys: &[usize]) -> Result<Self> {
        if xs.is_empty() || ys.is_empty() || alpha == 0 || betas.contains(&0) {
            return Err(Error::domain("need q, l >= 1 and positive exponents"));
        }
        if betas.len() != ys.len() {
            return Err(Error::domain("one variable per beta"));
        }
        let mut all: Vec<usize> = xs.iter().chain(ys).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != xs.len() + ys.len() || all.last().is_some_and(|&v| v >= ring.num_vars()) {
            return Err(Error::domain("variables must be distinct ring variables"));
        }
        Ok(Height2Spec { ring: ring.clone(), alpha, xs: xs.to_vec(), betas: betas.to_vec(), ys: ys.to_vec() })
    }

    /// Recognizes a two-generator ideal of either shape. The product shape
    /// is preferred when both readings apply.
    pub fn detect(ideal: &MonomialIdeal) -> Option<Self> {
        if ideal.num_gens() != 2 {
            return None;
        }
        let g = ideal.gens();
        let mut candidates = Vec::new();
        for (u, w) in [(&g[0], &g[1]), (&g[1], &g[0])] {
            let su = u.support();
            if !u.gcd(w).is_one() || su.iter().any(|&i| u.exps()[i] != u.exps()[su[0]]) {
                continue;
            }
            let mut pairs: Vec<(Exp, usize)> = w.support().into_iter().map(|j| (w.exps()[j], j)).collect();
            pairs.sort_unstable();
            let betas: Vec<Exp> = pairs.iter().map(|p| p.0).collect();
            let ys: Vec<usize> = pairs.iter().map(|p| p.1).collect();
            if let Ok(s) = Self::with_vars(ideal.ring(), u.exps()[su[0]], &su, &betas, &ys) {
                candidates.push(s);
            }
        }
        let product = candidates.iter().position(Height2Spec::is_product_shape);
        let split = candidates.iter().position(Height2Spec::is_split_shape);
        product.or(split).map(|i| candidates.swap_remove(i))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn q(&self) -> usize {
        self.xs.len()
    }

    pub fn l(&self) -> usize {
        self.ys.len()
    }

    pub fn alpha(&self) -> Exp {
        self.alpha
    }

    pub fn betas(&self) -> &[Exp] {
        &self.betas
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        let mut u1 = vec![0; n];
        for &x in &self.xs {
            u1[x] = self.alpha;
        }
        let mut u2 = vec![0; n];
        for (&y, &b) in self.ys.iter().zip(&self.betas) {
            u2[y] = b;
        }
        MonomialIdeal::new(&self.ring, vec![Monomial::new(u1), Monomial::new(u2)]).expect("arity matches ring")
    }

    /// `1 ≤ α ≤ β_1 ≤ … ≤ β_l` and `q ≤ l`.
    pub fn is_product_shape(&self) -> bool {
        self.betas.windows(2).all(|w| w[0] <= w[1]) && self.alpha <= self.betas[0] && self.q() <= self.l()
    }

    /// `q = 1`, `l ≥ 2` and `Σ β_j = α`.
    pub fn is_split_shape(&self) -> bool {
        self.q() == 1 && self.l() >= 2 && self.betas.iter().map(|&b| u64::from(b)).sum::<u64>() == u64::from(self.alpha)
    }
}

/// `v(\overline{I^n}) = nqα + Σ⌈β_j/α⌉ − 2` at every associated prime.
pub fn v_closure_h2_product(spec: &Height2Spec, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    if !spec.is_product_shape() {
        return Ok(FormulaResult::not_applicable(CITE_PRODUCT, "needs alpha <= beta_1 <= ... <= beta_l and q <= l"));
    }
    let a = u64::from(spec.alpha);
    let value =
        u64::from(n) * spec.q() as u64 * a + spec.betas.iter().map(|&b| ceil_div(u64::from(b), a)).sum::<u64>() - 2;
    let comp = IrredComponent::new(&spec.ring, [(spec.xs[0], spec.alpha), (spec.ys[0], spec.betas[0])])?;
    let w = icci_upper_monomial(&spec.ideal(), &comp, n)?;
    debug_assert_eq!(w.degree(), value);
    let mut r = FormulaResult::exact(value, Some(w), CITE_PRODUCT);
    if spec.alpha == 1 {
        r = r.note("alpha = 1: v(I^n) equals v of its closure");
    }
    Ok(r)
}

/// Lower bound `nα`, exact with witness `x·y_j^{nβ_j−1}·Π_{i≠j} y_i^{nβ_i}`
/// for the first `j` with `2β_j ≥ α`.
pub fn v_closure_h2_split(spec: &Height2Spec, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    if !spec.is_split_shape() {
        return Ok(FormulaResult::not_applicable(CITE_SPLIT, "needs q = 1, l >= 2 and sum beta_j = alpha"));
    }
    let nn = u64::from(n);
    let a = u64::from(spec.alpha);
    let Some(j) = spec.betas.iter().position(|&b| 2 * u64::from(b) >= a) else {
        return Ok(FormulaResult::bound(nn * a, None, super::Applicability::LowerBound, CITE_SPLIT));
    };
    let mut entries = vec![(spec.xs[0], 1)];
    for (i, (&y, &b)) in spec.ys.iter().zip(&spec.betas).enumerate() {
        let e = nn * u64::from(b);
        entries.push((y, if i == j { e - 1 } else { e }));
    }
    let w = mono(spec.ring.num_vars(), &entries)?;
    Ok(FormulaResult::exact(nn * a, Some(w), CITE_SPLIT))
}

/// `⟨x_1^α, x_{a+2}^{α−a}·x_2⋯x_{a+1}⟩` with `α = 2a + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapInstance {
    pub a: u32,
    pub spec: Height2Spec,
}

impl GapInstance {
    pub fn ideal(&self) -> MonomialIdeal {
        self.spec.ideal()
    }

    pub fn alpha(&self) -> u64 {
        u64::from(self.spec.alpha)
    }

    /// `v(\overline{I^n}) = nα`, with its witness.
    pub fn predicted_v(&self, n: u32) -> Result<FormulaResult> {
        v_closure_h2_split(&self.spec, n)
    }

    /// The cited regularity `nα + a − 1`.
    pub fn predicted_reg(&self, n: u32) -> FormulaResult {
        let value = u64::from(n) * self.alpha() + u64::from(self.a) - 1;
        FormulaResult::exact(value, None, CITE_GAP_REG).note("prediction only; regularity is not computed")
    }

    pub fn predicted_gap(&self) -> u32 {
        self.a - 1
    }
}

pub fn gap_instance(a: u32) -> Result<GapInstance> {
    if a == 0 {
        return Err(Error::domain("a must be positive"));
    }
    let a_us = a as usize;
    let alpha = Exp::try_from(2 * u64::from(a) + 1).map_err(|_| Error::Overflow("gap instance"))?;
    let ring = Ring::indexed("x", a_us + 2);
    let mut betas = vec![1; a_us];
    betas.push(a + 1);
    let ys: Vec<usize> = (1..=a_us + 1).collect();
    let spec = Height2Spec::with_vars(&ring, alpha, &[0], &betas, &ys)?;
    Ok(GapInstance { a, spec })
}
