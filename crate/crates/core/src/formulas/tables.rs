//! Formula dispatch by ideal shape, and small tables built from it.

use num_rational::Ratio;
use serde::Serialize;

use super::ci::{v_ci_power, CIIdealSpec};
use super::height2::{icci_upper_monomial, v_closure_h2_product, v_closure_h2_split, Height2Spec};
use super::irreducible::{v_closure_3gen, v_closure_irred_bounds, v_closure_irred_two_block, IrreducibleSpec};
use super::{Applicability, FormulaResult};
use crate::budget::Budget;
use crate::closure::{closure_power, closure_power_within};
use crate::decompose::{irreducible_decomposition, is_complete_intersection};
use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialIdeal};
use crate::vnum::v_number_min;

const CITE_PRINCIPAL: &str = "principal ideals: closed powers, v = n*deg a - 1";
const CITE_ICCI: &str = "complete intersection: the explicit closure witness bounds v from above";
const CITE_NONE: &str = "no closed form for this shape";

/// The best closed form for `v(\overline{I^n})` that applies to the shape of
/// `I`: principal, pure powers, the two height-two families, and finally the
/// generic complete-intersection upper bound.
pub fn closure_formula(ideal: &MonomialIdeal, n: u32) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::domain("power must be positive"));
    }
    ideal.require_proper("closure formula")?;
    let nv = ideal.ring().num_vars();
    if ideal.num_gens() == 1 {
        let u = &ideal.gens()[0];
        let value = u64::from(n) * u.degree() - 1;
        let mut exps = u.pow(n)?.exps().to_vec();
        exps[u.support()[0]] -= 1;
        return Ok(FormulaResult::exact(value, Some(Monomial::new(exps)), CITE_PRINCIPAL));
    }
    if ideal.is_pure_power() {
        let spec = IrreducibleSpec::from_ideal(ideal)?;
        let two = v_closure_irred_two_block(&spec, n)?;
        if two.is_applicable() {
            return Ok(two);
        }
        if spec.k() == 3 {
            let e = spec.exps();
            let mut r = v_closure_3gen(e[0], e[1], e[2], n)?.result;
            r.witness = r.witness.map(|w| {
                let mut exps = vec![0; nv];
                for (slot, &v) in spec.vars().iter().enumerate() {
                    exps[v] = w.exps()[slot];
                }
                Monomial::new(exps)
            });
            return Ok(r);
        }
        return Ok(v_closure_irred_bounds(&spec, n)?.1);
    }
    if let Some(spec) = Height2Spec::detect(ideal) {
        let r = if spec.is_product_shape() { v_closure_h2_product(&spec, n)? } else { v_closure_h2_split(&spec, n)? };
        if r.is_applicable() {
            return Ok(r);
        }
    }
    if is_complete_intersection(ideal)? {
        let comp = irreducible_decomposition(ideal)?.components()[0].clone();
        let f = icci_upper_monomial(ideal, &comp, n)?;
        return Ok(FormulaResult::bound(f.degree(), Some(f), Applicability::UpperBound, CITE_ICCI));
    }
    Ok(FormulaResult::not_applicable(CITE_NONE, "not a complete intersection"))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueSource {
    Formula,
    Oracle,
    /// The oracle ran out of budget.
    Skipped,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GapRow {
    pub n: u32,
    pub v_power: u64,
    pub v_closure: Option<u64>,
    pub closure_source: ValueSource,
    /// `v(Iⁿ) − v(\overline{I^n})`.
    pub gap: Option<u64>,
}

/// Whether a minimal-degree generator and some other generator are both
/// not squarefree, which forces a gap of at least one.
pub fn forces_strict_gap(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.gens();
    let alpha = ideal.alpha().unwrap_or(0);
    gens.iter().enumerate().any(|(i, u)| {
        u.degree() == alpha && !u.is_squarefree() && gens.iter().enumerate().any(|(j, w)| j != i && !w.is_squarefree())
    })
}

/// `v(Iⁿ)` and `v(\overline{I^n})` for `n = 1..=n_max`. `v(Iⁿ)` is always the
/// closed form; the closure column uses an exact closed form when one
/// applies and the oracle otherwise. Rows violating `v(Ī) ≤ v(I)`, or the
/// strict version when [`forces_strict_gap`] holds, are errors.
pub fn vnum_gap_table(spec: &CIIdealSpec, n_max: u32, budget: &Budget) -> Result<Vec<GapRow>> {
    let ideal = spec.ideal();
    let strict = forces_strict_gap(ideal);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let v_power = v_ci_power(spec, n)?.value.expect("exact");
        let formula = closure_formula(ideal, n)?;
        let (v_closure, closure_source) = if formula.is_exact() {
            (formula.value, ValueSource::Formula)
        } else {
            match closure_power_within(ideal, n, budget).and_then(|c| v_number_min(&c, budget)) {
                Ok((v, _)) => (Some(v), ValueSource::Oracle),
                Err(Error::BudgetExceeded(_)) => (None, ValueSource::Skipped),
                Err(e) => return Err(e),
            }
        };
        if let Some(vc) = v_closure {
            if vc > v_power || (strict && vc == v_power) {
                return Err(Error::Violation(format!(
                    "{ideal}, n = {n}: v(closure) = {vc}, v(power) = {v_power}, strict = {strict}"
                )));
            }
        }
        rows.push(GapRow { n, v_power, v_closure, closure_source, gap: v_closure.map(|vc| v_power - vc) });
    }
    Ok(rows)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaRow {
    pub n: u32,
    /// `α(\overline{I^n})`.
    pub alpha: u64,
    pub ratio: Ratio<u64>,
}

/// `α(\overline{I^n})` and `α(\overline{I^n})/n` for `n = 1..=n_max`, checking
/// `α(\overline{I^n}) ≤ nα(I)` and subadditivity across the table.
pub fn alpha_limit_table(ideal: &MonomialIdeal, n_max: u32) -> Result<Vec<AlphaRow>> {
    if n_max == 0 {
        return Err(Error::domain("n_max must be positive"));
    }
    ideal.require_proper("alpha table")?;
    let base = ideal.alpha()?;
    let mut rows: Vec<AlphaRow> = Vec::new();
    for n in 1..=n_max {
        let alpha = closure_power(ideal, n)?.alpha()?;
        if alpha > u64::from(n) * base {
            return Err(Error::Violation(format!("alpha(closure of I^{n}) = {alpha} > {}", u64::from(n) * base)));
        }
        for i in 1..n {
            let (a, b) = (rows[i as usize - 1].alpha, rows[(n - i) as usize - 1].alpha);
            if alpha > a + b {
                return Err(Error::Violation(format!("alpha not subadditive at {i} + {}", n - i)));
            }
        }
        rows.push(AlphaRow { n, alpha, ratio: Ratio::new(alpha, u64::from(n)) });
    }
    Ok(rows)
}
