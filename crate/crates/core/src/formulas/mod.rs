//! Closed-form v-numbers, bounds and witness constructions.
//!
//! Every formula reports an [`Applicability`] instead of silently computing
//! outside its hypotheses. Exact results are meant to be compared with the
//! brute-force oracle in [`crate::vnum`].

mod ci;
mod height2;
mod irreducible;
mod lemmas;
mod tables;

use serde::Serialize;

use crate::ring::Monomial;

pub use ci::{v_ci, v_ci_of, v_ci_power, v_primary_min, CIIdealSpec};
pub use height2::{
    gap_instance, icci_upper_monomial, icci_upper_witness, v_closure_h2_product, v_closure_h2_split, GapInstance,
    Height2Spec,
};
pub use irreducible::{
    f_m_witness, reg_gap_bounds, v_closure_3gen, v_closure_irred_bounds, v_closure_irred_two_block, v_principal_power,
    wog_ideal, wog_v_closure, IrreducibleSpec, ThreeGenCase, ThreeGenResult,
};
pub use lemmas::{b_mod_helper, ceil_step, CeilStep};
pub use tables::{
    alpha_limit_table, closure_formula, forces_strict_gap, vnum_gap_table, AlphaRow, GapRow, ValueSource,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Applicability {
    Exact,
    UpperBound,
    LowerBound,
    NotApplicable,
}

/// A formula value with its witness and a short citation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormulaResult {
    /// `None` exactly when not applicable.
    pub value: Option<u64>,
    pub witness: Option<Monomial>,
    pub applicability: Applicability,
    pub citation: &'static str,
    pub notes: Vec<String>,
}

impl FormulaResult {
    pub(crate) fn exact(value: u64, witness: Option<Monomial>, citation: &'static str) -> Self {
        FormulaResult { value: Some(value), witness, applicability: Applicability::Exact, citation, notes: Vec::new() }
    }

    pub(crate) fn bound(
        value: u64,
        witness: Option<Monomial>,
        applicability: Applicability,
        citation: &'static str,
    ) -> Self {
        FormulaResult { value: Some(value), witness, applicability, citation, notes: Vec::new() }
    }

    pub(crate) fn not_applicable(citation: &'static str, why: impl Into<String>) -> Self {
        FormulaResult {
            value: None,
            witness: None,
            applicability: Applicability::NotApplicable,
            citation,
            notes: vec![why.into()],
        }
    }

    pub(crate) fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn is_exact(&self) -> bool {
        self.applicability == Applicability::Exact
    }

    pub fn is_applicable(&self) -> bool {
        self.applicability != Applicability::NotApplicable
    }
}

/// Bounds on `reg(S/Īⁿ) − v(Īⁿ)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RegGapInterval {
    pub lower: i64,
    pub upper: i64,
    /// For equigenerated input, the common value `reg = v = nα − 1`.
    pub equigenerated_value: Option<u64>,
}

pub(crate) fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

pub(crate) fn mono(n: usize, entries: &[(usize, u64)]) -> crate::error::Result<Monomial> {
    let mut exps: Vec<crate::ring::Exp> = vec![0; n];
    for &(i, e) in entries {
        let e = crate::ring::Exp::try_from(e).map_err(|_| crate::error::Error::Overflow("formula witness"))?;
        exps[i] = exps[i].checked_add(e).ok_or(crate::error::Error::Overflow("formula witness"))?;
    }
    Ok(Monomial::new(exps))
}
