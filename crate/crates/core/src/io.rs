//! Ideal files.
//!
//! Text form:
//!
//! ```text
//! # comments run to end of line
//! ring x y z
//! ideal I = x^2*y, z^3
//! ideal J = x, y
//! power 2
//! closure
//! ```
//!
//! JSON form: `{"vars": ["x","y"], "ideals": {"I": [[2,0],[0,3]]}, "power": 2, "closure": true}`.
//! Both serializers emit a canonical layout, so `parse(render(d)) == d` and
//! rendering is idempotent byte for byte.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{minimalize, Exp, Monomial, MonomialIdeal, Ring};

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parses `x^2*y, z^3` over `ring`. `line`/`col` locate the first byte of
/// `text` in the surrounding document for error reporting.
pub fn parse_generators(ring: &Ring, text: &str, line: usize, col: usize) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let start = col + offset;
        offset += piece.chars().count() + 1;
        let lead = piece.chars().take_while(|c| c.is_whitespace()).count();
        let term = piece.trim();
        if term.is_empty() {
            return Err(perr(line, start + lead, "empty generator"));
        }
        gens.push(parse_term(ring, term, line, start + lead)?);
    }
    minimalize(ring, gens)
}

fn parse_term(ring: &Ring, term: &str, line: usize, col: usize) -> Result<Monomial> {
    let n = ring.num_vars();
    if term == "1" {
        return Ok(Monomial::one(n));
    }
    let mut exps = vec![0 as Exp; n];
    let mut offset = 0;
    for factor in term.split('*') {
        let lead = factor.chars().take_while(|c| c.is_whitespace()).count();
        let fcol = col + offset + lead;
        offset += factor.chars().count() + 1;
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            None => (factor, 1),
            Some((name, e)) => {
                let name = name.trim_end();
                let e = e.trim_start();
                let ecol = fcol + factor.find('^').unwrap() + 1;
                if e.starts_with('-') {
                    return Err(perr(line, ecol, format!("negative exponent `{e}`")));
                }
                let e: Exp = e.parse().map_err(|_| perr(line, ecol, format!("bad exponent `{e}`")))?;
                (name, e)
            }
        };
        if name.is_empty() {
            return Err(perr(line, fcol, "missing variable"));
        }
        let i = ring.var_index(name).ok_or_else(|| perr(line, fcol, format!("unknown variable `{name}`")))?;
        exps[i] = exps[i].checked_add(exp).ok_or_else(|| perr(line, fcol, "exponent overflow"))?;
    }
    Ok(Monomial::new(exps))
}

/// A ring, some named ideals and optional directives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealDocument {
    pub ring: Ring,
    pub ideals: Vec<(String, MonomialIdeal)>,
    pub power: Option<u32>,
    pub closure: bool,
}

impl IdealDocument {
    pub fn new(ring: Ring) -> Self {
        IdealDocument { ring, ideals: Vec::new(), power: None, closure: false }
    }

    pub fn with_ideal(mut self, name: &str, ideal: MonomialIdeal) -> Self {
        self.ideals.push((name.to_string(), ideal));
        self
    }

    pub fn get(&self, name: &str) -> Option<&MonomialIdeal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    /// The first ideal in file order.
    pub fn first(&self) -> Option<&MonomialIdeal> {
        self.ideals.first().map(|(_, i)| i)
    }

    /// Dispatches on the first non-blank character: `{` means JSON.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut ring: Option<Ring> = None;
        let mut doc: Option<IdealDocument> = None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap();
            let lead = body.chars().take_while(|c| c.is_whitespace()).count();
            let trimmed = body.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = lead + 1;
            let (kw, rest) = match trimmed.split_once(char::is_whitespace) {
                Some((kw, rest)) => (kw, rest),
                None => (trimmed, ""),
            };
            let rest_col = col + kw.chars().count() + 1 + rest.chars().take_while(|c| c.is_whitespace()).count();
            let rest = rest.trim();
            match kw {
                "ring" => {
                    if ring.is_some() {
                        return Err(perr(line, col, "ring declared twice"));
                    }
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    let r = Ring::new(&names).map_err(|e| perr(line, rest_col, e.to_string()))?;
                    doc = Some(IdealDocument::new(r.clone()));
                    ring = Some(r);
                }
                "ideal" => {
                    let (r, d) = match (&ring, &mut doc) {
                        (Some(r), Some(d)) => (r, d),
                        _ => return Err(perr(line, col, "`ideal` before `ring`")),
                    };
                    let (name, gens) =
                        rest.split_once('=').ok_or_else(|| perr(line, rest_col, "expected `NAME = generators`"))?;
                    let name = name.trim();
                    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        return Err(perr(line, rest_col, format!("bad ideal name `{name}`")));
                    }
                    if d.get(name).is_some() {
                        return Err(perr(line, rest_col, format!("ideal `{name}` defined twice")));
                    }
                    let gcol =
                        rest_col + rest.find('=').unwrap() + 1 + gens.chars().take_while(|c| c.is_whitespace()).count();
                    let ideal = parse_generators(r, gens.trim_start(), line, gcol)?;
                    if ideal.is_unit() {
                        return Err(perr(line, gcol, format!("ideal `{name}` is the unit ideal")));
                    }
                    d.ideals.push((name.to_string(), ideal));
                }
                "power" => {
                    let d = doc.as_mut().ok_or_else(|| perr(line, col, "`power` before `ring`"))?;
                    let n: u32 = rest
                        .parse()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| perr(line, rest_col, "power must be a positive integer"))?;
                    d.power = Some(n);
                }
                "closure" => {
                    let d = doc.as_mut().ok_or_else(|| perr(line, col, "`closure` before `ring`"))?;
                    if !rest.is_empty() {
                        return Err(perr(line, rest_col, "`closure` takes no argument"));
                    }
                    d.closure = true;
                }
                other => return Err(perr(line, col, format!("unknown directive `{other}`"))),
            }
        }
        let doc = doc.ok_or_else(|| perr(1, 1, "missing `ring` line"))?;
        if doc.ideals.is_empty() {
            return Err(perr(text.lines().count().max(1), 1, "no ideals declared"));
        }
        Ok(doc)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: JsonDocument = serde_json::from_str(text).map_err(|e| perr(e.line(), e.column(), e.to_string()))?;
        let ring = Ring::new(&raw.vars).map_err(|e| perr(1, 1, e.to_string()))?;
        let mut doc = IdealDocument::new(ring.clone());
        for (name, rows) in raw.ideals {
            if rows.is_empty() {
                return Err(perr(1, 1, format!("ideal `{name}` has no generators")));
            }
            let ideal =
                MonomialIdeal::from_exponents(&ring, &rows).map_err(|e| perr(1, 1, format!("ideal `{name}`: {e}")))?;
            if ideal.is_unit() {
                return Err(perr(1, 1, format!("ideal `{name}` is the unit ideal")));
            }
            doc.ideals.push((name, ideal));
        }
        if doc.ideals.is_empty() {
            return Err(perr(1, 1, "no ideals declared"));
        }
        if raw.power == Some(0) {
            return Err(perr(1, 1, "power must be a positive integer"));
        }
        doc.power = raw.power;
        doc.closure = raw.closure;
        Ok(doc)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("ring {}\n", self.ring.vars().join(" "));
        for (name, ideal) in &self.ideals {
            let gens: Vec<String> = ideal.gens().iter().map(|g| self.ring.format_monomial(g)).collect();
            out.push_str(&format!("ideal {name} = {}\n", gens.join(", ")));
        }
        if let Some(n) = self.power {
            out.push_str(&format!("power {n}\n"));
        }
        if self.closure {
            out.push_str("closure\n");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let raw = JsonDocument {
            vars: self.ring.vars().to_vec(),
            ideals: self
                .ideals
                .iter()
                .map(|(n, i)| (n.clone(), i.gens().iter().map(|g| g.exps().to_vec()).collect()))
                .collect(),
            power: self.power,
            closure: self.closure,
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    vars: Vec<String>,
    ideals: IndexMap<String, Vec<Vec<Exp>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    power: Option<u32>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    closure: bool,
}
