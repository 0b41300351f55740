//! Named verification suites: each closed form is replayed on fixed and
//! seeded random instances and compared with the brute-force oracle.

use std::time::Duration;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::closure::closure_power_within;
use crate::decompose::{associated_primes, irreducible_decomposition};
use crate::error::{Error, Result};
use crate::formulas::{
    b_mod_helper, ceil_step, f_m_witness, gap_instance, icci_upper_witness, v_ci, v_ci_power, v_closure_3gen,
    v_closure_h2_product, v_closure_h2_split, v_closure_irred_bounds, v_closure_irred_two_block, wog_ideal,
    wog_v_closure, CIIdealSpec, Height2Spec, IrreducibleSpec, ThreeGenCase,
};
use crate::instances::{equigenerated_gap_family, non_equigenerated_gap_family, random_ci_ideal, THREE_GEN_NAMED};
use crate::ring::{Exp, MonomialIdeal};
use crate::vnum::{check_witness, v_number_within, VNumberReport};

pub const SUITES: [&str; 7] = ["theorem-ci", "gen-k2", "threegen", "uppbnd-h2", "wog", "ceil", "final-corollary"];

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Random instances per suite; the lemma suites use this many inputs.
    pub trials: u32,
    pub seed: u64,
    /// Largest exponent in random instances.
    pub max_exp: Exp,
    /// Time limit per oracle call; `None` means unlimited.
    pub budget: Option<Duration>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 20, seed: 0, max_exp: 3, budget: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    /// Oracle calls that ran out of budget.
    pub skipped: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    report: SuiteReport,
    budget: Option<Duration>,
}

impl Checker {
    fn new(suite: &str, opts: &VerifyOptions) -> Self {
        Checker {
            report: SuiteReport { suite: suite.to_string(), checks: 0, skipped: 0, failures: Vec::new() },
            budget: opts.budget,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.failures.push(what());
        }
    }

    fn eq(&mut self, got: Option<u64>, want: u64, what: impl FnOnce() -> String) {
        self.check(got == Some(want), || format!("{}: got {got:?}, expected {want}", what()));
    }

    /// Unwraps an oracle result, counting a budget overrun as skipped and
    /// any other error as a failure.
    fn oracle<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(t) => Some(t),
            Err(Error::BudgetExceeded(_)) => {
                self.report.skipped += 1;
                None
            }
            Err(e) => {
                self.report.checks += 1;
                self.report.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn fresh_budget(&self) -> Budget {
        self.budget.map_or_else(Budget::unlimited, Budget::new)
    }

    fn v_of(&mut self, ideal: &MonomialIdeal) -> Option<VNumberReport> {
        let b = self.fresh_budget();
        self.oracle(v_number_within(ideal, &b), || format!("oracle v({ideal})"))
    }

    /// Oracle `v` of `\overline{I^n}` with the closure itself.
    fn closure_v(&mut self, ideal: &MonomialIdeal, n: u32) -> Option<(MonomialIdeal, VNumberReport)> {
        let b = self.fresh_budget();
        let r = closure_power_within(ideal, n, &b).and_then(|c| v_number_within(&c, &b).map(|v| (c, v)));
        self.oracle(r, || format!("oracle v(closure({ideal})^{n})"))
    }
}

/// Runs one suite by name.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut c = Checker::new(name, opts);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match name {
        "theorem-ci" => theorem_ci(&mut c, &mut rng, opts)?,
        "gen-k2" => gen_k2(&mut c, &mut rng, opts)?,
        "threegen" => threegen(&mut c, &mut rng, opts)?,
        "uppbnd-h2" => uppbnd_h2(&mut c, &mut rng, opts)?,
        "wog" => wog(&mut c, &mut rng, opts)?,
        "ceil" => lemmas(&mut c, &mut rng, opts)?,
        "final-corollary" => final_corollary(&mut c)?,
        _ => return Err(Error::domain(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")))),
    }
    Ok(c.report)
}

/// Every suite in [`SUITES`] order.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, opts)).collect()
}

fn theorem_ci(c: &mut Checker, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
    let mut ideals = vec![
        MonomialIdeal::parse(&crate::ring::Ring::new(&["x", "y"])?, "x^2, y^3")?,
        MonomialIdeal::parse(&crate::ring::Ring::new(&["x", "y", "z", "w"])?, "x*y, z*w")?,
    ];
    ideals.extend((0..opts.trials).map(|_| random_ci_ideal(rng, 3, 5, opts.max_exp)));
    for ideal in &ideals {
        let specs = CIIdealSpec::all(ideal)?;
        let v1 = v_ci(&specs[0]).value.unwrap();
        for n in 1..=2u32 {
            let power = ideal.power(n)?;
            let Some(report) = c.v_of(&power) else { continue };
            let want = v_ci_power(&specs[0], n)?.value.unwrap();
            if n == 1 {
                c.eq(Some(v1), want, || format!("{ideal}: v_ci vs power formula at n = 1"));
            }
            c.eq(Some(report.v), want, || format!("v({ideal}^{n})"));
            for spec in &specs {
                c.eq(report.local(spec.prime()), want, || format!("v_{}({ideal}^{n})", spec.prime()));
                let w = v_ci_power(spec, n)?.witness.unwrap();
                c.check(check_witness(&power, &w, spec.prime()), || {
                    format!("power witness of {ideal}^{n} at {}", spec.prime())
                });
            }
            // every minimal witness is divisible by g with the excess of degree >= (n-1)α
            let alpha = specs[0].alpha();
            for (p, (_, w)) in &report.locals {
                let spec = specs.iter().find(|s| s.prime() == p).expect("same primes");
                let g = spec.g();
                let ok = g.divides(w.monomial()) && w.degree() - g.degree() >= u64::from(n - 1) * alpha;
                c.check(ok, || format!("oracle witness of {ideal}^{n} at {p} is not a multiple of g"));
            }
        }
    }
    Ok(())
}

fn gen_k2(c: &mut Checker, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
    let top = opts.max_exp.max(2) + 2;
    for a1 in 1..=top {
        for a2 in a1..=top {
            let spec = IrreducibleSpec::new(&[a1, a2])?;
            let mut prev = None;
            for n in 1..=2 {
                let (lo, hi) = v_closure_irred_bounds(&spec, n)?;
                c.check(lo.value == hi.value, || format!("k = 2 bounds differ for ({a1}, {a2})"));
                let f = v_closure_irred_two_block(&spec, n)?;
                let Some((bar, got)) = c.closure_v(&spec.ideal(), n) else { continue };
                c.eq(Some(got.v), f.value.unwrap(), || format!("v(closure(x1^{a1}, x2^{a2})^{n})"));
                let w = f.witness.as_ref().unwrap();
                c.check(check_witness(&bar, w, got.locals.keys().next().unwrap()), || {
                    format!("two-block witness for ({a1}, {a2}), n = {n}")
                });
                if let Some(p) = prev {
                    c.eq(Some(got.v - p), u64::from(a1), || format!("step in n for ({a1}, {a2})"));
                }
                prev = Some(got.v);
            }
        }
    }
    for _ in 0..opts.trials {
        let k = rng.gen_range(3..=4);
        let mut e: Vec<Exp> = (0..k).map(|_| rng.gen_range(1..=top)).collect();
        e.sort_unstable();
        let spec = IrreducibleSpec::new(&e)?;
        let (lo, hi) = v_closure_irred_bounds(&spec, 1)?;
        let Some((_, got)) = c.closure_v(&spec.ideal(), 1) else { continue };
        c.check(lo.value.unwrap() <= got.v && got.v <= hi.value.unwrap(), || {
            format!("{e:?}: oracle {} outside [{:?}, {:?}]", got.v, lo.value, hi.value)
        });
        let two = v_closure_irred_two_block(&spec, 1)?;
        if two.is_applicable() {
            c.eq(Some(got.v), two.value.unwrap(), || format!("two-block value for {e:?}"));
        }
    }
    Ok(())
}

fn check_three(c: &mut Checker, a: (Exp, Exp, Exp), n: u32) -> Result<Option<u64>> {
    let r = v_closure_3gen(a.0, a.1, a.2, n)?;
    let want = r.result.value.unwrap();
    let spec = IrreducibleSpec::new(&[a.0, a.1, a.2])?;
    let Some((bar, got)) = c.closure_v(&spec.ideal(), n) else { return Ok(None) };
    c.eq(Some(got.v), want, || format!("v(closure{a:?}^{n})"));
    let p = got.locals.keys().next().unwrap().clone();
    c.check(check_witness(&bar, r.result.witness.as_ref().unwrap(), &p), || {
        format!("3-gen witness for {a:?}, n = {n}")
    });
    let (a1, a2, a3) = (u64::from(a.0), u64::from(a.1), u64::from(a.2));
    for case in &r.fired {
        match case {
            ThreeGenCase::Residue | ThreeGenCase::SmallRatio => {
                c.check(r.l == Some(1), || format!("{a:?}: {case:?} fired but l = {:?}", r.l))
            }
            ThreeGenCase::CeilMatch => {
                c.eq(Some(want), u64::from(n) * a1 + a2.div_ceil(a1) - 2, || format!("{a:?}: ceil-match value"))
            }
            _ => {}
        }
    }
    // ⌈a2/a1⌉ − 1 ≤ ⌈a2/a1 − a2/a3⌉ ≤ ⌈a2/a1⌉
    let mid = (a2 * (a3 - a1)).div_ceil(a1 * a3);
    c.check(a2.div_ceil(a1) - 1 <= mid && mid <= a2.div_ceil(a1), || format!("{a:?}: ceiling sandwich"));
    if n == 1 && a.0 >= 2 {
        // the minimum over m ≤ a1 is already attained below a1
        let full = (1..=a.0).map(|m| f_m_witness(a.0, a.1, a.2, m).map(|f| f.degree())).collect::<Result<Vec<_>>>()?;
        c.eq(full[..full.len() - 1].iter().min().copied(), *full.iter().min().unwrap(), || {
            format!("{a:?}: f_(a1) strictly best")
        });
    }
    Ok(Some(got.v))
}

fn threegen(c: &mut Checker, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
    for (a, l) in THREE_GEN_NAMED {
        let r = v_closure_3gen(a.0, a.1, a.2, 1)?;
        c.check(r.l == Some(l), || format!("{a:?}: l = {:?}, expected {l}", r.l));
        let fl = f_m_witness(a.0, a.1, a.2, l)?.degree();
        if let Some(v) = check_three(c, a, 1)? {
            c.eq(Some(v), fl, || format!("{a:?}: v = deg f_{l}"));
        }
        for m in 1..=a.0 {
            let spec = IrreducibleSpec::new(&[a.0, a.1, a.2])?;
            let bar = closure_power_within(&spec.ideal(), 1, &c.fresh_budget());
            if let Some(bar) = c.oracle(bar, || format!("closure{a:?}")) {
                let p = associated_primes(&bar)?.remove(0);
                c.check(check_witness(&bar, &f_m_witness(a.0, a.1, a.2, m)?, &p), || format!("f_{m} for {a:?}"));
            }
        }
    }
    for a2 in 1..=6 {
        for a3 in a2..=6 {
            for n in 1..=2 {
                check_three(c, (1, a2, a3), n)?;
            }
        }
    }
    let top = opts.max_exp.max(2) + 3;
    for _ in 0..opts.trials {
        let mut e: Vec<Exp> = (0..3).map(|_| rng.gen_range(1..=top)).collect();
        e.sort_unstable();
        let n = rng.gen_range(1..=2);
        check_three(c, (e[0], e[1], e[2]), n)?;
    }
    for a in 1..=4 {
        for n in 1..=3 {
            let three = v_closure_3gen(a, a, a, n)?.result.value;
            let two = v_closure_irred_two_block(&IrreducibleSpec::new(&[a, a, a])?, n)?.value;
            c.check(three == two && two == Some(u64::from(n * a) - 1), || {
                format!("({a}, {a}, {a}), n = {n} consistency")
            });
        }
    }
    Ok(())
}

fn uppbnd_h2(c: &mut Checker, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
    // the product shape on a grid
    for q in 1..=2usize {
        for alpha in 1..=2 {
            for l in q..=2 {
                for b1 in alpha..=3 {
                    for b2 in b1..=3 {
                        let betas: Vec<Exp> = [b1, b2][..l].to_vec();
                        if l == 1 && b2 != b1 {
                            continue;
                        }
                        let spec = Height2Spec::new(q, alpha, &betas)?;
                        for n in 1..=2 {
                            let f = v_closure_h2_product(&spec, n)?;
                            let Some((bar, got)) = c.closure_v(&spec.ideal(), n) else { continue };
                            let want = f.value.unwrap();
                            let ideal = spec.ideal();
                            c.eq(Some(got.v), want, || format!("v(closure({ideal})^{n})"));
                            let all_equal = got.locals.values().all(|(d, _)| *d == want);
                            c.check(all_equal, || format!("local values of closure({ideal})^{n}"));
                            c.check(
                                got.locals.keys().any(|p| check_witness(&bar, f.witness.as_ref().unwrap(), p)),
                                || format!("product witness for {ideal}, n = {n}"),
                            );
                        }
                    }
                }
            }
        }
    }
    // the split shape, plus the gap family built from it
    for (alpha, betas) in [(3, vec![1, 2]), (5, vec![1, 1, 3]), (4, vec![1, 1, 2]), (6, vec![2, 2, 2])] {
        let spec = Height2Spec::new(1, alpha, &betas)?;
        for n in 1..=2 {
            let f = v_closure_h2_split(&spec, n)?;
            let Some((bar, got)) = c.closure_v(&spec.ideal(), n) else { continue };
            let lower = u64::from(n) * u64::from(alpha);
            c.check(got.v >= lower, || format!("split {alpha} {betas:?}: v = {} < {lower}", got.v));
            if f.is_exact() {
                c.eq(Some(got.v), lower, || format!("split {alpha} {betas:?}, n = {n}"));
                let w = f.witness.as_ref().unwrap();
                c.check(got.locals.keys().any(|p| check_witness(&bar, w, p)), || {
                    format!("split witness {alpha} {betas:?}")
                });
            }
        }
    }
    for a in 1..=2 {
        let g = gap_instance(a)?;
        if let Some((_, got)) = c.closure_v(&g.ideal(), 1) {
            c.eq(Some(got.v), g.alpha(), || format!("gap instance a = {a}"));
        }
    }
    // v(Ī^n) ≤ v(I^n), strictly when two generators are not squarefree
    for _ in 0..opts.trials {
        let ideal = random_ci_ideal(rng, 3, 5, opts.max_exp);
        let spec = CIIdealSpec::for_ideal(&ideal)?;
        let strict = crate::formulas::forces_strict_gap(&ideal);
        for n in 1..=2 {
            let vp = v_ci_power(&spec, n)?.value.unwrap();
            let Some((bar, got)) = c.closure_v(&ideal, n) else { continue };
            c.check(got.v <= vp, || format!("{ideal}, n = {n}: v(closure) {} > v(power) {vp}", got.v));
            if strict {
                c.check(got.v < vp, || format!("{ideal}, n = {n}: expected a strict gap"));
            }
            for comp in irreducible_decomposition(&ideal)?.components() {
                let w = icci_upper_witness(&ideal, comp, n);
                c.check(w.as_ref().is_ok_and(|w| w.degree() >= got.v), || {
                    format!("ICCI witness {ideal} at {}", comp.to_ideal())
                });
            }
            let _ = bar;
        }
    }
    Ok(())
}

fn wog(c: &mut Checker, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
    let mut cases: Vec<(usize, Vec<Exp>)> = vec![(2, vec![1, 1]), (1, vec![2, 3]), (2, vec![2, 1])];
    for _ in 0..opts.trials.min(10) {
        let p1 = rng.gen_range(1..=2);
        let p2 = rng.gen_range(1..=2);
        cases.push((p1, (0..p2).map(|_| rng.gen_range(1..=opts.max_exp)).collect()));
    }
    for (p1, weights) in cases {
        let ideal = wog_ideal(p1, &weights)?;
        for n in 1..=2 {
            let f = wog_v_closure(p1, &weights, n)?;
            let Some((bar, got)) = c.closure_v(&ideal, n) else { continue };
            c.eq(Some(got.v), f.value.unwrap(), || format!("v(closure({ideal})^{n})"));
            let w = f.witness.as_ref().unwrap();
            let p = crate::decompose::MonomialPrime::new(ideal.ring(), 0..p1)?;
            c.check(check_witness(&bar, w, &p), || format!("WOG witness for {ideal}, n = {n}"));
        }
    }
    Ok(())
}

fn lemmas(c: &mut Checker, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    for _ in 0..opts.trials {
        let l = rng.gen_range(1..=30u64);
        let t = rng.gen_range(1..=l);
        let ad = rng.gen_range(1..=12i64);
        let a = q(rng.gen_range(ad..=8 * ad), ad);
        let cd = rng.gen_range(1..=12i64);
        let cv = q(-rng.gen_range(0..cd), cd);
        let sd = rng.gen_range(1..=12i64);
        let s = q(rng.gen_range(0..=sd), sd);
        let r = ceil_step(l, t, &a, &cv, &s)?;
        c.check(r.holds1() && r.holds2(), || format!("ceil lemma fails at L={l}, t={t}, A={a}, c={cv}, s={s}"));
        let (x, y) = (rng.gen_range(1..=50), rng.gen_range(1..=50));
        let ok = b_mod_helper(x, y).is_ok();
        c.check(ok, || format!("b >= ceil(b/a) + 1 characterization fails at ({x}, {y})"));
    }
    Ok(())
}

fn final_corollary(c: &mut Checker) -> Result<()> {
    for q in 0..=2u32 {
        let families = [equigenerated_gap_family(q)?, non_equigenerated_gap_family(q as usize)?];
        for ideal in families {
            let spec = CIIdealSpec::for_ideal(&ideal)?;
            for n in 1..=3 {
                let vp = v_ci_power(&spec, n)?.value.unwrap();
                let vc = crate::formulas::closure_formula(&ideal, n)?;
                c.check(vc.is_exact(), || format!("{ideal}: closure formula not exact"));
                c.eq(vc.value.map(|v| vp - v), u64::from(q), || format!("gap of {ideal} at n = {n}"));
                if n == 1 {
                    if let Some(got) = c.v_of(&ideal) {
                        c.eq(Some(got.v), vp, || format!("oracle v({ideal})"));
                    }
                    if let Some((_, got)) = c.closure_v(&ideal, 1) {
                        c.eq(Some(got.v), vc.value.unwrap(), || format!("oracle v(closure({ideal}))"));
                    }
                }
            }
        }
    }
    Ok(())
}
