//! Report builders behind the `semideriv` binary.
//!
//! Every command returns a [`Report`] whose rendering is byte-identical for
//! identical input. Input problems map to exit code 2; a failed internal
//! consistency check maps to exit code 1.

mod problem;

use std::fmt;

use crate::derivation::{local_finiteness_probe, Derivation, FinitenessVerdict, GeneralDerivation};
use crate::error::Error;
use crate::kernel::{brute_force_kernel_monomials, kernel_in_b, KernelGenerators};
use crate::laurent::{LaurentPoly, RingCtx};
use crate::numtheory::Rat;
use crate::slice::build_slice;

pub use problem::ProblemFile;

#[derive(Debug)]
pub enum CliError {
    /// Bad file, expression or arguments; exit code 2.
    Input(Error),
    /// An internal invariant did not hold; exit code 1.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(e) => write!(f, "error: {e}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn internal(msg: impl Into<String>) -> CliError {
    CliError::Internal(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CliResult<()> {
    if cond {
        Ok(())
    } else {
        Err(internal(msg()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub lines: Vec<String>,
    pub warnings: Vec<String>,
    /// Some checked law printed FAIL.
    pub failed: bool,
}

impl Report {
    fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), lines: Vec::new(), warnings: Vec::new(), failed: false }
    }

    fn line(&mut self, l: impl Into<String>) {
        self.lines.push(l.into());
    }

    fn check(&mut self, label: &str, ok: bool) {
        self.line(format!("{label} {}", if ok { "PASS" } else { "FAIL" }));
        self.failed |= !ok;
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMode {
    Localized,
    InB,
    Brute(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Leibniz,
    Conjugate,
    ScalarMultiple,
    LocallyFinite(usize),
}

fn join(ps: &[LaurentPoly]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn scaled_label(k: i64, what: &str) -> String {
    match k {
        1 => what.to_string(),
        -1 => format!("-{what}"),
        _ => format!("{k}*{what}"),
    }
}

fn expressions(pf: &ProblemFile, expr: Option<&str>) -> CliResult<Vec<LaurentPoly>> {
    match expr {
        Some(e) => Ok(vec![pf.expr(e)?]),
        None if !pf.queries.is_empty() => Ok(pf.queries.clone()),
        None => Err(CliError::Input(Error::InvalidArgument(
            "no expression: pass --expr or add 'query:' lines".into(),
        ))),
    }
}

pub fn cmd_decompose(pf: &ProblemFile, expr: Option<&str>) -> CliResult<Report> {
    let d = &pf.derivation;
    let mut r = Report::new("decompose");
    for p in expressions(pf, expr)? {
        r.line(format!("input: {p}"));
        let dec = d.weight_decompose(&p)?;
        ensure(dec.sum() == p, || format!("components of {p} do not sum back"))?;
        if dec.is_empty() {
            r.line("(zero polynomial)");
        }
        for (&w, c) in dec.components() {
            ensure(d.apply(c)? == c.scale(&Rat::from(w)), || {
                format!("component {c} is not homogeneous of weight {w}")
            })?;
            r.line(format!("{w}: {c}"));
        }
    }
    Ok(r)
}

pub fn cmd_slice(pf: &ProblemFile) -> CliResult<Report> {
    let d = &pf.derivation;
    let sd = build_slice(d)?;
    let mut r = Report::new("slice");
    r.line(format!("weights: {}", fmt_ints(d.weights())));
    r.line(format!("g: {}", sd.g));
    r.line(format!("m: {}", fmt_ints(&sd.m)));
    r.line(format!("s: {}", sd.s));
    r.line(format!("f: {}", sd.f));
    ensure(d.apply(&sd.s)? == sd.s.scale(&Rat::from(sd.g)), || {
        format!("D(s) != {}*s for s = {}", sd.g, sd.s)
    })?;
    r.line(format!("D(s) = {}", scaled_label(sd.g, "s")));
    if let Some(w) = sd.warning() {
        r.warnings.push(w);
    }
    Ok(r)
}

fn fmt_ints(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_uvars(list: &str) -> Vec<String> {
    list.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

pub fn cmd_kernel(pf: &ProblemFile, mode: KernelMode, uvars: Option<&str>) -> CliResult<Report> {
    let d = &pf.derivation;
    match mode {
        KernelMode::Localized => {
            let mut r = Report::new("kernel --localized");
            let sd = build_slice(d)?;
            if !sd.is_slice() {
                return Err(CliError::Input(Error::NotASlice(format!(
                    "no weight-one monomial: weights have gcd {}",
                    sd.g
                ))));
            }
            let uctx = match uvars {
                Some(list) => RingCtx::new(&parse_uvars(list))?,
                None => RingCtx::numbered("u", d.ctx().n())?,
            };
            let gens = KernelGenerators::with_uctx(d, &sd.s, uctx)?;
            r.line(format!("s: {}", sd.s));
            for (i, u) in gens.u.iter().enumerate() {
                ensure(d.apply(u)?.is_zero(), || format!("D({u}) != 0"))?;
                r.line(format!("{} = {u}", gens.uctx.name(i)));
            }
            for p in &pf.queries {
                let coords = gens.coordinates(p)?;
                ensure(gens.reconstruct(&coords)? == *p, || format!("reconstruction of {p} failed"))?;
                r.line(format!("query: {p}"));
                r.line(format!("in kernel: {}", if gens.contains(p)? { "yes" } else { "no" }));
                for (w, q) in &coords.components {
                    r.line(format!("s^{w}: {q}"));
                }
            }
            Ok(r)
        }
        KernelMode::InB => {
            let mut r = Report::new("kernel --in-B");
            let gens = kernel_in_b(d);
            for g in &gens {
                ensure(d.apply(g)?.is_zero(), || format!("D({g}) != 0"))?;
                r.line(g.to_string());
            }
            if gens.is_empty() {
                r.line("(constants only)");
            }
            Ok(r)
        }
        KernelMode::Brute(deg) => {
            let mut r = Report::new(format!("kernel --brute {deg}"));
            for m in brute_force_kernel_monomials(d, deg) {
                r.line(m.to_string());
            }
            Ok(r)
        }
    }
}

pub fn cmd_check(pf: &ProblemFile, law: Law) -> CliResult<Report> {
    match law {
        Law::Leibniz => check_leibniz(pf),
        Law::Conjugate => check_conjugate(pf),
        Law::ScalarMultiple => check_scalar_multiple(pf),
        Law::LocallyFinite(bound) => check_locfin(pf, bound),
    }
}

fn missing(what: &str) -> CliError {
    CliError::Input(Error::InvalidArgument(format!("problem file has no '{what}:' lines")))
}

fn check_leibniz(pf: &ProblemFile) -> CliResult<Report> {
    if pf.queries.is_empty() {
        return Err(missing("query"));
    }
    let mut r = Report::new("check leibniz");
    let mut derivs: Vec<(&str, Box<dyn Derivation + '_>)> =
        vec![("D", Box::new(pf.derivation.clone()))];
    if let Some(g) = &pf.images {
        derivs.push(("delta", Box::new(g.clone())));
    }
    for (name, d) in &derivs {
        for (i, p) in pf.queries.iter().enumerate() {
            for q in &pf.queries[i..] {
                let lhs = d.apply(&(p * q))?;
                let rhs = &(&d.apply(p)? * q) + &(p * &d.apply(q)?);
                r.check(&format!("leibniz {name} ({p}) * ({q})"), lhs == rhs);
            }
        }
    }
    Ok(r)
}

fn check_conjugate(pf: &ProblemFile) -> CliResult<Report> {
    let phi = pf.phi.as_ref().ok_or_else(|| missing("phi"))?;
    let psi = pf.psi.as_ref().ok_or_else(|| missing("psi"))?;
    let d = &pf.derivation;
    let conj = GeneralDerivation::conjugate(d, phi, psi)?;
    let mut r = Report::new("check conjugate");
    r.line("inverse check PASS");
    for (i, img) in conj.images().iter().enumerate() {
        r.line(format!("D'({}) = {img}", pf.ctx.name(i)));
    }
    let mut all = true;
    for (i, ph) in phi.iter().enumerate() {
        let l = d.weights()[i];
        let ok = conj.apply(ph)? == ph.scale(&Rat::from(l));
        let what = format!("phi({})", pf.ctx.name(i));
        r.check(&format!("D'({what}) = {}", scaled_label(l, &what)), ok);
        all &= ok;
    }
    r.check("eigenvector check", all);
    Ok(r)
}

fn check_scalar_multiple(pf: &ProblemFile) -> CliResult<Report> {
    let a = pf.queries.first().ok_or_else(|| missing("query"))?;
    let mut r = Report::new("check aD");
    r.line(format!("a: {a}"));
    let verdict = if pf.derivation.scalar_multiple_semisimple(a)? {
        "YES (a constant)"
    } else {
        "NO (a not constant)"
    };
    r.line(format!("aD semisimple: {verdict}"));
    Ok(r)
}

fn check_locfin(pf: &ProblemFile, bound: usize) -> CliResult<Report> {
    let d = pf.images.as_ref().ok_or_else(|| missing("images"))?;
    if bound == 0 {
        return Err(CliError::Input(Error::InvalidArgument("locfin bound must be at least 1".into())));
    }
    let verdict = local_finiteness_probe(d, bound)?;
    ensure(verdict.verify(d)?, || "certificate failed re-verification".into())?;
    let mut r = Report::new(format!("check locfin {bound}"));
    match &verdict {
        FinitenessVerdict::CertifiedLocallyFinite(spans) => {
            r.line("locally finite: certified");
            for span in spans {
                r.line(format!(
                    "span({}): dim {}: {}",
                    pf.ctx.name(span.generator),
                    span.dim(),
                    join(&span.basis)
                ));
            }
        }
        FinitenessVerdict::CertifiedNotLocallyFinite(w) => {
            let chain: Vec<String> = w.chain.iter().map(ToString::to_string).collect();
            r.line(format!("NOT locally finite: witness {} -> ...", chain.join(" -> ")));
            r.line(format!("degrees: {}", fmt_ints(&w.degrees())));
            let shift = LaurentPoly::monomial(&pf.ctx, w.shift.clone(), Rat::one());
            r.line(format!("shift: {shift}"));
            r.line(format!("coefficient ratio: {} + {}*k", w.base_factor, w.step_factor));
        }
        FinitenessVerdict::Inconclusive { bound } => {
            r.line(format!("inconclusive: bound {bound} reached"));
        }
    }
    Ok(r)
}
