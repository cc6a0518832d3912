//! Bounded semi-decision of local finiteness with checkable certificates.
//!
//! A derivation is locally finite as soon as every generator has a
//! finite-dimensional D-stable span, so the probe iterates `D` on each
//! variable and stops once `D^{k+1}(xᵢ)` falls into the span of the earlier
//! iterates. Non-finiteness is certified by a monomial ray: if
//! `D(x^α) = x^α·Σ αⱼ·gⱼ/xⱼ` collapses to a single monomial `(c + k·d)·x^{α+σ}`
//! along `α = α₀ + k·σ` with `c + k·d ≠ 0` for all `k ≥ 0`, the iterates never
//! repeat an exponent and span an infinite-dimensional space.

use std::collections::BTreeMap;

use super::{Derivation, GeneralDerivation};
use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly};
use crate::numtheory::Rat;

/// D-stable spanning set `{xᵢ, D(xᵢ), …, D^{k}(xᵢ)}` of one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpan {
    pub generator: usize,
    pub basis: Vec<LaurentPoly>,
}

impl GeneratorSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Iterates of one generator forming a monomial ray with exponent shift
/// `shift`; the coefficient ratio between consecutive iterates is
/// `base_factor + k·step_factor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonFinitenessWitness {
    pub generator: usize,
    pub chain: Vec<LaurentPoly>,
    pub shift: ExpVec,
    pub base_factor: Rat,
    pub step_factor: Rat,
}

impl NonFinitenessWitness {
    pub fn degrees(&self) -> Vec<i64> {
        self.chain
            .iter()
            .map(|p| p.max_total_degree().expect("chain elements are nonzero"))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinitenessVerdict {
    CertifiedLocallyFinite(Vec<GeneratorSpan>),
    CertifiedNotLocallyFinite(NonFinitenessWitness),
    Inconclusive { bound: usize },
}

impl FinitenessVerdict {
    /// Re-checks the certificate against `d` independently of the probe.
    pub fn verify(&self, d: &GeneralDerivation) -> Result<bool> {
        match self {
            FinitenessVerdict::CertifiedLocallyFinite(spans) => {
                if spans.len() != d.ctx().n() {
                    return Ok(false);
                }
                for (i, span) in spans.iter().enumerate() {
                    if span.generator != i
                        || span.basis.first() != Some(&LaurentPoly::var(d.ctx(), i))
                    {
                        return Ok(false);
                    }
                    let mut ech = Echelon::default();
                    for b in &span.basis {
                        if !ech.insert(b) {
                            return Ok(false);
                        }
                    }
                    for b in &span.basis {
                        if !ech.contains(&d.apply(b)?) {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            FinitenessVerdict::CertifiedNotLocallyFinite(w) => verify_witness(d, w),
            FinitenessVerdict::Inconclusive { .. } => Ok(true),
        }
    }
}

/// Row-echelon basis of a subspace of the Laurent ring, keyed by leading
/// exponent.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<ExpVec, LaurentPoly>,
}

impl Echelon {
    fn reduce(&self, v: &LaurentPoly) -> LaurentPoly {
        let mut v = v.clone();
        for (pivot, row) in self.rows.iter().rev() {
            let c = v.coeff(pivot);
            if c.is_zero() {
                continue;
            }
            let lead = row.coeff(pivot);
            let factor = c.checked_div(&lead).expect("pivot coefficients are nonzero");
            v = &v - &row.scale(&factor);
        }
        v
    }

    fn contains(&self, v: &LaurentPoly) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false if it was already in the span.
    fn insert(&mut self, v: &LaurentPoly) -> bool {
        let r = self.reduce(v);
        let Some((lead, _)) = r.terms().next() else {
            return false;
        };
        let lead = lead.clone();
        self.rows.insert(lead, r);
        true
    }
}

fn ray_factors(d: &GeneralDerivation, start: &ExpVec, shift: &ExpVec) -> Result<Option<(Rat, Rat)>> {
    let ctx = d.ctx();
    let n = ctx.n();
    // hⱼ = gⱼ / xⱼ
    let h: Vec<LaurentPoly> = d
        .images()
        .iter()
        .enumerate()
        .map(|(j, g)| g.mul_monomial(&ExpVec::unit(n, j).scaled(-1), &Rat::one()))
        .collect();
    let combine = |coeffs: &ExpVec| {
        h.iter().enumerate().fold(LaurentPoly::zero(ctx), |acc, (j, hj)| {
            &acc + &hj.scale(&Rat::from(coeffs[j]))
        })
    };
    let single_at_shift = |p: &LaurentPoly| -> Option<Rat> {
        if p.is_zero() {
            return Some(Rat::zero());
        }
        match p.as_monomial() {
            Some((e, c)) if e == shift => Some(c.clone()),
            _ => None,
        }
    };
    let base = single_at_shift(&combine(start));
    let step = single_at_shift(&combine(shift));
    Ok(match (base, step) {
        (Some(c), Some(s)) => Some((c, s)),
        _ => None,
    })
}

/// `c + k·d ≠ 0` for every integer `k ≥ 0`.
fn never_vanishes(c: &Rat, d: &Rat) -> bool {
    if d.is_zero() {
        return !c.is_zero();
    }
    let k = (-c).checked_div(d).expect("d is nonzero");
    !(k.is_integer() && !k.is_negative())
}

fn verify_witness(d: &GeneralDerivation, w: &NonFinitenessWitness) -> Result<bool> {
    let n = d.ctx().n();
    if w.generator >= n || w.chain.is_empty() || w.shift.len() != n {
        return Ok(false);
    }
    if w.chain[0] != LaurentPoly::var(d.ctx(), w.generator) {
        return Ok(false);
    }
    if w.shift.total_degree() <= 0 {
        return Ok(false);
    }
    for pair in w.chain.windows(2) {
        if d.apply(&pair[0])? != pair[1] {
            return Ok(false);
        }
        let (Some((e0, _)), Some((e1, _))) = (pair[0].as_monomial(), pair[1].as_monomial()) else {
            return Ok(false);
        };
        if (e1 - e0) != w.shift {
            return Ok(false);
        }
    }
    let start = ExpVec::unit(n, w.generator);
    match ray_factors(d, &start, &w.shift)? {
        Some((c, s)) => Ok(c == w.base_factor && s == w.step_factor && never_vanishes(&c, &s)),
        None => Ok(false),
    }
}

fn monomial_ray_witness(
    d: &GeneralDerivation,
    generator: usize,
    iterates: &[LaurentPoly],
    bound: usize,
) -> Result<Option<NonFinitenessWitness>> {
    let mut exps = Vec::with_capacity(iterates.len());
    for it in iterates {
        match it.as_monomial() {
            Some((e, _)) => exps.push(e.clone()),
            None => return Ok(None),
        }
    }
    if exps.len() < 2 {
        return Ok(None);
    }
    let shift = &exps[1] - &exps[0];
    if shift.total_degree() <= 0 || exps.windows(2).any(|w| &w[1] - &w[0] != shift) {
        return Ok(None);
    }
    let Some((c, s)) = ray_factors(d, &exps[0], &shift)? else {
        return Ok(None);
    };
    if !never_vanishes(&c, &s) {
        return Ok(None);
    }
    Ok(Some(NonFinitenessWitness {
        generator,
        chain: iterates[..bound.min(iterates.len())].to_vec(),
        shift,
        base_factor: c,
        step_factor: s,
    }))
}

/// Probes local finiteness of `d` using at most `bound` applications of `d`
/// per generator.
///
/// Returns a locally-finite certificate when every generator's iterate span
/// closes within the bound, a monomial-ray witness (chain of the first
/// `bound` iterates) when some generator provably escapes to infinity, and
/// `Inconclusive` otherwise.
pub fn local_finiteness_probe(d: &GeneralDerivation, bound: usize) -> Result<FinitenessVerdict> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let n = d.ctx().n();
    let mut spans = Vec::with_capacity(n);
    let mut witness = None;
    for i in 0..n {
        let mut iterates = vec![LaurentPoly::var(d.ctx(), i)];
        let mut ech = Echelon::default();
        ech.insert(&iterates[0]);
        let mut closed = false;
        for _ in 0..bound {
            let next = d.apply(iterates.last().expect("nonempty"))?;
            if ech.contains(&next) {
                closed = true;
                break;
            }
            ech.insert(&next);
            iterates.push(next);
        }
        if closed {
            spans.push(GeneratorSpan { generator: i, basis: iterates });
        } else if witness.is_none() {
            witness = monomial_ray_witness(d, i, &iterates, bound)?;
        }
    }
    if spans.len() == n {
        Ok(FinitenessVerdict::CertifiedLocallyFinite(spans))
    } else if let Some(w) = witness {
        Ok(FinitenessVerdict::CertifiedNotLocallyFinite(w))
    } else {
        Ok(FinitenessVerdict::Inconclusive { bound })
    }
}
