//! Kernels of a diagonal derivation.
//!
//! Three settings are covered. In the localization `B_s` at a monomial
//! slice `s` (with `D(s) = s`) the kernel is generated by `uᵢ = xᵢ·s^{−λᵢ}`,
//! and every element splits as `Σ_w (polynomial in u)·s^w`. In `B` itself the
//! kernel is the monomial algebra of the weight-zero monoid, presented by its
//! Hilbert basis.

mod hilbert;
mod oracle;

use std::collections::BTreeMap;

use crate::derivation::{Derivation, DiagonalDerivation};
use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly, RingCtx};
use crate::numtheory::Rat;
use crate::slice::verify_slice;

pub use hilbert::{degree_order, hilbert_basis, HilbertBasis};
pub use oracle::{brute_force_kernel, minimal_elements, unrepresentable};

fn check_slice(d: &DiagonalDerivation, s: &LaurentPoly) -> Result<()> {
    if s.ctx() != d.ctx() {
        return Err(Error::ContextMismatch);
    }
    if !s.is_monomial() {
        return Err(Error::NotASlice(format!("{s} is not a monomial")));
    }
    if !verify_slice(d, s)? {
        return Err(Error::NotASlice(format!("D({s}) != {s}")));
    }
    Ok(())
}

/// Generators `uᵢ = xᵢ·s^{−λᵢ}` of the kernel on `B_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelGenerators {
    d: DiagonalDerivation,
    pub s: LaurentPoly,
    pub u: Vec<LaurentPoly>,
    /// Ring of the formal variables `u₁, …, u_n`.
    pub uctx: RingCtx,
}

impl KernelGenerators {
    pub fn new(d: &DiagonalDerivation, s: &LaurentPoly) -> Result<Self> {
        let uctx = RingCtx::numbered("u", d.ctx().n())?;
        Self::with_uctx(d, s, uctx)
    }

    /// As [`KernelGenerators::new`] with caller-chosen names for the `uᵢ`.
    pub fn with_uctx(d: &DiagonalDerivation, s: &LaurentPoly, uctx: RingCtx) -> Result<Self> {
        check_slice(d, s)?;
        if uctx.n() != d.ctx().n() {
            return Err(Error::InvalidArgument(format!(
                "{} kernel variable names for {} variables",
                uctx.n(),
                d.ctx().n()
            )));
        }
        let u = d
            .weights()
            .iter()
            .enumerate()
            .map(|(i, &l)| Ok(&LaurentPoly::var(d.ctx(), i) * &s.pow(-l)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(KernelGenerators { d: d.clone(), s: s.clone(), u, uctx })
    }

    /// Rewrites each term `c·x^α` of weight `w` as `c·u^α·s^w`.
    pub fn coordinates(&self, p: &LaurentPoly) -> Result<SliceCoordinates> {
        let dec = self.d.weight_decompose(p)?;
        let mut components = BTreeMap::new();
        for (&w, comp) in dec.components() {
            components.insert(w, comp.with_ctx(&self.uctx)?);
        }
        Ok(SliceCoordinates { components })
    }

    /// Evaluates a polynomial in the `uᵢ` back in the original ring.
    pub fn lift(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        if q.ctx() != &self.uctx {
            return Err(Error::ContextMismatch);
        }
        q.substitute(&self.u)
    }

    /// `Σ_w lift(component_w)·s^w`.
    pub fn reconstruct(&self, coords: &SliceCoordinates) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.d.ctx());
        for (&w, comp) in &coords.components {
            out = &out + &(&self.lift(comp)? * &self.s.pow(w)?);
        }
        Ok(out)
    }

    /// `p ∈ ker(D|_{B_s})`: every term has weight zero.
    pub fn contains(&self, p: &LaurentPoly) -> Result<bool> {
        let dec = self.d.weight_decompose(p)?;
        let all_zero = dec.weights().all(|w| w == 0);
        Ok(all_zero)
    }
}

/// Components of an element written as `Σ_w q_w(u)·s^w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCoordinates {
    pub components: BTreeMap<i64, LaurentPoly>,
}

impl SliceCoordinates {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

pub fn kernel_generators_localized(
    d: &DiagonalDerivation,
    s: &LaurentPoly,
) -> Result<KernelGenerators> {
    KernelGenerators::new(d, s)
}

pub fn slice_coordinates(
    d: &DiagonalDerivation,
    s: &LaurentPoly,
    p: &LaurentPoly,
) -> Result<SliceCoordinates> {
    KernelGenerators::new(d, s)?.coordinates(p)
}

pub fn kernel_membership_localized(
    d: &DiagonalDerivation,
    s: &LaurentPoly,
    p: &LaurentPoly,
) -> Result<bool> {
    KernelGenerators::new(d, s)?.contains(p)
}

/// Monomial generators of `ker(D) ∩ B`, one per Hilbert basis element.
pub fn kernel_in_b(d: &DiagonalDerivation) -> Vec<LaurentPoly> {
    hilbert_basis(d.weights())
        .gens
        .into_iter()
        .map(|g| LaurentPoly::monomial(d.ctx(), g, Rat::one()))
        .collect()
}

/// `b·s^{−w}` for a semi-invariant `b` of weight `w`; lies in the kernel.
pub fn fraction_kernel_element(
    d: &DiagonalDerivation,
    s: &LaurentPoly,
    b: &LaurentPoly,
) -> Result<LaurentPoly> {
    check_slice(d, s)?;
    let w = d.semi_invariant_weight(b)?.ok_or(Error::NotHomogeneous)?;
    Ok(b * &s.pow(-w)?)
}

/// Exponents of the brute-force weight-zero monomials as polynomials.
pub fn brute_force_kernel_monomials(d: &DiagonalDerivation, degree: u32) -> Vec<LaurentPoly> {
    brute_force_kernel(d.weights(), degree)
        .into_iter()
        .map(|e: ExpVec| LaurentPoly::monomial(d.ctx(), e, Rat::one()))
        .collect()
}
