//! Derivations of Laurent polynomial rings.
//!
//! [`DiagonalDerivation`] is the semisimple case `D(xᵢ) = λᵢxᵢ` with integer
//! weights; every monomial is an eigenvector, so weight decompositions,
//! image membership and semi-invariance reduce to bookkeeping on
//! `⟨α, λ⟩`. [`GeneralDerivation`] is given by arbitrary images of the
//! variables and carries no semisimplicity claim.

mod finiteness;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RingCtx};
use crate::numtheory::Rat;

pub use finiteness::{
    local_finiteness_probe, FinitenessVerdict, GeneratorSpan, NonFinitenessWitness,
};

/// A derivation that can be applied to Laurent polynomials over its ring.
pub trait Derivation {
    fn ctx(&self) -> &RingCtx;

    /// `D(p)`; fails on a context mismatch.
    fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly>;
}

/// `D(xᵢ) = λᵢ·xᵢ` with integer weights λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalDerivation {
    ctx: RingCtx,
    weights: Vec<i64>,
}

impl DiagonalDerivation {
    pub fn new(ctx: &RingCtx, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != ctx.n() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for {} variables",
                weights.len(),
                ctx.n()
            )));
        }
        Ok(DiagonalDerivation { ctx: ctx.clone(), weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    /// The same derivation in image form, `xᵢ ↦ λᵢxᵢ`.
    pub fn to_general(&self) -> GeneralDerivation {
        let images = (0..self.ctx.n())
            .map(|i| LaurentPoly::var(&self.ctx, i).scale(&Rat::from(self.weights[i])))
            .collect();
        GeneralDerivation { ctx: self.ctx.clone(), images }
    }

    fn check_ctx(&self, p: &LaurentPoly) -> Result<()> {
        if p.ctx() == &self.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Groups the terms of `p` by weight `⟨α, λ⟩`.
    pub fn weight_decompose(&self, p: &LaurentPoly) -> Result<WeightDecomposition> {
        self.check_ctx(p)?;
        let mut components: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in p.terms() {
            let w = e.dot(&self.weights);
            components
                .entry(w)
                .or_insert_with(|| LaurentPoly::zero(&self.ctx))
                .add_term(e.clone(), c);
        }
        Ok(WeightDecomposition { ctx: self.ctx.clone(), components })
    }

    /// The common weight of all terms of `p`, or `None` when `p` mixes
    /// weights.
    pub fn semi_invariant_weight(&self, p: &LaurentPoly) -> Result<Option<i64>> {
        self.check_ctx(p)?;
        let mut weights = p.terms().map(|(e, _)| e.dot(&self.weights));
        let Some(first) = weights.next() else {
            return Err(Error::WeightOfZero);
        };
        Ok(weights.all(|w| w == first).then_some(first))
    }

    /// Decides `p ∈ D(B)`. The image is the sum of the nonzero-weight
    /// components, so `p` lies in it exactly when its weight-0 component
    /// vanishes; the preimage divides each component by its weight.
    pub fn image_decompose(&self, p: &LaurentPoly) -> Result<ImageMembership> {
        let dec = self.weight_decompose(p)?;
        if dec.component(0).is_some() {
            return Ok(ImageMembership { in_image: false, preimage: None });
        }
        let mut pre = LaurentPoly::zero(&self.ctx);
        for (&w, comp) in &dec.components {
            let inv = Rat::new(1, w)?;
            pre = &pre + &comp.scale(&inv);
        }
        Ok(ImageMembership { in_image: true, preimage: Some(pre) })
    }

    pub fn sum(&self, other: &DiagonalDerivation) -> Result<DiagonalDerivation> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let weights = self.weights.iter().zip(&other.weights).map(|(a, b)| a + b).collect();
        Ok(DiagonalDerivation { ctx: self.ctx.clone(), weights })
    }

    /// Decides whether `a·D` is semisimple for `a ∈ ker(D)` and `D ≠ 0`:
    /// it is exactly when `a` is a constant.
    pub fn scalar_multiple_semisimple(&self, a: &LaurentPoly) -> Result<bool> {
        self.check_ctx(a)?;
        if self.is_zero() {
            return Err(Error::ZeroDerivation);
        }
        if !a.is_zero() && self.semi_invariant_weight(a)? != Some(0) {
            return Err(Error::NotInKernel);
        }
        Ok(a.is_constant())
    }
}

impl Derivation for DiagonalDerivation {
    fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(p)?;
        let terms = p.terms().map(|(e, c)| (e.clone(), c * &Rat::from(e.dot(&self.weights))));
        LaurentPoly::from_terms(&self.ctx, terms)
    }
}

/// Outcome of [`DiagonalDerivation::image_decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageMembership {
    pub in_image: bool,
    pub preimage: Option<LaurentPoly>,
}

/// Weight-homogeneous components of an element, keyed by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    ctx: RingCtx,
    components: BTreeMap<i64, LaurentPoly>,
}

impl WeightDecomposition {
    pub fn components(&self) -> &BTreeMap<i64, LaurentPoly> {
        &self.components
    }

    pub fn component(&self, w: i64) -> Option<&LaurentPoly> {
        self.components.get(&w)
    }

    /// Occurring weights in increasing order.
    pub fn weights(&self) -> impl Iterator<Item = i64> + '_ {
        self.components.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn sum(&self) -> LaurentPoly {
        self.components
            .values()
            .fold(LaurentPoly::zero(&self.ctx), |acc, c| &acc + c)
    }
}

/// Derivation given by the images `gᵢ = D(xᵢ)`, extended to the Laurent
/// ring by `D(p) = Σ gᵢ·∂p/∂xᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralDerivation {
    ctx: RingCtx,
    images: Vec<LaurentPoly>,
}

impl GeneralDerivation {
    pub fn new(ctx: &RingCtx, images: Vec<LaurentPoly>) -> Result<Self> {
        if images.len() != ctx.n() {
            return Err(Error::InvalidArgument(format!(
                "{} images for {} variables",
                images.len(),
                ctx.n()
            )));
        }
        if images.iter().any(|g| g.ctx() != ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(GeneralDerivation { ctx: ctx.clone(), images })
    }

    pub fn images(&self) -> &[LaurentPoly] {
        &self.images
    }

    /// True when the derivation vanishes on every variable, hence
    /// everywhere.
    pub fn is_zero(&self) -> bool {
        self.images.iter().all(LaurentPoly::is_zero)
    }

    /// `[D₁, D₂]`, determined by `xᵢ ↦ D₁(D₂(xᵢ)) − D₂(D₁(xᵢ))`.
    pub fn commutator(&self, other: &GeneralDerivation) -> Result<GeneralDerivation> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(g1, g2)| Ok(&self.apply(g2)? - &other.apply(g1)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneralDerivation { ctx: self.ctx.clone(), images })
    }

    /// `φ∘D∘φ⁻¹` for an automorphism given by the images `phi` of the
    /// variables together with its inverse `psi`.
    ///
    /// Both compositions are checked to fix every variable. The result maps
    /// `xᵢ ↦ φ(D(ψ(xᵢ)))`, so each `φ(xᵢ)` is an eigenvector of weight `λᵢ`.
    pub fn conjugate(
        d: &DiagonalDerivation,
        phi: &[LaurentPoly],
        psi: &[LaurentPoly],
    ) -> Result<GeneralDerivation> {
        let ctx = &d.ctx;
        let n = ctx.n();
        if phi.len() != n || psi.len() != n {
            return Err(Error::InvalidArgument(format!(
                "automorphism needs {n} images, got {} and {}",
                phi.len(),
                psi.len()
            )));
        }
        if phi.iter().chain(psi).any(|p| p.ctx() != ctx) {
            return Err(Error::ContextMismatch);
        }
        for i in 0..n {
            let x = LaurentPoly::var(ctx, i);
            let psi_phi = phi[i].substitute(psi)?;
            if psi_phi != x {
                return Err(Error::NotMutuallyInverse(format!(
                    "psi(phi({})) = {psi_phi}",
                    ctx.name(i)
                )));
            }
            let phi_psi = psi[i].substitute(phi)?;
            if phi_psi != x {
                return Err(Error::NotMutuallyInverse(format!(
                    "phi(psi({})) = {phi_psi}",
                    ctx.name(i)
                )));
            }
        }
        let images = psi
            .iter()
            .map(|q| d.apply(q)?.substitute(phi))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneralDerivation { ctx: ctx.clone(), images })
    }
}

impl Derivation for GeneralDerivation {
    fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if p.ctx() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = LaurentPoly::zero(&self.ctx);
        for (i, g) in self.images.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let dp = p.partial(i);
            if !dp.is_zero() {
                out = &out + &(g * &dp);
            }
        }
        Ok(out)
    }
}
