//! Faithfulness index and Bézout construction of monomial slices.
//!
//! For a diagonal derivation with weights λ, the monomial
//! `s = ∏ xᵢ^{mᵢ}` has weight `Σ mᵢλᵢ`. Choosing `m` as Bézout coefficients of
//! the nonzero weights gives `D(s) = g·s` with `g` the gcd; `s` lives in the
//! localization at `f = ∏_{mᵢ<0} xᵢ^{−mᵢ}`.

use crate::derivation::{Derivation, DiagonalDerivation};
use crate::error::{Error, Result};
use crate::laurent::{ExpVec, LaurentPoly};
use crate::numtheory::{bezout_multi, gcd, Rat};

/// A monomial `s` with `D(s) = g·s` together with its localization
/// denominator `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceData {
    pub g: i64,
    /// Bézout exponent per variable; 0 on zero-weight variables.
    pub m: Vec<i64>,
    pub s: LaurentPoly,
    pub f: LaurentPoly,
}

impl SliceData {
    /// True when `D(s) = s`, i.e. the associated action is faithful.
    pub fn is_slice(&self) -> bool {
        self.g == 1
    }

    /// Present when `g > 1`: the action factors through `t ↦ t^g`.
    pub fn warning(&self) -> Option<String> {
        (self.g > 1).then(|| {
            format!(
                "action is not faithful; action factors through t -> t^{}; s has weight {}",
                self.g, self.g
            )
        })
    }
}

/// gcd of the nonzero weights; 1 exactly when the associated action is
/// faithful.
pub fn faithfulness_index(d: &DiagonalDerivation) -> Result<i64> {
    let g = d.weights().iter().fold(0, |acc, &w| gcd(acc, w));
    if g == 0 {
        Err(Error::NoNonzeroWeights)
    } else {
        Ok(g)
    }
}

pub fn build_slice(d: &DiagonalDerivation) -> Result<SliceData> {
    let ctx = d.ctx();
    let support: Vec<usize> = (0..ctx.n()).filter(|&i| d.weights()[i] != 0).collect();
    if support.is_empty() {
        return Err(Error::NoNonzeroWeights);
    }
    let lambdas: Vec<i64> = support.iter().map(|&i| d.weights()[i]).collect();
    let bez = bezout_multi(&lambdas)?;
    let mut m = vec![0i64; ctx.n()];
    for (k, &i) in support.iter().enumerate() {
        m[i] = bez.coeffs[k];
    }
    let s = LaurentPoly::monomial(ctx, ExpVec::new(m.clone()), Rat::one());
    let f_exp: Vec<i64> = m.iter().map(|&e| if e < 0 { -e } else { 0 }).collect();
    let f = LaurentPoly::monomial(ctx, ExpVec::new(f_exp), Rat::one());
    debug_assert_eq!(d.apply(&s)?, s.scale(&Rat::from(bez.g)));
    Ok(SliceData { g: bez.g, m, s, f })
}

/// True iff `D(s) = s`.
pub fn verify_slice(d: &DiagonalDerivation, s: &LaurentPoly) -> Result<bool> {
    if s.is_zero() {
        return Err(Error::InvalidArgument("slice candidate is zero".into()));
    }
    Ok(&d.apply(s)? == s)
}
