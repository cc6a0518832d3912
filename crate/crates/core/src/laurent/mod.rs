//! Sparse Laurent polynomials over ℚ.
//!
//! A [`LaurentPoly`] is a finite map from integer exponent vectors to nonzero
//! rational coefficients, tied to a [`RingCtx`] naming the variables.
//! Negative exponents are allowed everywhere, so localizations at monomials
//! live in the same type as the polynomial ring itself.

mod parser;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numtheory::Rat;

pub use parser::parse;

/// Ordered, named variables of a Laurent polynomial ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingCtx {
    vars: Arc<[String]>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingCtx {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidContext("no variables".into()));
        }
        let mut vars: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("bad variable name {name:?}")));
            }
            if vars.iter().any(|v| v == name) {
                return Err(Error::InvalidContext(format!("duplicate variable {name}")));
            }
            vars.push(name.to_string());
        }
        Ok(RingCtx { vars: vars.into() })
    }

    /// Variables `prefix1, …, prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        RingCtx::new(&names)
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

impl fmt::Debug for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingCtx{:?}", &*self.vars)
    }
}

/// Integer exponent vector of a Laurent monomial. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Vec<i64>);

impl ExpVec {
    pub fn new(exps: Vec<i64>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(a, l)| a * l).sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i64) -> ExpVec {
        ExpVec(self.0.iter().map(|e| e * k).collect())
    }
}

impl From<Vec<i64>> for ExpVec {
    fn from(v: Vec<i64>) -> Self {
        ExpVec(v)
    }
}

impl From<&[i64]> for ExpVec {
    fn from(v: &[i64]) -> Self {
        ExpVec(v.to_vec())
    }
}

impl std::ops::Index<usize> for ExpVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &ExpVec {
    type Output = ExpVec;
    fn add(self, rhs: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExpVec {
    type Output = ExpVec;
    fn sub(self, rhs: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Element of ℚ[x₁^{±1},…,x_n^{±1}].
///
/// Invariant: no stored coefficient is zero and every key has length
/// `ctx.n()`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ctx: RingCtx,
    terms: BTreeMap<ExpVec, Rat>,
}

impl LaurentPoly {
    pub fn zero(ctx: &RingCtx) -> Self {
        LaurentPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &RingCtx) -> Self {
        Self::constant(ctx, Rat::one())
    }

    pub fn constant(ctx: &RingCtx, c: Rat) -> Self {
        Self::monomial(ctx, ExpVec::zero(ctx.n()), c)
    }

    pub fn var(ctx: &RingCtx, i: usize) -> Self {
        Self::monomial(ctx, ExpVec::unit(ctx.n(), i), Rat::one())
    }

    /// `c·x^exp`. Panics if `exp` has the wrong length.
    pub fn monomial(ctx: &RingCtx, exp: ExpVec, c: Rat) -> Self {
        assert_eq!(exp.len(), ctx.n(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { ctx: ctx.clone(), terms }
    }

    /// Builds a polynomial from terms, merging repeated exponents and
    /// dropping zero coefficients.
    pub fn from_terms<I>(ctx: &RingCtx, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExpVec, Rat)>,
    {
        let mut out = LaurentPoly::zero(ctx);
        for (e, c) in terms {
            if e.len() != ctx.n() {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector {e:?} has length {} in a ring of {} variables",
                    e.len(),
                    ctx.n()
                )));
            }
            out.add_term(e, &c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, exp: ExpVec, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: descending lexicographic by exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &Rat)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exp: &ExpVec) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// The single term of a monomial, or `None` for zero and multi-term
    /// polynomials.
    pub fn as_monomial(&self) -> Option<(&ExpVec, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(ExpVec::is_zero)
    }

    /// True when every exponent is nonnegative, i.e. the element lies in the
    /// polynomial ring.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(ExpVec::is_nonnegative)
    }

    /// Maximum total degree over the terms; `None` for zero.
    pub fn max_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(ExpVec::total_degree).max()
    }

    fn check_ctx(&self, other: &LaurentPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(other)?;
        let mut out = LaurentPoly::zero(&self.ctx);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.ctx);
        }
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by `c·x^exp`.
    pub fn mul_monomial(&self, exp: &ExpVec, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.ctx);
        }
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, k)| (e + exp, k * c)).collect(),
        }
    }

    /// Integer power. Negative powers exist only for monomials, the units of
    /// the Laurent ring.
    pub fn pow(&self, k: i64) -> Result<LaurentPoly> {
        if k < 0 {
            let Some((e, c)) = self.as_monomial() else {
                return Err(Error::NotAUnit(self.to_string()));
            };
            return Ok(LaurentPoly::monomial(&self.ctx, e.scaled(k), c.pow(k)?));
        }
        if let Some((e, c)) = self.as_monomial() {
            return Ok(LaurentPoly::monomial(&self.ctx, e.scaled(k), c.pow(k)?));
        }
        let mut result = LaurentPoly::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// ∂/∂xᵢ, with ∂(xᵢ^m)/∂xᵢ = m·xᵢ^{m−1} for every integer m.
    pub fn partial(&self, i: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.ctx);
        for (e, c) in &self.terms {
            let m = e[i];
            if m == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[i] -= 1;
            out.add_term(ne, &(c * &Rat::from(m)));
        }
        out
    }

    /// Ring homomorphism sending the i-th variable to `images[i]`.
    ///
    /// All images must share one target context. A negative exponent on a
    /// variable whose image is not a monomial fails with [`Error::NotAUnit`].
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.ctx.n() {
            return Err(Error::InvalidArgument(format!(
                "expected {} images, got {}",
                self.ctx.n(),
                images.len()
            )));
        }
        let target = images[0].ctx().clone();
        if images.iter().any(|im| im.ctx() != &target) {
            return Err(Error::ContextMismatch);
        }
        let mut cache: Vec<BTreeMap<i64, LaurentPoly>> = vec![BTreeMap::new(); images.len()];
        let mut out = LaurentPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(&target, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !cache[i].contains_key(&k) {
                    let p = images[i].pow(k)?;
                    cache[i].insert(k, p);
                }
                term = &term * &cache[i][&k];
            }
            for (te, tc) in term.terms {
                out.add_term(te, &tc);
            }
        }
        Ok(out)
    }

    /// Same terms reinterpreted in another context with the same number of
    /// variables.
    pub fn with_ctx(&self, ctx: &RingCtx) -> Result<LaurentPoly> {
        if ctx.n() != self.ctx.n() {
            return Err(Error::ContextMismatch);
        }
        Ok(LaurentPoly { ctx: ctx.clone(), terms: self.terms.clone() })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if !abs.is_one() || e.is_zero() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ctx.name(i))?;
                if k != 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// Operator forms panic on a context mismatch; use the `try_*` methods at API
// boundaries.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("ring context mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("ring context mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("ring context mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Rat::from(-1))
    }
}
