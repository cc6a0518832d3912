#![allow(dead_code)]

use proptest::prelude::*;
use semideriv::{ExpVec, LaurentPoly, Rat, RingCtx};

pub fn ctx(n: usize) -> RingCtx {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "t"];
    RingCtx::new(&NAMES[..n]).unwrap()
}

pub type RawPoly = Vec<(Vec<i64>, i64, i64)>;

pub fn raw_poly(n: usize, max_terms: usize, lo: i64, hi: i64) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (prop::collection::vec(lo..=hi, n), -20i64..=20, 1i64..=6),
        0..=max_terms,
    )
}

pub fn build(ctx: &RingCtx, raw: &RawPoly) -> LaurentPoly {
    LaurentPoly::from_terms(
        ctx,
        raw.iter().map(|(e, num, den)| (ExpVec::new(e.clone()), Rat::new(*num, *den).unwrap())),
    )
    .unwrap()
}

/// Single monomial with a nonzero coefficient.
pub fn raw_monomial(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = (Vec<i64>, i64, i64)> {
    (
        prop::collection::vec(lo..=hi, n),
        (-9i64..=9).prop_filter("nonzero", |c| *c != 0),
        1i64..=4,
    )
}

pub fn build_monomial(ctx: &RingCtx, m: &(Vec<i64>, i64, i64)) -> LaurentPoly {
    LaurentPoly::monomial(ctx, ExpVec::new(m.0.clone()), Rat::new(m.1, m.2).unwrap())
}

/// Raw data for a triangular automorphism `xᵢ ↦ cᵢ·xᵢ + hᵢ(x₀,…,x_{i−1})`.
pub type RawTriangular = Vec<((i64, i64), RawPoly)>;

pub fn raw_triangular(n: usize) -> impl Strategy<Value = RawTriangular> {
    (0..n)
        .map(|i| {
            let scale = ((-3i64..=3).prop_filter("nonzero", |c| *c != 0), 1i64..=3);
            // exponents only in earlier variables
            let h = prop::collection::vec(
                (prop::collection::vec(0i64..=2, i), -5i64..=5, 1i64..=3),
                0..=3,
            )
            .prop_map(move |terms| {
                terms
                    .into_iter()
                    .map(|(mut e, a, b)| {
                        e.resize(n, 0);
                        (e, a, b)
                    })
                    .collect::<RawPoly>()
            });
            (scale, h).boxed()
        })
        .collect::<Vec<_>>()
}

/// Returns `(φ, ψ)` with `ψ = φ⁻¹`, solving the triangular system variable
/// by variable.
pub fn triangular_pair(ctx: &RingCtx, raw: &RawTriangular) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let n = ctx.n();
    let mut phi = Vec::with_capacity(n);
    let mut psi: Vec<LaurentPoly> = Vec::with_capacity(n);
    for (i, ((a, b), h)) in raw.iter().enumerate() {
        let c = Rat::new(*a, *b).unwrap();
        let h = build(ctx, h);
        let x = LaurentPoly::var(ctx, i);
        phi.push(&x.scale(&c) + &h);
        // ψ(xᵢ) = (xᵢ − h(ψ(x₀), …, ψ(x_{i−1}))) / c
        let mut partial: Vec<LaurentPoly> = psi.clone();
        partial.extend((i..n).map(|j| LaurentPoly::var(ctx, j)));
        let h_psi = h.substitute(&partial).unwrap();
        psi.push((&x - &h_psi).scale(&c.recip().unwrap()));
    }
    (phi, psi)
}
