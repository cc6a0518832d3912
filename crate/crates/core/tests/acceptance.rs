//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints a PASS/FAIL line; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semideriv::cli::{cmd_check, cmd_kernel, KernelMode, Law, ProblemFile};
use semideriv::derivation::{local_finiteness_probe, Derivation, DiagonalDerivation, FinitenessVerdict, GeneralDerivation};
use semideriv::kernel::{
    brute_force_kernel, hilbert_basis, kernel_generators_localized, kernel_in_b, minimal_elements,
    unrepresentable, KernelGenerators,
};
use semideriv::numtheory::gcd;
use semideriv::{bezout_multi, build_slice, parse, ExpVec, LaurentPoly, Rat, RingCtx};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const TIME_LIMIT: Duration = Duration::from_secs(5);

fn ctx(n: usize) -> RingCtx {
    RingCtx::new(&["x", "y", "z", "w", "v", "t"][..n]).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0, |a, &x| gcd(a, x))
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize, m: i64) -> Vec<i64> {
    loop {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-m..=m)).collect();
        if w.iter().any(|&x| x != 0) {
            return w;
        }
    }
}

/// Random element with `terms` terms and exponents in `[lo, hi]`, total
/// degree at most `max_deg` when `lo ≥ 0`.
fn random_poly(rng: &mut ChaCha8Rng, ctx: &RingCtx, terms: usize, lo: i64, hi: i64, max_deg: i64) -> LaurentPoly {
    let n = ctx.n();
    let mut out = Vec::new();
    while out.len() < terms {
        let e: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        if e.iter().sum::<i64>() > max_deg {
            continue;
        }
        let c = Rat::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)).unwrap();
        out.push((ExpVec::new(e), c));
    }
    LaurentPoly::from_terms(ctx, out).unwrap()
}

fn kernel_in_b_lines(vars: &str, weights: &str) -> Vec<String> {
    let pf = ProblemFile::parse(&format!("vars: {vars}\nweights: {weights}\n")).unwrap();
    cmd_kernel(&pf, KernelMode::InB, None).unwrap().lines
}

/// Weights (1,−1): `kernel --in-B` prints exactly `x*y`, and the brute-force
/// oracle to degree 10 finds only multiples of (1,1).
fn criterion_1() -> Outcome {
    let lines = kernel_in_b_lines("x y", "1 -1");
    check(lines == ["x*y"], || format!("kernel --in-B printed {lines:?}"))?;
    let sols = brute_force_kernel(&[1, -1], 10);
    check(sols.iter().all(|a| a[0] == a[1]), || "non-diagonal weight-zero exponent".into())?;
    check(sols.len() == 6, || format!("expected 6 solutions to degree 10, got {}", sols.len()))?;
    let hb = hilbert_basis(&[1, -1]);
    check(unrepresentable(&sols, &hb.gens).is_empty(), || "solution not generated by (1,1)".into())?;
    Ok(format!("{{x*y}}; {} oracle solutions, all multiples of (1,1)", sols.len()))
}

/// (xy)·D with D = (1,−1): aD check says NO; the probe with bound 4 certifies
/// non-local-finiteness with chain degrees 1,3,5,7.
fn criterion_2() -> Outcome {
    let c = ctx(2);
    let d = DiagonalDerivation::new(&c, vec![1, -1]).unwrap();
    let a = parse("x*y", &c).unwrap();
    check(d.scalar_multiple_semisimple(&a) == Ok(false), || "aD reported semisimple".into())?;
    let pf = ProblemFile::parse("vars: x y\nweights: 1 -1\nquery: x*y\n").unwrap();
    let report = cmd_check(&pf, Law::ScalarMultiple).unwrap();
    check(report.lines.iter().any(|l| l == "aD semisimple: NO (a not constant)"), || {
        format!("report {:?}", report.lines)
    })?;
    let delta = GeneralDerivation::new(
        &c,
        vec![&a * &LaurentPoly::var(&c, 0), -&(&a * &LaurentPoly::var(&c, 1))],
    )
    .unwrap();
    check(delta.images()[0] == parse("x^2*y", &c).unwrap(), || "delta(x) != x^2*y".into())?;
    let verdict = local_finiteness_probe(&delta, 4).unwrap();
    let FinitenessVerdict::CertifiedNotLocallyFinite(w) = &verdict else {
        return Err(format!("verdict {verdict:?}"));
    };
    check(w.degrees() == [1, 3, 5, 7], || format!("degrees {:?}", w.degrees()))?;
    check(verdict.verify(&delta).unwrap(), || "witness failed verification".into())?;
    Ok("aD: NO; witness degrees 1,3,5,7".into())
}

/// 300 random weight vectors: D(s) = g·s exactly with g the gcd, and
/// D(s) = s whenever g = 1.
fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut faithful = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=5);
        let w = random_weights(&mut rng, n, 9);
        let d = DiagonalDerivation::new(&ctx(n), w.clone()).unwrap();
        let sd = build_slice(&d).unwrap();
        let g = gcd_all(&w);
        check(sd.g == g, || format!("{w:?}: g {} != gcd {g}", sd.g))?;
        let ds = d.apply(&sd.s).unwrap();
        check(ds == sd.s.scale(&Rat::from(g)), || format!("{w:?}: D(s) = {ds}, s = {}", sd.s))?;
        if g == 1 {
            faithful += 1;
            check(ds == sd.s, || format!("{w:?}: D(s) != s"))?;
        }
    }
    Ok(format!("300 vectors, {faithful} faithful"))
}

/// Weights (2,−3), s = x²y: u = (x⁻³y⁻², x⁶y⁴), both invariant, and
/// u₁·u₂ = x³y² is the single `kernel --in-B` generator.
fn criterion_4() -> Outcome {
    let c = ctx(2);
    let d = DiagonalDerivation::new(&c, vec![2, -3]).unwrap();
    let s = parse("x^2*y", &c).unwrap();
    let gens = kernel_generators_localized(&d, &s).unwrap();
    let expected = [parse("x^-3*y^-2", &c).unwrap(), parse("x^6*y^4", &c).unwrap()];
    check(gens.u == expected, || format!("u = {:?}", gens.u))?;
    for u in &gens.u {
        check(d.apply(u).unwrap().is_zero(), || format!("D({u}) != 0"))?;
    }
    let product = &gens.u[0] * &gens.u[1];
    let lines = kernel_in_b_lines("x y", "2 -3");
    check(lines == [product.to_string()], || format!("u1*u2 = {product}, kernel --in-B = {lines:?}"))?;
    check(kernel_in_b(&d) == [product.clone()], || "library kernel_in_b differs".into())?;
    Ok(format!("u = ({}, {}); u1*u2 = {product}", gens.u[0], gens.u[1]))
}

/// 200 random (D, p) with gcd 1, deg p ≤ 6, n ≤ 4: slice coordinates
/// followed by uᵢ ↦ xᵢs^{−λᵢ} reproduce p exactly.
fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(1..=4);
        let w = random_weights(&mut rng, n, 6);
        if gcd_all(&w) != 1 {
            continue;
        }
        let c = ctx(n);
        let d = DiagonalDerivation::new(&c, w.clone()).unwrap();
        let s = build_slice(&d).unwrap().s;
        let gens = KernelGenerators::new(&d, &s).unwrap();
        let terms = rng.gen_range(0..=6);
        let p = random_poly(&mut rng, &c, terms, 0, 6, 6);
        let coords = gens.coordinates(&p).unwrap();
        let back = gens.reconstruct(&coords).unwrap();
        check(back == p, || format!("{w:?}: {p} reconstructed as {back}"))?;
        done += 1;
    }
    Ok("200 random instances reconstructed exactly".into())
}

/// Every weight vector with n ≤ 3 and entries in [−4,4]: minimal brute-force
/// solutions equal the completion output, and every brute-force solution is
/// an ℕ-combination of it.
fn criterion_6() -> Outcome {
    let mut count = 0;
    let mut vectors_n3 = 0;
    for n in 1..=3u32 {
        for code in 0..9i64.pow(n) {
            let w: Vec<i64> = (0..n).map(|k| (code / 9i64.pow(k)) % 9 - 4).collect();
            let m = w.iter().map(|x| x.abs()).max().unwrap();
            // at least degree 1 so that zero-weight unit vectors are seen
            let bound = (i64::from(n) * m * (m + 1)).max(1);
            let hb = hilbert_basis(&w);
            if let Some(top) = hb.max_degree() {
                check(top <= bound, || format!("{w:?}: basis degree {top} > bound {bound}"))?;
            }
            let sols = brute_force_kernel(&w, bound as u32);
            let minimal = minimal_elements(&sols);
            check(minimal == hb.gens, || format!("{w:?}: oracle {minimal:?} vs completion {:?}", hb.gens))?;
            let missing = unrepresentable(&sols, &hb.gens);
            check(missing.is_empty(), || format!("{w:?}: not generated: {:?}", &missing[..1]))?;
            count += 1;
            if n == 3 {
                vectors_n3 += 1;
            }
        }
    }
    Ok(format!("{count} weight vectors ({vectors_n3} with n = 3)"))
}

/// 200 random p: preimage found exactly when the weight-0 component
/// vanishes; the constant 1 is always rejected.
fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut accepted, mut rejected) = (0, 0);
    for i in 0..200 {
        let n = rng.gen_range(1..=4);
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-4i64..=4)).collect();
        let c = ctx(n);
        let d = DiagonalDerivation::new(&c, w.clone()).unwrap();
        let terms = rng.gen_range(0..=6);
        let mut p = random_poly(&mut rng, &c, terms, -3, 3, i64::MAX);
        if i % 2 == 0 {
            // drop the weight-0 part for half the samples
            if let Some(z) = d.weight_decompose(&p).unwrap().component(0) {
                p = &p - z;
            }
        }
        let zero_part = d.weight_decompose(&p).unwrap().component(0).is_some();
        let m = d.image_decompose(&p).unwrap();
        if zero_part {
            check(!m.in_image && m.preimage.is_none(), || format!("{w:?}: {p} accepted"))?;
            rejected += 1;
        } else {
            let pre = m.preimage.ok_or_else(|| format!("{w:?}: {p} rejected"))?;
            check(m.in_image && d.apply(&pre).unwrap() == p, || format!("{w:?}: D({pre}) != {p}"))?;
            accepted += 1;
        }
        let one = d.image_decompose(&LaurentPoly::one(&c)).unwrap();
        check(!one.in_image, || format!("{w:?}: 1 accepted"))?;
    }
    Ok(format!("{accepted} preimages verified, {rejected} rejected"))
}

/// Random triangular automorphism of ℚ[x, y] and its inverse.
fn random_triangular(rng: &mut ChaCha8Rng, c: &RingCtx) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let a = loop {
        let k = rng.gen_range(-3i64..=3);
        if k != 0 {
            break Rat::new(k, rng.gen_range(1i64..=3)).unwrap();
        }
    };
    let b = loop {
        let k = rng.gen_range(-3i64..=3);
        if k != 0 {
            break Rat::new(k, rng.gen_range(1i64..=3)).unwrap();
        }
    };
    let mut h = LaurentPoly::zero(c);
    for _ in 0..rng.gen_range(0..=3) {
        let e = ExpVec::new(vec![rng.gen_range(0..=4), 0]);
        h = &h + &LaurentPoly::monomial(c, e, Rat::new(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)).unwrap());
    }
    let (x, y) = (LaurentPoly::var(c, 0), LaurentPoly::var(c, 1));
    let phi = vec![x.scale(&a), &y.scale(&b) + &h];
    // ψ(x) = x/a, ψ(y) = (y − h(x/a))/b
    let psi_x = x.scale(&a.recip().unwrap());
    let h_psi = h.substitute(&[psi_x.clone(), y.clone()]).unwrap();
    let psi = vec![psi_x, (&y - &h_psi).scale(&b.recip().unwrap())];
    (phi, psi)
}

/// D = (1,3), φ: y ↦ y + x²: D′(y + x²) = 3(y + x²); eigenbasis transported
/// for 100 random triangular automorphisms.
fn criterion_8() -> Outcome {
    let c = ctx(2);
    let d = DiagonalDerivation::new(&c, vec![1, 3]).unwrap();
    let p = |s: &str| parse(s, &c).unwrap();
    let conj = GeneralDerivation::conjugate(&d, &[p("x"), p("y + x^2")], &[p("x"), p("y - x^2")]).unwrap();
    let got = conj.apply(&p("y + x^2")).unwrap();
    check(got == p("3*(y + x^2)"), || format!("D'(y + x^2) = {got}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let (phi, psi) = random_triangular(&mut rng, &c);
        let conj = GeneralDerivation::conjugate(&d, &phi, &psi).map_err(|e| format!("{phi:?}: {e}"))?;
        for (i, ph) in phi.iter().enumerate() {
            let lhs = conj.apply(ph).unwrap();
            check(lhs == ph.scale(&Rat::from(d.weights()[i])), || format!("D'({ph}) = {lhs}"))?;
        }
    }
    Ok("D'(y + x^2) = 3*(y + x^2); 100 random automorphisms".into())
}

/// Σ mᵢλᵢ = gcd on 1000 random vectors.
fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let len = rng.gen_range(1..=6);
        let v = random_weights(&mut rng, len, 50);
        let b = bezout_multi(&v).unwrap();
        check(b.combination(&v) == b.g && b.g == gcd_all(&v), || format!("{v:?}: {b:?}"))?;
    }
    Ok("1000 vectors".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 kernel of (1,-1) is generated by x*y", criterion_1),
        ("2 (xy)D is not semisimple", criterion_2),
        ("3 slice synthesis", criterion_3),
        ("4 localized kernel for (2,-3)", criterion_4),
        ("5 K = ker(D)(s) reconstruction", criterion_5),
        ("6 Hilbert basis vs brute force", criterion_6),
        ("7 image membership", criterion_7),
        ("8 conjugation eigenbasis", criterion_8),
        ("9 Bezout identity", criterion_9),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > TIME_LIMIT => Err(format!("{detail}; took {elapsed:.2?} > {TIME_LIMIT:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] criterion {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
