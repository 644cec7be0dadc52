//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use harmcert::certsuite::{find_m3, run_claims, threshold_bracket, ClaimSelection};
use harmcert::hankel::{
    a_from_c, c_from_p, gamma_inv, h21_from_schwarz, h21_inv, h21_inv_rational, inverse_coeffs,
    inverse_coeffs_rational, maximize_h21, sharp_bound, y_closed, y_oracle, CoeffTriple,
    MaximizerConfig, SchwarzTriple, YParams,
};
use harmcert::harmonic::{
    check_coefficient_bounds, check_membership, d_operator, extremal_map, growth_envelope,
    jacobian_check, sufficient_margin, ClassParams, HarmonicPolynomialMap, MembershipStatus,
};
use harmcert::hypergeom::{f21_integral, f21_ratio, starlike_radius, AlphaParam};
use harmcert::polycert::Verdict;

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

const SWEEP: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.427617, 0.45, 0.5, 0.6, 0.7213];

#[test]
fn criterion_1_maximizer_reproduces_sharp_bound() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for &m in &SWEEP {
        let got = maximize_h21(m, &MaximizerConfig::default()).expect("in range");
        let want = sharp_bound(m).expect("in range").value;
        worst = worst.max((got.max_abs - want).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "1 (maximizer vs sharp bound, 9 m values)",
        worst <= 5e-4 && elapsed <= 300.0,
        &format!("worst |gap| = {worst:.3e}, {elapsed:.1}s"),
    );
}

#[test]
fn criterion_2_certification_ledger_all_certified() {
    let start = Instant::now();
    let reports = run_claims(&ClaimSelection::All).expect("ledger runs");
    let elapsed = start.elapsed().as_secs_f64();
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| r.verdict != Verdict::Certified)
        .map(|r| format!("{} -> {:?}", r.claim_id, r.verdict))
        .collect();
    report(
        "2 (certification ledger)",
        failures.is_empty() && elapsed <= 120.0,
        &format!(
            "{} claims, discrepancies: [{}], {elapsed:.1}s",
            reports.len(),
            failures.join(", ")
        ),
    );
}

#[test]
fn criterion_3_threshold_and_crossing_constants() {
    let (lo, hi) = threshold_bracket().expect("bracket exists");
    let width = (&hi - &lo).to_f64().expect("finite");
    let mid = ((&lo + &hi) / BigRational::from_integer(2.into()))
        .to_f64()
        .expect("finite");
    let exact = (6.0 + 114.0_f64.sqrt()) / 39.0;
    let threshold_ok = width <= 1e-9 && (mid - exact).abs() <= 1e-9 && (mid - 0.427617).abs() < 1e-6;

    let bracket = find_m3().expect("sign change");
    let m3_ok = (bracket.midpoint - 0.423458).abs() <= 5e-6 && bracket.hi - bracket.lo <= 1e-8;
    report(
        "3 (threshold and crossing-point constants)",
        threshold_ok && m3_ok,
        &format!("threshold mid = {mid:.10}, crossing mid = {:.8}", bracket.midpoint),
    );
}

#[test]
fn criterion_4_disk_max_closed_form_vs_oracle() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(20_240_817);
    let mut worst_under: f64 = 0.0; // oracle above closed form: must stay ~0
    let mut worst_over: f64 = 0.0; // closed form above refined oracle: <= 1e-4
    for _ in 0..10_000 {
        let y = YParams {
            a: rng.gen_range(-2.0..2.0),
            b: rng.gen_range(-2.0..2.0),
            c: rng.gen_range(-2.0..2.0),
        };
        let closed = y_closed(&y);
        let oracle = y_oracle(&y, 128).expect("resolution ok");
        worst_under = worst_under.max(oracle - closed);
        worst_over = worst_over.max(closed - oracle);
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "4 (disk-maximum closed form vs grid oracle, 1e4 triples)",
        worst_under <= 1e-9 && worst_over <= 1e-4 && elapsed <= 120.0,
        &format!("oracle-closed = {worst_under:.2e}, closed-oracle = {worst_over:.2e}, {elapsed:.1}s"),
    );
}

#[test]
fn criterion_5_radius_solver() {
    let mut ok = true;
    let mut detail = String::new();
    for &m in &[0.25, 0.5, 1.0, 2.0] {
        let sol = starlike_radius(AlphaParam::new(1.0).unwrap(), m).expect("solves");
        let closed = 1.0 - (-1.0 / (2.0 * m)).exp();
        ok &= (sol.r1 - closed).abs() <= 1e-10;
        ok &= sol.residual.abs() < 1e-12;
    }
    // Cross-method agreement across the test grid.
    let mut worst: f64 = 0.0;
    for &a in &[0.1, 0.25, 0.5, 0.75, 1.0] {
        let alpha = AlphaParam::new(a).unwrap();
        for k in 0..=9 {
            let r = 0.1 * f64::from(k);
            let s = f21_ratio(alpha, r).expect("in range");
            let q = f21_integral(alpha, r).expect("in range");
            worst = worst.max((s - q).abs());
        }
    }
    ok &= worst <= 1e-9;
    // Residuals below 1e-12 for non-closed-form parameters too.
    for &(a, m) in &[(0.5, 1.0), (0.25, 0.7), (0.75, 1.5)] {
        let sol = starlike_radius(AlphaParam::new(a).unwrap(), m).expect("solves");
        ok &= sol.residual.abs() < 1e-12 && sol.r1 > 0.0 && sol.r1 < 1.0;
        let _ = std::fmt::write(
            &mut detail,
            format_args!("r1({a},{m})={:.6} ", sol.r1),
        );
    }
    report(
        "5 (radius solver and hypergeometric routes)",
        ok,
        &format!("max route disagreement = {worst:.2e}; {detail}"),
    );
}

#[test]
fn criterion_6_functional_identities() {
    let mut rng = StdRng::seed_from_u64(61);
    let mut worst_identity: f64 = 0.0;
    let mut worst_pipeline: f64 = 0.0;
    let mut worst_rotation: f64 = 0.0;
    let rand_c = |rng: &mut StdRng| {
        Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
    };
    for _ in 0..10_000 {
        let a = CoeffTriple::new(rand_c(&mut rng), rand_c(&mut rng), rand_c(&mut rng));
        let (g1, g2, g3) = gamma_inv(&a);
        worst_identity = worst_identity.max((g1 * g3 - g2 * g2 - h21_inv(&a)).norm());

        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let e = |k: f64| Complex64::from_polar(1.0, k * theta);
        let rotated = CoeffTriple::new(a.a2 * e(1.0), a.a3 * e(2.0), a.a4 * e(3.0));
        worst_rotation =
            worst_rotation.max((h21_inv(&rotated) - h21_inv(&a) * e(4.0)).norm());

        let m = rng.gen_range(0.01..0.7213);
        let t = SchwarzTriple::new(
            rng.gen_range(0.0..=1.0),
            Complex64::from_polar(rng.gen_range(0.0..=1.0f64), rng.gen_range(0.0..std::f64::consts::TAU)),
            Complex64::from_polar(rng.gen_range(0.0..=1.0f64), rng.gen_range(0.0..std::f64::consts::TAU)),
        )
        .expect("valid triple");
        worst_pipeline = worst_pipeline
            .max((h21_inv(&a_from_c(m, c_from_p(&t))) - h21_from_schwarz(m, &t)).norm());
    }
    report(
        "6 (functional identities, 1e4 random inputs)",
        worst_identity <= 1e-12 && worst_pipeline <= 1e-12 && worst_rotation <= 1e-12,
        &format!(
            "identity {worst_identity:.2e}, pipeline {worst_pipeline:.2e}, rotation {worst_rotation:.2e}"
        ),
    );
}

#[test]
fn criterion_7_koebe_spot_values_exact() {
    let r = |n: i64| BigRational::from_integer(n.into());
    let (a2, a3, a4) = inverse_coeffs_rational(&r(2), &r(3), &r(4));
    let exact_inverse = (a2, a3, a4) == (r(-2), r(5), r(-14));
    let exact_h21 = h21_inv_rational(&r(2), &r(3), &r(4)) == BigRational::new(13.into(), 12.into());
    // Float route agrees bit-for-bit on these integer inputs.
    let k = CoeffTriple::real(2.0, 3.0, 4.0);
    let (f2, f3, f4) = inverse_coeffs(&k);
    let float_ok = (f2.re, f3.re, f4.re) == (-2.0, 5.0, -14.0);
    report(
        "7 (Koebe spot values, exact rational mode)",
        exact_inverse && exact_h21 && float_ok,
        "inverse coefficients (-2, 5, -14); determinant 13/12",
    );
}

fn random_member(rng: &mut StdRng, params: &ClassParams) -> HarmonicPolynomialMap {
    let terms = rng.gen_range(1..=5usize);
    let mut a = vec![Complex64::default(); terms];
    let mut b = vec![Complex64::default(); terms];
    for i in 0..terms {
        a[i] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        b[i] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    let mut f = HarmonicPolynomialMap { a, b };
    let margin = sufficient_margin(&f, params) + params.m();
    // Rescale so the weighted coefficient sum lands at a random fraction of m.
    let scale = params.m() * rng.gen_range(0.05..=1.0) / margin;
    for c in f.a.iter_mut().chain(f.b.iter_mut()) {
        *c *= scale;
    }
    f
}

#[test]
fn criterion_8_harmonic_class_properties() {
    let mut rng = StdRng::seed_from_u64(88);
    let mut ok = true;
    let mut growth_checked = 0usize;
    for _ in 0..200 {
        let params = ClassParams::new(rng.gen_range(0.05..=1.0), rng.gen_range(0.2..2.0)).unwrap();
        let f = random_member(&mut rng, &params);
        assert!(sufficient_margin(&f, &params) <= 1e-12);
        let verdict = check_membership(&f, &params, 1024).expect("samples ok");
        ok &= verdict.status == MembershipStatus::MemberUpToSampling;
        ok &= check_coefficient_bounds(&f, &params).pass;
        ok &= jacobian_check(&f, &params, 512).expect("samples ok").pass;
        for _ in 0..50 {
            let z = Complex64::from_polar(
                rng.gen_range(0.0..0.999),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            let (lo, hi) = growth_envelope(params.m(), z.norm()).expect("radius ok");
            let v = f.eval(z).norm();
            ok &= v <= hi + 1e-9 && v >= lo - 1e-9;
            growth_checked += 1;
        }
    }
    // Extremal boundary modulus pins the class constant.
    for &(n, alpha, m) in &[(2usize, 0.5, 1.0), (3, 1.0, 0.7), (5, 0.25, 1.3)] {
        let params = ClassParams::new(alpha, m).unwrap();
        for &conj in &[false, true] {
            let f = extremal_map(n, &params, conj).unwrap();
            let mut sup: f64 = 0.0;
            for k in 0..512 {
                let z = Complex64::from_polar(1.0, std::f64::consts::TAU * (k as f64) / 512.0);
                let (dh, dg) = d_operator(&f, &params, z);
                sup = sup.max(dh.norm() + dg.norm());
            }
            ok &= (sup - m).abs() <= 1e-9;
        }
    }
    // A one-percent inflation of the extremal coefficient is refuted.
    let params = ClassParams::new(0.5, 1.0).unwrap();
    let mut inflated = extremal_map(3, &params, false).unwrap();
    inflated.a[1] *= 1.01;
    let verdict = check_membership(&inflated, &params, 1024).expect("samples ok");
    ok &= verdict.status == MembershipStatus::Refuted && verdict.witness_theta.is_some();
    report(
        "8 (harmonic-class properties, 200 random members)",
        ok,
        &format!("{growth_checked} growth samples, extremal modulus pinned, inflation refuted"),
    );
}
