//! Acceptance suite: every release-gating criterion as one test, each printing
//! a single PASS line with its statistics (run with `--nocapture` to see them).
//!
//! Tolerances are pinned here and nowhere else; they are not tunable knobs.

use std::time::Instant;

use rayon::prelude::*;
use spheregap::quad::{DEFECT_TOL, IDENTITY_TOL, MODULUS_TOL};
use spheregap::{
    boltzmann_eigenvalue, builtin_kernels, certify_improved, certify_original, chebyshev_eval,
    count_roots, default_quad_n, defect_battery, eigenvalue_comparison, evaluate_float,
    gap_polynomial, gap_scaling_identity, integral_eval, legendre_poly, poincare_constant,
    sturm_chain, telescoping_identity, total_gap_polynomial, Dimension, KernelSpec,
    NonnegCertificate, Poly, Rational, Verdict,
};

const ELL_MAX: u32 = 50;
const DIM_MAX: u32 = 20;

fn dims() -> Vec<Dimension> {
    (2..=DIM_MAX).map(|d| Dimension::new(d).unwrap()).collect()
}

fn grid() -> Vec<(u32, Dimension)> {
    let mut out = Vec::new();
    for ell in 1..=ELL_MAX {
        for d in dims() {
            out.push((ell, d));
        }
    }
    out
}

/// Serialize, parse back, and revalidate purely from the parsed fields.
fn roundtrip_revalidate(cert: &NonnegCertificate) {
    let json = serde_json::to_string(cert).expect("certificate serializes");
    let parsed: NonnegCertificate = serde_json::from_str(&json).expect("certificate parses");
    assert_eq!(&parsed, cert, "serialization must be lossless");
    parsed
        .revalidate()
        .expect("certificate re-validates from serialized fields");
}

#[test]
fn acceptance_01_certify_improved_full_grid() {
    let t0 = Instant::now();
    let grid = grid();
    let total = grid.len();
    grid.par_iter().for_each(|&(ell, d)| {
        let cert = certify_improved(ell, d).expect("certification runs");
        assert_eq!(
            cert.verdict,
            Verdict::CertifiedNonneg,
            "adjacent-pair inequality not certified at (ell={ell}, d={d})"
        );
        roundtrip_revalidate(&cert);
    });
    let dt = t0.elapsed();
    assert!(
        dt.as_secs_f64() <= 180.0,
        "certification sweep exceeded the 3-minute budget: {dt:?}"
    );
    println!(
        "ACCEPTANCE certify-improved: PASS ({total} certificates over ell ≤ {ELL_MAX}, \
         d ≤ {DIM_MAX}, all certified_nonneg and re-validated, {dt:?})"
    );
}

#[test]
fn acceptance_02_certify_original_full_grid() {
    let t0 = Instant::now();
    let grid = grid();
    let total = grid.len();
    grid.par_iter().for_each(|&(ell, d)| {
        let cert = certify_original(ell, d).expect("certification runs");
        let expected = if ell == 1 {
            Verdict::DegenerateZero
        } else {
            Verdict::CertifiedNonneg
        };
        assert_eq!(
            cert.verdict, expected,
            "cumulative inequality verdict wrong at (ell={ell}, d={d})"
        );
        roundtrip_revalidate(&cert);
    });
    let dt = t0.elapsed();
    println!(
        "ACCEPTANCE certify-original: PASS ({total} certificates, ell = 1 degenerate_zero, \
         rest certified_nonneg, all re-validated, {dt:?})"
    );
}

#[test]
fn acceptance_03_telescoping_identity_full_grid() {
    let t0 = Instant::now();
    dims().par_iter().for_each(|&d| {
        let mut running = Poly::zero();
        for ell in 1..=ELL_MAX {
            // `running` holds the sum of gap polynomials below `ell`.
            assert_eq!(
                running,
                total_gap_polynomial(ell, d),
                "telescoping fails at (ell={ell}, d={d})"
            );
            running = &running + &gap_polynomial(ell, d);
        }
        // The one-shot public check agrees with the incremental route.
        assert!(telescoping_identity(7, d));
    });
    println!(
        "ACCEPTANCE telescoping: PASS (exact for all ell ≤ {ELL_MAX}, d ≤ {DIM_MAX}, {:?})",
        t0.elapsed()
    );
}

#[test]
fn acceptance_04_gap_scaling_identity_full_grid() {
    let t0 = Instant::now();
    grid().par_iter().for_each(|&(ell, d)| {
        assert!(
            gap_scaling_identity(ell, d),
            "gap scaling identity fails at (ell={ell}, d={d})"
        );
    });
    println!(
        "ACCEPTANCE gap-scaling-identity: PASS (exact for all ell ≤ {ELL_MAX}, d ≤ {DIM_MAX}, {:?})",
        t0.elapsed()
    );
}

#[test]
fn acceptance_05_integral_representation_cross_validation() {
    let t0 = Instant::now();
    let worst = (3u32..=10)
        .into_par_iter()
        .map(|d| {
            let dim = Dimension::new(d).unwrap();
            let mut worst: f64 = 0.0;
            for ell in 0..=30u32 {
                let n = ell as usize + 10;
                for i in 0..=100 {
                    let x = -1.0 + 0.02 * i as f64;
                    let a = integral_eval(ell, dim, x, n).unwrap();
                    let b = evaluate_float(ell, dim, x).unwrap();
                    worst = worst.max((a - b).abs());
                }
            }
            worst
        })
        .reduce(|| 0.0, f64::max);
    assert!(
        worst <= 1e-10,
        "integral vs recurrence deviation {worst:e} exceeds 1e-10"
    );
    println!(
        "ACCEPTANCE integral-cross-validation: PASS (max deviation {worst:.3e} ≤ 1e-10 over \
         ell ≤ 30, d in [3,10], 101-point grid, {:?})",
        t0.elapsed()
    );
}

#[test]
fn acceptance_06_dimension_two_reduction() {
    let t0 = Instant::now();
    let dim2 = Dimension::new(2).unwrap();
    let mut worst: f64 = 0.0;
    for ell in 0..=100u32 {
        for i in 0..=180 {
            let theta = std::f64::consts::PI * i as f64 / 180.0;
            let a = evaluate_float(ell, dim2, theta.cos()).unwrap();
            let b = chebyshev_eval(ell, theta);
            worst = worst.max((a - b).abs());
        }
    }
    assert!(
        worst <= 1e-12,
        "d=2 reduction deviation {worst:e} exceeds 1e-12"
    );
    println!(
        "ACCEPTANCE d2-reduction: PASS (max |P_ell(cos θ) - cos(ell·θ)| = {worst:.3e} ≤ 1e-12 \
         over ell ≤ 100, 181-point grid, {:?})",
        t0.elapsed()
    );
}

#[test]
fn acceptance_07_pointwise_defect_battery() {
    let t0 = Instant::now();
    let report = defect_battery(100_000, 42, 40);
    let dt = t0.elapsed();
    assert!(
        report.worst_defect() >= DEFECT_TOL,
        "worst defect {:e} below {DEFECT_TOL:e}: {report:?}",
        report.worst_defect()
    );
    assert!(report.trig_rewrite.value <= IDENTITY_TOL, "{report:?}");
    assert!(
        report.re_square_identity.value <= IDENTITY_TOL,
        "{report:?}"
    );
    assert!(report.modulus_identity.value <= MODULUS_TOL, "{report:?}");
    assert!(report.modulus_overshoot.value <= MODULUS_TOL, "{report:?}");
    assert!(dt.as_secs_f64() <= 30.0, "battery exceeded 30 s: {dt:?}");
    println!(
        "ACCEPTANCE defect-battery: PASS (100000 seeded draws, ell ≤ 40, worst defect \
         {:+.3e} ≥ -1e-12, identity residuals ≤ 1e-12/1e-14, {dt:?})",
        report.worst_defect()
    );
}

#[test]
fn acceptance_08_constant_kernel_spectral_oracle() {
    let t0 = Instant::now();
    let d3 = Dimension::new(3).unwrap();
    let four_pi = 4.0 * std::f64::consts::PI;
    let kernel = KernelSpec::constant(1.0);
    for ell in 1..=10u32 {
        let v = boltzmann_eigenvalue(ell, d3, &kernel, 64).unwrap();
        let rel = (v - four_pi).abs() / four_pi;
        assert!(rel <= 1e-8, "λ̃_{ell} off by {rel:e} relative");
    }
    let cp = poincare_constant(d3, &kernel, 64).unwrap();
    let exact = 3.0 / four_pi;
    let rel = (cp.value() - exact).abs() / exact;
    assert!(rel <= 1e-10, "C_P off by {rel:e} relative");

    let mut worst_gap: f64 = 0.0;
    for (name, kernel) in builtin_kernels() {
        for d in 3..=10u32 {
            let dim = Dimension::new(d).unwrap();
            let cp = poincare_constant(dim, &kernel, default_quad_n(10))
                .unwrap_or_else(|e| panic!("{name} at d={d}: {e}"));
            assert!(
                cp.relative_gap() <= 1e-10,
                "{name} at d={d}: C_P formulas disagree by {:e}",
                cp.relative_gap()
            );
            worst_gap = worst_gap.max(cp.relative_gap());
        }
    }
    println!(
        "ACCEPTANCE spectral-oracle: PASS (λ̃ = 4π to 1e-8 rel for ell ≤ 10, C_P = 3/(4π) to \
         1e-10, formula agreement ≤ {worst_gap:.3e} across built-in kernels and d in [3,10], {:?})",
        t0.elapsed()
    );
}

#[test]
fn acceptance_09_eigenvalue_comparison_margins() {
    let t0 = Instant::now();
    let kernels = [
        KernelSpec::constant(1.0),
        KernelSpec::poly(vec![1.0, 0.0, 1.0]),
        KernelSpec::power(1.0, 0.5),
    ];
    let mut min_margin = f64::INFINITY;
    for d in [3u32, 5, 10] {
        let dim = Dimension::new(d).unwrap();
        for kernel in &kernels {
            let result = eigenvalue_comparison(dim, kernel, 10, default_quad_n(10)).unwrap();
            assert_eq!(
                result.comparison_margins[&1], 0.0,
                "margin at ell = 1 must be exactly zero"
            );
            assert!(
                result.margins_ok(1e-9),
                "margin {:e} below -1e-9 at d={d} for {:?}",
                result.min_margin(),
                kernel.form
            );
            min_margin = min_margin.min(result.min_margin());
        }
    }
    println!(
        "ACCEPTANCE eigenvalue-comparison: PASS (margins ≥ {min_margin:+.3e} ≥ -1e-9 for \
         ell ≤ 10, d in {{3,5,10}}, constant/poly/power kernels, zero at ell = 1, {:?})",
        t0.elapsed()
    );
}

/// Builds `Π (x - r_i) · Π (x² + p x + q)` with the given rational data.
fn product_poly(lin_roots: &[Rational], quads: &[(Rational, Rational)]) -> Poly {
    let mut p = Poly::one();
    for r in lin_roots {
        let factor = Poly::new(vec![-r.clone(), Rational::from_integer(1.into())]);
        p = &p * &factor;
    }
    for (b, c) in quads {
        let factor = Poly::new(vec![c.clone(), b.clone(), Rational::from_integer(1.into())]);
        p = &p * &factor;
    }
    p
}

#[test]
fn acceptance_10_sturm_soundness() {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    // Root pool: distinct rationals with small denominators. Query endpoints
    // use denominator 7 so they can never collide with a root.
    let mut pool = Vec::new();
    for num in -12i64..=12 {
        for den in [1i64, 2, 3, 4] {
            let r = Rational::new(num.into(), den.into());
            if !pool.contains(&r) {
                pool.push(r);
            }
        }
    }

    for trial in 0..100 {
        let k_lin = rng.gen_range(1..=6usize);
        let mut roots: Vec<Rational> = Vec::new();
        while roots.len() < k_lin {
            let r = pool[rng.gen_range(0..pool.len())].clone();
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let k_quad = rng.gen_range(0..=2usize);
        let mut quads: Vec<(Rational, Rational)> = Vec::new();
        while quads.len() < k_quad {
            let b = Rational::new(rng.gen_range(-2i64..=2).into(), 1.into());
            // q = b²/4 + m/4 with m ≥ 1 keeps the discriminant negative.
            let m = rng.gen_range(1i64..=8);
            let c = &b * &b / Rational::new(4.into(), 1.into()) + Rational::new(m.into(), 4.into());
            if !quads.contains(&(b.clone(), c.clone())) {
                quads.push((b, c));
            }
        }

        let p = product_poly(&roots, &quads);
        let chain = sturm_chain(&p).expect("constructed polynomial is nonzero");

        let mut draw = || loop {
            let k: i64 = rng.gen_range(-30..=30);
            if k % 7 != 0 {
                return k;
            }
        };
        let k1 = draw();
        let mut k2 = draw();
        while k2 == k1 {
            k2 = draw();
        }
        let (a, b) = if k1 < k2 { (k1, k2) } else { (k2, k1) };
        let a = Rational::new(a.into(), 7.into());
        let b = Rational::new(b.into(), 7.into());

        let truth = roots.iter().filter(|r| **r > a && **r <= b).count();
        let counted = count_roots(&chain, &a, &b).unwrap();
        assert_eq!(
            counted, truth,
            "trial {trial}: count_roots disagrees with constructed roots on ({a}, {b}]"
        );
    }

    // Freshly emitted certificates re-validate from their serialized fields
    // alone (the full sweeps in criteria 01/02 do the same at scale).
    for d in [2u32, 3, 5, 10] {
        let dim = Dimension::new(d).unwrap();
        for ell in 1..=10u32 {
            roundtrip_revalidate(&certify_improved(ell, dim).unwrap());
            roundtrip_revalidate(&certify_original(ell, dim).unwrap());
        }
    }
    println!(
        "ACCEPTANCE sturm-soundness: PASS (100 seeded random products matched exactly; \
         80 serialized certificates re-validated, {:?})",
        t0.elapsed()
    );
}

#[test]
fn acceptance_smoke_legendre_construction() {
    // Anchor values that the criteria above lean on implicitly.
    let d3 = Dimension::new(3).unwrap();
    let p2 = legendre_poly(2, d3);
    assert_eq!(
        p2,
        Poly::new(vec![
            Rational::new((-1).into(), 2.into()),
            Rational::from_integer(0.into()),
            Rational::new(3.into(), 2.into()),
        ])
    );
    let one = Rational::from_integer(1.into());
    for d in 2..=DIM_MAX {
        let dim = Dimension::new(d).unwrap();
        for ell in [0u32, 1, 2, 10, 2 * ELL_MAX + 2] {
            assert_eq!(legendre_poly(ell, dim).evaluate(&one), one);
        }
    }
    println!("ACCEPTANCE construction-anchors: PASS (P_2 closed form and normalization at 1)");
}
