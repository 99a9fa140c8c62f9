use anyhow::Result;
use clap::Args;
use rayon::prelude::*;
use spheregap::quad::{DEFECT_TOL, IDENTITY_TOL, MODULUS_TOL};
use spheregap::{defect_battery, gap_scaling_identity, Dimension, Poly};

/// Dimensions covered by the exact-identity sweep.
const IDENTITY_DIMS: std::ops::RangeInclusive<u32> = 2..=10;

#[derive(Args)]
pub struct ProofcheckArgs {
    /// Pseudo-random draws for the pointwise battery
    #[arg(long, default_value_t = 100_000)]
    samples: usize,

    /// RNG seed
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Largest ell drawn by the battery and swept by the identities
    #[arg(long, default_value_t = 40)]
    ell_max: u32,
}

pub fn run(args: ProofcheckArgs) -> Result<u8> {
    if args.ell_max < 1 {
        anyhow::bail!("--ell-max must be ≥ 1");
    }
    let report = defect_battery(args.samples, args.seed, args.ell_max);
    println!(
        "battery: {} samples, seed {}, ell ≤ {}",
        report.samples, report.seed, report.ell_max
    );
    let line = |name: &str, e: &spheregap::quad::Extremum, theta_style: bool| {
        if theta_style {
            println!(
                "{name:<22} {:+.6e}  (ell={}, theta={:+.12})",
                e.value, e.ell, e.arg0
            );
        } else {
            println!(
                "{name:<22} {:+.6e}  (ell={}, x={:+.12}, s={:+.12})",
                e.value, e.ell, e.arg0, e.arg1
            );
        }
    };
    line("min sine defect", &report.sine, true);
    line("min trig cos defect", &report.trig_cos, true);
    line("min trig sin defect", &report.trig_sin, true);
    line("max trig rewrite gap", &report.trig_rewrite, true);
    line("min imag gap defect", &report.imag_gap, false);
    line("min real bound defect", &report.real_gap, false);
    line("max Re z^2 residual", &report.re_square_identity, false);
    line("max modulus residual", &report.modulus_identity, false);
    line("max modulus overshoot", &report.modulus_overshoot, false);

    let battery_ok = report.passes();
    if !battery_ok {
        println!(
            "battery FAILED: a defect fell below {DEFECT_TOL:e} or an identity residual \
             exceeded {IDENTITY_TOL:e}/{MODULUS_TOL:e}; witness points above"
        );
    }

    // Exact identities, per dimension: the gap scaling identity and the
    // telescoping of per-pair defects into the cumulative one.
    let ell_cap = args.ell_max.min(50);
    let identity_failures: Vec<String> = IDENTITY_DIMS
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map(|&d| {
            let dim = Dimension::new(d).expect("dims are valid");
            let mut fails = Vec::new();
            let mut running = Poly::zero();
            for ell in 1..=ell_cap {
                if !gap_scaling_identity(ell, dim) {
                    fails.push(format!("gap scaling identity fails at (ell={ell}, d={d})"));
                }
                if !(telescoping_identity_incremental(&mut running, ell, dim)) {
                    fails.push(format!("telescoping identity fails at (ell={ell}, d={d})"));
                }
            }
            fails
        })
        .collect();

    let dims = (IDENTITY_DIMS.end() - IDENTITY_DIMS.start() + 1) as usize;
    if identity_failures.is_empty() {
        println!(
            "exact identities: gap scaling and telescoping hold for ell ≤ {ell_cap}, d in {}..={} ({} checks)",
            IDENTITY_DIMS.start(),
            IDENTITY_DIMS.end(),
            2 * ell_cap as usize * dims
        );
    } else {
        for f in &identity_failures {
            println!("{f}");
        }
    }

    Ok(if battery_ok && identity_failures.is_empty() {
        0
    } else {
        1
    })
}

/// Telescoping check that reuses the running sum of gap polynomials instead of
/// re-summing from scratch for every ell.
fn telescoping_identity_incremental(running: &mut Poly, ell: u32, dim: Dimension) -> bool {
    use spheregap::{gap_polynomial, total_gap_polynomial};
    // `running` holds Σ_{k<ell} gap_polynomial(k) on entry.
    let ok = *running == total_gap_polynomial(ell, dim);
    *running = &*running + &gap_polynomial(ell, dim);
    ok
}
