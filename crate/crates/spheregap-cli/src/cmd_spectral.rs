use std::fs;

use anyhow::{Context, Result};
use clap::Args;
use spheregap::{default_quad_n, eigenvalue, eigenvalue_comparison, Dimension, Error, KernelSpec};

/// Margins must stay above -1e-9 for exit code 0.
const MARGIN_TOL: f64 = 1e-9;

#[derive(Args)]
pub struct SpectralArgs {
    /// Sphere dimension d
    #[arg(long)]
    dim: u32,

    /// Kernel JSON (e.g. '{"form":"constant","c":1.0}') or @path to a file
    #[arg(long)]
    kernel: String,

    /// Compare even orders 2, 4, …, 2·ell_max
    #[arg(long, default_value_t = 10)]
    ell_max: u32,

    /// Quadrature size (default 4·ell_max + 64)
    #[arg(long)]
    quad_n: Option<usize>,
}

pub fn run(args: SpectralArgs) -> Result<u8> {
    let dim = Dimension::new(args.dim)?;
    if args.ell_max < 1 {
        anyhow::bail!("--ell-max must be ≥ 1");
    }
    let raw = match args.kernel.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => args.kernel.clone(),
    };
    let kernel = KernelSpec::parse_json(raw.trim())?;
    kernel.validate_for(dim)?;

    let n = args.quad_n.unwrap_or_else(|| default_quad_n(args.ell_max));
    let result = match eigenvalue_comparison(dim, &kernel, args.ell_max, n) {
        Ok(r) => r,
        Err(e @ Error::PoincareMismatch { .. }) => {
            // The two Poincaré formulas disagreeing is a result failure (the
            // quadrature cannot be trusted), not a usage error.
            eprintln!("error: {e}");
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };

    println!("dim={} kernel={} quad_n={n}", result.d, raw.trim());
    println!("{:>6} {:>22} {:>22}", "order", "tilde_lambda", "lambda");
    for (&order, &tl) in &result.tilde_lambda {
        let lam = eigenvalue(order, dim).value;
        println!("{order:>6} {tl:>22.15e} {lam:>22}");
    }
    println!(
        "poincare_constant: by_moment {:.15e}  by_spectral {:.15e}",
        result.poincare_constant, result.poincare_by_spectral
    );
    println!("{:>6} {:>22}", "ell", "margin");
    for (&ell, &m) in &result.comparison_margins {
        println!("{ell:>6} {m:>22.15e}");
    }
    let min_margin = result.min_margin();
    println!("min margin: {min_margin:.3e} (tolerance -{MARGIN_TOL:.0e})");

    Ok(if result.margins_ok(MARGIN_TOL) { 0 } else { 1 })
}
