use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use rayon::prelude::*;
use spheregap::{certify_improved, certify_original, Dimension, NonnegCertificate};

use crate::report::{Row, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Inequality {
    /// Adjacent-pair gap bound
    Improved,
    /// Cumulative bound
    Original,
    /// Both inequalities
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
pub struct CertifyArgs {
    /// Which inequality to certify
    #[arg(long, value_enum, default_value_t = Inequality::Improved)]
    inequality: Inequality,

    /// Smallest ell in the sweep
    #[arg(long, default_value_t = 1)]
    ell_min: u32,

    /// Largest ell in the sweep
    #[arg(long, default_value_t = 10)]
    ell_max: u32,

    /// Dimensions: comma-separated integers and/or inclusive ranges, e.g. "2..5" or "3,5,10"
    #[arg(long, default_value = "2..10")]
    dims: String,

    /// Write the report to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also write every certificate as a JSON array to this path
    #[arg(long)]
    certs_out: Option<PathBuf>,
}

/// Parses "2..5", "3,5,10", or a mix like "2..4,7" (ranges inclusive on both
/// ends) into validated dimensions.
pub fn parse_dims(spec: &str) -> Result<Vec<Dimension>> {
    let mut dims = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some((a, b)) = token.split_once("..") {
            let lo: u32 = a
                .trim()
                .parse()
                .with_context(|| format!("bad dimension {a:?}"))?;
            let hi: u32 = b
                .trim()
                .parse()
                .with_context(|| format!("bad dimension {b:?}"))?;
            if lo > hi {
                bail!("empty dimension range {token:?}");
            }
            for d in lo..=hi {
                dims.push(Dimension::new(d)?);
            }
        } else {
            let d: u32 = token
                .parse()
                .with_context(|| format!("bad dimension {token:?}"))?;
            dims.push(Dimension::new(d)?);
        }
    }
    if dims.is_empty() {
        bail!("no dimensions given");
    }
    Ok(dims)
}

pub fn run(args: CertifyArgs) -> Result<u8> {
    if args.ell_min < 1 {
        bail!("--ell-min must be ≥ 1");
    }
    if args.ell_min > args.ell_max {
        bail!("--ell-min must not exceed --ell-max");
    }
    let dims = parse_dims(&args.dims)?;

    let inequalities: &[&str] = match args.inequality {
        Inequality::Improved => &["improved"],
        Inequality::Original => &["original"],
        Inequality::Both => &["improved", "original"],
    };

    // Deterministic row order: (inequality, ell, d).
    let mut tasks = Vec::new();
    for &ineq in inequalities {
        for ell in args.ell_min..=args.ell_max {
            for &d in &dims {
                tasks.push((ineq, ell, d));
            }
        }
    }

    let results: Vec<(Row, NonnegCertificate)> = tasks
        .par_iter()
        .map(|&(ineq, ell, d)| {
            let t0 = Instant::now();
            let cert = match ineq {
                "improved" => certify_improved(ell, d),
                _ => certify_original(ell, d),
            }
            .expect("certification on a validated grid");
            let ms = t0.elapsed().as_secs_f64() * 1e3;
            (
                Row {
                    inequality: ineq.to_string(),
                    ell,
                    d: d.get(),
                    verdict: cert.verdict.to_string(),
                    ms,
                },
                cert,
            )
        })
        .collect();

    let (rows, certs): (Vec<Row>, Vec<NonnegCertificate>) = results.into_iter().unzip();

    let mut parameters = BTreeMap::new();
    parameters.insert("inequality".into(), serde_json::json!(inequalities));
    parameters.insert("ell_min".into(), serde_json::json!(args.ell_min));
    parameters.insert("ell_max".into(), serde_json::json!(args.ell_max));
    parameters.insert(
        "dims".into(),
        serde_json::json!(dims.iter().map(|d| d.get()).collect::<Vec<_>>()),
    );
    let report = SweepReport::new("certify", parameters, rows);

    if let Some(path) = &args.certs_out {
        let payload = serde_json::to_string_pretty(&certs)?;
        fs::write(path, payload).with_context(|| format!("writing {}", path.display()))?;
    }

    let rendered = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &args.out {
        Some(path) => {
            fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?;
            println!(
                "certify: {} rows, {} passed, {} failed -> {}",
                report.summary.total,
                report.summary.passed,
                report.summary.failed,
                path.display()
            );
        }
        None => print!("{rendered}"),
    }

    Ok(if report.summary.failed == 0 { 0 } else { 1 })
}
