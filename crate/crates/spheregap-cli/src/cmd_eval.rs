use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use spheregap::{chebyshev_eval, evaluate_float, integral_eval, Dimension};

/// Methods must agree pairwise to this for exit code 0.
const AGREEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Floating-point three-term recurrence
    Recurrence,
    /// Integral representation (d ≥ 3)
    Integral,
    /// cos(ell·arccos x) closed form (d = 2 only)
    Trig,
    /// Every method applicable to the dimension
    All,
}

#[derive(Args)]
pub struct EvalArgs {
    /// Polynomial order
    #[arg(long)]
    ell: u32,

    /// Sphere dimension d (polynomials on S^{d-1})
    #[arg(long)]
    dim: u32,

    /// Evaluation point in [-1, 1]; repeatable
    #[arg(long = "x")]
    xs: Vec<f64>,

    /// Evaluate on a uniform N-point grid over [-1, 1] instead
    #[arg(long, conflicts_with = "xs")]
    grid: Option<usize>,

    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,

    /// Quadrature size for the integral method (default ell + 10)
    #[arg(long)]
    quad_n: Option<usize>,
}

pub fn run(args: EvalArgs) -> Result<u8> {
    let dim = Dimension::new(args.dim)?;
    let d = dim.get();

    let methods: Vec<Method> = match args.method {
        Method::All => {
            if d == 2 {
                vec![Method::Recurrence, Method::Trig]
            } else {
                vec![Method::Recurrence, Method::Integral]
            }
        }
        Method::Trig if d != 2 => bail!("the trig method applies only to dim 2 (got {d})"),
        Method::Integral if d < 3 => {
            bail!("the integral method needs dim ≥ 3 (got {d}); use trig or recurrence")
        }
        m => vec![m],
    };

    let points: Vec<f64> = if let Some(n) = args.grid {
        if n == 0 {
            bail!("--grid must be ≥ 1");
        }
        if n == 1 {
            vec![0.0]
        } else {
            (0..n)
                .map(|i| -1.0 + 2.0 * i as f64 / (n - 1) as f64)
                .collect()
        }
    } else if args.xs.is_empty() {
        bail!("provide at least one --x or a --grid size");
    } else {
        args.xs.clone()
    };

    let n = args.quad_n.unwrap_or(args.ell as usize + 10);
    let name = |m: Method| match m {
        Method::Recurrence => "recurrence",
        Method::Integral => "integral",
        Method::Trig => "trig",
        Method::All => unreachable!(),
    };

    let header: Vec<&str> = methods.iter().map(|&m| name(m)).collect();
    println!("ell={} dim={} methods={}", args.ell, d, header.join(","));

    let mut worst: f64 = 0.0;
    for &x in &points {
        let mut values = Vec::with_capacity(methods.len());
        for &m in &methods {
            let v = match m {
                Method::Recurrence => evaluate_float(args.ell, dim, x)?,
                Method::Integral => integral_eval(args.ell, dim, x, n)?,
                Method::Trig => chebyshev_eval(args.ell, x.acos()),
                Method::All => unreachable!(),
            };
            values.push(v);
        }
        let mut dev: f64 = 0.0;
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                dev = dev.max((values[i] - values[j]).abs());
            }
        }
        worst = worst.max(dev);
        let cols: Vec<String> = values.iter().map(|v| format!("{v:+.15e}")).collect();
        println!("x={x:+.12}  {}  dev={dev:.3e}", cols.join("  "));
    }

    println!("max pairwise deviation: {worst:.3e} (tolerance {AGREEMENT_TOL:.0e})");
    Ok(if worst <= AGREEMENT_TOL { 0 } else { 1 })
}
