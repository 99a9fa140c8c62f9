//! Floating-point evaluation paths and pointwise defect checkers.
//!
//! Two independent ways to evaluate `P_ell` live here: the integral
//! representation over `[-1, 1]` with the symmetric Jacobi weight
//! `(1 - s²)^{(d-4)/2}` (valid for `d ≥ 3`), and the `d = 2` closed form
//! `P_ell(cos θ) = cos(ell·θ)`. Both serve as oracles for the exact recurrence
//! construction.
//!
//! The defect checkers evaluate each elementary pointwise step used in proving
//! the gap inequality — the sine amplification bound, the two equivalent
//! trigonometric forms of the `d = 2` case, the imaginary-part gap bound, the
//! real-part bound with its `Re z² = |z|² - 2 (Im z)²` identity, and the
//! modulus identity — and return `bound - quantity`, which must never drop
//! below round-off. The tolerance `-1e-12` for pointwise defects comes from a
//! worst-case error analysis of degree ≤ 82 evaluations in binary64.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::legendre::Dimension;
use crate::scalar::Real;
use crate::Error;

/// Pointwise defects must stay above this across all checkers.
pub const DEFECT_TOL: f64 = -1e-12;
/// Algebraic identities (trig rewrite, `Re z²`) must agree within this.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Modulus identity and the `|z| ≤ 1` overshoot tolerance.
pub const MODULUS_TOL: f64 = 1e-14;

// ---------------------------------------------------------------------------
// Gamma and sphere areas
// ---------------------------------------------------------------------------

// Lanczos coefficients, g = 7. Standard double-precision set, kept verbatim.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function via the Lanczos approximation, with reflection below 1/2.
///
/// Relative error is ~1e-14 over the half-integer arguments used here, well
/// inside every stated tolerance.
pub fn gamma<R: Real>(x: R) -> R {
    if x < R::of_f64(0.5) {
        // Γ(x)·Γ(1-x) = π / sin(πx)
        return R::PI() / ((R::PI() * x).sin() * gamma(R::one() - x));
    }
    let x = x - R::one();
    let mut t = R::of_f64(LANCZOS_P[0]);
    for (i, &p) in LANCZOS_P.iter().enumerate().skip(1) {
        t = t + R::of_f64(p) / (x + R::of_u32(i as u32));
    }
    let w = x + R::of_f64(LANCZOS_G) + R::of_f64(0.5);
    (R::of_f64(2.0) * R::PI()).sqrt() * w.powf(x + R::of_f64(0.5)) * (-w).exp() * t
}

/// Surface area of the unit sphere `S^p`: `2 π^{(p+1)/2} / Γ((p+1)/2)`.
pub fn surface_area<R: Real>(p: u32) -> R {
    let half = (R::of_u32(p) + R::one()) / R::of_u32(2);
    R::of_u32(2) * R::PI().powf(half) / gamma(half)
}

// ---------------------------------------------------------------------------
// Gauss–Jacobi quadrature (symmetric weight)
// ---------------------------------------------------------------------------

/// Quadrature rule for the weight `(1 - s²)^alpha` on `[-1, 1]`.
///
/// An `n`-point rule integrates polynomials of degree ≤ `2n - 1` against the
/// weight exactly up to round-off, and the weights sum to the total mass
/// `√π · Γ(alpha + 1) / Γ(alpha + 3/2)`.
#[derive(Debug, Clone)]
pub struct QuadratureRule<R = f64> {
    alpha: R,
    nodes: Vec<R>,
    weights: Vec<R>,
}

impl<R: Real> QuadratureRule<R> {
    pub fn alpha(&self) -> R {
        self.alpha
    }

    /// Nodes in ascending order, all strictly inside `(-1, 1)`.
    pub fn nodes(&self) -> &[R] {
        &self.nodes
    }

    /// Positive weights matching [`Self::nodes`].
    pub fn weights(&self) -> &[R] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_j f(s_j)`, approximating `∫ f(s) (1-s²)^alpha ds`.
    pub fn integrate<F: Fn(R) -> R>(&self, f: F) -> R {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(R::zero(), |acc, (&x, &w)| acc + w * f(x))
    }
}

/// Builds the `n`-point Gauss–Jacobi rule for the weight `(1 - s²)^alpha`.
///
/// `alpha = -1/2` (the `d = 3` case) uses the Chebyshev–Gauss closed form
/// `s_k = cos((2k-1)π/(2n))` with equal weights `π/n`; every other exponent
/// goes through the Golub–Welsch eigenvalue path on the symmetric tridiagonal
/// recurrence-coefficient matrix. Rejects `alpha ≤ -1` (non-integrable).
pub fn gauss_jacobi_rule<R: Real>(n: usize, alpha: R) -> Result<QuadratureRule<R>, Error> {
    // NaN must be rejected too, so test for Greater rather than `<=`.
    if alpha.partial_cmp(&-R::one()) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::NonIntegrableWeight(
            alpha.to_f64().unwrap_or(f64::NAN),
        ));
    }
    assert!(n >= 1, "quadrature rule needs at least one node");
    if alpha == R::of_f64(-0.5) {
        return Ok(chebyshev_gauss_rule(n));
    }
    golub_welsch(n, alpha)
}

fn chebyshev_gauss_rule<R: Real>(n: usize) -> QuadratureRule<R> {
    let w = R::PI() / R::of_u32(n as u32);
    let mut nodes = vec![R::zero(); n];
    for k in 0..n / 2 {
        // θ_k for the (k+1)-th node from the right; mirror for exact symmetry.
        let theta = R::PI() * (R::of_u32(2 * k as u32 + 1)) / R::of_u32(2 * n as u32);
        let x = theta.cos();
        nodes[n - 1 - k] = x;
        nodes[k] = -x;
    }
    // Odd n keeps the exact middle zero from the initialization.
    QuadratureRule {
        alpha: R::of_f64(-0.5),
        nodes,
        weights: vec![w; n],
    }
}

/// Golub–Welsch: nodes are eigenvalues of the Jacobi matrix, weights come from
/// the first components of the normalized eigenvectors scaled by the total
/// mass. For the symmetric weight the diagonal vanishes and the squared
/// off-diagonals are `1/(2α+3)` for `k = 1` and
/// `k (k + 2α) / ((2k + 2α + 1)(2k + 2α - 1))` for `k ≥ 2`.
fn golub_welsch<R: Real>(n: usize, alpha: R) -> Result<QuadratureRule<R>, Error> {
    let two = R::of_u32(2);
    let mut diag = vec![R::zero(); n];
    let mut off = vec![R::zero(); n];
    for k in 1..n {
        let kf = R::of_u32(k as u32);
        let b = if k == 1 {
            R::one() / (two * alpha + R::of_u32(3))
        } else {
            let denom = (two * kf + two * alpha + R::one()) * (two * kf + two * alpha - R::one());
            kf * (kf + two * alpha) / denom
        };
        off[k - 1] = b.sqrt();
    }
    let mut first_row = vec![R::zero(); n];
    first_row[0] = R::one();
    tridiagonal_ql(&mut diag, &mut off, &mut first_row)?;

    let mass = R::PI().sqrt() * gamma(alpha + R::one()) / gamma(alpha + R::of_f64(1.5));
    let mut pairs: Vec<(R, R)> = diag
        .into_iter()
        .zip(first_row.into_iter().map(|z| mass * z * z))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite nodes"));

    // The weight is even, so enforce the exact ± node pairing the eigenvalue
    // iteration only delivers to round-off.
    let m = pairs.len();
    for j in 0..m / 2 {
        let t = (pairs[j].0 - pairs[m - 1 - j].0) / two;
        let w = (pairs[j].1 + pairs[m - 1 - j].1) / two;
        pairs[j] = (t, w);
        pairs[m - 1 - j] = (-t, w);
    }
    if m % 2 == 1 {
        pairs[m / 2].0 = R::zero();
    }

    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule {
        alpha,
        nodes,
        weights,
    })
}

/// Implicit-shift QL iteration for a symmetric tridiagonal matrix, accumulating
/// only the first row of the eigenvector matrix (all that Golub–Welsch needs).
///
/// `d` holds the diagonal and returns the eigenvalues; `e` holds the
/// subdiagonal in `e[0..n-1]` with `e[n-1]` used as workspace; `z` is the
/// row vector being accumulated, initialized to `e_1`.
fn tridiagonal_ql<R: Real>(d: &mut [R], e: &mut [R], z: &mut [R]) -> Result<(), Error> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= R::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::EigenNoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (R::of_u32(2) * e[l]);
            let mut r = g.hypot(R::one());
            let sign_r = if g >= R::zero() { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = R::one();
            let mut c = R::one();
            let mut p = R::zero();
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == R::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = R::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + R::of_u32(2) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = R::zero();
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Evaluation paths
// ---------------------------------------------------------------------------

fn complex_pow_iter<R: Real>(z: Complex<R>, k: u32) -> Complex<R> {
    // Iterated multiplication keeps the error growth linear and predictable.
    let mut acc = Complex::new(R::one(), R::zero());
    for _ in 0..k {
        acc = acc * z;
    }
    acc
}

/// Evaluates `P_ell(x)` through the integral representation
///
/// ```text
/// P_ell(x) = ω_{d-3}/ω_{d-2} · ∫_{-1}^{1} (x + i s √(1-x²))^ell (1-s²)^{(d-4)/2} ds
/// ```
///
/// by an `n`-point Gauss–Jacobi rule. The integrand's imaginary part is odd in
/// `s` and integrates to zero, so only the real part is summed. Needs `d ≥ 3`
/// (the `d = 2` weight exponent is non-integrable; use [`chebyshev_eval`]) and
/// `n ≥ ell/2 + 1` so a degree-`ell` polynomial is integrated exactly.
pub fn integral_eval<R: Real>(ell: u32, dim: Dimension, x: R, n: usize) -> Result<R, Error> {
    let d = dim.get();
    if d < 3 {
        return Err(Error::IntegralNeedsD3(d));
    }
    if x.abs() > R::one() {
        return Err(Error::OutOfRange {
            name: "x",
            range: "[-1, 1]",
            value: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    let alpha = (R::of_u32(d) - R::of_u32(4)) / R::of_u32(2);
    let rule = gauss_jacobi_rule(n, alpha)?;
    let root = (R::one() - x * x).max(R::zero()).sqrt();
    let sum = rule.integrate(|s| complex_pow_iter(Complex::new(x, s * root), ell).re);
    let ratio = surface_area::<R>(d - 3) / surface_area::<R>(d - 2);
    Ok(ratio * sum)
}

/// The `d = 2` closed form: `P_ell(cos θ) = cos(ell·θ)`.
pub fn chebyshev_eval<R: Real>(ell: u32, theta: R) -> R {
    (R::of_u32(ell) * theta).cos()
}

// ---------------------------------------------------------------------------
// Pointwise defect checkers
// ---------------------------------------------------------------------------

/// Defect of the sine amplification bound:
/// `(2ℓ+1)·|sin θ| - |sin((2ℓ+1)θ)|`, nonnegative for all θ.
pub fn sine_defect<R: Real>(ell: u32, theta: R) -> R {
    let m = R::of_u32(2 * ell + 1);
    m * theta.sin().abs() - (m * theta).sin().abs()
}

/// The two equivalent trigonometric forms of the `d = 2` gap inequality.
#[derive(Debug, Clone, Copy)]
pub struct TrigGapDefects<R> {
    /// `(2ℓ+1)(1 - cos 2θ) - (cos 2ℓθ - cos 2(ℓ+1)θ)`.
    pub cos_form: R,
    /// `(2ℓ+1) sin²θ - (sin²((ℓ+1)θ) - sin²(ℓθ))`.
    pub sin_form: R,
}

impl<R: Real> TrigGapDefects<R> {
    /// The double-angle rewrite makes `cos_form = 2·sin_form` exactly; this is
    /// the residual of that identity.
    pub fn rewrite_gap(&self) -> R {
        self.cos_form - R::of_u32(2) * self.sin_form
    }
}

/// Defects of both trigonometric forms of the `d = 2` gap inequality at
/// `(ell, θ)`; both are nonnegative and agree up to the factor 2.
pub fn trig_gap_defects<R: Real>(ell: u32, theta: R) -> TrigGapDefects<R> {
    let m = R::of_u32(2 * ell + 1);
    let lf = R::of_u32(ell);
    let two = R::of_u32(2);
    let cos_form = m * (R::one() - (two * theta).cos())
        - ((two * lf * theta).cos() - (two * (lf + R::one()) * theta).cos());
    let s_hi = ((lf + R::one()) * theta).sin();
    let s_lo = (lf * theta).sin();
    let s = theta.sin();
    let sin_form = m * s * s - (s_hi * s_hi - s_lo * s_lo);
    TrigGapDefects { cos_form, sin_form }
}

fn zeta<R: Real>(x: R, s: R) -> Complex<R> {
    let root = (R::one() - x * x).max(R::zero()).sqrt();
    Complex::new(x, s * root)
}

/// Defect of the imaginary-part gap bound: with `z = x + i s √(1-x²)`,
///
/// ```text
/// (2ℓ+1) s² (1-x²) - [(Im z^{ℓ+1})² - (Im z^ℓ)²] ≥ 0.
/// ```
pub fn imag_gap_defect<R: Real>(ell: u32, x: R, s: R) -> R {
    let z = zeta(x, s);
    let zl = complex_pow_iter(z, ell);
    let zl1 = zl * z;
    let bound = R::of_u32(2 * ell + 1) * s * s * (R::one() - x * x);
    bound - (zl1.im * zl1.im - zl.im * zl.im)
}

/// Result of the real-part bound check.
#[derive(Debug, Clone, Copy)]
pub struct RealGapCheck<R> {
    /// `(4ℓ+2) s²(1-x²) + (1-x²)(1-s²) - Re(z^{2ℓ} - z^{2ℓ+2})`, nonnegative.
    pub defect: R,
    /// Worst residual of `Re w² = |w|² - 2 (Im w)²` at `w = z^ℓ` and `w = z^{ℓ+1}`.
    pub re_square_identity_gap: R,
}

/// Checks the real-part bound on `Re(z^{2ℓ} - z^{2ℓ+2})` together with the
/// `Re w² = |w|² - 2 (Im w)²` identity it rests on.
pub fn real_gap_defect<R: Real>(ell: u32, x: R, s: R) -> RealGapCheck<R> {
    let z = zeta(x, s);
    let zl = complex_pow_iter(z, ell);
    let zl1 = zl * z;
    let one = R::one();
    let sq = |w: Complex<R>| w * w;
    let value = sq(zl).re - sq(zl1).re;
    let bound = R::of_u32(4 * ell + 2) * s * s * (one - x * x) + (one - x * x) * (one - s * s);

    let identity_gap =
        |w: Complex<R>| (sq(w).re - (w.norm_sqr() - R::of_u32(2) * w.im * w.im)).abs();
    RealGapCheck {
        defect: bound - value,
        re_square_identity_gap: identity_gap(zl).max(identity_gap(zl1)),
    }
}

/// Residuals of the modulus identity `|x + i s √(1-x²)|² = x² + s²(1-x²)`:
/// `(identity gap, overshoot beyond 1)`.
pub fn modulus_gaps<R: Real>(x: R, s: R) -> (R, R) {
    let z = zeta(x, s);
    let direct = z.norm_sqr();
    let closed = x * x + s * s * (R::one() - x * x);
    let overshoot = (direct.max(closed) - R::one()).max(R::zero());
    ((direct - closed).abs(), overshoot)
}

/// True iff the modulus identity holds to 1e-14 and `|z|² ≤ 1 + 1e-14`,
/// for `|x|, |s| ≤ 1`.
pub fn modulus_check(x: f64, s: f64) -> bool {
    let (gap, overshoot) = modulus_gaps(x, s);
    gap <= MODULUS_TOL && overshoot <= MODULUS_TOL
}

// ---------------------------------------------------------------------------
// Seeded defect battery
// ---------------------------------------------------------------------------

/// An extremal checker value together with the draw that produced it.
#[derive(Debug, Clone, Copy)]
pub struct Extremum {
    pub value: f64,
    pub ell: u32,
    /// θ for the trigonometric checkers, x for the complex ones.
    pub arg0: f64,
    /// Unused (0) for the trigonometric checkers, s for the complex ones.
    pub arg1: f64,
}

impl Extremum {
    fn start(value: f64) -> Self {
        Self {
            value,
            ell: 0,
            arg0: 0.0,
            arg1: 0.0,
        }
    }

    fn min_with(&mut self, value: f64, ell: u32, arg0: f64, arg1: f64) {
        if value < self.value {
            *self = Self {
                value,
                ell,
                arg0,
                arg1,
            };
        }
    }

    fn max_with(&mut self, value: f64, ell: u32, arg0: f64, arg1: f64) {
        if value > self.value {
            *self = Self {
                value,
                ell,
                arg0,
                arg1,
            };
        }
    }
}

/// Worst observed values per checker over a seeded random sweep.
#[derive(Debug, Clone)]
pub struct BatteryReport {
    pub samples: usize,
    pub seed: u64,
    pub ell_max: u32,
    /// Minimum sine-amplification defect (wants ≥ -1e-12).
    pub sine: Extremum,
    /// Minimum cosine-form trigonometric gap defect.
    pub trig_cos: Extremum,
    /// Minimum sine-form trigonometric gap defect.
    pub trig_sin: Extremum,
    /// Maximum |cos-form - 2·sin-form| (wants ≤ 1e-12).
    pub trig_rewrite: Extremum,
    /// Minimum imaginary-part gap defect.
    pub imag_gap: Extremum,
    /// Minimum real-part bound defect.
    pub real_gap: Extremum,
    /// Maximum residual of the `Re w²` identity (wants ≤ 1e-12).
    pub re_square_identity: Extremum,
    /// Maximum modulus identity residual (wants ≤ 1e-14).
    pub modulus_identity: Extremum,
    /// Maximum overshoot of `|z|²` beyond 1 (wants ≤ 1e-14).
    pub modulus_overshoot: Extremum,
}

impl BatteryReport {
    /// Most negative defect across the inequality checkers.
    pub fn worst_defect(&self) -> f64 {
        self.sine
            .value
            .min(self.trig_cos.value)
            .min(self.trig_sin.value)
            .min(self.imag_gap.value)
            .min(self.real_gap.value)
    }

    /// True iff every defect and identity residual is within tolerance.
    pub fn passes(&self) -> bool {
        self.worst_defect() >= DEFECT_TOL
            && self.trig_rewrite.value <= IDENTITY_TOL
            && self.re_square_identity.value <= IDENTITY_TOL
            && self.modulus_identity.value <= MODULUS_TOL
            && self.modulus_overshoot.value <= MODULUS_TOL
    }
}

/// Runs every pointwise checker over `samples` seeded pseudo-random draws with
/// `1 ≤ ell ≤ ell_max`, `θ ∈ [-π, π]`, `x, s ∈ [-1, 1]`, recording the worst
/// value and its witness per checker.
pub fn defect_battery(samples: usize, seed: u64, ell_max: u32) -> BatteryReport {
    assert!(ell_max >= 1, "battery needs ell_max >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = BatteryReport {
        samples,
        seed,
        ell_max,
        sine: Extremum::start(f64::INFINITY),
        trig_cos: Extremum::start(f64::INFINITY),
        trig_sin: Extremum::start(f64::INFINITY),
        trig_rewrite: Extremum::start(f64::NEG_INFINITY),
        imag_gap: Extremum::start(f64::INFINITY),
        real_gap: Extremum::start(f64::INFINITY),
        re_square_identity: Extremum::start(f64::NEG_INFINITY),
        modulus_identity: Extremum::start(f64::NEG_INFINITY),
        modulus_overshoot: Extremum::start(f64::NEG_INFINITY),
    };
    for _ in 0..samples {
        let ell = rng.gen_range(1..=ell_max);
        let theta = rng.gen_range(-std::f64::consts::PI..=std::f64::consts::PI);
        let x = rng.gen_range(-1.0..=1.0);
        let s = rng.gen_range(-1.0..=1.0);

        report
            .sine
            .min_with(sine_defect(ell, theta), ell, theta, 0.0);
        let trig = trig_gap_defects(ell, theta);
        report.trig_cos.min_with(trig.cos_form, ell, theta, 0.0);
        report.trig_sin.min_with(trig.sin_form, ell, theta, 0.0);
        report
            .trig_rewrite
            .max_with(trig.rewrite_gap().abs(), ell, theta, 0.0);

        report
            .imag_gap
            .min_with(imag_gap_defect(ell, x, s), ell, x, s);
        let real = real_gap_defect(ell, x, s);
        report.real_gap.min_with(real.defect, ell, x, s);
        report
            .re_square_identity
            .max_with(real.re_square_identity_gap, ell, x, s);

        let (gap, overshoot) = modulus_gaps(x, s);
        report.modulus_identity.max_with(gap, ell, x, s);
        report.modulus_overshoot.max_with(overshoot, ell, x, s);
    }
    report
}
