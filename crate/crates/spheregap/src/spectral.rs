//! Eigenvalues of the (minus) angular Boltzmann smoothing operator and the
//! associated Poincaré constants.
//!
//! For a nonnegative angular kernel `b` of the cosine `t = e·σ`, the operator
//! is diagonal on spherical harmonics, and the zonal reduction gives the
//! order-`ell` eigenvalue as a one-dimensional integral
//!
//! ```text
//! λ̃_ell = ω_{d-2} ∫_{-1}^{1} (1 - P_ell(t)) b(t) (1 - t²)^{(d-3)/2} dt.
//! ```
//!
//! The Poincaré constant comparing the spherical Laplacian with the operator on
//! even functions is computed two ways — `(d-1)/∫(1-(e·σ)²) b(e·σ) dσ` and
//! `(1/2)·λ_2/λ̃_2` — and the two must agree to 1e-9 relative; a mismatch means
//! the quadrature cannot be trusted for the kernel at hand and is reported as a
//! hard error rather than a number.
//!
//! Kernels singular at grazing angles (`b = c (1-t)^{-ν}`) are integrated after
//! the substitution `t = 1 - u²`, which concentrates nodes at the singularity;
//! admissibility requires the `(1-t²)`-moment to be finite, i.e. `ν < (d+1)/2`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::legendre::{eigenvalue, eval_recurrence, Dimension};
use crate::quad::{gauss_jacobi_rule, surface_area};
use crate::Error;

/// The two Poincaré-constant formulas must agree to this relative tolerance.
pub const POINCARE_AGREEMENT_TOL: f64 = 1e-9;

/// Shape of an angular collision kernel `b(t)`, `t ∈ [-1, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum KernelForm {
    /// `b ≡ c`, `c > 0`.
    Constant { c: f64 },
    /// Polynomial in `t`, ascending coefficients.
    Poly { coeffs: Vec<f64> },
    /// Piecewise-linear interpolation through `(t, b(t))` samples with strictly
    /// increasing `t`; clamped to the boundary values outside the sampled range.
    Table { points: Vec<(f64, f64)> },
    /// Grazing-collision kernel `b(t) = c (1 - t)^{-nu}`.
    Power { c: f64, nu: f64 },
}

/// An angular kernel together with its declared integrability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelSpec {
    #[serde(flatten)]
    pub form: KernelForm,
    /// Declares that `∫ (1-(e·σ)²) b(e·σ) dσ` is finite; must hold for use.
    #[serde(default = "default_true")]
    pub declared_moment_finite: bool,
}

fn default_true() -> bool {
    true
}

impl KernelSpec {
    pub fn constant(c: f64) -> Self {
        Self {
            form: KernelForm::Constant { c },
            declared_moment_finite: true,
        }
    }

    pub fn poly(coeffs: Vec<f64>) -> Self {
        Self {
            form: KernelForm::Poly { coeffs },
            declared_moment_finite: true,
        }
    }

    pub fn table(points: Vec<(f64, f64)>) -> Self {
        Self {
            form: KernelForm::Table { points },
            declared_moment_finite: true,
        }
    }

    pub fn power(c: f64, nu: f64) -> Self {
        Self {
            form: KernelForm::Power { c, nu },
            declared_moment_finite: true,
        }
    }

    /// Parses the JSON kernel description, e.g. `{"form":"constant","c":1.0}`,
    /// and validates its shape.
    pub fn parse_json(s: &str) -> Result<Self, Error> {
        let spec: KernelSpec =
            serde_json::from_str(s).map_err(|e| Error::InvalidKernel(e.to_string()))?;
        spec.validate_shape()?;
        Ok(spec)
    }

    /// Structural checks that do not depend on the dimension.
    pub fn validate_shape(&self) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::InvalidKernel(msg));
        match &self.form {
            KernelForm::Constant { c } => {
                if !(c.is_finite() && *c > 0.0) {
                    return bad(format!("constant kernel needs c > 0, got {c}"));
                }
            }
            KernelForm::Poly { coeffs } => {
                if coeffs.is_empty() {
                    return bad("polynomial kernel needs at least one coefficient".into());
                }
                if coeffs.iter().any(|c| !c.is_finite()) {
                    return bad("polynomial kernel coefficients must be finite".into());
                }
            }
            KernelForm::Table { points } => {
                if points.len() < 2 {
                    return bad("table kernel needs at least two points".into());
                }
                for w in points.windows(2) {
                    // Rejects NaN abscissae as a side effect.
                    if w[0].0.partial_cmp(&w[1].0) != Some(std::cmp::Ordering::Less) {
                        return bad("table abscissae must be strictly increasing".into());
                    }
                }
                for &(t, v) in points {
                    if !(t.is_finite() && (-1.0..=1.0).contains(&t)) {
                        return bad(format!("table abscissa {t} outside [-1, 1]"));
                    }
                    if !(v.is_finite() && v >= 0.0) {
                        return bad(format!("table value {v} must be finite and ≥ 0"));
                    }
                }
            }
            KernelForm::Power { c, nu } => {
                if !(c.is_finite() && *c > 0.0) {
                    return bad(format!("power kernel needs c > 0, got {c}"));
                }
                if !nu.is_finite() {
                    return bad("power kernel exponent must be finite".into());
                }
            }
        }
        Ok(())
    }

    /// Full admissibility for dimension `d`: shape checks, the declared moment
    /// flag, and `ν < (d+1)/2` for power-singular kernels.
    pub fn validate_for(&self, dim: Dimension) -> Result<(), Error> {
        self.validate_shape()?;
        let d = dim.get();
        if !self.declared_moment_finite {
            return Err(Error::NonIntegrableKernel {
                dim: d,
                reason: "kernel declares its (1-t²)-moment not finite".into(),
            });
        }
        if let KernelForm::Power { nu, .. } = self.form {
            let limit = (d as f64 + 1.0) / 2.0;
            if nu >= limit {
                return Err(Error::NonIntegrableKernel {
                    dim: d,
                    reason: format!("power kernel needs nu < (d+1)/2 = {limit}, got {nu}"),
                });
            }
        }
        Ok(())
    }

    /// Evaluates `b(t)`. Unbounded at `t = 1` for power-singular kernels.
    pub fn evaluate(&self, t: f64) -> f64 {
        match &self.form {
            KernelForm::Constant { c } => *c,
            KernelForm::Poly { coeffs } => coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c),
            KernelForm::Table { points } => {
                let first = points.first().expect("validated table");
                let last = points.last().expect("validated table");
                if t <= first.0 {
                    return first.1;
                }
                if t >= last.0 {
                    return last.1;
                }
                let idx = points.partition_point(|&(x, _)| x <= t);
                let (t0, v0) = points[idx - 1];
                let (t1, v1) = points[idx];
                v0 + (v1 - v0) * (t - t0) / (t1 - t0)
            }
            KernelForm::Power { c, nu } => c * (1.0 - t).powf(-nu),
        }
    }
}

/// A kernel-aware quadrature: nodes `t_j` and folded weights `W_j` so that
/// `∫ g(t) b(t) (1-t²)^{(d-3)/2} dt ≈ Σ W_j g(t_j)` for smooth `g`.
struct FoldedRule {
    t: Vec<f64>,
    w: Vec<f64>,
}

fn folded_rule(dim: Dimension, kernel: &KernelSpec, n: usize) -> Result<FoldedRule, Error> {
    let d = dim.get();
    match kernel.form {
        KernelForm::Power { c, nu } => {
            // Substitute t = 1 - u², u ∈ (0, √2):
            //   ∫ g(t)·c(1-t)^{-ν}(1-t²)^{(d-3)/2} dt
            //     = 2c ∫_0^{√2} g(1-u²)·u^{d-2-2ν}(2-u²)^{(d-3)/2} du.
            let base = gauss_jacobi_rule(n, 0.0f64)?;
            let half_len = std::f64::consts::SQRT_2 / 2.0;
            let expo = d as f64 - 2.0 - 2.0 * nu;
            let half_d3 = (d as f64 - 3.0) / 2.0;
            let mut t = Vec::with_capacity(n);
            let mut w = Vec::with_capacity(n);
            for (&s, &v) in base.nodes().iter().zip(base.weights()) {
                let u = (s + 1.0) * half_len;
                t.push(1.0 - u * u);
                w.push(2.0 * c * v * half_len * u.powf(expo) * (2.0 - u * u).powf(half_d3));
            }
            Ok(FoldedRule { t, w })
        }
        _ => {
            let alpha = (d as f64 - 3.0) / 2.0;
            let base = gauss_jacobi_rule(n, alpha)?;
            let mut t = Vec::with_capacity(n);
            let mut w = Vec::with_capacity(n);
            for (&node, &weight) in base.nodes().iter().zip(base.weights()) {
                let b = kernel.evaluate(node);
                if !(b.is_finite() && b >= 0.0) {
                    return Err(Error::InvalidKernel(format!(
                        "kernel takes inadmissible value {b} at t = {node}"
                    )));
                }
                t.push(node);
                w.push(weight * b);
            }
            Ok(FoldedRule { t, w })
        }
    }
}

/// Eigenvalue `λ̃_ell` of the (minus) Boltzmann smoothing operator for the
/// order-`ell` harmonics, by `n`-point quadrature of the zonal reduction.
///
/// For polynomial kernels and `n` large enough the value is exact up to
/// round-off. `ell = 0` returns exactly 0 (constants are in the kernel of the
/// operator). Rejects kernels whose declared moment is not finite and
/// power-singular kernels with `ν ≥ (d+1)/2`.
pub fn boltzmann_eigenvalue(
    ell: u32,
    dim: Dimension,
    kernel: &KernelSpec,
    n: usize,
) -> Result<f64, Error> {
    kernel.validate_for(dim)?;
    let rule = folded_rule(dim, kernel, n)?;
    Ok(tilde_from_rule(ell, dim, &rule))
}

fn tilde_from_rule(ell: u32, dim: Dimension, rule: &FoldedRule) -> f64 {
    let omega = surface_area::<f64>(dim.get() - 2);
    let sum: f64 = rule
        .t
        .iter()
        .zip(&rule.w)
        .map(|(&t, &w)| w * (1.0 - eval_recurrence(ell, dim, t)))
        .sum();
    omega * sum
}

/// Total kernel mass `∫ b(e·σ) dσ = ω_{d-2} ∫ b(t)(1-t²)^{(d-3)/2} dt`.
///
/// Finite for bounded kernels always; for power-singular kernels only when
/// `ν < (d-1)/2` (a stronger condition than eigenvalue admissibility), and
/// rejected otherwise.
pub fn kernel_mass(dim: Dimension, kernel: &KernelSpec, n: usize) -> Result<f64, Error> {
    kernel.validate_for(dim)?;
    if let KernelForm::Power { nu, .. } = kernel.form {
        let limit = (dim.get() as f64 - 1.0) / 2.0;
        if nu >= limit {
            return Err(Error::NonIntegrableKernel {
                dim: dim.get(),
                reason: format!("kernel mass needs nu < (d-1)/2 = {limit}, got {nu}"),
            });
        }
    }
    let rule = folded_rule(dim, kernel, n)?;
    let omega = surface_area::<f64>(dim.get() - 2);
    Ok(omega * rule.w.iter().sum::<f64>())
}

/// The Poincaré constant by its two formulas.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PoincareConstant {
    /// `(d-1) / ∫ (1-(e·σ)²) b(e·σ) dσ`.
    pub by_moment: f64,
    /// `(1/2)·λ_2/λ̃_2` with `λ̃_2` from the eigenvalue quadrature.
    pub by_spectral: f64,
}

impl PoincareConstant {
    /// Canonical value (the moment formula).
    pub fn value(&self) -> f64 {
        self.by_moment
    }

    pub fn relative_gap(&self) -> f64 {
        let scale = self.by_moment.abs().max(self.by_spectral.abs());
        if scale == 0.0 {
            0.0
        } else {
            (self.by_moment - self.by_spectral).abs() / scale
        }
    }
}

fn poincare_from_rule(dim: Dimension, rule: &FoldedRule) -> Result<PoincareConstant, Error> {
    let d = dim.get();
    let omega = surface_area::<f64>(d - 2);
    let moment: f64 = rule
        .t
        .iter()
        .zip(&rule.w)
        .map(|(&t, &w)| w * (1.0 - t * t))
        .sum();
    let by_moment = (d as f64 - 1.0) / (omega * moment);
    let tilde2 = tilde_from_rule(2, dim, rule);
    let by_spectral = 0.5 * eigenvalue(2, dim).value as f64 / tilde2;
    let out = PoincareConstant {
        by_moment,
        by_spectral,
    };
    if out.relative_gap() > POINCARE_AGREEMENT_TOL {
        return Err(Error::PoincareMismatch {
            by_moment,
            by_spectral,
            rel_gap: out.relative_gap(),
        });
    }
    Ok(out)
}

/// Poincaré constant `C_P(d, b)`, computed by the explicit moment formula and
/// cross-checked against `(1/2)·λ_2/λ̃_2`; the two must agree to 1e-9 relative
/// or the computation fails loudly.
pub fn poincare_constant(
    dim: Dimension,
    kernel: &KernelSpec,
    n: usize,
) -> Result<PoincareConstant, Error> {
    kernel.validate_for(dim)?;
    let rule = folded_rule(dim, kernel, n)?;
    poincare_from_rule(dim, &rule)
}

/// Results of an eigenvalue-comparison sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralResult {
    pub d: u32,
    pub kernel: KernelSpec,
    /// `λ̃` keyed by harmonic order (0, 2, 4, …, 2·ell_max).
    pub tilde_lambda: BTreeMap<u32, f64>,
    /// Poincaré constant by the moment formula.
    pub poincare_constant: f64,
    /// Poincaré constant by the spectral formula.
    pub poincare_by_spectral: f64,
    /// `λ̃_2/λ_2 - λ̃_{2ℓ}/λ_{2ℓ}` keyed by `ℓ = 1..ell_max`; all nonnegative
    /// when the certified pointwise inequality holds, with exact zero at `ℓ = 1`.
    pub comparison_margins: BTreeMap<u32, f64>,
}

impl SpectralResult {
    pub fn min_margin(&self) -> f64 {
        self.comparison_margins
            .values()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// True iff every margin is ≥ `-tol`.
    pub fn margins_ok(&self, tol: f64) -> bool {
        self.min_margin() >= -tol
    }
}

/// Computes `λ̃` for the even orders up to `2·ell_max`, the Poincaré constant
/// by both formulas, and the comparison margins `λ̃_2/λ_2 - λ̃_{2ℓ}/λ_{2ℓ}`.
///
/// The margin at `ℓ = 1` is an exact zero by construction; all margins must be
/// nonnegative up to quadrature error when the pointwise gap bound holds.
pub fn eigenvalue_comparison(
    dim: Dimension,
    kernel: &KernelSpec,
    ell_max: u32,
    n: usize,
) -> Result<SpectralResult, Error> {
    assert!(ell_max >= 1, "eigenvalue comparison needs ell_max >= 1");
    kernel.validate_for(dim)?;
    let rule = folded_rule(dim, kernel, n)?;

    let mut tilde_lambda = BTreeMap::new();
    for ell in 0..=ell_max {
        let order = 2 * ell;
        tilde_lambda.insert(order, tilde_from_rule(order, dim, &rule));
    }

    let ratio2 = tilde_lambda[&2] / eigenvalue(2, dim).value as f64;
    let mut comparison_margins = BTreeMap::new();
    for ell in 1..=ell_max {
        let order = 2 * ell;
        let ratio = tilde_lambda[&order] / eigenvalue(order, dim).value as f64;
        comparison_margins.insert(ell, ratio2 - ratio);
    }

    let poincare = poincare_from_rule(dim, &rule)?;
    Ok(SpectralResult {
        d: dim.get(),
        kernel: kernel.clone(),
        tilde_lambda,
        poincare_constant: poincare.by_moment,
        poincare_by_spectral: poincare.by_spectral,
        comparison_margins,
    })
}

/// Default quadrature size for an `ell_max` sweep: resolves the polynomial
/// degree with a wide margin plus room for kernel variation.
pub fn default_quad_n(ell_max: u32) -> usize {
    4 * ell_max as usize + 64
}

/// The kernels exercised by the test suite and documentation examples: one of
/// each admissible form.
pub fn builtin_kernels() -> Vec<(&'static str, KernelSpec)> {
    vec![
        ("constant_one", KernelSpec::constant(1.0)),
        ("poly_one_plus_t2", KernelSpec::poly(vec![1.0, 0.0, 1.0])),
        ("poly_one_minus_t2", KernelSpec::poly(vec![1.0, 0.0, -1.0])),
        (
            "table_tent",
            KernelSpec::table(vec![(-1.0, 1.0), (0.0, 2.0), (1.0, 1.0)]),
        ),
        ("power_half", KernelSpec::power(1.0, 0.5)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn dim(d: u32) -> Dimension {
        Dimension::new(d).unwrap()
    }

    #[test]
    fn order_zero_eigenvalue_is_exactly_zero() {
        for (_, kernel) in builtin_kernels() {
            let v = boltzmann_eigenvalue(0, dim(3), &kernel, 64).unwrap();
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn constant_kernel_d3_gives_full_mass() {
        // b ≡ 1 on S²: ∫ P_ell dσ = 0 for ell ≥ 1, so λ̃_ell = |S²| = 4π.
        let kernel = KernelSpec::constant(1.0);
        for ell in 1..=8u32 {
            let v = boltzmann_eigenvalue(ell, dim(3), &kernel, 64).unwrap();
            let rel = (v - 4.0 * PI).abs() / (4.0 * PI);
            assert!(rel < 1e-13, "λ̃_{ell} relative error {rel:e}");
        }
        // Hand cross-check at ell = 2 via 1 - P_2 = d(1-t²)/(d-1):
        // (3/2)·2π·(4/3) = 4π.
        let hand = 1.5 * 2.0 * PI * (4.0 / 3.0);
        assert_abs_diff_eq!(
            boltzmann_eigenvalue(2, dim(3), &kernel, 64).unwrap(),
            hand,
            epsilon = 1e-10
        );
    }

    #[test]
    fn d2_constant_kernel() {
        // d = 2: ω_0 = 2, ∫(1 - cos ℓθ) dθ over [0, π] scaled → λ̃_ℓ = 2π.
        let kernel = KernelSpec::constant(1.0);
        for ell in 1..=5u32 {
            let v = boltzmann_eigenvalue(ell, dim(2), &kernel, 64).unwrap();
            assert_abs_diff_eq!(v, 2.0 * PI, epsilon = 1e-10);
        }
    }

    #[test]
    fn poincare_constant_d3_reference() {
        let kernel = KernelSpec::constant(1.0);
        let cp = poincare_constant(dim(3), &kernel, 64).unwrap();
        assert_abs_diff_eq!(cp.value(), 3.0 / (4.0 * PI), epsilon = 1e-12);
        assert!(cp.relative_gap() < 1e-12);
        // Inverse-linear in the kernel scale.
        let scaled = poincare_constant(dim(3), &KernelSpec::constant(2.5), 64).unwrap();
        assert_abs_diff_eq!(scaled.value(), cp.value() / 2.5, epsilon = 1e-13);
    }

    #[test]
    fn poincare_beta_oracle_d5() {
        // b = 1 - t², d = 5: C_P = 4 / (ω_3 ∫ (1-t²)^3 dt) = 35/(16π²).
        let kernel = KernelSpec::poly(vec![1.0, 0.0, -1.0]);
        let cp = poincare_constant(dim(5), &kernel, 64).unwrap();
        let exact = 35.0 / (16.0 * PI * PI);
        assert_abs_diff_eq!(cp.value(), exact, epsilon = 1e-12);
    }

    #[test]
    fn comparison_margins_constant_kernel() {
        let kernel = KernelSpec::constant(1.0);
        let result = eigenvalue_comparison(dim(3), &kernel, 5, default_quad_n(5)).unwrap();
        assert_eq!(result.comparison_margins[&1], 0.0);
        for ell in 2..=5u32 {
            let lam = eigenvalue(2 * ell, dim(3)).value as f64;
            let expected = 4.0 * PI * (1.0 / 6.0 - 1.0 / lam);
            assert_abs_diff_eq!(result.comparison_margins[&ell], expected, epsilon = 1e-10);
        }
        assert!(result.margins_ok(1e-9));
        assert_abs_diff_eq!(result.tilde_lambda[&0], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn comparison_margins_poly_kernel_d5() {
        let kernel = KernelSpec::poly(vec![1.0, 0.0, 1.0]);
        let result = eigenvalue_comparison(dim(5), &kernel, 8, default_quad_n(8)).unwrap();
        assert!(result.margins_ok(1e-9));
        assert_eq!(result.comparison_margins[&1], 0.0);
    }

    #[test]
    fn power_kernel_admissibility() {
        // ν = 9 at d = 3 violates ν < (d+1)/2 = 2.
        let bad = KernelSpec::power(1.0, 9.0);
        assert!(matches!(
            boltzmann_eigenvalue(2, dim(3), &bad, 64),
            Err(Error::NonIntegrableKernel { .. })
        ));
        // Mild singularity works and satisfies the comparison.
        let ok = KernelSpec::power(1.0, 0.5);
        let result = eigenvalue_comparison(dim(3), &ok, 6, 256).unwrap();
        assert!(result.margins_ok(1e-9));
        // Mass needs the stronger ν < (d-1)/2: ν = 1.5 admissible for λ̃ at
        // d = 4 but not for the mass.
        let edge = KernelSpec::power(1.0, 1.5);
        assert!(boltzmann_eigenvalue(2, dim(4), &edge, 64).is_ok());
        assert!(kernel_mass(dim(4), &edge, 64).is_err());
    }

    #[test]
    fn declared_moment_flag_is_enforced() {
        let mut kernel = KernelSpec::constant(1.0);
        kernel.declared_moment_finite = false;
        assert!(matches!(
            boltzmann_eigenvalue(2, dim(3), &kernel, 32),
            Err(Error::NonIntegrableKernel { .. })
        ));
    }

    #[test]
    fn kernel_scale_equivariance() {
        let c = 3.25f64;
        for (name, kernel) in builtin_kernels() {
            let scaled = match &kernel.form {
                KernelForm::Constant { c: c0 } => KernelSpec::constant(c0 * c),
                KernelForm::Poly { coeffs } => {
                    KernelSpec::poly(coeffs.iter().map(|a| a * c).collect())
                }
                KernelForm::Table { points } => {
                    KernelSpec::table(points.iter().map(|&(t, v)| (t, v * c)).collect())
                }
                KernelForm::Power { c: c0, nu } => KernelSpec::power(c0 * c, *nu),
            };
            for ell in [1u32, 3, 6] {
                let base = boltzmann_eigenvalue(ell, dim(5), &kernel, 96).unwrap();
                let big = boltzmann_eigenvalue(ell, dim(5), &scaled, 96).unwrap();
                let rel = (big - c * base).abs() / (c * base).abs();
                assert!(
                    rel < 1e-12,
                    "{name}: scale equivariance broken, rel {rel:e}"
                );
            }
            let cp0 = poincare_constant(dim(5), &kernel, 96).unwrap().value();
            let cp1 = poincare_constant(dim(5), &scaled, 96).unwrap().value();
            assert_abs_diff_eq!(cp1, cp0 / c, epsilon = 1e-12 * cp0.abs());
        }
    }

    #[test]
    fn eigenvalues_bounded_by_twice_mass() {
        // 0 ≤ λ̃_ell ≤ 2∫b dσ since |P_ell| ≤ 1.
        for (name, kernel) in builtin_kernels() {
            if matches!(kernel.form, KernelForm::Power { .. }) {
                continue; // mass integral is a different admissibility class
            }
            let mass = kernel_mass(dim(4), &kernel, 128).unwrap();
            for ell in 1..=9u32 {
                let v = boltzmann_eigenvalue(ell, dim(4), &kernel, 128).unwrap();
                assert!(v >= 0.0, "{name}: λ̃_{ell} = {v} < 0");
                assert!(
                    v <= 2.0 * mass * (1.0 + 1e-9),
                    "{name}: λ̃_{ell} = {v} exceeds 2·mass = {}",
                    2.0 * mass
                );
            }
        }
        let mass = kernel_mass(dim(3), &KernelSpec::power(1.0, 0.5), 256).unwrap();
        assert!(mass.is_finite() && mass > 0.0);
    }

    #[test]
    fn kernel_json_forms() {
        let k = KernelSpec::parse_json(r#"{"form":"constant","c":1.0}"#).unwrap();
        assert_eq!(k, KernelSpec::constant(1.0));

        let k = KernelSpec::parse_json(r#"{"form":"poly","coeffs":[1.0,0.0,1.0]}"#).unwrap();
        assert_eq!(k, KernelSpec::poly(vec![1.0, 0.0, 1.0]));

        let k =
            KernelSpec::parse_json(r#"{"form":"table","points":[[-1.0,1.0],[1.0,2.0]]}"#).unwrap();
        assert_eq!(k, KernelSpec::table(vec![(-1.0, 1.0), (1.0, 2.0)]));

        let k = KernelSpec::parse_json(r#"{"form":"power","c":1.0,"nu":0.5}"#).unwrap();
        assert_eq!(k, KernelSpec::power(1.0, 0.5));

        assert!(KernelSpec::parse_json(r#"{"form":"constant","c":-1.0}"#).is_err());
        assert!(KernelSpec::parse_json(r#"{"form":"nope"}"#).is_err());
        assert!(KernelSpec::parse_json("not json").is_err());
        assert!(
            KernelSpec::parse_json(r#"{"form":"table","points":[[0.5,1.0],[0.1,1.0]]}"#).is_err()
        );

        // Round trip.
        let json = serde_json::to_string(&KernelSpec::power(2.0, 0.25)).unwrap();
        let back: KernelSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, KernelSpec::power(2.0, 0.25));
    }

    #[test]
    fn table_kernel_interpolates_and_clamps() {
        let k = KernelSpec::table(vec![(-1.0, 1.0), (0.0, 2.0), (1.0, 1.0)]);
        assert_abs_diff_eq!(k.evaluate(-0.5), 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(k.evaluate(0.5), 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(k.evaluate(0.0), 2.0, epsilon = 1e-15);
        let narrow = KernelSpec::table(vec![(-0.5, 3.0), (0.5, 4.0)]);
        assert_eq!(narrow.evaluate(-0.9), 3.0);
        assert_eq!(narrow.evaluate(0.9), 4.0);
    }
}
