//! Certified numerics for zonal polynomials on high-dimensional spheres.
//!
//! The crate builds the dimension-`d` Legendre (zonal ultraspherical) polynomials
//! `P_ell` exactly over arbitrary-precision rationals, certifies that the
//! spectral-gap defect polynomials attached to them are nonnegative on `[-1, 1]`
//! by Sturm-sequence root counting, cross-validates three independent evaluation
//! paths (exact recurrence, integral representation, `d = 2` trigonometric closed
//! form), and computes eigenvalues and Poincaré constants of the angular
//! Boltzmann smoothing operator for a given collision kernel.
//!
//! Module map:
//!
//! * [`poly`] — dense univariate polynomials, generic over the coefficient scalar.
//! * [`legendre`] — exact `P_ell` construction, Laplacian eigenvalues, gap polynomials.
//! * [`certify`] — square-free decomposition, Sturm chains, nonnegativity certificates.
//! * [`quad`] — Gauss–Jacobi quadrature, integral-representation evaluation, and
//!   floating-point defect checkers for the pointwise inequalities.
//! * [`spectral`] — angular-kernel eigenvalues, Poincaré constants, eigenvalue
//!   comparison sweeps.
//!
//! All certification runs in exact rational arithmetic; `binary64` appears only in
//! the quadrature and spectral modules and in [`legendre::evaluate_float`].

pub mod certify;
pub mod legendre;
pub mod poly;
pub mod quad;
pub mod scalar;
pub mod spectral;

mod error;

pub use error::Error;

/// Exact scalar used by all certification paths.
pub type Rational = num_rational::BigRational;

/// Dense univariate polynomial over [`Rational`], ascending coefficient order.
pub type Poly = poly::DensePolynomial<Rational>;

/// Complex point `z = x + i s sqrt(1 - x^2)` used by the integral-representation
/// and defect-checker paths.
pub type ComplexPoint = num_complex::Complex<f64>;

pub use certify::{
    certify_improved, certify_nonneg, certify_original, count_roots, square_free, sturm_chain,
    telescoping_identity, NonnegCertificate, SturmChain, Verdict,
};
pub use legendre::{
    eigenvalue, evaluate_float, gap_polynomial, gap_ratio, gap_scaling_identity, legendre_poly,
    total_gap_polynomial, Dimension, Eigenvalue,
};
pub use quad::{
    chebyshev_eval, defect_battery, gamma, gauss_jacobi_rule, imag_gap_defect, integral_eval,
    modulus_check, real_gap_defect, sine_defect, surface_area, trig_gap_defects, BatteryReport,
    QuadratureRule,
};
pub use spectral::{
    boltzmann_eigenvalue, builtin_kernels, default_quad_n, eigenvalue_comparison, kernel_mass,
    poincare_constant, KernelForm, KernelSpec, PoincareConstant, SpectralResult,
};
