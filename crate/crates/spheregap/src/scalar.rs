//! Scalar traits the rest of the crate is generic over.
//!
//! Polynomial arithmetic only needs a commutative ring with exact equality;
//! division-based operations (remainders, square-free parts) need a field.
//! The floating-point evaluation and quadrature paths are generic over an
//! IEEE scalar so that f32 and f64 both work, with f64 the alias used by the
//! command line and all stated tolerances.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed};

/// Coefficient scalar for dense polynomials: exact field arithmetic.
///
/// `num_rational::BigRational` is the canonical instance; `f64` also satisfies
/// the bounds and is occasionally convenient in tests, but nothing in the
/// certification path is ever instantiated with an inexact scalar.
pub trait Coeff: Num + Clone + Neg<Output = Self> + Debug {}

impl<T> Coeff for T where T: Num + Clone + Neg<Output = T> + Debug {}

/// Coefficient scalar with a total sign, as needed by Sturm-type sign queries.
pub trait SignedCoeff: Coeff + Signed + PartialOrd {}

impl<T> SignedCoeff for T where T: Coeff + Signed + PartialOrd {}

/// IEEE floating-point scalar for the quadrature and defect-checker paths.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + 'static {
    /// Converts a small unsigned integer exactly.
    fn of_u32(n: u32) -> Self {
        Self::from_u32(n).expect("u32 fits in any IEEE scalar")
    }

    /// Converts an f64 constant, rounding once.
    fn of_f64(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts")
    }
}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Debug + 'static {}
