//! Two-state Yang-Baxter machinery: vertex matrices over exact rational or
//! complex scalars, the gauge and inversion symmetry groups acting on
//! solution triplets, constructors for the five-, six- and eight-vertex
//! solution families, and the elliptic parametrization of the symmetric
//! eight-vertex family.
//!
//! The equation acts on a triple tensor product of two-dimensional spaces
//! in the triplet form `A12 B13 C23 = C23 B13 A12`. Everything is generic
//! over the scalar realization: [`Rational`] for exact arithmetic,
//! [`Complex`] for floating point with tolerances. The two never mix; the
//! type parameter keeps them apart.
//!
//! ```
//! use yangbax::families::eight_vertex;
//! use yangbax::ybe::ybe_residual;
//! use yangbax::{Rational, Scalar};
//!
//! let r = Rational::from_int;
//! let params = eight_vertex::Params::new(r(1), r(1), r(1), r(2), r(3), r(5), r(7))?;
//! let triplet = eight_vertex::build(&params)?;
//! assert!(ybe_residual(&triplet).is_zero_tol(0.0));
//! # Ok::<(), yangbax::Error>(())
//! ```

pub mod elliptic;
pub mod families;
pub mod invariants;
pub mod matrix;
pub mod sampling;
pub mod scalar;
pub mod symmetry;
pub mod ybe;

mod error;

pub use error::{Error, Result};
pub use matrix::{embed, kron2, kron24, kron42, Mat2, SpacePair, TripleSpaceMatrix, Triplet, VertexMatrix};
pub use scalar::Scalar;

/// Exact scalar realization: arbitrary-precision rationals in lowest terms.
pub type Rational = num_rational::BigRational;

/// Approximate scalar realization: complex doubles with tolerance-based
/// comparison.
pub type Complex = num_complex::Complex64;

pub type RationalMatrix = VertexMatrix<Rational>;
pub type ComplexMatrix = VertexMatrix<Complex>;
pub type RationalTriplet = Triplet<Rational>;
pub type ComplexTriplet = Triplet<Complex>;

/// Default absolute tolerance on max-entry magnitudes in the approximate
/// realization.
pub const DEFAULT_TOL: f64 = 1e-10;
