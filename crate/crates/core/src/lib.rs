//! Max-plus spectral theory of commuting matrices.
//!
//! The crate is layered bottom-up:
//!
//! - [`scalar`], [`matrix`], [`poly`]: the max-plus semiring over exact
//!   rationals (plus an `f64` float mode), dense matrices, residuation,
//!   thresholding and max polynomials.
//! - [`spectral`]: Perron root, Kleene star, critical digraph, principal
//!   eigencone and spectral projector of a single matrix.
//! - [`structure`]: classes, reduced digraph, access closure, spectral and
//!   premier spectral classes, the full spectrum and every eigencone.
//! - [`commuting`]: common eigenvectors of commuting families, polynomial
//!   spectral mapping, spectral inequalities, eigencone intersections and
//!   the distinct-roots structure report.
//! - [`boolean`]: saturation digraphs, commuting Boolean digraphs and the
//!   common eigennode of two commuting irreducible matrices.
//! - [`classical`]: the same questions for nonnegative matrices under the
//!   usual `+` and `×`.
//! - [`generate`]: seeded random commuting families.
//!
//! Node and class indices are 0-based throughout the API.

pub mod boolean;
pub mod classical;
pub mod commuting;
pub mod error;
pub mod generate;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod structure;

pub use error::{Error, Result};
pub use matrix::{Algebra, TropMatrix, Vector};
pub use poly::{MaxPolynomial, Monomial};
pub use scalar::{FloatScalar, Rational, Scalar, TropScalar};
pub use spectral::{ConeGenerators, CriticalDigraph};
pub use structure::ClassDecomposition;
