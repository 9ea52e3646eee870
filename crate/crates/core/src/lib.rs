//! Exact-arithmetic toolkit for the affine cubic surfaces
//! `S_{a,b} : xyz = a(x) + b(y) - c` with `a(0) = b(0) = c`.
//!
//! The crate provides:
//! - [`poly`]: univariate and sparse multivariate integer polynomials,
//!   plus the `a*` truncation and the coefficient-reversal involution `ā`;
//! - [`surface`]: surface specifications, normalization over `ℤ`, the
//!   eight-surface isomorphism orbit, and automorphism-group classification;
//! - [`birational`]: point-level action of the generators `σx, σy, τ`,
//!   fundamental-domain reduction on `S₀`, and the `(p, q)` curve-invariant
//!   dynamics;
//! - [`symbolic`]: polynomial maps between surfaces, normal forms modulo the
//!   principal surface ideal, map verification and composition;
//! - [`diophantine`]: the sieved integral-point census, polynomial roots
//!   modulo `m`, Mordell's explicit point, and growth-rate reporting;
//! - [`conic`]: conic pencils through integral points and the Pell-type
//!   solver producing infinite families with linear recurrences;
//! - [`curves`]: the catalog of parametrized curves on `S₀`, pushing curves
//!   through automorphism words, and the product morphisms.
//!
//! All arithmetic is exact: coefficients and coordinates are arbitrary
//! precision integers, and no operation ever rounds.

pub mod birational;
pub mod conic;
pub mod curves;
pub mod diophantine;
pub mod error;
pub mod poly;
pub mod surface;
pub mod symbolic;

pub use error::Error;
pub use poly::{MultiPoly, UniPoly};
pub use surface::{Gen, GeneratorWord, SurfaceSpec};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
