//! Exact commutative algebra over the rationals.
//!
//! The crate provides a small but complete toolchain for desk-scale
//! computations in polynomial rings: exact rational coefficients,
//! weighted monomial orders, reduced Groebner bases for ideals and
//! submodules of free modules, derived ideal operations (elimination,
//! intersection, colon, saturation, radical membership, Krull
//! dimension), graded free resolutions with Betti tables, Hilbert
//! series, quotient-ring classification (Cohen-Macaulay, Gorenstein,
//! smoothness, Serre normality) and symmetric/Rees algebra
//! presentations of blow-ups.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals
//! and every answer is a certificate, not an approximation. All values
//! are immutable after construction and safe to share across threads.

pub mod blowup;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod module;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod props;
pub mod resolution;
pub mod ring;
pub mod scenarios;

pub use error::Error;
pub use groebner::GroebnerBasis;
pub use ideal::Ideal;
pub use module::FreeModuleElement;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{Coeff, Polynomial};
pub use ring::PolyRing;

pub type Result<T> = std::result::Result<T, Error>;
