//! Certified replay of two monotonicity results for ratios built from the
//! gamma function, and of the resulting unit-ball volume sequence.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactpoly`]: exact rational polynomials, Descartes and Sturm
//!   positivity certificates;
//! * [`interval`], [`constants`], [`specfun`]: binary64 enclosures and
//!   rigorous enclosures of lnΓ, ψ, ψ′, ψ″;
//! * [`functions`]: F, G, Ω_n and the auxiliary functions of both proofs;
//! * [`certify`]: proof-step reports and grid monotonicity certificates.

pub mod certify;
pub mod constants;
pub mod error;
pub mod exactpoly;
pub mod functions;
pub mod interval;
pub mod rational;
pub mod specfun;

pub use error::{Error, Result};
pub use exactpoly::{PositivityCertificate, RationalPolynomial};
pub use interval::Enclosure;
pub use rational::Rational;
