//! Rigorous enclosures of lnΓ and the polygamma functions, the elementary
//! bounds used by the proofs, and polynomials with enclosure coefficients.

mod bounds;
mod gamma;
mod intervalpoly;

pub use bounds::{digamma_bounds, log1p_bounds, polygamma_bounds, PaperBounds};
pub use gamma::{digamma, ln_gamma, polygamma, tetragamma, trigamma, SHIFT_THRESHOLD};
pub use intervalpoly::{certify_positive_interval_poly, IntervalPolynomial};
