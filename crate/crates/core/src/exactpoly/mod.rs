//! Exact rational polynomials and positivity certificates on rays.

mod certificate;
mod poly;
mod sturm;

pub use certificate::{
    certify_positive_on_ray, CertMethod, PositivityCertificate, Verdict, DEFAULT_LOCALIZATION_POINT,
};
pub use poly::RationalPolynomial;
pub use sturm::{sturm_root_count, sturm_sequence};

/// The elementary cubic-to-quintic polynomials whose positivity on `[1, ∞)`
/// feeds both monotonicity proofs. The first two are printed identically in
/// the source and are kept that way.
pub mod lemma {
    use super::RationalPolynomial;

    /// x³ + 3x² − x − 1
    pub fn p1() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[-1, -1, 3, 1])
    }

    /// Printed identical to [`p1`].
    pub fn p2() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[-1, -1, 3, 1])
    }

    /// 3x⁴ + 8x³ + 2x² − 1
    pub fn p3() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[-1, 0, 2, 8, 3])
    }

    /// x⁵ + 3x⁴ + 2x³ + 2x² + x − 1
    pub fn p4() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[-1, 1, 2, 2, 3, 1])
    }

    /// x⁵ + 5x⁴ + 6x³ − 3x − 1
    pub fn p5() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[-1, -3, 0, 6, 5, 1])
    }

    pub fn rational_family() -> [RationalPolynomial; 5] {
        [p1(), p2(), p3(), p4(), p5()]
    }

    /// 13x⁶ + 66x⁵ + 86x⁴ + 8x³ − 31x² − 2x + 8, numerator of the final lower
    /// bound for q′.
    pub fn q_prime_numerator() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[8, -2, -31, 8, 86, 66, 13])
    }

    /// Coefficients of [`q_prime_numerator`] re-expanded about x = 1.
    pub const Q_PRIME_NUMERATOR_SHIFTED: [i64; 7] = [148, 712, 1364, 1272, 611, 144, 13];

    /// (x + 1)²(x + 2), denominator of the final lower bound for q′.
    pub fn q_prime_denominator() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[2, 5, 4, 1])
    }
}
