use serde::{Deserialize, Serialize};

use crate::exactpoly::{
    certify_positive_on_ray, PositivityCertificate, RationalPolynomial, Verdict,
};
use crate::interval::Enclosure;
use crate::rational::{self, Rational};

/// Polynomial with enclosure coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalPolynomial {
    coeffs: Vec<Enclosure>,
}

impl IntervalPolynomial {
    pub fn new(coeffs: Vec<Enclosure>) -> Self {
        Self { coeffs }
    }

    pub fn from_rational(p: &RationalPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(Enclosure::from_rational).collect())
    }

    /// Coefficient-wise `a + c·b` for exact `a`, `b` and an enclosed constant `c`.
    pub fn affine(a: &RationalPolynomial, b: &RationalPolynomial, c: Enclosure) -> Self {
        let n = a.coeffs().len().max(b.coeffs().len());
        Self::new(
            (0..n)
                .map(|i| {
                    Enclosure::from_rational(&a.coeff(i))
                        + Enclosure::from_rational(&b.coeff(i)) * c
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Enclosure] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn negate(&self) -> Self {
        Self::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    /// Horner evaluation; the result contains p(ξ) for every ξ in `x` and every
    /// choice of coefficients inside their enclosures.
    pub fn eval(&self, x: Enclosure) -> Enclosure {
        self.coeffs
            .iter()
            .rev()
            .fold(Enclosure::point(0.0), |acc, &c| acc * x + c)
    }

    /// Exact polynomial built from the lower endpoint of every coefficient.
    /// For x ≥ 0 it bounds `self` from below.
    pub fn lower_bound_polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| rational::from_f64(c.lo()).expect("finite"))
                .collect(),
        )
    }

    /// Sign of each coefficient, or `None` where the enclosure contains zero.
    pub fn sign_pattern(&self) -> Vec<Option<bool>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_positive() {
                    Some(true)
                } else if c.is_negative() {
                    Some(false)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Certifies positivity on `[a, ∞)` (with `a ≥ 0`) through the exact
/// lower-endpoint polynomial. Coefficients whose sign is undetermined make the
/// verdict not-certified.
pub fn certify_positive_interval_poly(
    p: &IntervalPolynomial,
    a: &Rational,
) -> PositivityCertificate {
    let lower = p.lower_bound_polynomial();
    let mut cert = certify_positive_on_ray(&lower, a);
    cert.coefficient_bounds = Some(p.coeffs().to_vec());
    let determined = p.sign_pattern().iter().all(Option::is_some);
    if !determined || num_traits::Signed::is_negative(a) {
        cert.verdict = Verdict::NotCertified;
        cert.method = None;
    }
    cert
}
