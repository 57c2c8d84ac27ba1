use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{sturm_root_count, RationalPolynomial};
use crate::interval::Enclosure;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertMethod {
    AllShiftedCoefficientsNonnegative,
    DescartesOneRootLocalized,
    SturmZeroRoots,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Positive,
    NotCertified,
}

/// Record of why a polynomial is positive on the ray `[from, ∞)`, or of the
/// fact that no method succeeded.
#[derive(Debug, Clone, PartialEq)]
pub struct PositivityCertificate {
    pub polynomial: RationalPolynomial,
    /// Interval coefficients that `polynomial` bounds from below, when the
    /// certificate was produced for an interval polynomial.
    pub coefficient_bounds: Option<Vec<Enclosure>>,
    pub from: Rational,
    pub method: Option<CertMethod>,
    pub sign_changes: usize,
    /// Exact `(x, p(x))` pairs the argument relies on.
    pub endpoint_values: Vec<(Rational, Rational)>,
    pub localization_point: Option<Rational>,
    pub root_bound: Option<Rational>,
    pub verdict: Verdict,
}

impl PositivityCertificate {
    pub fn is_positive(&self) -> bool {
        self.verdict == Verdict::Positive
    }

    pub fn value_at(&self, x: &Rational) -> Option<&Rational> {
        self.endpoint_values
            .iter()
            .find(|(p, _)| p == x)
            .map(|(_, v)| v)
    }
}

/// Localization point used by the one-sign-change argument.
pub const DEFAULT_LOCALIZATION_POINT: i64 = 0;

/// Tries to show `p > 0` on `[a, ∞)`, in order:
///
/// 1. one coefficient sign change, `p(c) < 0` at some `0 <= c < a`, `p(a) > 0`
///    and a positive leading coefficient; the single positive root then lies
///    in `(c, a)`;
/// 2. every coefficient of `p(t + a)` nonnegative with a positive constant;
/// 3. `p(a) > 0` and no Sturm root in `(a, B)` for the Cauchy bound `B`.
pub fn certify_positive_on_ray(p: &RationalPolynomial, a: &Rational) -> PositivityCertificate {
    let mut cert = PositivityCertificate {
        polynomial: p.clone(),
        coefficient_bounds: None,
        from: a.clone(),
        method: None,
        sign_changes: 0,
        endpoint_values: Vec::new(),
        localization_point: None,
        root_bound: None,
        verdict: Verdict::NotCertified,
    };
    let Ok(changes) = p.descartes_sign_changes() else {
        return cert;
    };
    cert.sign_changes = changes;
    let pa = p.eval_at(a);
    cert.endpoint_values.push((a.clone(), pa.clone()));
    if !pa.is_positive() {
        return cert;
    }

    let c = rational::int(DEFAULT_LOCALIZATION_POINT);
    let lead_positive = p.leading().is_some_and(Signed::is_positive);
    if changes == 1 && lead_positive && !c.is_negative() && c < *a {
        let pc = p.eval_at(&c);
        if pc.is_negative() {
            cert.endpoint_values.insert(0, (c.clone(), pc));
            cert.localization_point = Some(c);
            cert.method = Some(CertMethod::DescartesOneRootLocalized);
            cert.verdict = Verdict::Positive;
            return cert;
        }
    }

    let shifted = p.taylor_shift(a);
    if shifted.coeffs().iter().all(|c| !c.is_negative()) {
        cert.method = Some(CertMethod::AllShiftedCoefficientsNonnegative);
        cert.verdict = Verdict::Positive;
        return cert;
    }

    if let Ok(bound) = p.cauchy_bound() {
        let positive = if bound <= *a {
            true
        } else {
            let pb = p.eval_at(&bound);
            let roots = sturm_root_count(p, a, &bound).unwrap_or(usize::MAX);
            cert.endpoint_values.push((bound.clone(), pb));
            roots == 0
        };
        cert.root_bound = Some(bound);
        if positive {
            cert.method = Some(CertMethod::SturmZeroRoots);
            cert.verdict = Verdict::Positive;
        }
    }
    cert
}

#[derive(Serialize)]
struct PointValue {
    point: String,
    value: String,
}

impl Serialize for PositivityCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PositivityCertificate", 8)?;
        s.serialize_field("polynomial", &self.polynomial)?;
        s.serialize_field(
            "domain",
            &format!("[{}, inf)", rational::to_fraction_string(&self.from)),
        )?;
        s.serialize_field("method", &self.method)?;
        s.serialize_field("sign_changes", &self.sign_changes)?;
        let values: Vec<PointValue> = self
            .endpoint_values
            .iter()
            .map(|(x, v)| PointValue {
                point: rational::to_fraction_string(x),
                value: rational::to_fraction_string(v),
            })
            .collect();
        s.serialize_field("endpoint_values", &values)?;
        s.serialize_field(
            "root_bound",
            &self.root_bound.as_ref().map(rational::to_fraction_string),
        )?;
        s.serialize_field("coefficient_bounds", &self.coefficient_bounds)?;
        s.serialize_field("verdict", &self.verdict)?;
        s.end()
    }
}
