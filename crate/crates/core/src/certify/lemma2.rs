use super::anchor_step;
use super::report::{ProofStep, Status, TheoremId, VerificationReport};
use crate::exactpoly::{certify_positive_on_ray, lemma, RationalPolynomial};
use crate::functions::{self, LnPiPolynomial};
use crate::interval::Enclosure;
use crate::rational::{self, int};
use crate::specfun::certify_positive_interval_poly;

/// Everything the lemma replay depends on, so that each ingredient can be
/// perturbed independently.
#[derive(Debug, Clone)]
pub struct Lemma2Inputs {
    /// p₁ … p₅ with their exact values at 1.
    pub family: Vec<(RationalPolynomial, i64)>,
    pub p6: LnPiPolynomial,
    pub p6_at_0: f64,
    pub p6_at_1: f64,
}

impl Default for Lemma2Inputs {
    fn default() -> Self {
        let values = [2, 2, 12, 8, 8];
        Self {
            family: lemma::rational_family().into_iter().zip(values).collect(),
            p6: functions::p6(),
            p6_at_0: -113.68,
            p6_at_1: 5087.39,
        }
    }
}

/// Expected sign pattern of the p₆ coefficients, highest degree first.
const P6_SIGNS: [bool; 4] = [true, true, true, false];

pub fn verify_lemma2() -> VerificationReport {
    verify_lemma2_with(&Lemma2Inputs::default())
}

pub fn verify_lemma2_with(inputs: &Lemma2Inputs) -> VerificationReport {
    let mut steps = Vec::new();
    let one = int(1);
    let zero = int(0);
    for (i, (p, at1)) in inputs.family.iter().enumerate() {
        let name = format!("p{}", i + 1);
        let changes = p.descartes_sign_changes().unwrap_or(0);
        let cert = certify_positive_on_ray(p, &one);
        let mut description = format!(
            "{name} = {p}: one coefficient sign change ({changes} found) and positive on [1, inf)"
        );
        if i == 1 {
            description.push_str("; printed identical to p1, certified as printed");
        }
        steps.push(
            ProofStep::new(
                format!("{name}.positive"),
                description,
                Status::from_bool(changes == 1 && cert.is_positive()),
            )
            .certificate(cert),
        );
        for (x, want) in [(&zero, -1), (&one, *at1)] {
            let got = p.eval_at(x);
            steps.push(
                ProofStep::new(
                    format!("{name}.at{x}"),
                    format!(
                        "{name}({x}) = {want} exactly, got {}",
                        rational::to_fraction_string(&got)
                    ),
                    Status::from_bool(got == int(want)),
                )
                .computed(Enclosure::from_rational(&got))
                .expected(format!("{want} (published value)"), 0.0),
            );
        }
    }

    let p6 = inputs.p6.to_interval();
    let signs = p6.sign_pattern();
    let descending: Vec<Option<bool>> = signs.iter().rev().copied().collect();
    let pattern_ok = descending.len() == P6_SIGNS.len()
        && descending
            .iter()
            .zip(P6_SIGNS)
            .all(|(s, want)| *s == Some(want));
    let cert = certify_positive_interval_poly(&p6, &one);
    let shown: String = descending
        .iter()
        .map(|s| match s {
            Some(true) => '+',
            Some(false) => '-',
            None => '?',
        })
        .collect();
    steps.push(
        ProofStep::new(
            "p6.positive",
            format!(
                "p6 coefficient signs (highest first) {shown}, expected +++-, and positive on [1, inf) via its lower-endpoint polynomial"
            ),
            Status::from_bool(pattern_ok && cert.is_positive()),
        )
        .certificate(cert),
    );
    steps.push(anchor_step(
        "p6.at0",
        "p6(0) anchor",
        Ok(p6.eval(Enclosure::point(0.0))),
        inputs.p6_at_0,
        &format!("{}", inputs.p6_at_0),
        false,
    ));
    steps.push(anchor_step(
        "p6.at1",
        "p6(1) anchor",
        Ok(p6.eval(Enclosure::point(1.0))),
        inputs.p6_at_1,
        &format!("{}", inputs.p6_at_1),
        true,
    ));
    VerificationReport::new(TheoremId::Lemma2, steps)
}
