use num_traits::Signed;

use super::grid::{grid_monotone_certificate, Direction, GridFunction};
use super::report::{ProofStep, Status, TheoremId, VerificationReport};
use super::{anchor_step, below_status, error_status, sequence_status, GridSpec};
use crate::error::Result;
use crate::exactpoly::{certify_positive_on_ray, lemma, RationalPolynomial};
use crate::functions;
use crate::interval::Enclosure;
use crate::rational::{approx_f64, int, ratio, Rational};

#[derive(Debug, Clone)]
pub struct Theorem1Inputs {
    pub q_at_1: f64,
    /// Numerator of the final lower bound for q′.
    pub numerator: RationalPolynomial,
    /// Its expected coefficients about x = 1, lowest degree first.
    pub shifted: Vec<i64>,
    pub f_grid: GridSpec,
}

impl Default for Theorem1Inputs {
    fn default() -> Self {
        Self {
            q_at_1: 3.468,
            numerator: lemma::q_prime_numerator(),
            shifted: lemma::Q_PRIME_NUMERATOR_SHIFTED.to_vec(),
            f_grid: GridSpec {
                from: 0.0,
                to: 50.0,
                step: 0.01,
            },
        }
    }
}

/// {1, 3/2, 2, …, 50}
fn half_grid() -> Vec<Rational> {
    (2..=100).map(|k| ratio(k, 2)).collect()
}

pub fn verify_theorem1() -> Result<VerificationReport> {
    verify_theorem1_with(&Theorem1Inputs::default())
}

pub fn verify_theorem1_with(inputs: &Theorem1Inputs) -> Result<VerificationReport> {
    let mut steps = vec![anchor_step(
        "a",
        "q(1) anchor and q(1) > 0",
        functions::q_func(1.0),
        inputs.q_at_1,
        &format!("{}", inputs.q_at_1),
        true,
    )];

    let one = int(1);
    let shifted = inputs.numerator.taylor_shift(&one);
    let want: Vec<Rational> = inputs.shifted.iter().map(|&c| int(c)).collect();
    let matches = shifted.coeffs() == want.as_slice();
    let nonneg = shifted.coeffs().iter().all(|c| !c.is_negative());
    steps.push(
        ProofStep::new(
            "b",
            format!(
                "numerator {} re-expanded about 1 has coefficients {:?}, all nonnegative",
                inputs.numerator, inputs.shifted
            ),
            Status::from_bool(matches && nonneg),
        )
        .certificate(certify_positive_on_ray(&inputs.numerator, &one)),
    );

    let grid = half_grid();
    let den = lemma::q_prime_denominator();
    let mut bounds = Vec::with_capacity(grid.len());
    let mut positive = true;
    for x in &grid {
        let b = inputs.numerator.eval_at(x) / den.eval_at(x);
        positive &= b.is_positive();
        bounds.push(Enclosure::from_rational(&b));
    }
    let mut step = ProofStep::new(
        "c",
        "exact lower bound for q' positive on {1, 1.5, ..., 50}",
        Status::from_bool(positive),
    );
    if let Some(min) = bounds.iter().min_by(|a, b| a.lo().total_cmp(&b.lo())) {
        step = step.computed(*min);
    }
    steps.push(step);

    let xs: Vec<f64> = grid.iter().map(approx_f64).collect();
    let mut status = Status::Pass;
    let mut description = "q' above its lower bound and positive on {1, 1.5, ..., 50}".to_string();
    for (x, bound) in xs.iter().zip(&bounds) {
        let s = match functions::q_prime(*x) {
            Ok(qp) => below_status(bound, &qp).min(if qp.is_positive() {
                Status::Pass
            } else if qp.hi() <= 0.0 {
                Status::Fail
            } else {
                Status::Inconclusive
            }),
            Err(e) => error_status(&e),
        };
        if s < status {
            status = s;
            description.push_str(&format!("; violated at x = {x}"));
        }
    }
    steps.push(ProofStep::new("d", description, status));

    let ratios: Vec<Enclosure> = xs
        .iter()
        .map(|&x| functions::fg_ratio(x))
        .collect::<Result<_>>()?;
    let (status, bad) = sequence_status(&ratios, Direction::Increasing);
    let mut description =
        "hypothesis check: f'/g' strictly increasing on {1, 1.5, ..., 50} (monotone ratio rule trusted)"
            .to_string();
    if let Some(i) = bad {
        description.push_str(&format!(
            "; not separated between {} and {}",
            xs[i],
            xs[i + 1]
        ));
    }
    steps.push(ProofStep::new("e", description, status));

    let g = inputs.f_grid;
    let cert =
        grid_monotone_certificate(GridFunction::F, g.from, g.to, g.step, Direction::Increasing)?;
    steps.push(
        ProofStep::new(
            "f",
            format!(
                "F strictly increasing on the grid [{}, {}] step {} with exact values at 0 and 1 ({} pairs verified)",
                g.from, g.to, g.step, cert.verified_pairs
            ),
            cert.status,
        )
        .grid(cert),
    );
    Ok(VerificationReport::new(TheoremId::Theorem1, steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> Theorem1Inputs {
        Theorem1Inputs {
            f_grid: GridSpec {
                from: 0.0,
                to: 3.0,
                step: 0.05,
            },
            ..Default::default()
        }
    }

    #[test]
    fn passes_on_a_short_grid() {
        let r = verify_theorem1_with(&quick()).unwrap();
        assert_eq!(r.overall, Status::Pass, "{}", r.to_text());
        assert!(r.step("a").unwrap().computed.unwrap().within(3.468, 0.01));
    }

    #[test]
    fn mutated_constant_breaks_only_the_shift_step() {
        let mut inputs = quick();
        inputs.numerator = &inputs.numerator + &RationalPolynomial::from_ints(&[1]);
        let r = verify_theorem1_with(&inputs).unwrap();
        assert_eq!(r.failing_steps(), vec!["b"]);
    }

    #[test]
    fn splice_is_consistent() {
        let f0 = functions::f_ratio(0.0).unwrap();
        let f = functions::f_ratio(0.02).unwrap();
        assert!(f0.strictly_below(&f));
    }
}
