use rayon::prelude::*;
use serde::Serialize;

use super::grid::Direction;
use super::report::{ProofStep, TheoremId, VerificationReport};
use super::{below_status, sequence_status};
use crate::error::{domain, Result};
use crate::functions::{self, GUARD_RADIUS};
use crate::interval::Enclosure;

/// Points of the convergence trend for Ω_n^{1/(n ln n)}.
pub const TREND_POINTS: [u64; 5] = [100, 1_000, 10_000, 100_000, 1_000_000];

fn sequence_step<F>(
    id: &str,
    what: &str,
    range: std::ops::RangeInclusive<u64>,
    f: F,
) -> Result<ProofStep>
where
    F: Fn(u64) -> Result<Enclosure> + Sync,
{
    let start = *range.start();
    let values: Vec<Enclosure> = range
        .clone()
        .into_par_iter()
        .map(&f)
        .collect::<Result<_>>()?;
    let (status, bad) = sequence_status(&values, Direction::Decreasing);
    let mut description = format!(
        "{what} strictly decreasing for n = {}..{}",
        start,
        range.end()
    );
    if let Some(i) = bad {
        let n = start + i as u64;
        description.push_str(&format!("; not separated between n = {n} and {}", n + 1));
    }
    Ok(ProofStep::new(id, description, status))
}

pub fn verify_remark1(n_max: u64) -> Result<VerificationReport> {
    if n_max < 10 {
        return domain(format!("n_max must be at least 10, got {n_max}"));
    }
    let mut steps = vec![sequence_step(
        "a1",
        "Omega_n^(1/n)",
        1..=n_max,
        functions::omega_root_n,
    )?];

    let far = functions::omega_root_n(1_000_000)?;
    let last = functions::omega_root_n(n_max)?;
    let tiny = Enclosure::point(0.02);
    steps.push(
        ProofStep::new(
            "a2",
            format!("Omega_n^(1/n) trends to 0: value at n = 10^6 is below 0.02 and below the value at n = {n_max}"),
            below_status(&far, &tiny).min(below_status(&far, &last)),
        )
        .computed(far),
    );

    steps.push(sequence_step(
        "b",
        "Omega_n^(1/(n ln n))",
        2..=n_max,
        functions::omega_root_n_ln_n,
    )?);

    let limit = Enclosure::point(-0.5).exp();
    let distances: Vec<Enclosure> = TREND_POINTS
        .iter()
        .map(|&n| Ok((functions::omega_root_n_ln_n(n)? - limit).abs()))
        .collect::<Result<_>>()?;
    let (status, _) = sequence_status(&distances, Direction::Decreasing);
    steps.push(
        ProofStep::new(
            "c",
            "trend check, not a limit proof: |Omega_n^(1/(n ln n)) - e^(-1/2)| strictly shrinking along n = 10^2..10^6",
            status,
        )
        .computed(*distances.last().expect("five trend points")),
    );

    let ln_g: Vec<Enclosure> = (1..=5)
        .map(|k| functions::ln_g(10f64.powi(k)))
        .collect::<Result<_>>()?;
    let (status, _) = sequence_status(&ln_g, Direction::Decreasing);
    let last = ln_g[4];
    let small = Enclosure::point(1e-3).ln();
    steps.push(
        ProofStep::new(
            "d",
            "G(10^k) strictly decreasing for k = 1..5 and G(10^5) < 1e-3 (compared through ln G)",
            status.min(below_status(&last, &small)),
        )
        .computed(last),
    );
    Ok(VerificationReport::new(TheoremId::Remark1, steps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    Undetermined,
}

impl Sign {
    fn of(e: &Enclosure) -> Self {
        if e.is_positive() {
            Sign::Positive
        } else if e.is_negative() {
            Sign::Negative
        } else {
            Sign::Undetermined
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecondDifference {
    pub at: f64,
    pub value: Enclosure,
    pub sign: Sign,
}

/// Non-certifying look at log-convexity. Nothing here feeds a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExplorationReport {
    pub theorem: TheoremId,
    pub label: &'static str,
    pub ln_g: Vec<SecondDifference>,
    pub ln_sequence: Vec<SecondDifference>,
}

impl ExplorationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Divided second difference 2[f₂−f₁)/(x₂−x₁) − (f₁−f₀)/(x₁−x₀)]/(x₂−x₀).
fn second_differences(xs: &[f64], fs: &[Enclosure]) -> Vec<SecondDifference> {
    (1..xs.len() - 1)
        .map(|i| {
            let (x0, x1, x2) = (xs[i - 1], xs[i], xs[i + 1]);
            let d1 = (fs[i + 1] - fs[i]) / (Enclosure::point(x2) - x1);
            let d0 = (fs[i] - fs[i - 1]) / (Enclosure::point(x1) - x0);
            let value = (d1 - d0) * 2.0 / (Enclosure::point(x2) - x0);
            SecondDifference {
                at: x1,
                value,
                sign: Sign::of(&value),
            }
        })
        .collect()
}

/// Second differences of ln G on `grid` and of the log unit-ball sequence
/// term over n = 3..`n_to`.
pub fn explore_remark2(grid: &[f64], n_to: u64) -> Result<ExplorationReport> {
    if grid.len() < 3 {
        return domain("a second difference needs at least three grid points");
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return domain("grid must be strictly increasing");
    }
    if grid
        .iter()
        .any(|&x| !x.is_finite() || x <= 1.0 + GUARD_RADIUS)
    {
        return domain(format!("grid points must exceed 1 + {GUARD_RADIUS}"));
    }
    if n_to < 5 {
        return domain(format!("sequence exploration needs n_to >= 5, got {n_to}"));
    }
    let fs: Vec<Enclosure> = grid
        .par_iter()
        .map(|&x| functions::ln_g(x))
        .collect::<Result<_>>()?;
    let ns: Vec<f64> = (3..=n_to).map(|n| n as f64).collect();
    let ss: Vec<Enclosure> = (3..=n_to)
        .into_par_iter()
        .map(functions::ln_omega_sequence_term)
        .collect::<Result<_>>()?;
    Ok(ExplorationReport {
        theorem: TheoremId::Remark2Conjecture,
        label: "exploratory",
        ln_g: second_differences(grid, &fs),
        ln_sequence: second_differences(&ns, &ss),
    })
}
