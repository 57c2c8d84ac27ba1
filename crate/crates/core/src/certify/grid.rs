use rayon::prelude::*;
use serde::Serialize;

use super::report::Status;
use crate::error::{domain, Result};
use crate::functions::{self, GUARD_RADIUS};
use crate::interval::Enclosure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    /// `a` comes strictly before `b` in this direction, with separated enclosures.
    fn ordered(self, a: &Enclosure, b: &Enclosure) -> bool {
        match self {
            Direction::Increasing => a.strictly_below(b),
            Direction::Decreasing => b.strictly_below(a),
        }
    }
}

/// Functions with a named grid certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GridFunction {
    /// F, with exact values spliced in at 0 and 1.
    F,
    /// G, compared through ln G.
    G,
    /// f′/g′ on x ≥ 1.
    FgRatio,
}

impl GridFunction {
    pub fn name(self) -> &'static str {
        match self {
            GridFunction::F => "F",
            GridFunction::G => "G",
            GridFunction::FgRatio => "fg_ratio",
        }
    }

    pub fn eval(self, x: f64) -> Result<Enclosure> {
        match self {
            GridFunction::F => functions::f_ratio(x),
            GridFunction::G => functions::ln_g(x),
            GridFunction::FgRatio => functions::fg_ratio(x),
        }
    }

    /// Points where the grid snaps to an exact value.
    fn snap_points(self) -> &'static [f64] {
        match self {
            GridFunction::F => &[0.0, 1.0],
            _ => &[],
        }
    }
}

/// Desk-scale monotonicity witness on a finite grid: consecutive enclosures
/// are strictly separated in the claimed direction. It says nothing about the
/// function between grid points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridCertificate {
    pub function: String,
    pub direction: Direction,
    pub from: f64,
    pub to: f64,
    pub step: f64,
    pub points: usize,
    pub verified_pairs: usize,
    /// Pairs that needed the midpoint refinement.
    pub refined_pairs: usize,
    pub inconclusive_pairs: usize,
    pub status: Status,
    pub offending_pair: Option<(f64, f64)>,
    #[serde(skip)]
    pub grid: Vec<f64>,
}

impl GridCertificate {
    pub fn is_certified(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `from, from + step, …` up to `to` (included), snapping points that fall
/// within the guard radius of a snap point onto it.
pub fn build_grid(from: f64, to: f64, step: f64, snap: &[f64]) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) {
        return domain("grid bounds must be finite");
    }
    if from >= to {
        return domain(format!("empty grid: from {from} >= to {to}"));
    }
    if step <= 0.0 {
        return domain(format!("grid step must be positive, got {step}"));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    let mut grid: Vec<f64> = (0..=n)
        .map(|i| {
            let x = from + i as f64 * step;
            snap.iter()
                .copied()
                .find(|s| (x - s).abs() <= GUARD_RADIUS)
                .unwrap_or(x)
        })
        .collect();
    if to - grid[grid.len() - 1] > step * 1e-6 {
        grid.push(to);
    }
    grid.dedup();
    Ok(grid)
}

/// Certifies strict monotonicity of `f` on an explicit grid. Overlapping
/// pairs get one refinement through their midpoint.
pub fn grid_certificate_with<F>(
    name: &str,
    f: F,
    grid: Vec<f64>,
    step: f64,
    direction: Direction,
) -> Result<GridCertificate>
where
    F: Fn(f64) -> Result<Enclosure> + Sync,
{
    if grid.len() < 2 || grid.windows(2).any(|w| w[0] >= w[1]) {
        return domain("grid must hold at least two strictly increasing points");
    }
    let values: Vec<Enclosure> = grid.par_iter().map(|&x| f(x)).collect::<Result<_>>()?;
    let mut verified = 0;
    let mut refined = 0;
    let mut inconclusive = 0;
    let mut failed = false;
    let mut offending = None;
    for (i, pair) in values.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        if direction.ordered(a, b) {
            verified += 1;
            continue;
        }
        if direction.ordered(b, a) {
            failed = true;
            offending.get_or_insert((grid[i], grid[i + 1]));
            continue;
        }
        let mid = f(0.5 * (grid[i] + grid[i + 1]))?;
        if direction.ordered(a, &mid) && direction.ordered(&mid, b) {
            verified += 1;
            refined += 1;
        } else {
            inconclusive += 1;
            offending.get_or_insert((grid[i], grid[i + 1]));
        }
    }
    let status = if failed {
        Status::Fail
    } else if inconclusive > 0 {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    Ok(GridCertificate {
        function: name.to_string(),
        direction,
        from: grid[0],
        to: grid[grid.len() - 1],
        step,
        points: grid.len(),
        verified_pairs: verified,
        refined_pairs: refined,
        inconclusive_pairs: inconclusive,
        status,
        offending_pair: offending,
        grid,
    })
}

pub fn grid_monotone_certificate(
    f: GridFunction,
    from: f64,
    to: f64,
    step: f64,
    direction: Direction,
) -> Result<GridCertificate> {
    let grid = build_grid(from, to, step, f.snap_points())?;
    grid_certificate_with(f.name(), |x| f.eval(x), grid, step, direction)
}
