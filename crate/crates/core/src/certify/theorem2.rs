use rayon::prelude::*;

use super::grid::{grid_monotone_certificate, Direction, GridFunction};
use super::report::{ProofStep, Status, TheoremId, VerificationReport};
use super::{anchor_step, below_status, error_status, golden_points, GridSpec};
use crate::constants;
use crate::error::{domain, Result};
use crate::functions::{self, HFunction, GUARD_RADIUS};
use crate::interval::Enclosure;
use crate::rational::int;
use crate::specfun::certify_positive_interval_poly;

/// Left end of the G grid, 1 + 2⁻¹⁰.
pub const G_GRID_FROM: f64 = 1.0 + 1.0 / 1024.0;

#[derive(Debug, Clone)]
pub struct Theorem2Inputs {
    pub h2pp_at_1: f64,
    pub h2p_at_1: f64,
    pub h2_at_1: f64,
    pub h1_at_1: f64,
    pub h_at_1: f64,
    pub samples: usize,
    pub sample_range: (f64, f64),
    pub g_grid: GridSpec,
}

impl Default for Theorem2Inputs {
    fn default() -> Self {
        Self {
            h2pp_at_1: -1696.22,
            h2p_at_1: -469.89,
            h2_at_1: -134.10,
            h1_at_1: 8.04,
            h_at_1: -constants::ln_pi().mid(),
            samples: 50,
            sample_range: (1.0, 20.0),
            g_grid: GridSpec {
                from: G_GRID_FROM,
                to: 50.0,
                step: 0.01,
            },
        }
    }
}

pub fn verify_theorem2(n_max: u64) -> Result<VerificationReport> {
    verify_theorem2_with(n_max, &Theorem2Inputs::default())
}

pub fn verify_theorem2_with(n_max: u64, inputs: &Theorem2Inputs) -> Result<VerificationReport> {
    if n_max < 4 {
        return domain(format!("n_max must be at least 4, got {n_max}"));
    }
    if inputs.g_grid.from <= 1.0 + GUARD_RADIUS {
        return domain(format!("G grid must start above 1 + {GUARD_RADIUS}"));
    }
    let one = int(1);
    let mut steps = Vec::new();

    let neg = functions::h2_polynomial(HFunction::H2ppp)
        .expect("polynomial member")
        .negate()
        .to_interval();
    let cert = certify_positive_interval_poly(&neg, &one);
    steps.push(
        ProofStep::new(
            "a",
            "h2''' < 0 on [1, inf): -h2''' positive via its lower-endpoint polynomial",
            Status::from_bool(cert.is_positive()),
        )
        .certificate(cert),
    );

    let anchors = [
        (
            "b",
            "h2''(1) anchor and h2''(1) < 0",
            HFunction::H2pp,
            inputs.h2pp_at_1,
            false,
        ),
        (
            "c",
            "h2'(1) anchor and h2'(1) < 0",
            HFunction::H2p,
            inputs.h2p_at_1,
            false,
        ),
        (
            "d",
            "h2(1) anchor and h2(1) < 0",
            HFunction::H2,
            inputs.h2_at_1,
            false,
        ),
        (
            "e",
            "h1(1) anchor and h1(1) > 0",
            HFunction::H1,
            inputs.h1_at_1,
            true,
        ),
    ];
    for (id, description, which, anchor, positive) in anchors {
        steps.push(anchor_step(
            id,
            description,
            functions::h_family(which, 1.0),
            anchor,
            &format!("{anchor}"),
            positive,
        ));
    }
    steps.push(anchor_step(
        "f",
        "h(1) equals -ln pi and h(1) < 0",
        functions::h_family(HFunction::H, 1.0),
        inputs.h_at_1,
        &format!("{} (-ln pi)", inputs.h_at_1),
        false,
    ));

    let (a, b) = inputs.sample_range;
    let samples = golden_points(inputs.samples, a, b);
    let chain = |x: f64| -> Result<Status> {
        let exact = functions::h1_prime(x)?;
        let substituted = functions::h1_prime_substituted_bound(x)?;
        let pre = functions::h1_prime_printed_pre_log1p(x)?;
        let post = functions::h1_prime_printed_post_log1p(x)?;
        Ok(below_status(&substituted, &exact).min(below_status(&post, &pre)))
    };
    let g_status = Status::meet(
        samples
            .iter()
            .map(|&x| chain(x).unwrap_or_else(|e| error_status(&e))),
    );
    steps.push(ProofStep::new(
        "g",
        format!(
            "h1' bound chain weakly decreases at {} sample points in [{a}, {b}]: h1' >= substituted bound, printed pre-log bound >= printed post-log bound",
            samples.len()
        ),
        g_status,
    ));

    let g = inputs.g_grid;
    let cert =
        grid_monotone_certificate(GridFunction::G, g.from, g.to, g.step, Direction::Decreasing)?;
    steps.push(
        ProofStep::new(
            "h",
            format!(
                "G strictly decreasing on the grid [{}, {}] step {}, compared through ln G ({} pairs verified)",
                g.from, g.to, g.step, cert.verified_pairs
            ),
            cert.status,
        )
        .grid(cert),
    );

    let (status, bad) = omega_terms_decreasing(n_max)?;
    let mut description = format!("unit-ball sequence term strictly decreasing for n = 3..{n_max}");
    if let Some(n) = bad {
        description.push_str(&format!("; not separated between n = {n} and {}", n + 1));
    }
    steps.push(ProofStep::new("i", description, status));

    let numerator = functions::h1_prime_bound_numerator().to_interval();
    let cert = certify_positive_interval_poly(&numerator, &one);
    let below = Status::meet(samples.iter().map(|&x| {
        let pair = functions::h1_prime_lower_bound(x)
            .and_then(|lb| Ok((lb, functions::h1_prime_substituted_bound(x)?)));
        match pair {
            Ok((lb, sub)) => below_status(&lb, &sub),
            Err(e) => error_status(&e),
        }
    }));
    steps.push(
        ProofStep::new(
            "j",
            "corrected post-log bound for h1' is positive on [1, inf) and lies below the substituted bound at the sample points",
            Status::from_bool(cert.is_positive()).min(below),
        )
        .certificate(cert),
    );
    Ok(VerificationReport::new(TheoremId::Theorem2, steps))
}

/// Separation of consecutive terms n = 3..n_max, falling back to the log
/// domain where a term is not representable.
fn omega_terms_decreasing(n_max: u64) -> Result<(Status, Option<u64>)> {
    let terms: Vec<(Option<Enclosure>, Enclosure)> = (3..=n_max)
        .into_par_iter()
        .map(|n| {
            let ln = functions::ln_omega_sequence_term(n)?;
            let direct = functions::omega_sequence_term(n)
                .ok()
                .filter(|t| t.lo() > 0.0);
            Ok((direct, ln))
        })
        .collect::<Result<_>>()?;
    let mut status = Status::Pass;
    let mut first = None;
    for (i, w) in terms.windows(2).enumerate() {
        let direct = match (&w[0].0, &w[1].0) {
            (Some(a), Some(b)) => Some(below_status(b, a)),
            _ => None,
        };
        let s = match direct {
            Some(Status::Pass) => Status::Pass,
            _ => below_status(&w[1].1, &w[0].1),
        };
        if s < status {
            status = s;
            first.get_or_insert(3 + i as u64);
        }
    }
    Ok((status, first))
}
