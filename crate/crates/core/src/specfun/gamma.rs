//! lnΓ and ψ, ψ′, ψ″ for positive enclosure arguments.
//!
//! The argument is pushed up to at least [`SHIFT_THRESHOLD`] by the
//! functional recurrences, then the asymptotic series is summed through the
//! B₁₀ term. The series are enveloping for real positive arguments, so the
//! magnitude of the first omitted (B₁₂) term bounds the remainder.

use std::sync::LazyLock;

use crate::constants;
use crate::error::{domain, Result};
use crate::interval::Enclosure;

pub const SHIFT_THRESHOLD: f64 = 8.0;

/// Exact Bernoulli numbers B₂, B₄, …, B₁₂ as (numerator, denominator).
const BERNOULLI: [(i64, i64); 6] = [(1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730)];

struct SeriesCoefficients {
    /// B₂ⱼ / (2j(2j−1)) for lnΓ
    ln_gamma: Vec<Enclosure>,
    /// B₂ⱼ / (2j) for ψ
    digamma: Vec<Enclosure>,
    /// B₂ⱼ for ψ′
    trigamma: Vec<Enclosure>,
    /// (2j+1)·B₂ⱼ for ψ″
    tetragamma: Vec<Enclosure>,
}

static COEFFS: LazyLock<SeriesCoefficients> = LazyLock::new(|| {
    let build = |f: &dyn Fn(i64, i64, i64) -> (i64, i64)| {
        BERNOULLI
            .iter()
            .enumerate()
            .map(|(i, &(n, d))| {
                let (num, den) = f(i as i64 + 1, n, d);
                Enclosure::ratio(num, den)
            })
            .collect()
    };
    SeriesCoefficients {
        ln_gamma: build(&|j, n, d| (n, d * 2 * j * (2 * j - 1))),
        digamma: build(&|j, n, d| (n, d * 2 * j)),
        trigamma: build(&|_, n, d| (n, d)),
        tetragamma: build(&|j, n, d| (n * (2 * j + 1), d)),
    }
});

const TERMS: usize = 5;

/// Σ c_j·r2^(j−1), j = 1..=5, by Horner.
fn even_series(coeffs: &[Enclosure], r2: Enclosure) -> Enclosure {
    coeffs[..TERMS]
        .iter()
        .rev()
        .fold(Enclosure::point(0.0), |acc, &c| acc * r2 + c)
}

fn remainder(coeff: Enclosure, rpow: Enclosure) -> Enclosure {
    Enclosure::symmetric((coeff.abs() * rpow.abs()).hi())
}

fn check_positive(x: Enclosure, what: &str) -> Result<()> {
    if x.lo() <= 0.0 {
        return domain(format!("{what} requires a positive argument, got {x}"));
    }
    Ok(())
}

/// Enclosure of lnΓ(x).
pub fn ln_gamma(x: Enclosure) -> Result<Enclosure> {
    check_positive(x, "ln_gamma")?;
    let mut y = x;
    let mut product = Enclosure::point(1.0);
    while y.lo() < SHIFT_THRESHOLD {
        product = product * y;
        y = y + 1.0;
    }
    let c = &*COEFFS;
    let r = y.recip();
    let r2 = r.sqr();
    let series = r * even_series(&c.ln_gamma, r2);
    let rem = remainder(c.ln_gamma[TERMS], r.powi(11));
    let stirling = (y - 0.5) * y.ln() - y + constants::half_ln_two_pi() + series + rem;
    Ok(stirling - product.ln())
}

/// Enclosure of ψ⁽ᵏ⁾(x) for k ∈ {0, 1, 2}.
pub fn polygamma(k: u32, x: Enclosure) -> Result<Enclosure> {
    check_positive(x, "polygamma")?;
    if k > 2 {
        return domain(format!(
            "polygamma order {k} is not supported (only 0, 1, 2)"
        ));
    }
    let mut y = x;
    let mut shift = Enclosure::point(0.0);
    while y.lo() < SHIFT_THRESHOLD {
        let r = y.recip();
        shift = match k {
            0 => shift - r,
            1 => shift + r.sqr(),
            _ => shift - r.powi(3) * 2.0,
        };
        y = y + 1.0;
    }
    let c = &*COEFFS;
    let r = y.recip();
    let r2 = r.sqr();
    let asymptotic = match k {
        0 => {
            let series = r2 * even_series(&c.digamma, r2);
            y.ln() - r * 0.5 - series - remainder(c.digamma[TERMS], r2.powi(6))
        }
        1 => {
            let series = r.powi(3) * even_series(&c.trigamma, r2);
            r + r2 * 0.5 + series + remainder(c.trigamma[TERMS], r.powi(13))
        }
        _ => {
            let series = r2.sqr() * even_series(&c.tetragamma, r2);
            -r2 - r.powi(3) - series + remainder(c.tetragamma[TERMS], r.powi(14))
        }
    };
    Ok(asymptotic + shift)
}

pub fn digamma(x: Enclosure) -> Result<Enclosure> {
    polygamma(0, x)
}

pub fn trigamma(x: Enclosure) -> Result<Enclosure> {
    polygamma(1, x)
}

pub fn tetragamma(x: Enclosure) -> Result<Enclosure> {
    polygamma(2, x)
}
