//! The classical two-sided elementary bounds for ψ, |ψ⁽ᵏ⁾| and ln(1 + t),
//! evaluated with outward rounding.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::interval::Enclosure;

/// `lower` is rounded down and `upper` rounded up, so the pair brackets the
/// exact bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PaperBounds {
    pub lower: f64,
    pub upper: f64,
}

impl PaperBounds {
    fn outer(lower: Enclosure, upper: Enclosure) -> Self {
        Self {
            lower: lower.lo(),
            upper: upper.hi(),
        }
    }

    /// Strict containment of an enclosure.
    pub fn strictly_contains(&self, e: &Enclosure) -> bool {
        self.lower < e.lo() && e.hi() < self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

fn positive(x: f64, what: &str) -> Result<Enclosure> {
    if !(x.is_finite() && x > 0.0) {
        return domain(format!(
            "{what} requires a positive finite argument, got {x}"
        ));
    }
    Ok(Enclosure::point(x))
}

/// ln x − 1/x < ψ(x) < ln x − 1/(2x)
pub fn digamma_bounds(x: f64) -> Result<PaperBounds> {
    let xe = positive(x, "digamma bounds")?;
    let ln = xe.ln();
    let r = xe.recip();
    Ok(PaperBounds::outer(ln - r, ln - r * 0.5))
}

/// (k−1)!/xᵏ + k!/(2xᵏ⁺¹) < |ψ⁽ᵏ⁾(x)| < (k−1)!/xᵏ + k!/xᵏ⁺¹ for k ≥ 1.
pub fn polygamma_bounds(k: u32, x: f64) -> Result<PaperBounds> {
    let xe = positive(x, "polygamma bounds")?;
    if !(1..=20).contains(&k) {
        return domain(format!("polygamma bound order must be in 1..=20, got {k}"));
    }
    let fact_km1: f64 = (1..k).map(f64::from).product();
    let fact_k = fact_km1 * f64::from(k);
    let r = xe.recip();
    let lead = r.powi(k) * fact_km1;
    let next = r.powi(k + 1) * fact_k;
    Ok(PaperBounds::outer(lead + next * 0.5, lead + next))
}

/// 2t/(2+t) ≤ ln(1+t) ≤ t(2+t)/(2(1+t))
pub fn log1p_bounds(t: f64) -> Result<PaperBounds> {
    let te = positive(t, "log1p bounds")?;
    let lower = te * 2.0 / (te + 2.0);
    let upper = te * (te + 2.0) / ((te + 1.0) * 2.0);
    Ok(PaperBounds::outer(lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digamma_bounds_examples() {
        let b = digamma_bounds(2.0).unwrap();
        assert!((b.lower - (2f64.ln() - 0.5)).abs() < 1e-15);
        assert!((b.upper - (2f64.ln() - 0.25)).abs() < 1e-15);
        assert!(b.lower < 0.42278433509846713 && 0.42278433509846713 < b.upper);
        let b1 = digamma_bounds(1.0).unwrap();
        assert!(b1.lower <= -1.0 && b1.upper >= -0.5);
        assert!(b1.lower < -0.5772156649015329 && -0.5772156649015329 < b1.upper);
        let far = digamma_bounds(1e8).unwrap();
        assert!(far.width() < 1e-8 + 1e-14);
        assert!(digamma_bounds(0.0).is_err());
    }

    #[test]
    fn polygamma_bounds_examples() {
        let b = polygamma_bounds(1, 1.0).unwrap();
        assert!(b.lower <= 1.5 && b.upper >= 2.0 && b.upper - 2.0 < 1e-14);
        assert!(b.lower < 1.6449340668482264 && 1.6449340668482264 < b.upper);
        let b = polygamma_bounds(1, 2.0).unwrap();
        assert!(b.lower <= 0.625 && b.upper >= 0.75);
        assert!(b.lower < 0.6449340668482264 && 0.6449340668482264 < b.upper);
        let b = polygamma_bounds(2, 1.0).unwrap();
        assert!(b.lower <= 2.0 && b.upper >= 3.0);
        assert!(b.lower < 2.404113806319188 && 2.404113806319188 < b.upper);
        assert!(polygamma_bounds(0, 1.0).is_err());
        assert!(polygamma_bounds(1, -1.0).is_err());
    }

    #[test]
    fn log1p_bounds_examples() {
        let b = log1p_bounds(1.0).unwrap();
        assert!(b.lower <= 2.0 / 3.0 && b.upper >= 0.75);
        assert!(b.lower < 2f64.ln() && 2f64.ln() < b.upper);
        let b = log1p_bounds(2.0).unwrap();
        assert!(b.lower <= 1.0 && b.upper >= 4.0 / 3.0);
        assert!(b.lower < 3f64.ln() && 3f64.ln() < b.upper);
        let tiny = log1p_bounds(1e-12).unwrap();
        assert!(tiny.lower.abs() < 1e-11 && tiny.upper.abs() < 1e-11);
        assert!(log1p_bounds(0.0).is_err());
    }
}
