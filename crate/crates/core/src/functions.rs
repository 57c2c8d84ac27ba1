//! Enclosure-valued evaluators for
//!
//! * F(x) = lnΓ(x+1) / [ln(x²+1) − ln(x+1)] on [0, ∞),
//! * G(x) = [πˣ/Γ(x+1)]^{1/[ln(x²+1) − ln(x+1)]} on (1, ∞),
//! * the unit-ball volume Ω_n = π^{n/2}/Γ(1 + n/2) and sequences built on it,
//! * the auxiliary functions q, q′, f′/g′, h, h₁, h₁′, h₂ … h₂‴ used in the
//!   two monotonicity proofs, together with every intermediate lower bound.
//!
//! Arguments are binary64 values taken as exact points.

use serde::Serialize;

use crate::constants;
use crate::error::{domain, Error, Result};
use crate::exactpoly::{lemma, RationalPolynomial};
use crate::interval::Enclosure;
use crate::rational::{self, Rational};
use crate::specfun::{self, IntervalPolynomial};

/// Radius of the refusal zones around the removable singularities of F (at 0
/// and 1) and around x = 1 for G.
pub const GUARD_RADIUS: f64 = 1.0 / 1_048_576.0;

fn pt(x: f64) -> Enclosure {
    Enclosure::point(x)
}

fn finite(x: f64, what: &str) -> Result<()> {
    if !x.is_finite() {
        return domain(format!("{what}: argument {x} is not finite"));
    }
    Ok(())
}

fn at_least_one(x: f64, what: &str) -> Result<()> {
    finite(x, what)?;
    if x < 1.0 {
        return domain(format!("{what} is defined here for x >= 1, got {x}"));
    }
    Ok(())
}

/// Exact value of an integer polynomial at a binary64 point, enclosed.
fn poly_at(p: &RationalPolynomial, x: f64) -> Enclosure {
    let xr = rational::from_f64(x).expect("finite point");
    Enclosure::from_rational(&p.eval_at(&xr))
}

/// ln(x² + 1) − ln(x + 1), computed with `ln_1p` for accuracy near 0.
fn log_ratio_denominator(x: f64) -> Enclosure {
    let xe = pt(x);
    xe.sqr().ln_1p() - xe.ln_1p()
}

fn polys() -> &'static AuxPolys {
    use std::sync::LazyLock;
    static P: LazyLock<AuxPolys> = LazyLock::new(AuxPolys::new);
    &P
}

struct AuxPolys {
    /// x⁴ + 4x³ − 2x² − 4x − 3
    quartic: RationalPolynomial,
    /// x² + 2x − 1
    quad: RationalPolynomial,
    /// (x + 1)(x² + 1)
    cubic: RationalPolynomial,
    /// 3x² + 2x + 1
    q_prime_inner: RationalPolynomial,
    p1: RationalPolynomial,
    p3: RationalPolynomial,
    p4: RationalPolynomial,
    p5: RationalPolynomial,
}

impl AuxPolys {
    fn new() -> Self {
        Self {
            quartic: RationalPolynomial::from_ints(&[-3, -4, -2, 4, 1]),
            quad: RationalPolynomial::from_ints(&[-1, 2, 1]),
            cubic: RationalPolynomial::from_ints(&[1, 1, 1, 1]),
            q_prime_inner: RationalPolynomial::from_ints(&[1, 2, 3]),
            p1: lemma::p1(),
            p3: lemma::p3(),
            p4: lemma::p4(),
            p5: lemma::p5(),
        }
    }
}

// ---------------------------------------------------------------------------
// F and G

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FValue {
    pub x: f64,
    pub value: Enclosure,
    pub at_singularity: bool,
}

pub fn f_value(x: f64) -> Result<FValue> {
    finite(x, "F")?;
    if x < 0.0 {
        return domain(format!("F is defined for x >= 0, got {x}"));
    }
    if x == 0.0 {
        let value = constants::euler_gamma();
        return Ok(FValue {
            x,
            value,
            at_singularity: true,
        });
    }
    if x == 1.0 {
        let value = (Enclosure::point(1.0) - constants::euler_gamma()) * 2.0;
        return Ok(FValue {
            x,
            value,
            at_singularity: true,
        });
    }
    for s in [0.0, 1.0] {
        if (x - s).abs() <= GUARD_RADIUS {
            return Err(Error::InconclusivePrecision(format!(
                "F({x}) lies within {GUARD_RADIUS} of the removable singularity at {s}"
            )));
        }
    }
    let num = specfun::ln_gamma(pt(x) + 1.0)?;
    let value = num.checked_div(log_ratio_denominator(x))?;
    Ok(FValue {
        x,
        value,
        at_singularity: false,
    })
}

/// F(x), with the limit values γ at 0 and 2(1 − γ) at 1.
pub fn f_ratio(x: f64) -> Result<Enclosure> {
    f_value(x).map(|v| v.value)
}

fn g_domain(x: f64) -> Result<()> {
    finite(x, "G")?;
    if x <= 1.0 + GUARD_RADIUS {
        return domain(format!(
            "G is evaluated for x > 1 + {GUARD_RADIUS}, got {x}"
        ));
    }
    Ok(())
}

/// ln G(x) = [(ln π)x − lnΓ(x+1)] / [ln(x²+1) − ln(x+1)].
pub fn ln_g(x: f64) -> Result<Enclosure> {
    g_domain(x)?;
    let num = constants::ln_pi() * x - specfun::ln_gamma(pt(x) + 1.0)?;
    num.checked_div(log_ratio_denominator(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GValue {
    pub x: f64,
    pub value: Enclosure,
}

/// G(x) = exp(ln G(x)). Fails with [`Error::Overflow`] close to x = 1, where
/// G exceeds the binary64 range; use [`ln_g`] there.
pub fn g_power(x: f64) -> Result<Enclosure> {
    ln_g(x)?.checked_exp()
}

pub fn g_value(x: f64) -> Result<GValue> {
    Ok(GValue {
        x,
        value: g_power(x)?,
    })
}

// ---------------------------------------------------------------------------
// Unit-ball volumes

fn check_n(n: u64, min: u64, what: &str) -> Result<()> {
    if n < min {
        return domain(format!("{what} requires n >= {min}, got {n}"));
    }
    Ok(())
}

/// ln Ω_n = (n/2) ln π − lnΓ(1 + n/2).
pub fn ln_unit_ball_volume(n: u64) -> Result<Enclosure> {
    check_n(n, 1, "unit-ball volume")?;
    let half = pt(n as f64 * 0.5);
    Ok(constants::ln_pi() * half - specfun::ln_gamma(half + 1.0)?)
}

pub fn unit_ball_volume(n: u64) -> Result<Enclosure> {
    ln_unit_ball_volume(n)?.checked_exp()
}

/// Ω_n^{1/[ln(n²/4 + 1) − ln(n/2 + 1)]}, evaluated literally as G(n/2).
pub fn omega_sequence_term(n: u64) -> Result<Enclosure> {
    check_n(n, 3, "the unit-ball sequence term")?;
    g_power(n as f64 * 0.5)
}

pub fn ln_omega_sequence_term(n: u64) -> Result<Enclosure> {
    check_n(n, 3, "the unit-ball sequence term")?;
    ln_g(n as f64 * 0.5)
}

/// Ω_n^{1/n}
pub fn omega_root_n(n: u64) -> Result<Enclosure> {
    Ok((ln_unit_ball_volume(n)? / n as f64).exp())
}

/// Ω_n^{1/(n ln n)} for n ≥ 2.
pub fn omega_root_n_ln_n(n: u64) -> Result<Enclosure> {
    check_n(n, 2, "Ω_n^(1/(n ln n))")?;
    let nf = pt(n as f64);
    Ok((ln_unit_ball_volume(n)? / (nf * nf.ln())).exp())
}

// ---------------------------------------------------------------------------
// Theorem 1 auxiliaries

struct Psi {
    d0: Enclosure,
    d1: Enclosure,
    d2: Enclosure,
}

fn psi_at_shift(x: f64) -> Result<Psi> {
    let y = pt(x) + 1.0;
    Ok(Psi {
        d0: specfun::polygamma(0, y)?,
        d1: specfun::polygamma(1, y)?,
        d2: specfun::polygamma(2, y)?,
    })
}

/// q(x) = (x⁴+4x³−2x²−4x−3) ψ(x+1) + (x+1)(x²+1)(x²+2x−1) ψ′(x+1)
pub fn q_func(x: f64) -> Result<Enclosure> {
    at_least_one(x, "q")?;
    let p = polys();
    let psi = psi_at_shift(x)?;
    Ok(poly_at(&p.quartic, x) * psi.d0 + poly_at(&p.p4, x) * psi.d1)
}

/// q′(x) = 4(x³+3x²−x−1) ψ(x+1)
///       + (x²+2x−1)[2(3x²+2x+1) ψ′(x+1) + (x+1)(x²+1) ψ″(x+1)]
pub fn q_prime(x: f64) -> Result<Enclosure> {
    at_least_one(x, "q'")?;
    let p = polys();
    let psi = psi_at_shift(x)?;
    let inner = poly_at(&p.q_prime_inner, x) * psi.d1 * 2.0 + poly_at(&p.cubic, x) * psi.d2;
    Ok(poly_at(&p.p1, x) * psi.d0 * 4.0 + poly_at(&p.quad, x) * inner)
}

/// q′ with ψ, ψ′ replaced by their lower bounds and ψ″ by its lower bound
/// −[1/(x+1)² + 2/(x+1)³], before the logarithm is bounded.
pub fn q_prime_substituted_bound(x: f64) -> Result<Enclosure> {
    at_least_one(x, "q' bound")?;
    let p = polys();
    let y = pt(x) + 1.0;
    let r = y.recip();
    let psi_lo = y.ln() - r;
    let tri_lo = r + r.sqr() * 0.5;
    let tet_lo = -(r.sqr() + r.powi(3) * 2.0);
    let inner = poly_at(&p.q_prime_inner, x) * tri_lo * 2.0 + poly_at(&p.cubic, x) * tet_lo;
    Ok(poly_at(&p.p1, x) * psi_lo * 4.0 + poly_at(&p.quad, x) * inner)
}

/// Exact final lower bound (13x⁶+66x⁵+86x⁴+8x³−31x²−2x+8)/((x+1)²(x+2)).
pub fn q_prime_lower_bound_exact(x: &Rational) -> Result<Rational> {
    if *x < rational::int(1) {
        return domain(format!("q' lower bound is defined for x >= 1, got {x}"));
    }
    let num = lemma::q_prime_numerator().eval_at(x);
    let den = lemma::q_prime_denominator().eval_at(x);
    Ok(num / den)
}

pub fn q_prime_lower_bound(x: f64) -> Result<Enclosure> {
    finite(x, "q' lower bound")?;
    let xr = rational::from_f64(x)?;
    Ok(Enclosure::from_rational(&q_prime_lower_bound_exact(&xr)?))
}

/// f′(x)/g′(x) = (x+1)(x²+1) ψ(x+1) / (x²+2x−1) for f = lnΓ(x+1) and
/// g = ln[(x²+1)/(x+1)]. Its derivative is q(x)/(x²+2x−1)².
pub fn fg_ratio(x: f64) -> Result<Enclosure> {
    at_least_one(x, "f'/g'")?;
    let p = polys();
    let psi = specfun::polygamma(0, pt(x) + 1.0)?;
    (poly_at(&p.cubic, x) * psi).checked_div(poly_at(&p.quad, x))
}

// ---------------------------------------------------------------------------
// Theorem 2 auxiliaries

/// Polynomial a(x) + ln π · b(x) with exact rational parts.
#[derive(Debug, Clone, PartialEq)]
pub struct LnPiPolynomial {
    pub rational: RationalPolynomial,
    pub ln_pi: RationalPolynomial,
}

impl LnPiPolynomial {
    fn from_ints(rational: &[i64], ln_pi: &[i64]) -> Self {
        Self {
            rational: RationalPolynomial::from_ints(rational),
            ln_pi: RationalPolynomial::from_ints(ln_pi),
        }
    }

    pub fn to_interval(&self) -> IntervalPolynomial {
        self.to_interval_with(constants::ln_pi())
    }

    /// Same polynomial with `ln π` replaced by another value.
    pub fn to_interval_with(&self, ln_pi: Enclosure) -> IntervalPolynomial {
        IntervalPolynomial::affine(&self.rational, &self.ln_pi, ln_pi)
    }

    pub fn derivative(&self) -> Self {
        Self {
            rational: self.rational.derivative(),
            ln_pi: self.ln_pi.derivative(),
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            rational: -&self.rational,
            ln_pi: -&self.ln_pi,
        }
    }
}

/// p₆(x) = 120(15−4 ln π)x³ + 240(20−7 ln π)x² + 48(59−32 ln π)x + 72(3−4 ln π)
pub fn p6() -> LnPiPolynomial {
    LnPiPolynomial::from_ints(&[216, 2832, 4800, 1800], &[-288, -1536, -1680, -480])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HFunction {
    H,
    H1,
    H2,
    H2p,
    H2pp,
    H2ppp,
}

impl HFunction {
    pub const ALL: [HFunction; 6] = [
        HFunction::H,
        HFunction::H1,
        HFunction::H2,
        HFunction::H2p,
        HFunction::H2pp,
        HFunction::H2ppp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HFunction::H => "h",
            HFunction::H1 => "h1",
            HFunction::H2 => "h2",
            HFunction::H2p => "h2p",
            HFunction::H2pp => "h2pp",
            HFunction::H2ppp => "h2ppp",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown h-family member {s:?}")))
    }
}

/// The degree-6 polynomial h₂ and its displayed derivatives, transcribed
/// term by term.
pub fn h2_polynomial(which: HFunction) -> Option<LnPiPolynomial> {
    Some(match which {
        // (4L−15)x⁶ + 4(7L−20)x⁵ + 2(32L−59)x⁴ + 12(4L−3)x³ + (13−12L)x²
        //   − 4(3+7L)x + 4 − 8L
        HFunction::H2 => LnPiPolynomial::from_ints(
            &[4, -12, 13, -36, -118, -80, -15],
            &[-8, -28, -12, 48, 64, 28, 4],
        ),
        // 6(4L−15)x⁵ + 20(7L−20)x⁴ + 8(32L−59)x³ + 36(4L−3)x² + 2(13−12L)x − 4(3+7L)
        HFunction::H2p => LnPiPolynomial::from_ints(
            &[-12, 26, -108, -472, -400, -90],
            &[-28, -24, 144, 256, 140, 24],
        ),
        // 30(4L−15)x⁴ + 80(7L−20)x³ + 24(32L−59)x² + 72(4L−3)x + 2(13−12L)
        HFunction::H2pp => {
            LnPiPolynomial::from_ints(&[26, -216, -1416, -1600, -450], &[-24, 288, 768, 560, 120])
        }
        // 120(4L−15)x³ + 240(7L−20)x² + 48(32L−59)x + 72(4L−3)
        HFunction::H2ppp => {
            LnPiPolynomial::from_ints(&[-216, -2832, -4800, -1800], &[288, 1536, 1680, 480])
        }
        HFunction::H | HFunction::H1 => return None,
    })
}

/// h(x) = (x+1)(x²+1)[ln π − ψ(x+1)]/(x²+2x−1) · ln[(x²+1)/(x+1)]
///        − (ln π)x + lnΓ(x+1)
fn h_func(x: f64) -> Result<Enclosure> {
    let p = polys();
    let ln_pi = constants::ln_pi();
    let psi = specfun::polygamma(0, pt(x) + 1.0)?;
    let factor = (poly_at(&p.cubic, x) * (ln_pi - psi)).checked_div(poly_at(&p.quad, x))?;
    Ok(factor * log_ratio_denominator(x) - ln_pi * x + specfun::ln_gamma(pt(x) + 1.0)?)
}

/// h₁(x) = (x⁴+4x³−2x²−4x−3)[ψ(x+1) − ln π] + (x+1)(x²+1)(x²+2x−1) ψ′(x+1),
/// the factor multiplying [ln(x+1) − ln(x²+1)]/(x²+2x−1)² in h′(x).
fn h1_func(x: f64) -> Result<Enclosure> {
    let p = polys();
    let psi = psi_at_shift(x)?;
    Ok(poly_at(&p.quartic, x) * (psi.d0 - constants::ln_pi()) + poly_at(&p.p4, x) * psi.d1)
}

pub fn h_family(which: HFunction, x: f64) -> Result<Enclosure> {
    at_least_one(x, which.name())?;
    match which {
        HFunction::H => h_func(x),
        HFunction::H1 => h1_func(x),
        _ => {
            let poly = h2_polynomial(which).expect("polynomial member");
            Ok(poly.to_interval().eval(pt(x)))
        }
    }
}

/// h₁′(x) = 4p₁ψ(x+1) + 2p₃ψ′(x+1) + p₄ψ″(x+1) − 4p₁ ln π
pub fn h1_prime(x: f64) -> Result<Enclosure> {
    at_least_one(x, "h1'")?;
    let p = polys();
    let psi = psi_at_shift(x)?;
    let p1 = poly_at(&p.p1, x);
    Ok(
        p1 * psi.d0 * 4.0 + poly_at(&p.p3, x) * psi.d1 * 2.0 + poly_at(&p.p4, x) * psi.d2
            - p1 * constants::ln_pi() * 4.0,
    )
}

/// h₁′ with ψ, ψ′, ψ″ replaced by their elementary lower bounds.
pub fn h1_prime_substituted_bound(x: f64) -> Result<Enclosure> {
    at_least_one(x, "h1' bound")?;
    let p = polys();
    let y = pt(x) + 1.0;
    let r = y.recip();
    let p1 = poly_at(&p.p1, x);
    Ok(
        p1 * (y.ln() - r) * 4.0 + poly_at(&p.p3, x) * (r + r.sqr() * 0.5) * 2.0
            - poly_at(&p.p4, x) * (r.sqr() + r.powi(3) * 2.0)
            - p1 * constants::ln_pi() * 4.0,
    )
}

/// The simplified form printed for the substituted bound, before ln(x+1) is
/// bounded:
/// [(7−4L)x⁵ + (26−20L)x⁴ − 6(4L−3)x³ + (11+12L)x − 2 + 4L + 4p₅ ln(x+1)] / (x+1)².
///
/// It does not equal [`h1_prime_substituted_bound`]; the two differ by
/// 2(x+3)(x²+1)(x²+2x−1)/(x+1)².
pub fn h1_prime_printed_pre_log1p(x: f64) -> Result<Enclosure> {
    at_least_one(x, "h1' printed bound")?;
    let l = constants::ln_pi();
    let xe = pt(x);
    let poly = (pt(7.0) - l * 4.0) * xe.powi(5) + (pt(26.0) - l * 20.0) * xe.powi(4)
        - (l * 4.0 - 3.0) * xe.powi(3) * 6.0
        + (pt(11.0) + l * 12.0) * xe
        - 2.0
        + l * 4.0;
    let log_term = poly_at(&polys().p5, x) * xe.ln_1p() * 4.0;
    Ok((poly + log_term) / (xe + 1.0).sqr())
}

/// −h₂(x) / ((x+1)²(x+2)), the printed bound after ln(1+x) ≥ 2x/(x+2).
pub fn h1_prime_printed_post_log1p(x: f64) -> Result<Enclosure> {
    at_least_one(x, "h1' printed bound")?;
    let h2 = h_family(HFunction::H2, x)?;
    Ok(-h2 / poly_at(&lemma::q_prime_denominator(), x))
}

/// Numerator of the lower bound obtained from [`h1_prime_substituted_bound`]
/// by ln(1+x) ≥ 2x/(x+2): (13x⁶+66x⁵+86x⁴+8x³−31x²−2x+8) − 4 ln π·p₁(x)(x+1)²(x+2).
pub fn h1_prime_bound_numerator() -> LnPiPolynomial {
    let p1_den = &lemma::p1() * &lemma::q_prime_denominator();
    LnPiPolynomial {
        rational: lemma::q_prime_numerator(),
        ln_pi: p1_den.scale(&rational::int(-4)),
    }
}

/// h₁′ lower bound [`h1_prime_bound_numerator`] / ((x+1)²(x+2)).
pub fn h1_prime_lower_bound(x: f64) -> Result<Enclosure> {
    at_least_one(x, "h1' lower bound")?;
    let num = h1_prime_bound_numerator().to_interval().eval(pt(x));
    Ok(num / poly_at(&lemma::q_prime_denominator(), x))
}
