use num_traits::{Signed, Zero};

use super::RationalPolynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sturm chain `p, p', -rem(p, p'), ...` ending at the last nonzero remainder.
pub fn sturm_sequence(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        seq.push(next);
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("divisor is nonzero");
        next = -&r;
    }
    seq
}

fn sign_variations(seq: &[RationalPolynomial], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|q| q.eval_at(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Divides out every factor `(x - a)`.
fn deflate_root(mut p: RationalPolynomial, a: &Rational) -> RationalPolynomial {
    let factor = RationalPolynomial::linear_root(a.clone());
    while !p.is_zero() && p.degree() > Some(0) && p.eval_at(a).is_zero() {
        let (q, _) = p.div_rem(&factor).expect("linear divisor");
        p = q;
    }
    p
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
///
/// Roots sitting exactly on an endpoint are divided out first, so the
/// variation count is always taken at points where `p` is nonzero.
pub fn sturm_root_count(p: &RationalPolynomial, a: &Rational, b: &Rational) -> Result<usize> {
    if a >= b {
        return Err(Error::Domain(format!("degenerate interval ({a}, {b})")));
    }
    if p.is_zero() {
        return Err(Error::Domain(
            "the zero polynomial vanishes everywhere".into(),
        ));
    }
    let p = deflate_root(deflate_root(p.clone(), a), b);
    let seq = sturm_sequence(&p);
    let (va, vb) = (sign_variations(&seq, a), sign_variations(&seq, b));
    Ok(va.saturating_sub(vb))
}
