//! Exact rational numbers and their `"num/den"` text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (zero is `0/1`).
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact value of a finite binary64 number.
pub fn from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Domain(format!("non-finite value {x}")))
}

/// Formats as `num/den` even when the denominator is one.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den`, a bare integer, or a finite decimal such as `-1.25`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if frac_part.chars().any(|c| !c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = exp10 - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        Rational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(n, num_traits::pow(ten, (-scale) as usize))
    })
}

/// Nearest-ish binary64 value, only for display purposes.
pub fn approx_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Binary64 bounds `lo <= r <= hi`, verified by exact comparison.
pub fn f64_bounds(r: &Rational) -> (f64, f64) {
    if r.is_zero() {
        return (0.0, 0.0);
    }
    let guess = approx_f64(r);
    if !guess.is_finite() {
        return if r.is_negative() {
            (f64::NEG_INFINITY, -f64::MAX)
        } else {
            (f64::MAX, f64::INFINITY)
        };
    }
    let exact = Rational::from_float(guess).expect("finite");
    match exact.cmp(r) {
        std::cmp::Ordering::Equal => (guess, guess),
        std::cmp::Ordering::Less => (guess, guess.next_up()),
        std::cmp::Ordering::Greater => (guess.next_down(), guess),
    }
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_string_keeps_unit_denominator() {
        assert_eq!(to_fraction_string(&int(8)), "8/1");
        assert_eq!(to_fraction_string(&ratio(-4, 6)), "-2/3");
        assert_eq!(to_fraction_string(&int(0)), "0/1");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse("1.25").unwrap(), ratio(5, 4));
        assert_eq!(parse("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse("1e-3").unwrap(), ratio(1, 1000));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn bounds_bracket_non_dyadic_values() {
        for (n, d) in [(1, 3), (-2, 7), (22, 7), (1, 10)] {
            let r = ratio(n, d);
            let (lo, hi) = f64_bounds(&r);
            assert!(from_f64(lo).unwrap() <= r && r <= from_f64(hi).unwrap());
            assert!(lo < hi);
        }
        assert_eq!(f64_bounds(&ratio(3, 4)), (0.75, 0.75));
    }
}
