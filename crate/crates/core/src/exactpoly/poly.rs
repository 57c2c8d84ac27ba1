use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree order. The zero polynomial has no coefficients; otherwise
/// the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// From integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`
    pub fn linear_root(a: Rational) -> Self {
        Self::new(vec![-a, rational::int(1)])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation in exact arithmetic.
    pub fn eval_at(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    /// Returns `q` with `q(t) = p(t + a)`.
    pub fn taylor_shift(&self, a: &Rational) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = c[j + 1].clone();
                c[j] += next * a;
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Sign changes in the coefficient sequence, zero coefficients skipped.
    pub fn descartes_sign_changes(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::Domain(
                "sign changes of the zero polynomial are undefined".into(),
            ));
        }
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.is_positive())
            .collect();
        Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let (Some(dd), Some(lead)) = (divisor.degree(), divisor.leading()) else {
            return Err(Error::Domain("polynomial division by zero".into()));
        };
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let factor = &rem[k + dd] / lead;
            if !factor.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &factor * dc;
                }
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Cauchy bound `1 + max |c_i / c_n|`: every complex root has modulus
    /// strictly below it.
    pub fn cauchy_bound(&self) -> Result<Rational> {
        let lead = self
            .leading()
            .ok_or_else(|| Error::Domain("root bound of the zero polynomial".into()))?;
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(max + rational::int(1))
    }

    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(rational::to_fraction_string)
            .collect()
    }

    pub fn from_fraction_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .map(|s| rational::parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = i == 0 || !rational::is_one(&a);
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_fraction_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Self::from_fraction_strings(&items).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p1() -> RationalPolynomial {
        RationalPolynomial::from_ints(&[-1, -1, 3, 1])
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = RationalPolynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(RationalPolynomial::from_ints(&[0, 0]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn lemma_endpoint_values() {
        assert_eq!(p1().eval_at(&int(0)), int(-1));
        assert_eq!(p1().eval_at(&int(1)), int(2));
        let p3 = RationalPolynomial::from_ints(&[-1, 0, 2, 8, 3]);
        let p4 = RationalPolynomial::from_ints(&[-1, 1, 2, 2, 3, 1]);
        let p5 = RationalPolynomial::from_ints(&[-1, -3, 0, 6, 5, 1]);
        assert_eq!(p3.eval_at(&int(1)), int(12));
        assert_eq!(p4.eval_at(&int(1)), int(8));
        assert_eq!(p5.eval_at(&int(1)), int(8));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            p1().derivative(),
            RationalPolynomial::from_ints(&[-1, 6, 3])
        );
        assert!(RationalPolynomial::from_ints(&[5]).derivative().is_zero());
        assert_eq!(
            RationalPolynomial::monomial(int(1), 6).derivative(),
            RationalPolynomial::monomial(int(6), 5)
        );
    }

    #[test]
    fn taylor_shift_examples() {
        let n6 = RationalPolynomial::from_ints(&[8, -2, -31, 8, 86, 66, 13]);
        assert_eq!(
            n6.taylor_shift(&int(1)),
            RationalPolynomial::from_ints(&[148, 712, 1364, 1272, 611, 144, 13])
        );
        assert_eq!(n6.taylor_shift(&int(0)), n6);
        assert_eq!(
            RationalPolynomial::monomial(int(1), 2).taylor_shift(&int(1)),
            RationalPolynomial::from_ints(&[1, 2, 1])
        );
    }

    #[test]
    fn descartes_examples() {
        assert_eq!(p1().descartes_sign_changes().unwrap(), 1);
        assert_eq!(
            RationalPolynomial::from_ints(&[1, 1, 1])
                .descartes_sign_changes()
                .unwrap(),
            0
        );
        assert_eq!(
            RationalPolynomial::from_ints(&[2, -3, 1])
                .descartes_sign_changes()
                .unwrap(),
            2
        );
        // zeros are skipped: x^3 - 1 has one change
        assert_eq!(
            RationalPolynomial::from_ints(&[-1, 0, 0, 1])
                .descartes_sign_changes()
                .unwrap(),
            1
        );
        assert!(RationalPolynomial::zero().descartes_sign_changes().is_err());
    }

    #[test]
    fn div_rem_reconstructs_dividend() {
        let a = RationalPolynomial::from_ints(&[3, -1, 4, 1, 5]);
        let b = RationalPolynomial::new(vec![ratio(1, 2), int(0), int(3)]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert!(a.div_rem(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn cauchy_bound_exceeds_roots() {
        // roots 1 and 2
        let p = RationalPolynomial::from_ints(&[2, -3, 1]);
        assert_eq!(p.cauchy_bound().unwrap(), int(4));
    }

    #[test]
    fn json_uses_fraction_strings() {
        let p = RationalPolynomial::new(vec![int(8), int(-2), ratio(1, 3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["8/1","-2/1","1/3"]"#);
        let back: RationalPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        assert_eq!(p1().to_string(), "x^3 + 3x^2 - x - 1");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }
}
