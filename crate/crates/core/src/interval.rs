//! Closed binary64 intervals that are guaranteed to contain a real value.
//!
//! Every arithmetic result is widened outward by one ulp on each side, which
//! covers the half-ulp error of round-to-nearest. Library transcendental
//! functions (`ln`, `exp`, `ln_1p`) are widened by two ulps since they are
//! faithful but not correctly rounded.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

fn down(x: f64, ulps: u32) -> f64 {
    (0..ulps).fold(x, |v, _| v.next_down())
}

fn up(x: f64, ulps: u32) -> f64 {
    (0..ulps).fold(x, |v, _| v.next_up())
}

impl Enclosure {
    /// Builds `[lo, hi]`; both ends must be finite and ordered.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::Overflow(format!(
                "non-finite enclosure [{lo}, {hi}]"
            )));
        }
        if lo > hi {
            return Err(Error::Domain(format!("inverted enclosure [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    /// Degenerate interval holding an exactly representable value.
    pub fn point(x: f64) -> Self {
        assert!(x.is_finite(), "enclosure point must be finite, got {x}");
        Self { lo: x, hi: x }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(&rational::int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&rational::ratio(num, den))
    }

    /// Tightest binary64 enclosure of an exact rational.
    pub fn from_rational(r: &Rational) -> Self {
        let (lo, hi) = rational::f64_bounds(r);
        Self::new(lo, hi).expect("rational outside binary64 range")
    }

    /// Encloses a decimal literal: the correctly rounded binary64 value widened
    /// by one ulp on each side.
    pub fn from_decimal(s: &str) -> Result<Self> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal literal {s:?}")))?;
        Self::new(v.next_down(), v.next_up())
    }

    fn widened(lo: f64, hi: f64, ulps: u32) -> Self {
        let (lo, hi) = (down(lo, ulps), up(hi, ulps));
        assert!(
            lo.is_finite() && hi.is_finite(),
            "enclosure overflowed binary64: [{lo}, {hi}]"
        );
        Self { lo, hi }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        self.lo / 2.0 + self.hi / 2.0
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo).next_up()
    }

    /// Largest absolute value in the interval.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn encloses(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    /// Strictly below `other`, with no shared point.
    pub fn strictly_below(&self, other: &Enclosure) -> bool {
        self.hi < other.lo
    }

    pub fn hull(&self, other: &Enclosure) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// `[-r, r]` for `r >= 0`.
    pub fn symmetric(r: f64) -> Self {
        let r = r.abs();
        Self { lo: -r, hi: r }
    }

    /// Every point of `self` lies within `tol` of `target`.
    pub fn within(&self, target: f64, tol: f64) -> bool {
        self.lo >= target - tol && self.hi <= target + tol
    }

    pub fn abs(self) -> Self {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Self {
                lo: 0.0,
                hi: self.mag(),
            }
        }
    }

    pub fn sqr(self) -> Self {
        let a = self.abs();
        Self::widened(a.lo * a.lo, a.hi * a.hi, 1)
    }

    pub fn powi(self, n: u32) -> Self {
        match n {
            0 => Self::point(1.0),
            1 => self,
            _ if n.is_multiple_of(2) => self.powi(n / 2).sqr(),
            _ => self.powi(n - 1) * self,
        }
    }

    pub fn recip(self) -> Self {
        Self::point(1.0) / self
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.contains_zero() {
            return Err(Error::Domain(format!(
                "division by enclosure containing zero {rhs}"
            )));
        }
        Ok(self.div_nonzero(rhs))
    }

    fn div_nonzero(self, rhs: Self) -> Self {
        let q = [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ];
        let lo = q.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = q.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self::widened(lo, hi, 1)
    }

    pub fn checked_ln(self) -> Result<Self> {
        if self.lo <= 0.0 {
            return Err(Error::Domain(format!(
                "logarithm of non-positive enclosure {self}"
            )));
        }
        Ok(Self::widened(self.lo.ln(), self.hi.ln(), 2))
    }

    /// Natural logarithm; panics unless the interval is strictly positive.
    pub fn ln(self) -> Self {
        self.checked_ln().unwrap_or_else(|e| panic!("{e}"))
    }

    /// `ln(1 + self)`, accurate for small arguments.
    pub fn ln_1p(self) -> Self {
        assert!(self.lo > -1.0, "ln_1p of enclosure {self} reaching -1");
        Self::widened(self.lo.ln_1p(), self.hi.ln_1p(), 2)
    }

    pub fn checked_exp(self) -> Result<Self> {
        let hi = up(self.hi.exp(), 2);
        if !hi.is_finite() {
            return Err(Error::Overflow(format!(
                "exp of {self} exceeds binary64 range"
            )));
        }
        let lo = down(self.lo.exp(), 2).max(0.0);
        Ok(Self { lo, hi })
    }

    /// Exponential; panics on overflow.
    pub fn exp(self) -> Self {
        self.checked_exp().unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sqrt(self) -> Self {
        assert!(
            self.lo >= 0.0,
            "sqrt of enclosure {self} with negative part"
        );
        // IEEE sqrt is correctly rounded.
        Self::widened(self.lo.sqrt(), self.hi.sqrt(), 1).max_zero()
    }

    fn max_zero(self) -> Self {
        Self {
            lo: self.lo.max(0.0),
            hi: self.hi,
        }
    }
}

impl Add for Enclosure {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::widened(self.lo + rhs.lo, self.hi + rhs.hi, 1)
    }
}

impl Sub for Enclosure {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::widened(self.lo - rhs.hi, self.hi - rhs.lo, 1)
    }
}

impl Mul for Enclosure {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let p = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self::widened(lo, hi, 1)
    }
}

/// Panics when the divisor contains zero; use [`Enclosure::checked_div`] when
/// that is not already excluded by the caller's domain check.
impl Div for Enclosure {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for Enclosure {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Add<f64> for Enclosure {
    type Output = Self;
    fn add(self, rhs: f64) -> Self {
        self + Self::point(rhs)
    }
}

impl Sub<f64> for Enclosure {
    type Output = Self;
    fn sub(self, rhs: f64) -> Self {
        self - Self::point(rhs)
    }
}

impl Mul<f64> for Enclosure {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self * Self::point(rhs)
    }
}

impl Div<f64> for Enclosure {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self / Self::point(rhs)
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

#[derive(Serialize, Deserialize)]
struct EnclosureRepr {
    lo: String,
    hi: String,
}

impl Serialize for Enclosure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EnclosureRepr {
            lo: format!("{:?}", self.lo),
            hi: format!("{:?}", self.hi),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Enclosure {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = EnclosureRepr::deserialize(deserializer)?;
        let lo: f64 = repr.lo.parse().map_err(D::Error::custom)?;
        let hi: f64 = repr.hi.parse().map_err(D::Error::custom)?;
        Enclosure::new(lo, hi).map_err(D::Error::custom)
    }
}
