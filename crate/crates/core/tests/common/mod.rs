//! High-precision reference values computed independently of the library:
//! binary fixed point on big integers, Machin's formula for π, atanh series
//! for logarithms, exact Bernoulli numbers and a long asymptotic series at a
//! large shifted argument.

#![allow(dead_code)]

use std::sync::OnceLock;

use gammacert::Enclosure;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fractional bits.
pub const BITS: u32 = 320;
/// Shift the argument to at least this value before the series.
const SHIFT_TO: i64 = 60;
const SERIES_TERMS: usize = 20;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Value `raw / 2^BITS`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fixed(pub BigInt);

fn one_raw() -> BigInt {
    BigInt::one() << BITS
}

impl Fixed {
    pub fn from_ratio(r: &BigRational) -> Self {
        Fixed((r.numer() << BITS) / r.denom())
    }

    pub fn from_f64(x: f64) -> Self {
        Self::from_ratio(&BigRational::from_float(x).expect("finite"))
    }

    pub fn int(n: i64) -> Self {
        Fixed(BigInt::from(n) << BITS)
    }

    pub fn add(&self, o: &Self) -> Self {
        Fixed(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Fixed(&self.0 - &o.0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Fixed((&self.0 * &o.0) >> BITS)
    }

    pub fn div(&self, o: &Self) -> Self {
        Fixed((&self.0 << BITS) / &o.0)
    }

    pub fn mul_ratio(&self, r: &BigRational) -> Self {
        Fixed(&self.0 * r.numer() / r.denom())
    }

    pub fn neg(&self) -> Self {
        Fixed(-&self.0)
    }

    pub fn to_f64(&self) -> f64 {
        let r = BigRational::new(self.0.clone(), one_raw());
        r.to_f64().unwrap()
    }

    /// The whole ball of radius 2^-200 around this value lies inside `e`.
    pub fn inside(&self, e: &Enclosure) -> bool {
        let slack = BigInt::one() << (BITS - 200);
        let lo = Fixed::from_f64(e.lo()).0;
        let hi = Fixed::from_f64(e.hi()).0;
        lo <= &self.0 - &slack && &self.0 + &slack <= hi
    }
}

/// 2·atanh(t) = 2 Σ t^{2j+1}/(2j+1) for |t| < 1.
fn two_atanh(t: &Fixed) -> Fixed {
    let t2 = t.mul(t);
    let mut power = t.clone();
    let mut sum = Fixed(BigInt::zero());
    let mut j = 0i64;
    while !power.0.is_zero() {
        sum = sum.add(&Fixed(&power.0 / (2 * j + 1)));
        power = power.mul(&t2);
        j += 1;
    }
    Fixed(sum.0 * 2)
}

fn atan_inv(n: i64) -> Fixed {
    let mut power = Fixed(one_raw() / n);
    let n2 = n * n;
    let mut sum = BigInt::zero();
    let mut j = 0i64;
    while !power.0.is_zero() {
        let term = &power.0 / (2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power = Fixed(&power.0 / n2);
        j += 1;
    }
    Fixed(sum)
}

pub fn pi() -> &'static Fixed {
    static PI: OnceLock<Fixed> = OnceLock::new();
    PI.get_or_init(|| Fixed(atan_inv(5).0 * 16 - atan_inv(239).0 * 4))
}

pub fn ln2() -> &'static Fixed {
    static LN2: OnceLock<Fixed> = OnceLock::new();
    LN2.get_or_init(|| two_atanh(&Fixed(one_raw() / 3)))
}

pub fn ln(x: &Fixed) -> Fixed {
    assert!(x.0.is_positive(), "ln of a nonpositive value");
    let k = x.0.bits() as i64 - BITS as i64 - 1;
    let m = if k >= 0 {
        Fixed(&x.0 >> k as u32)
    } else {
        Fixed(&x.0 << (-k) as u32)
    };
    let one = Fixed::int(1);
    let t = m.sub(&one).div(&m.add(&one));
    two_atanh(&t).add(&Fixed(&ln2().0 * k))
}

/// exp(x) for moderate |x|: Taylor series at x/2^16, then 16 squarings.
pub fn exp_small(x: &Fixed) -> Fixed {
    let r = Fixed(&x.0 >> 16u32);
    let mut term = Fixed::int(1);
    let mut sum = Fixed::int(1);
    let mut k = 1i64;
    while !term.0.is_zero() {
        term = Fixed(term.mul(&r).0 / k);
        sum = sum.add(&term);
        k += 1;
    }
    for _ in 0..16 {
        sum = sum.mul(&sum);
    }
    sum
}

/// B_0 … B_{2n} exactly.
pub fn bernoulli(n: usize) -> &'static [BigRational] {
    static B: OnceLock<Vec<BigRational>> = OnceLock::new();
    let all = B.get_or_init(|| {
        let m = 2 * SERIES_TERMS + 2;
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for j in 1..=m {
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from(binom.clone()) * bk;
                binom = binom * BigInt::from(j + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-acc / BigRational::from(BigInt::from(j + 1)));
        }
        b
    });
    &all[..=2 * n]
}

struct Shifted {
    z: Fixed,
    /// x, x+1, …, z−1
    offsets: Vec<Fixed>,
}

fn shift(x: f64) -> Shifted {
    assert!(x > 0.0 && x.is_finite());
    let n = (SHIFT_TO as f64 - x).ceil().max(0.0) as i64;
    let xf = Fixed::from_f64(x);
    let offsets = (0..n).map(|i| xf.add(&Fixed::int(i))).collect();
    Shifted {
        z: xf.add(&Fixed::int(n)),
        offsets,
    }
}

fn ratio(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Fixed {
    let s = shift(x);
    let z = &s.z;
    let b = bernoulli(SERIES_TERMS);
    let ln_z = ln(z);
    let half_ln_2pi = ln(&Fixed(&pi().0 * 2)).mul_ratio(&BigRational::new(1.into(), 2.into()));
    let mut v = z
        .sub(&Fixed::int(1).mul_ratio(&BigRational::new(1.into(), 2.into())))
        .mul(&ln_z);
    v = v.sub(z).add(&half_ln_2pi);
    let inv = Fixed::int(1).div(z);
    let inv2 = inv.mul(&inv);
    let mut power = inv.clone();
    for k in 1..=SERIES_TERMS {
        let c = &b[2 * k] / ratio((2 * k * (2 * k - 1)) as i64);
        v = v.add(&power.mul_ratio(&c));
        power = power.mul(&inv2);
    }
    for o in &s.offsets {
        v = v.sub(&ln(o));
    }
    v
}

/// ψ⁽ᵏ⁾(x) for k in 0..=2 and x > 0.
pub fn polygamma(k: u32, x: f64) -> Fixed {
    let s = shift(x);
    let z = &s.z;
    let b = bernoulli(SERIES_TERMS);
    let one = Fixed::int(1);
    let inv = one.div(z);
    let inv2 = inv.mul(&inv);
    let half = BigRational::new(1.into(), 2.into());
    match k {
        0 => {
            let mut v = ln(z).sub(&inv.mul_ratio(&half));
            let mut power = inv2.clone();
            for j in 1..=SERIES_TERMS {
                v = v.sub(&power.mul_ratio(&(&b[2 * j] / ratio(2 * j as i64))));
                power = power.mul(&inv2);
            }
            for o in &s.offsets {
                v = v.sub(&one.div(o));
            }
            v
        }
        1 => {
            let mut v = inv.add(&inv2.mul_ratio(&half));
            let mut power = inv2.mul(&inv);
            for j in 1..=SERIES_TERMS {
                v = v.add(&power.mul_ratio(&b[2 * j]));
                power = power.mul(&inv2);
            }
            for o in &s.offsets {
                let r = one.div(o);
                v = v.add(&r.mul(&r));
            }
            v
        }
        2 => {
            let mut v = inv2.neg().sub(&inv2.mul(&inv));
            let mut power = inv2.mul(&inv2);
            for j in 1..=SERIES_TERMS {
                v = v.sub(&power.mul_ratio(&(&b[2 * j] * ratio(2 * j as i64 + 1))));
                power = power.mul(&inv2);
            }
            for o in &s.offsets {
                let r = one.div(o);
                v = v.sub(&Fixed(r.mul(&r).mul(&r).0 * 2));
            }
            v
        }
        _ => panic!("order {k} not supported by the oracle"),
    }
}

pub fn ln_pi() -> Fixed {
    ln(pi())
}
