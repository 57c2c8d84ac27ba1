//! Mathematical constants shipped as 50-significant-digit decimal literals.
//!
//! Digits were produced with mpmath at 60-digit working precision and
//! truncated to 50 significant digits. Each literal is turned into a 2-ulp
//! binary64 enclosure on first use.

use std::sync::LazyLock;

use serde::Serialize;

use crate::interval::Enclosure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantName {
    Pi,
    LnPi,
    EulerGamma,
    PiSqOver6,
    Zeta3,
}

#[derive(Debug, Clone, Copy)]
pub struct TrustedConstant {
    pub name: ConstantName,
    pub digits: &'static str,
    pub value: Enclosure,
}

const TABLE: [(ConstantName, &str); 5] = [
    (
        ConstantName::Pi,
        "3.1415926535897932384626433832795028841971693993751",
    ),
    (
        ConstantName::LnPi,
        "1.1447298858494001741434273513530587116472948129153",
    ),
    (
        ConstantName::EulerGamma,
        "0.57721566490153286060651209008240243104215933593992",
    ),
    (
        ConstantName::PiSqOver6,
        "1.6449340668482264364724151666460251892189499012068",
    ),
    (
        ConstantName::Zeta3,
        "1.2020569031595942853997381615114499907649862923405",
    ),
];

static CONSTANTS: LazyLock<Vec<TrustedConstant>> = LazyLock::new(|| {
    TABLE
        .iter()
        .map(|&(name, digits)| TrustedConstant {
            name,
            digits,
            value: Enclosure::from_decimal(digits).expect("constant literal"),
        })
        .collect()
});

pub fn all() -> &'static [TrustedConstant] {
    &CONSTANTS
}

pub fn get(name: ConstantName) -> Enclosure {
    CONSTANTS
        .iter()
        .find(|c| c.name == name)
        .map(|c| c.value)
        .expect("every constant name has a table entry")
}

pub fn pi() -> Enclosure {
    get(ConstantName::Pi)
}

pub fn ln_pi() -> Enclosure {
    get(ConstantName::LnPi)
}

pub fn euler_gamma() -> Enclosure {
    get(ConstantName::EulerGamma)
}

pub fn pi_sq_over_6() -> Enclosure {
    get(ConstantName::PiSqOver6)
}

pub fn zeta_3() -> Enclosure {
    get(ConstantName::Zeta3)
}

/// ln(2π)/2, the constant term of Stirling's series.
pub fn half_ln_two_pi() -> Enclosure {
    static V: LazyLock<Enclosure> = LazyLock::new(|| (Enclosure::point(2.0).ln() + ln_pi()) * 0.5);
    *V
}
