//! Integer-only arithmetic kernel.
//!
//! The rasterizer never touches floating point: every division it performs goes
//! through [`long_divide`], a shift-subtract binary division, and is rounded by
//! the half-threshold rule in [`div_round_half`]. [`Rational`] is the exact
//! arithmetic used by the oracle paths that check the integer pipeline.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Quotient and remainder of a non-negative integer division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivResult {
    pub quotient: u64,
    pub remainder: u64,
}

/// Binary long division: walk the numerator from its most significant bit,
/// shifting each bit into the running remainder and subtracting the divisor
/// whenever it fits.
pub fn long_divide(numerator: u64, divisor: u64) -> Result<DivResult, ArithError> {
    if divisor == 0 {
        return Err(ArithError::DivisionByZero);
    }
    let mut quotient = 0u64;
    let mut remainder = 0u64;
    let bits = u64::BITS - numerator.leading_zeros();
    for bit in (0..bits).rev() {
        // remainder < divisor <= u64::MAX, so the shifted value needs one extra bit
        let shifted = (u128::from(remainder) << 1) | u128::from((numerator >> bit) & 1);
        quotient <<= 1;
        if shifted >= u128::from(divisor) {
            remainder = (shifted - u128::from(divisor)) as u64;
            quotient |= 1;
        } else {
            remainder = shifted as u64;
        }
    }
    Ok(DivResult {
        quotient,
        remainder,
    })
}

/// Divides and rounds to the nearest integer, ties up.
///
/// The remainder is shifted left once and compared against the divisor: below
/// it the quotient stands (floor), otherwise it is bumped (ceiling).
pub fn div_round_half(numerator: u64, divisor: u64) -> Result<u64, ArithError> {
    let DivResult {
        quotient,
        remainder,
    } = long_divide(numerator, divisor)?;
    // remainder << 1 < divisor, written without the shift to stay in range
    if remainder < divisor - remainder {
        Ok(quotient)
    } else {
        Ok(quotient + 1)
    }
}

/// Exact signed rational kept in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i128,
    denom: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    pub fn new(numer: i128, denom: i128) -> Result<Self, ArithError> {
        if denom == 0 {
            return Err(ArithError::DivisionByZero);
        }
        let g = gcd(numer, denom);
        let sign = if denom < 0 { -1 } else { 1 };
        Ok(Rational {
            numer: sign * numer / g,
            denom: sign * denom / g,
        })
    }

    pub fn from_integer(n: i128) -> Self {
        Rational { numer: n, denom: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.numer
    }

    pub fn denom(&self) -> i128 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    pub fn checked_div(self, rhs: Rational) -> Result<Rational, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Rational::new(self.numer * rhs.denom, self.denom * rhs.numer)
    }

    pub fn to_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

/// Nearest integer with halves rounded toward positive infinity.
pub fn rat_round_half(value: Rational) -> i128 {
    // floor(value + 1/2) = floor((2n + d) / 2d)
    (2 * value.numer + value.denom).div_euclid(2 * value.denom)
}

/// Signed counterpart of [`div_round_half`] for callers that already hold
/// a numerator/denominator pair.
pub fn div_round_half_signed(numerator: i64, divisor: i64) -> Result<i64, ArithError> {
    let value = Rational::new(i128::from(numerator), i128::from(divisor))?;
    Ok(rat_round_half(value) as i64)
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(i128::from(n))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(
            self.numer * rhs.denom + rhs.numer * self.denom,
            self.denom * rhs.denom,
        )
        .expect("nonzero denominators")
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(self.numer * rhs.numer, self.denom * rhs.denom).expect("nonzero denominators")
    }
}

/// Panics on a zero divisor; use [`Rational::checked_div`] where that can happen.
impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numer * other.denom).cmp(&(other.numer * self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
