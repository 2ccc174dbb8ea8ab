//! Exact integer and rational arithmetic helpers.
//!
//! Everything here is arbitrary precision: totals in the signature table
//! reach ~10^18 and intermediate products far exceed 64 bits, so no
//! floating point appears anywhere in a computation path. Rationals are
//! [`num_rational::BigRational`], which keeps the denominator positive and
//! the fraction reduced after every operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact rational number with positive denominator and reduced fraction.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("double factorial requires an odd positive argument, got {0}")]
    DoubleFactorialDomain(i64),
    #[error("epsilon is defined on odd integers only, got {0}")]
    EpsilonEven(i64),
    #[error("orientation constants require m >= 3, got {0}")]
    ConstantsDomain(i64),
}

/// Double factorial `m!! = 1 * 3 * 5 * ... * m` for odd positive `m`.
pub fn double_factorial(m: i64) -> Result<BigInt, ArithError> {
    if m < 1 || m % 2 == 0 {
        return Err(ArithError::DoubleFactorialDomain(m));
    }
    let mut acc = BigInt::from(1);
    let mut i = 1i64;
    while i <= m {
        acc *= i;
        i += 2;
    }
    Ok(acc)
}

/// The sign `epsilon(a)` of an odd integer: `+1` for `a = 1 mod 4`,
/// `-1` for `a = 3 mod 4`. Negative arguments reduce mod 4 first, so
/// `epsilon(-1) = -1`.
pub fn epsilon(a: i64) -> Result<i64, ArithError> {
    if a % 2 == 0 {
        return Err(ArithError::EpsilonEven(a));
    }
    Ok(match a.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => unreachable!("odd residues mod 4 are 1 or 3"),
    })
}

/// Binomial coefficient `C(n, k)` as a big integer (`0` for `k > n`).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// The three line-bundle exponents attached to a degree `m`:
/// `N_m = C(m+3, 4)`, `M_m = (3m-1)m/2` and `K_m = C(m-1, 2)`.
///
/// `M_m` also equals the alternating sum `N_m - 3*N_{m-2} + 2*N_{m-3}`,
/// which is how it arises from the three-term resolution; the closed form
/// is what gets evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationConstants {
    pub n_m: BigInt,
    pub m_m: BigInt,
    pub k_m: BigInt,
}

pub fn orientation_constants(m: i64) -> Result<OrientationConstants, ArithError> {
    if m < 3 {
        return Err(ArithError::ConstantsDomain(m));
    }
    Ok(OrientationConstants {
        n_m: binomial(m + 3, 4),
        m_m: BigInt::from((3 * m - 1) * m / 2),
        k_m: binomial(m - 1, 2),
    })
}
