//! Local data at the six fixed curves of a fixed 3-plane: closed-form
//! Euler classes of the section bundle, of the tangent space of the
//! Hilbert scheme of cubics in the 3-plane, and of the ambient
//! Grassmannian tangent space, together with the irreducible
//! representation lists that feed the oracle in [`crate::rep_algebra`].
//!
//! Two sign conventions coexist:
//!
//! * the *product* convention (`bundle_local_class`), in which all weight
//!   dependent signs cancel across the full localization sum — this is the
//!   one the counting path uses;
//! * the *signed* convention (`bundle_local_class_signed`), the per-point
//!   sign `sigma` times the unsigned product, which is what the
//!   representation-product oracle reproduces point by point.
//!
//! At the sixth fixed point the two unsigned products differ by
//! `(-1)^((m-1)/2)`; for orientable degree profiles these factors cancel
//! across the profile, so both conventions give the same per-plane sums.

use crate::arith::{double_factorial, epsilon};
use crate::rep_algebra::{RepTemplate, Twist};
use crate::weights::WeightVector;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LocalEulerError {
    #[error("degree must be odd and >= 3, got {0}")]
    DegreeDomain(i64),
    #[error("signed classes need odd weights, got ({0}, {1})")]
    EvenWeights(i64, i64),
    #[error("non-generic weights: factor {factor} vanishes at (a1, a2) = ({a1}, {a2})")]
    NonGenericPair { factor: String, a1: i64, a2: i64 },
    #[error("weight vector has {got} entries but floor((n+1)/2) = {expected}")]
    WeightLengthMismatch { expected: usize, got: usize },
    #[error("plane pair ({i}, {j}) out of range for {s} weights")]
    PairOutOfRange { i: usize, j: usize, s: usize },
}

/// One of the six fixed curves inside a fixed 3-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FixedPoint {
    Y1,
    Y2,
    Y3,
    Y4,
    Y5,
    Y6,
}

impl FixedPoint {
    pub const ALL: [FixedPoint; 6] = [
        FixedPoint::Y1,
        FixedPoint::Y2,
        FixedPoint::Y3,
        FixedPoint::Y4,
        FixedPoint::Y5,
        FixedPoint::Y6,
    ];

    /// 1-based index.
    pub fn index(self) -> usize {
        match self {
            FixedPoint::Y1 => 1,
            FixedPoint::Y2 => 2,
            FixedPoint::Y3 => 3,
            FixedPoint::Y4 => 4,
            FixedPoint::Y5 => 5,
            FixedPoint::Y6 => 6,
        }
    }
}

/// An unordered pair of weight indices selecting a fixed 3-plane,
/// 1-based with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlanePair {
    pub i: usize,
    pub j: usize,
}

impl PlanePair {
    pub fn new(i: usize, j: usize, s: usize) -> Result<Self, LocalEulerError> {
        if i >= 1 && i < j && j <= s {
            Ok(PlanePair { i, j })
        } else {
            Err(LocalEulerError::PairOutOfRange { i, j, s })
        }
    }

    /// All `C(s, 2)` pairs, in lexicographic order.
    pub fn all(s: usize) -> Vec<PlanePair> {
        let mut pairs = Vec::new();
        for i in 1..=s {
            for j in (i + 1)..=s {
                pairs.push(PlanePair { i, j });
            }
        }
        pairs
    }

    /// The two pair weights, index-smaller first, plus the complement.
    pub fn split(&self, w: &WeightVector) -> ((i64, i64), Vec<i64>) {
        let entries = w.entries();
        let a1 = entries[self.i - 1];
        let a2 = entries[self.j - 1];
        let complement: Vec<i64> = entries
            .iter()
            .enumerate()
            .filter(|(idx, _)| *idx != self.i - 1 && *idx != self.j - 1)
            .map(|(_, &c)| c)
            .collect();
        ((a1, a2), complement)
    }
}

fn check_degree(m: i64) -> Result<(), LocalEulerError> {
    if m < 3 || m % 2 == 0 {
        Err(LocalEulerError::DegreeDomain(m))
    } else {
        Ok(())
    }
}

fn twist_of(i: i64) -> Twist {
    if i % 2 == 0 {
        Twist::Plus
    } else {
        Twist::Minus
    }
}

/// Local Euler class of the degree-`m` section bundle at a fixed point,
/// in the product convention (the `e`-power, `(3m+1)/2`, is left
/// implicit).
pub fn bundle_local_class(
    m: i64,
    y: FixedPoint,
    a1: i64,
    a2: i64,
) -> Result<BigInt, LocalEulerError> {
    check_degree(m)?;
    let df = double_factorial(m).expect("odd m checked");
    let half = (m + 1) / 2;
    let a1_big = BigInt::from(a1);
    let a2_big = BigInt::from(a2);
    let value = match y {
        FixedPoint::Y1 => {
            let mut p = BigInt::one();
            for i in 0..m {
                p *= (m - i) * a1 - i * a2;
            }
            df * a2_big.pow(half as u32) * p
        }
        FixedPoint::Y2 => {
            let mut p = BigInt::one();
            for i in 1..m {
                p *= (m - i) * a1 - i * a2;
            }
            df * a1_big.pow(half as u32) * (m * a2) * p
        }
        FixedPoint::Y3 => {
            let mut p = BigInt::one();
            for i in 0..m {
                p *= (m - i) * a1 + i * a2;
            }
            df * a2_big.pow(half as u32) * p
        }
        FixedPoint::Y4 => {
            let mut p = BigInt::one();
            for i in 1..m {
                p *= (m - i) * a1 + i * a2;
            }
            df * a1_big.pow(half as u32) * (m * a2) * p
        }
        FixedPoint::Y5 => {
            let mut p = BigInt::one();
            for i in -((m - 1) / 2)..=((m - 1) / 2) {
                p *= a1 + 2 * i * a2;
            }
            df * a2_big.pow(half as u32) * p
        }
        FixedPoint::Y6 => {
            let mut p = BigInt::one();
            for i in -((m - 1) / 2)..=((m - 1) / 2) {
                p *= a2 + 2 * i * a1;
            }
            df * a1_big.pow(half as u32) * p
        }
    };
    Ok(value)
}

/// Per-point sign of the bundle class in the signed convention:
/// `epsilon(a1*a2)` for `m = 1 mod 4`; for `m = 3 mod 4` it is
/// `-epsilon(a1)` at points 2, 4, 5 and `-epsilon(a2)` at points 1, 3, 6.
pub fn bundle_sign(m: i64, y: FixedPoint, a1: i64, a2: i64) -> Result<i64, LocalEulerError> {
    check_degree(m)?;
    if a1 % 2 == 0 || a2 % 2 == 0 {
        return Err(LocalEulerError::EvenWeights(a1, a2));
    }
    let sign = if m.rem_euclid(4) == 1 {
        epsilon(a1 * a2).expect("odd product")
    } else {
        match y {
            FixedPoint::Y2 | FixedPoint::Y4 | FixedPoint::Y5 => -epsilon(a1).expect("odd"),
            FixedPoint::Y1 | FixedPoint::Y3 | FixedPoint::Y6 => -epsilon(a2).expect("odd"),
        }
    };
    Ok(sign)
}

/// Local bundle class in the signed convention: `sigma` times the
/// unsigned product as printed per fixed point. For points 1 through 5
/// the unsigned product coincides with [`bundle_local_class`]; at the
/// sixth point it differs from it by `(-1)^((m-1)/2)`.
pub fn bundle_local_class_signed(
    m: i64,
    y: FixedPoint,
    a1: i64,
    a2: i64,
) -> Result<BigInt, LocalEulerError> {
    let sign = bundle_sign(m, y, a1, a2)?;
    let unsigned = match y {
        FixedPoint::Y6 => {
            let df = double_factorial(m).expect("odd m checked");
            let mut p = BigInt::one();
            for i in 0..=((m - 3) / 2) {
                let k = m - 1 - 2 * i;
                p *= k * k * a1 * a1 - a2 * a2;
            }
            df * BigInt::from(a1).pow(((m + 1) / 2) as u32) * a2 * p
        }
        _ => bundle_local_class(m, y, a1, a2)?,
    };
    Ok(sign * unsigned)
}

/// Named linear factors of the tangent Euler class at a fixed point. The
/// leading integer is the constant multiplier.
fn tangent_factors(y: FixedPoint, a1: i64, a2: i64) -> (i64, [(&'static str, i64); 6]) {
    let sum = ("a1+a2", a1 + a2);
    let diff = ("a1-a2", a1 - a2);
    match y {
        FixedPoint::Y1 => (
            -4,
            [
                ("a1", a1),
                ("a2", a2),
                sum,
                diff,
                diff,
                ("a1+3a2", a1 + 3 * a2),
            ],
        ),
        FixedPoint::Y2 => (
            -4,
            [
                ("a1", a1),
                ("a2", a2),
                sum,
                diff,
                diff,
                ("3a1+a2", 3 * a1 + a2),
            ],
        ),
        FixedPoint::Y3 => (
            4,
            [
                ("a1", a1),
                ("a2", a2),
                sum,
                sum,
                diff,
                ("a1-3a2", a1 - 3 * a2),
            ],
        ),
        FixedPoint::Y4 => (
            4,
            [
                ("a1", a1),
                ("a2", a2),
                sum,
                sum,
                diff,
                ("3a1-a2", 3 * a1 - a2),
            ],
        ),
        FixedPoint::Y5 => (
            1,
            [
                sum,
                sum,
                diff,
                diff,
                ("3a1+a2", 3 * a1 + a2),
                ("3a1-a2", 3 * a1 - a2),
            ],
        ),
        FixedPoint::Y6 => (
            -1,
            [
                sum,
                sum,
                diff,
                diff,
                ("a1+3a2", a1 + 3 * a2),
                ("a1-3a2", a1 - 3 * a2),
            ],
        ),
    }
}

/// Local Euler class of the tangent space of the Hilbert scheme of the
/// 3-plane (the `e^6` factor is implicit). The swap signs are already
/// folded in. A vanishing factor means the weight pair is not generic.
pub fn tangent_h3_class(y: FixedPoint, a1: i64, a2: i64) -> Result<BigInt, LocalEulerError> {
    let (constant, factors) = tangent_factors(y, a1, a2);
    let mut value = BigInt::from(constant);
    for (name, factor) in factors {
        if factor == 0 {
            return Err(LocalEulerError::NonGenericPair {
                factor: name.to_string(),
                a1,
                a2,
            });
        }
        value *= factor;
    }
    Ok(value)
}

/// Local Euler class of the Grassmannian tangent space for the plane
/// selected by `pair` (product convention; `e`-power implicit). For even
/// `n` this carries the extra factor `a1 * a2`; the signed convention
/// additionally multiplies by `epsilon(a1 * a2)`.
pub fn grassmann_class(
    n: usize,
    w: &WeightVector,
    pair: PlanePair,
) -> Result<BigInt, LocalEulerError> {
    let s = (n + 1) / 2;
    if w.len() != s {
        return Err(LocalEulerError::WeightLengthMismatch {
            expected: s,
            got: w.len(),
        });
    }
    if pair.i < 1 || pair.i >= pair.j || pair.j > s {
        return Err(LocalEulerError::PairOutOfRange {
            i: pair.i,
            j: pair.j,
            s,
        });
    }
    let ((a1, a2), complement) = pair.split(w);
    let mut value = if n % 2 == 0 {
        BigInt::from(a1) * a2
    } else {
        BigInt::one()
    };
    for c in complement {
        for a in [a1, a2] {
            let factor = a * a - c * c;
            if factor == 0 {
                return Err(LocalEulerError::NonGenericPair {
                    factor: format!("{a}^2 - {c}^2"),
                    a1,
                    a2,
                });
            }
            value *= factor;
        }
    }
    if value.is_zero() {
        // a1 * a2 = 0 can only happen with a zero weight
        return Err(LocalEulerError::NonGenericPair {
            factor: "a1*a2".to_string(),
            a1,
            a2,
        });
    }
    Ok(value)
}

/// Signed-convention Grassmannian class: `epsilon(a1*a2)` times the
/// product convention when `n` is even, identical when `n` is odd.
pub fn grassmann_class_signed(
    n: usize,
    w: &WeightVector,
    pair: PlanePair,
) -> Result<BigInt, LocalEulerError> {
    let value = grassmann_class(n, w, pair)?;
    if n % 2 == 0 {
        let ((a1, a2), _) = pair.split(w);
        if a1 % 2 == 0 || a2 % 2 == 0 {
            return Err(LocalEulerError::EvenWeights(a1, a2));
        }
        Ok(epsilon(a1 * a2).expect("odd product") * value)
    } else {
        Ok(value)
    }
}

/// Irreducible summands of the section bundle fiber at a fixed point, as
/// weight templates in the pair `(a1, a2)`. The total dimension is
/// `3m + 1`; the Euler-class product reproduces
/// [`bundle_local_class_signed`].
pub fn bundle_basis_reps(m: i64, y: FixedPoint) -> Result<Vec<RepTemplate>, LocalEulerError> {
    check_degree(m)?;
    let mut reps = Vec::new();
    match y {
        FixedPoint::Y1 => {
            for i in 0..m {
                reps.push(RepTemplate::new(m - i, -i, twist_of(i)));
            }
            for i in 0..=((m - 1) / 2) {
                reps.push(RepTemplate::new(0, m - 2 * i, twist_of(i)));
            }
        }
        FixedPoint::Y2 => {
            for i in 1..m {
                reps.push(RepTemplate::new(m - i, -i, twist_of(i)));
            }
            reps.push(RepTemplate::new(0, m, Twist::Plus));
            for i in 0..=((m - 1) / 2) {
                reps.push(RepTemplate::new(m - 2 * i, 0, twist_of(i)));
            }
        }
        FixedPoint::Y3 => {
            for i in 0..m {
                reps.push(RepTemplate::new(m - i, i, Twist::Plus));
            }
            for i in 0..=((m - 1) / 2) {
                reps.push(RepTemplate::new(0, m - 2 * i, twist_of(i)));
            }
        }
        FixedPoint::Y4 => {
            for i in 1..m {
                reps.push(RepTemplate::new(m - i, i, Twist::Plus));
            }
            reps.push(RepTemplate::new(0, m, Twist::Plus));
            for i in 0..=((m - 1) / 2) {
                reps.push(RepTemplate::new(m - 2 * i, 0, twist_of(i)));
            }
        }
        FixedPoint::Y5 => {
            for i in 0..m {
                reps.push(RepTemplate::new(1, m - 1 - 2 * i, twist_of(i)));
            }
            for i in 0..=((m - 1) / 2) {
                reps.push(RepTemplate::new(0, m - 2 * i, twist_of(i)));
            }
        }
        FixedPoint::Y6 => {
            for i in 0..=((m - 1) / 2) {
                reps.push(RepTemplate::new(m - 1 - 2 * i, 1, twist_of(i)));
            }
            for i in 0..=((m - 3) / 2) {
                reps.push(RepTemplate::new(m - 1 - 2 * i, -1, twist_of(i + 1)));
            }
            for i in 0..=((m - 1) / 2) {
                reps.push(RepTemplate::new(m - 2 * i, 0, twist_of(i)));
            }
        }
    }
    Ok(reps)
}

/// The six irreducible tangent summands at a fixed point, plus the
/// orientation sign from the swap count of the basis rearrangement
/// (1, 1, 2, 2, 0, 3 swaps at the six points, so `-1` at points 1, 2, 6).
pub fn tangent_reps(y: FixedPoint) -> (Vec<RepTemplate>, i64) {
    use Twist::{Minus, Plus};
    let t = RepTemplate::new;
    match y {
        FixedPoint::Y1 => (
            vec![
                t(2, 0, Minus),
                t(1, -1, Plus),
                t(1, 3, Plus),
                t(0, 2, Minus),
                t(1, 1, Minus),
                t(1, -1, Plus),
            ],
            -1,
        ),
        FixedPoint::Y2 => (
            vec![
                t(1, -1, Plus),
                t(0, 2, Minus),
                t(2, 0, Minus),
                t(3, 1, Plus),
                t(1, 1, Minus),
                t(1, -1, Plus),
            ],
            -1,
        ),
        FixedPoint::Y3 => (
            vec![
                t(1, 1, Minus),
                t(2, 0, Minus),
                t(0, 2, Minus),
                t(1, -3, Minus),
                t(1, -1, Plus),
                t(1, 1, Minus),
            ],
            1,
        ),
        FixedPoint::Y4 => (
            vec![
                t(1, 1, Minus),
                t(0, 2, Minus),
                t(2, 0, Minus),
                t(3, -1, Minus),
                t(1, -1, Plus),
                t(1, 1, Minus),
            ],
            1,
        ),
        FixedPoint::Y5 => (
            vec![
                t(1, -1, Plus),
                t(1, 1, Minus),
                t(1, 1, Minus),
                t(3, 1, Plus),
                t(3, -1, Minus),
                t(1, -1, Plus),
            ],
            1,
        ),
        FixedPoint::Y6 => (
            vec![
                t(1, -1, Plus),
                t(1, 1, Minus),
                t(1, 1, Minus),
                t(1, 3, Plus),
                t(1, -3, Minus),
                t(1, -1, Plus),
            ],
            -1,
        ),
    }
}

/// Evaluated irreducible summands of the Grassmannian tangent fiber for a
/// plane pair, plus an orientation sign.
///
/// Each complement weight `c` contributes `rho_{a+c} + rho^-_{|a-c|}` for
/// both pair weights `a`; when `c > a` the natural basis of the difference
/// summand is not oriented, which flips the sign once. For even `n` the
/// singles `rho_{a1}`, `rho_{a2}` are appended. With the sign applied,
/// the Euler product equals [`grassmann_class_signed`].
pub fn grassmann_reps(
    n: usize,
    w: &WeightVector,
    pair: PlanePair,
) -> Result<(Vec<crate::rep_algebra::IrredRep>, i64), LocalEulerError> {
    use crate::rep_algebra::IrredRep;
    let s = (n + 1) / 2;
    if w.len() != s {
        return Err(LocalEulerError::WeightLengthMismatch {
            expected: s,
            got: w.len(),
        });
    }
    let ((a1, a2), complement) = pair.split(w);
    let mut reps = Vec::new();
    let mut flips = 0usize;
    for &c in &complement {
        for a in [a1, a2] {
            reps.push(IrredRep::plus(a + c));
            reps.push(IrredRep::minus((a - c).abs()));
            if c > a {
                flips += 1;
            }
        }
    }
    if n % 2 == 0 {
        reps.push(IrredRep::plus(a1));
        reps.push(IrredRep::plus(a2));
    }
    let sign = if flips % 2 == 0 { 1 } else { -1 };
    Ok((reps, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_algebra::{euler_product, euler_product_of_templates, EquivClass};
    use crate::weights::WeightVector;
    use num_rational::BigRational;
    use proptest::prelude::*;

    /// Weight pairs in the faithful regime `a1 >> a2` used by the oracle
    /// comparisons; all odd, distinct, no ratio 3.
    const ORACLE_PAIRS: [(i64, i64); 3] = [(401, 1), (1999, 3), (3001, 5)];

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bundle_class_known_values() {
        // 3!! * 1 * (3*5) * (2*5-1) * (5-2) = 3 * 15 * 9 * 3
        assert_eq!(
            bundle_local_class(3, FixedPoint::Y1, 5, 1).unwrap(),
            big(1215)
        );
        // 3!! * 1 * (5-2)(5)(5+2)
        assert_eq!(
            bundle_local_class(3, FixedPoint::Y5, 5, 1).unwrap(),
            big(315)
        );
        assert!(bundle_local_class(4, FixedPoint::Y1, 5, 1).is_err());
        assert!(bundle_local_class(1, FixedPoint::Y1, 5, 1).is_err());
    }

    #[test]
    fn bundle_class_y2_matches_product_oracle() {
        // independent loop for m = 5 at (7, 1):
        // 15 * 7^3 * 5 * 1 * prod_{i=1}^{4} ((5-i)*7 - i)
        let mut expected = big(15) * big(7).pow(3) * 5;
        for i in 1..5i64 {
            expected *= (5 - i) * 7 - i;
        }
        assert_eq!(
            bundle_local_class(5, FixedPoint::Y2, 7, 1).unwrap(),
            expected
        );
    }

    #[test]
    fn bundle_signs_match_residue_rules() {
        assert_eq!(bundle_sign(5, FixedPoint::Y1, 5, 1).unwrap(), 1); // epsilon(5)
        assert_eq!(bundle_sign(3, FixedPoint::Y2, 5, 1).unwrap(), -1); // -epsilon(5)
        assert_eq!(bundle_sign(3, FixedPoint::Y1, 5, 1).unwrap(), -1); // -epsilon(1)
        assert_eq!(
            bundle_local_class_signed(3, FixedPoint::Y1, 5, 1).unwrap(),
            big(-1215)
        );
        assert!(bundle_sign(3, FixedPoint::Y1, 2, 1).is_err());
    }

    #[test]
    fn tangent_class_known_values() {
        assert_eq!(tangent_h3_class(FixedPoint::Y1, 5, 1).unwrap(), big(-15360));
        assert_eq!(tangent_h3_class(FixedPoint::Y5, 5, 1).unwrap(), big(129024));
        assert_eq!(tangent_h3_class(FixedPoint::Y6, 5, 1).unwrap(), big(-9216));
    }

    #[test]
    fn tangent_class_names_vanishing_factor() {
        let err = tangent_h3_class(FixedPoint::Y3, 3, 1).unwrap_err();
        match err {
            LocalEulerError::NonGenericPair { factor, .. } => {
                assert_eq!(factor, "a1-3a2");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn grassmann_class_known_values() {
        let w2 = WeightVector::new(vec![1, 5]).unwrap();
        let pair = PlanePair::new(1, 2, 2).unwrap();
        assert_eq!(grassmann_class(4, &w2, pair).unwrap(), big(5));
        // odd n with empty complement: the Grassmannian is a point
        assert_eq!(grassmann_class(3, &w2, pair).unwrap(), big(1));
        let w3 = WeightVector::new(vec![1, 5, 7]).unwrap();
        let pair = PlanePair::new(1, 2, 3).unwrap();
        // (1 - 49)(25 - 49)
        assert_eq!(grassmann_class(5, &w3, pair).unwrap(), big(1152));
        assert!(grassmann_class(7, &w3, pair).is_err()); // needs s = 4
    }

    #[test]
    fn bundle_rep_lists_match_proof() {
        let y1 = bundle_basis_reps(3, FixedPoint::Y1).unwrap();
        assert_eq!(y1.len(), 5);
        assert_eq!(2 * y1.len() as i64, 3 * 3 + 1);
        let y2 = bundle_basis_reps(3, FixedPoint::Y2).unwrap();
        assert!(y2.contains(&RepTemplate::new(0, 3, Twist::Plus)));
        let y6 = bundle_basis_reps(5, FixedPoint::Y6).unwrap();
        let expected = vec![
            RepTemplate::new(4, 1, Twist::Plus),
            RepTemplate::new(2, 1, Twist::Minus),
            RepTemplate::new(0, 1, Twist::Plus),
            RepTemplate::new(4, -1, Twist::Minus),
            RepTemplate::new(2, -1, Twist::Plus),
            RepTemplate::new(5, 0, Twist::Plus),
            RepTemplate::new(3, 0, Twist::Minus),
            RepTemplate::new(1, 0, Twist::Plus),
        ];
        assert_eq!(y6, expected);
    }

    #[test]
    fn dimension_audits() {
        for m in [3i64, 5, 7, 9, 11, 13] {
            for y in FixedPoint::ALL {
                let reps = bundle_basis_reps(m, y).unwrap();
                assert_eq!(2 * reps.len() as i64, 3 * m + 1, "bundle dim at {y:?}");
            }
        }
        for y in FixedPoint::ALL {
            assert_eq!(tangent_reps(y).0.len() * 2, 12);
        }
        for (n, s) in [(5usize, 3usize), (7, 4), (8, 4), (10, 5), (11, 6), (12, 6)] {
            let w = crate::weights::default_weights(s).unwrap();
            for pair in PlanePair::all(s) {
                let (reps, _) = grassmann_reps(n, &w, pair).unwrap();
                assert_eq!(reps.len() * 2, 4 * (n - 3), "grassmann dim at n={n}");
            }
        }
    }

    #[test]
    fn tangent_extra_signs() {
        assert_eq!(tangent_reps(FixedPoint::Y1).1, -1);
        assert_eq!(tangent_reps(FixedPoint::Y2).1, -1);
        assert_eq!(tangent_reps(FixedPoint::Y3).1, 1);
        assert_eq!(tangent_reps(FixedPoint::Y4).1, 1);
        assert_eq!(tangent_reps(FixedPoint::Y5).1, 1);
        assert_eq!(tangent_reps(FixedPoint::Y6).1, -1);
    }

    #[test]
    fn grassmann_rep_examples() {
        use crate::rep_algebra::IrredRep;
        let w2 = WeightVector::new(vec![1, 5]).unwrap();
        let pair2 = PlanePair::new(1, 2, 2).unwrap();
        let (reps, sign) = grassmann_reps(4, &w2, pair2).unwrap();
        assert_eq!(reps, vec![IrredRep::plus(1), IrredRep::plus(5)]);
        assert_eq!(sign, 1);
        let (reps3, _) = grassmann_reps(3, &w2, pair2).unwrap();
        assert!(reps3.is_empty());
        let w3 = WeightVector::new(vec![1, 5, 7]).unwrap();
        let (reps5, sign5) = grassmann_reps(5, &w3, PlanePair::new(1, 2, 3).unwrap()).unwrap();
        assert_eq!(
            reps5,
            vec![
                IrredRep::plus(8),
                IrredRep::minus(6),
                IrredRep::plus(12),
                IrredRep::minus(2),
            ]
        );
        assert_eq!(sign5, 1);
    }

    fn assert_oracle_matches(class: &EquivClass, expected: &BigInt, e_pow: u32) {
        assert_eq!(class.coeff, BigRational::from_integer(expected.clone()));
        assert_eq!(class.e_pow, e_pow);
        assert!(!class.etilde_parity);
    }

    #[test]
    fn bundle_oracle_agrees_with_signed_closed_form() {
        for m in [3i64, 5, 7, 9, 11, 13] {
            for y in FixedPoint::ALL {
                let reps = bundle_basis_reps(m, y).unwrap();
                for (a1, a2) in ORACLE_PAIRS {
                    let product = euler_product_of_templates(&reps, a1, a2);
                    let closed = bundle_local_class_signed(m, y, a1, a2).unwrap();
                    assert_oracle_matches(&product, &closed, ((3 * m + 1) / 2) as u32);
                }
            }
        }
    }

    #[test]
    fn tangent_oracle_agrees_with_closed_form() {
        for y in FixedPoint::ALL {
            let (reps, extra_sign) = tangent_reps(y);
            for (a1, a2) in ORACLE_PAIRS {
                let product = euler_product_of_templates(&reps, a1, a2);
                let closed = tangent_h3_class(y, a1, a2).unwrap();
                assert_oracle_matches(&product, &(extra_sign * closed), 6);
            }
        }
    }

    #[test]
    fn grassmann_oracle_agrees_with_closed_form() {
        for (n, entries) in [
            (5usize, vec![1i64, 5, 7]),
            (7, vec![1, 5, 7, 11]),
            (8, vec![1, 5, 7, 11]),
            (10, vec![1, 5, 7, 11, 13]),
            (11, vec![1, 5, 7, 11, 13, 17]),
        ] {
            let w = WeightVector::new(entries).unwrap();
            for pair in PlanePair::all(w.len()) {
                let (reps, sign) = grassmann_reps(n, &w, pair).unwrap();
                let product = euler_product(&reps);
                let closed = grassmann_class_signed(n, &w, pair).unwrap();
                assert_eq!(
                    product.coeff,
                    BigRational::from_integer(sign * closed),
                    "n={n} pair=({}, {})",
                    pair.i,
                    pair.j
                );
                assert!(!product.etilde_parity);
            }
        }
    }

    proptest! {
        #[test]
        fn pair_swap_identities(seed in 0u64..200) {
            let w = crate::weights::random_generic_weights(2, seed).unwrap();
            let (a, b) = (w.entries()[0], w.entries()[1]);
            for m in [3i64, 5, 7] {
                for (left, right) in [
                    (FixedPoint::Y1, FixedPoint::Y2),
                    (FixedPoint::Y3, FixedPoint::Y4),
                    (FixedPoint::Y5, FixedPoint::Y6),
                ] {
                    prop_assert_eq!(
                        bundle_local_class(m, left, a, b).unwrap(),
                        bundle_local_class(m, right, b, a).unwrap()
                    );
                    prop_assert_eq!(
                        tangent_h3_class(left, a, b).unwrap(),
                        tangent_h3_class(right, b, a).unwrap()
                    );
                }
            }
        }
    }
}
