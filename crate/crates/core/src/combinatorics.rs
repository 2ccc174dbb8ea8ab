//! Monomial-orientation bookkeeping: the positive/negative/neutral
//! classification, the canonical order and its permutation sign, the
//! weight-range counts behind the swap lemma, and the per-fixed-point
//! swap counts — each checked against brute-force enumeration.
//!
//! This module is verification-only. The counting path never calls it;
//! the lemmas it makes executable are the ones that justify the sign
//! conventions already folded into [`crate::local_euler`].

use crate::arith::binomial;
use crate::local_euler::FixedPoint;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("case id must be 1..=6, got {0}")]
    InvalidCase(u8),
    #[error("degree must be odd and >= 3, got {0}")]
    DegreeDomain(i64),
}

/// A monomial in four variables `x1..x4` carrying torus weights
/// `(a1, -a1, a2, -a2)`, recorded by its exponent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial4 {
    pub exps: [u32; 4],
}

impl Monomial4 {
    pub fn new(exps: [u32; 4]) -> Self {
        Monomial4 { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Torus weight `a1 (m1 - m2) + a2 (m3 - m4)`.
    pub fn weight(&self, a1: i64, a2: i64) -> i64 {
        let [m1, m2, m3, m4] = self.exps.map(i64::from);
        a1 * (m1 - m2) + a2 * (m3 - m4)
    }
}

impl std::fmt::Display for Monomial4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for (var, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", var + 1)?,
                _ => write!(f, "x{}^{}", var + 1, e)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialClass {
    Positive,
    Negative,
    Neutral,
}

/// Classifies by exponent comparison: positive when `m1 > m2`, or
/// `m1 = m2` and `m3 > m4`; symmetric for negative; neutral when both
/// pairs tie. Equivalently, the sign of the weight once `a1` dominates.
pub fn classify(g: &Monomial4) -> MonomialClass {
    let [m1, m2, m3, m4] = g.exps;
    match (m1.cmp(&m2), m3.cmp(&m4)) {
        (std::cmp::Ordering::Greater, _) => MonomialClass::Positive,
        (std::cmp::Ordering::Less, _) => MonomialClass::Negative,
        (std::cmp::Ordering::Equal, std::cmp::Ordering::Greater) => MonomialClass::Positive,
        (std::cmp::Ordering::Equal, std::cmp::Ordering::Less) => MonomialClass::Negative,
        (std::cmp::Ordering::Equal, std::cmp::Ordering::Equal) => MonomialClass::Neutral,
    }
}

/// The involution swapping exponents 1 <-> 2 and 3 <-> 4.
pub fn star(g: &Monomial4) -> Monomial4 {
    let [m1, m2, m3, m4] = g.exps;
    Monomial4::new([m2, m1, m4, m3])
}

/// All degree-`m` monomials in descending lexicographic order
/// (`x1 > x2 > x3 > x4`, exponent vectors compared left to right).
pub fn lex_order(m: u32) -> Vec<Monomial4> {
    let mut out = Vec::new();
    for m1 in (0..=m).rev() {
        for m2 in (0..=(m - m1)).rev() {
            for m3 in (0..=(m - m1 - m2)).rev() {
                out.push(Monomial4::new([m1, m2, m3, m - m1 - m2 - m3]));
            }
        }
    }
    out
}

/// The canonical order on degree-`m` monomials: positive monomials in
/// descending lex order, each immediately followed by its star partner,
/// with the neutral monomials last (descending lex among themselves).
pub fn canonical_order(m: u32) -> Vec<Monomial4> {
    let lex = lex_order(m);
    let mut out = Vec::with_capacity(lex.len());
    for g in &lex {
        if classify(g) == MonomialClass::Positive {
            out.push(*g);
            out.push(star(g));
        }
    }
    for g in &lex {
        if classify(g) == MonomialClass::Neutral {
            out.push(*g);
        }
    }
    out
}

/// Sign of the permutation carrying the lexicographic order to the
/// canonical order, by cycle decomposition.
pub fn canonical_permutation_sign(m: u32) -> i64 {
    let lex = lex_order(m);
    let canonical = canonical_order(m);
    let position_in_lex = |g: &Monomial4| lex.iter().position(|h| h == g).expect("same set");
    let perm: Vec<usize> = canonical.iter().map(position_in_lex).collect();
    permutation_sign(&perm)
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut length = 0usize;
        let mut cursor = start;
        while !seen[cursor] {
            seen[cursor] = true;
            cursor = perm[cursor];
            length += 1;
        }
        if length % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// The six weight-range counting cases: each pairs a monomial degree with
/// an exclusive upper weight bound expressed in the pair weights.
#[derive(Debug, Clone, Copy)]
struct RangeCase {
    /// Monomial degree as an offset from `m` (`m - 2` or `m - 3`).
    degree_offset: i64,
    /// Upper bound as `(a1 coefficient, a2 coefficient)`.
    bound: (i64, i64),
}

fn range_case(case_id: u8) -> Result<RangeCase, CombinatoricsError> {
    Ok(match case_id {
        1 => RangeCase {
            degree_offset: 2,
            bound: (1, 1),
        },
        2 => RangeCase {
            degree_offset: 2,
            bound: (1, -1),
        },
        3 => RangeCase {
            degree_offset: 2,
            bound: (0, 2),
        },
        4 => RangeCase {
            degree_offset: 2,
            bound: (2, 0),
        },
        5 => RangeCase {
            degree_offset: 3,
            bound: (0, 1),
        },
        6 => RangeCase {
            degree_offset: 3,
            bound: (1, 0),
        },
        other => return Err(CombinatoricsError::InvalidCase(other)),
    })
}

/// Closed-form count for a case: `(m-1)(m+1)/4`, `(m-1)^2/4`, `(m-1)/2`,
/// `(m-1)^2/2`, `0`, `(m-1)(m-3)/4`.
pub fn closed_form_count(case_id: u8, m: i64) -> Result<BigInt, CombinatoricsError> {
    range_case(case_id)?;
    check_odd_degree(m)?;
    let value = match case_id {
        1 => (m - 1) * (m + 1) / 4,
        2 => (m - 1) * (m - 1) / 4,
        3 => (m - 1) / 2,
        4 => (m - 1) * (m - 1) / 2,
        5 => 0,
        6 => (m - 1) * (m - 3) / 4,
        _ => unreachable!(),
    };
    Ok(BigInt::from(value))
}

fn check_odd_degree(m: i64) -> Result<(), CombinatoricsError> {
    if m < 3 || m % 2 == 0 {
        Err(CombinatoricsError::DegreeDomain(m))
    } else {
        Ok(())
    }
}

/// Brute-force count of monomials of the case's degree whose weight lies
/// strictly between 0 and the case's bound, evaluated at the concrete
/// generic weights `a1 = 4m + 1`, `a2 = 1` (large enough that integer
/// comparison is faithful to the symbolic ranges).
pub fn count_weight_range(case_id: u8, m: i64) -> Result<u64, CombinatoricsError> {
    let case = range_case(case_id)?;
    check_odd_degree(m)?;
    let degree = m - case.degree_offset;
    let (a1, a2) = (4 * m + 1, 1);
    let bound = case.bound.0 * a1 + case.bound.1 * a2;
    Ok(count_range_at(degree as u32, a1, a2, bound))
}

fn count_range_at(degree: u32, a1: i64, a2: i64, bound: i64) -> u64 {
    lex_order(degree)
        .iter()
        .filter(|g| {
            let w = g.weight(a1, a2);
            0 < w && w < bound
        })
        .count() as u64
}

/// Number of basis swaps needed at a fixed point when orienting the
/// degree-`m` resolution terms: the weight-range count at degree `m - 2`
/// bounded by `wt(e1)` plus the one at degree `m - 3` bounded by
/// `wt(f1)`, with the bound pair depending on the fixed point.
pub fn bundle_swap_count(m: i64, y: FixedPoint) -> Result<u64, CombinatoricsError> {
    check_odd_degree(m)?;
    let (e1_case, f1_case) = match y {
        FixedPoint::Y1 => (1, 5), // wt(e1) = a1 + a2, wt(f1) = a2
        FixedPoint::Y2 => (1, 6), // a1 + a2, a1
        FixedPoint::Y3 => (2, 5), // a1 - a2, a2
        FixedPoint::Y4 => (2, 6), // a1 - a2, a1
        FixedPoint::Y5 => (4, 6), // 2a1, a1
        FixedPoint::Y6 => (3, 5), // 2a2, a2
    };
    Ok(count_weight_range(e1_case, m)? + count_weight_range(f1_case, m)?)
}

/// Expected parity of [`bundle_swap_count`]: always even for
/// `m = 1 mod 4`; for `m = 3 mod 4` even at points 1, 2, 5 and odd at
/// points 3, 4, 6.
pub fn expected_swap_parity_odd(m: i64, y: FixedPoint) -> bool {
    m.rem_euclid(4) == 3 && matches!(y, FixedPoint::Y3 | FixedPoint::Y4 | FixedPoint::Y6)
}

/// Number of degree-`m` monomials in four variables, `C(m+3, 3)`.
pub fn monomial_count(m: u32) -> BigInt {
    binomial(m as i64 + 3, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(exps: [u32; 4]) -> Monomial4 {
        Monomial4::new(exps)
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&mono([2, 0, 0, 0])), MonomialClass::Positive); // x1^2
        assert_eq!(classify(&mono([0, 1, 1, 0])), MonomialClass::Negative); // x2 x3
        assert_eq!(classify(&mono([1, 1, 0, 0])), MonomialClass::Neutral); // x1 x2
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&mono([2, 0, 0, 0])), mono([0, 2, 0, 0]));
        assert_eq!(star(&mono([1, 1, 0, 0])), mono([1, 1, 0, 0]));
        assert_eq!(star(&mono([1, 0, 1, 0])), mono([0, 1, 0, 1])); // x1x3 -> x2x4
    }

    #[test]
    fn canonical_order_degree_two_matches_worked_example() {
        let order = canonical_order(2);
        let expected = vec![
            mono([2, 0, 0, 0]), // x1^2
            mono([0, 2, 0, 0]), // x2^2
            mono([1, 0, 1, 0]), // x1x3
            mono([0, 1, 0, 1]), // x2x4
            mono([1, 0, 0, 1]), // x1x4
            mono([0, 1, 1, 0]), // x2x3
            mono([0, 0, 2, 0]), // x3^2
            mono([0, 0, 0, 2]), // x4^2
            mono([1, 1, 0, 0]), // x1x2
            mono([0, 0, 1, 1]), // x3x4
        ];
        assert_eq!(order, expected);
    }

    #[test]
    fn canonical_order_small_degrees() {
        assert_eq!(
            canonical_order(1),
            vec![
                mono([1, 0, 0, 0]),
                mono([0, 1, 0, 0]),
                mono([0, 0, 1, 0]),
                mono([0, 0, 0, 1]),
            ]
        );
        assert_eq!(canonical_order(0), vec![mono([0, 0, 0, 0])]);
    }

    #[test]
    fn permutation_signs_small_degrees() {
        // degree 2: one 7-cycle plus three fixed points, an even permutation
        assert_eq!(canonical_permutation_sign(0), 1);
        assert_eq!(canonical_permutation_sign(1), 1);
        assert_eq!(canonical_permutation_sign(2), 1);
        // degrees 3..8: regression-frozen from the cycle decomposition
        let frozen = [-1, -1, 1, 1, 1, 1];
        for (m, expected) in (3u32..=8).zip(frozen) {
            assert_eq!(canonical_permutation_sign(m), expected, "degree {m}");
        }
    }

    #[test]
    fn weight_range_counts_match_closed_forms() {
        // x1 and x3 are the two degree-1 monomials below a1 + a2
        assert_eq!(count_weight_range(1, 3).unwrap(), 2);
        assert_eq!(count_weight_range(5, 5).unwrap(), 0);
        assert_eq!(count_weight_range(6, 5).unwrap(), 2);
        for m in (3..=13i64).step_by(2) {
            for case in 1..=6u8 {
                assert_eq!(
                    BigInt::from(count_weight_range(case, m).unwrap()),
                    closed_form_count(case, m).unwrap(),
                    "case {case} at m = {m}"
                );
            }
        }
        assert!(count_weight_range(7, 3).is_err());
        assert!(count_weight_range(1, 4).is_err());
    }

    #[test]
    fn swap_counts_and_parities() {
        assert_eq!(bundle_swap_count(3, FixedPoint::Y3).unwrap(), 1);
        assert_eq!(bundle_swap_count(5, FixedPoint::Y1).unwrap(), 6);
        assert_eq!(bundle_swap_count(3, FixedPoint::Y6).unwrap(), 1);
        for m in (3..=13i64).step_by(2) {
            for y in FixedPoint::ALL {
                let count = bundle_swap_count(m, y).unwrap();
                assert_eq!(
                    count % 2 == 1,
                    expected_swap_parity_odd(m, y),
                    "m = {m}, {y:?}"
                );
            }
        }
    }

    #[test]
    fn canonical_order_size_and_pairing() {
        for m in 0..8u32 {
            let order = canonical_order(m);
            assert_eq!(BigInt::from(order.len()), monomial_count(m));
            if m % 2 == 1 {
                // no neutral monomials in odd degree: all (positive, star) pairs
                for pair in order.chunks(2) {
                    assert_eq!(classify(&pair[0]), MonomialClass::Positive);
                    assert_eq!(pair[1], star(&pair[0]));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn star_is_an_involution_and_flips_class(
            e in proptest::array::uniform4(0u32..5),
        ) {
            let g = Monomial4::new(e);
            prop_assert_eq!(star(&star(&g)), g);
            match classify(&g) {
                MonomialClass::Positive => {
                    prop_assert_eq!(classify(&star(&g)), MonomialClass::Negative)
                }
                MonomialClass::Negative => {
                    prop_assert_eq!(classify(&star(&g)), MonomialClass::Positive)
                }
                MonomialClass::Neutral => prop_assert_eq!(star(&g), g),
            }
        }

        #[test]
        fn classification_agrees_with_weight_sign(
            e in proptest::array::uniform4(0u32..5),
            a2 in 1i64..50,
        ) {
            let g = Monomial4::new(e);
            let a1 = (g.degree() as i64).max(1) * a2 + 1;
            let w = g.weight(a1, a2);
            let expected = match classify(&g) {
                MonomialClass::Positive => w > 0,
                MonomialClass::Negative => w < 0,
                MonomialClass::Neutral => w == 0,
            };
            prop_assert!(expected);
        }
    }
}
