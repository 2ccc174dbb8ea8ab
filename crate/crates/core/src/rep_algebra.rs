//! Euler-class algebra of the irreducible two-dimensional representations
//! of the normalizer of the torus in SL2.
//!
//! A representation `rho_a` (or its twist `rho_a^-`) is recorded by its
//! numeric torus weight and twist sign. Its Euler class is either a
//! multiple of the class `e` (odd weight) or of the class `etilde` (even
//! weight), and products are reduced with the relation
//! `etilde^2 = 4 e^2`, so a normal form carries a single `etilde` parity
//! bit. This is the independent oracle route against which every closed
//! form local class is checked.

use crate::arith::{epsilon, Rational};
use num_bigint::BigInt;
use num_traits::One;

/// Sign of the sigma-action twist: `Plus` is `rho_a`, `Minus` is `rho_a^-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    Plus,
    Minus,
}

/// An irreducible representation with numeric weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrredRep {
    pub weight: i64,
    pub twist: Twist,
}

impl IrredRep {
    pub fn plus(weight: i64) -> Self {
        IrredRep {
            weight,
            twist: Twist::Plus,
        }
    }

    pub fn minus(weight: i64) -> Self {
        IrredRep {
            weight,
            twist: Twist::Minus,
        }
    }
}

/// A representation whose weight is the linear form
/// `a1_coef * a1 + a2_coef * a2` in a weight pair, to be evaluated once a
/// pair is chosen. The fixed-point data are stored this way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepTemplate {
    pub a1_coef: i64,
    pub a2_coef: i64,
    pub twist: Twist,
}

impl RepTemplate {
    pub fn new(a1_coef: i64, a2_coef: i64, twist: Twist) -> Self {
        RepTemplate {
            a1_coef,
            a2_coef,
            twist,
        }
    }

    pub fn evaluate(&self, a1: i64, a2: i64) -> IrredRep {
        IrredRep {
            weight: self.a1_coef * a1 + self.a2_coef * a2,
            twist: self.twist,
        }
    }
}

/// Normal form element `coeff * e^e_pow * etilde^etilde_parity` of the
/// class algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub coeff: Rational,
    pub e_pow: u32,
    pub etilde_parity: bool,
}

impl EquivClass {
    /// The empty product.
    pub fn one() -> Self {
        EquivClass {
            coeff: Rational::one(),
            e_pow: 0,
            etilde_parity: false,
        }
    }

    pub fn from_integer_coeff(coeff: i64, e_pow: u32, etilde_parity: bool) -> Self {
        EquivClass {
            coeff: Rational::from_integer(BigInt::from(coeff)),
            e_pow,
            etilde_parity,
        }
    }

    /// Multiplies in place, eagerly applying `etilde^2 = 4 e^2`.
    pub fn mul_assign(&mut self, other: &EquivClass) {
        self.coeff *= &other.coeff;
        self.e_pow += other.e_pow;
        if self.etilde_parity && other.etilde_parity {
            self.coeff *= BigInt::from(4);
            self.e_pow += 2;
            self.etilde_parity = false;
        } else {
            self.etilde_parity ^= other.etilde_parity;
        }
    }
}

/// Euler class of a single irreducible representation.
///
/// Odd weight `a` gives `epsilon(a) * a * e`; even weight gives
/// `(a/2) * etilde` for `a = 2 mod 4` and `-(a/2) * etilde` for
/// `a = 0 mod 4`. The minus twist negates the class. Weight zero yields
/// the zero class.
pub fn euler_of_irred(rep: &IrredRep) -> EquivClass {
    let a = rep.weight;
    let mut class = if a % 2 != 0 {
        let eps = epsilon(a).expect("odd by construction");
        EquivClass::from_integer_coeff(eps * a, 1, false)
    } else {
        let half = a / 2;
        let coeff = match a.rem_euclid(4) {
            2 => half,
            _ => -half,
        };
        EquivClass::from_integer_coeff(coeff, 0, true)
    };
    if rep.twist == Twist::Minus {
        class.coeff = -class.coeff;
    }
    class
}

/// Product of the Euler classes of a list of representations, in normal
/// form. The empty list gives `1`.
pub fn euler_product(reps: &[IrredRep]) -> EquivClass {
    let mut acc = EquivClass::one();
    for rep in reps {
        acc.mul_assign(&euler_of_irred(rep));
    }
    acc
}

/// Evaluates templates at a weight pair and multiplies the Euler classes.
pub fn euler_product_of_templates(templates: &[RepTemplate], a1: i64, a2: i64) -> EquivClass {
    let reps: Vec<IrredRep> = templates.iter().map(|t| t.evaluate(a1, a2)).collect();
    euler_product(&reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn class(coeff: i64, e_pow: u32, etilde: bool) -> EquivClass {
        EquivClass::from_integer_coeff(coeff, e_pow, etilde)
    }

    #[test]
    fn irreducible_classes_match_theorem() {
        // epsilon(3) = -1
        assert_eq!(euler_of_irred(&IrredRep::plus(3)), class(-3, 1, false));
        // a = 2 mod 4: a/2 * etilde
        assert_eq!(euler_of_irred(&IrredRep::plus(2)), class(1, 0, true));
        // a = 0 mod 4 gives -(a/2) * etilde, minus twist flips it back
        assert_eq!(euler_of_irred(&IrredRep::minus(4)), class(2, 0, true));
        // zero weight is the zero class, not an error
        assert!(euler_of_irred(&IrredRep::plus(0)).coeff.is_zero());
    }

    #[test]
    fn minus_twist_negates() {
        for weight in [1, 2, 3, 4, 6, 7, 9, 12] {
            let plus = euler_of_irred(&IrredRep::plus(weight));
            let minus = euler_of_irred(&IrredRep::minus(weight));
            assert_eq!(minus.coeff, -plus.coeff.clone());
            assert_eq!(minus.e_pow, plus.e_pow);
            assert_eq!(minus.etilde_parity, plus.etilde_parity);
        }
    }

    #[test]
    fn etilde_square_reduces() {
        let reps = [IrredRep::plus(2), IrredRep::plus(2)];
        assert_eq!(euler_product(&reps), class(4, 2, false));
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(euler_product(&[]), EquivClass::one());
    }

    #[test]
    fn tangent_fifth_fixed_point_product() {
        // Six tangent representations at the fifth fixed point for the
        // weight pair (5, 1): product of the individual classes
        // (-2)(-3)(-3)(-8)(-7)(-2) * etilde^6 with etilde^6 = 64 e^6.
        let reps = [
            IrredRep::plus(4),
            IrredRep::minus(6),
            IrredRep::minus(6),
            IrredRep::plus(16),
            IrredRep::minus(14),
            IrredRep::plus(4),
        ];
        assert_eq!(euler_product(&reps), class(129024, 6, false));
    }

    proptest! {
        #[test]
        fn product_is_permutation_invariant(
            mut weights in proptest::collection::vec((0i64..60, any::<bool>()), 0..8),
        ) {
            let reps: Vec<IrredRep> = weights
                .iter()
                .map(|&(w, minus)| if minus { IrredRep::minus(w) } else { IrredRep::plus(w) })
                .collect();
            let forward = euler_product(&reps);
            weights.reverse();
            let reps_rev: Vec<IrredRep> = weights
                .iter()
                .map(|&(w, minus)| if minus { IrredRep::minus(w) } else { IrredRep::plus(w) })
                .collect();
            prop_assert_eq!(forward, euler_product(&reps_rev));
        }

        #[test]
        fn even_count_of_even_weights_clears_parity(
            weights in proptest::collection::vec(1i64..40, 0..10),
        ) {
            let reps: Vec<IrredRep> = weights.iter().map(|&w| IrredRep::plus(w)).collect();
            let evens = weights.iter().filter(|w| *w % 2 == 0).count();
            let product = euler_product(&reps);
            prop_assert_eq!(product.etilde_parity, evens % 2 == 1);
        }
    }
}
