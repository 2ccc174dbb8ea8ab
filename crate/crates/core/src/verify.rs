//! Named verification suites backing the `verify` CLI command: the
//! representation-product oracle, the combinatorial lemmas, and the
//! weight-independence/structural invariants, each reported as a list of
//! pass/fail checks.

use crate::combinatorics;
use crate::local_euler::{
    bundle_local_class_signed, grassmann_class_signed, grassmann_reps, tangent_h3_class,
    tangent_reps, FixedPoint, PlanePair,
};
use crate::localization::{
    plane_contribution, plane_term, signature_verified, DegreeProfile, SignConvention,
};
use crate::rep_algebra::{euler_product, euler_product_of_templates};
use crate::weights::{default_weights, random_generic_weights};
use crate::{fixtures, local_euler};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Odd weight pairs in the faithful regime `a1 >> a2` for per-point
/// oracle comparisons.
pub const ORACLE_PAIRS: [(i64, i64); 3] = [(401, 1), (1999, 3), (3001, 5)];

pub const ORACLE_DEGREES: [i64; 6] = [3, 5, 7, 9, 11, 13];

/// Compares every closed-form local class with the representation
/// product: bundle classes (signed convention), tangent classes with
/// their swap signs, and Grassmannian classes with the orientation sign.
pub fn oracle_suite() -> Vec<CheckResult> {
    let mut results = Vec::new();

    let mut bad = Vec::new();
    for m in ORACLE_DEGREES {
        for y in FixedPoint::ALL {
            let reps = local_euler::bundle_basis_reps(m, y).expect("odd degree");
            for (a1, a2) in ORACLE_PAIRS {
                let product = euler_product_of_templates(&reps, a1, a2);
                let closed = bundle_local_class_signed(m, y, a1, a2).expect("valid");
                let ok = product.coeff == BigRational::from_integer(closed)
                    && product.e_pow as i64 == (3 * m + 1) / 2
                    && !product.etilde_parity;
                if !ok {
                    bad.push(format!("m={m} y{} ({a1},{a2})", y.index()));
                }
            }
        }
    }
    results.push(summary(
        "bundle classes vs representation products",
        &bad,
        format!(
            "{} degrees x 6 points x {} pairs",
            ORACLE_DEGREES.len(),
            ORACLE_PAIRS.len()
        ),
    ));

    let mut bad = Vec::new();
    for y in FixedPoint::ALL {
        let (reps, extra_sign) = tangent_reps(y);
        for (a1, a2) in ORACLE_PAIRS {
            let product = euler_product_of_templates(&reps, a1, a2);
            let closed = tangent_h3_class(y, a1, a2).expect("generic");
            if product.coeff != BigRational::from_integer(extra_sign * closed) || product.e_pow != 6
            {
                bad.push(format!("y{} ({a1},{a2})", y.index()));
            }
        }
    }
    results.push(summary(
        "tangent classes vs representation products",
        &bad,
        "6 points, swap signs -1 at y1, y2, y6".to_string(),
    ));

    let mut bad = Vec::new();
    for (n, s) in [(5usize, 3usize), (7, 4), (8, 4), (10, 5), (11, 6), (12, 6)] {
        let w = default_weights(s).expect("s >= 1");
        for pair in PlanePair::all(s) {
            let (reps, sign) = grassmann_reps(n, &w, pair).expect("valid");
            let product = euler_product(&reps);
            let closed = grassmann_class_signed(n, &w, pair).expect("generic");
            if product.coeff != BigRational::from_integer(sign * closed) {
                bad.push(format!("n={n} pair=({},{})", pair.i, pair.j));
            }
        }
    }
    results.push(summary(
        "grassmannian classes vs representation products",
        &bad,
        "odd and even ambient dimensions".to_string(),
    ));

    results
}

/// Checks the monomial counting lemma and the swap-count parities by
/// brute-force enumeration for all odd degrees up to 13.
pub fn combinatorics_suite() -> Vec<CheckResult> {
    let mut results = Vec::new();

    let mut bad = Vec::new();
    for m in ORACLE_DEGREES {
        for case in 1..=6u8 {
            let brute = combinatorics::count_weight_range(case, m).expect("valid case");
            let closed = combinatorics::closed_form_count(case, m).expect("valid case");
            if BigInt::from(brute) != closed {
                bad.push(format!("case {case} m={m}: {brute} vs {closed}"));
            }
        }
    }
    results.push(summary(
        "weight-range counts vs closed forms",
        &bad,
        "6 cases, odd degrees 3..13".to_string(),
    ));

    let mut bad = Vec::new();
    for m in ORACLE_DEGREES {
        for y in FixedPoint::ALL {
            let count = combinatorics::bundle_swap_count(m, y).expect("odd degree");
            if (count % 2 == 1) != combinatorics::expected_swap_parity_odd(m, y) {
                bad.push(format!("m={m} y{}: {count}", y.index()));
            }
        }
    }
    results.push(summary(
        "swap-count parities",
        &bad,
        "even for m=1 mod 4; odd only at y3, y4, y6 for m=3 mod 4".to_string(),
    ));

    let mut bad = Vec::new();
    for m in 0..=7u32 {
        let order = combinatorics::canonical_order(m);
        if BigInt::from(order.len()) != combinatorics::monomial_count(m) {
            bad.push(format!("length at degree {m}"));
        }
    }
    results.push(summary(
        "canonical order sizes",
        &bad,
        "C(m+3, 3) monomials per degree".to_string(),
    ));

    results
}

/// Weight independence of the nine published signatures plus the
/// structural invariants on randomized inputs.
pub fn invariance_suite(trials: usize, seed: u64) -> Vec<CheckResult> {
    let mut results = Vec::new();

    let mut bad = Vec::new();
    for row in fixtures::table() {
        let profile = DegreeProfile::new(row.n, row.degrees.clone()).expect("valid row");
        match signature_verified(&profile, 3, seed) {
            Ok(result) if result.signature == row.signature => {}
            Ok(result) => bad.push(format!("{profile}: got {}", result.signature)),
            Err(err) => bad.push(format!("{profile}: {err}")),
        }
    }
    results.push(summary(
        "published signatures at 3 random weight samples each",
        &bad,
        "9 cases".to_string(),
    ));

    let profile = DegreeProfile::new(4, vec![5]).expect("valid");
    let mut bad = Vec::new();
    for trial in 0..trials {
        let w = random_generic_weights(2, seed.wrapping_add(trial as u64)).expect("s=2");
        let (a1, a2) = (w.entries()[0], w.entries()[1]);
        let g = BigInt::from(a1) * a2;
        let forward = plane_term(&profile, a1, a2, &g, SignConvention::ProductForm);
        let swapped = plane_term(&profile, a2, a1, &g, SignConvention::ProductForm);
        let lambda = 3 + 2 * (trial as i64 % 5);
        let g_scaled = BigInt::from(lambda * a1) * (lambda * a2);
        let scaled = plane_term(
            &profile,
            lambda * a1,
            lambda * a2,
            &g_scaled,
            SignConvention::ProductForm,
        );
        match (forward, swapped, scaled) {
            (Ok(f), Ok(s), Ok(sc)) => {
                if f != s || f != sc {
                    bad.push(format!("trial {trial}: swap/scaling broken"));
                }
            }
            _ => bad.push(format!("trial {trial}: evaluation error")),
        }
    }
    results.push(summary(
        "pair-swap and scaling invariance of plane terms",
        &bad,
        format!("{trials} random weight pairs"),
    ));

    let mut bad = Vec::new();
    let p533 = DegreeProfile::new(5, vec![3, 3]).expect("valid");
    for trial in 0..trials {
        let w = random_generic_weights(3, seed.wrapping_add(1000 + trial as u64)).expect("s=3");
        let total: BigRational = PlanePair::all(3)
            .into_iter()
            .map(|pair| plane_contribution(&p533, &w, pair).expect("generic"))
            .sum();
        if !total.is_integer() {
            bad.push(format!("trial {trial}: non-integer total {total}"));
        }
    }
    results.push(summary(
        "integrality of plane-contribution totals",
        &bad,
        format!("{trials} random weight vectors"),
    ));

    let mut bad = Vec::new();
    for m in ORACLE_DEGREES {
        for y in FixedPoint::ALL {
            let reps = local_euler::bundle_basis_reps(m, y).expect("odd");
            if 2 * reps.len() as i64 != 3 * m + 1 {
                bad.push(format!("bundle dim m={m} y{}", y.index()));
            }
        }
    }
    for y in FixedPoint::ALL {
        if tangent_reps(y).0.len() * 2 != 12 {
            bad.push(format!("tangent dim y{}", y.index()));
        }
    }
    for (n, s) in [(5usize, 3usize), (7, 4), (8, 4), (10, 5), (11, 6), (12, 6)] {
        let w = default_weights(s).expect("s >= 1");
        for pair in PlanePair::all(s) {
            let (reps, _) = grassmann_reps(n, &w, pair).expect("valid");
            if reps.len() * 2 != 4 * (n - 3) {
                bad.push(format!("grassmann dim n={n}"));
            }
        }
    }
    results.push(summary(
        "dimension audits (3m+1 / 12 / 4(n-3))",
        &bad,
        "all fixed-point representation lists".to_string(),
    ));

    results
}

pub fn all_suites(trials: usize, seed: u64) -> Vec<CheckResult> {
    let mut results = oracle_suite();
    results.extend(combinatorics_suite());
    results.extend(invariance_suite(trials, seed));
    results
}

fn summary(name: &str, failures: &[String], scope: String) -> CheckResult {
    if failures.is_empty() {
        CheckResult::pass(name, scope)
    } else {
        CheckResult::fail(name, failures.join("; "))
    }
}
