//! Torus weight vectors for the group action on projective space.
//!
//! A weight vector assigns `(a_i, -a_i)` to the i-th coordinate pair of
//! `P^n`, `s = floor((n+1)/2)` weights in total. Genericity for the
//! localization formula means every denominator factor that can appear at
//! a fixed point is nonzero, which for positive integer weights comes down
//! to: pairwise distinct entries and no pair in ratio 3. Entries must all
//! be odd ("sign-faithful") for the sign-sensitive verification paths; the
//! built-in generators only produce odd vectors.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Upper bound for randomly sampled weight entries.
const RANDOM_WEIGHT_MAX: i64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight vector must have at least one entry")]
    Empty,
    #[error("invalid weight vector: {0:?}")]
    Invalid(Vec<Violation>),
}

/// A single violated genericity condition, with the offending data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    NonPositive { entry: i64 },
    Duplicate { entry: i64 },
    RatioThree { small: i64, large: i64 },
    Even { entry: i64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NonPositive { entry } => write!(f, "non-positive entry {entry}"),
            Violation::Duplicate { entry } => write!(f, "duplicate entry {entry}"),
            Violation::RatioThree { small, large } => {
                write!(f, "ratio-3 pair ({small}, {large})")
            }
            Violation::Even { entry } => write!(f, "even entry {entry}"),
        }
    }
}

/// Generic weights `a_1 < a_2 < ... < a_s`, stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    entries: Vec<i64>,
}

impl WeightVector {
    /// Builds a vector from arbitrary entries, sorting them ascending and
    /// rejecting anything that fails [`validate`].
    pub fn new(mut entries: Vec<i64>) -> Result<Self, WeightError> {
        if entries.is_empty() {
            return Err(WeightError::Empty);
        }
        entries.sort_unstable();
        let violations = validate(&entries);
        if violations.is_empty() {
            Ok(WeightVector { entries })
        } else {
            Err(WeightError::Invalid(violations))
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when every entry is odd, which the signed verification paths
    /// require so that `epsilon` applies to all products of entries.
    pub fn is_sign_faithful(&self) -> bool {
        self.entries.iter().all(|a| a % 2 != 0)
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Reports every violated genericity condition of a candidate entry list.
///
/// Checks, in order: positivity, oddness, duplicates, ratio-3 pairs. The
/// ratio-3 exclusion keeps all twelve tangent and Grassmannian denominator
/// factors `a_i - a_j`, `a_i + a_j`, `3a_i - a_j`, `a_i - 3a_j`, ... away
/// from zero.
pub fn validate(entries: &[i64]) -> Vec<Violation> {
    let mut violations = Vec::new();
    for &a in entries {
        if a <= 0 {
            violations.push(Violation::NonPositive { entry: a });
        } else if a % 2 == 0 {
            violations.push(Violation::Even { entry: a });
        }
    }
    for (idx, &a) in entries.iter().enumerate() {
        for &b in &entries[idx + 1..] {
            if a == b {
                violations.push(Violation::Duplicate { entry: a });
            } else if a == 3 * b || b == 3 * a {
                violations.push(Violation::RatioThree {
                    small: a.min(b),
                    large: a.max(b),
                });
            }
        }
    }
    violations
}

/// The default deterministic weight vector: `1` followed by the primes
/// `5, 7, 11, 13, ...`. Distinct primes above 3 can never be in ratio 3
/// (and neither can 1 paired with them), so every prefix is generic.
pub fn default_weights(s: usize) -> Result<WeightVector, WeightError> {
    if s == 0 {
        return Err(WeightError::Empty);
    }
    let mut entries = vec![1i64];
    let mut candidate = 5i64;
    while entries.len() < s {
        if is_prime(candidate) {
            entries.push(candidate);
        }
        candidate += 2;
    }
    WeightVector::new(entries)
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Random generic odd weights in `[1, 10^6]`, a deterministic function of
/// `(s, seed)`. Entries are rejection-sampled until the whole vector
/// passes [`validate`].
pub fn random_generic_weights(s: usize, seed: u64) -> Result<WeightVector, WeightError> {
    if s == 0 {
        return Err(WeightError::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries: Vec<i64> = Vec::with_capacity(s);
    while entries.len() < s {
        let candidate = 2 * rng.gen_range(0..RANDOM_WEIGHT_MAX / 2) + 1;
        let clashes = entries
            .iter()
            .any(|&a| a == candidate || a == 3 * candidate || candidate == 3 * a);
        if !clashes {
            entries.push(candidate);
        }
    }
    WeightVector::new(entries)
}

/// Draws `count` independent weight vectors from a single seeded stream.
/// Used by the multi-sample verification path.
pub fn sample_weight_vectors(
    s: usize,
    seed: u64,
    count: usize,
) -> Result<Vec<WeightVector>, WeightError> {
    (0..count)
        .map(|k| random_generic_weights(s, seed.wrapping_add(k as u64)))
        .collect()
}
