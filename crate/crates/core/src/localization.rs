//! The localization sum: per-plane contributions, symmetrization over all
//! fixed 3-planes, integer extraction, and multi-sample verification.
//!
//! Each fixed 3-plane selected by a pair of weights contributes
//!
//! ```text
//! sum_{y=1..6}  prod_j E_{m_j}(y; a1, a2)  /  (T(y; a1, a2) * G(n, w, pair))
//! ```
//!
//! as an exact rational. The theorem guarantees the sum over all
//! `C(s, 2)` planes is an integer independent of the chosen generic
//! weights, so the implementation evaluates numerically at integer
//! weights and cross-checks with independently sampled weight vectors
//! rather than symbolically normalizing multivariate rational functions.

use crate::arith::Rational;
use crate::local_euler::{
    bundle_local_class, bundle_local_class_signed, grassmann_class, grassmann_class_signed,
    tangent_h3_class, FixedPoint, LocalEulerError, PlanePair,
};
use crate::orientation;
use crate::weights::{sample_weight_vectors, WeightError, WeightVector};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LocalizationError {
    #[error("n must be at least 4, got {0}")]
    AmbientTooSmall(usize),
    #[error("degree 1 factors are hyperplanes, not part of the counting problem")]
    DegreeOne,
    #[error("degrees must be at least 3, got {0}")]
    DegreeTooSmall(i64),
    #[error("rank/dimension mismatch: sum(3m_i + 1) = {rank} but 4n = {dim}")]
    RankMismatch { rank: i64, dim: i64 },
    #[error("profile is not relatively orientable: {reasons:?}")]
    NotOrientable { reasons: Vec<String> },
    #[error("even degree: Euler class vanishes, count 0")]
    VanishingEvenDegree,
    #[error("weight vector has {got} entries, n = {n} needs {expected}")]
    WeightLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Weights(#[from] WeightError),
    #[error(transparent)]
    LocalEuler(#[from] LocalEulerError),
    #[error("localization sum is not an integer: {value} (formula bug or invalid weights)")]
    NonIntegerTotal { value: String },
    #[error("weight samples disagree: {first} vs {second} (sample {index})")]
    SampleDisagreement {
        first: BigInt,
        second: BigInt,
        index: usize,
    },
}

impl LocalizationError {
    /// Stable machine-readable tag, used by the CLI to pick exit codes.
    pub fn reason_code(&self) -> &'static str {
        match self {
            LocalizationError::AmbientTooSmall(_) => "ambient-too-small",
            LocalizationError::DegreeOne => "degree-one",
            LocalizationError::DegreeTooSmall(_) => "degree-too-small",
            LocalizationError::RankMismatch { .. } => "rank-mismatch",
            LocalizationError::NotOrientable { .. } => "not-orientable",
            LocalizationError::VanishingEvenDegree => "vanishing-even-degree",
            LocalizationError::WeightLength { .. } => "weight-length",
            LocalizationError::Weights(_) => "invalid-weights",
            LocalizationError::LocalEuler(_) => "non-generic-weights",
            LocalizationError::NonIntegerTotal { .. } => "non-integer-total",
            LocalizationError::SampleDisagreement { .. } => "sample-disagreement",
        }
    }

    /// True for internal consistency failures (CLI exit 3) as opposed to
    /// refusals (exit 2).
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            LocalizationError::NonIntegerTotal { .. }
                | LocalizationError::SampleDisagreement { .. }
        )
    }
}

/// The counting instance: ambient dimension `n` and the multidegree,
/// stored sorted ascending. Degrees below 3 are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DegreeProfile {
    n: usize,
    degrees: Vec<i64>,
}

impl DegreeProfile {
    pub fn new(n: usize, mut degrees: Vec<i64>) -> Result<Self, LocalizationError> {
        if n < 4 {
            return Err(LocalizationError::AmbientTooSmall(n));
        }
        for &m in &degrees {
            if m == 1 {
                return Err(LocalizationError::DegreeOne);
            }
            if m < 3 {
                return Err(LocalizationError::DegreeTooSmall(m));
            }
        }
        degrees.sort_unstable();
        Ok(DegreeProfile { n, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Number of torus weights for this ambient space.
    pub fn weight_count(&self) -> usize {
        (self.n + 1) / 2
    }

    pub fn rank(&self) -> i64 {
        self.degrees.iter().map(|&m| 3 * m + 1).sum()
    }

    pub fn rank_condition_holds(&self) -> bool {
        self.rank() == 4 * self.n as i64
    }
}

impl std::fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|m| m.to_string()).collect();
        write!(f, "n={} degrees=({})", self.n, parts.join(","))
    }
}

/// Which local-class convention the per-plane sum evaluates.
///
/// `ProductForm` is the sign-cancelled convention that the counting path
/// uses. `SignedForm` applies the per-point signs and the signed
/// Grassmannian class instead; for relatively orientable profiles with
/// odd weights both give identical per-plane sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    ProductForm,
    SignedForm,
}

/// How to handle profiles that fail the orientability congruences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationPolicy {
    /// Refuse anything that is not relatively orientable.
    Enforce,
    /// Allow even-degree profiles through, reporting their vanishing
    /// count 0. Non-orientable all-odd profiles are still refused:
    /// without a relative orientation there is no well-defined signed
    /// count at all.
    AllowVanishing,
}

/// Result of a signature computation, with enough provenance to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub signature: BigInt,
    pub weights_used: WeightVector,
    pub per_plane: Vec<(PlanePair, Rational)>,
    pub samples_checked: usize,
}

/// Per-plane inner sum with an explicit pair ordering and Grassmannian
/// factor. Exposed so the swap-symmetry and scaling invariants can be
/// exercised directly.
pub fn plane_term(
    profile: &DegreeProfile,
    a1: i64,
    a2: i64,
    grassmann: &BigInt,
    convention: SignConvention,
) -> Result<Rational, LocalizationError> {
    let mut total = Rational::zero();
    for y in FixedPoint::ALL {
        let mut numerator = BigInt::one();
        for &m in profile.degrees() {
            numerator *= match convention {
                SignConvention::ProductForm => bundle_local_class(m, y, a1, a2)?,
                SignConvention::SignedForm => bundle_local_class_signed(m, y, a1, a2)?,
            };
        }
        let tangent = tangent_h3_class(y, a1, a2)?;
        total += Rational::new(numerator, tangent * grassmann);
    }
    Ok(total)
}

/// Contribution of the fixed 3-plane selected by `pair`, as an exact
/// rational. The index-smaller weight takes the `a1` slot.
pub fn plane_contribution(
    profile: &DegreeProfile,
    w: &WeightVector,
    pair: PlanePair,
) -> Result<Rational, LocalizationError> {
    plane_contribution_with(profile, w, pair, SignConvention::ProductForm)
}

pub fn plane_contribution_with(
    profile: &DegreeProfile,
    w: &WeightVector,
    pair: PlanePair,
    convention: SignConvention,
) -> Result<Rational, LocalizationError> {
    check_weight_length(profile, w)?;
    let n = profile.n();
    let grassmann = match convention {
        SignConvention::ProductForm => grassmann_class(n, w, pair)?,
        SignConvention::SignedForm => grassmann_class_signed(n, w, pair)?,
    };
    let ((a1, a2), _) = pair.split(w);
    plane_term(profile, a1, a2, &grassmann, convention)
}

fn check_weight_length(profile: &DegreeProfile, w: &WeightVector) -> Result<(), LocalizationError> {
    let expected = profile.weight_count();
    if w.len() != expected {
        return Err(LocalizationError::WeightLength {
            n: profile.n(),
            expected,
            got: w.len(),
        });
    }
    Ok(())
}

fn check_countable(
    profile: &DegreeProfile,
    policy: OrientationPolicy,
) -> Result<Option<CountResult>, LocalizationError> {
    let report = orientation::check(profile);
    // An even degree kills the Euler class outright, rank condition or
    // not, so it is reported ahead of the rank check.
    if report.vanishing {
        return match policy {
            OrientationPolicy::Enforce => Err(LocalizationError::VanishingEvenDegree),
            OrientationPolicy::AllowVanishing => Ok(Some(CountResult {
                signature: BigInt::zero(),
                weights_used: crate::weights::default_weights(profile.weight_count())?,
                per_plane: Vec::new(),
                samples_checked: 0,
            })),
        };
    }
    if !profile.rank_condition_holds() {
        return Err(LocalizationError::RankMismatch {
            rank: profile.rank(),
            dim: 4 * profile.n() as i64,
        });
    }
    if report.orientable {
        Ok(None)
    } else {
        Err(LocalizationError::NotOrientable {
            reasons: report.violations(),
        })
    }
}

/// Sums the plane contributions over all `C(s, 2)` fixed 3-planes and
/// extracts the integer signature. Errors if the profile violates the
/// rank condition or the orientability congruences, or if the total is
/// not an integer (which would signal a formula bug, since the weights
/// are validated first).
pub fn signature(
    profile: &DegreeProfile,
    w: &WeightVector,
) -> Result<CountResult, LocalizationError> {
    signature_with(
        profile,
        w,
        OrientationPolicy::Enforce,
        SignConvention::ProductForm,
    )
}

pub fn signature_with(
    profile: &DegreeProfile,
    w: &WeightVector,
    policy: OrientationPolicy,
    convention: SignConvention,
) -> Result<CountResult, LocalizationError> {
    if let Some(vanishing) = check_countable(profile, policy)? {
        return Ok(vanishing);
    }
    check_weight_length(profile, w)?;
    let mut per_plane = Vec::new();
    let mut total = Rational::zero();
    for pair in PlanePair::all(w.len()) {
        let contribution = plane_contribution_with(profile, w, pair, convention)?;
        total += &contribution;
        per_plane.push((pair, contribution));
    }
    if !total.is_integer() {
        return Err(LocalizationError::NonIntegerTotal {
            value: total.to_string(),
        });
    }
    Ok(CountResult {
        signature: total.to_integer(),
        weights_used: w.clone(),
        per_plane,
        samples_checked: 1,
    })
}

/// Evaluates the signature at `samples` independently drawn generic
/// weight vectors and checks that all agree exactly. Returns the common
/// value with the first sample's provenance.
pub fn signature_verified(
    profile: &DegreeProfile,
    samples: usize,
    seed: u64,
) -> Result<CountResult, LocalizationError> {
    signature_verified_with(profile, samples, seed, OrientationPolicy::Enforce)
}

pub fn signature_verified_with(
    profile: &DegreeProfile,
    samples: usize,
    seed: u64,
    policy: OrientationPolicy,
) -> Result<CountResult, LocalizationError> {
    let samples = samples.max(1);
    if let Some(vanishing) = check_countable(profile, policy)? {
        return Ok(vanishing);
    }
    let vectors = sample_weight_vectors(profile.weight_count(), seed, samples)?;
    let mut first: Option<CountResult> = None;
    for (index, w) in vectors.iter().enumerate() {
        let result = signature(profile, w)?;
        log::debug!(
            "{profile}: sample {index} at {w} gives {}",
            result.signature
        );
        match &first {
            None => first = Some(result),
            Some(reference) => {
                if reference.signature != result.signature {
                    return Err(LocalizationError::SampleDisagreement {
                        first: reference.signature.clone(),
                        second: result.signature,
                        index,
                    });
                }
            }
        }
    }
    let mut result = first.expect("samples >= 1");
    result.samples_checked = samples;
    Ok(result)
}
