//! Assembly of the quadratic-form answer from signature and rank, and
//! its textual rendering.
//!
//! Over a field where 2 and 3 are squares the count is
//! `s + ((r - s)/2) * H` with `H` the hyperbolic form. Over a general
//! field (characteristic away from 2 and 3) three correction terms
//! `eps1(<2> - 1) + eps2(<3> - 1) + eps3(<6> - 1)` appear whose constants
//! are left undetermined; they are rendered symbolically and never
//! assigned values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GwError {
    #[error("rank {rank} and signature {signature} have different parity")]
    ParityMismatch { rank: BigInt, signature: BigInt },
}

/// Which rendering of the form to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    /// Fields where 2 and 3 are squares: `s + k * H` is the whole answer.
    SquaresTwoThree,
    /// General fields: append the three undetermined correction terms.
    General,
}

/// A quadratic form given by signature and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwElement {
    pub signature: BigInt,
    pub rank: BigInt,
}

impl GwElement {
    /// Number of hyperbolic summands, `(rank - signature) / 2`.
    pub fn hyperbolic_multiplicity(&self) -> BigInt {
        (&self.rank - &self.signature) / 2
    }
}

/// Builds the form, requiring `rank = signature mod 2` so the hyperbolic
/// multiplicity is integral.
pub fn assemble(signature: BigInt, rank: BigInt) -> Result<GwElement, GwError> {
    if (&rank - &signature).is_odd() {
        return Err(GwError::ParityMismatch { rank, signature });
    }
    Ok(GwElement { signature, rank })
}

/// Renders the form, e.g. `765 + 158602805·H`.
pub fn render(g: &GwElement, kind: FieldKind) -> String {
    let mut parts: Vec<String> = Vec::new();
    let k = g.hyperbolic_multiplicity();
    if !g.signature.is_zero() {
        parts.push(g.signature.to_string());
    }
    if !k.is_zero() {
        if k.is_one() {
            parts.push("H".to_string());
        } else {
            parts.push(format!("{k}·H"));
        }
    }
    if parts.is_empty() {
        parts.push("0".to_string());
    }
    let mut rendered = parts.join(" + ");
    if kind == FieldKind::General {
        rendered.push_str(" + ε₁(⟨2⟩−1) + ε₂(⟨3⟩−1) + ε₃(⟨6⟩−1)");
    }
    rendered
}
