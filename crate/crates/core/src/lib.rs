//! Exact signed counts of twisted cubic curves on complete intersections
//! in projective space, by equivariant localization at the fixed points
//! of a normalizer-of-torus action.
//!
//! The count of a multidegree `(m_1, ..., m_r)` instance in `P^n` is an
//! integer signature, computed as a sum of exact rationals over the
//! `C(s, 2)` fixed 3-planes and their six fixed curves each. All
//! arithmetic is arbitrary precision; correctness is cross-checked three
//! independent ways:
//!
//! * every closed-form local Euler class against a product of irreducible
//!   representation classes ([`rep_algebra`], [`local_euler`]);
//! * every signature against re-evaluation at independently sampled
//!   generic weight vectors ([`localization::signature_verified`]);
//! * the sign bookkeeping lemmas against brute-force monomial enumeration
//!   ([`combinatorics`]).

// parity tests and floor((n+1)/2) read better in the arithmetic notation
// the formulas are written in
#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

pub mod arith;
pub mod cli;
pub mod combinatorics;
pub mod fixtures;
pub mod gw;
pub mod local_euler;
pub mod localization;
pub mod orientation;
pub mod rep_algebra;
pub mod verify;
pub mod weights;
