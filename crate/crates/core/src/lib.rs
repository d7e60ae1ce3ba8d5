//! Combinatorial and arithmetic certificates that the conic attached to a
//! totally degenerate stable curve does not split.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`] is a small permutation-group engine (Schreier–Sims chains,
//!   orbits, stabilizers, coset actions and the even-orbit search).
//! * [`graph`] models dual graphs as dart (half-edge) multigraphs and computes
//!   their automorphism groups, admissibility and cycle spaces.
//! * [`clutch`] extracts the stabilizer tower of a vertex-transitive dual
//!   graph, rebuilds the graph from cosets and certifies non-splitness.
//! * [`frobenius`] realises the same orbit condition over the rationals:
//!   factorization patterns modulo primes, Chebotarev censuses and witness
//!   primes.

pub mod clutch;
pub mod error;
pub mod frobenius;
pub mod graph;
pub mod perm;

pub use error::{Error, Result};

/// Default bound on the number of group elements any explicit enumeration
/// may visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;
