//! Stabilizer towers, coset reconstruction of dual graphs, and the
//! non-splitting certificate for the associated conic.
//!
//! For a vertex-transitive dual graph `Γ` with `G1 = Aut(Γ)`, a vertex `v0`
//! and an edge `e0` at `v0`:
//!
//! * `G2` stabilizes `v0`, `G4` stabilizes `e0` (as an edge, so it may swap
//!   the two darts of `e0`), and `G3` stabilizes the dart of `e0` at `v0`.
//! * The cosets `G1/G2`, `G1/G3`, `G1/G4` are the vertices, darts and edges
//!   of the rebuilt graph `Γ†`.
//! * The conic is certified non-split when some element of `G2` has only
//!   even-sized cyclic orbits on `G2/G3`.

mod certify;
mod tower;

pub use certify::{certify_nonsplit, certify_nonsplit_at, CertifyOptions, OrbitOutcome, Status, Verdict};
pub use tower::{gamma_dagger, roundtrip_check, stabilizer_tower, ClutchingData, OrbitRoundtrip, RoundtripReport};
