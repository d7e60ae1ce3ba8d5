//! Permutations, permutation groups and coset actions.

mod chain;
mod coset;
mod element;
mod group;
mod search;

pub use coset::{cyclic_orbit_sizes, CosetAction};
pub use element::Perm;
pub use group::PermGroup;
pub use search::{even_orbit_search, has_two_power_element_outside_conjugates, OrbitCertificate, SearchPolicy};
