use super::{automorphism_group, DartGraph, GraphAut};
use crate::perm::PermGroup;
use crate::Result;

impl GraphAut {
    /// Automorphisms fixing every dart at every vertex of degree ≥ 4. These
    /// are exactly the automorphisms stabilizing a generic point of the
    /// product of the moduli spaces `M_{0,E(v)}`.
    pub fn generic_stabilizer(&self) -> PermGroup {
        let g = self.graph();
        let rigid: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| g.degree(v) >= 4)
            .flat_map(|v| g.darts_at(v))
            .collect();
        self.group()
            .pointwise_stabilizer(&rigid)
            .expect("darts are in range")
    }
}

/// Whether `Aut(Γ)` acts generically freely on `∏ M_{0,E(v)}`.
///
/// Requires every degree to be at least 3.
pub fn is_admissible(g: &DartGraph) -> Result<bool> {
    g.check_stable()?;
    Ok(automorphism_group(g).generic_stabilizer().is_trivial())
}
