use serde::{Deserialize, Serialize};

use super::tower::stabilizers;
use crate::graph::{automorphism_group, DartGraph};
use crate::perm::{even_orbit_search, OrbitCertificate, SearchPolicy};
use crate::{Result, DEFAULT_ENUMERATION_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// The even-orbit criterion holds on some edge orbit at `v0`.
    CertifiedNonsplit,
    /// The criterion could not be established. This is not a proof that
    /// the conic splits.
    NotCertified,
    /// Some vertex has odd degree.
    SplitsTrivially,
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub cap: u128,
    pub policy: SearchPolicy,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            policy: SearchPolicy::default(),
        }
    }
}

/// The search on one `G2`-orbit of darts at `v0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOutcome {
    pub orbit_id: usize,
    pub darts: Vec<usize>,
    pub representative_dart: usize,
    pub edge: usize,
    /// `|G3|` for the representative dart.
    pub g3_order: u128,
    /// `[G2 : G3]`, the size of this dart orbit.
    pub m: u128,
    /// `[G4 : G3] = 2`: some automorphism reverses the edge.
    pub endpoint_swap: bool,
    pub certificate: Option<OrbitCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub admissible: bool,
    pub all_degrees_even: bool,
    pub vertex_transitive: bool,
    pub edge_orbits: Vec<Vec<usize>>,
    pub v0: usize,
    pub aut_order: u128,
    pub g2_order: u128,
    pub per_orbit: Vec<OrbitOutcome>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn certificates(&self) -> impl Iterator<Item = &OrbitCertificate> {
        self.per_orbit.iter().filter_map(|o| o.certificate.as_ref())
    }
}

/// Runs the certification pipeline at vertex 0.
pub fn certify_nonsplit(graph: &DartGraph, opts: &CertifyOptions) -> Result<Verdict> {
    certify_nonsplit_at(graph, 0, opts)
}

/// Admissibility, parity, transitivity, then the even-orbit search on
/// `G2/G3` for every `G2`-orbit of darts at `v0`.
pub fn certify_nonsplit_at(graph: &DartGraph, v0: usize, opts: &CertifyOptions) -> Result<Verdict> {
    graph.check_stable()?;
    let aut = automorphism_group(graph);
    let admissible = aut.generic_stabilizer().is_trivial();
    let all_degrees_even = graph.all_degrees_even();
    let vertex_transitive = aut.is_vertex_transitive();
    let mut verdict = Verdict {
        status: Status::NotCertified,
        admissible,
        all_degrees_even,
        vertex_transitive,
        edge_orbits: aut.edge_orbits(),
        v0,
        aut_order: aut.order(),
        g2_order: 0,
        per_orbit: Vec::new(),
        notes: Vec::new(),
    };
    if !admissible {
        verdict.notes.push("graph is not admissible".into());
    }
    if !all_degrees_even {
        verdict.status = Status::SplitsTrivially;
        verdict.notes.push("some vertex has odd degree".into());
        return Ok(verdict);
    }
    if !vertex_transitive {
        verdict.notes.push("Aut(Γ) is not vertex-transitive; the coset reconstruction does not apply".into());
        return Ok(verdict);
    }

    let first_edge = graph.darts_at(v0)[0] / 2;
    let base = stabilizers(&aut, v0, first_edge)?;
    let g2 = base.g2;
    verdict.g2_order = g2.order();
    let at_v0 = graph.darts_at(v0);
    let mut covered = vec![false; graph.dart_count()];
    for &d in &at_v0 {
        if covered[d] {
            continue;
        }
        let darts = g2.orbit(d)?;
        for &x in &darts {
            covered[x] = true;
        }
        let edge = d / 2;
        let cd = stabilizers(&aut, v0, edge)?;
        // for a loop the tower is keyed on its even dart; use the orbit's own dart
        let g3 = g2.pointwise_stabilizer(&[d])?;
        let endpoint_swap = cd.g4.order() == 2 * g3.order();
        let certificate = even_orbit_search(&g2, &g3, opts.cap, opts.policy)?;
        verdict.per_orbit.push(OrbitOutcome {
            orbit_id: verdict.per_orbit.len(),
            darts,
            representative_dart: d,
            edge,
            g3_order: g3.order(),
            m: g2.order() / g3.order(),
            endpoint_swap,
            certificate,
        });
    }
    for o in &verdict.per_orbit {
        if !o.endpoint_swap {
            verdict.notes.push(format!(
                "orbit {}: no automorphism reverses edge {}; the double cover k3/k4 degenerates",
                o.orbit_id, o.edge
            ));
        }
    }
    if admissible && verdict.per_orbit.iter().any(|o| o.endpoint_swap && o.certificate.is_some()) {
        verdict.status = Status::CertifiedNonsplit;
    }
    Ok(verdict)
}
