use serde::Serialize;

use crate::graph::{automorphism_group, is_isomorphic, DartGraph, GraphAut, Isomorphism};
use crate::perm::{CosetAction, PermGroup};
use crate::{Error, Result};

/// The groups `G1 ⊇ G2, G4 ⊇ G3` attached to a vertex and an incident edge.
/// All four act on the darts of the graph.
#[derive(Clone, Debug)]
pub struct ClutchingData {
    pub v0: usize,
    pub e0: usize,
    /// The dart of `e0` at `v0` (the even dart when `e0` is a loop).
    pub d0: usize,
    pub g1: PermGroup,
    pub g2: PermGroup,
    pub g3: PermGroup,
    pub g4: PermGroup,
    /// `[G1 : G2]`.
    pub n: u128,
    /// `[G2 : G3]`.
    pub m: u128,
}

impl ClutchingData {
    /// `[G4 : G3]`; equals 2 exactly when some automorphism reverses `e0`.
    pub fn endpoint_swap_index(&self) -> u128 {
        self.g4.order() / self.g3.order()
    }
}

pub(crate) fn stabilizers(aut: &GraphAut, v0: usize, e0: usize) -> Result<ClutchingData> {
    let g = aut.graph();
    if v0 >= g.vertex_count() {
        return Err(Error::PointOutOfRange { point: v0, degree: g.vertex_count() });
    }
    if e0 >= g.edge_count() {
        return Err(Error::PointOutOfRange { point: e0, degree: g.edge_count() });
    }
    let d0 = if g.dart_vertex(2 * e0) == v0 {
        2 * e0
    } else if g.dart_vertex(2 * e0 + 1) == v0 {
        2 * e0 + 1
    } else {
        return Err(Error::NotIncident { edge: e0, vertex: v0 });
    };
    let darts = g.dart_count();
    let augmented = aut.augmented_group();
    let restricted = |points: &[usize]| -> Result<PermGroup> {
        Ok(augmented.pointwise_stabilizer(points)?.restrict(darts))
    };
    let g1 = aut.group().clone();
    let g2 = restricted(&[aut.vertex_point(v0)])?;
    let g4 = restricted(&[aut.edge_point(e0)])?;
    let g3 = g2.pointwise_stabilizer(&[d0])?;
    let n = g1.order() / g2.order();
    let m = g2.order() / g3.order();
    Ok(ClutchingData { v0, e0, d0, g1, g2, g3, g4, n, m })
}

/// Builds `G1 = Aut(Γ)` and its stabilizers of `v0`, of `e0` and of the dart
/// of `e0` at `v0`.
pub fn stabilizer_tower(graph: &DartGraph, v0: usize, e0: usize) -> Result<ClutchingData> {
    graph.check_stable()?;
    stabilizers(&automorphism_group(graph), v0, e0)
}

/// Rebuilds a graph from cosets: vertices `G1/G2`, darts `G1/G3`, edges
/// `G1/G4`, each dart attached to the vertex coset containing it and paired
/// with the other dart in its edge coset.
pub fn gamma_dagger(cd: &ClutchingData) -> Result<DartGraph> {
    let index = cd.endpoint_swap_index();
    if index != 2 {
        return Err(Error::NoEndpointSwap { index });
    }
    let vertices = CosetAction::new(&cd.g1, &cd.g2)?;
    let darts = CosetAction::new(&cd.g1, &cd.g3)?;
    let edges = CosetAction::new(&cd.g1, &cd.g4)?;
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); edges.coset_count()];
    for t in darts.transversal() {
        let v = vertices.coset_of(t)?;
        let e = edges.coset_of(t)?;
        ends[e].push(v);
    }
    let edge_list = ends
        .into_iter()
        .map(|vs| {
            debug_assert_eq!(vs.len(), 2);
            (vs[0], vs[1])
        })
        .collect();
    DartGraph::new_possibly_disconnected(vertices.coset_count(), edge_list)
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRoundtrip {
    pub edge_orbit: Vec<usize>,
    pub e0: usize,
    pub n: u128,
    pub m: u128,
    pub endpoint_swap_index: u128,
    /// Isomorphism from the edge-orbit subgraph of `Γ` onto `Γ†`.
    pub isomorphism: Option<Isomorphism>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundtripReport {
    pub v0: usize,
    pub orbits: Vec<OrbitRoundtrip>,
    /// Isomorphism from `Γ` onto the union of the per-orbit rebuilds, when
    /// every orbit could be rebuilt.
    pub full: Option<Isomorphism>,
}

impl RoundtripReport {
    pub fn all_isomorphic(&self) -> bool {
        !self.orbits.is_empty() && self.orbits.iter().all(|o| o.isomorphism.is_some()) && self.full.is_some()
    }
}

/// Rebuilds each edge orbit of a vertex-transitive graph from its stabilizer
/// tower at vertex 0 and checks the result against the orbit subgraph.
pub fn roundtrip_check(graph: &DartGraph) -> Result<RoundtripReport> {
    graph.check_stable()?;
    let aut = automorphism_group(graph);
    if !aut.is_vertex_transitive() {
        return Err(Error::NotVertexTransitive);
    }
    let v0 = 0;
    let mut orbits = Vec::new();
    let mut union_edges = Vec::new();
    let mut complete = true;
    for orbit in aut.edge_orbits() {
        let e0 = *orbit
            .iter()
            .find(|&&e| {
                let (a, b) = graph.edges()[e];
                a == v0 || b == v0
            })
            .expect("vertex transitivity puts every edge orbit at v0");
        let cd = stabilizers(&aut, v0, e0)?;
        let subgraph = graph.edge_subgraph(&orbit);
        let (isomorphism, error) = match gamma_dagger(&cd) {
            Ok(rebuilt) => {
                union_edges.extend_from_slice(rebuilt.edges());
                (is_isomorphic(&subgraph, &rebuilt), None)
            }
            Err(e) => {
                complete = false;
                (None, Some(e.to_string()))
            }
        };
        orbits.push(OrbitRoundtrip {
            edge_orbit: orbit,
            e0,
            n: cd.n,
            m: cd.m,
            endpoint_swap_index: cd.endpoint_swap_index(),
            isomorphism,
            error,
        });
    }
    let full = if complete {
        let union = DartGraph::new_possibly_disconnected(graph.vertex_count(), union_edges)?;
        is_isomorphic(graph, &union)
    } else {
        None
    };
    Ok(RoundtripReport { v0, orbits, full })
}
