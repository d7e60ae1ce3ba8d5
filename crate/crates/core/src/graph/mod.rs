//! Dual graphs of totally degenerate curves.
//!
//! A [`DartGraph`] is a multigraph with loops in which every edge `k` is split
//! into the two darts `2k` and `2k + 1`. The edge involution is `d ↦ d ^ 1`.
//! The dart `2k` sits at the first listed endpoint of edge `k`.

mod admissible;
mod aut;
mod cycles;
mod family;
mod io;

pub use admissible::is_admissible;
pub use aut::{automorphism_group, is_isomorphic, GraphAut, Isomorphism};
pub use family::Family;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DartGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl DartGraph {
    /// A connected graph on `vertex_count` vertices with the given edges.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = DartGraph::new_possibly_disconnected(vertex_count, edges)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Like [`DartGraph::new`] without the connectivity requirement; used for
    /// edge-orbit subgraphs and coset reconstructions.
    pub fn new_possibly_disconnected(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
        }
        Ok(DartGraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn dart_vertex(&self, dart: usize) -> usize {
        let (u, v) = self.edges[dart / 2];
        if dart % 2 == 0 {
            u
        } else {
            v
        }
    }

    /// The other half of the edge containing `dart`.
    pub fn involution(&self, dart: usize) -> usize {
        dart ^ 1
    }

    pub fn dart_edge(dart: usize) -> usize {
        dart / 2
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (u, v) = self.edges[edge];
        u == v
    }

    /// `E(v)`: the darts at `v`, ascending.
    pub fn darts_at(&self, v: usize) -> Vec<usize> {
        (0..self.dart_count()).filter(|&d| self.dart_vertex(d) == v).collect()
    }

    /// Number of darts at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Number of edges joining `u` and `v` (loops when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == self.vertex_count
    }

    /// `|E| − |V| + 1`. Only meaningful for connected graphs.
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    /// Every component has at least three branches.
    pub fn check_stable(&self) -> Result<()> {
        match self.degrees().iter().enumerate().find(|&(_, &d)| d < 3) {
            Some((vertex, &degree)) => Err(Error::Unstable { vertex, degree }),
            None => Ok(()),
        }
    }

    pub fn all_degrees_even(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// The subgraph on all vertices keeping only the listed edges, in the
    /// given order.
    pub fn edge_subgraph(&self, edges: &[usize]) -> DartGraph {
        DartGraph {
            vertex_count: self.vertex_count,
            edges: edges.iter().map(|&e| self.edges[e]).collect(),
        }
    }

    /// Renames vertices by `vertex_map`, reorders edges so that new edge `i`
    /// is old edge `edge_order[i]`, and reverses the orientation of edge `i`
    /// when `flip[i]` is set.
    pub fn relabel(&self, vertex_map: &[usize], edge_order: &[usize], flip: &[bool]) -> DartGraph {
        let edges = edge_order
            .iter()
            .zip(flip)
            .map(|(&e, &f)| {
                let (u, v) = self.edges[e];
                let (u, v) = (vertex_map[u], vertex_map[v]);
                if f {
                    (v, u)
                } else {
                    (u, v)
                }
            })
            .collect();
        DartGraph {
            vertex_count: self.vertex_count,
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_contributes_two_darts() {
        let g = DartGraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.darts_at(0), vec![0, 1, 2, 3]);
        assert_eq!(g.genus(), 2);
        assert!(g.all_degrees_even());
        assert_eq!(g.multiplicity(0, 0), 2);
    }

    #[test]
    fn single_loop_has_genus_one() {
        assert_eq!(DartGraph::new(1, vec![(0, 0)]).unwrap().genus(), 1);
    }

    #[test]
    fn rejects_disconnected_and_out_of_range() {
        assert_eq!(
            DartGraph::new(2, vec![(0, 0), (1, 1)]).unwrap_err(),
            Error::Disconnected
        );
        assert!(DartGraph::new(2, vec![(0, 2)]).is_err());
        assert!(DartGraph::new_possibly_disconnected(2, vec![(0, 0), (1, 1)]).is_ok());
    }

    #[test]
    fn involution_is_fixed_point_free() {
        let g = DartGraph::new(2, vec![(0, 1), (0, 1), (0, 0), (1, 1)]).unwrap();
        for d in 0..g.dart_count() {
            assert_ne!(g.involution(d), d);
            assert_eq!(g.involution(g.involution(d)), d);
        }
        assert_eq!(g.dart_vertex(4), 0);
        assert_eq!(g.dart_vertex(5), 0);
    }

    #[test]
    fn stability() {
        let k4 = Family::Complete(4).build().unwrap();
        assert!(k4.check_stable().is_ok());
        assert!(!k4.all_degrees_even());
        let thin = DartGraph::new(2, vec![(0, 1), (0, 1), (0, 0)]).unwrap();
        assert_eq!(thin.check_stable().unwrap_err(), Error::Unstable { vertex: 1, degree: 2 });
    }
}
