//! Automorphisms and isomorphisms of dart graphs.
//!
//! Vertex maps are found by backtracking over a breadth-first vertex order,
//! pruning on degree, loop count and edge multiplicities. A vertex map lifts
//! canonically to darts; the remaining automorphisms (swaps of parallel
//! edges and loops, loop flips) are added as explicit local generators.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::DartGraph;
use crate::perm::{Perm, PermGroup};

/// `Aut(Γ)` acting faithfully on darts.
#[derive(Clone, Debug)]
pub struct GraphAut {
    graph: DartGraph,
    group: PermGroup,
}

/// A dart bijection `a → b` commuting with the involutions and covering a
/// vertex bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub dart_map: Vec<usize>,
}

struct Shape {
    n: usize,
    mult: Vec<Vec<usize>>,
    signature: Vec<(usize, usize, Vec<usize>)>,
    order: Vec<usize>,
    /// For each vertex, the darts at it grouped by the far endpoint.
    edges_between: Vec<Vec<Vec<usize>>>,
}

impl Shape {
    fn of(g: &DartGraph) -> Shape {
        let n = g.vertex_count();
        let mut mult = vec![vec![0; n]; n];
        let mut edges_between = vec![vec![Vec::new(); n]; n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if u == v {
                mult[u][u] += 1;
                edges_between[u][u].push(e);
            } else {
                mult[u][v] += 1;
                mult[v][u] += 1;
                edges_between[u][v].push(e);
                edges_between[v][u].push(e);
            }
        }
        let degrees = g.degrees();
        let signature = (0..n)
            .map(|v| {
                let mut nbrs: Vec<usize> = (0..n).filter(|&w| w != v && mult[v][w] > 0).map(|w| mult[v][w]).collect();
                nbrs.sort_unstable();
                (degrees[v], mult[v][v], nbrs)
            })
            .collect();
        // breadth-first order, restarting in each component
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for y in 0..n {
                    if !seen[y] && mult[x][y] > 0 {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        Shape {
            n,
            mult,
            signature,
            order,
            edges_between,
        }
    }
}

/// Backtracking search for vertex bijections `a → b` preserving
/// multiplicities.
struct VertexSearch<'a> {
    a: &'a Shape,
    b: &'a Shape,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl<'a> VertexSearch<'a> {
    fn new(a: &'a Shape, b: &'a Shape) -> Self {
        VertexSearch {
            a,
            b,
            map: vec![None; a.n],
            used: vec![false; b.n],
        }
    }

    fn compatible(&self, x: usize, y: usize) -> bool {
        if self.used[y] || self.a.signature[x] != self.b.signature[y] {
            return false;
        }
        (0..self.a.n).all(|w| match self.map[w] {
            Some(z) => self.a.mult[x][w] == self.b.mult[y][z],
            None => true,
        })
    }

    fn assign(&mut self, x: usize, y: usize) {
        self.map[x] = Some(y);
        self.used[y] = true;
    }

    fn unassign(&mut self, x: usize) {
        if let Some(y) = self.map[x].take() {
            self.used[y] = false;
        }
    }

    /// Completes the current partial map along `order[pos..]`, returning the
    /// first full map found.
    fn complete(&mut self, pos: usize) -> Option<Vec<usize>> {
        if pos == self.a.n {
            return Some(self.map.iter().map(|m| m.unwrap()).collect());
        }
        let x = self.a.order[pos];
        if self.map[x].is_some() {
            return self.complete(pos + 1);
        }
        for y in 0..self.b.n {
            if self.compatible(x, y) {
                self.assign(x, y);
                if let Some(full) = self.complete(pos + 1) {
                    self.unassign(x);
                    return Some(full);
                }
                self.unassign(x);
            }
        }
        None
    }
}

/// Canonical lift of a multiplicity-preserving vertex bijection to darts.
fn lift(a: &DartGraph, sa: &Shape, b: &DartGraph, sb: &Shape, vmap: &[usize]) -> Vec<usize> {
    let mut dart_map = vec![usize::MAX; a.dart_count()];
    for u in 0..sa.n {
        for v in u..sa.n {
            let src = &sa.edges_between[u][v];
            let dst = &sb.edges_between[vmap[u]][vmap[v]];
            debug_assert_eq!(src.len(), dst.len());
            for (&e, &f) in src.iter().zip(dst) {
                if u == v {
                    dart_map[2 * e] = 2 * f;
                    dart_map[2 * e + 1] = 2 * f + 1;
                } else {
                    // dart of e at u goes to the dart of f at vmap[u]
                    let (d_u, d_v) = if a.dart_vertex(2 * e) == u { (2 * e, 2 * e + 1) } else { (2 * e + 1, 2 * e) };
                    let (f_u, f_v) = if b.dart_vertex(2 * f) == vmap[u] { (2 * f, 2 * f + 1) } else { (2 * f + 1, 2 * f) };
                    dart_map[d_u] = f_u;
                    dart_map[d_v] = f_v;
                }
            }
        }
    }
    dart_map
}

fn local_generators(g: &DartGraph, s: &Shape) -> Vec<Perm> {
    let d = g.dart_count();
    let mut gens = Vec::new();
    let swap = |pairs: &[(usize, usize)]| {
        let mut images: Vec<usize> = (0..d).collect();
        for &(x, y) in pairs {
            images.swap(x, y);
        }
        Perm::from_images(images).unwrap()
    };
    let dart_at = |e: usize, v: usize| if g.dart_vertex(2 * e) == v { 2 * e } else { 2 * e + 1 };
    for u in 0..s.n {
        for v in u..s.n {
            let es = &s.edges_between[u][v];
            for w in es.windows(2) {
                let (e, f) = (w[0], w[1]);
                if u == v {
                    gens.push(swap(&[(2 * e, 2 * f), (2 * e + 1, 2 * f + 1)]));
                } else {
                    gens.push(swap(&[(dart_at(e, u), dart_at(f, u)), (dart_at(e, v), dart_at(f, v))]));
                }
            }
            if u == v {
                if let Some(&e) = es.first() {
                    gens.push(swap(&[(2 * e, 2 * e + 1)]));
                }
            }
        }
    }
    gens
}

fn close_orbit(orbit: &mut [bool], start: usize, gens: &[Vec<usize>]) {
    orbit[start] = true;
    let mut queue: VecDeque<usize> = (0..orbit.len()).filter(|&p| orbit[p]).collect();
    while let Some(p) = queue.pop_front() {
        for s in gens {
            if !orbit[s[p]] {
                orbit[s[p]] = true;
                queue.push_back(s[p]);
            }
        }
    }
}

/// The full automorphism group of `g` on darts.
pub fn automorphism_group(g: &DartGraph) -> GraphAut {
    let shape = Shape::of(g);
    let n = shape.n;
    let mut dart_gens = local_generators(g, &shape);
    // vertex automorphisms found so far, tagged with the search depth
    let mut found: Vec<(usize, Vec<usize>)> = Vec::new();

    for depth in (0..n).rev() {
        let x = shape.order[depth];
        // orbit of x under automorphisms fixing order[..depth]
        let mut stab_gens: Vec<Vec<usize>> = found.iter().filter(|(d, _)| *d >= depth).map(|(_, p)| p.clone()).collect();
        let mut orbit = vec![false; n];
        close_orbit(&mut orbit, x, &stab_gens);
        for y in 0..n {
            if orbit[y] {
                continue;
            }
            let mut search = VertexSearch::new(&shape, &shape);
            for &w in &shape.order[..depth] {
                search.assign(w, w);
            }
            if !search.compatible(x, y) {
                continue;
            }
            search.assign(x, y);
            if let Some(vmap) = search.complete(depth + 1) {
                dart_gens.push(Perm::from_images(lift(g, &shape, g, &shape, &vmap)).unwrap());
                stab_gens.push(vmap.clone());
                found.push((depth, vmap));
                close_orbit(&mut orbit, x, &stab_gens);
            }
        }
    }
    GraphAut {
        graph: g.clone(),
        group: PermGroup::new(g.dart_count(), dart_gens).unwrap(),
    }
}

/// Finds an isomorphism `a → b` if one exists.
pub fn is_isomorphic(a: &DartGraph, b: &DartGraph) -> Option<Isomorphism> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (sa, sb) = (Shape::of(a), Shape::of(b));
    let mut sig_a = sa.signature.clone();
    let mut sig_b = sb.signature.clone();
    sig_a.sort();
    sig_b.sort();
    if sig_a != sig_b {
        return None;
    }
    let vertex_map = VertexSearch::new(&sa, &sb).complete(0)?;
    let dart_map = lift(a, &sa, b, &sb, &vertex_map);
    Some(Isomorphism { vertex_map, dart_map })
}

impl Isomorphism {
    /// Checks the witness directly against both graphs.
    pub fn verify(&self, a: &DartGraph, b: &DartGraph) -> bool {
        let d = a.dart_count();
        if self.dart_map.len() != d || b.dart_count() != d || self.vertex_map.len() != a.vertex_count() {
            return false;
        }
        let mut hit = vec![false; d];
        for &x in &self.dart_map {
            if x >= d || std::mem::replace(&mut hit[x], true) {
                return false;
            }
        }
        let mut vhit = vec![false; b.vertex_count()];
        for &v in &self.vertex_map {
            if v >= b.vertex_count() || std::mem::replace(&mut vhit[v], true) {
                return false;
            }
        }
        (0..d).all(|x| {
            self.dart_map[a.involution(x)] == b.involution(self.dart_map[x])
                && b.dart_vertex(self.dart_map[x]) == self.vertex_map[a.dart_vertex(x)]
        })
    }
}

impl GraphAut {
    pub fn graph(&self) -> &DartGraph {
        &self.graph
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    /// Whether a dart permutation is an automorphism of the graph.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        let g = &self.graph;
        if p.degree() != g.dart_count() {
            return false;
        }
        let mut vmap = vec![None; g.vertex_count()];
        (0..g.dart_count()).all(|d| {
            let img = p.apply(d);
            let ok_inv = p.apply(g.involution(d)) == g.involution(img);
            let v = g.dart_vertex(d);
            let w = g.dart_vertex(img);
            let ok_vertex = *vmap[v].get_or_insert(w) == w;
            ok_inv && ok_vertex
        })
    }

    /// The vertex permutation induced by a dart automorphism. Vertices
    /// without darts are left fixed.
    pub fn vertex_permutation(&self, p: &Perm) -> Perm {
        let g = &self.graph;
        let images = (0..g.vertex_count())
            .map(|v| match g.darts_at(v).first() {
                Some(&d) => g.dart_vertex(p.apply(d)),
                None => v,
            })
            .collect();
        Perm::from_images(images).expect("dart automorphism induces a vertex bijection")
    }

    pub fn edge_permutation(&self, p: &Perm) -> Perm {
        let images = (0..self.graph.edge_count()).map(|e| p.apply(2 * e) / 2).collect();
        Perm::from_images(images).expect("dart automorphism induces an edge bijection")
    }

    /// The same group acting on darts, then vertices, then edges: points
    /// `0..D`, `D..D+V`, `D+V..D+V+E`.
    pub fn augmented_group(&self) -> PermGroup {
        let gens = self.group.generators().iter().map(|p| self.augment(p)).collect();
        PermGroup::new(self.augmented_degree(), gens).unwrap()
    }

    pub fn augmented_degree(&self) -> usize {
        self.graph.dart_count() + self.graph.vertex_count() + self.graph.edge_count()
    }

    pub fn vertex_point(&self, v: usize) -> usize {
        self.graph.dart_count() + v
    }

    pub fn edge_point(&self, e: usize) -> usize {
        self.graph.dart_count() + self.graph.vertex_count() + e
    }

    fn augment(&self, p: &Perm) -> Perm {
        let d = self.graph.dart_count();
        let v = self.graph.vertex_count();
        let mut images = p.images();
        images.extend(self.vertex_permutation(p).images().into_iter().map(|x| x + d));
        images.extend(self.edge_permutation(p).images().into_iter().map(|x| x + d + v));
        Perm::from_images(images).unwrap()
    }

    pub fn vertex_group(&self) -> PermGroup {
        let gens = self.group.generators().iter().map(|p| self.vertex_permutation(p)).collect();
        PermGroup::new(self.graph.vertex_count(), gens).unwrap()
    }

    pub fn edge_group(&self) -> PermGroup {
        let gens = self.group.generators().iter().map(|p| self.edge_permutation(p)).collect();
        PermGroup::new(self.graph.edge_count(), gens).unwrap()
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_group().is_transitive()
    }

    /// Edge orbits, each sorted, ordered by least edge.
    pub fn edge_orbits(&self) -> Vec<Vec<usize>> {
        if self.graph.edge_count() == 0 {
            return Vec::new();
        }
        self.edge_group().orbits()
    }

    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        self.vertex_group().orbits()
    }
}
