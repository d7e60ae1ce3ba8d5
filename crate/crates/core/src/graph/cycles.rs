use std::collections::VecDeque;

use super::DartGraph;

impl DartGraph {
    /// Rank of `H¹(Γ, ℤ)`: `|E| − |V| + c` with `c` components.
    pub fn cycle_space_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let mut count = self.vertex_count();
        for &(u, v) in self.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    /// Fundamental cycles of the breadth-first spanning forest grown from the
    /// lowest vertex of each component, scanning edges in index order. One
    /// sorted edge set per non-tree edge, in edge order.
    pub fn cycle_basis(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            incident[u].push(e);
            if u != v {
                incident[v].push(e);
            }
        }
        let mut parent_edge: Vec<Option<usize>> = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut tree = vec![false; self.edge_count()];
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &e in &incident[x] {
                    let (u, v) = self.edges()[e];
                    let y = if u == x { v } else { u };
                    if depth[y] == usize::MAX {
                        depth[y] = depth[x] + 1;
                        parent_edge[y] = Some(e);
                        tree[e] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let up = |x: usize| {
            let e = parent_edge[x].unwrap();
            let (u, v) = self.edges()[e];
            (e, if u == x { v } else { u })
        };
        (0..self.edge_count())
            .filter(|&e| !tree[e])
            .map(|e| {
                let (mut a, mut b) = self.edges()[e];
                let mut cycle = vec![e];
                while a != b {
                    if depth[a] >= depth[b] {
                        let (pe, pa) = up(a);
                        cycle.push(pe);
                        a = pa;
                    } else {
                        let (pe, pb) = up(b);
                        cycle.push(pe);
                        b = pb;
                    }
                }
                cycle.sort_unstable();
                cycle
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{DartGraph, Family};

    #[test]
    fn single_loop() {
        let g = DartGraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(g.cycle_space_rank(), 1);
        assert_eq!(g.cycle_basis(), vec![vec![0]]);
    }

    #[test]
    fn k5_rank() {
        let g = Family::Complete(5).build().unwrap();
        assert_eq!(g.cycle_space_rank(), 6);
        assert_eq!(g.cycle_basis().len(), 6);
    }

    #[test]
    fn theta_loops_basis() {
        let g = Family::ThetaLoops.build().unwrap();
        // tree = edge 0; non-tree: the parallel edge and the two loops
        assert_eq!(g.cycle_basis(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn basis_cycles_have_even_vertex_degrees() {
        for fam in [Family::Complete(5), Family::Circulant { genus: 9 }, Family::DoubleCycle { genus: 6 }] {
            let g = fam.build().unwrap();
            for cycle in g.cycle_basis() {
                let mut deg = vec![0usize; g.vertex_count()];
                for &e in &cycle {
                    let (u, v) = g.edges()[e];
                    deg[u] += 1;
                    deg[v] += 1;
                }
                assert!(deg.iter().all(|d| d % 2 == 0), "{fam}: {cycle:?}");
            }
        }
    }
}
