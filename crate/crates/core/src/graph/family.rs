use std::fmt;

use super::DartGraph;
use crate::{Error, Result};

/// Named graph families. The first four are the families whose conics are
/// shown to be non-split; the rest are useful controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `g − 1` vertices on a cycle, each joined to its neighbours at
    /// distance 1 and 2. Requires `g ≥ 7`.
    Circulant { genus: usize },
    /// The complete graph `K_n`; `K_5` is the named case.
    Complete(usize),
    /// `g − 1` vertices on a cycle with every cycle edge doubled. Requires
    /// `g ≥ 4`.
    DoubleCycle { genus: usize },
    /// Two vertices joined by two edges, with a loop at each.
    ThetaLoops,
    CompleteBipartite(usize, usize),
}

impl Family {
    /// Parses `k5`, `circulant`, `double-cycle`, `theta-loops`, `kN` and
    /// `kA,B`. `genus` is required by the two cyclic families.
    pub fn parse(name: &str, genus: Option<usize>) -> Result<Family> {
        let need_genus = |family: &'static str| {
            genus.ok_or_else(|| Error::Parse(format!("family `{family}` needs --genus")))
        };
        match name {
            "circulant" => Ok(Family::Circulant { genus: need_genus("circulant")? }),
            "double-cycle" => Ok(Family::DoubleCycle { genus: need_genus("double-cycle")? }),
            "theta-loops" => Ok(Family::ThetaLoops),
            _ => {
                let rest = name
                    .strip_prefix('k')
                    .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
                let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::UnknownFamily(name.to_string()));
                match rest.split_once(',') {
                    Some((a, b)) => Ok(Family::CompleteBipartite(parse(a)?, parse(b)?)),
                    None => Ok(Family::Complete(parse(rest)?)),
                }
            }
        }
    }

    pub fn build(&self) -> Result<DartGraph> {
        match *self {
            Family::Circulant { genus } => {
                check_min("circulant", genus, 7)?;
                let n = genus - 1;
                let mut edges = Vec::with_capacity(2 * n);
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                }
                for i in 0..n {
                    edges.push((i, (i + 2) % n));
                }
                DartGraph::new(n, edges)
            }
            Family::Complete(n) => {
                check_min("complete", n, 1)?;
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        edges.push((i, j));
                    }
                }
                DartGraph::new(n, edges)
            }
            Family::DoubleCycle { genus } => {
                check_min("double-cycle", genus, 4)?;
                let n = genus - 1;
                let mut edges = Vec::with_capacity(2 * n);
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                    edges.push((i, (i + 1) % n));
                }
                DartGraph::new(n, edges)
            }
            Family::ThetaLoops => DartGraph::new(2, vec![(0, 1), (0, 1), (0, 0), (1, 1)]),
            Family::CompleteBipartite(a, b) => {
                check_min("complete-bipartite", a.min(b), 1)?;
                let mut edges = Vec::new();
                for i in 0..a {
                    for j in 0..b {
                        edges.push((i, a + j));
                    }
                }
                DartGraph::new(a + b, edges)
            }
        }
    }
}

fn check_min(family: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::FamilyParameter { family, value, min });
    }
    Ok(())
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Circulant { genus } => write!(f, "circulant(g={genus})"),
            Family::Complete(n) => write!(f, "k{n}"),
            Family::DoubleCycle { genus } => write!(f, "double-cycle(g={genus})"),
            Family::ThetaLoops => write!(f, "theta-loops"),
            Family::CompleteBipartite(a, b) => write!(f, "k{a},{b}"),
        }
    }
}
