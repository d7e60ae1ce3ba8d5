//! Plain-text graph format:
//!
//! ```text
//! vertices 2
//! edge 0 1
//! edge 0 1
//! edge 0 0
//! ```
//!
//! Edge `k` (in file order) owns darts `2k` and `2k + 1`. Blank lines and
//! `#` comments are ignored.

use std::fmt;
use std::str::FromStr;

use super::DartGraph;
use crate::{Error, Result};

impl FromStr for DartGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut vertices = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: `{}`", lineno + 1, raw.trim()));
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| err("expected a non-negative integer"));
            match words.as_slice() {
                ["vertices", n] if vertices.is_none() && edges.is_empty() => vertices = Some(num(n)?),
                ["vertices", _] => return Err(err("`vertices` must appear once, first")),
                ["edge", u, v] if vertices.is_some() => edges.push((num(u)?, num(v)?)),
                ["edge", ..] if vertices.is_none() => return Err(err("`edge` before `vertices`")),
                _ => return Err(err("expected `vertices N` or `edge U V`")),
            }
        }
        let n = vertices.ok_or_else(|| Error::Parse("missing `vertices N` line".into()))?;
        DartGraph::new(n, edges)
    }
}

impl fmt::Display for DartGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "edge {u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn parses_with_comments() {
        let g: DartGraph = "# theta with loops\nvertices 2\n\nedge 0 1\nedge 0 1 # parallel\nedge 0 0\nedge 1 1\n"
            .parse()
            .unwrap();
        assert_eq!(g, Family::ThetaLoops.build().unwrap());
    }

    #[test]
    fn roundtrips_families() {
        for fam in [Family::Complete(5), Family::Circulant { genus: 8 }, Family::ThetaLoops] {
            let g = fam.build().unwrap();
            assert_eq!(g.to_string().parse::<DartGraph>().unwrap(), g);
        }
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "",
            "edge 0 1\nvertices 2",
            "vertices 2\nedge 0 x",
            "vertices 2\nedge 0 5",
            "vertices 2\nvertices 2",
            "vertices 3\nedge 0 1",
            "vertices 2\nnode 0",
        ] {
            assert!(bad.parse::<DartGraph>().is_err(), "{bad:?}");
        }
    }
}
