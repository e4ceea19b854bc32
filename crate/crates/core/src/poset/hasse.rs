use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};

use super::cover::{lower_covers, CoverWitness};

/// Largest degree built without an explicit override (`9! = 362880` nodes).
pub const DEFAULT_MAX_DEGREE: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HasseEdge {
    pub upper: usize,
    pub lower: usize,
    pub witness: CoverWitness,
}

/// The Hasse diagram of `PC_n`. Nodes are sorted by `(weight, parts)`;
/// edges point from an index in `nodes` to a node it covers.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    n: usize,
    nodes: Vec<Composition>,
    edges: Vec<HasseEdge>,
}

#[derive(Serialize)]
struct EdgeRecord<'a> {
    upper: &'a str,
    lower: &'a str,
    i: usize,
    j: usize,
    z: usize,
}

impl HasseDiagram {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with_cap(n, DEFAULT_MAX_DEGREE)
    }

    /// Builds the diagram, refusing degrees above `cap`.
    ///
    /// Lower covers of distinct nodes are computed in parallel; the result is
    /// independent of scheduling.
    pub fn build_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n > cap {
            return Err(Error::ResourceCap { n, cap });
        }
        let mut nodes = Composition::all(n)?;
        nodes.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
        let index: HashMap<&Composition, usize> =
            nodes.iter().enumerate().map(|(k, c)| (c, k)).collect();
        let covers: Vec<Vec<(Composition, CoverWitness)>> =
            nodes.par_iter().map(lower_covers).collect();
        let edges = covers
            .into_iter()
            .enumerate()
            .flat_map(|(upper, below)| {
                let index = &index;
                below.into_iter().map(move |(c, witness)| HasseEdge {
                    upper,
                    lower: index[&c],
                    witness,
                })
            })
            .collect();
        Ok(HasseDiagram { n, nodes, edges })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[Composition] {
        &self.nodes
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    /// Rank of a node, which is its weight.
    pub fn rank(&self, node: usize) -> usize {
        self.nodes[node].weight()
    }

    /// Node counts per rank, from rank 0 upward.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.nodes.last().map_or(0, Composition::weight);
        let mut sizes = vec![0; top + 1];
        for c in &self.nodes {
            sizes[c.weight()] += 1;
        }
        sizes
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph PC{} {{", self.n).unwrap();
        writeln!(out, "  node [shape=plaintext];").unwrap();
        let mut rank = usize::MAX;
        for c in &self.nodes {
            if c.weight() != rank {
                if rank != usize::MAX {
                    writeln!(out, "  }}").unwrap();
                }
                rank = c.weight();
                writeln!(out, "  {{ rank=same;").unwrap();
            }
            writeln!(out, "    \"{c}\";").unwrap();
        }
        if rank != usize::MAX {
            writeln!(out, "  }}").unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"({},{})\"];",
                self.nodes[e.upper], self.nodes[e.lower], e.witness.i, e.witness.j
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// One JSON object per edge: `upper`, `lower`, `i`, `j`, `z`.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> io::Result<()> {
        for e in &self.edges {
            let (upper, lower) = (
                self.nodes[e.upper].to_string(),
                self.nodes[e.lower].to_string(),
            );
            let rec = EdgeRecord {
                upper: &upper,
                lower: &lower,
                i: e.witness.i,
                j: e.witness.j,
                z: e.witness.z,
            };
            serde_json::to_writer(&mut w, &rec)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::c_entry_of;

    #[test]
    fn small_sizes() {
        let h = HasseDiagram::build(1).unwrap();
        assert_eq!((h.nodes().len(), h.edges().len()), (1, 0));
        let h = HasseDiagram::build(2).unwrap();
        assert_eq!((h.nodes().len(), h.edges().len()), (2, 1));
        let h = HasseDiagram::build(3).unwrap();
        assert_eq!((h.nodes().len(), h.edges().len()), (6, 8));
        assert_eq!(h.rank_sizes(), vec![1, 2, 2, 1]);
        assert_eq!(HasseDiagram::build(4).unwrap().nodes().len(), 24);
    }

    #[test]
    fn resource_cap() {
        assert_eq!(
            HasseDiagram::build(10).unwrap_err(),
            Error::ResourceCap { n: 10, cap: 9 }
        );
        assert!(HasseDiagram::build_with_cap(3, 2).is_err());
    }

    #[test]
    fn edges_drop_weight_by_one() {
        let h = HasseDiagram::build(5).unwrap();
        for e in h.edges() {
            assert_eq!(h.rank(e.upper), h.rank(e.lower) + 1);
        }
    }

    /// Row `i` of the two c-matrices agrees on `[i+1, j]`, splits at `j+1`
    /// and stays strictly apart afterwards; intermediate rows never land in
    /// `[α'_i, α_i)` once shifted by `c_{i,k}(α)`.
    #[test]
    fn cover_c_row_structure() {
        for n in 2..=5 {
            let h = HasseDiagram::build(n).unwrap();
            for e in h.edges() {
                let (a, b) = (&h.nodes()[e.upper], &h.nodes()[e.lower]);
                let CoverWitness { i, j, .. } = e.witness;
                let ca = |k| c_entry_of(a.parts(), i, k);
                let cb = |k| c_entry_of(b.parts(), i, k);
                for k in i + 1..=j {
                    assert_eq!(ca(k), cb(k));
                }
                assert_eq!(ca(j + 1), ca(j) + 1);
                assert_eq!(cb(j + 1), cb(j));
                for k in j + 1..=n + 1 {
                    assert!(ca(k) > cb(k));
                }
                for k in i + 1..j {
                    let shifted = a.part(k) + ca(k);
                    assert!(!(b.part(i) <= shifted && shifted < a.part(i)));
                }
            }
        }
    }

    #[test]
    fn output_formats() {
        let h = HasseDiagram::build(3).unwrap();
        let dot = h.to_dot();
        assert!(dot.starts_with("digraph PC3 {"));
        assert!(dot.contains("\"2,1@3\" -> \"2,0@3\" [label=\"(2,3)\"];"));
        assert_eq!(dot.matches("->").count(), 8);
        let mut buf = Vec::new();
        h.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 8);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["upper"], "0,1@3");
        assert_eq!(first["lower"], "0,0@3");
        assert_eq!(first["i"], 2);
    }
}
