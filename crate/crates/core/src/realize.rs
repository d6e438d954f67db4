//! Simple undirected graphs and constructive realization of degree sequences.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::sequence::{Degree, DegreeSequence};

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints out
    /// of range.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        if let Some(&(u, v)) = edges.iter().find(|(u, v)| u == v || *v >= vertex_count) {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) is a self-loop or leaves 0..{vertex_count}"
            )));
        }
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!("duplicate edge {:?}", w[0])));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Graph { vertex_count, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// The sorted degree sequence of this graph.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.adjacency.iter().map(|a| a.len() as Degree).collect())
    }

    /// Writes one `u v` line per edge.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (u, v) in &self.edges {
            writeln!(out, "{u} {v}")?;
        }
        out.flush()
    }
}

pub fn degrees_of(g: &Graph) -> DegreeSequence {
    g.degree_sequence()
}

/// Havel–Hakimi realization: repeatedly join the vertex of largest remaining
/// degree to the next-largest ones.
///
/// Vertex `i` receives degree `a.values()[i]`. Residual degrees live in one
/// array kept sorted nonincreasing; within a run of equal residuals the
/// *last* members of the run are decremented, so no re-sort is needed. Total
/// work is `O(s + n log n)`.
pub fn havel_hakimi(a: &DegreeSequence) -> Result<Graph> {
    let n = a.len();
    let mut slots: Vec<(Degree, usize)> = a.values().iter().copied().zip(0..n).collect();
    let mut edges = Vec::with_capacity((a.sum() / 2) as usize);

    for start in 0..n {
        let (d, v) = slots[start];
        if d == 0 {
            break;
        }
        let rest = &mut slots[start + 1..];
        let d = d as usize;
        if d > rest.len() {
            return Err(Error::NonGraphic);
        }
        let pivot = rest[d - 1].0;
        if pivot == 0 {
            return Err(Error::NonGraphic);
        }
        let above = rest.partition_point(|x| x.0 > pivot);
        let run_end = rest.partition_point(|x| x.0 >= pivot);
        let (head, tail) = (0..above, run_end - (d - above)..run_end);
        for j in head.chain(tail) {
            rest[j].0 -= 1;
            edges.push((v, rest[j].1));
        }
    }
    Graph::from_edges(n, edges)
}
