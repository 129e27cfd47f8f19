//! Simple undirected graphs for the dominating-set gadget.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("malformed graph input at line {0}")]
    MalformedLine(usize),
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
}

/// An undirected loop-free graph over vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Neighborhood bit mask of `v` (usable while `n <= 64`).
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        let mut m = 0u64;
        for &(a, b) in &self.edges {
            if a == v {
                m |= 1 << b;
            } else if b == v {
                m |= 1 << a;
            }
        }
        m
    }
}

/// Reads the DIMACS edge format: `c` comments, `p edge <n> <m>`, then
/// `e <u> <v>` lines with 1-based vertices.
pub fn parse_dimacs_graph(text: &str) -> Result<SimpleGraph, GraphError> {
    let mut graph: Option<SimpleGraph> = None;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p edge") {
            let mut parts = rest.split_ascii_whitespace();
            let n: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(GraphError::MalformedLine(idx + 1))?;
            let _m: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(GraphError::MalformedLine(idx + 1))?;
            graph = Some(SimpleGraph::new(n));
            continue;
        }
        if let Some(rest) = line.strip_prefix('e') {
            let g = graph.as_mut().ok_or(GraphError::MissingHeader)?;
            let mut parts = rest.split_ascii_whitespace();
            let u: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(GraphError::MalformedLine(idx + 1))?;
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(GraphError::MalformedLine(idx + 1))?;
            if u == 0 || u > g.n_vertices() {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v == 0 || v > g.n_vertices() {
                return Err(GraphError::VertexOutOfRange(v));
            }
            g.add_edge(u - 1, v - 1)?;
            continue;
        }
        return Err(GraphError::MalformedLine(idx + 1));
    }
    graph.ok_or(GraphError::MissingHeader)
}
