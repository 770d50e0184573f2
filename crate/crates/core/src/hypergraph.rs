//! k-uniform hypergraphs over `[n]` (0-based), and their correspondence with pure complexes.

use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, CAPACITY};

/// A k-uniform hypergraph. Edges are sorted vertex lists, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<u32>>,
}

impl UniformHypergraph {
    pub fn new<I, E>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = u32>,
    {
        let mut out = Vec::new();
        for e in edges {
            let mut e: Vec<u32> = e.into_iter().collect();
            e.sort_unstable();
            let len = e.len();
            e.dedup();
            if e.len() != len {
                return Err(Error::DuplicateVertex(e[0] as usize));
            }
            if e.len() != k {
                return Err(Error::BadCardinality {
                    expected: k,
                    actual: e.len(),
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(Error::UnknownVertex(v as usize));
            }
            out.push(e);
        }
        out.sort_unstable();
        out.dedup();
        Ok(UniformHypergraph { n, k, edges: out })
    }

    /// Edges given with 1-based labels.
    pub fn from_one_based(n: usize, k: usize, edges: &[&[u32]]) -> Result<Self> {
        Self::new(n, k, edges.iter().map(|e| e.iter().map(|v| v - 1)))
    }

    pub fn empty(n: usize, k: usize) -> Self {
        UniformHypergraph {
            n,
            k,
            edges: Vec::new(),
        }
    }

    /// All k-subsets of `[n]`.
    pub fn complete(n: usize, k: usize) -> Self {
        let edges = crate::combinatorics::combinations(n, k)
            .map(|c| c.into_iter().map(|v| v as u32).collect())
            .collect();
        UniformHypergraph { n, k, edges }
    }

    /// The complete k-partite k-graph with consecutive blocks of the given sizes.
    pub fn complete_partite(parts: &[usize]) -> Self {
        let k = parts.len();
        let mut blocks = Vec::new();
        let mut start = 0u32;
        for &p in parts {
            blocks.push((start..start + p as u32).collect::<Vec<_>>());
            start += p as u32;
        }
        let mut edges = vec![Vec::new()];
        for b in &blocks {
            let mut next = Vec::new();
            for e in &edges {
                for &v in b {
                    let mut e2: Vec<u32> = e.clone();
                    e2.push(v);
                    next.push(e2);
                }
            }
            edges = next;
        }
        edges.sort_unstable();
        UniformHypergraph {
            n: start as usize,
            k,
            edges,
        }
    }

    /// Complete equipartite k-graph on n vertices, parts `floor((n+i-1)/k)`.
    pub fn complete_equipartite(n: usize, k: usize) -> Self {
        let parts: Vec<usize> = (1..=k).map(|i| (n + i - 1) / k).collect();
        Self::complete_partite(&parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// `e` must be sorted.
    pub fn has_edge(&self, e: &[u32]) -> bool {
        self.edges.binary_search_by(|x| x.as_slice().cmp(e)).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Vertices sharing at least one edge with each vertex (the 2-section), sorted.
    pub fn co_neighbors(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            for &a in e {
                for &b in e {
                    if a != b {
                        adj[a as usize].push(b);
                    }
                }
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    /// Vertices lying in at least one edge.
    pub fn support_size(&self) -> usize {
        self.degrees().iter().filter(|&&d| d > 0).count()
    }

    pub fn without_edges(&self, removed: &std::collections::HashSet<Vec<u32>>) -> Self {
        UniformHypergraph {
            n: self.n,
            k: self.k,
            edges: self
                .edges
                .iter()
                .filter(|e| !removed.contains(*e))
                .cloned()
                .collect(),
        }
    }

    /// Maximal faces of a pure complex as edges over `[max label + 1]`.
    pub fn from_complex(k: &SimplicialComplex) -> Result<Self> {
        if !k.is_pure() {
            return Err(Error::NotPure);
        }
        let n = k.vertex_set().max().map_or(0, |m| m + 1);
        let size = (k.dim() + 1).max(0) as usize;
        Self::new(
            n,
            size,
            k.facets()
                .iter()
                .map(|f| f.vertices().map(|v| v as u32).collect::<Vec<_>>()),
        )
    }

    /// Hereditary closure of the edges. Vertices outside every edge are dropped.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if self.n > CAPACITY {
            return Err(Error::Capacity(self.n - 1));
        }
        let faces = self
            .edges
            .iter()
            .map(|e| Simplex::from_vertices(e.iter().map(|&v| v as usize)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::close_downward(faces))
    }
}

impl fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-graph on {} vertices with {} edges", self.k, self.n, self.edges.len())
    }
}

/// `to_hypergraph` of a pure complex.
pub fn to_hypergraph(k: &SimplicialComplex) -> Result<UniformHypergraph> {
    UniformHypergraph::from_complex(k)
}

/// `from_hypergraph`: the pure complex generated by the edges.
pub fn from_hypergraph(h: &UniformHypergraph) -> Result<SimplicialComplex> {
    h.to_complex()
}
