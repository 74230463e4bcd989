//! Immutable simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex. Graphs are never mutated
//! after construction; operators build fresh values through [`GraphBuilder`].

use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] may have.
pub const MAX_ORDER: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph must have at least one vertex")]
    ZeroOrder,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex set must be non-empty")]
    EmptyVertexSet,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A simple undirected graph with vertices `0..order()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Result of applying an operator: either a graph or the empty result `∅`.
///
/// `Empty` is not a graph of order zero; such graphs cannot be built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MaybeGraph {
    Present(Graph),
    Empty,
}

impl MaybeGraph {
    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            MaybeGraph::Present(g) => Some(g),
            MaybeGraph::Empty => None,
        }
    }

    pub fn into_graph(self) -> Option<Graph> {
        match self {
            MaybeGraph::Present(g) => Some(g),
            MaybeGraph::Empty => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, MaybeGraph::Empty)
    }
}

impl From<Graph> for MaybeGraph {
    fn from(g: Graph) -> Self {
        MaybeGraph::Present(g)
    }
}

/// Mutable staging area used to assemble a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let words = words_for(n);
        Ok(GraphBuilder {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v);
        Ok(())
    }

    /// Adds `uv` without validation. Callers guarantee `u != v` and both in range.
    pub(crate) fn set(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            words: self.words,
            rows: self.rows,
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        let twice: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        twice / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Number of neighbours of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Panics if either vertex is out of range.
    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range");
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    /// The bitset row of `v`: bit `w` is set iff `vw` is an edge.
    pub fn row(&self, v: usize) -> &[u64] {
        assert!(v < self.n, "vertex {v} out of range");
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .skip_while(move |&v| v <= u)
                .map(move |v| (u, v))
        })
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Connected components, each sorted ascending, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in ascending
    /// order of original label. Duplicates in `vertices` are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut set = vertices.to_vec();
        set.sort_unstable();
        set.dedup();
        for &v in &set {
            self.check_vertex(v)?;
        }
        let mut b = GraphBuilder::new(set.len())?;
        for (i, &u) in set.iter().enumerate() {
            for (j, &v) in set.iter().enumerate().skip(i + 1) {
                if self.are_adjacent(u, v) {
                    b.set(i, j);
                }
            }
        }
        Ok(b.build())
    }

    /// `self ⊎ other`; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let mut b = GraphBuilder::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            b.set(u, v);
        }
        for (u, v) in other.edges() {
            b.set(u + shift, v + shift);
        }
        Ok(b.build())
    }

    /// The graph `π·G`: vertex `v` is renamed `perm[v]`.
    ///
    /// Panics unless `perm` is a permutation of `0..order()`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut b = GraphBuilder {
            n: self.n,
            words: self.words,
            rows: vec![0; self.rows.len()],
        };
        for (u, v) in self.edges() {
            b.set(perm[u], perm[v]);
        }
        b.build()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterates the set bit positions of a word slice in ascending order.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}
