//! Enumeration of the induced substructures whose edge-intersection graphs
//! define the path, triangle, cycle and claw operators, plus the clique
//! edge-partition search used for line-graph recognition.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Default cap on the number of members a single enumeration may produce.
pub const DEFAULT_MEMBER_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubstructureKind {
    InducedPath,
    InducedCycle,
    Triangle,
    Claw,
}

impl fmt::Display for SubstructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubstructureKind::InducedPath => "induced path",
            SubstructureKind::InducedCycle => "induced cycle",
            SubstructureKind::Triangle => "triangle",
            SubstructureKind::Claw => "claw",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("more than {cap} {kind} members")]
    CountCap { kind: SubstructureKind, cap: usize },
}

/// One induced substructure: its vertex set (ascending) and the edges of its
/// induced subgraph, each as `(u, v)` with `u < v`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Substructure {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstructureSet {
    pub kind: SubstructureKind,
    /// Sorted lexicographically by vertex set.
    pub members: Vec<Substructure>,
}

impl SubstructureSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

struct Collector {
    kind: SubstructureKind,
    cap: usize,
    members: Vec<Substructure>,
}

impl Collector {
    fn new(kind: SubstructureKind, cap: usize) -> Self {
        Collector {
            kind,
            cap,
            members: Vec::new(),
        }
    }

    fn push(
        &mut self,
        mut vertices: Vec<usize>,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<(), EnumerationError> {
        if self.members.len() >= self.cap {
            return Err(EnumerationError::CountCap {
                kind: self.kind,
                cap: self.cap,
            });
        }
        vertices.sort_unstable();
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        self.members.push(Substructure { vertices, edges });
        Ok(())
    }

    fn finish(mut self) -> SubstructureSet {
        self.members.sort_unstable();
        SubstructureSet {
            kind: self.kind,
            members: self.members,
        }
    }
}

pub fn enumerate(kind: SubstructureKind, g: &Graph, cap: usize) -> Result<SubstructureSet, EnumerationError> {
    match kind {
        SubstructureKind::InducedPath => induced_paths_capped(g, cap),
        SubstructureKind::InducedCycle => induced_cycles_capped(g, cap),
        SubstructureKind::Triangle => triangles_capped(g, cap),
        SubstructureKind::Claw => claws_capped(g, cap),
    }
}

/// Every vertex set of size at least 2 inducing a path, once each.
pub fn induced_paths(g: &Graph) -> Result<SubstructureSet, EnumerationError> {
    induced_paths_capped(g, DEFAULT_MEMBER_CAP)
}

pub fn induced_paths_capped(g: &Graph, cap: usize) -> Result<SubstructureSet, EnumerationError> {
    let mut out = Collector::new(SubstructureKind::InducedPath, cap);
    let n = g.order();
    let words = g.words();
    // Bitset of vertices adjacent to some path vertex other than the end.
    let mut blocked = vec![0u64; words];
    let mut path = Vec::new();
    for s in 0..n {
        path.clear();
        path.push(s);
        extend_path(g, &mut path, &mut blocked, &mut out)?;
    }
    Ok(out.finish())
}

/// DFS over induced paths starting at `path[0]`. A path is recorded when its
/// first endpoint is below its last, so each vertex set appears once.
fn extend_path(
    g: &Graph,
    path: &mut Vec<usize>,
    blocked: &mut [u64],
    out: &mut Collector,
) -> Result<(), EnumerationError> {
    let end = *path.last().unwrap();
    let candidates: Vec<usize> = g
        .neighbors(end)
        .filter(|&w| blocked[w / 64] >> (w % 64) & 1 == 0 && !path.contains(&w))
        .collect();
    for w in candidates {
        if path[0] < w {
            let edges = path.windows(2).map(|p| (p[0], p[1])).chain([(end, w)]).collect();
            let mut vertices = path.clone();
            vertices.push(w);
            out.push(vertices, edges)?;
        }
        // `end` stops being the endpoint: its neighbours become off-limits.
        let saved: Vec<u64> = blocked.to_vec();
        for (b, r) in blocked.iter_mut().zip(g.row(end)) {
            *b |= r;
        }
        path.push(w);
        extend_path(g, path, blocked, out)?;
        path.pop();
        blocked.copy_from_slice(&saved);
    }
    Ok(())
}

/// Every vertex set inducing a chordless cycle of length at least 3.
pub fn induced_cycles(g: &Graph) -> Result<SubstructureSet, EnumerationError> {
    induced_cycles_capped(g, DEFAULT_MEMBER_CAP)
}

pub fn induced_cycles_capped(g: &Graph, cap: usize) -> Result<SubstructureSet, EnumerationError> {
    let mut out = Collector::new(SubstructureKind::InducedCycle, cap);
    for s in 0..g.order() {
        for v1 in g.neighbors(s).filter(|&v| v > s) {
            let mut path = vec![s, v1];
            extend_cycle(g, &mut path, &mut out)?;
        }
    }
    Ok(out.finish())
}

/// Extends the induced path `s, v1, ..., vk` (all `> s`, none but `v1`
/// adjacent to `s`). A new vertex adjacent to `s` closes a chordless cycle,
/// recorded once by requiring `v1` below the closing vertex.
fn extend_cycle(g: &Graph, path: &mut Vec<usize>, out: &mut Collector) -> Result<(), EnumerationError> {
    let s = path[0];
    let k = path.len();
    let end = path[k - 1];
    let candidates: Vec<usize> = g
        .neighbors(end)
        .filter(|&w| w > s && !path.contains(&w))
        .collect();
    for w in candidates {
        if path[1..k - 1].iter().any(|&u| g.are_adjacent(u, w)) {
            continue;
        }
        if g.are_adjacent(s, w) {
            if path[1] < w {
                let mut vertices = path.clone();
                vertices.push(w);
                let edges = vertices
                    .windows(2)
                    .map(|p| (p[0], p[1]))
                    .chain([(w, s)])
                    .collect();
                out.push(vertices, edges)?;
            }
            continue;
        }
        path.push(w);
        extend_cycle(g, path, out)?;
        path.pop();
    }
    Ok(())
}

pub fn triangles(g: &Graph) -> Result<SubstructureSet, EnumerationError> {
    triangles_capped(g, DEFAULT_MEMBER_CAP)
}

pub fn triangles_capped(g: &Graph, cap: usize) -> Result<SubstructureSet, EnumerationError> {
    let mut out = Collector::new(SubstructureKind::Triangle, cap);
    for (u, v) in g.edges() {
        for w in g.neighbors(v).filter(|&w| w > v && g.are_adjacent(u, w)) {
            out.push(vec![u, v, w], vec![(u, v), (u, w), (v, w)])?;
        }
    }
    Ok(out.finish())
}

/// Every induced `K_{1,3}`: a centre plus three pairwise non-adjacent
/// neighbours.
pub fn claws(g: &Graph) -> Result<SubstructureSet, EnumerationError> {
    claws_capped(g, DEFAULT_MEMBER_CAP)
}

pub fn claws_capped(g: &Graph, cap: usize) -> Result<SubstructureSet, EnumerationError> {
    let mut out = Collector::new(SubstructureKind::Claw, cap);
    for c in 0..g.order() {
        let nb: Vec<usize> = g.neighbors(c).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.are_adjacent(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.are_adjacent(a, d) && !g.are_adjacent(b, d) {
                        out.push(vec![c, a, b, d], vec![(c, a), (c, b), (c, d)])?;
                    }
                }
            }
        }
    }
    Ok(out.finish())
}

/// Outcome of the clique edge-partition search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliquePartition {
    /// A partition of the edges into cliques (vertex lists, ascending) with
    /// every vertex in at most two of them.
    Found(Vec<Vec<usize>>),
    NotFound,
    /// The search-node budget ran out before a decision.
    Unknown,
}

/// Default number of search nodes [`clique_edge_partitions`] may visit.
pub const DEFAULT_PARTITION_BUDGET: usize = 2_000_000;

/// Decides whether the edges of `g` split into cliques with each vertex in at
/// most two of them, visiting at most `node_budget` search nodes.
pub fn clique_edge_partitions(g: &Graph, node_budget: usize) -> CliquePartition {
    let n = g.order();
    let mut st = PartitionSearch {
        g,
        uncovered: (0..n).map(|v| g.row(v).to_vec()).collect(),
        uses: vec![0; n],
        cliques: Vec::new(),
        nodes: 0,
        budget: node_budget,
    };
    match st.solve() {
        Some(true) => {
            let mut cl = st.cliques;
            for c in cl.iter_mut() {
                c.sort_unstable();
            }
            cl.sort();
            CliquePartition::Found(cl)
        }
        Some(false) => CliquePartition::NotFound,
        None => CliquePartition::Unknown,
    }
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    uncovered: Vec<Vec<u64>>,
    uses: Vec<u8>,
    cliques: Vec<Vec<usize>>,
    nodes: usize,
    budget: usize,
}

impl PartitionSearch<'_> {
    fn has(&self, u: usize, v: usize) -> bool {
        self.uncovered[u][v / 64] >> (v % 64) & 1 == 1
    }

    fn uncovered_nb(&self, v: usize) -> Vec<usize> {
        crate::graph::BitIter::new(&self.uncovered[v]).collect()
    }

    fn first_uncovered(&self) -> Option<(usize, usize)> {
        (0..self.g.order()).find_map(|u| self.uncovered_nb(u).first().map(|&v| (u, v)))
    }

    fn is_uncovered_clique(&self, c: &[usize]) -> bool {
        c.iter()
            .enumerate()
            .all(|(i, &a)| c[i + 1..].iter().all(|&b| self.has(a, b)))
    }

    /// `None` when the budget runs out.
    fn solve(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some((u, v)) = self.first_uncovered() else {
            return Some(true);
        };
        // A vertex already in one clique must place all remaining edges in
        // its second clique.
        for x in [u, v] {
            if self.uses[x] == 1 {
                let mut c = self.uncovered_nb(x);
                c.push(x);
                return if self.is_uncovered_clique(&c) {
                    self.try_clique(c)
                } else {
                    Some(false)
                };
            }
        }
        let common: Vec<usize> = self
            .uncovered_nb(u)
            .into_iter()
            .filter(|&w| w != v && self.has(v, w))
            .collect();
        // Enumerate cliques {u, v} ∪ S with S ⊆ common, largest first.
        let mut chosen = Vec::new();
        self.extend_choice(u, v, &common, 0, &mut chosen)
    }

    fn extend_choice(
        &mut self,
        u: usize,
        v: usize,
        common: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
    ) -> Option<bool> {
        for i in from..common.len() {
            let w = common[i];
            if chosen.iter().all(|&c| self.has(c, w)) {
                chosen.push(w);
                if self.extend_choice(u, v, common, i + 1, chosen)? {
                    return Some(true);
                }
                chosen.pop();
            }
        }
        let mut c = vec![u, v];
        c.extend_from_slice(chosen);
        self.try_clique(c)
    }

    fn try_clique(&mut self, c: Vec<usize>) -> Option<bool> {
        if c.iter().any(|&x| self.uses[x] >= 2) {
            return Some(false);
        }
        self.set_clique(&c, false);
        for &x in &c {
            self.uses[x] += 1;
        }
        let saturated_ok = c
            .iter()
            .all(|&x| self.uses[x] < 2 || self.uncovered[x].iter().all(|&w| w == 0));
        let r = if saturated_ok {
            self.cliques.push(c.clone());
            let r = self.solve();
            if r != Some(true) {
                self.cliques.pop();
            }
            r
        } else {
            Some(false)
        };
        if r != Some(true) {
            for &x in &c {
                self.uses[x] -= 1;
            }
            self.set_clique(&c, true);
        }
        r
    }

    fn set_clique(&mut self, c: &[usize], value: bool) {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                for (x, y) in [(a, b), (b, a)] {
                    if value {
                        self.uncovered[x][y / 64] |= 1 << (y % 64);
                    } else {
                        self.uncovered[x][y / 64] &= !(1 << (y % 64));
                    }
                }
            }
        }
    }
}
