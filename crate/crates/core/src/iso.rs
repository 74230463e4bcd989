//! Canonical forms and isomorphism testing.
//!
//! The canonical form is computed by individualization-refinement: an
//! equitable-partition refinement prunes the label space, and a search tree
//! over individualized vertices visits every remaining discrete partition up
//! to the automorphisms discovered along the way. The canonical leaf is the
//! least leaf under the order (refinement trace, relabelled adjacency rows).
//! The result is exact: two graphs share a form iff they are isomorphic.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{words_for, Graph};

/// Default largest order accepted by [`canonical_form`].
pub const DEFAULT_CANON_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("graph of order {order} exceeds the canonicalization cap of {cap}")]
    OrderCap { order: usize, cap: usize },
}

/// Byte string identifying an isomorphism class: the order as a 4-byte
/// big-endian integer followed by the upper-triangle adjacency bits of the
/// canonically relabelled graph, column by column, packed MSB first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        u32::from_be_bytes([self.0[0], self.0[1], self.0[2], self.0[3]]) as usize
    }

    /// Lowercase hex of the full byte string.
    pub fn to_hex(&self) -> String {
        hex(&self.0)
    }

    /// First 16 hex digits of the SHA-256 of the byte string.
    pub fn digest_hex(&self) -> String {
        let d = Sha256::digest(&self.0);
        hex(&d[..8])
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

fn hex(bytes: &[u8]) -> String {
    use std::fmt::Write;
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let _ = write!(s, "{b:02x}");
    }
    s
}

/// Canonical form with the default order cap.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalForm, CanonError> {
    if g.order() > cap {
        return Err(CanonError::OrderCap {
            order: g.order(),
            cap,
        });
    }
    let leaf = search(g);
    Ok(encode(g.order(), words_for(g.order()), &leaf.rows))
}

/// A canonical relabelling: `labeling[v]` is the new name of vertex `v`.
/// `g.permute(&canonical_labeling(g))` is the same graph for every member of
/// the isomorphism class.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let leaf = search(g);
    let mut out = vec![0; g.order()];
    for (i, &v) in leaf.lab.iter().enumerate() {
        out[v] = i;
    }
    out
}

/// Exact isomorphism test. Cheap invariants are compared first.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    is_isomorphic_with_cap(g, h, DEFAULT_CANON_CAP)
}

pub fn is_isomorphic_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<bool, CanonError> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form_with_cap(g, cap)? == canonical_form_with_cap(h, cap)?)
}

fn encode(n: usize, words: usize, rows: &[u64]) -> CanonicalForm {
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(8));
    out.extend_from_slice(&(n as u32).to_be_bytes());
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = rows[i * words + j / 64] >> (j % 64) & 1;
            byte = byte << 1 | bit as u8;
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    CanonicalForm(out)
}

fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(5) ^ x).wrapping_mul(0x517c_c1b7_2722_0a95)
}

/// Ordered partition of the vertex set. Cells are identified by their first
/// position in `lab`.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    cell: Vec<usize>,
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        end[0] = n;
        Partition {
            lab: (0..n).collect(),
            cell: vec![0; n],
            end,
            cells: 1,
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First cell of least size among the non-singleton cells.
    fn target_cell(&self) -> usize {
        let n = self.lab.len();
        let mut best = (usize::MAX, 0);
        let mut s = 0;
        while s < n {
            let size = self.end[s] - s;
            if size > 1 && size < best.0 {
                best = (size, s);
            }
            s = self.end[s];
        }
        best.1
    }

    /// Splits `v` off the front of its cell and returns the position of the
    /// new singleton.
    fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell[v];
        let e = self.end[s];
        let at = (s..e).find(|&i| self.lab[i] == v).expect("vertex in its cell");
        self.lab.swap(s, at);
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for i in s + 1..e {
            self.cell[self.lab[i]] = s + 1;
        }
        self.cells += 1;
        s
    }
}

struct Refiner<'a> {
    adj: &'a [Vec<usize>],
    count: Vec<u32>,
    touched: Vec<usize>,
    cell_touched: Vec<bool>,
    in_queue: Vec<bool>,
    cells_buf: Vec<usize>,
    frags: Vec<(usize, usize, u32)>,
}

impl<'a> Refiner<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Refiner {
            adj,
            count: vec![0; n],
            touched: Vec::new(),
            cell_touched: vec![false; n],
            in_queue: vec![false; n],
            cells_buf: Vec::new(),
            frags: Vec::new(),
        }
    }

    /// Refines `p` to the coarsest equitable partition finer than it, given
    /// that `p` is already stable with respect to every cell not in `seeds`.
    /// Returns a hash of the refinement trace; it depends only on positions
    /// and counts, so isomorphic inputs yield equal hashes.
    fn refine(&mut self, p: &mut Partition, seeds: &[usize]) -> u64 {
        let mut h = 0x243f_6a88_85a3_08d3u64;
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in seeds {
            if !self.in_queue[s] {
                self.in_queue[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(w) = queue.pop_front() {
            self.in_queue[w] = false;
            if p.is_discrete() {
                continue;
            }
            h = mix(h, w as u64);
            let w_end = p.end[w];
            for pos in w..w_end {
                for &y in &self.adj[p.lab[pos]] {
                    if self.count[y] == 0 {
                        self.touched.push(y);
                    }
                    self.count[y] += 1;
                }
            }
            self.cells_buf.clear();
            for &y in &self.touched {
                let s = p.cell[y];
                if !self.cell_touched[s] {
                    self.cell_touched[s] = true;
                    self.cells_buf.push(s);
                }
            }
            self.cells_buf.sort_unstable();
            for ci in 0..self.cells_buf.len() {
                let s = self.cells_buf[ci];
                self.cell_touched[s] = false;
                let e = p.end[s];
                let count = &self.count;
                let slice = &mut p.lab[s..e];
                slice.sort_unstable_by_key(|&v| count[v]);
                let lo = count[slice[0]];
                let hi = count[slice[e - s - 1]];
                if lo == hi {
                    h = mix(h, (s as u64) << 32 | lo as u64);
                    continue;
                }
                self.frags.clear();
                let mut start = s;
                for i in s + 1..=e {
                    if i == e || count[p.lab[i]] != count[p.lab[i - 1]] {
                        self.frags.push((start, i, count[p.lab[start]]));
                        start = i;
                    }
                }
                for &(fs, fe, c) in &self.frags {
                    p.end[fs] = fe;
                    for pos in fs..fe {
                        p.cell[p.lab[pos]] = fs;
                    }
                    h = mix(h, (fs as u64) << 40 ^ ((fe - fs) as u64) << 20 ^ c as u64);
                }
                p.cells += self.frags.len() - 1;
                if self.in_queue[s] {
                    for &(fs, _, _) in &self.frags[1..] {
                        self.in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                } else {
                    // Stable w.r.t. the parent already, so one fragment (the
                    // first largest) may be left out.
                    let mut skip = 0;
                    for (k, &(fs, fe, _)) in self.frags.iter().enumerate() {
                        let (bs, be, _) = self.frags[skip];
                        if fe - fs > be - bs {
                            skip = k;
                        }
                    }
                    for (k, &(fs, _, _)) in self.frags.iter().enumerate() {
                        if k != skip {
                            self.in_queue[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            for y in self.touched.drain(..) {
                self.count[y] = 0;
            }
        }
        mix(h, p.cells as u64)
    }
}

struct Leaf {
    inv: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    n: usize,
    words: usize,
    adj: &'a [Vec<usize>],
    refiner: Refiner<'a>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    pos: Vec<usize>,
}

fn search(g: &Graph) -> Leaf {
    let n = g.order();
    let adj = g.adjacency_lists();
    let mut s = Search {
        n,
        words: words_for(n),
        adj: &adj,
        refiner: Refiner::new(&adj),
        first: None,
        best: None,
        generators: Vec::new(),
        pos: vec![0; n],
    };
    let mut p = Partition::unit(n);
    let h = s.refiner.refine(&mut p, &[0]);
    let mut path = Vec::new();
    let mut inv = vec![h];
    s.node(p, &mut path, &mut inv);
    s.best.take().expect("search reaches at least one leaf")
}

fn lcp(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Compares the current invariant prefix against the best leaf. `Greater`
    /// means no leaf below can beat the best.
    fn cmp_prefix(&self, inv: &[u64]) -> Ordering {
        let Some(best) = &self.best else {
            return Ordering::Less;
        };
        for (a, b) in inv.iter().zip(&best.inv) {
            match a.cmp(b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        if best.inv.len() < inv.len() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    /// Returns `Some(d)` to abandon the search back up to depth `d`.
    fn node(&mut self, p: Partition, path: &mut Vec<usize>, inv: &mut Vec<u64>) -> Option<usize> {
        if self.cmp_prefix(inv) == Ordering::Greater {
            return None;
        }
        if p.is_discrete() {
            return self.leaf(&p, path, inv);
        }
        let depth = path.len();
        let t = p.target_cell();
        let mut cell: Vec<usize> = p.lab[t..p.end[t]].to_vec();
        cell.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        // Union-find over orbits of the known automorphisms fixing `path`,
        // extended as new generators appear.
        let mut orbits: Option<Vec<usize>> = None;
        let mut seen_gens = 0;
        for v in cell {
            if !explored.is_empty() {
                let root = orbits.get_or_insert_with(|| (0..self.n).collect());
                for gen in &self.generators[seen_gens..] {
                    if path.iter().all(|&x| gen[x] == x) {
                        union_all(root, gen);
                    }
                }
                seen_gens = self.generators.len();
                let rv = find(root, v);
                if explored.iter().any(|&u| find(root, u) == rv) {
                    continue;
                }
            }
            let mut child = p.clone();
            let s = child.individualize(v);
            let h = self.refiner.refine(&mut child, &[s]);
            path.push(v);
            inv.push(h);
            let r = self.node(child, path, inv);
            path.pop();
            inv.pop();
            explored.push(v);
            if let Some(d) = r {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, p: &Partition, path: &[usize], inv: &[u64]) -> Option<usize> {
        let rows = self.relabelled_rows(&p.lab);
        if self.first.is_none() {
            let leaf = Leaf {
                inv: inv.to_vec(),
                lab: p.lab.clone(),
                path: path.to_vec(),
                rows,
            };
            self.best = Some(Leaf {
                inv: leaf.inv.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
                rows: leaf.rows.clone(),
            });
            self.first = Some(leaf);
            return None;
        }
        let first = self.first.as_ref().unwrap();
        if first.inv == inv && first.rows == rows {
            let (lab, fpath) = (first.lab.clone(), first.path.clone());
            return self.automorphism(&lab, &fpath, &p.lab, path);
        }
        let best = self.best.as_ref().unwrap();
        let order = self.cmp_prefix(inv).then_with(|| {
            if best.inv.len() > inv.len() {
                Ordering::Less
            } else {
                rows.cmp(&best.rows)
            }
        });
        match order {
            Ordering::Less => {
                self.best = Some(Leaf {
                    inv: inv.to_vec(),
                    lab: p.lab.clone(),
                    path: path.to_vec(),
                    rows,
                });
                None
            }
            Ordering::Equal => {
                let (lab, bpath) = (best.lab.clone(), best.path.clone());
                self.automorphism(&lab, &bpath, &p.lab, path)
            }
            Ordering::Greater => None,
        }
    }

    /// Records the automorphism taking leaf `(lab_a, path_a)` to
    /// `(lab_b, path_b)` and reports how far the search may jump back.
    fn automorphism(
        &mut self,
        lab_a: &[usize],
        path_a: &[usize],
        lab_b: &[usize],
        path_b: &[usize],
    ) -> Option<usize> {
        let mut gamma = vec![0; self.n];
        for (&a, &b) in lab_a.iter().zip(lab_b) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().all(|(v, &w)| v == w) {
            return None;
        }
        let j = lcp(path_a, path_b);
        let maps_path =
            j < path_a.len() && j < path_b.len() && (0..=j).all(|i| gamma[path_a[i]] == path_b[i]);
        self.generators.push(gamma);
        maps_path.then_some(j)
    }

    fn relabelled_rows(&mut self, lab: &[usize]) -> Vec<u64> {
        for (i, &v) in lab.iter().enumerate() {
            self.pos[v] = i;
        }
        let mut rows = vec![0u64; self.n * self.words];
        for (i, &v) in lab.iter().enumerate() {
            let row = &mut rows[i * self.words..(i + 1) * self.words];
            for &u in &self.adj[v] {
                let j = self.pos[u];
                row[j / 64] |= 1 << (j % 64);
            }
        }
        rows
    }
}

fn union_all(root: &mut [usize], gen: &[usize]) {
    for (v, &w) in gen.iter().enumerate() {
        let a = find(root, v);
        let b = find(root, w);
        if a != b {
            root[a.max(b)] = a.min(b);
        }
    }
}

fn find(root: &mut [usize], mut v: usize) -> usize {
    while root[v] != v {
        root[v] = root[root[v]];
        v = root[v];
    }
    v
}
