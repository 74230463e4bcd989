//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's enumeration, canonicalization or operator code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use orbitgraph::{Graph, OperatorId};
use rand::Rng;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, edges.iter().copied()).unwrap()
}

pub fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.are_adjacent(u, v) {
                s.insert((u, v));
            }
        }
    }
    s
}

/// Tries every bijection, pruning on degree.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || edge_set(g).len() != edge_set(h).len() {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).any(|u| g.are_adjacent(u, v) != h.are_adjacent(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; n])
}

fn induced_edges(g: &Graph, s: &[usize]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            if g.are_adjacent(a, b) {
                e.push((a, b));
            }
        }
    }
    e
}

fn connected_within(g: &Graph, s: &[usize]) -> bool {
    let mut seen = vec![s[0]];
    let mut stack = vec![s[0]];
    while let Some(v) = stack.pop() {
        for &w in s {
            if !seen.contains(&w) && g.are_adjacent(v, w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == s.len()
}

fn degrees_within(g: &Graph, s: &[usize]) -> Vec<usize> {
    s.iter()
        .map(|&v| s.iter().filter(|&&w| g.are_adjacent(v, w)).count())
        .collect()
}

pub fn is_induced_path(g: &Graph, s: &[usize]) -> bool {
    s.len() >= 2
        && induced_edges(g, s).len() == s.len() - 1
        && connected_within(g, s)
        && degrees_within(g, s).iter().all(|&d| d <= 2)
}

pub fn is_induced_cycle(g: &Graph, s: &[usize]) -> bool {
    s.len() >= 3 && connected_within(g, s) && degrees_within(g, s).iter().all(|&d| d == 2)
}

pub fn is_triangle(g: &Graph, s: &[usize]) -> bool {
    s.len() == 3 && induced_edges(g, s).len() == 3
}

pub fn is_claw(g: &Graph, s: &[usize]) -> bool {
    if s.len() != 4 || induced_edges(g, s).len() != 3 {
        return false;
    }
    let mut d = degrees_within(g, s);
    d.sort();
    d == [1, 1, 1, 3]
}

/// Every vertex subset (ascending) satisfying `pred`, by scanning all
/// `2^n` subsets.
pub fn subset_scan(g: &Graph, pred: impl Fn(&Graph, &[usize]) -> bool) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20, "subset scan is exponential");
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if pred(g, &s) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Vertex `i` is `members[i]`; adjacent when the two induced subgraphs share
/// an edge of `g`.
pub fn brute_intersection(g: &Graph, members: &[Vec<usize>]) -> Option<Graph> {
    if members.is_empty() {
        return None;
    }
    let mut edges = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let common: Vec<usize> = members[i]
                .iter()
                .copied()
                .filter(|v| members[j].contains(v))
                .collect();
            if !induced_edges(g, &common).is_empty() {
                edges.push((i, j));
            }
        }
    }
    Some(graph(members.len(), &edges))
}

/// Each operator computed from its definition. `None` is `∅`.
pub fn brute_operator(id: OperatorId, g: &Graph) -> Option<Graph> {
    let n = g.order();
    let e: Vec<(usize, usize)> = edge_set(g).into_iter().collect();
    match id {
        OperatorId::Line => {
            if e.is_empty() {
                return None;
            }
            let mut out = Vec::new();
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    let (a, b) = e[i];
                    let (c, d) = e[j];
                    if a == c || a == d || b == c || b == d {
                        out.push((i, j));
                    }
                }
            }
            Some(graph(e.len(), &out))
        }
        OperatorId::PathGraph => brute_intersection(g, &subset_scan(g, is_induced_path)),
        OperatorId::TriangleGraph => brute_intersection(g, &subset_scan(g, is_triangle)),
        OperatorId::CycleGraph => brute_intersection(g, &subset_scan(g, is_induced_cycle)),
        OperatorId::ClawGraph => brute_intersection(g, &subset_scan(g, is_claw)),
        OperatorId::Complement => {
            let mut out = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.are_adjacent(u, v) {
                        out.push((u, v));
                    }
                }
            }
            Some(graph(n, &out))
        }
        OperatorId::Subdivision => {
            let out: Vec<(usize, usize)> = e
                .iter()
                .enumerate()
                .flat_map(|(i, &(a, b))| [(a, n + i), (b, n + i)])
                .collect();
            Some(graph(n + e.len(), &out))
        }
        OperatorId::Shadow => {
            let out: Vec<(usize, usize)> = e
                .iter()
                .flat_map(|&(a, b)| [(a, b), (n + a, n + b), (n + a, b), (a, n + b)])
                .collect();
            Some(graph(2 * n, &out))
        }
    }
}

/// Isomorphism classes of graphs on `n` labelled vertices, counted as orbits
/// of the symmetric group (generated by `(0 1)` and the `n`-cycle) on edge
/// masks.
pub fn class_count(n: usize) -> usize {
    if n <= 1 {
        return 1;
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let perm_pairs = |perm: &dyn Fn(usize) -> usize| -> Vec<usize> {
        pairs
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (perm(i), perm(j));
                index[&(a.min(b), a.max(b))]
            })
            .collect()
    };
    let swap = perm_pairs(&|v| match v {
        0 => 1,
        1 => 0,
        v => v,
    });
    let rot = perm_pairs(&|v| (v + 1) % n);
    let apply = |map: &[usize], mask: usize| -> usize {
        let mut out = 0;
        for (k, &t) in map.iter().enumerate() {
            if mask >> k & 1 == 1 {
                out |= 1 << t;
            }
        }
        out
    };
    let total = 1usize << pairs.len();
    let mut parent: Vec<u32> = (0..total as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for mask in 0..total {
        for map in [&swap, &rot] {
            let (a, b) = (
                find(&mut parent, mask as u32),
                find(&mut parent, apply(map, mask) as u32),
            );
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    (0..total)
        .filter(|&m| find(&mut parent, m as u32) == m as u32)
        .count()
}

/// Representatives of every isomorphism class of order `n`, deduplicated by
/// brute-force isomorphism within (size, degree sequence) buckets.
pub fn all_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut buckets: HashMap<(usize, Vec<usize>), Vec<Graph>> = HashMap::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = graph(n, &edges);
        let key = (edges.len(), g.degree_sequence());
        let bucket = buckets.entry(key).or_default();
        if !bucket.iter().any(|h| brute_isomorphic(&g, h)) {
            bucket.push(g.clone());
            out.push(g);
        }
    }
    out
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    graph(n, &edges)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Vertex `v` of `g` becomes `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = edge_set(g).into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    graph(g.order(), &edges)
}

/// Number of `k`-subsets satisfying `pred`, visited in lexicographic order.
pub fn count_k_subsets(g: &Graph, k: usize, pred: impl Fn(&Graph, &[usize]) -> bool) -> usize {
    fn walk(
        g: &Graph,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        pred: &dyn Fn(&Graph, &[usize]) -> bool,
    ) -> usize {
        if cur.len() == k {
            return pred(g, cur) as usize;
        }
        let mut total = 0;
        for v in start..g.order() {
            cur.push(v);
            total += walk(g, k, v + 1, cur, pred);
            cur.pop();
        }
        total
    }
    walk(g, k, 0, &mut Vec::new(), &pred)
}
