//! Named graph families: paths, cycles, complete and near-complete graphs,
//! grids, generalized Petersen graphs, and the hat construction on
//! triangle-free cubic graphs.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{family}: {reason}")]
    Parameter { family: &'static str, reason: String },
    #[error("hat target graph is not triangle-free")]
    NotTriangleFree,
    #[error("hat target graph is not cubic")]
    NotCubic,
    #[error("vertex {vertex} is not a neighbour of {of}")]
    NotNeighbor { vertex: usize, of: usize },
    #[error("hat neighbours must be distinct")]
    SameNeighbor,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn param(family: &'static str, reason: impl Into<String>) -> GeneratorError {
    GeneratorError::Parameter {
        family,
        reason: reason.into(),
    }
}

/// `P_n`: `n` vertices, `n - 1` edges.
pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(param("path", "n must be at least 1"));
    }
    Ok(Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))?)
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(param("cycle", "n must be at least 3"));
    }
    Ok(Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(param("complete", "n must be at least 1"));
    }
    Ok(Graph::from_edge_list(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    )?)
}

pub fn edgeless(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(param("edgeless", "n must be at least 1"));
    }
    Ok(Graph::edgeless(n)?)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GeneratorError> {
    if a < 1 || b < 1 {
        return Err(param("complete_bipartite", "both parts must be non-empty"));
    }
    Ok(Graph::from_edge_list(
        a + b,
        (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
    )?)
}

/// `K_q - e`: the complete graph on `q` vertices without the edge `01`.
pub fn complete_minus_edge(q: usize) -> Result<Graph, GeneratorError> {
    if q < 3 {
        return Err(param("complete_minus_edge", "q must be at least 3"));
    }
    Ok(Graph::from_edge_list(
        q,
        (0..q)
            .flat_map(|u| (u + 1..q).map(move |v| (u, v)))
            .filter(|&e| e != (0, 1)),
    )?)
}

/// `P_m × P_n` with vertex `(i, j)` labelled `i * n + j`.
pub fn grid(m: usize, n: usize) -> Result<Graph, GeneratorError> {
    if m < 1 || n < 1 {
        return Err(param("grid", "dimensions must be at least 1"));
    }
    let mut b = GraphBuilder::new(m * n)?;
    for i in 0..m {
        for j in 0..n {
            let v = i * n + j;
            if j + 1 < n {
                b.set(v, v + 1);
            }
            if i + 1 < m {
                b.set(v, v + n);
            }
        }
    }
    Ok(b.build())
}

/// `PG(n, k)`: outer cycle `u_i = i`, spokes `u_i v_i` with `v_i = n + i`,
/// inner edges `v_i v_{i+k}`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(param("generalized_petersen", "n must be at least 3"));
    }
    if k < 1 || 2 * k >= n {
        return Err(param(
            "generalized_petersen",
            format!("k must satisfy 1 <= k < n/2, got k={k} for n={n}"),
        ));
    }
    let mut b = GraphBuilder::new(2 * n)?;
    for i in 0..n {
        b.set(i, (i + 1) % n);
        b.set(i, n + i);
        b.set(n + i, n + (i + k) % n);
    }
    Ok(b.build())
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("valid parameters")
}

pub fn is_cubic(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) == 3)
}

pub fn is_triangle_free(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        if g.row(u).iter().zip(g.row(v)).any(|(a, b)| a & b != 0) {
            return false;
        }
    }
    true
}

/// Adds a vertex `x = order(g)` adjacent to `y` and to two distinct
/// neighbours `n1`, `n2` of `y`. `g` must be triangle-free and cubic.
pub fn add_hat(g: &Graph, y: usize, n1: usize, n2: usize) -> Result<Graph, GeneratorError> {
    for v in [y, n1, n2] {
        g.check_vertex(v)?;
    }
    if !is_cubic(g) {
        return Err(GeneratorError::NotCubic);
    }
    if !is_triangle_free(g) {
        return Err(GeneratorError::NotTriangleFree);
    }
    if n1 == n2 {
        return Err(GeneratorError::SameNeighbor);
    }
    for v in [n1, n2] {
        if !g.are_adjacent(y, v) {
            return Err(GeneratorError::NotNeighbor { vertex: v, of: y });
        }
    }
    let x = g.order();
    let mut b = GraphBuilder::new(x + 1)?;
    for (u, v) in g.edges() {
        b.set(u, v);
    }
    for v in [y, n1, n2] {
        b.set(x, v);
    }
    Ok(b.build())
}

/// [`add_hat`] at vertex 0 using its two lowest-labelled neighbours.
pub fn add_default_hat(g: &Graph) -> Result<Graph, GeneratorError> {
    let mut nb = g.neighbors(0);
    match (nb.next(), nb.next()) {
        (Some(n1), Some(n2)) => add_hat(g, 0, n1, n2),
        _ => Err(GeneratorError::NotCubic),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn basic_families() {
        let claw = complete_bipartite(1, 3).unwrap();
        assert_eq!(claw.degree(0), 3);
        assert_eq!(claw.size(), 3);
        assert_eq!(complete_minus_edge(4).unwrap().size(), 5);
        assert!(is_isomorphic(&cycle(3).unwrap(), &complete(3).unwrap()).unwrap());
        assert_eq!(path(1).unwrap().order(), 1);
        assert_eq!(edgeless(3).unwrap().size(), 0);
    }

    #[test]
    fn minimum_parameters() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(complete_minus_edge(2).is_err());
        assert!(grid(0, 3).is_err());
        assert!(generalized_petersen(2, 1).is_err());
        assert!(generalized_petersen(6, 3).is_err());
        assert!(generalized_petersen(5, 0).is_err());
    }

    #[test]
    fn grids() {
        let g = grid(5, 2).unwrap();
        assert_eq!((g.order(), g.size()), (10, 13));
        assert_eq!(grid(1, 1).unwrap().size(), 0);
        assert!(is_isomorphic(&grid(2, 2).unwrap(), &cycle(4).unwrap()).unwrap());
        assert!(is_isomorphic(&grid(3, 4).unwrap(), &grid(4, 3).unwrap()).unwrap());
        assert!(!is_cubic(&g));
    }

    #[test]
    fn petersen_family() {
        let p = petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(is_cubic(&p) && is_triangle_free(&p));
        assert!(is_cubic(&generalized_petersen(7, 2).unwrap()));
        assert!(is_triangle_free(&generalized_petersen(9, 4).unwrap()));
        // PG(3,1) is the triangular prism.
        assert!(!is_triangle_free(&generalized_petersen(3, 1).unwrap()));
        let k4 = complete(4).unwrap();
        assert!(is_cubic(&k4) && !is_triangle_free(&k4));
    }

    #[test]
    fn hat_construction() {
        let p = petersen();
        let (n1, n2) = (1, 4);
        let h = add_hat(&p, 0, n1, n2).unwrap();
        assert_eq!(h.order(), 11);
        assert_eq!(h.degree(10), 3);
        assert_eq!(h.degree(0), 4);
        assert_eq!(h.induced_subgraph(&(0..10).collect::<Vec<_>>()).unwrap(), p);
        assert_eq!(add_default_hat(&p).unwrap(), h);
    }

    #[test]
    fn hat_preconditions() {
        let p = petersen();
        assert_eq!(add_hat(&p, 0, 1, 1), Err(GeneratorError::SameNeighbor));
        assert_eq!(
            add_hat(&p, 0, 1, 2),
            Err(GeneratorError::NotNeighbor { vertex: 2, of: 0 })
        );
        let k4 = complete(4).unwrap();
        assert_eq!(add_hat(&k4, 0, 1, 2), Err(GeneratorError::NotTriangleFree));
        assert_eq!(
            add_hat(&cycle(5).unwrap(), 0, 1, 4),
            Err(GeneratorError::NotCubic)
        );
    }
}
