//! The eight graph operators and the registry that dispatches on
//! [`OperatorId`].
//!
//! Every operator maps a graph to a graph or to `∅` ([`MaybeGraph::Empty`]),
//! and `∅` maps to `∅`. The line graph joins edges sharing an endpoint; the
//! path, triangle, cycle and claw graphs join distinct substructures sharing
//! an edge.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumeration::{
    enumerate, EnumerationError, SubstructureKind, SubstructureSet, DEFAULT_MEMBER_CAP,
};
use crate::graph::{Graph, GraphBuilder, MaybeGraph, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorId {
    Line,
    PathGraph,
    TriangleGraph,
    CycleGraph,
    ClawGraph,
    Complement,
    Subdivision,
    Shadow,
}

impl OperatorId {
    pub const ALL: [OperatorId; 8] = [
        OperatorId::Line,
        OperatorId::PathGraph,
        OperatorId::TriangleGraph,
        OperatorId::CycleGraph,
        OperatorId::ClawGraph,
        OperatorId::Complement,
        OperatorId::Subdivision,
        OperatorId::Shadow,
    ];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            OperatorId::Line => "line",
            OperatorId::PathGraph => "path",
            OperatorId::TriangleGraph => "triangle",
            OperatorId::CycleGraph => "cycle",
            OperatorId::ClawGraph => "claw",
            OperatorId::Complement => "complement",
            OperatorId::Subdivision => "subdivision",
            OperatorId::Shadow => "shadow",
        }
    }

    /// The substructure kind for the four edge-intersection operators.
    pub fn intersection_spec(self) -> Option<IntersectionSpec> {
        let kind = match self {
            OperatorId::PathGraph => SubstructureKind::InducedPath,
            OperatorId::TriangleGraph => SubstructureKind::Triangle,
            OperatorId::CycleGraph => SubstructureKind::InducedCycle,
            OperatorId::ClawGraph => SubstructureKind::Claw,
            _ => return None,
        };
        Some(IntersectionSpec { kind })
    }

    /// Whether `g` lies in the operator's domain, i.e. `Γ(g) ≠ ∅`.
    pub fn in_domain(self, g: &Graph) -> bool {
        match self {
            OperatorId::Line | OperatorId::PathGraph => g.size() > 0,
            OperatorId::Complement | OperatorId::Subdivision | OperatorId::Shadow => true,
            op => {
                let spec = op.intersection_spec().expect("intersection operator");
                // A cap of one: overflowing it still proves a member exists.
                match enumerate(spec.kind, g, 1) {
                    Ok(set) => !set.is_empty(),
                    Err(_) => true,
                }
            }
        }
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OperatorId::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = OperatorId::ALL.iter().map(|o| o.name()).collect();
                format!("unknown operator {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Selects which substructures become vertices of an intersection operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionSpec {
    pub kind: SubstructureKind,
}

/// Resource limits for a single operator application.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order the result may have.
    pub max_order: usize,
    /// Largest number of substructures an enumeration may list.
    pub max_substructures: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: MAX_ORDER,
            max_substructures: DEFAULT_MEMBER_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("result order {order} exceeds the cap of {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error(transparent)]
    Substructures(#[from] EnumerationError),
}

fn check_order(order: usize, limits: &Limits) -> Result<(), OperatorError> {
    let cap = limits.max_order.min(MAX_ORDER);
    if order > cap {
        Err(OperatorError::OrderCap { order, cap })
    } else {
        Ok(())
    }
}

/// `Γ(G)` for `G` possibly `∅`, with default limits.
pub fn apply(id: OperatorId, g: &MaybeGraph) -> Result<MaybeGraph, OperatorError> {
    apply_with(id, g, &Limits::default())
}

pub fn apply_with(id: OperatorId, g: &MaybeGraph, limits: &Limits) -> Result<MaybeGraph, OperatorError> {
    match g {
        MaybeGraph::Empty => Ok(MaybeGraph::Empty),
        MaybeGraph::Present(g) => apply_graph(id, g, limits),
    }
}

pub fn apply_graph(id: OperatorId, g: &Graph, limits: &Limits) -> Result<MaybeGraph, OperatorError> {
    match id {
        OperatorId::Line => line_graph_with(g, limits),
        OperatorId::Complement => Ok(complement(g)),
        OperatorId::Subdivision => subdivision_with(g, limits),
        OperatorId::Shadow => shadow_with(g, limits),
        op => intersection_operator(op.intersection_spec().expect("intersection operator"), g, limits),
    }
}

/// `L(G)`: one vertex per edge (lexicographic edge order), adjacent when
/// the edges share an endpoint. `∅` when `G` has no edges.
pub fn line_graph(g: &Graph) -> Result<MaybeGraph, OperatorError> {
    line_graph_with(g, &Limits::default())
}

pub fn line_graph_with(g: &Graph, limits: &Limits) -> Result<MaybeGraph, OperatorError> {
    let m = g.size();
    if m == 0 {
        return Ok(MaybeGraph::Empty);
    }
    check_order(m, limits)?;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (id, (u, v)) in g.edges().enumerate() {
        incident[u].push(id);
        incident[v].push(id);
    }
    let mut b = GraphBuilder::new(m).expect("order checked");
    for ids in &incident {
        for (i, &a) in ids.iter().enumerate() {
            for &c in &ids[i + 1..] {
                b.set(a, c);
            }
        }
    }
    Ok(b.build().into())
}

/// The edge-intersection graph of a substructure family: vertex `i` is
/// `members[i]`, and `i ~ j` iff `i ≠ j` and the two share an edge.
pub fn intersection_operator(
    spec: IntersectionSpec,
    g: &Graph,
    limits: &Limits,
) -> Result<MaybeGraph, OperatorError> {
    // Enumerate one past the order cap so an oversized family reports as an
    // order overflow rather than running to the substructure cap.
    let cap = limits.max_substructures.min(limits.max_order.saturating_add(1));
    let set = match enumerate(spec.kind, g, cap) {
        Ok(set) => set,
        Err(_) if cap < limits.max_substructures => {
            return Err(OperatorError::OrderCap {
                order: cap,
                cap: limits.max_order,
            });
        }
        Err(e) => return Err(e.into()),
    };
    check_order(set.len(), limits)?;
    Ok(intersection_graph(&set))
}

pub fn intersection_graph(set: &SubstructureSet) -> MaybeGraph {
    if set.is_empty() {
        return MaybeGraph::Empty;
    }
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, m) in set.members.iter().enumerate() {
        for &e in &m.edges {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut b = GraphBuilder::new(set.len()).expect("order checked by caller");
    for ids in by_edge.values() {
        for (i, &a) in ids.iter().enumerate() {
            for &c in &ids[i + 1..] {
                b.set(a, c);
            }
        }
    }
    b.build().into()
}

pub fn path_graph(g: &Graph) -> Result<MaybeGraph, OperatorError> {
    apply_graph(OperatorId::PathGraph, g, &Limits::default())
}

pub fn triangle_graph(g: &Graph) -> Result<MaybeGraph, OperatorError> {
    apply_graph(OperatorId::TriangleGraph, g, &Limits::default())
}

pub fn cycle_graph(g: &Graph) -> Result<MaybeGraph, OperatorError> {
    apply_graph(OperatorId::CycleGraph, g, &Limits::default())
}

pub fn claw_graph(g: &Graph) -> Result<MaybeGraph, OperatorError> {
    apply_graph(OperatorId::ClawGraph, g, &Limits::default())
}

/// `Ḡ`: always present, same vertices, complemented adjacency.
pub fn complement(g: &Graph) -> MaybeGraph {
    let n = g.order();
    let mut b = GraphBuilder::new(n).expect("same order as input");
    for u in 0..n {
        for v in u + 1..n {
            if !g.are_adjacent(u, v) {
                b.set(u, v);
            }
        }
    }
    b.build().into()
}

/// `S(G)`: edge `e_i = ab` (lexicographic index `i`) becomes `a x_i b` with
/// `x_i = n + i`.
pub fn subdivision(g: &Graph) -> Result<MaybeGraph, OperatorError> {
    subdivision_with(g, &Limits::default())
}

pub fn subdivision_with(g: &Graph, limits: &Limits) -> Result<MaybeGraph, OperatorError> {
    let n = g.order();
    let order = n + g.size();
    check_order(order, limits)?;
    let mut b = GraphBuilder::new(order).expect("order checked");
    for (i, (u, v)) in g.edges().enumerate() {
        b.set(u, n + i);
        b.set(n + i, v);
    }
    Ok(b.build().into())
}

/// `D_2(G)`: `G` plus a copy `v' = n + v`, with `v'` joined to every
/// neighbour of `v` (and their copies). `v'` is not adjacent to `v`.
pub fn shadow(g: &Graph) -> Result<MaybeGraph, OperatorError> {
    shadow_with(g, &Limits::default())
}

pub fn shadow_with(g: &Graph, limits: &Limits) -> Result<MaybeGraph, OperatorError> {
    let n = g.order();
    check_order(2 * n, limits)?;
    let mut b = GraphBuilder::new(2 * n).expect("order checked");
    for (u, v) in g.edges() {
        b.set(u, v);
        b.set(n + u, n + v);
        b.set(n + u, v);
        b.set(u, n + v);
    }
    Ok(b.build().into())
}
