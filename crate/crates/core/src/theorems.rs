//! Closed-form orbit classifications for the line, path and claw graph
//! operators, and a harness that checks them against [`classify`].

use std::fmt;

use crate::dynamics::{iterate, Budget, Verdict};
use crate::enumeration::{clique_edge_partitions, CliquePartition, DEFAULT_PARTITION_BUDGET};
use crate::generators::{is_cubic, is_triangle_free};
use crate::graph::Graph;
use crate::operators::OperatorId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleVerdict {
    Vanishing,
    Expanding,
    /// Eventually periodic; `period_hint` when the theorem fixes the period.
    Periodic {
        period_hint: Option<usize>,
    },
    /// The input is outside every case the theorem covers.
    NotCovered,
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleVerdict::Vanishing => f.write_str("vanishing"),
            OracleVerdict::Expanding => f.write_str("expanding"),
            OracleVerdict::Periodic { period_hint: Some(p) } => write!(f, "periodic period={p}"),
            OracleVerdict::Periodic { period_hint: None } => f.write_str("periodic"),
            OracleVerdict::NotCovered => f.write_str("not-covered"),
        }
    }
}

fn is_complete(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.are_adjacent(a, b)))
}

fn edges_within(g: &Graph, vs: &[usize]) -> usize {
    vs.iter()
        .enumerate()
        .map(|(i, &a)| vs[i + 1..].iter().filter(|&&b| g.are_adjacent(a, b)).count())
        .sum()
}

/// Line-graph orbits of connected graphs: cycles are periodic with period
/// one, the claw reaches a triangle and stays, paths vanish, and everything
/// else grows without bound.
pub fn line_verdict(g: &Graph) -> OracleVerdict {
    if !g.is_connected() {
        return OracleVerdict::NotCovered;
    }
    let n = g.order();
    let degrees = g.degree_sequence();
    if n >= 3 && degrees.iter().all(|&d| d == 2) {
        return OracleVerdict::Periodic { period_hint: Some(1) };
    }
    if degrees == [1, 1, 1, 3] {
        return OracleVerdict::Periodic { period_hint: Some(1) };
    }
    if g.size() + 1 == n && degrees.iter().all(|&d| d <= 2) {
        return OracleVerdict::Vanishing;
    }
    OracleVerdict::Expanding
}

/// The three structural predicates of the path-graph characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathPredicates {
    /// Every component is a complete graph.
    pub all_components_complete: bool,
    /// Two distinct induced `P_3`s share an edge.
    pub shared_p3_edge: bool,
    /// Exactly one component is `K_q - e` with `q >= 3`; the rest are complete.
    pub one_near_complete: bool,
}

impl PathPredicates {
    pub fn count_true(&self) -> usize {
        [
            self.all_components_complete,
            self.shared_p3_edge,
            self.one_near_complete,
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }
}

pub fn path_predicates(g: &Graph) -> PathPredicates {
    let comps = g.components();
    let complete: Vec<bool> = comps.iter().map(|c| is_complete(g, c)).collect();
    let near: Vec<bool> = comps
        .iter()
        .map(|c| {
            let q = c.len();
            q >= 3 && edges_within(g, c) + 1 == q * (q - 1) / 2
        })
        .collect();
    let all_components_complete = complete.iter().all(|&b| b);
    let near_count = near.iter().filter(|&&b| b).count();
    let one_near_complete = near_count == 1 && complete.iter().zip(&near).all(|(&c, &nr)| c || nr);

    // Induced P_3s as (centre, a, b) with a < b non-adjacent.
    let mut p3: Vec<[(usize, usize); 2]> = Vec::new();
    for c in 0..g.order() {
        let nb: Vec<usize> = g.neighbors(c).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.are_adjacent(a, b) {
                    p3.push([(a.min(c), a.max(c)), (b.min(c), b.max(c))]);
                }
            }
        }
    }
    let shared_p3_edge = p3
        .iter()
        .enumerate()
        .any(|(i, x)| p3[i + 1..].iter().any(|y| x.iter().any(|e| y.contains(e))));

    PathPredicates {
        all_components_complete,
        shared_p3_edge,
        one_near_complete,
    }
}

/// Path-graph orbit classification by the three structural predicates.
/// `NotCovered` when the graph has no edges, or when the predicates do not
/// single out exactly one case.
pub fn path_verdict(g: &Graph) -> OracleVerdict {
    if g.size() == 0 {
        return OracleVerdict::NotCovered;
    }
    let p = path_predicates(g);
    if p.count_true() != 1 {
        return OracleVerdict::NotCovered;
    }
    if p.all_components_complete {
        OracleVerdict::Vanishing
    } else if p.shared_p3_edge {
        OracleVerdict::Expanding
    } else {
        OracleVerdict::Periodic { period_hint: None }
    }
}

/// If `g` is a triangle-free cubic graph with one hat attached, returns the
/// hat vertex.
pub fn find_hat(g: &Graph) -> Option<usize> {
    let mut found = None;
    for x in (0..g.order()).filter(|&x| g.degree(x) == 3) {
        let rest: Vec<usize> = (0..g.order()).filter(|&v| v != x).collect();
        let Ok(base) = g.induced_subgraph(&rest) else {
            continue;
        };
        if !is_cubic(&base) || !is_triangle_free(&base) {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(x).collect();
        let has_apex = nb
            .iter()
            .any(|&y| nb.iter().filter(|&&w| w != y).all(|&w| g.are_adjacent(y, w)));
        if has_apex {
            if found.is_some() {
                return None;
            }
            found = Some(x);
        }
    }
    found
}

/// Claw-graph orbits: triangle-free cubic graphs are fixed points, and such
/// a graph with a hat grows without bound.
pub fn claw_verdict(g: &Graph) -> OracleVerdict {
    if is_cubic(g) && is_triangle_free(g) {
        OracleVerdict::Periodic { period_hint: Some(1) }
    } else if find_hat(g).is_some() {
        OracleVerdict::Expanding
    } else {
        OracleVerdict::NotCovered
    }
}

/// Answer of the clique edge-partition line-graph test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineGraphAnswer {
    Yes,
    No,
    Unknown,
}

pub fn is_line_graph(g: &Graph) -> LineGraphAnswer {
    match clique_edge_partitions(g, DEFAULT_PARTITION_BUDGET) {
        CliquePartition::Found(_) => LineGraphAnswer::Yes,
        CliquePartition::NotFound => LineGraphAnswer::No,
        CliquePartition::Unknown => LineGraphAnswer::Unknown,
    }
}

/// The oracle matching an operator, if there is one.
pub fn oracle_for(id: OperatorId, g: &Graph) -> OracleVerdict {
    match id {
        OperatorId::Line => line_verdict(g),
        OperatorId::PathGraph => path_verdict(g),
        OperatorId::ClawGraph => claw_verdict(g),
        _ => OracleVerdict::NotCovered,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    Disagree,
    OracleNotCovered,
    /// The oracle is definitive but the run hit its budget first.
    EmpiricalInconclusive,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Agree => "agree",
            Agreement::Disagree => "DISAGREE",
            Agreement::OracleNotCovered => "oracle-not-covered",
            Agreement::EmpiricalInconclusive => "empirical-inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossReport {
    pub operator: OperatorId,
    pub oracle: OracleVerdict,
    pub empirical: Verdict,
    pub orders: Vec<usize>,
    pub outcome: Agreement,
}

pub fn compare(oracle: OracleVerdict, empirical: Verdict) -> Agreement {
    use OracleVerdict as O;
    use Verdict as V;
    match (oracle, empirical) {
        (O::NotCovered, _) => Agreement::OracleNotCovered,
        (O::Vanishing, V::Vanishing { .. }) => Agreement::Agree,
        (O::Periodic { period_hint }, V::Periodic { period, .. }) => {
            if period_hint.is_none_or(|p| p == period) {
                Agreement::Agree
            } else {
                Agreement::Disagree
            }
        }
        (O::Expanding, V::BudgetExceeded { .. }) => Agreement::Agree,
        (_, V::BudgetExceeded { .. }) => Agreement::EmpiricalInconclusive,
        _ => Agreement::Disagree,
    }
}

/// Runs the empirical classifier and the matching oracle on `g`.
pub fn cross_validate(id: OperatorId, g: &Graph, budget: &Budget) -> CrossReport {
    let trace = iterate(id, g, budget);
    let oracle = oracle_for(id, g);
    CrossReport {
        operator: id,
        oracle,
        empirical: trace.terminal,
        orders: trace.orders(),
        outcome: compare(oracle, trace.terminal),
    }
}

impl fmt::Display for CrossReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} oracle={} empirical=[{}] {}",
            self.operator, self.oracle, self.empirical, self.outcome
        )
    }
}
