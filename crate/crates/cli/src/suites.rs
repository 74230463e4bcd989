//! Fixed cross-check suites for `orbitgraph check`.

use std::collections::BTreeSet;
use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use orbitgraph::generators as gen;
use orbitgraph::iso::canonical_form;
use orbitgraph::theorems::{cross_validate, Agreement};
use orbitgraph::{Budget, Graph, OperatorId};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    /// Cycles, paths and every connected graph of order at most 6.
    Line,
    /// Every graph of order at most 6 with at least one edge.
    Path,
    /// Generalized Petersen graphs with and without a hat.
    Claw,
    All,
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub agree: usize,
    pub disagree: usize,
    pub not_covered: usize,
    pub inconclusive: usize,
}

impl Summary {
    fn add(&mut self, a: Agreement) {
        match a {
            Agreement::Agree => self.agree += 1,
            Agreement::Disagree => self.disagree += 1,
            Agreement::OracleNotCovered => self.not_covered += 1,
            Agreement::EmpiricalInconclusive => self.inconclusive += 1,
        }
    }
}

/// One representative per isomorphism class of order `n`, by brute force
/// over all labelled graphs. Only meant for n <= 7.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edge_list(n, edges).expect("valid pairs");
        if seen.insert(canonical_form(&g).expect("small order")) {
            out.push(g);
        }
    }
    out
}

fn cases(suite: Suite) -> Vec<(OperatorId, String, Graph)> {
    let mut v = Vec::new();
    let small = || (1..=6).flat_map(all_graphs).filter(|g| g.size() > 0);
    match suite {
        Suite::Line => {
            for n in 3..=10 {
                v.push((OperatorId::Line, format!("cycle {n}"), gen::cycle(n).unwrap()));
            }
            for n in 1..=10 {
                v.push((OperatorId::Line, format!("path {n}"), gen::path(n).unwrap()));
            }
            for g in small().filter(Graph::is_connected) {
                v.push((OperatorId::Line, orbitgraph::formats::emit_graph6(&g).unwrap(), g));
            }
        }
        Suite::Path => {
            for g in small() {
                v.push((
                    OperatorId::PathGraph,
                    orbitgraph::formats::emit_graph6(&g).unwrap(),
                    g,
                ));
            }
        }
        Suite::Claw => {
            let cubic = [
                ("petersen", gen::petersen()),
                ("gpetersen 7 2", gen::generalized_petersen(7, 2).unwrap()),
                ("gpetersen 9 4", gen::generalized_petersen(9, 4).unwrap()),
                ("gpetersen 11 3", gen::generalized_petersen(11, 3).unwrap()),
                ("gpetersen 4 1", gen::generalized_petersen(4, 1).unwrap()),
                ("bipartite 3 3", gen::complete_bipartite(3, 3).unwrap()),
            ];
            for (name, g) in cubic {
                let hatted = gen::add_default_hat(&g).unwrap();
                v.push((OperatorId::ClawGraph, name.to_string(), g));
                v.push((OperatorId::ClawGraph, format!("{name} + hat"), hatted));
            }
            v.push((OperatorId::ClawGraph, "grid 5 2".into(), gen::grid(5, 2).unwrap()));
        }
        Suite::All => {
            for s in [Suite::Line, Suite::Path, Suite::Claw] {
                v.extend(cases(s));
            }
        }
    }
    v
}

/// Runs a suite, writing one report line per case and a summary line.
pub fn run(suite: Suite, budget: &Budget, out: &mut impl Write) -> Result<Summary> {
    let mut summary = Summary::default();
    for (id, name, g) in cases(suite) {
        let report = cross_validate(id, &g, budget);
        summary.add(report.outcome);
        writeln!(out, "{name}: {report}")?;
    }
    writeln!(
        out,
        "summary: agree={} disagree={} oracle-not-covered={} empirical-inconclusive={}",
        summary.agree, summary.disagree, summary.not_covered, summary.inconclusive
    )?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
    }
}
