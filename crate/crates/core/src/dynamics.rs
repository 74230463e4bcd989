//! Iterating an operator from a starting graph and classifying the orbit
//! `G, Γ(G), Γ²(G), ...` as vanishing, periodic, or (as far as a finite run
//! can tell) expanding.
//!
//! Since `Γ` respects isomorphism, it acts as a function on isomorphism
//! classes; the orbit of classes is ρ-shaped, and the first step whose class
//! was already seen gives the least tail length and period directly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumeration::DEFAULT_MEMBER_CAP;
use crate::graph::{Graph, MaybeGraph};
use crate::iso::{canonical_form_with_cap, CanonicalForm, DEFAULT_CANON_CAP};
use crate::operators::{apply_graph, Limits, OperatorError, OperatorId};

/// Resource limits for one orbit computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Most operator applications performed.
    pub max_steps: usize,
    /// Largest order any orbit member may have.
    pub max_order: usize,
    /// Largest substructure family enumerated in one application.
    pub max_substructures: usize,
    /// Orbit members up to this order get a canonical form in the trace.
    /// Larger members are canonicalized only when a repeat is possible.
    pub max_canon_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 64,
            max_order: 2000,
            max_substructures: DEFAULT_MEMBER_CAP,
            max_canon_order: DEFAULT_CANON_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("budget field {0} must be positive")]
pub struct BudgetError(&'static str);

impl Budget {
    pub fn validate(&self) -> Result<(), BudgetError> {
        for (name, v) in [
            ("max_steps", self.max_steps),
            ("max_order", self.max_order),
            ("max_substructures", self.max_substructures),
            ("max_canon_order", self.max_canon_order),
        ] {
            if v == 0 {
                return Err(BudgetError(name));
            }
        }
        Ok(())
    }

    pub fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_order,
            max_substructures: self.max_substructures,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BudgetReason {
    StepCap,
    OrderCap,
    SubstructureCap,
}

impl BudgetReason {
    pub fn name(self) -> &'static str {
        match self {
            BudgetReason::StepCap => "step-cap",
            BudgetReason::OrderCap => "order-cap",
            BudgetReason::SubstructureCap => "substructure-cap",
        }
    }
}

impl From<&OperatorError> for BudgetReason {
    fn from(e: &OperatorError) -> Self {
        match e {
            OperatorError::OrderCap { .. } => BudgetReason::OrderCap,
            OperatorError::Substructures(_) => BudgetReason::SubstructureCap,
        }
    }
}

/// How an orbit ended.
///
/// `BudgetExceeded` is evidence of expansion, never a proof of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `Γ^steps(G) = ∅` and `Γ^(steps-1)(G) ≠ ∅`.
    Vanishing {
        steps: usize,
    },
    /// Least `tail`, `period` with `Γ^(n+period)(G) ≅ Γ^n(G)` for `n ≥ tail`.
    Periodic {
        tail: usize,
        period: usize,
    },
    BudgetExceeded {
        reason: BudgetReason,
        last_order: usize,
    },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Vanishing { steps } => write!(f, "vanishing k={steps}"),
            Verdict::Periodic { tail, period } => write!(f, "periodic tail={tail} period={period}"),
            Verdict::BudgetExceeded { reason, last_order } => {
                write!(
                    f,
                    "budget-exceeded reason={} last-order={last_order}",
                    reason.name()
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed verdict line: {0:?}")]
pub struct VerdictParseError(String);

impl FromStr for Verdict {
    type Err = VerdictParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VerdictParseError(s.to_string());
        let mut words = s.split_whitespace();
        let head = words.next().ok_or_else(bad)?;
        let mut field = |key: &str| -> Result<String, VerdictParseError> {
            let w = words.next().ok_or_else(bad)?;
            w.strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(bad)
        };
        let num = |v: String| v.parse::<usize>().map_err(|_| bad());
        let verdict = match head {
            "vanishing" => Verdict::Vanishing {
                steps: num(field("k")?)?,
            },
            "periodic" => Verdict::Periodic {
                tail: num(field("tail")?)?,
                period: num(field("period")?)?,
            },
            "budget-exceeded" => {
                let reason = match field("reason")?.as_str() {
                    "step-cap" => BudgetReason::StepCap,
                    "order-cap" => BudgetReason::OrderCap,
                    "substructure-cap" => BudgetReason::SubstructureCap,
                    _ => return Err(bad()),
                };
                Verdict::BudgetExceeded {
                    reason,
                    last_order: num(field("last-order")?)?,
                }
            }
            _ => return Err(bad()),
        };
        if words.next().is_some() {
            return Err(bad());
        }
        Ok(verdict)
    }
}

/// Summary of one materialized orbit member `Γ^k(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub k: usize,
    pub order: usize,
    pub size: usize,
    /// Present when `order <= max_canon_order` or a repeat check needed it.
    pub canon: Option<CanonicalForm>,
}

#[derive(Debug, Clone)]
pub struct IterationTrace {
    pub operator: OperatorId,
    pub steps: Vec<Step>,
    /// `graphs[k] = Γ^k(G)` for every materialized step.
    pub graphs: Vec<Graph>,
    pub terminal: Verdict,
}

impl IterationTrace {
    pub fn orders(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.order).collect()
    }

    /// Re-derives the terminal verdict's claims from the stored graphs:
    /// for `Periodic{m, p}` that `Γ^(m+p) ≅ Γ^m` and that no other pair among
    /// `Γ^0..Γ^(m+p)` is isomorphic; for `Vanishing{k}` that `Γ^(k-1)` is
    /// present and maps to `∅`.
    pub fn audit(&self, budget: &Budget) -> Result<(), AuditError> {
        match self.terminal {
            Verdict::Periodic { tail, period } => {
                let last = tail + period;
                if period == 0 || self.graphs.len() != last + 1 {
                    return Err(AuditError::Shape);
                }
                let forms: Vec<CanonicalForm> = self
                    .graphs
                    .iter()
                    .map(|g| canonical_form_with_cap(g, usize::MAX).expect("uncapped"))
                    .collect();
                if forms[tail] != forms[last] {
                    return Err(AuditError::NotRepeating { tail, period });
                }
                for j in 1..=last {
                    for i in 0..j {
                        if (i, j) != (tail, last) && forms[i] == forms[j] {
                            return Err(AuditError::NotMinimal { i, j });
                        }
                    }
                }
                Ok(())
            }
            Verdict::Vanishing { steps } => {
                if steps == 0 || self.graphs.len() != steps {
                    return Err(AuditError::Shape);
                }
                let last = &self.graphs[steps - 1];
                match apply_graph(self.operator, last, &budget.limits()) {
                    Ok(MaybeGraph::Empty) => Ok(()),
                    _ => Err(AuditError::NotVanishing { steps }),
                }
            }
            Verdict::BudgetExceeded { .. } => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("trace length does not match the verdict")]
    Shape,
    #[error("step {} is not isomorphic to step {tail}", tail + period)]
    NotRepeating { tail: usize, period: usize },
    #[error("steps {i} and {j} are isomorphic, so the tail/period is not minimal")]
    NotMinimal { i: usize, j: usize },
    #[error("the operator does not map step {} to the empty result", steps - 1)]
    NotVanishing { steps: usize },
}

/// Key that isomorphic graphs always share; only colliding steps need an
/// exact comparison.
fn quick_invariant(g: &Graph) -> (usize, usize, Vec<usize>) {
    (g.order(), g.size(), g.degree_sequence())
}

/// Materializes the orbit of `g` under `id` until it vanishes, repeats an
/// isomorphism class, or exhausts the budget.
///
/// Panics if the budget has a zero field.
pub fn iterate(id: OperatorId, g: &Graph, budget: &Budget) -> IterationTrace {
    budget.validate().expect("invalid budget");
    let limits = budget.limits();
    let mut trace = IterationTrace {
        operator: id,
        steps: Vec::new(),
        graphs: Vec::new(),
        terminal: Verdict::Vanishing { steps: 0 },
    };
    let mut seen: HashMap<(usize, usize, Vec<usize>), Vec<usize>> = HashMap::new();

    let mut record = |trace: &mut IterationTrace, g: Graph| -> Option<usize> {
        let k = trace.steps.len();
        let canon = (g.order() <= budget.max_canon_order)
            .then(|| canonical_form_with_cap(&g, usize::MAX).expect("uncapped"));
        trace.steps.push(Step {
            k,
            order: g.order(),
            size: g.size(),
            canon,
        });
        trace.graphs.push(g);
        let bucket = seen.entry(quick_invariant(&trace.graphs[k])).or_default();
        let mut repeat = None;
        for &i in bucket.iter() {
            for idx in [i, k] {
                if trace.steps[idx].canon.is_none() {
                    let f = canonical_form_with_cap(&trace.graphs[idx], usize::MAX).expect("uncapped");
                    trace.steps[idx].canon = Some(f);
                }
            }
            if trace.steps[i].canon == trace.steps[k].canon {
                repeat = Some(i);
                break;
            }
        }
        bucket.push(k);
        repeat
    };

    record(&mut trace, g.clone());
    for k in 1..=budget.max_steps {
        let current = trace.graphs.last().expect("non-empty trace");
        let last_order = current.order();
        match apply_graph(id, current, &limits) {
            Err(e) => {
                trace.terminal = Verdict::BudgetExceeded {
                    reason: BudgetReason::from(&e),
                    last_order,
                };
                return trace;
            }
            Ok(MaybeGraph::Empty) => {
                trace.terminal = Verdict::Vanishing { steps: k };
                return trace;
            }
            Ok(MaybeGraph::Present(next)) => {
                if let Some(i) = record(&mut trace, next) {
                    trace.terminal = Verdict::Periodic {
                        tail: i,
                        period: k - i,
                    };
                    return trace;
                }
            }
        }
    }
    trace.terminal = Verdict::BudgetExceeded {
        reason: BudgetReason::StepCap,
        last_order: trace.graphs.last().expect("non-empty trace").order(),
    };
    trace
}

pub fn classify(id: OperatorId, g: &Graph, budget: &Budget) -> Verdict {
    iterate(id, g, budget).terminal
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("k_max {k_max} exceeds the step budget {max_steps}")]
    TooManySteps { k_max: usize, max_steps: usize },
    #[error("orbit stopped at step {step}: {source}")]
    Budget { step: usize, source: OperatorError },
}

/// `|V(Γ^k(G))|` for `k = 0..=k_max`, stopping early at `∅`. No
/// canonicalization is done.
pub fn orbit_orders(
    id: OperatorId,
    g: &Graph,
    k_max: usize,
    budget: &Budget,
) -> Result<Vec<usize>, OrbitError> {
    if k_max > budget.max_steps {
        return Err(OrbitError::TooManySteps {
            k_max,
            max_steps: budget.max_steps,
        });
    }
    let limits = budget.limits();
    let mut orders = vec![g.order()];
    let mut current = g.clone();
    for step in 1..=k_max {
        match apply_graph(id, &current, &limits) {
            Ok(MaybeGraph::Present(next)) => {
                orders.push(next.order());
                current = next;
            }
            Ok(MaybeGraph::Empty) => break,
            Err(source) => return Err(OrbitError::Budget { step, source }),
        }
    }
    Ok(orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, edgeless, grid, path, petersen};

    fn classify_default(id: OperatorId, g: &Graph) -> Verdict {
        let t = iterate(id, g, &Budget::default());
        t.audit(&Budget::default()).unwrap();
        t.terminal
    }

    #[test]
    fn line_examples() {
        assert_eq!(
            classify_default(OperatorId::Line, &cycle(5).unwrap()),
            Verdict::Periodic { tail: 0, period: 1 }
        );
        assert_eq!(
            classify_default(OperatorId::Line, &complete_bipartite(1, 3).unwrap()),
            Verdict::Periodic { tail: 1, period: 1 }
        );
        let t = iterate(OperatorId::Line, &path(4).unwrap(), &Budget::default());
        assert_eq!(t.terminal, Verdict::Vanishing { steps: 4 });
        assert_eq!(t.orders(), vec![4, 3, 2, 1]);
        assert!(matches!(
            classify_default(OperatorId::Line, &complete_bipartite(1, 4).unwrap()),
            Verdict::BudgetExceeded {
                reason: BudgetReason::OrderCap | BudgetReason::StepCap,
                ..
            }
        ));
    }

    #[test]
    fn other_examples() {
        assert_eq!(
            classify_default(OperatorId::Complement, &complete(3).unwrap()),
            Verdict::Periodic { tail: 0, period: 2 }
        );
        let t = iterate(OperatorId::ClawGraph, &grid(5, 2).unwrap(), &Budget::default());
        assert_eq!(t.terminal, Verdict::Vanishing { steps: 3 });
        assert_eq!(t.orders(), vec![10, 6, 2]);
        assert_eq!(
            classify_default(OperatorId::ClawGraph, &petersen()),
            Verdict::Periodic { tail: 0, period: 1 }
        );
        assert_eq!(
            classify_default(OperatorId::Subdivision, &edgeless(3).unwrap()),
            Verdict::Periodic { tail: 0, period: 1 }
        );
        assert!(matches!(
            classify_default(OperatorId::Shadow, &complete(1).unwrap()),
            Verdict::BudgetExceeded {
                reason: BudgetReason::OrderCap,
                ..
            }
        ));
    }

    #[test]
    fn step_cap() {
        let b = Budget {
            max_steps: 2,
            ..Budget::default()
        };
        assert_eq!(
            classify(OperatorId::Line, &path(5).unwrap(), &b),
            Verdict::BudgetExceeded {
                reason: BudgetReason::StepCap,
                last_order: 3
            }
        );
    }

    #[test]
    fn orbit_order_examples() {
        let b = Budget::default();
        assert_eq!(
            orbit_orders(OperatorId::Line, &path(5).unwrap(), 4, &b).unwrap(),
            vec![5, 4, 3, 2, 1]
        );
        assert_eq!(
            orbit_orders(OperatorId::Line, &path(3).unwrap(), 6, &b).unwrap(),
            vec![3, 2, 1]
        );
        assert_eq!(
            orbit_orders(OperatorId::Shadow, &complete(2).unwrap(), 3, &b).unwrap(),
            vec![2, 4, 8, 16]
        );
        assert!(matches!(
            orbit_orders(OperatorId::Shadow, &complete(2).unwrap(), 65, &b),
            Err(OrbitError::TooManySteps { .. })
        ));
        assert!(matches!(
            orbit_orders(OperatorId::Shadow, &complete(2).unwrap(), 20, &b),
            Err(OrbitError::Budget { step: 10, .. })
        ));
    }

    #[test]
    fn verdict_text_round_trips() {
        let vs = [
            Verdict::Vanishing { steps: 4 },
            Verdict::Periodic { tail: 1, period: 2 },
            Verdict::BudgetExceeded {
                reason: BudgetReason::SubstructureCap,
                last_order: 77,
            },
        ];
        let text: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        assert_eq!(
            text,
            [
                "vanishing k=4",
                "periodic tail=1 period=2",
                "budget-exceeded reason=substructure-cap last-order=77"
            ]
        );
        for (v, t) in vs.iter().zip(&text) {
            assert_eq!(&t.parse::<Verdict>().unwrap(), v);
        }
        assert!("periodic tail=1".parse::<Verdict>().is_err());
        assert!("vanishing k=x".parse::<Verdict>().is_err());
        assert!("vanishing k=1 extra".parse::<Verdict>().is_err());
    }

    #[test]
    fn invalid_budget() {
        let b = Budget {
            max_order: 0,
            ..Budget::default()
        };
        assert_eq!(b.validate(), Err(BudgetError("max_order")));
    }

    #[test]
    fn audit_rejects_tampered_verdicts() {
        let mut t = iterate(
            OperatorId::Line,
            &complete_bipartite(1, 3).unwrap(),
            &Budget::default(),
        );
        t.terminal = Verdict::Periodic { tail: 0, period: 2 };
        assert!(t.audit(&Budget::default()).is_err());
        let mut t = iterate(OperatorId::Complement, &complete(3).unwrap(), &Budget::default());
        t.graphs.push(t.graphs[0].clone());
        t.terminal = Verdict::Periodic { tail: 0, period: 3 };
        assert_eq!(
            t.audit(&Budget::default()),
            Err(AuditError::NotMinimal { i: 0, j: 2 })
        );
    }
}
