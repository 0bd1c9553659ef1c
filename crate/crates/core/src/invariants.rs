//! Exact clique, independence and chromatic numbers, and predicates built on them.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::clique::max_clique_in;
use crate::coloring::{chromatic_number_with_hint, k_coloring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximum clique, members ascending. Ties go to the first clique found
/// in lowest-index-first branching.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    max_clique_in(g.rows(), g.vertices())
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum independent set, computed as a maximum clique of the complement.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}

/// Exact chromatic number and an optimal colouring.
///
/// The search starts from `max(cl, ceil(n / alpha))`.
pub fn optimal_coloring(g: &Graph) -> VertexColoring {
    let n = g.order();
    let hint = match independence_number(g) {
        0 => 0,
        a => n.div_ceil(a),
    };
    chromatic_number_with_hint(g, hint).coloring
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).class_count()
}

/// Chromatic number of a graph with `alpha <= 2`.
///
/// Colour classes are single vertices or non-edges, so an optimal colouring
/// pairs up a maximum matching of the complement: `chi = n - nu(complement)`.
pub fn chromatic_number_alpha2(g: &Graph) -> Result<usize> {
    if independence_number(g) > 2 {
        return Err(Error::Precondition("independence number above 2".into()));
    }
    let comp = g.complement();
    let edges: Vec<(u32, u32)> = comp
        .edges()
        .into_iter()
        .map(|(u, v)| (u as u32, v as u32))
        .collect();
    let mut h = petgraph::graph::UnGraph::<(), ()>::from_edges(&edges);
    while h.node_count() < g.order() {
        h.add_node(());
    }
    Ok(g.order() - petgraph::algo::maximum_matching(&h).len())
}

/// `f(G) = chi(G) - cl(G)`.
pub fn deficiency(g: &Graph) -> usize {
    chromatic_number(g) - clique_number(g)
}

/// Every single-vertex deletion lowers the chromatic number.
pub fn is_vertex_critical(g: &Graph) -> Result<bool> {
    if g.order() == 0 {
        return Err(Error::Domain(
            "criticality is undefined for the empty graph".into(),
        ));
    }
    let chi = chromatic_number(g);
    Ok((0..g.order()).all(|v| {
        let mut s = VertexSet::new();
        s.insert(v);
        let h = g.delete_vertices(&s).expect("vertex in range");
        k_coloring(&h, chi - 1).is_some()
    }))
}

/// `cl(G) < p` and `alpha(G) < q`.
pub fn is_pq_graph(g: &Graph, p: usize, q: usize) -> Result<bool> {
    if p == 0 || q == 0 {
        return Err(Error::Domain("p and q must be positive".into()));
    }
    Ok(clique_number(g) < p && independence_number(g) < q)
}

/// Membership in `{G : |V(G)| < chi(G) + 2 f(G) - x  and  f(G) <= y}`.
pub fn m_membership(g: &Graph, x: i64, y: i64) -> bool {
    let n = g.order() as i64;
    let chi = chromatic_number(g) as i64;
    let f = chi - clique_number(g) as i64;
    n < chi + 2 * f - x && f <= y
}

/// All exact invariants of a graph with witnesses.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub clique_number: usize,
    pub independence_number: usize,
    pub chromatic_number: usize,
    pub deficiency: usize,
    pub max_clique: Vec<usize>,
    pub max_independent_set: Vec<usize>,
    pub coloring: VertexColoring,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Self {
        let clique = max_clique(g);
        let indep = max_independent_set(g);
        let coloring = optimal_coloring(g);
        Self {
            graph6: crate::graph6::to_graph6(g),
            order: g.order(),
            edges: g.edge_count(),
            clique_number: clique.len(),
            independence_number: indep.len(),
            chromatic_number: coloring.class_count(),
            deficiency: coloring.class_count() - clique.len(),
            max_clique: clique,
            max_independent_set: indep,
            coloring,
        }
    }

    /// Re-checks every witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let clique = VertexSet::from_slice(&self.max_clique);
        let indep = VertexSet::from_slice(&self.max_independent_set);
        g.order() == self.order
            && clique.len() == self.clique_number
            && indep.len() == self.independence_number
            && g.is_clique(&clique).unwrap_or(false)
            && g.is_independent(&indep).unwrap_or(false)
            && self.coloring.is_proper(g)
            && self.coloring.class_count() == self.chromatic_number
            && self.chromatic_number >= self.clique_number
    }
}

/// One lower bound on the order in terms of `chi` and `f`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrderBoundCheck {
    pub clause: String,
    pub applies: bool,
    /// least order the clause allows; `None` for the implication clause
    pub required_min_order: Option<i64>,
    pub holds: bool,
    /// set when the clause rests on an open Ramsey value
    pub assumption: Option<String>,
}

/// Which deficiency-conditioned order bounds apply to a graph, and whether it meets them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderBoundReport {
    pub order: usize,
    pub chromatic_number: usize,
    pub deficiency: usize,
    pub clauses: Vec<OrderBoundCheck>,
    /// unconditional clauses that apply and fail
    pub violations: Vec<String>,
}

/// Evaluates the lower bounds `|V| >= chi + 2f - c` that hold for `f <= 13`,
/// plus the consequence that any graph with `|V| < chi + 2f` has at least 27 vertices.
pub fn order_bound_check(g: &Graph) -> OrderBoundReport {
    let n = g.order() as i64;
    let chi = chromatic_number(g) as i64;
    let f = chi - clique_number(g) as i64;
    let mut clauses = Vec::new();
    let mut push =
        |clause: &str, applies: bool, min: i64, strict: bool, assumption: Option<&str>| {
            let holds = if strict { n > min } else { n >= min };
            clauses.push(OrderBoundCheck {
                clause: clause.to_string(),
                applies,
                required_min_order: Some(if strict { min + 1 } else { min }),
                holds: !applies || holds,
                assumption: assumption.map(str::to_string),
            });
        };
    push("f<=6: n >= chi+2f", f <= 6, chi + 2 * f, false, None);
    push(
        "f in {7,8}: n >= chi+2f-1",
        f == 7 || f == 8,
        chi + 2 * f - 1,
        false,
        None,
    );
    push("f=9: n >= chi+16", f == 9, chi + 16, false, None);
    push(
        "f in {10,11}: n >= chi+2f-3",
        f == 10 || f == 11,
        chi + 2 * f - 3,
        false,
        None,
    );
    push(
        "f<=13: n >= chi+2f-4",
        f <= 13,
        chi + 2 * f - 4,
        false,
        None,
    );
    push(
        "f=12: n > chi+2f-4",
        f == 12,
        chi + 2 * f - 4,
        true,
        Some("R(10,3) <= 41"),
    );
    let small = n < chi + 2 * f;
    clauses.push(OrderBoundCheck {
        clause: "n < chi+2f implies n >= 27".into(),
        applies: small,
        required_min_order: None,
        holds: !small || n >= 27,
        assumption: None,
    });
    let violations = clauses
        .iter()
        .filter(|c| c.assumption.is_none() && !c.holds)
        .map(|c| c.clause.clone())
        .collect();
    OrderBoundReport {
        order: g.order(),
        chromatic_number: chi as usize,
        deficiency: f as usize,
        clauses,
        violations,
    }
}
