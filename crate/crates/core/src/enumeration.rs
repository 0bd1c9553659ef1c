//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! Order `n + 1` graphs are grown from order `n` parents by adding one
//! vertex joined to a subset of the parent. A child is kept only if its new
//! vertex could have been the one removed canonically (the max-degree
//! vertex with the largest canonical label), which makes every class arise
//! from exactly one parent class; duplicates within one parent are removed
//! by canonical form. Only the clique constraint is applied during
//! generation because it is hereditary; other filters act on the output.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrowing::{normalize_pattern, vertex_arrows, vertex_arrows_all2};
use crate::bitset::VertexSet;
use crate::canon::{canonical_form, canonical_graph6};
use crate::clique::has_clique_in;
use crate::coloring::k_coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::invariants::{chromatic_number, clique_number, is_vertex_critical};

pub const DEFAULT_ORDER_WALL: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConstraint {
    pub max_order: usize,
    /// generated graphs satisfy `cl < q`
    pub forbid_clique: Option<usize>,
    pub min_chromatic: Option<usize>,
    pub connected_only: bool,
    pub order_wall: usize,
}

impl EnumerationConstraint {
    pub fn new(max_order: usize) -> Self {
        EnumerationConstraint {
            max_order,
            forbid_clique: None,
            min_chromatic: None,
            connected_only: false,
            order_wall: DEFAULT_ORDER_WALL,
        }
    }

    pub fn clique_free(max_order: usize, q: usize) -> Self {
        EnumerationConstraint {
            forbid_clique: Some(q),
            ..Self::new(max_order)
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_order > self.order_wall {
            return Err(Error::Capacity(format!(
                "enumeration to order {} exceeds the wall at {}",
                self.max_order, self.order_wall
            )));
        }
        if self.forbid_clique.is_some_and(|q| q < 2) {
            return Err(Error::Domain(
                "forbidden clique size must be at least 2".into(),
            ));
        }
        Ok(())
    }

    fn admits(&self, g: &Graph) -> bool {
        (!self.connected_only || g.is_connected())
            && self
                .min_chromatic
                .is_none_or(|c| c == 0 || k_coloring(g, c - 1).is_none())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationOptions {
    /// parents per partition; results do not depend on it
    pub chunk_size: usize,
    /// resumable progress file, rewritten after each batch of partitions
    pub checkpoint: Option<PathBuf>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            chunk_size: 64,
            checkpoint: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
struct Checkpoint {
    forbid_clique: Option<usize>,
    chunk_size: usize,
    /// canonical graph6 per completed order, starting at order 1
    levels: Vec<Vec<String>>,
    /// finished partitions of the order being generated
    partial: BTreeMap<usize, Vec<String>>,
}

/// Level-by-level generator over the clique-constrained classes.
pub struct Enumerator {
    constraint: EnumerationConstraint,
    options: EnumerationOptions,
    state: Checkpoint,
}

fn max_degree(rows: &[VertexSet]) -> usize {
    rows.iter().map(|r| r.len()).max().unwrap_or(0)
}

/// Canonical graph6 strings of the accepted children of `parent`.
fn children(parent: &Graph, forbid: Option<usize>) -> Vec<String> {
    let n = parent.order();
    let rows = parent.rows();
    let maxdeg = max_degree(rows);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let deg = s.len();
        if deg < maxdeg {
            continue;
        }
        if forbid.is_some_and(|q| has_clique_in(rows, s, q - 1)) {
            continue;
        }
        let mut child_rows: Vec<VertexSet> = rows.to_vec();
        for v in s.iter() {
            child_rows[v].insert(n);
        }
        child_rows.push(s);
        if max_degree(&child_rows) > deg {
            continue;
        }
        let child = Graph::from_rows_unchecked(child_rows);
        let canon = canonical_form(&child);
        let pos = canon.positions();
        let w = (0..=n)
            .filter(|&v| child.degree(v) == deg)
            .max_by_key(|&v| pos[v])
            .expect("new vertex has max degree");
        if w != n {
            let orbits = canon.orbits();
            if orbits[w] != orbits[n] {
                let drop = |v: usize| {
                    let mut x = VertexSet::new();
                    x.insert(v);
                    canonical_graph6(&child.delete_vertices(&x).expect("vertex in range"))
                };
                if drop(w) != drop(n) {
                    continue;
                }
            }
        }
        let key = to_graph6(&canon.graph);
        if seen.insert(key.clone()) {
            out.push(key);
        }
    }
    out
}

impl Enumerator {
    pub fn new(constraint: EnumerationConstraint, options: EnumerationOptions) -> Result<Self> {
        constraint.validate()?;
        if options.chunk_size == 0 {
            return Err(Error::Domain("chunk size must be positive".into()));
        }
        let fresh = Checkpoint {
            forbid_clique: constraint.forbid_clique,
            chunk_size: options.chunk_size,
            levels: Vec::new(),
            partial: BTreeMap::new(),
        };
        let state = match &options.checkpoint {
            Some(path) if path.exists() => {
                let saved: Checkpoint = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                if saved.forbid_clique != fresh.forbid_clique
                    || saved.chunk_size != fresh.chunk_size
                {
                    return Err(Error::Precondition(format!(
                        "checkpoint {} was written for different parameters",
                        path.display()
                    )));
                }
                saved
            }
            _ => fresh,
        };
        Ok(Enumerator {
            constraint,
            options,
            state,
        })
    }

    fn save(&self) -> Result<()> {
        if let Some(path) = &self.options.checkpoint {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_string(&self.state)?)?;
            std::fs::rename(tmp, path)?;
        }
        Ok(())
    }

    /// Orders completed so far.
    pub fn completed_orders(&self) -> usize {
        self.state.levels.len()
    }

    /// Canonical graph6 strings of all constrained classes at `order`, if generated.
    pub fn level(&self, order: usize) -> Option<&[String]> {
        order
            .checked_sub(1)
            .and_then(|i| self.state.levels.get(i))
            .map(|v| v.as_slice())
    }

    /// Generates the next order; `None` once `max_order` is reached.
    pub fn next_level(&mut self) -> Result<Option<usize>> {
        let order = self.state.levels.len() + 1;
        if order > self.constraint.max_order {
            return Ok(None);
        }
        if order == 1 {
            self.state.levels.push(vec![to_graph6(&Graph::empty(1)?)]);
            self.save()?;
            return Ok(Some(1));
        }
        let parents: Vec<Graph> = self.state.levels[order - 2]
            .iter()
            .map(|s| from_graph6(s))
            .collect::<Result<_>>()?;
        let chunks: Vec<&[Graph]> = parents.chunks(self.options.chunk_size).collect();
        let forbid = self.constraint.forbid_clique;
        let batch = (rayon::current_num_threads() * 4).max(1);
        let pending: Vec<usize> = (0..chunks.len())
            .filter(|i| !self.state.partial.contains_key(i))
            .collect();
        for group in pending.chunks(batch) {
            let done: Vec<(usize, Vec<String>)> = group
                .par_iter()
                .map(|&i| {
                    (
                        i,
                        chunks[i].iter().flat_map(|p| children(p, forbid)).collect(),
                    )
                })
                .collect();
            self.state.partial.extend(done);
            self.save()?;
        }
        let mut level: Vec<String> = std::mem::take(&mut self.state.partial)
            .into_values()
            .flatten()
            .collect();
        level.sort_unstable();
        if level.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Verification(format!(
                "duplicate isomorphism class at order {order}"
            )));
        }
        self.state.levels.push(level);
        self.save()?;
        Ok(Some(order))
    }

    pub fn finish(mut self) -> Result<Enumeration> {
        while self.next_level()?.is_some() {}
        let levels = self
            .state
            .levels
            .into_iter()
            .enumerate()
            .take(self.constraint.max_order)
            .map(|(i, l)| (i + 1, l))
            .collect();
        Ok(Enumeration {
            constraint: self.constraint,
            levels,
        })
    }
}

/// Generated classes, one canonical representative each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub constraint: EnumerationConstraint,
    /// order -> canonical graph6 of every clique-constrained class
    pub levels: BTreeMap<usize, Vec<String>>,
}

impl Enumeration {
    /// Classes passing every filter, by order then canonical graph6.
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.levels
            .values()
            .flatten()
            .map(|s| from_graph6(s).expect("stored canonical graph6 parses"))
            .filter(|g| self.constraint.admits(g))
    }

    /// Filtered classes at a single order.
    pub fn graphs_of_order(&self, order: usize) -> Vec<Graph> {
        self.levels
            .get(&order)
            .into_iter()
            .flatten()
            .map(|s| from_graph6(s).expect("stored canonical graph6 parses"))
            .filter(|g| self.constraint.admits(g))
            .collect()
    }

    /// Number of clique-constrained classes per order, before other filters.
    pub fn class_counts(&self) -> BTreeMap<usize, usize> {
        self.levels.iter().map(|(&n, l)| (n, l.len())).collect()
    }

    pub fn write_graph6<W: std::io::Write>(&self, mut out: W) -> Result<()> {
        for g in self.graphs() {
            writeln!(out, "{}", to_graph6(&g))?;
        }
        Ok(())
    }
}

pub fn enumerate(constraint: &EnumerationConstraint) -> Result<Enumeration> {
    enumerate_with(constraint, &EnumerationOptions::default())
}

pub fn enumerate_with(
    constraint: &EnumerationConstraint,
    options: &EnumerationOptions,
) -> Result<Enumeration> {
    Enumerator::new(constraint.clone(), options.clone())?.finish()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityCertificate {
    pub pattern: Vec<usize>,
    pub q: usize,
    /// `None` when nothing up to `n_cap` arrows: then `F > n_cap`
    pub value: Option<usize>,
    pub lower_bound: usize,
    pub witness: Option<Graph>,
    /// every member of the smallest order, canonical
    pub minimal_witnesses: Vec<Graph>,
    pub exhausted_orders: Vec<usize>,
    /// `K_q`-free classes examined per order
    pub class_counts: BTreeMap<usize, usize>,
}

/// Least order of a `K_q`-free graph arrowing `a`, by exhaustive search up to `n_cap`.
pub fn certify_folkman_value(a: &[usize], q: usize, n_cap: usize) -> Result<MinimalityCertificate> {
    certify_folkman_value_with(a, q, n_cap, &EnumerationOptions::default())
}

pub fn certify_folkman_value_with(
    a: &[usize],
    q: usize,
    n_cap: usize,
    options: &EnumerationOptions,
) -> Result<MinimalityCertificate> {
    let pattern = normalize_pattern(a)?;
    let max = pattern.first().copied().unwrap_or(1);
    if q <= max {
        return Err(Error::Nonexistent(format!(
            "F_v({a:?}; {q}) needs q > {max}"
        )));
    }
    let all2 = !pattern.is_empty() && pattern.iter().all(|&x| x == 2);
    let arrows = |g: &Graph| -> Result<bool> {
        Ok(if all2 {
            vertex_arrows_all2(g, pattern.len())?.arrows
        } else {
            vertex_arrows(g, &pattern)?.arrows
        })
    };
    let mut e = Enumerator::new(
        EnumerationConstraint::clique_free(n_cap, q),
        options.clone(),
    )?;
    let mut cert = MinimalityCertificate {
        pattern: pattern.clone(),
        q,
        value: None,
        lower_bound: n_cap + 1,
        witness: None,
        minimal_witnesses: Vec::new(),
        exhausted_orders: Vec::new(),
        class_counts: BTreeMap::new(),
    };
    while let Some(order) = e.next_level()? {
        let level = e.level(order).expect("just generated");
        cert.class_counts.insert(order, level.len());
        let graphs: Vec<Graph> = level
            .iter()
            .map(|s| from_graph6(s))
            .collect::<Result<_>>()?;
        let hits: Vec<bool> = graphs.par_iter().map(&arrows).collect::<Result<_>>()?;
        let members: Vec<Graph> = graphs
            .into_iter()
            .zip(hits)
            .filter(|(_, h)| *h)
            .map(|(g, _)| g)
            .collect();
        if members.is_empty() {
            cert.exhausted_orders.push(order);
            continue;
        }
        cert.value = Some(order);
        cert.lower_bound = order;
        cert.witness = members.first().cloned();
        cert.minimal_witnesses = members;
        break;
    }
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessProperties {
    pub graph6: String,
    pub order: usize,
    pub chromatic_number: usize,
    pub clique_number: usize,
    /// all-2 patterns: deleting any vertex lowers `chi`; otherwise: no vertex-deleted subgraph arrows
    pub critical: bool,
    /// `cl = q - 1`, checked for all-2 patterns with `q < r + 3`
    pub clique_is_q_minus_1: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalGraphReport {
    pub witnesses: Vec<WitnessProperties>,
    pub violations: Vec<String>,
}

/// Checks criticality and the clique number of every minimal witness.
pub fn minimal_graph_properties(cert: &MinimalityCertificate) -> Result<MinimalGraphReport> {
    if cert.minimal_witnesses.is_empty() {
        return Err(Error::Precondition("certificate has no witness".into()));
    }
    let r = cert.pattern.len();
    let all2 = r > 0 && cert.pattern.iter().all(|&x| x == 2);
    let mut report = MinimalGraphReport {
        witnesses: Vec::new(),
        violations: Vec::new(),
    };
    for g in &cert.minimal_witnesses {
        let chi = chromatic_number(g);
        let cl = clique_number(g);
        let g6 = to_graph6(g);
        let critical = if all2 {
            is_vertex_critical(g)?
        } else {
            let mut ok = true;
            for v in 0..g.order() {
                let mut x = VertexSet::new();
                x.insert(v);
                ok &= !vertex_arrows(&g.delete_vertices(&x)?, &cert.pattern)?.arrows;
            }
            ok
        };
        let clique_is_q_minus_1 = (all2 && cert.q < r + 3).then_some(cl + 1 == cert.q);
        if !critical {
            report.violations.push(format!("{g6}: not critical"));
        }
        if all2 && chi != r + 1 {
            report
                .violations
                .push(format!("{g6}: chi = {chi}, expected {}", r + 1));
        }
        if clique_is_q_minus_1 == Some(false) {
            report
                .violations
                .push(format!("{g6}: cl = {cl}, expected {}", cert.q - 1));
        }
        report.witnesses.push(WitnessProperties {
            graph6: g6,
            order: g.order(),
            chromatic_number: chi,
            clique_number: cl,
            critical,
            clique_is_q_minus_1,
        });
    }
    Ok(report)
}

/// Vertex-critical graphs with `|V| < 2 chi - 1` that are not separable.
pub fn gallai_violations<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for g in graphs {
        if g.order() == 0 {
            continue;
        }
        let chi = chromatic_number(g);
        if g.order() + 1 < 2 * chi && is_vertex_critical(g)? && !g.is_separable() {
            out.push(to_graph6(g));
        }
    }
    Ok(out)
}
