//! Exact vertex and edge arrowing deciders with checkable certificates.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::bounds::ramsey_number;
use crate::clique::{find_clique_in, has_clique_in};
use crate::coloring::{chromatic_number as chromatic_search, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_ORDER: usize = 64;
pub const DEFAULT_MAX_EDGES: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowOptions {
    /// vertex search refuses graphs above this order
    pub max_order: usize,
    /// edge search refuses graphs with more edges than this
    pub max_edges: usize,
}

impl Default for ArrowOptions {
    fn default() -> Self {
        ArrowOptions {
            max_order: DEFAULT_MAX_ORDER,
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustionRecord {
    pub nodes: u64,
    pub prunes: u64,
    pub complete: bool,
}

/// An edge colouring; `classes[i]` is the class (1-based) of `edges[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub order: usize,
    pub class_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub classes: Vec<usize>,
}

impl EdgeColoring {
    /// Adjacency rows of the edges in `class`.
    pub fn class_graph(&self, class: usize) -> Vec<VertexSet> {
        let mut rows = vec![VertexSet::new(); self.order];
        for (&(u, v), &c) in self.edges.iter().zip(&self.classes) {
            if c == class {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
        rows
    }

    /// Edge lists per class.
    pub fn class_edges(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (&e, &c) in self.edges.iter().zip(&self.classes) {
            out[c - 1].push(e);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArrowCertificate {
    /// class `i` (1-based) holds no clique of size `pattern[i-1]`
    VertexColoring {
        coloring: VertexColoring,
    },
    EdgeColoring {
        coloring: EdgeColoring,
    },
    Exhaustion(ExhaustionRecord),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowVerdict {
    pub arrows: bool,
    /// the normalised pattern the certificate refers to
    pub pattern: Vec<usize>,
    pub certificate: ArrowCertificate,
}

impl ArrowVerdict {
    fn exhausted(pattern: Vec<usize>, nodes: u64, prunes: u64) -> Self {
        ArrowVerdict {
            arrows: true,
            pattern,
            certificate: ArrowCertificate::Exhaustion(ExhaustionRecord {
                nodes,
                prunes,
                complete: true,
            }),
        }
    }

    /// Re-checks the certificate against `g` with a fresh clique scan.
    pub fn verify(&self, g: &Graph) -> bool {
        match (&self.certificate, self.arrows) {
            (ArrowCertificate::Exhaustion(rec), true) => rec.complete,
            (ArrowCertificate::VertexColoring { coloring }, false) => {
                coloring.order() == g.order()
                    && coloring.class_count() == self.pattern.len()
                    && self.pattern.iter().enumerate().all(|(i, &a)| {
                        find_clique_in(g.rows(), coloring.class_set(i + 1), a).is_none()
                    })
            }
            (ArrowCertificate::EdgeColoring { coloring }, false) => {
                let mut sorted = coloring.edges.clone();
                sorted.sort_unstable();
                coloring.order == g.order()
                    && coloring.class_count == self.pattern.len()
                    && coloring.classes.len() == coloring.edges.len()
                    && coloring
                        .classes
                        .iter()
                        .all(|&c| (1..=coloring.class_count).contains(&c))
                    && sorted == g.edges()
                    && self.pattern.iter().enumerate().all(|(i, &a)| {
                        let rows = coloring.class_graph(i + 1);
                        find_clique_in(&rows, VertexSet::full(g.order()), a).is_none()
                    })
            }
            _ => false,
        }
    }
}

/// Drops entries equal to 1 and sorts descending.
pub fn normalize_pattern(a: &[usize]) -> Result<Vec<usize>> {
    if a.contains(&0) {
        return Err(Error::Domain("pattern entries must be at least 1".into()));
    }
    let mut out: Vec<usize> = a.iter().copied().filter(|&x| x != 1).collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    Ok(out)
}

struct VertexSearch<'a> {
    rows: &'a [VertexSet],
    pattern: &'a [usize],
    order: Vec<usize>,
    classes: Vec<VertexSet>,
    nodes: u64,
    prunes: u64,
}

impl VertexSearch<'_> {
    fn feasible(&self, v: usize, i: usize) -> bool {
        let inside = self.classes[i].intersection(&self.rows[v]);
        !has_clique_in(self.rows, inside, self.pattern[i] - 1)
    }

    fn rec(&mut self, idx: usize) -> bool {
        self.nodes += 1;
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        let mut placed = false;
        for i in 0..self.pattern.len() {
            // classes with equal targets are interchangeable: open only the first empty one
            if self.classes[i].is_empty()
                && i > 0
                && self.pattern[i - 1] == self.pattern[i]
                && self.classes[i - 1].is_empty()
            {
                continue;
            }
            if !self.feasible(v, i) {
                continue;
            }
            placed = true;
            self.classes[i].insert(v);
            if self.rec(idx + 1) {
                return true;
            }
            self.classes[i].remove(v);
        }
        if !placed {
            self.prunes += 1;
        }
        false
    }
}

/// Decides `g -> (a_1, .., a_r)` on vertices by backtracking.
pub fn vertex_arrows(g: &Graph, a: &[usize]) -> Result<ArrowVerdict> {
    vertex_arrows_with(g, a, &ArrowOptions::default())
}

pub fn vertex_arrows_with(g: &Graph, a: &[usize], opts: &ArrowOptions) -> Result<ArrowVerdict> {
    let pattern = normalize_pattern(a)?;
    let n = g.order();
    if n > opts.max_order {
        return Err(Error::Capacity(format!(
            "vertex arrowing refused above order {} (got {n})",
            opts.max_order
        )));
    }
    if pattern.is_empty() {
        return Ok(if n == 0 {
            ArrowVerdict {
                arrows: false,
                pattern,
                certificate: ArrowCertificate::VertexColoring {
                    coloring: VertexColoring::new(Vec::new(), 0)?,
                },
            }
        } else {
            ArrowVerdict::exhausted(pattern, 0, 0)
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut s = VertexSearch {
        rows: g.rows(),
        pattern: &pattern,
        order,
        classes: vec![VertexSet::new(); pattern.len()],
        nodes: 0,
        prunes: 0,
    };
    if s.rec(0) {
        let mut assignment = vec![0; n];
        for (i, class) in s.classes.iter().enumerate() {
            for v in class.iter() {
                assignment[v] = i + 1;
            }
        }
        let coloring = VertexColoring::new(assignment, pattern.len())?;
        Ok(ArrowVerdict {
            arrows: false,
            pattern,
            certificate: ArrowCertificate::VertexColoring { coloring },
        })
    } else {
        let (nodes, prunes) = (s.nodes, s.prunes);
        Ok(ArrowVerdict::exhausted(pattern, nodes, prunes))
    }
}

/// `g -> (2_r)` iff `chi(g) >= r + 1`.
pub fn vertex_arrows_all2(g: &Graph, r: usize) -> Result<ArrowVerdict> {
    if r == 0 {
        return Err(Error::Domain("r must be at least 1".into()));
    }
    let res = chromatic_search(g);
    let pattern = vec![2; r];
    if res.chromatic_number > r {
        return Ok(ArrowVerdict::exhausted(pattern, res.nodes, 0));
    }
    let coloring = VertexColoring::new(res.coloring.assignment().to_vec(), r)?;
    Ok(ArrowVerdict {
        arrows: false,
        pattern,
        certificate: ArrowCertificate::VertexColoring { coloring },
    })
}

struct EdgeSearch<'a> {
    pattern: &'a [usize],
    edges: Vec<(usize, usize)>,
    rows: Vec<Vec<VertexSet>>,
    used: Vec<usize>,
    classes: Vec<usize>,
    nodes: u64,
    prunes: u64,
}

impl EdgeSearch<'_> {
    fn feasible(&self, u: usize, v: usize, i: usize) -> bool {
        let rows = &self.rows[i];
        let common = rows[u].intersection(&rows[v]);
        !has_clique_in(rows, common, self.pattern[i] - 2)
    }

    fn rec(&mut self, idx: usize) -> bool {
        self.nodes += 1;
        if idx == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[idx];
        let mut placed = false;
        for i in 0..self.pattern.len() {
            if self.used[i] == 0
                && i > 0
                && self.pattern[i - 1] == self.pattern[i]
                && self.used[i - 1] == 0
            {
                continue;
            }
            if !self.feasible(u, v, i) {
                continue;
            }
            placed = true;
            self.rows[i][u].insert(v);
            self.rows[i][v].insert(u);
            self.used[i] += 1;
            self.classes[idx] = i + 1;
            if self.rec(idx + 1) {
                return true;
            }
            self.rows[i][u].remove(v);
            self.rows[i][v].remove(u);
            self.used[i] -= 1;
        }
        if !placed {
            self.prunes += 1;
        }
        false
    }
}

/// Decides `g -> (a_1, .., a_r)` on edges by backtracking over edge classes.
pub fn edge_arrows(g: &Graph, a: &[usize]) -> Result<ArrowVerdict> {
    edge_arrows_with(g, a, &ArrowOptions::default())
}

pub fn edge_arrows_with(g: &Graph, a: &[usize], opts: &ArrowOptions) -> Result<ArrowVerdict> {
    if a.is_empty() || a.contains(&0) {
        return Err(Error::Domain(
            "edge patterns need at least one entry, all >= 1".into(),
        ));
    }
    if a.contains(&1) {
        return Ok(ArrowVerdict::exhausted(a.to_vec(), 0, 0));
    }
    let pattern = normalize_pattern(a)?;
    let edges = g.edges();
    if edges.len() > opts.max_edges {
        return Err(Error::Capacity(format!(
            "edge arrowing refused above {} edges (got {})",
            opts.max_edges,
            edges.len()
        )));
    }
    let n = g.order();
    let m = edges.len();
    let mut s = EdgeSearch {
        pattern: &pattern,
        edges,
        rows: vec![vec![VertexSet::new(); n]; pattern.len()],
        used: vec![0; pattern.len()],
        classes: vec![0; m],
        nodes: 0,
        prunes: 0,
    };
    if s.rec(0) {
        let coloring = EdgeColoring {
            order: n,
            class_count: pattern.len(),
            edges: s.edges,
            classes: s.classes,
        };
        Ok(ArrowVerdict {
            arrows: false,
            pattern,
            certificate: ArrowCertificate::EdgeColoring { coloring },
        })
    } else {
        let (nodes, prunes) = (s.nodes, s.prunes);
        Ok(ArrowVerdict::exhausted(pattern, nodes, prunes))
    }
}

/// Necessary condition for edge arrowing: `chi(g) >= R(a_1, .., a_r)`.
pub fn lin_chromatic_check(g: &Graph, a: &[usize]) -> Result<bool> {
    let r = ramsey_number(a)?;
    if !r.is_exact() {
        return Err(Error::Domain(format!("R{a:?} is not known exactly")));
    }
    Ok(crate::invariants::chromatic_number(g) >= r.lower)
}

/// Smallest order `n <= n_max` of a `K_q`-free graph arrowing `a`, with a witness.
pub fn folkman_value_search(a: &[usize], q: usize, n_max: usize) -> Result<Option<(usize, Graph)>> {
    let cert = crate::enumeration::certify_folkman_value(a, q, n_max)?;
    Ok(cert.value.zip(cert.witness))
}
