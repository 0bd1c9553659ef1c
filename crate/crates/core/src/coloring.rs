//! Vertex colourings and the exact chromatic-number search.
//!
//! The search is DSATUR branch and bound: the uncoloured vertex with the
//! most distinct neighbour colours is branched on first (ties: more
//! uncoloured neighbours, then lower index), a maximum clique is precoloured
//! `1..=cl`, and a new colour may be opened at most once per branch.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::clique::max_clique_in;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An assignment of every vertex to one of the classes `1..=class_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    assignment: Vec<usize>,
    class_count: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringRecord {
    order: usize,
    class_count: usize,
    classes: Vec<Vec<usize>>,
}

impl VertexColoring {
    pub fn new(assignment: Vec<usize>, class_count: usize) -> Result<Self> {
        if let Some((v, &c)) = assignment
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > class_count)
        {
            return Err(Error::Domain(format!(
                "vertex {v} has class {c} outside 1..={class_count}"
            )));
        }
        Ok(Self {
            assignment,
            class_count,
        })
    }

    pub fn from_classes(order: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut assignment = vec![0; order];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= order || assignment[v] != 0 {
                    return Err(Error::Domain(format!(
                        "vertex {v} missing from range or assigned twice"
                    )));
                }
                assignment[v] = i + 1;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == 0) {
            return Err(Error::Domain(format!("vertex {v} unassigned")));
        }
        Ok(Self {
            assignment,
            class_count: classes.len(),
        })
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Class of `v`, in `1..=class_count`.
    pub fn class_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_set(&self, class: usize) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == class)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }

    /// Every class is an independent set of `g`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.order() == g.order()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }
}

impl Serialize for VertexColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringRecord {
            order: self.order(),
            class_count: self.class_count,
            classes: self.classes(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = ColoringRecord::deserialize(d)?;
        let c = Self::from_classes(rec.order, &rec.classes).map_err(serde::de::Error::custom)?;
        if c.class_count != rec.class_count {
            return Err(serde::de::Error::custom(
                "class_count does not match classes",
            ));
        }
        Ok(c)
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    colour: Vec<usize>,
    /// `nbr_count[v][c]`: neighbours of `v` currently coloured `c`
    nbr_count: Vec<Vec<u32>>,
    sat: Vec<usize>,
    uncoloured: VertexSet,
    lower: usize,
    upper: usize,
    best: Option<Vec<usize>>,
    stop_at_first: bool,
    nodes: u64,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, upper: usize) -> Self {
        let n = g.order();
        Self {
            g,
            colour: vec![0; n],
            nbr_count: vec![vec![0; upper + 2]; n],
            sat: vec![0; n],
            uncoloured: g.vertices(),
            lower: 0,
            upper,
            best: None,
            stop_at_first: false,
            nodes: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured.remove(v);
        for u in self.g.neighbors(v) {
            let slot = &mut self.nbr_count[u][c];
            if *slot == 0 {
                self.sat[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = 0;
        self.uncoloured.insert(v);
        for u in self.g.neighbors(v) {
            let slot = &mut self.nbr_count[u][c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn select(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in &self.uncoloured {
            let k = (
                self.sat[v],
                self.g.neighbors(v).intersection_len(&self.uncoloured),
            );
            if best == usize::MAX || k > key {
                best = v;
                key = k;
            }
        }
        best
    }

    fn done(&self) -> bool {
        self.upper <= self.lower || (self.stop_at_first && self.best.is_some())
    }

    fn search(&mut self, used: usize) {
        self.nodes += 1;
        if self.uncoloured.is_empty() {
            if used < self.upper {
                self.upper = used;
                self.best = Some(self.colour.clone());
            }
            return;
        }
        let v = self.select();
        let limit = (used + 1).min(self.upper - 1);
        for c in 1..=limit {
            if self.nbr_count[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            self.search(used.max(c));
            self.unassign(v);
            if self.done() {
                return;
            }
        }
    }
}

/// Greedy DSATUR colouring; an upper bound for the exact search.
pub fn dsatur_greedy(g: &Graph) -> VertexColoring {
    let n = g.order();
    let mut d = Dsatur::new(g, n + 1);
    let mut used = 0;
    while !d.uncoloured.is_empty() {
        let v = d.select();
        let c = (1..=used + 1)
            .find(|&c| d.nbr_count[v][c] == 0)
            .expect("a free colour exists");
        d.assign(v, c);
        used = used.max(c);
    }
    VertexColoring {
        assignment: d.colour,
        class_count: used,
    }
}

/// Result of an exact chromatic computation.
#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chromatic_number: usize,
    pub coloring: VertexColoring,
    /// branch-and-bound nodes visited
    pub nodes: u64,
}

fn precolour_clique(d: &mut Dsatur<'_>, clique: &[usize]) {
    for (i, &v) in clique.iter().enumerate() {
        d.assign(v, i + 1);
    }
}

/// Exact chromatic number with an optimal colouring.
///
/// `lower_hint` may raise the starting lower bound; it must itself be a
/// valid lower bound (for example `ceil(n / alpha)`).
pub fn chromatic_number_with_hint(g: &Graph, lower_hint: usize) -> ChromaticResult {
    let n = g.order();
    if n == 0 {
        return ChromaticResult {
            chromatic_number: 0,
            coloring: VertexColoring {
                assignment: vec![],
                class_count: 0,
            },
            nodes: 0,
        };
    }
    let clique = max_clique_in(g.rows(), g.vertices());
    let greedy = dsatur_greedy(g);
    let lower = clique.len().max(lower_hint);
    if greedy.class_count() <= lower {
        return ChromaticResult {
            chromatic_number: greedy.class_count(),
            coloring: greedy,
            nodes: 0,
        };
    }
    let mut d = Dsatur::new(g, greedy.class_count());
    d.lower = lower;
    precolour_clique(&mut d, &clique);
    d.search(clique.len());
    let nodes = d.nodes;
    let coloring = match d.best {
        Some(best) => VertexColoring {
            assignment: best,
            class_count: d.upper,
        },
        None => greedy,
    };
    ChromaticResult {
        chromatic_number: coloring.class_count(),
        coloring,
        nodes,
    }
}

pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    chromatic_number_with_hint(g, 0)
}

/// A proper colouring with at most `k` classes, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<VertexColoring> {
    let n = g.order();
    if n == 0 {
        return Some(VertexColoring {
            assignment: vec![],
            class_count: 0,
        });
    }
    if k == 0 {
        return None;
    }
    let greedy = dsatur_greedy(g);
    if greedy.class_count() <= k {
        return Some(greedy);
    }
    let clique = max_clique_in(g.rows(), g.vertices());
    if clique.len() > k {
        return None;
    }
    let mut d = Dsatur::new(g, k + 1);
    d.stop_at_first = true;
    precolour_clique(&mut d, &clique);
    d.search(clique.len());
    d.best.map(|assignment| {
        let class_count = assignment.iter().copied().max().unwrap_or(0);
        VertexColoring {
            assignment,
            class_count,
        }
    })
}
