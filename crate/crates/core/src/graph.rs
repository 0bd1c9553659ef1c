//! Immutable simple undirected graphs on at most [`CAPACITY`] vertices.
//!
//! Every builder returns a fresh value; nothing here mutates a graph in place.
//! Adjacency is a row of bitsets, so pair queries and neighborhood
//! intersections are word operations.

use crate::bitset::{VertexSet, CAPACITY};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// A split of a separable graph into two nonempty sides.
///
/// `join(left, right)` equals the host graph relabelled so that
/// `left_vertices` come first and `right_vertices` after, each in
/// ascending order.
#[derive(Clone, Debug)]
pub struct Separation {
    pub left: Graph,
    pub right: Graph,
    pub left_vertices: Vec<usize>,
    pub right_vertices: Vec<usize>,
}

fn check_order(n: usize) -> Result<()> {
    if n > CAPACITY {
        return Err(Error::Capacity(format!(
            "order {n} exceeds {CAPACITY} vertices"
        )));
    }
    Ok(())
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if !row.is_subset(&all) || row.contains(v) {
                return Err(Error::Domain(format!(
                    "row {v} is not a valid neighbourhood"
                )));
            }
            for u in row {
                if !rows[u].contains(v) {
                    return Err(Error::Domain(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(Self { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        Self {
            n: rows.len(),
            adj: rows,
        }
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut row = all;
                row.remove(v);
                row
            })
            .collect();
        Ok(Self { n, adj })
    }

    /// `C_n`, vertices joined `i ~ i+1 (mod n)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::Domain(format!(
                "vertex {v} out of range for order {}",
                self.n
            ))),
            _ => Ok(()),
        }
    }

    pub fn complement(&self) -> Self {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut row = all.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Self { n: self.n, adj }
    }

    /// The join `self + other`: disjoint union plus every cross pair.
    /// Vertices of `self` keep their indices; vertex `i` of `other` becomes `self.order() + i`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = Vec::with_capacity(n);
        let right: VertexSet = (self.n..n).collect();
        for row in &self.adj {
            adj.push(row.union(&right));
        }
        let left = self.vertices();
        for row in &other.adj {
            let shifted: VertexSet = row.iter().map(|u| u + self.n).collect();
            adj.push(shifted.union(&left));
        }
        Ok(Self { n, adj })
    }

    /// Subgraph induced by `vertices`, with vertex `vertices[i]` relabelled `i`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::Domain(format!(
                    "vertex {v} out of range for order {}",
                    self.n
                )));
            }
            if pos[v] != usize::MAX {
                return Err(Error::Domain(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&u| pos[u] != usize::MAX)
                    .map(|u| pos[u])
                    .collect()
            })
            .collect();
        Ok(Self {
            n: vertices.len(),
            adj,
        })
    }

    /// `G - S`: removes the members of `s`; survivors keep their relative order.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Self> {
        self.check_set(s)?;
        let keep: Vec<usize> = self.vertices().difference(s).to_vec();
        self.induced(&keep)
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| !self.adj[v].intersects(s)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| {
            let mut rest = *s;
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        }))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new();
            comp.insert(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in &frontier {
                    next = next.union(&self.adj[v]);
                }
                frontier = next.difference(&comp);
                comp = comp.union(&frontier);
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Splits `G = G1 + G2` with both sides nonempty, if possible.
    ///
    /// A split exists iff the complement is disconnected. The right side is
    /// the complement component with the largest minimum vertex (so it is
    /// itself nonseparable); the left side is everything else.
    pub fn separability_decompose(&self) -> Option<Separation> {
        let comps = self.complement().components();
        if comps.len() < 2 {
            return None;
        }
        let right_set = comps[comps.len() - 1];
        let right_vertices = right_set.to_vec();
        let left_vertices = self.vertices().difference(&right_set).to_vec();
        Some(Separation {
            left: self.induced(&left_vertices).expect("valid vertices"),
            right: self.induced(&right_vertices).expect("valid vertices"),
            left_vertices,
            right_vertices,
        })
    }

    pub fn is_separable(&self) -> bool {
        self.separability_decompose().is_some()
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.n {
            return Err(Error::Domain(
                "permutation length differs from order".into(),
            ));
        }
        self.induced(order)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", crate::graph6::to_graph6(self))
    }
}
