//! Canonical labelling by equitable refinement and individualisation.
//!
//! Leaves of the search tree are compared by their upper-triangle adjacency
//! bitstring; the largest one defines the canonical form. Two leaves with
//! equal bitstrings give an automorphism, and automorphisms fixing the
//! current path prune sibling branches.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Result of canonical labelling.
#[derive(Clone, Debug)]
pub struct Canon {
    /// canonical position `i` holds original vertex `labelling[i]`
    pub labelling: Vec<usize>,
    pub graph: Graph,
    /// automorphisms found during the search, as vertex maps
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    /// Canonical position of each original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.labelling.len()];
        for (i, &v) in self.labelling.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Orbit representatives (smallest member) under the found generators.
    /// Vertices with equal representatives are automorphic; the converse
    /// need not hold.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.labelling.len();
        let mut uf: Vec<usize> = (0..n).collect();
        for gen in &self.generators {
            for (v, &w) in gen.iter().enumerate() {
                union(&mut uf, v, w);
            }
        }
        (0..n).map(|v| find(&mut uf, v)).collect()
    }
}

fn find(uf: &mut [usize], mut v: usize) -> usize {
    while uf[v] != v {
        uf[v] = uf[uf[v]];
        v = uf[v];
    }
    v
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        uf[ra.max(rb)] = ra.min(rb);
    }
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    rows: &'a [VertexSet],
    n: usize,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn refine(&self, cells: &mut Cells) {
        loop {
            let sets: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
            let mut next: Cells = Vec::with_capacity(self.n);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u16>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        (
                            sets.iter()
                                .map(|s| self.rows[v].intersection_len(s) as u16)
                                .collect(),
                            v,
                        )
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn certificate(&self, perm: &[usize]) -> Vec<u64> {
        let bits = self.n * self.n.saturating_sub(1) / 2;
        let mut out = vec![0u64; bits.div_ceil(64).max(1)];
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[perm[i]].contains(perm[j]) {
                    out[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        out
    }

    fn record_auto(&mut self, from: &[usize], to: &[usize]) {
        let mut map = vec![0; self.n];
        for (i, &v) in from.iter().enumerate() {
            map[v] = to[i];
        }
        if map.iter().enumerate().any(|(v, &w)| v != w) {
            self.autos.push(map);
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = self.certificate(&perm);
        if let Some((fc, fp)) = &self.first {
            if *fc == cert {
                let fp = fp.clone();
                self.record_auto(&fp, &perm);
                return;
            }
        } else {
            self.first = Some((cert.clone(), perm.clone()));
        }
        match &self.best {
            Some((bc, bp)) if *bc == cert => {
                let bp = bp.clone();
                self.record_auto(&bp, &perm);
            }
            Some((bc, _)) if *bc > cert => {}
            _ => self.best = Some((cert, perm)),
        }
    }

    fn search(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() && self.same_orbit_as_tried(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    fn same_orbit_as_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let mut uf: Vec<usize> = (0..self.n).collect();
        let mut any = false;
        for a in self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
        {
            any = true;
            for (x, &y) in a.iter().enumerate() {
                union(&mut uf, x, y);
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut uf, v);
        tried.iter().any(|&t| find(&mut uf, t) == rv)
    }
}

/// Canonical labelling of `g`.
pub fn canonical_form(g: &Graph) -> Canon {
    let n = g.order();
    if n == 0 {
        return Canon {
            labelling: Vec::new(),
            graph: g.clone(),
            generators: Vec::new(),
        };
    }
    let mut s = Search {
        rows: g.rows(),
        n,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    s.search(vec![(0..n).collect()], &mut Vec::new());
    let (_, labelling) = s.best.expect("search reaches a leaf");
    let graph = g.permuted(&labelling).expect("labelling is a permutation");
    Canon {
        labelling,
        graph,
        generators: s.autos,
    }
}

/// graph6 of the canonical form; equal strings iff isomorphic.
pub fn canonical_graph6(g: &Graph) -> String {
    crate::graph6::to_graph6(&canonical_form(g).graph)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_graph6(g) == canonical_graph6(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycles_agree() {
        let c = Graph::cycle(7).unwrap();
        let p = c.permuted(&[3, 0, 6, 2, 5, 1, 4]).unwrap();
        assert_eq!(canonical_graph6(&c), canonical_graph6(&p));
        let path = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert!(!are_isomorphic(&c, &path));
    }

    #[test]
    fn automorphisms_are_valid() {
        let g = crate::constructions::grotzsch_witness().unwrap().graph;
        let canon = canonical_form(&g);
        for a in &canon.generators {
            for (u, v) in g.edges() {
                assert!(g.adjacent(a[u], a[v]));
            }
        }
        let orbits = canon.orbits();
        assert_eq!(orbits.iter().filter(|&&r| r == orbits[10]).count(), 1);
        assert_eq!(orbits[0], orbits[4]);
    }

    #[test]
    fn complete_and_empty() {
        for n in 0..9 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_form(&k).graph, k);
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e).graph, e);
        }
    }
}
