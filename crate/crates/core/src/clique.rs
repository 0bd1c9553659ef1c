//! Clique search primitives over bitset rows.
//!
//! `rows[v]` is the neighbourhood of `v`. All routines restrict themselves to
//! a candidate set, so they work equally on induced subgraphs and on colour
//! classes of a partial colouring.

use crate::bitset::VertexSet;

/// Greedy sequential colouring of `cand` used as an upper bound: returns
/// vertices in colouring order together with the running colour count.
fn colour_sort(rows: &[VertexSet], cand: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    let mut uncoloured = cand;
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured;
        while let Some(v) = q.first() {
            q.remove(v);
            q = q.difference(&rows[v]);
            uncoloured.remove(v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

struct MaxClique<'a> {
    rows: &'a [VertexSet],
    /// size a new clique must beat
    floor: usize,
    best: Option<Vec<usize>>,
    /// stop as soon as a clique of this size is found
    target: usize,
}

impl MaxClique<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut cand: VertexSet) {
        let (order, bounds) = colour_sort(self.rows, cand);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= self.floor || self.floor >= self.target {
                return;
            }
            let v = order[i];
            current.push(v);
            let next = cand.intersection(&self.rows[v]);
            if next.is_empty() || current.len() >= self.target {
                if current.len() > self.floor {
                    self.floor = current.len();
                    self.best = Some(current.clone());
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.remove(v);
        }
    }
}

/// A maximum clique inside `cand`, members in ascending order.
pub fn max_clique_in(rows: &[VertexSet], cand: VertexSet) -> Vec<usize> {
    let mut search = MaxClique {
        rows,
        floor: 0,
        best: None,
        target: usize::MAX,
    };
    search.expand(&mut Vec::new(), cand);
    let mut best = search.best.unwrap_or_default();
    best.sort_unstable();
    best
}

/// Some clique of size `k` inside `cand`, if one exists.
pub fn find_clique_in(rows: &[VertexSet], cand: VertexSet, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if cand.len() < k {
        return None;
    }
    let mut search = MaxClique {
        rows,
        floor: k - 1,
        best: None,
        target: k,
    };
    search.expand(&mut Vec::new(), cand);
    search.best.map(|mut c| {
        c.sort_unstable();
        c
    })
}

/// Whether `cand` contains a clique of size `k`.
pub fn has_clique_in(rows: &[VertexSet], cand: VertexSet, k: usize) -> bool {
    find_clique_in(rows, cand, k).is_some()
}

/// Number of `k`-cliques inside `cand`, stopping once the count reaches `cap`.
pub fn count_cliques_in(rows: &[VertexSet], cand: VertexSet, k: usize, cap: u64) -> u64 {
    match k {
        0 => 1,
        1 => (cand.len() as u64).min(cap),
        _ => {
            if cand.len() < k {
                return 0;
            }
            let mut total = 0u64;
            let mut rest = cand;
            while let Some(v) = rest.first() {
                rest.remove(v);
                if rest.len() < k - 1 {
                    break;
                }
                let next = rest.intersection(&rows[v]);
                if k == 2 {
                    total += next.len() as u64;
                } else if next.len() >= k - 1 {
                    total += count_cliques_in(rows, next, k - 1, cap - total.min(cap));
                }
                if total >= cap {
                    return cap;
                }
            }
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn max_clique_small() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(max_clique_in(k5.rows(), k5.vertices()), vec![0, 1, 2, 3, 4]);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(max_clique_in(c5.rows(), c5.vertices()).len(), 2);
        let e = Graph::empty(0).unwrap();
        assert!(max_clique_in(e.rows(), e.vertices()).is_empty());
    }

    #[test]
    fn find_and_count() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(count_cliques_in(k5.rows(), k5.vertices(), 3, u64::MAX), 10);
        assert_eq!(count_cliques_in(k5.rows(), k5.vertices(), 3, 4), 4);
        assert_eq!(count_cliques_in(k5.rows(), k5.vertices(), 6, u64::MAX), 0);
        assert_eq!(count_cliques_in(k5.rows(), k5.vertices(), 2, u64::MAX), 10);
        let c5 = Graph::cycle(5).unwrap();
        assert!(find_clique_in(c5.rows(), c5.vertices(), 3).is_none());
        assert_eq!(
            find_clique_in(c5.rows(), c5.vertices(), 2).unwrap().len(),
            2
        );
        assert_eq!(find_clique_in(c5.rows(), c5.vertices(), 0), Some(vec![]));
        let w = find_clique_in(k5.rows(), VertexSet::from_slice(&[1, 3, 4]), 3).unwrap();
        assert_eq!(w, vec![1, 3, 4]);
    }
}
