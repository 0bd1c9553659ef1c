//! Brute-force oracles that share no code with the solvers under test.
#![allow(dead_code)]

use folkman_core::Graph;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn adj_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.adjacent(u, v)).collect())
        .collect()
}

/// Least `r` such that some map `V -> {1..r}` is proper, by trying every map.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    let a = adj_matrix(g);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| a[u][v])
        .collect();
    for r in 1..=n {
        let total = (r as u64).pow(n as u32);
        let mut colour = vec![0usize; n];
        for code in 0..total {
            let mut c = code;
            for x in colour.iter_mut() {
                *x = (c % r as u64) as usize;
                c /= r as u64;
            }
            if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
                return r;
            }
        }
    }
    0
}

/// Largest vertex subset that is pairwise adjacent (`want = true`) or non-adjacent.
fn brute_homogeneous(g: &Graph, want: bool) -> usize {
    let n = g.order();
    let a = adj_matrix(g);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() > best
            && vs
                .iter()
                .tuple_combinations()
                .all(|(&u, &v)| a[u][v] == want)
        {
            best = vs.len();
        }
    }
    best
}

pub fn brute_clique(g: &Graph) -> usize {
    brute_homogeneous(g, true)
}

pub fn brute_alpha(g: &Graph) -> usize {
    brute_homogeneous(g, false)
}

/// Adjacency code of `g` relabelled by `perm`; smallest over all perms is canonical.
fn code(a: &[Vec<bool>], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | a[perm[i]][perm[j]] as u64;
        }
    }
    c
}

pub fn brute_canonical_code(g: &Graph) -> u64 {
    let a = adj_matrix(g);
    (0..g.order())
        .permutations(g.order())
        .map(|p| code(&a, &p))
        .min()
        .unwrap_or(0)
}

/// Isomorphism classes among all labelled graphs of order `n` passing `keep`.
pub fn labelled_class_count(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut classes = std::collections::HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if !keep(&g) {
            continue;
        }
        let a = adj_matrix(&g);
        classes.insert(perms.iter().map(|p| code(&a, p)).min().unwrap());
    }
    classes.len()
}

/// Isomorphism by extending a partial map vertex by vertex.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(
        a: &[Vec<bool>],
        b: &[Vec<bool>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for t in 0..b.len() {
            if used[t] || (0..i).any(|j| a[i][j] != b[t][map[j]]) {
                continue;
            }
            used[t] = true;
            map.push(t);
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[t] = false;
        }
        false
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (a, b) = (adj_matrix(g), adj_matrix(h));
    extend(&a, &b, &mut Vec::new(), &mut vec![false; h.order()])
}

/// Every `r`-partition of the vertices has class `i` containing an `a_i`-clique.
pub fn brute_vertex_arrows(g: &Graph, a: &[usize]) -> bool {
    let n = g.order();
    let r = a.len();
    if r == 0 {
        return n > 0;
    }
    let total = (r as u64).pow(n as u32);
    let sub = |vs: &[usize]| {
        Graph::from_edges(vs.len(), &{
            let mut e = Vec::new();
            for (i, &u) in vs.iter().enumerate() {
                for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                    if g.adjacent(u, v) {
                        e.push((i, j));
                    }
                }
            }
            e
        })
        .unwrap()
    };
    (0..total).all(|code| {
        let mut c = code;
        let mut classes = vec![Vec::new(); r];
        for v in 0..n {
            classes[(c % r as u64) as usize].push(v);
            c /= r as u64;
        }
        classes
            .iter()
            .zip(a)
            .any(|(cls, &ai)| brute_clique(&sub(cls)) >= ai)
    })
}
