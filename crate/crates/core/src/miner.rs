//! Local search for `(p,q)`-graphs: `cl < p` and `alpha < q`.
//!
//! The search flips one vertex pair at a time, minimising
//! `w_clique * #K_p + w_indep * #(independent q-sets)` with a tabu list and
//! plateau restarts. Each restart draws from its own ChaCha stream, so a
//! fixed seed gives the same witness regardless of how restarts are
//! scheduled across threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::bounds::{ramsey_number, RamseyTable, Truth};
use crate::clique::{count_cliques_in, has_clique_in};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{clique_number, independence_number};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Mined {
        seed: u64,
        restart: u64,
        iterations: u64,
    },
    Catalog {
        name: String,
    },
    Constructed {
        name: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyWitness {
    pub graph: Graph,
    pub p: usize,
    pub q: usize,
    pub provenance: Provenance,
    pub verified: bool,
}

impl RamseyWitness {
    /// Unverified witness; call [`verify_witness`] before trusting it.
    pub fn new(graph: Graph, p: usize, q: usize, provenance: Provenance) -> Self {
        RamseyWitness {
            graph,
            p,
            q,
            provenance,
            verified: false,
        }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Recomputes `cl` and `alpha` exactly and stores the outcome in `verified`.
pub fn verify_witness(w: &mut RamseyWitness) -> bool {
    w.verified = w.p >= 1
        && w.q >= 1
        && clique_number(&w.graph) < w.p
        && independence_number(&w.graph) < w.q;
    w.verified
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinerConfig {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub max_restarts: u64,
    pub max_flips: u64,
    pub seed: u64,
    pub w_clique: u64,
    pub w_indep: u64,
    /// flips without a new best before restarting
    pub plateau: u64,
    pub tabu_tenure: u64,
    /// per-move count cap used when ranking candidate flips
    pub rank_cap: u64,
    /// restarts evaluated together; 0 means the rayon pool size
    pub batch: usize,
}

impl MinerConfig {
    pub fn new(n: usize, p: usize, q: usize, seed: u64) -> Self {
        MinerConfig {
            n,
            p,
            q,
            max_restarts: 1000,
            max_flips: 200_000,
            seed,
            w_clique: 1,
            w_indep: 1,
            plateau: 500,
            tabu_tenure: 7,
            rank_cap: 64,
            batch: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.p < 2 || self.q < 2 {
            return Err(Error::Domain("miner needs n >= 1, p >= 2, q >= 2".into()));
        }
        if self.max_restarts == 0 || self.max_flips == 0 || self.plateau == 0 {
            return Err(Error::Domain("miner budgets must be positive".into()));
        }
        if self.w_clique == 0 || self.w_indep == 0 || self.rank_cap == 0 {
            return Err(Error::Domain(
                "objective weights and rank cap must be positive".into(),
            ));
        }
        if self.n > 128 {
            return Err(Error::Capacity(format!("miner order {} above 128", self.n)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinerStats {
    pub restarts: u64,
    pub flips: u64,
    pub best_objective: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MineOutcome {
    pub witness: Option<RamseyWitness>,
    pub stats: MinerStats,
    /// target order lies inside an open Ramsey interval
    pub conditional: bool,
}

/// Checks the target against known Ramsey values; `Ok(true)` means the
/// target is only conditionally feasible.
pub fn check_target(n: usize, p: usize, q: usize) -> Result<bool> {
    let known = if q == 3 {
        RamseyTable::standard().lookup(p).ok()
    } else if p == 3 {
        RamseyTable::standard().lookup(q).ok()
    } else {
        ramsey_number(&[p, q]).ok()
    };
    let Some(entry) = known else { return Ok(true) };
    let table_says = if n < entry.lower {
        Truth::True
    } else if n >= entry.upper {
        Truth::False
    } else {
        Truth::Unknown
    };
    match table_says {
        Truth::True => Ok(false),
        Truth::False => Err(Error::Nonexistent(format!(
            "no ({p},{q})-graph on {n} vertices: R({p},{q}) <= {}",
            entry.upper
        ))),
        Truth::Unknown => Ok(true),
    }
}

struct Search<'a> {
    cfg: &'a MinerConfig,
    n: usize,
    adj: Vec<VertexSet>,
    non: Vec<VertexSet>,
    objective: u64,
}

impl<'a> Search<'a> {
    fn new(cfg: &'a MinerConfig, adj: Vec<VertexSet>) -> Self {
        let n = cfg.n;
        let full = VertexSet::full(n);
        let non = (0..n)
            .map(|v| {
                let mut s = full.difference(&adj[v]);
                s.remove(v);
                s
            })
            .collect();
        let mut s = Search {
            cfg,
            n,
            adj,
            non,
            objective: 0,
        };
        s.objective = s.full_objective();
        s
    }

    fn full_objective(&self) -> u64 {
        let all = VertexSet::full(self.n);
        self.cfg.w_clique * count_cliques_in(&self.adj, all, self.cfg.p, u64::MAX)
            + self.cfg.w_indep * count_cliques_in(&self.non, all, self.cfg.q, u64::MAX)
    }

    /// `(bad p-cliques through the pair if adjacent, bad q-sets through it if not)`
    fn pair_counts(&self, u: usize, v: usize, cap: u64) -> (u64, u64) {
        let mut common = self.adj[u].intersection(&self.adj[v]);
        common.remove(u);
        common.remove(v);
        let mut common_non = self.non[u].intersection(&self.non[v]);
        common_non.remove(u);
        common_non.remove(v);
        (
            count_cliques_in(&self.adj, common, self.cfg.p - 2, cap),
            count_cliques_in(&self.non, common_non, self.cfg.q - 2, cap),
        )
    }

    /// Signed objective change from flipping `uv`.
    fn delta(&self, u: usize, v: usize, cap: u64) -> i64 {
        let (c, i) = self.pair_counts(u, v, cap);
        let (c, i) = (
            (self.cfg.w_clique * c) as i64,
            (self.cfg.w_indep * i) as i64,
        );
        if self.adj[u].contains(v) {
            i - c
        } else {
            c - i
        }
    }

    fn flip(&mut self, u: usize, v: usize) {
        let d = self.delta(u, v, u64::MAX);
        self.adj[u].toggle(v);
        self.adj[v].toggle(u);
        self.non[u].toggle(v);
        self.non[v].toggle(u);
        self.objective = (self.objective as i64 + d) as u64;
    }

    fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.adj.clone())
    }
}

/// Complement of a random maximal `K_q`-free graph: starts with no
/// independent `q`-set.
fn initial_rows(n: usize, q: usize, rng: &mut ChaCha8Rng) -> Vec<VertexSet> {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut h = vec![VertexSet::new(); n];
    for (u, v) in pairs {
        let common = h[u].intersection(&h[v]);
        if !has_clique_in(&h, common, q - 2) {
            h[u].insert(v);
            h[v].insert(u);
        }
    }
    let full = VertexSet::full(n);
    (0..n)
        .map(|v| {
            let mut s = full.difference(&h[v]);
            s.remove(v);
            s
        })
        .collect()
}

fn restart_rng(seed: u64, restart: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    rng
}

/// One restart; returns the graph on reaching objective zero, plus flips used and best objective seen.
fn run_restart(cfg: &MinerConfig, restart: u64) -> (Option<Graph>, u64, u64) {
    let mut rng = restart_rng(cfg.seed, restart);
    let n = cfg.n;
    let mut s = Search::new(cfg, initial_rows(n, cfg.q, &mut rng));
    let mut best = s.objective;
    if best == 0 {
        return (Some(s.graph()), 0, 0);
    }
    let mut tabu = vec![0u64; n * n];
    let mut since_best = 0u64;
    let mut ties = Vec::new();
    for step in 1..=cfg.max_flips {
        let mut best_delta = i64::MAX;
        ties.clear();
        for u in 0..n {
            for v in u + 1..n {
                let d = s.delta(u, v, cfg.rank_cap);
                let aspirated = (s.objective as i64 + d) < best as i64;
                if tabu[u * n + v] > step && !aspirated {
                    continue;
                }
                if d < best_delta {
                    best_delta = d;
                    ties.clear();
                }
                if d == best_delta {
                    ties.push((u, v));
                }
            }
        }
        let Some(&(u, v)) = ties.get(rng.random_range(0..ties.len().max(1))) else {
            break;
        };
        s.flip(u, v);
        tabu[u * n + v] = step + cfg.tabu_tenure;
        if s.objective == 0 {
            return (Some(s.graph()), step, 0);
        }
        if s.objective < best {
            best = s.objective;
            since_best = 0;
        } else {
            since_best += 1;
            if since_best >= cfg.plateau {
                return (None, step, best);
            }
        }
    }
    (None, cfg.max_flips, best)
}

/// Runs restarts in batches; the lowest successful restart index wins.
pub fn mine(cfg: &MinerConfig) -> Result<MineOutcome> {
    cfg.validate()?;
    let conditional = check_target(cfg.n, cfg.p, cfg.q)?;
    let batch = if cfg.batch == 0 {
        rayon::current_num_threads().max(1)
    } else {
        cfg.batch
    } as u64;
    let mut stats = MinerStats {
        best_objective: u64::MAX,
        ..Default::default()
    };
    let mut start = 0u64;
    while start < cfg.max_restarts {
        let end = (start + batch).min(cfg.max_restarts);
        let results: Vec<(u64, (Option<Graph>, u64, u64))> = (start..end)
            .into_par_iter()
            .map(|i| (i, run_restart(cfg, i)))
            .collect();
        for (i, (found, flips, best)) in results {
            stats.restarts += 1;
            stats.flips += flips;
            stats.best_objective = stats.best_objective.min(best);
            if let Some(graph) = found {
                let mut w = RamseyWitness::new(
                    graph,
                    cfg.p,
                    cfg.q,
                    Provenance::Mined {
                        seed: cfg.seed,
                        restart: i,
                        iterations: flips,
                    },
                );
                if !verify_witness(&mut w) {
                    return Err(Error::Verification(
                        "miner reached zero objective on a non-witness".into(),
                    ));
                }
                return Ok(MineOutcome {
                    witness: Some(w),
                    stats,
                    conditional,
                });
            }
        }
        start = end;
    }
    Ok(MineOutcome {
        witness: None,
        stats,
        conditional,
    })
}
