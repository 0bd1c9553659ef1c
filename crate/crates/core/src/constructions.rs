//! Explicit witness graphs with exactly re-derived invariants.

use serde::{Deserialize, Serialize};

use crate::bounds::{RamseyTable, Truth};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    chromatic_number, chromatic_number_alpha2, clique_number, independence_number,
};
use crate::miner::RamseyWitness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// `chi` and `cl` equal the claimed values
    Exact,
    /// `chi >= chromatic` and `cl <= clique`
    Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claimed {
    pub chromatic: usize,
    pub clique: usize,
    pub order: usize,
    pub kind: ClaimKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measured {
    pub chromatic: usize,
    pub clique: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionContext {
    pub name: String,
    pub r: Option<usize>,
    pub k: Option<i64>,
    pub m: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCertificate {
    pub graph: Graph,
    pub claimed: Claimed,
    pub measured: Option<Measured>,
    pub verified: bool,
    pub context: ConstructionContext,
    /// open Ramsey values the certificate relies on
    pub assumptions: Vec<String>,
}

impl ConstructionCertificate {
    fn new(graph: Graph, claimed: Claimed, context: ConstructionContext) -> Self {
        ConstructionCertificate {
            graph,
            claimed,
            measured: None,
            verified: false,
            context,
            assumptions: Vec::new(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn is_conditional(&self) -> bool {
        !self.assumptions.is_empty()
    }

    /// Recomputes `chi`, `cl` and the order with the exact solvers.
    pub fn verify(&mut self) -> bool {
        self.verify_with(chromatic_number(&self.graph))
    }

    fn verify_with(&mut self, chromatic: usize) -> bool {
        let m = Measured {
            chromatic,
            clique: clique_number(&self.graph),
            order: self.graph.order(),
        };
        let c = self.claimed;
        self.verified = m.order == c.order
            && match c.kind {
                ClaimKind::Exact => m.chromatic == c.chromatic && m.clique == c.clique,
                ClaimKind::Bounds => m.chromatic >= c.chromatic && m.clique <= c.clique,
            };
        self.measured = Some(m);
        self.verified
    }

    pub fn graph6(&self) -> String {
        crate::graph6::to_graph6(&self.graph)
    }
}

fn context(name: &str, r: usize) -> ConstructionContext {
    ConstructionContext {
        name: name.into(),
        r: Some(r),
        k: None,
        m: None,
    }
}

fn exact(chromatic: usize, clique: usize, order: usize) -> Claimed {
    Claimed {
        chromatic,
        clique,
        order,
        kind: ClaimKind::Exact,
    }
}

fn pentagons(count: usize) -> Result<Graph> {
    let c5 = Graph::cycle(5)?;
    let mut g = Graph::empty(0)?;
    for _ in 0..count {
        g = g.join(&c5)?;
    }
    Ok(g)
}

/// `K_{r-s} + C_5 + .. + C_5` with `pentagons` copies; `s = 3 * pentagons - 1`.
fn pentagon_family(name: &str, r: usize, copies: usize) -> Result<ConstructionCertificate> {
    let shift = 3 * copies - 1;
    if r < shift {
        return Err(Error::Precondition(format!(
            "{name} needs r >= {shift}, got {r}"
        )));
    }
    let graph = Graph::complete(r - shift)?.join(&pentagons(copies)?)?;
    let mut cert = ConstructionCertificate::new(
        graph,
        exact(r + 1, r + 1 - copies, r + 2 * copies + 1),
        context(name, r),
    );
    cert.verify();
    Ok(cert)
}

/// `K_{r-2} + C_5`: `chi = r+1`, `cl = r`, order `r+3`.
pub fn dirac_witness(r: usize) -> Result<ConstructionCertificate> {
    pentagon_family("dirac", r, 1)
}

/// `K_{r-5} + C_5 + C_5`: `chi = r+1`, `cl = r-1`, order `r+5`.
pub fn double_c5_witness(r: usize) -> Result<ConstructionCertificate> {
    pentagon_family("double-c5", r, 2)
}

/// `K_{r-8} + C_5 + C_5 + C_5`: `chi = r+1`, `cl = r-2`, order `r+7`.
pub fn triple_c5_witness(r: usize) -> Result<ConstructionCertificate> {
    pentagon_family("triple-c5", r, 3)
}

/// Mycielskian: vertices `0..n` copy `g`, `n..2n` are shadows with
/// `N(u') = N(u)`, and `2n` is adjacent to every shadow.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("mycielskian of the empty graph".into()));
    }
    let mut edges = g.edges();
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    edges.extend((0..n).map(|u| (n + u, 2 * n)));
    Graph::from_edges(2 * n + 1, &edges)
}

/// Mycielskian of `C_5`: 11 vertices, `chi = 4`, `cl = 2`.
pub fn grotzsch_witness() -> Result<ConstructionCertificate> {
    let graph = mycielskian(&Graph::cycle(5)?)?;
    let mut cert = ConstructionCertificate::new(
        graph,
        exact(4, 2, 11),
        ConstructionContext {
            name: "grotzsch".into(),
            r: Some(3),
            k: None,
            m: None,
        },
    );
    cert.verify();
    Ok(cert)
}

/// `K_{r-m+1} + P` for a `(m-k, 3)`-graph `P` on `2m-1` vertices:
/// `chi >= r+1`, `cl <= r-k`, order `r+m`.
pub fn lemma23_witness(
    m: usize,
    k: i64,
    r: usize,
    p: &RamseyWitness,
) -> Result<ConstructionCertificate> {
    if k < -1 || (m as i64) < k + 3 {
        return Err(Error::Precondition(format!(
            "need m >= k + 3 and k >= -1 (m={m}, k={k})"
        )));
    }
    if r + 1 < m {
        return Err(Error::Precondition(format!(
            "need r >= m - 1 (r={r}, m={m})"
        )));
    }
    let pk = (m as i64 - k) as usize;
    let mut assumptions = Vec::new();
    match RamseyTable::standard().below(2 * m - 1, pk) {
        Truth::True => {}
        Truth::False => {
            return Err(Error::Precondition(format!(
                "2m-1 = {} is not below R({pk},3)",
                2 * m - 1
            )));
        }
        Truth::Unknown => assumptions.push(format!("R({pk},3) > {}", 2 * m - 1)),
    }
    let pg = &p.graph;
    if pg.order() != 2 * m - 1 {
        return Err(Error::Precondition(format!(
            "P has order {}, need {}",
            pg.order(),
            2 * m - 1
        )));
    }
    if clique_number(pg) > pk - 1 || independence_number(pg) > 2 {
        return Err(Error::Verification(format!("P is not a ({pk},3)-graph")));
    }
    let graph = Graph::complete(r + 1 - m)?.join(pg)?;
    let mut cert = ConstructionCertificate::new(
        graph,
        Claimed {
            chromatic: r + 1,
            clique: (r as i64 - k) as usize,
            order: r + m,
            kind: ClaimKind::Bounds,
        },
        ConstructionContext {
            name: "ramsey-join".into(),
            r: Some(r),
            k: Some(k),
            m: Some(m),
        },
    );
    cert.assumptions = assumptions;
    // alpha(P) <= 2 makes chi(P) a matching problem; the join adds r-m+1
    let chi = r + 1 - m + chromatic_number_alpha2(pg)?;
    cert.verify_with(chi);
    Ok(cert)
}
