use std::io::Write;

use folkman_core::arrowing::{edge_arrows_with, vertex_arrows_with, ArrowOptions};
use folkman_core::bounds::{bound_table, offsets_to_csv, table_to_csv, uniform_offsets};
use folkman_core::catalog::Catalog;
use folkman_core::constructions::{
    dirac_witness, double_c5_witness, grotzsch_witness, lemma23_witness, mycielskian,
    triple_c5_witness,
};
use folkman_core::enumeration::{
    certify_folkman_value_with, minimal_graph_properties, EnumerationOptions,
};
use folkman_core::invariants::{is_vertex_critical, order_bound_check, InvariantReport};
use folkman_core::miner::{mine, verify_witness, MinerConfig, Provenance, RamseyWitness};
use folkman_core::{from_graph6, graph6::parse_lines, to_graph6, Error, Graph, Result};
use serde_json::{json, Value};

use crate::args::{ArrowKind, Command, ConstructionKind, GraphInput, TableFormat, WitnessAction};

pub enum Body {
    Json(Value),
    Text(String),
}

pub struct Outcome {
    pub body: Body,
    /// the mathematical answer is negative (does not arrow, nothing found)
    pub negative: bool,
}

fn json(value: impl serde::Serialize, negative: bool) -> Result<Outcome> {
    Ok(Outcome {
        body: Body::Json(serde_json::to_value(value)?),
        negative,
    })
}

fn read_graphs(input: &GraphInput) -> Result<Vec<Graph>> {
    match (&input.graph6, &input.graph6_file) {
        (Some(s), _) => Ok(vec![from_graph6(s)?]),
        (None, Some(path)) => parse_lines(&std::fs::read_to_string(path)?),
        (None, None) => Err(Error::Domain("give --graph6 or --graph6-file".into())),
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph> {
    let mut graphs = read_graphs(input)?;
    if graphs.len() != 1 {
        return Err(Error::Domain(format!(
            "expected one graph, found {}",
            graphs.len()
        )));
    }
    Ok(graphs.remove(0))
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::Domain(format!("--{flag} is required here")))
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Invariants { input } => invariants(input),
        Command::Arrows {
            kind,
            input,
            pattern,
            max_order,
            max_edges,
        } => {
            let g = read_graph(input)?;
            let opts = ArrowOptions {
                max_order: *max_order,
                max_edges: *max_edges,
            };
            let verdict = match kind {
                ArrowKind::Vertex => vertex_arrows_with(&g, pattern, &opts)?,
                ArrowKind::Edge => edge_arrows_with(&g, pattern, &opts)?,
            };
            if !verdict.verify(&g) {
                return Err(Error::Verification(
                    "arrowing certificate failed to re-verify".into(),
                ));
            }
            let negative = !verdict.arrows;
            json(
                json!({ "graph6": to_graph6(&g), "verdict": verdict }),
                negative,
            )
        }
        Command::Construct {
            kind,
            r,
            k,
            m,
            input,
            catalog,
            seed,
        } => construct(*kind, *r, *k, *m, input, catalog, *seed),
        Command::Mine {
            p,
            n,
            q,
            seed,
            max_restarts,
            max_flips,
            catalog,
        } => {
            let mut cfg = MinerConfig::new(*n, *p, *q, *seed);
            cfg.max_restarts = max_restarts.unwrap_or(cfg.max_restarts);
            cfg.max_flips = max_flips.unwrap_or(cfg.max_flips);
            let out = mine(&cfg)?;
            let stored = match (&out.witness, catalog) {
                (Some(w), Some(dir)) => Some(Catalog::open(dir)?.store(w)?.display().to_string()),
                _ => None,
            };
            let graph6 = out.witness.as_ref().map(|w| to_graph6(&w.graph));
            let negative = out.witness.is_none();
            json(
                json!({ "config": cfg, "graph6": graph6, "outcome": out, "stored": stored }),
                negative,
            )
        }
        Command::Certify {
            pattern,
            q,
            n_cap,
            order_wall,
            checkpoint,
            stream,
        } => {
            if *n_cap > *order_wall {
                return Err(Error::Capacity(format!(
                    "--n-cap {n_cap} exceeds the order wall {order_wall}"
                )));
            }
            let opts = EnumerationOptions {
                checkpoint: checkpoint.clone(),
                ..Default::default()
            };
            let cert = certify_folkman_value_with(pattern, *q, *n_cap, &opts)?;
            if let Some(path) = stream {
                write_stream(path, pattern, *q, &cert)?;
            }
            let properties = if cert.value.is_some() {
                Some(minimal_graph_properties(&cert)?)
            } else {
                None
            };
            let negative = cert.value.is_none();
            json(
                json!({ "certificate": cert, "minimal_graph_properties": properties }),
                negative,
            )
        }
        Command::Table {
            r_max,
            k_max,
            format,
            offsets,
        } => {
            if *r_max < 2 || *k_max < -1 {
                return Err(Error::Domain("need --r-max >= 2 and --k-max >= -1".into()));
            }
            let body = match (format, offsets) {
                (TableFormat::Csv, false) => {
                    Body::Text(table_to_csv(&bound_table(*r_max, *k_max)?))
                }
                (TableFormat::Csv, true) => Body::Text(offsets_to_csv(*k_max)?),
                (TableFormat::Json, false) => {
                    Body::Json(serde_json::to_value(bound_table(*r_max, *k_max)?)?)
                }
                (TableFormat::Json, true) => {
                    let mut rows = Vec::new();
                    for k in -1..=*k_max {
                        for (offset, assumption) in uniform_offsets(k)? {
                            rows.push(
                                json!({ "k": k, "offset": offset, "assumption": assumption }),
                            );
                        }
                    }
                    Body::Json(Value::Array(rows))
                }
            };
            Ok(Outcome {
                body,
                negative: false,
            })
        }
        Command::Witness { action } => witness(action),
    }
}

fn invariants(input: &GraphInput) -> Result<Outcome> {
    let mut out = Vec::new();
    for g in read_graphs(input)? {
        let report = InvariantReport::compute(&g);
        if !report.verify(&g) {
            return Err(Error::Verification(
                "invariant witnesses failed to re-verify".into(),
            ));
        }
        out.push(json!({
            "invariants": report,
            "separable": g.is_separable(),
            "vertex_critical": if g.order() > 0 { Some(is_vertex_critical(&g)?) } else { None },
            "order_bounds": order_bound_check(&g),
        }));
    }
    let body = if out.len() == 1 {
        out.remove(0)
    } else {
        Value::Array(out)
    };
    json(body, false)
}

fn construct(
    kind: ConstructionKind,
    r: Option<usize>,
    k: Option<i64>,
    m: Option<usize>,
    input: &GraphInput,
    catalog: &Option<std::path::PathBuf>,
    seed: u64,
) -> Result<Outcome> {
    let cert = match kind {
        ConstructionKind::Dirac => dirac_witness(need(r, "r")?)?,
        ConstructionKind::DoubleC5 => double_c5_witness(need(r, "r")?)?,
        ConstructionKind::TripleC5 => triple_c5_witness(need(r, "r")?)?,
        ConstructionKind::Grotzsch => grotzsch_witness()?,
        ConstructionKind::Mycielskian => {
            let g = read_graph(input)?;
            let h = mycielskian(&g)?;
            let report = InvariantReport::compute(&h);
            return json(
                json!({ "input": to_graph6(&g), "graph6": to_graph6(&h), "invariants": report }),
                false,
            );
        }
        ConstructionKind::RamseyJoin => {
            let (m, k, r) = (need(m, "m")?, need(k, "k")?, need(r, "r")?);
            if (m as i64) < k + 3 {
                return Err(Error::Precondition(format!(
                    "need m >= k + 3 (m={m}, k={k})"
                )));
            }
            let p = (m as i64 - k) as usize;
            let n = 2 * m - 1;
            let witness = if input.graph6.is_some() || input.graph6_file.is_some() {
                let mut w = RamseyWitness::new(
                    read_graph(input)?,
                    p,
                    3,
                    Provenance::Constructed {
                        name: "input".into(),
                    },
                );
                verify_witness(&mut w);
                w
            } else if let Some(w) = catalog
                .as_ref()
                .map(|dir| Catalog::open(dir)?.lookup(p, 3, n))
                .transpose()?
                .flatten()
            {
                w
            } else {
                let out = mine(&MinerConfig::new(n, p, 3, seed))?;
                out.witness.ok_or_else(|| {
                    Error::Verification(format!(
                        "no ({p},3)-graph on {n} vertices found with seed {seed}"
                    ))
                })?
            };
            lemma23_witness(m, k, r, &witness)?
        }
    };
    let graph6 = cert.graph6();
    let negative = !cert.verified;
    json(json!({ "graph6": graph6, "certificate": cert }), negative)
}

fn witness(action: &WitnessAction) -> Result<Outcome> {
    match action {
        WitnessAction::Lookup { p, n, q, catalog } => {
            let found = Catalog::open(catalog)?.lookup(*p, *q, *n)?;
            let graph6 = found.as_ref().map(|w| to_graph6(&w.graph));
            let negative = found.is_none();
            json(json!({ "graph6": graph6, "witness": found }), negative)
        }
        WitnessAction::Ingest {
            graph6_file,
            p,
            q,
            catalog,
        } => {
            let stored = Catalog::open(catalog)?.ingest(graph6_file, *p, *q)?;
            let list: Vec<String> = stored.iter().map(|w| to_graph6(&w.graph)).collect();
            json(json!({ "ingested": list }), false)
        }
        WitnessAction::Verify { input, p, q } => {
            let mut w = RamseyWitness::new(
                read_graph(input)?,
                *p,
                *q,
                Provenance::Constructed {
                    name: "input".into(),
                },
            );
            let ok = verify_witness(&mut w);
            json(json!({ "graph6": to_graph6(&w.graph), "witness": w }), !ok)
        }
    }
}

/// One JSON line per examined `K_q`-free class.
fn write_stream(
    path: &std::path::Path,
    pattern: &[usize],
    q: usize,
    cert: &folkman_core::enumeration::MinimalityCertificate,
) -> Result<()> {
    use folkman_core::enumeration::{enumerate, EnumerationConstraint};
    let last = cert.value.unwrap_or(cert.lower_bound - 1);
    let e = enumerate(&EnumerationConstraint::clique_free(last, q))?;
    let members: std::collections::BTreeSet<String> =
        cert.minimal_witnesses.iter().map(to_graph6).collect();
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    for g in e.graphs() {
        let g6 = to_graph6(&g);
        let line = json!({ "order": g.order(), "graph6": g6, "pattern": pattern, "q": q, "member": members.contains(&g6) });
        writeln!(f, "{line}")?;
    }
    f.flush()?;
    Ok(())
}
