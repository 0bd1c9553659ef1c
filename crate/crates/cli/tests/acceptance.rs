//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use folkman_core::arrowing::{edge_arrows, vertex_arrows, ArrowCertificate};
use folkman_core::bounds::all2_lower_bound;
use folkman_core::canon::are_isomorphic;
use folkman_core::constructions::{
    dirac_witness, double_c5_witness, grotzsch_witness, lemma23_witness, triple_c5_witness,
    ConstructionCertificate,
};
use folkman_core::enumeration::{
    certify_folkman_value, enumerate, gallai_violations, minimal_graph_properties,
    EnumerationConstraint,
};
use folkman_core::invariants::{chromatic_number, clique_number, deficiency, independence_number};
use folkman_core::miner::{mine, MinerConfig};
use folkman_core::{from_graph6, to_graph6, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_TABLE: &str = include_str!("../../core/tests/golden/bounds_table.csv");
const GOLDEN_OFFSETS: &str = include_str!("../../core/tests/golden/offsets.csv");

fn random_graph(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64) -> Graph {
    let density = rng.random_range(lo..hi);
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

/// Whether some map `V -> {0..colours}` is proper, by exhaustive assignment
/// in vertex order.
fn brute_colourable(g: &Graph, colours: usize) -> bool {
    fn extend(g: &Graph, colours: usize, colour: &mut Vec<usize>) -> bool {
        let v = colour.len();
        if v == g.order() {
            return true;
        }
        for c in 0..colours {
            if (0..v).all(|u| !g.adjacent(u, v) || colour[u] != c) {
                colour.push(c);
                if extend(g, colours, colour) {
                    return true;
                }
                colour.pop();
            }
        }
        false
    }
    extend(g, colours, &mut Vec::new())
}

/// `(chi, cl, order)` as measured by the exact solvers.
fn measured(c: &ConstructionCertificate) -> (usize, usize, usize) {
    let m = c.measured.as_ref().expect("measured");
    (m.chromatic, m.clique, m.order)
}

fn wheel() -> Graph {
    Graph::complete(1)
        .unwrap()
        .join(&Graph::cycle(5).unwrap())
        .unwrap()
}

fn folkman_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_folkman"))
        .args(args)
        .output()
        .expect("run folkman");
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn diff_lines(got: &str, want: &str) -> usize {
    let (g, w): (Vec<&str>, Vec<&str>) = (got.lines().collect(), want.lines().collect());
    let common = g.iter().zip(&w).filter(|(a, b)| a != b).count();
    common + g.len().abs_diff(w.len())
}

fn criterion_1() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for i in 0..400 {
        let n = 1 + i % 10;
        let g = random_graph(&mut rng, n, 0.2, 0.9);
        let r = 1 + i % 4;
        let verdict = vertex_arrows(&g, &vec![2; r]).unwrap();
        assert!(verdict.verify(&g), "certificate for {}", to_graph6(&g));
        assert_eq!(
            verdict.arrows,
            !brute_colourable(&g, r),
            "{} r={r}",
            to_graph6(&g)
        );
        checked += 1;
    }
    format!("{checked} random graphs agree with brute-force colouring")
}

fn criterion_2() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n1 = rng.random_range(1..=15);
        let n2 = rng.random_range(1..=16 - n1);
        let g1 = random_graph(&mut rng, n1, 0.1, 0.9);
        let g2 = random_graph(&mut rng, n2, 0.1, 0.9);
        let j = g1.join(&g2).unwrap();
        assert_eq!(
            chromatic_number(&j),
            chromatic_number(&g1) + chromatic_number(&g2)
        );
        assert_eq!(clique_number(&j), clique_number(&g1) + clique_number(&g2));
        assert_eq!(deficiency(&j), deficiency(&g1) + deficiency(&g2));
    }
    "chi, cl and f additive on 200 joins".into()
}

fn criterion_3() -> String {
    let c = certify_folkman_value(&[2, 2], 3, 8).unwrap();
    assert_eq!(c.value, Some(5));
    assert!(are_isomorphic(
        c.witness.as_ref().unwrap(),
        &Graph::cycle(5).unwrap()
    ));
    let c = certify_folkman_value(&[2, 2, 2], 4, 8).unwrap();
    assert_eq!(c.value, Some(6));
    assert!(are_isomorphic(c.witness.as_ref().unwrap(), &wheel()));
    assert_eq!(all2_lower_bound(3, 0).unwrap().lower, 6);
    "values 5 (pentagon) and 6 (wheel) certified".into()
}

fn criterion_4() -> String {
    let e = enumerate(&EnumerationConstraint::clique_free(10, 3)).unwrap();
    let total: usize = e.class_counts().values().sum();
    let counts: Vec<usize> = e.class_counts().values().copied().collect();
    assert_eq!(counts, [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172]);
    for g in e.graphs() {
        assert!(
            brute_colourable(&g, 3) || g.order() == 0,
            "{} needs 4 colours",
            to_graph6(&g)
        );
    }
    let mut grotzsch = grotzsch_witness().unwrap();
    assert!(grotzsch.verify());
    assert_eq!(measured(&grotzsch), (4, 2, 11));
    assert!(!brute_colourable(&grotzsch.graph, 3));
    format!(
        "{total} triangle-free classes up to order 10 are 3-colourable; Grotzsch graph gives 11"
    )
}

fn criterion_5() -> String {
    let mut count = 0;
    for r in 2..=30 {
        let c = dirac_witness(r).unwrap();
        assert!(c.is_verified());
        assert_eq!(measured(&c), (r + 1, r, r + 3));
        count += 1;
        if r >= 5 {
            let c = double_c5_witness(r).unwrap();
            assert!(c.is_verified());
            assert_eq!(measured(&c), (r + 1, r - 1, r + 5));
            count += 1;
        }
        if r >= 8 {
            let c = triple_c5_witness(r).unwrap();
            assert!(c.is_verified());
            assert_eq!(measured(&c), (r + 1, r - 2, r + 7));
            count += 1;
        }
    }
    format!("{count} construction certificates verified for r <= 30")
}

fn criterion_6() -> String {
    let start = Instant::now();
    let out = mine(&MinerConfig::new(27, 8, 3, 1)).unwrap();
    let p = out.witness.expect("(8,3)-graph on 27 vertices");
    assert!(p.verified);
    assert!(clique_number(&p.graph) < 8 && independence_number(&p.graph) < 3);
    let mined = start.elapsed();
    let c = lemma23_witness(14, 6, 13, &p).unwrap();
    assert!(c.is_verified() && !c.is_conditional());
    assert_eq!(c.graph.order(), 27);
    assert!(measured(&c).0 >= 14 && measured(&c).1 <= 7);
    assert_eq!(all2_lower_bound(13, 6).unwrap().lower, 27);
    format!(
        "order-27 witness with chi {} cl {} (mined in {:.1?})",
        measured(&c).0,
        measured(&c).1,
        mined
    )
}

fn criterion_7() -> String {
    let mut orders = Vec::new();
    for (p, n) in [(3, 5), (4, 8), (5, 13), (6, 17)] {
        let out = mine(&MinerConfig::new(n, p, 3, 1)).unwrap();
        let w = out
            .witness
            .unwrap_or_else(|| panic!("no ({p},3)-graph on {n} vertices"));
        assert!(w.verified);
        assert!(clique_number(&w.graph) < p && independence_number(&w.graph) < 3);
        orders.push(w.order());
    }
    format!("Ramsey witnesses of orders {orders:?}")
}

fn criterion_8() -> String {
    let k6 = Graph::complete(6).unwrap();
    let v = edge_arrows(&k6, &[3, 3]).unwrap();
    assert!(v.arrows && v.verify(&k6));
    let k5 = Graph::complete(5).unwrap();
    let v = edge_arrows(&k5, &[3, 3]).unwrap();
    assert!(!v.arrows && v.verify(&k5));
    assert!(matches!(
        v.certificate,
        ArrowCertificate::EdgeColoring { .. }
    ));
    let e = enumerate(&EnumerationConstraint::new(7)).unwrap();
    let (mut screened, mut arrowing) = (0, 0);
    for g in e.graphs() {
        let v = edge_arrows(&g, &[3, 3]).unwrap();
        assert!(v.verify(&g));
        if v.arrows {
            arrowing += 1;
            assert!(
                !brute_colourable(&g, 5),
                "{} arrows with chi < 6",
                to_graph6(&g)
            );
        }
        screened += 1;
    }
    assert!(arrowing > 0);
    format!("{screened} graphs screened, {arrowing} edge-arrow (3,3), all with chi >= 6")
}

fn criterion_9() -> String {
    let (table, code) = folkman_cli(&["table"]);
    assert_eq!(code, 0);
    let (offsets, code) = folkman_cli(&["table", "--offsets"]);
    assert_eq!(code, 0);
    let d = (
        diff_lines(&table, GOLDEN_TABLE),
        diff_lines(&offsets, GOLDEN_OFFSETS),
    );
    assert_eq!(d, (0, 0), "table/offsets differing lines");
    format!(
        "{} table rows and {} offset rows match the golden files",
        table.lines().count() - 1,
        offsets.lines().count() - 1
    )
}

fn criterion_10() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..300 {
        let g = random_graph(&mut rng, i % 64, 0.0, 1.0);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        if g.order() <= 9 {
            let a = [2, 1 + i % 3, 2];
            let v = vertex_arrows(&g, &a).unwrap();
            assert!(v.verify(&g));
        }
    }
    let all8 = enumerate(&EnumerationConstraint::new(8)).unwrap();
    let graphs: Vec<Graph> = all8.graphs().collect();
    assert!(gallai_violations(&graphs).unwrap().is_empty());
    let mut witnesses = 0;
    for (a, q, cap) in [
        (&[2, 2][..], 3, 8),
        (&[2, 2, 2][..], 4, 8),
        (&[2, 2, 2][..], 5, 8),
        (&[3, 2][..], 4, 8),
    ] {
        let c = certify_folkman_value(a, q, cap).unwrap();
        let report = minimal_graph_properties(&c).unwrap();
        assert!(
            report.violations.is_empty(),
            "{a:?};{q}: {:?}",
            report.violations
        );
        witnesses += report.witnesses.len();
    }
    format!("{} graphs in Gallai screen; {witnesses} minimal witnesses satisfy criticality and cl = q-1", graphs.len())
}

fn main() {
    let criteria: [(&str, fn() -> String); 10] = [
        ("1 all-2 arrowing equals chi > r", criterion_1),
        ("2 join laws", criterion_2),
        ("3 small vertex Folkman values", criterion_3),
        ("4 triangle-free enumeration to order 10", criterion_4),
        ("5 construction certificates", criterion_5),
        ("6 Ramsey-join pipeline", criterion_6),
        ("7 Ramsey witnesses", criterion_7),
        ("8 edge arrowing", criterion_8),
        ("9 bound grid", criterion_9),
        ("10 property suite", criterion_10),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{elapsed:.1?}]"),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL criterion {name}: {msg} [{elapsed:.1?}]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
