use folkman_core::arrowing::folkman_value_search;
use folkman_core::canon::are_isomorphic;
use folkman_core::enumeration::*;
use folkman_core::{Error, Graph};

fn wheel() -> Graph {
    Graph::complete(1)
        .unwrap()
        .join(&Graph::cycle(5).unwrap())
        .unwrap()
}

#[test]
fn tiny_orders() {
    let e = enumerate(&EnumerationConstraint::new(2)).unwrap();
    let g6: Vec<String> = e.graphs().map(|g| folkman_core::to_graph6(&g)).collect();
    assert_eq!(g6.len(), 3);
    assert_eq!(
        e.class_counts().values().copied().collect::<Vec<_>>(),
        vec![1, 2]
    );
    let t = enumerate(&EnumerationConstraint::clique_free(4, 3)).unwrap();
    assert_eq!(t.graphs().count(), 1 + 2 + 3 + 7);
}

#[test]
fn partitioning_does_not_change_output() {
    let c = EnumerationConstraint::clique_free(8, 3);
    let a = enumerate_with(
        &c,
        &EnumerationOptions {
            chunk_size: 1,
            checkpoint: None,
        },
    )
    .unwrap();
    let b = enumerate_with(
        &c,
        &EnumerationOptions {
            chunk_size: 1000,
            checkpoint: None,
        },
    )
    .unwrap();
    assert_eq!(a.levels, b.levels);
    let mut out_a = Vec::new();
    a.write_graph6(&mut out_a).unwrap();
    let mut out_b = Vec::new();
    b.write_graph6(&mut out_b).unwrap();
    assert_eq!(out_a, out_b);
}

#[test]
fn resumes_from_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("progress.json");
    let opts = EnumerationOptions {
        chunk_size: 8,
        checkpoint: Some(path.clone()),
    };
    let mut first =
        Enumerator::new(EnumerationConstraint::clique_free(6, 3), opts.clone()).unwrap();
    first.next_level().unwrap();
    first.next_level().unwrap();
    first.next_level().unwrap();
    drop(first);
    let resumed = Enumerator::new(EnumerationConstraint::clique_free(9, 3), opts.clone()).unwrap();
    assert_eq!(resumed.completed_orders(), 3);
    let full = resumed.finish().unwrap();
    let fresh = enumerate(&EnumerationConstraint::clique_free(9, 3)).unwrap();
    assert_eq!(full.levels, fresh.levels);
    let other = EnumerationOptions {
        chunk_size: 9,
        checkpoint: Some(path),
    };
    assert!(matches!(
        Enumerator::new(EnumerationConstraint::clique_free(9, 3), other),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn filters_apply_to_output() {
    let mut c = EnumerationConstraint::clique_free(7, 3);
    c.connected_only = true;
    let connected = enumerate(&c).unwrap();
    assert!(connected.graphs().all(|g| g.is_connected()));
    // connected triangle-free graphs on 1..=7 vertices
    assert_eq!(connected.graphs().count(), 1 + 1 + 1 + 3 + 6 + 19 + 59);
    c.connected_only = false;
    c.min_chromatic = Some(3);
    let odd = enumerate(&c).unwrap();
    assert!(odd
        .graphs()
        .all(|g| folkman_core::invariants::chromatic_number(&g) >= 3));
    assert!(odd
        .graphs()
        .any(|g| are_isomorphic(&g, &Graph::cycle(5).unwrap())));
}

#[test]
fn certification_examples() {
    let c = certify_folkman_value(&[2, 2], 3, 5).unwrap();
    assert_eq!(c.value, Some(5));
    assert!(are_isomorphic(
        c.witness.as_ref().unwrap(),
        &Graph::cycle(5).unwrap()
    ));
    let c = certify_folkman_value(&[2, 2, 2], 4, 6).unwrap();
    assert_eq!(c.value, Some(6));
    assert_eq!(c.minimal_witnesses.len(), 1);
    assert!(are_isomorphic(&c.minimal_witnesses[0], &wheel()));
    assert_eq!(c.exhausted_orders, vec![1, 2, 3, 4, 5]);
    let report = minimal_graph_properties(&c).unwrap();
    assert!(report.violations.is_empty());
    assert_eq!(report.witnesses[0].clique_is_q_minus_1, Some(true));
    let c = certify_folkman_value(&[2, 2], 4, 5).unwrap();
    assert_eq!(c.value, Some(3));
    assert!(minimal_graph_properties(&c)
        .unwrap()
        .witnesses
        .iter()
        .all(|w| w.critical));
    let c = certify_folkman_value(&[2, 2, 2], 3, 8).unwrap();
    assert_eq!((c.value, c.lower_bound), (None, 9));
    assert_eq!(c.exhausted_orders, (1..=8).collect::<Vec<_>>());
    assert!(matches!(
        certify_folkman_value(&[3, 3], 3, 5),
        Err(Error::Nonexistent(_))
    ));
}

#[test]
fn non_all2_patterns() {
    // K_5 -> (3,3) on vertices and nothing smaller without K_6 arrows
    let c = certify_folkman_value(&[3, 3], 6, 6).unwrap();
    assert_eq!(c.value, Some(5));
    assert!(minimal_graph_properties(&c).unwrap().violations.is_empty());
}

#[test]
fn value_search_examples() {
    let (n, g) = folkman_value_search(&[2, 2], 3, 6).unwrap().unwrap();
    assert_eq!(n, 5);
    assert!(are_isomorphic(&g, &Graph::cycle(5).unwrap()));
    let (n, g) = folkman_value_search(&[2, 2, 2], 5, 7).unwrap().unwrap();
    assert_eq!(n, 4);
    assert_eq!(g, Graph::complete(4).unwrap());
    assert!(folkman_value_search(&[2, 2, 2], 3, 7).unwrap().is_none());
    assert!(matches!(
        folkman_value_search(&[3, 3], 3, 5),
        Err(Error::Nonexistent(_))
    ));
}

#[test]
fn gallai_screen_on_small_graphs() {
    let e = enumerate(&EnumerationConstraint::new(8)).unwrap();
    let graphs: Vec<Graph> = e.graphs().collect();
    assert!(gallai_violations(&graphs).unwrap().is_empty());
    // the pentagon is critical with |V| = 2 chi - 1 and not separable: outside the screen's hypothesis
    assert!(gallai_violations(&[Graph::cycle(5).unwrap()])
        .unwrap()
        .is_empty());
}
