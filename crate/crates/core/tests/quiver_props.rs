mod common;

use proptest::prelude::*;
use qquiver::quiver::DiagramFormat;
use qquiver::QuantumQuiver;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_round_trip(seed in any::<u64>()) {
        let g = common::graph(&mut common::rng(seed), 6, 8);
        let q = QuantumQuiver::from_graph(&g);
        prop_assert!(q.is_commutative());
        prop_assert_eq!(q.to_graph().unwrap(), g);
    }

    #[test]
    fn weak_iso_is_reflexive_and_symmetric(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let q = common::quiver(&mut rng, 4, 3, 3, 120, true);
        let renamed = common::relabel(&q, "x");
        let w = q.weak_iso(&renamed).expect("relabeling is a weak isomorphism");
        prop_assert!(w.verify(&q, &renamed));
        prop_assert!(w.inverse().verify(&renamed, &q));
        prop_assert!(renamed.weak_iso(&q).is_some());
    }

    #[test]
    fn complete_implies_divisible(seed in any::<u64>()) {
        let q = common::quiver(&mut common::rng(seed), 3, 2, 4, 200, true);
        if q.is_complete() {
            prop_assert!(q.divisibility_check().is_ok());
        }
    }

    #[test]
    fn dot_lists_every_copy(seed in any::<u64>()) {
        let q = common::quiver(&mut common::rng(seed), 4, 3, 3, 200, false);
        let d = q.diagram(DiagramFormat::Dot);
        let total = |t: &qquiver::RegularEmbedding| -> usize {
            t.table().nonzero().map(|(_, _, n)| n).sum()
        };
        prop_assert_eq!(d.matches("shape=circle").count(), q.vertex_shape().len());
        prop_assert_eq!(d.matches("shape=box").count(), q.edge_shape().len());
        prop_assert_eq!(d.matches("[dir=none]").count(), total(q.source()));
        let arrows = d.lines().filter(|l| l.contains(" -> ") && !l.contains("dir=none")).count();
        prop_assert_eq!(arrows, total(q.range()));
    }
}

#[test]
fn complete_graphs_from_random_seeds() {
    // a graph is complete exactly when each vertex emits one edge to every vertex
    for seed in 0..50 {
        let g = common::graph(&mut common::rng(seed), 3, 9);
        let q = QuantumQuiver::from_graph(&g);
        let n = g.vertices().len();
        let expected = g.vertices().iter().all(|v| {
            let mut hits = vec![0; n];
            for (_, e) in g.out_edges(v) {
                hits[g.vertex_index(&e.range).unwrap()] += 1;
            }
            hits.iter().all(|&h| h == 1)
        });
        assert_eq!(q.is_complete(), expected, "seed {seed}");
    }
}
