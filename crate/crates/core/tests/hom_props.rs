mod common;

use proptest::prelude::*;
use qquiver::{MatrixUnit, UnitImage};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjoint_is_the_transposed_matrix(seed in any::<u64>()) {
        let q = common::quiver(&mut common::rng(seed), 4, 3, 3, 200, true);
        for t in [q.source(), q.range()] {
            let adj = t.to_linear_map().transpose();
            prop_assert_eq!(adj.transpose(), t.to_linear_map());
            for (k, u) in t.codomain().matrix_units().iter().enumerate() {
                let col = adj.column(k);
                match t.adjoint_unit(u).unwrap() {
                    UnitImage::Unit(w) => {
                        let idx = t.domain().unit_index(&w).unwrap();
                        prop_assert_eq!(col, vec![(idx, 1)]);
                    }
                    UnitImage::Zero => prop_assert!(col.is_empty()),
                }
            }
        }
    }

    #[test]
    fn copies_tile_each_edge_diagonal(seed in any::<u64>()) {
        let q = common::quiver(&mut common::rng(seed), 4, 3, 3, 200, true);
        for t in [q.source(), q.range()] {
            for a in 0..t.codomain().len() {
                let mut covered = vec![0; t.codomain().size(a)];
                for v in 0..t.domain().len() {
                    prop_assert_eq!(t.offsets(v, a).len(), t.order(v, a));
                    for &o in t.offsets(v, a) {
                        for p in o..o + t.domain().size(v) {
                            covered[p] += 1;
                        }
                    }
                }
                prop_assert!(covered.iter().all(|&c| c == 1));
            }
            prop_assert_eq!(&t.reconstructed_orders(), t.table());
        }
    }

    #[test]
    fn diagonal_units_map_to_diagonal_units(seed in any::<u64>()) {
        let q = common::quiver(&mut common::rng(seed), 4, 3, 3, 200, true);
        let t = q.source();
        for v in 0..t.domain().len() {
            for i in 1..=t.domain().size(v) {
                let u = MatrixUnit::new(v, i, i);
                for img in t.coordinate_map(&u).unwrap() {
                    prop_assert!(img.is_diagonal());
                    prop_assert_eq!(t.adjoint_unit(&img).unwrap(), UnitImage::Unit(u));
                }
            }
        }
    }
}
