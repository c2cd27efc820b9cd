//! Quivers shared by unit tests.

use crate::algebra::AlgebraShape;
use crate::hom::OrderTable;
use crate::quiver::QuantumQuiver;

/// Vertex sizes (1, 3, 2, 2, 4), edge sizes (4, 6); `v1, v2` feed `a4`,
/// `v2` feeds `a6` twice, `a4` lands on `v3, v4` and `a6` on `v4, v5`.
pub(crate) fn worked_example() -> QuantumQuiver {
    let b0 = AlgebraShape::new([("v1", 1), ("v2", 3), ("v3", 2), ("v4", 2), ("v5", 4)]).unwrap();
    let b1 = AlgebraShape::new([("a4", 4), ("a6", 6)]).unwrap();
    let s = OrderTable::from_entries(
        b0.clone(),
        b1.clone(),
        [("v1", "a4", 1), ("v2", "a4", 1), ("v2", "a6", 2)],
    )
    .unwrap();
    let r = OrderTable::from_entries(
        b0,
        b1,
        [("v3", "a4", 1), ("v4", "a4", 1), ("v4", "a6", 1), ("v5", "a6", 1)],
    )
    .unwrap();
    QuantumQuiver::from_tables(s, r).unwrap()
}
