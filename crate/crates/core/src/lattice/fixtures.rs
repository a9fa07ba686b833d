//! Hand-built table lattices used as reference points.

use super::tables::LatticeTables;

fn tables(n: usize, strict: &[(usize, usize)], neg: Vec<usize>) -> LatticeTables {
    let mut order = vec![vec![false; n]; n];
    for (i, row) in order.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in strict {
        order[a][b] = true;
    }
    LatticeTables::from_order(order, neg).expect("fixture is a lattice")
}

/// The four-element Boolean algebra `0 < a, a' < 1`.
pub fn boolean_square() -> LatticeTables {
    tables(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)], vec![3, 2, 1, 0])
}

/// The benzene ring O6: `0 < a < b < 1` and `0 < b' < a' < 1`, with
/// negation swapping primed and unprimed. An ortholattice that is not
/// orthomodular.
///
/// Numbering: `0 = 0, 1 = a, 2 = b, 3 = b', 4 = a', 5 = 1`.
pub fn hexagon() -> LatticeTables {
    tables(
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 5),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
        vec![5, 4, 3, 2, 1, 0],
    )
}
