//! Small named matroids used throughout the test suites and the self test.

use crate::ground::ElementSet;
use crate::matroid::Matroid;

/// Uniform matroid on 4 elements with rank 2.
pub fn u24() -> Matroid {
    Matroid::uniform(4, 2).unwrap()
}

/// Uniform matroid on 3 elements with rank 1.
pub fn u13() -> Matroid {
    Matroid::uniform(3, 1).unwrap()
}

/// Partition matroid with blocks {0,1} and {2,3}, capacity 1 each.
pub fn p2() -> Matroid {
    Matroid::partition(4, vec![vec![0, 1], vec![2, 3]], vec![1, 1]).unwrap()
}

/// Partition matroid with blocks {0,2} and {1,3}, capacity 1 each.
pub fn q2() -> Matroid {
    Matroid::partition(4, vec![vec![0, 2], vec![1, 3]], vec![1, 1]).unwrap()
}

/// Graphic matroid of the complete graph on 4 vertices; 6 edges, rank 3.
///
/// Edge order: (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
pub fn k4() -> Matroid {
    Matroid::graphic(4, k4_edges()).unwrap()
}

pub fn k4_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

/// Edges of the triangle on vertices {0,1,2} inside [`k4`].
pub fn k4_triangle() -> ElementSet {
    // edges (0,1), (0,2), (1,2) have indices 0, 1, 3
    ElementSet::from_indices(&[0, 1, 3]).unwrap()
}

/// Every fixture, paired with its conventional name.
pub fn all() -> Vec<(&'static str, Matroid)> {
    vec![
        ("U24", u24()),
        ("U13", u13()),
        ("P2", p2()),
        ("Q2", q2()),
        ("K4", k4()),
    ]
}
