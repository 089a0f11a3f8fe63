//! Small signed graphs used throughout the test suites and shipped as CLI
//! fixtures. Edge order matters: it fixes incidence-matrix column order.

use crate::graph::SignedGraph;

/// A simple all-positive graph on 11 vertices and 14 edges: three triangles
/// and a square pasted along cut vertices, with one bridge (edge 8).
pub fn cactus() -> SignedGraph {
    SignedGraph::from_triples(
        11,
        &[
            (1, 2, false),   // 1
            (1, 3, false),   // 2
            (3, 2, false),   // 3
            (3, 4, false),   // 4
            (4, 5, false),   // 5
            (5, 6, false),   // 6
            (6, 3, false),   // 7
            (5, 7, false),   // 8  (bridge)
            (7, 8, false),   // 9
            (8, 9, false),   // 10
            (9, 7, false),   // 11
            (7, 10, false),  // 12
            (10, 11, false), // 13
            (11, 7, false),  // 14
        ],
    )
    .expect("valid sample")
}

/// A triangle on 3 vertices with every edge doubled, one positive and one
/// negative copy per pair: 6 edges, unbalanced, connected.
pub fn doubled_triangle() -> SignedGraph {
    SignedGraph::from_triples(
        3,
        &[
            (1, 2, false), // 1: +
            (1, 2, true),  // 2: -
            (2, 3, false), // 3: +
            (2, 3, true),  // 4: -
            (1, 3, false), // 5: +
            (1, 3, true),  // 6: -
        ],
    )
    .expect("valid sample")
}

/// A signed simple graph on 10 vertices and 21 edges: two dense 5-vertex
/// clusters joined by three connector edges, with mixed signs.
pub fn double_cluster() -> SignedGraph {
    SignedGraph::from_triples(
        10,
        &[
            (1, 2, false),  // 1: +
            (2, 3, true),   // 2: -
            (3, 4, true),   // 3: -
            (4, 5, true),   // 4: -
            (5, 6, false),  // 5: +
            (6, 7, true),   // 6: -
            (7, 8, true),   // 7: -
            (8, 9, true),   // 8: -
            (9, 10, true),  // 9: -
            (1, 10, false), // 10: +
            (1, 3, false),  // 11: +
            (1, 4, false),  // 12: +
            (2, 4, true),   // 13: -
            (2, 5, true),   // 14: -
            (3, 5, true),   // 15: -
            (5, 10, false), // 16: +
            (6, 9, true),   // 17: -
            (7, 9, true),   // 18: -
            (8, 10, true),  // 19: -
            (6, 8, true),   // 20: -
            (7, 10, true),  // 21: -
        ],
    )
    .expect("valid sample")
}
