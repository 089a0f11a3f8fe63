//! Incidence matrices of signed graphs over an exact scalar domain.
//!
//! Column rules, with `e_i` the i-th unit vector and endpoints `t_i, t_j`
//! normalized so that `i < j`:
//!   positive link -> `e_i - e_j`, negative link -> `e_i + e_j`,
//!   positive loop -> zero column, negative loop at `t_i` -> `2 e_i`.
//! Over GF(2) the sign distinction collapses. Column `j` corresponds to
//! edge `j` of the graph's edge list.

use crate::error::Result;
use crate::exact::{ExactMatrix, ScalarDomain};
use crate::graph::SignedGraph;

/// The incidence matrix of a signed graph over a chosen domain.
#[derive(Debug, Clone)]
pub struct IncidenceMatrix {
    graph: SignedGraph,
    matrix: ExactMatrix,
}

impl IncidenceMatrix {
    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.matrix
    }

    pub fn domain(&self) -> ScalarDomain {
        self.matrix.domain()
    }
}

/// Builds the incidence matrix of `g` over `domain` (s rows, m columns).
pub fn build_incidence(g: &SignedGraph, domain: ScalarDomain) -> IncidenceMatrix {
    let s = g.vertex_count();
    let m = g.edge_count();
    let mut data = vec![0i64; s * m];
    for (col, e) in g.edges().iter().enumerate() {
        if e.is_loop() {
            if e.sign.is_negative() {
                data[(e.u - 1) * m + col] = 2;
            }
        } else {
            let (i, j) = (e.u.min(e.v), e.u.max(e.v));
            data[(i - 1) * m + col] = 1;
            data[(j - 1) * m + col] = if e.sign.is_negative() { 1 } else { -1 };
        }
    }
    let matrix = ExactMatrix::from_integers(domain, s, m, &data).expect("sized by construction");
    IncidenceMatrix { graph: g.clone(), matrix }
}

/// Computes the incidence-matrix rank by exact elimination and the rank
/// predicted from graph invariants (`s - c_0` away from characteristic 2,
/// `s - c` in characteristic 2 or for balanced graphs). Callers assert the
/// two agree.
pub fn rank_formula_check(g: &SignedGraph, domain: ScalarDomain) -> Result<(usize, usize)> {
    let inc = build_incidence(g, domain);
    let computed = inc.matrix().rank();
    Ok((computed, predicted_rank(g, domain)))
}

/// The closed-form rank of the incidence matrix.
pub fn predicted_rank(g: &SignedGraph, domain: ScalarDomain) -> usize {
    let s = g.vertex_count();
    let full = g.full_edge_set();
    let c = g.components_of_subset(full);
    let c0 = g.balanced_components_of_subset(full);
    if domain.characteristic() == 2 || g.is_balanced() {
        s - c
    } else {
        s - c0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SignedGraph;
    use crate::samples::{cactus, doubled_triangle};

    fn q() -> ScalarDomain {
        ScalarDomain::Rationals
    }

    #[test]
    fn doubled_triangle_incidence_over_q() {
        let inc = build_incidence(&doubled_triangle(), q());
        let expect = ExactMatrix::from_integers(
            q(),
            3,
            6,
            &[
                1, 1, 0, 0, 1, 1, //
                -1, 1, 1, 1, 0, 0, //
                0, 0, -1, 1, -1, 1,
            ],
        )
        .unwrap();
        assert_eq!(inc.matrix(), &expect);
    }

    #[test]
    fn positive_doubled_triangle_incidence_over_q() {
        let inc = build_incidence(&doubled_triangle().all_positive(), q());
        let expect = ExactMatrix::from_integers(
            q(),
            3,
            6,
            &[
                1, 1, 0, 0, 1, 1, //
                -1, -1, 1, 1, 0, 0, //
                0, 0, -1, -1, -1, -1,
            ],
        )
        .unwrap();
        assert_eq!(inc.matrix(), &expect);
    }

    #[test]
    fn negative_doubled_triangle_incidence_over_q() {
        let inc = build_incidence(&doubled_triangle().all_negative(), q());
        let expect = ExactMatrix::from_integers(
            q(),
            3,
            6,
            &[
                1, 1, 0, 0, 1, 1, //
                1, 1, 1, 1, 0, 0, //
                0, 0, 1, 1, 1, 1,
            ],
        )
        .unwrap();
        assert_eq!(inc.matrix(), &expect);
    }

    #[test]
    fn single_positive_loop_gives_zero_column() {
        let g = SignedGraph::from_triples(1, &[(1, 1, false)]).unwrap();
        let inc = build_incidence(&g, q());
        let expect = ExactMatrix::from_integers(q(), 1, 1, &[0]).unwrap();
        assert_eq!(inc.matrix(), &expect);
    }

    #[test]
    fn negative_loop_column_is_twice_the_unit_vector() {
        let g = SignedGraph::from_triples(2, &[(2, 2, true)]).unwrap();
        let inc = build_incidence(&g, q());
        let expect = ExactMatrix::from_integers(q(), 2, 1, &[0, 2]).unwrap();
        assert_eq!(inc.matrix(), &expect);
        // and it vanishes over GF(2)
        let gf2 = ScalarDomain::prime_field(2).unwrap();
        let inc2 = build_incidence(&g, gf2);
        assert_eq!(inc2.matrix().rank(), 0);
    }

    #[test]
    fn rank_checks_on_samples() {
        let gf2 = ScalarDomain::prime_field(2).unwrap();
        let gf5 = ScalarDomain::prime_field(5).unwrap();
        // unbalanced connected: rank s - c_0 = 3
        assert_eq!(rank_formula_check(&doubled_triangle(), q()).unwrap(), (3, 3));
        // balanced: rank s - c = 2 in any characteristic
        assert_eq!(
            rank_formula_check(&doubled_triangle().all_positive(), gf5).unwrap(),
            (2, 2)
        );
        // characteristic 2: rank s - c = 2
        assert_eq!(
            rank_formula_check(&doubled_triangle().all_negative(), gf2).unwrap(),
            (2, 2)
        );
        // full cactus over Q: balanced, s - c = 10
        assert_eq!(rank_formula_check(&cactus(), q()).unwrap(), (10, 10));
    }

    #[test]
    fn cactus_kernel_dimension_over_q() {
        let inc = build_incidence(&doubled_triangle(), q());
        let kernel = inc.matrix().kernel_basis();
        assert_eq!(kernel.len(), 6 - inc.matrix().rank());
        assert_eq!(kernel.len(), 3);
    }

    #[test]
    fn odd_prime_rank_equals_rational_rank_on_samples() {
        let gf3 = ScalarDomain::prime_field(3).unwrap();
        for g in [cactus(), cactus().all_negative(), doubled_triangle(), doubled_triangle().all_negative()] {
            let rq = build_incidence(&g, q()).matrix().rank();
            let r3 = build_incidence(&g, gf3).matrix().rank();
            assert_eq!(rq, r3);
        }
    }
}
