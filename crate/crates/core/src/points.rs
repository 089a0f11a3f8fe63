//! Evaluation-code view: the incidence columns as projective points, zero
//! counting of linear forms, the frustration index via ±1 forms, and the
//! minimum distance via the maximal zero count.

use crate::error::{Error, Result};
use crate::exact::{Scalar, ScalarDomain};
use crate::graph::SignedGraph;
use crate::incidence::build_incidence;

/// The incidence columns of a signed graph as points of projective space,
/// one per edge, each identified up to scalar.
#[derive(Debug, Clone)]
pub struct ProjectivePointSet {
    dimension: usize,
    domain: ScalarDomain,
    points: Vec<Vec<Scalar>>,
}

impl ProjectivePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn point(&self, i: usize) -> &[Scalar] {
        &self.points[i]
    }
}

/// Builds the point set of a signed graph over a domain. Positive loops
/// produce zero columns, which are not projective points, so they are
/// rejected.
pub fn projective_points(g: &SignedGraph, domain: ScalarDomain) -> Result<ProjectivePointSet> {
    if g.edges().iter().any(|e| e.is_loop() && !e.sign.is_negative()) {
        return Err(Error::Domain(
            "positive loops give zero incidence columns, not projective points".into(),
        ));
    }
    if domain.characteristic() == 2 && g.edges().iter().any(|e| e.is_loop()) {
        return Err(Error::Domain(
            "negative loops give zero incidence columns over characteristic 2".into(),
        ));
    }
    let a = build_incidence(g, domain).into_matrix();
    let points = (0..a.cols()).map(|c| a.column(c)).collect();
    Ok(ProjectivePointSet { dimension: g.vertex_count(), domain, points })
}

/// Number of points where the linear form with the given coefficients
/// vanishes, evaluated exactly; points are counted with multiplicity.
pub fn zero_count(x: &ProjectivePointSet, h: &[Scalar]) -> Result<usize> {
    if h.len() != x.dimension {
        return Err(Error::Argument(format!(
            "form has {} coefficients for ambient dimension {}",
            h.len(),
            x.dimension
        )));
    }
    let d = x.domain;
    if h.iter().all(|c| d.is_zero(c)) {
        return Err(Error::Argument("the zero form is not a valid linear form".into()));
    }
    let mut zeros = 0;
    for p in &x.points {
        let mut acc = d.zero();
        for (c, v) in h.iter().zip(p.iter()) {
            acc = d.add(&acc, &d.mul(c, v));
        }
        if d.is_zero(&acc) {
            zeros += 1;
        }
    }
    Ok(zeros)
}

/// Frustration index as the minimum of `|X| - |V_X(h)|` over all linear
/// forms with ±1 coefficients, evaluated over the rationals. Requires a
/// connected graph without positive loops; `h` and `-h` are the same form,
/// so only `2^(s-1)` sign patterns are scanned.
pub fn frustration_index_points(g: &SignedGraph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Domain("the point formula requires a connected graph".into()));
    }
    let s = g.vertex_count();
    if s > 26 {
        return Err(Error::Resource(format!(
            "the point formula scans 2^{} sign patterns",
            s - 1
        )));
    }
    let d = ScalarDomain::Rationals;
    let x = projective_points(g, d)?;
    let m = x.len();
    if m == 0 {
        return Ok(0);
    }
    let one = d.one();
    let neg_one = d.from_integer(-1);
    let mut best = usize::MAX;
    for pattern in 0u64..(1 << (s - 1)) {
        let h: Vec<Scalar> = (0..s)
            .map(|v| {
                if v > 0 && pattern & (1 << (v - 1)) != 0 {
                    neg_one.clone()
                } else {
                    one.clone()
                }
            })
            .collect();
        let zeros = zero_count(&x, &h)?;
        best = best.min(m - zeros);
    }
    Ok(best)
}

const FORM_ENUMERATION_GUARD: u64 = 10_000_000;

/// Minimum distance of the incidence-matrix code by zero counting:
/// `δ(C) = |X| - max{|V_X(h)| : h linear, ev(h) ≠ 0}`.
///
/// For a prime `p ≠ 2` the forms range over `GF(p)^s` up to scalar; for
/// `p = 0` the coefficients range over `{0, ±1}`, which yields `δ(C)` for
/// every characteristic other than 2.
pub fn min_distance_points(g: &SignedGraph, p: u64) -> Result<usize> {
    if p == 2 {
        return Err(Error::Domain(
            "the point formula is stated away from characteristic 2".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Domain("the point formula requires a connected graph".into()));
    }
    let s = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::Domain("the empty code has no minimum distance".into()));
    }
    let domain = ScalarDomain::of_characteristic(p)?;
    let x = projective_points(g, domain)?;
    let mut best_zeros = 0usize;
    let mut consider = |h: &[Scalar]| -> Result<()> {
        let zeros = zero_count(&x, h)?;
        if zeros < m && zeros > best_zeros {
            best_zeros = zeros;
        }
        Ok(())
    };
    if p == 0 {
        let mut total: u64 = 1;
        for _ in 0..s {
            total = total.saturating_mul(3);
            if total > FORM_ENUMERATION_GUARD {
                return Err(Error::Resource(format!(
                    "form enumeration over 3^{s} coefficient patterns exceeds the guard"
                )));
            }
        }
        // coefficients in {0, ±1}, not all zero, first nonzero = +1
        let mut coeffs = vec![0i64; s];
        loop {
            let mut i = 0;
            while i < s {
                coeffs[i] += 1;
                if coeffs[i] < 3 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == s {
                break;
            }
            if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            let h: Vec<Scalar> = coeffs
                .iter()
                .map(|&c| domain.from_integer(if c == 2 { -1 } else { c }))
                .collect();
            consider(&h)?;
        }
    } else {
        let mut total: u64 = 1;
        for _ in 0..s {
            total = total.saturating_mul(p);
            if total > FORM_ENUMERATION_GUARD {
                return Err(Error::Resource(format!(
                    "form enumeration over {p}^{s} coefficient patterns exceeds the guard"
                )));
            }
        }
        // forms up to scalar: first nonzero coefficient is 1
        let mut coeffs = vec![0u64; s];
        loop {
            let mut i = 0;
            while i < s {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == s {
                break;
            }
            if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            let h: Vec<Scalar> = coeffs.iter().map(|&c| Scalar::Residue(c)).collect();
            consider(&h)?;
        }
    }
    Ok(m - best_zeros)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ghw::{code_ghw, CodeSide};
    use crate::samples::{cactus, double_cluster, doubled_triangle};
    use crate::SignedGraph;

    fn q() -> ScalarDomain {
        ScalarDomain::Rationals
    }

    #[test]
    fn zero_count_on_the_doubled_triangle() {
        let x = projective_points(&doubled_triangle(), q()).unwrap();
        let h = vec![q().one(), q().one(), q().one()];
        // vanishes exactly at the three positive-edge columns e_i - e_j
        assert_eq!(zero_count(&x, &h).unwrap(), 3);
    }

    #[test]
    fn form_vanishing_nowhere_counts_zero() {
        let x = projective_points(&doubled_triangle(), q()).unwrap();
        let h = vec![q().from_integer(5), q().from_integer(1), q().from_integer(2)];
        assert_eq!(zero_count(&x, &h).unwrap(), 0);
    }

    #[test]
    fn harary_partition_form_vanishes_everywhere_on_balanced_graphs() {
        // all-positive graph: the all-ones form kills every column
        let g = cactus();
        let x = projective_points(&g, q()).unwrap();
        let h = vec![q().one(); g.vertex_count()];
        assert_eq!(zero_count(&x, &h).unwrap(), g.edge_count());
    }

    #[test]
    fn zero_form_is_rejected() {
        let x = projective_points(&doubled_triangle(), q()).unwrap();
        let h = vec![q().zero(), q().zero(), q().zero()];
        assert!(matches!(zero_count(&x, &h), Err(Error::Argument(_))));
    }

    #[test]
    fn positive_loops_are_rejected() {
        let g = SignedGraph::from_triples(2, &[(1, 1, false), (1, 2, false)]).unwrap();
        assert!(matches!(projective_points(&g, q()), Err(Error::Domain(_))));
    }

    #[test]
    fn double_cluster_frustration_by_points() {
        assert_eq!(frustration_index_points(&double_cluster()).unwrap(), 7);
        assert_eq!(
            frustration_index_points(&double_cluster().all_negative()).unwrap(),
            6
        );
    }

    #[test]
    fn balanced_connected_graph_has_zero_point_frustration() {
        assert_eq!(frustration_index_points(&cactus()).unwrap(), 0);
    }

    #[test]
    fn point_frustration_matches_switching_on_samples() {
        for g in [doubled_triangle(), doubled_triangle().all_negative(), cactus().all_negative()] {
            assert_eq!(
                frustration_index_points(&g).unwrap(),
                g.frustration_index_switching().unwrap()
            );
        }
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_distance_points(&double_cluster(), 3).unwrap(), 4);
        assert_eq!(min_distance_points(&doubled_triangle(), 0).unwrap(), 3);
        assert_eq!(
            min_distance_points(&doubled_triangle().all_negative(), 5).unwrap(),
            2
        );
    }

    #[test]
    fn min_distance_matches_the_matroid_route() {
        for g in [doubled_triangle(), doubled_triangle().all_negative(), double_cluster()] {
            for p in [0u64, 3, 5] {
                assert_eq!(
                    min_distance_points(&g, p).unwrap(),
                    code_ghw(&g, p, CodeSide::Primal, 1).unwrap(),
                    "p = {p}"
                );
            }
        }
    }

    #[test]
    fn min_distance_of_a_single_edge_is_one() {
        let g = SignedGraph::from_triples(2, &[(1, 2, false)]).unwrap();
        assert_eq!(min_distance_points(&g, 3).unwrap(), 1);
        assert_eq!(min_distance_points(&g, 0).unwrap(), 1);
    }

    #[test]
    fn min_distance_rejects_characteristic_two_and_disconnected_input() {
        assert!(matches!(
            min_distance_points(&doubled_triangle(), 2),
            Err(Error::Domain(_))
        ));
        let g = SignedGraph::from_triples(4, &[(1, 2, true), (3, 4, true)]).unwrap();
        assert!(matches!(min_distance_points(&g, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn frustration_bounds_min_distance_on_unbalanced_samples() {
        for g in [doubled_triangle(), double_cluster(), double_cluster().all_negative()] {
            let phi = frustration_index_points(&g).unwrap();
            let delta = min_distance_points(&g, 0).unwrap();
            assert!(delta <= phi);
        }
    }

    #[test]
    fn forms_h_and_minus_h_count_the_same_zeros() {
        let x = projective_points(&double_cluster(), q()).unwrap();
        let h: Vec<Scalar> = (0..10).map(|i| q().from_integer([1, -1, 2][i % 3])).collect();
        let neg: Vec<Scalar> = h.iter().map(|c| q().neg(c)).collect();
        assert_eq!(zero_count(&x, &h).unwrap(), zero_count(&x, &neg).unwrap());
    }
}
