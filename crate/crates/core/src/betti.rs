//! Stanley-Reisner layer: independence complexes of matroids, circuit and
//! cocircuit ideals as monomial generator lists, graded Betti tables of the
//! quotient rings, regularity (from the table and in closed form), and the
//! level property.
//!
//! Betti numbers are computed by summing, over induced subcomplexes, the
//! dimension of reduced homology in the relevant degree. Independence
//! complexes of matroids are pure shellable, so homology is concentrated in
//! the top dimension; the top dimension is read off the signed face count,
//! and re-verified against an exact boundary-matrix rank wherever that
//! elimination is affordable. Restrictions with a coloop are cones and
//! contribute nothing.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ScalarDomain};
use crate::graph::{EdgeSet, SignedGraph};
use crate::matroid::Matroid;

/// Default ground-set guard for the `2^m` induced-subcomplex sweep.
pub const DEFAULT_BETTI_GUARD: usize = 16;

// boundary-matrix verification budget, roughly rows * cols^2
const VERIFY_COST_CAP: u64 = 20_000_000;

/// A pure simplicial complex given by its facets (matroid bases).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertex_count: usize,
    pub facets: Vec<EdgeSet>,
}

/// The independence complex of a matroid: faces are independent sets,
/// facets are bases.
pub fn independence_complex<M: Matroid>(m: &M) -> SimplicialComplex {
    let n = m.ground_size();
    let rho = m.full_rank();
    let faces = faces_by_size(m, EdgeSet::full(n), rho);
    let facets: Vec<EdgeSet> = faces[rho].iter().map(|&bits| EdgeSet(bits)).collect();
    SimplicialComplex { vertex_count: n, facets }
}

/// Graded Betti table of `R/I_Δ(M)` over the rationals, with the projective
/// dimension and regularity read off the entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
    projective_dimension: usize,
    regularity: usize,
}

impl BettiTable {
    /// Map `(i, j) ↦ β_{i,j}` for `i ≥ 1`; zero entries are absent.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.projective_dimension
    }

    pub fn regularity(&self) -> usize {
        self.regularity
    }
}

/// Circuit-ideal generators: the circuits of `M`, as squarefree monomial
/// supports.
pub fn circuit_ideal_generators<M: Matroid>(m: &M) -> Result<Vec<EdgeSet>> {
    crate::matroid::circuits(m)
}

/// Betti table with the default ground-set guard.
pub fn betti_table<M: Matroid>(m: &M) -> Result<BettiTable> {
    betti_table_with_guard(m, DEFAULT_BETTI_GUARD)
}

/// Betti table of the Stanley-Reisner quotient of the independence complex.
pub fn betti_table_with_guard<M: Matroid>(m: &M, guard: usize) -> Result<BettiTable> {
    let n = m.ground_size();
    if n > guard {
        return Err(Error::Resource(format!(
            "Betti computation sweeps 2^{n} subsets; guard is {guard}"
        )));
    }
    let full_rank = m.full_rank();
    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for bits in 1u64..(1u64 << n) {
        let w = EdgeSet(bits);
        let rw = m.rank(w);
        let h = top_homology_dimension(m, w, rw);
        if h > 0 {
            let i = w.len() - rw;
            *entries.entry((i, w.len())).or_insert(0) += h;
        }
    }
    let projective_dimension = n - full_rank;
    let max_i = entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
    assert_eq!(
        max_i, projective_dimension,
        "projective dimension must equal the ground size minus the rank"
    );
    let regularity = entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
    Ok(BettiTable { entries, projective_dimension, regularity })
}

/// Reduced top homology dimension of the induced subcomplex on `w`.
fn top_homology_dimension<M: Matroid>(m: &M, w: EdgeSet, rw: usize) -> usize {
    // a coloop makes the restriction a cone, which is contractible
    for e in w.iter() {
        if rw > 0 && m.rank(w.without(e)) == rw - 1 {
            return 0;
        }
    }
    let faces = faces_by_size(m, w, rw);
    // signed face count T = Σ_F (-1)^{|F|} including the empty face;
    // homology concentrates in the top dimension, so h = (-1)^{ρ(W)} T
    let mut t: i64 = 0;
    for (size, list) in faces.iter().enumerate() {
        let c = list.len() as i64;
        if size % 2 == 0 {
            t += c;
        } else {
            t -= c;
        }
    }
    let h = if rw % 2 == 0 { t } else { -t };
    assert!(h >= 0, "matroid restriction with negative top homology");
    let h = h as usize;
    // exact verification by boundary-matrix rank when affordable
    if rw >= 1 {
        let f_top = faces[rw].len() as u64;
        let f_sub = faces[rw - 1].len() as u64;
        if f_top > 0 && f_sub * f_top * f_top <= VERIFY_COST_CAP {
            let rank = boundary_rank(&faces[rw - 1], &faces[rw], ScalarDomain::Rationals);
            assert_eq!(
                faces[rw].len() - rank,
                h,
                "boundary-matrix homology disagrees with the signed face count"
            );
        }
    }
    h
}

/// Independent subsets of `w`, grouped by cardinality (index = size); the
/// empty face sits at index 0.
fn faces_by_size<M: Matroid>(m: &M, w: EdgeSet, rw: usize) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new(); rw + 1];
    out[0].push(0);
    let elems: Vec<usize> = w.iter().collect();
    let mut stack: Vec<(u64, usize, usize)> = vec![(0, 0, 0)];
    while let Some((mask, size, start)) = stack.pop() {
        if size == rw {
            continue;
        }
        for (pos, &e) in elems.iter().enumerate().skip(start) {
            let cand = mask | (1 << (e - 1));
            if m.rank(EdgeSet(cand)) == size + 1 {
                out[size + 1].push(cand);
                stack.push((cand, size + 1, pos + 1));
            }
        }
    }
    for list in &mut out {
        list.sort_unstable();
    }
    out
}

/// Rank of the simplicial boundary map from size-`d+1` faces to size-`d`
/// faces, over the given domain, via exact elimination.
fn boundary_rank(rows_faces: &[u64], cols_faces: &[u64], domain: ScalarDomain) -> usize {
    let row_index: BTreeMap<u64, usize> =
        rows_faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows = rows_faces.len();
    let cols = cols_faces.len();
    let mut data = vec![0i64; rows * cols];
    for (c, &face) in cols_faces.iter().enumerate() {
        let mut sign = 1i64;
        let mut rest = face;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            let sub = face ^ bit;
            let r = row_index[&sub];
            data[r * cols + c] = sign;
            sign = -sign;
            rest ^= bit;
        }
    }
    ExactMatrix::from_integers(domain, rows, cols, &data)
        .expect("sized by construction")
        .rank()
}

/// Dimensions of the reduced homology of the induced subcomplex on `w`,
/// over the given coefficient domain, computed honestly from boundary-matrix
/// ranks in every degree. Index `k` of the result is `dim H̃_{k-1}`, so
/// index 0 reports `H̃_{-1}` (which is 1 exactly for the empty-face-only
/// complex).
pub fn reduced_homology_dims<M: Matroid>(
    m: &M,
    w: EdgeSet,
    domain: ScalarDomain,
) -> Vec<usize> {
    let rw = m.rank(w);
    let faces = faces_by_size(m, w, rw);
    let mut ranks = vec![0usize; rw + 2]; // ranks[size] = rank ∂_size
    for size in 1..=rw {
        ranks[size] = boundary_rank(&faces[size - 1], &faces[size], domain);
    }
    (0..=rw)
        .map(|size| faces[size].len() - ranks[size] - ranks[size + 1])
        .collect()
}

/// Minimum shift per homological row: `r ↦ min{j : β_{r,j} ≠ 0}`.
pub fn lowest_shifts(t: &BettiTable) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for &(i, j) in t.entries().keys() {
        out.entry(i).and_modify(|v: &mut usize| *v = (*v).min(j)).or_insert(j);
    }
    out
}

/// True when the top homological row carries a single shift. Independence
/// complexes of matroids always produce level rings.
pub fn is_level(t: &BettiTable) -> bool {
    let g = t.projective_dimension();
    if g == 0 {
        return true;
    }
    let shifts: std::collections::BTreeSet<usize> = t
        .entries()
        .keys()
        .filter(|&&(i, _)| i == g)
        .map(|&(_, j)| j)
        .collect();
    shifts.len() == 1
}

/// Which squarefree monomial ideal of the code matroid is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    /// The ideal generated by the circuits of `M`.
    Circuits,
    /// The ideal generated by the cocircuits (circuits of `M*`).
    Cocircuits,
}

/// Castelnuovo-Mumford regularity of `R/I` by the closed form, for
/// loop-free graphs:
///   cocircuit ideal -> `m - s + c_0` away from characteristic 2, else
///   `m - s + c`; circuit ideal (requires every edge to lie in a circuit of
///   the code matroid) -> `s - c_0` away from characteristic 2, else `s - c`.
pub fn regularity_closed_form(
    g: &SignedGraph,
    characteristic: u64,
    ideal: IdealKind,
) -> Result<usize> {
    ScalarDomain::of_characteristic(characteristic)?;
    if g.has_loops() {
        return Err(Error::Domain(
            "regularity closed form requires a loop-free graph".into(),
        ));
    }
    let s = g.vertex_count();
    let m = g.edge_count();
    let full = g.full_edge_set();
    let c = g.components_of_subset(full);
    let c0 = g.balanced_components_of_subset(full);
    let char2 = characteristic == 2;
    match ideal {
        IdealKind::Cocircuits => Ok(if char2 { m + c - s } else { m + c0 - s }),
        IdealKind::Circuits => {
            let matroid = crate::ghw::code_matroid(g, characteristic);
            let circuits = matroid.circuits()?;
            let mut covered = EdgeSet::empty();
            for cset in circuits {
                covered = covered.union(*cset);
            }
            if covered != full {
                let missing = full
                    .iter()
                    .find(|&e| !covered.contains(e))
                    .expect("some edge uncovered");
                return Err(Error::Domain(format!(
                    "edge {missing} lies in no circuit of the code matroid, so the closed form does not apply"
                )));
            }
            Ok(if char2 { s - c } else { s - c0 })
        }
    }
}
