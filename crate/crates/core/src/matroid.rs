//! Matroid engine: vector matroids backed by exact matrices, signed-graphic
//! matroids backed by the balanced-component rank rule, duality, circuit and
//! cocircuit enumeration, nullity, and the non-redundancy degree.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::ExactMatrix;
use crate::graph::{k_subsets, EdgeSet, SignedGraph, MAX_EDGES};

/// A matroid given by its rank function on subsets of `{1, ..., m}`.
pub trait Matroid: Sync {
    fn ground_size(&self) -> usize;

    /// Rank of a subset of the ground set.
    fn rank(&self, subset: EdgeSet) -> usize;

    /// Rank of the whole ground set.
    fn full_rank(&self) -> usize {
        self.rank(EdgeSet::full(self.ground_size()))
    }

    /// Nullity `η(X) = |X| - ρ(X)`.
    fn nullity(&self, subset: EdgeSet) -> usize {
        subset.len() - self.rank(subset)
    }

    /// Rank of `X` in the dual matroid: `ρ*(X) = |X| - ρ(E) + ρ(E ∖ X)`.
    fn dual_rank(&self, subset: EdgeSet) -> usize {
        let complement = subset.complement(self.ground_size());
        subset.len() + self.rank(complement) - self.full_rank()
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn rank(&self, subset: EdgeSet) -> usize {
        (**self).rank(subset)
    }

    fn full_rank(&self) -> usize {
        (**self).full_rank()
    }
}

/// The dual of a matroid, by reference.
pub struct Dual<'a, M: Matroid + ?Sized>(pub &'a M);

impl<M: Matroid + ?Sized> Matroid for Dual<'_, M> {
    fn ground_size(&self) -> usize {
        self.0.ground_size()
    }

    fn rank(&self, subset: EdgeSet) -> usize {
        self.0.dual_rank(subset)
    }
}

/// Vector matroid `M[A]`: independence is linear independence of columns.
pub struct VectorMatroid {
    matrix: ExactMatrix,
    full_rank: OnceLock<usize>,
    circuits: OnceLock<Vec<EdgeSet>>,
    cocircuits: OnceLock<Vec<EdgeSet>>,
}

impl VectorMatroid {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if matrix.cols() > MAX_EDGES {
            return Err(Error::Resource(format!(
                "vector matroid supports at most {MAX_EDGES} columns"
            )));
        }
        Ok(VectorMatroid {
            matrix,
            full_rank: OnceLock::new(),
            circuits: OnceLock::new(),
            cocircuits: OnceLock::new(),
        })
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    /// All circuits, cached after the first enumeration.
    pub fn circuits(&self) -> Result<&[EdgeSet]> {
        if let Some(v) = self.circuits.get() {
            return Ok(v);
        }
        let v = circuits(self)?;
        Ok(self.circuits.get_or_init(|| v))
    }

    /// All cocircuits, cached after the first enumeration.
    pub fn cocircuits(&self) -> Result<&[EdgeSet]> {
        if let Some(v) = self.cocircuits.get() {
            return Ok(v);
        }
        let v = cocircuits(self)?;
        Ok(self.cocircuits.get_or_init(|| v))
    }
}

impl Matroid for VectorMatroid {
    fn ground_size(&self) -> usize {
        self.matrix.cols()
    }

    fn rank(&self, subset: EdgeSet) -> usize {
        let cols: Vec<usize> = subset.iter().map(|i| i - 1).collect();
        self.matrix.rank_of_columns(&cols).expect("indices in bounds")
    }

    fn full_rank(&self) -> usize {
        *self.full_rank.get_or_init(|| self.matrix.rank())
    }
}

/// Signed-graphic matroid with rank rule `ρ(X) = |V| - c_0(X)`.
pub struct SignedGraphicMatroid {
    graph: SignedGraph,
    circuits: OnceLock<Vec<EdgeSet>>,
    cocircuits: OnceLock<Vec<EdgeSet>>,
}

impl SignedGraphicMatroid {
    pub fn new(graph: SignedGraph) -> Self {
        SignedGraphicMatroid {
            graph,
            circuits: OnceLock::new(),
            cocircuits: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn circuits(&self) -> Result<&[EdgeSet]> {
        if let Some(v) = self.circuits.get() {
            return Ok(v);
        }
        let v = circuits(self)?;
        Ok(self.circuits.get_or_init(|| v))
    }

    pub fn cocircuits(&self) -> Result<&[EdgeSet]> {
        if let Some(v) = self.cocircuits.get() {
            return Ok(v);
        }
        let v = cocircuits(self)?;
        Ok(self.cocircuits.get_or_init(|| v))
    }
}

impl Matroid for SignedGraphicMatroid {
    fn ground_size(&self) -> usize {
        self.graph.edge_count()
    }

    fn rank(&self, subset: EdgeSet) -> usize {
        self.graph.vertex_count() - self.graph.balanced_components_of_subset(subset)
    }
}

/// The signed-graphic matroid of a signed graph. Its circuits are the
/// balanced cycles and bowties of the graph.
pub fn signed_graphic_matroid(g: &SignedGraph) -> SignedGraphicMatroid {
    SignedGraphicMatroid::new(g.clone())
}

/// The graphic matroid of the underlying multigraph (signs ignored); equals
/// the signed-graphic matroid of `G_+`.
pub fn graphic_matroid(g: &SignedGraph) -> SignedGraphicMatroid {
    SignedGraphicMatroid::new(g.all_positive())
}

fn enumeration_budget(m: usize, kmax: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 0..=kmax.min(m) {
        if k > 0 {
            binom = binom * (m - k + 1) as u128 / k as u128;
        }
        total = total.saturating_add(binom);
    }
    total
}

const ENUMERATION_GUARD: u128 = 300_000_000;

/// All circuits (inclusion-minimal dependent sets), sorted by
/// (size, lexicographic edge indices). Enumerates subsets of size up to
/// `ρ(E) + 1` in ascending size; a dependent set of nullity one whose
/// one-element deletions are all independent is a circuit.
pub fn circuits<M: Matroid>(m: &M) -> Result<Vec<EdgeSet>> {
    let n = m.ground_size();
    let rank = m.full_rank();
    if enumeration_budget(n, rank + 1) > ENUMERATION_GUARD {
        return Err(Error::Resource(format!(
            "circuit enumeration over {n} elements exceeds the subset budget"
        )));
    }
    let mut out = Vec::new();
    for k in 1..=(rank + 1).min(n) {
        for x in k_subsets(n, k) {
            let r = m.rank(x);
            if r == k {
                continue;
            }
            if k - r != 1 {
                continue;
            }
            let minimal = x.iter().all(|e| {
                let y = x.without(e);
                m.rank(y) == k - 1
            });
            if minimal {
                out.push(x);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All cocircuits: circuits of the dual matroid.
pub fn cocircuits<M: Matroid>(m: &M) -> Result<Vec<EdgeSet>> {
    circuits(&Dual(m))
}

/// Maximum number of non-redundant circuits contained in `X` (the degree of
/// `X`), by exhaustive search over private-element sets: the degree is the
/// largest `P ⊆ X` such that every `e ∈ P` has a witness circuit `C ⊆ X`
/// with `C ∩ P = {e}`.
pub fn nonredundancy_degree<M: Matroid>(m: &M, x: EdgeSet) -> Result<usize> {
    Ok(nonredundancy_degree_with(circuits(m)?.as_slice(), x))
}

/// Same as [`nonredundancy_degree`], reusing a precomputed circuit list.
pub fn nonredundancy_degree_with(circuits: &[EdgeSet], x: EdgeSet) -> usize {
    let inside: Vec<u64> = circuits
        .iter()
        .filter(|c| c.is_subset_of(x))
        .map(|c| c.0)
        .collect();
    if inside.is_empty() {
        return 0;
    }
    let mut covered = 0u64;
    for c in &inside {
        covered |= c;
    }
    let candidates: Vec<u64> = (0..64)
        .filter(|b| covered & (1 << b) != 0)
        .map(|b| 1u64 << b)
        .collect();
    let mut best = 0;
    private_set_dfs(&inside, &candidates, 0, 0, &mut best);
    best
}

fn feasible_private_set(inside: &[u64], p: u64) -> bool {
    let mut rest = p;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        if !inside.iter().any(|&c| c & p == bit) {
            return false;
        }
        rest ^= bit;
    }
    true
}

fn private_set_dfs(inside: &[u64], candidates: &[u64], start: usize, p: u64, best: &mut usize) {
    *best = (*best).max(p.count_ones() as usize);
    for i in start..candidates.len() {
        let p2 = p | candidates[i];
        // infeasibility is monotone under growing P, so pruning is safe
        if feasible_private_set(inside, p2) {
            private_set_dfs(inside, candidates, i + 1, p2, best);
        }
    }
}
