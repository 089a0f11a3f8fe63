//! Generalized Hamming weights of matroids and of incidence-matrix codes,
//! by every route the theory provides: nullity searches, non-redundant
//! circuit unions, rank-drop searches on the dual, graph formulas (cogirth
//! and edge connectivity), Wei duality, and a brute-force codeword oracle.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::ScalarDomain;
use crate::graph::{k_subsets, EdgeSet, SignedGraph};
use crate::incidence::build_incidence;
use crate::matroid::{
    circuits, graphic_matroid, signed_graphic_matroid, Dual, Matroid,
};

/// Which code a table refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeSide {
    /// The incidence-matrix code `C` (row space of the incidence matrix).
    Primal,
    /// The dual code `C⊥`.
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhwKind {
    Code,
    DualCode,
    Matroid,
    DualMatroid,
}

/// The method that produced a weight table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhwMethod {
    NullityDef,
    CircuitUnion,
    RankDrop,
    GraphFormula,
    BettiShift,
    WeiDual,
    CodewordOracle,
}

impl std::fmt::Display for GhwMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GhwMethod::NullityDef => "nullity",
            GhwMethod::CircuitUnion => "circuit-union",
            GhwMethod::RankDrop => "rank-drop",
            GhwMethod::GraphFormula => "graph-formula",
            GhwMethod::BettiShift => "betti-shift",
            GhwMethod::WeiDual => "wei-duality",
            GhwMethod::CodewordOracle => "codeword-oracle",
        };
        write!(f, "{s}")
    }
}

/// A weight hierarchy `r ↦ δ_r`, tagged with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhwTable {
    pub kind: GhwKind,
    pub method: GhwMethod,
    weights: BTreeMap<usize, usize>,
}

impl GhwTable {
    /// Builds a table from weights for `r = 1..=len`; weights must be
    /// strictly increasing.
    pub fn new(kind: GhwKind, method: GhwMethod, weights: &[usize]) -> Result<Self> {
        for w in weights.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Argument(format!(
                    "weight hierarchy not strictly increasing: {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(GhwTable {
            kind,
            method,
            weights: weights.iter().enumerate().map(|(i, &w)| (i + 1, w)).collect(),
        })
    }

    pub fn weight(&self, r: usize) -> Option<usize> {
        self.weights.get(&r).copied()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_vec(&self) -> Vec<usize> {
        self.weights.values().copied().collect()
    }

    pub fn entries(&self) -> &BTreeMap<usize, usize> {
        &self.weights
    }
}

/// `d_r(M)`: the minimum size of a subset of nullity exactly `r`. The
/// search also confirms that the first subset of nullity at least `r`
/// appears at the same size, so the two formulations agree.
pub fn ghw_matroid<M: Matroid>(m: &M, r: usize) -> Result<usize> {
    let eta = m.nullity(EdgeSet::full(m.ground_size()));
    if r < 1 || r > eta {
        return Err(Error::Domain(format!("matroid weight index r={r} outside 1..={eta}")));
    }
    let n = m.ground_size();
    let mut first_at_least: Option<usize> = None;
    for k in r..=n {
        let mut exact = None;
        for x in k_subsets(n, k) {
            let nu = m.nullity(x);
            if nu >= r && first_at_least.is_none() {
                first_at_least = Some(k);
            }
            if nu == r {
                exact = Some(k);
                break;
            }
        }
        if let Some(k) = exact {
            assert_eq!(first_at_least, Some(k), "η = r and η ≥ r minima must agree");
            return Ok(k);
        }
    }
    Err(Error::Domain(format!("no subset of nullity {r}")))
}

/// The whole hierarchy `d_1(M), ..., d_{η(E)}(M)` in one subset sweep.
pub fn ghw_matroid_table<M: Matroid>(m: &M) -> Result<GhwTable> {
    let n = m.ground_size();
    let eta = m.nullity(EdgeSet::full(n));
    let mut first: Vec<Option<usize>> = vec![None; eta + 1];
    let mut missing = eta;
    'outer: for k in 1..=n {
        if missing == 0 {
            break;
        }
        for x in k_subsets(n, k) {
            let nu = m.nullity(x);
            if nu >= 1 && nu <= eta && first[nu].is_none() {
                first[nu] = Some(k);
                missing -= 1;
                if missing == 0 {
                    break 'outer;
                }
            }
        }
    }
    let weights: Vec<usize> = (1..=eta)
        .map(|r| first[r].ok_or_else(|| Error::Domain(format!("no subset of nullity {r}"))))
        .collect::<Result<_>>()?;
    GhwTable::new(GhwKind::Matroid, GhwMethod::NullityDef, &weights)
}

/// Minima of `|C_1 ∪ ... ∪ C_r|` over non-redundant circuit families, for
/// `r = 1..=r_max`. Branch-and-bound over families in index order; pruning
/// relies only on definitional facts (subfamilies of non-redundant families
/// are non-redundant, and unions only grow).
pub fn circuit_union_minima(circuit_list: &[EdgeSet], r_max: usize) -> Vec<Option<usize>> {
    let mut sorted: Vec<EdgeSet> = circuit_list.to_vec();
    sorted.sort();
    let masks: Vec<u64> = sorted.iter().map(|c| c.0).collect();
    let mut best = vec![usize::MAX; r_max + 1];
    let mut family: Vec<u64> = Vec::new();
    union_dfs(&masks, 0, &mut family, 0, &mut best, r_max);
    (1..=r_max)
        .map(|r| if best[r] == usize::MAX { None } else { Some(best[r]) })
        .collect()
}

fn union_dfs(
    masks: &[u64],
    start: usize,
    family: &mut Vec<u64>,
    union: u64,
    best: &mut [usize],
    r_max: usize,
) {
    let r = family.len();
    if r > 0 {
        let size = union.count_ones() as usize;
        if size < best[r] {
            best[r] = size;
        }
    }
    if r == r_max {
        return;
    }
    for i in start..masks.len() {
        let c = masks[i];
        if c & !union == 0 {
            // contained in the union: the family would be redundant
            continue;
        }
        let u2 = union | c;
        let size2 = u2.count_ones() as usize;
        if ((r + 1)..=r_max).all(|rr| best[rr] <= size2) {
            continue;
        }
        family.push(c);
        if family_non_redundant(family) {
            union_dfs(masks, i + 1, family, u2, best, r_max);
        }
        family.pop();
    }
}

fn family_non_redundant(family: &[u64]) -> bool {
    for (j, &c) in family.iter().enumerate() {
        let mut others = 0u64;
        for (i, &o) in family.iter().enumerate() {
            if i != j {
                others |= o;
            }
        }
        if c & !others == 0 {
            return false;
        }
    }
    true
}

/// `d_r(M)` as the minimum size of a union of `r` non-redundant circuits.
pub fn ghw_matroid_via_circuits<M: Matroid>(m: &M, r: usize) -> Result<usize> {
    let eta = m.nullity(EdgeSet::full(m.ground_size()));
    if r < 1 || r > eta {
        return Err(Error::Domain(format!("matroid weight index r={r} outside 1..={eta}")));
    }
    let cs = circuits(m)?;
    circuit_union_minima(&cs, r)[r - 1]
        .ok_or_else(|| Error::Domain(format!("no non-redundant family of {r} circuits")))
}

/// `d_r(M*)` by the rank-drop form: the minimum `|X|` with
/// `ρ(E ∖ X) = ρ(E) - r`.
pub fn ghw_dual_matroid_via_rank<M: Matroid>(m: &M, r: usize) -> Result<usize> {
    let rho = m.full_rank();
    if r < 1 || r > rho {
        return Err(Error::Domain(format!("dual weight index r={r} outside 1..={rho}")));
    }
    let n = m.ground_size();
    for k in r..=n {
        for x in k_subsets(n, k) {
            if m.rank(x.complement(n)) == rho - r {
                return Ok(k);
            }
        }
    }
    Err(Error::Domain(format!("no subset drops the rank by {r}")))
}

/// Dimension of the incidence-matrix code of `g` in the given
/// characteristic: `s - c_0` away from characteristic 2, `s - c` otherwise.
pub fn code_dimension(g: &SignedGraph, characteristic: u64) -> usize {
    let full = g.full_edge_set();
    let s = g.vertex_count();
    if characteristic == 2 || g.is_balanced() {
        s - g.components_of_subset(full)
    } else {
        s - g.balanced_components_of_subset(full)
    }
}

/// The matroid of the incidence-matrix code at a characteristic: the
/// signed-graphic matroid away from characteristic 2, the graphic matroid of
/// the underlying multigraph in characteristic 2.
pub fn code_matroid(g: &SignedGraph, characteristic: u64) -> crate::matroid::SignedGraphicMatroid {
    if characteristic == 2 {
        graphic_matroid(g)
    } else {
        signed_graphic_matroid(g)
    }
}

fn validate_characteristic(characteristic: u64) -> Result<()> {
    ScalarDomain::of_characteristic(characteristic).map(|_| ())
}

/// `δ_r` of the incidence-matrix code (or its dual) over any field of the
/// given characteristic, through the matroid route.
pub fn code_ghw(g: &SignedGraph, characteristic: u64, side: CodeSide, r: usize) -> Result<usize> {
    validate_characteristic(characteristic)?;
    let m = code_matroid(g, characteristic);
    let k = code_dimension(g, characteristic);
    match side {
        CodeSide::Primal => {
            if r < 1 || r > k {
                return Err(Error::Domain(format!("code weight index r={r} outside 1..={k}")));
            }
            ghw_matroid(&Dual(&m), r)
        }
        CodeSide::Dual => {
            let dual_dim = g.edge_count() - k;
            if r < 1 || r > dual_dim {
                return Err(Error::Domain(format!(
                    "dual code weight index r={r} outside 1..={dual_dim}"
                )));
            }
            ghw_matroid(&m, r)
        }
    }
}

/// Full weight hierarchy of the code (or its dual) via the matroid route.
pub fn code_ghw_table(g: &SignedGraph, characteristic: u64, side: CodeSide) -> Result<GhwTable> {
    validate_characteristic(characteristic)?;
    let m = code_matroid(g, characteristic);
    let table = match side {
        CodeSide::Primal => ghw_matroid_table(&Dual(&m))?,
        CodeSide::Dual => ghw_matroid_table(&m)?,
    };
    let kind = match side {
        CodeSide::Primal => GhwKind::Code,
        CodeSide::Dual => GhwKind::DualCode,
    };
    GhwTable::new(kind, GhwMethod::NullityDef, &table.as_vec())
}

/// `δ_r` computed purely from graph invariants: the r-th cogirth or r-th
/// edge connectivity for `C`, minimal unions of non-redundant graph circuits
/// for `C⊥`. Requires a connected graph.
pub fn code_ghw_graph_formula(
    g: &SignedGraph,
    characteristic: u64,
    side: CodeSide,
    r: usize,
) -> Result<usize> {
    validate_characteristic(characteristic)?;
    if !g.is_connected() {
        return Err(Error::Domain("graph formulas require a connected graph".into()));
    }
    let s = g.vertex_count();
    let m = g.edge_count();
    let balanced = g.is_balanced();
    let graphic_case = characteristic == 2 || balanced;
    match side {
        CodeSide::Primal => {
            if graphic_case {
                if r < 1 || r >= s {
                    return Err(Error::Domain(format!(
                        "code weight index r={r} outside 1..={}",
                        s - 1
                    )));
                }
                g.edge_connectivity_r(r)
            } else {
                if r < 1 || r > s {
                    return Err(Error::Domain(format!("code weight index r={r} outside 1..={s}")));
                }
                g.cogirth_r(r)
            }
        }
        CodeSide::Dual => {
            let dual_dim = if graphic_case { m - s + 1 } else { m - s };
            if r < 1 || r > dual_dim {
                return Err(Error::Domain(format!(
                    "dual code weight index r={r} outside 1..={dual_dim}"
                )));
            }
            let family: Vec<EdgeSet> = if graphic_case {
                g.all_positive().graph_circuits()
            } else {
                g.graph_circuits()
            };
            circuit_union_minima(&family, r)[r - 1]
                .ok_or_else(|| Error::Domain(format!("no non-redundant family of {r} cycles")))
        }
    }
}

/// `δ_r(C)` as the minimum union of `r` non-redundant cocircuits of the
/// signed graph, enumerated graph-theoretically as minimal cutsets.
pub fn code_ghw_cocircuit_union(g: &SignedGraph, characteristic: u64, r: usize) -> Result<usize> {
    validate_characteristic(characteristic)?;
    if !g.is_connected() {
        return Err(Error::Domain("graph formulas require a connected graph".into()));
    }
    let base = if characteristic == 2 { g.all_positive() } else { g.clone() };
    let cuts = base.cocircuits_by_cutsets()?;
    circuit_union_minima(&cuts, r)[r - 1]
        .ok_or_else(|| Error::Domain(format!("no non-redundant family of {r} cocircuits")))
}

/// Wei's duality: `{δ_r(C)} = {1..m} ∖ {m + 1 - δ_r(C⊥)}` as sets.
pub fn wei_duality_check(
    weights_c: &GhwTable,
    weights_c_dual: &GhwTable,
    m: usize,
) -> Result<bool> {
    if weights_c.len() + weights_c_dual.len() != m {
        return Err(Error::Argument(format!(
            "incomplete tables: {} + {} weights for length {m}",
            weights_c.len(),
            weights_c_dual.len()
        )));
    }
    let primal: std::collections::BTreeSet<usize> = weights_c.as_vec().into_iter().collect();
    let reconstructed: std::collections::BTreeSet<usize> =
        wei_complement(&weights_c_dual.as_vec(), m).into_iter().collect();
    Ok(primal == reconstructed)
}

/// The primal weights Wei duality predicts from the dual table.
pub fn wei_complement(dual_weights: &[usize], m: usize) -> Vec<usize> {
    let excluded: std::collections::BTreeSet<usize> =
        dual_weights.iter().map(|&d| m + 1 - d).collect();
    (1..=m).filter(|v| !excluded.contains(v)).collect()
}

const ORACLE_CODEWORD_GUARD: u64 = 1_000_000;
const ORACLE_LENGTH_GUARD: usize = 22;

/// Exact weight hierarchy of the code (or its dual) over GF(p) by full
/// codeword enumeration: every codeword's support is tallied and
/// `δ_r = min{|X| : the subcode supported inside X has dimension ≥ r}`.
/// Test oracle; guarded by `p^dim ≤ 10^6`.
pub fn code_ghw_oracle_table(g: &SignedGraph, p: u64, side: CodeSide) -> Result<GhwTable> {
    let domain = ScalarDomain::prime_field(p)?;
    let m = g.edge_count();
    if m > ORACLE_LENGTH_GUARD {
        return Err(Error::Resource(format!(
            "oracle support tally needs 2^{m} counters"
        )));
    }
    let a = build_incidence(g, domain).into_matrix();
    let generators: Vec<Vec<u64>> = match side {
        CodeSide::Primal => row_space_basis(&a, p),
        CodeSide::Dual => a
            .kernel_basis()
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .map(|s| match s {
                        crate::exact::Scalar::Residue(x) => x,
                        _ => unreachable!(),
                    })
                    .collect()
            })
            .collect(),
    };
    let dim = generators.len();
    let mut words: u64 = 1;
    for _ in 0..dim {
        words = words.saturating_mul(p);
        if words > ORACLE_CODEWORD_GUARD {
            return Err(Error::Resource(format!(
                "oracle would enumerate more than {ORACLE_CODEWORD_GUARD} codewords"
            )));
        }
    }
    let mut counts = vec![0u32; 1usize << m];
    let mut current = vec![0u64; m];
    tally_codewords(&generators, 0, &mut current, p, &mut counts);
    // subset-sum transform: counts[X] = #codewords with support ⊆ X
    for b in 0..m {
        let bit = 1usize << b;
        for mask in 0..counts.len() {
            if mask & bit != 0 {
                counts[mask] += counts[mask ^ bit];
            }
        }
    }
    let mut thresholds = Vec::new(); // p^r for r = 1..=dim
    let mut v = 1u64;
    for _ in 0..dim {
        v *= p;
        thresholds.push(v);
    }
    let mut best = vec![usize::MAX; dim + 1];
    for (mask, &cnt) in counts.iter().enumerate() {
        let size = (mask as u64).count_ones() as usize;
        for r in 1..=dim {
            if u64::from(cnt) >= thresholds[r - 1] && size < best[r] {
                best[r] = size;
            }
        }
    }
    let weights: Vec<usize> = (1..=dim).map(|r| best[r]).collect();
    if weights.iter().any(|&w| w == usize::MAX) {
        return Err(Error::Domain("support tally never reached the requested dimension".into()));
    }
    let kind = match side {
        CodeSide::Primal => GhwKind::Code,
        CodeSide::Dual => GhwKind::DualCode,
    };
    GhwTable::new(kind, GhwMethod::CodewordOracle, &weights)
}

/// Single-weight form of the codeword oracle.
pub fn code_ghw_bruteforce_oracle(
    g: &SignedGraph,
    p: u64,
    side: CodeSide,
    r: usize,
) -> Result<usize> {
    let table = code_ghw_oracle_table(g, p, side)?;
    table
        .weight(r)
        .ok_or_else(|| Error::Domain(format!("weight index r={r} outside 1..={}", table.len())))
}

fn tally_codewords(
    generators: &[Vec<u64>],
    level: usize,
    current: &mut Vec<u64>,
    p: u64,
    counts: &mut [u32],
) {
    if level == generators.len() {
        let mut mask = 0usize;
        for (j, &x) in current.iter().enumerate() {
            if x != 0 {
                mask |= 1 << j;
            }
        }
        counts[mask] += 1;
        return;
    }
    // visit coefficients 0..p for this generator; the p-th addition wraps
    // the total to p * generator ≡ 0, restoring the caller's state
    for _ in 0..p {
        tally_codewords(generators, level + 1, current, p, counts);
        for (j, x) in current.iter_mut().enumerate() {
            *x = (*x + generators[level][j]) % p;
        }
    }
}

/// Row-reduced basis of the row space of `a` over GF(p).
fn row_space_basis(a: &crate::exact::ExactMatrix, p: u64) -> Vec<Vec<u64>> {
    let rows = a.rows();
    let cols = a.cols();
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| match a.entry(r, c) {
                    crate::exact::Scalar::Residue(x) => *x,
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows).find(|&r| m[r][c] != 0);
        let Some(pr) = pivot else { continue };
        m.swap(rank, pr);
        let inv = mod_inv(m[rank][c], p);
        for j in 0..cols {
            m[rank][j] = m[rank][j] * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    let t = f * m[rank][j] % p;
                    m[r][j] = (m[r][j] + p - t) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    m.truncate(rank);
    m
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::VectorMatroid;
    use crate::samples::{cactus, double_cluster, doubled_triangle};

    fn q() -> ScalarDomain {
        ScalarDomain::Rationals
    }

    fn vm(g: &SignedGraph, domain: ScalarDomain) -> VectorMatroid {
        VectorMatroid::new(build_incidence(g, domain).into_matrix()).unwrap()
    }

    #[test]
    fn doubled_triangle_matroid_hierarchy() {
        let m = vm(&doubled_triangle(), q());
        assert_eq!(ghw_matroid(&m, 1).unwrap(), 3);
        assert_eq!(ghw_matroid(&m, 2).unwrap(), 5);
        assert_eq!(ghw_matroid(&m, 3).unwrap(), 6);
        assert_eq!(ghw_matroid_table(&m).unwrap().as_vec(), vec![3, 5, 6]);
    }

    #[test]
    fn cactus_graphic_matroid_hierarchy() {
        let m = graphic_matroid(&cactus());
        assert_eq!(ghw_matroid_table(&m).unwrap().as_vec(), vec![3, 6, 9, 13]);
    }

    #[test]
    fn single_circuit_matroid_first_weight_is_the_circuit_size() {
        for k in 3..=6 {
            let triples: Vec<(usize, usize, bool)> =
                (1..=k).map(|i| (i, i % k + 1, false)).collect();
            let g = SignedGraph::from_triples(k, &triples).unwrap();
            let m = graphic_matroid(&g);
            assert_eq!(ghw_matroid(&m, 1).unwrap(), k);
        }
    }

    #[test]
    fn matroid_weight_range_errors() {
        let m = vm(&doubled_triangle(), q());
        assert!(matches!(ghw_matroid(&m, 0), Err(Error::Domain(_))));
        assert!(matches!(ghw_matroid(&m, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn circuit_union_route_agrees_with_nullity_route() {
        for g in [doubled_triangle(), doubled_triangle().all_positive(), cactus()] {
            let m = vm(&g, q());
            let eta = m.nullity(EdgeSet::full(m.ground_size()));
            for r in 1..=eta {
                assert_eq!(
                    ghw_matroid_via_circuits(&m, r).unwrap(),
                    ghw_matroid(&m, r).unwrap()
                );
            }
        }
    }

    #[test]
    fn cactus_circuit_unions() {
        let m = graphic_matroid(&cactus());
        assert_eq!(ghw_matroid_via_circuits(&m, 2).unwrap(), 6);
        let mneg = vm(&cactus().all_negative(), q());
        assert_eq!(ghw_matroid_via_circuits(&mneg, 3).unwrap(), 14);
        // r = 1 is the girth of the circuit family
        assert_eq!(ghw_matroid_via_circuits(&mneg, 1).unwrap(), 4);
    }

    #[test]
    fn dual_rank_route_examples() {
        let m = vm(&doubled_triangle(), q());
        assert_eq!(ghw_dual_matroid_via_rank(&m, 1).unwrap(), 3);
        let mp = vm(&doubled_triangle().all_positive(), q());
        assert_eq!(ghw_dual_matroid_via_rank(&mp, 1).unwrap(), 4);
        assert_eq!(ghw_dual_matroid_via_rank(&mp, 2).unwrap(), 6);
        let mn = vm(&doubled_triangle().all_negative(), q());
        for (r, expect) in [(1, 2), (2, 4), (3, 6)] {
            assert_eq!(ghw_dual_matroid_via_rank(&mn, r).unwrap(), expect);
            assert_eq!(ghw_matroid(&Dual(&mn), r).unwrap(), expect);
        }
    }

    #[test]
    fn code_ghw_examples() {
        let g = double_cluster();
        assert_eq!(code_ghw(&g, 0, CodeSide::Primal, 1).unwrap(), 4);
        assert_eq!(code_ghw(&g, 3, CodeSide::Primal, 1).unwrap(), 4);
        assert_eq!(code_ghw(&g, 2, CodeSide::Primal, 1).unwrap(), 3);
        let c = cactus();
        let table = code_ghw_table(&c, 2, CodeSide::Primal).unwrap();
        assert_eq!(table.as_vec(), vec![1, 3, 4, 5, 7, 8, 10, 11, 13, 14]);
    }

    #[test]
    fn graph_formula_examples() {
        assert_eq!(
            code_ghw_graph_formula(&doubled_triangle(), 0, CodeSide::Primal, 2).unwrap(),
            5
        );
        assert_eq!(
            code_ghw_graph_formula(&doubled_triangle().all_positive(), 5, CodeSide::Primal, 1)
                .unwrap(),
            4
        );
        assert_eq!(
            code_ghw_graph_formula(&cactus().all_negative(), 0, CodeSide::Dual, 2).unwrap(),
            10
        );
    }

    #[test]
    fn graph_formula_rejects_disconnected_graphs() {
        let g = SignedGraph::from_triples(4, &[(1, 2, true), (3, 4, true)]).unwrap();
        assert!(matches!(
            code_ghw_graph_formula(&g, 0, CodeSide::Primal, 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cocircuit_union_form_matches_the_matroid_route() {
        for g in [doubled_triangle(), doubled_triangle().all_positive(), doubled_triangle().all_negative()] {
            let k = code_dimension(&g, 0);
            for r in 1..=k {
                assert_eq!(
                    code_ghw_cocircuit_union(&g, 0, r).unwrap(),
                    code_ghw(&g, 0, CodeSide::Primal, r).unwrap()
                );
            }
        }
    }

    #[test]
    fn wei_duality_on_the_cactus() {
        let c = cactus();
        let dual = code_ghw_table(&c, 2, CodeSide::Dual).unwrap();
        assert_eq!(dual.as_vec(), vec![3, 6, 9, 13]);
        let primal = code_ghw_table(&c, 2, CodeSide::Primal).unwrap();
        assert!(wei_duality_check(&primal, &dual, 14).unwrap());
        assert_eq!(
            wei_complement(&dual.as_vec(), 14),
            vec![1, 3, 4, 5, 7, 8, 10, 11, 13, 14]
        );
    }

    #[test]
    fn wei_duality_on_the_negative_cactus() {
        let g = cactus().all_negative();
        let dual = code_ghw_table(&g, 0, CodeSide::Dual).unwrap();
        assert_eq!(dual.as_vec(), vec![4, 10, 14]);
        assert_eq!(
            wei_complement(&dual.as_vec(), 14),
            vec![2, 3, 4, 6, 7, 8, 9, 10, 12, 13, 14]
        );
        let primal = code_ghw_table(&g, 0, CodeSide::Primal).unwrap();
        assert!(wei_duality_check(&primal, &dual, 14).unwrap());
    }

    #[test]
    fn wei_duality_for_a_full_code() {
        // a tree: the code is all of K^m, the dual code is zero
        let g = SignedGraph::from_triples(4, &[(1, 2, false), (2, 3, false), (3, 4, false)])
            .unwrap();
        let primal = code_ghw_table(&g, 0, CodeSide::Primal).unwrap();
        assert_eq!(primal.as_vec(), vec![1, 2, 3]);
        let dual = GhwTable::new(GhwKind::DualCode, GhwMethod::NullityDef, &[]).unwrap();
        assert!(wei_duality_check(&primal, &dual, 3).unwrap());
    }

    #[test]
    fn wei_duality_incomplete_tables_are_an_argument_error() {
        let t = GhwTable::new(GhwKind::Code, GhwMethod::NullityDef, &[1, 2]).unwrap();
        let d = GhwTable::new(GhwKind::DualCode, GhwMethod::NullityDef, &[]).unwrap();
        assert!(matches!(wei_duality_check(&t, &d, 5), Err(Error::Argument(_))));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            code_ghw_bruteforce_oracle(&doubled_triangle().all_negative(), 3, CodeSide::Primal, 1)
                .unwrap(),
            2
        );
        assert_eq!(
            code_ghw_bruteforce_oracle(&doubled_triangle(), 3, CodeSide::Primal, 3).unwrap(),
            6
        );
        let single = SignedGraph::from_triples(2, &[(1, 2, false)]).unwrap();
        assert_eq!(code_ghw_bruteforce_oracle(&single, 3, CodeSide::Primal, 1).unwrap(), 1);
    }

    #[test]
    fn oracle_matches_matroid_route_on_samples() {
        for g in [doubled_triangle(), doubled_triangle().all_negative()] {
            for p in [2u64, 3, 5] {
                for side in [CodeSide::Primal, CodeSide::Dual] {
                    let oracle = code_ghw_oracle_table(&g, p, side).unwrap();
                    let matroid_route = code_ghw_table(&g, p, side).unwrap();
                    assert_eq!(oracle.as_vec(), matroid_route.as_vec(), "p={p} side={side:?}");
                }
            }
        }
    }

    #[test]
    fn oracle_matches_literal_subspace_enumeration_on_tiny_codes() {
        // literal route: enumerate all r x k coefficient matrices over GF(p),
        // keep those of rank r, and take supports of the spanned subcodes
        let g = doubled_triangle().all_negative();
        let p = 2u64;
        let domain = ScalarDomain::prime_field(p).unwrap();
        let a = build_incidence(&g, domain).into_matrix();
        let gens = row_space_basis(&a, p);
        let k = gens.len();
        let m = a.cols();
        for r in 1..=2usize {
            let mut best = usize::MAX;
            let total = p.pow((r * k) as u32);
            for code in 0..total {
                let mut rowset: Vec<Vec<u64>> = Vec::new();
                let mut c = code;
                for _ in 0..r {
                    let mut row = vec![0u64; k];
                    for x in row.iter_mut() {
                        *x = c % p;
                        c /= p;
                    }
                    rowset.push(row);
                }
                // spanned vectors: coefficient rows times the generator matrix
                let vecs: Vec<Vec<u64>> = rowset
                    .iter()
                    .map(|row| {
                        let mut v = vec![0u64; m];
                        for (i, &ci) in row.iter().enumerate() {
                            for j in 0..m {
                                v[j] = (v[j] + ci * gens[i][j]) % p;
                            }
                        }
                        v
                    })
                    .collect();
                // rank of the coefficient matrix over GF(p)
                let mut mm = rowset.clone();
                let mut rank = 0;
                for col in 0..k {
                    let piv = (rank..r).find(|&i| mm[i][col] != 0);
                    let Some(piv) = piv else { continue };
                    mm.swap(rank, piv);
                    let inv = mod_inv(mm[rank][col], p);
                    for j in 0..k {
                        mm[rank][j] = mm[rank][j] * inv % p;
                    }
                    for i in 0..r {
                        if i != rank && mm[i][col] != 0 {
                            let f = mm[i][col];
                            for j in 0..k {
                                let t = f * mm[rank][j] % p;
                                mm[i][j] = (mm[i][j] + p - t) % p;
                            }
                        }
                    }
                    rank += 1;
                }
                if rank < r {
                    continue;
                }
                let mut support = 0usize;
                for v in &vecs {
                    for (j, &x) in v.iter().enumerate() {
                        if x != 0 {
                            support |= 1 << j;
                        }
                    }
                }
                best = best.min(support.count_ones() as usize);
            }
            assert_eq!(
                code_ghw_bruteforce_oracle(&g, p, CodeSide::Primal, r).unwrap(),
                best
            );
        }
    }

    #[test]
    fn oracle_guard_rejects_large_codes() {
        // GF(7) on an 8-vertex connected unbalanced graph: 7^8 > 10^6
        let mut triples = vec![(1usize, 1usize, true)];
        for i in 1..8 {
            triples.push((i, i + 1, false));
        }
        let g = SignedGraph::from_triples(8, &triples).unwrap();
        assert!(matches!(
            code_ghw_oracle_table(&g, 7, CodeSide::Primal),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn strict_monotonicity_is_enforced() {
        assert!(GhwTable::new(GhwKind::Code, GhwMethod::NullityDef, &[2, 2]).is_err());
        assert!(GhwTable::new(GhwKind::Code, GhwMethod::NullityDef, &[1, 3, 4]).is_ok());
    }
}
