//! Signed multigraphs and their purely graph-theoretic invariants: balance,
//! balanced-component counting, cycles, bowties, circuits, r-th cogirth,
//! r-th edge connectivity, and the frustration index by switching.
//!
//! Vertices are 1-based, edges are identified by their 1-based position in
//! the edge list; that order fixes incidence-matrix column order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Largest supported ground set; edge subsets are 64-bit masks.
pub const MAX_EDGES: usize = 63;
/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 63;

/// Edge sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    /// Product of two signs.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// An edge of a signed multigraph; `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A subset of edge indices, stored as a bitmask (edge `i` ↔ bit `i - 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub fn empty() -> Self {
        EdgeSet(0)
    }

    /// The full set `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_EDGES);
        EdgeSet(if m == 0 { 0 } else { (1u64 << m) - 1 })
    }

    /// Builds a set from 1-based edge indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &i in indices {
            assert!(i >= 1 && i <= MAX_EDGES, "edge index out of range");
            bits |= 1 << (i - 1);
        }
        EdgeSet(bits)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index >= 1 && index <= MAX_EDGES && self.0 & (1 << (index - 1)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index >= 1 && index <= MAX_EDGES);
        self.0 |= 1 << (index - 1);
    }

    pub fn without(&self, index: usize) -> EdgeSet {
        EdgeSet(self.0 & !(1 << (index - 1)))
    }

    pub fn union(&self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn is_subset_of(&self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{1, ..., m}`.
    pub fn complement(&self, m: usize) -> EdgeSet {
        EdgeSet(EdgeSet::full(m).0 & !self.0)
    }

    /// 1-based edge indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..64u32).filter_map(move |b| {
            if bits & (1 << b) != 0 {
                Some(b as usize + 1)
            } else {
                None
            }
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

// Order by cardinality, then lexicographically on the ascending index lists.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                std::cmp::Ordering::Equal
            } else {
                let low = diff & diff.wrapping_neg();
                if self.0 & low != 0 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            }
        })
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Iterator over all `k`-subsets of `{1, ..., m}` as bitmasks, ascending.
pub(crate) struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

pub(crate) fn k_subsets(m: usize, k: usize) -> KSubsets {
    assert!(m <= MAX_EDGES);
    if k > m {
        return KSubsets { next: None, limit: 0 };
    }
    let limit = if m == 0 { 1 } else { 1u64 << m };
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    KSubsets { next: Some(first), limit }
}

impl Iterator for KSubsets {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        let cur = self.next?;
        if cur >= self.limit && cur != 0 {
            self.next = None;
            return None;
        }
        // Gosper's hack for the next subset of the same cardinality.
        self.next = if cur == 0 {
            None
        } else {
            let t = cur | (cur - 1);
            let succ = (t + 1) | (((!t & (t + 1)) - 1) >> (cur.trailing_zeros() + 1));
            if succ >= self.limit {
                None
            } else {
                Some(succ)
            }
        };
        Some(EdgeSet(cur))
    }
}

/// A cycle (simple closed path) of a signed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub edges: EdgeSet,
    /// Bitmask of 1-based vertices on the cycle (bit `v - 1`).
    pub vertices: u64,
    pub balanced: bool,
}

/// A signed multigraph: a vertex count and an ordered list of signed edges.
/// Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::Resource(format!(
                "at most {MAX_VERTICES} vertices supported"
            )));
        }
        if edges.len() > MAX_EDGES {
            return Err(Error::Resource(format!("at most {MAX_EDGES} edges supported")));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.u < 1 || e.u > vertex_count || e.v < 1 || e.v > vertex_count {
                return Err(Error::Argument(format!(
                    "edge {} has endpoint out of range 1..={}",
                    i + 1,
                    vertex_count
                )));
            }
        }
        Ok(SignedGraph { vertex_count, edges })
    }

    /// Convenience constructor from `(u, v, sign)` triples; `true` = negative.
    pub fn from_triples(vertex_count: usize, triples: &[(usize, usize, bool)]) -> Result<Self> {
        let edges = triples
            .iter()
            .map(|&(u, v, neg)| Edge {
                u,
                v,
                sign: if neg { Sign::Minus } else { Sign::Plus },
            })
            .collect();
        SignedGraph::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index - 1]
    }

    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    /// The positive signed graph `G_+` on the same underlying multigraph.
    pub fn all_positive(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: Sign::Plus, ..*e })
            .collect();
        SignedGraph { vertex_count: self.vertex_count, edges }
    }

    /// The negative signed graph `G_-` on the same underlying multigraph.
    pub fn all_negative(&self) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: Sign::Minus, ..*e })
            .collect();
        SignedGraph { vertex_count: self.vertex_count, edges }
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.is_loop())
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            let key = (e.u.min(e.v), e.u.max(e.v));
            if !seen.insert(key) {
                return false;
            }
        }
        true
    }

    fn stats_with_kept(&self, kept: EdgeSet) -> (usize, usize) {
        let s = self.vertex_count;
        let mut dsu = ParityDsu::new(s);
        for (idx, e) in self.edges.iter().enumerate() {
            if kept.0 & (1 << idx) == 0 {
                continue;
            }
            if e.is_loop() {
                if e.sign.is_negative() {
                    dsu.mark_unbalanced(e.u - 1);
                }
            } else {
                dsu.union(e.u - 1, e.v - 1, e.sign.is_negative());
            }
        }
        dsu.counts()
    }

    /// Number of connected components of `(V, E ∖ removed)`; isolated
    /// vertices count as components.
    pub fn connected_components(&self, removed: EdgeSet) -> usize {
        self.stats_with_kept(removed.complement(self.edge_count())).0
    }

    /// Number of balanced connected components `c_0` of `(V, E ∖ removed)`.
    ///
    /// A component is balanced when some vertex signing makes every link's
    /// sign the product of its endpoint signs and no negative loop is
    /// present; positive loops never affect balance; isolated vertices are
    /// balanced.
    pub fn balanced_component_count(&self, removed: EdgeSet) -> usize {
        self.stats_with_kept(removed.complement(self.edge_count())).1
    }

    /// `c_0(X)` for the subgraph with edge set `kept` and full vertex set.
    pub fn balanced_components_of_subset(&self, kept: EdgeSet) -> usize {
        self.stats_with_kept(kept).1
    }

    /// `c(X)` for the subgraph with edge set `kept` and full vertex set.
    pub fn components_of_subset(&self, kept: EdgeSet) -> usize {
        self.stats_with_kept(kept).0
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.connected_components(EdgeSet::empty()) == 1
    }

    pub fn is_balanced(&self) -> bool {
        let (c, c0) = self.stats_with_kept(self.full_edge_set());
        c == c0
    }

    fn link_adjacency(&self) -> Vec<Vec<(usize, usize, Sign)>> {
        // adj[v] = (neighbor, edge index 0-based, sign), links only
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (idx, e) in self.edges.iter().enumerate() {
            if !e.is_loop() {
                adj[e.u - 1].push((e.v - 1, idx, e.sign));
                adj[e.v - 1].push((e.u - 1, idx, e.sign));
            }
        }
        adj
    }

    /// All cycles (simple closed paths): loops, parallel pairs, and longer
    /// cycles, each tagged balanced or unbalanced by the parity of its
    /// negative edges. Sorted by (size, lexicographic edge indices).
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        // loops are cycles of length 1
        for (idx, e) in self.edges.iter().enumerate() {
            if e.is_loop() {
                out.push(Cycle {
                    edges: EdgeSet(1 << idx),
                    vertices: 1 << (e.u - 1),
                    balanced: !e.sign.is_negative(),
                });
            }
        }
        // parallel pairs are cycles of length 2
        for i in 0..self.edges.len() {
            let a = &self.edges[i];
            if a.is_loop() {
                continue;
            }
            for j in i + 1..self.edges.len() {
                let b = &self.edges[j];
                if b.is_loop() {
                    continue;
                }
                let same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
                if same {
                    out.push(Cycle {
                        edges: EdgeSet((1 << i) | (1 << j)),
                        vertices: (1u64 << (a.u - 1)) | (1 << (a.v - 1)),
                        balanced: a.sign == b.sign,
                    });
                }
            }
        }
        // cycles of length >= 3: DFS from the minimum vertex of each cycle
        let adj = self.link_adjacency();
        let mut path: Vec<usize> = Vec::new();
        for v0 in 0..self.vertex_count {
            self.cycle_dfs(&adj, v0, v0, 1u64 << v0, EdgeSet::empty(), 0, &mut path, &mut out);
        }
        out.sort_by(|a, b| a.edges.cmp(&b.edges));
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn cycle_dfs(
        &self,
        adj: &[Vec<(usize, usize, Sign)>],
        v0: usize,
        cur: usize,
        visited: u64,
        edges: EdgeSet,
        negatives: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Cycle>,
    ) {
        for &(x, e, sgn) in &adj[cur] {
            if edges.0 & (1 << e) != 0 {
                continue;
            }
            let neg2 = negatives + usize::from(sgn.is_negative());
            if x == v0 {
                // closing edge; only cycles of length >= 3 here, and each
                // undirected cycle once (first inner vertex < last)
                if path.len() >= 2 && path[0] < cur {
                    out.push(Cycle {
                        edges: EdgeSet(edges.0 | (1 << e)),
                        vertices: visited,
                        balanced: neg2 % 2 == 0,
                    });
                }
            } else if x > v0 && visited & (1 << x) == 0 {
                path.push(x);
                self.cycle_dfs(
                    adj,
                    v0,
                    x,
                    visited | (1 << x),
                    EdgeSet(edges.0 | (1 << e)),
                    neg2,
                    path,
                    out,
                );
                path.pop();
            }
        }
    }

    /// All bowties: unions of two unbalanced cycles meeting at a single
    /// vertex, or two vertex-disjoint unbalanced cycles joined by a simple
    /// path that is otherwise disjoint from them.
    pub fn bowties(&self) -> Vec<EdgeSet> {
        let cycles = self.cycles();
        let unbalanced: Vec<&Cycle> = cycles.iter().filter(|c| !c.balanced).collect();
        let adj = self.link_adjacency();
        let mut found: BTreeSet<EdgeSet> = BTreeSet::new();
        for i in 0..unbalanced.len() {
            for j in i + 1..unbalanced.len() {
                let a = unbalanced[i];
                let b = unbalanced[j];
                let shared = a.vertices & b.vertices;
                if shared.count_ones() == 1 {
                    found.insert(a.edges.union(b.edges));
                } else if shared == 0 {
                    let base = a.edges.union(b.edges);
                    let blocked = a.vertices | b.vertices;
                    for u in (0..self.vertex_count).filter(|&u| a.vertices & (1 << u) != 0) {
                        self.path_dfs(&adj, u, b.vertices, blocked, 0, EdgeSet::empty(), &mut |p| {
                            found.insert(base.union(p));
                        });
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    /// Enumerates simple paths from `cur` to any vertex of `targets` whose
    /// interior avoids `blocked | used`; invokes `record` with the edge set.
    #[allow(clippy::too_many_arguments)]
    fn path_dfs(
        &self,
        adj: &[Vec<(usize, usize, Sign)>],
        cur: usize,
        targets: u64,
        blocked: u64,
        used: u64,
        edges: EdgeSet,
        record: &mut impl FnMut(EdgeSet),
    ) {
        for &(x, e, _) in &adj[cur] {
            let bit = 1u64 << x;
            if targets & bit != 0 {
                record(EdgeSet(edges.0 | (1 << e)));
            } else if (blocked | used) & bit == 0 {
                self.path_dfs(adj, x, targets, blocked, used | bit, EdgeSet(edges.0 | (1 << e)), record);
            }
        }
    }

    /// Circuits of the signed graph: balanced cycles and bowties,
    /// deduplicated and sorted by (size, lexicographic edge indices).
    pub fn graph_circuits(&self) -> Vec<EdgeSet> {
        let mut set: BTreeSet<EdgeSet> = self
            .cycles()
            .into_iter()
            .filter(|c| c.balanced)
            .map(|c| c.edges)
            .collect();
        set.extend(self.bowties());
        set.into_iter().collect()
    }

    /// r-th cogirth: minimum `|X|` with exactly `r` balanced components in
    /// `(V, E ∖ X)`. Requires a connected unbalanced graph.
    pub fn cogirth_r(&self, r: usize) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Domain("cogirth requires a connected graph".into()));
        }
        if self.is_balanced() {
            return Err(Error::Domain("cogirth requires an unbalanced graph".into()));
        }
        if r < 1 || r > self.vertex_count {
            return Err(Error::Domain(format!(
                "cogirth index r={r} outside 1..={}",
                self.vertex_count
            )));
        }
        let m = self.edge_count();
        for k in 0..=m {
            for x in k_subsets(m, k) {
                if self.balanced_component_count(x) == r {
                    return Ok(k);
                }
            }
        }
        Err(Error::Domain(format!("no edge subset achieves {r} balanced components")))
    }

    /// All cogirths `υ_1, ..., υ_s` in one sweep over subsets.
    pub fn cogirth_table(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::Domain("cogirth requires a connected graph".into()));
        }
        if self.is_balanced() {
            return Err(Error::Domain("cogirth requires an unbalanced graph".into()));
        }
        let s = self.vertex_count;
        let m = self.edge_count();
        let mut best: Vec<Option<usize>> = vec![None; s + 1];
        let mut missing = s;
        'outer: for k in 0..=m {
            for x in k_subsets(m, k) {
                let r = self.balanced_component_count(x);
                if r >= 1 && r <= s && best[r].is_none() {
                    best[r] = Some(k);
                    missing -= 1;
                    if missing == 0 {
                        break 'outer;
                    }
                }
            }
        }
        best.into_iter()
            .skip(1)
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::Domain(format!("no edge subset achieves {} balanced components", i + 1))
                })
            })
            .collect()
    }

    /// r-th edge connectivity: minimum `|X|` with `r + 1` connected
    /// components in `(V, E ∖ X)`. Independent of the signs.
    pub fn edge_connectivity_r(&self, r: usize) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Domain("edge connectivity requires a connected graph".into()));
        }
        if r < 1 || r >= self.vertex_count {
            return Err(Error::Domain(format!(
                "edge connectivity index r={r} outside 1..={}",
                self.vertex_count.saturating_sub(1)
            )));
        }
        let m = self.edge_count();
        for k in 0..=m {
            for x in k_subsets(m, k) {
                if self.connected_components(x) == r + 1 {
                    return Ok(k);
                }
            }
        }
        Err(Error::Domain(format!("no edge subset yields {} components", r + 1)))
    }

    /// All edge connectivities `λ_1, ..., λ_{s-1}` in one sweep.
    pub fn edge_connectivity_table(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::Domain("edge connectivity requires a connected graph".into()));
        }
        let s = self.vertex_count;
        let m = self.edge_count();
        let mut best: Vec<Option<usize>> = vec![None; s + 1];
        let mut missing = s.saturating_sub(1);
        'outer: for k in 0..=m {
            for x in k_subsets(m, k) {
                let c = self.connected_components(x);
                if c >= 2 && c <= s && best[c - 1].is_none() {
                    best[c - 1] = Some(k);
                    missing -= 1;
                    if missing == 0 {
                        break 'outer;
                    }
                }
            }
        }
        (1..s)
            .map(|r| {
                best[r].ok_or_else(|| {
                    Error::Domain(format!("no edge subset yields {} components", r + 1))
                })
            })
            .collect()
    }

    /// Frustration index: fewest edge deletions leaving a balanced signed
    /// graph. Computed as (number of negative loops) plus the minimum over
    /// all vertex signings of the number of frustrated links; exhaustive
    /// over `2^(s-1)` signings since a global flip is a symmetry.
    pub fn frustration_index_switching(&self) -> Result<usize> {
        let s = self.vertex_count;
        if s > 30 {
            return Err(Error::Resource(format!(
                "frustration switching search needs 2^{} signings",
                s.saturating_sub(1)
            )));
        }
        let negative_loops = self
            .edges
            .iter()
            .filter(|e| e.is_loop() && e.sign.is_negative())
            .count();
        let links: Vec<&Edge> = self.edges.iter().filter(|e| !e.is_loop()).collect();
        if s == 0 || links.is_empty() {
            return Ok(negative_loops);
        }
        let mut best = usize::MAX;
        for assign in 0u64..(1 << (s - 1)) {
            // vertex 1 fixed positive; bit v-2 gives the sign of vertex v
            let signs = assign << 1;
            let mut frustrated = 0;
            for e in &links {
                let su = (signs >> (e.u - 1)) & 1;
                let sv = (signs >> (e.v - 1)) & 1;
                let product_negative = su != sv;
                if product_negative != e.sign.is_negative() {
                    frustrated += 1;
                }
            }
            best = best.min(frustrated);
        }
        Ok(negative_loops + best)
    }

    /// Minimal cutsets, enumerated graph-theoretically: minimal edge sets
    /// whose removal increases the balanced-component count (unbalanced
    /// graphs) or the component count (balanced graphs).
    pub fn cocircuits_by_cutsets(&self) -> Result<Vec<EdgeSet>> {
        let m = self.edge_count();
        if m > 20 {
            return Err(Error::Resource(
                "cutset enumeration guard: at most 20 edges".into(),
            ));
        }
        let balanced = self.is_balanced();
        let (c, c0) = self.stats_with_kept(self.full_edge_set());
        let mut found: Vec<EdgeSet> = Vec::new();
        for k in 1..=m {
            'subsets: for x in k_subsets(m, k) {
                for c in &found {
                    if c.is_subset_of(x) {
                        continue 'subsets;
                    }
                }
                let grows = if balanced {
                    self.connected_components(x) > c
                } else {
                    self.balanced_component_count(x) > c0
                };
                if grows {
                    found.push(x);
                }
            }
        }
        found.sort();
        Ok(found)
    }
}

/// Union-find with parity along edges plus an unbalanced marker per class.
struct ParityDsu {
    parent: Vec<usize>,
    // parity of the path to the parent: true = negative
    parity: Vec<bool>,
    unbalanced: Vec<bool>,
    size: Vec<usize>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
            unbalanced: vec![false; n],
            size: vec![1; n],
        }
    }

    fn find(&mut self, v: usize) -> (usize, bool) {
        if self.parent[v] == v {
            return (v, false);
        }
        let (root, p) = self.find(self.parent[v]);
        let total = self.parity[v] ^ p;
        self.parent[v] = root;
        self.parity[v] = total;
        (root, total)
    }

    fn mark_unbalanced(&mut self, v: usize) {
        let (root, _) = self.find(v);
        self.unbalanced[root] = true;
    }

    fn union(&mut self, u: usize, v: usize, negative: bool) {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            if (pu ^ pv) != negative {
                self.unbalanced[ru] = true;
            }
            return;
        }
        let (big, small, parity_small) = if self.size[ru] >= self.size[rv] {
            (ru, rv, pu ^ pv ^ negative)
        } else {
            (rv, ru, pu ^ pv ^ negative)
        };
        self.parent[small] = big;
        self.parity[small] = parity_small;
        self.size[big] += self.size[small];
        self.unbalanced[big] |= self.unbalanced[small];
    }

    /// (components, balanced components)
    fn counts(&mut self) -> (usize, usize) {
        let n = self.parent.len();
        let mut components = 0;
        let mut balanced = 0;
        for v in 0..n {
            if self.parent[v] == v {
                components += 1;
                if !self.unbalanced[v] {
                    balanced += 1;
                }
            }
        }
        (components, balanced)
    }
}
