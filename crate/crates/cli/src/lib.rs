//! Graph-file parsing and report assembly for the `sgcodes` command line.
//!
//! The file grammar is line-based UTF-8: `#` starts a comment that runs to
//! the end of the line; the first significant line is `vertices <s>`; every
//! further significant line is `edge <u> <v> <+|->` with 1-based vertex
//! indices. Edge index equals occurrence order, which fixes the
//! incidence-matrix column order.

use std::collections::BTreeMap;

use serde::Serialize;
use sgcodes::betti::{
    betti_table_with_guard, is_level, lowest_shifts, regularity_closed_form, BettiTable, IdealKind,
};
use sgcodes::error::{Error, Result};
use sgcodes::ghw::{
    code_dimension, code_ghw_graph_formula, code_ghw_table, code_matroid, ghw_matroid_table,
    wei_duality_check, CodeSide,
};
use sgcodes::graph::EdgeSet;
use sgcodes::incidence::{build_incidence, predicted_rank};
use sgcodes::matroid::{Dual, Matroid, VectorMatroid};
use sgcodes::points::{frustration_index_points, min_distance_points};
use sgcodes::{ScalarDomain, SignedGraph};

/// Parses the graph-file grammar; errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let mut vertex_count: Option<usize> = None;
    let mut triples: Vec<(usize, usize, bool)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let n = lineno + 1;
        match (vertex_count, tokens[0]) {
            (None, "vertices") => {
                if tokens.len() != 2 {
                    return Err(Error::Argument(format!(
                        "line {n}: expected `vertices <s>`"
                    )));
                }
                let s: usize = tokens[1]
                    .parse()
                    .map_err(|_| Error::Argument(format!("line {n}: invalid vertex count")))?;
                if s == 0 {
                    return Err(Error::Argument(format!(
                        "line {n}: vertex count must be positive"
                    )));
                }
                vertex_count = Some(s);
            }
            (None, _) => {
                return Err(Error::Argument(format!(
                    "line {n}: the first significant line must be `vertices <s>`"
                )));
            }
            (Some(s), "edge") => {
                if tokens.len() != 4 {
                    return Err(Error::Argument(format!(
                        "line {n}: expected `edge <u> <v> <+|->`"
                    )));
                }
                let u: usize = tokens[1]
                    .parse()
                    .map_err(|_| Error::Argument(format!("line {n}: invalid vertex index")))?;
                let v: usize = tokens[2]
                    .parse()
                    .map_err(|_| Error::Argument(format!("line {n}: invalid vertex index")))?;
                if u < 1 || u > s || v < 1 || v > s {
                    return Err(Error::Argument(format!(
                        "line {n}: vertex index out of range 1..={s}"
                    )));
                }
                let negative = match tokens[3] {
                    "+" => false,
                    "-" => true,
                    other => {
                        return Err(Error::Argument(format!(
                            "line {n}: sign token `{other}` not in {{+,-}}"
                        )));
                    }
                };
                triples.push((u, v, negative));
            }
            (Some(_), other) => {
                return Err(Error::Argument(format!(
                    "line {n}: unknown directive `{other}`"
                )));
            }
        }
    }
    let s =
        vertex_count.ok_or_else(|| Error::Argument("missing `vertices <s>` line".into()))?;
    SignedGraph::from_triples(s, &triples)
}

/// Report sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Section {
    Info,
    Circuits,
    Ghw,
    Betti,
    Frustration,
    Mindist,
}

impl Section {
    pub const ALL: [Section; 6] = [
        Section::Info,
        Section::Circuits,
        Section::Ghw,
        Section::Betti,
        Section::Frustration,
        Section::Mindist,
    ];

    pub fn parse(name: &str) -> Result<Section> {
        match name {
            "info" => Ok(Section::Info),
            "circuits" => Ok(Section::Circuits),
            "ghw" => Ok(Section::Ghw),
            "betti" => Ok(Section::Betti),
            "frustration" => Ok(Section::Frustration),
            "mindist" => Ok(Section::Mindist),
            other => Err(Error::Argument(format!("unknown section `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub balanced_components: usize,
    pub balanced: bool,
    pub connected: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InfoSection {
    pub rank: usize,
    pub rank_closed_form: usize,
    pub code_dimension: usize,
    pub dual_code_dimension: usize,
    pub simple: bool,
    pub loops: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CircuitsSection {
    pub circuits: Vec<Vec<usize>>,
    pub cocircuits: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GhwSection {
    pub primal: Vec<usize>,
    pub dual: Vec<usize>,
    pub wei_duality: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiIdealReport {
    /// Triples `[i, j, beta]` in lexicographic order.
    pub entries: Vec<[usize; 3]>,
    pub projective_dimension: usize,
    pub regularity: usize,
    pub level: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity_closed_form: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiSection {
    pub circuit_ideal: BettiIdealReport,
    pub cocircuit_ideal: BettiIdealReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct FrustrationSection {
    pub value: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MindistSection {
    pub value: usize,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Invariants {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub info: Option<InfoSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuits: Option<CircuitsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ghw: Option<GhwSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frustration: Option<FrustrationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mindist: Option<MindistSection>,
}

/// A computed report: every value carries its producing methods in
/// `methods`, and every cross-method comparison lands in `agreement`. Any
/// `false` in `agreement` marks the report as failed.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub graph: GraphSummary,
    pub characteristic: u64,
    pub invariants: Invariants,
    pub methods: BTreeMap<String, Vec<String>>,
    pub agreement: BTreeMap<String, bool>,
}

impl Report {
    pub fn all_agree(&self) -> bool {
        self.agreement.values().all(|&ok| ok)
    }
}

fn sets_to_lists(sets: &[EdgeSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.indices()).collect()
}

fn betti_ideal_report(
    table: &BettiTable,
    closed_form: Option<usize>,
) -> BettiIdealReport {
    BettiIdealReport {
        entries: table
            .entries()
            .iter()
            .map(|(&(i, j), &b)| [i, j, b])
            .collect(),
        projective_dimension: table.projective_dimension(),
        regularity: table.regularity(),
        level: is_level(table),
        regularity_closed_form: closed_form,
    }
}

/// Runs the requested sections over the graph at the given characteristic,
/// cross-checking every value that more than one method can produce.
pub fn run_report(
    g: &SignedGraph,
    characteristic: u64,
    sections: &[Section],
    max_subset_size: usize,
) -> Result<Report> {
    ScalarDomain::of_characteristic(characteristic)?;
    let full = g.full_edge_set();
    let summary = GraphSummary {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        components: g.components_of_subset(full),
        balanced_components: g.balanced_components_of_subset(full),
        balanced: g.is_balanced(),
        connected: g.is_connected(),
    };
    let domain = ScalarDomain::of_characteristic(characteristic)?;
    let mut invariants = Invariants::default();
    let mut methods: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut agreement: BTreeMap<String, bool> = BTreeMap::new();

    for &section in sections {
        match section {
            Section::Info => {
                let a = build_incidence(g, domain).into_matrix();
                let rank = a.rank();
                let rank_closed = predicted_rank(g, domain);
                agreement.insert("info.rank".into(), rank == rank_closed);
                methods.insert(
                    "info.rank".into(),
                    vec!["elimination".into(), "closed-form".into()],
                );
                let k = code_dimension(g, characteristic);
                invariants.info = Some(InfoSection {
                    rank,
                    rank_closed_form: rank_closed,
                    code_dimension: k,
                    dual_code_dimension: g.edge_count() - k,
                    simple: g.is_simple(),
                    loops: g.has_loops(),
                });
            }
            Section::Circuits => {
                let m = code_matroid(g, characteristic);
                let circuits = m.circuits()?.to_vec();
                let cocircuits = m.cocircuits()?.to_vec();
                let mut used = vec!["signed-graphic".into()];
                // cross-enumerate through the incidence matrix
                let vm = VectorMatroid::new(build_incidence(g, domain).into_matrix())?;
                let from_matrix = vm.circuits()?;
                let from_matrix_dual = vm.cocircuits()?;
                agreement.insert(
                    "circuits.matrix".into(),
                    from_matrix == circuits.as_slice() && from_matrix_dual == cocircuits.as_slice(),
                );
                used.push("vector-matroid".into());
                methods.insert("circuits".into(), used);
                invariants.circuits = Some(CircuitsSection {
                    circuits: sets_to_lists(&circuits),
                    cocircuits: sets_to_lists(&cocircuits),
                });
            }
            Section::Ghw => {
                let primal = code_ghw_table(g, characteristic, CodeSide::Primal)?;
                let dual = code_ghw_table(g, characteristic, CodeSide::Dual)?;
                let mut primal_methods = vec!["nullity".into()];
                let mut dual_methods = vec!["nullity".into()];
                let mut ok = true;
                if g.is_connected() {
                    let by_graph: Result<Vec<usize>> = (1..=primal.len())
                        .map(|r| code_ghw_graph_formula(g, characteristic, CodeSide::Primal, r))
                        .collect();
                    let by_graph = by_graph?;
                    ok &= by_graph == primal.as_vec();
                    primal_methods.push("graph-formula".into());
                    let dual_by_graph: Result<Vec<usize>> = (1..=dual.len())
                        .map(|r| code_ghw_graph_formula(g, characteristic, CodeSide::Dual, r))
                        .collect();
                    let dual_by_graph = dual_by_graph?;
                    ok &= dual_by_graph == dual.as_vec();
                    dual_methods.push("graph-formula".into());
                }
                if g.edge_count() <= max_subset_size {
                    let m = code_matroid(g, characteristic);
                    let shifts = lowest_shifts(&betti_table_with_guard(&m, max_subset_size)?);
                    let from_betti: Vec<usize> = shifts.values().copied().collect();
                    ok &= from_betti == dual.as_vec();
                    dual_methods.push("betti-shift".into());
                    let dual_shifts =
                        lowest_shifts(&betti_table_with_guard(&Dual(&m), max_subset_size)?);
                    let primal_from_betti: Vec<usize> = dual_shifts.values().copied().collect();
                    ok &= primal_from_betti == primal.as_vec();
                    primal_methods.push("betti-shift".into());
                }
                let wei = wei_duality_check(&primal, &dual, g.edge_count())?;
                agreement.insert("ghw.methods".into(), ok);
                agreement.insert("ghw.wei_duality".into(), wei);
                methods.insert("ghw.primal".into(), primal_methods);
                methods.insert("ghw.dual".into(), dual_methods);
                invariants.ghw = Some(GhwSection {
                    primal: primal.as_vec(),
                    dual: dual.as_vec(),
                    wei_duality: wei,
                });
            }
            Section::Betti => {
                let m = code_matroid(g, characteristic);
                let circuit_table = betti_table_with_guard(&m, max_subset_size)?;
                let cocircuit_table = betti_table_with_guard(&Dual(&m), max_subset_size)?;
                let reg_circ = regularity_closed_form(g, characteristic, IdealKind::Circuits).ok();
                let reg_cocirc =
                    regularity_closed_form(g, characteristic, IdealKind::Cocircuits).ok();
                if let Some(r) = reg_circ {
                    agreement
                        .insert("betti.circuit_regularity".into(), r == circuit_table.regularity());
                }
                if let Some(r) = reg_cocirc {
                    agreement.insert(
                        "betti.cocircuit_regularity".into(),
                        r == cocircuit_table.regularity(),
                    );
                }
                agreement.insert(
                    "betti.level".into(),
                    is_level(&circuit_table) && is_level(&cocircuit_table),
                );
                // lowest shifts must reproduce the matroid weight hierarchy
                let weights = ghw_matroid_table(&m)?;
                let shifts: Vec<usize> = lowest_shifts(&circuit_table).values().copied().collect();
                agreement.insert("betti.shifts".into(), shifts == weights.as_vec());
                methods.insert(
                    "betti.regularity".into(),
                    vec!["betti-table".into(), "closed-form".into()],
                );
                invariants.betti = Some(BettiSection {
                    circuit_ideal: betti_ideal_report(&circuit_table, reg_circ),
                    cocircuit_ideal: betti_ideal_report(&cocircuit_table, reg_cocirc),
                });
            }
            Section::Frustration => {
                let by_switching = g.frustration_index_switching()?;
                let mut used = vec!["switching".into()];
                let has_positive_loop =
                    g.edges().iter().any(|e| e.is_loop() && !e.sign.is_negative());
                if g.is_connected() && !has_positive_loop {
                    let by_points = frustration_index_points(g)?;
                    agreement.insert("frustration".into(), by_points == by_switching);
                    used.push("points".into());
                }
                methods.insert("frustration".into(), used);
                invariants.frustration = Some(FrustrationSection { value: by_switching });
            }
            Section::Mindist => {
                if code_dimension(g, characteristic) == 0 {
                    return Err(Error::Domain(
                        "the code is zero-dimensional; no minimum distance".into(),
                    ));
                }
                let by_matroid = sgcodes::ghw::code_ghw(g, characteristic, CodeSide::Primal, 1)?;
                let mut used = vec!["nullity".into()];
                let mut ok = true;
                if g.is_connected() {
                    ok &= code_ghw_graph_formula(g, characteristic, CodeSide::Primal, 1)?
                        == by_matroid;
                    used.push("graph-formula".into());
                }
                let has_positive_loop =
                    g.edges().iter().any(|e| e.is_loop() && !e.sign.is_negative());
                if characteristic != 2 && g.is_connected() && !has_positive_loop {
                    ok &= min_distance_points(g, characteristic)? == by_matroid;
                    used.push("points".into());
                }
                agreement.insert("mindist".into(), ok);
                methods.insert("mindist".into(), used);
                invariants.mindist = Some(MindistSection { value: by_matroid });
            }
        }
    }

    Ok(Report {
        graph: summary,
        characteristic,
        invariants,
        methods,
        agreement,
    })
}

fn fmt_set_list(sets: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for (i, s) in sets.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push('{');
        for (k, e) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&e.to_string());
        }
        out.push('}');
    }
    out
}

fn fmt_weights(ws: &[usize]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

/// Renders the report as a deterministic plain-text table.
pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    let g = &report.graph;
    out.push_str(&format!(
        "graph: vertices={} edges={} components={} balanced_components={} balanced={} connected={}\n",
        g.vertices, g.edges, g.components, g.balanced_components, g.balanced, g.connected
    ));
    out.push_str(&format!("characteristic: {}\n", report.characteristic));
    if let Some(info) = &report.invariants.info {
        out.push_str("\n[info]\n");
        out.push_str(&format!(
            "incidence rank = {} (closed form {})\n",
            info.rank, info.rank_closed_form
        ));
        out.push_str(&format!(
            "dim C = {}  dim C-dual = {}\n",
            info.code_dimension, info.dual_code_dimension
        ));
        out.push_str(&format!("simple = {}  loops = {}\n", info.simple, info.loops));
    }
    if let Some(c) = &report.invariants.circuits {
        out.push_str("\n[circuits]\n");
        out.push_str(&format!("circuits ({}): {}\n", c.circuits.len(), fmt_set_list(&c.circuits)));
        out.push_str(&format!(
            "cocircuits ({}): {}\n",
            c.cocircuits.len(),
            fmt_set_list(&c.cocircuits)
        ));
    }
    if let Some(w) = &report.invariants.ghw {
        out.push_str("\n[ghw]\n");
        out.push_str(&format!("delta_r(C)      : {}\n", fmt_weights(&w.primal)));
        out.push_str(&format!("delta_r(C-dual) : {}\n", fmt_weights(&w.dual)));
        out.push_str(&format!("wei duality     : {}\n", w.wei_duality));
    }
    if let Some(b) = &report.invariants.betti {
        out.push_str("\n[betti]\n");
        for (name, ideal) in [("circuit ideal", &b.circuit_ideal), ("cocircuit ideal", &b.cocircuit_ideal)]
        {
            out.push_str(&format!("{name}:\n"));
            for [i, j, beta] in &ideal.entries {
                out.push_str(&format!("  beta({i},{j}) = {beta}\n"));
            }
            out.push_str(&format!(
                "  projective dimension = {}  regularity = {}  level = {}\n",
                ideal.projective_dimension, ideal.regularity, ideal.level
            ));
            if let Some(r) = ideal.regularity_closed_form {
                out.push_str(&format!("  regularity closed form = {r}\n"));
            }
        }
    }
    if let Some(f) = &report.invariants.frustration {
        out.push_str("\n[frustration]\n");
        out.push_str(&format!("frustration index = {}\n", f.value));
    }
    if let Some(d) = &report.invariants.mindist {
        out.push_str("\n[mindist]\n");
        out.push_str(&format!("minimum distance = {}\n", d.value));
    }
    out.push_str("\n[methods]\n");
    for (k, v) in &report.methods {
        out.push_str(&format!("{k}: {}\n", v.join(", ")));
    }
    out.push_str("\n[agreement]\n");
    for (k, v) in &report.agreement {
        out.push_str(&format!("{k}: {v}\n"));
    }
    out.push_str(&format!(
        "report: {}\n",
        if report.all_agree() { "ok" } else { "FAILED" }
    ));
    out
}

/// Renders the report as deterministic pretty JSON.
pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_file() {
        let text = "# sample\nvertices 3\nedge 1 2 +\nedge 1 2 -\nedge 2 3 +\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.edges()[1].sign.is_negative());
    }

    #[test]
    fn single_vertex_file() {
        let g = parse_graph("vertices 1\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn zero_based_vertex_is_rejected_with_line_number() {
        let err = parse_graph("vertices 2\nedge 0 2 +\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("out of range"), "{msg}");
    }

    #[test]
    fn bad_sign_token_is_rejected() {
        let err = parse_graph("vertices 2\nedge 1 2 *\n").unwrap_err();
        assert!(err.to_string().contains("sign token"));
    }

    #[test]
    fn missing_vertices_line_is_rejected() {
        let err = parse_graph("edge 1 2 +\n").unwrap_err();
        assert!(err.to_string().contains("vertices"));
    }

    #[test]
    fn report_runs_all_sections_on_a_small_graph() {
        let g = sgcodes::samples::doubled_triangle();
        let report = run_report(&g, 3, &Section::ALL, 16).unwrap();
        assert!(report.all_agree(), "agreement: {:?}", report.agreement);
        let ghw = report.invariants.ghw.as_ref().unwrap();
        assert_eq!(ghw.primal, vec![3, 5, 6]);
        assert_eq!(ghw.dual, vec![3, 5, 6]);
        assert_eq!(report.invariants.mindist.as_ref().unwrap().value, 3);
        assert_eq!(report.invariants.frustration.as_ref().unwrap().value, 3);
    }

    #[test]
    fn rendering_is_deterministic() {
        let g = sgcodes::samples::doubled_triangle();
        let report1 = run_report(&g, 0, &Section::ALL, 16).unwrap();
        let report2 = run_report(&g, 0, &Section::ALL, 16).unwrap();
        assert_eq!(render_table(&report1), render_table(&report2));
        assert_eq!(render_json(&report1), render_json(&report2));
    }
}
