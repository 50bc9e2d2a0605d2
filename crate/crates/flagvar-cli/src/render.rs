//! Text, JSON, and LaTeX rendering for the CLI.

use flagvar::{
    chern_json, delta_pairing_table, filtration_ranks, ChernReport, CohomologyRing,
    ParabolicSpec, Polynomial, RelationSet,
};
use serde::{Deserialize, Serialize};

/// Serializable form of the grading-pairing table.
#[derive(Serialize, Deserialize)]
pub struct DeltaJson {
    pub spec: String,
    pub delta: Vec<String>,
    pub pairings: Vec<DeltaRowJson>,
    pub zero_exactly_on_levi: bool,
}

/// One root's pairing against the grading vector.
#[derive(Serialize, Deserialize)]
pub struct DeltaRowJson {
    pub root: Vec<i64>,
    pub value: String,
    pub levi: bool,
}

/// Serializable form of the filtration ranks.
#[derive(Serialize, Deserialize)]
pub struct FiltrationJson {
    pub spec: String,
    pub dim: usize,
    pub ranks: Vec<usize>,
}

/// Variable names for LaTeX: Greek letters in rank ≤ 2, subscripts above.
fn latex_names(rank: usize) -> Vec<String> {
    if rank == 1 {
        vec!["\\alpha".to_string()]
    } else if rank == 2 {
        vec!["\\alpha".to_string(), "\\beta".to_string()]
    } else {
        (1..=rank).map(|i| format!("\\alpha_{}", i)).collect()
    }
}

fn poly_latex(p: &Polynomial) -> String {
    let names = latex_names(p.rank());
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    p.to_latex(&refs)
}

/// Pretty JSON with a trailing newline (the canonical JSON output shape).
pub fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

/// Plain-text rendering of a cohomology ring.
pub fn ring_text(ring: &CohomologyRing) -> String {
    let p = ring.parabolic();
    let json = ring.to_json();
    let mut out = String::new();
    out.push_str(&format!(
        "{}  (type {}, rank {}, crossed {:?})\n",
        json.spec, json.type_label, json.rank, json.crossed
    ));
    out.push_str(&format!("diagram: {}\n", p.dynkin_ascii()));
    out.push_str(&format!(
        "dim = {}, |W| = {}, |W_L| = {}\n",
        json.dim, json.weyl_order, json.levi_order
    ));
    out.push_str(&format!("betti: {:?}\n", json.betti));
    out.push_str("basis by polynomial degree d (topological degree 2d):\n");
    for (d, polys) in json.basis.iter().enumerate() {
        if polys.is_empty() {
            out.push_str(&format!("  d={}: (zero)\n", d));
        } else {
            out.push_str(&format!("  d={}: {}\n", d, polys.join("; ")));
        }
    }
    out.push_str(&format!(
        "groebner leading terms: {}\n",
        json.groebner_leading_terms.join(", ")
    ));
    out
}

/// LaTeX rendering of one ring: an alignment of graded pieces.
pub fn ring_latex(ring: &CohomologyRing) -> String {
    let mut out = String::new();
    out.push_str("\\begin{array}{rl}\n");
    for (d, basis) in ring.graded_basis().iter().enumerate() {
        if d > ring.dim() {
            break;
        }
        let entries: Vec<String> = basis.iter().map(poly_latex).collect();
        let line = if entries.is_empty() {
            "0".to_string()
        } else {
            entries.join(", \\; ")
        };
        out.push_str(&format!("H^{{{}}} & {} \\\\\n", 2 * d, line));
    }
    out.push_str("\\end{array}\n");
    out
}

fn relation_lines(sets: &[RelationSet]) -> Vec<String> {
    let mut lines = Vec::new();
    for set in sets {
        let mark = if set.trivial { " (trivial: all monomials vanish)" } else { "" };
        if set.relations.is_empty() {
            lines.push(format!("degree {}: (none){}", set.degree, mark));
        } else {
            for r in &set.relations {
                lines.push(format!("degree {}: {} = 0{}", set.degree, r, mark));
            }
        }
    }
    lines
}

/// Plain-text rendering of a Chern report.
pub fn chern_text(ring: &CohomologyRing, report: &ChernReport) -> String {
    let p = ring.parabolic();
    let mut out = String::new();
    out.push_str(&format!("{}  (dim {})\n", p.spec_string(), ring.dim()));
    out.push_str(&format!("diagram: {}\n", p.dynkin_ascii()));
    out.push_str(&format!("filtration ranks: {:?}\n", filtration_ranks(p)));
    for (i, c) in report.chern_classes.iter().enumerate() {
        out.push_str(&format!("c{} = {}\n", i + 1, c));
    }
    let coords: Vec<String> = report.c1_coords.iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("c1 coordinates: [{}]\n", coords.join(", ")));
    match (&report.epsilon, &report.c1_multiple) {
        (Some(eps), Some(m)) => {
            let rank = p.root_system().rank();
            let eps_form = Polynomial::linear_form_i(rank, eps);
            out.push_str(&format!("epsilon = {}\n", eps_form));
            out.push_str(&format!("c1 = {} * epsilon\n", m));
        }
        _ => out.push_str("epsilon: (only defined for one crossed node)\n"),
    }
    out.push_str("relations:\n");
    let lines = relation_lines(&report.relations);
    if lines.is_empty() {
        out.push_str("  (none)\n");
    } else {
        for line in lines {
            out.push_str(&format!("  {}\n", line));
        }
    }
    out
}

/// LaTeX rendering of a Chern report: one table row of diagram, dimension,
/// filtration, and relations.
pub fn chern_latex(ring: &CohomologyRing, report: &ChernReport) -> String {
    let p = ring.parabolic();
    let filtration = filtration_ranks(p);
    let filt: Vec<String> = filtration.iter().map(usize::to_string).collect();
    let mut pieces: Vec<String> = Vec::new();
    if let (Some(_), Some(m)) = (&report.epsilon, &report.c1_multiple) {
        let m_tex = if m.is_integer() {
            m.to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", m.numer(), m.denom())
        };
        pieces.push(format!("c_1 = {} \\, \\varepsilon", m_tex));
    }
    for set in &report.relations {
        if set.trivial {
            continue;
        }
        for r in &set.relations {
            pieces.push(format!("{} = 0", r.to_latex()));
        }
    }
    let relations = if pieces.is_empty() { "-".to_string() } else { pieces.join(", \\quad ") };
    let mut out = String::new();
    out.push_str("\\begin{longtable}[c]{cccc}\n");
    out.push_str("\\caption{Chern class relations}\\\\\n");
    out.push_str("\\toprule\nDiagram & $\\dim$ & Filtration & Relations\\\\\n\\midrule\n");
    out.push_str(&format!(
        "${}$ & {} & ({}) & ${}$\\\\\n",
        p.dynkin_latex(),
        ring.dim(),
        filt.join(","),
        relations
    ));
    out.push_str("\\bottomrule\n\\end{longtable}\n");
    out
}

/// Plain-text rendering of the relations alone.
pub fn relations_text(ring: &CohomologyRing, report: &ChernReport, max_degree: u32) -> String {
    let p = ring.parabolic();
    let mut out = String::new();
    out.push_str(&format!(
        "relations for {} (dim {}, degrees 1..={})\n",
        p.spec_string(),
        ring.dim(),
        max_degree
    ));
    let lines = relation_lines(&report.relations);
    if lines.is_empty() {
        out.push_str("  (none)\n");
    } else {
        for line in lines {
            out.push_str(&format!("  {}\n", line));
        }
    }
    out
}

/// Plain-text rendering of the grading-pairing table.
pub fn delta_text(p: &ParabolicSpec) -> String {
    let json = delta_json(p);
    let mut out = String::new();
    out.push_str(&format!("grading pairing for {}\n", json.spec));
    out.push_str(&format!("delta = [{}]\n", json.delta.join(", ")));
    for row in &json.pairings {
        let class = if row.levi { "levi" } else { "omitted-or-nilradical" };
        out.push_str(&format!("  root {:?}: {} ({})\n", row.root, row.value, class));
    }
    out.push_str(&format!(
        "pairing vanishes exactly on the Levi roots: {}\n",
        json.zero_exactly_on_levi
    ));
    out
}

/// Builds the serializable grading-pairing table.
pub fn delta_json(p: &ParabolicSpec) -> DeltaJson {
    let delta = flagvar::delta(p);
    let table = delta_pairing_table(p);
    let zero = flagvar::rat(0);
    let zero_exactly_on_levi = table.iter().all(|row| row.is_levi == (row.value == zero));
    DeltaJson {
        spec: p.spec_string(),
        delta: delta.iter().map(|c| c.to_string()).collect(),
        pairings: table
            .iter()
            .map(|row| DeltaRowJson {
                root: row.root.clone(),
                value: row.value.to_string(),
                levi: row.is_levi,
            })
            .collect(),
        zero_exactly_on_levi,
    }
}

/// Plain-text rendering of the filtration ranks.
pub fn filtration_text(p: &ParabolicSpec) -> String {
    let ranks = filtration_ranks(p);
    format!(
        "filtration ranks for {}: {:?} (dim {})\n",
        p.spec_string(),
        ranks,
        ranks.iter().sum::<usize>()
    )
}

/// The rank-2 table cases, in canonical order: for each rank-2 group the
/// full flag first, then the single-node parabolics in node order where
/// they are distinct varieties (for A2 the two single-node cases are
/// exchanged by the diagram symmetry, so only the first is listed).
pub fn rank2_cases() -> Vec<&'static str> {
    vec![
        "A2",
        "A2[crossed=1]",
        "B2",
        "B2[crossed=2]",
        "B2[crossed=1]",
        "G2",
        "G2[crossed=2]",
        "G2[crossed=1]",
    ]
}

/// LaTeX rendering of the whole rank-2 table.
pub fn table_latex(rings: &[CohomologyRing]) -> String {
    let mut out = String::new();
    out.push_str("\\begin{longtable}[c]{ccc}\n");
    out.push_str("\\caption{Cohomology of rational homogeneous varieties in rank 2}\\\\\n");
    out.push_str("\\toprule\nGroup & Diagram & Cohomology\\\\\n\\midrule\n");
    for ring in rings {
        let p = ring.parabolic();
        let rs = p.root_system();
        out.push_str(&format!(
            "${}_{}$ & ${}$ & ${}$\\\\\n",
            rs.family().letter(),
            rs.rank(),
            p.dynkin_latex(),
            ring_latex(ring).trim_end()
        ));
    }
    out.push_str("\\bottomrule\n\\end{longtable}\n");
    out
}

/// Serializable form of the Chern report for one ring (re-exported shape).
pub fn chern_report_json(ring: &CohomologyRing, report: &ChernReport) -> flagvar::ChernJson {
    chern_json(ring, report)
}

/// Builds the serializable filtration summary.
pub fn filtration_json(p: &ParabolicSpec) -> FiltrationJson {
    let ranks = filtration_ranks(p);
    FiltrationJson {
        spec: p.spec_string(),
        dim: ranks.iter().sum(),
        ranks,
    }
}
