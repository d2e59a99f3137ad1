//! Serializers for multiplet graphs: canonical JSON, Graphviz DOT, and
//! Knapp-Stein pair tables (TSV or LaTeX).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::multiplet::{Edge, MultipletGraph};
use crate::roots::Root;
use crate::signature::{format_half, ErSignature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Dot,
    Tsv,
    Latex,
}

impl Format {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "json" => Some(Format::Json),
            "dot" => Some(Format::Dot),
            "tsv" => Some(Format::Tsv),
            "latex" => Some(Format::Latex),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    /// Draw degenerate Knapp-Stein edges in a distinct style.
    pub show_degenerate_ks: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: Format::Json,
            show_degenerate_ks: true,
        }
    }
}

impl RenderOptions {
    pub fn new(format: Format) -> Self {
        RenderOptions {
            format,
            ..Self::default()
        }
    }
}

pub fn render(graph: &MultipletGraph, opts: RenderOptions) -> String {
    match opts.format {
        Format::Json => to_json(graph),
        Format::Dot => to_dot(graph, opts),
        Format::Tsv | Format::Latex => to_table(graph, opts),
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct JsonGraph {
    rank: usize,
    algebra: String,
    labels: Vec<u64>,
    zero_set: Vec<usize>,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
    singlets: Vec<JsonSinglet>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct JsonVertex {
    id: String,
    top: Vec<u64>,
    bottom: Vec<u64>,
    m_labels: Vec<u64>,
    two_c: i64,
    flags: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct JsonEdge {
    src: String,
    dst: String,
    root_j: usize,
    root_k: usize,
    degree: u64,
    #[serde(rename = "degenerateKS")]
    degenerate_ks: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct JsonOperator {
    root_j: usize,
    root_k: usize,
    degree: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct JsonSinglet {
    vertex: String,
    operators: Vec<JsonOperator>,
}

/// Pretty-printed canonical JSON with a trailing newline.
pub fn to_json(graph: &MultipletGraph) -> String {
    let rank = graph.rank();
    let id = |i: usize| graph.vertices[i].id();
    let doc = JsonGraph {
        rank: rank.n(),
        algebra: graph.algebra.name(rank),
        labels: graph.labels.values().to_vec(),
        zero_set: graph.zero_set(),
        vertices: graph
            .vertices
            .iter()
            .map(|v| JsonVertex {
                id: v.id(),
                top: v.arrangement.top().to_vec(),
                bottom: v.arrangement.bottom().to_vec(),
                m_labels: v.signature.m_labels.clone(),
                two_c: v.signature.two_c,
                flags: v.flags.iter().map(|f| f.as_str().to_string()).collect(),
            })
            .collect(),
        edges: graph
            .edges
            .iter()
            .map(|e| JsonEdge {
                src: id(e.src),
                dst: id(e.dst),
                root_j: e.root.j,
                root_k: e.root.k,
                degree: e.degree,
                degenerate_ks: e.degenerate_ks,
            })
            .collect(),
        singlets: graph
            .singlets
            .iter()
            .map(|s| JsonSinglet {
                vertex: id(s.vertex),
                operators: s
                    .operators
                    .iter()
                    .map(|o| JsonOperator {
                        root_j: o.root.j,
                        root_k: o.root.k,
                        degree: o.degree,
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

fn root_label(root: &Root, degree: u64) -> String {
    if root.is_simple() {
        format!("α_{{{}}}^{{{degree}}}", root.j)
    } else {
        format!("α_{{{}..{}}}^{{{degree}}}", root.j, root.k)
    }
}

fn node_label(sig: &ErSignature) -> String {
    format!(
        "{{({}); {}}}",
        sig.m_labels.iter().join(","),
        format_half(sig.two_c)
    )
}

/// Graphviz digraph laid out left to right with one rank per value of `c`.
pub fn to_dot(graph: &MultipletGraph, opts: RenderOptions) -> String {
    let mut out = String::new();
    out.push_str("digraph multiplet {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (i, v) in graph.vertices.iter().enumerate() {
        let mut attrs = format!("label=\"{}\"", node_label(&v.signature));
        if v.arrangement.is_self_partner() {
            attrs.push_str(", peripheries=2");
        }
        writeln!(out, "  v{i} [{attrs}];").unwrap();
    }
    let mut ranks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, v) in graph.vertices.iter().enumerate() {
        ranks.entry(v.signature.two_c).or_default().push(i);
    }
    for members in ranks.values() {
        writeln!(
            out,
            "  {{ rank=same; {} }}",
            members.iter().map(|i| format!("v{i};")).join(" ")
        )
        .unwrap();
    }
    for e in &graph.edges {
        let mut attrs = format!("label=\"{}\"", root_label(&e.root, e.degree));
        if e.degenerate_ks && opts.show_degenerate_ks {
            attrs.push_str(", style=dashed, color=red");
        }
        writeln!(out, "  v{} -> v{} [{attrs}];", e.src, e.dst).unwrap();
    }
    out.push_str("}\n");
    out
}

/// A table line: a Knapp-Stein pair, or a self-conjugate singlet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub minus: ErSignature,
    pub plus: Option<ErSignature>,
}

/// Pair rows ordered by `|c|` descending, then by the minus member.
pub fn table_rows(graph: &MultipletGraph) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for (i, v) in graph.vertices.iter().enumerate() {
        let partner = graph.partner_of(i);
        match partner {
            Some(p) if p == i => rows.push(TableRow {
                minus: v.signature.clone(),
                plus: None,
            }),
            // vertices are in (2c, top) order, so the smaller index is "-"
            Some(p) if p > i => rows.push(TableRow {
                minus: v.signature.clone(),
                plus: Some(graph.vertices[p].signature.clone()),
            }),
            Some(_) => {}
            None => rows.push(TableRow {
                minus: v.signature.clone(),
                plus: None,
            }),
        }
    }
    rows.sort_by(|a, b| {
        b.minus
            .two_c
            .abs()
            .cmp(&a.minus.two_c.abs())
            .then_with(|| a.minus.cmp(&b.minus))
            .then_with(|| a.plus.cmp(&b.plus))
    });
    rows
}

fn labels_text(sig: &ErSignature) -> String {
    format!("({})", sig.m_labels.iter().join(","))
}

pub fn to_table(graph: &MultipletGraph, opts: RenderOptions) -> String {
    let rows = table_rows(graph);
    let mut out = String::new();
    if opts.format == Format::Latex {
        out.push_str("\\begin{array}{rcl}\n");
        for r in &rows {
            let minus = format!(
                "\\{{{}; {}\\}}",
                r.minus.m_labels.iter().join(","),
                format_half(r.minus.two_c)
            );
            match &r.plus {
                Some(p) => writeln!(
                    out,
                    "{minus} & \\longleftrightarrow & \\{{{}; {}\\}} \\\\",
                    p.m_labels.iter().join(","),
                    format_half(p.two_c)
                ),
                None => writeln!(out, "{minus} & & \\\\"),
            }
            .unwrap();
        }
        out.push_str("\\end{array}\n");
        return out;
    }
    out.push_str("kind\tminus\tc_minus\tplus\tc_plus\n");
    for r in &rows {
        match &r.plus {
            Some(p) => writeln!(
                out,
                "pair\t{}\t{}\t{}\t{}",
                labels_text(&r.minus),
                format_half(r.minus.two_c),
                labels_text(p),
                format_half(p.two_c)
            ),
            None => writeln!(
                out,
                "singlet\t{}\t{}\t\t",
                labels_text(&r.minus),
                format_half(r.minus.two_c)
            ),
        }
        .unwrap();
    }
    out
}

/// Edges rendered as `src -> dst` ids, handy for diagnostics.
pub fn edge_summary(graph: &MultipletGraph, e: &Edge) -> String {
    format!(
        "{} -> {} {}",
        graph.vertices[e.src].id(),
        graph.vertices[e.dst].id(),
        root_label(&e.root, e.degree)
    )
}
