//! Graphviz DOT export.
//!
//! Multi-edges are written as repeated edges and loops as self-edges, one
//! line per unit of multiplicity. A loop adds 2 to the diagonal when it
//! occupies two colors, so the diagonal entry `a[v][v]` is drawn as
//! `a[v][v]` self-edges.

use std::fmt::Write;

use permpow_core::{CloudGraph, Graph};

/// `layout` names the vertices: `None` numbers them `0..n`, `Some(m)` uses
/// `"copy.local"` for `k` copies of a graph on `m` vertices.
pub fn graph_to_dot(g: &Graph, name: &str, layout: Option<usize>) -> String {
    let label = |v: usize| match layout {
        Some(m) => format!("{}.{}", v / m, v % m),
        None => v.to_string(),
    };
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  {} [label={}];", v, quote(&label(v))).unwrap();
    }
    for u in 0..g.vertex_count() {
        for (v, mult) in g.neighbors(u) {
            if v < u {
                continue;
            }
            let times = u64::try_from(&mult).unwrap_or(u64::MAX);
            for _ in 0..times {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// One node per cloud and one arc per point, labeled `"j_s,j_t"`.
pub fn cloud_graph_to_dot(cg: &CloudGraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for i in 0..cg.clouds() {
        writeln!(out, "  {i};").unwrap();
    }
    for a in cg.arcs() {
        writeln!(
            out,
            "  {} -> {} [label=\"{},{}\"];",
            a.source_cloud, a.target_cloud, a.source_color, a.target_color
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
