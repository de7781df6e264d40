//! Graphviz export of the 1-skeleton of a cell census.

use std::fmt::Write;

use crate::census::CellCensus;

/// Renders the vertices and edges of a census as an undirected DOT graph.
/// Output is deterministic: vertices appear in census order and edges in
/// enumeration order, so reruns produce identical bytes.
pub fn skeleton_dot(census: &CellCensus) -> String {
    let mut out = String::new();
    writeln!(out, "graph skeleton {{").unwrap();
    writeln!(out, "  label=\"{}\";", census.z()).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    if let Some(vertices) = census.cells().first() {
        for (i, a) in vertices.iter().enumerate() {
            writeln!(out, "  v{} [label=\"{}\"];", i, a.eps()).unwrap();
        }
    }
    for (i, j) in census.edges() {
        writeln!(out, "  v{} -- v{};", i, j).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
