//! Deterministic DOT rendering of crystal graphs: nodes in canonical order,
//! edges labeled by color with a distinct style per color.

use std::fmt::Write;

use crate::json::CrystalPayload;
use demazure_core::crystal::CrystalGraph;

const COLOR_STYLES: [&str; 6] = ["blue", "red", "green", "orange", "purple", "brown"];

pub fn crystal_dot<T: CrystalPayload>(graph: &CrystalGraph<T>) -> String {
    let mut out = String::from("digraph crystal {\n");
    for (id, node) in graph.nodes().iter().enumerate() {
        let label = node.label().replace('\n', "\\n");
        writeln!(out, "  n{id} [label=\"{label}\"];").expect("string write");
    }
    for &(src, color, dst) in graph.edges() {
        let style = COLOR_STYLES[(color - 1) % COLOR_STYLES.len()];
        writeln!(
            out,
            "  n{src} -> n{dst} [label=\"{color}\", color=\"{style}\"];"
        )
        .expect("string write");
    }
    out.push_str("}\n");
    out
}
