use std::fmt::Write as _;

use crate::graph::{Graph, VertexRole};

/// Graphviz rendering. Original vertices are circles, edge vertices boxes.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let shape = match g.role(v) {
            VertexRole::Original => "circle",
            VertexRole::EdgeVertex => "box",
            VertexRole::Plain => "ellipse",
        };
        writeln!(out, "  {} [shape={shape}];", quote(g.name(v))).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {} -- {};", quote(&g.names()[a]), quote(&g.names()[b])).unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}
