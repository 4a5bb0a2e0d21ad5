//! Text exports of reconfiguration graphs.

use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::tar::SetGraph;

pub fn to_dot(g: &SetGraph, name: &str) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for (i, s) in g.labels.iter().enumerate() {
        out.push_str(&format!("  {i} [label=\"{s}\"];\n"));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}

/// The graph on vertex indices, if it fits in a base graph.
pub fn to_base_graph(g: &SetGraph) -> Option<Graph> {
    if g.order() == 0 || g.order() > crate::graph::MAX_ORDER {
        return None;
    }
    Graph::from_edges(g.order(), &g.edges()).ok()
}

/// graph6 when the graph has at most 32 vertices, otherwise an edge list with one
/// "u v" pair per line.
pub fn adjacency_export(g: &SetGraph) -> String {
    match to_base_graph(g) {
        Some(b) => write_graph6(&b) + "\n",
        None => g.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;
    use crate::tar::hypercube;

    #[test]
    fn dot_labels_use_braces() {
        let dot = to_dot(&hypercube(2), "q2");
        assert!(dot.contains("label=\"{0,1}\""));
        assert!(dot.contains("0 -- 1;"));
        assert_eq!(dot.matches("--").count(), 4);
    }

    #[test]
    fn graph6_or_edge_list() {
        let small = adjacency_export(&hypercube(3));
        let g = parse_graph6(small.trim()).unwrap();
        assert_eq!((g.order(), g.size()), (8, 12));
        let big = adjacency_export(&hypercube(6));
        assert_eq!(big.lines().count(), 192);
    }
}
