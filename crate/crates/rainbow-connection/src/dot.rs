//! Graphviz DOT export. Plain graphs list vertices and edges; when a
//! coloring is supplied each edge carries its color as a label and a pen
//! color from a fixed 12-entry palette, cycled by color id.

use crate::coloring::EdgeColoring;
use crate::error::Result;
use crate::graph::Graph;

/// Pen colors for edge classes, reused cyclically past 12 colors.
pub const PEN_PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
];

/// Renders the graph in DOT format, optionally with edge colors.
pub fn to_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> Result<String> {
    if let Some(c) = coloring {
        c.check_binding(g)?;
    }
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let col = c.color(i);
                let pen = PEN_PALETTE[(col - 1) % PEN_PALETTE.len()];
                out.push_str(&format!(
                    "  {u} -- {v} [label=\"{col}\", color=\"{pen}\"];\n"
                ));
            }
            None => out.push_str(&format!("  {u} -- {v};\n")),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn plain_export_lists_vertices_and_edges() {
        let g = Graph::path(3).unwrap();
        let dot = to_dot(&g, None).unwrap();
        assert_eq!(dot, "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
    }

    #[test]
    fn colored_export_carries_labels_and_pens() {
        let g = Graph::path(3).unwrap();
        let c = EdgeColoring::new(13, vec![1, 13]).unwrap();
        let dot = to_dot(&g, Some(&c)).unwrap();
        assert!(dot.contains("0 -- 1 [label=\"1\", color=\"#e41a1c\"]"));
        // Color 13 wraps around to the first palette entry.
        assert!(dot.contains("1 -- 2 [label=\"13\", color=\"#e41a1c\"]"));
    }

    #[test]
    fn single_vertex_graph_exports() {
        let g = Graph::path(1).unwrap();
        assert_eq!(to_dot(&g, None).unwrap(), "graph {\n  0;\n}\n");
    }

    #[test]
    fn mismatched_coloring_is_rejected() {
        let g = Graph::path(3).unwrap();
        let c = EdgeColoring::new(2, vec![1]).unwrap();
        assert!(matches!(
            to_dot(&g, Some(&c)),
            Err(Error::ColoringMismatch { .. })
        ));
    }
}
