use std::fmt::Write;

use super::{Model, ModelError, Vertex, Window};

pub const MAX_DOT_WINDOW: i64 = 8;

fn node_id(v: &Vertex) -> String {
    let coord = |x: i64| {
        if x < 0 {
            format!("m{}", -x)
        } else {
            x.to_string()
        }
    };
    format!("{}{}_{}_{}", v.family, v.index, coord(v.a), coord(v.b))
}

/// Graphviz text of the window-truncated arrow graph, one cluster per
/// `(family, index)`, edges labelled by kind and degree.
pub fn emit_ar_dot(model: &Model, window: Window) -> Result<String, ModelError> {
    if window.half_width > MAX_DOT_WINDOW {
        return Err(ModelError::WindowTooLarge(
            window.half_width,
            MAX_DOT_WINDOW,
        ));
    }
    let verts = model.enumerate_vertices(window);
    let mut out = String::new();
    let p = model.params();
    writeln!(out, "digraph lambda_{}_{}_{} {{", p.r(), p.n(), p.m()).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=box, fontsize=10];").unwrap();
    for &family in model.families() {
        for i in 0..model.index_count() {
            writeln!(out, "  subgraph cluster_{family}{i} {{").unwrap();
            writeln!(out, "    label=\"{family}^({i})\";").unwrap();
            for v in verts.iter().filter(|v| v.family == family && v.index == i) {
                writeln!(out, "    {} [label=\"({},{})\"];", node_id(v), v.a, v.b).unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
    }
    for arrow in model.enumerate_arrows(window) {
        writeln!(
            out,
            "  {} -> {} [label=\"{} ({})\"];",
            node_id(&arrow.source),
            node_id(&arrow.target),
            arrow.kind,
            arrow.degree()
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
