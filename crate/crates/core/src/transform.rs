//! Line and middle digraphs.
//!
//! The vertex of a transformed digraph that stands for arc `(u, v)` is labelled
//! `u>v` and weighted by the arc's weight. Arcs created by a transform have
//! weight 1; only vertex weights of transformed digraphs carry information.

use num_traits::One;

use crate::graph::{GraphError, WeightedDigraph};
use crate::Rational;

/// Label of the vertex standing for arc `a` of `d`.
pub fn arc_vertex_label(d: &WeightedDigraph, a: usize) -> String {
    let arc = d.arc(a);
    format!("{}>{}", d.label(arc.tail), d.label(arc.head))
}

/// Adds one vertex per arc of `d`, in arc order, and returns their indices.
fn add_arc_vertices(
    out: &mut WeightedDigraph,
    d: &WeightedDigraph,
) -> Result<Vec<usize>, GraphError> {
    (0..d.arc_count())
        .map(|a| out.add_vertex(&arc_vertex_label(d, a), d.arc(a).weight.clone()))
        .collect()
}

/// Adds `e -> f` for every pair of arcs with `head(e) == tail(f)`, ordered by
/// `(e, f)`.
fn add_composable_pairs(
    out: &mut WeightedDigraph,
    d: &WeightedDigraph,
    arc_vertex: &[usize],
) -> Result<(), GraphError> {
    for (e, arc_e) in d.arcs().iter().enumerate() {
        for f in d.out_arcs(arc_e.head) {
            out.add_arc(arc_vertex[e], arc_vertex[f], Rational::one())?;
        }
    }
    Ok(())
}

/// The vertex-weighted line digraph `L(D)`.
///
/// Fails only when a user label contains `>` and two derived labels collide.
pub fn line_digraph(d: &WeightedDigraph) -> Result<WeightedDigraph, GraphError> {
    let mut out = WeightedDigraph::new();
    let arc_vertex = add_arc_vertices(&mut out, d)?;
    add_composable_pairs(&mut out, d, &arc_vertex)?;
    Ok(out)
}

/// The vertex-weighted middle digraph `M(D)`: the vertices of `D` in order,
/// then one vertex per arc; each arc `e = (u, v)` becomes the path
/// `u -> e -> v`, followed by the line-digraph arcs between arc-vertices.
pub fn middle_digraph(d: &WeightedDigraph) -> Result<WeightedDigraph, GraphError> {
    let mut out = WeightedDigraph::new();
    for v in d.vertices() {
        out.add_vertex(&v.label, v.weight.clone())?;
    }
    let arc_vertex = add_arc_vertices(&mut out, d)?;
    for (e, arc) in d.arcs().iter().enumerate() {
        out.add_arc(arc.tail, arc_vertex[e], Rational::one())?;
        out.add_arc(arc_vertex[e], arc.head, Rational::one())?;
    }
    add_composable_pairs(&mut out, d, &arc_vertex)?;
    Ok(out)
}
