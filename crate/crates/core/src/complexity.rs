//! Laplacians and weighted spanning-tree complexities by the matrix tree
//! theorem.

use std::fmt;

use num_traits::{One, Zero};

use crate::graph::WeightedDigraph;
use crate::linalg::{adjugate_trace, determinant, MatrixError, RationalMatrix};
use crate::{Integer, Rational};

/// Selects which weight a spanning tree's arcs contribute: the arc weight
/// itself, or the weight of the arc's head vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexityKind {
    EdgeWeighted,
    VertexWeighted,
}

impl ComplexityKind {
    pub const ALL: [ComplexityKind; 2] =
        [ComplexityKind::EdgeWeighted, ComplexityKind::VertexWeighted];

    pub fn laplacian(self, d: &WeightedDigraph) -> RationalMatrix {
        match self {
            ComplexityKind::EdgeWeighted => edge_laplacian(d),
            ComplexityKind::VertexWeighted => vertex_laplacian(d),
        }
    }

    /// Weight arc `a` of `d` contributes to a tree product.
    pub fn arc_factor(self, d: &WeightedDigraph, a: usize) -> &Rational {
        let arc = d.arc(a);
        match self {
            ComplexityKind::EdgeWeighted => &arc.weight,
            ComplexityKind::VertexWeighted => &d.vertex(arc.head).weight,
        }
    }
}

impl fmt::Display for ComplexityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexityKind::EdgeWeighted => "edge",
            ComplexityKind::VertexWeighted => "vertex",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexityError {
    #[error("unknown root {0:?}")]
    UnknownRoot(String),
    #[error("digraph has no vertices")]
    Empty,
    #[error("root-sum {root_sum} and adjugate trace {adjugate_trace} disagree")]
    PathsDisagree {
        root_sum: Box<Rational>,
        adjugate_trace: Box<Rational>,
    },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn laplacian_with(d: &WeightedDigraph, factor: impl Fn(usize) -> Rational) -> RationalMatrix {
    let mut lap = RationalMatrix::square(d.labels());
    for (a, arc) in d.arcs().iter().enumerate() {
        let w = factor(a);
        lap[(arc.tail, arc.tail)] += &w;
        lap[(arc.tail, arc.head)] -= &w;
    }
    lap
}

/// Out-weight diagonal minus the weighted adjacency matrix.
pub fn edge_laplacian(d: &WeightedDigraph) -> RationalMatrix {
    laplacian_with(d, |a| d.arc(a).weight.clone())
}

/// Like [`edge_laplacian`], with each arc weighted by its head vertex.
pub fn vertex_laplacian(d: &WeightedDigraph) -> RationalMatrix {
    laplacian_with(d, |a| d.vertex(d.arc(a).head).weight.clone())
}

fn rooted_at(
    d: &WeightedDigraph,
    kind: ComplexityKind,
    root: usize,
) -> Result<Rational, ComplexityError> {
    let minor = kind.laplacian(d).without_index(root);
    Ok(determinant(&minor)?)
}

/// Weighted sum over spanning trees rooted at `root`, as the principal minor
/// of the Laplacian with that root's row and column removed.
pub fn kappa_rooted(
    d: &WeightedDigraph,
    kind: ComplexityKind,
    root: &str,
) -> Result<Rational, ComplexityError> {
    let r = d
        .vertex_index(root)
        .ok_or_else(|| ComplexityError::UnknownRoot(root.to_string()))?;
    rooted_at(d, kind, r)
}

/// Weighted sum over all spanning trees.
///
/// Computed twice, once as the sum of rooted minors and once as the trace of
/// the Laplacian's adjugate; a disagreement is returned as an error.
pub fn kappa_total(d: &WeightedDigraph, kind: ComplexityKind) -> Result<Rational, ComplexityError> {
    if d.vertex_count() == 0 {
        return Err(ComplexityError::Empty);
    }
    let lap = kind.laplacian(d);
    let mut root_sum = Rational::zero();
    for r in 0..d.vertex_count() {
        root_sum += determinant(&lap.without_index(r))?;
    }
    let adj = adjugate_trace(&lap)?;
    if root_sum != adj {
        return Err(ComplexityError::PathsDisagree {
            root_sum: Box::new(root_sum),
            adjugate_trace: Box::new(adj),
        });
    }
    Ok(root_sum)
}

/// Number of spanning trees, ignoring all weights.
pub fn tree_count(d: &WeightedDigraph) -> Result<Integer, ComplexityError> {
    let total = kappa_total(&d.with_unit_weights(), ComplexityKind::EdgeWeighted)?;
    debug_assert!(total.denom().is_one());
    Ok(total.to_integer())
}
