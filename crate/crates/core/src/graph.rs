//! Weighted simple digraphs with a fixed, declaration-ordered vertex set.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Errors raised while building a [`WeightedDigraph`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("loop arc at {0:?}")]
    Loop(String),
    #[error("parallel arc {0}->{1}")]
    ParallelArc(String, String),
    #[error("weight must be positive, got {0}")]
    NonPositiveWeight(Rational),
}

/// Returns true when `name` is a legal vertex label: a nonempty token over
/// `[A-Za-z0-9_>:.-]`.
pub fn is_valid_label(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '>' | ':' | '.' | '-'))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub label: String,
    pub weight: Rational,
}

/// An arc between two vertex indices of its digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub weight: Rational,
}

/// A finite simple digraph with positive rational weights on vertices and arcs.
///
/// Vertex indices follow declaration order and double as the row/column order
/// of every matrix built from the digraph. Arc indices follow arc declaration
/// order.
#[derive(Debug, Clone, Default)]
pub struct WeightedDigraph {
    vertices: Vec<Vertex>,
    arcs: Vec<Arc>,
    by_label: HashMap<String, usize>,
    by_ends: HashMap<(usize, usize), usize>,
}

impl PartialEq for WeightedDigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arcs == other.arcs
    }
}

impl Eq for WeightedDigraph {}

fn check_weight(weight: &Rational) -> Result<(), GraphError> {
    if weight.is_positive() {
        Ok(())
    } else {
        Err(GraphError::NonPositiveWeight(weight.clone()))
    }
}

impl WeightedDigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a new vertex and returns its index.
    pub fn add_vertex(&mut self, label: &str, weight: Rational) -> Result<usize, GraphError> {
        if !is_valid_label(label) {
            return Err(GraphError::InvalidLabel(label.to_string()));
        }
        if self.by_label.contains_key(label) {
            return Err(GraphError::DuplicateVertex(label.to_string()));
        }
        check_weight(&weight)?;
        let idx = self.vertices.len();
        self.vertices.push(Vertex {
            label: label.to_string(),
            weight,
        });
        self.by_label.insert(label.to_string(), idx);
        Ok(idx)
    }

    /// Adds an arc between two existing vertices and returns its index.
    pub fn add_arc(
        &mut self,
        tail: usize,
        head: usize,
        weight: Rational,
    ) -> Result<usize, GraphError> {
        let n = self.vertices.len();
        for end in [tail, head] {
            if end >= n {
                return Err(GraphError::UnknownVertex(format!("#{end}")));
            }
        }
        if tail == head {
            return Err(GraphError::Loop(self.vertices[tail].label.clone()));
        }
        if self.by_ends.contains_key(&(tail, head)) {
            return Err(GraphError::ParallelArc(
                self.vertices[tail].label.clone(),
                self.vertices[head].label.clone(),
            ));
        }
        check_weight(&weight)?;
        let idx = self.arcs.len();
        self.arcs.push(Arc { tail, head, weight });
        self.by_ends.insert((tail, head), idx);
        Ok(idx)
    }

    /// Adds an arc by endpoint labels. Both endpoints must already exist.
    pub fn add_arc_by_label(
        &mut self,
        tail: &str,
        head: &str,
        weight: Rational,
    ) -> Result<usize, GraphError> {
        let t = self.require(tail)?;
        let h = self.require(head)?;
        self.add_arc(t, h, weight)
    }

    fn require(&self, label: &str) -> Result<usize, GraphError> {
        self.vertex_index(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn vertex(&self, idx: usize) -> &Vertex {
        &self.vertices[idx]
    }

    pub fn arc(&self, idx: usize) -> &Arc {
        &self.arcs[idx]
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.vertices[idx].label
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices.iter().map(|v| v.label.clone()).collect()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn arc_index(&self, tail: usize, head: usize) -> Option<usize> {
        self.by_ends.get(&(tail, head)).copied()
    }

    /// Looks an arc up by its endpoint labels.
    pub fn arc_by_labels(&self, tail: &str, head: &str) -> Option<usize> {
        let t = self.vertex_index(tail)?;
        let h = self.vertex_index(head)?;
        self.arc_index(t, h)
    }

    /// Weight of arc (tail, head), or zero when there is no such arc.
    pub fn arc_weight(&self, tail: usize, head: usize) -> Rational {
        self.arc_index(tail, head)
            .map(|a| self.arcs[a].weight.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Arc indices leaving `v`, in arc declaration order.
    pub fn out_arcs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.tail == v)
            .map(|(i, _)| i)
    }

    /// Renders arc `a` as `TAIL->HEAD`.
    pub fn arc_name(&self, a: usize) -> String {
        let arc = &self.arcs[a];
        format!("{}->{}", self.label(arc.tail), self.label(arc.head))
    }

    /// A copy with every vertex and arc weight replaced by 1.
    pub fn with_unit_weights(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.vertices {
            v.weight = Rational::one();
        }
        for a in &mut out.arcs {
            a.weight = Rational::one();
        }
        out
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let n = self.vertices.len();
        let mut out_degree = vec![0usize; n];
        let mut in_degree = vec![0usize; n];
        let mut out_weight = vec![Rational::zero(); n];
        for arc in &self.arcs {
            out_degree[arc.tail] += 1;
            in_degree[arc.head] += 1;
            out_weight[arc.tail] += &arc.weight;
        }
        DegreeProfile {
            out_degree,
            in_degree,
            out_weight,
        }
    }

    /// Short `n=.. m=..` description used in reports.
    pub fn summary(&self) -> String {
        format!("n={} m={}", self.vertex_count(), self.arc_count())
    }
}

/// Per-vertex out-degree, in-degree and out-weight sum, indexed like the
/// vertices of the digraph it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
    /// Sum of the weights of arcs leaving each vertex.
    pub out_weight: Vec<Rational>,
}

impl DegreeProfile {
    pub fn len(&self) -> usize {
        self.out_degree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out_degree.is_empty()
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            writeln!(
                f,
                "{} {} {}",
                self.out_degree[i], self.in_degree[i], self.out_weight[i]
            )?;
        }
        Ok(())
    }
}
