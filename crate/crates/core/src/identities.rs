//! Exact checkers for the identities relating a digraph to its middle and
//! line digraphs.
//!
//! Notation used in the docs below: `n` vertices, `m` arcs, `χ_v` / `χ_e`
//! vertex and arc weights, `d_v` the total weight of arcs leaving `v`, and
//! `r_v` the in-degree of `v`.
//!
//! Every checker materializes both sides in full and never short-circuits.
//! Where a right-hand side would need a negative power of zero the report is
//! marked not applicable instead of being evaluated.

use std::fmt::{self, Write};

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::complexity::{self, kappa_total, ComplexityError, ComplexityKind};
use crate::graph::{GraphError, WeightedDigraph};
use crate::linalg::{char_poly, MatrixError, RationalMatrix, RationalPolynomial};
use crate::oracle::{self, OracleError};
use crate::transform::{arc_vertex_label, line_digraph, middle_digraph};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `κ^vertex(M(D)) = κ^edge(D) · Π (χ_i + d_i)^{r_i}`
    MiddleComplexity,
    /// `f(Δ^vertex(M(D)), λ) = f(Δ^edge(D), λ) · Π (λ - χ_i - d_i)^{r_i}`
    MiddleCharPoly,
    /// `t(M(D)) = t(D) · Π (1 + d₊(v_i))^{r_i}`
    MiddleTreeCount,
    /// `κ^vertex(M(D), e*) = χ_e* κ^edge(D, w*) (χ_v* + d_v*)^{r_v* - 1} Π_{v≠v*} (χ_v + d_v)^{r_v}`
    MiddleRooted,
    /// `κ^vertex(L(D)) = κ^edge(D) · Π d_i^{r_i - 1}`
    LineComplexity,
    /// `κ^vertex(L(D), e*) = χ_e* κ^edge(D, w*) d_v*^{r_v* - 2} Π_{v≠v*} d_v^{r_v - 1}`
    LineRooted,
    /// Structure of the vertex Laplacian of `M(D)` in terms of `D`.
    BlockDecomposition,
    /// Minor determinants against brute-force enumeration.
    MatrixTree,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::BlockDecomposition,
        Identity::MatrixTree,
        Identity::MiddleCharPoly,
        Identity::MiddleComplexity,
        Identity::MiddleTreeCount,
        Identity::MiddleRooted,
        Identity::LineComplexity,
        Identity::LineRooted,
    ];

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Identity::MiddleComplexity => "eq3",
            Identity::MiddleCharPoly => "eq4",
            Identity::MiddleTreeCount => "eq5",
            Identity::MiddleRooted => "eq6",
            Identity::LineComplexity => "levine1",
            Identity::LineRooted => "levine2",
            Identity::BlockDecomposition => "block",
            Identity::MatrixTree => "mtt",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == name)
    }

    /// Whether the identity is quantified over a fixed arc.
    pub fn per_arc(self) -> bool {
        matches!(self, Identity::MiddleRooted | Identity::LineRooted)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("{0} is not an arc of the digraph")]
    UnknownArc(String),
    #[error("hypothesis violated: vertex {vertex:?} has in-degree 0")]
    Hypothesis { vertex: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complexity(#[from] ComplexityError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// One side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    Scalar(Rational),
    Polynomial(RationalPolynomial),
    List(Vec<Rational>),
    Matrices(Vec<RationalMatrix>),
    /// The expression is undefined on this input.
    Undefined,
}

impl Side {
    pub fn to_json(&self) -> Value {
        let rats =
            |xs: &[Rational]| Value::Array(xs.iter().map(|x| json!(x.to_string())).collect());
        match self {
            Side::Scalar(x) => json!(x.to_string()),
            Side::Polynomial(p) => rats(p.coefficients()),
            Side::List(xs) => rats(xs),
            Side::Matrices(ms) => Value::Array(
                ms.iter()
                    .map(|m| Value::Array((0..m.rows()).map(|i| rats(m.row(i))).collect()))
                    .collect(),
            ),
            Side::Undefined => Value::Null,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Rational]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Side::Scalar(x) => write!(f, "{x}"),
            Side::Polynomial(p) => write!(f, "{p}"),
            Side::List(xs) => f.write_str(&join(xs)),
            Side::Matrices(ms) => {
                for (k, m) in ms.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" |")?;
                    }
                    for i in 0..m.rows() {
                        write!(f, " [{}]", join(m.row(i)))?;
                    }
                }
                Ok(())
            }
            Side::Undefined => f.write_str("undefined"),
        }
    }
}

/// Outcome of one identity check with both sides materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    /// `lhs == rhs`; always false when not applicable.
    pub holds: bool,
    pub applicable: bool,
    pub lhs: Side,
    pub rhs: Side,
    /// Named structural properties of the input, in a fixed order.
    pub hypotheses: Vec<(&'static str, bool)>,
    pub digraph_summary: String,
    /// The fixed arc `e*` as `tail->head`, for per-arc identities.
    pub arc: Option<String>,
    pub note: Option<String>,
}

impl IdentityReport {
    fn new(identity: Identity, d: &WeightedDigraph, lhs: Side, rhs: Side) -> Self {
        let applicable = rhs != Side::Undefined;
        Self {
            identity,
            holds: applicable && lhs == rhs,
            applicable,
            lhs,
            rhs,
            hypotheses: hypotheses(d),
            digraph_summary: d.summary(),
            arc: None,
            note: None,
        }
    }

    /// A report for an identity whose preconditions do not hold on `d`.
    pub fn not_applicable(
        identity: Identity,
        d: &WeightedDigraph,
        note: impl Into<String>,
    ) -> Self {
        let mut r = Self::new(identity, d, Side::Undefined, Side::Undefined);
        r.note = Some(note.into());
        r
    }

    fn with_arc(mut self, d: &WeightedDigraph, e: usize) -> Self {
        self.arc = Some(d.arc_name(e));
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn hypothesis(&self, name: &str) -> Option<bool> {
        self.hypotheses
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| *v)
    }

    pub fn status(&self) -> &'static str {
        match (self.applicable, self.holds) {
            (false, _) => "NOT-APPLICABLE",
            (true, true) => "HOLDS",
            (true, false) => "FAILS",
        }
    }

    pub fn to_json(&self) -> Value {
        let hyps: Map<String, Value> = self
            .hypotheses
            .iter()
            .map(|(k, v)| (k.to_string(), Value::Bool(*v)))
            .collect();
        let mut obj = json!({
            "identity": self.identity.name(),
            "holds": self.holds,
            "applicable": self.applicable,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "hypotheses": hyps,
            "digraph_summary": self.digraph_summary,
        });
        if let Some(arc) = &self.arc {
            obj["arc"] = json!(arc);
        }
        if let Some(note) = &self.note {
            obj["note"] = json!(note);
        }
        obj
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}",
            self.identity,
            self.status(),
            self.digraph_summary
        )?;
        if let Some(arc) = &self.arc {
            write!(f, " e*={arc}")?;
        }
        writeln!(f, "]")?;
        writeln!(f, "  lhs: {}", self.lhs)?;
        writeln!(f, "  rhs: {}", self.rhs)?;
        let mut hyps = String::new();
        for (k, v) in &self.hypotheses {
            write!(hyps, " {k}={v}")?;
        }
        writeln!(f, "  hypotheses:{hyps}")?;
        if let Some(note) = &self.note {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

pub const ALL_OUT_DEGREE_POSITIVE: &str = "all_out_degree_positive";
pub const ALL_IN_DEGREE_POSITIVE: &str = "all_in_degree_positive";
pub const WEAKLY_CONNECTED: &str = "weakly_connected";

fn hypotheses(d: &WeightedDigraph) -> Vec<(&'static str, bool)> {
    let p = d.degree_profile();
    vec![
        (ALL_IN_DEGREE_POSITIVE, p.in_degree.iter().all(|&r| r > 0)),
        (ALL_OUT_DEGREE_POSITIVE, p.out_degree.iter().all(|&k| k > 0)),
        (WEAKLY_CONNECTED, weakly_connected(d)),
    ]
}

fn weakly_connected(d: &WeightedDigraph) -> bool {
    let n = d.vertex_count();
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for a in d.arcs() {
        adj[a.tail].push(a.head);
        adj[a.head].push(a.tail);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// `base^exp` with `0^0 = 1`; `None` for a negative power of zero.
fn signed_pow(base: &Rational, exp: i64) -> Option<Rational> {
    if exp < 0 {
        if base.is_zero() {
            return None;
        }
        Some(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
    } else {
        Some(num_traits::pow(base.clone(), exp as usize))
    }
}

/// Resolves `tail -> head` to an arc index of `d`.
pub fn resolve_arc(d: &WeightedDigraph, tail: &str, head: &str) -> Result<usize, IdentityError> {
    d.arc_by_labels(tail, head)
        .ok_or_else(|| IdentityError::UnknownArc(format!("{tail}->{head}")))
}

fn check_arc(d: &WeightedDigraph, e: usize) -> Result<(), IdentityError> {
    if e < d.arc_count() {
        Ok(())
    } else {
        Err(IdentityError::UnknownArc(format!("#{e}")))
    }
}

/// The eight auxiliary matrices that assemble the vertex Laplacian of `M(D)`.
///
/// Rows and columns indexed by vertices follow vertex order; those indexed by
/// arcs follow arc order and carry the arc-vertex labels `tail>head`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofMatrices {
    /// n×n, `(v, w) = χ_(v,w)` (0 when absent).
    pub adjacency: RationalMatrix,
    /// n×n diagonal, `(v, v) = d_v`.
    pub out_weight: RationalMatrix,
    /// m×m, `(e, f) = χ_f` when `head(e) = tail(f)`.
    pub line_adjacency: RationalMatrix,
    /// m×m diagonal, `(e, e) = Σ χ_g` over arcs `g` with `tail(g) = head(e)`.
    pub line_out_weight: RationalMatrix,
    /// n×m, `(v, e) = χ_e` when `tail(e) = v`.
    pub tail_weight: RationalMatrix,
    /// m×n, `(e, v) = 1` when `head(e) = v`.
    pub head_incidence: RationalMatrix,
    /// n×n diagonal, `(v, v) = χ_v`.
    pub vertex_weight: RationalMatrix,
    /// m×m diagonal, `(e, e) = χ_head(e)`.
    pub head_weight: RationalMatrix,
}

impl ProofMatrices {
    /// `[[F, -M], [-LQ, B + F' - W']]` in the notation of the field docs:
    /// out_weight, tail_weight, head_incidence·vertex_weight, and
    /// head_weight + line_out_weight - line_adjacency.
    pub fn assembled_block(&self) -> RationalMatrix {
        let top_right = -&self.tail_weight;
        let bottom_left = -&(&self.head_incidence * &self.vertex_weight);
        let bottom_right = &(&self.head_weight + &self.line_out_weight) - &self.line_adjacency;
        RationalMatrix::block(&self.out_weight, &top_right, &bottom_left, &bottom_right)
    }
}

pub fn build_proof_matrices(d: &WeightedDigraph) -> ProofMatrices {
    let vl = d.labels();
    let al: Vec<String> = (0..d.arc_count()).map(|a| arc_vertex_label(d, a)).collect();
    let p = d.degree_profile();

    let mut adjacency = RationalMatrix::square(vl.clone());
    let mut out_weight = RationalMatrix::square(vl.clone());
    let mut vertex_weight = RationalMatrix::square(vl.clone());
    let mut line_adjacency = RationalMatrix::square(al.clone());
    let mut line_out_weight = RationalMatrix::square(al.clone());
    let mut head_weight = RationalMatrix::square(al.clone());
    let mut tail_weight = RationalMatrix::zeros(vl.clone(), al.clone());
    let mut head_incidence = RationalMatrix::zeros(al, vl);

    for (v, vert) in d.vertices().iter().enumerate() {
        out_weight[(v, v)] = p.out_weight[v].clone();
        vertex_weight[(v, v)] = vert.weight.clone();
    }
    for (e, arc) in d.arcs().iter().enumerate() {
        adjacency[(arc.tail, arc.head)] = arc.weight.clone();
        tail_weight[(arc.tail, e)] = arc.weight.clone();
        head_incidence[(e, arc.head)] = Rational::one();
        head_weight[(e, e)] = d.vertex(arc.head).weight.clone();
        line_out_weight[(e, e)] = p.out_weight[arc.head].clone();
        for f in d.out_arcs(arc.head) {
            line_adjacency[(e, f)] = d.arc(f).weight.clone();
        }
    }
    ProofMatrices {
        adjacency,
        out_weight,
        line_adjacency,
        line_out_weight,
        tail_weight,
        head_incidence,
        vertex_weight,
        head_weight,
    }
}

/// Checks `W' = LM`, `W = ML`, and that the vertex Laplacian of `M(D)` equals
/// the assembled block matrix. Both sides list the three matrices in that
/// order.
pub fn check_block_decomposition(d: &WeightedDigraph) -> Result<IdentityReport, IdentityError> {
    let pm = build_proof_matrices(d);
    let middle = middle_digraph(d)?;
    let lm = &pm.head_incidence * &pm.tail_weight;
    let ml = &pm.tail_weight * &pm.head_incidence;
    let lhs = vec![
        pm.line_adjacency.clone(),
        pm.adjacency.clone(),
        complexity::vertex_laplacian(&middle),
    ];
    let rhs = vec![lm, ml, pm.assembled_block()];
    Ok(IdentityReport::new(
        Identity::BlockDecomposition,
        d,
        Side::Matrices(lhs),
        Side::Matrices(rhs),
    ))
}

/// Characteristic polynomial of the vertex Laplacian of `M(D)` against that of
/// the edge Laplacian of `D` times `Π (λ - χ_i - d_i)^{r_i}`.
pub fn check_eq4(d: &WeightedDigraph) -> Result<IdentityReport, IdentityError> {
    let middle = middle_digraph(d)?;
    let lhs = char_poly(&complexity::vertex_laplacian(&middle))?;
    let p = d.degree_profile();
    let mut rhs = char_poly(&complexity::edge_laplacian(d))?;
    for (i, v) in d.vertices().iter().enumerate() {
        let root = &v.weight + &p.out_weight[i];
        rhs = &rhs * &RationalPolynomial::linear_factor(root).pow(p.in_degree[i]);
    }
    Ok(IdentityReport::new(
        Identity::MiddleCharPoly,
        d,
        Side::Polynomial(lhs),
        Side::Polynomial(rhs),
    ))
}

fn middle_factor(d: &WeightedDigraph) -> Rational {
    let p = d.degree_profile();
    d.vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| num_traits::pow(&v.weight + &p.out_weight[i], p.in_degree[i]))
        .product()
}

/// `κ^vertex(M(D))` against `κ^edge(D) · Π (χ_i + d_i)^{r_i}`.
pub fn check_eq3(d: &WeightedDigraph) -> Result<IdentityReport, IdentityError> {
    let middle = middle_digraph(d)?;
    let lhs = kappa_total(&middle, ComplexityKind::VertexWeighted)?;
    let rhs = kappa_total(d, ComplexityKind::EdgeWeighted)? * middle_factor(d);
    Ok(IdentityReport::new(
        Identity::MiddleComplexity,
        d,
        Side::Scalar(lhs),
        Side::Scalar(rhs),
    ))
}

/// Tree counts of `M(D)` and `D` with all weights forced to 1.
pub fn check_eq5(d: &WeightedDigraph) -> Result<IdentityReport, IdentityError> {
    let unit = d.with_unit_weights();
    let middle = middle_digraph(&unit)?;
    let lhs = Rational::from_integer(complexity::tree_count(&middle)?);
    let rhs = Rational::from_integer(complexity::tree_count(&unit)?) * middle_factor(&unit);
    Ok(IdentityReport::new(
        Identity::MiddleTreeCount,
        d,
        Side::Scalar(lhs),
        Side::Scalar(rhs),
    ))
}

/// Complexity of `M(D)` rooted at the arc-vertex of `e* = (w*, v*)` against
/// `χ_e* · κ^edge(D, w*) · (χ_v* + d_v*)^{r_v* - 1} · Π_{v≠v*} (χ_v + d_v)^{r_v}`.
///
/// Evaluated on every input; the `all_out_degree_positive` flag records
/// whether the standard hypothesis holds.
pub fn check_eq6(d: &WeightedDigraph, e_star: usize) -> Result<IdentityReport, IdentityError> {
    check_arc(d, e_star)?;
    let middle = middle_digraph(d)?;
    let arc = d.arc(e_star);
    let root = d.vertex_count() + e_star;
    let lhs = crate::linalg::determinant(
        &complexity::vertex_laplacian(&middle).delete_row_col(middle.label(root))?,
    )?;
    let p = d.degree_profile();
    let mut rhs =
        &arc.weight * complexity::kappa_rooted(d, ComplexityKind::EdgeWeighted, d.label(arc.tail))?;
    for (i, v) in d.vertices().iter().enumerate() {
        let exp = p.in_degree[i] - usize::from(i == arc.head);
        rhs *= num_traits::pow(&v.weight + &p.out_weight[i], exp);
    }
    Ok(IdentityReport::new(
        Identity::MiddleRooted,
        d,
        Side::Scalar(lhs),
        Side::Scalar(rhs),
    )
    .with_arc(d, e_star))
}

/// `κ^vertex(L(D))` against `κ^edge(D) · Π d_i^{r_i - 1}`.
///
/// Not applicable when a vertex has neither in- nor out-arcs.
pub fn check_levine1(d: &WeightedDigraph) -> Result<IdentityReport, IdentityError> {
    let line = line_digraph(d)?;
    let lhs = if line.vertex_count() == 0 {
        // L(D) of an arcless digraph has no vertices and hence no trees.
        Rational::zero()
    } else {
        kappa_total(&line, ComplexityKind::VertexWeighted)?
    };
    let p = d.degree_profile();
    let mut factor = Some(Rational::one());
    for i in 0..d.vertex_count() {
        let exp = p.in_degree[i] as i64 - 1;
        factor = factor
            .zip(signed_pow(&p.out_weight[i], exp))
            .map(|(a, b)| a * b);
    }
    let report = match factor {
        Some(f) => {
            let rhs = kappa_total(d, ComplexityKind::EdgeWeighted)? * f;
            IdentityReport::new(
                Identity::LineComplexity,
                d,
                Side::Scalar(lhs),
                Side::Scalar(rhs),
            )
        }
        None => IdentityReport::new(
            Identity::LineComplexity,
            d,
            Side::Scalar(lhs),
            Side::Undefined,
        )
        .with_note(
            "a vertex with no in-arcs and no out-arcs makes d^(r-1) a negative power of zero",
        ),
    };
    Ok(report)
}

/// Complexity of `L(D)` rooted at `e* = (w*, v*)` against
/// `χ_e* · κ^edge(D, w*) · d_v*^{r_v* - 2} · Π_{v≠v*} d_v^{r_v - 1}`.
///
/// Requires every vertex to have an in-arc; otherwise returns
/// [`IdentityError::Hypothesis`] naming the first source vertex.
pub fn check_levine2(d: &WeightedDigraph, e_star: usize) -> Result<IdentityReport, IdentityError> {
    check_arc(d, e_star)?;
    let p = d.degree_profile();
    if let Some(v) = p.in_degree.iter().position(|&r| r == 0) {
        return Err(IdentityError::Hypothesis {
            vertex: d.label(v).to_string(),
        });
    }
    let line = line_digraph(d)?;
    let lhs = crate::linalg::determinant(
        &complexity::vertex_laplacian(&line).delete_row_col(line.label(e_star))?,
    )?;
    let arc = d.arc(e_star);
    let mut factor = Some(arc.weight.clone());
    for i in 0..d.vertex_count() {
        let exp = p.in_degree[i] as i64 - if i == arc.head { 2 } else { 1 };
        factor = factor
            .zip(signed_pow(&p.out_weight[i], exp))
            .map(|(a, b)| a * b);
    }
    let report = match factor {
        Some(f) => {
            let rhs =
                f * complexity::kappa_rooted(d, ComplexityKind::EdgeWeighted, d.label(arc.tail))?;
            IdentityReport::new(
                Identity::LineRooted,
                d,
                Side::Scalar(lhs),
                Side::Scalar(rhs),
            )
        }
        None => IdentityReport::new(Identity::LineRooted, d, Side::Scalar(lhs), Side::Undefined)
            .with_note(
                "head of e* has in-degree 1 and no out-arcs; d^(r-2) is a negative power of zero",
            ),
    };
    Ok(report.with_arc(d, e_star))
}

/// Minor determinants against brute-force enumeration, for both kinds.
///
/// Each side lists, per kind (edge first), the rooted values in vertex order
/// followed by two totals. On the left these are the root-sum and the
/// adjugate trace; on the right the enumerated total twice.
pub fn check_mtt(d: &WeightedDigraph, limit: u64) -> Result<IdentityReport, IdentityError> {
    if d.vertex_count() == 0 {
        return Err(ComplexityError::Empty.into());
    }
    for r in 0..d.vertex_count() {
        if oracle::candidate_space(d, r) > limit {
            return Err(OracleError::TooLarge {
                root: d.label(r).to_string(),
                limit,
            }
            .into());
        }
    }
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for kind in ComplexityKind::ALL {
        let lap = kind.laplacian(d);
        let mut root_sum = Rational::zero();
        let mut oracle_sum = Rational::zero();
        for label in d.labels() {
            let det = crate::linalg::determinant(&lap.delete_row_col(&label)?)?;
            let brute = oracle::oracle_kappa_rooted(d, kind, &label, limit)?;
            root_sum += &det;
            oracle_sum += &brute;
            lhs.push(det);
            rhs.push(brute);
        }
        lhs.push(root_sum);
        lhs.push(crate::linalg::adjugate_trace(&lap)?);
        rhs.push(oracle_sum.clone());
        rhs.push(oracle_sum);
    }
    Ok(IdentityReport::new(
        Identity::MatrixTree,
        d,
        Side::List(lhs),
        Side::List(rhs),
    ))
}

/// Runs one identity on `d`. Per-arc identities run once per arc, or only on
/// `arc` when given.
pub fn check(
    identity: Identity,
    d: &WeightedDigraph,
    arc: Option<usize>,
    limit: u64,
) -> Result<Vec<IdentityReport>, IdentityError> {
    let arcs: Vec<usize> = match arc {
        Some(a) => vec![a],
        None => (0..d.arc_count()).collect(),
    };
    Ok(match identity {
        Identity::BlockDecomposition => vec![check_block_decomposition(d)?],
        Identity::MatrixTree => vec![check_mtt(d, limit)?],
        Identity::MiddleCharPoly => vec![check_eq4(d)?],
        Identity::MiddleComplexity => vec![check_eq3(d)?],
        Identity::MiddleTreeCount => vec![check_eq5(d)?],
        Identity::LineComplexity => vec![check_levine1(d)?],
        Identity::MiddleRooted => arcs
            .iter()
            .map(|&e| check_eq6(d, e))
            .collect::<Result<_, _>>()?,
        Identity::LineRooted => arcs
            .iter()
            .map(|&e| check_levine2(d, e))
            .collect::<Result<_, _>>()?,
    })
}

/// Runs every identity, turning unmet preconditions (a source vertex for
/// `levine2`, an oversized candidate space for `mtt`) into not-applicable
/// reports.
pub fn check_all(
    d: &WeightedDigraph,
    arc: Option<usize>,
    limit: u64,
) -> Result<Vec<IdentityReport>, IdentityError> {
    let mut out = Vec::new();
    for identity in Identity::ALL {
        match check(identity, d, arc, limit) {
            Ok(reports) => out.extend(reports),
            Err(e @ IdentityError::Hypothesis { .. })
            | Err(e @ IdentityError::Oracle(OracleError::TooLarge { .. })) => {
                out.push(IdentityReport::not_applicable(identity, d, e.to_string()))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
