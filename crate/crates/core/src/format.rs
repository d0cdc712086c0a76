//! Line-oriented text interchange format for weighted digraphs.
//!
//! ```text
//! # comment
//! vertex NAME [WEIGHT]
//! arc TAIL HEAD [WEIGHT]
//! ```
//!
//! Weights are `INT` or `INT/INT` and must be positive; omitted weights are 1.
//! Arc endpoints that were not declared yet are declared implicitly with
//! weight 1.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::{is_valid_label, GraphError, WeightedDigraph};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("malformed weight {0:?}")]
    MalformedWeight(String),
    #[error("unknown directive {0:?}")]
    UnknownDirective(String),
    #[error("expected `{0}`")]
    Arity(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses a weight token. Returns `Ok(None)` if the token is not of the form
/// `INT` or `INT/INT` with a nonzero denominator.
pub fn parse_weight(token: &str) -> Option<Rational> {
    fn int(s: &str) -> Option<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    }
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (int(n)?, int(d)?),
        None => (int(token)?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn weight_or_default(token: Option<&str>, line: usize) -> Result<Rational, ParseError> {
    let Some(tok) = token else {
        return Ok(Rational::one());
    };
    // A leading sign is never valid syntax, but a negative value is reported
    // as nonpositive rather than malformed.
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok),
    };
    let w = parse_weight(body).ok_or_else(|| ParseError {
        line,
        kind: ParseErrorKind::MalformedWeight(tok.to_string()),
    })?;
    let w = if neg { -w } else { w };
    if !w.is_positive() {
        return Err(ParseError {
            line,
            kind: GraphError::NonPositiveWeight(w).into(),
        });
    }
    Ok(w)
}

fn ensure_vertex(d: &mut WeightedDigraph, label: &str) -> Result<usize, GraphError> {
    match d.vertex_index(label) {
        Some(i) => Ok(i),
        None => d.add_vertex(label, Rational::one()),
    }
}

/// Parses the interchange format into a digraph.
pub fn parse_digraph(text: &str) -> Result<WeightedDigraph, ParseError> {
    let mut d = WeightedDigraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |kind: ParseErrorKind| ParseError { line, kind };
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "vertex" => {
                if !(2..=3).contains(&tokens.len()) {
                    return Err(err(ParseErrorKind::Arity("vertex NAME [WEIGHT]")));
                }
                let w = weight_or_default(tokens.get(2).copied(), line)?;
                d.add_vertex(tokens[1], w).map_err(|e| err(e.into()))?;
            }
            "arc" => {
                if !(3..=4).contains(&tokens.len()) {
                    return Err(err(ParseErrorKind::Arity("arc TAIL HEAD [WEIGHT]")));
                }
                let w = weight_or_default(tokens.get(3).copied(), line)?;
                for name in &tokens[1..3] {
                    if !is_valid_label(name) {
                        return Err(err(GraphError::InvalidLabel(name.to_string()).into()));
                    }
                }
                if tokens[1] == tokens[2] {
                    return Err(err(GraphError::Loop(tokens[1].to_string()).into()));
                }
                let t = ensure_vertex(&mut d, tokens[1]).map_err(|e| err(e.into()))?;
                let h = ensure_vertex(&mut d, tokens[2]).map_err(|e| err(e.into()))?;
                d.add_arc(t, h, w).map_err(|e| err(e.into()))?;
            }
            other => return Err(err(ParseErrorKind::UnknownDirective(other.to_string()))),
        }
    }
    Ok(d)
}

/// Canonical text form: every vertex, then every arc, all with explicit weights.
pub fn serialize_digraph(d: &WeightedDigraph) -> String {
    let mut out = String::new();
    for v in d.vertices() {
        writeln!(out, "vertex {} {}", v.label, v.weight).unwrap();
    }
    for a in d.arcs() {
        writeln!(
            out,
            "arc {} {} {}",
            d.label(a.tail),
            d.label(a.head),
            a.weight
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn implicit_vertices_default_to_unit_weight() {
        let d = parse_digraph("arc u v").unwrap();
        assert_eq!(d.labels(), vec!["u", "v"]);
        assert_eq!(d.vertex(0).weight, rat(1, 1));
        assert_eq!(d.arc(0).weight, rat(1, 1));
    }

    #[test]
    fn explicit_weights() {
        let d = parse_digraph("vertex u 1/2\narc u v 3").unwrap();
        assert_eq!(d.vertex(0).weight, rat(1, 2));
        assert_eq!(d.vertex(1).weight, rat(1, 1));
        assert_eq!(d.arc(0).weight, rat(3, 1));
    }

    #[test]
    fn comments_blank_lines_and_tabs() {
        let d = parse_digraph("# header\n\n  vertex\ta\t4/6\n arc a  b\n# done\n").unwrap();
        assert_eq!(d.vertex(0).weight, rat(2, 3));
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn error_cases_carry_line_numbers() {
        let e = parse_digraph("arc u u").unwrap_err();
        assert_eq!(e.line, 1);
        assert_eq!(e.kind, ParseErrorKind::Graph(GraphError::Loop("u".into())));

        let e = parse_digraph("arc u v\narc u v 2").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Graph(GraphError::ParallelArc(..))
        ));

        let e = parse_digraph("vertex a\n\nvertex a 2").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Graph(GraphError::DuplicateVertex(_))
        ));

        for bad in ["0", "0/3", "-2", "-1/2"] {
            let e = parse_digraph(&format!("arc a b {bad}")).unwrap_err();
            assert!(
                matches!(
                    e.kind,
                    ParseErrorKind::Graph(GraphError::NonPositiveWeight(_))
                ),
                "{bad}"
            );
        }
        for bad in ["x", "1/0", "1.5", "1/", "/2", "+3", "1/2/3"] {
            let e = parse_digraph(&format!("vertex a {bad}")).unwrap_err();
            assert!(
                matches!(e.kind, ParseErrorKind::MalformedWeight(_)),
                "{bad}"
            );
        }
        assert!(matches!(
            parse_digraph("edge a b").unwrap_err().kind,
            ParseErrorKind::UnknownDirective(_)
        ));
        assert!(matches!(
            parse_digraph("arc a").unwrap_err().kind,
            ParseErrorKind::Arity(_)
        ));
        assert!(matches!(
            parse_digraph("vertex a#b").unwrap_err().kind,
            ParseErrorKind::Graph(GraphError::InvalidLabel(_))
        ));
    }

    #[test]
    fn implicit_then_explicit_declaration_is_a_duplicate() {
        let e = parse_digraph("arc u v\nvertex v 2").unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::Graph(GraphError::DuplicateVertex(_))
        ));
    }

    #[test]
    fn canonical_serialization() {
        let d = parse_digraph("arc u v").unwrap();
        assert_eq!(serialize_digraph(&d), "vertex u 1\nvertex v 1\narc u v 1\n");
        let w = parse_digraph("vertex w 2/3").unwrap();
        assert_eq!(serialize_digraph(&w), "vertex w 2/3\n");
    }
}
