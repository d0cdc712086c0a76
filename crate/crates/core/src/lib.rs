//! Exact spanning-tree complexities of weighted digraphs.
//!
//! The crate computes edge- and vertex-weighted complexities (weighted sums
//! over spanning in-trees) through Laplacian minors, builds line and middle
//! digraphs, enumerates spanning trees by brute force as an independent
//! ground truth, and checks the identities that relate the complexity of a
//! digraph to the complexities of its middle and line digraphs.
//!
//! Every number is an exact rational; nothing here touches floating point.
//!
//! ```
//! use spantree::{format::parse_digraph, transform::middle_digraph, complexity};
//!
//! let k2 = parse_digraph("arc u v\narc v u").unwrap();
//! assert_eq!(complexity::tree_count(&k2).unwrap(), 2.into());
//! let m = middle_digraph(&k2).unwrap();
//! assert_eq!(complexity::tree_count(&m).unwrap(), 8.into());
//! ```

pub mod complexity;
pub mod format;
pub mod graph;
pub mod identities;
pub mod linalg;
pub mod oracle;
pub mod random;
pub mod transform;

pub use complexity::ComplexityKind;
pub use graph::{Arc, DegreeProfile, GraphError, WeightedDigraph};
pub use linalg::{RationalMatrix, RationalPolynomial};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Shorthand for `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
