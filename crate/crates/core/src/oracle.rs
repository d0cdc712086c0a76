//! Brute-force spanning-tree enumeration.
//!
//! A spanning tree rooted at `r` picks one outgoing arc for every vertex other
//! than `r` such that following the picks from any vertex ends at `r`. The
//! enumerator walks the Cartesian product of out-arc choices in lexicographic
//! order (earlier vertices vary slowest, arcs in declaration order) and keeps
//! the acyclic ones. Nothing here touches a matrix, so it serves as ground
//! truth for the determinant-based computations in [`crate::complexity`].

use num_traits::{One, Zero};

use crate::complexity::ComplexityKind;
use crate::graph::WeightedDigraph;
use crate::{Integer, Rational};

/// Default bound on the number of candidate choice functions per root.
pub const DEFAULT_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("unknown root {0:?}")]
    UnknownRoot(String),
    #[error("candidate space of root {root:?} exceeds the limit of {limit}")]
    TooLarge { root: String, limit: u64 },
    #[error("digraph has no vertices")]
    Empty,
}

/// A root together with the outgoing arc chosen at every other vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    choice: Vec<Option<usize>>,
}

impl SpanningTree {
    pub fn root(&self) -> usize {
        self.root
    }

    /// The arc chosen at `v`, `None` for the root.
    pub fn choice(&self, v: usize) -> Option<usize> {
        self.choice[v]
    }

    /// Tree arcs ordered by their tail vertex.
    pub fn arcs(&self) -> impl Iterator<Item = usize> + '_ {
        self.choice.iter().filter_map(|c| *c)
    }

    /// Product of the per-arc factors selected by `kind`.
    pub fn weight(&self, d: &WeightedDigraph, kind: ComplexityKind) -> Rational {
        self.arcs()
            .fold(Rational::one(), |acc, a| acc * kind.arc_factor(d, a))
    }

    /// Comma-separated `tail->head` list of the tree arcs.
    pub fn render(&self, d: &WeightedDigraph) -> String {
        self.arcs()
            .map(|a| d.arc_name(a))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Reasons a [`SpanningTree`] fails validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeDefect {
    #[error("choice vector has the wrong length")]
    WrongLength,
    #[error("the root has an outgoing arc")]
    RootHasArc,
    #[error("vertex {0} has no outgoing arc")]
    MissingChoice(usize),
    #[error("arc chosen at vertex {0} does not leave it")]
    ForeignArc(usize),
    #[error("vertex {0} lies on a cycle or does not reach the root")]
    Cyclic(usize),
}

/// Checks every structural requirement of a spanning tree of `d`.
pub fn validate(d: &WeightedDigraph, tree: &SpanningTree) -> Result<(), TreeDefect> {
    let n = d.vertex_count();
    if tree.choice.len() != n || tree.root >= n {
        return Err(TreeDefect::WrongLength);
    }
    for (v, c) in tree.choice.iter().enumerate() {
        match (v == tree.root, c) {
            (true, Some(_)) => return Err(TreeDefect::RootHasArc),
            (false, None) => return Err(TreeDefect::MissingChoice(v)),
            (false, Some(a)) if *a >= d.arc_count() || d.arc(*a).tail != v => {
                return Err(TreeDefect::ForeignArc(v))
            }
            _ => {}
        }
    }
    let chains = chains_are_acyclic(d, tree);
    let reach = all_reach_root(d, tree);
    assert_eq!(
        chains.is_ok(),
        reach.is_ok(),
        "acyclicity and reachability checks disagree"
    );
    chains
}

/// Walks each vertex's choice chain, marking vertices already known to reach
/// the root.
fn chains_are_acyclic(d: &WeightedDigraph, tree: &SpanningTree) -> Result<(), TreeDefect> {
    const UNSEEN: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let n = d.vertex_count();
    let mut state = vec![UNSEEN; n];
    state[tree.root] = DONE;
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        let mut cur = start;
        while state[cur] == UNSEEN {
            state[cur] = ON_PATH;
            path.push(cur);
            cur = d.arc(tree.choice[cur].expect("validated")).head;
        }
        if state[cur] == ON_PATH {
            return Err(TreeDefect::Cyclic(cur));
        }
        for v in path.drain(..) {
            state[v] = DONE;
        }
    }
    Ok(())
}

/// Searches backwards from the root along chosen arcs.
fn all_reach_root(d: &WeightedDigraph, tree: &SpanningTree) -> Result<(), TreeDefect> {
    let n = d.vertex_count();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, c) in tree.choice.iter().enumerate() {
        if let Some(a) = c {
            children[d.arc(*a).head].push(v);
        }
    }
    let mut seen = vec![false; n];
    seen[tree.root] = true;
    let mut stack = vec![tree.root];
    while let Some(v) = stack.pop() {
        for &c in &children[v] {
            if !seen[c] {
                seen[c] = true;
                stack.push(c);
            }
        }
    }
    match seen.iter().position(|s| !s) {
        Some(v) => Err(TreeDefect::Cyclic(v)),
        None => Ok(()),
    }
}

/// Number of candidate choice functions for `root`, saturating at
/// `u64::MAX`.
pub fn candidate_space(d: &WeightedDigraph, root: usize) -> u64 {
    let profile = d.degree_profile();
    let mut total: u64 = 1;
    for (v, &deg) in profile.out_degree.iter().enumerate() {
        if v != root {
            total = total.saturating_mul(deg as u64);
        }
    }
    total
}

fn resolve_root(d: &WeightedDigraph, root: &str) -> Result<usize, OracleError> {
    d.vertex_index(root)
        .ok_or_else(|| OracleError::UnknownRoot(root.to_string()))
}

fn check_limit(d: &WeightedDigraph, root: usize, limit: u64) -> Result<(), OracleError> {
    if candidate_space(d, root) > limit {
        Err(OracleError::TooLarge {
            root: d.label(root).to_string(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Calls `visit` once per spanning tree rooted at vertex index `root`, in
/// lexicographic order of arc choices.
///
/// Refuses up front, without visiting anything, when the candidate space
/// exceeds `limit`. Prefixes that already close a cycle are skipped as a
/// block since no completion of them is a tree.
pub fn for_each_spanning_tree(
    d: &WeightedDigraph,
    root: usize,
    limit: u64,
    mut visit: impl FnMut(&SpanningTree),
) -> Result<(), OracleError> {
    assert!(root < d.vertex_count(), "root index out of range");
    check_limit(d, root, limit)?;
    let n = d.vertex_count();
    let order: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let options: Vec<Vec<usize>> = (0..n).map(|v| d.out_arcs(v).collect()).collect();
    if order.iter().any(|&v| options[v].is_empty()) {
        return Ok(());
    }
    let mut tree = SpanningTree {
        root,
        choice: vec![None; n],
    };
    descend(d, &order, &options, 0, &mut tree, &mut visit);
    Ok(())
}

fn descend(
    d: &WeightedDigraph,
    order: &[usize],
    options: &[Vec<usize>],
    depth: usize,
    tree: &mut SpanningTree,
    visit: &mut impl FnMut(&SpanningTree),
) {
    if depth == order.len() {
        validate(d, tree).expect("enumerator produced an invalid tree");
        visit(tree);
        return;
    }
    let v = order[depth];
    for &a in &options[v] {
        tree.choice[v] = Some(a);
        if !closes_cycle(d, tree, v) {
            descend(d, order, options, depth + 1, tree, visit);
        }
    }
    tree.choice[v] = None;
}

/// Whether the chain from `v` through already-chosen arcs returns to `v`.
fn closes_cycle(d: &WeightedDigraph, tree: &SpanningTree, v: usize) -> bool {
    let mut cur = v;
    while let Some(a) = tree.choice[cur] {
        cur = d.arc(a).head;
        if cur == v {
            return true;
        }
    }
    false
}

/// Every spanning tree rooted at `root`.
pub fn enumerate_spanning_trees(
    d: &WeightedDigraph,
    root: &str,
    limit: u64,
) -> Result<Vec<SpanningTree>, OracleError> {
    let r = resolve_root(d, root)?;
    let mut out = Vec::new();
    for_each_spanning_tree(d, r, limit, |t| out.push(t.clone()))?;
    Ok(out)
}

fn rooted_sum(
    d: &WeightedDigraph,
    kind: ComplexityKind,
    root: usize,
    limit: u64,
) -> Result<Rational, OracleError> {
    let mut sum = Rational::zero();
    for_each_spanning_tree(d, root, limit, |t| sum += t.weight(d, kind))?;
    Ok(sum)
}

/// Weighted sum over the enumerated trees rooted at `root`.
pub fn oracle_kappa_rooted(
    d: &WeightedDigraph,
    kind: ComplexityKind,
    root: &str,
    limit: u64,
) -> Result<Rational, OracleError> {
    rooted_sum(d, kind, resolve_root(d, root)?, limit)
}

/// Weighted sum over all enumerated spanning trees.
///
/// Checks the limit for every root before enumerating anything.
pub fn oracle_kappa_total(
    d: &WeightedDigraph,
    kind: ComplexityKind,
    limit: u64,
) -> Result<Rational, OracleError> {
    if d.vertex_count() == 0 {
        return Err(OracleError::Empty);
    }
    for r in 0..d.vertex_count() {
        check_limit(d, r, limit)?;
    }
    (0..d.vertex_count()).try_fold(Rational::zero(), |acc, r| {
        Ok(acc + rooted_sum(d, kind, r, limit)?)
    })
}

/// Number of spanning trees, counted one by one.
pub fn oracle_tree_count(d: &WeightedDigraph, limit: u64) -> Result<Integer, OracleError> {
    if d.vertex_count() == 0 {
        return Err(OracleError::Empty);
    }
    for r in 0..d.vertex_count() {
        check_limit(d, r, limit)?;
    }
    let mut count: u64 = 0;
    for r in 0..d.vertex_count() {
        for_each_spanning_tree(d, r, limit, |_| count += 1)?;
    }
    Ok(count.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_digraph;
    use crate::rat;

    const K3: &str = "arc a b\narc a c\narc b a\narc b c\narc c a\narc c b";

    fn rendered(d: &WeightedDigraph, root: &str) -> Vec<String> {
        enumerate_spanning_trees(d, root, DEFAULT_LIMIT)
            .unwrap()
            .iter()
            .map(|t| t.render(d))
            .collect()
    }

    #[test]
    fn single_arc() {
        let d = parse_digraph("arc u v").unwrap();
        assert_eq!(rendered(&d, "v"), vec!["u->v"]);
        assert!(rendered(&d, "u").is_empty());
    }

    #[test]
    fn clique_trees_in_lexicographic_order() {
        let d = parse_digraph(K3).unwrap();
        // b picks from (b,a),(b,c); c picks from (c,a),(c,b); b->c with c->b is the cycle
        assert_eq!(
            rendered(&d, "a"),
            vec!["b->a,c->a", "b->a,c->b", "b->c,c->a"]
        );
    }

    #[test]
    fn unknown_root_and_limit() {
        let d = parse_digraph(K3).unwrap();
        assert_eq!(
            enumerate_spanning_trees(&d, "q", DEFAULT_LIMIT),
            Err(OracleError::UnknownRoot("q".into()))
        );
        assert_eq!(candidate_space(&d, 0), 4);
        assert!(matches!(
            enumerate_spanning_trees(&d, "a", 3),
            Err(OracleError::TooLarge { .. })
        ));
        assert_eq!(enumerate_spanning_trees(&d, "a", 4).unwrap().len(), 3);
    }

    #[test]
    fn weighted_sums() {
        let d = parse_digraph("arc u v 3/4").unwrap();
        assert_eq!(
            oracle_kappa_rooted(&d, ComplexityKind::EdgeWeighted, "v", DEFAULT_LIMIT).unwrap(),
            rat(3, 4)
        );
        let d = parse_digraph("vertex u\nvertex v 5/2\narc u v").unwrap();
        assert_eq!(
            oracle_kappa_rooted(&d, ComplexityKind::VertexWeighted, "v", DEFAULT_LIMIT).unwrap(),
            rat(5, 2)
        );
        let path = parse_digraph("arc u v 2\narc v w 3").unwrap();
        assert_eq!(
            oracle_kappa_rooted(&path, ComplexityKind::EdgeWeighted, "w", DEFAULT_LIMIT).unwrap(),
            rat(6, 1)
        );
    }

    #[test]
    fn totals() {
        let c3 = parse_digraph("arc a b\narc b c\narc c a").unwrap();
        assert_eq!(
            oracle_kappa_total(&c3, ComplexityKind::EdgeWeighted, DEFAULT_LIMIT).unwrap(),
            rat(3, 1)
        );
        let pair = parse_digraph("arc u v\narc v u").unwrap();
        assert_eq!(
            oracle_kappa_total(&pair, ComplexityKind::VertexWeighted, DEFAULT_LIMIT).unwrap(),
            rat(2, 1)
        );
        let single = parse_digraph("vertex x 7").unwrap();
        assert_eq!(
            oracle_kappa_total(&single, ComplexityKind::VertexWeighted, DEFAULT_LIMIT).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            oracle_tree_count(&parse_digraph(K3).unwrap(), DEFAULT_LIMIT).unwrap(),
            9.into()
        );
    }

    #[test]
    fn validation_rejects_bad_trees() {
        let d = parse_digraph(K3).unwrap();
        // b -> c, c -> b: cycle
        let cyclic = SpanningTree {
            root: 0,
            choice: vec![None, Some(3), Some(5)],
        };
        assert_eq!(validate(&d, &cyclic), Err(TreeDefect::Cyclic(1)));
        let root_arc = SpanningTree {
            root: 0,
            choice: vec![Some(0), Some(2), Some(4)],
        };
        assert_eq!(validate(&d, &root_arc), Err(TreeDefect::RootHasArc));
        let missing = SpanningTree {
            root: 0,
            choice: vec![None, None, Some(4)],
        };
        assert_eq!(validate(&d, &missing), Err(TreeDefect::MissingChoice(1)));
        let foreign = SpanningTree {
            root: 0,
            choice: vec![None, Some(4), Some(4)],
        };
        assert_eq!(validate(&d, &foreign), Err(TreeDefect::ForeignArc(1)));
    }
}
