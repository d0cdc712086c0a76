//! Seeded random digraphs for fuzzing and corpus checks.
//!
//! Distribution: vertex count uniform in `1..=max_vertices`, each ordered
//! pair of distinct vertices present independently with probability
//! `arc_probability`, every vertex and arc weight `p/q` with `p` and `q`
//! uniform in `1..=max_weight_part`. Vertices are named `v1, v2, ...`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::WeightedDigraph;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DigraphDistribution {
    pub max_vertices: usize,
    pub arc_probability: f64,
    pub max_weight_part: i64,
}

impl Default for DigraphDistribution {
    fn default() -> Self {
        Self {
            max_vertices: 6,
            arc_probability: 0.4,
            max_weight_part: 9,
        }
    }
}

impl DigraphDistribution {
    fn weight(&self, rng: &mut impl Rng) -> Rational {
        let p = rng.random_range(1..=self.max_weight_part);
        let q = rng.random_range(1..=self.max_weight_part);
        Rational::new(p.into(), q.into())
    }

    pub fn sample(&self, rng: &mut impl Rng) -> WeightedDigraph {
        let n = rng.random_range(1..=self.max_vertices);
        let mut d = WeightedDigraph::new();
        for i in 1..=n {
            let w = self.weight(rng);
            d.add_vertex(&format!("v{i}"), w).expect("fresh label");
        }
        for t in 0..n {
            for h in 0..n {
                if t != h && rng.random_bool(self.arc_probability) {
                    let w = self.weight(rng);
                    d.add_arc(t, h, w).expect("simple by construction");
                }
            }
        }
        d
    }
}

/// `count` digraphs drawn from `dist` with a ChaCha8 stream seeded by `seed`.
pub fn corpus(seed: u64, count: usize, dist: DigraphDistribution) -> Vec<WeightedDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| dist.sample(&mut rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn corpus_is_reproducible_and_in_range() {
        let a = corpus(7, 50, DigraphDistribution::default());
        let b = corpus(7, 50, DigraphDistribution::default());
        assert_eq!(a, b);
        for d in &a {
            assert!((1..=6).contains(&d.vertex_count()));
            for w in d
                .vertices()
                .iter()
                .map(|v| &v.weight)
                .chain(d.arcs().iter().map(|a| &a.weight))
            {
                assert!(w.is_positive());
                assert!(*w.numer() <= 9.into() && *w.denom() <= 9.into());
            }
        }
        assert_ne!(a, corpus(8, 50, DigraphDistribution::default()));
    }
}
