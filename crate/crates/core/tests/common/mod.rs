#![allow(dead_code)]

use std::collections::BTreeSet;

use hypercover::Hypergraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A hypergraph on `n` vertices with up to `m` distinct edges of sizes drawn
/// from `sizes`, with uncovered vertices dropped.
pub fn mixed(n: usize, m: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for _ in 0..m {
        let k = rng.random_range(sizes.clone()).min(n);
        let mut e = rand::seq::index::sample(&mut rng, n, k).into_vec();
        e.sort_unstable();
        edges.insert(e);
    }
    let h = Hypergraph::new(n, edges.into_iter().collect()).unwrap();
    h.edge_induced(0..h.m())
}

pub fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
}
