//! Seeded random instances.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::transform::incidence_hypergraph;

use super::enumerate::binomial;

/// Redraws allowed when a generated instance must lie in the class.
pub const CLASS_ATTEMPTS: usize = 1000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` distinct `k`-subsets of `0..n`, uniformly at random.
fn draw_edges(k: usize, n: usize, m: usize, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    let total = binomial(n, k);
    if total <= 4096 && 2 * m as u128 > total {
        // dense: pick positions among all subsets
        let mut all = Vec::with_capacity(total as usize);
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            all.push(comb.clone());
            if !crate::solve::next_combination(&mut comb, n) {
                break;
            }
        }
        let mut picked: Vec<usize> = sample(rng, all.len(), m).into_vec();
        picked.sort_unstable();
        return picked.into_iter().map(|i| all[i].clone()).collect();
    }
    let mut edges = BTreeSet::new();
    while edges.len() < m {
        let mut e = sample(rng, n, k).into_vec();
        e.sort_unstable();
        edges.insert(e);
    }
    edges.into_iter().collect()
}

/// A `k`-uniform hypergraph on `n` vertices with `m` distinct random edges.
///
/// With `require_class`, draws are repeated from the same stream until the
/// result has no isolated vertex or isolated edge, up to [`CLASS_ATTEMPTS`].
pub fn random_hypergraph(k: usize, n: usize, m: usize, seed: u64, require_class: bool) -> Result<Hypergraph> {
    if k < 2 || k > n {
        return Err(Error::Parameter(format!("need 2 <= k <= n (k = {k}, n = {n})")));
    }
    let total = binomial(n, k);
    if m as u128 > total {
        return Err(Error::Parameter(format!("m = {m} exceeds C({n},{k}) = {total}")));
    }
    let mut rng = rng(seed);
    for _ in 0..CLASS_ATTEMPTS {
        let h = Hypergraph::new(n, draw_edges(k, n, m, &mut rng))?;
        if !require_class || h.class_check().in_class(k) {
            return Ok(h);
        }
    }
    Err(Error::Budget(format!(
        "no member of the class with k = {k}, n = {n}, m = {m} after {CLASS_ATTEMPTS} draws"
    )))
}

/// A uniformly random simple `d`-regular graph on `n` vertices by the
/// configuration model with rejection.
pub fn random_regular_graph(d: usize, n: usize, seed: u64) -> Result<Graph> {
    if d >= n || (d * n) % 2 == 1 {
        return Err(Error::Parameter(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut rng = rng(seed);
    'attempt: for _ in 0..CLASS_ATTEMPTS * 10 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut edges = BTreeSet::new();
        while !points.is_empty() {
            let i = rng.random_range(0..points.len());
            let a = points.swap_remove(i);
            let j = rng.random_range(0..points.len());
            let b = points.swap_remove(j);
            if a == b || !edges.insert((a.min(b), a.max(b))) {
                continue 'attempt;
            }
        }
        return Graph::new(n, edges.into_iter().collect());
    }
    Err(Error::Budget(format!("no simple {d}-regular graph on {n} vertices found")))
}

/// A random linear 2-regular `k`-uniform hypergraph with `m` edges: the
/// vertex stars of a random `k`-regular graph on `m` vertices.
pub fn random_linear_two_regular(k: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    incidence_hypergraph(&random_regular_graph(k, m, seed)?)
}

/// An Erdős–Rényi graph `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_distinct() {
        let a = random_hypergraph(3, 6, 4, 1, false).unwrap();
        assert_eq!(a, random_hypergraph(3, 6, 4, 1, false).unwrap());
        assert_eq!(a.m(), 4);
        assert_eq!(a.uniformity(), Some(3));
        assert!(!a.had_multi_edge());
    }

    #[test]
    fn class_requirement() {
        for seed in 0..50 {
            let h = random_hypergraph(3, 7, 3, seed, true).unwrap();
            assert!(h.class_check().in_class(3));
        }
        // two triples cannot cover seven vertices
        assert!(matches!(random_hypergraph(3, 7, 2, 0, true), Err(Error::Budget(_))));
    }

    #[test]
    fn too_many_edges() {
        assert!(random_hypergraph(3, 5, 11, 0, false).is_err());
        assert_eq!(random_hypergraph(3, 5, 10, 0, false).unwrap().m(), 10);
    }

    #[test]
    fn regular_and_linear() {
        for seed in 0..10 {
            let g = random_regular_graph(3, 8, seed).unwrap();
            assert!((0..8).all(|v| g.degree(v) == 3));
            let h = random_linear_two_regular(4, 7, seed).unwrap();
            let c = h.class_check();
            assert!(c.is_linear && c.is_r_regular(2) && c.k == 4);
        }
        assert!(random_regular_graph(3, 7, 0).is_err());
    }
}
