//! Total transversals of graphs (2-uniform members of the class) within
//! `2(n + m)/5`.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Rational;
use crate::solve::predicates::is_total_transversal;

use super::{covering_pair, unlabelled, Builder, ConstructionResult, Rule};

/// Builds a total transversal of size at most `2(n + m)/5`.
///
/// Per component: an adjacent covering pair if there is one; otherwise a
/// maximum-degree vertex `x` (lowest index) with its lowest neighbor `y`
/// that keeps an edge after `x` is removed. Edges left isolated are repaired
/// with one vertex adjacent to `x` or `y`, and the remainder is reduced the
/// same way.
pub fn tt_2uniform(h: &Hypergraph) -> Result<ConstructionResult> {
    if !h.class_check().in_class(2) {
        return Err(Error::Precondition(
            "tt2 needs a 2-uniform hypergraph without isolated vertices or edges".into(),
        ));
    }
    let mut b = Builder::default();
    for c in unlabelled(h).component_hypergraphs() {
        component(&c, &mut b);
    }
    let guarantee = Rational::new(2 * (h.n() + h.m()) as i64, 5);
    let out = b.finish(guarantee);
    if !is_total_transversal(h, &out.set) {
        return Err(Error::Internal("tt2 produced a set that is not a total transversal".into()));
    }
    Ok(out)
}

fn component(h: &Hypergraph, b: &mut Builder) {
    if let Some((u, v)) = covering_pair(h) {
        b.terminal(Rule::PairCover, vec![h.label(u), h.label(v)]);
        return;
    }
    let deg = h.degrees();
    let x = max_degree_vertex(&deg);
    let y = surviving_neighbor(h, x).expect("a connected component without a covering pair");
    let rest = b.take(h, Rule::MaxDegreePair, &[x, y]);
    for c in rest.component_hypergraphs() {
        component(&c, b);
    }
}

/// Lowest-index vertex of maximum degree.
pub(crate) fn max_degree_vertex(deg: &[usize]) -> usize {
    let max = deg.iter().copied().max().unwrap_or(0);
    deg.iter().position(|&d| d == max).unwrap_or(0)
}

/// Lowest neighbor of `x` lying in an edge that avoids `x`.
pub(crate) fn surviving_neighbor(h: &Hypergraph, x: usize) -> Option<usize> {
    let mut ok = vec![false; h.n()];
    for e in h.edges().iter().filter(|e| !e.contains(&x)) {
        for &v in e {
            ok[v] = true;
        }
    }
    h.neighborhood(x).ok()?.into_iter().find(|&y| ok[y])
}
