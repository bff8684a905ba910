//! Total transversals of `k`-uniform members of the class (`k ≥ 3`) within
//! `(n + m)/3`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{intersection_size, Hypergraph};
use crate::scalar::Rational;
use crate::solve::predicates::is_total_transversal;
use crate::transform::dual;

use super::packing::total_edge_cover_forest;
use super::tt2::{max_degree_vertex, surviving_neighbor};
use super::{covering_pair, unlabelled, Builder, ConstructionResult, Rule};

/// Builds a total transversal of size at most `(n + m)/3`.
///
/// Per component the first applicable reduction fires: an adjacent covering
/// pair; a maximum-degree vertex with a surviving neighbor when `Δ ≥ 3`; the
/// pair next to a degree-one vertex; the pair inside two edges that share at
/// least two vertices. What is left is 2-regular and linear, and is finished
/// through its dual graph.
pub fn tt_kuniform(h: &Hypergraph) -> Result<ConstructionResult> {
    let class = h.class_check();
    if !(class.in_hk && class.k >= 3) {
        return Err(Error::Precondition(
            "ttk needs a k-uniform hypergraph (k >= 3) without isolated vertices or edges".into(),
        ));
    }
    let mut b = Builder::default();
    for c in unlabelled(h).component_hypergraphs() {
        component(&c, class.k, &mut b)?;
    }
    let out = b.finish(Rational::new((h.n() + h.m()) as i64, 3));
    if !is_total_transversal(h, &out.set) {
        return Err(Error::Internal("ttk produced a set that is not a total transversal".into()));
    }
    Ok(out)
}

fn component(h: &Hypergraph, k: usize, b: &mut Builder) -> Result<()> {
    if let Some((u, v)) = covering_pair(h) {
        b.terminal(Rule::PairCover, vec![h.label(u), h.label(v)]);
        return Ok(());
    }
    let deg = h.degrees();
    let rest = if deg.iter().any(|&d| d >= 3) {
        let x = max_degree_vertex(&deg);
        let y = surviving_neighbor(h, x).ok_or_else(|| stuck("maximum degree"))?;
        b.take(h, Rule::MaxDegreePair, &[x, y])
    } else if let Some(v1) = deg.iter().position(|&d| d == 1) {
        let x = degree_one_pair(h, v1).ok_or_else(|| stuck("degree one"))?;
        b.take(h, Rule::DegreeOne, &x)
    } else if let Some(x) = shared_pair(h) {
        b.take(h, Rule::SharedPair, &x)
    } else {
        let g = dual(h).map_err(|e| Error::Internal(format!("terminal component: {e}")))?;
        let labels = g.edge_labels().expect("dual edges carry vertex labels");
        let (rule, edges) = if k >= 4 {
            (Rule::SpanningTree, spanning_tree(&g))
        } else {
            (Rule::PackingForest, total_edge_cover_forest(&g)?.set)
        };
        let mut taken: Vec<usize> = edges.iter().map(|&i| h.label(labels[i])).collect();
        taken.sort_unstable();
        b.terminal(rule, taken);
        return Ok(());
    };
    for c in rest.component_hypergraphs() {
        component(&c, k, b)?;
    }
    Ok(())
}

fn stuck(rule: &str) -> Error {
    Error::Internal(format!("{rule} reduction found no partner vertex"))
}

/// `{v2, v3}` for the degree-one vertex `v1`: `e1` is the edge of `v1`, `e2`
/// the lowest edge meeting it, `v2` the lowest vertex of `e1 ∩ e2`, and `v3`
/// the lowest vertex of `e1 ∪ e2` in the lowest edge that avoids `v2`.
/// Falls back to any neighbor of `v2` in an edge avoiding `v2`.
fn degree_one_pair(h: &Hypergraph, v1: usize) -> Option<[usize; 2]> {
    let edges = h.edges();
    let i1 = edges.iter().position(|e| e.contains(&v1))?;
    let e1 = &edges[i1];
    let i2 = (0..h.m()).find(|&j| j != i1 && intersection_size(e1, &edges[j]) > 0)?;
    let e2 = &edges[i2];
    let v2 = *e1.iter().find(|v| e2.contains(v))?;
    let near = |v: &usize| e1.contains(v) || e2.contains(v);
    let v3 = edges
        .iter()
        .filter(|e| !e.contains(&v2))
        .find_map(|e| e.iter().copied().find(near))
        .or_else(|| surviving_neighbor(h, v2))?;
    Some([v2, v3])
}

/// `{u, v}` for the lowest pair of edges `e, f` sharing at least two
/// vertices: `u` the lowest vertex of `e ∩ f`, `v` the lowest of `e \ f`.
fn shared_pair(h: &Hypergraph) -> Option<[usize; 2]> {
    let edges = h.edges();
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            if intersection_size(&edges[i], &edges[j]) >= 2 {
                let u = *edges[i].iter().find(|v| edges[j].contains(v))?;
                let v = *edges[i].iter().find(|v| !edges[j].contains(v))?;
                return Some([u, v]);
            }
        }
    }
    None
}

/// Edge indices of the breadth-first spanning forest, scanning neighbors in
/// ascending order.
pub(crate) fn spanning_tree(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut tree = Vec::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(g.edge_index(u, w).expect("neighbors share an edge"));
                    queue.push_back(w);
                }
            }
        }
    }
    tree.sort_unstable();
    tree
}
