//! Definition-level checks for every invariant's witness.
//!
//! These evaluate the defining predicates literally on the hypergraph or
//! graph and share no code with the search.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

fn membership(n: usize, set: &[usize]) -> Option<Vec<bool>> {
    let mut mark = vec![false; n];
    for &v in set {
        if v >= n || mark[v] {
            return None;
        }
        mark[v] = true;
    }
    Some(mark)
}

/// Every edge meets `set`.
pub fn is_transversal(h: &Hypergraph, set: &[usize]) -> bool {
    let Some(inside) = membership(h.n(), set) else {
        return false;
    };
    h.edges().iter().all(|e| e.iter().any(|&v| inside[v]))
}

/// A transversal in which every member has a neighbor inside the set.
pub fn is_total_transversal(h: &Hypergraph, set: &[usize]) -> bool {
    is_transversal(h, set) && set.iter().all(|&v| set.iter().any(|&u| h.adjacent(u, v)))
}

/// Contains at least two vertices of every edge.
pub fn is_strong_transversal(h: &Hypergraph, set: &[usize]) -> bool {
    let Some(inside) = membership(h.n(), set) else {
        return false;
    };
    h.edges()
        .iter()
        .all(|e| e.iter().filter(|&&v| inside[v]).count() >= 2)
}

/// Every vertex outside `set` lies in an edge that meets `set`.
pub fn is_dominating(h: &Hypergraph, set: &[usize]) -> bool {
    let Some(inside) = membership(h.n(), set) else {
        return false;
    };
    (0..h.n()).filter(|&v| !inside[v]).all(|v| {
        h.edges()
            .iter()
            .any(|e| e.contains(&v) && e.iter().any(|&u| inside[u]))
    })
}

/// Every vertex lies in an edge that meets `set` outside the vertex itself.
pub fn is_total_dominating(h: &Hypergraph, set: &[usize]) -> bool {
    let Some(inside) = membership(h.n(), set) else {
        return false;
    };
    (0..h.n()).all(|v| {
        h.edges()
            .iter()
            .any(|e| e.contains(&v) && e.iter().any(|&u| u != v && inside[u]))
    })
}

/// `edge_ids` covers every vertex and no chosen edge is isolated among the
/// chosen edges.
pub fn is_total_edge_cover(g: &Graph, edge_ids: &[usize]) -> bool {
    let Some(_) = membership(g.m(), edge_ids) else {
        return false;
    };
    let mut covered = vec![false; g.n()];
    for &i in edge_ids {
        let (u, v) = g.edges()[i];
        covered[u] = true;
        covered[v] = true;
    }
    if covered.iter().any(|&c| !c) {
        return false;
    }
    edge_ids.iter().all(|&i| {
        let (a, b) = g.edges()[i];
        edge_ids.iter().any(|&j| {
            let (c, d) = g.edges()[j];
            j != i && (a == c || a == d || b == c || b == d)
        })
    })
}
