//! Structural transformations and the extremal family generators.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Open neighborhood hypergraph: one edge `N(v)` per vertex `v`.
///
/// Equal neighborhoods collapse to one edge and set the multi-edge flag.
/// Graph inputs yield singleton edges at degree-one vertices, so the result
/// admits them.
pub fn onh(h: &Hypergraph) -> Result<Hypergraph> {
    let nbhd = h.neighborhoods();
    if let Some(vertex) = nbhd.iter().position(Vec::is_empty) {
        return Err(Error::IsolatedVertex { vertex });
    }
    Hypergraph::with_singletons(h.n(), nbhd)
}

/// 2-section: `uv` is an edge iff some hyperedge contains both.
pub fn two_section(h: &Hypergraph) -> Graph {
    let mut pairs = std::collections::BTreeSet::new();
    for e in h.edges() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                pairs.insert((u, v));
            }
        }
    }
    Graph::new(h.n(), pairs.into_iter().collect()).expect("2-section is simple")
}

/// Dual graph of a 2-regular hypergraph: vertices are the hyperedges, and
/// each hypergraph vertex becomes the graph edge joining its two edges,
/// labelled with that vertex.
///
/// Non-linear inputs would produce parallel edges and are refused.
pub fn dual(h: &Hypergraph) -> Result<Graph> {
    let inc = h.incidence();
    if let Some(v) = inc.iter().position(|e| e.len() != 2) {
        return Err(Error::Precondition(format!(
            "dual needs a 2-regular hypergraph; vertex {v} has degree {}",
            inc[v].len()
        )));
    }
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut labelled = Vec::with_capacity(h.n());
    for (v, es) in inc.iter().enumerate() {
        let pair = (es[0], es[1]);
        if let Some(&u) = seen.get(&pair) {
            return Err(Error::Multigraph { u, v });
        }
        seen.insert(pair, v);
        labelled.push((pair, v));
    }
    Graph::with_labeled_edges(h.m(), labelled)
}

/// The hypergraph whose vertices are the edges of `g` (in `g`'s edge order)
/// and whose edges are the vertex stars. Its [`dual`] is `g` again.
pub fn incidence_hypergraph(g: &Graph) -> Result<Hypergraph> {
    let mut stars = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        stars[u].push(i);
        stars[v].push(i);
    }
    if let Some(v) = stars.iter().position(|s| s.len() < 2) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {} (stars need at least two edges)",
            stars[v].len()
        )));
    }
    Hypergraph::new(g.m(), stars)
}

/// Removes the lowest-indexed degree-one vertex from every edge, collapsing
/// any edges that become equal. The removed vertices are dropped, so the
/// result has `n - m` vertices and carries labels back to `h`.
pub fn shrink_degree_one(h: &Hypergraph) -> Result<Hypergraph> {
    let deg = h.degrees();
    let mut edges = Vec::with_capacity(h.m());
    for (i, e) in h.edges().iter().enumerate() {
        let Some(pos) = e.iter().position(|&v| deg[v] == 1) else {
            return Err(Error::Precondition(format!("edge {i} has no degree-1 vertex")));
        };
        let mut shrunk = e.clone();
        shrunk.remove(pos);
        edges.push(shrunk);
    }
    let mut reduced = Hypergraph::with_singletons(h.n(), edges)?;
    if let Some(labels) = h.labels() {
        reduced = reduced.with_labels(labels.to_vec())?;
    }
    Ok(reduced.edge_induced(0..reduced.m()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    Fk,
    FkStar,
}

/// A generated extremal instance together with its construction metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    pub hypergraph: Hypergraph,
    pub base_n: usize,
    pub kind: FamilyKind,
    pub k: usize,
}

impl FamilyInstance {
    /// The total domination number the construction attains, `2 * base_n`.
    pub fn expected_gamma_t(&self) -> usize {
        2 * self.base_n
    }
}

/// For each vertex `v` of `base`, adds `v_1..v_k` and the edges
/// `{v, v_1..v_{k-1}}`, `{v_1..v_k}`. New vertices are numbered after the
/// base vertices, `k` per base vertex in ascending order.
pub fn family_fk(base: &Hypergraph, k: usize) -> Result<FamilyInstance> {
    if !base.class_check().in_class(k) {
        return Err(Error::Precondition(format!("base is not in the {k}-uniform class")));
    }
    let nf = base.n();
    let mut edges = base.edges().to_vec();
    for v in 0..nf {
        let fresh: Vec<usize> = (0..k).map(|i| nf + v * k + i).collect();
        let mut pendant = vec![v];
        pendant.extend_from_slice(&fresh[..k - 1]);
        edges.push(pendant);
        edges.push(fresh);
    }
    Ok(FamilyInstance {
        hypergraph: Hypergraph::new(nf * (k + 1), edges)?,
        base_n: nf,
        kind: FamilyKind::Fk,
        k,
    })
}

/// Like [`family_fk`] with `k + 1` new vertices per base vertex and the edges
/// `{v, v_1..v_{k-1}}`, `{v_2..v_{k+1}}`. Needs `k ≥ 3` and a base without
/// two edges sharing `k - 1` vertices.
pub fn family_fk_star(base: &Hypergraph, k: usize) -> Result<FamilyInstance> {
    if k < 3 {
        return Err(Error::Precondition("the starred family needs k >= 3".into()));
    }
    let class = base.class_check();
    if !(class.in_hk_star && class.k == k) {
        return Err(Error::Precondition(format!("base is not in the starred {k}-uniform class")));
    }
    let nf = base.n();
    let mut edges = base.edges().to_vec();
    for v in 0..nf {
        let fresh: Vec<usize> = (0..=k).map(|i| nf + v * (k + 1) + i).collect();
        let mut pendant = vec![v];
        pendant.extend_from_slice(&fresh[..k - 1]);
        edges.push(pendant);
        edges.push(fresh[1..].to_vec());
    }
    Ok(FamilyInstance {
        hypergraph: Hypergraph::new(nf * (k + 2), edges)?,
        base_n: nf,
        kind: FamilyKind::FkStar,
        k,
    })
}
