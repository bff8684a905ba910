//! Hypergraph data model and its structural predicates.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::search::bounds::{BoundRow, Provenance, TheoremId};

/// A finite hypergraph on the vertices `0..n` with no repeated edges.
///
/// Every edge is stored sorted and the edge list is sorted lexicographically,
/// so two hypergraphs with the same edge set compare equal. Repeated input
/// edges are collapsed and remembered in [`Hypergraph::had_multi_edge`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Vec<usize>>,
    had_multi_edge: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub n1: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

/// Membership flags for the classes the bounds are stated over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCheck {
    /// Common edge size, or 0 when the edges have different sizes (or there are none).
    pub k: usize,
    pub is_k_uniform: bool,
    pub has_isolated_vertex: bool,
    pub has_isolated_edge: bool,
    pub has_multi_edge: bool,
    pub in_hk: bool,
    pub in_hk_star: bool,
    pub is_linear: bool,
    /// `Some(r)` when every vertex has degree exactly `r`.
    pub regularity: Option<usize>,
}

impl ClassCheck {
    pub fn is_r_regular(&self, r: usize) -> bool {
        self.regularity == Some(r)
    }

    /// `in_hk` for a specific uniformity.
    pub fn in_class(&self, k: usize) -> bool {
        self.in_hk && self.k == k
    }
}

impl Hypergraph {
    /// Builds a hypergraph whose edges all have at least two vertices.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(n, edges, 2)
    }

    /// Like [`Hypergraph::new`] but admits edges of size one.
    ///
    /// Open neighborhood hypergraphs of graphs and degree-one shrinks of
    /// 2-uniform hypergraphs contain such edges.
    pub fn with_singletons(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(n, edges, 1)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
            labels: None,
            had_multi_edge: false,
        }
    }

    fn build(n: usize, edges: Vec<Vec<usize>>, min_size: usize) -> Result<Self> {
        let mut canon = Vec::with_capacity(edges.len());
        for (index, mut e) in edges.into_iter().enumerate() {
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            e.sort_unstable();
            e.dedup();
            match e.len() {
                0 => return Err(Error::EmptyEdge { index }),
                1 if min_size > 1 => return Err(Error::SingletonEdge { index }),
                _ => {}
            }
            canon.push(e);
        }
        canon.sort();
        let before = canon.len();
        canon.dedup();
        Ok(Hypergraph {
            n,
            had_multi_edge: canon.len() != before,
            edges: canon,
            labels: None,
        })
    }

    /// Attaches an original-label map (`labels[v]` is the label of vertex `v`).
    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Precondition(format!(
                "label map has {} entries for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Original label of `v` (identity when no map is attached).
    pub fn label(&self, v: usize) -> usize {
        self.labels.as_ref().map_or(v, |l| l[v])
    }

    pub fn had_multi_edge(&self) -> bool {
        self.had_multi_edge
    }

    /// Common edge size if all edges share one.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        DegreeProfile {
            n1: degrees.iter().filter(|&&d| d == 1).count(),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    /// `incidence()[v]` lists the indices of the edges containing `v`.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Open neighborhood `N(v)`, ascending.
    pub fn neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out = BTreeSet::new();
        for e in self.edges.iter().filter(|e| e.binary_search(&v).is_ok()) {
            out.extend(e.iter().copied().filter(|&u| u != v));
        }
        Ok(out.into_iter().collect())
    }

    /// All open neighborhoods at once.
    pub fn neighborhoods(&self) -> Vec<Vec<usize>> {
        let mut sets = vec![Vec::new(); self.n];
        for e in &self.edges {
            for &u in e {
                sets[u].extend(e.iter().copied().filter(|&w| w != u));
            }
        }
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        sets
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v
            && self
                .edges
                .iter()
                .any(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
    }

    /// Connected components as sorted vertex blocks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let mut r = find(&mut parent, e[0]);
            for &v in &e[1..] {
                let s = find(&mut parent, v);
                if s != r {
                    let (lo, hi) = if s < r { (s, r) } else { (r, s) };
                    parent[hi] = lo;
                    r = lo;
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[r]].push(v);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The sub-hypergraph formed by the chosen edges, with uncovered vertices
    /// dropped and survivors relabelled in ascending order.
    pub fn edge_induced(&self, edge_ids: impl IntoIterator<Item = usize>) -> Hypergraph {
        let kept: Vec<&Vec<usize>> = edge_ids.into_iter().map(|i| &self.edges[i]).collect();
        let mut used = vec![false; self.n];
        for e in &kept {
            for &v in e.iter() {
                used[v] = true;
            }
        }
        let mut new_index = vec![usize::MAX; self.n];
        let mut labels = Vec::new();
        for v in (0..self.n).filter(|&v| used[v]) {
            new_index[v] = labels.len();
            labels.push(self.label(v));
        }
        let mut edges: Vec<Vec<usize>> = kept
            .iter()
            .map(|e| e.iter().map(|&v| new_index[v]).collect())
            .collect();
        edges.sort();
        Hypergraph {
            n: labels.len(),
            edges,
            labels: Some(labels),
            had_multi_edge: false,
        }
    }

    /// One hypergraph per component that contains an edge.
    pub fn component_hypergraphs(&self) -> Vec<Hypergraph> {
        let comps = self.components();
        let mut comp_of = vec![0; self.n];
        for (c, block) in comps.iter().enumerate() {
            for &v in block {
                comp_of[v] = c;
            }
        }
        let mut by_comp = vec![Vec::new(); comps.len()];
        for (i, e) in self.edges.iter().enumerate() {
            by_comp[comp_of[e[0]]].push(i);
        }
        by_comp
            .into_iter()
            .filter(|ids| !ids.is_empty())
            .map(|ids| self.edge_induced(ids))
            .collect()
    }

    /// `H - X`: deletes `X` with every edge meeting it, then drops uncovered vertices.
    pub fn delete_vertices(&self, x: &[usize]) -> Result<Hypergraph> {
        let mut removed = vec![false; self.n];
        for &v in x {
            self.check_vertex(v)?;
            removed[v] = true;
        }
        let kept: Vec<usize> = (0..self.m())
            .filter(|&i| self.edges[i].iter().all(|&v| !removed[v]))
            .collect();
        Ok(self.edge_induced(kept))
    }

    pub fn class_check(&self) -> ClassCheck {
        let profile = self.degree_profile();
        let uniform = self.uniformity();
        let k = uniform.unwrap_or(0);
        let is_k_uniform = uniform.is_some();
        let has_isolated_vertex = profile.degrees.contains(&0);

        let m = self.m();
        let mut has_isolated_edge = false;
        let mut is_linear = true;
        let mut has_near_twin = false;
        let mut intersects = vec![false; m];
        let masks: Option<Vec<u128>> = (self.n <= 128)
            .then(|| self.edges.iter().map(|e| e.iter().fold(0u128, |acc, &v| acc | 1 << v)).collect());
        for i in 0..m {
            for j in (i + 1)..m {
                let common = match &masks {
                    Some(masks) => (masks[i] & masks[j]).count_ones() as usize,
                    None => intersection_size(&self.edges[i], &self.edges[j]),
                };
                if common > 0 {
                    intersects[i] = true;
                    intersects[j] = true;
                }
                if common > 1 {
                    is_linear = false;
                }
                if is_k_uniform && k >= 1 && common == k - 1 {
                    has_near_twin = true;
                }
            }
        }
        if intersects.iter().any(|&b| !b) {
            has_isolated_edge = true;
        }
        let in_hk = is_k_uniform
            && k >= 2
            && !has_isolated_vertex
            && !has_isolated_edge
            && !self.had_multi_edge;
        let regularity = match profile.degrees.first() {
            Some(&d) if profile.degrees.iter().all(|&x| x == d) => Some(d),
            _ => None,
        };
        ClassCheck {
            k,
            is_k_uniform,
            has_isolated_vertex,
            has_isolated_edge,
            has_multi_edge: self.had_multi_edge,
            in_hk,
            in_hk_star: in_hk && k >= 3 && !has_near_twin,
            is_linear,
            regularity,
        }
    }

    /// The inequalities every member of the uniform class satisfies:
    /// `n ≥ k+1`, `m ≥ 2`, `Δ ≥ 2` and `2n − n1 ≥ 2k`.
    ///
    /// Each row is `lhs ≤ rhs`.
    pub fn observation2_check<S: Scalar>(&self) -> Result<Vec<BoundRow<S>>> {
        let class = self.class_check();
        if !class.in_hk {
            return Err(Error::Precondition(
                "structural inequalities need a member of the uniform class".into(),
            ));
        }
        let k = class.k;
        let p = self.degree_profile();
        let c = S::from_count;
        let rows = vec![
            BoundRow::new(TheoremId::O2Order, c(k + 1), c(self.n), Provenance::Formula),
            BoundRow::new(TheoremId::O2Size, c(2), c(self.m()), Provenance::Formula),
            BoundRow::new(TheoremId::O2MaxDegree, c(2), c(p.max_degree), Provenance::Formula),
            BoundRow::new(TheoremId::O2Deficiency, c(2 * k), c(2 * self.n - p.n1), Provenance::Formula),
        ];
        Ok(rows)
    }
}

/// Size of the intersection of two sorted vertex lists.
pub fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}
