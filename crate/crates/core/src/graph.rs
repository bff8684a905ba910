//! Simple graphs, the target of the 2-section and dual transforms.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A simple graph on `0..n`. Edges are stored as `(u, v)` with `u < v`,
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `edge_labels[i]` names the object edge `i` stands for (for duals, the
    /// hypergraph vertex).
    edge_labels: Option<Vec<usize>>,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::build(n, edges.into_iter().map(|e| (e, None)).collect())
    }

    /// Builds a graph whose edges carry labels; labels follow their edges
    /// through canonical sorting.
    pub fn with_labeled_edges(n: usize, edges: Vec<((usize, usize), usize)>) -> Result<Self> {
        Self::build(n, edges.into_iter().map(|(e, l)| (e, Some(l))).collect())
    }

    fn build(n: usize, raw: Vec<((usize, usize), Option<usize>)>) -> Result<Self> {
        let labelled = raw.first().is_some_and(|(_, l)| l.is_some());
        let mut items = Vec::with_capacity(raw.len());
        for ((a, b), label) in raw {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { u: a, v: b });
            }
            items.push(((a.min(b), a.max(b)), label));
        }
        items.sort();
        if let Some(w) = items.windows(2).find(|w| w[0].0 == w[1].0) {
            let (u, v) = w[0].0;
            return Err(Error::ParallelEdge { u, v });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &((u, v), _) in &items {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let edge_labels = labelled.then(|| items.iter().map(|(_, l)| l.unwrap_or(usize::MAX)).collect());
        Ok(Graph {
            n,
            edges: items.into_iter().map(|(e, _)| e).collect(),
            edge_labels,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Option<&[usize]> {
        self.edge_labels.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut block = vec![s];
            let mut i = 0;
            while i < block.len() {
                let v = block[i];
                i += 1;
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        block.push(u);
                    }
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The same graph as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n, self.edges.iter().map(|&(u, v)| vec![u, v]).collect())
            .expect("simple graph is a valid 2-uniform hypergraph")
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        if h.uniformity().is_some_and(|k| k != 2) || h.edges().iter().any(|e| e.len() != 2) {
            return Err(Error::Precondition("graph conversion needs a 2-uniform hypergraph".into()));
        }
        Graph::new(h.n(), h.edges().iter().map(|e| (e[0], e[1])).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        Graph::new(n, edges).unwrap()
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).unwrap()
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).unwrap()
    }
}
