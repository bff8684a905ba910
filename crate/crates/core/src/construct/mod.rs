//! Polynomial-time constructions with proven size guarantees.

pub mod packing;
pub mod strong;
pub mod tt2;
pub mod ttk;

use serde::Serialize;

use crate::hypergraph::Hypergraph;
use crate::scalar::Rational;

pub use packing::{p3_packing, total_edge_cover_forest, PackingMode, P3, P3_EXACT_CAP};
pub use strong::{
    randomized_strong_transversal, strong_probability, strong_transversal_bound,
    strong_transversal_trials, StrongBound, StrongSample, TrialReport,
};
pub use tt2::tt_2uniform;
pub use ttk::tt_kuniform;

/// Which reduction produced a trace step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// An adjacent pair meets every edge of the component.
    PairCover,
    /// A maximum-degree vertex and a neighbor that survives its removal.
    MaxDegreePair,
    /// Two adjacent vertices next to a degree-one vertex.
    DegreeOne,
    /// A vertex shared by two edges meeting in at least two vertices, with a
    /// private vertex of one of them.
    SharedPair,
    /// Spanning tree of the dual of a 2-regular linear component.
    SpanningTree,
    /// Packing-seeded spanning forest of the cubic dual.
    PackingForest,
    /// Seeding a forest with one path on three vertices.
    Seed,
    /// Attaching an unpacked vertex to the forest.
    Attach,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    /// Vertices (edges, for edge covers) taken by this step, in original labels.
    pub taken: Vec<usize>,
    /// Vertices added to repair edges left isolated by the step.
    pub repaired: Vec<usize>,
}

/// Output of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    /// Vertex set, or edge-index set for edge covers. Sorted.
    pub set: Vec<usize>,
    /// The size the construction promises not to exceed.
    #[serde(serialize_with = "crate::search::bounds::ser_display")]
    pub guarantee: Rational,
    pub trace: Vec<TraceStep>,
}

impl ConstructionResult {
    pub fn within_guarantee(&self) -> bool {
        Rational::from(self.set.len() as i64) <= self.guarantee
    }
}

/// Lowest adjacent pair `{u, v}` (lexicographic) that meets every edge.
pub(crate) fn covering_pair(h: &Hypergraph) -> Option<(usize, usize)> {
    let inc = h.incidence();
    let m = h.m();
    let nb = h.neighborhoods();
    for u in 0..h.n() {
        for &v in nb[u].iter().filter(|&&v| v > u) {
            let mut hit = vec![false; m];
            for &e in inc[u].iter().chain(&inc[v]) {
                hit[e] = true;
            }
            if hit.iter().all(|&b| b) {
                return Some((u, v));
            }
        }
    }
    None
}

/// The same hypergraph with vertex indices as labels, so constructions
/// report members in the caller's indexing.
pub(crate) fn unlabelled(h: &Hypergraph) -> Hypergraph {
    Hypergraph::with_singletons(h.n(), h.edges().to_vec()).expect("edges of a valid hypergraph")
}

/// Accumulates the set and trace of a reduction-style construction.
#[derive(Default)]
pub(crate) struct Builder {
    set: Vec<usize>,
    trace: Vec<TraceStep>,
}

impl Builder {
    /// Takes `x` (local indices of `h`), repairs the edges the removal leaves
    /// isolated and returns `h - X*`.
    ///
    /// Each repair vertex is the lowest-index vertex of the isolated edge with
    /// degree at least two in `h`. It is adjacent to `x` because its other
    /// edges were deleted with `x`.
    pub(crate) fn take(&mut self, h: &Hypergraph, rule: Rule, x: &[usize]) -> Hypergraph {
        let mut removed = vec![false; h.n()];
        for &v in x {
            removed[v] = true;
        }
        let deg = h.degrees();
        let kept: Vec<usize> = (0..h.m())
            .filter(|&i| h.edge(i).iter().all(|&v| !removed[v]))
            .collect();
        let mut kept_deg = vec![0usize; h.n()];
        for &i in &kept {
            for &v in h.edge(i) {
                kept_deg[v] += 1;
            }
        }
        let mut repaired = Vec::new();
        for &i in &kept {
            let e = h.edge(i);
            if e.iter().all(|&v| kept_deg[v] == 1) {
                let z = *e
                    .iter()
                    .find(|&&v| deg[v] >= 2)
                    .expect("an edge isolated by deletion met a deleted edge");
                repaired.push(z);
            }
        }
        let mut all = x.to_vec();
        all.extend_from_slice(&repaired);
        let rest = h.delete_vertices(&all).expect("local indices are in range");
        let taken: Vec<usize> = x.iter().map(|&v| h.label(v)).collect();
        let repaired: Vec<usize> = repaired.iter().map(|&v| h.label(v)).collect();
        self.set.extend(&taken);
        self.set.extend(&repaired);
        self.trace.push(TraceStep { rule, taken, repaired });
        rest
    }

    /// Records a terminal step whose members are already original labels.
    pub(crate) fn terminal(&mut self, rule: Rule, taken: Vec<usize>) {
        self.set.extend(&taken);
        self.trace.push(TraceStep {
            rule,
            taken,
            repaired: Vec::new(),
        });
    }

    pub(crate) fn finish(mut self, guarantee: Rational) -> ConstructionResult {
        self.set.sort_unstable();
        ConstructionResult {
            set: self.set,
            guarantee,
            trace: self.trace,
        }
    }
}
