//! Exact computation of the six covering invariants.
//!
//! Every branch-and-bound result is re-validated by the definition-level
//! predicates in [`predicates`] before it is returned; the exhaustive
//! [`brute_force_oracle`] uses only those predicates.

pub mod cover;
pub mod predicates;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use cover::CoverProblem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Tau,
    TauT,
    TauStrong,
    Gamma,
    GammaT,
    EcT,
}

impl Invariant {
    pub const ALL: [Invariant; 6] = [
        Invariant::Tau,
        Invariant::TauT,
        Invariant::TauStrong,
        Invariant::Gamma,
        Invariant::GammaT,
        Invariant::EcT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Tau => "tau",
            Invariant::TauT => "tau_t",
            Invariant::TauStrong => "tau_strong",
            Invariant::Gamma => "gamma",
            Invariant::GammaT => "gamma_t",
            Invariant::EcT => "ec_t",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown invariant `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BranchAndBound,
    BruteForce,
}

/// An exact value with a witness achieving it.
///
/// The witness is a vertex set, or an edge-index set for [`Invariant::EcT`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes: u64,
    pub method: Method,
}

/// What an invariant is evaluated on.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Hyper(&'a Hypergraph),
    Graph(&'a Graph),
}

/// Checks a witness against the invariant's defining predicate.
pub fn validate(target: Target<'_>, invariant: Invariant, witness: &[usize]) -> bool {
    use predicates::*;
    match (target, invariant) {
        (Target::Hyper(h), Invariant::Tau) => is_transversal(h, witness),
        (Target::Hyper(h), Invariant::TauT) => is_total_transversal(h, witness),
        (Target::Hyper(h), Invariant::TauStrong) => is_strong_transversal(h, witness),
        (Target::Hyper(h), Invariant::Gamma) => is_dominating(h, witness),
        (Target::Hyper(h), Invariant::GammaT) => is_total_dominating(h, witness),
        (Target::Graph(g), Invariant::EcT) => is_total_edge_cover(g, witness),
        (Target::Graph(g), inv) => validate(Target::Hyper(&g.to_hypergraph()), inv, witness),
        (Target::Hyper(_), Invariant::EcT) => false,
    }
}

fn finish(target: Target<'_>, invariant: Invariant, sol: cover::CoverSolution) -> Result<SolveResult> {
    let witness = sol.witness.ok_or_else(|| {
        Error::Infeasible(format!("no set satisfies {invariant}"))
    })?;
    if !validate(target, invariant, &witness) {
        return Err(Error::Internal(format!(
            "{invariant} witness {witness:?} fails its defining predicate"
        )));
    }
    Ok(SolveResult {
        invariant,
        value: witness.len(),
        witness,
        nodes: sol.nodes,
        method: Method::BranchAndBound,
    })
}

/// Transversal number.
pub fn tau(h: &Hypergraph) -> Result<SolveResult> {
    let p = CoverProblem::hitting(h.n(), h.edges().to_vec(), 1);
    finish(Target::Hyper(h), Invariant::Tau, p.solve())
}

/// Total transversal number.
pub fn tau_t(h: &Hypergraph) -> Result<SolveResult> {
    let p = CoverProblem::hitting(h.n(), h.edges().to_vec(), 1).with_total(h.neighborhoods());
    finish(Target::Hyper(h), Invariant::TauT, p.solve())
}

/// Strong transversal number.
pub fn tau_strong(h: &Hypergraph) -> Result<SolveResult> {
    if let Some(i) = h.edges().iter().position(|e| e.len() < 2) {
        return Err(Error::Infeasible(format!("edge {i} has fewer than two vertices")));
    }
    let p = CoverProblem::hitting(h.n(), h.edges().to_vec(), 2);
    finish(Target::Hyper(h), Invariant::TauStrong, p.solve())
}

/// Domination number, as a hitting set of the closed neighborhoods.
pub fn gamma(h: &Hypergraph) -> Result<SolveResult> {
    let closed = h
        .neighborhoods()
        .into_iter()
        .enumerate()
        .map(|(v, mut nb)| {
            nb.push(v);
            nb.sort_unstable();
            nb
        })
        .collect();
    let p = CoverProblem::hitting(h.n(), closed, 1);
    finish(Target::Hyper(h), Invariant::Gamma, p.solve())
}

/// Total domination number, as the transversal number of the open
/// neighborhood hypergraph.
pub fn gamma_t(h: &Hypergraph) -> Result<SolveResult> {
    let open = h.neighborhoods();
    if let Some(v) = open.iter().position(Vec::is_empty) {
        return Err(Error::Infeasible(format!(
            "vertex {v} is isolated, so no total dominating set exists"
        )));
    }
    let p = CoverProblem::hitting(h.n(), open, 1);
    finish(Target::Hyper(h), Invariant::GammaT, p.solve())
}

fn ec_t_precheck(g: &Graph) -> Result<()> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Infeasible(format!("vertex {v} is isolated")));
    }
    for block in g.components() {
        if block.len() == 2 {
            return Err(Error::Infeasible(format!(
                "component {{{}, {}}} is a single edge",
                block[0], block[1]
            )));
        }
    }
    Ok(())
}

/// Edge indices incident to each vertex, and the edge adjacency (sharing an endpoint).
fn edge_incidence(g: &Graph) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut stars = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        stars[u].push(i);
        stars[v].push(i);
    }
    let adjacency = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let mut adj: Vec<usize> = stars[u].iter().chain(&stars[v]).copied().filter(|&j| j != i).collect();
            adj.sort_unstable();
            adj.dedup();
            adj
        })
        .collect();
    (stars, adjacency)
}

/// Minimum total edge-cover size; the witness lists edge indices of `g`.
pub fn ec_t(g: &Graph) -> Result<SolveResult> {
    ec_t_precheck(g)?;
    let (stars, adjacency) = edge_incidence(g);
    let p = CoverProblem::hitting(g.m(), stars, 1).with_total(adjacency);
    finish(Target::Graph(g), Invariant::EcT, p.solve())
}

/// Dispatches a hypergraph invariant. [`Invariant::EcT`] is accepted for
/// 2-uniform input, read as a graph.
pub fn solve(h: &Hypergraph, invariant: Invariant) -> Result<SolveResult> {
    match invariant {
        Invariant::Tau => tau(h),
        Invariant::TauT => tau_t(h),
        Invariant::TauStrong => tau_strong(h),
        Invariant::Gamma => gamma(h),
        Invariant::GammaT => gamma_t(h),
        Invariant::EcT => ec_t(&Graph::from_hypergraph(h)?),
    }
}

/// Default size cap for [`brute_force_oracle`].
pub const ORACLE_CAP: usize = 24;

/// Exhaustive minimum by increasing cardinality, checking each subset with
/// the defining predicate only. The universe is the vertex set, or the edge
/// set for [`Invariant::EcT`].
pub fn brute_force_oracle(target: Target<'_>, invariant: Invariant, cap: usize) -> Result<SolveResult> {
    let universe = match (target, invariant) {
        (Target::Graph(g), Invariant::EcT) => g.m(),
        (Target::Hyper(_), Invariant::EcT) => {
            return Err(Error::Precondition("ec_t takes a graph".into()))
        }
        (Target::Hyper(h), _) => h.n(),
        (Target::Graph(g), _) => g.n(),
    };
    if universe > cap {
        return Err(Error::CapExceeded {
            what: "oracle universe",
            got: universe,
            cap,
        });
    }
    if invariant == Invariant::GammaT {
        let isolated = match target {
            Target::Hyper(h) => h.degrees().iter().position(|&d| d == 0),
            Target::Graph(g) => (0..g.n()).find(|&v| g.degree(v) == 0),
        };
        if let Some(v) = isolated {
            return Err(Error::Infeasible(format!("vertex {v} is isolated")));
        }
    }
    let mut tested = 0u64;
    for size in 0..=universe {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            tested += 1;
            if validate(target, invariant, &comb) {
                return Ok(SolveResult {
                    invariant,
                    value: size,
                    witness: comb,
                    nodes: tested,
                    method: Method::BruteForce,
                });
            }
            if !next_combination(&mut comb, universe) {
                break;
            }
        }
    }
    Err(Error::Infeasible(format!("no set satisfies {invariant}")))
}

/// Advances `comb` to the next `comb.len()`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let r = comb.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if comb[i] < n - r + i {
            comb[i] += 1;
            for j in i + 1..r {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
