//! Vertex-disjoint paths on three vertices and the spanning forests they seed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Rational;
use crate::solve::predicates::is_total_edge_cover;

use super::{ConstructionResult, Rule, TraceStep};

/// Largest order accepted by the exact packing search.
pub const P3_EXACT_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PackingMode {
    Exact,
    Greedy,
}

/// The path `ends[0] - center - ends[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct P3 {
    pub center: usize,
    pub ends: [usize; 2],
}

impl P3 {
    pub fn vertices(&self) -> [usize; 3] {
        let mut v = [self.center, self.ends[0], self.ends[1]];
        v.sort_unstable();
        v
    }
}

/// Every 3-vertex set spanning a path, one path per set (lowest center),
/// in ascending order of the sorted vertex triple.
fn all_paths(g: &Graph) -> Vec<([usize; 3], P3)> {
    let mut by_set = BTreeMap::new();
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                let p = P3 { center: c, ends: [a, b] };
                by_set.entry(p.vertices()).or_insert(p);
            }
        }
    }
    by_set.into_iter().collect()
}

/// Vertex-disjoint paths on three vertices.
///
/// Exact mode returns a maximum packing and fails above [`P3_EXACT_CAP`]; on
/// connected cubic graphs it also checks the `⌈n/4⌉` lower bound. Greedy
/// mode scans vertices in ascending order and takes the first path through
/// each free vertex, which yields a maximal packing.
pub fn p3_packing(g: &Graph, mode: PackingMode) -> Result<Vec<P3>> {
    let paths = all_paths(g);
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, (set, _)) in paths.iter().enumerate() {
        for &v in set {
            through[v].push(i);
        }
    }
    let chosen = match mode {
        PackingMode::Greedy => {
            let mut free = vec![true; g.n()];
            let mut out = Vec::new();
            for v in 0..g.n() {
                if !free[v] {
                    continue;
                }
                if let Some(&i) = through[v].iter().find(|&&i| paths[i].0.iter().all(|&u| free[u])) {
                    for &u in &paths[i].0 {
                        free[u] = false;
                    }
                    out.push(i);
                }
            }
            out
        }
        PackingMode::Exact => {
            if g.n() > P3_EXACT_CAP {
                return Err(Error::CapExceeded {
                    what: "exact packing order",
                    got: g.n(),
                    cap: P3_EXACT_CAP,
                });
            }
            let masks: Vec<u64> = paths
                .iter()
                .map(|(s, _)| s.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect();
            let mut search = Exact {
                through: &through,
                masks: &masks,
                n: g.n(),
                best: Vec::new(),
                current: Vec::new(),
                limit: g.n() / 3,
            };
            let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
            search.descend(all, 0);
            search.best
        }
    };
    let packing: Vec<P3> = chosen.into_iter().map(|i| paths[i].1).collect();
    if mode == PackingMode::Exact && is_cubic(g) && g.is_connected() && packing.len() < g.n().div_ceil(4) {
        return Err(Error::Internal(format!(
            "maximum packing of {} paths is below the cubic lower bound {}",
            packing.len(),
            g.n().div_ceil(4)
        )));
    }
    Ok(packing)
}

struct Exact<'a> {
    through: &'a [Vec<usize>],
    masks: &'a [u64],
    n: usize,
    best: Vec<usize>,
    current: Vec<usize>,
    limit: usize,
}

impl Exact<'_> {
    /// `open` holds the vertices not yet packed or discarded; every vertex
    /// below `from` is decided.
    fn descend(&mut self, open: u64, from: usize) {
        if self.best.len() == self.limit {
            return;
        }
        if self.current.len() + open.count_ones() as usize / 3 <= self.best.len() {
            return;
        }
        let Some(v) = (from..self.n).find(|&v| open >> v & 1 == 1) else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        for &i in &self.through[v] {
            if self.masks[i] & !open == 0 {
                self.current.push(i);
                self.descend(open & !self.masks[i], v + 1);
                self.current.pop();
            }
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        self.descend(open & !(1 << v), v + 1);
    }
}

fn is_cubic(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) == 3)
}

/// A total edge-cover formed by a spanning forest whose components have at
/// least three vertices each.
///
/// The components are seeded with a packing of paths on three vertices
/// (exact up to [`P3_EXACT_CAP`], greedy above it). Then, repeatedly, the
/// lowest unpacked vertex next to the forest joins through the edge to its
/// lowest forest neighbor. The forest has `n - ℓ` edges for `ℓ` seeds. The
/// guarantee is `3n/4` for cubic graphs packed exactly and `n - 1` otherwise.
pub fn total_edge_cover_forest(g: &Graph) -> Result<ConstructionResult> {
    if g.n() < 3 || !g.is_connected() {
        return Err(Error::Precondition(
            "the forest cover needs a connected graph on at least three vertices".into(),
        ));
    }
    let mode = if g.n() <= P3_EXACT_CAP {
        PackingMode::Exact
    } else {
        PackingMode::Greedy
    };
    let packing = p3_packing(g, mode)?;
    let mut attached = vec![false; g.n()];
    let mut set = Vec::new();
    let mut trace = Vec::new();
    for p in &packing {
        let edges = vec![
            g.edge_index(p.center, p.ends[0]).expect("path edge"),
            g.edge_index(p.center, p.ends[1]).expect("path edge"),
        ];
        for v in p.vertices() {
            attached[v] = true;
        }
        set.extend(&edges);
        trace.push(TraceStep {
            rule: Rule::Seed,
            taken: edges,
            repaired: Vec::new(),
        });
    }
    loop {
        let next = (0..g.n()).filter(|&x| !attached[x]).find_map(|x| {
            g.neighbors(x).iter().find(|&&w| attached[w]).map(|&w| (x, w))
        });
        let Some((x, w)) = next else { break };
        let e = g.edge_index(x, w).expect("neighbors share an edge");
        attached[x] = true;
        set.push(e);
        trace.push(TraceStep {
            rule: Rule::Attach,
            taken: vec![e],
            repaired: Vec::new(),
        });
    }
    if attached.iter().any(|&a| !a) {
        return Err(Error::Internal("a maximal packing left a component unseeded".into()));
    }
    set.sort_unstable();
    let n = g.n() as i64;
    let guarantee = if mode == PackingMode::Exact && is_cubic(g) {
        Rational::new(3 * n, 4)
    } else {
        Rational::from(n - 1)
    };
    if !is_total_edge_cover(g, &set) {
        return Err(Error::Internal("forest edges do not form a total edge-cover".into()));
    }
    Ok(ConstructionResult { set, guarantee, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::ec_t;

    fn disjoint(p: &[P3]) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        p.iter().flat_map(|q| q.vertices()).all(|v| seen.insert(v))
    }

    #[test]
    fn packing_examples() {
        assert_eq!(p3_packing(&Graph::complete(4), PackingMode::Exact).unwrap().len(), 1);
        assert_eq!(p3_packing(&Graph::petersen(), PackingMode::Exact).unwrap().len(), 3);
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let p = p3_packing(&two, PackingMode::Exact).unwrap();
        assert_eq!(p.len(), 2);
        assert!(disjoint(&p));
        assert_eq!(p3_packing(&two, PackingMode::Greedy).unwrap().len(), 2);
    }

    #[test]
    fn greedy_is_maximal() {
        let g = Graph::cycle(7);
        let p = p3_packing(&g, PackingMode::Greedy).unwrap();
        assert!(disjoint(&p));
        let used: Vec<usize> = p.iter().flat_map(|q| q.vertices()).collect();
        for (set, _) in all_paths(&g) {
            assert!(set.iter().any(|v| used.contains(v)));
        }
    }

    #[test]
    fn exact_cap() {
        let big = Graph::cycle(P3_EXACT_CAP + 1);
        assert!(matches!(p3_packing(&big, PackingMode::Exact), Err(Error::CapExceeded { .. })));
        assert!(p3_packing(&big, PackingMode::Greedy).is_ok());
    }

    #[test]
    fn forest_examples() {
        let k4 = Graph::complete(4);
        let f = total_edge_cover_forest(&k4).unwrap();
        assert_eq!(f.set.len(), 3);
        assert_eq!(ec_t(&k4).unwrap().value, 3);

        let c6 = Graph::cycle(6);
        let f = total_edge_cover_forest(&c6).unwrap();
        assert!(f.set.len() <= 4);
        assert_eq!(ec_t(&c6).unwrap().value, 4);

        let pg = Graph::petersen();
        let f = total_edge_cover_forest(&pg).unwrap();
        assert_eq!(f.set.len(), 7);
        assert!(f.within_guarantee());
        assert_eq!(f.trace.iter().filter(|s| s.rule == Rule::Seed).count(), 3);

        assert!(total_edge_cover_forest(&Graph::path(2)).is_err());
    }
}
