//! Branch and bound for constrained hitting sets.
//!
//! A [`CoverProblem`] asks for a minimum subset `T` of `0..universe` with
//! `|T ∩ S| ≥ demand(S)` for every set `S`, and optionally with every member
//! of `T` adjacent to another member (the total constraint). All six
//! invariants reduce to this form.
//!
//! Search: pick the unsatisfied requirement with the fewest candidates
//! (ties by index, fixed sets before lonely-member requirements) and branch
//! on its candidates in ascending order, excluding earlier candidates in
//! later branches. Lonely chosen members are requirements too, so the total
//! constraint prunes as soon as a member can no longer acquire a neighbor.
//! The bound is a greedy packing of unsatisfied requirements with pairwise
//! disjoint candidate sets.

use crate::bitset::{BitBlock, ChunkedBits};

#[derive(Clone, Debug)]
pub struct CoverProblem {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    /// 1 or 2 for each set.
    pub demand: Vec<u8>,
    /// Adjacency lists for the total constraint.
    pub adjacency: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    /// `None` when no subset satisfies the constraints.
    pub witness: Option<Vec<usize>>,
    pub nodes: u64,
}

impl CoverProblem {
    pub fn hitting(universe: usize, sets: Vec<Vec<usize>>, demand: u8) -> Self {
        let demand = vec![demand; sets.len()];
        CoverProblem {
            universe,
            sets,
            demand,
            adjacency: None,
        }
    }

    pub fn with_total(mut self, adjacency: Vec<Vec<usize>>) -> Self {
        self.adjacency = Some(adjacency);
        self
    }

    pub fn solve(&self) -> CoverSolution {
        match self.universe {
            0..=64 => Search::<u64>::new(self).run(),
            65..=128 => Search::<u128>::new(self).run(),
            _ => Search::<ChunkedBits>::new(self).run(),
        }
    }
}

#[derive(Clone)]
struct Req<B> {
    need: u8,
    cand: B,
    size: usize,
}

struct Search<B> {
    universe: usize,
    all: B,
    sets: Vec<B>,
    demand: Vec<u8>,
    adjacency: Option<Vec<B>>,
    best: Option<B>,
    best_size: usize,
    nodes: u64,
}

impl<B: BitBlock> Search<B> {
    fn new(p: &CoverProblem) -> Self {
        let w = p.universe;
        Search {
            universe: w,
            all: B::from_indices(w, 0..w),
            sets: p.sets.iter().map(|s| B::from_indices(w, s.iter().copied())).collect(),
            demand: p.demand.clone(),
            adjacency: p
                .adjacency
                .as_ref()
                .map(|adj| adj.iter().map(|a| B::from_indices(w, a.iter().copied())).collect()),
            best: None,
            best_size: w + 1,
            nodes: 0,
        }
    }

    fn run(mut self) -> CoverSolution {
        let empty = B::empty(self.universe);
        self.descend(&empty, &empty, 0);
        CoverSolution {
            witness: self.best.map(|b| b.ones()),
            nodes: self.nodes,
        }
    }

    /// Unsatisfied requirements at this node, or `None` if one is unsatisfiable.
    fn requirements(&self, chosen: &B, free: &B) -> Option<Vec<Req<B>>> {
        let mut reqs = Vec::new();
        for (s, &d) in self.sets.iter().zip(&self.demand) {
            let have = s.count_and(chosen);
            if have >= d as usize {
                continue;
            }
            let need = d - have as u8;
            let cand = s.and(free);
            let size = cand.count();
            if size < need as usize {
                return None;
            }
            reqs.push(Req { need, cand, size });
        }
        if let Some(adj) = &self.adjacency {
            for v in chosen.ones() {
                if adj[v].intersects(chosen) {
                    continue;
                }
                let cand = adj[v].and(free);
                let size = cand.count();
                if size == 0 {
                    return None;
                }
                reqs.push(Req { need: 1, cand, size });
            }
        }
        Some(reqs)
    }

    /// Expects `reqs` sorted by candidate count.
    fn packing_bound(reqs: &[Req<B>], width: usize) -> usize {
        let mut used = B::empty(width);
        let mut bound = 0;
        for r in reqs {
            if !r.cand.intersects(&used) {
                used.or_assign(&r.cand);
                bound += r.need as usize;
            }
        }
        bound
    }

    fn descend(&mut self, chosen: &B, excluded: &B, size: usize) {
        self.nodes += 1;
        let free = self.all.and_not(chosen).and_not(excluded);
        let Some(mut reqs) = self.requirements(chosen, &free) else {
            return;
        };
        if reqs.is_empty() {
            if size < self.best_size {
                self.best_size = size;
                self.best = Some(chosen.clone());
            }
            return;
        }
        // stable, so the first requirement is the fewest-candidate one of lowest index
        reqs.sort_by_key(|r| r.size);
        if size + Self::packing_bound(&reqs, self.universe) >= self.best_size {
            return;
        }
        let mut excl = excluded.clone();
        for v in reqs[0].cand.ones() {
            let mut next = chosen.clone();
            next.insert(v);
            self.descend(&next, &excl, size + 1);
            excl.insert(v);
            if size + 1 >= self.best_size {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_problem_is_zero() {
        let s = CoverProblem::hitting(3, vec![], 1).solve();
        assert_eq!(s.witness, Some(vec![]));
    }

    #[test]
    fn unsatisfiable_demand() {
        let s = CoverProblem::hitting(3, vec![vec![0]], 2).solve();
        assert_eq!(s.witness, None);
        let lonely = CoverProblem::hitting(2, vec![vec![0]], 1).with_total(vec![vec![], vec![]]).solve();
        assert_eq!(lonely.witness, None);
    }

    #[test]
    fn wide_universe_uses_chunks() {
        // 200 disjoint pairs need 200 elements
        let sets: Vec<Vec<usize>> = (0..200).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let s = CoverProblem::hitting(400, sets, 1).solve();
        assert_eq!(s.witness.unwrap().len(), 200);
    }
}
