//! Isomorph-free enumeration of small uniform hypergraphs.
//!
//! The `k`-subsets of `0..n` are ordered colexicographically (by largest
//! element, then the rest), and a hypergraph is encoded as the bit string of
//! its edges over that order. The canonical representative of an
//! isomorphism class is the permutation image with the lexicographically
//! greatest code, so it holds the earliest possible subsets: equivalently,
//! the lexicographically least colex-sorted edge list. Canonicity is decided
//! by a depth-first search that fixes the preimage of label `t` at depth `t`
//! and compares the block of subsets with largest element `t`; any prefix
//! that falls below the candidate's code is abandoned.
//!
//! Generation is orderly: children append one subset after the last one
//! present and are kept only if canonical. Dropping the last subset of a
//! canonical code leaves a canonical code, so every class is reached exactly
//! once.

use std::cmp::Ordering;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// More subsets than this do not fit the code word.
pub const MAX_POSITIONS: usize = 128;
/// Cap on the `n^k` presence table.
const MAX_TABLE: usize = 1 << 22;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c·(n−i) is divisible by i+1; divide first where possible to delay overflow
        let (num, den) = ((n - i) as u128, (i + 1) as u128);
        let g = gcd(c, den);
        let Some(next) = (c / g).checked_mul(num / (den / g)) else {
            return u128::MAX;
        };
        c = next;
    }
    c
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The subsets of one vertex count in colex order, with lookup helpers.
#[derive(Clone, Debug)]
struct Space {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
    /// Positions of the subsets whose largest element is `t`.
    blocks: Vec<Range<usize>>,
    /// Vertex bitmask of each subset.
    vmask: Vec<u32>,
    pow: Vec<usize>,
    /// Table indices of every ordering of each subset.
    orderings: Vec<Vec<usize>>,
}

impl Space {
    fn new(k: usize, n: usize) -> Result<Self> {
        if k < 2 || n > 31 {
            return Err(Error::Parameter(format!("enumeration needs k >= 2 and n <= 31 (k = {k}, n = {n})")));
        }
        let count = binomial(n, k);
        if count > MAX_POSITIONS as u128 {
            return Err(Error::CapExceeded {
                what: "k-subsets in the code word",
                got: count.min(usize::MAX as u128) as usize,
                cap: MAX_POSITIONS,
            });
        }
        let table = (n as u128).pow(k as u32);
        if table > MAX_TABLE as u128 {
            return Err(Error::CapExceeded {
                what: "presence table entries",
                got: table as usize,
                cap: MAX_TABLE,
            });
        }
        let mut subsets = Vec::new();
        let mut comb: Vec<usize> = (0..k).collect();
        if k <= n {
            loop {
                subsets.push(comb.clone());
                if !crate::solve::next_combination(&mut comb, n) {
                    break;
                }
            }
        }
        subsets.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let blocks = (0..n)
            .map(|t| binomial(t, k) as usize..binomial(t + 1, k) as usize)
            .collect();
        let vmask = subsets.iter().map(|s| s.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let pow: Vec<usize> = (0..k).map(|i| n.pow(i as u32)).collect();
        let orderings = subsets
            .iter()
            .map(|s| {
                let mut out = Vec::new();
                permutations(s, &mut |p| out.push(p.iter().zip(&pow).map(|(&v, &w)| v * w).sum()));
                out
            })
            .collect();
        Ok(Space {
            n,
            k,
            subsets,
            blocks,
            vmask,
            pow,
            orderings,
        })
    }

    fn positions(&self) -> usize {
        self.subsets.len()
    }

    fn table_size(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    fn position_of(&self, e: &[usize]) -> Option<usize> {
        self.subsets.binary_search_by(|s| s.iter().rev().cmp(e.iter().rev())).ok()
    }

    fn set(&self, table: &mut [bool], p: usize, value: bool) {
        for &i in &self.orderings[p] {
            table[i] = value;
        }
    }

    /// Compares block `t` of the image under `pi` (new label → old vertex)
    /// with block `t` of `code`.
    #[inline]
    fn cmp_block(&self, t: usize, pi: &[usize], table: &[bool], code: u128) -> Ordering {
        for p in self.blocks[t].clone() {
            let idx: usize = self.subsets[p].iter().zip(&self.pow).map(|(&a, &w)| pi[a] * w).sum();
            let mine = table[idx];
            let theirs = code >> p & 1 == 1;
            if mine != theirs {
                return if mine { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }

    /// No relabelling of `code` (whose edges are in `table`) is greater.
    fn is_canonical(&self, code: u128, table: &[bool]) -> bool {
        let mut pi = vec![0; self.n];
        self.canonical_from(0, 0, &mut pi, code, table)
    }

    fn canonical_from(&self, t: usize, used: u32, pi: &mut [usize], code: u128, table: &[bool]) -> bool {
        if t == self.n {
            return true;
        }
        for u in 0..self.n {
            if used >> u & 1 == 1 {
                continue;
            }
            pi[t] = u;
            match self.cmp_block(t, pi, table, code) {
                Ordering::Greater => return false,
                Ordering::Less => {}
                Ordering::Equal => {
                    if !self.canonical_from(t + 1, used | 1 << u, pi, code, table) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The greatest code over all relabellings.
    fn max_code(&self, table: &[bool], start: u128) -> u128 {
        let mut best = start;
        let mut pi = vec![0; self.n];
        self.max_from(0, 0, &mut pi, table, 0, &mut best);
        best
    }

    fn max_from(&self, t: usize, used: u32, pi: &mut [usize], table: &[bool], partial: u128, best: &mut u128) {
        if t == self.n {
            if prefix_cmp(partial, *best, MAX_POSITIONS) == Ordering::Greater {
                *best = partial;
            }
            return;
        }
        for u in 0..self.n {
            if used >> u & 1 == 1 {
                continue;
            }
            pi[t] = u;
            let mut bits = partial;
            for p in self.blocks[t].clone() {
                let idx: usize = self.subsets[p].iter().zip(&self.pow).map(|(&a, &w)| pi[a] * w).sum();
                if table[idx] {
                    bits |= 1 << p;
                }
            }
            // compare the settled prefix, positions below the block end
            let end = self.blocks[t].end;
            let ord = prefix_cmp(bits, *best, end);
            if ord != Ordering::Less {
                if ord == Ordering::Greater {
                    // any completion beats the current best on this prefix
                    *best = bits;
                }
                self.max_from(t + 1, used | 1 << u, pi, table, bits, best);
            }
        }
    }

    fn decode(&self, code: u128) -> Vec<Vec<usize>> {
        (0..self.positions())
            .filter(|&p| code >> p & 1 == 1)
            .map(|p| self.subsets[p].clone())
            .collect()
    }

    /// In the class: every vertex covered, at least two edges, no isolated edge.
    fn in_class(&self, code: u128) -> bool {
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let mut covered = 0u32;
        let mut count = 0;
        for p in ones(code) {
            covered |= self.vmask[p];
            count += 1;
        }
        if covered != full || count < 2 {
            return false;
        }
        ones(code).all(|p| ones(code).any(|q| q != p && self.vmask[p] & self.vmask[q] != 0))
    }
}

/// Compares the bits of `a` and `b` below position `end`, lowest position
/// most significant.
fn prefix_cmp(a: u128, b: u128, end: usize) -> Ordering {
    let mask = if end >= 128 { u128::MAX } else { (1u128 << end) - 1 };
    let diff = (a ^ b) & mask;
    if diff == 0 {
        return Ordering::Equal;
    }
    let first = diff.trailing_zeros();
    if a >> first & 1 == 1 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn ones(code: u128) -> impl Iterator<Item = usize> + Clone {
    let mut rest = code;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let p = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(p)
    })
}

fn permutations(items: &[usize], f: &mut impl FnMut(&[usize])) {
    fn go(v: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == v.len() {
            f(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            go(v, i + 1, f);
            v.swap(i, j);
        }
    }
    go(&mut items.to_vec(), 0, f);
}

/// The canonical representative of a uniform hypergraph's isomorphism class.
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    let k = h
        .uniformity()
        .ok_or_else(|| Error::Precondition("canonical forms are defined for uniform hypergraphs".into()))?;
    let space = Space::new(k, h.n())?;
    let mut table = vec![false; space.table_size()];
    let mut code = 0u128;
    for e in h.edges() {
        let p = space.position_of(e).expect("edge is a k-subset");
        space.set(&mut table, p, true);
        code |= 1 << p;
    }
    let best = space.max_code(&table, code);
    Hypergraph::new(h.n(), space.decode(best))
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() || a.uniformity() != b.uniformity() {
        return Ok(false);
    }
    if a.m() == 0 {
        return Ok(true);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

struct Frame {
    code: u128,
    last: Option<usize>,
    next: usize,
    depth: usize,
}

/// Streams the canonical members of the class on exactly `n` vertices with
/// at most `m_max` edges, in depth-first order.
pub struct OrderEnumerator {
    space: Space,
    table: Vec<bool>,
    stack: Vec<Frame>,
    m_max: usize,
    checks: u64,
    budget: Option<u64>,
    failed: bool,
}

impl OrderEnumerator {
    pub fn new(k: usize, n: usize, m_max: usize) -> Result<Self> {
        let space = Space::new(k, n)?;
        let table = vec![false; space.table_size()];
        Ok(OrderEnumerator {
            space,
            table,
            stack: vec![Frame {
                code: 0,
                last: None,
                next: 0,
                depth: 0,
            }],
            m_max,
            checks: 0,
            budget: None,
            failed: false,
        })
    }

    /// Stops with a budget error after this many canonicity checks.
    pub fn with_budget(mut self, checks: u64) -> Self {
        self.budget = Some(checks);
        self
    }

    pub fn checks(&self) -> u64 {
        self.checks
    }
}

impl Iterator for OrderEnumerator {
    type Item = Result<Hypergraph>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let positions = self.space.positions();
        loop {
            let top = self.stack.last_mut()?;
            if top.depth < self.m_max && top.next < positions {
                if self.budget.is_some_and(|b| self.checks >= b) {
                    self.failed = true;
                    return Some(Err(Error::Budget(format!(
                        "enumeration stopped after {} canonicity checks",
                        self.checks
                    ))));
                }
                let p = top.next;
                top.next += 1;
                let code = top.code | 1 << p;
                let depth = top.depth + 1;
                self.space.set(&mut self.table, p, true);
                self.checks += 1;
                if self.space.is_canonical(code, &self.table) {
                    self.stack.push(Frame {
                        code,
                        last: Some(p),
                        next: p + 1,
                        depth,
                    });
                    if self.space.in_class(code) {
                        let h = Hypergraph::new(self.space.n, self.space.decode(code)).expect("valid subsets");
                        return Some(Ok(h));
                    }
                } else {
                    self.space.set(&mut self.table, p, false);
                }
            } else {
                let frame = self.stack.pop().expect("nonempty");
                if let Some(p) = frame.last {
                    self.space.set(&mut self.table, p, false);
                }
            }
        }
    }
}

/// Every member of the class with `k + 1 ≤ n ≤ n_max` and `m ≤ m_max`,
/// one per isomorphism class, in increasing order of `n`.
pub fn enumerate_hk(k: usize, n_max: usize, m_max: usize) -> Result<impl Iterator<Item = Result<Hypergraph>>> {
    let orders: Vec<OrderEnumerator> =
        ((k + 1)..=n_max).map(|n| OrderEnumerator::new(k, n, m_max)).collect::<Result<_>>()?;
    Ok(orders.into_iter().flatten())
}
