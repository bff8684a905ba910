//! The theorem-verification harness: every proven inequality evaluated on
//! one instance with exact solver values.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::{ClassCheck, Hypergraph};
use crate::scalar::{Rational, Scalar};
use crate::solve::{self, Invariant};

/// Serializes through `Display`, so exact rationals print as `a/b`.
pub fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `τ_t ≤ 2(n+m)/5` for graphs.
    TB2,
    /// `τ_t ≤ (n+m)/3` for `k ≥ 3`.
    TK3,
    /// `6τ_t ≤ 2n + 2m − n1` for `k ≥ 4`.
    TK4,
    /// `7τ_t ≤ 2n + 2m − n1` for `k ≥ 5`.
    TK5,
    /// `γ_t ≤ 2n/(k+1)` for `2 ≤ k ≤ 6`.
    TMain2,
    /// `γ_t ≤ n/3` on the starred class for `k ≥ 4`.
    TMain3,
    /// `γ_t ≤ max{2/(k+1), b_{k−1}} n` for `k ≥ 3`.
    TMain1A,
    /// `γ_t ≤ max{2/(k+2), b_{k−1}} n` on the starred class for `k ≥ 4`.
    TMain1B,
    O2Order,
    O2Size,
    O2MaxDegree,
    O2Deficiency,
    ChainTauTauT,
    ChainTauTTauS,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::TB2,
        TheoremId::TK3,
        TheoremId::TK4,
        TheoremId::TK5,
        TheoremId::TMain2,
        TheoremId::TMain3,
        TheoremId::TMain1A,
        TheoremId::TMain1B,
        TheoremId::O2Order,
        TheoremId::O2Size,
        TheoremId::O2MaxDegree,
        TheoremId::O2Deficiency,
        TheoremId::ChainTauTauT,
        TheoremId::ChainTauTTauS,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::TB2 => "T_b2",
            TheoremId::TK3 => "T_k3",
            TheoremId::TK4 => "T_k4",
            TheoremId::TK5 => "T_k5",
            TheoremId::TMain2 => "T_main2",
            TheoremId::TMain3 => "T_main3",
            TheoremId::TMain1A => "T_main1A",
            TheoremId::TMain1B => "T_main1B",
            TheoremId::O2Order => "O2.order",
            TheoremId::O2Size => "O2.size",
            TheoremId::O2MaxDegree => "O2.max_degree",
            TheoremId::O2Deficiency => "O2.deficiency",
            TheoremId::ChainTauTauT => "chain.tau_le_tau_t",
            TheoremId::ChainTauTTauS => "chain.tau_t_le_tau_strong",
        }
    }

    /// The selector name: the id itself, or `O2` / `chain` for grouped rows.
    pub fn group(self) -> &'static str {
        let id = self.id();
        id.split('.').next().unwrap_or(id)
    }

    /// The inequality, as `lhs ≤ rhs`.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::TB2 => "tau_t <= 2(n+m)/5",
            TheoremId::TK3 => "tau_t <= (n+m)/3",
            TheoremId::TK4 => "6 tau_t <= 2n+2m-n1",
            TheoremId::TK5 => "7 tau_t <= 2n+2m-n1",
            TheoremId::TMain2 => "gamma_t <= 2n/(k+1)",
            TheoremId::TMain3 => "gamma_t <= n/3",
            TheoremId::TMain1A => "gamma_t <= max(2/(k+1), b_(k-1)) n",
            TheoremId::TMain1B => "gamma_t <= max(2/(k+2), b_(k-1)) n",
            TheoremId::O2Order => "k+1 <= n",
            TheoremId::O2Size => "2 <= m",
            TheoremId::O2MaxDegree => "2 <= max degree",
            TheoremId::O2Deficiency => "2k <= 2n-n1",
            TheoremId::ChainTauTauT => "tau <= tau_t",
            TheoremId::ChainTauTTauS => "tau_t <= tau_strong",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Where a number came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Solver,
    Construction,
    Formula,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Solver => "solver",
            Provenance::Construction => "construction",
            Provenance::Formula => "formula",
        })
    }
}

/// One inequality `lhs ≤ rhs` evaluated on an instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct BoundRow<S: Scalar> {
    pub theorem: TheoremId,
    #[serde(serialize_with = "ser_display")]
    pub lhs: S,
    #[serde(serialize_with = "ser_display")]
    pub rhs: S,
    #[serde(serialize_with = "ser_display")]
    pub slack: S,
    pub holds: bool,
    pub lhs_source: Provenance,
    pub rhs_source: Provenance,
    /// The right side uses a proven upper bound on `b_{k−1}` rather than its value.
    pub bound_based: bool,
}

impl<S: Scalar> BoundRow<S> {
    /// A row whose right side is a closed-form expression.
    pub fn new(theorem: TheoremId, lhs: S, rhs: S, lhs_source: Provenance) -> Self {
        let slack = rhs - lhs;
        BoundRow {
            theorem,
            lhs,
            rhs,
            slack,
            holds: slack >= S::zero(),
            lhs_source,
            rhs_source: Provenance::Formula,
            bound_based: false,
        }
    }

    fn rhs_from(mut self, source: Provenance) -> Self {
        self.rhs_source = source;
        self
    }

    fn with_bound_based(mut self, flag: bool) -> Self {
        self.bound_based = flag;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub theorem: &'static str,
    pub reason: String,
}

/// The exact invariant values the rows were evaluated with.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolvedValues {
    pub tau: Option<usize>,
    pub tau_t: Option<usize>,
    pub tau_strong: Option<usize>,
    pub gamma_t: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct BoundReport<S: Scalar> {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub class: ClassCheck,
    /// `2n + 2m − n1`.
    pub theta: usize,
    pub values: SolvedValues,
    pub rows: Vec<BoundRow<S>>,
    pub skipped: Vec<Skipped>,
}

impl<S: Scalar> BoundReport<S> {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundRow<S>> {
        self.rows.iter().filter(|r| !r.holds)
    }

    pub fn row(&self, theorem: TheoremId) -> Option<&BoundRow<S>> {
        self.rows.iter().find(|r| r.theorem == theorem)
    }
}

/// Which rows to evaluate: `all`, or a comma-separated list of ids and
/// group names (`O2`, `chain`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TheoremSelection(Option<BTreeSet<&'static str>>);

impl TheoremSelection {
    pub fn all() -> Self {
        TheoremSelection(None)
    }

    pub fn only(ids: &[TheoremId]) -> Self {
        TheoremSelection(Some(ids.iter().map(|t| t.id()).collect()))
    }

    pub fn includes(&self, t: TheoremId) -> bool {
        match &self.0 {
            None => true,
            Some(set) => set.contains(t.id()) || set.contains(t.group()),
        }
    }
}

impl FromStr for TheoremSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "all" {
            return Ok(TheoremSelection::all());
        }
        let mut set = BTreeSet::new();
        for name in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let known = TheoremId::ALL
                .iter()
                .flat_map(|t| [t.id(), t.group()])
                .find(|&id| id == name)
                .ok_or_else(|| Error::Parameter(format!("unknown theorem id `{name}`")))?;
            set.insert(known);
        }
        if set.is_empty() {
            return Err(Error::Parameter("empty theorem selection".into()));
        }
        Ok(TheoremSelection(Some(set)))
    }
}

/// `b_j` for the mixed-bound theorems: exact for `j ∈ {2, 3}`; for `j ≥ 4`
/// a proven upper bound, flagged `true`.
pub fn b_value<S: Scalar>(j: usize) -> Option<(S, bool)> {
    match j {
        2 => Some((S::ratio(2, 5), false)),
        3 => Some((S::ratio(1, 3), false)),
        4 => Some((S::ratio(1, 3), true)),
        j if j >= 5 => Some((S::ratio(2, 7), true)),
        _ => None,
    }
}

/// A short deterministic name built from the order, the size and an edge-list hash.
pub fn instance_id(h: &Hypergraph) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for e in h.edges() {
        for &v in e.iter().chain(std::iter::once(&usize::MAX)) {
            for b in (v as u64).to_le_bytes() {
                hash ^= u64::from(b);
                hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
    }
    format!("n{}-m{}-{hash:016x}", h.n(), h.m())
}

struct Lazy<'a> {
    h: &'a Hypergraph,
    values: SolvedValues,
}

impl Lazy<'_> {
    fn get(&mut self, inv: Invariant) -> Result<usize> {
        let slot = match inv {
            Invariant::Tau => &mut self.values.tau,
            Invariant::TauT => &mut self.values.tau_t,
            Invariant::TauStrong => &mut self.values.tau_strong,
            Invariant::GammaT => &mut self.values.gamma_t,
            _ => unreachable!("not used by any row"),
        };
        if let Some(v) = *slot {
            return Ok(v);
        }
        let v = solve::solve(self.h, inv)
            .map_err(|e| Error::Infeasible(format!("{inv} on {}: {e}", instance_id(self.h))))?
            .value;
        *slot = Some(v);
        Ok(v)
    }
}

/// Evaluates every selected theorem whose class precondition `h` meets, and
/// lists every other selected theorem with the reason it does not apply.
pub fn verify_bounds<S: Scalar>(h: &Hypergraph, selection: &TheoremSelection) -> Result<BoundReport<S>> {
    let class = h.class_check();
    let profile = h.degree_profile();
    let (n, m, k) = (h.n(), h.m(), class.k);
    let theta = 2 * n + 2 * m - profile.n1;
    let mut solved = Lazy {
        h,
        values: SolvedValues::default(),
    };
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let c = S::from_count;
    let skip = |skipped: &mut Vec<Skipped>, t: TheoremId, reason: &str| {
        skipped.push(Skipped {
            theorem: t.id(),
            reason: reason.to_string(),
        })
    };
    let in_hk = class.in_hk;
    let star = class.in_hk_star;
    let not_in = if in_hk { "" } else { "not in the uniform class" };

    let applicability: [(TheoremId, bool, String); 8] = [
        (TheoremId::TB2, in_hk && k == 2, format!("needs k = 2 (k = {k}) {not_in}")),
        (TheoremId::TK3, in_hk && k >= 3, format!("needs k >= 3 (k = {k}) {not_in}")),
        (TheoremId::TK4, in_hk && k >= 4, format!("needs k >= 4 (k = {k}) {not_in}")),
        (TheoremId::TK5, in_hk && k >= 5, format!("needs k >= 5 (k = {k}) {not_in}")),
        (TheoremId::TMain2, in_hk && (2..=6).contains(&k), format!("needs 2 <= k <= 6 (k = {k}) {not_in}")),
        (TheoremId::TMain3, star && k >= 4, format!("needs the starred class with k >= 4 (k = {k})")),
        (TheoremId::TMain1A, in_hk && k >= 3, format!("needs k >= 3 (k = {k}) {not_in}")),
        (TheoremId::TMain1B, star && k >= 4, format!("needs the starred class with k >= 4 (k = {k})")),
    ];
    for (t, applies, reason) in applicability {
        if !selection.includes(t) {
            continue;
        }
        if !applies {
            skip(&mut skipped, t, reason.trim_end());
            continue;
        }
        let row = match t {
            TheoremId::TB2 => {
                BoundRow::new(t, c(solved.get(Invariant::TauT)?), S::ratio(2 * (n + m) as i64, 5), Provenance::Solver)
            }
            TheoremId::TK3 => BoundRow::new(t, c(solved.get(Invariant::TauT)?), S::ratio((n + m) as i64, 3), Provenance::Solver),
            TheoremId::TK4 => BoundRow::new(t, c(6 * solved.get(Invariant::TauT)?), c(theta), Provenance::Solver),
            TheoremId::TK5 => BoundRow::new(t, c(7 * solved.get(Invariant::TauT)?), c(theta), Provenance::Solver),
            TheoremId::TMain2 => {
                BoundRow::new(t, c(solved.get(Invariant::GammaT)?), S::ratio(2 * n as i64, (k + 1) as i64), Provenance::Solver)
            }
            TheoremId::TMain3 => BoundRow::new(t, c(solved.get(Invariant::GammaT)?), S::ratio(n as i64, 3), Provenance::Solver),
            TheoremId::TMain1A | TheoremId::TMain1B => {
                let den = if t == TheoremId::TMain1A { k + 1 } else { k + 2 };
                let (b, bound_based) = b_value::<S>(k - 1).expect("k >= 3");
                let factor = S::ratio(2, den as i64).max_of(b);
                BoundRow::new(t, c(solved.get(Invariant::GammaT)?), factor * c(n), Provenance::Solver)
                    .with_bound_based(bound_based)
            }
            _ => unreachable!(),
        };
        rows.push(row);
    }

    let o2 = [
        TheoremId::O2Order,
        TheoremId::O2Size,
        TheoremId::O2MaxDegree,
        TheoremId::O2Deficiency,
    ];
    if o2.iter().any(|&t| selection.includes(t)) {
        if in_hk {
            rows.extend(h.observation2_check::<S>()?.into_iter().filter(|r| selection.includes(r.theorem)));
        } else {
            for t in o2.into_iter().filter(|&t| selection.includes(t)) {
                skip(&mut skipped, t, "not in the uniform class");
            }
        }
    }

    let chain = [TheoremId::ChainTauTauT, TheoremId::ChainTauTTauS];
    if chain.iter().any(|&t| selection.includes(t)) {
        let feasible = h.edges().iter().all(|e| e.len() >= 2);
        for t in chain.into_iter().filter(|&t| selection.includes(t)) {
            if !feasible {
                skip(&mut skipped, t, "a strong transversal needs every edge to have two vertices");
                continue;
            }
            let (lo, hi) = match t {
                TheoremId::ChainTauTauT => (Invariant::Tau, Invariant::TauT),
                _ => (Invariant::TauT, Invariant::TauStrong),
            };
            let row = BoundRow::new(t, c(solved.get(lo)?), c(solved.get(hi)?), Provenance::Solver).rhs_from(Provenance::Solver);
            rows.push(row);
        }
    }

    Ok(BoundReport {
        instance: instance_id(h),
        n,
        m,
        class,
        theta,
        values: solved.values,
        rows,
        skipped,
    })
}

/// [`verify_bounds`] over exact rationals for every theorem.
pub fn verify_all(h: &Hypergraph) -> Result<BoundReport<Rational>> {
    verify_bounds(h, &TheoremSelection::all())
}

/// `Θ(H) = 2n + 2m − n1`.
pub fn theta(h: &Hypergraph) -> usize {
    2 * h.n() + 2 * h.m() - h.degree_profile().n1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle, hg, path};
    use crate::transform::family_fk;

    #[test]
    fn cycle_is_tight_for_graphs() {
        let r = verify_all(&cycle(5)).unwrap();
        let row = r.row(TheoremId::TB2).unwrap();
        assert_eq!((row.lhs, row.rhs), (Rational::from(4), Rational::from(4)));
        assert!(row.holds && row.slack == Rational::from(0));
        assert!(r.all_hold());
        assert!(r.skipped.iter().any(|s| s.theorem == "T_k3"));
    }

    #[test]
    fn family_instance_is_tight_for_main2() {
        let f = family_fk(&hg(4, &[&[0, 1, 2], &[1, 2, 3]]), 3).unwrap();
        let r = verify_all(&f.hypergraph).unwrap();
        let row = r.row(TheoremId::TMain2).unwrap();
        assert_eq!(row.lhs, Rational::from(8));
        assert_eq!(row.rhs, Rational::new(2 * 16, 4));
        assert_eq!(row.slack, Rational::from(0));
        assert!(r.all_hold());
    }

    #[test]
    fn selection_parsing() {
        let s: TheoremSelection = "T_b2,O2".parse().unwrap();
        assert!(s.includes(TheoremId::TB2));
        assert!(s.includes(TheoremId::O2Size));
        assert!(!s.includes(TheoremId::TK3));
        assert!("T_zz".parse::<TheoremSelection>().is_err());
        let r = verify_bounds::<Rational>(&path(3), &s).unwrap();
        assert_eq!(r.rows.len(), 5);
        assert_eq!(r.values.tau_strong, None);
    }

    #[test]
    fn outside_class_rows_are_listed() {
        let h = hg(4, &[&[0, 1], &[2, 3]]);
        let r = verify_all(&h).unwrap();
        assert!(r.rows.iter().all(|row| row.theorem.group() == "chain"));
        assert_eq!(r.skipped.len(), TheoremId::ALL.len() - 2);
    }

    #[test]
    fn bound_based_rows_are_flagged() {
        let h = crate::search::generate::random_hypergraph(6, 10, 4, 5, true).unwrap();
        let r = verify_all(&h).unwrap();
        assert!(r.row(TheoremId::TMain1A).unwrap().bound_based);
        let f: BoundReport<f64> = verify_bounds(&h, &TheoremSelection::all()).unwrap();
        assert_eq!(f.all_hold(), r.all_hold());
    }

    #[test]
    fn b_values() {
        assert_eq!(b_value::<Rational>(2), Some((Rational::new(2, 5), false)));
        assert_eq!(b_value::<Rational>(3), Some((Rational::new(1, 3), false)));
        assert_eq!(b_value::<Rational>(4), Some((Rational::new(1, 3), true)));
        assert_eq!(b_value::<Rational>(9), Some((Rational::new(2, 7), true)));
        assert_eq!(theta(&path(3)), 2 * 3 + 2 * 2 - 2);
    }
}
