//! Empirical lower bounds on `b_k = sup τ_t/(n+m)` over the class.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Rational;
use crate::solve::tau_t;

use super::bounds::ser_display;
use super::enumerate::{binomial, OrderEnumerator};
use super::generate::{random_hypergraph, rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub k: usize,
    /// Instances to draw or enumerate, over both phases.
    pub budget: u64,
    pub seed: u64,
    /// Exhaustive phase over `k+1 ≤ n ≤ exhaustive_n_max`; below `k+1` the
    /// phase is skipped.
    pub exhaustive_n_max: usize,
    pub exhaustive_m_max: usize,
    pub random_n_max: usize,
    pub random_m_max: usize,
}

impl SearchConfig {
    /// Defaults: exhaustive up to `n = k+3` for `k ≤ 3`, otherwise `k+2`
    /// while that order has at most 28 subsets (else `k+1`); all edge counts
    /// for graphs and up to four edges otherwise; random orders up to `k+8`
    /// with up to `2k+4` edges.
    pub fn new(k: usize, budget: u64, seed: u64) -> Self {
        let exhaustive_n_max = if k <= 3 {
            k + 3
        } else if binomial(k + 2, k) <= 28 {
            k + 2
        } else {
            k + 1
        };
        let exhaustive_m_max = if k == 2 {
            binomial(exhaustive_n_max, 2) as usize
        } else {
            4
        };
        SearchConfig {
            k,
            budget,
            seed,
            exhaustive_n_max,
            exhaustive_m_max,
            random_n_max: k + 8,
            random_m_max: 2 * k + 4,
        }
    }

    /// Random phase only.
    pub fn random_only(mut self) -> Self {
        self.exhaustive_n_max = 0;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BkEstimate {
    pub k: usize,
    #[serde(serialize_with = "ser_display")]
    pub best_ratio: Rational,
    pub witness: Hypergraph,
    pub witness_tau_t: usize,
    /// Phase in which the witness was found.
    pub mode: SearchMode,
    pub instances_tested: u64,
    pub exhaustive_tested: u64,
    pub random_tested: u64,
    /// The exhaustive phase ran to completion within the budget.
    pub exhaustive_complete: bool,
    pub config: SearchConfig,
}

struct Best {
    ratio: Rational,
    witness: Option<(Hypergraph, usize, SearchMode)>,
}

impl Best {
    /// Keeps the first instance reaching the largest ratio.
    fn offer(&mut self, h: &Hypergraph, mode: SearchMode) -> Result<()> {
        let t = tau_t(h)?.value;
        let ratio = Rational::new(t as i64, (h.n() + h.m()) as i64);
        if self.witness.is_none() || ratio > self.ratio {
            self.ratio = ratio;
            self.witness = Some((h.clone(), t, mode));
        }
        Ok(())
    }
}

/// Runs the exhaustive phase, then spends the rest of the budget on random
/// members of the class. The best ratio only grows with the budget for a
/// fixed seed, since both phases consume instances in a fixed order.
pub fn estimate_bk(config: &SearchConfig) -> Result<BkEstimate> {
    let k = config.k;
    if k < 2 {
        return Err(Error::Parameter("k must be at least 2".into()));
    }
    let mut best = Best {
        ratio: Rational::from(0),
        witness: None,
    };
    let mut used = 0u64;
    let mut exhaustive_tested = 0u64;
    let mut exhaustive_complete = true;
    'orders: for n in (k + 1)..=config.exhaustive_n_max {
        let order = match OrderEnumerator::new(k, n, config.exhaustive_m_max) {
            Ok(order) => order,
            Err(Error::CapExceeded { .. }) => {
                exhaustive_complete = false;
                break;
            }
            Err(e) => return Err(e),
        };
        for h in order {
            if used >= config.budget {
                exhaustive_complete = false;
                break 'orders;
            }
            best.offer(&h?, SearchMode::Exhaustive)?;
            used += 1;
            exhaustive_tested += 1;
        }
    }

    let mut random_tested = 0u64;
    let mut stream = rng(config.seed);
    let n_hi = config.random_n_max.max(k + 1);
    while used < config.budget {
        used += 1;
        let n = stream.random_range(k + 1..=n_hi);
        let m_lo = n.div_ceil(k).max(2);
        let cap = binomial(n, k).min(config.random_m_max as u128) as usize;
        let draw_seed: u64 = stream.random();
        if m_lo > cap {
            continue;
        }
        let m = stream.random_range(m_lo..=cap);
        let h = random_hypergraph(k, n, m, draw_seed, false)?;
        if !h.class_check().in_class(k) {
            continue;
        }
        best.offer(&h, SearchMode::Random)?;
        random_tested += 1;
    }

    let Some((witness, witness_tau_t, mode)) = best.witness else {
        return Err(Error::Budget(format!("no member of the class was evaluated for k = {k}")));
    };
    let check = tau_t(&witness)?.value;
    if check != witness_tau_t || Rational::new(check as i64, (witness.n() + witness.m()) as i64) != best.ratio {
        return Err(Error::Internal("witness ratio does not reproduce".into()));
    }
    Ok(BkEstimate {
        k,
        best_ratio: best.ratio,
        witness,
        witness_tau_t,
        mode,
        instances_tested: exhaustive_tested + random_tested,
        exhaustive_tested,
        random_tested,
        exhaustive_complete,
        config: config.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::enumerate::is_isomorphic;
    use crate::testutil::{cycle, hg, path};

    #[test]
    fn graphs_reach_two_fifths() {
        let est = estimate_bk(&SearchConfig::new(2, 10_000, 0)).unwrap();
        assert_eq!(est.best_ratio, Rational::new(2, 5));
        assert!(est.exhaustive_complete);
        let w = &est.witness;
        assert!(is_isomorphic(w, &path(3)).unwrap() || is_isomorphic(w, &cycle(5)).unwrap());
    }

    #[test]
    fn triples_reach_one_third() {
        let est = estimate_bk(&SearchConfig::new(3, 10_000, 0)).unwrap();
        assert_eq!(est.best_ratio, Rational::new(1, 3));
        assert!(is_isomorphic(&est.witness, &hg(4, &[&[0, 1, 2], &[1, 2, 3]])).unwrap());
    }

    #[test]
    fn monotone_in_budget() {
        let mut last = Rational::from(0);
        for budget in [1, 5, 20, 80, 300] {
            let est = estimate_bk(&SearchConfig::new(4, budget, 3)).unwrap();
            assert!(est.best_ratio >= last);
            assert!(est.best_ratio <= Rational::new(1, 3));
            last = est.best_ratio;
        }
    }

    #[test]
    fn random_phase_alone() {
        let est = estimate_bk(&SearchConfig::new(5, 200, 1).random_only()).unwrap();
        assert_eq!(est.exhaustive_tested, 0);
        assert_eq!(est.mode, SearchMode::Random);
        assert!(est.witness.class_check().in_class(5));
    }
}
