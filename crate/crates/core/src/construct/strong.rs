//! The randomized strong-transversal algorithm and its Monte-Carlo harness.

use num_traits::{Float, FromPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::solve::predicates::is_strong_transversal;

/// One run of the algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongSample {
    /// `X1 ∪ X2 ∪ X3`, sorted.
    pub set: Vec<usize>,
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
}

/// The three terms of the closed-form bound and their sum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StrongBound<F> {
    /// `p n`, the expected size of `X1`.
    pub x1_term: F,
    /// `(2/(ck)) m`, bounding the expected size of `X2`.
    pub x2_term: F,
    /// `((ln k + ln c)/(c(k-1))) m`, bounding the expected size of `X3`.
    pub x3_term: F,
    pub total: F,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport<F> {
    pub k: usize,
    pub c: F,
    pub n: usize,
    pub m: usize,
    pub p: F,
    pub trials: u64,
    pub seed: u64,
    pub mean_size: F,
    pub std_err: F,
    pub mean_x1: F,
    pub std_err_x1: F,
    pub mean_x2: F,
    pub std_err_x2: F,
    pub mean_x3: F,
    pub std_err_x3: F,
    pub bound: F,
    pub terms: StrongBound<F>,
    pub all_valid: bool,
}

/// `p = ln(ck)/(k - 1)`, refused unless `k ≥ 2`, `c > 1` and `p ≤ 1`.
pub fn strong_probability<F: Float + FromPrimitive>(k: usize, c: F) -> Result<F> {
    if k < 2 {
        return Err(Error::Parameter(format!("k = {k}; the algorithm needs k >= 2")));
    }
    if c.partial_cmp(&F::one()) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Parameter("c must exceed 1".into()));
    }
    let kf = F::from_usize(k).expect("k fits");
    let p = (c * kf).ln() / (kf - F::one());
    if p > F::one() {
        return Err(Error::Parameter(format!(
            "k = {k} and c = {} make p = ln(ck)/(k-1) = {} exceed 1",
            c.to_f64().unwrap_or(f64::NAN),
            p.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(p)
}

/// The closed-form bound on the expected output size for a `k`-uniform
/// hypergraph with `n` vertices and `m` edges.
pub fn strong_transversal_bound<F: Float + FromPrimitive>(k: usize, c: F, n: usize, m: usize) -> Result<StrongBound<F>> {
    let p = strong_probability(k, c)?;
    let f = |x: usize| F::from_usize(x).expect("count fits");
    let (kf, mf) = (f(k), f(m));
    let logs = kf.ln() + c.ln();
    let x1_term = p * f(n);
    let x2_term = f(2) / (c * kf) * mf;
    let x3_term = logs / (c * (kf - F::one())) * mf;
    Ok(StrongBound {
        x1_term,
        x2_term,
        x3_term,
        total: x1_term + x2_term + x3_term,
    })
}

fn uniformity(h: &Hypergraph) -> Result<usize> {
    match h.uniformity() {
        Some(k) if k >= 2 => Ok(k),
        _ => Err(Error::Precondition(
            "the strong-transversal algorithm needs a k-uniform hypergraph with k >= 2".into(),
        )),
    }
}

/// The generator for one trial: the seed's ChaCha8 stream numbered `trial`.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `X1` draws every vertex independently with probability `p`, in ascending
/// order. Each edge missing `X1` adds its two lowest vertices to `X2`, and
/// each edge meeting `X1` once adds its lowest vertex outside `X1` to `X3`.
fn sample(h: &Hypergraph, p: f64, rng: &mut impl Rng) -> StrongSample {
    let n = h.n();
    let x1: Vec<bool> = (0..n).map(|_| rng.random_bool(p)).collect();
    let mut x2 = vec![false; n];
    let mut x3 = vec![false; n];
    for e in h.edges() {
        match e.iter().filter(|&&v| x1[v]).count() {
            0 => {
                x2[e[0]] = true;
                x2[e[1]] = true;
            }
            1 => {
                let v = *e.iter().find(|&&v| !x1[v]).expect("k >= 2");
                x3[v] = true;
            }
            _ => {}
        }
    }
    let count = |s: &[bool]| s.iter().filter(|&&b| b).count();
    let set = (0..n).filter(|&v| x1[v] || x2[v] || x3[v]).collect();
    StrongSample {
        set,
        x1: count(&x1),
        x2: count(&x2),
        x3: count(&x3),
    }
}

/// One run with the given seed. Repeated calls with the same arguments give
/// the same set, and the run equals trial 0 of [`strong_transversal_trials`].
pub fn randomized_strong_transversal(h: &Hypergraph, c: f64, seed: u64) -> Result<StrongSample> {
    let k = uniformity(h)?;
    let p = strong_probability(k, c)?;
    Ok(sample(h, p, &mut trial_rng(seed, 0)))
}

#[derive(Clone, Copy, Default)]
struct Sums {
    count: u64,
    valid: bool,
    size: (u64, u128),
    x1: (u64, u128),
    x2: (u64, u128),
    x3: (u64, u128),
}

fn add((s, q): (u64, u128), x: usize) -> (u64, u128) {
    (s + x as u64, q + (x as u128) * (x as u128))
}

fn merge(a: Sums, b: Sums) -> Sums {
    let pair = |x: (u64, u128), y: (u64, u128)| (x.0 + y.0, x.1 + y.1);
    Sums {
        count: a.count + b.count,
        valid: a.valid && b.valid,
        size: pair(a.size, b.size),
        x1: pair(a.x1, b.x1),
        x2: pair(a.x2, b.x2),
        x3: pair(a.x3, b.x3),
    }
}

/// Mean and standard error of the mean from integer sums.
fn moments<F: Float + FromPrimitive>((s, q): (u64, u128), t: u64) -> (F, F) {
    let tf = F::from_u64(t).expect("trial count fits");
    let mean = F::from_u64(s).expect("sum fits") / tf;
    if t < 2 {
        return (mean, F::zero());
    }
    // t·Σx² − (Σx)² is exact in integers and t(t−1)·variance
    let spread = (t as u128) * q - (s as u128) * (s as u128);
    let var = F::from_u128(spread).expect("fits") / (tf * (tf - F::one()));
    (mean, (var / tf).sqrt())
}

/// Runs `trials` independent samples, each on its own stream of `seed`, and
/// reports term-wise statistics against the closed-form bound. Trials run
/// on the current rayon pool and reduce integer sums, so the report does not
/// depend on the thread count.
pub fn strong_transversal_trials<F>(h: &Hypergraph, c: F, trials: u64, seed: u64) -> Result<TrialReport<F>>
where
    F: Float + FromPrimitive + Send + Sync,
{
    if trials == 0 {
        return Err(Error::Parameter("at least one trial is needed".into()));
    }
    let k = uniformity(h)?;
    let p = strong_probability(k, c)?;
    let terms = strong_transversal_bound(k, c, h.n(), h.m())?;
    let pf = p.to_f64().expect("probability is finite");
    let sums = (0..trials)
        .into_par_iter()
        .map(|t| {
            let s = sample(h, pf, &mut trial_rng(seed, t));
            Sums {
                count: 1,
                valid: is_strong_transversal(h, &s.set),
                size: add((0, 0), s.set.len()),
                x1: add((0, 0), s.x1),
                x2: add((0, 0), s.x2),
                x3: add((0, 0), s.x3),
            }
        })
        .reduce(
            || Sums {
                valid: true,
                ..Sums::default()
            },
            merge,
        );
    let (mean_size, std_err) = moments(sums.size, sums.count);
    let (mean_x1, std_err_x1) = moments(sums.x1, sums.count);
    let (mean_x2, std_err_x2) = moments(sums.x2, sums.count);
    let (mean_x3, std_err_x3) = moments(sums.x3, sums.count);
    Ok(TrialReport {
        k,
        c,
        n: h.n(),
        m: h.m(),
        p,
        trials,
        seed,
        mean_size,
        std_err,
        mean_x1,
        std_err_x1,
        mean_x2,
        std_err_x2,
        mean_x3,
        std_err_x3,
        bound: terms.total,
        terms,
        all_valid: sums.valid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::generate::random_hypergraph;
    use crate::testutil::hg;

    #[test]
    fn parameter_domain() {
        assert!(matches!(strong_probability(2, 10.0), Err(Error::Parameter(_))));
        assert!(matches!(strong_probability(5, 1.0), Err(Error::Parameter(_))));
        assert!(matches!(strong_probability(1, 2.0), Err(Error::Parameter(_))));
        let p: f64 = strong_probability(20, 2.0).unwrap();
        assert!((p - 40f64.ln() / 19.0).abs() < 1e-12);
    }

    #[test]
    fn always_strong_and_reproducible() {
        let h = random_hypergraph(6, 30, 40, 7, false).unwrap();
        for seed in 0..20 {
            let a = randomized_strong_transversal(&h, 2.0, seed).unwrap();
            assert!(is_strong_transversal(&h, &a.set));
            assert_eq!(a, randomized_strong_transversal(&h, 2.0, seed).unwrap());
        }
    }

    #[test]
    fn refuses_mixed_sizes() {
        let h = hg(5, &[&[0, 1, 2], &[3, 4]]);
        assert!(randomized_strong_transversal(&h, 2.0, 0).is_err());
    }

    #[test]
    fn bound_terms_add_up() {
        let b = strong_transversal_bound(20, 2.0f64, 400, 400).unwrap();
        let logs = 20f64.ln() + 2f64.ln();
        assert!((b.x1_term - logs / 19.0 * 400.0).abs() < 1e-9);
        assert!((b.x3_term - logs / 38.0 * 400.0).abs() < 1e-9);
        assert!((b.x2_term - 2.0 / 40.0 * 400.0).abs() < 1e-9);
        assert!((b.total - (b.x1_term + b.x2_term + b.x3_term)).abs() < 1e-9);
    }

    #[test]
    fn trials_are_thread_independent() {
        let h = random_hypergraph(8, 40, 40, 3, false).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let three = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
        let a = one.install(|| strong_transversal_trials(&h, 2.0f64, 200, 9).unwrap());
        let b = three.install(|| strong_transversal_trials(&h, 2.0f64, 200, 9).unwrap());
        assert_eq!(a, b);
        assert!(a.all_valid);
        let single = randomized_strong_transversal(&h, 2.0, 9).unwrap();
        let first = strong_transversal_trials(&h, 2.0f64, 1, 9).unwrap();
        assert_eq!(first.mean_size, single.set.len() as f64);
    }

    #[test]
    fn statistics_in_f32() {
        let h = random_hypergraph(8, 40, 40, 3, false).unwrap();
        let r = strong_transversal_trials(&h, 2.0f32, 50, 1).unwrap();
        assert!(r.all_valid && r.mean_size > 0.0);
    }
}
