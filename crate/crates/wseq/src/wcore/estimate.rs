//! Monte Carlo estimators for coprimality densities of random integers.
//!
//! Trials are partitioned into fixed-size chunks; chunk `c` draws from a
//! counter-based generator keyed by `(seed, stream = c)`, so the merged
//! count is independent of scheduling and thread count. Sampling is
//! uniform on `[1, bound]`, which approximates the natural-density limit
//! with O(1/bound) bias.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::gcd_u64;
use crate::error::{Error, Result};

/// Trials per RNG stream. Fixed so results never depend on thread count.
const CHUNK: u64 = 1 << 16;

/// A Monte Carlo estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub successes: u64,
    pub trials: u64,
    pub estimate: f64,
    pub stderr: f64,
}

impl Estimate {
    fn from_counts(successes: u64, trials: u64) -> Self {
        let p = successes as f64 / trials as f64;
        Estimate {
            successes,
            trials,
            estimate: p,
            stderr: (p * (1.0 - p) / trials as f64).sqrt(),
        }
    }
}

fn run_chunked<F>(trials: u64, seed: u64, is_success: F) -> Estimate
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    let chunks = trials.div_ceil(CHUNK);
    let successes: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let in_chunk = CHUNK.min(trials - c * CHUNK);
            (0..in_chunk).filter(|_| is_success(&mut rng)).count() as u64
        })
        .sum();
    Estimate::from_counts(successes, trials)
}

/// Estimated probability that among `m` integers drawn uniformly from
/// `[1, bound]` some one of them is coprime to all of the others.
pub fn estimate_exists_coprime_prob(m: u32, bound: u64, trials: u64, seed: u64) -> Result<Estimate> {
    if m < 2 {
        return Err(Error::InvalidParameter("need m >= 2 draws".into()));
    }
    if bound < 2 {
        return Err(Error::InvalidParameter("need bound >= 2".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("need trials >= 1".into()));
    }
    Ok(run_chunked(trials, seed, |rng| {
        let draws: Vec<u64> = (0..m).map(|_| rng.random_range(1..=bound)).collect();
        draws.iter().enumerate().any(|(i, &a)| {
            draws
                .iter()
                .enumerate()
                .all(|(j, &b)| i == j || gcd_u64(a, b) == 1)
        })
    }))
}

/// Estimated probability that `k` integers drawn uniformly from
/// `[1, bound]` are pairwise coprime.
pub fn estimate_pairwise_coprime_prob(
    k: u32,
    bound: u64,
    trials: u64,
    seed: u64,
) -> Result<Estimate> {
    if k < 2 {
        return Err(Error::InvalidParameter("need k >= 2 draws".into()));
    }
    if bound < 2 {
        return Err(Error::InvalidParameter("need bound >= 2".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("need trials >= 1".into()));
    }
    Ok(run_chunked(trials, seed, |rng| {
        let draws: Vec<u64> = (0..k).map(|_| rng.random_range(1..=bound)).collect();
        for i in 0..draws.len() {
            for j in i + 1..draws.len() {
                if gcd_u64(draws[i], draws[j]) != 1 {
                    return false;
                }
            }
        }
        true
    }))
}

/// ζ(k) for integer k ≥ 2, via direct summation with an Euler–Maclaurin
/// tail. Accurate to well below 1e-12 — plenty for reference display.
pub fn zeta(k: u32) -> f64 {
    assert!(k >= 2, "zeta reference only needed for k >= 2");
    let n = 100_000u64;
    let s = k as f64;
    let head: f64 = (1..=n).map(|i| (i as f64).powf(-s)).sum();
    let nf = n as f64;
    // Tail: N^(1-s)/(s-1) - N^(-s)/2 + s·N^(-s-1)/12
    head + nf.powf(1.0 - s) / (s - 1.0) - nf.powf(-s) / 2.0 + s * nf.powf(-s - 1.0) / 12.0
}

/// Claimed density of `k` pairwise-coprime random integers: 1/ζ(k).
/// Exact for k = 2; for k ≥ 3 this reference is emitted alongside the
/// measured estimate only, never asserted.
pub fn pairwise_coprime_reference(k: u32) -> f64 {
    1.0 / zeta(k)
}

/// Claimed density for "some draw coprime to all others" among `m`
/// draws: (1/ζ(2))^(m-1). Exact for m = 2 (where it reduces to 6/π²);
/// for m ≥ 3 it is emitted alongside the measured estimate only.
pub fn exists_coprime_reference(m: u32) -> f64 {
    let inv_zeta2 = 1.0 / zeta(2);
    inv_zeta2.powi(m as i32 - 1)
}
