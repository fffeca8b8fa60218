//! Monte-Carlo estimate of hitting times.
//!
//! Trial `i` draws from a ChaCha8 stream keyed by `(seed, i)`, so results do
//! not depend on scheduling or thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_STEP_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WalkStats {
    pub sample_mean: f64,
    pub standard_error: f64,
    pub trials: u64,
    pub seed: u64,
    /// Trials abandoned at the step cap; excluded from the mean.
    pub cap_hits: u64,
}

impl WalkStats {
    /// `(mean - exact) / standard_error`, zero when both agree exactly.
    pub fn z_score(&self, exact: f64) -> f64 {
        let diff = self.sample_mean - exact;
        if self.standard_error > 0.0 {
            diff / self.standard_error
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY.copysign(diff)
        }
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn walk_once(g: &Graph, from: usize, to: usize, rng: &mut ChaCha8Rng, cap: u64) -> Option<u64> {
    let mut cur = from;
    let mut steps = 0u64;
    while cur != to {
        if steps >= cap {
            return None;
        }
        let nbrs = g.neighbors(cur);
        cur = nbrs[rng.gen_range(0..nbrs.len())];
        steps += 1;
    }
    Some(steps)
}

pub fn simulate_hitting_time(
    g: &Graph,
    from: usize,
    to: usize,
    trials: u64,
    seed: u64,
) -> Result<WalkStats> {
    simulate_hitting_time_with_cap(g, from, to, trials, seed, DEFAULT_STEP_CAP)
}

pub fn simulate_hitting_time_with_cap(
    g: &Graph,
    from: usize,
    to: usize,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<WalkStats> {
    g.check_vertex(from)?;
    g.check_vertex(to)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let samples: Vec<Option<u64>> = (0..trials)
        .into_par_iter()
        .map(|t| walk_once(g, from, to, &mut trial_rng(seed, t), cap))
        .collect();

    let finished: Vec<u64> = samples.iter().flatten().copied().collect();
    let cap_hits = trials - finished.len() as u64;
    if finished.is_empty() {
        return Err(Error::StepCapExceeded { trials, cap });
    }
    let count = finished.len() as f64;
    let total: u128 = finished.iter().map(|&s| s as u128).sum();
    let mean = total as f64 / count;
    let standard_error = if finished.len() > 1 {
        let ss: f64 = finished.iter().map(|&s| (s as f64 - mean).powi(2)).sum();
        (ss / (count - 1.0) / count).sqrt()
    } else {
        0.0
    };
    Ok(WalkStats {
        sample_mean: mean,
        standard_error,
        trials,
        seed,
        cap_hits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cycle, path};

    #[test]
    fn single_edge_is_deterministic() {
        let stats = simulate_hitting_time(&path(2).unwrap(), 0, 1, 1000, 3).unwrap();
        assert_eq!(stats.sample_mean, 1.0);
        assert_eq!(stats.standard_error, 0.0);
    }

    #[test]
    fn triangle_mean_near_two() {
        let stats = simulate_hitting_time(&cycle(3).unwrap(), 0, 1, 20_000, 11).unwrap();
        assert!(stats.z_score(2.0).abs() <= 4.0, "{stats:?}");
    }

    #[test]
    fn seeds_reproduce() {
        let g = path(4).unwrap();
        let a = simulate_hitting_time(&g, 0, 3, 2000, 99).unwrap();
        let b = simulate_hitting_time(&g, 0, 3, 2000, 99).unwrap();
        assert_eq!(a, b);
        let c = simulate_hitting_time(&g, 0, 3, 2000, 100).unwrap();
        assert_ne!(a.sample_mean, c.sample_mean);
    }

    #[test]
    fn reproducible_across_thread_counts() {
        let g = cycle(5).unwrap();
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let four = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let a = one.install(|| simulate_hitting_time(&g, 0, 2, 5000, 5).unwrap());
        let b = four.install(|| simulate_hitting_time(&g, 0, 2, 5000, 5).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn step_cap_and_arguments() {
        let g = path(6).unwrap();
        let capped = simulate_hitting_time_with_cap(&g, 0, 5, 200, 1, 5);
        // the walk needs at least 5 steps, and only the straight run makes it
        match capped {
            Ok(stats) => assert!(stats.cap_hits > 0),
            Err(e) => assert!(matches!(e, Error::StepCapExceeded { .. })),
        }
        assert!(matches!(
            simulate_hitting_time_with_cap(&g, 0, 5, 10, 1, 2),
            Err(Error::StepCapExceeded { trials: 10, cap: 2 })
        ));
        assert!(simulate_hitting_time(&g, 0, 5, 0, 1).is_err());
        assert!(simulate_hitting_time(&g, 0, 9, 1, 1).is_err());
    }
}
