//! Seed-reproducible random graphs for the sampled theorem checks.
//!
//! Everything is driven by ChaCha8 streams keyed by an explicit seed, so a
//! (seed, parameters) pair names the exact graph on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SampleError {
    #[error("no admissible sample within {attempts} attempts (n = {n}, min degree {min_deg})")]
    Exhausted { n: usize, min_deg: usize, attempts: usize },
}

/// One draw from G(n, p).
pub fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("gnp endpoints are in range")
}

/// Repeatedly samples G(n, p) at a density tuned for the degree target and
/// returns the first draw that is 2-connected with minimum degree at least
/// `min_deg`. Same seed, same graph.
pub fn random_two_connected_min_degree(
    n: usize,
    min_deg: usize,
    seed: u64,
) -> Result<Graph, SampleError> {
    assert!(n >= 3, "need at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = (((min_deg + 2) as f64) / ((n - 1) as f64)).clamp(0.3, 0.95);
    let attempts = 100_000;
    for _ in 0..attempts {
        let g = gnp(n, p, &mut rng);
        if g.min_degree() >= min_deg && g.is_two_connected() {
            return Ok(g);
        }
    }
    Err(SampleError::Exhausted { n, min_deg, attempts })
}
