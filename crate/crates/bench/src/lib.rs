//! Shared inputs for the coxwalls benchmarks.

use coxwalls_core::{CoxeterSystem, EdgePath};

pub fn a2tilde() -> CoxeterSystem {
    CoxeterSystem::new(
        vec!["s".into(), "t".into(), "u".into()],
        vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
    )
    .unwrap()
}

pub fn grid() -> CoxeterSystem {
    coxwalls_core::grid_system()
}

/// Deterministic pseudo-random path from the identity.
pub fn scrambled_path(sys: &CoxeterSystem, len: usize, seed: u64) -> EdgePath {
    let mut state = seed;
    let letters = (0..len)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % sys.rank() as u64) as u8
        })
        .collect();
    EdgePath::new(sys.identity(), letters)
}
