//! Wall geometry of finitely generated Coxeter systems.
//!
//! The crate provides the Cayley-graph combinatorics of Coxeter groups:
//! canonical ShortLex normal forms and the word problem, reflections and
//! walls with sides, separation and the parallel/crossing dichotomy, Dilworth
//! chain partitions of separating walls, bracket numbers of edge paths, and
//! the constructive straightening of bounded-bracket quasi-geodesics into
//! tracking geodesics.
//!
//! The word problem is solved exactly by Tits rewriting; an optional fast
//! path (feature `geometric`, on by default) drives normal forms through the
//! geometric representation over f64 and is validated against the baseline.

mod caps;
mod element;
mod engine;
mod error;
mod system;
mod word;

pub mod paths;
pub mod tracking;
pub mod walls;

pub use caps::Caps;
pub use element::Element;
pub use engine::SolverKind;
pub use error::{Error, Result};
pub use paths::{BracketReport, EdgePath, QuasiGeodesicCheck, QuasiGeodesicParams};
pub use system::CoxeterSystem;
pub use tracking::{
    double_tracking_bound, grid_system, spiral_letters, spiral_path, ApproximationResult,
    CorrespondenceReport, ProjectionResult, SpiralParams, StraightenResult, TraceEvent,
};
pub use walls::{ChainPartition, CrossVerdict, ParallelWallEstimate, Side, Wall};
pub use word::Word;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::{CoxeterSystem, Element, Word};

    pub fn dinf() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into()],
            vec![vec![1, 0], vec![0, 1]],
        )
        .unwrap()
    }

    pub fn a2() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into()],
            vec![vec![1, 3], vec![3, 1]],
        )
        .unwrap()
    }

    pub fn b2() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into()],
            vec![vec![1, 4], vec![4, 1]],
        )
        .unwrap()
    }

    pub fn m2() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into()],
            vec![vec![1, 2], vec![2, 1]],
        )
        .unwrap()
    }

    pub fn m2x3() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into(), "u".into()],
            vec![vec![1, 2, 2], vec![2, 1, 3], vec![2, 3, 1]],
        )
        .unwrap()
    }

    pub fn a2tilde() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into(), "u".into()],
            vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
        )
        .unwrap()
    }

    pub fn grid() -> CoxeterSystem {
        crate::tracking::grid_system()
    }

    pub fn w(sys: &CoxeterSystem, text: &str) -> Word {
        sys.word_from_names(text).unwrap()
    }

    pub fn el(sys: &CoxeterSystem, text: &str) -> Element {
        sys.normal_form(&w(sys, text)).unwrap()
    }
}
