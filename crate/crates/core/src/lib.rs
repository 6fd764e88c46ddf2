//! Distance-`d` domination on sparse graph classes.
//!
//! The pipeline finds a small bottleneck `S` and a large set `A` of targets
//! that is scattered once `S` is removed ([`wideness`]), uses the
//! distance vectors of `A` towards `S` to drop targets without changing the
//! answer ([`domination`]), and solves the remaining kernel exactly.
//! [`variants`] reuses the kernel for connected, efficient and Roman
//! domination; [`harness`] holds file formats, generators and corpus runs.

pub mod bounds;
pub mod combinatorics;
pub mod domination;
pub mod error;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod variants;
pub mod wideness;

use serde::Serialize;

pub use bounds::{ball_size_bound, BigBound, ClassProfile, KReading, ProfileMode, RamseyBounds};
pub use domination::{
    brute_force_min_domset, distance_vector, reduce_step, reduce_witness, solve, solve_small_core,
    Answer, CoreOptions, DistanceEntry, DistanceVector, DominationInstance, ReductionStep,
    SolveOptions, SolveOutcome,
};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, Remap, Vertex, VertexSet};
pub use wideness::{
    brute_force_scattered, find_scattered, shallow_clique_minor, ExtractionState, ScatterError,
    ScatterOptions, ScatteredWitness,
};

/// Which reading of the algorithms to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Literal thresholds; reports inconclusive when they are out of reach.
    Paper,
    /// Adaptive thresholds with exact fallbacks on small instances.
    #[default]
    Practical,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Self::Paper),
            "practical" => Ok(Self::Practical),
            _ => Err(Error::InvalidParameter(format!("unknown mode `{s}`"))),
        }
    }
}

impl From<Mode> for ProfileMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Paper => ProfileMode::PaperFaithful,
            Mode::Practical => ProfileMode::PracticalSafe,
        }
    }
}
