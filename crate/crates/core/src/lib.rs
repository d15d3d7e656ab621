//! Runtime experiments for NSGA-II and its reference-point variant
//! R-NSGA-II on bi-objective pseudo-Boolean benchmarks.
//!
//! The crate is organized bottom-up:
//!
//! - [`space`]: bit strings, objective vectors, Pareto dominance, bit-wise
//!   mutation and seeded random streams.
//! - [`problems`]: OneMinMax, OneJumpZeroJump, OneMinMax* and bi-objective
//!   NK-landscapes, with closed-form and enumerated Pareto fronts.
//! - [`survival`]: fast non-dominated sorting, crowding distance,
//!   reference-point distance and truncation of the merged population.
//! - [`evolve`]: the generation loop and the "reference point found"
//!   stopping rule.
//! - [`lab`]: seeded parallel sweeps, summaries, rank-sum tests and log-log
//!   growth fits.
//! - [`cli`]: the `emo-lab` command line.
//!
//! All objectives are maximized.
//!
//! ```
//! use emo_lab::evolve::{run, AlgorithmConfig};
//! use emo_lab::problems::ProblemSpec;
//! use emo_lab::space::ObjectiveVector;
//!
//! let problem = ProblemSpec::one_min_max(20).unwrap();
//! let target = ObjectiveVector::new(0.0, 20.0);
//! let result = run(&problem, &AlgorithmConfig::rnsga2(1, target), 42).unwrap();
//! assert!(result.hit);
//! ```

pub mod cli;
pub mod error;
pub mod evolve;
pub mod lab;
pub mod problems;
pub mod space;
pub mod survival;

pub use error::{Error, Result};
