//! File formats, the bundled example catalog, reports and the `mbqc` command line.

pub mod catalog;
pub mod cli;
pub mod compile;
pub mod export;
pub mod problem;
pub mod report;

pub use catalog::{catalog, catalog_entry};
pub use compile::{anneal_problem, compile, AnnealOutcome, Compiled};
pub use problem::{load_problem, parse_problem, Method, Problem, ProblemSpec, SpecError};
pub use report::{report, Report};
