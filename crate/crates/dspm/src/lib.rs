//! Standard-library companion to `dspm-core`: a threaded pair census, the
//! JSON, DOT and plain-text grid formats, and the `dspm` command line.

pub mod census;
pub mod cli;
pub mod dot;
pub mod error;
pub mod grid;
pub mod json;

pub use census::{
    degree_histogram, run_census, run_census_with, CensusMode, CensusOptions, CensusResult,
    Progress,
};
pub use error::{CliError, ExitCode};
