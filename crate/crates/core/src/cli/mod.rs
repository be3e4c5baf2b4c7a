//! Input format, run configuration and report emission.
//!
//! Input is line oriented:
//!
//! ```text
//! # comment
//! vars: z1 z2 z3
//! gens:
//! z1 - z2 + z3^2
//! z1^2 - z2^2
//! beta: 8            # optional truncation order
//! max_steps: 64      # optional
//! strategy: greedy   # or exhaustive
//! ```

mod parse;
mod report;

use std::str::FromStr;

pub use parse::{parse_input, parse_polynomial};
pub use report::{emit_report, emit_report_with, report_json};

use crate::error::Error;
use crate::polyring::Polynomial;
use crate::rowreduce::Strategy;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::InvalidInput(format!("unknown format {s:?}"))),
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            "exhaustive" => Ok(Strategy::Exhaustive),
            _ => Err(Error::InvalidInput(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RunConfig {
    /// Drop terms of total degree above this before running.
    pub truncation_order: Option<u32>,
    pub max_steps: usize,
    pub strategy: Strategy,
    /// Compare greedy reduction against exhaustive search at every step and
    /// (in the binary) rerun on the expanded sum of squares.
    pub cross_check: bool,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            truncation_order: None,
            max_steps: 64,
            strategy: Strategy::Greedy,
            cross_check: false,
            output_format: OutputFormat::Text,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InputSpec {
    pub variable_names: Vec<String>,
    pub generators: Vec<Polynomial>,
    pub config: RunConfig,
}
