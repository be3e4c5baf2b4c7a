//! Parsing an input file and emitting text and JSON reports.
//!
//! `cargo run --example report_formats -- path/to/input.txt`

use sos_multitype::cli::{emit_report_with, parse_input, OutputFormat};
use sos_multitype::kolar;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => include_str!("../fixtures/four_variable.txt").to_string(),
    };
    let spec = parse_input(&text)?;
    let report = kolar::run(&spec.generators, &spec.config)?;
    print!("{}", emit_report_with(&report, OutputFormat::Text, &spec.variable_names));
    println!();
    print!("{}", emit_report_with(&report, OutputFormat::Json, &spec.variable_names));
    Ok(())
}
