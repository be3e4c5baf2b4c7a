use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use sos_multitype::cli::{emit_report_with, parse_input, OutputFormat};
use sos_multitype::rowreduce::Strategy;
use sos_multitype::{kolar, sos_oracle, Error};

/// Catlin multitype of 2 Re(w) + Σ|f_k|² at the origin.
#[derive(Parser, Debug)]
#[command(name = "multitype", version)]
struct Args {
    /// Input file (`-` or omitted reads stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Log every step to stderr.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    max_steps: Option<usize>,
    /// Truncate generators above this total degree.
    #[arg(long)]
    beta: Option<u32>,
    #[arg(long, value_parser = ["greedy", "exhaustive"])]
    strategy: Option<String>,
    /// Rerun on the expanded sum of squares and compare final weights.
    #[arg(long)]
    verify: bool,
}

fn exit_code(e: &Error) -> ExitCode {
    match e {
        Error::InfiniteType(_) => ExitCode::from(2),
        Error::Nontermination(_) => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => std::io::read_to_string(std::io::stdin()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    env_logger::Builder::new()
        .filter_level(if args.trace { log::LevelFilter::Debug } else { log::LevelFilter::Warn })
        .parse_default_env()
        .init();

    let text = match read_input(args.input.as_ref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(1);
        }
    };
    let mut spec = match parse_input(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let cfg = &mut spec.config;
    cfg.output_format = args.format.parse::<OutputFormat>().expect("restricted by clap");
    if let Some(m) = args.max_steps {
        if m == 0 {
            eprintln!("error: --max-steps must be at least 1");
            return ExitCode::from(1);
        }
        cfg.max_steps = m;
    }
    if let Some(b) = args.beta {
        if b == 0 {
            eprintln!("error: --beta must be at least 1");
            return ExitCode::from(1);
        }
        cfg.truncation_order = Some(b);
    }
    if let Some(s) = &args.strategy {
        cfg.strategy = s.parse::<Strategy>().expect("restricted by clap");
    }
    cfg.cross_check = args.verify;

    let report = match kolar::run(&spec.generators, &spec.config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    print!(
        "{}",
        emit_report_with(&report, spec.config.output_format, &spec.variable_names)
    );

    if args.verify {
        match sos_oracle::run_mixed_kolar(&spec.generators, &spec.config) {
            Ok(mixed) if mixed.final_weight == report.final_weight => {
                eprintln!("verify: sum-of-squares run agrees ({})", mixed.final_weight);
            }
            Ok(mixed) => {
                eprintln!(
                    "verify: MISMATCH, ideal run {} vs sum-of-squares run {}",
                    report.final_weight.fmt_per_variable(),
                    mixed.final_weight.fmt_per_variable()
                );
                return ExitCode::from(1);
            }
            Err(e) => {
                eprintln!("verify: sum-of-squares run failed: {e}");
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}
