//! The same computation on the expanded real polynomial Σ|f_k|², compared
//! step by step with the ideal-level leading generators.

use sos_multitype::cli::{parse_input, RunConfig};
use sos_multitype::kolar;
use sos_multitype::polyring::default_names;
use sos_multitype::sos_oracle::{expand_sos, run_mixed_kolar_traced};

fn main() -> sos_multitype::Result<()> {
    let spec = parse_input(include_str!("../fixtures/three_variable.txt"))?;
    let names = default_names(3);
    let p = expand_sos(&spec.generators)?;
    println!("P = {}", p.fmt_with(&names));
    println!("real: {}, pluriharmonic terms: {}", p.is_real(), p.has_pluriharmonic_terms());

    let cfg = RunConfig::default();
    let mixed = run_mixed_kolar_traced(&spec.generators, &cfg)?;
    let ideal = kolar::run(&spec.generators, &cfg)?;
    for (lead, t) in mixed.leading_polynomials.iter().zip(&ideal.traces) {
        let agrees = *lead == expand_sos(&t.leading_ideal)?;
        println!(
            "\nstep {} weight {}\n  P_{} = {}\n  equals Σ|h|² of the leading ideal: {agrees}",
            t.step,
            t.weight,
            t.step,
            lead.fmt_with(&names)
        );
    }
    println!(
        "\nfinal weights: ideal {}  mixed {}",
        ideal.final_weight, mixed.report.final_weight
    );
    Ok(())
}
