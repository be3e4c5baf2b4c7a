//! End-to-end multitype computation on the bundled fixtures, with the weight
//! trace of every step.

use sos_multitype::cli::{parse_input, RunConfig};
use sos_multitype::kolar;

const FIXTURES: [(&str, &str); 3] = [
    ("three variables", include_str!("../fixtures/three_variable.txt")),
    ("four variables", include_str!("../fixtures/four_variable.txt")),
    ("diagonal", "vars: z1 z2\ngens:\nz1\nz2^2\n"),
];

fn main() -> sos_multitype::Result<()> {
    for (label, text) in FIXTURES {
        let spec = parse_input(text)?;
        let report = kolar::run(&spec.generators, &RunConfig::default())?;
        println!("== {label}: multitype {}", report.multitype);
        for t in &report.traces {
            println!(
                "  step {}  weight {:<26} d = {}  w_max = {}",
                t.step,
                t.weight.fmt_sorted(),
                t.d,
                t.w_max.as_ref().map_or("-".into(), |w| w.to_string())
            );
        }
        let model: Vec<String> = report.model_ideal.iter().map(|g| g.monic().fmt_with(&spec.variable_names)).collect();
        println!("  model ideal ({})", model.join(", "));
        println!("  coordinates {}", report.total_substitution.fmt_with(&spec.variable_names));
    }

    // a variable that never appears has infinite type
    let spec = parse_input("vars: z1 z2\ngens:\nz1^2\n")?;
    match kolar::run(&spec.generators, &spec.config) {
        Err(e) => println!("== missing variable: {e}"),
        Ok(r) => println!("unexpected multitype {}", r.multitype),
    }
    Ok(())
}
