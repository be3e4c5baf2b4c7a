use serde_json::{json, Value};

use super::OutputFormat;
use crate::kolar::{MultitypeReport, StepTrace};
use crate::polyring::{default_names, Polynomial, Rational, Substitution};
use crate::weights::Weight;

fn rational_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn weight_json(w: &Weight) -> Value {
    json!({
        "sorted": w.sorted().iter().map(rational_json).collect::<Vec<_>>(),
        "per_variable": w.per_variable().iter().map(rational_json).collect::<Vec<_>>(),
    })
}

fn ideal_strings(gens: &[Polynomial], names: &[String]) -> Vec<String> {
    gens.iter().map(|g| g.monic().fmt_with(names)).collect()
}

fn substitution_json(s: &Substitution, names: &[String]) -> Value {
    s.steps
        .iter()
        .map(|st| json!({ "target": names[st.target], "shift": st.shift.fmt_with(names) }))
        .collect()
}

fn step_json(t: &StepTrace, names: &[String]) -> Value {
    json!({
        "step": t.step,
        "weight": weight_json(&t.weight),
        "leading_ideal": ideal_strings(&t.leading_ideal, names),
        "substitution": substitution_json(&t.substitution, names),
        "d": t.d,
        "theta_size": t.theta_size,
        "w_max": t.w_max.as_ref().map_or(Value::Null, rational_json),
    })
}

/// JSON document with sorted keys; rationals are `{"num": "..", "den": ".."}`.
pub fn report_json(r: &MultitypeReport, names: &[String]) -> Value {
    json!({
        "variables": names,
        "multitype": r.multitype.entries.iter().map(rational_json).collect::<Vec<_>>(),
        "final_weight": weight_json(&r.final_weight),
        "model_ideal": ideal_strings(&r.model_ideal, names),
        "total_substitution": substitution_json(&r.total_substitution, names),
        "steps": r.traces.iter().map(|t| step_json(t, names)).collect::<Vec<_>>(),
    })
}

fn text(r: &MultitypeReport, names: &[String]) -> String {
    let mut out = String::new();
    out.push_str(&format!("multitype: {}\n", r.multitype));
    out.push_str(&format!("final weight: {}\n", r.final_weight.fmt_sorted()));
    out.push_str(&format!(
        "final weight per variable: {}\n",
        r.final_weight.fmt_per_variable()
    ));
    out.push_str(&format!("model ideal: {}\n", ideal_strings(&r.model_ideal, names).join(", ")));
    out.push_str(&format!("total substitution: {}\n", r.total_substitution.fmt_with(names)));
    for t in &r.traces {
        out.push_str(&format!(
            "step {}: weight {} per variable {}, d = {}, |theta| = {}, w_max = {}\n",
            t.step,
            t.weight.fmt_sorted(),
            t.weight.fmt_per_variable(),
            t.d,
            t.theta_size,
            t.w_max.as_ref().map_or("none".to_string(), |w| w.to_string()),
        ));
        out.push_str(&format!(
            "  leading ideal: {}\n",
            ideal_strings(&t.leading_ideal, names).join(", ")
        ));
        out.push_str(&format!("  substitution: {}\n", t.substitution.fmt_with(names)));
    }
    out
}

/// Report with variables named `names`. Leading-ideal generators are scaled
/// so that their first canonical term has coefficient 1.
pub fn emit_report_with(r: &MultitypeReport, format: OutputFormat, names: &[String]) -> String {
    match format {
        OutputFormat::Text => text(r, names),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(r, names))
                .expect("report JSON is always serializable");
            s.push('\n');
            s
        }
    }
}

/// Report with default variable names `z1, …, zn`.
pub fn emit_report(r: &MultitypeReport, format: OutputFormat) -> String {
    emit_report_with(r, format, &default_names(r.nvars()))
}
