//! Jacobian row reduction on the four-variable fixture: the two relations
//! found by hand and the full reduction at the third weight.

use sos_multitype::cli::parse_polynomial;
use sos_multitype::kolar::leading_ideal;
use sos_multitype::polyring::default_names;
use sos_multitype::rowreduce::{
    eliminate_all, find_dependent_row, jacobian, witness_to_substitution, CentralConstraints,
    Strategy,
};
use sos_multitype::weights::Weight;

fn main() -> sos_multitype::Result<()> {
    let names = default_names(4);
    let gens = [
        "(z1 + z2 z4)^2 + z2^4",
        "(z1 + z2 z3^2)^2",
        "z2^9",
        "z3^10",
        "z4^12",
    ]
    .iter()
    .map(|s| parse_polynomial(s, &names))
    .collect::<sos_multitype::Result<Vec<_>>>()?;

    let j = jacobian(&gens)?;
    println!("Jacobian (rows z1..z4, columns h1..h5):");
    for r in 0..j.nrows() {
        let row: Vec<String> = j.row(r).iter().map(|p| p.to_string()).collect();
        println!("  [{}]", row.join(" | "));
    }

    let w = Weight::from_ratios(&[(1, 4), (1, 8), (1, 16), (1, 8)]);
    let lead = leading_ideal(&gens, &w);
    println!("\nleading ideal under {}:", w.fmt_per_variable());
    for h in &lead {
        println!("  {h}");
    }

    let jl = jacobian(&lead)?;
    let none = CentralConstraints::default();
    if let Some(wit) = find_dependent_row(&jl, 0, &w, &none, 3) {
        println!("\nd h1/d z4 = Σ γ_c d h1/d z_c with {:?}", wit.coefficients.iter().map(|(c, g)| format!("γ_z{} = {g}", c + 1)).collect::<Vec<_>>());
        println!("substitution: {}", witness_to_substitution(&wit)?);
    }

    for strategy in [Strategy::Greedy, Strategy::Exhaustive] {
        let e = eliminate_all(&lead, &w, strategy)?;
        println!("\n{strategy:?}: {} ; d = {}", e.total, e.d);
        for h in &e.new_gens {
            println!("  {h}");
        }
    }
    Ok(())
}
