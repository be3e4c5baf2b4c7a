//! Levi matrices, paired row/column operations and exact determinants.

use sos_multitype::cli::parse_polynomial;
use sos_multitype::polyring::{default_names, SubstitutionStep};
use sos_multitype::sos_oracle::{determinant, expand_sos, levi, levi_from_jacobian, paired_row_col_op, LeviMatrix};

fn show(label: &str, a: &LeviMatrix, names: &[String]) {
    println!("{label}:");
    for row in a.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.fmt_with(names)).collect();
        println!("  [{}]", cells.join(" | "));
    }
}

fn main() -> sos_multitype::Result<()> {
    let names = default_names(2);
    let gens = [
        parse_polynomial("z1 + z2^2", &names)?,
        parse_polynomial("z1 z2", &names)?,
    ];
    let p = expand_sos(&gens)?;
    let a = levi(&p);
    show("Levi matrix of |z1 + z2^2|^2 + |z1 z2|^2", &a, &names);
    println!("equals J J*: {}", a == levi_from_jacobian(&gens)?);
    println!("hermitian: {}", a.is_hermitian());
    println!("det = {}", determinant(&a)?.fmt_with(&names));

    // z̃1 = z1 + z2^2 clears the first generator's dependence on z2
    let h = parse_polynomial("z2^2", &names)?;
    let b = paired_row_col_op(&a, 0, &h)?;
    show("\nafter R2 - 2 z2 R1, C2 - 2 conj(z2) C1", &b, &names);
    println!("det = {}", determinant(&b)?.fmt_with(&names));

    // the paired result is still written in the old coordinates
    let steps = [SubstitutionStep::new(0, h)?];
    let rewritten = b.substitute(&steps)?;
    let direct = levi(&p.substitute(&steps)?);
    show("\nLevi matrix computed in the new coordinates", &direct, &names);
    println!("equals the paired result rewritten: {}", rewritten == direct);
    Ok(())
}
