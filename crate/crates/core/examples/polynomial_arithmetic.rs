//! Exact Gaussian-rational polynomials: parsing, arithmetic, calculus and
//! changes of variables.

use sos_multitype::cli::parse_polynomial;
use sos_multitype::polyring::{default_names, vanishing_order, Coefficient, Substitution};

fn main() -> sos_multitype::Result<()> {
    let names = default_names(3);
    let f = parse_polynomial("z1 - z2 + z3^2", &names)?;
    let g = parse_polynomial("(1/2)z1^2 - i z2", &names)?;

    println!("f           = {f}");
    println!("g           = {g}");
    println!("f + g       = {}", &f + &g);
    println!("f * g       = {}", &f * &g);
    println!("f^3         = {}", f.pow(3));
    println!("conj(g)     = {}", g.conj());
    println!("d f / d z3  = {}", f.partial_derivative(2)?);
    println!("∫ f dz2     = {}", f.antiderivative(1)?);
    println!("3i * g      = {}", g.scale(&(&Coefficient::i() * &Coefficient::from_int(3))));
    println!("order(f, g) = {}", vanishing_order(&[f.clone(), g.clone()])?);

    // z̃1 = z1 - z2 rewrites f in the new coordinates
    let s = Substitution::single(0, parse_polynomial("-z2", &names)?)?;
    let f1 = s.apply(&f)?;
    println!("\nsubstitution {s}");
    println!("f in new coordinates = {f1}");
    println!("back again           = {}", s.inverse().apply(&f1)?);
    Ok(())
}
