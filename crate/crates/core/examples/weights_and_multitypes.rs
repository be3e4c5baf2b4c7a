//! Weights, their validity condition, lexicographic order and multitypes.

use sos_multitype::polyring::MultiIndex;
use sos_multitype::weights::{
    lex_compare, multitype_of, validate_weight, validate_weight_tuple, weighted_length, Weight,
};
use sos_multitype::polyring::rat;

fn main() -> sos_multitype::Result<()> {
    let weights = [
        Weight::from_ratios(&[(1, 2), (1, 2), (1, 2)]),
        Weight::from_ratios(&[(1, 2), (1, 4), (1, 4)]),
        Weight::from_ratios(&[(1, 2), (1, 6), (1, 6)]),
        Weight::from_ratios(&[(1, 4), (1, 8), (1, 20), (1, 8)]),
    ];
    for w in &weights {
        println!(
            "{:<28} sorted {:<26} valid: {:<5} multitype {}",
            w.fmt_per_variable(),
            w.fmt_sorted(),
            validate_weight(w).is_valid(),
            multitype_of(w)?
        );
    }
    println!(
        "\n(1/2, 1/4, 1/4) vs (1/2, 1/6, 1/6): {:?}",
        lex_compare(&weights[1], &weights[2])?
    );

    // not reachable: no a, b ≥ 0 with a/2 + b·3/10 = 1 and b > 0
    println!("(1/2, 3/10) -> {:?}", validate_weight_tuple(&[rat(1, 2), rat(3, 10)]));
    println!("(1/3, 1/2)  -> {:?}", validate_weight_tuple(&[rat(1, 3), rat(1, 2)]));

    let m = MultiIndex::new(vec![0, 1, 2]);
    println!(
        "\n|z2*z3^2| under {} = {}",
        weights[2].fmt_per_variable(),
        weighted_length(&m, &weights[2])?
    );
    Ok(())
}
