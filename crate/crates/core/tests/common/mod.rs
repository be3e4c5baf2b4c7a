#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sos_multitype::cli::{parse_input, RunConfig};
use sos_multitype::kolar::{self, MultitypeReport};
use sos_multitype::polyring::{Coefficient, MultiIndex, Polynomial, Rational, SubstitutionStep};
use sos_multitype::sos_oracle::MixedPolynomial;
use sos_multitype::weights::Weight;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn three_variable() -> Vec<Polynomial> {
    parse_input(include_str!("../../fixtures/three_variable.txt")).unwrap().generators
}

pub fn four_variable() -> Vec<Polynomial> {
    parse_input(include_str!("../../fixtures/four_variable.txt")).unwrap().generators
}

pub fn run(gens: &[Polynomial]) -> sos_multitype::Result<MultitypeReport> {
    kolar::run(gens, &RunConfig::default())
}

pub fn random_multiindex(rng: &mut impl Rng, n: usize, min_deg: u32, max_deg: u32) -> MultiIndex {
    let deg = rng.gen_range(min_deg..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..deg {
        e[rng.gen_range(0..n)] += 1;
    }
    MultiIndex::new(e)
}

pub fn small_coefficient(rng: &mut impl Rng) -> Coefficient {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    Coefficient::from_int(c)
}

/// Sum of up to `terms` random monomials with degrees in `min_deg..=max_deg`.
pub fn random_polynomial(rng: &mut impl Rng, n: usize, terms: usize, min_deg: u32, max_deg: u32) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=terms) {
        p.add_term(random_multiindex(rng, n, min_deg, max_deg), small_coefficient(rng));
    }
    p
}

/// `n ≤ 3` variables, `N ≤ 3` generators, monomials of degree 1..=4, integer
/// coefficients in [-3, 3].
pub fn random_instance(rng: &mut impl Rng) -> Vec<Polynomial> {
    loop {
        let n = rng.gen_range(1..=3);
        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count).map(|_| random_polynomial(rng, n, 3, 1, 4)).collect();
        if gens.iter().all(|g| !g.is_zero()) {
            return gens;
        }
    }
}

/// `c z^α conj(z)^β + conj(c) z^β conj(z)^α`.
pub fn random_real_mixed(rng: &mut impl Rng, n: usize, max_deg: u32) -> MixedPolynomial {
    let a = random_multiindex(rng, n, 1, max_deg);
    let b = random_multiindex(rng, n, 1, max_deg);
    let c = Coefficient::new(
        Rational::from_integer(rng.gen_range(-3..=3).into()),
        Rational::from_integer(rng.gen_range(-3..=3).into()),
    );
    let c = if c == Coefficient::from_int(0) { Coefficient::from_int(1) } else { c };
    let mut p = MixedPolynomial::zero(n);
    p.add_term((a.clone(), b.clone()), c.clone());
    p.add_term((b, a), c.conj());
    p
}

/// Random step `z̃_target = z_target + h` with `h` free of `z_target`.
pub fn random_step(rng: &mut impl Rng, n: usize) -> SubstitutionStep {
    let target = rng.gen_range(0..n);
    let mut h = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let mut m = random_multiindex(rng, n, 1, 2);
        m.set(target, 0);
        if !m.is_constant() {
            h.add_term(m, small_coefficient(rng));
        }
    }
    SubstitutionStep::new(target, h).unwrap()
}

pub const UNIT_FRACTIONS: [i64; 11] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];

/// Random leading set (nonempty, proper when `n > 1`) and a weight that is
/// constant off the leading set, as in the driver.
pub fn random_leading_weight(rng: &mut impl Rng, n: usize) -> (BTreeSet<usize>, Weight) {
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let k = if n == 1 { 1 } else { rng.gen_range(1..n) };
    let leading: BTreeSet<usize> = vars[..k].iter().copied().collect();
    let lead_dens: Vec<i64> = (0..n).map(|_| *UNIT_FRACTIONS.choose(rng).unwrap()).collect();
    let max_lead = leading.iter().map(|&v| lead_dens[v]).max().unwrap();
    let rest = rng.gen_range(max_lead..=max_lead + 8);
    let per: Vec<(i64, i64)> = (0..n)
        .map(|v| if leading.contains(&v) { (1, lead_dens[v]) } else { (1, rest) })
        .collect();
    (leading, Weight::from_ratios(&per))
}
