//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use sos_multitype::cli::RunConfig;
use sos_multitype::kolar::{self, leading_ideal, leading_ideal_is_homogeneous, MultitypeReport};
use sos_multitype::polyring::{rat, Coefficient, MultiIndex, Polynomial, Rational, Substitution};
use sos_multitype::rowreduce::{absent_variables, restricted_levi_determinant_nonzero, search_elimination, Strategy};
use sos_multitype::sos_oracle::{
    classify_monomial, determinant, expand_sos, levi, paired_row_col_op, run_mixed_kolar_traced,
    w_value_mixed, Gamma, LeviMatrix, MixedPolynomial,
};
use sos_multitype::weights::{weighted_length, Weight};
use sos_multitype::Error;

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Every report produced by any suite, with the leading ideals fed to the
/// reduction at the first step of each random instance.
#[derive(Default)]
struct Corpus {
    reports: Vec<MultitypeReport>,
    first_leading: Vec<(Vec<Polynomial>, Weight)>,
    theorem_checks: usize,
    theorem_failures: Vec<String>,
}

fn sorted(w: &Weight) -> Vec<Rational> {
    w.sorted()
}

fn ratios(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(p, q)| rat(p, q)).collect()
}

fn same_up_to_scalar(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let norm = |v: &[Polynomial]| {
        let mut m: Vec<Polynomial> = v.iter().map(|p| p.monic()).collect();
        m.sort_by_key(|p| p.to_string());
        m
    };
    norm(a) == norm(b)
}

fn criterion_1(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let r = match run(&three_variable()) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("run failed: {e}")),
    };
    let elapsed = start.elapsed();
    let z = |i| Polynomial::var(3, i);
    let model = [z(0), &z(1) * &z(2).pow(2)];
    let ds: Vec<usize> = r.traces.iter().map(|t| t.d).collect();
    let wmax: Vec<Option<Rational>> = r.traces.iter().map(|t| t.w_max.clone()).collect();
    let checks = [
        ("multitype", r.multitype.to_string() == "(2, 6, 6)"),
        ("final weight", sorted(&r.final_weight) == ratios(&[(1, 2), (1, 6), (1, 6)])),
        ("model ideal", same_up_to_scalar(&r.model_ideal, &model)),
        ("d sequence", ds == vec![2, 2, 0]),
        ("maxW", wmax[..2] == [Some(rat(1, 4)), Some(rat(1, 6))]),
        ("runtime", elapsed < Duration::from_secs(1)),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let detail = format!(
        "multitype {}, d {:?}, model ({}), {:.1} ms{}",
        r.multitype,
        ds,
        r.model_ideal.iter().map(|p| p.monic().to_string()).collect::<Vec<_>>().join(", "),
        elapsed.as_secs_f64() * 1e3,
        if failed.is_empty() { String::new() } else { format!("; failed: {failed:?}") }
    );
    corpus.reports.push(r);
    outcome(failed.is_empty(), detail)
}

fn criterion_2(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let r = match run(&four_variable()) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("run failed: {e}")),
    };
    let elapsed = start.elapsed();
    let expected = [
        ratios(&[(1, 4), (1, 4), (1, 4), (1, 4)]),
        ratios(&[(1, 4), (1, 8), (1, 8), (1, 8)]),
        ratios(&[(1, 4), (1, 8), (1, 8), (1, 16)]),
        ratios(&[(1, 4), (1, 8), (1, 8), (1, 20)]),
    ];
    let seq: Vec<Vec<Rational>> = r.traces.iter().map(|t| sorted(&t.weight)).collect();
    let z = |i| Polynomial::var(4, i);
    let mut paper = Substitution::single(0, &z(1) * &z(3)).unwrap();
    paper.push(sos_multitype::polyring::SubstitutionStep::new(3, -&z(2).pow(2)).unwrap());
    // equal as coordinate maps
    let equivalent = (0..4).all(|i| r.total_substitution.apply(&z(i)).unwrap() == paper.apply(&z(i)).unwrap());
    let checks = [
        ("weights", seq == expected),
        ("substitution", equivalent),
        ("maxW3", r.traces.get(2).and_then(|t| t.w_max.clone()) == Some(rat(1, 20))),
        ("multitype", r.multitype.to_string() == "(4, 8, 8, 20)"),
        ("runtime", elapsed < Duration::from_secs(5)),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let detail = format!(
        "multitype {}, substitution {}, {:.1} ms{}",
        r.multitype,
        r.total_substitution,
        elapsed.as_secs_f64() * 1e3,
        if failed.is_empty() { String::new() } else { format!("; failed: {failed:?}") }
    );
    corpus.reports.push(r);
    outcome(failed.is_empty(), detail)
}

fn same_error_kind(a: &Error, b: &Error) -> bool {
    std::mem::discriminant(a) == std::mem::discriminant(b)
}

/// Criteria 3 and 9 share the instances.
fn criterion_3(corpus: &mut Corpus) -> Outcome {
    const WANT: usize = 50;
    let mut rng = rng(3);
    let cfg = RunConfig::default();
    let (mut finite, mut errors_agreed, mut tried) = (0, 0, 0);
    let mut failures = Vec::new();
    while finite < WANT && tried < 2000 {
        tried += 1;
        let gens = random_instance(&mut rng);
        let (_, w1) = kolar::bloom_graham(&gens).unwrap();
        corpus.first_leading.push((leading_ideal(&gens, &w1), w1));
        let ideal = kolar::run(&gens, &cfg);
        let mixed = run_mixed_kolar_traced(&gens, &cfg);
        match (ideal, mixed) {
            (Ok(r), Ok(m)) => {
                if r.final_weight != m.report.final_weight {
                    failures.push(format!(
                        "{:?}: ideal {} vs mixed {}",
                        gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        r.final_weight.fmt_per_variable(),
                        m.report.final_weight.fmt_per_variable()
                    ));
                }
                theorem_5_1(corpus, &gens, &r, &m.leading_polynomials);
                corpus.reports.push(r);
                finite += 1;
            }
            (Err(a), Err(b)) if same_error_kind(&a, &b) => errors_agreed += 1,
            (a, b) => failures.push(format!(
                "{:?}: ideal {:?} vs mixed {:?}",
                gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                a.map(|r| r.multitype.to_string()),
                b.map(|r| r.report.multitype.to_string())
            )),
        }
    }
    let pass = failures.is_empty() && finite >= WANT;
    outcome(
        pass,
        format!(
            "{finite} finite-type instances compared ({errors_agreed} infinite-type on both sides), {} mismatches{}",
            failures.len(),
            failures.first().map_or(String::new(), |f| format!("; first: {f}"))
        ),
    )
}

fn theorem_5_1(corpus: &mut Corpus, gens: &[Polynomial], r: &MultitypeReport, mixed_leading: &[MixedPolynomial]) {
    if r.traces.len() != mixed_leading.len() {
        corpus.theorem_failures.push(format!("{gens:?}: step counts differ"));
        return;
    }
    for (t, p) in r.traces.iter().zip(mixed_leading) {
        corpus.theorem_checks += 1;
        let expected = expand_sos(&t.leading_ideal).unwrap_or_else(|_| MixedPolynomial::zero(r.nvars()));
        if &expected != p {
            corpus.theorem_failures.push(format!(
                "{:?} step {}",
                gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                t.step
            ));
        }
    }
}

/// Random `h` of degree ≤ 2, with nonzero constant term when `unit`.
fn random_multiplier(rng: &mut impl Rng, n: usize, unit: bool) -> Polynomial {
    let mut h = random_polynomial(rng, n, 2, 0, 2);
    let c = h.coefficient(&MultiIndex::zero(n));
    if unit && c == Coefficient::from_int(0) {
        h.add_term(MultiIndex::zero(n), small_coefficient(rng));
    }
    h
}

fn criterion_4(corpus: &mut Corpus) -> Outcome {
    const WANT: usize = 30;
    let mut rng = rng(4);
    let (mut checked, mut tried) = (0, 0);
    let mut failures = Vec::new();
    while checked < WANT && tried < 1000 {
        tried += 1;
        let gens = random_instance(&mut rng);
        let Ok(base) = run(&gens) else { continue };
        let n = gens[0].nvars();

        // append Σ h_i f_i
        let combo = gens
            .iter()
            .fold(Polynomial::zero(n), |acc, f| &acc + &(&random_multiplier(&mut rng, n, false) * f));
        let mut appended = gens.clone();
        if !combo.is_zero() {
            appended.push(combo);
        }

        // f_l -> h_l f_l − Σ_{c≠l} h_c f_c with h_l(0) ≠ 0
        let l = rng.gen_range(0..gens.len());
        let mut replaced = gens.clone();
        let mut new_l = &random_multiplier(&mut rng, n, true) * &gens[l];
        for (c, f) in gens.iter().enumerate() {
            if c != l {
                new_l = &new_l - &(&random_multiplier(&mut rng, n, false) * f);
            }
        }
        replaced[l] = new_l;

        for (label, variant) in [("appended", &appended), ("replaced", &replaced)] {
            match run(variant) {
                Ok(r) if r.multitype == base.multitype => corpus.reports.push(r),
                other => failures.push(format!(
                    "{label} {:?}: {} vs {:?}",
                    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    base.multitype,
                    other.map(|r| r.multitype.to_string())
                )),
            }
        }
        corpus.reports.push(base);
        checked += 1;
    }
    outcome(
        failures.is_empty() && checked >= WANT,
        format!(
            "{checked} instances x 2 variants, {} changed multitype{}",
            failures.len(),
            failures.first().map_or(String::new(), |f| format!("; first: {f}"))
        ),
    )
}

/// Direct evaluation of the W quotient, independent of `w_value_mixed`.
fn w_oracle(f: &MultiIndex, g: &MultiIndex, leading: &BTreeSet<usize>, w: &Weight) -> Option<Rational> {
    let mut num = rat(1, 1);
    let mut den = 0i64;
    for v in 0..w.nvars() {
        let e = i64::from(f.get(v) + g.get(v));
        if leading.contains(&v) {
            num -= w.of(v) * Rational::from_integer(e.into());
        } else {
            den += e;
        }
    }
    (num > rat(0, 1) && den > 0).then(|| num / Rational::from_integer(den.into()))
}

fn monomial_at_least_half(rng: &mut impl Rng, n: usize, w: &Weight, vars: &[usize]) -> MultiIndex {
    loop {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(1..=12) {
            e[vars[rng.gen_range(0..vars.len())]] += 1;
        }
        let m = MultiIndex::new(e);
        if weighted_length(&m, w).unwrap() >= rat(1, 2) {
            return m;
        }
    }
}

fn criterion_5() -> Outcome {
    const WANT: usize = 500;
    let mut rng = rng(5);
    let mut counts = [0usize; 4];
    let mut failures = Vec::new();
    let mut iterations = 0;
    while counts.iter().any(|&c| c < WANT) && iterations < 400_000 {
        iterations += 1;
        let n = rng.gen_range(2..=4);
        let (leading, w) = random_leading_weight(&mut rng, n);
        let all: Vec<usize> = (0..n).collect();
        let lead_vars: Vec<usize> = leading.iter().copied().collect();

        // which case to aim for; random pairs also land in any bucket
        let aim = iterations % 4;
        let f = if aim == 3 {
            // only leading variables, length exactly 1/2
            let m = monomial_at_least_half(&mut rng, n, &w, &lead_vars);
            if weighted_length(&m, &w).unwrap() != rat(1, 2) {
                continue;
            }
            m
        } else {
            monomial_at_least_half(&mut rng, n, &w, &all)
        };
        let g = if aim == 0 {
            // permute the non-leading exponents: same W
            let nl: Vec<usize> = (0..n).filter(|v| !leading.contains(v)).collect();
            let mut e = f.exponents().to_vec();
            let mut vals: Vec<u32> = nl.iter().map(|&v| e[v]).collect();
            vals.rotate_left(1);
            for (&v, x) in nl.iter().zip(vals) {
                e[v] = x;
            }
            MultiIndex::new(e)
        } else {
            monomial_at_least_half(&mut rng, n, &w, &all)
        };

        let wf = w_value_mixed(&(f.clone(), f.clone()), &leading, &w);
        let wg = w_value_mixed(&(g.clone(), g.clone()), &leading, &w);
        let wfg = w_value_mixed(&(f.clone(), g.clone()), &leading, &w);
        if wf != w_oracle(&f, &f, &leading, &w) || wfg != w_oracle(&f, &g, &leading, &w) {
            failures.push(format!("W mismatch for {f:?}, {g:?}"));
            continue;
        }
        let in_leading = classify_monomial(&f, &leading) == Ok(Gamma::Gamma3)
            && weighted_length(&f, &w).unwrap() == rat(1, 2);
        let (case, ok) = if in_leading {
            (3, wfg == wg)
        } else {
            match (&wf, &wg) {
                (Some(a), Some(b)) if a == b => (0, wfg.as_ref() == Some(a)),
                (Some(a), Some(b)) => {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    (1, wfg.as_ref().is_some_and(|x| lo < x && x < hi))
                }
                (None, Some(b)) => (2, wfg.as_ref().map_or(true, |x| x <= b)),
                (None, None) => (2, wfg.is_none()),
                (Some(_), None) => continue,
            }
        };
        counts[case] += 1;
        if !ok {
            failures.push(format!("case {} for {:?}, {:?} under {}", ["A", "B", "C", "D"][case], f, g, w.fmt_per_variable()));
        }
    }
    outcome(
        failures.is_empty() && counts.iter().all(|&c| c >= WANT),
        format!(
            "pairs per case A {} B {} C {} D {}, {} failures{}",
            counts[0],
            counts[1],
            counts[2],
            counts[3],
            failures.len(),
            failures.first().map_or(String::new(), |f| format!("; first: {f}"))
        ),
    )
}

fn criterion_6() -> Outcome {
    const WANT: usize = 100;
    let mut rng = rng(6);
    let mut failures = 0;
    for _ in 0..WANT {
        let n = rng.gen_range(2..=4);
        let p = random_real_mixed(&mut rng, n, 3);
        let step = random_step(&mut rng, n);
        let steps = [step.clone()];
        let paired = paired_row_col_op(&levi(&p), step.target, &step.shift).unwrap();
        let direct = levi(&p.substitute(&steps).unwrap());
        if paired.substitute(&steps).unwrap() != direct || !paired.is_hermitian() {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{WANT} (monomial, step) pairs, {failures} mismatches"))
}

/// Leibniz expansion over all permutations.
fn leibniz(a: &LeviMatrix) -> MixedPolynomial {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = a.dim();
    let nvars = a.get(0, 0).nvars();
    let mut total = MixedPolynomial::zero(nvars);
    for p in perms(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = MixedPolynomial::one(nvars);
        for (r, &c) in p.iter().enumerate() {
            term = &term * a.get(r, c);
        }
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn criterion_7() -> Outcome {
    const WANT: usize = 100;
    let mut rng = rng(7);
    let (mut failures, mut oracle_failures, mut nonzero) = (0, 0, 0);
    for _ in 0..WANT {
        let n = rng.gen_range(2..=3);
        let p = (0..rng.gen_range(1..=3)).fold(MixedPolynomial::zero(n), |acc, _| &acc + &random_real_mixed(&mut rng, n, 2));
        let a = levi(&p);
        let step = random_step(&mut rng, n);
        let b = paired_row_col_op(&a, step.target, &step.shift).unwrap();
        let (da, db) = (determinant(&a).unwrap(), determinant(&b).unwrap());
        if !a.is_hermitian() || !b.is_hermitian() || da != db {
            failures += 1;
        }
        if da != leibniz(&a) {
            oracle_failures += 1;
        }
        if !da.is_zero() {
            nonzero += 1;
        }
    }
    outcome(
        failures == 0 && oracle_failures == 0,
        format!("{WANT} Hermitian matrices ({nonzero} with nonzero determinant), {failures} changed, {oracle_failures} disagree with Leibniz expansion"),
    )
}

fn criterion_8(corpus: &Corpus) -> Outcome {
    let steps: usize = corpus.reports.iter().map(|r| r.traces.len()).sum();
    let bad = corpus
        .reports
        .iter()
        .flat_map(|r| &r.traces)
        .filter(|t| !leading_ideal_is_homogeneous(t))
        .count();
    outcome(bad == 0, format!("{} runs, {steps} steps, {bad} violations", corpus.reports.len()))
}

fn criterion_9(corpus: &Corpus) -> Outcome {
    outcome(
        corpus.theorem_failures.is_empty() && corpus.theorem_checks > 0,
        format!(
            "{} steps compared, {} mismatches{}",
            corpus.theorem_checks,
            corpus.theorem_failures.len(),
            corpus.theorem_failures.first().map_or(String::new(), |f| format!("; first: {f}"))
        ),
    )
}

fn criterion_10(corpus: &Corpus) -> Outcome {
    let mut cases: Vec<(Vec<Polynomial>, Weight)> = corpus.first_leading.clone();
    for r in &corpus.reports {
        for t in &r.traces {
            cases.push((t.leading_ideal.clone(), t.weight.clone()));
        }
    }
    let (mut nonzero, mut violations) = (0, 0);
    for (gens, w) in &cases {
        if gens.is_empty() || !restricted_levi_determinant_nonzero(gens).unwrap() {
            continue;
        }
        nonzero += 1;
        let e = search_elimination(gens, w, Strategy::Exhaustive).unwrap();
        if e.d != absent_variables(gens) || !e.total.is_identity() {
            violations += 1;
        }
    }
    outcome(
        violations == 0 && nonzero > 0,
        format!("{} leading ideals, {nonzero} with nonzero determinant, {violations} reducible", cases.len()),
    )
}

fn main() {
    let start = Instant::now();
    let mut corpus = Corpus::default();
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "three-variable golden fixture", criterion_1(&mut corpus)),
        (2, "four-variable golden fixture", criterion_2(&mut corpus)),
        (3, "ideal vs sum-of-squares differential suite", criterion_3(&mut corpus)),
        (4, "ideal invariance suite", criterion_4(&mut corpus)),
        (5, "W-value cases A-D", criterion_5()),
        (6, "paired operations give the new Levi matrix", criterion_6()),
        (7, "determinant invariance", criterion_7()),
    ];
    results.push((8, "leading ideals homogeneous of degree 1/2", criterion_8(&corpus)));
    results.push((9, "leading polynomial equals Σ|h|² of leading ideal", criterion_9(&corpus)));
    results.push((10, "nonzero determinant admits no reduction", criterion_10(&corpus)));

    for (id, name, o) in &results {
        println!("criterion {id:>2} [{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    let failed = results.iter().filter(|r| !r.2.pass).count();
    println!(
        "acceptance: {} passed, {failed} failed in {:.2} s",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
