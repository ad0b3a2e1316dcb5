//! End-to-end acceptance checks. Every identity is exact: agreement means
//! identical canonical forms, with zero tolerance.
//!
//! Runs as a plain binary so each criterion prints one PASS/FAIL line.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weyl_cli::expr::parse_and_lower;
use weyl_order::arith::{choose, pow2, rat};
use weyl_order::harness::{
    ad_chain, check_lem3_1, check_lem3_2, check_prop_genfun, check_remark14, check_remark15_pbw,
    check_thm1, check_thm2, genfun_alphas, genfun_points, random_element, thm1_closed_form_branch,
    thm1_sum_p_outside, thm1_sum_q_outside, tmn_bruteforce, Branch, DEFAULT_WORD_CAP,
};
use weyl_order::mp::{mp_definition_combination, mp_real_form};
use weyl_order::rewrite::rewrite_word;
use weyl_order::{CheckReport, Letter, Monomial, Rational, Variant, WeylElement, Word};

type Outcome = Result<String, String>;

fn all_pass(reports: &[CheckReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(format!(
            "{} {} {}: {} vs {} {}",
            r.identity,
            r.params,
            r.verdict,
            r.lhs,
            r.rhs,
            r.detail.clone().unwrap_or_default()
        )),
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    if elapsed <= Duration::from_secs(limit_secs) {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit_secs} s"))
    }
}

fn criterion_1_theorem1() -> Outcome {
    let start = Instant::now();
    let reports: Vec<_> = (0..=8).flat_map(|m| (0..=8).map(move |n| check_thm1(m, n))).collect();
    let elapsed = start.elapsed();
    all_pass(&reports)?;
    if reports.len() != 81 {
        return Err(format!("{} cells instead of 81", reports.len()));
    }
    within(elapsed, 10)?;
    Ok(format!("81 cells identical in {elapsed:.2?}"))
}

fn criterion_2_theorem2() -> Outcome {
    let start = Instant::now();
    let reports: Vec<_> = (0..=12u32)
        .flat_map(|m| (0..=12 - m).map(move |n| check_thm2(m, n, DEFAULT_WORD_CAP)))
        .collect();
    let elapsed = start.elapsed();
    all_pass(&reports)?;
    if reports.len() != 91 {
        return Err(format!("{} cells instead of 91", reports.len()));
    }
    let anchors = [
        ((1, 1), "2*q*p + 1"),
        ((2, 2), "6*q^2*p^2 + 12*q*p + 3"),
        ((2, 1), "3*q*p^2 + 3*p"),
    ];
    for ((m, n), want) in anchors {
        let got = tmn_bruteforce(m, n, DEFAULT_WORD_CAP).map_err(|e| e.to_string())?.to_string();
        if got != want {
            return Err(format!("T_{{{m},{n}}} = {got}, expected {want}"));
        }
    }
    within(elapsed, 60)?;
    Ok(format!("91 cells identical in {elapsed:.2?}, anchors match"))
}

fn criterion_3_specializations() -> Outcome {
    for n in 0..=6u32 {
        let q_half = WeylElement::substitute_t(&mp_real_form(n, &rat(1, 2)));
        let undoubled = |x: WeylElement| x.scale(&(Rational::from_integer(1.into()) / pow2(n)));
        let p_sum = undoubled(thm1_sum_p_outside(n, n));
        let q_sum = undoubled(thm1_sum_q_outside(n, n));
        if p_sum != q_sum || q_sum != q_half {
            return Err(format!("diagonal sums at n={n}: {p_sum} / {q_sum} / {q_half}"));
        }
        let right = thm1_closed_form_branch(n, n, Branch::PRight);
        let left = thm1_closed_form_branch(n, n, Branch::QLeft);
        if right != left {
            return Err(format!("branches differ at m=n={n}"));
        }
        let tn = tmn_bruteforce(n, n, DEFAULT_WORD_CAP).map_err(|e| e.to_string())?;
        let closed = q_half.scale(&(Rational::from_integer(choose(2 * n, n)) / pow2(n)));
        if tn != closed {
            return Err(format!("T_{n} = {tn}, closed form {closed}"));
        }
    }
    Ok("diagonal forms hold for n <= 6".into())
}

fn criterion_4_lemma3() -> Outcome {
    let commutation: Vec<_> = (0..=6).flat_map(|l| (0..=5).map(move |j| check_lem3_1(l, j))).collect();
    all_pass(&commutation)?;
    let factor: Vec<_> = (0..=8).map(check_lem3_2).collect();
    all_pass(&factor)?;
    Ok(format!("{} commutation and {} factorization cells", commutation.len(), factor.len()))
}

fn criterion_5_generating_function() -> Outcome {
    let mut cells = 0;
    for n in 0..=10u32 {
        for alpha in genfun_alphas() {
            for t in genfun_points() {
                let report = check_prop_genfun(n, &alpha, &t);
                all_pass(std::slice::from_ref(&report))?;
                let value = mp_definition_combination(n, &alpha, &t).map_err(|e| e.to_string())?;
                if !value.is_real() {
                    return Err(format!("imaginary part {} at n={n} alpha={alpha} t={t}", value.im));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} grid points: real, equal, chain intact"))
}

fn criterion_6_remarks() -> Outcome {
    let mut reports = Vec::new();
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            if n <= m {
                reports.push(check_remark14(m, n, Variant::Stated, DEFAULT_WORD_CAP));
                reports.push(check_remark15_pbw(m, n, Variant::Stated, DEFAULT_WORD_CAP));
            }
            if m <= n {
                reports.push(check_remark14(m, n, Variant::DerivedMirror, DEFAULT_WORD_CAP));
                reports.push(check_remark15_pbw(m, n, Variant::DerivedMirror, DEFAULT_WORD_CAP));
            }
        }
    }
    all_pass(&reports)?;
    Ok(format!("{} stated and mirrored cells", reports.len()))
}

fn criterion_7_oracles() -> Outcome {
    for b in 0..=8u32 {
        for c in 0..=8u32 {
            let mut letters = vec![Letter::P; b as usize];
            letters.extend(vec![Letter::Q; c as usize]);
            if WeylElement::reduce_pq_block(b, c) != rewrite_word(&Word::new(letters)) {
                return Err(format!("block p^{b} q^{c} disagrees with rewriting"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=4u32 {
        for trial in 0..25 {
            let elems: Vec<_> = (0..n).map(|_| random_element(&mut rng)).collect();
            let lhs = WeylElement::symmetrized_check_ad(&elems, &WeylElement::one());
            let rhs = WeylElement::symmetrized_product(&elems).scale(&pow2(n));
            if lhs != rhs {
                return Err(format!("symmetrized product fails at n={n}, trial {trial}"));
            }
        }
    }
    // the rescaling identity also needs ad(p), ad(q) to commute
    for (m, n) in [(3, 2), (2, 3)] {
        let other = WeylElement::check_ad_power(
            &WeylElement::q(),
            n,
            &WeylElement::check_ad_power(&WeylElement::p(), m, &WeylElement::one()),
        );
        if other != ad_chain(m, n) {
            return Err("ad(p), ad(q) do not commute".into());
        }
    }
    Ok("81 block cells, 100 symmetrized-product tuples".into())
}

fn random_canonical_form(rng: &mut ChaCha8Rng) -> WeylElement {
    let terms = rng.gen_range(0..=6);
    WeylElement::from_terms((0..terms).map(|_| {
        (
            Monomial::new(rng.gen_range(0..=7), rng.gen_range(0..=7)),
            rat(rng.gen_range(-30..=30), rng.gen_range(1..=12)),
        )
    }))
}

fn criterion_8_cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_weyl");
    let out = Command::new(bin)
        .args(["verify", "THM2", "--m", "0..3", "--n", "0..3", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("verify exited with {:?}", out.status.code()));
    }
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let records: Vec<serde_json::Value> = stdout
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let passes = records.iter().filter(|r| r["verdict"] == "pass").count();
    if records.len() != 16 || passes != 16 {
        return Err(format!("{} records, {passes} pass", records.len()));
    }

    let out = Command::new(bin)
        .args(["normalize", "p^2*q^2"])
        .output()
        .map_err(|e| e.to_string())?;
    let printed = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    if printed.trim_end() != "q^2*p^2 + 4*q*p + 2" || out.status.code() != Some(0) {
        return Err(format!("normalize printed {printed:?}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for _ in 0..200 {
        let x = random_canonical_form(&mut rng);
        let rendered = x.to_string();
        let back = parse_and_lower(&rendered).map_err(|e| format!("{rendered}: {e}"))?;
        if back != x {
            return Err(format!("round trip changed {rendered} into {back}"));
        }
    }
    Ok("verify emits 16 pass records, normalize output exact, 200 round trips".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 theorem 1 sums, closed form and ad chain, m,n <= 8", criterion_1_theorem1),
        ("2 T_{m,n} word sums vs closed form, m+n <= 12", criterion_2_theorem2),
        ("3 diagonal specializations, n <= 6", criterion_3_specializations),
        ("4 commutation with f(T) and factorization into T", criterion_4_lemma3),
        ("5 Meixner-Pollaczek routes and transformation chain", criterion_5_generating_function),
        ("6 T_{m,n} q^(m-n) and PBW expansion, stated and mirrored", criterion_6_remarks),
        ("7 rewriting oracle and symmetrized products", criterion_7_oracles),
        ("8 command-line contract", criterion_8_cli),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
