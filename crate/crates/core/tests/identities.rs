use weyl_order::arith::{choose, pow2, rat_int};
use weyl_order::harness::{
    ad_chain, check_lem2_commutant, check_lemma1, check_prop_expan, check_prop_tmn, run_suite,
    thm1_closed_form, thm2_closed_form, tmn_bruteforce, tmn_reversed_words, Variant,
    DEFAULT_WORD_CAP,
};
use weyl_order::harness::{check_remark14, check_remark15_pbw};
use weyl_order::{IdentityId, Rational, SweepConfig, Verdict, WeylElement};

#[test]
fn tmn_is_fixed_by_word_reversal() {
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            let reversed = tmn_reversed_words(m, n, DEFAULT_WORD_CAP).unwrap();
            let mirror = tmn_bruteforce(n, m, DEFAULT_WORD_CAP).unwrap();
            assert_eq!(reversed, mirror, "m={m} n={n}");
            // on canonical forms the same map just swaps exponents
            assert_eq!(tmn_bruteforce(m, n, DEFAULT_WORD_CAP).unwrap().reversal(), mirror);
        }
    }
}

#[test]
fn thm2_is_rescaled_thm1() {
    for m in 0..=7u32 {
        for n in 0..=7u32 {
            let scale = Rational::from_integer(choose(m + n, m)) / pow2(m + n);
            assert_eq!(thm2_closed_form(m, n), thm1_closed_form(m, n).scale(&scale));
            assert_eq!(ad_chain(m, n), thm1_closed_form(m, n));
        }
    }
}

#[test]
fn key_lemma_coefficients() {
    for total in 0..=8 {
        let r = check_lemma1(total, DEFAULT_WORD_CAP);
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn expansion_and_commutant_sweeps() {
    for m in 0..=6 {
        for n in 0..=6 {
            assert!(check_prop_expan(m, n).passed());
            assert!(check_lem2_commutant(m, n, 42).passed());
        }
    }
}

#[test]
fn rescaling_proposition_to_degree_twelve() {
    for m in 0..=12u32 {
        for n in 0..=12 - m {
            assert!(check_prop_tmn(m, n, DEFAULT_WORD_CAP).passed(), "m={m} n={n}");
        }
    }
}

#[test]
fn mirrored_remarks_are_labelled() {
    let r = check_remark14(2, 5, Variant::DerivedMirror, DEFAULT_WORD_CAP);
    assert!(r.passed());
    assert_eq!(r.variant, Variant::DerivedMirror);
    let r = check_remark15_pbw(5, 2, Variant::Stated, DEFAULT_WORD_CAP);
    assert!(r.passed());
    assert_eq!(r.variant, Variant::Stated);
}

#[test]
fn full_suite_at_degree_six() {
    let reports = run_suite(6, &SweepConfig { word_cap: DEFAULT_WORD_CAP, seed: 9 });
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
    for id in IdentityId::ALL {
        assert!(reports.iter().any(|r| r.identity == id), "{id} missing");
    }
    // 28 cells on the triangle m + n <= 6
    assert_eq!(reports.iter().filter(|r| r.identity == IdentityId::Thm1).count(), 28);
}

#[test]
fn anchors() {
    let t = |m, n| tmn_bruteforce(m, n, DEFAULT_WORD_CAP).unwrap().to_string();
    assert_eq!(t(0, 0), "1");
    assert_eq!(t(3, 0), "p^3");
    assert_eq!(t(1, 1), "2*q*p + 1");
    assert_eq!(t(2, 2), "6*q^2*p^2 + 12*q*p + 3");
    assert_eq!(ad_chain(1, 1), WeylElement::t().scale(&rat_int(2)));
}
