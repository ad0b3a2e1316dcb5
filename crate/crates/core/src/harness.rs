//! Checkers for the ordering identities. Each checker builds every side of
//! an identity as a canonical [`WeylElement`] (or exact scalar) and reports
//! whether they coincide.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{choose, factorial, fmt_rational, pochhammer_num, pow2, rat, rat_int, Integer, Rational};
use crate::mp::{mp_definition_combination, mp_real_form, transformation_chain_check, MpError};
use crate::poly::{pochhammer_poly, Polynomial};
use crate::weyl::{Letter, Monomial, WeylElement, Word};

/// Word count of the largest `T_{m,n}` with `m + n <= 16`.
pub const DEFAULT_WORD_CAP: u64 = 12_870;

/// `α` values of the Meixner-Pollaczek consistency grid.
pub fn genfun_alphas() -> Vec<Rational> {
    vec![rat(1, 2), rat_int(1), rat(3, 2), rat_int(2), rat(5, 2)]
}

/// Evaluation points of the Meixner-Pollaczek consistency grid.
pub fn genfun_points() -> Vec<Rational> {
    (-3..=3).map(rat_int).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("enumeration needs {required} words but the cap is {cap}")]
    CapExceeded { required: Integer, cap: u64 },
    #[error(transparent)]
    Mp(#[from] MpError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Thm1,
    Thm2,
    Lem1,
    Lem2Commutant,
    PropExpan,
    Lem3_1,
    Lem3_2,
    PropGenfun,
    PropTmn,
    Remark14,
    Remark15,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Lem1,
        IdentityId::Lem2Commutant,
        IdentityId::PropExpan,
        IdentityId::Lem3_1,
        IdentityId::Lem3_2,
        IdentityId::PropGenfun,
        IdentityId::PropTmn,
        IdentityId::Remark14,
        IdentityId::Remark15,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "THM1",
            IdentityId::Thm2 => "THM2",
            IdentityId::Lem1 => "LEM1",
            IdentityId::Lem2Commutant => "LEM2_COMMUTANT",
            IdentityId::PropExpan => "PROP_EXPAN",
            IdentityId::Lem3_1 => "LEM3_1",
            IdentityId::Lem3_2 => "LEM3_2",
            IdentityId::PropGenfun => "PROP_GENFUN",
            IdentityId::PropTmn => "PROP_TMN",
            IdentityId::Remark14 => "REMARK_14",
            IdentityId::Remark15 => "REMARK_15",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown identity `{0}`")]
pub struct UnknownIdentity(pub String);

impl FromStr for IdentityId {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.to_ascii_uppercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == upper)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Whether a check is one of the displayed statements or a mirrored form
/// reconstructed through the `p <-> q` anti-automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Stated,
    DerivedMirror,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Int(i64),
    Rat(Rational),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Rat(r) => f.write_str(&fmt_rational(r)),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(v) => s.serialize_i64(*v),
            ParamValue::Rat(r) => s.serialize_str(&fmt_rational(r)),
        }
    }
}

/// Named parameters in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params(pub Vec<(&'static str, ParamValue)>);

impl Params {
    fn ints(pairs: &[(&'static str, u32)]) -> Self {
        Params(pairs.iter().map(|&(k, v)| (k, ParamValue::Int(v as i64))).collect())
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Outcome of one identity check. `verdict` is `Pass` exactly when `lhs`
/// and `rhs` render identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: IdentityId,
    pub variant: Variant,
    pub params: Params,
    pub verdict: Verdict,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn error(identity: IdentityId, variant: Variant, params: Params, err: &HarnessError) -> Self {
        CheckReport {
            identity,
            variant,
            params,
            verdict: Verdict::Error,
            lhs: String::new(),
            rhs: String::new(),
            detail: Some(err.to_string()),
        }
    }

    /// Compares named constructions against the first one. `rhs` is the
    /// first disagreeing construction, or the last one when all agree.
    fn from_constructions<T: PartialEq + fmt::Display>(
        identity: IdentityId,
        variant: Variant,
        params: Params,
        constructions: &[(&str, T)],
    ) -> Self {
        let (lhs_name, lhs) = &constructions[0];
        let mismatch = constructions[1..].iter().find(|(_, v)| v != lhs);
        let (verdict, rhs, detail) = match mismatch {
            None => {
                let last = &constructions[constructions.len() - 1].1;
                (Verdict::Pass, last.to_string(), None)
            }
            Some((name, v)) => (
                Verdict::Fail,
                v.to_string(),
                Some(format!("{lhs_name} differs from {name}")),
            ),
        };
        CheckReport { identity, variant, params, verdict, lhs: lhs.to_string(), rhs, detail }
    }
}

fn q_pow(k: u32) -> WeylElement {
    WeylElement::monomial(k, 0, Rational::one())
}

fn p_pow(k: u32) -> WeylElement {
    WeylElement::monomial(0, k, Rational::one())
}

fn binom_rat(n: u32, k: u32) -> Rational {
    Rational::from_integer(choose(n, k))
}

/// `2^n sum_k C(m,k) p^k q^n p^(m-k)`.
pub fn thm1_sum_p_outside(m: u32, n: u32) -> WeylElement {
    let qn = q_pow(n);
    let mut total = WeylElement::zero();
    for k in 0..=m {
        let term = &(&p_pow(k) * &qn) * &p_pow(m - k);
        total = &total + &term.scale(&binom_rat(m, k));
    }
    total.scale(&pow2(n))
}

/// `2^m sum_k C(n,k) q^k p^m q^(n-k)`.
pub fn thm1_sum_q_outside(m: u32, n: u32) -> WeylElement {
    let pm = p_pow(m);
    let mut total = WeylElement::zero();
    for k in 0..=n {
        let term = &(&q_pow(k) * &pm) * &q_pow(n - k);
        total = &total + &term.scale(&binom_rat(n, k));
    }
    total.scale(&pow2(m))
}

/// Which side of the closed form to use; both apply when `m == n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `m >= n`: the `p^(m-n)` factor sits on the right.
    PRight,
    /// `n >= m`: the `q^(n-m)` factor sits on the left.
    QLeft,
}

/// `Q_k^((1+d)/2)(T + d)` as an algebra element.
fn shifted_mp_at_t(k: u32, d: u32) -> WeylElement {
    let alpha = rat(1 + d as i64, 2);
    WeylElement::substitute_t(&mp_real_form(k, &alpha).shift(&rat_int(d as i64)))
}

/// The Meixner-Pollaczek side of the first theorem using a chosen branch.
pub fn thm1_closed_form_branch(m: u32, n: u32, branch: Branch) -> Option<WeylElement> {
    match branch {
        Branch::PRight if m >= n => {
            Some(&shifted_mp_at_t(n, m - n).scale(&pow2(m)) * &p_pow(m - n))
        }
        Branch::QLeft if n >= m => {
            Some(&q_pow(n - m) * &shifted_mp_at_t(m, n - m).scale(&pow2(n)))
        }
        _ => None,
    }
}

pub fn thm1_closed_form(m: u32, n: u32) -> WeylElement {
    let branch = if m >= n { Branch::PRight } else { Branch::QLeft };
    thm1_closed_form_branch(m, n, branch).expect("branch matches")
}

/// `ǎd(p)^m ǎd(q)^n . 1`.
pub fn ad_chain(m: u32, n: u32) -> WeylElement {
    let inner = WeylElement::check_ad_power(&WeylElement::q(), n, &WeylElement::one());
    WeylElement::check_ad_power(&WeylElement::p(), m, &inner)
}

/// `ǎd(q)^n ǎd(p)^m . 1`, the other application order.
pub fn ad_chain_q_outer(m: u32, n: u32) -> WeylElement {
    let inner = WeylElement::check_ad_power(&WeylElement::p(), m, &WeylElement::one());
    WeylElement::check_ad_power(&WeylElement::q(), n, &inner)
}

fn check_cap(m: u32, n: u32, cap: u64) -> Result<(), HarnessError> {
    let required = choose(m + n, m);
    if required > Integer::from(cap) {
        return Err(HarnessError::CapExceeded { required, cap });
    }
    Ok(())
}

/// All distinct words with `m` letters `p` and `n` letters `q`, one per
/// choice of `p` positions.
pub fn tmn_words(m: u32, n: u32) -> impl Iterator<Item = Word> {
    let len = (m + n) as usize;
    (0..len).combinations(m as usize).map(move |ps| {
        let mut letters = vec![Letter::Q; len];
        for i in ps {
            letters[i] = Letter::P;
        }
        Word(letters)
    })
}

/// `T_{m,n}` by normal-ordering every word separately.
pub fn tmn_bruteforce(m: u32, n: u32, cap: u64) -> Result<WeylElement, HarnessError> {
    check_cap(m, n, cap)?;
    Ok(tmn_words(m, n).fold(WeylElement::zero(), |acc, w| {
        &acc + &WeylElement::normal_order_word(&w)
    }))
}

/// Image of `T_{m,n}` under the word-reversing `p <-> q` map, built by
/// reversing each enumerated word. Equals `T_{n,m}`.
pub fn tmn_reversed_words(m: u32, n: u32, cap: u64) -> Result<WeylElement, HarnessError> {
    check_cap(m, n, cap)?;
    Ok(tmn_words(m, n).fold(WeylElement::zero(), |acc, w| {
        &acc + &WeylElement::normal_order_word(&w.reversed_swapped())
    }))
}

/// The Meixner-Pollaczek closed form of `T_{m,n}`.
pub fn thm2_closed_form(m: u32, n: u32) -> WeylElement {
    if m >= n {
        let c = binom_rat(m + n, n) / pow2(n);
        &shifted_mp_at_t(n, m - n).scale(&c) * &p_pow(m - n)
    } else {
        let c = binom_rat(m + n, m) / pow2(m);
        &q_pow(n - m) * &shifted_mp_at_t(m, n - m).scale(&c)
    }
}

/// `C(m+n, m) / 2^(m+n) ǎd(p)^m ǎd(q)^n . 1`.
pub fn tmn_from_ad_chain(m: u32, n: u32) -> WeylElement {
    ad_chain(m, n).scale(&(binom_rat(m + n, m) / pow2(m + n)))
}

pub fn check_thm1(m: u32, n: u32) -> CheckReport {
    CheckReport::from_constructions(
        IdentityId::Thm1,
        Variant::Stated,
        Params::ints(&[("m", m), ("n", n)]),
        &[
            ("p-outside sum", thm1_sum_p_outside(m, n)),
            ("q-outside sum", thm1_sum_q_outside(m, n)),
            ("ad chain", ad_chain(m, n)),
            ("closed form", thm1_closed_form(m, n)),
        ],
    )
}

pub fn check_thm2(m: u32, n: u32, cap: u64) -> CheckReport {
    let params = Params::ints(&[("m", m), ("n", n)]);
    match tmn_bruteforce(m, n, cap) {
        Err(e) => CheckReport::error(IdentityId::Thm2, Variant::Stated, params, &e),
        Ok(brute) => CheckReport::from_constructions(
            IdentityId::Thm2,
            Variant::Stated,
            params,
            &[
                ("word sum", brute),
                ("ad-chain rescaling", tmn_from_ad_chain(m, n)),
                ("closed form", thm2_closed_form(m, n)),
            ],
        ),
    }
}

pub fn check_prop_tmn(m: u32, n: u32, cap: u64) -> CheckReport {
    let params = Params::ints(&[("m", m), ("n", n)]);
    match tmn_bruteforce(m, n, cap) {
        Err(e) => CheckReport::error(IdentityId::PropTmn, Variant::Stated, params, &e),
        Ok(brute) => CheckReport::from_constructions(
            IdentityId::PropTmn,
            Variant::Stated,
            params,
            &[("word sum", brute), ("ad-chain rescaling", tmn_from_ad_chain(m, n))],
        ),
    }
}

pub fn check_prop_expan(m: u32, n: u32) -> CheckReport {
    CheckReport::from_constructions(
        IdentityId::PropExpan,
        Variant::Stated,
        Params::ints(&[("m", m), ("n", n)]),
        &[
            ("ad(p)^m ad(q)^n.1", ad_chain(m, n)),
            ("ad(q)^n ad(p)^m.1", ad_chain_q_outer(m, n)),
            ("p-outside sum", thm1_sum_p_outside(m, n)),
            ("q-outside sum", thm1_sum_q_outside(m, n)),
        ],
    )
}

fn seeded_rng(seed: u64, m: u32, n: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ ((m as u64) << 32) ^ ((n as u64) << 16))
}

/// A sparse random element with exponents `<= 6` and at most 5 terms.
pub fn random_element<R: Rng>(rng: &mut R) -> WeylElement {
    let terms = rng.gen_range(1..=5);
    WeylElement::from_terms((0..terms).map(|_| {
        (
            Monomial::new(rng.gen_range(0..=6), rng.gen_range(0..=6)),
            rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
        )
    }))
}

/// `ǎd(p) ǎd(q) X = ǎd(q) ǎd(p) X` on `X = q^m p^n + R` for a seeded
/// random `R`.
pub fn check_lem2_commutant(m: u32, n: u32, seed: u64) -> CheckReport {
    let mut rng = seeded_rng(seed, m, n);
    let x = &WeylElement::monomial(m, n, Rational::one()) + &random_element(&mut rng);
    let (p, q) = (WeylElement::p(), WeylElement::q());
    let pq = WeylElement::check_ad_apply(&p, &WeylElement::check_ad_apply(&q, &x));
    let qp = WeylElement::check_ad_apply(&q, &WeylElement::check_ad_apply(&p, &x));
    CheckReport::from_constructions(
        IdentityId::Lem2Commutant,
        Variant::Stated,
        Params::ints(&[("m", m), ("n", n)]),
        &[("ad(p)ad(q).X", pq), ("ad(q)ad(p).X", qp)],
    )
}

fn letter_element(l: Letter) -> WeylElement {
    match l {
        Letter::P => WeylElement::p(),
        Letter::Q => WeylElement::q(),
    }
}

/// Coefficient of `t1^m t2^n` in `(t1 ǎd(p) + t2 ǎd(q))^N . 1`, expanded
/// as a sum over operator words.
pub fn lemma1_operator_coefficient(m: u32, n: u32, cap: u64) -> Result<WeylElement, HarnessError> {
    check_cap(m, n, cap)?;
    Ok(tmn_words(m, n).fold(WeylElement::zero(), |acc, w| {
        let image = w.letters().iter().rev().fold(WeylElement::one(), |x, &l| {
            WeylElement::check_ad_apply(&letter_element(l), &x)
        });
        &acc + &image
    }))
}

/// Checks one `t1^m t2^n` coefficient of the two-variable key lemma.
fn lemma1_cell(m: u32, n: u32, cap: u64) -> Result<Option<(String, String, String)>, HarnessError> {
    let lhs = lemma1_operator_coefficient(m, n, cap)?;
    let rhs = tmn_bruteforce(m, n, cap)?.scale(&pow2(m + n));
    let binomial_route = ad_chain(m, n).scale(&binom_rat(m + n, m));
    if lhs != rhs {
        return Ok(Some((lhs.to_string(), rhs.to_string(), "2^N word sum".into())));
    }
    if lhs != binomial_route {
        return Ok(Some((lhs.to_string(), binomial_route.to_string(), "binomial ad chain".into())));
    }
    Ok(None)
}

/// All coefficients of total degree `N` in the two-variable key lemma.
pub fn check_lemma1(total: u32, cap: u64) -> CheckReport {
    let params = Params::ints(&[("N", total)]);
    let mut lhs_parts = Vec::new();
    for m in (0..=total).rev() {
        let n = total - m;
        match lemma1_cell(m, n, cap) {
            Err(e) => return CheckReport::error(IdentityId::Lem1, Variant::Stated, params, &e),
            Ok(Some((lhs, rhs, which))) => {
                return CheckReport {
                    identity: IdentityId::Lem1,
                    variant: Variant::Stated,
                    params,
                    verdict: Verdict::Fail,
                    lhs,
                    rhs,
                    detail: Some(format!("coefficient t1^{m} t2^{n} differs from {which}")),
                }
            }
            Ok(None) => {}
        }
        let value = ad_chain(m, n).scale(&binom_rat(total, m));
        lhs_parts.push(format!("[t1^{m} t2^{n}] {value}"));
    }
    let rendered = lhs_parts.join("; ");
    CheckReport {
        identity: IdentityId::Lem1,
        variant: Variant::Stated,
        params,
        verdict: Verdict::Pass,
        lhs: rendered.clone(),
        rhs: rendered,
        detail: None,
    }
}

/// `p^l f(T) = f(T+2l) p^l` and `q^l f(T) = f(T-2l) q^l` for `f = x^j`.
pub fn check_lem3_1(l: u32, j: u32) -> CheckReport {
    let f = Polynomial::monomial(j as usize);
    let ft = WeylElement::substitute_t(&f);
    let (pl, ql) = (p_pow(l), q_pow(l));
    let shift = rat_int(2 * l as i64);
    let p_side = (&pl * &ft, &WeylElement::substitute_t(&f.shift(&shift)) * &pl);
    let q_side = (&ql * &ft, &WeylElement::substitute_t(&f.shift(&-shift)) * &ql);
    let params = Params::ints(&[("l", l), ("j", j)]);
    if p_side.0 != p_side.1 {
        return CheckReport::from_constructions(
            IdentityId::Lem3_1,
            Variant::Stated,
            params,
            &[("p^l f(T)", p_side.0), ("f(T+2l) p^l", p_side.1)],
        );
    }
    let mut report = CheckReport::from_constructions(
        IdentityId::Lem3_1,
        Variant::Stated,
        params,
        &[("q^l f(T)", q_side.0), ("f(T-2l) q^l", q_side.1)],
    );
    if report.passed() {
        report.lhs = format!("{} ; {}", p_side.0, report.lhs);
        report.rhs = format!("{} ; {}", p_side.1, report.rhs);
    }
    report
}

/// `p^l q^l = ((1+T)/2)_l` and `q^l p^l = (-1)^l ((1-T)/2)_l`.
pub fn check_lem3_2(l: u32) -> CheckReport {
    let plus = Polynomial::linear(rat(1, 2), rat(1, 2));
    let minus = Polynomial::linear(rat(-1, 2), rat(1, 2));
    let sign = if l % 2 == 0 { Rational::one() } else { -Rational::one() };
    let pq = &p_pow(l) * &q_pow(l);
    let pq_t = WeylElement::substitute_t(&pochhammer_poly(&plus, l));
    let qp = &q_pow(l) * &p_pow(l);
    let qp_t = WeylElement::substitute_t(&pochhammer_poly(&minus, l)).scale(&sign);
    let params = Params::ints(&[("l", l)]);
    if pq != pq_t {
        return CheckReport::from_constructions(
            IdentityId::Lem3_2,
            Variant::Stated,
            params,
            &[("p^l q^l", pq), ("((1+T)/2)_l", pq_t)],
        );
    }
    let mut report = CheckReport::from_constructions(
        IdentityId::Lem3_2,
        Variant::Stated,
        params,
        &[("q^l p^l", qp), ("(-1)^l ((1-T)/2)_l", qp_t)],
    );
    if report.passed() {
        report.lhs = format!("{pq} ; {}", report.lhs);
        report.rhs = format!("{pq_t} ; {}", report.rhs);
    }
    report
}

/// The real binomial-sum form against the definitional `2F1` evaluation
/// at one grid point, together with the displayed transformation chain.
pub fn check_prop_genfun(n: u32, alpha: &Rational, t: &Rational) -> CheckReport {
    let params = Params(vec![
        ("n", ParamValue::Int(n as i64)),
        ("alpha", ParamValue::Rat(alpha.clone())),
        ("t", ParamValue::Rat(t.clone())),
    ]);
    let result = (|| -> Result<CheckReport, HarnessError> {
        let definitional = mp_definition_combination(n, alpha, t)?;
        let real_form = mp_real_form(n, alpha).eval(t);
        let chain = transformation_chain_check(n, alpha, t)?;
        let mut report = CheckReport::from_constructions(
            IdentityId::PropGenfun,
            Variant::Stated,
            params.clone(),
            &[
                ("definition", definitional),
                ("binomial sum", real_form.clone().into()),
                ("2F1 at 2", chain.at_two.clone().into()),
                ("2F1 at -1", chain.at_minus_one.clone().into()),
            ],
        );
        if chain.middle_by_continuation {
            report.detail = Some(match report.detail {
                Some(d) => format!("{d}; 2F1 at -1 evaluated by polynomial continuation"),
                None => "2F1 at -1 evaluated by polynomial continuation".into(),
            });
        }
        Ok(report)
    })();
    result.unwrap_or_else(|e| CheckReport::error(IdentityId::PropGenfun, Variant::Stated, params, &e))
}

/// `((1+x)/2)_l Q_k^((1+l)/2)(x + l)` as a polynomial in `x`.
fn remark14_polynomial(k: u32, l: u32) -> Polynomial {
    let plus = Polynomial::linear(rat(1, 2), rat(1, 2));
    let q = mp_real_form(k, &rat(1 + l as i64, 2)).shift(&rat_int(l as i64));
    &pochhammer_poly(&plus, l) * &q
}

/// `T_{m,n} q^(m-n)` as a polynomial in `T` for `m >= n`; the mirrored
/// form `p^(n-m) T_{m,n}` for `n >= m`.
pub fn check_remark14(m: u32, n: u32, variant: Variant, cap: u64) -> CheckReport {
    let params = Params::ints(&[("m", m), ("n", n)]);
    let id = IdentityId::Remark14;
    let brute = match tmn_bruteforce(m, n, cap) {
        Ok(b) => b,
        Err(e) => return CheckReport::error(id, variant, params, &e),
    };
    let (lhs, rhs) = match variant {
        Variant::Stated => {
            assert!(m >= n, "stated form needs m >= n");
            let c = binom_rat(m + n, n) / pow2(n);
            (&brute * &q_pow(m - n), WeylElement::substitute_t(&remark14_polynomial(n, m - n)).scale(&c))
        }
        Variant::DerivedMirror => {
            assert!(n >= m, "mirrored form needs n >= m");
            let c = binom_rat(m + n, m) / pow2(m);
            (&p_pow(n - m) * &brute, WeylElement::substitute_t(&remark14_polynomial(m, n - m)).scale(&c))
        }
    };
    let (lname, rname) = match variant {
        Variant::Stated => ("T_{m,n} q^(m-n)", "polynomial in T"),
        Variant::DerivedMirror => ("p^(n-m) T_{m,n}", "polynomial in T"),
    };
    CheckReport::from_constructions(id, variant, params, &[(lname, lhs), (rname, rhs)])
}

/// Explicit PBW expansion of `T_{m,n}` for `m >= n` (mirrored for `n >= m`).
pub fn remark15_pbw(m: u32, n: u32, variant: Variant) -> WeylElement {
    let (big, small) = match variant {
        Variant::Stated => (m, n),
        Variant::DerivedMirror => (n, m),
    };
    let d = big - small;
    let prefactor = Rational::from_integer(factorial(big) / factorial(d)) * binom_rat(m + n, small)
        / pow2(small);
    let base = rat_int(1 + d as i64);
    let mut total = WeylElement::zero();
    for k in 0..=small {
        let c = binom_rat(small, k) * pow2(k) / pochhammer_num(&base, k);
        let (qe, pe) = match variant {
            Variant::Stated => (k, k + d),
            Variant::DerivedMirror => (k + d, k),
        };
        total.add_term(Monomial::new(qe, pe), c);
    }
    total.scale(&prefactor)
}

pub fn check_remark15_pbw(m: u32, n: u32, variant: Variant, cap: u64) -> CheckReport {
    let params = Params::ints(&[("m", m), ("n", n)]);
    let id = IdentityId::Remark15;
    match variant {
        Variant::Stated => assert!(m >= n, "stated form needs m >= n"),
        Variant::DerivedMirror => assert!(n >= m, "mirrored form needs n >= m"),
    }
    match tmn_bruteforce(m, n, cap) {
        Err(e) => CheckReport::error(id, variant, params, &e),
        Ok(brute) => CheckReport::from_constructions(
            id,
            variant,
            params,
            &[("word sum", brute), ("PBW expansion", remark15_pbw(m, n, variant))],
        ),
    }
}

/// One unit of work in a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Thm1 { m: u32, n: u32 },
    Thm2 { m: u32, n: u32 },
    Lem1 { total: u32 },
    Lem2Commutant { m: u32, n: u32 },
    PropExpan { m: u32, n: u32 },
    Lem3_1 { l: u32, j: u32 },
    Lem3_2 { l: u32 },
    PropGenfun { n: u32, alpha: Rational, t: Rational },
    PropTmn { m: u32, n: u32 },
    Remark14 { m: u32, n: u32, variant: Variant },
    Remark15 { m: u32, n: u32, variant: Variant },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub word_cap: u64,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { word_cap: DEFAULT_WORD_CAP, seed: 0 }
    }
}

impl Cell {
    pub fn run(&self, cfg: &SweepConfig) -> CheckReport {
        let cap = cfg.word_cap;
        match self {
            Cell::Thm1 { m, n } => check_thm1(*m, *n),
            Cell::Thm2 { m, n } => check_thm2(*m, *n, cap),
            Cell::Lem1 { total } => check_lemma1(*total, cap),
            Cell::Lem2Commutant { m, n } => check_lem2_commutant(*m, *n, cfg.seed),
            Cell::PropExpan { m, n } => check_prop_expan(*m, *n),
            Cell::Lem3_1 { l, j } => check_lem3_1(*l, *j),
            Cell::Lem3_2 { l } => check_lem3_2(*l),
            Cell::PropGenfun { n, alpha, t } => check_prop_genfun(*n, alpha, t),
            Cell::PropTmn { m, n } => check_prop_tmn(*m, *n, cap),
            Cell::Remark14 { m, n, variant } => check_remark14(*m, *n, *variant, cap),
            Cell::Remark15 { m, n, variant } => check_remark15_pbw(*m, *n, *variant, cap),
        }
    }
}

/// Cells for one identity over rectangular ranges.
///
/// Two-parameter identities use every `(m, n)`. `LEM1` reads its degree
/// `N` from `ms`, `LEM3_1` uses `l = m, j = n`, `LEM3_2` uses `l = m`, and
/// `PROP_GENFUN` takes the polynomial degree from `ns` and sweeps the fixed
/// `α`/`t` grid. The remarks use the stated form when `m >= n` and the
/// mirrored form when `n >= m` (both on the diagonal).
pub fn cells_for(
    id: IdentityId,
    ms: std::ops::RangeInclusive<u32>,
    ns: std::ops::RangeInclusive<u32>,
) -> Vec<Cell> {
    let grid = || ms.clone().cartesian_product(ns.clone());
    match id {
        IdentityId::Thm1 => grid().map(|(m, n)| Cell::Thm1 { m, n }).collect(),
        IdentityId::Thm2 => grid().map(|(m, n)| Cell::Thm2 { m, n }).collect(),
        IdentityId::PropTmn => grid().map(|(m, n)| Cell::PropTmn { m, n }).collect(),
        IdentityId::PropExpan => grid().map(|(m, n)| Cell::PropExpan { m, n }).collect(),
        IdentityId::Lem2Commutant => grid().map(|(m, n)| Cell::Lem2Commutant { m, n }).collect(),
        IdentityId::Lem1 => ms.map(|total| Cell::Lem1 { total }).collect(),
        IdentityId::Lem3_1 => grid().map(|(l, j)| Cell::Lem3_1 { l, j }).collect(),
        IdentityId::Lem3_2 => ms.map(|l| Cell::Lem3_2 { l }).collect(),
        IdentityId::PropGenfun => genfun_cells(ns),
        IdentityId::Remark14 | IdentityId::Remark15 => grid()
            .flat_map(|(m, n)| remark_cells(id, m, n))
            .collect(),
    }
}

fn genfun_cells(ns: std::ops::RangeInclusive<u32>) -> Vec<Cell> {
    let mut out = Vec::new();
    for n in ns {
        for alpha in genfun_alphas() {
            for t in genfun_points() {
                out.push(Cell::PropGenfun { n, alpha: alpha.clone(), t });
            }
        }
    }
    out
}

fn remark_cells(id: IdentityId, m: u32, n: u32) -> Vec<Cell> {
    let mut variants = Vec::new();
    if m >= n {
        variants.push(Variant::Stated);
    }
    if n >= m {
        variants.push(Variant::DerivedMirror);
    }
    variants
        .into_iter()
        .map(|variant| match id {
            IdentityId::Remark14 => Cell::Remark14 { m, n, variant },
            _ => Cell::Remark15 { m, n, variant },
        })
        .collect()
}

/// Every checker over the triangle `m + n <= max_total_degree`.
pub fn suite_cells(max_total_degree: u32) -> Vec<Cell> {
    let d = max_total_degree;
    let tri = || (0..=d).flat_map(move |m| (0..=d - m).map(move |n| (m, n)));
    let mut cells = Vec::new();
    for id in IdentityId::ALL {
        match id {
            IdentityId::Lem1 => cells.extend((0..=d).map(|total| Cell::Lem1 { total })),
            IdentityId::Lem3_2 => cells.extend((0..=d).map(|l| Cell::Lem3_2 { l })),
            IdentityId::PropGenfun => cells.extend(genfun_cells(0..=d)),
            IdentityId::Remark14 | IdentityId::Remark15 => {
                cells.extend(tri().flat_map(|(m, n)| remark_cells(id, m, n)))
            }
            _ => {
                for (m, n) in tri() {
                    cells.extend(cells_for(id, m..=m, n..=n));
                }
            }
        }
    }
    cells
}

/// Runs cells concurrently; the result order is the input order.
pub fn run_cells(cells: &[Cell], cfg: &SweepConfig) -> Vec<CheckReport> {
    cells.par_iter().map(|c| c.run(cfg)).collect()
}

pub fn run_suite(max_total_degree: u32, cfg: &SweepConfig) -> Vec<CheckReport> {
    run_cells(&suite_cells(max_total_degree), cfg)
}
