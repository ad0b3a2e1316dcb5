//! Meixner-Pollaczek polynomials at angle `π/2`.
//!
//! Two independent routes are provided:
//!
//! * [`mp_real_form`] builds the real polynomial
//!   `Q_n^(α)(x) = n! i^(-n) P_n^(α)(ix/2; π/2)` directly as the binomial sum
//!   `sum_k C(n,k) (-1)^k (α - x/2)_k (α + x/2)_(n-k)`.
//! * [`mp_definition_eval`] evaluates `P_n^(α)(x; π/2)` from its terminating
//!   `2F1` definition over the Gaussian rationals, where `e^(iπ/2) = i` and
//!   `1 - e^(-iπ) = 2` are exact.
//!
//! [`transformation_chain_check`] ties them together through the
//! intermediate `2F1` at argument `-1`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{choose, factorial, pochhammer_gauss, pochhammer_num, rat, GaussianRational, Rational};
use crate::poly::{pochhammer_poly, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MpError {
    #[error("lower parameter Pochhammer ({param})_{k} vanishes")]
    VanishingLowerPochhammer { param: String, k: u32 },
}

/// `Q_n^(α)(x)` as an exact polynomial in `x`, of degree exactly `n`.
pub fn mp_real_form(n: u32, alpha: &Rational) -> Polynomial {
    let half = rat(1, 2);
    let minus = Polynomial::linear(-&half, alpha.clone());
    let plus = Polynomial::linear(half, alpha.clone());
    let mut total = Polynomial::zero();
    for k in 0..=n {
        let mut c = Rational::from_integer(choose(n, k));
        if k % 2 == 1 {
            c = -c;
        }
        let term = &pochhammer_poly(&minus, k) * &pochhammer_poly(&plus, n - k);
        total = &total + &term.scale(&c);
    }
    total
}

/// Terminating `2F1[-n, b; c; z] = sum_(k=0..n) (-n)_k (b)_k / ((c)_k k!) z^k`.
pub fn hyp2f1_terminating(
    n: u32,
    b: &GaussianRational,
    c: &GaussianRational,
    z: &GaussianRational,
) -> Result<GaussianRational, MpError> {
    let mut total = GaussianRational::zero();
    // term_k built incrementally: ratio (k - n)(b + k) z / ((c + k)(k + 1))
    let mut term = GaussianRational::one();
    let mut lower = GaussianRational::one();
    for k in 0..=n {
        total = &total + &term;
        if k == n {
            break;
        }
        let kk = GaussianRational::from_real(Rational::from_integer(k.into()));
        let upper_ratio = &(&kk - &GaussianRational::from_real(Rational::from_integer(n.into())))
            * &(b + &kk);
        let c_k = c + &kk;
        let next_lower = &lower * &c_k;
        if next_lower.is_zero() {
            return Err(MpError::VanishingLowerPochhammer { param: c.to_string(), k: k + 1 });
        }
        term = (&(&term * &upper_ratio) * z)
            .scale(&Rational::new(1.into(), (k + 1).into()))
            .checked_div(&c_k)
            .expect("nonzero lower factor");
        lower = next_lower;
    }
    Ok(total)
}

/// `P_n^(α)(x; π/2) = ((2α)_n / n!) i^n 2F1[-n, α + ix; 2α; 2]`.
pub fn mp_definition_eval(
    n: u32,
    alpha: &Rational,
    x: &GaussianRational,
) -> Result<GaussianRational, MpError> {
    let two_alpha = GaussianRational::from_real(alpha * Rational::from_integer(2.into()));
    let b = &GaussianRational::from_real(alpha.clone()) + &(&GaussianRational::i() * x);
    let z = GaussianRational::from_real(Rational::from_integer(2.into()));
    let series = hyp2f1_terminating(n, &b, &two_alpha, &z)?;
    let prefactor = pochhammer_gauss(&two_alpha, n)
        .scale(&Rational::new(1.into(), factorial(n)));
    Ok(&(&prefactor * &GaussianRational::i_pow(n as i64)) * &series)
}

/// `n! i^(-n) P_n^(α)(it/2; π/2)` computed from the definition. Should be
/// real and equal to `mp_real_form(n, α)` at `t`.
pub fn mp_definition_combination(
    n: u32,
    alpha: &Rational,
    t: &Rational,
) -> Result<GaussianRational, MpError> {
    let arg = GaussianRational::new(Rational::zero(), t / Rational::from_integer(2.into()));
    let p = mp_definition_eval(n, alpha, &arg)?;
    Ok((&p * &GaussianRational::i_pow(-(n as i64))).scale(&Rational::from_integer(factorial(n))))
}

/// Which expression of the chain disagrees with its neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainLink {
    /// `(2α)_n 2F1[..; 2]` vs `(α + x/2)_n 2F1[..; -1]`.
    ArgumentTwoToMinusOne,
    /// `(α + x/2)_n 2F1[..; -1]` vs the binomial sum.
    MinusOneToBinomialSum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub at_two: Rational,
    pub at_minus_one: Rational,
    pub binomial_sum: Rational,
    /// The middle expression had a vanishing lower Pochhammer at this `x`
    /// and was evaluated from its polynomial form instead.
    pub middle_by_continuation: bool,
    pub failed_link: Option<ChainLink>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.failed_link.is_none()
    }
}

fn real_part(g: GaussianRational) -> Rational {
    debug_assert!(g.is_real());
    g.re
}

/// The middle expression as a polynomial in `x`: each term's ratio
/// `(α + x/2)_n / (1 - n - α - x/2)_k` is divided out exactly in `Q[x]`.
fn minus_one_form_polynomial(n: u32, alpha: &Rational) -> Polynomial {
    let half = rat(1, 2);
    let a = Polynomial::linear(half.clone(), alpha.clone());
    let upper = Polynomial::linear(-&half, alpha.clone());
    let lower_base = Polynomial::linear(-half, Rational::from_integer((1 - n as i64).into()) - alpha);
    let prefactor = pochhammer_poly(&a, n);
    let mut total = Polynomial::zero();
    for k in 0..=n {
        // (-n)_k / k! * (-1)^k = C(n,k)
        let c = Rational::from_integer(choose(n, k));
        let (quot, rem) = prefactor
            .div_rem(&pochhammer_poly(&lower_base, k))
            .expect("nonzero divisor");
        assert!(rem.is_zero(), "rising factorial ratio is polynomial");
        total = &total + &(&quot * &pochhammer_poly(&upper, k)).scale(&c);
    }
    total
}

/// Evaluates the three displayed expressions
/// `(2α)_n 2F1[-n, α-x/2; 2α; 2]`,
/// `(α+x/2)_n 2F1[-n, α-x/2; 1-n-α-x/2; -1]` and the binomial sum
/// at a real point `x` and reports the first disagreeing link.
pub fn transformation_chain_check(
    n: u32,
    alpha: &Rational,
    x: &Rational,
) -> Result<ChainReport, MpError> {
    let half_x = x / Rational::from_integer(2.into());
    let b = GaussianRational::from_real(alpha - &half_x);
    let two_alpha = alpha * Rational::from_integer(2.into());

    let at_two = pochhammer_num(&two_alpha, n)
        * real_part(hyp2f1_terminating(
            n,
            &b,
            &GaussianRational::from_real(two_alpha.clone()),
            &GaussianRational::from_real(Rational::from_integer(2.into())),
        )?);

    let lower = Rational::from_integer((1 - n as i64).into()) - alpha - &half_x;
    let direct = hyp2f1_terminating(
        n,
        &b,
        &GaussianRational::from_real(lower),
        &GaussianRational::from_real(-Rational::one()),
    );
    let (at_minus_one, middle_by_continuation) = match direct {
        Ok(v) => (pochhammer_num(&(alpha + &half_x), n) * real_part(v), false),
        Err(_) => (minus_one_form_polynomial(n, alpha).eval(x), true),
    };

    let binomial_sum = mp_real_form(n, alpha).eval(x);

    let failed_link = if at_two != at_minus_one {
        Some(ChainLink::ArgumentTwoToMinusOne)
    } else if at_minus_one != binomial_sum {
        Some(ChainLink::MinusOneToBinomialSum)
    } else {
        None
    };
    Ok(ChainReport { at_two, at_minus_one, binomial_sum, middle_by_continuation, failed_link })
}
