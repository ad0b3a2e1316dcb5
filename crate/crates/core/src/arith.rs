//! Exact scalars: big integers, rationals, Gaussian rationals and the
//! combinatorial numbers built from them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator, so `==` is structural.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative argument {0} to {1}")]
    NegativeArgument(i64, &'static str),
}

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Checked rational division.
pub fn rat_div(a: &Rational, b: &Rational) -> Result<Rational, ArithError> {
    if b.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(a / b)
}

/// Renders a rational as `a` or `a/b`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a` or `a/b` with an optional leading sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Integer = num.parse().ok()?;
    let den: Integer = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn factorial(n: u32) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// Binomial coefficient `n choose k`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer, ArithError> {
    if n < 0 {
        return Err(ArithError::NegativeArgument(n, "binomial"));
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i);
        acc = acc.div_floor(&Integer::from(i + 1));
    }
    Ok(acc)
}

/// Binomial coefficient for non-negative arguments.
pub fn choose(n: u32, k: u32) -> Integer {
    binomial(n as i64, k as i64).expect("non-negative")
}

/// Rising factorial `(x)_l = x (x+1) ... (x+l-1)` with `(x)_0 = 1`.
pub fn pochhammer_num(x: &Rational, l: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..l {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// `2^k` as a rational.
pub fn pow2(k: u32) -> Rational {
    Rational::from_integer(Integer::one() << k as usize)
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::from_real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_real(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussianRational { re: &self.re * c, im: &self.im * c }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_real(-Rational::one()),
            _ => -Self::i(),
        }
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::from_real(re)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", fmt_rational(&im_abs))
        };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{im_part}")
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            write!(f, "{} {sign} {im_part}", fmt_rational(&self.re))
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: GaussianRational) -> GaussianRational {
        &self + &o
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: GaussianRational) -> GaussianRational {
        &self - &o
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: GaussianRational) -> GaussianRational {
        &self * &o
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

/// Rising factorial over the Gaussian rationals.
pub fn pochhammer_gauss(x: &GaussianRational, l: u32) -> GaussianRational {
    let mut acc = GaussianRational::one();
    let mut factor = x.clone();
    let one = GaussianRational::one();
    for _ in 0..l {
        acc = &acc * &factor;
        factor = &factor + &one;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pascal(n: usize) -> Vec<Vec<Integer>> {
        let mut rows = vec![vec![Integer::one()]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![Integer::one(); i + 1];
            for k in 1..i {
                row[k] = &prev[k - 1] + &prev[k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(7, 3) * Rational::one(), rat(7, 3));
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2).denom(), &int(2));
        assert_eq!(rat_div(&rat(3, 4), &Rational::zero()), Err(ArithError::DivisionByZero));
        assert_eq!(rat_div(&rat(3, 4), &rat(1, 2)).unwrap(), rat(3, 2));
        assert_eq!(rat(0, 5), Rational::zero());
        assert_eq!(rat(0, 5).denom(), &int(1));
    }

    #[test]
    fn gaussian_basics() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_real(rat_int(-1)));
        let a = GaussianRational::new(rat_int(1), rat_int(1));
        let b = GaussianRational::new(rat_int(1), rat_int(-1));
        assert_eq!(&a * &b, GaussianRational::from_real(rat_int(2)));
        assert_eq!(i.inv().unwrap(), -GaussianRational::i());
        assert_eq!(GaussianRational::zero().inv(), Err(ArithError::DivisionByZero));
        for k in -8..8 {
            assert_eq!(GaussianRational::i_pow(k), i.powi(k).unwrap());
        }
    }

    #[test]
    fn gaussian_display() {
        assert_eq!(GaussianRational::from_real(rat(3, 2)).to_string(), "3/2");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!(GaussianRational::new(rat_int(1), rat(-1, 2)).to_string(), "1 - 1/2*i");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        assert_eq!(binomial(9, 0).unwrap(), int(1));
        assert_eq!(binomial(3, 5).unwrap(), int(0));
        assert_eq!(binomial(3, -1).unwrap(), int(0));
        assert!(binomial(-1, 0).is_err());
        // frozen from the Pascal-triangle oracle
        let rows = pascal(12);
        assert_eq!(rows[12][6], int(924));
        assert_eq!(binomial(12, 6).unwrap(), int(924));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let rows = pascal(30);
        for n in 0..=30i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k).unwrap(), rows[n as usize][k as usize]);
            }
        }
        for n in 1..=30 {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k).unwrap(),
                    binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer_num(&rat(5, 7), 0), Rational::one());
        assert_eq!(pochhammer_num(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer_num(&rat_int(-3), 5), Rational::zero());
        assert_eq!(pochhammer_num(&rat_int(1), 5), rat_int(120));
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_gauss() -> impl Strategy<Value = GaussianRational> {
        (arb_rat(), arb_rat()).prop_map(|(a, b)| GaussianRational::new(a, b))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * rat_div(&Rational::one(), &a).unwrap(), Rational::one());
            }
        }

        #[test]
        fn gaussian_field_axioms(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
                prop_assert_eq!((&b * &a).checked_div(&a).unwrap(), b.clone());
            }
        }

        #[test]
        fn pochhammer_splits(x in arb_rat(), a in 0u32..=10, b in 0u32..=10) {
            let shifted = &x + rat_int(a as i64);
            prop_assert_eq!(
                pochhammer_num(&x, a + b),
                pochhammer_num(&x, a) * pochhammer_num(&shifted, b)
            );
        }
    }
}
