//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_rational, GaussianRational, Rational};

/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_gauss(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs.iter().rev().fold(GaussianRational::zero(), |acc, c| {
            &(&acc * x) + &GaussianRational::from_real(c.clone())
        })
    }

    /// `f(x + s)`.
    pub fn shift(&self, s: &Rational) -> Self {
        let x_plus_s = Self::linear(Rational::one(), s.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &x_plus_s) + &Self::constant(c.clone())
        })
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division by a nonzero polynomial: `(quotient, remainder)`.
    pub fn div_rem(&self, d: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let dd = d.degree()?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().expect("nonempty") / lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

/// Rising factorial of a polynomial: `base (base+1) ... (base+l-1)`.
pub fn pochhammer_poly(base: &Polynomial, l: u32) -> Polynomial {
    let mut acc = Polynomial::one();
    let mut factor = base.clone();
    let one = Polynomial::one();
    for _ in 0..l {
        acc = &acc * &factor;
        factor = &factor + &one;
    }
    acc
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (a.is_one(), var.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{var}")?,
                (false, true) => write!(f, "{}", fmt_rational(&a))?,
                (false, false) => write!(f, "{}*{var}", fmt_rational(&a))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use proptest::prelude::*;

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn shifts() {
        assert_eq!(Polynomial::x().shift(&rat_int(2)), p(&[(2, 1), (1, 1)]));
        assert_eq!(Polynomial::monomial(2).shift(&rat_int(1)), p(&[(1, 1), (2, 1), (1, 1)]));
        let f = p(&[(3, 1), (-1, 2), (0, 1), (5, 1)]);
        assert_eq!(&f * &Polynomial::one(), f);
        assert_eq!(f.shift(&rat(1, 3)).shift(&rat(-1, 3)), f);
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[(1, 1), (0, 1), (0, 1)]).degree(), Some(0));
        assert_eq!(p(&[(0, 1)]).degree(), None);
        assert!((&Polynomial::x() - &Polynomial::x()).is_zero());
    }

    #[test]
    fn rising_factorials() {
        let base = Polynomial::linear(rat(1, 2), rat(1, 2));
        assert_eq!(pochhammer_poly(&base, 0), Polynomial::one());
        assert_eq!(pochhammer_poly(&base, 1), base);
        // (1+x)(3+x)/4
        assert_eq!(pochhammer_poly(&base, 2), p(&[(3, 4), (1, 1), (1, 4)]));
    }

    #[test]
    fn division() {
        let f = p(&[(3, 4), (1, 1), (1, 4)]);
        let d = p(&[(1, 2), (1, 2)]);
        let (q, r) = f.div_rem(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p(&[(3, 2), (1, 2)]));
        let (q, r) = Polynomial::monomial(2).div_rem(&p(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(q, p(&[(-1, 1), (1, 1)]));
        assert_eq!(r, p(&[(1, 1)]));
        assert!(f.div_rem(&Polynomial::zero()).is_none());
        let (q, r) = p(&[(1, 1)]).div_rem(&Polynomial::x()).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[(1, 1)]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(3, 4), (1, 1), (1, 4)]).to_string(), "1/4*x^2 + x + 3/4");
        assert_eq!(p(&[(0, 1), (-1, 1)]).to_string(), "-x");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-9i64..9, 1i64..5), 0..5)
            .prop_map(|cs| Polynomial::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn pochhammer_poly_splits(f in arb_poly(), a in 0u32..5, b in 0u32..5) {
            let shifted = &f + &Polynomial::constant(rat_int(a as i64));
            prop_assert_eq!(
                pochhammer_poly(&f, a + b),
                &pochhammer_poly(&f, a) * &pochhammer_poly(&shifted, b)
            );
        }

        #[test]
        fn shift_is_evaluation(f in arb_poly(), s in -5i64..5, x in -5i64..5) {
            prop_assert_eq!(f.shift(&rat_int(s)).eval(&rat_int(x)), f.eval(&rat_int(x + s)));
        }

        #[test]
        fn division_identity(f in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let (q, r) = f.div_rem(&d).unwrap();
            prop_assert_eq!(&(&q * &d) + &r, f);
            prop_assert!(r.degree().map_or(true, |rd| rd < d.degree().unwrap()));
        }

        #[test]
        fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
        }
    }
}
