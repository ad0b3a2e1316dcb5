//! Canonical (PBW) arithmetic in the Weyl algebra generated by `p`, `q`
//! with `pq - qp = 1`.
//!
//! Every element is stored as a finite sum `sum c_{a,b} q^a p^b` with all
//! `q` factors to the left. Because the ordered monomials form a basis,
//! two elements are equal exactly when their term maps are equal.

use std::cmp::Ordering;
use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{fmt_rational, pow2, Integer, Rational};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("exponent {0} is too large")]
    ExponentOverflow(i64),
}

/// The ordered monomial `q^q p^p`.
///
/// Ordering puts higher total degree first, then higher `q` exponent, which
/// is also the rendering order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub q: u32,
    pub p: u32,
}

impl Monomial {
    pub fn new(q: u32, p: u32) -> Self {
        Monomial { q, p }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.p
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.q.cmp(&self.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    P,
    Q,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::P => Letter::Q,
            Letter::Q => Letter::P,
        }
    }
}

/// An unnormalized product of generators, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image under the anti-automorphism `p <-> q` with reversed order.
    pub fn reversed_swapped(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swapped()).collect())
    }

    /// Parses a string of `p`/`q` letters (either case).
    pub fn parse(s: &str) -> Option<Word> {
        s.chars()
            .map(|c| match c {
                'p' | 'P' => Some(Letter::P),
                'q' | 'Q' => Some(Letter::Q),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::P => "p",
                Letter::Q => "q",
            })?;
        }
        Ok(())
    }
}

/// An element of the Weyl algebra in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylElement {
    terms: BTreeMap<Monomial, Rational>,
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Integer coefficients `k! C(b,k) C(c,k)` of `p^b q^c = sum_k coeff_k q^(c-k) p^(b-k)`.
fn block_coefficients(b: u32, c: u32) -> Vec<Integer> {
    let kmax = b.min(c);
    let mut out = Vec::with_capacity(kmax as usize + 1);
    let mut coeff = Integer::one();
    out.push(coeff.clone());
    for k in 0..kmax {
        coeff = coeff * (b - k) * (c - k) / (k + 1);
        out.push(coeff.clone());
    }
    out
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rational::one())
    }

    pub fn p() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    /// `T = pq + qp = 2qp + 1`.
    pub fn t() -> Self {
        let mut t = Self::monomial(1, 1, Rational::from_integer(2.into()));
        t.add_term(Monomial::new(0, 0), Rational::one());
        t
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c q^a p^b`.
    pub fn monomial(a: u32, b: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, Monomial::new(a, b), c);
        WeylElement { terms }
    }

    /// Like [`WeylElement::monomial`] but accepting signed exponents.
    pub fn try_monomial(a: i64, b: i64, c: Rational) -> Result<Self, WeylError> {
        let conv = |e: i64| {
            if e < 0 {
                Err(WeylError::NegativeExponent(e))
            } else {
                u32::try_from(e).map_err(|_| WeylError::ExponentOverflow(e))
            }
        };
        Ok(Self::monomial(conv(a)?, conv(b)?, c))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            accumulate(&mut terms, m, c);
        }
        WeylElement { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, q: u32, p: u32) -> Rational {
        self.terms
            .get(&Monomial::new(q, p))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        accumulate(&mut self.terms, m, c);
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WeylElement {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Canonical form of `p^b q^c` via the rook-number closed form.
    pub fn reduce_pq_block(b: u32, c: u32) -> Self {
        let coeffs = block_coefficients(b, c);
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, a)| (Monomial::new(c - k as u32, b - k as u32), Rational::from_integer(a))),
        )
    }

    /// Right multiplication by a single generator.
    pub fn mul_letter(&self, letter: Letter) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            match letter {
                Letter::P => accumulate(&mut terms, Monomial::new(m.q, m.p + 1), c.clone()),
                Letter::Q => {
                    // q^a p^b q = q^(a+1) p^b + b q^a p^(b-1)
                    accumulate(&mut terms, Monomial::new(m.q + 1, m.p), c.clone());
                    if m.p > 0 {
                        accumulate(&mut terms, Monomial::new(m.q, m.p - 1), c * Integer::from(m.p));
                    }
                }
            }
        }
        WeylElement { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Canonical form of a word.
    pub fn normal_order_word(w: &Word) -> Self {
        w.letters()
            .iter()
            .fold(Self::one(), |acc, &l| acc.mul_letter(l))
    }

    /// `ǎd(A).X = AX + XA`.
    pub fn check_ad_apply(a: &Self, x: &Self) -> Self {
        &(a * x) + &(x * a)
    }

    /// `ǎd(A)^m.X`.
    pub fn check_ad_power(a: &Self, m: u32, x: &Self) -> Self {
        (0..m).fold(x.clone(), |acc, _| Self::check_ad_apply(a, &acc))
    }

    /// Evaluates `f` at the algebra element `T` by Horner's rule.
    pub fn substitute_t(f: &Polynomial) -> Self {
        let t = Self::t();
        f.coeffs().iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &t) + &Self::constant(c.clone())
        })
    }

    /// Sum of all `n!` ordered products of the given elements.
    pub fn symmetrized_product(elems: &[Self]) -> Self {
        let mut total = Self::zero();
        for perm in (0..elems.len()).permutations(elems.len()) {
            let prod = perm.iter().fold(Self::one(), |acc, &i| &acc * &elems[i]);
            total = &total + &prod;
        }
        total
    }

    /// Sum over permutations of `ǎd(A_σ(1)) ... ǎd(A_σ(n))` applied to `x`.
    pub fn symmetrized_check_ad(elems: &[Self], x: &Self) -> Self {
        let mut total = Self::zero();
        for perm in (0..elems.len()).permutations(elems.len()) {
            let image = perm
                .iter()
                .rev()
                .fold(x.clone(), |acc, &i| Self::check_ad_apply(&elems[i], &acc));
            total = &total + &image;
        }
        total
    }

    /// Image under the anti-automorphism fixing the relation that swaps
    /// `p` and `q` and reverses products. On the canonical basis it maps
    /// `q^a p^b` to `q^b p^a`.
    pub fn reversal(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.p, m.q), c.clone())),
        )
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }
}

impl From<Rational> for WeylElement {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, o: &WeylElement) -> WeylElement {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        WeylElement { terms }
    }
}

impl<'a> Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, o: &WeylElement) -> WeylElement {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            accumulate(&mut terms, *m, -c);
        }
        WeylElement { terms }
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn mul(self, o: &WeylElement) -> WeylElement {
        let mut terms = BTreeMap::new();
        for (l, c1) in &self.terms {
            for (r, c2) in &o.terms {
                // (q^a p^b)(q^c p^d) = q^a (p^b q^c) p^d
                let c12 = c1 * c2;
                for (k, a) in block_coefficients(l.p, r.q).into_iter().enumerate() {
                    let k = k as u32;
                    let m = Monomial::new(l.q + r.q - k, l.p + r.p - k);
                    accumulate(&mut terms, m, &c12 * a);
                }
            }
        }
        WeylElement { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for WeylElement {
            type Output = WeylElement;
            fn $f(self, o: WeylElement) -> WeylElement {
                (&self).$f(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, var: &str, e: u32) -> fmt::Result {
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

impl fmt::Display for WeylElement {
    /// Renders e.g. `q^2*p^2 + 4*q*p + 2`: highest total degree first, then
    /// by descending `q` exponent, unit coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut need_star = false;
            if !a.is_one() || m.degree() == 0 {
                write!(f, "{}", fmt_rational(&a))?;
                need_star = true;
            }
            if m.q > 0 {
                if need_star {
                    write!(f, "*")?;
                }
                fmt_power(f, "q", m.q)?;
                need_star = true;
            }
            if m.p > 0 {
                if need_star {
                    write!(f, "*")?;
                }
                fmt_power(f, "p", m.p)?;
            }
        }
        Ok(())
    }
}

/// `2^k` times an element.
pub fn times_pow2(x: &WeylElement, k: u32) -> WeylElement {
    x.scale(&pow2(k))
}
