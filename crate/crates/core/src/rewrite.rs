//! Single-step rewriting: repeatedly replace one adjacent `pq` by `qp + 1`
//! until every word is sorted. Exponentially slower than the closed-form
//! block reduction; kept as an independent reference and for benchmarking.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::weyl::{Letter, Monomial, WeylElement, Word};

fn first_pq(w: &[Letter]) -> Option<usize> {
    w.windows(2).position(|pair| pair == [Letter::P, Letter::Q])
}

fn add_word(map: &mut BTreeMap<Vec<Letter>, Rational>, w: Vec<Letter>, c: Rational) {
    let entry = map.entry(w).or_insert_with(Rational::zero);
    *entry += c;
}

/// Normal-orders a linear combination of words by single-step rewriting.
pub fn rewrite_combination<I>(words: I) -> WeylElement
where
    I: IntoIterator<Item = (Word, Rational)>,
{
    let mut pending: BTreeMap<Vec<Letter>, Rational> = BTreeMap::new();
    for (w, c) in words {
        add_word(&mut pending, w.0, c);
    }
    let mut out = WeylElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        match first_pq(&w) {
            None => {
                let q = w.iter().filter(|&&l| l == Letter::Q).count() as u32;
                out.add_term(Monomial::new(q, w.len() as u32 - q), c);
            }
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let mut dropped = w;
                dropped.drain(i..i + 2);
                add_word(&mut pending, swapped, c.clone());
                add_word(&mut pending, dropped, c);
            }
        }
    }
    out
}

pub fn rewrite_word(w: &Word) -> WeylElement {
    rewrite_combination([(w.clone(), Rational::one())])
}
