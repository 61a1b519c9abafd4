//! General polynomials as Gröbner basis elements: terms kept sorted under
//! the active order, leading coefficient one.

use std::cmp::Ordering;


use super::engine::GbElement;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;

#[derive(Clone, Debug)]
pub(crate) struct SortedPoly<F> {
    nvars: usize,
    /// Strictly decreasing under the order in use.
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> SortedPoly<F> {
    pub(crate) fn from_polynomial(p: &Polynomial<F>, order: &MonomialOrder) -> Self {
        SortedPoly { nvars: p.nvars(), terms: p.sorted_terms(order) }
    }

    pub(crate) fn into_polynomial(self) -> Polynomial<F> {
        Polynomial::from_terms(self.nvars, self.terms)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(mut self) -> Option<Self> {
        let lc = self.terms.first()?.1.clone();
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in &mut self.terms {
                *c = c.clone() * inv.clone();
            }
        }
        Some(self)
    }

    /// `self - c · m · other`, merging the sorted term lists.
    fn sub_scaled(&self, other: &Self, m: &Monomial, c: &F, order: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, k)| (t.mul(m), k.clone() * c.clone())).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (t, k) = b.next().unwrap();
                    out.push((t, -k));
                }
                (Some((ta, _)), Some((tb, _))) => match order.compare(ta, tb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (t, k) = b.next().unwrap();
                        out.push((t, -k));
                    }
                    Ordering::Equal => {
                        let (t, ka) = a.next().unwrap().clone();
                        let (_, kb) = b.next().unwrap();
                        let s = ka - kb;
                        if !s.is_zero() {
                            out.push((t, s));
                        }
                    }
                },
            }
        }
        SortedPoly { nvars: self.nvars, terms: out }
    }

    /// Full reduction against arbitrary (not necessarily monic) divisors,
    /// trying them in the given order.
    pub(crate) fn remainder(&self, divisors: &[Self], order: &MonomialOrder) -> Self {
        let mut p = self.clone();
        let mut rem: Vec<(Monomial, F)> = Vec::new();
        while let Some((lm, lc)) = p.terms.first().cloned() {
            let divisor = divisors.iter().find_map(|g| {
                let (gm, gc) = g.terms.first()?;
                lm.div(gm).map(|q| (g, q, lc.clone() / gc.clone()))
            });
            match divisor {
                Some((g, q, c)) => p = p.sub_scaled(g, &q, &c, order),
                None => {
                    rem.push((lm, lc));
                    p.terms.remove(0);
                }
            }
        }
        SortedPoly { nvars: self.nvars, terms: rem }
    }
}

impl<F: Field> GbElement for SortedPoly<F> {
    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn s_poly(&self, other: &Self, order: &MonomialOrder) -> Option<Self> {
        let lcm = self.lead().lcm(other.lead());
        let ma = lcm.div(self.lead()).unwrap();
        let mb = lcm.div(other.lead()).unwrap();
        let scaled = SortedPoly { nvars: self.nvars, terms: Vec::new() }.sub_scaled(self, &ma, &-F::one(), order);
        let s = scaled.sub_scaled(other, &mb, &F::one(), order);
        s.make_monic()
    }

    fn reduce(&self, basis: &[Self], order: &MonomialOrder) -> Option<Self> {
        self.remainder(basis, order).make_monic()
    }
}
