//! Coefficient-free fast path for ideals generated by monomials and
//! pure-difference binomials `a - b`.
//!
//! Such ideals have reduced Gröbner bases of the same shape, so S-pairs and
//! reductions are pure exponent arithmetic.

use std::cmp::Ordering;

use super::engine::{self, GbElement};
use super::EffortCaps;
use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;

/// `lead - tail`, or the monomial `lead` when `tail` is `None`. `lead` is the
/// greater monomial under the order the binomial was built with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    lead: Monomial,
    tail: Option<Monomial>,
}

impl Binomial {
    /// `a - b` oriented under `order`; `None` when `a == b`.
    pub fn new(a: Monomial, b: Monomial, order: &MonomialOrder) -> Option<Self> {
        match order.compare(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, tail: Some(b) }),
            Ordering::Less => Some(Binomial { lead: b, tail: Some(a) }),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Binomial { lead: m, tail: None }
    }

    /// Orients `Option` monomials `a - b` (either may be zero).
    fn from_parts(a: Option<Monomial>, b: Option<Monomial>, order: &MonomialOrder) -> Option<Self> {
        match (a, b) {
            (None, None) => None,
            (Some(m), None) | (None, Some(m)) => Some(Binomial::monomial(m)),
            (Some(a), Some(b)) => Binomial::new(a, b, order),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> Option<&Monomial> {
        self.tail.as_ref()
    }

    pub fn is_monomial(&self) -> bool {
        self.tail.is_none()
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        std::iter::once(&self.lead).chain(self.tail.as_ref())
    }

    pub fn degree(&self) -> u32 {
        self.monomials().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.tail.as_ref().is_none_or(|t| t.degree() == self.lead.degree())
    }

    pub fn involves(&self, v: usize) -> bool {
        self.monomials().any(|m| m.exp(v) > 0)
    }

    /// Re-orients under a different order.
    pub fn reorient(&self, order: &MonomialOrder) -> Self {
        Binomial::from_parts(Some(self.lead.clone()), self.tail.clone(), order).expect("nonzero")
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial, order: &MonomialOrder) -> Option<Self> {
        Binomial::from_parts(Some(f(&self.lead)), self.tail.as_ref().map(&f), order)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Binomial { lead: self.lead.mul(m), tail: self.tail.as_ref().map(|t| t.mul(m)) }
    }

    pub fn to_polynomial<F: Field>(&self) -> Polynomial<F> {
        match &self.tail {
            None => Polynomial::monomial(self.lead.clone()),
            Some(t) => Polynomial::binomial(self.lead.clone(), t.clone()),
        }
    }

    /// Recognizes a monomial or a pure-difference binomial (up to a scalar).
    pub fn from_polynomial<F: Field>(p: &Polynomial<F>, order: &MonomialOrder) -> Option<Self> {
        if let Some(m) = p.as_monomial() {
            return Some(Binomial::monomial(m.clone()));
        }
        p.as_pure_binomial(order).map(|(a, b)| Binomial { lead: a, tail: Some(b) })
    }
}

impl GbElement for Binomial {
    fn lead(&self) -> &Monomial {
        &self.lead
    }

    fn s_poly(&self, other: &Self, order: &MonomialOrder) -> Option<Self> {
        let lcm = self.lead.lcm(&other.lead);
        let a = other.tail.as_ref().map(|t| t.mul(&lcm.div(&other.lead).unwrap()));
        let b = self.tail.as_ref().map(|t| t.mul(&lcm.div(&self.lead).unwrap()));
        Binomial::from_parts(a, b, order)
    }

    fn reduce(&self, basis: &[Self], order: &MonomialOrder) -> Option<Self> {
        let mut f = self.clone();
        // Leading term.
        'lead: loop {
            for g in basis {
                if let Some(q) = f.lead.div(&g.lead) {
                    let a = g.tail.as_ref().map(|t| t.mul(&q));
                    f = Binomial::from_parts(a, f.tail.take(), order)?;
                    continue 'lead;
                }
            }
            break;
        }
        // Trailing term; each step strictly lowers it.
        'tail: while let Some(t) = f.tail.clone() {
            for g in basis {
                if let Some(q) = t.div(&g.lead) {
                    f.tail = g.tail.as_ref().map(|gt| gt.mul(&q));
                    debug_assert!(f.tail.as_ref().is_none_or(|nt| order.greater(&f.lead, nt)));
                    continue 'tail;
                }
            }
            break;
        }
        Some(f)
    }
}

/// Reduced Gröbner basis of an ideal generated by monomials and
/// pure-difference binomials.
pub fn binomial_groebner(gens: &[Binomial], order: &MonomialOrder, caps: &EffortCaps) -> Result<Vec<Binomial>> {
    let oriented: Vec<Binomial> = gens.iter().map(|g| g.reorient(order)).collect();
    engine::buchberger(oriented, order, caps)
}

/// Normal form with respect to `basis`; `None` means zero.
pub fn binomial_normal_form(f: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    f.reorient(order).reduce(basis, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn orientation_and_zero() {
        let o = MonomialOrder::revlex(3);
        let b = Binomial::new(m(&[1, 0, 1]), m(&[0, 2, 0]), &o).unwrap();
        assert_eq!(b.lead(), &m(&[0, 2, 0]));
        assert!(Binomial::new(m(&[1, 0, 0]), m(&[1, 0, 0]), &o).is_none());
    }

    #[test]
    fn reduction_of_cube_by_relation() {
        let o = MonomialOrder::revlex(3);
        let g = Binomial::new(m(&[0, 2, 0]), m(&[1, 0, 1]), &o).unwrap();
        let f = Binomial::monomial(m(&[0, 3, 0]));
        let r = binomial_normal_form(&f, &[g], &o).unwrap();
        assert_eq!(r, Binomial::monomial(m(&[1, 1, 1])));
    }

    #[test]
    fn three_five_four_groebner() {
        let o = MonomialOrder::revlex(3);
        let gens = vec![
            Binomial::new(m(&[0, 1, 1]), m(&[3, 0, 0]), &o).unwrap(),
            Binomial::new(m(&[0, 2, 0]), m(&[1, 0, 1]), &o).unwrap(),
            Binomial::new(m(&[0, 0, 2]), m(&[2, 1, 0]), &o).unwrap(),
        ];
        let gb = binomial_groebner(&gens, &o, &EffortCaps::default()).unwrap();
        let mut leads: Vec<_> = gb.iter().map(|g| g.lead().clone()).collect();
        leads.sort();
        assert_eq!(leads, vec![m(&[0, 2, 0]), m(&[2, 1, 0]), m(&[3, 0, 0])]);
    }
}
