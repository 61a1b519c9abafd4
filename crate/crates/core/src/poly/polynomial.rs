use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};


use super::{Monomial, MonomialOrder};
use crate::scalar::Field;

/// A polynomial with coefficients in `F`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, F::one())
    }

    /// `a - b`.
    pub fn binomial(a: Monomial, b: Monomial) -> Self {
        Self::monomial(a) - Self::monomial(b)
    }

    pub fn variable(nvars: usize, v: usize) -> Self {
        Self::monomial(Monomial::var(nvars, v, 1))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms sorted from greatest to least under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, F)> {
        let mut v: Vec<(Monomial, F)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone() * c.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Lowest-degree homogeneous component.
    pub fn initial_form(&self) -> Self {
        let low = self.min_degree();
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == low).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Homogenizes with the variable slot `u`, which must be absent.
    pub fn homogenize(&self, u: usize) -> Self {
        let top = self.degree();
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            debug_assert_eq!(m.exp(u), 0);
            out.add_term(m.with_exp(u, top - m.degree()), c.clone());
        }
        out
    }

    /// Substitutes `x_v = value`.
    pub fn substitute(&self, v: usize, value: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for _ in 0..m.exp(v) {
                coeff = coeff * value.clone();
            }
            out.add_term(m.with_exp(v, 0), coeff);
        }
        out
    }

    pub fn remove_var(&self, v: usize) -> Self {
        assert!(self.terms.keys().all(|m| m.exp(v) == 0), "variable {v} still occurs");
        Polynomial {
            nvars: self.nvars - 1,
            terms: self.terms.iter().map(|(m, c)| (m.remove_var(v), c.clone())).collect(),
        }
    }

    pub fn extend(&self, extra: usize) -> Self {
        Polynomial {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect(),
        }
    }

    pub fn involves(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Largest power of `x_v` dividing every term.
    pub fn var_content(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    /// Exact division by a monomial; panics if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.div(m).expect("monomial divides every term"), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self, order: &MonomialOrder) -> Option<Self> {
        let (lm, lc) = divisor.leading_term(order)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.nvars);
        while let Some((m, c)) = rest.leading_term(order) {
            let q = m.div(&lm)?;
            let qc = c.clone() / lc.clone();
            rest = rest - divisor.mul_term(&q, &qc);
            quotient.add_term(q, qc);
        }
        Some(quotient)
    }

    /// `Some((a, b))` when the polynomial is `c·(a - b)` for a nonzero scalar
    /// `c`, with `a` the leading monomial under `order`.
    pub fn as_pure_binomial(&self, order: &MonomialOrder) -> Option<(Monomial, Monomial)> {
        if self.len() != 2 {
            return None;
        }
        let mut it = self.terms.iter();
        let (m1, c1) = it.next().unwrap();
        let (m2, c2) = it.next().unwrap();
        if c1.clone() + c2.clone() != F::zero() {
            return None;
        }
        if order.greater(m1, m2) {
            Some((m1.clone(), m2.clone()))
        } else {
            Some((m2.clone(), m1.clone()))
        }
    }

    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect(),
        }
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &rhs.terms {
            out = out + self.mul_term(m, c);
        }
        out
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let p: Polynomial<Q> = Polynomial::binomial(m(&[0, 2, 0]), m(&[1, 0, 1]));
        assert!((p.clone() - p.clone()).is_zero());
        let sq = &p * &p;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.div_exact(&p, &MonomialOrder::revlex(3)), Some(p.clone()));
        let x0 = Polynomial::<Q>::variable(3, 0);
        assert_eq!(p.div_exact(&x0, &MonomialOrder::revlex(3)), None);
    }

    #[test]
    fn homogenize_and_initial_form() {
        let cusp: Polynomial<Q> = Polynomial::binomial(m(&[0, 2, 0]), m(&[3, 0, 0]));
        let h = cusp.homogenize(2);
        assert!(h.is_homogeneous());
        assert_eq!(h, Polynomial::binomial(m(&[0, 2, 1]), m(&[3, 0, 0])));
        assert_eq!(cusp.initial_form(), Polynomial::monomial(m(&[0, 2, 0])));
        assert_eq!(h.substitute(2, &Q::from_i64(1)), cusp);
    }

    #[test]
    fn pure_binomial_detection() {
        let o = MonomialOrder::revlex(3);
        let p: Polynomial<Q> = Polynomial::binomial(m(&[1, 0, 1]), m(&[0, 2, 0]));
        assert_eq!(p.as_pure_binomial(&o), Some((m(&[0, 2, 0]), m(&[1, 0, 1]))));
        let q = p.scale(&Q::from_i64(-3));
        assert!(q.as_pure_binomial(&o).is_some());
        let r = p + Polynomial::monomial(m(&[0, 2, 0]));
        assert!(r.as_pure_binomial(&o).is_none());
    }
}
