use std::fmt;

use smallvec::SmallVec;

/// Exponent vector over a fixed ambient set of variables.
///
/// The derived `Ord` is plain lexicographic on the exponents; it is only
/// used for canonical storage, never as a term order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn new(exps: &[u32]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn var(nvars: usize, v: usize, power: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[v] = power;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect() }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() })
    }

    /// `self / gcd(self, other)`: the colon of a principal monomial ideal.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.saturating_sub(b)).collect(),
        }
    }

    pub fn with_exp(&self, v: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[v] = e;
        m
    }

    /// Drops the variable slot `v`.
    pub fn remove_var(&self, v: usize) -> Monomial {
        let mut m = self.clone();
        m.exps.remove(v);
        m
    }

    /// Appends `extra` zero slots.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut m = self.clone();
        m.exps.extend(std::iter::repeat_n(0, extra));
        m
    }

    /// Renames variables: slot `v` of the result holds exponent `perm_inv[v]`
    /// of `self`, i.e. variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = SmallVec::from_elem(0, self.nvars());
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial { exps }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::new(&[1, 2, 0]);
        let b = Monomial::new(&[0, 1, 3]);
        assert_eq!(a.mul(&b), Monomial::new(&[1, 3, 3]));
        assert_eq!(a.lcm(&b), Monomial::new(&[1, 2, 3]));
        assert_eq!(a.gcd(&b), Monomial::new(&[0, 1, 0]));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.div(&Monomial::new(&[1, 1, 0])), Some(Monomial::new(&[0, 1, 0])));
        assert_eq!(a.colon(&b), Monomial::new(&[1, 1, 0]));
        assert_eq!(a.degree(), 3);
        assert!(Monomial::new(&[1, 0, 0]).is_coprime(&b));
        assert_eq!(a.permute(&[2, 0, 1]), Monomial::new(&[2, 0, 1]));
    }
}
