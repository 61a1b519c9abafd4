//! Monomial ideals: Hilbert series and multiplicity, colon ideals, box
//! counts, and graded Betti numbers computed two independent ways.

mod betti;
mod hilbert;

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, VarNames};

pub use betti::BettiTable;
pub use hilbert::HilbertData;

/// A monomial ideal stored by its minimal generators, sorted by degree and
/// then by reverse lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    mingens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>, nvars: usize) -> Vec<Monomial> {
    let order = MonomialOrder::revlex(nvars);
    gens.sort_by(|a, b| order.compare(a, b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // Ascending degree, so any divisor of g precedes it.
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        assert!(gens.iter().all(|g| g.nvars() == nvars), "generator in the wrong ring");
        MonomialIdeal { nvars, mingens: minimalize(gens, nvars) }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, mingens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mingens(&self) -> &[Monomial] {
        &self.mingens
    }

    pub fn num_gens(&self) -> usize {
        self.mingens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.mingens.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.mingens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.mingens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.mingens.iter().all(|g| self.contains(g))
    }

    /// Degrees of the minimal generators, ascending.
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.mingens.iter().map(Monomial::degree).collect()
    }

    pub fn add(&self, m: Monomial) -> MonomialIdeal {
        let mut gens = self.mingens.clone();
        gens.push(m);
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.mingens.iter().chain(&other.mingens).cloned())
    }

    /// `L : m`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.mingens.iter().map(|g| g.colon(m)))
    }

    /// `L : K` for a monomial ideal `K`: the intersection of `L : g` over the
    /// generators `g` of `K`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.mingens {
            let q = self.colon(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        acc.unwrap_or_else(|| MonomialIdeal::new(self.nvars, [Monomial::one(self.nvars)]))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.mingens.len() * other.mingens.len());
        for a in &self.mingens {
            for b in &other.mingens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.mingens.iter().map(|g| g.permute(perm)))
    }

    pub fn lcm_all(&self) -> Monomial {
        self.mingens.iter().fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    pub fn format(&self, names: &VarNames) -> String {
        let parts: Vec<String> = self.mingens.iter().map(|g| names.format_monomial(g)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(&VarNames::new(self.nvars)))
    }
}

/// Number of standard monomials of `(M, x_1^d, …, x_c^d) / (x_1^d, …, x_c^d)`
/// for `M = ∏ x_j^{μ_j}`: the lattice points `μ_j ≤ γ_j < d`, which number
/// `∏ (d − μ_j)`. Both the product and a direct count are computed and must
/// agree.
pub fn box_count(exponents: &[u32], d: u32) -> Result<u64> {
    if exponents.iter().any(|&m| m > d) {
        return Err(Error::ParameterOutOfRange(format!("exponents {exponents:?} exceed d = {d}")));
    }
    let product: u64 = exponents.iter().map(|&m| (d - m) as u64).product();
    let brute = count_box_points(exponents, d);
    if product != brute {
        return Err(Error::Internal(format!("box count mismatch: {product} vs {brute}")));
    }
    Ok(product)
}

fn count_box_points(exponents: &[u32], d: u32) -> u64 {
    let c = exponents.len();
    let mut count = 0u64;
    let mut point = vec![0u32; c];
    loop {
        if point.iter().zip(exponents).all(|(g, m)| g >= m) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == c {
                return count;
            }
            point[k] += 1;
            if point[k] < d {
                break;
            }
            point[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn minimal_generators_and_order() {
        let l = MonomialIdeal::new(3, [m(&[0, 2, 1]), m(&[0, 2, 0]), m(&[0, 0, 2]), m(&[0, 1, 1]), m(&[0, 2, 0])]);
        assert_eq!(l.mingens(), &[m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]);
        assert!(l.contains(&m(&[5, 1, 3])));
        assert!(!l.contains(&m(&[5, 1, 0])));
    }

    #[test]
    fn colon_examples() {
        let l = MonomialIdeal::new(4, [m(&[0, 2, 0, 0]), m(&[0, 0, 2, 0]), m(&[0, 0, 0, 2])]);
        assert_eq!(l.colon(&m(&[0, 1, 1, 0])), MonomialIdeal::new(4, [m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0]), m(&[0, 0, 0, 2])]));
        let l = MonomialIdeal::new(3, [m(&[0, 3, 0]), m(&[0, 0, 3])]);
        assert_eq!(l.colon(&m(&[0, 2, 1])), MonomialIdeal::new(3, [m(&[0, 1, 0]), m(&[0, 0, 2])]));
        assert_eq!(l.colon(&Monomial::one(3)), l);
    }

    #[test]
    fn colon_by_ideal() {
        let ci = MonomialIdeal::new(3, [m(&[0, 2, 0]), m(&[0, 0, 2])]);
        let l = ci.add(m(&[0, 1, 1]));
        assert_eq!(ci.colon_ideal(&l), MonomialIdeal::new(3, [m(&[0, 1, 0]), m(&[0, 0, 1])]));
    }

    #[test]
    fn box_count_examples() {
        assert_eq!(box_count(&[1, 1], 2).unwrap(), 1);
        assert_eq!(box_count(&[2, 1, 0], 3).unwrap(), 6);
        assert_eq!(box_count(&[0, 0, 0], 2).unwrap(), 8);
        assert!(box_count(&[3], 2).is_err());
    }
}
