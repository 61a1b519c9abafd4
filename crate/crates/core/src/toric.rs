//! The defining ideal `I` of `k[t^{n_0}, …, t^{n_c}]` in `k[x_0, …, x_c]`,
//! and the pure-power relations `x_i^d − x^α` read off from semigroup
//! arithmetic alone.

use crate::error::{Error, Result};
use crate::groebner::{binomial_groebner, binomial_normal_form, eliminate_binomials, Binomial, EffortCaps};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarNames};
use crate::scalar::Field;
use crate::semigroup::NumericalSemigroup;

/// Kernel of `x_j ↦ t^{n_j}`, held as its reduced Gröbner basis under
/// revlex (`x_c ≻ … ≻ x_0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialIdeal {
    semigroup: NumericalSemigroup,
    generators: Vec<Binomial>,
}

impl BinomialIdeal {
    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.semigroup.embedding_dimension()
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::revlex(self.nvars())
    }

    /// `Σ α_j n_j`, the degree of `x^α` under `x_j ↦ t^{n_j}`.
    pub fn weight(&self, m: &Monomial) -> u64 {
        weight(&self.semigroup, m)
    }

    pub fn contains(&self, f: &Binomial) -> bool {
        binomial_normal_form(f, &self.generators, &self.order()).is_none()
    }

    pub fn polynomials<F: Field>(&self) -> Vec<Polynomial<F>> {
        self.generators.iter().map(Binomial::to_polynomial).collect()
    }

    pub fn format(&self) -> Vec<String> {
        let names = VarNames::new(self.nvars());
        let order = self.order();
        self.generators.iter().map(|g| names.format_polynomial(&g.to_polynomial::<crate::Q>(), &order)).collect()
    }
}

fn weight(s: &NumericalSemigroup, m: &Monomial) -> u64 {
    s.generators().iter().zip(m.exponents()).map(|(&n, &e)| n * e as u64).sum()
}

/// `ker(x_j ↦ t^{n_j})` by eliminating `t` from `(x_j − t^{n_j})`.
///
/// Certified on construction: every generator balances under the weights,
/// and each `x_i^{n_0} − x_0^{n_i}` reduces to zero.
pub fn defining_ideal(s: &NumericalSemigroup, caps: &EffortCaps) -> Result<BinomialIdeal> {
    let n = s.embedding_dimension();
    if n < 2 {
        return Err(Error::ParameterOutOfRange(format!("{s} has embedding dimension {n} < 2")));
    }
    let ext = MonomialOrder::revlex(n + 1);
    let gens: Vec<Binomial> = s
        .generators()
        .iter()
        .enumerate()
        .map(|(j, &nj)| {
            let t = Monomial::var(n + 1, n, nj as u32);
            Binomial::new(Monomial::var(n + 1, j, 1), t, &ext).expect("distinct monomials")
        })
        .collect();
    let order = MonomialOrder::revlex(n);
    let kernel: Vec<Binomial> = eliminate_binomials(&gens, &[n], caps)?
        .iter()
        .map(|g| g.map_monomials(|m| m.remove_var(n), &order).expect("nonzero"))
        .collect();
    let generators = binomial_groebner(&kernel, &order, caps)?;
    let ideal = BinomialIdeal { semigroup: s.clone(), generators };

    for g in &ideal.generators {
        let tail_weight = g.tail().map(|t| ideal.weight(t));
        if g.is_monomial() || tail_weight != Some(ideal.weight(g.lead())) {
            return Err(Error::Internal(format!("{s}: unbalanced generator {g:?}")));
        }
    }
    let n0 = s.multiplicity() as u32;
    for (i, &ni) in s.generators().iter().enumerate().skip(1) {
        let f = Binomial::new(Monomial::var(n, i, n0), Monomial::var(n, 0, ni as u32), &order).expect("i > 0");
        if !ideal.contains(&f) {
            return Err(Error::Internal(format!("{s}: x{i}^{n0} - x0^{ni} not in the eliminated ideal")));
        }
    }
    Ok(ideal)
}

fn check_index(s: &NumericalSemigroup, i: usize) -> Result<()> {
    let c = s.codimension();
    if i == 0 || i > c {
        return Err(Error::ParameterOutOfRange(format!("index {i} outside 1..={c}")));
    }
    Ok(())
}

/// Factorizations `α ≠ δ·e_i` of `δ·n_i` with `Σ α ≥ δ`.
fn power_relations(s: &NumericalSemigroup, i: usize, delta: u32) -> Vec<Vec<u32>> {
    s.factorizations(delta as u64 * s.generators()[i])
        .into_iter()
        .filter(|a| a.iter().sum::<u32>() >= delta && !(a[i] == delta && a.iter().sum::<u32>() == delta))
        .collect()
}

/// Least `δ` with `δ·n_i = Σ α_j n_j` for some `α ≠ δ·e_i` having
/// `Σ α_j ≥ δ`; at most `n_0`, witnessed by `n_0·n_i = n_i·n_0`.
pub fn critical_degree(s: &NumericalSemigroup, i: usize) -> Result<u32> {
    check_index(s, i)?;
    (1..=s.multiplicity() as u32)
        .find(|&delta| !power_relations(s, i, delta).is_empty())
        .ok_or_else(|| Error::Internal(format!("{s}: no power relation for x{i} up to degree n0")))
}

/// `x_i^d − x^α ∈ I` with `Σ α ≥ d`: among all such `α`, the largest total
/// degree, then the lexicographically least exponent vector.
pub fn power_witness(s: &NumericalSemigroup, i: usize, d: u32) -> Result<Binomial> {
    let critical = critical_degree(s, i)?;
    if d < critical {
        return Err(Error::DegreeTooSmall { degree: d, critical });
    }
    let best = power_relations(s, i, d)
        .into_iter()
        .min_by(|a, b| {
            let (sa, sb) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            sb.cmp(&sa).then_with(|| a.cmp(b))
        })
        .ok_or_else(|| Error::Internal(format!("{s}: no power relation for x{i} in degree {d}")))?;
    let n = s.embedding_dimension();
    Binomial::new(Monomial::var(n, i, d), Monomial::new(&best), &MonomialOrder::revlex(n))
        .ok_or_else(|| Error::Internal("trivial power relation".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideals_equal;
    use crate::poly::parse_polynomial;
    use crate::Q;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::canonicalize(g).unwrap()
    }

    fn polys(text: &[&str], n: usize) -> Vec<Polynomial<Q>> {
        text.iter().map(|t| parse_polynomial(t, &VarNames::new(n)).unwrap()).collect()
    }

    #[test]
    fn defining_ideal_examples() {
        let caps = EffortCaps::default();
        let i = defining_ideal(&sg(&[2, 3]), &caps).unwrap();
        assert!(ideals_equal(&i.polynomials(), &polys(&["x1^2 - x0^3"], 2), &i.order(), &caps).unwrap());

        let i = defining_ideal(&sg(&[3, 4, 5]), &caps).unwrap();
        let expected = polys(&["x1*x2 - x0^3", "x1^2 - x0*x2", "x2^2 - x0^2*x1"], 3);
        assert!(ideals_equal(&i.polynomials(), &expected, &i.order(), &caps).unwrap());

        let i = defining_ideal(&sg(&[6, 7, 8, 9]), &caps).unwrap();
        let o = i.order();
        for f in polys(&["x1*x2 - x0*x3", "x1^2 - x0*x2", "x2^2 - x1*x3", "x3^2 - x0^3"], 4) {
            assert!(i.contains(&Binomial::from_polynomial(&f, &o).unwrap()));
        }
    }

    #[test]
    fn generators_vanish_under_substitution() {
        let caps = EffortCaps::default();
        for g in [vec![3, 5, 7], vec![4, 6, 9], vec![5, 6, 13], vec![7, 8, 10], vec![11, 13, 14, 15, 19]] {
            let s = sg(&g);
            let i = defining_ideal(&s, &caps).unwrap();
            for b in i.generators() {
                assert_eq!(i.weight(b.lead()), i.weight(b.tail().unwrap()));
            }
        }
    }

    #[test]
    fn critical_degree_examples() {
        assert_eq!(critical_degree(&sg(&[3, 4, 5]), 1), Ok(2));
        assert_eq!(critical_degree(&sg(&[3, 4, 5]), 2), Ok(2));
        assert_eq!(critical_degree(&sg(&[2, 3]), 1), Ok(2));
        assert!(critical_degree(&sg(&[2, 3]), 0).is_err());
        assert!(critical_degree(&sg(&[2, 3]), 2).is_err());
    }

    #[test]
    fn power_witness_examples() {
        let o3 = MonomialOrder::revlex(3);
        let s = sg(&[3, 4, 5]);
        assert_eq!(power_witness(&s, 1, 2).unwrap(), Binomial::new(Monomial::new(&[0, 2, 0]), Monomial::new(&[1, 0, 1]), &o3).unwrap());
        assert_eq!(power_witness(&s, 2, 2).unwrap(), Binomial::new(Monomial::new(&[0, 0, 2]), Monomial::new(&[2, 1, 0]), &o3).unwrap());
        let o4 = MonomialOrder::revlex(4);
        assert_eq!(
            power_witness(&sg(&[6, 7, 8, 9]), 3, 2).unwrap(),
            Binomial::new(Monomial::new(&[0, 0, 0, 2]), Monomial::new(&[3, 0, 0, 0]), &o4).unwrap()
        );
        assert_eq!(power_witness(&s, 1, 1), Err(Error::DegreeTooSmall { degree: 1, critical: 2 }));
    }

    #[test]
    fn witnesses_lie_in_the_eliminated_ideal() {
        let caps = EffortCaps::default();
        for g in [vec![3, 4, 5], vec![5, 6, 13], vec![6, 7, 8, 9], vec![7, 8, 10], vec![8, 9, 11, 14]] {
            let s = sg(&g);
            let ideal = defining_ideal(&s, &caps).unwrap();
            for i in 1..=s.codimension() {
                let d = critical_degree(&s, i).unwrap();
                assert!(d <= s.multiplicity() as u32);
                for extra in 0..3 {
                    assert!(ideal.contains(&power_witness(&s, i, d + extra).unwrap()));
                }
            }
        }
    }
}
