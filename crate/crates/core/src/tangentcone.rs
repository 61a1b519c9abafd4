//! The tangent cone `G = P/J` of a monomial curve, where `J` is the ideal of
//! lowest-degree forms of the elements of `I`.
//!
//! `J` is computed with global orders only. Let `I^h ⊂ P[u]` be the
//! homogenization of `I` (homogenize the generators, saturate by `u`). For a
//! homogeneous `F ∈ I^h`, the terms carrying the highest power of `u` are
//! exactly the lowest-degree form of `F(u = 1)` times that power. Under an
//! order that compares total degree, then the power of `u` (more is larger),
//! then revlex, those terms are the initial form of `F` for a weight vector,
//! so the corresponding parts of a Gröbner basis of `I^h` generate them all.

use std::collections::HashMap;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{
    binomial_groebner, binomial_normal_form, quotient_binomials_by_monomial, saturate_binomials, Binomial, EffortCaps,
};
use crate::monomideal::{HilbertData, MonomialIdeal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarNames};
use crate::scalar::Field;
use crate::toric::BinomialIdeal;

/// A homogeneous ideal generated by monomials and pure-difference binomials,
/// with its reduced Gröbner basis under revlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    nvars: usize,
    generators: Vec<Binomial>,
    gb: Vec<Binomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "CI")]
    CompleteIntersection,
    #[serde(rename = "ACI")]
    AlmostCompleteIntersection,
    #[serde(rename = "other")]
    Other,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::CompleteIntersection => "CI",
            Classification::AlmostCompleteIntersection => "ACI",
            Classification::Other => "other",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedInvariants {
    pub dim: usize,
    pub codim: usize,
    pub multiplicity: u64,
    /// `Q(t)` with `HS(P/J) = Q(t) / (1 − t)^dim`, lowest degree first.
    pub hilbert_numerator: Vec<i64>,
    /// Degrees of a minimal homogeneous generating set, ascending.
    pub min_gen_degrees: Vec<u32>,
    pub max_gen_degree: u32,
    pub num_min_gens: usize,
}

impl GradedInvariants {
    pub fn classify(&self) -> Classification {
        if self.num_min_gens == self.codim {
            Classification::CompleteIntersection
        } else if self.num_min_gens == self.codim + 1 {
            Classification::AlmostCompleteIntersection
        } else {
            Classification::Other
        }
    }
}

impl GradedIdeal {
    pub fn new(nvars: usize, generators: Vec<Binomial>, caps: &EffortCaps) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::DimensionMismatch(g.nvars(), nvars));
        }
        if !generators.iter().all(Binomial::is_homogeneous) {
            return Err(Error::NotHomogeneous);
        }
        let gb = binomial_groebner(&generators, &MonomialOrder::revlex(nvars), caps)?;
        Ok(GradedIdeal { nvars, generators, gb })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::revlex(self.nvars)
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    /// Reduced Gröbner basis under revlex, sorted by decreasing leading monomial.
    pub fn gb(&self) -> &[Binomial] {
        &self.gb
    }

    pub fn polynomials<F: Field>(&self) -> Vec<Polynomial<F>> {
        self.gb.iter().map(Binomial::to_polynomial).collect()
    }

    pub fn contains(&self, f: &Binomial) -> bool {
        binomial_normal_form(f, &self.gb, &self.order()).is_none()
    }

    pub fn contains_ideal(&self, other: &GradedIdeal) -> bool {
        other.gb.iter().all(|g| self.contains(g))
    }

    pub fn format(&self) -> Vec<String> {
        let names = VarNames::new(self.nvars);
        let order = self.order();
        self.gb.iter().map(|g| names.format_polynomial(&g.to_polynomial::<crate::Q>(), &order)).collect()
    }

    /// `L = (LM_≺(g) : g ∈ J)`.
    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gb.iter().map(|g| g.lead().clone()))
    }

    /// Degrees of the minimal generators: in each degree `e`, the count
    /// `dim J_e − dim (m·J)_e`, both read off leading ideals.
    pub fn minimal_generator_degrees(&self, caps: &EffortCaps) -> Result<Vec<u32>> {
        let top = self.gb.iter().map(Binomial::degree).max().unwrap_or(0);
        let n = self.nvars;
        let products: Vec<Binomial> =
            (0..n).flat_map(|v| self.gb.iter().map(move |g| g.mul_monomial(&Monomial::var(n, v, 1)))).collect();
        let mj = GradedIdeal::new(n, products, caps)?;
        let hf_j = self.leading_ideal().hilbert_function(top as usize);
        let hf_mj = mj.leading_ideal().hilbert_function(top as usize);
        let mut degrees = Vec::new();
        for e in 1..=top as usize {
            // dim J_e − dim (mJ)_e = HF(P/mJ, e) − HF(P/J, e).
            let count = hf_mj[e] - hf_j[e];
            if count < 0 {
                return Err(Error::Internal(format!("negative generator count in degree {e}")));
            }
            degrees.extend(std::iter::repeat_n(e as u32, count as usize));
        }
        Ok(degrees)
    }

    pub fn hilbert(&self) -> HilbertData {
        self.leading_ideal().hilbert()
    }

    pub fn graded_invariants(&self, caps: &EffortCaps) -> Result<GradedInvariants> {
        let h = self.hilbert();
        let min_gen_degrees = self.minimal_generator_degrees(caps)?;
        Ok(GradedInvariants {
            dim: h.dim,
            codim: self.nvars - h.dim,
            multiplicity: h.multiplicity.max(0) as u64,
            hilbert_numerator: h.reduced,
            max_gen_degree: min_gen_degrees.iter().copied().max().unwrap_or(0),
            num_min_gens: min_gen_degrees.len(),
            min_gen_degrees,
        })
    }

    /// `x_0` is a nonzerodivisor on `P/J`, i.e. `J : x_0 = J`.
    pub fn is_cohen_macaulay(&self, caps: &EffortCaps) -> Result<bool> {
        let x0 = Monomial::var(self.nvars, 0, 1);
        let quotient = quotient_binomials_by_monomial(&self.gb, &x0, caps)?;
        Ok(quotient.iter().all(|f| self.contains(f)))
    }

    /// `dim_k (P/J)_e` for `e = 0..=upto`, by linear algebra on the presented
    /// generators rather than on a Gröbner basis. `J_e` is spanned by vectors
    /// `m·a − m·b` and `m·a`; within a connected component of the graph they
    /// span, the dimension is the component size when it contains a monomial
    /// generator's multiple, and one less otherwise.
    pub fn hilbert_function_direct(&self, upto: u32) -> Vec<u64> {
        let n = self.nvars;
        (0..=upto)
            .map(|e| {
                let basis = monomials_of_degree(n, e);
                let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
                let mut uf = UnionFind::new(basis.len());
                for g in &self.generators {
                    let dg = g.lead().degree();
                    if dg > e {
                        continue;
                    }
                    for m in monomials_of_degree(n, e - dg) {
                        let a = index[&g.lead().mul(&m)];
                        match g.tail() {
                            Some(t) => uf.union(a, index[&t.mul(&m)]),
                            None => uf.mark(a),
                        }
                    }
                }
                let dim_j = uf.span_dimension();
                basis.len() as u64 - dim_j
            })
            .collect()
    }
}

fn monomials_of_degree(n: usize, e: u32) -> Vec<Monomial> {
    fn rec(exps: &mut Vec<u32>, v: usize, rest: u32, out: &mut Vec<Monomial>) {
        if v + 1 == exps.len() {
            exps[v] = rest;
            out.push(Monomial::new(exps));
            exps[v] = 0;
            return;
        }
        for k in 0..=rest {
            exps[v] = k;
            rec(exps, v + 1, rest - k, out);
        }
        exps[v] = 0;
    }
    let mut out = Vec::with_capacity(binomial(e as u64 + n as u64 - 1, n as u64 - 1) as usize);
    if n > 0 {
        rec(&mut vec![0; n], 0, e, &mut out);
    } else if e == 0 {
        out.push(Monomial::one(0));
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
    marked: Vec<bool>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), marked: vec![false; n] }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.marked[rb] |= self.marked[ra];
        }
    }

    fn mark(&mut self, a: usize) {
        let r = self.find(a);
        self.marked[r] = true;
    }

    fn span_dimension(&mut self) -> u64 {
        let mut sizes: HashMap<usize, u64> = HashMap::new();
        for a in 0..self.parent.len() {
            *sizes.entry(self.find(a)).or_insert(0) += 1;
        }
        sizes.iter().map(|(&root, &size)| if self.marked[root] { size } else { size - 1 }).sum()
    }
}

/// The tangent-cone ideal `J` of `P/I`, checked to have dimension one and
/// multiplicity `n_0`.
pub fn tangent_cone(ideal: &BinomialIdeal, caps: &EffortCaps) -> Result<GradedIdeal> {
    let n = ideal.nvars();
    let u = n;
    let ext = MonomialOrder::revlex(n + 1);
    let homogenized: Vec<Binomial> = ideal
        .generators()
        .iter()
        .map(|g| {
            let (a, b) = (g.lead().extend(1), g.tail().expect("pure difference").extend(1));
            let (da, db) = (a.degree(), b.degree());
            let (a, b) = if da >= db {
                (a, b.mul(&Monomial::var(n + 1, u, da - db)))
            } else {
                (a.mul(&Monomial::var(n + 1, u, db - da)), b)
            };
            Binomial::new(a, b, &ext).expect("distinct after homogenizing")
        })
        .collect();
    let saturated = saturate_binomials(&homogenized, u, caps)?;

    let top = saturated.iter().map(Binomial::degree).max().unwrap_or(0).max(caps.max_degree);
    let big = top as u64 + 1;
    let mut weights = vec![big; n + 1];
    weights[u] = big + 1;
    let weighted = MonomialOrder::WeightedDegRevLex { weights, priority: (0..=n).rev().collect() };
    let gb = binomial_groebner(&saturated, &weighted, caps)?;

    let order = MonomialOrder::revlex(n);
    let generators: Vec<Binomial> = gb
        .iter()
        .map(|g| {
            let lead = g.lead().remove_var(u);
            match g.tail() {
                Some(t) if t.exp(u) == g.lead().exp(u) => {
                    Binomial::new(lead, t.remove_var(u), &order).expect("distinct x-parts")
                }
                Some(t) if t.exp(u) > g.lead().exp(u) => Binomial::monomial(t.remove_var(u)),
                _ => Binomial::monomial(lead),
            }
        })
        .collect();
    let cone = GradedIdeal::new(n, generators, caps)?;

    let h = cone.hilbert();
    let n0 = ideal.semigroup().multiplicity() as i64;
    if h.dim != 1 || h.multiplicity != n0 {
        return Err(Error::Internal(format!(
            "{}: tangent cone has dim {} and multiplicity {}, expected 1 and {n0}",
            ideal.semigroup(),
            h.dim,
            h.multiplicity
        )));
    }
    Ok(cone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideals_equal;
    use crate::poly::parse_polynomial;
    use crate::semigroup::NumericalSemigroup;
    use crate::toric::defining_ideal;
    use crate::Q;

    fn cone(g: &[u64]) -> GradedIdeal {
        let caps = EffortCaps::default();
        let s = NumericalSemigroup::canonicalize(g).unwrap();
        tangent_cone(&defining_ideal(&s, &caps).unwrap(), &caps).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn tangent_cone_examples() {
        let caps = EffortCaps::default();
        let j = cone(&[2, 3]);
        assert_eq!(j.gb(), &[Binomial::monomial(m(&[0, 2]))]);

        let j = cone(&[3, 4, 5]);
        let names = VarNames::new(3);
        let expected: Vec<Polynomial<Q>> =
            ["x1*x2", "x1^2 - x0*x2", "x2^2"].iter().map(|t| parse_polynomial(t, &names).unwrap()).collect();
        assert!(ideals_equal(&j.polynomials(), &expected, &j.order(), &caps).unwrap());

        let j = cone(&[6, 7, 8, 9]);
        let l = MonomialIdeal::new(4, [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0]), m(&[0, 0, 0, 2])]);
        assert_eq!(j.leading_ideal(), l);
        assert_eq!(j.hilbert().multiplicity, 6);
    }

    #[test]
    fn minimal_generator_degree_examples() {
        let caps = EffortCaps::default();
        assert_eq!(cone(&[3, 4, 5]).minimal_generator_degrees(&caps).unwrap(), vec![2, 2, 2]);
        assert_eq!(cone(&[2, 3]).minimal_generator_degrees(&caps).unwrap(), vec![2]);
        assert_eq!(cone(&[7, 8, 10]).minimal_generator_degrees(&caps).unwrap(), vec![3, 3, 3]);
    }

    #[test]
    fn invariants_and_classification() {
        let caps = EffortCaps::default();
        let inv = cone(&[3, 4, 5]).graded_invariants(&caps).unwrap();
        assert_eq!((inv.dim, inv.codim, inv.multiplicity, inv.num_min_gens, inv.max_gen_degree), (1, 2, 3, 3, 2));
        assert_eq!(inv.classify(), Classification::AlmostCompleteIntersection);

        let inv = cone(&[2, 3]).graded_invariants(&caps).unwrap();
        assert_eq!((inv.dim, inv.codim, inv.multiplicity, inv.num_min_gens, inv.max_gen_degree), (1, 1, 2, 1, 2));
        assert_eq!(inv.classify(), Classification::CompleteIntersection);

        let inv = cone(&[11, 13, 14, 15, 19]).graded_invariants(&caps).unwrap();
        assert_eq!((inv.codim, inv.multiplicity, inv.max_gen_degree), (4, 11, 2));
        assert_eq!(inv.classify(), Classification::AlmostCompleteIntersection);

        assert_eq!(cone(&[6, 7, 8, 9]).graded_invariants(&caps).unwrap().classify(), Classification::AlmostCompleteIntersection);
    }

    #[test]
    fn cohen_macaulay_examples() {
        let caps = EffortCaps::default();
        assert!(cone(&[3, 4, 5]).is_cohen_macaulay(&caps).unwrap());
        assert!(cone(&[6, 7, 8, 9]).is_cohen_macaulay(&caps).unwrap());
        assert!(!cone(&[5, 6, 13]).is_cohen_macaulay(&caps).unwrap());
    }

    #[test]
    fn direct_hilbert_function_matches_leading_ideal() {
        for g in [vec![3, 4, 5], vec![5, 6, 13], vec![6, 7, 8, 9], vec![7, 8, 10], vec![11, 13, 14, 15, 19]] {
            let j = cone(&g);
            let direct = j.hilbert_function_direct(12);
            let series = j.leading_ideal().hilbert_function(12);
            assert_eq!(direct.iter().map(|&v| v as i64).collect::<Vec<_>>(), series, "{g:?}");
        }
    }

    #[test]
    fn plane_curves_are_complete_intersections() {
        let caps = EffortCaps::default();
        for g in [[2, 5], [3, 7], [4, 9], [5, 7]] {
            assert_eq!(cone(&g).graded_invariants(&caps).unwrap().classify(), Classification::CompleteIntersection);
        }
    }
}
