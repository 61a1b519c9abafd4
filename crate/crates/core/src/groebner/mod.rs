//! Gröbner bases and the ideal operations built on them: normal forms,
//! elimination, saturation by a variable and quotients by an element.
//!
//! Inputs made only of monomials and pure-difference binomials take a
//! coefficient-free fast path ([`Binomial`]); everything else runs through
//! the general field-coefficient engine. Both produce the same reduced basis.

mod binomial;
mod engine;
mod general;

pub use binomial::{binomial_groebner, binomial_normal_form, Binomial};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Field;
use general::SortedPoly;

/// Limits on a single Gröbner computation. Exceeding one is an error, never a
/// silently truncated basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EffortCaps {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum total degree of an S-pair lcm.
    pub max_degree: u32,
}

impl Default for EffortCaps {
    fn default() -> Self {
        EffortCaps { max_pairs: 200_000, max_degree: 400 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Binomial fast path whenever every generator qualifies.
    #[default]
    Auto,
    /// Always use the general engine.
    General,
}

fn as_binomials<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> Option<Vec<Binomial>> {
    gens.iter().filter(|g| !g.is_zero()).map(|g| Binomial::from_polynomial(g, order)).collect()
}

fn to_polys<F: Field>(bs: &[Binomial]) -> Vec<Polynomial<F>> {
    bs.iter().map(Binomial::to_polynomial).collect()
}

/// Reduced Gröbner basis of `ideal(gens)`: monic, auto-reduced, sorted by
/// decreasing leading monomial. Empty for the zero ideal.
pub fn groebner_basis<F: Field>(
    gens: &[Polynomial<F>],
    order: &MonomialOrder,
    caps: &EffortCaps,
) -> Result<Vec<Polynomial<F>>> {
    groebner_basis_with(gens, order, caps, Strategy::Auto)
}

pub fn groebner_basis_with<F: Field>(
    gens: &[Polynomial<F>],
    order: &MonomialOrder,
    caps: &EffortCaps,
    strategy: Strategy,
) -> Result<Vec<Polynomial<F>>> {
    check_dims(gens, order)?;
    if strategy == Strategy::Auto {
        if let Some(bs) = as_binomials(gens, order) {
            return Ok(to_polys(&binomial_groebner(&bs, order, caps)?));
        }
    }
    let elems: Vec<SortedPoly<F>> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| SortedPoly::from_polynomial(g, order)).collect();
    Ok(engine::buchberger(elems, order, caps)?.into_iter().map(SortedPoly::into_polynomial).collect())
}

fn check_dims<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> Result<()> {
    for g in gens {
        if g.nvars() != order.nvars() {
            return Err(Error::DimensionMismatch(g.nvars(), order.nvars()));
        }
    }
    Ok(())
}

/// Remainder of `f` on division by `divisors` (tried in the given order);
/// no term of the result is divisible by a leading monomial of a divisor.
pub fn normal_form<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>], order: &MonomialOrder) -> Polynomial<F> {
    let ds: Vec<SortedPoly<F>> =
        divisors.iter().filter(|g| !g.is_zero()).map(|g| SortedPoly::from_polynomial(g, order)).collect();
    SortedPoly::from_polynomial(f, order).remainder(&ds, order).into_polynomial()
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>], order: &MonomialOrder) -> bool {
    use engine::GbElement;
    let elems: Vec<SortedPoly<F>> =
        basis.iter().filter(|g| !g.is_zero()).map(|g| SortedPoly::from_polynomial(g, order)).collect();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if let Some(s) = elems[i].s_poly(&elems[j], order) {
                if !s.remainder(&elems, order).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Membership test against a Gröbner basis.
pub fn ideal_contains<F: Field>(gb: &[Polynomial<F>], f: &Polynomial<F>, order: &MonomialOrder) -> bool {
    normal_form(f, gb, order).is_zero()
}

/// Equality of two ideals, checked by membership in both directions.
pub fn ideals_equal<F: Field>(
    a: &[Polynomial<F>],
    b: &[Polynomial<F>],
    order: &MonomialOrder,
    caps: &EffortCaps,
) -> Result<bool> {
    let ga = groebner_basis(a, order, caps)?;
    let gb = groebner_basis(b, order, caps)?;
    Ok(b.iter().all(|f| ideal_contains(&ga, f, order)) && a.iter().all(|f| ideal_contains(&gb, f, order)))
}

/// Generators of `ideal(gens) ∩ k[variables not in drop]`, from a Gröbner
/// basis under a block order with the dropped block greatest.
pub fn eliminate<F: Field>(gens: &[Polynomial<F>], drop: &[usize], caps: &EffortCaps) -> Result<Vec<Polynomial<F>>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let order = MonomialOrder::elimination(first.nvars(), drop);
    let gb = groebner_basis(gens, &order, caps)?;
    Ok(gb.into_iter().filter(|g| drop.iter().all(|&v| !g.involves(v))).collect())
}

/// Binomial form of [`eliminate`].
pub fn eliminate_binomials(gens: &[Binomial], drop: &[usize], caps: &EffortCaps) -> Result<Vec<Binomial>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let order = MonomialOrder::elimination(first.nvars(), drop);
    let gb = binomial_groebner(gens, &order, caps)?;
    Ok(gb.into_iter().filter(|g| drop.iter().all(|&v| !g.involves(v))).collect())
}

/// Generators of `ideal(gens) : x_v^∞`.
///
/// For homogeneous input this is a reduced basis under revlex with `x_v`
/// least, each element divided by the largest power of `x_v` dividing it.
/// Other input is saturated by eliminating `s` from `gens + (1 - s·x_v)`.
pub fn saturate_by_variable<F: Field>(gens: &[Polynomial<F>], v: usize, caps: &EffortCaps) -> Result<Vec<Polynomial<F>>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let n = first.nvars();
    if gens.iter().any(|g| !g.is_homogeneous()) {
        let s = Polynomial::variable(n + 1, n);
        let mut ext: Vec<Polynomial<F>> = gens.iter().map(|g| g.extend(1)).collect();
        ext.push(Polynomial::constant(n + 1, F::one()) - &s * &Polynomial::variable(n + 1, v));
        return Ok(eliminate(&ext, &[n], caps)?.iter().map(|g| g.remove_var(n)).collect());
    }
    let order = MonomialOrder::revlex_with_least(n, v);
    let gb = groebner_basis(gens, &order, caps)?;
    Ok(gb
        .into_iter()
        .map(|g| {
            let k = g.var_content(v);
            g.div_monomial(&Monomial::var(n, v, k))
        })
        .collect())
}

/// Binomial form of [`saturate_by_variable`].
pub fn saturate_binomials(gens: &[Binomial], v: usize, caps: &EffortCaps) -> Result<Vec<Binomial>> {
    let Some(first) = gens.first() else { return Ok(Vec::new()) };
    let n = first.nvars();
    if gens.iter().any(|g| !g.is_homogeneous()) {
        let any = MonomialOrder::revlex(n + 1);
        let mut ext: Vec<Binomial> = gens.iter().map(|g| g.map_monomials(|m| m.extend(1), &any).unwrap()).collect();
        let sv = Monomial::var(n + 1, n, 1).mul(&Monomial::var(n + 1, v, 1));
        ext.push(Binomial::new(Monomial::one(n + 1), sv, &any).unwrap());
        let order = MonomialOrder::revlex(n);
        return Ok(eliminate_binomials(&ext, &[n], caps)?
            .iter()
            .map(|g| g.map_monomials(|m| m.remove_var(n), &order).unwrap())
            .collect());
    }
    let gb = binomial_groebner(gens, &MonomialOrder::revlex_with_least(n, v), caps)?;
    let order = MonomialOrder::revlex(n);
    Ok(gb
        .into_iter()
        .map(|g| {
            let k = g.monomials().map(|m| m.exp(v)).min().unwrap_or(0);
            let strip = Monomial::var(n, v, k);
            g.map_monomials(|m| m.div(&strip).unwrap(), &order).expect("nonzero")
        })
        .collect())
}

/// Generators of `ideal(gens) : f`, via `J ∩ (f)` computed with a tag
/// variable `t` as the elimination of `t·J + (1 - t)·f`, then divided by `f`.
pub fn quotient_by_element<F: Field>(gens: &[Polynomial<F>], f: &Polynomial<F>, caps: &EffortCaps) -> Result<Vec<Polynomial<F>>> {
    if f.is_zero() {
        return Err(Error::ParameterOutOfRange("quotient by the zero polynomial".into()));
    }
    let n = f.nvars();
    check_dims(gens, &MonomialOrder::revlex(n))?;
    let t = Polynomial::variable(n + 1, n);
    let one_minus_t = Polynomial::constant(n + 1, F::one()) - t.clone();
    let mut tagged: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| &g.extend(1) * &t).collect();
    tagged.push(&f.extend(1) * &one_minus_t);
    let intersection = eliminate(&tagged, &[n], caps)?;
    let order = MonomialOrder::revlex(n);
    intersection
        .into_iter()
        .map(|h| {
            h.remove_var(n)
                .div_exact(f, &order)
                .ok_or_else(|| Error::Internal("element of J ∩ (f) not divisible by f".into()))
        })
        .collect()
}

/// Binomial form of [`quotient_by_element`] for a monomial `m`.
pub fn quotient_binomials_by_monomial(gens: &[Binomial], m: &Monomial, caps: &EffortCaps) -> Result<Vec<Binomial>> {
    let n = m.nvars();
    let t = Monomial::var(n + 1, n, 1);
    let any = MonomialOrder::revlex(n + 1);
    let mut tagged: Vec<Binomial> = gens.iter().map(|g| g.map_monomials(|x| x.extend(1).mul(&t), &any).unwrap()).collect();
    let me = m.extend(1);
    tagged.push(Binomial::new(me.clone(), me.mul(&t), &any).unwrap());
    let intersection = eliminate_binomials(&tagged, &[n], caps)?;
    let order = MonomialOrder::revlex(n);
    intersection
        .into_iter()
        .map(|h| {
            h.map_monomials(|x| x.remove_var(n).div(m).expect("divisible by m"), &order)
                .ok_or_else(|| Error::Internal("quotient element vanished".into()))
        })
        .collect()
}
