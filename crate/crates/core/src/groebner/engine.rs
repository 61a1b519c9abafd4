//! Buchberger's algorithm, shared by the general polynomial representation
//! and the binomial fast path.

use std::collections::{BTreeMap, HashSet};

use super::EffortCaps;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder};

/// A basis element the Buchberger loop can work with. Implementors keep
/// themselves normalized (monic, leading term first).
pub(crate) trait GbElement: Clone {
    fn lead(&self) -> &Monomial;

    /// S-polynomial of `self` and `other`; `None` if it vanishes.
    fn s_poly(&self, other: &Self, order: &MonomialOrder) -> Option<Self>;

    /// Full reduction of every term against the leading monomials of
    /// `basis`; `None` if the result is zero.
    fn reduce(&self, basis: &[Self], order: &MonomialOrder) -> Option<Self>;
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are selected by lcm degree, ties broken by the monomial order on
/// the lcm and then by index, so traces are reproducible.
pub(crate) fn buchberger<E: GbElement>(
    gens: Vec<E>,
    order: &MonomialOrder,
    caps: &EffortCaps,
) -> Result<Vec<E>> {
    let mut basis: Vec<E> = Vec::new();
    let mut pairs: BTreeMap<u32, Vec<Pair>> = BTreeMap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut processed = 0usize;

    let add = |basis: &mut Vec<E>,
                   pairs: &mut BTreeMap<u32, Vec<Pair>>,
                   pending: &mut HashSet<(usize, usize)>,
                   g: E|
     -> Result<()> {
        let j = basis.len();
        for (i, h) in basis.iter().enumerate() {
            let lcm = h.lead().lcm(g.lead());
            if lcm.degree() > caps.max_degree {
                return Err(Error::EffortCapExceeded(format!(
                    "S-pair degree {} exceeds max degree {}",
                    lcm.degree(),
                    caps.max_degree
                )));
            }
            pending.insert((i, j));
            pairs.entry(lcm.degree()).or_default().push(Pair { i, j, lcm });
        }
        basis.push(g);
        Ok(())
    };

    for g in gens {
        if let Some(r) = g.reduce(&basis, order) {
            add(&mut basis, &mut pairs, &mut pending, r)?;
        }
    }

    loop {
        let Some(mut bucket) = pairs.first_entry() else { break };
        let list = bucket.get_mut();
        let best = (0..list.len())
            .min_by(|&a, &b| {
                order
                    .compare(&list[a].lcm, &list[b].lcm)
                    .then((list[a].i, list[a].j).cmp(&(list[b].i, list[b].j)))
            })
            .expect("buckets are never empty");
        let pair = list.swap_remove(best);
        if list.is_empty() {
            bucket.remove();
        }
        pending.remove(&(pair.i, pair.j));

        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        if f.lead().is_coprime(g.lead()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lead().divides(&pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > caps.max_pairs {
            return Err(Error::EffortCapExceeded(format!("more than {} S-pairs", caps.max_pairs)));
        }
        if let Some(s) = f.s_poly(g, order) {
            if let Some(r) = s.reduce(&basis, order) {
                add(&mut basis, &mut pairs, &mut pending, r)?;
            }
        }
    }

    Ok(reduce_basis(basis, order))
}

/// Turns a Gröbner basis into the reduced one: drop elements with
/// redundant leading monomials, then reduce each against the rest.
pub(crate) fn reduce_basis<E: GbElement>(basis: Vec<E>, order: &MonomialOrder) -> Vec<E> {
    let mut minimal: Vec<E> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<E> = (0..minimal.len())
        .map(|i| {
            let others: Vec<E> = minimal.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, h)| h.clone()).collect();
            minimal[i].reduce(&others, order).expect("minimal basis elements do not reduce to zero")
        })
        .collect();
    reduced.sort_by(|a, b| order.compare(b.lead(), a.lead()));
    reduced
}
