use std::collections::HashMap;

use super::MonomialIdeal;
use crate::poly::Monomial;

/// `HS(P/L) = numerator(t) / (1 - t)^n`, reduced to `Q(t) / (1 - t)^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of the unreduced numerator, lowest degree first.
    pub numerator: Vec<i64>,
    /// Coefficients of the reduced numerator `Q`.
    pub reduced: Vec<i64>,
    pub dim: usize,
    /// `Q(1)`.
    pub multiplicity: i64,
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn add_into(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Numerator of the Hilbert series by the pivot recursion
/// `N(L) = N(L + (p)) + t^{deg p} N(L : p)`, memoized on the canonical
/// generator list.
fn numerator(gens: &[Monomial], nvars: usize, memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    if let Some(n) = memo.get(gens) {
        return n.clone();
    }
    let mut counts = vec![0usize; nvars];
    for g in gens {
        for (v, count) in counts.iter_mut().enumerate() {
            if g.exp(v) > 0 {
                *count += 1;
            }
        }
    }
    let (pivot_var, &most) = counts.iter().enumerate().max_by_key(|&(v, c)| (c, std::cmp::Reverse(v))).unwrap();
    let result = if most <= 1 {
        // Pairwise coprime generators form a regular sequence.
        gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            mul(&acc, &f)
        })
    } else {
        let k = gens.iter().map(|g| g.exp(pivot_var)).filter(|&e| e > 0).min().unwrap();
        let pivot = Monomial::var(nvars, pivot_var, k);
        let ideal = MonomialIdeal { nvars, mingens: gens.to_vec() };
        let with = ideal.add(pivot.clone());
        let colon = ideal.colon(&pivot);
        let mut n = numerator(with.mingens(), nvars, memo);
        let c = numerator(colon.mingens(), nvars, memo);
        add_into(&mut n, &c, k as usize);
        trim(n)
    };
    memo.insert(gens.to_vec(), result.clone());
    result
}

impl MonomialIdeal {
    /// Hilbert series data of `P/L`.
    pub fn hilbert(&self) -> HilbertData {
        let mut memo = HashMap::new();
        let numerator = trim(numerator(&self.mingens, self.nvars, &mut memo));
        let mut reduced = numerator.clone();
        let mut dim = self.nvars;
        while dim > 0 && reduced.iter().sum::<i64>() == 0 && reduced.iter().any(|&c| c != 0) {
            // Divide by (1 - t): prefix sums.
            let mut q = Vec::with_capacity(reduced.len());
            let mut acc = 0;
            for &c in &reduced[..reduced.len() - 1] {
                acc += c;
                q.push(acc);
            }
            reduced = trim(q);
            dim -= 1;
        }
        let multiplicity = reduced.iter().sum();
        HilbertData { numerator, reduced, dim, multiplicity }
    }

    /// Values `HF(P/L, k)` for `k = 0..=upto`, expanded from the series.
    pub fn hilbert_function(&self, upto: usize) -> Vec<i64> {
        let h = self.hilbert();
        let mut series = vec![0i64; upto + 1];
        for (i, &c) in h.reduced.iter().enumerate().take(upto + 1) {
            series[i] = c;
        }
        for _ in 0..h.dim {
            for k in 1..=upto {
                series[k] += series[k - 1];
            }
        }
        series
    }

    /// Standard monomials of degree `k` by enumeration.
    pub fn count_standard_monomials(&self, k: u32) -> u64 {
        fn rec(ideal: &MonomialIdeal, exps: &mut Vec<u32>, v: usize, rest: u32) -> u64 {
            if v + 1 == exps.len() {
                exps[v] = rest;
                let m = Monomial::new(exps);
                exps[v] = 0;
                return u64::from(!ideal.contains(&m));
            }
            let mut total = 0;
            for e in 0..=rest {
                exps[v] = e;
                total += rec(ideal, exps, v + 1, rest - e);
            }
            exps[v] = 0;
            total
        }
        if self.nvars == 0 {
            return u64::from(k == 0 && self.is_proper());
        }
        rec(self, &mut vec![0; self.nvars], 0, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn examples() {
        let l = MonomialIdeal::new(3, [m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]);
        let h = l.hilbert();
        assert_eq!((h.dim, h.multiplicity), (1, 3));
        assert_eq!(h.reduced, vec![1, 2]);

        let l = MonomialIdeal::new(4, [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0]), m(&[0, 0, 0, 2])]);
        let h = l.hilbert();
        assert_eq!((h.dim, h.multiplicity), (1, 6));

        let l = MonomialIdeal::new(2, [m(&[0, 1])]);
        let h = l.hilbert();
        assert_eq!((h.dim, h.multiplicity), (1, 1));

        let h = MonomialIdeal::zero(3).hilbert();
        assert_eq!((h.dim, h.multiplicity), (3, 1));

        // Artinian: (x0^2, x0 x1, x1^3) has length 4.
        let h = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]).hilbert();
        assert_eq!((h.dim, h.multiplicity), (0, 4));
    }

    fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..6)
            .prop_map(|gs| MonomialIdeal::new(3, gs.into_iter().map(|e| Monomial::new(&e)).filter(|g| !g.is_one())))
    }

    proptest! {
        #[test]
        fn series_matches_standard_monomial_count(l in ideal_strategy()) {
            let hf = l.hilbert_function(8);
            for k in 0..=8u32 {
                prop_assert_eq!(hf[k as usize], l.count_standard_monomials(k) as i64);
            }
        }
    }
}
