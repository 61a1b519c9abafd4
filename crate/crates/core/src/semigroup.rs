//! Numerical semigroups: minimal generators, membership, Apéry sets and
//! exhaustive enumeration.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_integer::Integer;

use crate::error::{Error, Result};

/// A numerical semigroup given by its minimal generators `n_0 < ... < n_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// Apéry set with respect to the multiplicity.
    apery: Vec<u64>,
}

/// Least element of the monoid generated by `gens` in each residue class mod
/// `modulus`; `None` where the class is never reached.
///
/// Dijkstra over the residue graph: edges `r -> r + g (mod m)` of weight `g`.
fn residue_table(gens: &[u64], modulus: u64) -> Vec<Option<u64>> {
    let m = modulus as usize;
    let mut best: Vec<Option<u64>> = vec![None; m];
    best[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((w, r))) = heap.pop() {
        if best[r] != Some(w) {
            continue;
        }
        for &g in gens {
            let nw = w + g;
            let nr = (r + (g % modulus) as usize) % m;
            if best[nr].is_none_or(|b| nw < b) {
                best[nr] = Some(nw);
                heap.push(Reverse((nw, nr)));
            }
        }
    }
    best
}

fn representable(gens: &[u64], n: u64) -> bool {
    match gens.iter().copied().min() {
        None => n == 0,
        Some(g0) => {
            let table = residue_table(gens, g0);
            table[(n % g0) as usize].is_some_and(|least| least <= n)
        }
    }
}

impl NumericalSemigroup {
    /// Minimal generating set of the monoid generated by `raw`.
    pub fn canonicalize(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::NonPositiveEntry);
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NotNumerical(sorted, g));
        }
        // Any representation of x only uses smaller elements, so testing
        // against the kept prefix is enough.
        let mut kept: Vec<u64> = Vec::new();
        for x in sorted {
            if !representable(&kept, x) {
                kept.push(x);
            }
        }
        Ok(Self::from_minimal(kept))
    }

    fn from_minimal(generators: Vec<u64>) -> Self {
        let apery = residue_table(&generators, generators[0])
            .into_iter()
            .map(|e| e.expect("gcd 1 reaches every residue"))
            .collect();
        NumericalSemigroup { generators, apery }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest generator `n_0`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Number of minimal generators, `c + 1`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Codimension `c` of the monomial curve.
    pub fn codimension(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn contains(&self, n: u64) -> bool {
        let n0 = self.multiplicity();
        n >= self.apery[(n % n0) as usize]
    }

    /// Least element of the semigroup in each residue class modulo `m`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotInSemigroup(m));
        }
        if m == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        Ok(residue_table(&self.generators, m)
            .into_iter()
            .map(|e| e.expect("gcd 1 reaches every residue"))
            .collect())
    }

    /// Largest integer outside the semigroup, or -1 for the whole of N.
    pub fn frobenius(&self) -> i64 {
        let max = *self.apery.iter().max().expect("nonempty");
        max as i64 - self.multiplicity() as i64
    }

    /// Ways to write `target` as a nonnegative combination of the generators,
    /// as exponent vectors indexed like `generators`.
    pub fn factorizations(&self, target: u64) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.generators.len()];
        self.factor_rec(self.generators.len(), target, &mut current, &mut out);
        out
    }

    fn factor_rec(&self, k: usize, rest: u64, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        if k == 0 {
            return;
        }
        let g = self.generators[k - 1];
        if k == 1 {
            if rest.is_multiple_of(g) {
                current[0] = (rest / g) as u32;
                out.push(current.clone());
                current[0] = 0;
            }
            return;
        }
        let mut used = 0u64;
        loop {
            self.factor_rec(k - 1, rest - used, current, out);
            if used + g > rest {
                break;
            }
            used += g;
            current[k - 1] += 1;
        }
        current[k - 1] = 0;
    }
}

/// Every numerical semigroup with exactly `embdim` minimal generators, all at
/// most `max_generator`, in lexicographic order of the generator tuples.
pub fn enumerate_semigroups(
    embdim: usize,
    max_generator: u64,
) -> impl Iterator<Item = NumericalSemigroup> {
    (2..=max_generator)
        .combinations(embdim)
        .filter(|t| t.iter().fold(0u64, |a, &x| a.gcd(&x)) == 1)
        .filter(|t| (1..t.len()).all(|i| !representable(&t[..i], t[i])))
        .map(NumericalSemigroup::from_minimal)
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.generators.iter().join(","))
    }
}

/// Parses the comma-separated generator syntax, e.g. `3,4,5`.
pub fn parse_generators(text: &str) -> Result<Vec<u64>> {
    let text = text.trim().trim_start_matches('<').trim_end_matches('>');
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad generator {s:?}: {e}")))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NumericalSemigroup::canonicalize(&parse_generators(s)?)
    }
}
