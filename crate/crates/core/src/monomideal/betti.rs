//! Graded Betti numbers of `P/L`.
//!
//! Two unrelated routes: reduced homology of the crosscut complexes of the
//! lcm lattice (the lower interval below each lattice element), and Koszul
//! homology of `P/L` on all variables, computed one multidegree at a time.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::linalg::sparse_rank;
use crate::poly::Monomial;
use crate::scalar::Field;
use crate::Q;

/// Graded Betti numbers `β_{i,j}` indexed by homological degree `i` and
/// internal degree `j`. Zero entries are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: u32, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(i, j, β_{i,j})`, sorted.
    pub fn graded(&self) -> Vec<(usize, u32, u64)> {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect()
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=projective dimension`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut t = vec![0; len];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    pub fn alternating_sum(&self) -> i64 {
        self.totals().iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    /// `Σ (-1)^i β_{i,j} t^j`, which equals the Hilbert series numerator.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let len = self.entries.keys().map(|&(_, j)| j as usize + 1).max().unwrap_or(1);
        let mut n = vec![0i64; len];
        for (&(i, j), &b) in &self.entries {
            let s = if i % 2 == 0 { b as i64 } else { -(b as i64) };
            n[j as usize] += s;
        }
        while n.len() > 1 && *n.last().unwrap() == 0 {
            n.pop();
        }
        n
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let graded: Vec<[u64; 3]> = self.graded().into_iter().map(|(i, j, b)| [i as u64, j as u64, b]).collect();
        let mut s = serializer.serialize_struct("BettiTable", 2)?;
        s.serialize_field("totals", &self.totals())?;
        s.serialize_field("graded", &graded)?;
        s.end()
    }
}

/// Dimensions of reduced homology of a chain complex given by the sizes of
/// its chain groups and sparse boundary matrices `∂_k: C_k → C_{k-1}`.
fn homology_dims<F: Field>(sizes: &[usize], boundaries: &[Vec<(usize, usize, i64)>]) -> Vec<usize> {
    // boundaries[k] maps sizes[k] -> sizes[k - 1]; boundaries[0] is zero.
    let ranks: Vec<usize> = (0..sizes.len())
        .map(|k| if k == 0 { 0 } else { sparse_rank::<F>(sizes[k - 1], sizes[k], &boundaries[k]) })
        .collect();
    (0..sizes.len())
        .map(|k| {
            let next = if k + 1 < sizes.len() { ranks[k + 1] } else { 0 };
            sizes[k] - ranks[k] - next
        })
        .collect()
}

/// Reduced homology of the simplicial complex on `k` vertices whose faces
/// are the bitmasks accepted by `is_face` (closed under subsets, and always
/// containing the empty face). Entry `s` is `dim H̃_{s-1}`.
fn reduced_homology<F: Field>(k: usize, is_face: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut faces: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    for mask in 0usize..(1 << k) {
        if is_face(mask) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    let index: Vec<HashMap<usize, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
    let sizes: Vec<usize> = faces.iter().map(Vec::len).collect();
    let mut boundaries: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); k + 1];
    for s in 1..=k {
        for (col, &mask) in faces[s].iter().enumerate() {
            let mut pos = 0;
            for bit in 0..k {
                if mask & (1 << bit) != 0 {
                    let row = index[s - 1][&(mask & !(1 << bit))];
                    boundaries[s].push((row, col, if pos % 2 == 0 { 1 } else { -1 }));
                    pos += 1;
                }
            }
        }
    }
    homology_dims::<F>(&sizes, &boundaries)
}

impl MonomialIdeal {
    /// Betti numbers over the rationals from the lcm lattice.
    pub fn betti_lcm(&self, cap: usize) -> Result<BettiTable> {
        self.betti_lcm_over::<Q>(cap)
    }

    /// For each element `m` of the lcm lattice, `β_{i,m}(P/L)` is the
    /// dimension of `H̃_{i-2}` of the crosscut complex of the interval below
    /// `m`: sets of generators dividing `m` whose lcm is strictly below `m`.
    pub fn betti_lcm_over<F: Field>(&self, cap: usize) -> Result<BettiTable> {
        let gens = self.mingens();
        // Atom sets are u64 bitmasks.
        if gens.len() > cap.min(63) {
            return Err(Error::CapExceeded(gens.len(), cap.min(63)));
        }
        let mut table = BettiTable::new();
        if !self.is_proper() {
            return Ok(table);
        }
        table.add(0, 0, 1);

        let mut lattice: HashSet<Monomial> = HashSet::new();
        for g in gens {
            let mut next: Vec<Monomial> = lattice.iter().map(|m| m.lcm(g)).collect();
            next.push(g.clone());
            lattice.extend(next);
        }

        for top in &lattice {
            let atoms: Vec<&Monomial> = gens.iter().filter(|g| g.divides(top)).collect();
            let all: u64 = (1u64 << atoms.len()) - 1;
            // The crosscut complex {F : lcm(F) ≠ top} is the union over
            // variables v of the simplex on the atoms whose x_v-exponent falls
            // short of top's. Those simplices and all their intersections are
            // simplices, so the complex has the homology of the nerve of this
            // cover, which lives on at most `nvars` vertices.
            let cover: Vec<u64> = (0..self.nvars())
                .filter(|&v| top.exp(v) > 0)
                .map(|v| {
                    atoms.iter().enumerate().filter(|(_, a)| a.exp(v) < top.exp(v)).fold(0u64, |m, (i, _)| m | 1 << i)
                })
                .filter(|&sigma| sigma != 0)
                .collect();
            let dims = reduced_homology::<F>(cover.len(), |w| {
                cover.iter().enumerate().filter(|(i, _)| w & (1 << i) != 0).fold(all, |acc, (_, &s)| acc & s) != 0
            });
            // Face size s carries chain degree s - 1, so H̃_{s-1} gives β_{s+1}.
            for (s, &h) in dims.iter().enumerate() {
                table.add(s + 1, top.degree(), h as u64);
            }
        }
        Ok(table)
    }

    /// Betti numbers over the rationals from Koszul homology.
    pub fn betti_koszul(&self, max_degree: u32) -> Result<BettiTable> {
        self.betti_koszul_over::<Q>(max_degree)
    }

    /// `β_{i,j}(P/L) = dim H_i(K(x_0, …, x_n) ⊗ P/L)_j`, computed for every
    /// multidegree `b ≤ lcm(L)` with `|b| ≤ max_degree`. In multidegree `b`
    /// the chain group `K_i` has a basis of the `i`-subsets `F` of the
    /// variables with `x^{b−F}` standard.
    pub fn betti_koszul_over<F: Field>(&self, max_degree: u32) -> Result<BettiTable> {
        let n = self.nvars();
        if n > 20 {
            return Err(Error::CapExceeded(n, 20));
        }
        let mut table = BettiTable::new();
        if !self.is_proper() {
            return Ok(table);
        }
        let bound = self.lcm_all();
        let mut b = vec![0u32; n];
        loop {
            let deg: u32 = b.iter().sum();
            if deg <= max_degree {
                for (i, h) in koszul_homology::<F>(self, &b).into_iter().enumerate() {
                    table.add(i, deg, h as u64);
                }
            }
            // Next multidegree in the box [0, bound].
            let mut v = 0;
            loop {
                if v == n {
                    return Ok(table);
                }
                if b[v] < bound.exp(v) {
                    b[v] += 1;
                    break;
                }
                b[v] = 0;
                v += 1;
            }
        }
    }
}

fn koszul_homology<F: Field>(ideal: &MonomialIdeal, b: &[u32]) -> Vec<usize> {
    let n = b.len();
    let support: Vec<usize> = (0..n).filter(|&v| b[v] > 0).collect();
    let k = support.len();
    let standard = |mask: usize| -> bool {
        // x^{b - F} with F the variables selected by `mask` over `support`.
        let mut e = b.to_vec();
        for (bit, &v) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                e[v] -= 1;
            }
        }
        !ideal.contains(&Monomial::new(&e))
    };
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    for mask in 0usize..(1 << k) {
        if standard(mask) {
            cells[mask.count_ones() as usize].push(mask);
        }
    }
    let index: Vec<HashMap<usize, usize>> =
        cells.iter().map(|cs| cs.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();
    let sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
    let mut boundaries: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); k + 1];
    for i in 1..=k {
        for (col, &mask) in cells[i].iter().enumerate() {
            let mut pos = 0;
            for bit in 0..k {
                if mask & (1 << bit) != 0 {
                    let sub = mask & !(1 << bit);
                    // Terms landing in L vanish in P/L.
                    if let Some(&row) = index[i - 1].get(&sub) {
                        boundaries[i].push((row, col, if pos % 2 == 0 { 1 } else { -1 }));
                    }
                    pos += 1;
                }
            }
        }
    }
    homology_dims::<F>(&sizes, &boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F32003;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn lcm_examples() {
        let l = MonomialIdeal::new(3, [m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]);
        let t = l.betti_lcm(12).unwrap();
        assert_eq!(t.totals(), vec![1, 3, 2]);
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(2, 3), 2);

        let l = MonomialIdeal::new(3, [m(&[0, 3, 0]), m(&[0, 0, 3]), m(&[0, 2, 1])]);
        let t = l.betti_lcm(12).unwrap();
        assert_eq!(t.graded(), vec![(0, 0, 1), (1, 3, 3), (2, 4, 1), (2, 5, 1)]);

        let t = MonomialIdeal::new(2, [m(&[0, 2])]).betti_lcm(12).unwrap();
        assert_eq!(t.graded(), vec![(0, 0, 1), (1, 2, 1)]);
    }

    #[test]
    fn koszul_examples() {
        let l = MonomialIdeal::new(3, [m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]);
        assert_eq!(l.betti_koszul(10).unwrap(), l.betti_lcm(12).unwrap());

        let ci = MonomialIdeal::new(3, [m(&[0, 2, 0]), m(&[0, 0, 2])]);
        assert_eq!(ci.betti_koszul(10).unwrap().graded(), vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);

        let l = MonomialIdeal::new(4, [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0]), m(&[0, 0, 0, 2])]);
        assert_eq!(l.betti_koszul(12).unwrap().totals(), vec![1, 4, 5, 2]);
    }

    #[test]
    fn cap_is_enforced() {
        let gens: Vec<Monomial> = (0..5).map(|i| m(&[i, 4 - i])).collect();
        let l = MonomialIdeal::new(2, gens);
        assert_eq!(l.betti_lcm(4), Err(Error::CapExceeded(5, 4)));
        assert_eq!(l.betti_lcm(5).unwrap().totals(), vec![1, 5, 4]);
    }

    #[test]
    fn prime_field_agrees_on_small_ideals() {
        let l = MonomialIdeal::new(3, [m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1]), m(&[2, 0, 0])]);
        assert_eq!(l.betti_lcm_over::<F32003>(12).unwrap(), l.betti_lcm(12).unwrap());
        assert_eq!(l.betti_koszul_over::<F32003>(10).unwrap(), l.betti_lcm(12).unwrap());
    }

    #[test]
    fn json_shape() {
        let l = MonomialIdeal::new(2, [m(&[0, 2])]);
        let json = serde_json::to_string(&l.betti_lcm(12).unwrap()).unwrap();
        assert_eq!(json, r#"{"totals":[1,1],"graded":[[0,0,1],[1,2,1]]}"#);
    }
}
