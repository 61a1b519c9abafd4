use std::cmp::Ordering;

use super::Monomial;

/// A global monomial order.
///
/// Priorities list variable indices from greatest to least.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex { priority: Vec<usize> },
    /// Total degree, ties broken against the least variable.
    DegRevLex { priority: Vec<usize> },
    /// Weighted degree, ties broken as in `DegRevLex`. Weights are positive.
    WeightedDegRevLex { weights: Vec<u64>, priority: Vec<usize> },
    /// Earlier blocks dominate; each block is compared by `DegRevLex` with the
    /// block's listed priority.
    Block { blocks: Vec<Vec<usize>> },
}

impl MonomialOrder {
    /// Reverse lexicographic order on `x_0, ..., x_{n-1}` with
    /// `x_{n-1} ≻ ... ≻ x_0`, the order under which the tangent-cone leading
    /// ideals are taken.
    pub fn revlex(nvars: usize) -> Self {
        MonomialOrder::DegRevLex { priority: (0..nvars).rev().collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex { priority: (0..nvars).rev().collect() }
    }

    /// Block order with `drop` greatest, then the remaining variables under
    /// `revlex`.
    pub fn elimination(nvars: usize, drop: &[usize]) -> Self {
        let mut first: Vec<usize> = drop.to_vec();
        first.sort_unstable_by(|a, b| b.cmp(a));
        let rest: Vec<usize> = (0..nvars).rev().filter(|v| !drop.contains(v)).collect();
        MonomialOrder::Block { blocks: vec![first, rest] }
    }

    /// Degree reverse lexicographic order with `v` the least variable and the
    /// others in decreasing index order.
    pub fn revlex_with_least(nvars: usize, v: usize) -> Self {
        let mut priority: Vec<usize> = (0..nvars).rev().filter(|&w| w != v).collect();
        priority.push(v);
        MonomialOrder::DegRevLex { priority }
    }

    pub fn nvars(&self) -> usize {
        match self {
            MonomialOrder::Lex { priority } | MonomialOrder::DegRevLex { priority } => priority.len(),
            MonomialOrder::WeightedDegRevLex { priority, .. } => priority.len(),
            MonomialOrder::Block { blocks } => blocks.iter().map(Vec::len).sum(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex { priority } => {
                for &v in priority {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex { priority } => {
                let da: u32 = priority.iter().map(|&v| a.exp(v)).sum();
                let db: u32 = priority.iter().map(|&v| b.exp(v)).sum();
                da.cmp(&db).then_with(|| revlex_tie(priority, a, b))
            }
            MonomialOrder::WeightedDegRevLex { weights, priority } => {
                let wa: u64 = weights.iter().zip(a.exponents()).map(|(w, &e)| w * e as u64).sum();
                let wb: u64 = weights.iter().zip(b.exponents()).map(|(w, &e)| w * e as u64).sum();
                wa.cmp(&wb).then_with(|| revlex_tie(priority, a, b))
            }
            MonomialOrder::Block { blocks } => {
                for block in blocks {
                    let da: u32 = block.iter().map(|&v| a.exp(v)).sum();
                    let db: u32 = block.iter().map(|&v| b.exp(v)).sum();
                    let o = da.cmp(&db).then_with(|| revlex_tie(block, a, b));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn greater(&self, a: &Monomial, b: &Monomial) -> bool {
        self.compare(a, b) == Ordering::Greater
    }
}

/// Among equal degrees, the monomial with the smaller exponent on the least
/// variable (scanning from the end of `priority`) is greater.
fn revlex_tie(priority: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in priority.iter().rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
