//! The multiplicity bound `e(G) ≤ d^c − (d−1)·d^(c−2)` for tangent cones that
//! are not complete intersections, the semigroups attaining it, and the
//! structure forced at equality.

use itertools::Itertools;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::EffortCaps;
use crate::monomideal::{BettiTable, MonomialIdeal};
use crate::poly::Monomial;
use crate::semigroup::NumericalSemigroup;
use crate::tangentcone::{tangent_cone, Classification, GradedIdeal, GradedInvariants};
use crate::toric::{critical_degree, defining_ideal, BinomialIdeal};

/// Largest number of minimal generators handed to the lcm-lattice Betti
/// computation.
pub const BETTI_CAP: usize = 12;

/// `d^c − (d−1)·d^(c−2)`.
pub fn bound(c: u32, d: u32) -> Result<u64> {
    if c < 2 || d < 2 {
        return Err(Error::ParameterOutOfRange(format!("bound needs c, d >= 2, got c = {c}, d = {d}")));
    }
    let d = d as u64;
    let overflow = || Error::ParameterOutOfRange(format!("bound({c}, {d}) overflows"));
    let top = d.checked_pow(c).ok_or_else(overflow)?;
    let low = (d - 1).checked_mul(d.checked_pow(c - 2).ok_or_else(overflow)?).ok_or_else(overflow)?;
    Ok(top - low)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaResult {
    pub min_product: u64,
    /// Every nondecreasing `(ε_1, …, ε_c)` attaining the minimum.
    pub argmins: Vec<Vec<u32>>,
}

/// Minimum of `∏ ε_i` over multisets of `c` integers in `[1, d]` summing to
/// `target`, by exhaustive enumeration.
pub fn lemma_min_product(c: u32, d: u32, target: u32) -> Result<LemmaResult> {
    if c < 2 || d < 2 {
        return Err(Error::ParameterOutOfRange(format!("lemma needs c, d >= 2, got c = {c}, d = {d}")));
    }
    if target < c || target > c * d {
        return Err(Error::InfeasibleSum { c, d, sum: target });
    }
    fn rec(c: u32, d: u32, low: u32, rest: u32, current: &mut Vec<u32>, best: &mut LemmaResult) {
        if current.len() == c as usize {
            if rest == 0 {
                let p: u64 = current.iter().map(|&e| e as u64).product();
                if p < best.min_product {
                    best.min_product = p;
                    best.argmins.clear();
                }
                if p == best.min_product {
                    best.argmins.push(current.clone());
                }
            }
            return;
        }
        for e in low..=d.min(rest) {
            current.push(e);
            rec(c, d, e, rest - e, current, best);
            current.pop();
        }
    }
    let mut best = LemmaResult { min_product: u64::MAX, argmins: Vec::new() };
    rec(c, d, 1, target, &mut Vec::new(), &mut best);
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KoszulWitness {
    /// The revlex leading ideal of `J` is generated by quadrics.
    Certified,
    Inconclusive,
}

impl KoszulWitness {
    pub fn as_str(self) -> &'static str {
        match self {
            KoszulWitness::Certified => "certified",
            KoszulWitness::Inconclusive => "inconclusive",
        }
    }
}

/// A quadratic monomial initial ideal makes `P/J` Koszul; anything else says
/// nothing.
pub fn koszul_witness(cone: &GradedIdeal) -> KoszulWitness {
    let l = cone.leading_ideal();
    if !l.is_zero() && l.mingens().iter().all(|g| g.degree() == 2) {
        KoszulWitness::Certified
    } else {
        KoszulWitness::Inconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub generators: Vec<u64>,
    pub c: usize,
    /// Largest degree of a minimal generator of `J`.
    pub d: u32,
    pub e: u64,
    /// `None` when `c = 1`, where the bound is undefined.
    pub bound: Option<u64>,
    #[serde(rename = "class")]
    pub classification: Classification,
    pub cm: bool,
    pub theorem_ok: bool,
    pub extremal: bool,
    pub koszul: KoszulWitness,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_totals: Option<Vec<u64>>,
}

/// Everything computed for one semigroup.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub toric: BinomialIdeal,
    pub cone: GradedIdeal,
    pub invariants: GradedInvariants,
    pub report: AnalysisReport,
}

/// The full pipeline for any embedding dimension `≥ 2`. For `c = 1` the
/// report carries no bound and `theorem_ok` reduces to being a complete
/// intersection.
pub fn analyze(s: &NumericalSemigroup, caps: &EffortCaps) -> Result<Analysis> {
    let toric = defining_ideal(s, caps)?;
    let cone = tangent_cone(&toric, caps)?;
    let invariants = cone.graded_invariants(caps)?;
    let c = s.codimension();
    let d = invariants.max_gen_degree;
    let e = invariants.multiplicity;
    if e != s.multiplicity() || invariants.codim != c {
        return Err(Error::Internal(format!("{s}: e = {e}, codim = {}", invariants.codim)));
    }
    for i in 1..=c {
        let di = critical_degree(s, i)?;
        if di > d {
            return Err(Error::Internal(format!("{s}: critical degree {di} of x{i} exceeds d = {d}")));
        }
    }
    let classification = invariants.classify();
    let cm = cone.is_cohen_macaulay(caps)?;
    let is_ci = classification == Classification::CompleteIntersection;
    let bound = if c >= 2 { Some(bound(c as u32, d)?) } else { None };
    let theorem_ok = is_ci || bound.is_some_and(|b| e <= b);
    let extremal = !is_ci && bound == Some(e);
    if extremal && !(classification == Classification::AlmostCompleteIntersection && cm) {
        return Err(Error::Internal(format!("{s}: attains the bound but is {classification}, cm = {cm}")));
    }
    let report = AnalysisReport {
        generators: s.generators().to_vec(),
        c,
        d,
        e,
        bound,
        classification,
        cm,
        theorem_ok,
        extremal,
        koszul: koszul_witness(&cone),
        betti_totals: None,
    };
    Ok(Analysis { toric, cone, invariants, report })
}

/// [`analyze`] restricted to `c ≥ 2`, where the bound applies.
pub fn verify_theorem(s: &NumericalSemigroup, caps: &EffortCaps) -> Result<AnalysisReport> {
    if s.embedding_dimension() < 3 {
        return Err(Error::ParameterOutOfRange(format!("{s} has embedding dimension < 3")));
    }
    Ok(analyze(s, caps)?.report)
}

/// `⟨e, e+1, e+d, e + (d²−d+1)d^(i−3) for 3 ≤ i ≤ c⟩` with `e = bound(c, d)`.
pub fn extremal_family(c: u32, d: u32) -> Result<NumericalSemigroup> {
    let e = bound(c, d)?;
    let step = (d * d - d + 1) as u64;
    let mut gens = vec![e, e + 1, e + d as u64];
    for i in 3..=c {
        gens.push(e + step * (d as u64).pow(i - 3));
    }
    let s = NumericalSemigroup::canonicalize(&gens)?;
    if s.generators() != gens.as_slice() {
        return Err(Error::Internal(format!("family generators {gens:?} are not minimal")));
    }
    Ok(s)
}

/// `β_i = C(c−2, i) + 3·C(c−2, i−1) + 2·C(c−2, i−2)`.
pub fn extremal_betti_formula(c: u32, i: u32) -> u64 {
    let choose = |k: i64| if k < 0 || k > c as i64 - 2 { 0 } else { binomial(c as u64 - 2, k as u64) };
    let i = i as i64;
    choose(i) + 3 * choose(i - 1) + 2 * choose(i - 2)
}

/// Graded Betti numbers of `P/(x_1^d, …, x_c^d, x_1^{d−1}x_2)`: the
/// Hilbert–Burch resolution of the first three generators tensored with the
/// Koszul complex on the remaining powers.
pub fn extremal_graded_betti(c: u32, d: u32) -> BettiTable {
    let choose = |k: i64| if k < 0 || k > c as i64 - 2 { 0 } else { binomial(c as u64 - 2, k as u64) };
    let mut t = BettiTable::new();
    for i in 0..=c {
        let k = i as i64;
        t.add(i as usize, i * d, choose(k) + 3 * choose(k - 1));
        if i >= 2 {
            t.add(i as usize, i * d - 1, choose(k - 2));
            t.add(i as usize, (i - 1) * d + 1, choose(k - 2));
        }
    }
    t
}

/// `(x_1^d, …, x_c^d, x_1^{d−1}x_2)` in `x_0, …, x_c`.
pub fn extremal_leading_ideal(c: usize, d: u32) -> MonomialIdeal {
    let n = c + 1;
    let mut gens: Vec<Monomial> = (1..=c).map(|v| Monomial::var(n, v, d)).collect();
    gens.push(Monomial::var(n, 1, d - 1).mul(&Monomial::var(n, 2, 1)));
    MonomialIdeal::new(n, gens)
}

/// `(x_1^d, …, x_c^d) : x_1^{d−1}x_2`, the expected value
/// `(x_1, x_2^{d−1}, x_3^d, …, x_c^d)`, and a brute-force check that both
/// contain the same monomials in the box of exponents `≤ d`.
pub fn linkage_identity(c: usize, d: u32) -> (MonomialIdeal, MonomialIdeal, bool) {
    let n = c + 1;
    let ci = MonomialIdeal::new(n, (1..=c).map(|v| Monomial::var(n, v, d)));
    let m = Monomial::var(n, 1, d - 1).mul(&Monomial::var(n, 2, 1));
    let colon = ci.colon(&m);
    let mut expected = vec![Monomial::var(n, 1, 1), Monomial::var(n, 2, d - 1)];
    expected.extend((3..=c).map(|v| Monomial::var(n, v, d)));
    let expected = MonomialIdeal::new(n, expected);
    // q ∈ CI : m  ⟺  q·m ∈ CI, checked on every monomial with exponents ≤ d.
    let brute = (0..n)
        .map(|_| 0..=d)
        .multi_cartesian_product()
        .map(|e| Monomial::new(&e))
        .all(|q| ci.contains(&q.mul(&m)) == expected.contains(&q));
    (colon, expected, brute)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceReport {
    pub generators: Vec<u64>,
    pub c: usize,
    pub d: u32,
    pub checks: Vec<Check>,
}

impl ConsequenceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Permutation of `x_1, …, x_c` (as a full permutation of `x_0, …, x_c`
/// fixing `x_0`) carrying `l` onto `target`, if any.
pub fn match_up_to_permutation(l: &MonomialIdeal, target: &MonomialIdeal) -> Option<Vec<usize>> {
    let n = l.nvars();
    (1..n).permutations(n - 1).map(|p| std::iter::once(0).chain(p).collect::<Vec<_>>()).find(|p| &l.permute(p) == target)
}

/// The structure the bound forces at equality, checked one item at a time.
pub fn check_extremal_consequences(s: &NumericalSemigroup, caps: &EffortCaps) -> Result<ConsequenceReport> {
    let analysis = analyze(s, caps)?;
    let r = &analysis.report;
    if !r.extremal {
        return Err(Error::NotExtremal { e: r.e, bound: r.bound });
    }
    let (c, d) = (r.c, r.d);
    let l = analysis.cone.leading_ideal();
    let target = extremal_leading_ideal(c, d);
    let mut checks = Vec::new();

    let perm = match_up_to_permutation(&l, &target);
    checks.push(Check {
        name: "leading ideal shape",
        passed: perm.is_some(),
        detail: format!("L = {l:?}, target {target:?}, permutation {perm:?}"),
    });

    let aci_cm = r.classification == Classification::AlmostCompleteIntersection && r.cm;
    checks.push(Check {
        name: "almost complete intersection, Cohen-Macaulay",
        passed: aci_cm,
        detail: format!("class {}, cm {}", r.classification, r.cm),
    });

    let table = l.betti_lcm(BETTI_CAP)?;
    let formula: Vec<u64> = (0..=c as u32).map(|i| extremal_betti_formula(c as u32, i)).collect();
    checks.push(Check {
        name: "Betti totals",
        passed: table.totals() == formula,
        detail: format!("computed {:?}, formula {formula:?}", table.totals()),
    });

    let expected = extremal_graded_betti(c as u32, d);
    let koszul = l.betti_koszul(l.lcm_all().degree())?;
    checks.push(Check {
        name: "graded Betti numbers",
        passed: table == expected && koszul == table,
        detail: format!(
            "lcm lattice {:?}, formula {:?}, Koszul {}",
            table.graded(),
            expected.graded(),
            if koszul == table { "agrees" } else { "differs" }
        ),
    });

    let (colon, linked, brute) = linkage_identity(c, d);
    checks.push(Check {
        name: "linkage to a complete intersection",
        passed: colon == linked && brute,
        detail: format!("colon {colon:?}, expected {linked:?}, brute force {}", if brute { "agrees" } else { "differs" }),
    });

    Ok(ConsequenceReport { generators: r.generators.clone(), c, d, checks })
}

/// Whether `n0` is a product of `c` integers in `[2, d]`.
fn is_bounded_product(n0: u64, c: u32, d: u64) -> bool {
    fn rec(rest: u64, k: u32, low: u64, d: u64) -> bool {
        if k == 0 {
            return rest == 1;
        }
        (low..=d.min(rest)).any(|f| rest.is_multiple_of(f) && rec(rest / f, k - 1, f, d))
    }
    rec(n0, c, 2, d)
}

/// Least `d ≥ 2` for which a tangent cone of multiplicity `n0` and
/// codimension `c` generated in degree `≤ d` is not ruled out: either a
/// complete intersection (`n0` a product of `c` degrees in `[2, d]`) or
/// `n0 ≤ bound(c, d)`.
pub fn min_relation_degree_bound(n0: u64, c: u32) -> Result<u32> {
    if n0 < 3 || c < 2 {
        return Err(Error::ParameterOutOfRange(format!("need n0 >= 3 and c >= 2, got {n0}, {c}")));
    }
    let mut d = 2u32;
    loop {
        if is_bounded_product(n0, c, d as u64) || n0 <= bound(c, d)? {
            return Ok(d);
        }
        d += 1;
    }
}

/// For quadratic tangent cones: `e ≤ 2^c − 2^{c−2}` or `e = 2^c`.
pub fn quadratic_gap_check(report: &AnalysisReport) -> Result<bool> {
    if report.d != 2 || report.c < 2 {
        return Err(Error::NotQuadratic(report.d));
    }
    let c = report.c as u32;
    Ok(report.e <= bound(c, 2)? || report.e == 1u64 << c)
}
