//! The acceptance criteria, one pass/fail line each. Runs as a plain binary
//! (`harness = false`) and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use itertools::Itertools;
use monocurve::extremal::{self, Analysis, KoszulWitness, BETTI_CAP};
use monocurve::groebner::{groebner_basis_with, Strategy};
use monocurve::tangentcone::{Classification, GradedIdeal};
use monocurve::{enumerate_semigroups, Binomial, EffortCaps, Monomial, MonomialIdeal, NumericalSemigroup, Q};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const SURVEY_BETTI_CAP: usize = 20;

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn sg(g: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::canonicalize(g).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

struct Survey {
    analyses: Vec<Analysis>,
    failures: Vec<String>,
}

fn run_survey(caps: &EffortCaps) -> Survey {
    let mut analyses = Vec::new();
    let mut failures = Vec::new();
    for s in (3..=5).flat_map(|e| enumerate_semigroups(e, 20)) {
        match extremal::analyze(&s, caps) {
            Ok(a) => analyses.push(a),
            Err(e) => failures.push(format!("{s}: {e}")),
        }
    }
    Survey { analyses, failures }
}

fn bound_survey(survey: &Survey) -> Verdict {
    ensure(survey.failures.is_empty(), || format!("analysis failed: {:?}", survey.failures))?;
    ensure(survey.analyses.len() > 1000, || format!("only {} instances", survey.analyses.len()))?;
    let bad: Vec<String> =
        survey.analyses.iter().filter(|a| !a.report.theorem_ok).map(|a| format!("{:?}", a.report.generators)).collect();
    ensure(bad.is_empty(), || format!("violations: {bad:?}"))?;
    let extremal = survey.analyses.iter().filter(|a| a.report.extremal).count();
    Ok(format!("{} semigroups, 0 violations, {extremal} attain the bound", survey.analyses.len()))
}

fn quadratic_fixture(caps: &EffortCaps) -> Verdict {
    let r = extremal::verify_theorem(&sg(&[11, 13, 14, 15, 19]), caps).map_err(|e| e.to_string())?;
    let ok = r.d == 2
        && r.c == 4
        && r.e == 11
        && r.bound == Some(12)
        && r.classification == Classification::AlmostCompleteIntersection
        && !r.extremal
        && r.theorem_ok;
    ensure(ok, || format!("{r:?}"))?;
    Ok("<11,13,14,15,19>: d 2, c 4, e 11, bound 12, ACI, not extremal".into())
}

fn family_params() -> Vec<(u32, u32)> {
    let mut p: Vec<(u32, u32)> = [2, 3, 4].into_iter().cartesian_product([2, 3]).collect();
    p.push((5, 2));
    p
}

fn sharp_family(caps: &EffortCaps) -> Verdict {
    for (c, d) in family_params() {
        let s = extremal::extremal_family(c, d).map_err(|e| e.to_string())?;
        let a = extremal::analyze(&s, caps).map_err(|e| format!("{s}: {e}"))?;
        let e = (d as u64).pow(c) - (d as u64 - 1) * (d as u64).pow(c - 2);
        ensure(a.report.e == e && a.report.extremal, || format!("{s}: e = {}, expected {e}", a.report.e))?;
        let degs = &a.invariants.min_gen_degrees;
        ensure(degs.iter().all(|&g| g <= d), || format!("{s}: generator degrees {degs:?} exceed {d}"))?;
        let l = a.cone.leading_ideal();
        let target = extremal::extremal_leading_ideal(c as usize, d);
        ensure(extremal::match_up_to_permutation(&l, &target).is_some(), || format!("{s}: L = {l:?}"))?;
    }
    Ok(format!("{} instances, e = d^c - (d-1)d^(c-2), L matches up to permutation", family_params().len()))
}

/// Three rows of the resolution: the Koszul part in degree i·d, and the two
/// Hilbert–Burch shifts i·d − 1 and (i − 1)·d + 1 from the second syzygy on.
fn graded_formula(c: u32, d: u32, i: u32, j: u32) -> u64 {
    let k = |m: i64| if m < 0 { 0 } else { binomial(c as u64 - 2, m as u64) };
    let i = i as i64;
    let mut b = 0;
    if j as i64 == i * d as i64 {
        b += k(i) + 3 * k(i - 1);
    }
    if i >= 2 && j as i64 == i * d as i64 - 1 {
        b += k(i - 2);
    }
    if i >= 2 && j as i64 == (i - 1) * d as i64 + 1 {
        b += k(i - 2);
    }
    b
}

fn betti_numbers(caps: &EffortCaps) -> Verdict {
    for (c, d) in family_params() {
        let s = extremal::extremal_family(c, d).map_err(|e| e.to_string())?;
        let l = extremal::analyze(&s, caps).map_err(|e| e.to_string())?.cone.leading_ideal();
        let table = l.betti_lcm(BETTI_CAP).map_err(|e| e.to_string())?;
        let k = |m: i64| if m < 0 { 0 } else { binomial(c as u64 - 2, m as u64) };
        let totals: Vec<u64> = (0..=c as i64).map(|i| k(i) + 3 * k(i - 1) + 2 * k(i - 2)).collect();
        ensure(table.totals() == totals, || format!("{s}: totals {:?}, expected {totals:?}", table.totals()))?;
        for i in 0..=c {
            for j in 0..=(c * d) {
                let (got, want) = (table.get(i as usize, j), graded_formula(c, d, i, j));
                ensure(got == want, || format!("{s}: beta_({i},{j}) = {got}, expected {want}"))?;
            }
        }
        let koszul = l.betti_koszul(l.lcm_all().degree()).map_err(|e| e.to_string())?;
        ensure(koszul == table, || format!("{s}: Koszul {:?} vs lcm {:?}", koszul.graded(), table.graded()))?;
    }
    Ok("totals and graded entries match the formulas; Koszul homology agrees".into())
}

/// Minimum product over all multisets of `c` values in `[1, d]` with the
/// given sum, and every multiset attaining it.
fn brute_min_product(c: u32, d: u32, sum: u32) -> (u64, BTreeSet<Vec<u32>>) {
    let mut best = (u64::MAX, BTreeSet::new());
    for v in (1..=d).combinations_with_replacement(c as usize) {
        if v.iter().sum::<u32>() != sum {
            continue;
        }
        let p: u64 = v.iter().map(|&x| x as u64).product();
        if p < best.0 {
            best = (p, BTreeSet::new());
        }
        if p == best.0 {
            best.1.insert(v);
        }
    }
    best
}

fn lemma_oracle() -> Verdict {
    for c in 2..=6u32 {
        for d in 2..=6u32 {
            let sum = (c - 1) * d;
            let (min, argmins) = brute_min_product(c, d, sum);
            let closed = (d as u64 - 1) * (d as u64).pow(c - 2);
            let mut unique = vec![1, d - 1];
            unique.extend(std::iter::repeat_n(d, c as usize - 2));
            unique.sort_unstable();
            ensure(min == closed, || format!("c {c}, d {d}: min {min}, expected {closed}"))?;
            ensure(argmins == BTreeSet::from([unique.clone()]), || format!("c {c}, d {d}: argmins {argmins:?}"))?;
            let lib = extremal::lemma_min_product(c, d, sum).map_err(|e| e.to_string())?;
            ensure(lib.min_product == min && lib.argmins == vec![unique], || format!("c {c}, d {d}: library {lib:?}"))?;

            let (above, _) = brute_min_product(c, d, sum + 1);
            ensure(above >= (d as u64).pow(c - 1), || format!("c {c}, d {d}: min {above} at sum + 1"))?;
            let lib = extremal::lemma_min_product(c, d, sum + 1).map_err(|e| e.to_string())?;
            ensure(lib.min_product == above, || format!("c {c}, d {d}: library {lib:?} at sum + 1"))?;
        }
    }
    Ok("2 <= c, d <= 6: (d-1)d^(c-2) with a unique minimizer; >= d^(c-1) one above".into())
}

fn multiplicity_identity(survey: &Survey) -> Verdict {
    let bad: Vec<String> = survey
        .analyses
        .iter()
        .filter(|a| {
            let s = &a.report.generators;
            a.report.e != s[0] || a.invariants.codim != s.len() - 1 || a.invariants.dim != 1
        })
        .map(|a| format!("{:?}", a.report.generators))
        .collect();
    ensure(survey.failures.is_empty() && bad.is_empty(), || format!("mismatches: {bad:?}"))?;
    Ok(format!("e = n0, codim = c, dim = 1 on all {}", survey.analyses.len()))
}

fn linkage() -> Verdict {
    for c in 2..=5usize {
        for d in 2..=4u32 {
            let n = c + 1;
            let ci = MonomialIdeal::new(n, (1..=c).map(|v| Monomial::var(n, v, d)));
            let m = Monomial::var(n, 1, d - 1).mul(&Monomial::var(n, 2, 1));
            let colon = ci.colon(&m);
            let mut gens = vec![Monomial::var(n, 1, 1), Monomial::var(n, 2, d - 1)];
            gens.extend((3..=c).map(|v| Monomial::var(n, v, d)));
            let expected = MonomialIdeal::new(n, gens);
            ensure(colon == expected, || format!("c {c}, d {d}: colon {colon:?}"))?;
            // q·m ∈ CI  ⟺  q ∈ expected, tested by exponent-wise divisibility.
            let in_ci = |q: &[u32], add: &[u32]| (1..=c).any(|v| q[v] + add[v] >= d);
            let m_exps = m.exponents().to_vec();
            let in_expected =
                |q: &[u32]| q[1] >= 1 || q[2] >= d - 1 || (3..=c).any(|v| q[v] >= d);
            for q in (0..n).map(|_| 0..=d).multi_cartesian_product() {
                ensure(in_ci(&q, &m_exps) == in_expected(&q), || format!("c {c}, d {d}: disagree at {q:?}"))?;
            }
            let (lib_colon, lib_expected, lib_brute) = extremal::linkage_identity(c, d);
            ensure(lib_colon == expected && lib_expected == expected && lib_brute, || format!("c {c}, d {d}: library"))?;
        }
    }
    Ok("c <= 5, d <= 4: colon equals the linked ideal; brute force agrees".into())
}

fn relation_degree() -> Verdict {
    let d = extremal::min_relation_degree_bound(100, 4).map_err(|e| e.to_string())?;
    ensure(d == 4, || format!("got {d}"))?;
    Ok("n0 = 100, c = 4 forces a minimal relation of degree >= 4".into())
}

fn quadratic_gap(survey: &Survey, caps: &EffortCaps) -> Verdict {
    let mut quadratic = 0;
    for a in survey.analyses.iter().filter(|a| a.report.d == 2) {
        quadratic += 1;
        let ok = extremal::quadratic_gap_check(&a.report).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{:?}: e = {}", a.report.generators, a.report.e))?;
    }
    // e = 2^c is reached by quadratic complete intersections.
    let r = extremal::verify_theorem(&sg(&[4, 5, 6]), caps).map_err(|e| e.to_string())?;
    ensure(r.d == 2 && r.e == 4 && extremal::quadratic_gap_check(&r) == Ok(true), || format!("<4,5,6>: {r:?}"))?;
    Ok(format!("{quadratic} quadratic semigroups, all inside the gap condition"))
}

fn koszul_witness(caps: &EffortCaps) -> Verdict {
    for c in 2..=5 {
        let s = extremal::extremal_family(c, 2).map_err(|e| e.to_string())?;
        let a = extremal::analyze(&s, caps).map_err(|e| e.to_string())?;
        ensure(a.report.koszul == KoszulWitness::Certified, || format!("{s}: {:?}", a.report.koszul))?;
        let l = a.cone.leading_ideal();
        ensure(l.mingens().iter().all(|g| g.degree() == 2), || format!("{s}: L = {l:?}"))?;
    }
    Ok("quadratic leading ideal certified for c = 2..5".into())
}

fn shuffled_with_redundancy(gens: &[Binomial], rng: &mut StdRng) -> Vec<Binomial> {
    let mut out = gens.to_vec();
    let g = &gens[rng.gen_range(0..gens.len())];
    let v = rng.gen_range(0..g.nvars());
    out.push(g.mul_monomial(&Monomial::var(g.nvars(), v, 1)));
    out.shuffle(rng);
    out
}

fn engine_properties(survey: &Survey, caps: &EffortCaps) -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let a = &survey.analyses[rng.gen_range(0..survey.analyses.len())];
        let name = format!("trial {trial}, {:?}", a.report.generators);

        let toric = a.toric.generators();
        let order = a.toric.order();
        let reference = groebner_basis_with::<Q>(&a.toric.polynomials::<Q>(), &order, caps, Strategy::General)
            .map_err(|e| format!("{name}: {e}"))?;
        let input: Vec<_> = shuffled_with_redundancy(toric, &mut rng).iter().map(Binomial::to_polynomial::<Q>).collect();
        for strategy in [Strategy::Auto, Strategy::General] {
            let gb = groebner_basis_with::<Q>(&input, &order, caps, strategy).map_err(|e| format!("{name}: {e}"))?;
            ensure(gb == reference, || format!("{name}: {strategy:?} basis differs under shuffling"))?;
        }

        let cone_gens = shuffled_with_redundancy(a.cone.generators(), &mut rng);
        let cone = GradedIdeal::new(a.cone.nvars(), cone_gens, caps).map_err(|e| format!("{name}: {e}"))?;
        ensure(cone.gb() == a.cone.gb(), || format!("{name}: tangent cone basis differs under shuffling"))?;
        let degs = cone.minimal_generator_degrees(caps).map_err(|e| format!("{name}: {e}"))?;
        ensure(degs == a.invariants.min_gen_degrees, || format!("{name}: generator degrees {degs:?}"))?;
    }

    // HF(P/J) by counting classes of monomials modulo the binomials of J,
    // against HF(P/L) from the Hilbert series of the leading ideal.
    let mut compared = 0;
    for a in survey.analyses.iter().filter(|a| a.report.c == 2).chain(survey.analyses.iter().filter(|a| a.report.c > 2).step_by(40)) {
        let direct = a.cone.hilbert_function_direct(30);
        let series: Vec<u64> = a.cone.leading_ideal().hilbert_function(30).into_iter().map(|v| v as u64).collect();
        ensure(direct == series, || format!("{:?}: HF {direct:?} vs {series:?}", a.report.generators))?;
        compared += 1;
    }

    for a in &survey.analyses {
        let l = a.cone.leading_ideal();
        // Some survey leading ideals have more minimal generators than the default cap.
        let table = l.betti_lcm(SURVEY_BETTI_CAP).map_err(|e| format!("{:?}: {e}", a.report.generators))?;
        ensure(table.alternating_sum() == 0, || format!("{:?}: alternating sum {}", a.report.generators, table.alternating_sum()))?;
        let mut numerator = l.hilbert().numerator;
        while numerator.len() > 1 && numerator.last() == Some(&0) {
            numerator.pop();
        }
        ensure(table.hilbert_numerator() == numerator, || {
            format!("{:?}: N(t) {:?} vs {:?}", a.report.generators, table.hilbert_numerator(), numerator)
        })?;
    }
    Ok(format!(
        "100 shuffle trials canonical; HF to degree 30 on {compared}; Betti sums and N(t) on {}",
        survey.analyses.len()
    ))
}

fn main() -> ExitCode {
    let caps = EffortCaps::default();
    let start = Instant::now();
    let survey = run_survey(&caps);
    let survey_time = start.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("bound survey, embdim 3-5, generators <= 20", Box::new(|| bound_survey(&survey))),
        ("quadratic fixture <11,13,14,15,19>", Box::new(|| quadratic_fixture(&caps))),
        ("sharp family", Box::new(|| sharp_family(&caps))),
        ("Betti numbers of the extremal leading ideal", Box::new(|| betti_numbers(&caps))),
        ("minimum products", Box::new(lemma_oracle)),
        ("multiplicity and codimension", Box::new(|| multiplicity_identity(&survey))),
        ("linkage identity", Box::new(linkage)),
        ("minimal relation degree for n0 = 100, c = 4", Box::new(relation_degree)),
        ("quadratic gap", Box::new(|| quadratic_gap(&survey, &caps))),
        ("Koszul witness", Box::new(|| koszul_witness(&caps))),
        ("engine properties", Box::new(|| engine_properties(&survey, &caps))),
    ];

    println!("survey analyzed in {:.1?}", survey_time);
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({:.1?})", i + 1, t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
