use std::collections::{BTreeMap, HashMap};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::Instant;

use anyhow::Context;
use clap::Args;
use monocurve::extremal::{self, AnalysisReport};
use monocurve::tangentcone::Classification;
use monocurve::{enumerate_semigroups, EffortCaps, Error, NumericalSemigroup};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Failure, Outcome};

#[derive(Args)]
pub struct SurveyArgs {
    /// Embedding dimension, a single value or an inclusive range such as 3..5
    #[arg(long, default_value = "3")]
    embdim: String,
    /// Largest generator
    #[arg(long)]
    max_gen: u64,
    /// CSV output path
    #[arg(long)]
    out: PathBuf,
    /// JSONL cache; cached semigroups are not recomputed
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// One line of the cache file: the report plus the time it took, keyed by
/// the report's generator tuple.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct CacheEntry {
    #[serde(flatten)]
    report: AnalysisReport,
    elapsed_ms: u64,
}

/// One CSV row. Rows for semigroups whose analysis hit an effort cap carry
/// only the generators, the time spent and the error.
#[derive(Clone, Debug, Serialize)]
struct SurveyRow {
    generators: String,
    n0: u64,
    c: usize,
    d: Option<u32>,
    e: Option<u64>,
    bound: Option<u64>,
    class: Option<&'static str>,
    cm: Option<bool>,
    theorem_ok: Option<bool>,
    extremal: Option<bool>,
    koszul: Option<&'static str>,
    elapsed_ms: u64,
    error: Option<String>,
}

enum Analyzed {
    Done { report: AnalysisReport, elapsed_ms: u64 },
    Failed { error: Error, elapsed_ms: u64 },
}

fn parse_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Input(format!("bad embedding dimension range {text:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().trim_start_matches('=').parse().map_err(|_| bad())?),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo < 2 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn load_cache(path: &PathBuf) -> anyhow::Result<HashMap<Vec<u64>, CacheEntry>> {
    let mut cache = HashMap::new();
    if !path.exists() {
        return Ok(cache);
    }
    let file = File::open(path).with_context(|| format!("opening cache {}", path.display()))?;
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: CacheEntry =
            serde_json::from_str(&line).with_context(|| format!("{}:{}: bad cache line", path.display(), i + 1))?;
        cache.insert(entry.report.generators.clone(), entry);
    }
    Ok(cache)
}

fn row(s: &NumericalSemigroup, outcome: &Analyzed) -> SurveyRow {
    let mut row = SurveyRow {
        generators: s.to_string(),
        n0: s.multiplicity(),
        c: s.codimension(),
        d: None,
        e: None,
        bound: None,
        class: None,
        cm: None,
        theorem_ok: None,
        extremal: None,
        koszul: None,
        elapsed_ms: 0,
        error: None,
    };
    match outcome {
        Analyzed::Done { report: r, elapsed_ms } => {
            row.d = Some(r.d);
            row.e = Some(r.e);
            row.bound = r.bound;
            row.class = Some(r.classification.as_str());
            row.cm = Some(r.cm);
            row.theorem_ok = Some(r.theorem_ok);
            row.extremal = Some(r.extremal);
            row.koszul = Some(r.koszul.as_str());
            row.elapsed_ms = *elapsed_ms;
        }
        Analyzed::Failed { error, elapsed_ms } => {
            row.error = Some(error.to_string());
            row.elapsed_ms = *elapsed_ms;
        }
    }
    row
}

#[derive(Default)]
struct Summary {
    total: usize,
    cached: usize,
    errors: Vec<String>,
    violations: Vec<String>,
    extremal: Vec<String>,
    quadratic: usize,
    gap_failures: Vec<String>,
    not_ci_c1: Vec<String>,
    ci: usize,
    aci: usize,
    not_cm: usize,
    first_not_cm: Option<String>,
}

pub fn run(args: &SurveyArgs, caps: &EffortCaps) -> Outcome {
    let (lo, hi) = parse_range(&args.embdim)?;
    if args.jobs == 0 {
        return Err(Failure::Input("--jobs must be positive".into()));
    }
    let semigroups: Vec<NumericalSemigroup> = (lo..=hi).flat_map(|e| enumerate_semigroups(e, args.max_gen)).collect();
    let cache = match &args.cache {
        Some(p) => load_cache(p)?,
        None => HashMap::new(),
    };

    let mut outcomes: BTreeMap<Vec<u64>, Analyzed> = BTreeMap::new();
    let mut todo = Vec::new();
    for s in &semigroups {
        match cache.get(s.generators()) {
            Some(entry) => {
                outcomes.insert(
                    s.generators().to_vec(),
                    Analyzed::Done { report: entry.report.clone(), elapsed_ms: entry.elapsed_ms },
                );
            }
            None => todo.push(s.clone()),
        }
    }
    let cached = outcomes.len();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::Input(format!("thread pool: {e}")))?;
    let (tx, rx) = mpsc::channel::<CacheEntry>();
    let cache_path = args.cache.clone();
    // Single writer: cache lines are appended in completion order.
    let writer = std::thread::spawn(move || -> std::io::Result<()> {
        let Some(path) = cache_path else {
            for _ in rx {}
            return Ok(());
        };
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        for entry in rx {
            writeln!(file, "{}", serde_json::to_string(&entry).expect("serializable"))?;
        }
        file.flush()
    });
    let fresh: Vec<(Vec<u64>, Analyzed)> = pool.install(|| {
        todo.par_iter()
            .map_with(tx, |tx, s| {
                let start = Instant::now();
                let result = extremal::analyze(s, caps);
                let elapsed_ms = start.elapsed().as_millis() as u64;
                let outcome = match result {
                    Ok(a) => {
                        let entry = CacheEntry { report: a.report.clone(), elapsed_ms };
                        tx.send(entry).expect("cache writer alive");
                        Analyzed::Done { report: a.report, elapsed_ms }
                    }
                    Err(error) => Analyzed::Failed { error, elapsed_ms },
                };
                (s.generators().to_vec(), outcome)
            })
            .collect()
    });
    writer.join().expect("cache writer panicked").context("writing cache")?;
    outcomes.extend(fresh);

    let mut out = csv::Writer::from_path(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let mut summary = Summary { total: semigroups.len(), cached, ..Summary::default() };
    for (gens, outcome) in &outcomes {
        let s = NumericalSemigroup::canonicalize(gens)?;
        let r = row(&s, outcome);
        out.serialize(&r).context("writing CSV row")?;
        tally(&mut summary, &s, outcome);
    }
    out.flush().context("flushing CSV")?;
    print_summary(&summary);

    if !summary.violations.is_empty() || !summary.gap_failures.is_empty() || !summary.not_ci_c1.is_empty() {
        return Err(Failure::Violation(format!(
            "{} bound violations, {} gap failures, {} plane curves not CI",
            summary.violations.len(),
            summary.gap_failures.len(),
            summary.not_ci_c1.len()
        )));
    }
    Ok(())
}

fn tally(summary: &mut Summary, s: &NumericalSemigroup, outcome: &Analyzed) {
    let r = match outcome {
        Analyzed::Done { report, .. } => report,
        Analyzed::Failed { error: Error::EffortCapExceeded(msg), .. } => {
            summary.errors.push(format!("{s}: {msg}"));
            return;
        }
        Analyzed::Failed { error, .. } => {
            summary.violations.push(format!("{s}: {error}"));
            return;
        }
    };
    match r.classification {
        Classification::CompleteIntersection => summary.ci += 1,
        Classification::AlmostCompleteIntersection => summary.aci += 1,
        Classification::Other => {}
    }
    if !r.cm {
        summary.not_cm += 1;
        summary.first_not_cm.get_or_insert_with(|| s.to_string());
    }
    if r.c == 1 {
        if r.classification != Classification::CompleteIntersection {
            summary.not_ci_c1.push(s.to_string());
        }
        return;
    }
    if !r.theorem_ok {
        summary.violations.push(s.to_string());
    }
    if r.extremal {
        summary.extremal.push(s.to_string());
    }
    if r.d == 2 {
        summary.quadratic += 1;
        if !extremal::quadratic_gap_check(r).unwrap_or(false) {
            summary.gap_failures.push(s.to_string());
        }
    }
}

fn print_list(items: &[String]) {
    const SHOWN: usize = 20;
    for item in items.iter().take(SHOWN) {
        println!("  {item}");
    }
    if items.len() > SHOWN {
        println!("  ... and {} more", items.len() - SHOWN);
    }
}

fn print_summary(s: &Summary) {
    println!("semigroups          {}", s.total);
    println!("from cache          {}", s.cached);
    println!("effort-cap errors   {}", s.errors.len());
    print_list(&s.errors);
    println!("complete inters.    {}", s.ci);
    println!("almost complete     {}", s.aci);
    println!("not Cohen-Macaulay  {}", s.not_cm);
    if let Some(first) = &s.first_not_cm {
        println!("  first: {first}");
    }
    println!("bound violations    {}", s.violations.len());
    print_list(&s.violations);
    println!("extremal            {}", s.extremal.len());
    print_list(&s.extremal);
    println!("quadratic           {}", s.quadratic);
    println!("gap failures        {}", s.gap_failures.len());
    print_list(&s.gap_failures);
    if !s.not_ci_c1.is_empty() {
        println!("plane curves not CI {}", s.not_ci_c1.len());
        print_list(&s.not_ci_c1);
    }
}
