use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monocurve::extremal::{self, AnalysisReport, ConsequenceReport, BETTI_CAP};
use monocurve::poly::parse_monomial_list;
use monocurve::semigroup::parse_generators;
use monocurve::{EffortCaps, Error, MonomialIdeal, NumericalSemigroup, VarNames};

mod survey;

/// Tangent cones of monomial curves and the multiplicity bound for
/// non complete intersection tangent cones.
#[derive(Parser)]
#[command(name = "monocurve", version)]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Maximum number of S-pairs reduced in one Gröbner basis computation
    #[arg(long, global = true, env = "MONOCURVE_MAX_PAIRS")]
    max_pairs: Option<usize>,
    /// Maximum degree of an S-pair lcm
    #[arg(long, global = true, env = "MONOCURVE_MAX_DEGREE")]
    max_degree: Option<u32>,
}

impl CapArgs {
    fn caps(&self) -> EffortCaps {
        let default = EffortCaps::default();
        EffortCaps {
            max_pairs: self.max_pairs.unwrap_or(default.max_pairs),
            max_degree: self.max_degree.unwrap_or(default.max_degree),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one semigroup, e.g. `analyze 3,4,5`
    Analyze {
        generators: String,
        #[arg(long)]
        json: bool,
        /// Also compute the Betti numbers of the leading ideal
        #[arg(long)]
        betti: bool,
        /// For extremal semigroups, check the structure forced at equality
        #[arg(long)]
        consequences: bool,
    },
    /// Analyze every semigroup in a range and write a CSV table
    Survey(survey::SurveyArgs),
    /// The semigroup attaining the bound for given c and d
    Family {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        /// Run the equality-case checks on it
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimum products of c integers in [1, d] at sums (c-1)d and (c-1)d+1
    Lemma {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        json: bool,
    },
    /// Graded Betti numbers of P/L for a monomial ideal L, e.g. "x1^2,x1*x2"
    Betti {
        ideal: String,
        /// Number of variables x0, ..., x(vars-1)
        #[arg(long)]
        vars: usize,
        #[arg(long, default_value_t = BETTI_CAP)]
        cap: usize,
    },
}

/// Exit status: 0 success, 1 a violated statement (or failed consistency
/// check), 2 bad input, 3 an effort cap.
#[derive(Debug)]
pub(crate) enum Failure {
    Violation(String),
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EffortCapExceeded(_) | Error::CapExceeded(..) => Failure::Cap(e.to_string()),
            Error::Internal(_) => Failure::Violation(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(format!("{e:#}"))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = cli.caps.caps();
    let outcome = match cli.command {
        Command::Analyze { generators, json, betti, consequences } => analyze(&generators, json, betti, consequences, &caps),
        Command::Survey(args) => survey::run(&args, &caps),
        Command::Family { c, d, check, json } => family(c, d, check, json, &caps),
        Command::Lemma { c, d, json } => lemma(c, d, json),
        Command::Betti { ideal, vars, cap } => betti(&ideal, vars, cap),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("effort cap: {msg}");
            ExitCode::from(3)
        }
    }
}

fn parse_semigroup(text: &str) -> Result<NumericalSemigroup, Failure> {
    let raw = parse_generators(text)?;
    Ok(NumericalSemigroup::canonicalize(&raw)?)
}

fn print_report(r: &AnalysisReport) {
    let gens: Vec<String> = r.generators.iter().map(u64::to_string).collect();
    println!("semigroup    <{}>", gens.join(","));
    println!("c            {}", r.c);
    println!("d            {}", r.d);
    println!("e            {}", r.e);
    match r.bound {
        Some(b) => println!("bound        {b}"),
        None => println!("bound        -"),
    }
    println!("class        {}", r.classification);
    println!("cm           {}", r.cm);
    println!("theorem_ok   {}", r.theorem_ok);
    println!("extremal     {}", r.extremal);
    println!("koszul       {}", r.koszul.as_str());
    if let Some(t) = &r.betti_totals {
        println!("betti        {t:?}");
    }
}

fn print_consequences(report: &ConsequenceReport) {
    for check in &report.checks {
        println!("[{}] {}: {}", if check.passed { "pass" } else { "FAIL" }, check.name, check.detail);
    }
}

fn analyze(text: &str, json: bool, betti: bool, consequences: bool, caps: &EffortCaps) -> Outcome {
    let s = parse_semigroup(text)?;
    if s.embedding_dimension() < 3 {
        return Err(Failure::Input(format!("{s} has embedding dimension {}; the bound needs at least 3", s.embedding_dimension())));
    }
    let analysis = extremal::analyze(&s, caps)?;
    let mut report = analysis.report;
    if betti {
        let l = analysis.cone.leading_ideal();
        report.betti_totals = Some(checked_betti(&l, BETTI_CAP)?.totals());
    }
    let checks = if consequences && report.extremal { Some(extremal::check_extremal_consequences(&s, caps)?) } else { None };

    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
        if let Some(c) = &checks {
            println!("{}", serde_json::to_string(c).expect("serializable"));
        }
    } else {
        print_report(&report);
        match &checks {
            Some(c) => print_consequences(c),
            None if consequences => println!("not extremal; no equality-case checks apply"),
            None => {}
        }
    }
    if !report.theorem_ok {
        return Err(Failure::Violation(format!("{s}: e = {} exceeds bound {:?}", report.e, report.bound)));
    }
    if checks.is_some_and(|c| !c.all_passed()) {
        return Err(Failure::Violation(format!("{s}: an equality-case check failed")));
    }
    Ok(())
}

fn family(c: u32, d: u32, check: bool, json: bool, caps: &EffortCaps) -> Outcome {
    let s = extremal::extremal_family(c, d)?;
    let report = if check { Some(extremal::check_extremal_consequences(&s, caps)?) } else { None };
    if json {
        let value = serde_json::json!({ "c": c, "d": d, "generators": s.generators(), "checks": report });
        println!("{value}");
    } else {
        println!("{s}");
        if let Some(r) = &report {
            print_consequences(r);
        }
    }
    match report {
        Some(r) if !r.all_passed() => Err(Failure::Violation(format!("{s}: an equality-case check failed"))),
        _ => Ok(()),
    }
}

fn lemma(c: u32, d: u32, json: bool) -> Outcome {
    if c < 2 || d < 2 {
        return Err(Failure::Input(format!("lemma needs c, d >= 2, got c = {c}, d = {d}")));
    }
    let equal_sum = (c - 1) * d;
    let at = extremal::lemma_min_product(c, d, equal_sum)?;
    let above = extremal::lemma_min_product(c, d, equal_sum + 1)?;
    let closed_at = (d as u64 - 1) * (d as u64).pow(c - 2);
    let closed_above = (d as u64).pow(c - 1);
    let mut expected_argmin = vec![1, d - 1];
    expected_argmin.extend(std::iter::repeat_n(d, c as usize - 2));
    expected_argmin.sort_unstable();
    let ok = at.min_product == closed_at && at.argmins == vec![expected_argmin] && above.min_product >= closed_above;
    if json {
        let value = serde_json::json!({
            "c": c,
            "d": d,
            "rows": [
                { "sum": equal_sum, "min_product": at.min_product, "argmins": at.argmins, "closed_form": closed_at },
                { "sum": equal_sum + 1, "min_product": above.min_product, "argmins": above.argmins, "closed_form": closed_above },
            ],
            "ok": ok,
        });
        println!("{value}");
    } else {
        println!("sum {equal_sum}: min product {} at {:?}; (d-1)d^(c-2) = {closed_at}", at.min_product, at.argmins);
        println!("sum {}: min product {} at {:?}; d^(c-1) = {closed_above}", equal_sum + 1, above.min_product, above.argmins);
        println!("{}", if ok { "agrees with the closed forms" } else { "DISAGREES with the closed forms" });
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Violation(format!("lemma fails for c = {c}, d = {d}")))
    }
}

fn checked_betti(l: &MonomialIdeal, cap: usize) -> Result<monocurve::BettiTable, Failure> {
    let table = l.betti_lcm(cap)?;
    let koszul = l.betti_koszul(l.lcm_all().degree())?;
    if koszul != table {
        return Err(Failure::Violation(format!(
            "Betti numbers disagree: lcm lattice {:?}, Koszul {:?}",
            table.graded(),
            koszul.graded()
        )));
    }
    Ok(table)
}

fn betti(text: &str, vars: usize, cap: usize) -> Outcome {
    if vars == 0 {
        return Err(Failure::Input("--vars must be positive".into()));
    }
    let gens = parse_monomial_list(text, &VarNames::new(vars))?;
    let l = MonomialIdeal::new(vars, gens);
    let table = checked_betti(&l, cap)?;
    println!("{}", serde_json::to_string(&table).expect("serializable"));
    Ok(())
}
