use std::process::ExitCode;

use alg2d_core::catalog::{
    instantiate, sweep_verify, verify_params, Budget, FamilyId, OracleMode, ProbeReport, Regime, SweepOptions,
    SweepReport, Verdict, VerifyLine, DEFAULT_SEED,
};
use alg2d_core::census::{oracle_census, OracleCensus};
use alg2d_core::field::{parse_field, parse_finite_field, AnyField, Field, GaloisField};
use alg2d_core::poly::{classify_cubic, roots_in_field, splitting_field, RootSet, UPoly};
use alg2d_core::report::{analyze, analyze_finite, analyze_generic, AnalysisReport, AnalyzeOptions, LinesReport};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

/// Subalgebras, idempotents, ideals and quasiunits of two-dimensional algebras.
#[derive(Parser)]
#[command(name = "alg2d", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one algebra given by its structure constants `a1,a2,a3,a4;b1,b2,b3,b4`.
    Analyze {
        field: String,
        #[arg(allow_hyphen_values = true)]
        msc: String,
        #[arg(long)]
        json: bool,
        /// Enumerate over a splitting field of every defining polynomial.
        #[arg(long)]
        closed: bool,
        /// Also enumerate by brute force and require agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Instantiate a canonical family and check it against the tables.
    Canonical {
        family: String,
        regime: String,
        /// Comma-separated parameters; empty for parameterless families.
        #[arg(allow_hyphen_values = true)]
        params: String,
        field: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        closed: bool,
    },
    /// Sweep one family (or `all`) and, for `all`, census every algebra against brute force.
    Verify {
        scope: String,
        field: String,
        /// A sample count or `exhaustive`.
        #[arg(long, default_value = "1000000", value_parser = parse_budget)]
        budget: Budget,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Run the brute-force oracle on every comparison, not only on table mismatches.
        #[arg(long)]
        oracle: bool,
    },
    /// Classify a polynomial of degree at most 3 (`c0,c1,c2,c3`) and list its roots.
    Roots {
        field: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
}

fn parse_budget(s: &str) -> Result<Budget, String> {
    if s.eq_ignore_ascii_case("exhaustive") {
        return Ok(Budget::Exhaustive);
    }
    s.parse().map(Budget::Samples).map_err(|_| format!("expected a sample count or `exhaustive`, got {s:?}"))
}

fn lines_text(s: &LinesReport) -> String {
    match s {
        LinesReport::All => "every line".into(),
        LinesReport::Lines(v) if v.is_empty() => "none".into(),
        LinesReport::Lines(v) => v.join(", "),
    }
}

fn print_report(r: &AnalysisReport) {
    println!("algebra {} over {}", r.msc, r.field);
    if r.enumerated_over != r.field {
        println!("enumerated over {}", r.enumerated_over);
    }
    println!("subalgebras ({}): {}", r.subalgebras.count(), lines_text(&r.subalgebras));
    if let Some(c) = r.subalgebra_category_closed {
        println!("  over a root-closed field: {c}");
    }
    let id = &r.idempotents;
    let mut parts = id.points.clone();
    parts.extend(id.family.clone());
    println!(
        "idempotents ({}): {}",
        id.count(),
        if parts.is_empty() { "none".into() } else { parts.join(", ") }
    );
    println!("left ideals ({}): {}", r.left_ideals.count(), lines_text(&r.left_ideals));
    println!("right ideals ({}): {}", r.right_ideals.count(), lines_text(&r.right_ideals));
    println!("two-sided ideals ({}): {}", r.two_sided.count(), lines_text(&r.two_sided));
    println!("simple: {}", if r.simple { "yes" } else { "no" });
    println!("left quasiunits: {}", r.quasiunits);
    if !r.splitting_fields_used.is_empty() {
        println!("splitting fields: {}", r.splitting_fields_used.join(", "));
    }
}

fn cmd_analyze(field: &str, msc: &str, json: bool, opts: AnalyzeOptions) -> Result<()> {
    let f = parse_field(field)?;
    let r = analyze(&f, msc, opts)?;
    if json {
        println!("{}", serde_json::to_string(&r)?);
    } else {
        print_report(&r);
    }
    Ok(())
}

fn print_line(l: &VerifyLine) {
    let oracle = l.oracle.as_deref().map(|o| format!(", oracle {o}")).unwrap_or_default();
    println!(
        "  {} {}({}) {}: predicted {}, solved {}{} [{}]",
        if l.verdict == Verdict::Agree { "agree" } else { "MISMATCH" },
        l.family,
        l.params.join(","),
        l.quantity.as_str(),
        l.predicted,
        l.solved,
        oracle,
        l.citation
    );
}

fn cmd_canonical(family: &str, regime: &str, params: &str, field: &str, json: bool, closed: bool) -> Result<()> {
    let fam = FamilyId::parse(family, Regime::parse(regime)?)?;
    let texts: Vec<&str> = if params.trim().is_empty() { Vec::new() } else { params.split(',').collect() };
    let (report, lines) = match parse_field(field)? {
        AnyField::Finite(f) => {
            let values = texts.iter().map(|t| f.parse_elem(t.trim())).collect::<Result<Vec<_>, _>>()?;
            let a = instantiate(fam, &values, &f)?;
            let report = analyze_finite(&a, AnalyzeOptions { closed, oracle: false })?;
            let opts = SweepOptions { oracle: OracleMode::Always, ..Default::default() };
            (report, verify_params(fam, &f, &values, &opts)?)
        }
        AnyField::Rational(q) => {
            if closed {
                bail!("--closed needs a finite field");
            }
            let values = texts.iter().map(|t| q.parse_elem(t.trim())).collect::<Result<Vec<_>, _>>()?;
            (analyze_generic(&instantiate(fam, &values, &q)?)?, Vec::new())
        }
    };
    if json {
        println!("{}", serde_json::to_string(&json!({ "family": fam.to_string(), "analysis": report, "predictions": lines }))?);
        return Ok(());
    }
    println!("{fam}({})", texts.join(","));
    print_report(&report);
    if lines.is_empty() {
        println!("table predictions need a finite field");
    } else {
        println!("table predictions:");
        lines.iter().for_each(print_line);
    }
    Ok(())
}

fn print_sweep(r: &SweepReport) {
    println!(
        "{} over {}: {} points ({}), {} comparisons, {} table mismatches, {} oracle mismatches",
        r.family,
        r.field,
        r.points,
        if r.exhaustive { "exhaustive" } else { "sampled" },
        r.lines.len(),
        r.mismatches().count(),
        r.oracle_mismatches().count()
    );
    r.mismatches().for_each(print_line);
    r.probes.iter().for_each(print_probe);
}

fn print_probe(p: &ProbeReport) {
    let tallies: Vec<String> =
        p.readings.iter().map(|t| format!("{}: {} agree, {} disagree", t.reading, t.agree, t.disagree)).collect();
    println!(
        "  probe {} ({}): {} [{}]",
        p.probe,
        p.description,
        p.resolved.as_deref().map_or("unresolved".into(), |r| format!("resolved to {r}")),
        tallies.join("; ")
    );
}

fn print_census(c: &OracleCensus) {
    println!(
        "census over {}: {} algebras ({}), {} oracle disagreements",
        c.field,
        c.algebras,
        if c.exhaustive { "exhaustive" } else { "sampled" },
        c.disagreements.len()
    );
    for d in &c.disagreements {
        println!("  {d}");
    }
}

/// Returns whether any oracle mismatch occurred.
fn cmd_verify(scope: &str, field: &str, budget: Budget, seed: u64, json: bool, oracle: bool) -> Result<bool> {
    let f: GaloisField = parse_finite_field(field).context("verification needs a finite field")?;
    let regime = Regime::of_characteristic(f.p().into());
    let families: Vec<FamilyId> = if scope.eq_ignore_ascii_case("all") {
        FamilyId::all(regime).collect()
    } else {
        vec![FamilyId::parse(scope, regime)?]
    };
    let opts = SweepOptions { budget, seed, oracle: if oracle { OracleMode::Always } else { OracleMode::OnMismatch } };
    let mut bug = false;
    for fam in families {
        let r = sweep_verify(fam, &f, &opts)?;
        bug |= r.oracle_mismatches().next().is_some();
        if json {
            for l in &r.lines {
                println!("{}", serde_json::to_string(l)?);
            }
            for p in &r.probes {
                println!("{}", serde_json::to_string(&json!({ "probe": p }))?);
            }
        } else {
            print_sweep(&r);
        }
    }
    if scope.eq_ignore_ascii_case("all") {
        let c = oracle_census(&f, budget, seed)?;
        bug |= !c.disagreements.is_empty();
        if json {
            println!("{}", serde_json::to_string(&json!({ "census": c }))?);
        } else {
            print_census(&c);
        }
    }
    Ok(bug)
}

fn cmd_roots(field: &str, poly: &str, json: bool) -> Result<()> {
    match parse_field(field)? {
        AnyField::Finite(f) => roots_report(&f, poly, json, |p| {
            if p.degree().unwrap_or(0) == 0 {
                return Ok(None);
            }
            let s = splitting_field(p)?;
            Ok(Some((s.field.spec(), s.roots.iter().map(|r| s.field.format_elem(r)).collect())))
        }),
        AnyField::Rational(q) => roots_report(&q, poly, json, |_| Ok(None)),
    }
}

type Split = Option<(String, Vec<String>)>;

fn roots_report<F: Field>(f: &F, text: &str, json: bool, split: impl Fn(&UPoly<F>) -> Result<Split>) -> Result<()> {
    let p = UPoly::parse(f, text)?;
    if p.degree().is_some_and(|d| d > 3) {
        bail!("degree {} exceeds 3", p.degree().unwrap_or(0));
    }
    let c = |i| p.coeff(i);
    let category = classify_cubic(f, &c(3), &c(2), &c(1), &c(0));
    let roots: Option<Vec<String>> = match roots_in_field(&p) {
        RootSet::AllElements => None,
        RootSet::Roots(r) => Some(r.iter().map(|x| f.format_elem(x)).collect()),
    };
    let split = split(&p)?;
    if json {
        let (sf, sr) = split.map_or((None, None), |(a, b)| (Some(a), Some(b)));
        let v = json!({
            "poly": p.format(),
            "field": f.spec(),
            "category": category,
            "roots": roots,
            "splitting_field": sf,
            "splitting_roots": sr,
        });
        println!("{}", serde_json::to_string(&v)?);
        return Ok(());
    }
    println!("{} over {}", p.format(), f.spec());
    println!("distinct roots over a root-closed field: {category}");
    match roots {
        None => println!("roots in {}: every element", f.spec()),
        Some(r) if r.is_empty() => println!("roots in {}: none", f.spec()),
        Some(r) => println!("roots in {}: {}", f.spec(), r.join(", ")),
    }
    if let Some((sf, sr)) = split {
        println!("splitting field {sf}: {}", if sr.is_empty() { "none".into() } else { sr.join(", ") });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { field, msc, json, closed, oracle } => {
            cmd_analyze(&field, &msc, json, AnalyzeOptions { closed, oracle })?
        }
        Command::Canonical { family, regime, params, field, json, closed } => {
            cmd_canonical(&family, &regime, &params, &field, json, closed)?
        }
        Command::Verify { scope, field, budget, seed, json, oracle } => {
            if cmd_verify(&scope, &field, budget, seed, json, oracle)? {
                eprintln!("error: the solver disagrees with the brute-force oracle");
                return Ok(ExitCode::from(2));
            }
        }
        Command::Roots { field, poly, json } => cmd_roots(&field, &poly, json)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::FAILURE
    })
}
