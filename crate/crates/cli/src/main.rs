//! Command-line front end: replays, axiom checks, dominance queries, region
//! grids, and the bounded evidence search.
//!
//! Exit codes: 0 success / all holds / dominates; 1 some axiom violated
//! (`check`); 2 input or parse error; 3 dominance absent (`dominance`);
//! 4 not-determinable only (`check`).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use negdom::axioms::{self, AxiomName, AxiomSpec, Verdict3};
use negdom::dominance::{check_stochastic_dominance, naive_upper_set_dominance};
use negdom::json::{
    CheckReportJson, DominanceReportJson, GeneratorSetJson, LotteryJson, ScenarioResultJson,
    UniverseJson, SCHEMA_VERSION,
};
use negdom::lottery::Outcome;
use negdom::order::OutcomePreorder;
use negdom::rational::{parse_rational, Rational};
use negdom::region::{region_csv, region_grid};
use negdom::relation::build_closure;
use negdom::scenarios::{replay, ReplayParams, ScenarioId};
use negdom::search::{search_conjecture, SearchBounds, SearchQuestion};

#[derive(Parser)]
#[command(
    name = "negdom",
    version,
    about = "Exact-arithmetic verification engine for decision theory with incomplete preferences"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Replay a scenario from the catalog (prop1..prop5, initial-fact,
    /// wue-fact, kfact, vst, prop9, qual-a1..qual-a3)
    Replay {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Write the full result (with its reproducibility manifest) as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check axioms against the closure of a universe and generator set
    Check {
        #[arg(long)]
        universe: PathBuf,
        #[arg(long, default_value = "pareto")]
        order: String,
        #[arg(long)]
        generators: PathBuf,
        /// Comma-separated axiom names
        #[arg(long)]
        axioms: String,
        /// Comma-separated mixture weights for the independence family
        #[arg(long, default_value = "1/2")]
        alphas: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide stochastic dominance of F over G
    Dominance {
        #[arg(long, default_value = "pareto")]
        order: String,
        f: PathBuf,
        g: PathBuf,
        /// Use the naive upper-set definition instead of the coupling one
        #[arg(long)]
        naive: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit the comparison-region grid around a reference outcome as CSV
    Region {
        #[arg(long, default_value = "pareto")]
        order: String,
        /// Reference outcome "X,Y"
        #[arg(long, default_value = "0,0")]
        reference: String,
        #[arg(long, default_value = "-5")]
        min: String,
        #[arg(long, default_value = "5")]
        max: String,
        #[arg(long, default_value = "1/4")]
        step: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the bounded evidence search for an open question or conjecture
    Search {
        #[arg(long)]
        question: String,
        #[arg(long, default_value_t = 24)]
        budget: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        coord_bound: Option<i64>,
        #[arg(long)]
        denom_bound: Option<i64>,
        #[arg(long)]
        max_support: Option<usize>,
        #[arg(long)]
        max_universe: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    epsilon: Option<String>,
    /// Use the literal-definition thresholds for k-incomparability
    #[arg(long)]
    literal_k: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.command {
        Commands::Replay { id, params, json } => cmd_replay(&id, &params, json.as_deref()),
        Commands::Check {
            universe,
            order,
            generators,
            axioms,
            alphas,
            report,
        } => cmd_check(
            &universe,
            &order,
            &generators,
            &axioms,
            &alphas,
            report.as_deref(),
        ),
        Commands::Dominance {
            order,
            f,
            g,
            naive,
            json,
        } => cmd_dominance(&order, &f, &g, naive, json.as_deref()),
        Commands::Region {
            order,
            reference,
            min,
            max,
            step,
            out,
        } => cmd_region(&order, &reference, &min, &max, &step, out.as_deref()),
        Commands::Search {
            question,
            budget,
            seed,
            coord_bound,
            denom_bound,
            max_support,
            max_universe,
            json,
        } => cmd_search(
            &question,
            budget,
            seed,
            coord_bound,
            denom_bound,
            max_support,
            max_universe,
            json.as_deref(),
        ),
    }
}

fn parse_opt(value: &Option<String>) -> Result<Option<Rational>, negdom::Error> {
    value.as_deref().map(parse_rational).transpose()
}

fn cmd_replay(
    id: &str,
    args: &ParamArgs,
    json: Option<&std::path::Path>,
) -> Result<u8, Box<dyn std::error::Error>> {
    let id = ScenarioId::parse(id)?;
    let params = ReplayParams {
        a: parse_opt(&args.a)?,
        b: parse_opt(&args.b)?,
        k: parse_opt(&args.k)?,
        l: parse_opt(&args.l)?,
        m: parse_opt(&args.m)?,
        epsilon: parse_opt(&args.epsilon)?,
        literal_k: args.literal_k,
    };
    let result = replay(id, &params)?;
    println!("scenario {:>12}: {}", id.as_str(), result.verdict.as_str());
    for (k, v) in &result.params {
        println!("  param {k} = {v}");
    }
    for step in &result.steps {
        println!("  step  {:<40} [{}]", step.display, step.justification);
    }
    for report in &result.reports {
        println!("  check {:<40} {}", report.axiom, report.verdict);
        for w in &report.witnesses {
            let members: Vec<&str> = w.items.iter().map(|&i| result.labels[i].as_str()).collect();
            if members.is_empty() {
                println!("        witness: {}", w.note);
            } else {
                println!("        witness [{}]: {}", members.join(", "), w.note);
            }
        }
    }
    if let Some(path) = json {
        let doc = ScenarioResultJson::from_result(&result);
        std::fs::write(path, serde_json::to_string_pretty(&doc)?)?;
        println!("  wrote {}", path.display());
    }
    Ok(0)
}

fn parse_axiom_list(text: &str) -> Result<Vec<AxiomName>, negdom::Error> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(AxiomName::parse)
        .collect()
}

fn parse_alpha_list(text: &str) -> Result<Vec<Rational>, negdom::Error> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect()
}

fn cmd_check(
    universe_path: &std::path::Path,
    order_spec: &str,
    generators_path: &std::path::Path,
    axioms_list: &str,
    alphas: &str,
    report_path: Option<&std::path::Path>,
) -> Result<u8, Box<dyn std::error::Error>> {
    let order = OutcomePreorder::parse_spec(order_spec)?;
    let universe_json: UniverseJson =
        serde_json::from_str(&std::fs::read_to_string(universe_path)?)?;
    let universe = universe_json.to_universe()?;
    let generators_json: GeneratorSetJson =
        serde_json::from_str(&std::fs::read_to_string(generators_path)?)?;
    let generators = generators_json.to_generators()?;
    let names = parse_axiom_list(axioms_list)?;
    if names.is_empty() {
        return Err(Box::new(negdom::Error::BadInput(
            "no axioms requested".into(),
        )));
    }
    let alphas = parse_alpha_list(alphas)?;
    let (rel, _) = build_closure(&universe, &order, &generators)?;
    let mut reports = Vec::new();
    for name in names {
        let spec = AxiomSpec::with_alphas(name, alphas.clone());
        reports.push(axioms::check_axiom(&rel, &universe, &order, &spec)?);
    }
    let mut any_violated = false;
    let mut any_undetermined = false;
    for report in &reports {
        println!("{:<42} {}", report.axiom, report.verdict);
        for w in &report.witnesses {
            println!("    witness: {}", w.note);
        }
        for n in &report.notes {
            println!("    note: {n}");
        }
        match report.verdict {
            Verdict3::Violated => any_violated = true,
            Verdict3::NotDeterminable => any_undetermined = true,
            Verdict3::Holds => {}
        }
    }
    if let Some(path) = report_path {
        let doc = CheckReportJson {
            schema_version: SCHEMA_VERSION,
            order: order.spec_string(),
            universe_size: universe.len(),
            axioms: reports
                .iter()
                .map(negdom::json::AxiomReportJson::from_report)
                .collect(),
        };
        std::fs::write(path, serde_json::to_string_pretty(&doc)?)?;
    }
    Ok(if any_violated {
        1
    } else if any_undetermined {
        4
    } else {
        0
    })
}

fn cmd_dominance(
    order_spec: &str,
    f_path: &std::path::Path,
    g_path: &std::path::Path,
    naive: bool,
    json: Option<&std::path::Path>,
) -> Result<u8, Box<dyn std::error::Error>> {
    let order = OutcomePreorder::parse_spec(order_spec)?;
    let f: LotteryJson = serde_json::from_str(&std::fs::read_to_string(f_path)?)?;
    let g: LotteryJson = serde_json::from_str(&std::fs::read_to_string(g_path)?)?;
    let f = f.to_lottery()?;
    let g = g.to_lottery()?;
    let (dominates, verdict) = if naive {
        (naive_upper_set_dominance(&f, &g, &order)?, None)
    } else {
        let v = check_stochastic_dominance(&f, &g, &order)?;
        (v.dominates, Some(v))
    };
    let mode = if naive { "naive-upper-set" } else { "coupling" };
    println!(
        "{mode} dominance under {}: {}",
        order.spec_string(),
        if dominates {
            "dominates"
        } else {
            "does not dominate"
        }
    );
    if let Some(v) = &verdict {
        println!(
            "maximum strict mass: {}",
            negdom::rational::format_rational(&v.strict_mass)
        );
        if let Some(w) = &v.witness {
            for (s, t, m) in &w.entries {
                println!(
                    "  couple {s} -> {t} with mass {}",
                    negdom::rational::format_rational(m)
                );
            }
        }
    }
    if let Some(path) = json {
        let doc = match &verdict {
            Some(v) => DominanceReportJson::from_verdict(&order.spec_string(), mode, v),
            None => DominanceReportJson {
                schema_version: SCHEMA_VERSION,
                order: order.spec_string(),
                mode: mode.to_string(),
                dominates,
                strict_mass: "0".to_string(),
                witness: None,
            },
        };
        std::fs::write(path, serde_json::to_string_pretty(&doc)?)?;
    }
    Ok(if dominates { 0 } else { 3 })
}

fn cmd_region(
    order_spec: &str,
    reference: &str,
    min: &str,
    max: &str,
    step: &str,
    out: Option<&std::path::Path>,
) -> Result<u8, Box<dyn std::error::Error>> {
    let order = OutcomePreorder::parse_spec(order_spec)?;
    let (rx, ry) = reference
        .split_once(',')
        .ok_or_else(|| negdom::Error::BadInput(format!("reference {reference:?} is not X,Y")))?;
    let reference = Outcome::pair(parse_rational(rx)?, parse_rational(ry)?);
    let grid = region_grid(
        &order,
        &reference,
        &parse_rational(min)?,
        &parse_rational(max)?,
        &parse_rational(step)?,
    )?;
    let csv = region_csv(&grid);
    match out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    question: &str,
    budget: u64,
    seed: u64,
    coord_bound: Option<i64>,
    denom_bound: Option<i64>,
    max_support: Option<usize>,
    max_universe: Option<usize>,
    json: Option<&std::path::Path>,
) -> Result<u8, Box<dyn std::error::Error>> {
    let question = SearchQuestion::parse(question)?;
    let mut bounds = SearchBounds::default();
    if let Some(v) = coord_bound {
        bounds.coord_bound = v;
    }
    if let Some(v) = denom_bound {
        bounds.denom_bound = v;
    }
    if let Some(v) = max_support {
        bounds.max_support = v;
    }
    if let Some(v) = max_universe {
        bounds.max_universe = v;
    }
    let report = search_conjecture(question, &bounds, budget, seed)?;
    println!(
        "search {}: examined {} candidate(s), skipped {}",
        question.as_str(),
        report.candidates_examined,
        report.candidates_skipped
    );
    for (class, count) in &report.summary {
        println!("  {class}: {count}");
    }
    if let Some(path) = json {
        std::fs::write(path, serde_json::to_string_pretty(&report.to_json())?)?;
    }
    Ok(0)
}
