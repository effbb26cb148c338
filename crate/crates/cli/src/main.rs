use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use unionshare::axioms::{
    characterization_suite, check_axiom, check_instance, independence_suite, AxiomId, CheckConfig, CheckReport,
    Instance, Mode, Outcome, SuiteEntry, TrialOutcome, Verdict, Witness, WorthDist,
};
use unionshare::io::{Column, GameFile, GameForm, OutputTable, RenderMode, RowKey};
use unionshare::scenarios::{apartment_shares, cost_table, BuildingSpec, Subjects};
use unionshare::values::Theorem;
use unionshare::{BigRational, Error, Rational64, Scalar, ValueKind, ValueSpec};

const SEED_ENV: &str = "UNIONSHARE_SEED";
const DEFAULT_SEED: u64 = 20_240_101;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Egalitarian values for cooperative games with a priori unions.
#[derive(Parser)]
#[command(name = "unionshare", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute values of a game read from a JSON game file.
    Solve(SolveArgs),
    /// Check axioms on random and exhaustive games, or on one game file.
    Check(CheckArgs),
    /// Print one of the six elevator cost tables.
    Reproduce(ReproduceArgs),
    /// Share an elevator's cost in a building described by a JSON spec.
    Elevator(ElevatorArgs),
}

#[derive(Args)]
struct Output {
    /// Output format: text, csv or json.
    #[arg(long, default_value = "text")]
    format: String,
    /// Compute with exact rational arithmetic.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct SolveArgs {
    game: PathBuf,
    /// Values to compute, comma separated (ed, esd, edu, esd1u, esd2u, esd3u or a variant like t2.3).
    #[arg(long, value_delimiter = ',', default_values = ["ed", "esd", "edu", "esd1u", "esd2u", "esd3u"])]
    value: Vec<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CheckArgs {
    /// Value to check.
    #[arg(long)]
    value: Option<String>,
    /// Axioms to check, comma separated.
    #[arg(long, value_delimiter = ',')]
    axioms: Vec<String>,
    /// Effective random trials per axiom.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Random seed; defaults to $UNIONSHARE_SEED, then a fixed seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Look for violations, smallest games first.
    #[arg(long)]
    search: bool,
    /// Validate the counterexample catalog of one characterization (t1 to t4).
    #[arg(long, conflicts_with_all = ["value", "axioms", "search", "characterization", "game"])]
    independence: Option<String>,
    /// Check the four union values against their axiom profiles.
    #[arg(long, conflicts_with_all = ["value", "axioms", "search", "game"])]
    characterization: bool,
    /// Check a single game file instead of generated games.
    #[arg(long)]
    game: Option<PathBuf>,
    /// Smallest generated player count.
    #[arg(long, default_value_t = 2)]
    min_players: usize,
    /// Largest generated player count.
    #[arg(long, default_value_t = 6)]
    max_players: usize,
    /// Integer worth range for generated games, as LO..HI.
    #[arg(long, default_value = "-5..5")]
    worths: String,
    /// Skip the exhaustive small-game tiers.
    #[arg(long)]
    no_exhaustive: bool,
    /// Report format: text, or json for one JSON object per line.
    #[arg(long, default_value = "text")]
    format: String,
    /// Check with exact rational arithmetic.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Table number, 1 to 6.
    table: u8,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ElevatorArgs {
    /// Building spec; the three-storey example building when omitted.
    spec: Option<PathBuf>,
    /// Equal shares per apartment (dutch) or per quota unit (spanish).
    #[arg(long, default_value = "dutch")]
    rule: String,
    /// Values to apply, comma separated.
    #[arg(long, value_delimiter = ',', default_values = ["ed", "esd", "edu", "esd1u", "esd2u", "esd3u"])]
    value: Vec<String>,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(msg) => Failure::Internal(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Check(args) => cmd_check(&args),
        Command::Reproduce(args) => cmd_reproduce(&args),
        Command::Elevator(args) => cmd_elevator(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_values(names: &[String]) -> Result<Vec<ValueSpec>, Failure> {
    names.iter().map(|v| v.parse().map_err(Failure::from)).collect()
}

fn emit(table: &OutputTable, format: &str) -> CmdResult {
    let mode: RenderMode = format.parse()?;
    print!("{}", table.render(mode));
    Ok(0)
}

fn cmd_solve(args: &SolveArgs) -> CmdResult {
    let text = read(&args.game)?;
    let values = parse_values(&args.value)?;
    let table = if args.output.exact {
        solve_table::<BigRational>(&text, &values)
    } else {
        solve_table::<f64>(&text, &values)
    }
    .map_err(|e| match e {
        Failure::Usage(msg) => Failure::Usage(format!("{}: {msg}", args.game.display())),
        internal => internal,
    })?;
    emit(&table, &args.output.format)
}

fn solve_table<T: Scalar>(text: &str, values: &[ValueSpec]) -> Result<OutputTable, Failure> {
    let file = GameFile::<T>::from_json(text)?;
    let summary = file.summary()?;
    let p = summary.partition();
    let rows = file
        .labels
        .iter()
        .enumerate()
        .map(|(i, label)| RowKey {
            group: (!p.is_singletons()).then(|| format!("P{}", p.union_of(i) + 1)),
            label: label.clone(),
        })
        .collect();
    let mut table = OutputTable::new("player", rows);
    if !p.is_singletons() {
        table.group_header = Some("union".into());
    }
    for &value in values {
        let shares = value.on_summary(&summary)?;
        table.push(Column::checked(&value.to_string(), &shares, summary.total(), value.is_efficient())?)?;
        if !value.is_efficient() {
            table
                .footnotes
                .push(format!("{value} is not efficient; its column need not add up to v(N)."));
        }
    }
    Ok(table)
}

fn cmd_reproduce(args: &ReproduceArgs) -> CmdResult {
    let spec = BuildingSpec::three_storey();
    let table = if args.output.exact {
        OutputTable::from_cost_table(&cost_table::<BigRational>(&spec, args.table)?)?
    } else {
        OutputTable::from_cost_table(&cost_table::<f64>(&spec, args.table)?)?
    };
    emit(&table, &args.output.format)
}

fn cmd_elevator(args: &ElevatorArgs) -> CmdResult {
    let spec = match &args.spec {
        Some(path) => BuildingSpec::from_json(&read(path)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => BuildingSpec::three_storey(),
    };
    let subjects = match args.rule.to_ascii_lowercase().as_str() {
        "dutch" => Subjects::Apartments,
        "spanish" => Subjects::QuotaUnits,
        other => return Err(Failure::Usage(format!("unknown rule `{other}` (dutch or spanish)"))),
    };
    let kinds = args
        .value
        .iter()
        .map(|v| match v.parse::<ValueSpec>()? {
            ValueSpec::Named(kind) => Ok(kind),
            ValueSpec::Variant(id) => Err(Failure::Usage(format!(
                "the elevator game only supports the six named values, not {id}"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let table = if args.output.exact {
        elevator_table::<BigRational>(&spec, subjects, &kinds)?
    } else {
        elevator_table::<f64>(&spec, subjects, &kinds)?
    };
    emit(&table, &args.output.format)
}

fn elevator_table<T: Scalar>(spec: &BuildingSpec, subjects: Subjects, kinds: &[ValueKind]) -> Result<OutputTable, Failure> {
    let rows = spec
        .apartments()
        .into_iter()
        .map(|a| RowKey {
            group: Some(a.floor_label),
            label: a.label,
        })
        .collect();
    let mut table = OutputTable::new("apartment", rows);
    table.group_header = Some("floor".into());
    let (_, total) = spec.costs::<T>()?;
    for &kind in kinds {
        let shares = apartment_shares::<T>(spec, subjects, kind)?;
        table.push(Column::checked(kind.name(), &shares, &total, true)?)?;
    }
    Ok(table)
}

fn seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{SEED_ENV}=`{text}` is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn parse_worths(text: &str) -> Result<WorthDist, Failure> {
    let bad = || Failure::Usage(format!("--worths `{text}` should look like -5..5"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(WorthDist::Integers { lo, hi })
}

#[derive(Clone, Copy, PartialEq)]
enum ReportFormat {
    Text,
    Json,
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let format = match args.format.to_ascii_lowercase().as_str() {
        "text" => ReportFormat::Text,
        "json" => ReportFormat::Json,
        other => return Err(Failure::Usage(format!("unknown report format `{other}` (text or json)"))),
    };
    if args.trials == 0 {
        return Err(Failure::Usage("--trials must be positive".into()));
    }
    if args.exact {
        check_with::<Rational64>(args, format)
    } else {
        check_with::<f64>(args, format)
    }
}

fn check_with<T: Scalar>(args: &CheckArgs, format: ReportFormat) -> CmdResult {
    let seed = seed(args.seed)?;
    if let Some(t) = &args.independence {
        let theorem: Theorem = t
            .parse()
            .map_err(|_| Failure::Usage(format!("--independence `{t}`: expected t1, t2, t3 or t4")))?;
        let entries = independence_suite::<T>(theorem, args.trials, seed)?;
        return Ok(report_suite(&entries, format));
    }
    if args.characterization {
        let entries = characterization_suite::<T>(args.trials, seed)?;
        return Ok(report_suite(&entries, format));
    }

    let value: ValueSpec = args
        .value
        .as_deref()
        .ok_or_else(|| Failure::Usage("--value is required".into()))?
        .parse()?;
    if args.axioms.is_empty() {
        return Err(Failure::Usage("--axioms is required".into()));
    }
    let axioms = args
        .axioms
        .iter()
        .map(|a| a.parse::<AxiomId>().map_err(Failure::from))
        .collect::<Result<Vec<_>, _>>()?;

    if let Some(path) = &args.game {
        return check_file::<T>(path, value, &axioms, format);
    }

    let mut cfg = if args.search {
        CheckConfig::search()
    } else {
        CheckConfig::verify()
    };
    cfg.exhaustive = !args.no_exhaustive;
    cfg.gen.min_players = args.min_players;
    cfg.gen.max_players = args.max_players;
    cfg.gen.worths = parse_worths(&args.worths)?;

    let mut code = 0;
    for axiom in axioms {
        let report = check_axiom::<T>(value, axiom, args.trials, seed, &cfg)?;
        print_report(&report, format);
        let this = match (report.mode, report.outcome) {
            (_, Outcome::Inconclusive) => EXIT_INCONCLUSIVE,
            (Mode::Search, Outcome::Violated) => 0,
            (Mode::Verify, Outcome::Violated) => EXIT_VIOLATION,
            (_, Outcome::HoldsOnSample) => 0,
        };
        code = worst(code, this);
    }
    Ok(code)
}

/// Violations outrank inconclusive results.
fn worst(a: u8, b: u8) -> u8 {
    let rank = |c: u8| match c {
        EXIT_VIOLATION => 2,
        EXIT_INCONCLUSIVE => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn check_file<T: Scalar>(path: &Path, value: ValueSpec, axioms: &[AxiomId], format: ReportFormat) -> CmdResult {
    let file = GameFile::<T>::from_json(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let GameForm::Explicit { game, partition } = file.form else {
        return Err(Failure::Usage(format!(
            "{}: axiom checks need the explicit form of the game",
            path.display()
        )));
    };
    let inst = Instance::new(game, partition);
    let mut code = 0;
    for &axiom in axioms {
        if axiom.is_pairwise() {
            return Err(Failure::Usage(format!("{axiom} needs two games; run it without --game")));
        }
        let outcome = check_instance(value, axiom, &inst)?;
        let (word, this) = match &outcome {
            TrialOutcome::Holds => ("holds", 0),
            TrialOutcome::Vacuous => ("vacuous", 0),
            TrialOutcome::OutOfDomain => ("out of domain", EXIT_INCONCLUSIVE),
            TrialOutcome::Violated(_) => ("violated", EXIT_VIOLATION),
        };
        code = worst(code, this);
        match format {
            ReportFormat::Json => {
                let mut line = serde_json::json!({
                    "value": value.to_string(),
                    "axiom": axiom.name(),
                    "outcome": word,
                });
                if let TrialOutcome::Violated(v) = &outcome {
                    line["location"] = serde_json::to_value(v.location).expect("locations serialize");
                    line["observed"] = v.observed.to_string().into();
                    line["expected"] = v.expected.to_string().into();
                }
                println!("{line}");
            }
            ReportFormat::Text => {
                println!("{value} {axiom}: {word}");
                if let TrialOutcome::Violated(v) = &outcome {
                    println!("  at {}: observed {}, expected {}", v.location, v.observed, v.expected);
                }
            }
        }
    }
    Ok(code)
}

fn print_report<T: Scalar>(report: &CheckReport<T>, format: ReportFormat) {
    match format {
        ReportFormat::Json => println!("{}", report.to_json_line()),
        ReportFormat::Text => {
            println!(
                "{} {}: {} ({} random, {} exhaustive, {} vacuous, {} out of domain; seed {})",
                report.value,
                report.axiom,
                report.outcome.as_str(),
                report.trials_run,
                report.exhaustive_checked,
                report.vacuous,
                report.out_of_domain,
                report.seed
            );
            if let Some(w) = &report.witness {
                print_witness(w);
            }
        }
    }
}

fn game_line<T: Scalar>(g: &unionshare::ExplicitGame<T>) -> String {
    let listed: Vec<String> = g
        .iter()
        .filter(|(s, w)| !s.is_empty() && !w.is_zero())
        .map(|(s, w)| format!("v{s}={w}"))
        .collect();
    if listed.is_empty() {
        "zero game".into()
    } else {
        listed.join(" ")
    }
}

fn print_witness<T: Scalar>(w: &Witness<T>) {
    let inst = &w.instance;
    let unions: Vec<String> = inst
        .partition
        .unions()
        .iter()
        .map(|u| format!("{{{}}}", u.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    println!("  witness ({}):", w.source);
    println!("    n = {}, partition {}", inst.game.n(), unions.join(" "));
    println!("    game: {}", game_line(&inst.game));
    if let Some(other) = &inst.other {
        println!("    second game: {}", game_line(other));
    }
    println!(
        "    at {}: observed {}, expected {}",
        w.violation.location, w.violation.observed, w.violation.expected
    );
}

fn report_suite<T: Scalar>(entries: &[SuiteEntry<T>], format: ReportFormat) -> u8 {
    let mut code = 0;
    for e in entries {
        match format {
            ReportFormat::Json => {
                let mut line = serde_json::to_value(e.report.record()).expect("reports serialize");
                line["expected"] = serde_json::to_value(e.expected).expect("expectations serialize");
                line["verdict"] = serde_json::to_value(e.verdict).expect("verdicts serialize");
                println!("{line}");
            }
            ReportFormat::Text => {
                let verdict = match e.verdict {
                    Verdict::Confirmed => "ok",
                    Verdict::Contradicted => "CONTRADICTED",
                    Verdict::Inconclusive => "inconclusive",
                };
                print!("[{verdict}] expected {:?}: ", e.expected);
                print_report(&e.report, format);
            }
        }
        let this = match e.verdict {
            Verdict::Confirmed => 0,
            Verdict::Contradicted => EXIT_VIOLATION,
            Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        };
        code = worst(code, this);
    }
    code
}
