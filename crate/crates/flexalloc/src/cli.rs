//! Batch command-line front end: solve, verify, generate, compare, render.
//!
//! Everything speaks the JSON file formats from [`crate::model`]. Each
//! command prints one JSON line of metadata so runs can be scripted.
//! Fractions on the command line are exact `p/q` strings; no floats reach
//! the solvers. Exit codes: 1 bad input or flags, 2 algorithm precondition
//! not met, 3 oracle budget exhausted, 4 solution failed verification.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::frac::{parse_frac, Frac};
use crate::gen::{gen_gadget, gen_random, GenError, Profile, ThreeXcInstance};
use crate::model::{Instance, ModelError, SolutionFile, SolutionKind};
use crate::oracle::{oracle_fbap, oracle_fsap, OracleError, DEFAULT_NODE_BUDGET};
use crate::paging::{paging_fba_run, PagingError};
use crate::proper::{proper_fsap, ProperError, ProperSource};
use crate::render::{render_ascii_fba, render_ascii_fsap, render_svg_fba, render_svg_fsap};
use crate::uniform::{a_max_small, uniform_params, uniform_ptas, PtasPath, UniformError};

pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

/// Terminal failure: what to print and which code to exit with.
#[derive(Debug)]
pub struct CliFailure {
    pub code: i32,
    pub message: String,
}

impl CliFailure {
    fn new(code: i32, message: impl Into<String>) -> CliFailure {
        CliFailure { code, message: message.into() }
    }
}

impl From<UniformError> for CliFailure {
    fn from(e: UniformError) -> CliFailure {
        CliFailure::new(EXIT_PRECONDITION, e.to_string())
    }
}

impl From<ProperError> for CliFailure {
    fn from(e: ProperError) -> CliFailure {
        CliFailure::new(EXIT_PRECONDITION, e.to_string())
    }
}

impl From<PagingError> for CliFailure {
    fn from(e: PagingError) -> CliFailure {
        CliFailure::new(EXIT_PRECONDITION, e.to_string())
    }
}

impl From<GenError> for CliFailure {
    fn from(e: GenError) -> CliFailure {
        CliFailure::new(EXIT_PRECONDITION, e.to_string())
    }
}

impl From<OracleError> for CliFailure {
    fn from(e: OracleError) -> CliFailure {
        let code = match e {
            OracleError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_PRECONDITION,
        };
        CliFailure::new(code, e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "flexalloc",
    version,
    about = "Solvers, exact oracles and tooling for interval bandwidth and storage allocation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run an algorithm on an instance and write the solution.
    Solve(SolveArgs),
    /// Check a solution file against its instance.
    Verify(VerifyArgs),
    /// Produce instance files.
    Generate(GenerateArgs),
    /// Run algorithms across a directory of instances into a CSV.
    Compare(CompareArgs),
    /// Draw a solution as text or SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Paging,
    MaxSmall,
    UniformPtas,
    Proper,
    OracleFbap,
    OracleFsap,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Paging => "paging",
            Algo::MaxSmall => "max-small",
            Algo::UniformPtas => "uniform-ptas",
            Algo::Proper => "proper",
            Algo::OracleFbap => "oracle-fbap",
            Algo::OracleFsap => "oracle-fsap",
        }
    }
}

#[derive(Args)]
pub struct SolveArgs {
    /// Algorithm to run.
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Approximation parameter, an exact fraction like `1/4`.
    #[arg(long)]
    pub epsilon: Option<String>,
    /// Instance file.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Solution file to write.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Instance file.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Solution file to check.
    #[arg(long)]
    pub solution: PathBuf,
}

#[derive(Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub what: GenerateCmd,
}

#[derive(Subcommand)]
pub enum GenerateCmd {
    /// Seeded random instance.
    Random(RandomArgs),
    /// Hardness instance built from a three-set cover question.
    Gadget(GadgetArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    General,
    Proper,
    Uniform,
}

#[derive(Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub jobs: usize,
    #[arg(long)]
    pub capacity: u64,
    /// Instance shape.
    #[arg(long, value_enum, default_value_t = ProfileArg::General)]
    pub profile: ProfileArg,
    /// Common demand bound; uniform profile only.
    #[arg(long)]
    pub max: Option<u64>,
    /// Instance file to write.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct GadgetArgs {
    /// Three-set cover question, JSON: {"n", "sets", "cover"?}.
    #[arg(long)]
    pub xc: PathBuf,
    /// Instance file to write.
    #[arg(long)]
    pub out: PathBuf,
    /// Also write the cover-derived coloring here.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Args)]
pub struct CompareArgs {
    /// Directory of instance JSON files.
    #[arg(long)]
    pub suite: PathBuf,
    /// Comma-separated algorithms to run.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub algos: Vec<Algo>,
    /// Also compute the exact optimum and per-run ratio columns.
    #[arg(long)]
    pub oracle: bool,
    /// Approximation parameter for the algorithms that take one.
    #[arg(long)]
    pub epsilon: Option<String>,
    /// CSV file to write.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Args)]
pub struct RenderArgs {
    /// Instance file.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Solution file to draw.
    #[arg(long)]
    pub solution: PathBuf,
    #[arg(long, value_enum)]
    pub format: RenderFormat,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: &Cli) -> Result<(), CliFailure> {
    match &cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Verify(args) => run_verify(args),
        Command::Generate(args) => match &args.what {
            GenerateCmd::Random(a) => run_generate_random(a),
            GenerateCmd::Gadget(a) => run_generate_gadget(a),
        },
        Command::Compare(args) => run_compare(args),
        Command::Render(args) => run_render(args),
    }
}

fn read_text(path: &Path) -> Result<String, CliFailure> {
    fs::read_to_string(path)
        .map_err(|e| CliFailure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliFailure> {
    serde_json::from_str(&read_text(path)?)
        .map_err(|e| CliFailure::new(EXIT_PARSE, format!("cannot parse {}: {e}", path.display())))
}

/// Loads and re-validates an instance; serde alone does not enforce the
/// structural invariants.
fn load_instance(path: &Path) -> Result<Instance, CliFailure> {
    let raw: Instance = read_json(path)?;
    Instance::new(raw.capacity, raw.jobs)
        .map_err(|e| CliFailure::new(EXIT_PARSE, format!("invalid instance {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliFailure> {
    fs::write(path, text)
        .map_err(|e| CliFailure::new(EXIT_PARSE, format!("cannot write {}: {e}", path.display())))
}

fn write_solution(path: &Path, file: &SolutionFile) -> Result<(), CliFailure> {
    let mut text = serde_json::to_string(file).expect("solution serializes");
    text.push('\n');
    write_text(path, &text)
}

fn parse_epsilon(raw: &Option<String>, algo: &str) -> Result<Frac, CliFailure> {
    let Some(text) = raw else {
        return Err(CliFailure::new(
            EXIT_PARSE,
            format!("--epsilon is required for {algo}"),
        ));
    };
    parse_frac(text).map_err(|e| CliFailure::new(EXIT_PARSE, format!("bad --epsilon: {e}")))
}

fn oracle_budget() -> Result<u64, CliFailure> {
    match std::env::var("FLEXALLOC_ORACLE_BUDGET") {
        Ok(raw) => raw.trim().parse::<u64>().map_err(|_| {
            CliFailure::new(
                EXIT_PARSE,
                format!("FLEXALLOC_ORACLE_BUDGET must be an integer, got {raw:?}"),
            )
        }),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn frac_text(f: Frac) -> String {
    format!("{}/{}", f.numer(), f.denom())
}

/// Runs one algorithm and returns the solution plus its metadata line.
fn run_algo(
    inst: &Instance,
    algo: Algo,
    epsilon: &Option<String>,
) -> Result<(SolutionFile, serde_json::Value), CliFailure> {
    match algo {
        Algo::Paging => {
            let run = paging_fba_run(inst)?;
            let file = SolutionFile::from_fbap(inst, &run.allocation)
                .expect("greedy sweep output verifies");
            let meta = json!({
                "algo": "paging",
                "profit": file.total_profit,
                "ops": run.ops,
            });
            Ok((file, meta))
        }
        Algo::MaxSmall => {
            let params = uniform_params(inst)?;
            let run = a_max_small(inst)?;
            let file =
                SolutionFile::from_fsap(inst, &run.coloring).expect("max-small output verifies");
            let meta = json!({
                "algo": "max-small",
                "profit": file.total_profit,
                "k": params.k,
                "max": params.max,
                "remainder": params.r,
                "diagnostics_hold": run.diagnostics.all_hold(),
            });
            Ok((file, meta))
        }
        Algo::UniformPtas => {
            let eps = parse_epsilon(epsilon, "uniform-ptas")?;
            let params = uniform_params(inst)?;
            let run = uniform_ptas(inst, eps)?;
            let file =
                SolutionFile::from_fsap(inst, &run.coloring).expect("ptas output verifies");
            let path = match run.path {
                PtasPath::ExactMultiple => json!({"path": "exact-multiple"}),
                PtasPath::Strip { height } => json!({"path": "strip", "height": height}),
                PtasPath::WideChannels { channels } => {
                    json!({"path": "wide-channels", "channels": channels})
                }
            };
            let mut meta = json!({
                "algo": "uniform-ptas",
                "profit": file.total_profit,
                "epsilon": frac_text(eps),
                "k": params.k,
            });
            merge(&mut meta, path);
            Ok((file, meta))
        }
        Algo::Proper => {
            let eps = parse_epsilon(epsilon, "proper")?;
            let run = proper_fsap(inst, eps)?;
            let file =
                SolutionFile::from_fsap(inst, &run.coloring).expect("proper output verifies");
            let (source, guess) = match run.source {
                ProperSource::WideOnly => ("wide-only", None),
                ProperSource::NarrowColor { guess } => ("narrow-color", Some(guess)),
            };
            let meta = json!({
                "algo": "proper",
                "profit": file.total_profit,
                "epsilon": frac_text(eps),
                "beta": "4/5",
                "source": source,
                "guess": guess,
                "guesses": run.guesses.len(),
            });
            Ok((file, meta))
        }
        Algo::OracleFbap => {
            let budget = oracle_budget()?;
            let res = oracle_fbap(inst, budget)?;
            let file = SolutionFile::from_fbap(inst, &res.allocation)
                .expect("oracle output verifies");
            let meta = json!({
                "algo": "oracle-fbap",
                "profit": file.total_profit,
                "budget": budget,
            });
            Ok((file, meta))
        }
        Algo::OracleFsap => {
            let budget = oracle_budget()?;
            let res = oracle_fsap(inst, budget)?;
            let file =
                SolutionFile::from_fsap(inst, &res.coloring).expect("oracle output verifies");
            let meta = json!({
                "algo": "oracle-fsap",
                "profit": file.total_profit,
                "budget": budget,
            });
            Ok((file, meta))
        }
    }
}

fn merge(base: &mut serde_json::Value, extra: serde_json::Value) {
    let (Some(base), Some(extra)) = (base.as_object_mut(), extra.as_object()) else {
        return;
    };
    for (k, v) in extra {
        base.insert(k.clone(), v.clone());
    }
}

fn run_solve(args: &SolveArgs) -> Result<(), CliFailure> {
    let inst = load_instance(&args.input)?;
    let (file, meta) = run_algo(&inst, args.algo, &args.epsilon)?;
    if let Some(out) = &args.out {
        write_solution(out, &file)?;
    }
    println!("{meta}");
    Ok(())
}

fn violation_kind(e: &ModelError) -> &'static str {
    match e {
        ModelError::InvalidInstance(_) => "InvalidInstance",
        ModelError::UnknownJob(_) => "UnknownJob",
        ModelError::RangeViolation(..) => "RangeViolation",
        ModelError::CapacityViolation { .. } => "CapacityViolation",
        ModelError::BlockOverlap { .. } => "BlockOverlap",
        ModelError::BadCircularBlock(_) => "BadCircularBlock",
    }
}

fn run_verify(args: &VerifyArgs) -> Result<(), CliFailure> {
    let inst = load_instance(&args.input)?;
    let sol: SolutionFile = read_json(&args.solution)?;
    match sol.verify(&inst) {
        Ok(report) => {
            println!("{}", json!({"valid": true, "profit": report.total}));
            Ok(())
        }
        Err(e) => Err(CliFailure::new(
            EXIT_INVALID,
            format!("{}: {e}", violation_kind(&e)),
        )),
    }
}

fn run_generate_random(args: &RandomArgs) -> Result<(), CliFailure> {
    let profile = match (args.profile, args.max) {
        (ProfileArg::General, None) => Profile::General,
        (ProfileArg::Proper, None) => Profile::Proper,
        (ProfileArg::Uniform, Some(max)) => Profile::Uniform { max },
        (ProfileArg::Uniform, None) => {
            return Err(CliFailure::new(EXIT_PARSE, "--max is required for the uniform profile"))
        }
        (_, Some(_)) => {
            return Err(CliFailure::new(EXIT_PARSE, "--max only applies to the uniform profile"))
        }
    };
    let inst = gen_random(profile, args.jobs, args.capacity, args.seed)?;
    let mut text = serde_json::to_string(&inst).expect("instance serializes");
    text.push('\n');
    write_text(&args.out, &text)?;
    println!(
        "{}",
        json!({
            "generated": "random",
            "jobs": inst.jobs.len(),
            "capacity": inst.capacity,
            "seed": args.seed,
        })
    );
    Ok(())
}

fn run_generate_gadget(args: &GadgetArgs) -> Result<(), CliFailure> {
    let xc: ThreeXcInstance = read_json(&args.xc)?;
    let build = gen_gadget(&xc)?;
    let mut text = serde_json::to_string(&build.instance).expect("instance serializes");
    text.push('\n');
    write_text(&args.out, &text)?;
    let mut witness_profit = None;
    if let Some(path) = &args.witness {
        let coloring = build.witness()?;
        let file = SolutionFile::from_fsap(&build.instance, &coloring)
            .expect("gadget witness verifies");
        witness_profit = Some(file.total_profit);
        write_solution(path, &file)?;
    }
    println!(
        "{}",
        json!({
            "generated": "gadget",
            "jobs": build.instance.jobs.len(),
            "capacity": build.instance.capacity,
            "witness_profit": witness_profit,
        })
    );
    Ok(())
}

fn run_compare(args: &CompareArgs) -> Result<(), CliFailure> {
    let mut files: Vec<PathBuf> = fs::read_dir(&args.suite)
        .map_err(|e| {
            CliFailure::new(EXIT_PARSE, format!("cannot read {}: {e}", args.suite.display()))
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();

    let mut csv = String::from("instance,algo,profit,oracle_opt,ratio\n");
    let mut worst: Vec<Option<f64>> = vec![None; args.algos.len()];
    for path in &files {
        let inst = load_instance(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        for (ai, &algo) in args.algos.iter().enumerate() {
            let (file, _) = run_algo(&inst, algo, &args.epsilon)?;
            let profit = file.total_profit;
            if args.oracle {
                let budget = oracle_budget()?;
                let opt = match algo {
                    Algo::Paging | Algo::OracleFbap => oracle_fbap(&inst, budget)?.profit,
                    _ => oracle_fsap(&inst, budget)?.profit,
                };
                let ratio = if opt == 0 { 1.0 } else { profit as f64 / opt as f64 };
                worst[ai] = Some(worst[ai].map_or(ratio, |w: f64| w.min(ratio)));
                csv.push_str(&format!("{name},{},{profit},{opt},{ratio:.6}\n", algo.name()));
            } else {
                csv.push_str(&format!("{name},{},{profit},,\n", algo.name()));
            }
        }
    }
    for (ai, &algo) in args.algos.iter().enumerate() {
        if let Some(w) = worst[ai] {
            csv.push_str(&format!("worst,{},,,{w:.6}\n", algo.name()));
        }
    }
    write_text(&args.out, &csv)?;
    println!(
        "{}",
        json!({
            "compared": files.len(),
            "algos": args.algos.iter().map(|a| a.name()).collect::<Vec<_>>(),
            "out": args.out.display().to_string(),
        })
    );
    Ok(())
}

fn run_render(args: &RenderArgs) -> Result<(), CliFailure> {
    let inst = load_instance(&args.input)?;
    let sol: SolutionFile = read_json(&args.solution)?;
    let text = match (sol.kind, args.format) {
        (SolutionKind::Fbap, RenderFormat::Ascii) => render_ascii_fba(&inst, &sol.to_fbap()),
        (SolutionKind::Fbap, RenderFormat::Svg) => render_svg_fba(&inst, &sol.to_fbap()),
        (SolutionKind::Fsap, RenderFormat::Ascii) => {
            let col = sol.to_fsap().map_err(|e| {
                CliFailure::new(EXIT_PARSE, format!("malformed solution: {e}"))
            })?;
            render_ascii_fsap(&inst, &col)
        }
        (SolutionKind::Fsap, RenderFormat::Svg) => {
            let col = sol.to_fsap().map_err(|e| {
                CliFailure::new(EXIT_PARSE, format!("malformed solution: {e}"))
            })?;
            render_svg_fsap(&inst, &col)
        }
    };
    match &args.out {
        Some(path) => write_text(path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}
