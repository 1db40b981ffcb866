//! Command-line front end.

mod manifest;
mod problem;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{format_polynomial, format_rational, parse_polynomial, parse_polynomial_list, parse_rational, MonomialOrder, VarNames};
use crate::anneal::{parallel_tempering, simulated_anneal, tts, AnnealSchedule, Sampleable, SampleSet, Shape};
use crate::error::{Error, Result};
use crate::gama::{gama_solve, GamaConfig};
use crate::graph::Graph;
use crate::graver::{lawrence_graver, pottier_with, Objective, PottierOptions, Strategy};
use crate::groebner::{buchberger_with, ct_solve_with, is_k_colorable_with, Ideal, Limits, ToricIp};
use crate::qubo::{brute_force, brute_force_ising, parse_ising, parse_qubo, IsingModel, QuboModel};
use crate::reformulate::{compile_qubo, PenaltyWeights, Scheme};

pub use manifest::{FileDigest, RunManifest};
pub use problem::{Bounds, GraphSpec, ObjectiveSpec, ProblemFile};

#[derive(Parser, Debug)]
#[command(name = "quip", version, about = "Test-set integer programming and QUBO tools")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; QUIP_THREADS takes precedence.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Where to write the run manifest (default: next to -o).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Groebner basis of the polynomials in a .poly file.
    Groebner(GroebnerArgs),
    /// Integer program min c.x, Ax = b, x >= 0 via the toric ideal.
    CtSolve(CtArgs),
    /// k-colorability of a DIMACS graph.
    Color(ColorArgs),
    /// Graver basis of an integer matrix.
    Graver(GraverArgs),
    /// Compile an integer program to a QUBO.
    Compile(CompileArgs),
    /// Sample a .qubo or .ising model.
    Anneal(AnnealArgs),
    /// Time to solution from a sample file.
    Tts(TtsArgs),
    /// Graver-augmented multiseed search.
    Gama(GamaArgs),
    /// Exhaustive optimum of a model or problem.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderName {
    Lex,
    Grlex,
    Grevlex,
}

#[derive(Args, Debug)]
struct GroebnerArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "lex")]
    order: OrderName,
    /// Variable list, greatest first.
    #[arg(long)]
    vars: Option<String>,
    #[arg(long, default_value_t = Limits::default().max_pairs)]
    max_pairs: u64,
    #[arg(long, default_value_t = Limits::default().max_degree)]
    max_degree: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct CtArgs {
    problem: PathBuf,
    /// Feasible starting point, comma separated.
    #[arg(long)]
    x0: Option<String>,
    #[arg(long, default_value_t = Limits::default().max_pairs)]
    max_pairs: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct ColorArgs {
    graph: PathBuf,
    #[arg(long)]
    k: u32,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraverMethod {
    Pottier,
    Lawrence,
}

#[derive(Args, Debug)]
struct GraverArgs {
    /// JSON matrix `[[...], ...]` or a problem file.
    #[arg(short = 'A', long = "matrix")]
    matrix: PathBuf,
    #[arg(long, value_enum, default_value = "pottier")]
    method: GraverMethod,
    #[arg(long, default_value_t = PottierOptions::default().max_elements)]
    max_elements: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SchemeName {
    Binary,
    Unary,
    Bounded,
}

fn scheme_of(name: SchemeName, mu: Option<u64>) -> Result<Scheme> {
    match (name, mu) {
        (SchemeName::Binary, _) => Ok(Scheme::Binary),
        (SchemeName::Unary, _) => Ok(Scheme::Unary),
        (SchemeName::Bounded, Some(m)) => Ok(Scheme::Bounded(m)),
        (SchemeName::Bounded, None) => Err(Error::Parameter("--scheme bounded needs --mu".into())),
    }
}

#[derive(Args, Debug)]
struct CompileArgs {
    problem: PathBuf,
    #[arg(long, value_enum, default_value = "binary")]
    scheme: SchemeName,
    #[arg(long)]
    mu: Option<u64>,
    /// Constraint penalty weight or `auto`.
    #[arg(long, default_value = "auto")]
    rho: String,
    /// Ancilla penalty weight or `auto`.
    #[arg(long, default_value = "auto")]
    lambda: String,
    /// Report path (default: <output>.report.json).
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct AnnealArgs {
    model: PathBuf,
    #[arg(long, default_value_t = 1000)]
    shots: usize,
    #[arg(long, default_value_t = crate::anneal::DEFAULT_SWEEPS)]
    sweeps: usize,
    #[arg(long)]
    beta_min: Option<f64>,
    #[arg(long)]
    beta_max: Option<f64>,
    #[arg(long)]
    linear: bool,
    /// Parallel tempering instead of annealing.
    #[arg(long)]
    pt: bool,
    #[arg(long, default_value_t = crate::anneal::DEFAULT_REPLICAS)]
    replicas: usize,
    #[arg(long, default_value_t = 1)]
    exchange_interval: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct TtsArgs {
    samples: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    target: f64,
    #[arg(long, default_value_t = 0.99)]
    confidence: f64,
    /// Seconds per shot.
    #[arg(long, default_value_t = 1.0)]
    tau: f64,
    /// Check the samples against this model first.
    #[arg(long)]
    model: Option<PathBuf>,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyName {
    Greedy,
    Bisection,
}

#[derive(Args, Debug)]
struct GamaArgs {
    problem: PathBuf,
    /// Polynomial objective over x0, x1, ... replacing the problem's.
    #[arg(long)]
    objective_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "binary")]
    scheme: SchemeName,
    #[arg(long)]
    mu: Option<u64>,
    #[arg(long)]
    width: Option<u32>,
    #[arg(long)]
    seed_width: Option<u32>,
    #[arg(long)]
    kernel_shots: Option<usize>,
    #[arg(long)]
    seed_shots: Option<usize>,
    #[arg(long)]
    seed_rounds: Option<usize>,
    #[arg(long)]
    sweeps: Option<usize>,
    #[arg(long)]
    fraction: Option<f64>,
    #[arg(long)]
    max_seeds: Option<usize>,
    #[arg(long, value_enum, default_value = "greedy")]
    strategy: StrategyName,
    /// Compare the extracted basis with the completion algorithm.
    #[arg(long)]
    certify: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// .qubo, .ising or problem JSON.
    file: PathBuf,
    /// Also report ln Z at this inverse temperature.
    #[arg(long)]
    beta: Option<f64>,
    #[command(flatten)]
    out: Output,
}

/// Exit status for an error: 2 bad input, 3 limits, 4 infeasible, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Validation(_)
        | Error::Parameter(_)
        | Error::Dimension { .. }
        | Error::Precondition(_)
        | Error::ZeroPolynomial => 2,
        Error::ComputationLimit(_) => 3,
        Error::Infeasible(_) | Error::NoSeed(_) | Error::Unbounded(_) => 4,
        Error::Io(_) | Error::Internal(_) => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Validation(_) | Error::Dimension { .. } => "validation",
        Error::Parameter(_) => "parameter",
        Error::Precondition(_) | Error::ZeroPolynomial => "precondition",
        Error::ComputationLimit(_) => "computation_limit",
        Error::Infeasible(_) => "infeasible",
        Error::NoSeed(_) => "no_seed",
        Error::Unbounded(_) => "unbounded",
        Error::Io(_) => "io",
        Error::Internal(_) => "internal",
    }
}

/// Runs the command line and returns the process exit status.
pub fn main() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli, argv[1..].to_vec()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", json!({"error": error_kind(&e), "message": e.to_string()}));
            exit_code(&e)
        }
    }
}

struct Ctx {
    manifest: RunManifest,
    manifest_path: Option<PathBuf>,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path)?;
        self.manifest.inputs.push(FileDigest::of(path, text.as_bytes()));
        Ok(text)
    }

    fn write(&mut self, path: Option<&Path>, text: &str) -> Result<()> {
        match path {
            Some(p) => {
                std::fs::write(p, text)?;
                self.manifest.outputs.push(FileDigest::of(p, text.as_bytes()));
                if self.manifest_path.is_none() {
                    self.manifest_path = Some(with_suffix(p, ".manifest.json"));
                }
            }
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn with_suffix(p: &Path, suffix: &str) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn threads(flag: Option<usize>) -> Result<Option<usize>> {
    if let Ok(v) = std::env::var("QUIP_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("QUIP_THREADS={v:?} is not a count")))?;
        return Ok(Some(n));
    }
    Ok(flag)
}

fn run(cli: Cli, args: Vec<String>) -> Result<()> {
    let start = Instant::now();
    let threads = threads(cli.threads)?;
    if let Some(n) = threads {
        if n == 0 {
            return Err(Error::Parameter("thread count must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Internal(e.to_string()))?;
    }
    let mut ctx = Ctx {
        manifest: RunManifest::new(args, cli.seed),
        manifest_path: cli.manifest.clone(),
    };
    let seed = cli.seed;
    match cli.command {
        Command::Groebner(a) => groebner(&mut ctx, a)?,
        Command::CtSolve(a) => ct(&mut ctx, a)?,
        Command::Color(a) => color(&mut ctx, a)?,
        Command::Graver(a) => graver(&mut ctx, a)?,
        Command::Compile(a) => compile(&mut ctx, a)?,
        Command::Anneal(a) => anneal(&mut ctx, a, seed)?,
        Command::Tts(a) => tts_cmd(&mut ctx, a)?,
        Command::Gama(a) => gama(&mut ctx, a, seed)?,
        Command::Oracle(a) => oracle(&mut ctx, a)?,
    }
    ctx.manifest.seconds = start.elapsed().as_secs_f64();
    if let Some(p) = &ctx.manifest_path {
        std::fs::write(p, ctx.manifest.to_json())?;
    }
    Ok(())
}

fn groebner(ctx: &mut Ctx, a: GroebnerArgs) -> Result<()> {
    let text = ctx.read(&a.file)?;
    let names = match &a.vars {
        Some(v) => VarNames::parse_list(v)?,
        None => VarNames::infer(&text),
    };
    let n = names.len();
    let order = match a.order {
        OrderName::Lex => MonomialOrder::lex(n),
        OrderName::Grlex => MonomialOrder::grlex(n),
        OrderName::Grevlex => MonomialOrder::grevlex(n),
    };
    let limits = Limits {
        max_pairs: a.max_pairs,
        max_degree: a.max_degree,
    };
    ctx.manifest.config = json!({"order": order.name(), "vars": names.names(), "max_pairs": a.max_pairs, "max_degree": a.max_degree});
    let polys = parse_polynomial_list(&text, &names)?;
    let basis = buchberger_with(&Ideal::new(polys, names.clone())?, &order, limits)?;
    let mut out = String::new();
    for p in basis.polynomials() {
        out.push_str(&format_polynomial(p, Some(&names)));
        out.push('\n');
    }
    ctx.write(a.out.output.as_deref(), &out)
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("{t:?} is not an integer")))
        })
        .collect()
}

fn ct(ctx: &mut Ctx, a: CtArgs) -> Result<()> {
    let p = ProblemFile::parse(&ctx.read(&a.problem)?)?;
    let (Some(m), Some(b)) = (p.a.clone(), p.b.clone()) else {
        return Err(Error::Validation("ct-solve needs A and b".into()));
    };
    let c = p.linear_cost()?;
    let ip = ToricIp::new(m, b, c)?;
    let x0 = a.x0.as_deref().map(parse_ints).transpose()?;
    ctx.manifest.config = json!({"x0": x0, "max_pairs": a.max_pairs});
    let limits = Limits {
        max_pairs: a.max_pairs,
        ..Limits::default()
    };
    let x = ct_solve_with(&ip, x0.as_deref(), limits)?;
    let out = json!({"x": x, "objective": ip.objective(&x)});
    ctx.write(a.out.output.as_deref(), &pretty(&out))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialise");
    s.push('\n');
    s
}

fn color(ctx: &mut Ctx, a: ColorArgs) -> Result<()> {
    let g = Graph::parse_dimacs(&ctx.read(&a.graph)?)?;
    ctx.manifest.config = json!({"k": a.k});
    let ok = is_k_colorable_with(&g, a.k, Limits::default())?;
    ctx.write(a.out.output.as_deref(), &format!("colorable: {ok}\n"))
}

fn graver(ctx: &mut Ctx, a: GraverArgs) -> Result<()> {
    let text = ctx.read(&a.matrix)?;
    let m: Vec<Vec<i64>> = match serde_json::from_str::<Vec<Vec<i64>>>(&text) {
        Ok(m) => m,
        Err(_) => ProblemFile::parse(&text)?
            .a
            .ok_or_else(|| Error::Validation("problem has no matrix A".into()))?,
    };
    let n = m.first().map_or(0, Vec::len);
    ctx.manifest.config = json!({"method": format!("{:?}", a.method).to_lowercase(), "max_elements": a.max_elements});
    let basis = match a.method {
        GraverMethod::Pottier => pottier_with(
            &m,
            n,
            PottierOptions {
                max_elements: a.max_elements,
                ..Default::default()
            },
        )?,
        GraverMethod::Lawrence => lawrence_graver(&m, n)?,
    };
    let out = json!({"complete": !basis.is_partial(), "size": basis.len(), "elements": basis.elements()});
    ctx.write(a.out.output.as_deref(), &pretty(&out))
}

fn weight(s: &str) -> Result<Option<crate::algebra::Rational>> {
    if s == "auto" {
        return Ok(None);
    }
    parse_rational(s)
        .map(Some)
        .ok_or_else(|| Error::Parameter(format!("{s:?} is neither `auto` nor a number")))
}

fn compile(ctx: &mut Ctx, a: CompileArgs) -> Result<()> {
    let p = ProblemFile::parse(&ctx.read(&a.problem)?)?;
    let ip = p.system()?;
    let scheme = scheme_of(a.scheme, a.mu)?;
    let (rho, lambda) = (weight(&a.rho)?, weight(&a.lambda)?);
    let weights = if rho.is_none() && lambda.is_none() {
        None
    } else {
        let auto = compile_qubo(&ip, scheme, None)?.report.weights;
        Some(PenaltyWeights::new(rho.unwrap_or(auto.rho), lambda.unwrap_or(auto.lambda))?)
    };
    ctx.manifest.config = json!({"scheme": scheme, "rho": a.rho, "lambda": a.lambda});
    let c = compile_qubo(&ip, scheme, weights)?;
    let report = serde_json::to_string_pretty(&c.report).expect("reports serialise") + "\n";
    ctx.write(a.out.output.as_deref(), &crate::qubo::write_qubo(&c.qubo))?;
    let report_path = a.report.or_else(|| a.out.output.as_deref().map(|o| with_suffix(o, ".report.json")));
    match report_path {
        Some(rp) => ctx.write(Some(&rp), &report),
        None => {
            eprint!("{report}");
            Ok(())
        }
    }
}

enum Model {
    Qubo(QuboModel),
    Ising(IsingModel),
}

fn read_model(text: &str) -> Result<Model> {
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'))
        .unwrap_or("");
    if header.starts_with("p ising") {
        Ok(Model::Ising(parse_ising(text)?))
    } else {
        Ok(Model::Qubo(parse_qubo(text)?))
    }
}

fn schedule_for<M: Sampleable>(m: &M, a: &AnnealArgs) -> Result<AnnealSchedule> {
    let mut s = AnnealSchedule::for_model(&m.to_ising());
    if let Some(b) = a.beta_min {
        s.beta_min = b;
    }
    if let Some(b) = a.beta_max {
        s.beta_max = b;
    }
    s.sweeps = a.sweeps;
    s.replicas = a.replicas;
    s.exchange_interval = a.exchange_interval;
    if a.linear {
        s.shape = Shape::Linear;
    }
    s.validate()?;
    Ok(s)
}

fn sample<M: Sampleable>(m: &M, a: &AnnealArgs, seed: u64) -> Result<(AnnealSchedule, SampleSet)> {
    let s = schedule_for(m, a)?;
    let set = if a.pt {
        parallel_tempering(m, &s, a.shots, seed)?
    } else {
        simulated_anneal(m, &s, a.shots, seed)?
    };
    Ok((s, set))
}

fn anneal(ctx: &mut Ctx, a: AnnealArgs, seed: u64) -> Result<()> {
    let (s, set) = match read_model(&ctx.read(&a.model)?)? {
        Model::Qubo(q) => sample(&q, &a, seed)?,
        Model::Ising(m) => sample(&m, &a, seed)?,
    };
    ctx.manifest.config = json!({"schedule": s, "shots": a.shots, "sampler": if a.pt { "tempering" } else { "anneal" }});
    ctx.write(a.out.output.as_deref(), &set.to_jsonl()?)
}

fn tts_cmd(ctx: &mut Ctx, a: TtsArgs) -> Result<()> {
    let set = SampleSet::from_jsonl(&ctx.read(&a.samples)?)?;
    if let Some(mp) = &a.model {
        match read_model(&ctx.read(mp)?)? {
            Model::Qubo(q) => set.verify(&q)?,
            Model::Ising(m) => set.verify(&m)?,
        }
    }
    ctx.manifest.config = json!({"target": a.target, "confidence": a.confidence, "tau": a.tau});
    let t = tts(&set, a.tau, a.target, a.confidence)?;
    let p = set.fraction_at_or_below(a.target);
    ctx.write(a.out.output.as_deref(), &format!("success: {p}\ntts: {t}\n"))
}

fn gama(ctx: &mut Ctx, a: GamaArgs, seed: u64) -> Result<()> {
    let p = ProblemFile::parse(&ctx.read(&a.problem)?)?;
    let ip = p.system()?;
    let f: Box<dyn Objective> = match &a.objective_file {
        Some(path) => {
            let text = ctx.read(path)?;
            let body: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join(" ");
            Box::new(parse_polynomial(&body, &VarNames::indexed(ip.num_vars()))?)
        }
        None => p.oracle()?,
    };
    let d = GamaConfig::default();
    let cfg = GamaConfig {
        scheme: scheme_of(a.scheme, a.mu)?,
        width: a.width.unwrap_or(d.width),
        widths: None,
        seed_width: a.seed_width,
        kernel_shots: a.kernel_shots.unwrap_or(d.kernel_shots),
        seed_shots: a.seed_shots.unwrap_or(d.seed_shots),
        seed_rounds: a.seed_rounds.unwrap_or(d.seed_rounds),
        sweeps: a.sweeps.unwrap_or(d.sweeps),
        basis_fraction: a.fraction.unwrap_or(d.basis_fraction),
        max_seeds: a.max_seeds,
        strategy: match a.strategy {
            StrategyName::Greedy => Strategy::Greedy,
            StrategyName::Bisection => Strategy::Bisection,
        },
        certify: a.certify,
        seed,
    };
    ctx.manifest.config = serde_json::to_value(&cfg).expect("config serialises");
    let report = gama_solve(&ip, f.as_ref(), &cfg)?;
    ctx.manifest.stage_seconds = Some(json!({
        "kernel": report.times.kernel,
        "seeds": report.times.seeds,
        "augment": report.times.augment,
    }));
    let text = serde_json::to_string_pretty(&report).expect("reports serialise") + "\n";
    ctx.write(a.out.output.as_deref(), &text)
}

fn oracle(ctx: &mut Ctx, a: OracleArgs) -> Result<()> {
    let text = ctx.read(&a.file)?;
    ctx.manifest.config = json!({"beta": a.beta});
    let is_json = text.trim_start().starts_with('{');
    let out = if is_json {
        oracle_problem(&ProblemFile::parse(&text)?)?
    } else {
        match read_model(&text)? {
            Model::Qubo(q) => {
                let e = brute_force(&q, a.beta)?;
                json!({"energy": format_rational(&e.energy), "argmins": e.argmins, "degeneracy": e.degeneracy, "log_partition": e.log_partition})
            }
            Model::Ising(m) => {
                let e = brute_force_ising(&m, a.beta)?;
                json!({"energy": format_rational(&e.energy), "argmins": e.argmins, "degeneracy": e.degeneracy, "log_partition": e.log_partition})
            }
        }
    };
    ctx.write(a.out.output.as_deref(), &pretty(&out))
}

fn oracle_problem(p: &ProblemFile) -> Result<serde_json::Value> {
    let ip = p.system()?;
    if p.polynomial_objective()?.is_some() || p.objective.is_none() {
        return match ip.brute_force()? {
            Some((v, pts)) => Ok(json!({"optimum": format_rational(&v), "argmins": pts})),
            None => Err(Error::Infeasible("no feasible point in the box".into())),
        };
    }
    // oracle objectives are compared in floating point
    let f = p.oracle()?;
    let (l, u) = ip.finite_bounds()?;
    let mut x = l.clone();
    let mut best: Option<(f64, Vec<Vec<i64>>)> = None;
    loop {
        if ip.is_feasible(&x) {
            let v = f.value(&x);
            match &mut best {
                Some((bv, pts)) if *bv == v => pts.push(x.clone()),
                Some((bv, _)) if *bv < v => {}
                _ => best = Some((v, vec![x.clone()])),
            }
        }
        let mut k = x.len();
        loop {
            if k == 0 {
                return match best {
                    Some((v, pts)) => Ok(json!({"optimum": v, "argmins": pts})),
                    None => Err(Error::Infeasible("no feasible point in the box".into())),
                };
            }
            k -= 1;
            if x[k] < u[k] {
                x[k] += 1;
                break;
            }
            x[k] = l[k];
        }
    }
}
