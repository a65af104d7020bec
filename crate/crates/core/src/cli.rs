//! Command-line front end. Exit codes: 0 yes, 1 no, 2 error.

use crate::error::{Error, Result};
use crate::gen::Model;
use crate::graph::Graph;
use crate::grundy::solve_grundy_kij;
use crate::io::{parse_graph, serialize, Format};
use crate::oracle::{oracle_grundy, oracle_partial_grundy};
use crate::pgc::{solve_pgc, solve_pgc_degenerate, Answer, Mode, DEFAULT_BUDGET};
use crate::witness::Certificate;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

#[derive(Parser, Debug)]
#[command(name = "grundy", version, about = "Grundy and partial Grundy coloring solvers")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide ∂Γ(G) ≥ k.
    Pgc(SolveArgs),
    /// Decide Γ(G) ≥ k on a K_{i,j}-free graph.
    Grundy(GrundyArgs),
    /// Brute-force Γ and ∂Γ (n ≤ 10).
    Oracle(GraphArgs),
    /// Re-check a certificate JSON against a graph.
    Verify(VerifyArgs),
    /// Sweep generator models and print CSV.
    Bench(BenchArgs),
    /// Print a generated graph.
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Rand,
    Det,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => Format::Dimacs,
            FormatArg::Edgelist => Format::Edgelist,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Pgc,
    Grundy,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Graph file; stdin when absent or "-".
    graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dimacs")]
    format: FormatArg,
    /// Vertex count for edge lists.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug, Clone, Copy)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "det")]
    mode: ModeArg,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_u64)]
    seed: u64,
    /// Worker threads; 1 is the reference semantics.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

impl RunArgs {
    fn mode(&self) -> Mode {
        match self.mode {
            ModeArg::Rand => Mode::Randomized { trials: self.trials, seed: self.seed },
            ModeArg::Det => Mode::Deterministic { budget: self.budget },
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    run: RunArgs,
    /// Skip degree reduction and run SPGC directly.
    #[arg(long)]
    degenerate: bool,
}

#[derive(Args, Debug)]
struct GrundyArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    i: usize,
    #[arg(long, default_value_t = 2)]
    j: usize,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Certificate JSON, or a solver output containing one.
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Generator specs such as gnp:12,0.3 (repeatable).
    #[arg(long = "model", required = true)]
    models: Vec<String>,
    /// Values of k (comma-separated).
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<usize>,
    #[arg(long, value_enum, default_value = "pgc")]
    problem: Problem,
    #[arg(long, default_value_t = 2)]
    i: usize,
    #[arg(long, default_value_t = 2)]
    j: usize,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Generator spec, e.g. degenerate:20,2.
    model: String,
    #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_u64)]
    seed: u64,
    #[arg(long, value_enum, default_value = "dimacs")]
    format: FormatArg,
}

fn parse_u64(s: &str) -> std::result::Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| e.to_string())
}

fn read_graph(a: &GraphArgs) -> Result<Graph> {
    let text = match a.graph.as_deref() {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
            s
        }
    };
    parse_graph(&text, a.format.into(), a.n)
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidParameter("--threads must be at least 1".into())),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn add_millis(mut v: Value, start: Instant) -> Value {
    if let Some(stats) = v.get_mut("stats").and_then(Value::as_object_mut) {
        stats.insert("millis".into(), Value::from(start.elapsed().as_millis() as u64));
    }
    v
}

fn exit_for(answer: Answer) -> i32 {
    match answer {
        Answer::Yes => 0,
        Answer::No | Answer::NoWitnessFound => 1,
    }
}

struct Outcome {
    stdout: String,
    code: i32,
}

fn run_pgc(a: &SolveArgs, g: &Graph) -> Result<(Value, Answer, u64)> {
    let mode = a.run.mode();
    let r = with_threads(a.run.threads, || {
        if a.degenerate {
            solve_pgc_degenerate(g, a.k, mode)
        } else {
            solve_pgc(g, a.k, mode)
        }
    })??;
    Ok((r.to_json(), r.answer, r.stats.trials))
}

fn run_grundy(k: usize, i: usize, j: usize, run: &RunArgs, g: &Graph) -> Result<(Value, Answer, u64)> {
    let mode = run.mode();
    let r = with_threads(run.threads, || solve_grundy_kij(g, k, i, j, mode))??;
    Ok((r.to_json(), r.answer, r.stats.trials))
}

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serializable"))
}

fn certificate_from(v: Value) -> Result<Certificate> {
    let v = match v {
        Value::Object(mut o) if o.contains_key("certificate") => o.remove("certificate").unwrap_or(Value::Null),
        other => other,
    };
    serde_json::from_value(v).map_err(|e| Error::Parse { line: 0, msg: format!("certificate: {e}") })
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Command::Pgc(a) => {
            let g = read_graph(&a.graph)?;
            let start = Instant::now();
            let (v, answer, _) = run_pgc(&a, &g)?;
            Ok(Outcome { stdout: json_line(&add_millis(v, start)), code: exit_for(answer) })
        }
        Command::Grundy(a) => {
            let g = read_graph(&a.graph)?;
            let start = Instant::now();
            let (v, answer, _) = run_grundy(a.k, a.i, a.j, &a.run, &g)?;
            Ok(Outcome { stdout: json_line(&add_millis(v, start)), code: exit_for(answer) })
        }
        Command::Oracle(a) => {
            let g = read_graph(&a)?;
            let v = serde_json::json!({
                "gamma": oracle_grundy(&g)?,
                "partial_gamma": oracle_partial_grundy(&g)?,
            });
            Ok(Outcome { stdout: json_line(&v), code: 0 })
        }
        Command::Verify(a) => {
            let g = read_graph(&a.graph)?;
            let text = std::fs::read_to_string(&a.cert).map_err(|e| Error::Io(format!("{}: {e}", a.cert.display())))?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
            let ok = certificate_from(v).map(|c| c.verify(&g)).unwrap_or(false);
            let (msg, code) = if ok { ("witness valid", 0) } else { ("witness invalid", 1) };
            Ok(Outcome { stdout: format!("{msg}\n"), code })
        }
        Command::Bench(a) => {
            let mut out = String::from("model,n,k,mode,answer,millis,trials\n");
            let mode_name = a.run.mode().name();
            for spec in &a.models {
                let model: Model = spec.parse()?;
                let g = model.generate(a.run.seed)?;
                for &k in &a.k {
                    let start = Instant::now();
                    let (_, answer, trials) = match a.problem {
                        Problem::Pgc => {
                            let s = SolveArgs {
                                graph: GraphArgs { graph: None, format: FormatArg::Dimacs, n: None },
                                k,
                                run: a.run,
                                degenerate: false,
                            };
                            run_pgc(&s, &g)?
                        }
                        Problem::Grundy => run_grundy(k, a.i, a.j, &a.run, &g)?,
                    };
                    let answer = serde_json::to_value(answer).expect("serializable");
                    out.push_str(&format!(
                        "{},{},{k},{mode_name},{},{},{trials}\n",
                        spec.replace(',', ";"),
                        g.n(),
                        answer.as_str().unwrap_or(""),
                        start.elapsed().as_millis()
                    ));
                }
            }
            Ok(Outcome { stdout: out, code: 0 })
        }
        Command::Gen(a) => {
            let model: Model = a.model.parse()?;
            let g = model.generate(a.seed)?;
            Ok(Outcome { stdout: serialize(&g, a.format.into()), code: 0 })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(o) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(o.stdout.as_bytes());
            let _ = stdout.flush();
            o.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
