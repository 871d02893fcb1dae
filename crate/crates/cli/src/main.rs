use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tricolor::gen::{generate, GenKind, GenSpec};
use tricolor::io::Instance;
use tricolor::solver::{SolveParams, Solver, SolverRegistry};
use tricolor::svg::render;
use tricolor::Error;

/// Balanced bipartitions of 3-colored points and lines.
#[derive(Parser)]
#[command(name = "tricolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance as JSON.
    Gen {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a solver on an instance file or a generated instance.
    Solve {
        /// cell, segment, halving, wedge111, wedge, arcs, lline or parity.
        solver: String,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: Option<usize>,
        /// Embed an oracle verification report in the output.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a saved answer against the oracle.
    Verify {
        #[arg(long)]
        solver: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        answer: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an instance, with an answer if one is given or can be computed.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        answer: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Source {
    #[arg(long = "in", conflicts_with = "kind")]
    input: Option<PathBuf>,
    /// Generator kind; defaults to the solver's natural input class.
    #[arg(long)]
    kind: Option<String>,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
}

enum Failure {
    Solver(Error),
    Usage(anyhow::Error),
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Solver(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn default_kind(solver: &str) -> GenKind {
    match solver {
        "cell" | "segment" => GenKind::SimpleLines3C,
        "halving" => GenKind::BalancedLines3C,
        "wedge111" => GenKind::Points3C,
        "wedge" => GenKind::BalancedPoints3C,
        "arcs" => GenKind::CirclePoints3C,
        "lline" => GenKind::LatticeRedHull,
        _ => GenKind::ColoredSphere,
    }
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Instance::from_json(&text)?)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text).map_err(Error::from)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{}", text.trim_end()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(anyhow::Error::from(e).into());
                }
            }
        }
    }
    Ok(())
}

fn load(source: &Source, solver: &str) -> Result<(Instance, String), Failure> {
    if let Some(p) = &source.input {
        return Ok((read_instance(p)?, p.display().to_string()));
    }
    let kind = match &source.kind {
        Some(k) => k.parse()?,
        None => default_kind(solver),
    };
    let spec = GenSpec::new(kind, source.n, source.seed);
    Ok((generate(&spec)?, format!("{kind}:n={}:seed={}", spec.n, spec.seed)))
}

fn verified(s: &dyn Solver, inst: &Instance, id: &str, params: &SolveParams, answer: &Value) -> Result<Value, Failure> {
    let mut r = s.verify(inst, params, answer)?;
    r.instance = id.to_string();
    Ok(serde_json::to_value(r).map_err(Error::from)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let registry = SolverRegistry::default();
    match cli.command {
        Command::Gen { kind, n, seed, out } => {
            let inst = generate(&GenSpec::new(kind.parse()?, n, seed))?;
            emit(out.as_deref(), &inst.to_json())
        }
        Command::Solve { solver, source, k, verify, format, out } => {
            let s = registry.get(&solver)?;
            let (inst, id) = load(&source, &solver)?;
            let params = SolveParams { k };
            let answer = s.solve(&inst, &params)?;
            let mut doc = answer.clone();
            doc["solver"] = json!(s.name());
            doc["instance"] = json!(id);
            if verify {
                let report = verified(s, &inst, &id, &params, &answer)?;
                let ok = report["member"] == json!(true);
                doc["verification"] = report;
                if !ok {
                    eprintln!("{}", serde_json::to_string_pretty(&doc).unwrap_or_default());
                    return Err(Error::internal("solver answer failed oracle verification").into());
                }
            }
            match format {
                Format::Json => emit(out.as_deref(), &serde_json::to_string_pretty(&doc).map_err(Error::from)?),
                Format::Svg => emit(out.as_deref(), &render(&inst, Some(&answer))?),
            }
        }
        Command::Verify { solver, input, answer, k, out } => {
            let s = registry.get(&solver)?;
            let inst = read_instance(&input)?;
            let answer = read_json(&answer)?;
            let report = verified(s, &inst, &input.display().to_string(), &SolveParams { k }, &answer)?;
            emit(out.as_deref(), &report.to_string())?;
            if report["member"] != json!(true) {
                return Err(Failure::Rejected("answer rejected by the oracle".into()));
            }
            Ok(())
        }
        Command::Render { input, answer, k, out } => {
            let inst = read_instance(&input)?;
            let answer = match answer {
                Some(p) => Some(read_json(&p)?),
                None => {
                    let solver = match &inst {
                        Instance::Lines { .. } => Some("cell"),
                        Instance::Lattice { .. } => Some("lline"),
                        Instance::Circle { .. } if k.is_some() => Some("arcs"),
                        Instance::Points { points } if points.len() % 6 == 0 => Some("wedge"),
                        Instance::Points { .. } => Some("wedge111"),
                        _ => None,
                    };
                    solver.and_then(|name| registry.get(name).ok()?.solve(&inst, &SolveParams { k }).ok())
                }
            };
            emit(out.as_deref(), &render(&inst, answer.as_ref())?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Solver(e)) => {
            eprintln!("error: {e}");
            if let Error::Internal { trace: Some(t), .. } = &e {
                eprintln!("trace: {t}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
