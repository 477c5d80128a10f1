//! The `mbqc` command line.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use mbqc_core::anneal::AnnealConfig;
use mbqc_core::oracle::{hybrid_shot, resource_state, simulate_pattern_branch, simulate_sequence, DenseState};
use mbqc_core::pattern::{build_pattern, hybrid_premeasure, MeasurementPattern};
use mbqc_core::pauli::PauliString;
use mbqc_core::resource::{physical_resource_tableau, CompiledResource};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{catalog, catalog_entry};
use crate::compile::{anneal_problem, compile, distance_matrix};
use crate::export::{pattern_to_json, resource_from_json, resource_to_dot, resource_to_json, trace_to_csv};
use crate::problem::{load_problem, Method, Problem};
use crate::report::report;

/// Largest register simulated densely by `verify`.
const DENSE_LIMIT: usize = 14;

#[derive(Debug, Parser)]
#[command(name = "mbqc", version, about = "Compile Pauli-rotation sequences into graph-state MBQC resources")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the bundled example problems, or write them as JSON files.
    Examples {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the closed-form resource and measurement pattern.
    Compile {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Search the LC orbit for a resource with fewer long-range edges.
    Anneal {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        anneal: AnnealArgs,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Check a resource against the circuit it should implement.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Resource JSON to check instead of the compiled one.
        #[arg(long)]
        resource: Option<PathBuf>,
        /// Pauli observable estimated through the hybrid scheme; defaults to the problem's list.
        #[arg(long)]
        observable: Vec<String>,
        #[arg(long, default_value_t = 2000)]
        shots: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print active-qubit, edge and cost figures as JSON.
    Report {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        resource: Option<PathBuf>,
        #[command(flatten)]
        anneal: AnnealArgs,
    },
}

#[derive(Debug, Args)]
pub struct Target {
    /// Problem JSON file or catalog name.
    pub problem: String,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Override the number of Trotter steps.
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Args, Default)]
pub struct AnnealArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub cooling_rate: Option<f64>,
    #[arg(long)]
    pub target_memory: Option<usize>,
    #[arg(long)]
    pub runs: Option<usize>,
    #[arg(long)]
    pub main_edge_override: bool,
}

impl AnnealArgs {
    fn apply(&self, mut c: AnnealConfig) -> AnnealConfig {
        if let Some(s) = self.seed {
            c.seed = s;
        }
        if let Some(l) = self.cooling_rate {
            c.cooling_rate = l;
        }
        if let Some(t) = self.target_memory {
            c.target_memory = t;
        }
        if let Some(r) = self.runs {
            c.runs = r;
        }
        c.main_edge_override |= self.main_edge_override;
        c
    }
}

#[derive(Debug)]
pub enum Failure {
    Validation(String),
    Verification(String),
    NoFeasible(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Verification(_) => 2,
            Failure::NoFeasible(_) => 3,
        }
    }
}

impl Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Validation(m) => write!(f, "error: {m}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::NoFeasible(m) => write!(f, "no feasible solution: {m}"),
        }
    }
}

fn invalid(e: impl Display) -> Failure {
    Failure::Validation(e.to_string())
}

fn load(target: &Target) -> Result<Problem, Failure> {
    let path = Path::new(&target.problem);
    let problem = if path.exists() {
        load_problem(path).map_err(invalid)?
    } else if let Some(spec) = catalog_entry(&target.problem) {
        spec.validate().map_err(invalid)?
    } else {
        return Err(invalid(format!("{} is neither a file nor a catalog entry", target.problem)));
    };
    match target.steps {
        Some(k) => problem.with_steps(k).map_err(invalid),
        None => Ok(problem),
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    std::fs::create_dir_all(dir).map_err(|e| invalid(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn read_resource(path: &Path) -> Result<CompiledResource, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    resource_from_json(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn check_shape(r: &CompiledResource, problem: &Problem) -> Result<(), Failure> {
    let seq = &problem.sequence;
    if (r.num_main, r.period, r.steps) != (seq.num_qubits(), seq.period_len(), seq.steps()) {
        return Err(invalid(format!(
            "resource shape (N={}, L={}, K={}) does not match the problem (N={}, L={}, K={})",
            r.num_main,
            r.period,
            r.steps,
            seq.num_qubits(),
            seq.period_len(),
            seq.steps()
        )));
    }
    Ok(())
}

fn emit(out: &mut dyn Write, line: impl Display) {
    let _ = writeln!(out, "{line}");
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Examples { out: dir } => examples(dir.as_deref(), out),
        Command::Compile { target, out: dir } => {
            let problem = load(&target)?;
            let method = target.method.unwrap_or(problem.spec.method);
            let c = compile(&problem, method).map_err(invalid)?;
            write_outputs(&dir, problem.name(), &c.resource, &c.pattern, &problem, None)?;
            emit(out, format!("{}: {method} resource with {} vertices and {} edges", problem.name(), c.resource.num_vertices(), c.resource.graph.num_edges()));
            Ok(())
        }
        Command::Anneal { target, anneal, out: dir } => {
            let problem = load(&target)?;
            let config = anneal.apply(problem.anneal_config());
            config.validate().map_err(invalid)?;
            let outcome = anneal_problem(&problem, &config).map_err(invalid)?;
            for r in &outcome.runs {
                emit(
                    out,
                    format!(
                        "run {}: best W={} Pi={} ({} moves), lowest W={} Pi={}",
                        r.run,
                        r.best.w,
                        r.best.pi,
                        r.best.moves.len(),
                        r.lowest.w,
                        r.lowest.pi
                    ),
                );
            }
            let pattern = build_pattern(&problem.sequence);
            write_file(&dir, "lowest.json", &resource_to_json(&outcome.lowest.resource))?;
            write_file(&dir, "trace.csv", &trace_to_csv(&outcome.selected_run().trace))?;
            write_outputs(&dir, problem.name(), &outcome.best.resource, &pattern, &problem, Some(&config))?;
            if !outcome.improved() {
                return Err(Failure::NoFeasible(format!(
                    "no run kept a periodic state better than the closed form; lowest W={} Pi={}",
                    outcome.lowest.w, outcome.lowest.pi
                )));
            }
            emit(out, format!("selected run {}: W={} Pi=0", outcome.selected, outcome.best.w));
            Ok(())
        }
        Command::Verify { target, resource, observable, shots, seed } => {
            let problem = load(&target)?;
            let method = target.method.unwrap_or(problem.spec.method);
            let res = match resource {
                Some(p) => read_resource(&p)?,
                None => compile(&problem, method).map_err(invalid)?.resource,
            };
            check_shape(&res, &problem)?;
            let observables = observable
                .iter()
                .map(|s| {
                    let p: PauliString = s.parse().map_err(invalid)?;
                    if p.num_qubits() != problem.num_qubits() {
                        return Err(invalid(format!("observable {s} has width {}, expected {}", p.num_qubits(), problem.num_qubits())));
                    }
                    Ok(p)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let observables = if observables.is_empty() { problem.observables.clone() } else { observables };
            verify(&problem, &res, &observables, shots, seed, out)
        }
        Command::Report { target, resource, anneal } => {
            let problem = load(&target)?;
            let method = target.method.unwrap_or(problem.spec.method);
            let res = match resource {
                Some(p) => read_resource(&p)?,
                None => compile(&problem, method).map_err(invalid)?.resource,
            };
            check_shape(&res, &problem)?;
            let config = anneal.apply(problem.anneal_config());
            let d = distance_matrix(&problem, &config).ok();
            let rep = report(&res, &build_pattern(&problem.sequence), d.as_ref()).map_err(invalid)?;
            emit(out, serde_json::to_string_pretty(&rep).expect("serializable"));
            Ok(())
        }
    }
}

fn examples(dir: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    for spec in catalog() {
        let name = spec.name.clone().unwrap_or_default();
        emit(out, format!("{name:16} N={:<2} L={:<2} K={}", spec.num_qubits, spec.period.len(), spec.trotter_steps));
        if let Some(dir) = dir {
            let json = serde_json::to_string_pretty(&spec).expect("serializable") + "\n";
            write_file(dir, &format!("{name}.json"), &json)?;
        }
    }
    Ok(())
}

fn write_outputs(
    dir: &Path,
    name: &str,
    res: &CompiledResource,
    pattern: &MeasurementPattern,
    problem: &Problem,
    config: Option<&AnnealConfig>,
) -> Result<(), Failure> {
    let config = config.cloned().unwrap_or_else(|| problem.anneal_config());
    let d = distance_matrix(problem, &config).ok();
    let rep = report(res, pattern, d.as_ref()).map_err(invalid)?;
    write_file(dir, "resource.json", &resource_to_json(res))?;
    write_file(dir, "pattern.json", &pattern_to_json(pattern))?;
    write_file(dir, "resource.dot", &resource_to_dot(res, name))?;
    write_file(dir, "report.json", &(serde_json::to_string_pretty(&rep).expect("serializable") + "\n"))
}

fn verify(
    problem: &Problem,
    res: &CompiledResource,
    observables: &[PauliString],
    shots: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let expected = physical_resource_tableau(&problem.sequence, &problem.initial).map_err(invalid)?;
    let actual = res.physical_tableau().map_err(invalid)?;
    if !actual.same_group(&expected).map_err(invalid)? {
        return Err(Failure::Verification("resource stabilizer group differs from the circuit resource".into()));
    }
    emit(out, "stabilizer group: ok");

    let seq = problem.bound_sequence(seed);
    let pattern = build_pattern(&seq);
    let angles = pattern.numeric_angles().map_err(invalid)?;
    let n = problem.num_qubits();
    let m = pattern.num_aux();
    if n + m > DENSE_LIMIT {
        emit(out, format!("dense checks skipped: {} qubits exceed {DENSE_LIMIT}", n + m));
        return Ok(());
    }
    let target = simulate_sequence(&seq, &angles, &problem.initial).map_err(invalid)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order: Vec<usize> = pattern.rounds.iter().flatten().copied().collect();
    let branches = 8.min(1usize << m.min(20));
    let mut total = 0.0;
    for b in 0..branches {
        let outcomes: Vec<bool> = (0..m).map(|_| b > 0 && rng.gen()).collect();
        let branch = simulate_pattern_branch(res, &pattern, &angles, &outcomes, &order).map_err(invalid)?;
        total += branch.probability;
        let Some(state) = branch.state else { continue };
        let f = state.fidelity(&target);
        if f < 1.0 - 1e-9 {
            return Err(Failure::Verification(format!("branch {outcomes:?} has fidelity {f:.12}")));
        }
    }
    emit(out, format!("pattern branches: ok ({branches} checked, probability mass {total:.6})"));

    for obs in observables {
        let hp = hybrid_premeasure(res, obs).map_err(invalid)?;
        let aux_state: DenseState = resource_state(&hp.aux_resource).map_err(invalid)?;
        let exact = target.expectation(obs);
        let mut sum = 0.0;
        for _ in 0..shots.max(1) {
            let minus = hybrid_shot(&hp, &pattern, &aux_state, &angles, &mut rng).map_err(invalid)?;
            sum += if minus { -1.0 } else { 1.0 };
        }
        let estimate = sum / shots.max(1) as f64;
        let sigma = ((1.0 - exact * exact).max(0.0) / shots.max(1) as f64).sqrt();
        emit(out, format!("observable {obs}: estimate {estimate:.4}, exact {exact:.4}, sigma {sigma:.4}"));
        if (estimate - exact).abs() > 4.0 * sigma + 1e-9 {
            return Err(Failure::Verification(format!("observable {obs} deviates by more than 4 sigma")));
        }
    }
    Ok(())
}
