use mbqc_core::anneal::{anneal_run, build_distance_matrix, select_best, select_lowest, AnnealConfig, AnnealRun, Candidate, DistanceMatrix};
use mbqc_core::ladder::ac_graph;
use mbqc_core::pattern::{build_pattern, MeasurementPattern};
use mbqc_core::resource::{conjugate_through_initial_lc, periodic_graph, CompiledResource, ConjugatedSequence};
use rayon::prelude::*;

use crate::problem::{Method, Problem};

#[derive(Clone, Debug)]
pub struct Compiled {
    pub method: Method,
    pub conjugated: ConjugatedSequence,
    pub resource: CompiledResource,
    pub pattern: MeasurementPattern,
}

pub fn compile(problem: &Problem, method: Method) -> mbqc_core::Result<Compiled> {
    let conjugated = conjugate_through_initial_lc(&problem.sequence, &problem.initial)?;
    let resource = match method {
        Method::Lc => periodic_graph(&conjugated)?,
        Method::Ac => ac_graph(&conjugated)?,
    };
    Ok(Compiled { method, conjugated, resource, pattern: build_pattern(&problem.sequence) })
}

pub fn distance_matrix(problem: &Problem, config: &AnnealConfig) -> mbqc_core::Result<DistanceMatrix> {
    build_distance_matrix(&problem.group_sizes(), problem.num_qubits(), config.target_memory, config.main_edge_override)
}

#[derive(Clone, Debug)]
pub struct AnnealOutcome {
    pub runs: Vec<AnnealRun>,
    /// Index into `runs` of the selected run.
    pub selected: usize,
    /// Best feasible state of the selected run.
    pub best: Candidate,
    /// Lowest-cost state over all runs, feasible or not.
    pub lowest: Candidate,
    pub distance: DistanceMatrix,
}

impl AnnealOutcome {
    /// Whether some run kept a feasible state other than the starting graph.
    pub fn improved(&self) -> bool {
        self.runs.iter().any(AnnealRun::improved)
    }

    pub fn selected_run(&self) -> &AnnealRun {
        &self.runs[self.selected]
    }
}

/// Anneals the closed-form LC resource with `config.runs` restarts in parallel.
pub fn anneal_problem(problem: &Problem, config: &AnnealConfig) -> mbqc_core::Result<AnnealOutcome> {
    config.validate()?;
    let start = compile(problem, Method::Lc)?.resource;
    let distance = distance_matrix(problem, config)?;
    let runs = (0..config.runs)
        .into_par_iter()
        .map(|run| anneal_run(&start, &distance, config, run))
        .collect::<mbqc_core::Result<Vec<_>>>()?;
    let best_run = select_best(&runs).expect("at least one run");
    let selected = best_run.run;
    let best = best_run.best.clone();
    let lowest = select_lowest(&runs).expect("at least one run").lowest.clone();
    Ok(AnnealOutcome { selected, best, lowest, runs, distance })
}
