use mbqc_core::anneal::{aperiodicity, weight, DistanceMatrix};
use mbqc_core::graph::{active_profile, storage_profile};
use mbqc_core::ladder::{active_count_ac, linear_depth_bound};
use mbqc_core::pattern::MeasurementPattern;
use mbqc_core::resource::CompiledResource;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub method: String,
    pub num_main: usize,
    pub num_aux: usize,
    pub steps: usize,
    pub active_per_round: Vec<usize>,
    pub max_active: usize,
    /// Qubits carried across each round boundary.
    pub carried_per_boundary: Vec<usize>,
    /// Largest carried count before the main register is measured.
    pub intermediate_storage: usize,
    pub total_edges: usize,
    pub ladder_cnots: usize,
    /// Edges whose later endpoint lies in step `k`, plus CNOTs controlled from step `k`.
    pub entangling_per_step: Vec<usize>,
    /// Active qubits of the ladder scheme with all-to-all connectivity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ladder_active: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth_bound: Option<usize>,
    pub aperiodicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<u64>,
}

fn step_of(r: &CompiledResource, v: usize) -> usize {
    if v < r.num_main {
        0
    } else {
        (v - r.num_main) / r.period
    }
}

pub fn report(r: &CompiledResource, pattern: &MeasurementPattern, distance: Option<&DistanceMatrix>) -> mbqc_core::Result<Report> {
    let order = pattern.measurement_order();
    let active = active_profile(&r.graph, &order)?;
    let storage = storage_profile(&r.graph, &order)?;
    let mut per_step = vec![0; r.steps];
    for (a, b) in r.graph.edges() {
        per_step[step_of(r, a).max(step_of(r, b))] += 1;
    }
    let ladder_cnots = r.ladder.as_ref().map_or(0, |l| l.len());
    if let Some(l) = &r.ladder {
        for (c, _) in l.cnots() {
            per_step[step_of(r, c)] += 1;
        }
    }
    let ac = r.ladder.is_some();
    Ok(Report {
        method: if ac { "ac" } else { "lc" }.into(),
        num_main: r.num_main,
        num_aux: r.num_aux(),
        steps: r.steps,
        max_active: active.max,
        active_per_round: active.per_round,
        intermediate_storage: storage.max_carried_before(order.rounds().len()),
        carried_per_boundary: storage.carried,
        total_edges: r.graph.num_edges(),
        ladder_cnots,
        entangling_per_step: per_step,
        ladder_active: ac.then(|| active_count_ac(r.num_main, r.period)),
        depth_bound: ac.then(|| linear_depth_bound(r.num_main, r.period, r.steps)),
        aperiodicity: aperiodicity(&r.graph, r.num_main, r.period, r.num_aux()),
        weight: distance.filter(|d| d.len() == r.num_vertices()).map(|d| weight(&r.graph, d)),
    })
}
