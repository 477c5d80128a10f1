//! Simulated annealing over the local-complementation orbit of a resource graph.
//!
//! Cost `f = W + Π²` with distance-weighted edge count `W` and aperiodicity
//! `Π = Σ_{i<j≤M−L} Γ_ij ⊕ Γ_{i+L,j+L}` over auxiliary indices.

mod distance;
mod extrapolate;

pub use distance::{build_distance_matrix, weight, DistanceMatrix};
pub use extrapolate::{align_pauli_frame, extrapolate};

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{local_complement_with_vops, GraphAdjacency};
use crate::resource::CompiledResource;

/// Annealing parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnealConfig {
    pub cooling_rate: f64,
    pub target_memory: usize,
    pub runs: usize,
    pub seed: u64,
    pub main_edge_override: bool,
}

impl Default for AnnealConfig {
    fn default() -> Self {
        Self { cooling_rate: 0.999, target_memory: 1, runs: 1, seed: 0, main_edge_override: false }
    }
}

impl AnnealConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.cooling_rate > 0.0 && self.cooling_rate < 1.0) {
            return Err(Error::AnnealParameter("cooling rate must lie in (0, 1)"));
        }
        if self.target_memory == 0 {
            return Err(Error::AnnealParameter("target memory must be positive"));
        }
        if self.runs == 0 {
            return Err(Error::AnnealParameter("at least one run is required"));
        }
        Ok(())
    }
}

/// Aperiodicity `Π` of the auxiliary block.
pub fn aperiodicity(g: &GraphAdjacency, num_main: usize, period: usize, num_aux: usize) -> u64 {
    let limit = num_aux.saturating_sub(period);
    let mut pi = 0;
    for i in 0..limit {
        let (a, a2) = (num_main + i, num_main + i + period);
        for j in i + 1..limit {
            let (b, b2) = (num_main + j, num_main + j + period);
            pi += (g.has_edge(a, b) != g.has_edge(a2, b2)) as u64;
        }
    }
    pi
}

/// One accepted step of the annealer.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct TracePoint {
    pub iteration: u64,
    pub w: u64,
    pub pi: u64,
    pub f: u64,
    /// Cost of the best state kept so far (feasible states first).
    pub best_f: u64,
}

/// A state reached by a prefix of the accepted moves.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub resource: CompiledResource,
    pub w: u64,
    pub pi: u64,
    /// Local complementations replayed from the start graph.
    pub moves: Vec<usize>,
}

impl Candidate {
    pub fn cost(&self) -> u64 {
        self.w + self.pi * self.pi
    }

    pub fn is_feasible(&self) -> bool {
        self.pi == 0
    }
}

/// Outcome of one annealing run.
#[derive(Clone, Debug)]
pub struct AnnealRun {
    pub run: usize,
    pub trace: Vec<TracePoint>,
    /// Lowest-cost feasible state seen, or the lowest-cost one if none was feasible.
    pub best: Candidate,
    /// Lowest-cost state seen regardless of `Π`.
    pub lowest: Candidate,
    pub iterations: u64,
    pub initial_temperature: f64,
}

impl AnnealRun {
    pub fn feasible(&self) -> bool {
        self.best.is_feasible()
    }

    /// Whether a feasible state other than the start was kept.
    pub fn improved(&self) -> bool {
        self.best.is_feasible() && !self.best.moves.is_empty()
    }
}

struct State<'a> {
    g: GraphAdjacency,
    d: &'a DistanceMatrix,
    n: usize,
    l: usize,
    m: usize,
    w: u64,
    pi: u64,
}

impl State<'_> {
    fn cost(&self) -> i64 {
        (self.w + self.pi * self.pi) as i64
    }

    /// `(ΔW, ΔΠ)` of `LC_v` without applying it.
    fn delta(&self, v: usize) -> (i64, i64) {
        let nbr = self.g.neighbors(v);
        let list: Vec<usize> = nbr.ones().collect();
        let (n, l) = (self.n, self.l);
        let limit = self.m.saturating_sub(l);
        let mut dw = 0i64;
        let mut dpi = 0i64;
        for (ia, &a) in list.iter().enumerate() {
            for &b in &list[ia + 1..] {
                let e = self.g.has_edge(a, b);
                let w = self.d.get(a, b) as i64;
                dw += if e { -w } else { w };
                if a < n || l == 0 {
                    continue;
                }
                let (i, j) = (a - n, b - n);
                if j < limit && !(nbr.get(a + l) && nbr.get(b + l)) {
                    dpi += if e != self.g.has_edge(a + l, b + l) { -1 } else { 1 };
                }
                if i >= l && !(nbr.get(a - l) && nbr.get(b - l)) {
                    dpi += if e != self.g.has_edge(a - l, b - l) { -1 } else { 1 };
                }
            }
        }
        (dw, dpi)
    }

    fn delta_cost(&self, v: usize) -> i64 {
        let (dw, dpi) = self.delta(v);
        let pi = self.pi as i64 + dpi;
        dw + pi * pi - (self.pi * self.pi) as i64
    }

    fn apply(&mut self, v: usize) {
        let (dw, dpi) = self.delta(v);
        self.g.local_complement(v).expect("vertex in range");
        self.w = (self.w as i64 + dw) as u64;
        self.pi = (self.pi as i64 + dpi) as u64;
    }
}

/// Standard deviation of the single-move cost change over all vertices.
pub fn initial_temperature(start: &CompiledResource, d: &DistanceMatrix) -> f64 {
    let state = new_state(start, d);
    let deltas: Vec<f64> = (0..start.graph.len()).map(|v| state.delta_cost(v) as f64).collect();
    let n = deltas.len() as f64;
    if deltas.is_empty() {
        return 0.0;
    }
    let mean = deltas.iter().sum::<f64>() / n;
    libm::sqrt(deltas.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n)
}

fn new_state<'a>(start: &CompiledResource, d: &'a DistanceMatrix) -> State<'a> {
    State {
        g: start.graph.clone(),
        d,
        n: start.num_main,
        l: start.period,
        m: start.num_aux(),
        w: weight(&start.graph, d),
        pi: aperiodicity(&start.graph, start.num_main, start.period, start.num_aux()),
    }
}

/// Replays local complementations on a resource, updating its VOPs.
pub fn replay_moves(start: &CompiledResource, moves: &[usize]) -> Result<CompiledResource> {
    let mut res = start.clone();
    for &v in moves {
        local_complement_with_vops(&mut res.graph, &mut res.vops, v)?;
    }
    Ok(res)
}

/// A single annealing run with geometric cooling `T_n = T₀ λⁿ`, stopped once `T_n < 1 − λ`.
pub fn anneal<R: Rng>(
    start: &CompiledResource,
    d: &DistanceMatrix,
    cooling_rate: f64,
    rng: &mut R,
) -> Result<AnnealRun> {
    if !(cooling_rate > 0.0 && cooling_rate < 1.0) {
        return Err(Error::AnnealParameter("cooling rate must lie in (0, 1)"));
    }
    if d.len() != start.graph.len() {
        return Err(Error::Length { expected: start.graph.len(), found: d.len() });
    }
    if start.ladder.is_some() {
        return Err(Error::AnnealParameter("ladder resources are not annealed"));
    }
    let nv = start.graph.len();
    let t0 = initial_temperature(start, d);
    let mut state = new_state(start, d);
    let mut trace = Vec::new();
    let mut moves = Vec::new();
    let start_feasible = state.pi == 0;
    let mut best = (start_feasible, state.cost(), state.w, state.pi, 0usize);
    let mut lowest = (state.cost(), state.w, state.pi, 0usize);
    let f0 = state.cost() as u64;
    trace.push(TracePoint { iteration: 0, w: state.w, pi: state.pi, f: f0, best_f: f0 });

    let stop = 1.0 - cooling_rate;
    let mut temp = t0;
    let mut iteration = 0u64;
    while temp >= stop && nv > 0 {
        iteration += 1;
        let v = rng.gen_range(0..nv);
        let delta = state.delta_cost(v);
        let accept = delta <= 0 || rng.gen::<f64>() < libm::exp(-(delta as f64) / temp);
        if accept {
            state.apply(v);
            moves.push(v);
            let cost = state.cost();
            let feasible = state.pi == 0;
            let better = match (feasible, best.0) {
                (true, false) => true,
                (false, true) => false,
                _ => cost < best.1,
            };
            if better {
                best = (feasible, cost, state.w, state.pi, moves.len());
            }
            if cost < lowest.0 {
                lowest = (cost, state.w, state.pi, moves.len());
            }
            trace.push(TracePoint { iteration, w: state.w, pi: state.pi, f: cost as u64, best_f: best.1 as u64 });
        }
        temp *= cooling_rate;
    }

    let candidate = |w: u64, pi: u64, len: usize| -> Result<Candidate> {
        let moves = moves[..len].to_vec();
        Ok(Candidate { resource: replay_moves(start, &moves)?, w, pi, moves })
    };
    Ok(AnnealRun {
        run: 0,
        best: candidate(best.2, best.3, best.4)?,
        lowest: candidate(lowest.1, lowest.2, lowest.3)?,
        trace,
        iterations: iteration,
        initial_temperature: t0,
    })
}

/// Run `run` of a restart family: stream `run` of a ChaCha8 generator seeded by `seed`.
pub fn anneal_run(start: &CompiledResource, d: &DistanceMatrix, config: &AnnealConfig, run: usize) -> Result<AnnealRun> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(run as u64);
    let mut out = anneal(start, d, config.cooling_rate, &mut rng)?;
    out.run = run;
    Ok(out)
}

/// Picks the best run: feasible before infeasible, then lowest cost, then lowest index.
pub fn select_best(runs: &[AnnealRun]) -> Option<&AnnealRun> {
    runs.iter().min_by_key(|r| (!r.feasible(), r.best.cost(), r.run))
}

/// Picks the run with the lowest cost regardless of feasibility.
pub fn select_lowest(runs: &[AnnealRun]) -> Option<&AnnealRun> {
    runs.iter().min_by_key(|r| (r.lowest.cost(), r.lowest.pi, r.run))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn full_cost(g: &GraphAdjacency, d: &DistanceMatrix, n: usize, l: usize, m: usize) -> (i64, i64) {
        (weight(g, d) as i64, aperiodicity(g, n, l, m) as i64)
    }

    #[test]
    fn delta_matches_full_recomputation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(0..4);
            let l = rng.gen_range(1..4);
            let k = rng.gen_range(1..4);
            let m = l * k;
            let nv = n + m;
            let mut g = GraphAdjacency::empty(nv);
            for a in 0..nv {
                for b in a + 1..nv {
                    if rng.gen_bool(0.4) {
                        g.set_edge(a, b, true);
                    }
                }
            }
            let d = build_distance_matrix(&alloc::vec![l; k], n, rng.gen_range(1..4), false).unwrap();
            let (w, pi) = full_cost(&g, &d, n, l, m);
            let mut state = State { g: g.clone(), d: &d, n, l, m, w: w as u64, pi: pi as u64 };
            for v in 0..nv {
                let (dw, dpi) = state.delta(v);
                let mut h = g.clone();
                h.local_complement(v).unwrap();
                let (w2, pi2) = full_cost(&h, &d, n, l, m);
                assert_eq!((dw, dpi), (w2 - w, pi2 - pi));
                let expected = (w2 + pi2 * pi2) - (w + pi * pi);
                assert_eq!(state.delta_cost(v), expected);
            }
            for _ in 0..5 {
                let v = rng.gen_range(0..nv);
                state.apply(v);
                let (w2, pi2) = full_cost(&state.g, &d, n, l, m);
                assert_eq!((state.w as i64, state.pi as i64), (w2, pi2));
            }
        }
    }

    #[test]
    fn isolated_vertex_has_zero_delta() {
        let d = build_distance_matrix(&[2, 2], 1, 1, false).unwrap();
        let g = GraphAdjacency::from_edges(5, [(1, 2), (3, 4)]).unwrap();
        let state = State { g, d: &d, n: 1, l: 2, m: 4, w: 0, pi: 0 };
        assert_eq!(state.delta(0), (0, 0));
    }
}
