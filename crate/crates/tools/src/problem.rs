//! Problem documents: the JSON input schema and its validation.

use std::fmt;
use std::path::Path;

use mbqc_core::anneal::AnnealConfig;
use mbqc_core::clifford::Clifford1;
use mbqc_core::graph::{decorated_tableau, GraphAdjacency, VopLayer};
use mbqc_core::pattern::commuting_rounds;
use mbqc_core::pauli::PauliString;
use mbqc_core::resource::{Angle, Rotation, RotationSequence};
use mbqc_core::tableau::StabilizerTableau;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub num_qubits: usize,
    pub initial_state: InitialState,
    pub period: Vec<PeriodEntry>,
    pub trotter_steps: usize,
    #[serde(default)]
    pub method: Method,
    #[serde(default)]
    pub anneal: AnnealSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub observables: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum InitialState {
    Zero,
    Plus,
    Graph {
        edges: Vec<(usize, usize)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vops: Option<Vec<String>>,
    },
    Tableau {
        rows: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodEntry {
    pub pauli: String,
    pub angle: AngleSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
}

/// Radians, or a symbol bound at run time.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AngleSpec {
    Radians(f64),
    Symbol(String),
}

impl From<&AngleSpec> for Angle {
    fn from(a: &AngleSpec) -> Self {
        match a {
            AngleSpec::Radians(v) => Angle::Value(*v),
            AngleSpec::Symbol(s) => Angle::Symbol(s.clone()),
        }
    }
}

impl From<&Angle> for AngleSpec {
    fn from(a: &Angle) -> Self {
        match a {
            Angle::Value(v) => AngleSpec::Radians(*v),
            Angle::Symbol(s) => AngleSpec::Symbol(s.clone()),
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Lc,
    Ac,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Lc => "lc",
            Method::Ac => "ac",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnnealSpec {
    pub cooling_rate: f64,
    /// Qubits needed to hold the intermediate state; defaults to `num_qubits`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_memory: Option<usize>,
    pub runs: usize,
    pub seed: u64,
    pub main_edge_override: bool,
}

impl Default for AnnealSpec {
    fn default() -> Self {
        let c = AnnealConfig::default();
        Self { cooling_rate: c.cooling_rate, target_memory: None, runs: c.runs, seed: c.seed, main_edge_override: false }
    }
}

/// Validation failure naming the offending field.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{field}: {message}")]
pub struct SpecError {
    pub field: String,
    pub message: String,
}

fn err(field: impl Into<String>, message: impl fmt::Display) -> SpecError {
    SpecError { field: field.into(), message: message.to_string() }
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed problem document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// A validated problem.
#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub sequence: RotationSequence,
    pub initial: StabilizerTableau,
    pub observables: Vec<PauliString>,
}

pub fn parse_vop(name: &str) -> Option<Clifford1> {
    Clifford1::all().find(|c| c.name() == name)
}

fn parse_pauli(field: &str, s: &str, n: usize) -> Result<PauliString, SpecError> {
    let p: PauliString = s.parse().map_err(|e| err(field, e))?;
    if p.num_qubits() != n {
        return Err(err(field, format!("width {} does not match num_qubits {n}", p.num_qubits())));
    }
    Ok(p)
}

impl ProblemSpec {
    pub fn validate(&self) -> Result<Problem, SpecError> {
        let n = self.num_qubits;
        if n == 0 {
            return Err(err("num_qubits", "must be positive"));
        }
        if self.period.is_empty() {
            return Err(err("period", "must not be empty"));
        }
        if self.trotter_steps == 0 {
            return Err(err("trotter_steps", "must be positive"));
        }

        let mut rotations = Vec::with_capacity(self.period.len());
        for (i, e) in self.period.iter().enumerate() {
            let p = parse_pauli(&format!("period[{i}].pauli"), &e.pauli, n)?;
            if p.phase() != 0 {
                return Err(err(format!("period[{i}].pauli"), "generator must carry no sign"));
            }
            match &e.angle {
                AngleSpec::Radians(v) if !v.is_finite() => return Err(err(format!("period[{i}].angle"), "must be finite")),
                AngleSpec::Symbol(s) if s.trim().is_empty() => return Err(err(format!("period[{i}].angle"), "symbol is empty")),
                _ => {}
            }
            rotations.push(Rotation::new(p, Angle::from(&e.angle)));
        }
        for (j, e) in self.period.iter().enumerate() {
            let Some(tag) = &e.group else { continue };
            for i in 0..j {
                if self.period[i].group.as_ref() == Some(tag) && !rotations[i].generator.commutes(&rotations[j].generator) {
                    return Err(err(
                        format!("period[{j}].group"),
                        format!("group {tag:?} is not commuting: anticommutes with period[{i}]"),
                    ));
                }
            }
        }

        let initial = self.initial_tableau()?;
        let observables = self
            .observables
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let field = format!("observables[{i}]");
                let p = parse_pauli(&field, s, n)?;
                if p.is_identity() {
                    return Err(err(field, "observable has identity support"));
                }
                if !p.is_hermitian() {
                    return Err(err(field, "observable must be Hermitian"));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>, _>>()?;

        let a = &self.anneal;
        if !(a.cooling_rate > 0.0 && a.cooling_rate < 1.0) {
            return Err(err("anneal.cooling_rate", "must lie in (0, 1)"));
        }
        if a.runs == 0 {
            return Err(err("anneal.runs", "must be positive"));
        }
        if a.target_memory == Some(0) {
            return Err(err("anneal.target_memory", "must be positive"));
        }

        let sequence = RotationSequence::new(n, rotations, self.trotter_steps).map_err(|e| err("period", e))?;
        Ok(Problem { spec: self.clone(), sequence, initial, observables })
    }

    fn initial_tableau(&self) -> Result<StabilizerTableau, SpecError> {
        let n = self.num_qubits;
        match &self.initial_state {
            InitialState::Zero => Ok(StabilizerTableau::zero_state(n)),
            InitialState::Plus => Ok(StabilizerTableau::plus_state(n)),
            InitialState::Graph { edges, vops } => {
                for (i, &(a, b)) in edges.iter().enumerate() {
                    if a >= n || b >= n {
                        return Err(err(format!("initial_state.edges[{i}]"), format!("vertex out of range for {n} qubits")));
                    }
                    if a == b {
                        return Err(err(format!("initial_state.edges[{i}]"), "self-loop"));
                    }
                }
                let g = GraphAdjacency::from_edges(n, edges.iter().copied()).map_err(|e| err("initial_state.edges", e))?;
                let layer = match vops {
                    None => VopLayer::identity(n),
                    Some(names) => {
                        if names.len() != n {
                            return Err(err("initial_state.vops", format!("expected {n} entries, found {}", names.len())));
                        }
                        let vops = names
                            .iter()
                            .enumerate()
                            .map(|(i, s)| parse_vop(s).ok_or_else(|| err(format!("initial_state.vops[{i}]"), format!("unknown Clifford {s:?}"))))
                            .collect::<Result<Vec<_>, _>>()?;
                        VopLayer::from_vec(vops)
                    }
                };
                Ok(decorated_tableau(&g, &layer))
            }
            InitialState::Tableau { rows } => {
                let parsed = rows
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_pauli(&format!("initial_state.rows[{i}]"), s, n))
                    .collect::<Result<Vec<_>, _>>()?;
                let t = StabilizerTableau::new(n, parsed).map_err(|e| err("initial_state.rows", e))?;
                t.require_full_rank().map_err(|e| err("initial_state.rows", e))?;
                Ok(t)
            }
        }
    }
}

impl Problem {
    pub fn name(&self) -> &str {
        self.spec.name.as_deref().unwrap_or("problem")
    }

    pub fn num_qubits(&self) -> usize {
        self.spec.num_qubits
    }

    pub fn with_steps(&self, steps: usize) -> Result<Problem, SpecError> {
        ProblemSpec { trotter_steps: steps, ..self.spec.clone() }.validate()
    }

    pub fn target_memory(&self) -> usize {
        self.spec.anneal.target_memory.unwrap_or(self.spec.num_qubits)
    }

    pub fn anneal_config(&self) -> AnnealConfig {
        let a = &self.spec.anneal;
        AnnealConfig {
            cooling_rate: a.cooling_rate,
            target_memory: self.target_memory(),
            runs: a.runs,
            seed: a.seed,
            main_edge_override: a.main_edge_override,
        }
    }

    /// Group sizes over all `M` auxiliaries: runs of equal group tags when every
    /// entry is tagged, maximal commuting runs otherwise.
    pub fn group_sizes(&self) -> Vec<usize> {
        let period = &self.spec.period;
        let per_step: Vec<usize> = if period.iter().all(|e| e.group.is_some()) {
            let mut sizes: Vec<usize> = Vec::new();
            for (i, e) in period.iter().enumerate() {
                if i > 0 && period[i - 1].group == e.group {
                    *sizes.last_mut().unwrap() += 1;
                } else {
                    sizes.push(1);
                }
            }
            sizes
        } else {
            commuting_rounds(&self.sequence.period_generators()).iter().map(Vec::len).collect()
        };
        (0..self.sequence.steps()).flat_map(|_| per_step.iter().copied()).collect()
    }

    /// Symbols in order of first appearance.
    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in self.sequence.period() {
            if let Angle::Symbol(s) = &r.angle {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Binds every symbol to a value drawn uniformly from `[-π, π)` by a seeded generator.
    pub fn bound_sequence(&self, seed: u64) -> RotationSequence {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<(String, f64)> = self
            .symbols()
            .into_iter()
            .map(|s| (s, rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)))
            .collect();
        self.sequence.bind(|s| values.iter().find(|(n, _)| n == s).map(|(_, v)| *v).unwrap_or(0.0))
    }
}

pub fn parse_problem(json: &str) -> Result<Problem, LoadError> {
    let spec: ProblemSpec = serde_json::from_str(json)?;
    Ok(spec.validate()?)
}

pub fn load_problem(path: impl AsRef<Path>) -> Result<Problem, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    parse_problem(&text)
}
