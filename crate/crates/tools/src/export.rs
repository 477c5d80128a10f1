//! JSON documents for resources and patterns, DOT drawings and CSV traces.

use std::fmt::Write as _;
use std::io::Write;

use mbqc_core::anneal::TracePoint;
use mbqc_core::graph::{GraphAdjacency, VopLayer};
use mbqc_core::ladder::LadderSpec;
use mbqc_core::pattern::MeasurementPattern;
use mbqc_core::pauli::PauliString;
use mbqc_core::resource::{Angle, CompiledResource, Role};
use serde::{Deserialize, Serialize};

use crate::problem::{parse_vop, AngleSpec};

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    CsvTrace,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] mbqc_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResourceDoc {
    pub num_main: usize,
    pub period: usize,
    pub steps: usize,
    pub edges: Vec<(usize, usize)>,
    pub vops: Vec<String>,
    /// CNOT layers of `(control, target)` pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ladder: Option<Vec<Vec<(usize, usize)>>>,
}

impl From<&CompiledResource> for ResourceDoc {
    fn from(r: &CompiledResource) -> Self {
        Self {
            num_main: r.num_main,
            period: r.period,
            steps: r.steps,
            edges: r.graph.edges(),
            vops: r.vops.as_slice().iter().map(|c| c.name()).collect(),
            ladder: r.ladder.as_ref().map(|l| l.layers.clone()),
        }
    }
}

impl TryFrom<ResourceDoc> for CompiledResource {
    type Error = FormatError;

    fn try_from(d: ResourceDoc) -> Result<Self, FormatError> {
        let n = d.num_main + d.period * d.steps;
        if d.vops.len() != n {
            return Err(FormatError::Invalid(format!("vops: expected {n} entries, found {}", d.vops.len())));
        }
        let vops = d
            .vops
            .iter()
            .enumerate()
            .map(|(i, s)| parse_vop(s).ok_or_else(|| FormatError::Invalid(format!("vops[{i}]: unknown Clifford {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(&(a, b)) = d.edges.iter().find(|&&(a, b)| a >= n || b >= n || a == b) {
            return Err(FormatError::Invalid(format!("edge ({a}, {b}) is invalid for {n} vertices")));
        }
        if let Some(layers) = &d.ladder {
            if let Some(&(c, t)) = layers.iter().flatten().find(|&&(c, t)| c >= n || t >= n || c == t) {
                return Err(FormatError::Invalid(format!("ladder CNOT ({c}, {t}) is invalid for {n} vertices")));
            }
        }
        Ok(CompiledResource {
            num_main: d.num_main,
            period: d.period,
            steps: d.steps,
            graph: GraphAdjacency::from_edges(n, d.edges)?,
            vops: VopLayer::from_vec(vops),
            ladder: d.ladder.map(|layers| LadderSpec { layers }),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternDoc {
    pub num_main: usize,
    pub period: usize,
    pub steps: usize,
    pub generators: Vec<String>,
    pub angles: Vec<AngleSpec>,
    pub rounds: Vec<Vec<usize>>,
    pub adaptivity: Vec<Vec<usize>>,
}

impl From<&MeasurementPattern> for PatternDoc {
    fn from(p: &MeasurementPattern) -> Self {
        Self {
            num_main: p.num_main,
            period: p.period,
            steps: p.steps,
            generators: p.generators.iter().map(|g| g.to_string()).collect(),
            angles: p.angles.iter().map(AngleSpec::from).collect(),
            rounds: p.rounds.clone(),
            adaptivity: p.adaptivity.clone(),
        }
    }
}

impl TryFrom<PatternDoc> for MeasurementPattern {
    type Error = FormatError;

    fn try_from(d: PatternDoc) -> Result<Self, FormatError> {
        let m = d.period * d.steps;
        if d.generators.len() != m || d.angles.len() != m || d.adaptivity.len() != m {
            return Err(FormatError::Invalid(format!("pattern lists must have {m} entries")));
        }
        let mut seen = vec![false; m];
        for &a in d.rounds.iter().flatten() {
            if a >= m || std::mem::replace(&mut seen[a], true) {
                return Err(FormatError::Invalid(format!("rounds: auxiliary {a} is out of range or repeated")));
            }
        }
        if seen.contains(&false) {
            return Err(FormatError::Invalid("rounds do not cover every auxiliary".into()));
        }
        let generators = d
            .generators
            .iter()
            .map(|s| {
                let p: PauliString = s.parse()?;
                if p.num_qubits() != d.num_main {
                    return Err(FormatError::Invalid(format!("generator {s} has the wrong width")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(MeasurementPattern {
            num_main: d.num_main,
            period: d.period,
            steps: d.steps,
            generators,
            angles: d.angles.iter().map(Angle::from).collect(),
            rounds: d.rounds,
            adaptivity: d.adaptivity,
        })
    }
}

pub fn resource_to_json(r: &CompiledResource) -> String {
    serde_json::to_string_pretty(&ResourceDoc::from(r)).expect("serializable") + "\n"
}

pub fn resource_from_json(s: &str) -> Result<CompiledResource, FormatError> {
    serde_json::from_str::<ResourceDoc>(s)?.try_into()
}

pub fn pattern_to_json(p: &MeasurementPattern) -> String {
    serde_json::to_string_pretty(&PatternDoc::from(p)).expect("serializable") + "\n"
}

pub fn pattern_from_json(s: &str) -> Result<MeasurementPattern, FormatError> {
    serde_json::from_str::<PatternDoc>(s)?.try_into()
}

fn node_id(r: &CompiledResource, v: usize) -> String {
    match r.role(v) {
        Role::Main(i) => format!("m{i}"),
        Role::Aux { step, pos } => format!("a{step}_{pos}"),
    }
}

/// Graphviz drawing: main qubits are squares, auxiliaries circles, non-trivial
/// VOPs follow the label, ladder CNOTs are dashed arrows.
pub fn resource_to_dot(r: &CompiledResource, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "'"));
    let _ = writeln!(out, "  node [fontname=\"Helvetica\"];");
    for v in 0..r.num_vertices() {
        let (shape, label) = match r.role(v) {
            Role::Main(i) => ("square", format!("main {i}")),
            Role::Aux { step, pos } => ("circle", format!("aux({step},{pos})")),
        };
        let vop = r.vops.get(v);
        let label = if vop == mbqc_core::clifford::Clifford1::IDENTITY { label } else { format!("{label} {vop}") };
        let _ = writeln!(out, "  {} [shape={shape}, label=\"{label}\"];", node_id(r, v));
    }
    for (a, b) in r.graph.edges() {
        let _ = writeln!(out, "  {} -- {};", node_id(r, a), node_id(r, b));
    }
    if let Some(ladder) = &r.ladder {
        for (c, t) in ladder.cnots() {
            let _ = writeln!(
                out,
                "  {} -- {} [style=dashed, color=\"#1f77b4\", dir=forward, arrowhead=odot, constraint=false];",
                node_id(r, c),
                node_id(r, t)
            );
        }
    }
    out.push_str("}\n");
    out
}

pub fn write_trace_csv<W: Write>(trace: &[TracePoint], writer: W) -> Result<(), FormatError> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["iteration", "W", "Pi", "f"])?;
    for p in trace {
        w.write_record([p.iteration.to_string(), p.w.to_string(), p.pi.to_string(), p.f.to_string()])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn trace_to_csv(trace: &[TracePoint]) -> String {
    let mut buf = Vec::new();
    write_trace_csv(trace, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii")
}

pub fn read_trace_csv(s: &str) -> Result<Vec<(u64, u64, u64, u64)>, FormatError> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let mut out = Vec::new();
    for rec in r.deserialize() {
        out.push(rec?);
    }
    Ok(out)
}

/// One document for `format`; the CSV trace needs `trace`.
pub fn export(
    resource: &CompiledResource,
    pattern: &MeasurementPattern,
    trace: Option<&[TracePoint]>,
    format: Format,
    name: &str,
) -> Result<String, FormatError> {
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "resource": ResourceDoc::from(resource),
                "pattern": PatternDoc::from(pattern),
            });
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Dot => Ok(resource_to_dot(resource, name)),
        Format::CsvTrace => trace.map(trace_to_csv).ok_or_else(|| FormatError::Invalid("no annealing trace to export".into())),
    }
}
