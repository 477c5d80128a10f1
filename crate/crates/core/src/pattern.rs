//! Measurement patterns: rounds, adaptive angles, corrections and hybrid pre-measurement.
//!
//! Auxiliary qubit `m` is rotated by `R_X(θ'_m)` and measured in `Z`, where
//! `θ'_m = (−1)^{Σ_{m'<m} A_{mm'} s_{m'}} θ_m`. After all rounds the main
//! register holds `∏_m P_m^{s_m} U |S₀⟩`.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{measure_pauli, GraphAdjacency, MeasurementOrder, OutcomeLaw, VopLayer};
use crate::ladder::LadderSpec;
use crate::pauli::{Pauli, PauliString};
use crate::resource::{Angle, CompiledResource, RotationSequence};

/// Greedy partition into maximal consecutive runs of mutually commuting generators.
pub fn commuting_rounds(generators: &[PauliString]) -> Vec<Vec<usize>> {
    let mut rounds: Vec<Vec<usize>> = Vec::new();
    for (m, g) in generators.iter().enumerate() {
        match rounds.last_mut() {
            Some(r) if r.iter().all(|&o| generators[o].commutes(g)) => r.push(m),
            _ => rounds.push(vec![m]),
        }
    }
    rounds
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementPattern {
    pub num_main: usize,
    pub period: usize,
    pub steps: usize,
    pub generators: Vec<PauliString>,
    pub angles: Vec<Angle>,
    /// Auxiliary indices `0..M` per round.
    pub rounds: Vec<Vec<usize>>,
    /// Earlier auxiliaries whose outcomes flip the angle of `m`.
    pub adaptivity: Vec<Vec<usize>>,
}

pub fn build_pattern(seq: &RotationSequence) -> MeasurementPattern {
    let generators = seq.generators();
    let angles = (0..seq.steps()).flat_map(|_| seq.period().iter().map(|r| r.angle.clone())).collect();
    let rounds = commuting_rounds(&generators);
    let adaptivity = (0..generators.len())
        .map(|m| (0..m).filter(|&m2| !generators[m].commutes(&generators[m2])).collect())
        .collect();
    MeasurementPattern {
        num_main: seq.num_qubits(),
        period: seq.period_len(),
        steps: seq.steps(),
        generators,
        angles,
        rounds,
        adaptivity,
    }
}

impl MeasurementPattern {
    pub fn num_aux(&self) -> usize {
        self.generators.len()
    }

    /// Sign-flip bit for the angle of `m` given outcomes of all earlier rounds.
    pub fn flip(&self, m: usize, outcomes: &[bool]) -> bool {
        self.adaptivity[m].iter().fold(false, |acc, &m2| acc ^ outcomes[m2])
    }

    pub fn adapted_angle(&self, m: usize, base: f64, outcomes: &[bool]) -> f64 {
        if self.flip(m, outcomes) {
            -base
        } else {
            base
        }
    }

    /// Angles for the next round, given the outcomes of all previous rounds.
    ///
    /// Returns the round index together with its adapted angles.
    pub fn adapt_angles(&self, base: &[f64], outcomes: &[bool]) -> Result<(usize, Vec<f64>)> {
        if base.len() != self.num_aux() {
            return Err(Error::Length { expected: self.num_aux(), found: base.len() });
        }
        let mut seen = 0;
        for (r, round) in self.rounds.iter().enumerate() {
            if seen == outcomes.len() {
                let angles = round.iter().map(|&m| self.adapted_angle(m, base[m], outcomes)).collect();
                return Ok((r, angles));
            }
            seen += round.len();
        }
        Err(Error::RoundBoundary { found: outcomes.len() })
    }

    /// `∏_m P_m^{s_m}` multiplied left to right with exact phase.
    pub fn final_correction(&self, outcomes: &[bool]) -> Result<PauliString> {
        if outcomes.len() != self.num_aux() {
            return Err(Error::Length { expected: self.num_aux(), found: outcomes.len() });
        }
        let mut c = PauliString::identity(self.num_main);
        for (m, _) in outcomes.iter().enumerate().filter(|(_, &s)| s) {
            c = c.mul(&self.generators[m]);
        }
        Ok(c)
    }

    /// Numeric base angles for all `M` measurements.
    pub fn numeric_angles(&self) -> Result<Vec<f64>> {
        self.angles
            .iter()
            .enumerate()
            .map(|(i, a)| match a {
                Angle::Value(v) => Ok(*v),
                Angle::Symbol(_) => Err(Error::SymbolicAngle(i % self.period)),
            })
            .collect()
    }

    /// Vertex measurement order on a resource: auxiliary rounds, then the main register.
    pub fn measurement_order(&self) -> MeasurementOrder {
        let n = self.num_main;
        let mut rounds: Vec<Vec<usize>> = self.rounds.iter().map(|r| r.iter().map(|&m| n + m).collect()).collect();
        if n > 0 {
            rounds.push((0..n).collect());
        }
        MeasurementOrder::new(n + self.num_aux(), rounds).expect("rounds partition the auxiliaries")
    }
}

/// Joint law of main-register outcomes in the hybrid scheme.
///
/// Each measured qubit `i` has a clean outcome `t_i` with law `laws[i]`; the
/// observed bit is `o_i = t_i ⊕ offsets[i] ⊕ ⊕_{j ∈ flips[i]} t_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct OutcomeModel {
    pub laws: Vec<OutcomeLaw>,
    pub in_observable: Vec<bool>,
    pub offsets: Vec<bool>,
    pub flips: Vec<Vec<usize>>,
}

impl OutcomeModel {
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Vec<bool> {
        self.laws
            .iter()
            .map(|law| match law {
                OutcomeLaw::Uniform => rng.gen(),
                OutcomeLaw::Deterministic(b) => *b,
            })
            .collect()
    }

    pub fn observed(&self, t: &[bool]) -> Vec<bool> {
        (0..t.len())
            .map(|i| self.flips[i].iter().fold(t[i] ^ self.offsets[i], |acc, &j| acc ^ t[j]))
            .collect()
    }

    /// Eigenvalue bit of the observable before the pattern correction is accounted for.
    pub fn observable_parity(&self, t: &[bool]) -> bool {
        self.observed(t).iter().zip(&self.in_observable).fold(false, |acc, (&o, &inc)| acc ^ (o && inc))
    }
}

/// Auxiliary Pauli frame as an affine function of the clean main outcomes.
#[derive(Clone, Debug, PartialEq)]
pub struct ByproductMap {
    pub constant: PauliString,
    pub per_bit: Vec<PauliString>,
}

impl ByproductMap {
    pub fn evaluate(&self, t: &[bool]) -> PauliString {
        let mut p = self.constant.clone();
        for (b, &on) in self.per_bit.iter().zip(t) {
            if on {
                p = p.mul(b);
            }
        }
        p.unsigned()
    }
}

/// Result of measuring the main register before the auxiliary pattern runs.
#[derive(Clone, Debug)]
pub struct HybridPremeasurement {
    /// Auxiliary-only resource (`num_main = 0`).
    pub aux_resource: CompiledResource,
    pub model: OutcomeModel,
    /// Frame on the auxiliary graph state, before the ladder.
    pub graph_byproducts: ByproductMap,
    /// Frame on the prepared auxiliary state, after the ladder.
    pub byproducts: ByproductMap,
    pub observable: PauliString,
}

/// Measures every main qubit in the basis of `observable` (effective `Z` where it
/// acts trivially), leaving a byproduct frame on the auxiliaries.
pub fn hybrid_premeasure(res: &CompiledResource, observable: &PauliString) -> Result<HybridPremeasurement> {
    let n = res.num_main;
    if observable.num_qubits() != n {
        return Err(Error::Length { expected: n, found: observable.num_qubits() });
    }
    if observable.is_identity() {
        return Err(Error::TrivialObservable);
    }
    let mut g: GraphAdjacency = res.graph.clone();
    let mut layer: VopLayer = res.vops.clone();
    let mut constant = PauliString::identity(g.len());
    let mut per_bit: Vec<PauliString> = Vec::new();
    let mut model = OutcomeModel { laws: vec![], in_observable: vec![], offsets: vec![], flips: vec![] };

    for i in 0..n {
        let letter = observable.get(i);
        let basis = if letter == Pauli::I { layer.get(0).image(Pauli::Z).0 } else { letter };
        let probe = PauliString::single(g.len(), 0, basis);
        model.offsets.push(!constant.commutes(&probe));
        model.flips.push((0..per_bit.len()).filter(|&j| !per_bit[j].commutes(&probe)).collect());
        model.in_observable.push(letter != Pauli::I);

        let meas = measure_pauli(&g, &layer, 0, basis, None)?;
        let rest = g.len() - 1;
        constant = constant.slice(1, rest);
        for b in &mut per_bit {
            *b = b.slice(1, rest);
        }
        let [b0, b1] = meas.byproducts;
        if b0.is_identity() {
            per_bit.push(b1);
        } else {
            constant = constant.mul(&b0);
            per_bit.push(b0);
        }
        model.laws.push(meas.law);
        g = meas.graph;
        layer = meas.layer;
    }

    // shift support towards low-index auxiliaries by multiplying with stabilizers
    let post = CompiledResource { num_main: 0, period: res.period, steps: res.steps, graph: g.clone(), vops: layer.clone(), ladder: None };
    let stabilizers = post.physical_tableau()?.into_rows();
    constant = reduce_high_support(&constant, &stabilizers);
    for b in &mut per_bit {
        *b = reduce_high_support(b, &stabilizers);
    }
    let graph_byproducts = ByproductMap { constant: constant.unsigned(), per_bit: per_bit.iter().map(|p| p.unsigned()).collect() };
    let ladder = res.ladder.as_ref().map(|l| LadderSpec {
        layers: l.layers.iter().map(|layer| layer.iter().map(|&(c, t)| (c - n, t - n)).collect()).collect(),
    });
    if let Some(l) = &ladder {
        for (c, t) in l.cnots() {
            constant = constant.conjugate_cnot(c, t)?;
            for b in &mut per_bit {
                *b = b.conjugate_cnot(c, t)?;
            }
        }
    }
    let aux_resource = CompiledResource {
        num_main: 0,
        period: res.period,
        steps: res.steps,
        graph: g,
        vops: layer,
        ladder,
    };
    Ok(HybridPremeasurement {
        aux_resource,
        model,
        graph_byproducts,
        byproducts: ByproductMap { constant: constant.unsigned(), per_bit: per_bit.iter().map(|p| p.unsigned()).collect() },
        observable: observable.clone(),
    })
}

/// Reduces `p` modulo the group of `stabilizers`, clearing the highest qubits first.
fn reduce_high_support(p: &PauliString, stabilizers: &[PauliString]) -> PauliString {
    let mut rows: Vec<PauliString> = stabilizers.iter().map(PauliString::unsigned).collect();
    let mut p = p.unsigned();
    let bit = |s: &PauliString, q: usize, zc: bool| if zc { s.z().get(q) } else { s.x().get(q) };
    let mut used = 0;
    for q in (0..p.num_qubits()).rev() {
        for zc in [false, true] {
            let Some(r) = (used..rows.len()).find(|&r| bit(&rows[r], q, zc)) else {
                continue;
            };
            rows.swap(used, r);
            let pivot = rows[used].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != used && bit(row, q, zc) {
                    *row = row.mul(&pivot).unsigned();
                }
            }
            if bit(&p, q, zc) {
                p = p.mul(&pivot).unsigned();
            }
            used += 1;
        }
    }
    p
}
