//! Rotation sequences and their closed-form graph-state resources.
//!
//! Vertex layout of every resource: main qubits `0..N`, then auxiliary qubit
//! `(k, l)` (Trotter step `k`, period position `l`) at `N + k·L + l`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::{BitMatrix, BitVec};
use crate::clifford::Clifford1;
use crate::error::{Error, Result};
use crate::graph::{decorated_tableau, graph_from_tableau, GraphAdjacency, VopLayer};
use crate::ladder::LadderSpec;
use crate::pauli::PauliString;
use crate::tableau::StabilizerTableau;

/// Rotation angle: symbolic name or bound value in radians.
#[derive(Clone, Debug, PartialEq)]
pub enum Angle {
    Symbol(String),
    Value(f64),
}

/// One Pauli rotation `exp(-iθP/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rotation {
    pub generator: PauliString,
    pub angle: Angle,
}

impl Rotation {
    pub fn new(generator: PauliString, angle: Angle) -> Self {
        Self { generator, angle }
    }
}

/// A period of `L` rotations repeated for `K` Trotter steps.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationSequence {
    num_qubits: usize,
    period: Vec<Rotation>,
    steps: usize,
}

impl RotationSequence {
    pub fn new(num_qubits: usize, period: Vec<Rotation>, steps: usize) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if steps == 0 {
            return Err(Error::ZeroSteps);
        }
        for (i, r) in period.iter().enumerate() {
            if r.generator.num_qubits() != num_qubits {
                return Err(Error::Length { expected: num_qubits, found: r.generator.num_qubits() });
            }
            if r.generator.phase() != 0 {
                return Err(Error::PhasedGenerator(i));
            }
        }
        Ok(Self { num_qubits, period, steps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn period(&self) -> &[Rotation] {
        &self.period
    }

    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn total(&self) -> usize {
        self.period.len() * self.steps
    }

    pub fn with_steps(&self, steps: usize) -> Result<Self> {
        Self::new(self.num_qubits, self.period.clone(), steps)
    }

    /// All `M = K·L` generators in application order.
    pub fn generators(&self) -> Vec<PauliString> {
        (0..self.steps).flat_map(|_| self.period.iter().map(|r| r.generator.clone())).collect()
    }

    pub fn period_generators(&self) -> Vec<PauliString> {
        self.period.iter().map(|r| r.generator.clone()).collect()
    }

    /// Numeric angles for all `M` rotations.
    pub fn numeric_angles(&self) -> Result<Vec<f64>> {
        let per: Vec<f64> = self
            .period
            .iter()
            .enumerate()
            .map(|(i, r)| match r.angle {
                Angle::Value(v) => Ok(v),
                Angle::Symbol(_) => Err(Error::SymbolicAngle(i)),
            })
            .collect::<Result<_>>()?;
        Ok((0..self.steps).flat_map(|_| per.iter().copied()).collect())
    }

    /// Binds every symbolic angle through `f`.
    pub fn bind(&self, mut f: impl FnMut(&str) -> f64) -> Self {
        let period = self
            .period
            .iter()
            .map(|r| Rotation {
                generator: r.generator.clone(),
                angle: match &r.angle {
                    Angle::Symbol(s) => Angle::Value(f(s)),
                    Angle::Value(v) => Angle::Value(*v),
                },
            })
            .collect();
        Self { num_qubits: self.num_qubits, period, steps: self.steps }
    }

    /// Inserts an identity-generator rotation with fixed zero angle at `position` of the period.
    pub fn dress_with_identity(&self, position: usize) -> Result<Self> {
        if position > self.period.len() {
            return Err(Error::Length { expected: self.period.len(), found: position });
        }
        let mut period = self.period.clone();
        period.insert(position, Rotation::new(PauliString::identity(self.num_qubits), Angle::Value(0.0)));
        Self::new(self.num_qubits, period, self.steps)
    }
}

/// Period generators pulled back through the initial-state Clifford layer.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugatedSequence {
    pub num_main: usize,
    /// `Γ₀` of the initial state `𝒞₀|G₀⟩`.
    pub frame_graph: GraphAdjacency,
    /// `𝒞₀`.
    pub frame_vops: VopLayer,
    /// Phase-free `P'` with `𝒞₀† P 𝒞₀ = (-1)^R P'`.
    pub period: Vec<PauliString>,
    /// Sign bits `R` per period position.
    pub signs: Vec<bool>,
    pub steps: usize,
}

impl ConjugatedSequence {
    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    pub fn total(&self) -> usize {
        self.period.len() * self.steps
    }

    /// The same data with the `K` steps unrolled into a single period of length `M`.
    pub fn flattened(&self) -> ConjugatedSequence {
        let mut period = Vec::with_capacity(self.total());
        let mut signs = Vec::with_capacity(self.total());
        for _ in 0..self.steps {
            period.extend(self.period.iter().cloned());
            signs.extend(self.signs.iter().copied());
        }
        ConjugatedSequence { period, signs, steps: 1, ..self.clone() }
    }
}

pub fn conjugate_through_initial_lc(seq: &RotationSequence, init: &StabilizerTableau) -> Result<ConjugatedSequence> {
    if init.num_qubits() != seq.num_qubits() {
        return Err(Error::Length { expected: seq.num_qubits(), found: init.num_qubits() });
    }
    let (frame_graph, frame_vops) = graph_from_tableau(init)?;
    let inv = frame_vops.inverse();
    let mut period = Vec::with_capacity(seq.period_len());
    let mut signs = Vec::with_capacity(seq.period_len());
    for r in seq.period() {
        let p = inv.conjugate(&r.generator);
        debug_assert!(p.is_hermitian());
        signs.push(p.is_negative());
        period.push(p.unsigned());
    }
    Ok(ConjugatedSequence { num_main: seq.num_qubits(), frame_graph, frame_vops, period, signs, steps: seq.steps() })
}

/// Binary data of a conjugated period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticommutationData {
    /// `L × N` x-part of the generators.
    pub x: BitMatrix,
    /// `L × N` z-part of the generators.
    pub z: BitMatrix,
    /// `N × L` main/auxiliary anticommutation `Zᵀ ⊕ Γ₀Xᵀ`.
    pub a0: BitMatrix,
    /// `L × L` generator anticommutation `XZᵀ ⊕ ZXᵀ`.
    pub a: BitMatrix,
    /// `XΓ₀Xᵀ` over GF(2).
    pub gamma_x: BitMatrix,
}

pub fn anticommutation_matrices(cs: &ConjugatedSequence) -> AnticommutationData {
    let n = cs.num_main;
    let x = BitMatrix::from_rows(n, cs.period.iter().map(|p| p.x().clone()).collect());
    let z = BitMatrix::from_rows(n, cs.period.iter().map(|p| p.z().clone()).collect());
    let gamma0 = cs.frame_graph.matrix();
    let xt = x.transpose();
    let a0 = z.transpose().xor(&gamma0.mul(&xt));
    let xzt = x.mul(&z.transpose());
    let a = xzt.xor(&xzt.transpose());
    let gamma_x = x.mul(&gamma0).mul(&xt);
    AnticommutationData { x, z, a0, a, gamma_x }
}

/// Stabilizer tableau of the resource in the frame of `|G₀⟩` (main rows first).
pub fn resource_tableau(cs: &ConjugatedSequence) -> StabilizerTableau {
    let n = cs.num_main;
    let (l, m_total) = (cs.period_len(), cs.total());
    let d = anticommutation_matrices(cs);
    let width = n + m_total;
    let mut rows = Vec::with_capacity(width);
    for v in 0..n {
        let mut z = cs.frame_graph.neighbors(v).concat(&BitVec::zeros(m_total));
        for m in 0..m_total {
            if d.a0.get(v, m % l) {
                z.set(n + m, true);
            }
        }
        rows.push(PauliString::from_parts(BitVec::from_indices(width, [v]), z, 0));
    }
    for m in 0..m_total {
        let p = &cs.period[m % l];
        let mut x = p.x().concat(&BitVec::zeros(m_total));
        x.set(n + m, true);
        let mut z = p.z().concat(&BitVec::zeros(m_total));
        for m2 in m + 1..m_total {
            if d.a.get(m % l, m2 % l) {
                z.set(n + m2, true);
            }
        }
        let r = 2 * cs.signs[m % l] as u8;
        rows.push(PauliString::from_parts(x, z, r));
    }
    StabilizerTableau::from_rows_unchecked(width, rows)
}

/// Stabilizer tableau of `∏_m Λ_m(P_m) (|S₀⟩ ⊗ |+⟩^M)` built directly from
/// the original generators and initial stabilizers.
pub fn physical_resource_tableau(seq: &RotationSequence, init: &StabilizerTableau) -> Result<StabilizerTableau> {
    let n = seq.num_qubits();
    if init.num_qubits() != n {
        return Err(Error::Length { expected: n, found: init.num_qubits() });
    }
    let gens = seq.generators();
    let m_total = gens.len();
    let tags = |p: &PauliString, from: usize| {
        let mut z = BitVec::zeros(m_total);
        for (m, g) in gens.iter().enumerate().skip(from) {
            if !p.commutes(g) {
                z.set(m, true);
            }
        }
        PauliString::from_parts(BitVec::zeros(m_total), z, 0)
    };
    let mut rows = Vec::with_capacity(n + m_total);
    for s in init.rows() {
        rows.push(s.tensor(&tags(s, 0)));
    }
    for (m, g) in gens.iter().enumerate() {
        let mut aux = tags(g, m + 1);
        let mut x = aux.x().clone();
        x.set(m, true);
        aux = PauliString::from_parts(x, aux.z().clone(), 0);
        rows.push(g.tensor(&aux));
    }
    Ok(StabilizerTableau::from_rows_unchecked(n + m_total, rows))
}

/// Role of a resource vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Main(usize),
    Aux { step: usize, pos: usize },
}

/// A graph-state resource `𝒞|Γ⟩`, optionally followed by a CNOT ladder.
#[derive(Clone, Debug, PartialEq)]
pub struct CompiledResource {
    pub num_main: usize,
    pub period: usize,
    pub steps: usize,
    pub graph: GraphAdjacency,
    pub vops: VopLayer,
    pub ladder: Option<LadderSpec>,
}

impl CompiledResource {
    pub fn num_aux(&self) -> usize {
        self.period * self.steps
    }

    pub fn num_vertices(&self) -> usize {
        self.num_main + self.num_aux()
    }

    pub fn aux_vertex(&self, step: usize, pos: usize) -> usize {
        self.num_main + step * self.period + pos
    }

    pub fn role(&self, v: usize) -> Role {
        if v < self.num_main {
            Role::Main(v)
        } else {
            let m = v - self.num_main;
            Role::Aux { step: m / self.period, pos: m % self.period }
        }
    }

    /// Stabilizer tableau of the prepared state (VOPs, then ladder).
    pub fn physical_tableau(&self) -> Result<StabilizerTableau> {
        let mut t = decorated_tableau(&self.graph, &self.vops);
        if let Some(ladder) = &self.ladder {
            for (c, tq) in ladder.cnots() {
                t = t.conjugate_cnot(c, tq)?;
            }
        }
        Ok(t)
    }
}

fn aux_vop(cs: &ConjugatedSequence, gamma_x_circ_half: usize, m: usize) -> Clifford1 {
    let p = &cs.period[m];
    let e = 2 * cs.signs[m] as i64 + 2 * gamma_x_circ_half as i64 - p.count_y() as i64;
    Clifford1::s_power(e)
}

/// Closed-form solution for the whole `M`-rotation sequence:
/// aux block `Γ_X ⊕ UT(ZXᵀ) ⊕ LT(XZᵀ)`, main block `Γ₀`, coupling `A₀`.
pub fn graph_solution(cs: &ConjugatedSequence) -> Result<CompiledResource> {
    let mut res = periodic_graph(&cs.flattened())?;
    res.period = cs.period_len();
    res.steps = cs.steps;
    Ok(res)
}

/// Closed-form periodic resource assembled from the period blocks.
pub fn periodic_graph(cs: &ConjugatedSequence) -> Result<CompiledResource> {
    let n = cs.num_main;
    let (l, k) = (cs.period_len(), cs.steps);
    let d = anticommutation_matrices(cs);
    let zxt = d.z.mul(&d.x.transpose());
    let mut g = GraphAdjacency::empty(n + l * k);
    for (a, b) in cs.frame_graph.edges() {
        g.set_edge(a, b, true);
    }
    for step in 0..k {
        for pos in 0..l {
            let v = n + step * l + pos;
            for main in 0..n {
                if d.a0.get(main, pos) {
                    g.set_edge(main, v, true);
                }
            }
        }
    }
    for m1 in 0..l * k {
        for m2 in m1 + 1..l * k {
            let (p1, p2) = (m1 % l, m2 % l);
            // the earlier rotation contributes its z-part, the later one its x-part
            if d.gamma_x.get(p1, p2) ^ zxt.get(p1, p2) {
                g.set_edge(n + m1, n + m2, true);
            }
        }
    }
    let mut vops = cs.frame_vops.as_slice().to_vec();
    let per_period: Vec<Clifford1> = (0..l)
        .map(|m| {
            let support: Vec<usize> = cs.period[m].x().ones().collect();
            let half = cs.frame_graph.induced(&support).num_edges();
            aux_vop(cs, half, m)
        })
        .collect();
    for _ in 0..k {
        vops.extend_from_slice(&per_period);
    }
    Ok(CompiledResource { num_main: n, period: l, steps: k, graph: g, vops: VopLayer::from_vec(vops), ladder: None })
}
