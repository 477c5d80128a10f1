//! Dense state-vector reference simulator (at most 14 qubits).
//!
//! Qubit 0 is the most significant bit of the amplitude index. Nothing here
//! uses the symplectic machinery except to read Pauli letters.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::clifford::{Clifford1, Gate};
use crate::error::{Error, Result};
use crate::graph::{GraphAdjacency, VopLayer};
use crate::pauli::PauliString;
use crate::tableau::StabilizerTableau;

pub const MAX_QUBITS: usize = 14;

pub type Matrix2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn hadamard_matrix() -> Matrix2 {
    let h = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
    [[h, h], [h, -h]]
}

pub fn s_matrix() -> Matrix2 {
    [[ONE, ZERO], [ZERO, I]]
}

pub fn matmul2(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[ZERO; 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

/// Unitary of a Clifford element built from its `H`/`S` word.
pub fn clifford_matrix(c: Clifford1) -> Matrix2 {
    c.decomposition().into_iter().fold([[ONE, ZERO], [ZERO, ONE]], |acc, g| {
        let m = match g {
            Gate::H => hadamard_matrix(),
            Gate::S => s_matrix(),
        };
        matmul2(&m, &acc)
    })
}

/// Matrix of a single-qubit Pauli letter.
pub fn pauli_matrix(p: crate::pauli::Pauli) -> Matrix2 {
    use crate::pauli::Pauli::*;
    match p {
        I => [[ONE, ZERO], [ZERO, ONE]],
        X => [[ZERO, ONE], [ONE, ZERO]],
        Y => [[ZERO, -self::I], [self::I, ZERO]],
        Z => [[ONE, ZERO], [ZERO, -ONE]],
    }
}

pub fn rx_matrix(theta: f64) -> Matrix2 {
    let c = Complex64::new(libm::cos(theta / 2.0), 0.0);
    let s = Complex64::new(0.0, -libm::sin(theta / 2.0));
    [[c, s], [s, c]]
}

fn i_pow(r: u32) -> Complex64 {
    match r % 4 {
        0 => ONE,
        1 => I,
        2 => -ONE,
        _ => -I,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseState {
    n: usize,
    amps: Vec<Complex64>,
}

impl DenseState {
    fn check(n: usize) -> Result<()> {
        if n > MAX_QUBITS {
            return Err(Error::DenseLimit { n, max: MAX_QUBITS });
        }
        Ok(())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::check(n)?;
        let mut amps = vec![ZERO; 1 << n];
        amps[0] = ONE;
        Ok(Self { n, amps })
    }

    pub fn plus(n: usize) -> Result<Self> {
        Self::check(n)?;
        let a = Complex64::new(libm::pow(2.0, -(n as f64) / 2.0), 0.0);
        Ok(Self { n, amps: vec![a; 1 << n] })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        Self::check(n)?;
        if amps.len() != 1 << n {
            return Err(Error::Length { expected: 1 << n, found: amps.len() });
        }
        Ok(Self { n, amps })
    }

    /// `|G⟩ = ∏_{(a,b) ∈ E} CZ_{ab} |+⟩^n`.
    pub fn graph_state(g: &GraphAdjacency) -> Result<Self> {
        let mut s = Self::plus(g.len())?;
        for (a, b) in g.edges() {
            s.apply_cz(a, b);
        }
        Ok(s)
    }

    /// `layer · |G⟩`.
    pub fn decorated_graph_state(g: &GraphAdjacency, layer: &VopLayer) -> Result<Self> {
        let mut s = Self::graph_state(g)?;
        for v in 0..g.len() {
            s.apply_1q(v, &clifford_matrix(layer.get(v)));
        }
        Ok(s)
    }

    /// The unique state stabilized by a full-rank tableau, via projector products.
    pub fn from_tableau(t: &StabilizerTableau) -> Result<Self> {
        t.require_full_rank()?;
        let n = t.num_qubits();
        Self::check(n)?;
        let mut seed: u64 = 0x9E37_79B9_7F4A_7C15;
        for _ in 0..8 {
            let amps = (0..1usize << n)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let a = (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let b = (seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
                    Complex64::new(a, b)
                })
                .collect();
            let mut s = Self { n, amps };
            for row in t.rows() {
                let mut ps = s.clone();
                ps.apply_pauli(row);
                for (a, b) in s.amps.iter_mut().zip(ps.amps) {
                    *a = (*a + b) * 0.5;
                }
            }
            if s.norm_sqr() > 1e-6 {
                s.normalize()?;
                return Ok(s);
            }
        }
        Err(Error::ZeroNorm("stabilizer projection"))
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    #[inline]
    fn bit(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let n = self.norm_sqr();
        if n < 1e-300 {
            return Err(Error::ZeroNorm("normalize"));
        }
        let f = 1.0 / libm::sqrt(n);
        for a in &mut self.amps {
            *a *= f;
        }
        Ok(())
    }

    pub fn inner(&self, other: &DenseState) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|⟨self|other⟩|²` for normalized states.
    pub fn fidelity(&self, other: &DenseState) -> f64 {
        self.inner(other).norm_sqr()
    }

    pub fn apply_1q(&mut self, q: usize, m: &Matrix2) {
        let b = self.bit(q);
        for i in 0..self.amps.len() {
            if i & b == 0 {
                let (a0, a1) = (self.amps[i], self.amps[i | b]);
                self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[i | b] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    pub fn apply_cz(&mut self, a: usize, b: usize) {
        let mask = self.bit(a) | self.bit(b);
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *amp = -*amp;
            }
        }
    }

    pub fn apply_cnot(&mut self, c: usize, t: usize) {
        let (bc, bt) = (self.bit(c), self.bit(t));
        for i in 0..self.amps.len() {
            if i & bc != 0 && i & bt == 0 {
                self.amps.swap(i, i | bt);
            }
        }
    }

    pub fn apply_pauli(&mut self, p: &PauliString) {
        let mut xmask = 0usize;
        let mut zmask = 0usize;
        for q in p.x().ones() {
            xmask |= self.bit(q);
        }
        for q in p.z().ones() {
            zmask |= self.bit(q);
        }
        let global = i_pow(p.phase() as u32 + p.count_y() as u32);
        let old = core::mem::take(&mut self.amps);
        let mut out = vec![ZERO; old.len()];
        for (i, a) in old.into_iter().enumerate() {
            let sign = if (i & zmask).count_ones() % 2 == 1 { -global } else { global };
            out[i ^ xmask] = sign * a;
        }
        self.amps = out;
    }

    /// Applies `P` (acting on qubits `0..P.len()`) conditioned on `control` being 1.
    pub fn apply_controlled_pauli(&mut self, control: usize, p: &PauliString) {
        let mut full = PauliString::identity(self.n);
        for q in p.support() {
            full.set(q, p.get(q));
        }
        full.set_phase(p.phase());
        let mut applied = self.clone();
        applied.apply_pauli(&full);
        let b = self.bit(control);
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & b != 0 {
                *a = applied.amps[i];
            }
        }
    }

    /// `exp(-iθP/2)` for a Hermitian Pauli string `P`.
    pub fn apply_pauli_rotation(&mut self, p: &PauliString, theta: f64) {
        let mut rotated = self.clone();
        rotated.apply_pauli(p);
        let c = libm::cos(theta / 2.0);
        let s = Complex64::new(0.0, -libm::sin(theta / 2.0));
        for (a, b) in self.amps.iter_mut().zip(rotated.amps) {
            *a = *a * c + s * b;
        }
    }

    pub fn expectation(&self, p: &PauliString) -> f64 {
        let mut ps = self.clone();
        ps.apply_pauli(p);
        self.inner(&ps).re
    }

    /// Zeroes amplitudes with qubit `q` different from `bit`.
    pub fn project(&mut self, q: usize, bit: bool) {
        let b = self.bit(q);
        for (i, a) in self.amps.iter_mut().enumerate() {
            if (i & b != 0) != bit {
                *a = ZERO;
            }
        }
    }

    /// Removes qubit `q` after it has been projected onto `bit`.
    pub fn discard_projected(&self, q: usize, bit: bool) -> DenseState {
        let b = self.bit(q);
        let amps = (0..self.amps.len())
            .filter(|&i| (i & b != 0) == bit)
            .map(|i| self.amps[i])
            .collect();
        DenseState { n: self.n - 1, amps }
    }

    /// Probability of outcome `bit` on qubit `q` (unnormalized state allowed).
    pub fn probability(&self, q: usize, bit: bool) -> f64 {
        let b = self.bit(q);
        self.amps.iter().enumerate().filter(|(i, _)| (i & b != 0) == bit).map(|(_, a)| a.norm_sqr()).sum()
    }
}

/// Applies `∏ exp(-iθ_m P_m / 2)` in sequence order (first generator first).
pub fn simulate_circuit(init: &DenseState, generators: &[PauliString], angles: &[f64]) -> Result<DenseState> {
    if generators.len() != angles.len() {
        return Err(Error::Length { expected: generators.len(), found: angles.len() });
    }
    let mut s = init.clone();
    for (p, &t) in generators.iter().zip(angles) {
        s.apply_pauli_rotation(p, t);
    }
    Ok(s)
}

/// Runs a rotation sequence with numeric `angles` on the state of `init`.
pub fn simulate_sequence(
    seq: &crate::resource::RotationSequence,
    angles: &[f64],
    init: &StabilizerTableau,
) -> Result<DenseState> {
    simulate_circuit(&DenseState::from_tableau(init)?, &seq.generators(), angles)
}

/// `∏_m Λ_m(P_m) (|init⟩ ⊗ |+⟩^M)` with the first generator applied first.
pub fn circuit_resource_state(init: &DenseState, generators: &[PauliString]) -> Result<DenseState> {
    let n = init.num_qubits();
    let m = generators.len();
    let plus = DenseState::plus(m)?;
    let mut amps = Vec::with_capacity(1 << (n + m));
    for a in init.amplitudes() {
        for b in plus.amplitudes() {
            amps.push(a * b);
        }
    }
    let mut s = DenseState::from_amplitudes(n + m, amps)?;
    for (i, g) in generators.iter().enumerate() {
        s.apply_controlled_pauli(n + i, g);
    }
    Ok(s)
}


/// Dense state of a compiled resource: `𝒞|Γ⟩` followed by its ladder.
pub fn resource_state(res: &crate::resource::CompiledResource) -> Result<DenseState> {
    let mut s = DenseState::decorated_graph_state(&res.graph, &res.vops)?;
    if let Some(l) = &res.ladder {
        for (c, t) in l.cnots() {
            s.apply_cnot(c, t);
        }
    }
    Ok(s)
}

/// One outcome branch of a measurement pattern on a resource.
#[derive(Clone, Debug)]
pub struct PatternBranch {
    pub probability: f64,
    /// Main register after the final correction, normalized; `None` for a zero-probability branch.
    pub state: Option<DenseState>,
}

/// Runs `pattern` on `res` with forced outcomes, measuring auxiliaries in `order`.
///
/// `order` must list every auxiliary once and respect the round structure.
pub fn simulate_pattern_branch(
    res: &crate::resource::CompiledResource,
    pattern: &crate::pattern::MeasurementPattern,
    angles: &[f64],
    outcomes: &[bool],
    order: &[usize],
) -> Result<PatternBranch> {
    let (n, m) = (res.num_main, res.num_aux());
    if outcomes.len() != m || angles.len() != m || order.len() != m || pattern.num_aux() != m {
        return Err(Error::Length { expected: m, found: outcomes.len().min(angles.len()).min(order.len()) });
    }
    let mut round_of = vec![0usize; m];
    for (r, round) in pattern.rounds.iter().enumerate() {
        for &a in round {
            round_of[a] = r;
        }
    }
    let mut done = vec![false; m];
    let mut s = resource_state(res)?;
    for (pos, &a) in order.iter().enumerate() {
        if a >= m || done[a] {
            return Err(Error::PatternOrder(a));
        }
        if pattern.adaptivity[a].iter().any(|&b| !done[b]) || order[..pos].iter().any(|&b| round_of[b] > round_of[a]) {
            return Err(Error::PatternOrder(a));
        }
        let theta = pattern.adapted_angle(a, angles[a], outcomes);
        s.apply_1q(n + a, &rx_matrix(theta));
        s.project(n + a, outcomes[a]);
        done[a] = true;
    }
    let shift = m;
    let aux_bits = outcomes.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
    let amps: Vec<Complex64> = (0..1usize << n).map(|i| s.amps[(i << shift) | aux_bits]).collect();
    let mut main = DenseState { n, amps };
    let probability = main.norm_sqr();
    if probability < 1e-24 {
        return Ok(PatternBranch { probability, state: None });
    }
    main.normalize()?;
    main.apply_pauli(&pattern.final_correction(outcomes)?);
    Ok(PatternBranch { probability, state: Some(main) })
}

/// Samples one `±1` eigenvalue of the observable through the hybrid scheme.
///
/// `aux_state` is the dense state of `hp.aux_resource`. Returns `true` for `−1`.
pub fn hybrid_shot<R: rand::Rng>(
    hp: &crate::pattern::HybridPremeasurement,
    pattern: &crate::pattern::MeasurementPattern,
    aux_state: &DenseState,
    angles: &[f64],
    rng: &mut R,
) -> Result<bool> {
    let m = pattern.num_aux();
    if aux_state.num_qubits() != m || angles.len() != m {
        return Err(Error::Length { expected: m, found: aux_state.num_qubits() });
    }
    let t = hp.model.sample(rng);
    let frame = hp.byproducts.evaluate(&t);
    let mut parity = hp.model.observable_parity(&t) ^ hp.observable.is_negative();
    let mut s = aux_state.clone();
    let mut outcomes = Vec::with_capacity(m);
    for a in 0..m {
        let theta = pattern.adapted_angle(a, angles[a], &outcomes);
        let theta = if frame.z().get(a) { -theta } else { theta };
        s.apply_1q(0, &rx_matrix(theta));
        let p1 = s.probability(0, true) / s.norm_sqr();
        let d = rng.gen::<f64>() < p1;
        s = s.discard_projected(0, d);
        s.normalize()?;
        let bit = d ^ frame.x().get(a);
        outcomes.push(bit);
        if bit && !pattern.generators[a].commutes(&hp.observable) {
            parity ^= true;
        }
    }
    Ok(parity)
}
