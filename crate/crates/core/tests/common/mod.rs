#![allow(dead_code)]

use mbqc_core::clifford::Clifford1;
use mbqc_core::graph::{decorated_tableau, GraphAdjacency, VopLayer};
use mbqc_core::oracle::DenseState;
use mbqc_core::pauli::{Pauli, PauliString};
use mbqc_core::tableau::StabilizerTableau;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> GraphAdjacency {
    let mut g = GraphAdjacency::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(a, b, true);
            }
        }
    }
    g
}

pub fn random_layer(rng: &mut ChaCha8Rng, n: usize) -> VopLayer {
    VopLayer::from_vec((0..n).map(|_| Clifford1::from_index(rng.gen_range(0..24)).unwrap()).collect())
}

pub fn random_pauli(rng: &mut ChaCha8Rng, n: usize) -> PauliString {
    let mut p = PauliString::identity(n);
    for q in 0..n {
        p.set(q, [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..4)]);
    }
    p
}

pub fn random_nontrivial_pauli(rng: &mut ChaCha8Rng, n: usize) -> PauliString {
    loop {
        let p = random_pauli(rng, n);
        if !p.is_identity() {
            return p;
        }
    }
}

/// Random stabilizer state: decorated graph followed by random CNOTs.
pub fn random_stabilizer(rng: &mut ChaCha8Rng, n: usize) -> StabilizerTableau {
    let g = random_graph(rng, n, 0.5);
    let layer = random_layer(rng, n);
    let mut t = decorated_tableau(&g, &layer);
    if n >= 2 {
        for _ in 0..rng.gen_range(0..2 * n) {
            let c = rng.gen_range(0..n);
            let mut tq = rng.gen_range(0..n - 1);
            if tq >= c {
                tq += 1;
            }
            t = t.conjugate_cnot(c, tq).unwrap();
        }
    }
    t
}

pub fn random_state(rng: &mut ChaCha8Rng, n: usize) -> DenseState {
    let amps = (0..1usize << n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    let mut s = DenseState::from_amplitudes(n, amps).unwrap();
    s.normalize().unwrap();
    s
}

pub fn approx_same_vector(a: &DenseState, b: &DenseState) -> bool {
    a.amplitudes().iter().zip(b.amplitudes()).all(|(x, y)| (x - y).norm_sqr() < 1e-20)
}

pub fn same_ray(a: &DenseState, b: &DenseState) -> bool {
    (a.fidelity(b) - 1.0).abs() < 1e-9
}

pub fn xy_sequence(n: usize, k: usize, theta: f64) -> mbqc_core::resource::RotationSequence {
    use mbqc_core::resource::{Angle, Rotation, RotationSequence};
    let mut period = Vec::new();
    for letter in [Pauli::X, Pauli::Y] {
        for i in 0..n - 1 {
            let mut p = PauliString::identity(n);
            p.set(i, letter);
            p.set(i + 1, letter);
            period.push(Rotation::new(p, Angle::Value(theta)));
        }
    }
    RotationSequence::new(n, period, k).unwrap()
}
