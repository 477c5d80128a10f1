mod common;

use common::*;
use mbqc_core::clifford::Clifford1;
use mbqc_core::graph::{
    decorated_tableau, graph_from_tableau, local_complement_with_vops, measure_pauli, GraphAdjacency, OutcomeLaw,
    VopLayer,
};
use mbqc_core::oracle::{clifford_matrix, DenseState};
use mbqc_core::pauli::{Pauli, PauliString};
use mbqc_core::tableau::StabilizerTableau;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> PauliString {
    s.parse().unwrap()
}

#[test]
fn product_phase_examples() {
    assert_eq!(p("X").mul(&p("Z")), p("-iY"));
    assert_eq!(p("Z").mul(&p("X")), p("iY"));
    assert_eq!(p("XI").mul(&p("ZI")).to_string(), "-iYI");
}

#[test]
fn cnot_conjugation_examples() {
    assert_eq!(p("YY").conjugate_cnot(0, 1).unwrap(), p("-XZ"));
    assert_eq!(p("XI").conjugate_cnot(0, 1).unwrap(), p("XX"));
    assert_eq!(p("IZ").conjugate_cnot(0, 1).unwrap(), p("ZZ"));
    assert!(p("XI").conjugate_cnot(0, 0).is_err());
    assert!(p("XI").conjugate_cnot(0, 2).is_err());
}

#[test]
fn parse_and_print_round_trip() {
    for s in ["XYZI", "-XX", "iZ", "-iYY", ""] {
        assert_eq!(p(s).to_string(), s);
    }
    assert_eq!(p("+XZ").to_string(), "XZ");
    assert!("XQ".parse::<PauliString>().is_err());
}

#[test]
fn graph_conversion_examples() {
    let t = StabilizerTableau::parse(&["ZI", "IZ"]).unwrap();
    let (g, layer) = graph_from_tableau(&t).unwrap();
    assert_eq!(g.num_edges(), 0);
    assert!(layer.as_slice().iter().all(|&c| c == Clifford1::h()));

    let t = StabilizerTableau::parse(&["XZ", "ZX"]).unwrap();
    let (g, layer) = graph_from_tableau(&t).unwrap();
    assert_eq!(g.edges(), vec![(0, 1)]);
    assert!(layer.is_identity());

    let t = StabilizerTableau::parse(&["XX", "ZZ", "YY"]).unwrap();
    assert!(graph_from_tableau(&t).is_err());
}

#[test]
fn graph_tableau_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..7 {
        let g = random_graph(&mut rng, n, 0.5);
        let (g2, layer) = graph_from_tableau(&g.tableau()).unwrap();
        assert_eq!(g, g2);
        assert!(layer.is_identity());
    }
}

#[test]
fn measurement_examples() {
    // Z on a path end deletes the vertex, byproduct Z on its neighbour.
    let g = GraphAdjacency::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let m = measure_pauli(&g, &VopLayer::identity(3), 0, Pauli::Z, None).unwrap();
    assert_eq!(m.graph.edges(), vec![(0, 1)]);
    assert_eq!(m.law, OutcomeLaw::Uniform);
    assert!(m.byproducts[0].is_identity());
    assert_eq!(m.byproducts[1].to_string_unsigned(), "ZI");

    // X on an isolated vertex is deterministic 0.
    let g = GraphAdjacency::empty(2);
    let m = measure_pauli(&g, &VopLayer::identity(2), 1, Pauli::X, None).unwrap();
    assert_eq!(m.law, OutcomeLaw::Deterministic(false));

    let g = GraphAdjacency::from_edges(3, [(0, 1)]).unwrap();
    assert!(measure_pauli(&g, &VopLayer::identity(3), 0, Pauli::X, Some(2)).is_err());
}

fn eigvec(p: Pauli, s: bool) -> [Complex64; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let sign = if s { -1.0 } else { 1.0 };
    match p {
        Pauli::Z => if s { [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)] } else { [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)] },
        Pauli::X => [Complex64::new(h, 0.0), Complex64::new(sign * h, 0.0)],
        Pauli::Y => [Complex64::new(h, 0.0), Complex64::new(0.0, sign * h)],
        Pauli::I => unreachable!(),
    }
}

fn insert_qubit(s: &DenseState, v: usize, q: [Complex64; 2]) -> DenseState {
    let n = s.num_qubits() + 1;
    let low_bits = n - 1 - v;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    for (i, a) in s.amplitudes().iter().enumerate() {
        let hi = (i >> low_bits) << (low_bits + 1);
        let lo = i & ((1 << low_bits) - 1);
        amps[hi | lo] = a * q[0];
        amps[hi | (1 << low_bits) | lo] = a * q[1];
    }
    DenseState::from_amplitudes(n, amps).unwrap()
}

fn check_measurement(rng: &mut ChaCha8Rng, n: usize) {
    let g = random_graph(rng, n, 0.45);
    let layer = random_layer(rng, n);
    let v = rng.gen_range(0..n);
    let basis = [Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..3)];
    let psi = DenseState::decorated_graph_state(&g, &layer).unwrap();
    let m = measure_pauli(&g, &layer, v, basis, None).unwrap();
    let post = DenseState::decorated_graph_state(&m.graph, &m.layer).unwrap();
    for s in [false, true] {
        let mut proj = psi.clone();
        let mut pv = PauliString::single(n, v, basis);
        if s {
            pv.set_phase(2);
        }
        let mut applied = proj.clone();
        applied.apply_pauli(&pv);
        let amps: Vec<Complex64> =
            proj.amplitudes().iter().zip(applied.amplitudes()).map(|(a, b)| (a + b) * 0.5).collect();
        proj = DenseState::from_amplitudes(n, amps).unwrap();
        let prob = proj.norm_sqr();
        match m.law {
            OutcomeLaw::Uniform => assert!((prob - 0.5).abs() < 1e-9, "prob {prob}"),
            OutcomeLaw::Deterministic(b) => {
                assert!((prob - if b == s { 1.0 } else { 0.0 }).abs() < 1e-9);
                if b != s {
                    continue;
                }
            }
        }
        let mut expected = post.clone();
        expected.apply_pauli(&m.byproducts[s as usize]);
        let expected = insert_qubit(&expected, v, eigvec(basis, s));
        proj.normalize().unwrap();
        assert!(same_ray(&expected, &proj), "graph {g:?} layer {layer:?} v {v} basis {basis:?} s {s}");
    }
}

#[test]
fn pauli_measurement_matches_dense_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let n = rng.gen_range(1..7);
        check_measurement(&mut rng, n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_matches_dense(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_pauli(&mut rng, n), random_pauli(&mut rng, n));
        let psi = random_state(&mut rng, n);
        let mut lhs = psi.clone();
        lhs.apply_pauli(&a.mul(&b));
        let mut rhs = psi.clone();
        rhs.apply_pauli(&b);
        rhs.apply_pauli(&a);
        prop_assert!(approx_same_vector(&lhs, &rhs));
        prop_assert_eq!(a.commutes(&b), b.commutes(&a));
    }

    #[test]
    fn cnot_conjugation_matches_dense(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_pauli(&mut rng, n);
        let c = rng.gen_range(0..n);
        let t = (c + 1 + rng.gen_range(0..n - 1)) % n;
        let conj = a.conjugate_cnot(c, t).unwrap();
        let psi = random_state(&mut rng, n);
        let mut lhs = psi.clone();
        lhs.apply_pauli(&a);
        lhs.apply_cnot(c, t);
        let mut rhs = psi.clone();
        rhs.apply_cnot(c, t);
        rhs.apply_pauli(&conj);
        prop_assert!(approx_same_vector(&lhs, &rhs));
    }

    #[test]
    fn clifford_conjugation_matches_dense(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_pauli(&mut rng, n);
        let layer = random_layer(&mut rng, n);
        let conj = layer.conjugate(&a);
        let psi = random_state(&mut rng, n);
        let mut lhs = psi.clone();
        lhs.apply_pauli(&a);
        for q in 0..n { lhs.apply_1q(q, &clifford_matrix(layer.get(q))); }
        let mut rhs = psi.clone();
        for q in 0..n { rhs.apply_1q(q, &clifford_matrix(layer.get(q))); }
        rhs.apply_pauli(&conj);
        prop_assert!(approx_same_vector(&lhs, &rhs));
    }

    #[test]
    fn local_complement_relation_holds(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5);
        let layer = random_layer(&mut rng, n);
        let v = rng.gen_range(0..n);
        let (mut g2, mut l2) = (g.clone(), layer.clone());
        local_complement_with_vops(&mut g2, &mut l2, v).unwrap();
        let a = DenseState::decorated_graph_state(&g, &layer).unwrap();
        let b = DenseState::decorated_graph_state(&g2, &l2).unwrap();
        prop_assert!(same_ray(&a, &b));
        let mut g3 = g2.clone();
        g3.local_complement(v).unwrap();
        prop_assert_eq!(g3, g);
    }

    #[test]
    fn tableau_to_graph_preserves_state(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_stabilizer(&mut rng, n);
        let (g, layer) = graph_from_tableau(&t).unwrap();
        prop_assert!(decorated_tableau(&g, &layer).same_group(&t).unwrap());
        let a = DenseState::from_tableau(&t).unwrap();
        let b = DenseState::decorated_graph_state(&g, &layer).unwrap();
        prop_assert!(same_ray(&a, &b));
    }

    #[test]
    fn stabilizer_product_phase_matches_multiplication(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5);
        let subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        let prod = subset.iter().fold(PauliString::identity(n), |acc, &v| acc.mul(&g.stabilizer(v)));
        prop_assert_eq!(prod.is_negative(), g.stab_product_phase(&subset));
        prop_assert!(prod.is_hermitian());
    }

    #[test]
    fn canonical_form_is_idempotent(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_stabilizer(&mut rng, n);
        let c = t.canonical_form().unwrap();
        prop_assert_eq!(c.canonical_form().unwrap(), c);
    }
}
