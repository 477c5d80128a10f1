mod common;

use common::*;
use mbqc_core::clifford::Clifford1;
use mbqc_core::graph::VopLayer;
use mbqc_core::ladder::{ac_graph, verify_preparation};
use mbqc_core::oracle::{circuit_resource_state, clifford_matrix, DenseState};
use mbqc_core::pauli::PauliString;
use mbqc_core::resource::*;
use mbqc_core::tableau::StabilizerTableau;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sequence(rng: &mut ChaCha8Rng, n: usize, l: usize, k: usize) -> RotationSequence {
    let period = (0..l).map(|i| Rotation::new(random_pauli(rng, n), Angle::Symbol(format!("t{i}")))).collect();
    RotationSequence::new(n, period, k).unwrap()
}

fn seq(n: usize, gens: &[&str], k: usize) -> RotationSequence {
    let period = gens.iter().map(|g| Rotation::new(g.parse().unwrap(), Angle::Value(0.3))).collect();
    RotationSequence::new(n, period, k).unwrap()
}

#[test]
fn single_y_generator_on_plus_state() {
    let s = seq(1, &["Y"], 1);
    let init = StabilizerTableau::plus_state(1);
    let cs = conjugate_through_initial_lc(&s, &init).unwrap();
    let res = graph_solution(&cs).unwrap();
    assert_eq!(res.graph.edges(), vec![(0, 1)]);
    assert_eq!(res.vops.get(1), Clifford1::s_power(-1));
    assert_eq!(res.vops.get(0), Clifford1::IDENTITY);
}

#[test]
fn zero_state_conjugation_gives_hadamard_frame() {
    let s = seq(1, &["Z"], 1);
    let cs = conjugate_through_initial_lc(&s, &StabilizerTableau::zero_state(1)).unwrap();
    assert_eq!(cs.frame_vops.get(0), Clifford1::h());
    assert_eq!(cs.period[0].to_string(), "X");
    assert!(!cs.signs[0]);
}

#[test]
fn identity_dressing_adds_zero_rows() {
    let s = seq(2, &["XX", "ZZ", "YI"], 2).dress_with_identity(1).unwrap();
    assert_eq!(s.period_len(), 4);
    let cs = conjugate_through_initial_lc(&s, &StabilizerTableau::zero_state(2)).unwrap();
    let d = anticommutation_matrices(&cs);
    assert_eq!(d.a.row(1).count_ones(), 0);
    assert!((0..4).all(|m| !d.a.get(m, 1)));
    assert!((0..2).all(|v| !d.a0.get(v, 1)));
}

#[test]
fn resource_tableau_examples() {
    let s = seq(1, &["Z"], 1);
    let t = physical_resource_tableau(&s, &StabilizerTableau::plus_state(1)).unwrap();
    assert_eq!(t.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>(), vec!["XZ", "ZX"]);
}

fn check_instance(rng: &mut ChaCha8Rng, n: usize, l: usize, k: usize, dense: bool) {
    let s = random_sequence(rng, n, l, k);
    let init = random_stabilizer(rng, n);
    let cs = conjugate_through_initial_lc(&s, &init).unwrap();
    let phys = physical_resource_tableau(&s, &init).unwrap();

    // conjugation is exact
    for (i, r) in s.period().iter().enumerate() {
        let mut back = cs.frame_vops.conjugate(&cs.period[i]);
        if cs.signs[i] {
            back.add_phase(2);
        }
        assert_eq!(back, r.generator);
    }

    // frame tableau lifted by 𝒞₀ equals the physical one
    let lifted = cs.frame_vops.concat(&VopLayer::identity(s.total()));
    let frame = resource_tableau(&cs);
    let rows: Vec<PauliString> = frame.rows().iter().map(|r| lifted.conjugate(r)).collect();
    let lifted_t = StabilizerTableau::new(n + s.total(), rows).unwrap();
    assert!(lifted_t.same_group(&phys).unwrap());

    let res = graph_solution(&cs).unwrap();
    assert_eq!(res, periodic_graph(&cs).unwrap());
    assert!(res.physical_tableau().unwrap().same_group(&phys).unwrap(), "seq {s:?} init {init:?}");

    let ac = ac_graph(&cs).unwrap();
    assert!(verify_preparation(&ac, &s, &init).unwrap(), "ac seq {s:?} init {init:?}");

    if dense {
        let init_state = DenseState::from_tableau(&init).unwrap();
        let circuit = circuit_resource_state(&init_state, &s.generators()).unwrap();
        let graph = DenseState::decorated_graph_state(&res.graph, &res.vops).unwrap();
        assert!(same_ray(&circuit, &graph));
        let mut acs = DenseState::decorated_graph_state(&ac.graph, &ac.vops).unwrap();
        for (c, t) in ac.ladder.as_ref().unwrap().cnots() {
            acs.apply_cnot(c, t);
        }
        assert!(same_ray(&circuit, &acs));
    }
}

#[test]
fn closed_form_matches_circuit_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..300 {
        let n = rng.gen_range(1..5);
        let l = rng.gen_range(1..5);
        let k = rng.gen_range(1..4);
        let dense = n + l * k <= 12;
        check_instance(&mut rng, n, l, k, dense);
    }
}

#[test]
fn clifford_matrices_reproduce_frame_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let n = rng.gen_range(1..4);
        let s = random_sequence(&mut rng, n, 3, 1);
        let init = random_stabilizer(&mut rng, n);
        let cs = conjugate_through_initial_lc(&s, &init).unwrap();
        let psi = random_state(&mut rng, n);
        for (i, r) in s.period().iter().enumerate() {
            // 𝒞₀ P' 𝒞₀† |ψ⟩ = (-1)^R P |ψ⟩
            let mut lhs = psi.clone();
            for q in 0..n {
                lhs.apply_1q(q, &clifford_matrix(cs.frame_vops.get(q).inverse()));
            }
            lhs.apply_pauli(&cs.period[i]);
            for q in 0..n {
                lhs.apply_1q(q, &clifford_matrix(cs.frame_vops.get(q)));
            }
            let mut rhs = psi.clone();
            let mut g = r.generator.clone();
            if cs.signs[i] {
                g.add_phase(2);
            }
            rhs.apply_pauli(&g);
            assert!(same_ray(&lhs, &rhs) && (lhs.inner(&rhs).re - 1.0).abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resource_graph_is_lc_resource(seed in any::<u64>(), n in 1usize..6, l in 1usize..6, k in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        check_instance(&mut rng, n, l, k, false);
    }
}
