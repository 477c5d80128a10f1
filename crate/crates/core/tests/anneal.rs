mod common;

use common::*;
use mbqc_core::anneal::*;
use mbqc_core::resource::*;
use mbqc_core::tableau::StabilizerTableau;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn xy_resource(n: usize, k: usize) -> (RotationSequence, CompiledResource) {
    let seq = xy_sequence(n, k, 0.2);
    let cs = conjugate_through_initial_lc(&seq, &StabilizerTableau::zero_state(n)).unwrap();
    (seq.clone(), graph_solution(&cs).unwrap())
}

#[test]
fn distance_matrix_matches_xy_n3_k3_example() {
    let d = build_distance_matrix(&[2; 6], 3, 2, false).unwrap();
    let expected: Vec<Vec<u64>> = (0..7)
        .map(|i: i64| (0..7).map(|j: i64| 1u64 << ((i - j).abs() - 1).max(0)).collect())
        .collect();
    assert_eq!(d.group_weights(), expected.as_slice());
    assert_eq!(expected[0], vec![1, 1, 2, 4, 8, 16, 32]);
    assert_eq!(d.len(), 15);
    let group = |v: usize| if v < 3 { 6 } else { (v - 3) / 2 };
    for a in 0..15 {
        for b in 0..15 {
            assert_eq!(d.get(a, b), expected[group(a)][group(b)], "({a}, {b})");
        }
    }
}

#[test]
fn equal_groups_link_two_ahead() {
    for n in 2..7 {
        for j_count in 2..8 {
            let d = build_distance_matrix(&vec![n - 1; j_count], n, n - 1, false).unwrap();
            let gw = d.group_weights();
            for j in 0..j_count - 1 {
                assert_eq!(gw[j][j + 1], 1);
                assert_eq!(gw[j][j + 2], 2);
            }
        }
    }
}

#[test]
fn override_sets_main_weights_to_one() {
    let d = build_distance_matrix(&[3; 4], 4, 3, true).unwrap();
    for a in 0..4 {
        for b in 4..16 {
            assert_eq!(d.get(a, b), 1);
            assert_eq!(d.get(b, a), 1);
        }
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(build_distance_matrix(&[], 2, 1, false).is_err());
    assert!(build_distance_matrix(&[2, 0], 2, 1, false).is_err());
    assert!(build_distance_matrix(&[2, 2], 2, 0, false).is_err());
    assert!(build_distance_matrix(&[1; 80], 2, 1, false).is_err());
    let bad = AnnealConfig { cooling_rate: 1.0, ..Default::default() };
    assert!(bad.validate().is_err());
}

#[test]
fn annealing_preserves_the_state_and_reports_exact_costs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..12 {
        let (n, l, k) = (2 + case % 3, 1 + case % 3, 2 + case % 2);
        let seq = {
            use rand::Rng;
            let period = (0..l)
                .map(|_| Rotation::new(random_nontrivial_pauli(&mut rng, n), Angle::Value(rng.gen())))
                .collect();
            RotationSequence::new(n, period, k).unwrap()
        };
        let init = random_stabilizer(&mut rng, n);
        let cs = conjugate_through_initial_lc(&seq, &init).unwrap();
        let start = graph_solution(&cs).unwrap();
        let d = build_distance_matrix(&vec![l; k], n, n, false).unwrap();
        let cfg = AnnealConfig { cooling_rate: 0.99, seed: case as u64, ..Default::default() };
        let run = anneal_run(&start, &d, &cfg, 0).unwrap();
        let phys = physical_resource_tableau(&seq, &init).unwrap();
        for c in [&run.best, &run.lowest] {
            assert_eq!(c.w, weight(&c.resource.graph, &d));
            assert_eq!(c.pi, aperiodicity(&c.resource.graph, n, l, l * k));
            assert!(c.resource.physical_tableau().unwrap().same_group(&phys).unwrap());
            assert_eq!(replay_moves(&start, &c.moves).unwrap(), c.resource);
        }
        assert!(run.lowest.cost() <= run.best.cost());
        assert!(run.trace.iter().all(|t| t.f == t.w + t.pi * t.pi));
        assert!(run.trace.windows(2).all(|p| p[1].best_f <= p[0].best_f));
    }
}

#[test]
fn anneal_is_reproducible_per_seed_and_run() {
    let (_, start) = xy_resource(3, 3);
    let d = build_distance_matrix(&[2; 6], 3, 2, false).unwrap();
    let cfg = AnnealConfig { cooling_rate: 0.995, seed: 11, ..Default::default() };
    let a = anneal_run(&start, &d, &cfg, 3).unwrap();
    let b = anneal_run(&start, &d, &cfg, 3).unwrap();
    assert_eq!(a.lowest.moves, b.lowest.moves);
    assert_eq!(a.trace, b.trace);
    assert!(a.best.cost() <= a.trace[0].f);
}

#[test]
fn optimal_start_is_returned_when_nothing_beats_it() {
    // an edgeless auxiliary block with no main couplings cannot improve
    let seq = RotationSequence::new(
        2,
        vec![Rotation::new("ZI".parse().unwrap(), Angle::Value(0.1)), Rotation::new("IZ".parse().unwrap(), Angle::Value(0.1))],
        3,
    )
    .unwrap();
    let cs = conjugate_through_initial_lc(&seq, &StabilizerTableau::zero_state(2)).unwrap();
    let start = graph_solution(&cs).unwrap();
    let d = build_distance_matrix(&[2; 3], 2, 2, false).unwrap();
    let w0 = weight(&start.graph, &d);
    let run = anneal_run(&start, &d, &AnnealConfig { cooling_rate: 0.99, ..Default::default() }, 0).unwrap();
    assert!(run.feasible());
    assert_eq!(w0, 0);
    assert!(run.best.moves.is_empty());
    assert_eq!(run.best.resource, start);
}

#[test]
fn extrapolation_of_adjacent_step_resources() {
    let period = ["ZZI", "IZZ", "ZIZ"].iter().map(|g| Rotation::new(g.parse().unwrap(), Angle::Value(0.4))).collect();
    let seq = RotationSequence::new(3, period, 4).unwrap();
    let init = StabilizerTableau::parse(&["XXX", "ZZI", "IZZ"]).unwrap();
    let solve = |k: usize| {
        let cs = conjugate_through_initial_lc(&seq.with_steps(k).unwrap(), &init).unwrap();
        graph_solution(&cs).unwrap()
    };
    let base = solve(4);
    for target in [3, 5, 9] {
        let ext = extrapolate(&base, target).unwrap();
        assert_eq!(ext, solve(target));
    }
    let (_, xy) = xy_resource(3, 4);
    assert!(extrapolate(&xy, 6).is_err());
}

#[test]
fn extrapolated_annealed_resources_prepare_the_longer_state() {
    let (n, k) = (3, 4);
    let (seq, start) = xy_resource(n, k);
    let d = build_distance_matrix(&vec![n - 1; 2 * k], n, n - 1, false).unwrap();
    let cfg = AnnealConfig { cooling_rate: 0.999, seed: 1, ..Default::default() };
    let mut checked = 0;
    for r in 0..16 {
        let run = anneal_run(&start, &d, &cfg, r).unwrap();
        if let Ok(ext) = extrapolate(&run.lowest.resource, 9) {
            let init = StabilizerTableau::zero_state(n);
            let phys = physical_resource_tableau(&seq.with_steps(9).unwrap(), &init).unwrap();
            let fixed = align_pauli_frame(&ext, &phys).unwrap();
            assert!(fixed.physical_tableau().unwrap().same_group(&phys).unwrap(), "run {r}");
            assert_eq!(fixed.graph, ext.graph);
            assert!(fixed.vops.as_slice().iter().zip(ext.vops.as_slice()).all(|(a, b)| a.eq_up_to_pauli(*b)));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn pauli_frame_alignment_recovers_flipped_vops() {
    use mbqc_core::clifford::Clifford1;
    use mbqc_core::pauli::Pauli;
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = rng.gen_range(1..5);
        let g = random_graph(&mut rng, n + 3, 0.5);
        let layer = random_layer(&mut rng, n + 3);
        let res = CompiledResource { num_main: n, period: 1, steps: 3, graph: g, vops: layer, ladder: None };
        let target = res.physical_tableau().unwrap();
        let mut flipped = res.clone();
        for v in 0..n + 3 {
            let p = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..4)];
            flipped.vops.set(v, Clifford1::pauli(p).compose(flipped.vops.get(v)));
        }
        let fixed = align_pauli_frame(&flipped, &target).unwrap();
        assert!(fixed.physical_tableau().unwrap().same_group(&target).unwrap());
        assert!(fixed.vops.as_slice().iter().zip(res.vops.as_slice()).all(|(a, b)| a.eq_up_to_pauli(*b)));
    }
}

#[test]
fn pauli_frame_alignment_rejects_non_pauli_differences() {
    use mbqc_core::clifford::Clifford1;
    use mbqc_core::graph::{GraphAdjacency, VopLayer};
    let g = GraphAdjacency::from_edges(2, [(0, 1)]).unwrap();
    let res = CompiledResource { num_main: 1, period: 1, steps: 1, graph: g, vops: VopLayer::identity(2), ladder: None };
    let target = res.physical_tableau().unwrap();
    let mut other = res.clone();
    other.vops.set(0, Clifford1::h());
    assert!(align_pauli_frame(&other, &target).is_err());
}
