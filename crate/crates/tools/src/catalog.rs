//! Bundled example problems.

use mbqc_core::graph::graph_from_tableau;
use mbqc_core::pauli::PauliString;
use mbqc_core::tableau::StabilizerTableau;

use crate::problem::{AngleSpec, AnnealSpec, InitialState, Method, PeriodEntry, ProblemSpec};

fn pauli_on(n: usize, letters: &[(usize, char)]) -> String {
    let mut s = vec!['I'; n];
    for &(q, c) in letters {
        s[q] = c;
    }
    s.into_iter().collect()
}

fn entry(pauli: String, angle: AngleSpec, group: Option<&str>) -> PeriodEntry {
    PeriodEntry { pauli, angle, group: group.map(str::to_string) }
}

fn symbolic(paulis: Vec<String>) -> Vec<PeriodEntry> {
    paulis.into_iter().enumerate().map(|(i, p)| entry(p, AngleSpec::Symbol(format!("t{i}")), None)).collect()
}

fn anneal(cooling_rate: f64, target_memory: usize, runs: usize, main_edge_override: bool) -> AnnealSpec {
    AnnealSpec { cooling_rate, target_memory: Some(target_memory), runs, seed: 0, main_edge_override }
}

/// XY chain: `XX` terms on neighbouring sites, then `YY` terms, anisotropy 0.5, time step 0.1.
pub fn xy_model(n: usize, steps: usize) -> ProblemSpec {
    let (gamma, dt) = (0.5, 0.1);
    let mut period = Vec::new();
    for (letter, coeff, group) in [('X', (1.0 + gamma) / 2.0, "xx"), ('Y', (1.0 - gamma) / 2.0, "yy")] {
        for i in 0..n - 1 {
            period.push(entry(pauli_on(n, &[(i, letter), (i + 1, letter)]), AngleSpec::Radians(2.0 * coeff * dt), Some(group)));
        }
    }
    let even = n % 2 == 0;
    ProblemSpec {
        name: Some(format!("xy_n{n}_k{steps}")),
        num_qubits: n,
        initial_state: InitialState::Zero,
        period,
        trotter_steps: steps,
        method: Method::Lc,
        anneal: anneal(0.99995, n - 1, if even { 8 } else { 20 }, even),
        observables: vec![pauli_on(n, &[(0, 'X'), (1, 'X')])],
    }
}

fn z_string(n: usize, qubits: &[usize]) -> PauliString {
    pauli_on(n, &qubits.iter().map(|&q| (q, 'Z')).collect::<Vec<_>>()).parse().unwrap()
}

fn x_string(n: usize, qubits: &[usize]) -> PauliString {
    pauli_on(n, &qubits.iter().map(|&q| (q, 'X')).collect::<Vec<_>>()).parse().unwrap()
}

pub const TORIC_PLAQUETTES: [[usize; 4]; 4] = [[0, 1, 2, 6], [0, 1, 3, 7], [2, 4, 5, 6], [3, 4, 5, 7]];
pub const TORIC_STARS: [[usize; 4]; 4] = [[0, 2, 3, 4], [1, 2, 3, 5], [0, 4, 6, 7], [1, 5, 6, 7]];

fn independent(rows: &[PauliString]) -> bool {
    StabilizerTableau::new(8, rows.to_vec()).and_then(|t| t.canonical_form()).is_ok_and(|c| c.len() == rows.len())
}

/// Ground state of the eight-qubit toric code: three independent plaquettes, three
/// independent stars, and the first two `Z` strings (by bitmask) that commute
/// with every star and complete the rank.
pub fn toric_ground_state() -> StabilizerTableau {
    let stars: Vec<PauliString> = TORIC_STARS.iter().map(|s| x_string(8, s)).collect();
    let mut rows: Vec<PauliString> = TORIC_PLAQUETTES[..3].iter().map(|p| z_string(8, p)).collect();
    rows.extend(stars[..3].iter().cloned());
    for mask in 1u32..256 {
        if rows.len() == 8 {
            break;
        }
        let qubits: Vec<usize> = (0..8).filter(|q| mask >> q & 1 == 1).collect();
        let z = z_string(8, &qubits);
        if stars.iter().all(|s| s.commutes(&z)) {
            rows.push(z);
            if !independent(&rows) {
                rows.pop();
            }
        }
    }
    StabilizerTableau::new(8, rows).expect("toric stabilizers commute")
}

/// Toric code with local `Z` fields; plaquettes commute with everything and are dropped.
pub fn toric_perturbed() -> ProblemSpec {
    let n = 8;
    let (g, vops) = graph_from_tableau(&toric_ground_state()).expect("full-rank stabilizer state");
    let dt = 0.1;
    let mut period: Vec<PeriodEntry> = (0..n)
        .map(|i| entry(z_string(n, &[i]).to_string(), AngleSpec::Radians(2.0 * dt * 0.1 * (i + 1) as f64), Some("field")))
        .collect();
    period.extend(TORIC_STARS.iter().map(|s| entry(x_string(n, s).to_string(), AngleSpec::Radians(2.0 * dt), Some("star"))));
    ProblemSpec {
        name: Some("toric_perturbed".into()),
        num_qubits: n,
        initial_state: InitialState::Graph {
            edges: g.edges(),
            vops: Some(vops.as_slice().iter().map(|c| c.name()).collect()),
        },
        period,
        trotter_steps: 3,
        method: Method::Lc,
        anneal: anneal(0.99995, 3, 8, false),
        observables: vec![x_string(n, &TORIC_STARS[0]).to_string()],
    }
}

/// `{X₁, Z₁, X₂, Z₂, Z₁Z₂} ∪ {X_iZ_{i+1}, Z_iX_{i+1}}` for `i = 2..N−1`.
pub fn two_local(n: usize) -> ProblemSpec {
    let mut p = vec![
        pauli_on(n, &[(0, 'X')]),
        pauli_on(n, &[(0, 'Z')]),
        pauli_on(n, &[(1, 'X')]),
        pauli_on(n, &[(1, 'Z')]),
        pauli_on(n, &[(0, 'Z'), (1, 'Z')]),
    ];
    for i in 1..n - 1 {
        p.push(pauli_on(n, &[(i, 'X'), (i + 1, 'Z')]));
        p.push(pauli_on(n, &[(i, 'Z'), (i + 1, 'X')]));
    }
    universal(format!("two_local_n{n}"), n, p)
}

/// All weight-one `X` and `Z` strings plus `Z` on every qubit (even `N`), or plus
/// `Z₁⋯Z_s` and `Z_s⋯Z_N` (odd `N`).
pub fn weight_one(n: usize, s: Option<usize>) -> ProblemSpec {
    let mut p: Vec<String> = (0..n).flat_map(|q| [pauli_on(n, &[(q, 'X')]), pauli_on(n, &[(q, 'Z')])]).collect();
    let name = match s {
        None => {
            p.push(z_string(n, &(0..n).collect::<Vec<_>>()).to_string());
            format!("weight1_n{n}")
        }
        Some(s) => {
            p.push(z_string(n, &(0..s).collect::<Vec<_>>()).to_string());
            p.push(z_string(n, &(s - 1..n).collect::<Vec<_>>()).to_string());
            format!("weight1_n{n}_s{s}")
        }
    };
    universal(name, n, p)
}

/// Generating set of the three-qubit cellular automaton.
pub fn cqca_n3() -> ProblemSpec {
    let p = ["ZII", "XII", "YZI", "YXI", "XYY", "YZX", "YXZ"].map(String::from).to_vec();
    universal("cqca_n3".into(), 3, p)
}

fn universal(name: String, n: usize, paulis: Vec<String>) -> ProblemSpec {
    ProblemSpec {
        name: Some(name),
        num_qubits: n,
        initial_state: InitialState::Zero,
        period: symbolic(paulis),
        trotter_steps: 3,
        method: Method::Lc,
        anneal: anneal(0.9999, n, 4, false),
        observables: vec![pauli_on(n, &[(0, 'Z')])],
    }
}

pub fn catalog() -> Vec<ProblemSpec> {
    vec![
        xy_model(7, 3),
        xy_model(4, 2),
        toric_perturbed(),
        two_local(5),
        weight_one(4, None),
        weight_one(5, Some(2)),
        cqca_n3(),
    ]
}

pub fn catalog_entry(name: &str) -> Option<ProblemSpec> {
    catalog().into_iter().find(|p| p.name.as_deref() == Some(name))
}
