use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::clifford::Clifford1;
use crate::error::{Error, Result};
use crate::graph::{GraphAdjacency, VopLayer};
use crate::pauli::Pauli;
use crate::tableau::StabilizerTableau;
use crate::resource::CompiledResource;

type PairSet = BTreeSet<(usize, usize)>;

struct Blocks {
    diag: Vec<PairSet>,
    next: Vec<PairSet>,
    main: Vec<PairSet>,
    vops: Vec<Vec<Clifford1>>,
}

fn split(res: &CompiledResource) -> Result<Blocks> {
    let (n, l, k) = (res.num_main, res.period, res.steps);
    let mut b = Blocks {
        diag: alloc::vec![PairSet::new(); k],
        next: alloc::vec![PairSet::new(); k.saturating_sub(1)],
        main: alloc::vec![PairSet::new(); k],
        vops: (0..k).map(|s| res.vops.as_slice()[n + s * l..n + (s + 1) * l].to_vec()).collect(),
    };
    for (u, v) in res.graph.edges() {
        match (u < n, v < n) {
            (true, true) => {}
            (true, false) => {
                let m = v - n;
                b.main[m / l].insert((u, m % l));
            }
            _ => {
                let (mu, mv) = (u - n, v - n);
                let (su, sv) = (mu / l, mv / l);
                match sv - su {
                    0 => {
                        b.diag[su].insert((mu % l, mv % l));
                    }
                    1 => {
                        b.next[su].insert((mu % l, mv % l));
                    }
                    gap => {
                        return Err(Error::Extrapolation(format!(
                            "edge ({u}, {v}) spans {gap} Trotter steps"
                        )))
                    }
                }
            }
        }
    }
    Ok(b)
}

fn periodic_interior(b: &Blocks, k: usize, p: usize) -> bool {
    let interior = 1..k - 1;
    for s in interior.clone() {
        let vops_match = || b.vops[s].iter().zip(&b.vops[s + p]).all(|(x, y)| x.eq_up_to_pauli(*y));
        if s + p < k - 1 && (b.diag[s] != b.diag[s + p] || b.main[s] != b.main[s + p] || !vops_match()) {
            return false;
        }
        if s + p + 1 < k - 1 && b.next[s] != b.next[s + p] {
            return false;
        }
    }
    true
}

/// Tiles the interior Trotter steps of an annealed resource up to `k_target` steps.
///
/// The first and last steps are kept; interior steps repeat with period 1 or 2
/// (in units of the rotation period). Edges may only join equal or adjacent steps.
/// Interior VOPs need only agree up to Paulis; the tiled layer carries the
/// template's Pauli frame, which [`align_pauli_frame`] fixes against a target.
pub fn extrapolate(res: &CompiledResource, k_target: usize) -> Result<CompiledResource> {
    let k = res.steps;
    if k_target == k {
        return Ok(res.clone());
    }
    if res.ladder.is_some() {
        return Err(Error::Extrapolation("ladder resources tile without annealing".into()));
    }
    if k_target < 3 {
        return Err(Error::Extrapolation(format!("target of {k_target} steps has no interior")));
    }
    let b = split(res)?;
    let p = if k >= 4 && periodic_interior(&b, k, 1) {
        1
    } else if k >= 5 && periodic_interior(&b, k, 2) {
        2
    } else {
        return Err(Error::Extrapolation(format!("no periodic interior found with {k} steps")));
    };
    if p == 2 && (k_target - k) % 2 != 0 {
        return Err(Error::Extrapolation("period-2 interior needs a target of equal parity".into()));
    }

    let src = |s: usize| -> usize {
        if s == 0 {
            0
        } else if s == k_target - 1 {
            k - 1
        } else {
            1 + (s - 1) % p
        }
    };
    let next_src = |s: usize| -> usize {
        if s == 0 {
            0
        } else if s == k_target - 2 {
            k - 2
        } else {
            1 + (s - 1) % p
        }
    };

    let (n, l) = (res.num_main, res.period);
    let mut g = GraphAdjacency::empty(n + l * k_target);
    for (u, v) in res.graph.edges().into_iter().filter(|&(u, v)| u < n && v < n) {
        g.set_edge(u, v, true);
    }
    let mut vops = res.vops.as_slice()[..n].to_vec();
    for s in 0..k_target {
        let base = n + s * l;
        for &(a, c) in &b.diag[src(s)] {
            g.set_edge(base + a, base + c, true);
        }
        for &(main, c) in &b.main[src(s)] {
            g.set_edge(main, base + c, true);
        }
        if s + 1 < k_target {
            for &(a, c) in &b.next[next_src(s)] {
                g.set_edge(base + a, base + l + c, true);
            }
        }
        vops.extend_from_slice(&b.vops[src(s)]);
    }
    Ok(CompiledResource {
        num_main: n,
        period: l,
        steps: k_target,
        graph: g,
        vops: VopLayer::from_vec(vops),
        ladder: None,
    })
}

/// Multiplies VOPs by the Pauli layer that makes `res` prepare exactly `target`.
///
/// Fails if the two states differ by more than a Pauli operator. Resources with
/// a ladder are compared after the ladder.
pub fn align_pauli_frame(res: &CompiledResource, target: &StabilizerTableau) -> Result<CompiledResource> {
    let n = res.graph.len();
    if target.num_qubits() != n {
        return Err(Error::Length { expected: n, found: target.num_qubits() });
    }
    let generators = res.physical_tableau()?.into_rows();
    let signs = target.signs_in_group(&generators)?;
    let mut vops = res.vops.clone();
    // the i-th generator before the ladder is C K_i C†; Z on vertex i flips only it
    for (v, (sign, g)) in signs.into_iter().zip(&generators).enumerate() {
        let Some(negative) = sign else {
            return Err(Error::Extrapolation(format!("generator {v} is not in the target group")));
        };
        if negative != g.is_negative() {
            vops.set(v, vops.get(v).compose(Clifford1::pauli(Pauli::Z)));
        }
    }
    Ok(CompiledResource { vops, ..res.clone() })
}
