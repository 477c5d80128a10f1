//! Ancilla-coupled resources: one closed-form register plus a CNOT ladder.

use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::{GraphAdjacency, VopLayer};
use crate::resource::{
    anticommutation_matrices, periodic_graph, physical_resource_tableau, CompiledResource, ConjugatedSequence,
    RotationSequence,
};
use crate::tableau::StabilizerTableau;

/// CNOT layers `(control, target)` in application order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LadderSpec {
    pub layers: Vec<Vec<(usize, usize)>>,
}

impl LadderSpec {
    pub fn cnots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Forward ladder `Λ_{k+1,l}(X_{k,l})`; the layer for step pair `(0, 1)` acts first.
pub fn forward_ladder(num_main: usize, period: usize, steps: usize) -> LadderSpec {
    let layers = (0..steps.saturating_sub(1))
        .map(|k| {
            (0..period)
                .map(|l| (num_main + (k + 1) * period + l, num_main + k * period + l))
                .collect()
        })
        .collect();
    LadderSpec { layers }
}

/// Graph and VOPs of the ancilla-coupled resource together with its ladder.
pub fn ac_graph(cs: &ConjugatedSequence) -> Result<CompiledResource> {
    let n = cs.num_main;
    let (l, k) = (cs.period_len(), cs.steps);
    let first = periodic_graph(&ConjugatedSequence { steps: 1, ..cs.clone() })?;
    let a = anticommutation_matrices(cs).a;
    let mut g = GraphAdjacency::empty(n + l * k);
    for (u, v) in first.graph.edges() {
        g.set_edge(u, v, true);
    }
    for step in 1..k {
        let base = n + step * l;
        let prev = base - l;
        for p1 in 0..l {
            for p2 in 0..l {
                if !a.get(p1, p2) {
                    continue;
                }
                if p1 < p2 {
                    g.set_edge(base + p1, base + p2, true);
                }
                if p1 > p2 {
                    g.set_edge(prev + p1, base + p2, true);
                }
            }
        }
    }
    let mut vops = first.vops.as_slice().to_vec();
    vops.resize(n + l * k, crate::clifford::Clifford1::IDENTITY);
    Ok(CompiledResource {
        num_main: n,
        period: l,
        steps: k,
        graph: g,
        vops: VopLayer::from_vec(vops),
        ladder: Some(forward_ladder(n, l, k)),
    })
}

/// Checks that `Λ_FW 𝒞 |G⟩` has the stabilizer group of the circuit resource.
pub fn verify_preparation(res: &CompiledResource, seq: &RotationSequence, init: &StabilizerTableau) -> Result<bool> {
    res.physical_tableau()?.same_group(&physical_resource_tableau(seq, init)?)
}

/// Edges plus CNOTs added per extra Trotter step: `‖A‖₁ + L`.
pub fn entangling_cost_per_step(cs: &ConjugatedSequence) -> usize {
    anticommutation_matrices(cs).a.count_ones() + cs.period_len()
}

/// Circuit-depth bound for preparing the resource on a linear topology.
pub fn linear_depth_bound(num_main: usize, period: usize, steps: usize) -> usize {
    if steps <= 1 {
        2 * num_main + 2 * period + 2
    } else {
        2 * num_main + (steps - 1) * (4 * period + 3)
    }
}

/// Simultaneously active qubits with all-to-all connectivity.
pub fn active_count_ac(num_main: usize, period: usize) -> usize {
    num_main + period + 1
}

/// Simultaneously active qubits on a linear topology.
pub fn active_count_ac_linear(num_main: usize, period: usize) -> usize {
    num_main + 2 * period
}
