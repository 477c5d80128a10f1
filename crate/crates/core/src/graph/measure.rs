use alloc::vec::Vec;

use super::{local_complement_with_vops, GraphAdjacency, VopLayer};
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};

/// Probability law of a single-qubit Pauli measurement outcome.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OutcomeLaw {
    Uniform,
    Deterministic(bool),
}

/// Result of measuring one vertex of `layer · |G⟩`.
#[derive(Clone, Debug)]
pub struct PauliMeasurement {
    /// Graph on the remaining `n - 1` vertices (order preserved).
    pub graph: GraphAdjacency,
    pub layer: VopLayer,
    /// Pauli byproduct in the physical frame for outcome bit 0 and 1:
    /// the post-measurement state is `byproducts[s] · layer · |graph⟩`.
    pub byproducts: [PauliString; 2],
    pub law: OutcomeLaw,
    /// Vertices (pre-deletion labels) at which local complementations were applied.
    pub lc_moves: Vec<usize>,
}

/// Measures the physical Pauli `basis` on vertex `v` of `layer · |g⟩`.
///
/// The basis is pulled back through `C_v`; `Y` reduces to `Z` by `LC_v`, and `X`
/// by `LC_v ∘ LC_w ∘ LC_v` with `w = special` or the lowest-index neighbour.
pub fn measure_pauli(
    g: &GraphAdjacency,
    layer: &VopLayer,
    v: usize,
    basis: Pauli,
    special: Option<usize>,
) -> Result<PauliMeasurement> {
    let n = g.len();
    if v >= n {
        return Err(Error::Vertex(v));
    }
    if layer.len() != n {
        return Err(Error::Length { expected: n, found: layer.len() });
    }
    if basis == Pauli::I {
        return Err(Error::TrivialObservable);
    }
    if let Some(w) = special {
        if w >= n || !g.has_edge(v, w) {
            return Err(Error::NotAdjacent { v, special: w });
        }
    }

    let mut g = g.clone();
    let mut layer = layer.clone();
    let mut lc_moves = Vec::new();
    let (sigma, deterministic) = loop {
        let (letter, r) = layer.get(v).inverse().image(basis);
        match letter {
            Pauli::Z => break (r == 2, false),
            Pauli::Y => {
                local_complement_with_vops(&mut g, &mut layer, v)?;
                lc_moves.push(v);
            }
            Pauli::X => match special.or_else(|| g.neighbors(v).first_one()) {
                Some(w) => {
                    for u in [v, w, v] {
                        local_complement_with_vops(&mut g, &mut layer, u)?;
                        lc_moves.push(u);
                    }
                }
                None => break (r == 2, true),
            },
            Pauli::I => unreachable!("Clifford images of Paulis are non-trivial"),
        }
        debug_assert!(lc_moves.len() <= 4);
    };

    let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    let mut bare = PauliString::identity(n - 1);
    if !deterministic {
        for (i, &u) in keep.iter().enumerate() {
            if g.has_edge(v, u) {
                bare.set(i, layer.physical_letter(u, Pauli::Z));
            }
        }
    }
    let post_graph = g.delete_vertex(v);
    layer.remove(v);
    let identity = PauliString::identity(n - 1);
    let (law, byproducts) = if deterministic {
        (OutcomeLaw::Deterministic(sigma), [identity.clone(), identity])
    } else if sigma {
        (OutcomeLaw::Uniform, [bare, identity])
    } else {
        (OutcomeLaw::Uniform, [identity, bare])
    };
    Ok(PauliMeasurement { graph: post_graph, layer, byproducts, law, lc_moves })
}
