use alloc::vec::Vec;

use super::{GraphAdjacency, VopLayer};
use crate::bits::BitMatrix;
use crate::clifford::Clifford1;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};
use crate::tableau::StabilizerTableau;

struct Work {
    rows: Vec<PauliString>,
    applied: Vec<Clifford1>,
}

impl Work {
    fn apply(&mut self, q: usize, c: Clifford1) {
        for r in &mut self.rows {
            *r = c.conjugate(r, q);
        }
        self.applied[q] = c.compose(self.applied[q]);
    }

    /// Eliminates on the x (or z) columns of rows `start..`; returns pivot columns.
    fn eliminate(&mut self, start: usize, use_x: bool, jordan: bool) -> Vec<usize> {
        let n = self.applied.len();
        let bit = |p: &PauliString, c: usize| if use_x { p.x().get(c) } else { p.z().get(c) };
        let mut rank = start;
        let mut pivots = Vec::new();
        for c in 0..n {
            let Some(p) = (rank..self.rows.len()).find(|&r| bit(&self.rows[r], c)) else { continue };
            self.rows.swap(rank, p);
            let pivot = self.rows[rank].clone();
            let lo = if jordan { 0 } else { rank + 1 };
            for r in lo..self.rows.len() {
                if r != rank && bit(&self.rows[r], c) {
                    self.rows[r] = self.rows[r].mul(&pivot);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }
}

/// Writes a stabilizer state as `𝒞 |G⟩` with a local Clifford layer `𝒞`.
pub fn graph_from_tableau(t: &StabilizerTableau) -> Result<(GraphAdjacency, VopLayer)> {
    t.require_full_rank()?;
    let n = t.num_qubits();
    let mut w = Work { rows: t.rows().to_vec(), applied: alloc::vec![Clifford1::IDENTITY; n] };

    let k = w.eliminate(0, true, false).len();
    let z_pivots = w.eliminate(k, false, false);
    for q in z_pivots {
        w.apply(q, Clifford1::h());
    }
    if w.eliminate(0, true, true).len() != n {
        return Err(Error::DependentRows);
    }
    for v in 0..n {
        if w.rows[v].z().get(v) {
            w.apply(v, Clifford1::sdg());
        }
    }
    for v in 0..n {
        if w.rows[v].is_negative() {
            w.apply(v, Clifford1::pauli(Pauli::Z));
        }
    }

    let mut gamma = BitMatrix::zeros(n, n);
    for v in 0..n {
        debug_assert!(w.rows[v].x().get(v) && w.rows[v].x().count_ones() == 1);
        debug_assert_eq!(w.rows[v].phase(), 0);
        *gamma.row_mut(v) = w.rows[v].z().clone();
    }
    let g = GraphAdjacency::from_matrix(&gamma)?;
    let layer = VopLayer::from_vec(w.applied.iter().map(|c| c.inverse()).collect());
    Ok((g, layer))
}
