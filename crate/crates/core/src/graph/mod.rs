//! Graph states, vertex-operator layers and local complementation.

mod activity;
mod convert;
mod measure;

pub use activity::{active_profile, storage_profile, ActiveProfile, MeasurementOrder, StorageProfile};
pub use convert::graph_from_tableau;
pub use measure::{measure_pauli, OutcomeLaw, PauliMeasurement};

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{BitMatrix, BitVec};
use crate::clifford::Clifford1;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};
use crate::tableau::StabilizerTableau;

/// Simple undirected graph stored as a symmetric adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GraphAdjacency {
    adj: Vec<BitVec>,
}

impl GraphAdjacency {
    pub fn empty(n: usize) -> Self {
        Self { adj: alloc::vec![BitVec::zeros(n); n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            if a >= n {
                return Err(Error::Vertex(a));
            }
            if b >= n {
                return Err(Error::Vertex(b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    pub fn from_matrix(m: &BitMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Length { expected: m.rows(), found: m.cols() });
        }
        for r in 0..m.rows() {
            if m.get(r, r) {
                return Err(Error::SelfLoop(r));
            }
            for c in m.row(r).ones() {
                if !m.get(c, r) {
                    return Err(Error::Asymmetric(r, c));
                }
            }
        }
        Ok(Self { adj: (0..m.rows()).map(|r| m.row(r).clone()).collect() })
    }

    pub fn matrix(&self) -> BitMatrix {
        BitMatrix::from_rows(self.len(), self.adj.clone())
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitVec {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    pub fn set_edge(&mut self, a: usize, b: usize, on: bool) {
        debug_assert_ne!(a, b);
        self.adj[a].set(b, on);
        self.adj[b].set(a, on);
    }

    pub fn toggle_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.adj[a].flip(b);
        self.adj[b].flip(a);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(BitVec::count_ones).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            out.extend(self.adj[a].ones().filter(|&b| b > a).map(|b| (a, b)));
        }
        out
    }

    /// Local complementation at `v`: complements the subgraph induced on `N(v)`.
    pub fn local_complement(&mut self, v: usize) -> Result<()> {
        if v >= self.len() {
            return Err(Error::Vertex(v));
        }
        let nbr = self.adj[v].clone();
        for u in nbr.ones() {
            self.adj[u].xor_assign(&nbr);
            self.adj[u].flip(u);
        }
        Ok(())
    }

    /// Graph with vertex `v` removed; later vertices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> GraphAdjacency {
        let keep: Vec<usize> = (0..self.len()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> GraphAdjacency {
        let mut g = GraphAdjacency::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Stabilizer generator `K_v = X_v ∏_{w ∈ N(v)} Z_w`.
    pub fn stabilizer(&self, v: usize) -> PauliString {
        PauliString::from_parts(BitVec::from_indices(self.len(), [v]), self.adj[v].clone(), 0)
    }

    pub fn tableau(&self) -> StabilizerTableau {
        let rows = (0..self.len()).map(|v| self.stabilizer(v)).collect();
        StabilizerTableau::from_rows_unchecked(self.len(), rows)
    }

    /// Sign bit of `∏_{v ∈ subset} K_v` relative to the unsigned Pauli string.
    ///
    /// Equals the parity of `Σ_v ⌊deg_S(v)/2⌋` over the induced subgraph on `S`.
    pub fn stab_product_phase(&self, subset: &[usize]) -> bool {
        let mask = BitVec::from_indices(self.len(), subset.iter().copied());
        subset.iter().fold(false, |acc, &v| acc ^ ((self.adj[v].and_count(&mask) / 2) % 2 == 1))
    }
}

impl fmt::Debug for GraphAdjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.len(), self.edges())
    }
}

/// One single-qubit Clifford per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VopLayer {
    vops: Vec<Clifford1>,
}

impl VopLayer {
    pub fn identity(n: usize) -> Self {
        Self { vops: alloc::vec![Clifford1::IDENTITY; n] }
    }

    pub fn from_vec(vops: Vec<Clifford1>) -> Self {
        Self { vops }
    }

    pub fn len(&self) -> usize {
        self.vops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vops.is_empty()
    }

    pub fn get(&self, v: usize) -> Clifford1 {
        self.vops[v]
    }

    pub fn set(&mut self, v: usize, c: Clifford1) {
        self.vops[v] = c;
    }

    pub fn as_slice(&self) -> &[Clifford1] {
        &self.vops
    }

    /// Right-multiplies vertex `v`: `C_v ← C_v ∘ c`.
    pub fn apply_inner(&mut self, v: usize, c: Clifford1) {
        self.vops[v] = self.vops[v].compose(c);
    }

    pub fn inverse(&self) -> VopLayer {
        Self { vops: self.vops.iter().map(|c| c.inverse()).collect() }
    }

    pub fn concat(&self, other: &VopLayer) -> VopLayer {
        let mut vops = self.vops.clone();
        vops.extend_from_slice(&other.vops);
        Self { vops }
    }

    pub fn remove(&mut self, v: usize) {
        self.vops.remove(v);
    }

    pub fn is_identity(&self) -> bool {
        self.vops.iter().all(|&c| c == Clifford1::IDENTITY)
    }

    /// `𝒞 P 𝒞†` with `𝒞 = ⊗_v C_v`.
    pub fn conjugate(&self, p: &PauliString) -> PauliString {
        let mut out = p.clone();
        for q in p.support() {
            out = self.vops[q].conjugate(&out, q);
        }
        out
    }

    /// Physical frame image of `Z` on vertex `v` (unsigned).
    pub fn physical_letter(&self, v: usize, bare: Pauli) -> Pauli {
        self.vops[v].image(bare).0
    }
}

impl fmt::Debug for VopLayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vops.iter().map(|c| c.name())).finish()
    }
}

/// Folds `|G⟩ = U_LC(v) |LC_v(G)⟩` into `layer`:
/// `C_v ← C_v ∘ √(iX)` and `C_w ← C_w ∘ √(-iZ)` for `w ∈ N(v)`.
pub fn lc_update_vops(layer: &mut VopLayer, g: &GraphAdjacency, v: usize) {
    layer.apply_inner(v, Clifford1::sqrt_ix());
    for w in g.neighbors(v).ones() {
        layer.apply_inner(w, Clifford1::sqrt_miz());
    }
}

/// Local complementation of `g` at `v` that keeps `layer · |g⟩` invariant.
pub fn local_complement_with_vops(g: &mut GraphAdjacency, layer: &mut VopLayer, v: usize) -> Result<()> {
    if v >= g.len() {
        return Err(Error::Vertex(v));
    }
    lc_update_vops(layer, g, v);
    g.local_complement(v)
}

/// Stabilizer tableau of `layer · |g⟩`.
pub fn decorated_tableau(g: &GraphAdjacency, layer: &VopLayer) -> StabilizerTableau {
    let rows = (0..g.len()).map(|v| layer.conjugate(&g.stabilizer(v))).collect();
    StabilizerTableau::from_rows_unchecked(g.len(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lc_complements_neighbourhood() {
        let mut g = GraphAdjacency::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        g.local_complement(0).unwrap();
        assert_eq!(g.edges(), alloc::vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn path_product_phase() {
        let g = GraphAdjacency::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(g.stab_product_phase(&[0, 1, 2]));
        let p = g.stabilizer(0).mul(&g.stabilizer(1)).mul(&g.stabilizer(2));
        assert_eq!(alloc::format!("{p}"), "-YXY");
    }
}
