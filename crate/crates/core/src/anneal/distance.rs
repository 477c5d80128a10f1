use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::GraphAdjacency;

/// Pairwise edge weights over the `N + M` resource vertices (main first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    weights: Vec<u64>,
    group_weights: Vec<Vec<u64>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.weights[a * self.n + b]
    }

    /// The `(J+1) × (J+1)` group-level weights; the last group is the main register.
    pub fn group_weights(&self) -> &[Vec<u64>] {
        &self.group_weights
    }
}

/// Group-level link targets: group `j` links to `l + 1` once the groups
/// `j+1..=l` hold at least `n_targ` qubits. No link when the counter never
/// reaches the target.
fn links(sizes: &[usize], n_targ: usize) -> Vec<Option<usize>> {
    let j_count = sizes.len();
    let mut out = vec![None; j_count + 1];
    for j in 0..j_count.saturating_sub(1) {
        let mut count = 0;
        for (l, &size) in sizes.iter().enumerate().skip(j + 1) {
            count += size;
            if count >= n_targ {
                out[j] = Some(l + 1);
                break;
            }
        }
    }
    out
}

/// Distance-weight matrix over measurement groups `A_1..A_J` plus the main register.
///
/// Past the link target of group `i`, each further group adds one unit of
/// distance; weights are `2^distance`, expanded to vertices by group membership.
pub fn build_distance_matrix(
    group_sizes: &[usize],
    num_main: usize,
    n_targ: usize,
    main_edge_override: bool,
) -> Result<DistanceMatrix> {
    if group_sizes.is_empty() || group_sizes.contains(&0) {
        return Err(Error::AnnealParameter("groups must be nonempty"));
    }
    if n_targ == 0 {
        return Err(Error::AnnealParameter("target memory must be positive"));
    }
    let j_count = group_sizes.len();
    let size = j_count + 1;
    let mut dist = vec![vec![0u32; size]; size];
    for (i, link) in links(group_sizes, n_targ).into_iter().enumerate() {
        if let Some(t) = link {
            for (j, d) in dist[i].iter_mut().enumerate().skip(t) {
                *d = (j - t + 1) as u32;
            }
        }
    }
    let mut group_weights = vec![vec![0u64; size]; size];
    for i in 0..size {
        for j in 0..size {
            let d = dist[i][j] + dist[j][i];
            group_weights[i][j] = 1u64.checked_shl(d).filter(|_| d < 62).ok_or(Error::DistanceOverflow(d))?;
        }
    }
    if main_edge_override {
        for j in 0..j_count {
            group_weights[j][j_count] = 1;
            group_weights[j_count][j] = 1;
        }
    }

    let mut group_of = vec![j_count; num_main];
    for (g, &s) in group_sizes.iter().enumerate() {
        group_of.extend(core::iter::repeat_n(g, s));
    }
    let n = group_of.len();
    let mut weights = vec![0u64; n * n];
    for a in 0..n {
        for b in 0..n {
            weights[a * n + b] = group_weights[group_of[a]][group_of[b]];
        }
    }
    Ok(DistanceMatrix { n, weights, group_weights })
}

/// `W = Σ_{i<j} Γ_ij D_ij`.
pub fn weight(g: &GraphAdjacency, d: &DistanceMatrix) -> u64 {
    g.edges().into_iter().map(|(a, b)| d.get(a, b)).sum()
}
