use alloc::vec;
use alloc::vec::Vec;

use super::GraphAdjacency;
use crate::error::{Error, Result};

/// Partition of the vertices into ordered measurement rounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasurementOrder {
    rounds: Vec<Vec<usize>>,
    round_of: Vec<usize>,
}

impl MeasurementOrder {
    pub fn new(n: usize, rounds: Vec<Vec<usize>>) -> Result<Self> {
        let mut round_of = vec![usize::MAX; n];
        for (i, r) in rounds.iter().enumerate() {
            for &v in r {
                if v >= n || round_of[v] != usize::MAX {
                    return Err(Error::Order(v));
                }
                round_of[v] = i;
            }
        }
        if let Some(v) = round_of.iter().position(|&r| r == usize::MAX) {
            return Err(Error::Order(v));
        }
        Ok(Self { rounds, round_of })
    }

    pub fn rounds(&self) -> &[Vec<usize>] {
        &self.rounds
    }

    pub fn round_of(&self, v: usize) -> usize {
        self.round_of[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.round_of.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveProfile {
    pub per_round: Vec<usize>,
    pub max: usize,
}

/// `|⋃_{v ∈ V_i} Act_v|` per round, with `Act_v = {v} ∪ {w ∈ N(v) : w measured later}`.
pub fn active_profile(g: &GraphAdjacency, order: &MeasurementOrder) -> Result<ActiveProfile> {
    if order.num_vertices() != g.len() {
        return Err(Error::Length { expected: g.len(), found: order.num_vertices() });
    }
    let mut per_round = Vec::with_capacity(order.rounds().len());
    for (i, round) in order.rounds().iter().enumerate() {
        let mut act = crate::bits::BitVec::zeros(g.len());
        for &v in round {
            act.set(v, true);
            for w in g.neighbors(v).ones() {
                if order.round_of(w) > i {
                    act.set(w, true);
                }
            }
        }
        per_round.push(act.count_ones());
    }
    let max = per_round.iter().copied().max().unwrap_or(0);
    Ok(ActiveProfile { per_round, max })
}

/// Qubit lifetimes: a vertex is alive from the first round in which it or a
/// neighbour is measured until its own round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StorageProfile {
    /// Alive qubits during each round.
    pub alive: Vec<usize>,
    /// Qubits carried across the boundary after each round (last entry is 0).
    pub carried: Vec<usize>,
}

impl StorageProfile {
    pub fn max_alive(&self) -> usize {
        self.alive.iter().copied().max().unwrap_or(0)
    }

    /// Largest carried count over boundaries strictly before round `last`.
    pub fn max_carried_before(&self, last: usize) -> usize {
        self.carried.iter().take(last.saturating_sub(1)).copied().max().unwrap_or(0)
    }
}

pub fn storage_profile(g: &GraphAdjacency, order: &MeasurementOrder) -> Result<StorageProfile> {
    if order.num_vertices() != g.len() {
        return Err(Error::Length { expected: g.len(), found: order.num_vertices() });
    }
    let t = order.rounds().len();
    let mut alive = vec![0; t];
    let mut carried = vec![0; t];
    for v in 0..g.len() {
        let own = order.round_of(v);
        let first = g.neighbors(v).ones().map(|w| order.round_of(w)).fold(own, usize::min);
        for r in first..=own {
            alive[r] += 1;
        }
        for c in carried.iter_mut().take(own).skip(first) {
            *c += 1;
        }
    }
    Ok(StorageProfile { alive, carried })
}
