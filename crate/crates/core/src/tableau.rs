//! Stabilizer tableaus and their canonical (RREF) form.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::pauli::PauliString;

/// A list of commuting Hermitian Pauli generators on `n` qubits.
#[derive(Clone, PartialEq, Eq)]
pub struct StabilizerTableau {
    n: usize,
    rows: Vec<PauliString>,
}

impl StabilizerTableau {
    /// Validates qubit counts, real phases and pairwise commutation.
    pub fn new(n: usize, rows: Vec<PauliString>) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.num_qubits() != n {
                return Err(Error::Length { expected: n, found: r.num_qubits() });
            }
            if !r.is_hermitian() {
                return Err(Error::ImaginaryPhase(i));
            }
        }
        for a in 0..rows.len() {
            for b in a + 1..rows.len() {
                if !rows[a].commutes(&rows[b]) {
                    return Err(Error::Anticommuting { a, b });
                }
            }
        }
        Ok(Self { n, rows })
    }

    /// Parses whitespace-separated Pauli strings.
    pub fn parse(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<PauliString> = rows.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let n = parsed.first().map_or(0, PauliString::num_qubits);
        Self::new(n, parsed)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<PauliString>) -> Self {
        Self { n, rows }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[PauliString] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<PauliString> {
        self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduced row-echelon form over the column order `x_0..x_{n-1}, z_0..z_{n-1}`.
    ///
    /// Row products keep exact phases, so two tableaus generate the same
    /// stabilizer group iff their canonical forms are equal.
    pub fn canonical_form(&self) -> Result<StabilizerTableau> {
        let n = self.n;
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..2 * n {
            let bit = |p: &PauliString| if col < n { p.x().get(col) } else { p.z().get(col - n) };
            let Some(p) = (rank..rows.len()).find(|&r| bit(&rows[r])) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for r in 0..rows.len() {
                if r != rank && bit(&rows[r]) {
                    rows[r] = rows[r].mul(&pivot);
                }
            }
            rank += 1;
        }
        if rank < rows.len() {
            return Err(Error::DependentRows);
        }
        Ok(StabilizerTableau { n, rows })
    }

    /// True when both tableaus generate the same stabilizer group.
    pub fn same_group(&self, other: &StabilizerTableau) -> Result<bool> {
        Ok(self.n == other.n && self.canonical_form()? == other.canonical_form()?)
    }

    /// For each Pauli, `Some(negative)` when `±p` lies in the group, else `None`.
    ///
    /// The phase of `p` is ignored; the result gives the sign the group assigns.
    pub fn signs_in_group(&self, paulis: &[PauliString]) -> Result<Vec<Option<bool>>> {
        let n = self.n;
        let canon = self.canonical_form()?;
        let pivot = |r: &PauliString| r.x().first_one().or_else(|| r.z().first_one().map(|q| q + n));
        let pivots: Vec<usize> = canon.rows.iter().map(|r| pivot(r).expect("independent rows are nontrivial")).collect();
        Ok(paulis
            .iter()
            .map(|p| {
                let mut acc = p.unsigned();
                for (row, &col) in canon.rows.iter().zip(&pivots) {
                    let set = if col < n { acc.x().get(col) } else { acc.z().get(col - n) };
                    if set {
                        acc = acc.mul(row);
                    }
                }
                (acc.is_identity() && acc.phase() % 2 == 0).then_some(acc.phase() == 2)
            })
            .collect())
    }

    /// Checks that the tableau specifies a unique state.
    pub fn require_full_rank(&self) -> Result<()> {
        if self.rows.len() != self.n {
            return Err(Error::NotFullRank { rows: self.rows.len(), qubits: self.n });
        }
        self.canonical_form().map(|_| ())
    }

    /// Conjugates every row by `CNOT(c → t)`.
    pub fn conjugate_cnot(&self, c: usize, t: usize) -> Result<StabilizerTableau> {
        let rows = self.rows.iter().map(|r| r.conjugate_cnot(c, t)).collect::<Result<_>>()?;
        Ok(StabilizerTableau { n: self.n, rows })
    }

    /// Tableau of `|0…0⟩`.
    pub fn zero_state(n: usize) -> Self {
        let rows = (0..n).map(|q| PauliString::single(n, q, crate::pauli::Pauli::Z)).collect();
        Self { n, rows }
    }

    /// Tableau of `|+…+⟩`.
    pub fn plus_state(n: usize) -> Self {
        let rows = (0..n).map(|q| PauliString::single(n, q, crate::pauli::Pauli::X)).collect();
        Self { n, rows }
    }
}

impl fmt::Debug for StabilizerTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommuting_rows_rejected() {
        assert_eq!(StabilizerTableau::parse(&["XI", "ZI"]).unwrap_err(), Error::Anticommuting { a: 0, b: 1 });
    }

    #[test]
    fn canonical_form_identifies_equal_groups() {
        let a = StabilizerTableau::parse(&["XX", "ZZ"]).unwrap();
        let b = StabilizerTableau::parse(&["-YY", "XX"]).unwrap();
        assert!(a.same_group(&b).unwrap());
        let c = StabilizerTableau::parse(&["XX", "-ZZ"]).unwrap();
        assert!(!a.same_group(&c).unwrap());
    }

    #[test]
    fn dependent_rows_detected() {
        let t = StabilizerTableau::parse(&["XX", "ZZ", "-YY"]).unwrap();
        assert_eq!(t.canonical_form().unwrap_err(), Error::DependentRows);
    }

    #[test]
    fn signs_in_bell_group() {
        let t = StabilizerTableau::parse(&["XX", "ZZ"]).unwrap();
        let q: alloc::vec::Vec<PauliString> = ["YY", "-XX", "XZ", "II"].iter().map(|p| p.parse().unwrap()).collect();
        assert_eq!(t.signs_in_group(&q).unwrap(), alloc::vec![Some(true), Some(false), None, Some(false)]);
    }
}
