//! Binary-symplectic Pauli strings with exact phase tracking.
//!
//! A string on `n` qubits is stored as two bit rows `x`, `z` and a phase
//! exponent `r` (mod 4), representing `i^r (P_0 ⊗ P_1 ⊗ … ⊗ P_{n-1})` where
//! `(x, z) = (0,0), (0,1), (1,0), (1,1)` encode `I, Z, X, Y` respectively.
//! `Y` is the Hermitian Pauli matrix, not `XZ`.
//!
//! Text form lists qubit 0 first (the most significant qubit of the dense
//! state index), with an optional `+`, `-`, `i`, `-i` prefix.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// Single-qubit Pauli label.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (false, true) => Pauli::Z,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::Z => (false, true),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(ch: char) -> Option<Self> {
        match ch {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Phase exponent `g` with `P(x1,z1) · P(x2,z2) = i^g P(x1^x2, z1^z2)`.
#[inline]
pub fn phase_g(x1: bool, z1: bool, x2: bool, z2: bool) -> i8 {
    let (x2i, z2i) = (x2 as i8, z2 as i8);
    match (x1, z1) {
        (false, false) => 0,
        (true, true) => z2i - x2i,
        (true, false) => z2i * (2 * x2i - 1),
        (false, true) => x2i * (1 - 2 * z2i),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
    r: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        Self { x: BitVec::zeros(n), z: BitVec::zeros(n), r: 0 }
    }

    pub fn from_parts(x: BitVec, z: BitVec, r: u8) -> Self {
        assert_eq!(x.len(), z.len(), "x/z length mismatch");
        Self { x, z, r: r & 3 }
    }

    pub fn single(n: usize, q: usize, p: Pauli) -> Self {
        let mut s = Self::identity(n);
        s.set(q, p);
        s
    }

    /// Builds `⊗_{q ∈ support} p`.
    pub fn uniform(n: usize, support: impl IntoIterator<Item = usize>, p: Pauli) -> Self {
        let mut s = Self::identity(n);
        for q in support {
            s.set(q, p);
        }
        s
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitVec {
        &self.x
    }

    pub fn z(&self) -> &BitVec {
        &self.z
    }

    /// Phase exponent `r` of `i^r`.
    pub fn phase(&self) -> u8 {
        self.r
    }

    pub fn set_phase(&mut self, r: u8) {
        self.r = r & 3;
    }

    pub fn add_phase(&mut self, r: u8) {
        self.r = (self.r + r) & 3;
    }

    /// True when the overall sign is `-1` (phase exponent 2).
    pub fn is_negative(&self) -> bool {
        self.r == 2
    }

    pub fn is_hermitian(&self) -> bool {
        self.r & 1 == 0
    }

    pub fn get(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn is_identity(&self) -> bool {
        !self.x.any() && !self.z.any()
    }

    pub fn weight(&self) -> usize {
        let mut s = self.x.clone();
        s.or_assign(&self.z);
        s.count_ones()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.num_qubits()).filter(|&q| self.x.get(q) || self.z.get(q)).collect()
    }

    pub fn count_y(&self) -> usize {
        self.x.and_count(&self.z)
    }

    /// Same Pauli letters with phase exponent zero.
    pub fn unsigned(&self) -> Self {
        Self { x: self.x.clone(), z: self.z.clone(), r: 0 }
    }

    pub fn commutes(&self, other: &PauliString) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// Product `self · other` with exact phase.
    pub fn mul(&self, other: &PauliString) -> PauliString {
        assert_eq!(self.num_qubits(), other.num_qubits(), "qubit count mismatch");
        let mut g: i32 = 0;
        let mut support = self.x.clone();
        support.or_assign(&self.z);
        for q in support.ones() {
            g += phase_g(self.x.get(q), self.z.get(q), other.x.get(q), other.z.get(q)) as i32;
        }
        let mut x = self.x.clone();
        x.xor_assign(&other.x);
        let mut z = self.z.clone();
        z.xor_assign(&other.z);
        let r = (self.r as i32 + other.r as i32 + g).rem_euclid(4) as u8;
        PauliString { x, z, r }
    }

    pub fn mul_assign_right(&mut self, other: &PauliString) {
        *self = self.mul(other);
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        PauliString {
            x: self.x.concat(&other.x),
            z: self.z.concat(&other.z),
            r: (self.r + other.r) & 3,
        }
    }

    /// Restriction to qubits `[start, start + len)`, phase dropped.
    pub fn slice(&self, start: usize, len: usize) -> PauliString {
        PauliString { x: self.x.slice(start, len), z: self.z.slice(start, len), r: 0 }
    }

    /// Conjugation `CNOT · P · CNOT†` with control `c`, target `t`.
    pub fn conjugate_cnot(&self, c: usize, t: usize) -> Result<PauliString> {
        let n = self.num_qubits();
        for q in [c, t] {
            if q >= n {
                return Err(Error::QubitRange { index: q, n });
            }
        }
        if c == t {
            return Err(Error::SameQubit(c));
        }
        let (xc, zc, xt, zt) = (self.x.get(c), self.z.get(c), self.x.get(t), self.z.get(t));
        let mut out = self.clone();
        // sign rule for Hermitian Pauli letters
        if xc && zt && (xt == zc) {
            out.r = (out.r + 2) & 3;
        }
        out.x.set(t, xt ^ xc);
        out.z.set(c, zc ^ zt);
        Ok(out)
    }

    pub fn to_string_unsigned(&self) -> String {
        (0..self.num_qubits()).map(|q| self.get(q).as_char()).collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.r {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}{}", self.to_string_unsigned())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (r, body, offset) = if let Some(rest) = s.strip_prefix("+i") {
            (1, rest, 2)
        } else if let Some(rest) = s.strip_prefix("-i") {
            (3, rest, 2)
        } else if let Some(rest) = s.strip_prefix('i') {
            (1, rest, 1)
        } else if let Some(rest) = s.strip_prefix('-') {
            (2, rest, 1)
        } else if let Some(rest) = s.strip_prefix('+') {
            (0, rest, 1)
        } else {
            (0, s, 0)
        };
        let n = body.chars().count();
        let mut p = PauliString::identity(n);
        for (q, ch) in body.chars().enumerate() {
            let letter = Pauli::from_char(ch).ok_or(Error::PauliChar { ch, pos: q + offset })?;
            p.set(q, letter);
        }
        p.r = r;
        Ok(p)
    }
}
