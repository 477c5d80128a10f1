//! The 24-element single-qubit Clifford group modulo phase.
//!
//! An element is identified by its conjugation action: the signed images of
//! `X` and `Z`. The index packs `(x letter, x sign, z letter choice, z sign)`
//! so that the identity has index 0.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::pauli::{phase_g, Pauli, PauliString};

/// Elementary gate used in decomposition words.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H,
    S,
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Clifford1(u8);

const LETTERS: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

fn letter_index(p: Pauli) -> usize {
    match p {
        Pauli::X => 0,
        Pauli::Y => 1,
        Pauli::Z => 2,
        Pauli::I => panic!("identity has no letter index"),
    }
}

impl Clifford1 {
    pub const COUNT: usize = 24;
    pub const IDENTITY: Clifford1 = Clifford1(0);

    pub fn from_index(i: usize) -> Option<Self> {
        (i < Self::COUNT).then_some(Clifford1(i as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = Clifford1> {
        (0..Self::COUNT as u8).map(Clifford1)
    }

    /// Element with `X ↦ (-1)^sx px` and `Z ↦ (-1)^sz pz`, if valid.
    pub fn from_images(px: Pauli, sx: bool, pz: Pauli, sz: bool) -> Option<Self> {
        if px == Pauli::I || pz == Pauli::I || px == pz {
            return None;
        }
        let a = letter_index(px);
        let b = letter_index(pz);
        let bi = if b == (a + 2) % 3 { 0 } else { 1 };
        Some(Clifford1((((a * 2 + sx as usize) * 2 + bi) * 2 + sz as usize) as u8))
    }

    fn decode(self) -> (Pauli, bool, Pauli, bool) {
        let i = self.0 as usize;
        let sz = i & 1 == 1;
        let bi = (i >> 1) & 1;
        let sx = (i >> 2) & 1 == 1;
        let a = i >> 3;
        let b = if bi == 0 { (a + 2) % 3 } else { (a + 1) % 3 };
        (LETTERS[a], sx, LETTERS[b], sz)
    }

    /// Signed image `C P C†` of a single-qubit Pauli letter as `(letter, phase exponent)`.
    pub fn image(self, p: Pauli) -> (Pauli, u8) {
        let (px, sx, pz, sz) = self.decode();
        match p {
            Pauli::I => (Pauli::I, 0),
            Pauli::X => (px, 2 * sx as u8),
            Pauli::Z => (pz, 2 * sz as u8),
            Pauli::Y => {
                // Y = i X Z
                let (x1, z1) = px.bits();
                let (x2, z2) = pz.bits();
                let g = phase_g(x1, z1, x2, z2) as i32;
                let r = (1 + g + 2 * (sx as i32 + sz as i32)).rem_euclid(4) as u8;
                (Pauli::from_bits(x1 ^ x2, z1 ^ z2), r)
            }
        }
    }

    /// Composition `self ∘ other`: `other` acts first.
    pub fn compose(self, other: Clifford1) -> Clifford1 {
        let (bx, rx) = other.image(Pauli::X);
        let (bz, rz) = other.image(Pauli::Z);
        let (cx, rx2) = self.image(bx);
        let (cz, rz2) = self.image(bz);
        let sx = (rx + rx2) & 3 == 2;
        let sz = (rz + rz2) & 3 == 2;
        Clifford1::from_images(cx, sx, cz, sz).expect("composition of Cliffords is Clifford")
    }

    /// Equality modulo a Pauli factor (same unsigned images of `X` and `Z`).
    pub fn eq_up_to_pauli(self, other: Clifford1) -> bool {
        self.image(Pauli::X).0 == other.image(Pauli::X).0 && self.image(Pauli::Z).0 == other.image(Pauli::Z).0
    }

    pub fn inverse(self) -> Clifford1 {
        Clifford1::all()
            .find(|c| c.compose(self) == Clifford1::IDENTITY)
            .expect("group element has an inverse")
    }

    pub fn pow(self, e: u32) -> Clifford1 {
        (0..e).fold(Clifford1::IDENTITY, |acc, _| acc.compose(self))
    }

    pub fn h() -> Self {
        Self::from_images(Pauli::Z, false, Pauli::X, false).unwrap()
    }

    pub fn s() -> Self {
        Self::from_images(Pauli::Y, false, Pauli::Z, false).unwrap()
    }

    pub fn sdg() -> Self {
        Self::from_images(Pauli::Y, true, Pauli::Z, false).unwrap()
    }

    /// `S^e` with `e` taken mod 4.
    pub fn s_power(e: i64) -> Self {
        Self::s().pow(e.rem_euclid(4) as u32)
    }

    /// `√(iX) = exp(iπX/4)`, the vertex factor of a local complementation.
    pub fn sqrt_ix() -> Self {
        Self::from_images(Pauli::X, false, Pauli::Y, false).unwrap()
    }

    /// `√(-iZ) = exp(-iπZ/4)`, the neighbour factor of a local complementation.
    pub fn sqrt_miz() -> Self {
        Self::s()
    }

    pub fn pauli(p: Pauli) -> Self {
        match p {
            Pauli::I => Self::IDENTITY,
            Pauli::X => Self::from_images(Pauli::X, false, Pauli::Z, true).unwrap(),
            Pauli::Y => Self::from_images(Pauli::X, true, Pauli::Z, true).unwrap(),
            Pauli::Z => Self::from_images(Pauli::X, true, Pauli::Z, false).unwrap(),
        }
    }

    pub fn gate(g: Gate) -> Self {
        match g {
            Gate::H => Self::h(),
            Gate::S => Self::s(),
        }
    }

    /// Conjugates qubit `q` of `p` by this element.
    pub fn conjugate(self, p: &PauliString, q: usize) -> PauliString {
        let (letter, r) = self.image(p.get(q));
        let mut out = p.clone();
        out.set(q, letter);
        out.add_phase(r);
        out
    }

    /// Shortest `H`/`S` word realising this element, in application order.
    pub fn decomposition(self) -> Vec<Gate> {
        decomposition_table().swap_remove(self.index())
    }

    pub fn name(self) -> String {
        let known = [
            (Clifford1::IDENTITY, "I"),
            (Clifford1::pauli(Pauli::X), "X"),
            (Clifford1::pauli(Pauli::Y), "Y"),
            (Clifford1::pauli(Pauli::Z), "Z"),
            (Clifford1::h(), "H"),
            (Clifford1::s(), "S"),
            (Clifford1::sdg(), "Sdg"),
            (Clifford1::sqrt_ix(), "SqrtX"),
            (Clifford1::sqrt_ix().inverse(), "SqrtXdg"),
        ];
        if let Some((_, n)) = known.iter().find(|(c, _)| *c == self) {
            return String::from(*n);
        }
        let mut s = String::new();
        for g in self.decomposition() {
            s.push(match g {
                Gate::H => 'H',
                Gate::S => 'S',
            });
        }
        s
    }
}

/// Breadth-first table of shortest words for every element.
pub fn decomposition_table() -> Vec<Vec<Gate>> {
    let mut words: Vec<Option<Vec<Gate>>> = vec![None; Clifford1::COUNT];
    words[0] = Some(Vec::new());
    let mut queue = VecDeque::from([Clifford1::IDENTITY]);
    while let Some(c) = queue.pop_front() {
        for g in [Gate::H, Gate::S] {
            let next = Clifford1::gate(g).compose(c);
            if words[next.index()].is_none() {
                let mut w = words[c.index()].clone().unwrap();
                w.push(g);
                words[next.index()] = Some(w);
                queue.push_back(next);
            }
        }
    }
    words.into_iter().map(|w| w.expect("H and S generate the group")).collect()
}

impl fmt::Debug for Clifford1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clifford1({}:{})", self.0, self.name())
    }
}

impl fmt::Display for Clifford1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
