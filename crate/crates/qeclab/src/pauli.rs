//! Phase-tracked Pauli operators on `n` qubits.
//!
//! An operator is stored as an X-mask, a Z-mask, and a power of `i`:
//!
//! ```text
//!     P = i^phase * (L_0 ⊗ L_1 ⊗ ... ⊗ L_{n-1})
//! ```
//!
//! where the letter on each site is the Hermitian Pauli selected by the bit
//! pair `(x_q, z_q)`: `00 -> I`, `10 -> X`, `01 -> Z`, `11 -> Y`. With `Y`
//! itself a canonical letter (not an `XZ` product), an operator is Hermitian
//! exactly when `phase` is even, and stabilizer rows always carry phase 0
//! (sign `+1`) or 2 (sign `-1`).

use crate::gf2::BitVector;
use std::fmt;

/// Letters used when rendering an operator.
const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];

/// A Pauli operator with a global `i^phase` prefactor, `phase` in `0..4`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    pub(crate) x: BitVector,
    pub(crate) z: BitVector,
    pub(crate) phase: u8,
}

impl PauliOperator {
    /// The identity on `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    /// Build from explicit masks and phase.
    ///
    /// Panics if the masks have different lengths.
    pub fn from_parts(x: BitVector, z: BitVector, phase: u8) -> Self {
        assert_eq!(x.len(), z.len(), "X and Z masks must have equal length");
        PauliOperator {
            x,
            z,
            phase: phase & 3,
        }
    }

    /// Single-site letter embedded in `n` qubits: `letter` is one of
    /// `'I' | 'X' | 'Y' | 'Z'`.
    pub fn single(n: usize, site: usize, letter: char) -> Self {
        let mut p = PauliOperator::identity(n);
        p.set_letter(site, letter);
        p
    }

    /// Parse `[sign]letters`, e.g. `-XIZY` or `+II`. A missing sign means `+`.
    pub fn from_letter_string(s: &str) -> Option<Self> {
        let (phase, body) = match s.as_bytes().first()? {
            b'+' => (0u8, &s[1..]),
            b'-' => (2u8, &s[1..]),
            _ => (0u8, s),
        };
        let mut p = PauliOperator::identity(body.chars().count());
        for (q, c) in body.chars().enumerate() {
            if !"IXYZ".contains(c) {
                return None;
            }
            p.set_letter(q, c);
        }
        p.phase = phase;
        Some(p)
    }

    /// Number of qubits the operator acts on.
    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    /// `i` exponent of the global prefactor, in `0..4`.
    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// X mask.
    #[inline]
    pub fn x_mask(&self) -> &BitVector {
        &self.x
    }

    /// Z mask.
    #[inline]
    pub fn z_mask(&self) -> &BitVector {
        &self.z
    }

    #[inline]
    pub fn x_bit(&self, q: usize) -> bool {
        self.x.get(q)
    }

    #[inline]
    pub fn z_bit(&self, q: usize) -> bool {
        self.z.get(q)
    }

    /// Letter index at site `q`: 0=I, 1=X, 2=Y, 3=Z.
    #[inline]
    pub fn letter_index(&self, q: usize) -> usize {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => 0,
            (true, false) => 1,
            (true, true) => 2,
            (false, true) => 3,
        }
    }

    /// Overwrite the letter at site `q`, leaving the global phase alone.
    pub fn set_letter(&mut self, q: usize, letter: char) {
        let (xb, zb) = match letter {
            'I' => (false, false),
            'X' => (true, false),
            'Y' => (true, true),
            'Z' => (false, true),
            _ => panic!("invalid Pauli letter {letter:?}"),
        };
        self.x.set(q, xb);
        self.z.set(q, zb);
    }

    /// Number of sites with a non-identity letter.
    pub fn weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// True when both masks are zero, regardless of phase.
    #[inline]
    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// True for a genuine `+I...I`.
    #[inline]
    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.is_identity_up_to_phase()
    }

    /// Hermitian operators have an even `i` exponent.
    #[inline]
    pub fn is_hermitian(&self) -> bool {
        self.phase & 1 == 0
    }

    /// Sign of a Hermitian operator: `+1` or `-1`.
    ///
    /// Panics when the operator is not Hermitian.
    pub fn sign(&self) -> i8 {
        match self.phase {
            0 => 1,
            2 => -1,
            _ => panic!("sign of non-Hermitian operator (phase {})", self.phase),
        }
    }

    /// Multiply the global prefactor by `-1`.
    #[inline]
    pub fn negate(&mut self) {
        self.phase = (self.phase + 2) & 3;
    }

    /// Symplectic product `[[a, b]]`: 0 when the operators commute, 1 when
    /// they anticommute. Phases never matter here.
    pub fn symplectic_product(&self, other: &PauliOperator) -> u8 {
        assert_eq!(self.n_qubits(), other.n_qubits(), "qubit count mismatch");
        ((self.x.and_count(&other.z) + self.z.and_count(&other.x)) & 1) as u8
    }

    /// True when `self` and `other` commute.
    #[inline]
    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        self.symplectic_product(other) == 0
    }

    /// In-place product `self <- self * other`, tracking the exact phase.
    ///
    /// With per-site Hermitian letters, the `i` exponent of the product is
    ///
    /// ```text
    /// p_a + p_b + |x_a & z_a| + |x_b & z_b| + 2|z_a & x_b|
    ///           - |(x_a ^ x_b) & (z_a ^ z_b)|   (mod 4)
    /// ```
    ///
    /// The popcount terms convert each letter to `XZ` normal form, commute
    /// the factors into place, and convert back.
    pub fn mul_assign(&mut self, other: &PauliOperator) {
        assert_eq!(self.n_qubits(), other.n_qubits(), "qubit count mismatch");
        let mut acc: i64 = self.phase as i64 + other.phase as i64;
        acc += self.x.and_count(&self.z) as i64;
        acc += other.x.and_count(&other.z) as i64;
        acc += 2 * self.z.and_count(&other.x) as i64;
        let mut cross = 0i64;
        for ((xa, za), (xb, zb)) in self
            .x
            .words()
            .iter()
            .zip(self.z.words())
            .zip(other.x.words().iter().zip(other.z.words()))
        {
            cross += ((xa ^ xb) & (za ^ zb)).count_ones() as i64;
        }
        acc -= cross;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
        self.phase = (acc.rem_euclid(4)) as u8;
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &PauliOperator) -> PauliOperator {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    /// Render as `[sign]letters`; non-Hermitian phases render as `+i`/`-i`.
    pub fn to_letter_string(&self) -> String {
        let prefix = match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            3 => "-i",
            _ => unreachable!(),
        };
        let mut s = String::with_capacity(prefix.len() + self.n_qubits());
        s.push_str(prefix);
        for q in 0..self.n_qubits() {
            s.push(LETTERS[self.letter_index(q)]);
        }
        s
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_letter_string())
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_letter_string())
    }
}
