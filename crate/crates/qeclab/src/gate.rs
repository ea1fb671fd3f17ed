//! Two-qubit Clifford gates as Pauli conjugation tables.
//!
//! A gate is stored extensionally: for each of the 16 local Paulis on the
//! qubit pair it acts on, the table holds the conjugated image `U P U†`
//! (letter bits plus an `i` exponent). Applying a gate to a long operator is
//! then a single table lookup per tableau row, which keeps random-circuit
//! evolution cheap.
//!
//! Bit layout of a local Pauli, matching [`PauliOperator`]'s convention on
//! two sites: bit 0 = `x_a`, bit 1 = `z_a`, bit 2 = `x_b`, bit 3 = `z_b`.

use crate::pauli::PauliOperator;
use std::fmt;

/// A Pauli on a qubit pair: 4 letter bits plus a global `i^phase`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalPauli {
    bits: u8,
    phase: u8,
}

#[inline]
fn x2(bits: u8) -> u8 {
    (bits & 1) | ((bits >> 1) & 2)
}

#[inline]
fn z2(bits: u8) -> u8 {
    ((bits >> 1) & 1) | ((bits >> 2) & 2)
}

impl LocalPauli {
    /// Identity with phase 0.
    pub const fn identity() -> Self {
        LocalPauli { bits: 0, phase: 0 }
    }

    /// Construct from raw bits and phase.
    pub fn new(bits: u8, phase: u8) -> Self {
        assert!(bits < 16, "local Pauli bits out of range");
        LocalPauli {
            bits,
            phase: phase & 3,
        }
    }

    /// Build `letter_a ⊗ letter_b` with phase 0.
    pub fn from_letters(a: char, b: char) -> Self {
        let site = |c: char| -> u8 {
            match c {
                'I' => 0,
                'X' => 1,
                'Y' => 3,
                'Z' => 2,
                _ => panic!("invalid Pauli letter {c:?}"),
            }
        };
        LocalPauli {
            bits: site(a) | (site(b) << 2),
            phase: 0,
        }
    }

    /// Flip the sign.
    pub fn negated(self) -> Self {
        LocalPauli {
            bits: self.bits,
            phase: (self.phase + 2) & 3,
        }
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.bits
    }

    #[inline]
    pub fn phase(self) -> u8 {
        self.phase
    }

    /// 1 when the two local Paulis anticommute.
    #[inline]
    pub fn symplectic_product(self, other: LocalPauli) -> u8 {
        let cross = (x2(self.bits) & z2(other.bits)).count_ones()
            + (z2(self.bits) & x2(other.bits)).count_ones();
        (cross & 1) as u8
    }

    /// Product `self * other` with exact phase tracking; same phase rule as
    /// [`PauliOperator::mul_assign`], specialized to two sites.
    pub fn mul(self, other: LocalPauli) -> LocalPauli {
        let (xa, za) = (x2(self.bits), z2(self.bits));
        let (xb, zb) = (x2(other.bits), z2(other.bits));
        let mut acc = self.phase as i32 + other.phase as i32;
        acc += (xa & za).count_ones() as i32;
        acc += (xb & zb).count_ones() as i32;
        acc += 2 * (za & xb).count_ones() as i32;
        acc -= ((xa ^ xb) & (za ^ zb)).count_ones() as i32;
        LocalPauli {
            bits: self.bits ^ other.bits,
            phase: acc.rem_euclid(4) as u8,
        }
    }
}

impl fmt::Debug for LocalPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const L: [char; 4] = ['I', 'X', 'Z', 'Y'];
        let sign = match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            3 => "-i",
            _ => unreachable!(),
        };
        write!(
            f,
            "{}{}{}",
            sign,
            L[(self.bits & 3) as usize],
            L[((self.bits >> 2) & 3) as usize]
        )
    }
}

/// A two-qubit Clifford as the full conjugation table of all 16 local Paulis.
///
/// Two gates are equal exactly when they implement the same conjugation, so
/// equality and hashing see through how a gate was constructed. The overall
/// `U(1)` prefactor of the unitary is not represented; it never matters for
/// stabilizer evolution.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CliffordGate {
    table: [LocalPauli; 16],
}

impl CliffordGate {
    /// Build a gate from the images of the four generators
    /// `[X_a, Z_a, X_b, Z_b]` under conjugation.
    ///
    /// Panics unless the images are Hermitian and reproduce the generator
    /// commutation relations, i.e. unless they define a valid Clifford.
    pub fn from_images(images: [LocalPauli; 4]) -> Self {
        for (i, img) in images.iter().enumerate() {
            assert!(
                img.phase & 1 == 0,
                "image {i} is not Hermitian: {img:?}"
            );
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                // Generators anticommute exactly within the (X_a,Z_a) and
                // (X_b,Z_b) pairs.
                let expect = u8::from(j == i + 1 && i % 2 == 0);
                assert_eq!(
                    images[i].symplectic_product(images[j]),
                    expect,
                    "images {i},{j} break the generator commutation relations"
                );
            }
        }
        let mut table = [LocalPauli::identity(); 16];
        for (idx, slot) in table.iter_mut().enumerate() {
            let bits = idx as u8;
            // Convert canonical letters to XZ normal form: each Y contributes
            // one factor of i.
            let mut acc = LocalPauli {
                bits: 0,
                phase: (x2(bits) & z2(bits)).count_ones() as u8 & 3,
            };
            for (g, img) in images.iter().enumerate() {
                if (idx >> g) & 1 == 1 {
                    acc = acc.mul(*img);
                }
            }
            *slot = acc;
        }
        CliffordGate { table }
    }

    /// Image of the local Pauli with the given bits (phase 0 input).
    #[inline]
    pub fn image(&self, bits: u8) -> LocalPauli {
        self.table[bits as usize]
    }

    /// The identity gate.
    pub fn identity() -> Self {
        Self::from_images([
            LocalPauli::from_letters('X', 'I'),
            LocalPauli::from_letters('Z', 'I'),
            LocalPauli::from_letters('I', 'X'),
            LocalPauli::from_letters('I', 'Z'),
        ])
    }

    /// Hadamard on one site of the pair (`site` is 0 or 1).
    pub fn hadamard(site: usize) -> Self {
        match site {
            0 => Self::from_images([
                LocalPauli::from_letters('Z', 'I'),
                LocalPauli::from_letters('X', 'I'),
                LocalPauli::from_letters('I', 'X'),
                LocalPauli::from_letters('I', 'Z'),
            ]),
            1 => Self::from_images([
                LocalPauli::from_letters('X', 'I'),
                LocalPauli::from_letters('Z', 'I'),
                LocalPauli::from_letters('I', 'Z'),
                LocalPauli::from_letters('I', 'X'),
            ]),
            _ => panic!("site must be 0 or 1"),
        }
    }

    /// Phase gate `S` on one site: `X -> Y`, `Z -> Z`.
    pub fn phase_gate(site: usize) -> Self {
        match site {
            0 => Self::from_images([
                LocalPauli::from_letters('Y', 'I'),
                LocalPauli::from_letters('Z', 'I'),
                LocalPauli::from_letters('I', 'X'),
                LocalPauli::from_letters('I', 'Z'),
            ]),
            1 => Self::from_images([
                LocalPauli::from_letters('X', 'I'),
                LocalPauli::from_letters('Z', 'I'),
                LocalPauli::from_letters('I', 'Y'),
                LocalPauli::from_letters('I', 'Z'),
            ]),
            _ => panic!("site must be 0 or 1"),
        }
    }

    /// Controlled-NOT with control on the first site.
    pub fn cnot() -> Self {
        Self::from_images([
            LocalPauli::from_letters('X', 'X'),
            LocalPauli::from_letters('Z', 'I'),
            LocalPauli::from_letters('I', 'X'),
            LocalPauli::from_letters('Z', 'Z'),
        ])
    }

    /// Controlled-Z.
    pub fn cz() -> Self {
        Self::from_images([
            LocalPauli::from_letters('X', 'Z'),
            LocalPauli::from_letters('Z', 'I'),
            LocalPauli::from_letters('Z', 'X'),
            LocalPauli::from_letters('I', 'Z'),
        ])
    }

    /// Qubit exchange.
    pub fn swap() -> Self {
        Self::from_images([
            LocalPauli::from_letters('I', 'X'),
            LocalPauli::from_letters('I', 'Z'),
            LocalPauli::from_letters('X', 'I'),
            LocalPauli::from_letters('Z', 'I'),
        ])
    }

    /// iSWAP: exchange plus a controlled phase. Conjugation sends
    /// `X_a -> Z_a Y_b`, `Z_a -> Z_b`, `X_b -> Y_a Z_b`, `Z_b -> Z_a`.
    pub fn iswap() -> Self {
        Self::from_images([
            LocalPauli::from_letters('Z', 'Y'),
            LocalPauli::from_letters('I', 'Z'),
            LocalPauli::from_letters('Y', 'Z'),
            LocalPauli::from_letters('Z', 'I'),
        ])
    }

    /// Composite gate: first `self`, then `other`.
    pub fn then(&self, other: &CliffordGate) -> CliffordGate {
        let mut table = [LocalPauli::identity(); 16];
        for (idx, slot) in table.iter_mut().enumerate() {
            let mid = self.table[idx];
            let img = other.table[mid.bits as usize];
            *slot = LocalPauli {
                bits: img.bits,
                phase: (mid.phase + img.phase) & 3,
            };
        }
        CliffordGate { table }
    }

    /// Tensor product of two single-qubit Cliffords.
    pub fn from_singles(a: SingleClifford, b: SingleClifford) -> CliffordGate {
        let lift = |img: (u8, bool), high: bool| -> LocalPauli {
            LocalPauli {
                bits: if high { img.0 << 2 } else { img.0 },
                phase: if img.1 { 2 } else { 0 },
            }
        };
        Self::from_images([
            lift(a.img_x, false),
            lift(a.img_z, false),
            lift(b.img_x, true),
            lift(b.img_z, true),
        ])
    }

    /// Conjugate `op` in place on sites `(a, b)`.
    #[inline]
    pub fn apply(&self, op: &mut PauliOperator, a: usize, b: usize) {
        debug_assert!(a != b, "gate sites must differ");
        let (wa, sa) = (a >> 6, (a & 63) as u32);
        let (wb, sb) = (b >> 6, (b & 63) as u32);
        let xw = op.x.words_mut();
        let xa = (xw[wa] >> sa) & 1;
        let xb = (xw[wb] >> sb) & 1;
        let zw = op.z.words_mut();
        let za = (zw[wa] >> sa) & 1;
        let zb = (zw[wb] >> sb) & 1;
        let idx = (xa | (za << 1) | (xb << 2) | (zb << 3)) as usize;
        let img = self.table[idx];
        let bits = img.bits as u64;
        let zw = op.z.words_mut();
        zw[wa] = (zw[wa] & !(1 << sa)) | (((bits >> 1) & 1) << sa);
        zw[wb] = (zw[wb] & !(1 << sb)) | (((bits >> 3) & 1) << sb);
        let xw = op.x.words_mut();
        xw[wa] = (xw[wa] & !(1 << sa)) | ((bits & 1) << sa);
        xw[wb] = (xw[wb] & !(1 << sb)) | (((bits >> 2) & 1) << sb);
        op.phase = (op.phase + img.phase) & 3;
    }
}

impl fmt::Debug for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CliffordGate[X0->{:?}, Z0->{:?}, X1->{:?}, Z1->{:?}]",
            self.table[1], self.table[2], self.table[4], self.table[8]
        )
    }
}

/// One of the 24 single-qubit Cliffords, stored as the images of `X` and `Z`.
///
/// Images are `(letter_bits, negated)` with letter bits `x | z<<1`; the two
/// image letters always differ, which already guarantees they anticommute.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SingleClifford {
    img_x: (u8, bool),
    img_z: (u8, bool),
}

/// Single-site letters in enumeration order: X, Y, Z.
const SINGLE_LETTERS: [u8; 3] = [0b01, 0b11, 0b10];

impl SingleClifford {
    /// Number of single-qubit Cliffords.
    pub const COUNT: usize = 24;

    /// The identity.
    pub fn identity() -> Self {
        SingleClifford {
            img_x: (0b01, false),
            img_z: (0b10, false),
        }
    }

    /// Decode an index in `0..24` to a gate; the map is a bijection.
    ///
    /// The image of `X` takes one of 6 signed letters; the image of `Z` then
    /// takes one of the 4 signed letters with a different base letter.
    pub fn from_index(index: usize) -> Self {
        assert!(index < Self::COUNT, "single-Clifford index out of range");
        let xi = index / 4;
        let zi = index % 4;
        let letter_x = SINGLE_LETTERS[xi / 2];
        let others: Vec<u8> = SINGLE_LETTERS
            .iter()
            .copied()
            .filter(|&l| l != letter_x)
            .collect();
        SingleClifford {
            img_x: (letter_x, xi % 2 == 1),
            img_z: (others[zi / 2], zi % 2 == 1),
        }
    }
}
