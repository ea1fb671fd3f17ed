//! Bit-packed linear algebra over GF(2).
//!
//! [`BitVector`] stores bits in little-endian `u64` words; [`BitMatrix`] is a
//! row-major stack of equal-length vectors. Row reduction uses deterministic
//! pivoting (lowest-index nonzero column, first qualifying row), so every
//! derived quantity (rank, reduced form, solved combinations) is reproducible
//! across runs and platforms.

use std::fmt;

/// A fixed-length vector over GF(2), packed 64 bits per word.
///
/// Invariant: bits at positions `>= len` are always zero, so word-level
/// popcounts and comparisons never see garbage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    /// All-zero vector of `len` bits.
    pub fn zeros(len: usize) -> Self {
        BitVector {
            words: vec![0u64; len.div_ceil(64)],
            len,
        }
    }

    /// Vector with ones exactly at `indices`.
    ///
    /// Panics if any index is out of range.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVector::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Vector built from a slice of bools.
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Number of bits.
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// True if the vector has zero length.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at position `i`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    /// Set bit `i` to `value`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i & 63);
        if value {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    /// Flip bit `i`.
    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    /// In-place XOR with another vector of the same length.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Number of set bits.
    #[inline]
    pub fn ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Popcount of the bitwise AND with `other`, without allocating.
    #[inline]
    pub fn and_count(&self, other: &BitVector) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True if every bit is zero.
    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((k << 6) + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Raw words, little-endian. Padding bits are zero.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Mutable raw words. Callers must keep padding bits zero.
    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Render as a `0`/`1` string, lowest index first.
    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    /// Parse a `0`/`1` string, lowest index first.
    pub fn from_bit_string(s: &str) -> Option<Self> {
        let mut v = BitVector::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bit_string())
    }
}

/// A row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    n_cols: usize,
}

impl BitMatrix {
    /// Empty matrix with `n_cols` columns and no rows.
    pub fn new(n_cols: usize) -> Self {
        BitMatrix {
            rows: Vec::new(),
            n_cols,
        }
    }

    /// Build from rows, which must all share one length.
    pub fn from_rows(rows: Vec<BitVector>) -> Self {
        let n_cols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            assert_eq!(r.len(), n_cols, "ragged rows in BitMatrix");
        }
        BitMatrix { rows, n_cols }
    }

    /// Append a row of matching length.
    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.n_cols, "row length mismatch");
        self.rows.push(row);
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    /// Matrix keeping only the listed columns, in the given order.
    pub fn restricted_to_columns(&self, cols: &[usize]) -> BitMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = BitVector::zeros(cols.len());
                for (j, &c) in cols.iter().enumerate() {
                    if r.get(c) {
                        out.set(j, true);
                    }
                }
                out
            })
            .collect();
        BitMatrix {
            rows,
            n_cols: cols.len(),
        }
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        self.rank_pair(self.n_cols).1
    }

    /// `(rank of the first-split-columns submatrix, rank of the full matrix)`
    /// in one elimination pass.
    ///
    /// Pivoting sweeps columns left to right, so once the sweep passes
    /// `split` the pivots found so far are exactly a basis for the left
    /// block's row space.
    pub fn rank_pair(&self, split: usize) -> (usize, usize) {
        assert!(split <= self.n_cols, "split column out of range");
        let mut work: Vec<BitVector> = self.rows.clone();
        let mut rank = 0usize;
        for col in 0..self.n_cols {
            let Some(pivot) = (rank..work.len()).find(|&r| work[r].get(col)) else {
                continue;
            };
            work.swap(rank, pivot);
            // Echelon form suffices for rank: clear below only.
            let (head, tail) = work.split_at_mut(rank + 1);
            let prow = &head[rank];
            for r in tail.iter_mut() {
                if r.get(col) {
                    r.xor_assign(prow);
                }
            }
            rank += 1;
            if rank == work.len() {
                break;
            }
        }
        // Placed rows are never touched again, so each keeps its pivot as the
        // leading bit; the left-block rank is the number of pivots < split.
        let rank_left = work[..rank]
            .iter()
            .filter(|r| r.first_one().is_some_and(|c| c < split))
            .count();
        (rank_left, rank)
    }

    /// Reduced row echelon form with the pivot columns, deterministically.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let red = RowReduction::new(self);
        (red.reduced, red.pivot_cols)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.n_rows(), self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "  {}", r.to_bit_string())?;
        }
        write!(f, "]")
    }
}

/// Tracked row reduction: the reduced matrix together with the combination
/// matrix expressing each reduced row in terms of the original rows.
///
/// After construction, `reduced.row(i) = XOR over j with combination[i][j]=1
/// of original.row(j)`. Rows `0..rank()` carry the pivots; any later rows are
/// zero, and their combinations span the left kernel of the original matrix.
pub struct RowReduction {
    /// RREF of the input.
    pub reduced: BitMatrix,
    /// Pivot column of reduced row `i`, for `i < rank`.
    pub pivot_cols: Vec<usize>,
    /// Row `i` gives the coefficients of `reduced.row(i)` over original rows.
    pub combination: BitMatrix,
}

impl RowReduction {
    /// Reduce `matrix` to RREF while tracking row combinations.
    pub fn new(matrix: &BitMatrix) -> Self {
        let n_rows = matrix.n_rows();
        let mut work = matrix.rows.to_vec();
        let mut comb: Vec<BitVector> = (0..n_rows)
            .map(|i| BitVector::from_indices(n_rows, &[i]))
            .collect();
        let mut pivot_cols = Vec::new();
        let mut rank = 0usize;
        for col in 0..matrix.n_cols {
            let Some(pivot) = (rank..n_rows).find(|&r| work[r].get(col)) else {
                continue;
            };
            work.swap(rank, pivot);
            comb.swap(rank, pivot);
            for r in 0..n_rows {
                if r != rank && work[r].get(col) {
                    let (pr, pc) = (work[rank].clone(), comb[rank].clone());
                    work[r].xor_assign(&pr);
                    comb[r].xor_assign(&pc);
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == n_rows {
                break;
            }
        }
        RowReduction {
            reduced: BitMatrix {
                rows: work,
                n_cols: matrix.n_cols,
            },
            pivot_cols,
            combination: BitMatrix::from_rows(comb),
        }
    }

    /// Rank of the original matrix.
    #[inline]
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// Express `target` as a combination of the original rows.
    ///
    /// Returns the coefficient vector over original rows, or `None` when
    /// `target` lies outside the row space.
    pub fn solve(&self, target: &BitVector) -> Option<BitVector> {
        assert_eq!(target.len(), self.reduced.n_cols, "target length mismatch");
        let mut residual = target.clone();
        let mut coeffs = BitVector::zeros(self.combination.n_cols());
        for (i, &col) in self.pivot_cols.iter().enumerate() {
            if residual.get(col) {
                residual.xor_assign(self.reduced.row(i));
                coeffs.xor_assign(self.combination.row(i));
            }
        }
        residual.is_zero().then_some(coeffs)
    }
}
