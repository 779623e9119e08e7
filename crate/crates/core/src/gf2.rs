//! Dense linear algebra over GF(2).
//!
//! Rows are packed into `u64` words and elimination works a word at a time.
//! Column indices taken by the public functions are 1-based; storage is
//! 0-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A vector over GF(2). Coordinate 0 is the first entry of the bracket
/// notation, so `[1110]` has coordinates 0, 1 and 2 set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    /// Builds a vector from a mask where bit `i` is coordinate `i`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_mask supports at most 64 coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
            v.words[0] = mask & keep;
        }
        v
    }

    /// Builds a vector of length `len` whose bracket string, read as a
    /// binary number with the first coordinate most significant, equals
    /// `value`.
    pub fn from_bracket_value(len: usize, value: u64) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            if (value >> (len - 1 - i)) & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len);
        let w = &mut self.words[i / WORD];
        if bit {
            *w |= 1 << (i % WORD);
        } else {
            *w &= !(1 << (i % WORD));
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Coordinates as a mask (bit `i` is coordinate `i`). Panics past 64.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len <= WORD, "to_mask supports at most 64 coordinates");
        self.words.first().copied().unwrap_or(0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Drops the last coordinate and returns it along with the prefix.
    pub fn split_last(&self) -> Option<(BitVector, bool)> {
        if self.len == 0 {
            return None;
        }
        let last = self.get(self.len - 1);
        let mut head = BitVector::zeros(self.len - 1);
        for i in self.ones().filter(|&i| i < self.len - 1) {
            head.set(i, true);
        }
        Some((head, last))
    }

    /// Appends one coordinate.
    pub fn pushed(&self, bit: bool) -> BitVector {
        let mut v = BitVector::zeros(self.len + 1);
        for i in self.ones() {
            v.set(i, true);
        }
        v.set(self.len, bit);
        v
    }
}

impl Ord for BitVector {
    /// Shorter vectors first; equal lengths compare as binary numbers read
    /// left to right in bracket notation.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for i in 0..self.len {
                match (self.get(i), other.get(i)) {
                    (false, true) => return Ordering::Less,
                    (true, false) => return Ordering::Greater,
                    _ => {}
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses bracket notation such as `[1110]`; the brackets are optional.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        let mut v = BitVector::zeros(t.len());
        for (i, ch) in t.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::Parse(format!("bad vector `{s}`"))),
            }
        }
        Ok(v)
    }
}

impl serde::Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A dense `rows x cols` matrix over GF(2) stored row-major with packed
/// rows. Padding bits past `cols` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of `0`/`1` characters. Whitespace inside a
    /// row is ignored.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Parse(format!("bad matrix entry `{c}`"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let cols = parsed.first().map_or(0, Vec::len);
        if parsed.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        let mut m = Self::zeros(parsed.len(), cols);
        for (i, r) in parsed.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from columns.
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::VectorLength {
                    expected: rows,
                    got: c.len(),
                });
            }
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        if bit {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        for w in 0..self.stride {
            let v = self.data[src * self.stride + w];
            self.data[dst * self.stride + w] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector {
            len: self.cols,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols);
        let mut out = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            let parity = self
                .row_words(i)
                .iter()
                .zip(&v.words)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>();
            if parity % 2 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// Columns `cols` (0-based) in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, cols.len());
        for (nj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                if self.get(i, j) {
                    m.set(i, nj, true);
                }
            }
        }
        m
    }

    /// Reduced row echelon form in place, choosing pivots left to right.
    /// Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(&order)
    }

    /// Reduced row echelon form using the given column order for pivot
    /// selection. Rows holding pivots move to the top in pivot order.
    fn rref_with_order(&mut self, order: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for &j in order {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&i| self.get(i, j)) else {
                continue;
            };
            self.swap_rows(p, next);
            for i in 0..self.rows {
                if i != next && self.get(i, j) {
                    self.xor_row_into(next, i);
                }
            }
            pivots.push(j);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    fn check_index(&self, one_based: usize) -> Result<usize> {
        if one_based == 0 || one_based > self.cols {
            Err(Error::IndexOutOfRange {
                index: one_based,
                cols: self.cols,
            })
        } else {
            Ok(one_based - 1)
        }
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// GF(2) rank of the 1-based columns `cols` of `m`.
pub fn rank_subset(m: &BitMatrix, cols: &[usize]) -> Result<usize> {
    let idx = cols
        .iter()
        .map(|&c| m.check_index(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(m.select_columns(&idx).rank())
}

/// Records where each column of a standardized matrix came from:
/// `new_to_old[k]` is the 1-based original index of new column `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPermutation {
    pub new_to_old: Vec<usize>,
}

impl ColumnPermutation {
    pub fn is_identity(&self) -> bool {
        self.new_to_old.iter().enumerate().all(|(k, &o)| o == k + 1)
    }
}

/// Row-reduces `m` to `[I_r | D]`, moving the basis columns to the front.
///
/// Without an explicit basis the leftmost independent columns are used.
/// Non-basis columns keep their relative order.
pub fn standard_form(
    m: &BitMatrix,
    basis: Option<&[usize]>,
) -> Result<(BitMatrix, ColumnPermutation)> {
    let r = m.rows();
    let mut work = m.clone();
    let basis_cols: Vec<usize> = match basis {
        Some(b) => {
            let idx = b
                .iter()
                .map(|&c| m.check_index(c))
                .collect::<Result<Vec<_>>>()?;
            if m.rank() < r {
                return Err(Error::RankDeficient { rank: m.rank(), rows: r });
            }
            let piv = work.rref_with_order(&idx);
            if idx.len() != r || piv.len() != r {
                return Err(Error::DependentBasis);
            }
            piv
        }
        None => {
            let piv = work.rref_in_place();
            if piv.len() < r {
                return Err(Error::RankDeficient { rank: piv.len(), rows: r });
            }
            piv
        }
    };
    let mut order = basis_cols.clone();
    order.extend((0..m.cols()).filter(|j| !basis_cols.contains(j)));
    let out = work.select_columns(&order);
    Ok((
        out,
        ColumnPermutation {
            new_to_old: order.iter().map(|j| j + 1).collect(),
        },
    ))
}

/// A basis of the null space `{v : m v = 0}`; it has `cols - rank` vectors.
pub fn cycle_space_basis(m: &BitMatrix) -> Vec<BitVector> {
    let mut work = m.clone();
    let pivots = work.rref_in_place();
    let n = m.cols();
    let mut out = Vec::with_capacity(n - pivots.len());
    for j in (0..n).filter(|j| !pivots.contains(j)) {
        let mut v = BitVector::zeros(n);
        v.set(j, true);
        for (row, &p) in pivots.iter().enumerate() {
            if work.get(row, j) {
                v.set(p, true);
            }
        }
        out.push(v);
    }
    out
}

/// Rank of a set of vectors given as `u64` masks, by XOR-basis insertion.
pub(crate) fn rank_of_masks(vectors: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in vectors {
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                rank += 1;
                break;
            }
            v ^= basis[h];
        }
    }
    rank
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
