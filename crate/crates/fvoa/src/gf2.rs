//! Bit-packed linear algebra over GF(2).
//!
//! Coordinates are 0-based throughout; coordinate `i` lives in bit `i % 64`
//! of word `i / 64`.  Bits beyond the logical length are kept at zero, so
//! equality and hashing operate on the packed words directly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2) with a fixed number of coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Gf2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Gf2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` with ones exactly on `support`.
    /// Out-of-range or repeated coordinates are rejected.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        let mut v = Gf2Vector::zeros(len);
        for &i in support {
            if i >= len {
                return Err(Error::InvalidArgument(format!(
                    "support coordinate {i} out of range for length {len}"
                )));
            }
            if v.get(i) {
                return Err(Error::InvalidArgument(format!(
                    "support coordinate {i} repeated"
                )));
            }
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if bit {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Standard inner product modulo 2.
    pub fn dot(&self, other: &Gf2Vector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones() & 1;
        }
        acc == 1
    }

    /// Number of coordinates where both vectors are 1.
    pub fn intersection_weight(&self, other: &Gf2Vector) -> usize {
        assert_eq!(self.len, other.len, "intersection of vectors with different lengths");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.iter_support().collect()
    }

    /// Iterates the support in increasing coordinate order.
    pub fn iter_support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            std::iter::successors((w != 0).then_some(w), |&rem| {
                let next = rem & (rem - 1);
                (next != 0).then_some(next)
            })
            .map(move |rem| base + rem.trailing_zeros() as usize)
        })
    }

    pub fn leading_coordinate(&self) -> Option<usize> {
        self.iter_support().next()
    }

    /// Copy with coordinate `i` removed; later coordinates shift down by one.
    pub fn delete_coordinate(&self, i: usize) -> Gf2Vector {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        let mut v = Gf2Vector::zeros(self.len - 1);
        for j in self.iter_support() {
            match j.cmp(&i) {
                Ordering::Less => v.set(j, true),
                Ordering::Equal => {}
                Ordering::Greater => v.set(j - 1, true),
            }
        }
        v
    }

    /// Copy with a zero coordinate inserted at position `i` (inverse of
    /// `delete_coordinate`).
    pub fn insert_zero_coordinate(&self, i: usize) -> Gf2Vector {
        assert!(i <= self.len, "insertion point {i} out of range for length {}", self.len);
        let mut v = Gf2Vector::zeros(self.len + 1);
        for j in self.iter_support() {
            v.set(if j < i { j } else { j + 1 }, true);
        }
        v
    }

    /// Projection onto the listed coordinates, in the order given.
    pub fn restrict(&self, coords: &[usize]) -> Gf2Vector {
        let mut v = Gf2Vector::zeros(coords.len());
        for (local, &global) in coords.iter().enumerate() {
            if self.get(global) {
                v.set(local, true);
            }
        }
        v
    }
}

/// Vectors order by their supports as sequences, so among words of equal
/// weight this is the lexicographic order on sorted support lists.
impl Ord for Gf2Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter_support().cmp(other.iter_support())
    }
}

impl PartialOrd for Gf2Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A matrix over GF(2), stored as rows.  The column count is explicit so
/// that matrices with zero rows remain well-defined.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn empty(cols: usize) -> Self {
        Gf2Matrix { cols, rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Gf2Vector>) -> Result<Self> {
        let cols = match rows.first() {
            Some(r) => r.len(),
            None => {
                return Err(Error::InvalidArgument(
                    "matrix from rows needs at least one row; use empty(cols) otherwise".into(),
                ))
            }
        };
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has length {} but row 0 has length {cols}",
                rows[bad].len()
            )));
        }
        Ok(Gf2Matrix { cols, rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = Gf2Vector::zeros(n);
                v.set(i, true);
                v
            })
            .collect();
        Gf2Matrix { cols: n, rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn push_row(&mut self, row: Gf2Vector) {
        assert_eq!(row.len(), self.cols, "pushed row has wrong length");
        self.rows.push(row);
    }

    pub fn rank(&self) -> usize {
        self.rref().0.n_rows()
    }

    /// Reduced row echelon form with zero rows removed, plus the pivot
    /// columns in increasing order.  The result is the canonical basis of
    /// the row space: two matrices have equal row spaces iff their reduced
    /// forms are equal.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        (Gf2Matrix { cols: self.cols, rows }, pivots)
    }

    /// Canonical basis for the right kernel `{v : M v^T = 0}`, one row per
    /// free column of the reduced form, in increasing free-column order.
    pub fn kernel_basis(&self) -> Gf2Matrix {
        let (rr, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.cols - pivots.len());
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = Gf2Vector::zeros(self.cols);
            v.set(f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if rr.row(i).get(f) {
                    v.set(p, true);
                }
            }
            rows.push(v);
        }
        Gf2Matrix { cols: self.cols, rows }
    }

    /// Decides membership of `v` in the row space.  On success returns the
    /// coefficient vector `c` (length = number of rows) with `c * M = v`.
    pub fn in_span(&self, v: &Gf2Vector) -> Result<Option<Gf2Vector>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} does not match column count {}",
                v.len(),
                self.cols
            )));
        }
        // Incremental echelon basis tagged with coefficients over the
        // original rows, keyed by pivot column.
        let mut echelon: BTreeMap<usize, (Gf2Vector, Gf2Vector)> = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut r = row.clone();
            let mut tag = Gf2Vector::zeros(self.rows.len());
            tag.set(i, true);
            while let Some(lead) = r.leading_coordinate() {
                match echelon.get(&lead) {
                    Some((er, et)) => {
                        r.xor_assign(er);
                        tag.xor_assign(et);
                    }
                    None => {
                        echelon.insert(lead, (r, tag));
                        break;
                    }
                }
            }
        }
        let mut r = v.clone();
        let mut tag = Gf2Vector::zeros(self.rows.len());
        while let Some(lead) = r.leading_coordinate() {
            match echelon.get(&lead) {
                Some((er, et)) => {
                    r.xor_assign(er);
                    tag.xor_assign(et);
                }
                None => return Ok(None),
            }
        }
        debug_assert_eq!(&self.combine(&tag), v);
        Ok(Some(tag))
    }

    /// Linear combination of the rows selected by `coeffs`.
    pub fn combine(&self, coeffs: &Gf2Vector) -> Gf2Vector {
        assert_eq!(coeffs.len(), self.rows.len(), "coefficient count does not match row count");
        let mut acc = Gf2Vector::zeros(self.cols);
        for i in coeffs.iter_support() {
            acc.xor_assign(&self.rows[i]);
        }
        acc
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows.len(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(s: &str) -> Gf2Vector {
        Gf2Vector::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>())
    }

    fn matrix_of(rows: &[&str]) -> Gf2Matrix {
        Gf2Matrix::from_rows(rows.iter().map(|r| vec_of(r)).collect()).unwrap()
    }

    #[test]
    fn support_round_trip() {
        let v = Gf2Vector::from_support(130, &[0, 1, 63, 64, 129]).unwrap();
        assert_eq!(v.support(), vec![0, 1, 63, 64, 129]);
        assert_eq!(v.weight(), 5);
        assert!(v.get(64) && !v.get(65));
    }

    #[test]
    fn from_support_rejects_bad_input() {
        assert!(Gf2Vector::from_support(4, &[4]).is_err());
        assert!(Gf2Vector::from_support(4, &[1, 1]).is_err());
    }

    #[test]
    fn support_order_is_not_bitstring_order() {
        // {0,3} before {1,2} (first support coordinate decides) even though
        // the bitstrings 1001 and 0110 would compare the other way around
        // as binary numbers read most-significant-first.
        assert!(vec_of("1001") < vec_of("0110"));
        // A support that is a strict prefix of another comes first.
        assert!(vec_of("1000") < vec_of("1100"));
        assert_eq!(vec_of("0101").cmp(&vec_of("0101")), Ordering::Equal);
    }

    #[test]
    fn delete_and_insert_are_inverse() {
        let v = vec_of("10110");
        let d = v.delete_coordinate(2);
        assert_eq!(d, vec_of("1010"));
        assert_eq!(d.insert_zero_coordinate(2), vec_of("10010"));
        let w = vec_of("10010");
        assert_eq!(w.delete_coordinate(2).insert_zero_coordinate(2), w);
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(Gf2Matrix::identity(3).rank(), 3);
        let zero = matrix_of(&["00000", "00000"]);
        assert_eq!(zero.rank(), 0);
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let m = matrix_of(&["1100", "0110", "1010"]);
        let (rr, pivots) = m.rref();
        assert_eq!(rr.n_rows(), 2);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rr.row(0), &vec_of("1010"));
        assert_eq!(rr.row(1), &vec_of("0110"));
    }

    #[test]
    fn rref_is_idempotent_and_canonical() {
        let m = matrix_of(&["1100", "0110", "1010"]);
        let (rr, _) = m.rref();
        assert_eq!(rr.rref().0, rr);
        // A different generating set of the same row space reduces identically.
        let m2 = matrix_of(&["0110", "1010"]);
        assert_eq!(m2.rref().0, rr);
    }

    #[test]
    fn single_row_rref() {
        let m = matrix_of(&["110"]);
        let (rr, pivots) = m.rref();
        assert_eq!(rr.n_rows(), 1);
        assert_eq!(pivots, vec![0]);
        assert_eq!(rr.row(0), &vec_of("110"));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = Gf2Matrix::identity(4).kernel_basis();
        assert_eq!(k.n_rows(), 0);
        assert_eq!(k.n_cols(), 4);
    }

    #[test]
    fn kernel_of_zero_row_is_full_space() {
        let m = matrix_of(&["0000"]);
        let k = m.kernel_basis();
        assert_eq!(k.n_rows(), 4);
        assert_eq!(k.rank(), 4);
    }

    #[test]
    fn kernel_rows_annihilate_matrix() {
        let m = matrix_of(&["110010", "011001", "101100"]);
        let k = m.kernel_basis();
        assert_eq!(k.n_rows(), 6 - m.rank());
        for kr in k.rows() {
            for mr in m.rows() {
                assert!(!kr.dot(mr));
            }
        }
    }

    #[test]
    fn in_span_of_zero_vector() {
        let m = matrix_of(&["1100", "0110"]);
        let c = m.in_span(&Gf2Vector::zeros(4)).unwrap().unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn in_span_of_own_row_gives_unit_coefficients() {
        let m = matrix_of(&["1100", "0110", "0011"]);
        let c = m.in_span(&vec_of("0110")).unwrap().unwrap();
        assert_eq!(c.support(), vec![1]);
    }

    #[test]
    fn in_span_recovers_combinations() {
        let m = matrix_of(&["1100", "0110", "0011"]);
        let mut target = m.row(0).clone();
        target.xor_assign(m.row(2));
        let c = m.in_span(&target).unwrap().unwrap();
        assert_eq!(m.combine(&c), target);
    }

    #[test]
    fn in_span_rejects_non_members() {
        let m = matrix_of(&["1100", "0011"]);
        assert!(m.in_span(&vec_of("1000")).unwrap().is_none());
        assert!(m.in_span(&vec_of("100")).is_err());
    }

    #[test]
    fn dot_and_intersection() {
        let a = vec_of("1101");
        let b = vec_of("1011");
        assert_eq!(a.intersection_weight(&b), 2);
        assert!(!a.dot(&b));
        assert!(a.dot(&vec_of("1000")));
    }
}
