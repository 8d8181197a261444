//! Dense linear algebra over GF(2).
//!
//! Rows are bit-packed into `u64` words. A matrix maps column vectors:
//! an `r x c` matrix sends `GF(2)^c` to `GF(2)^r`, so column `j` is the
//! image of the `j`-th source basis vector. Every routine is exact and
//! deterministic; column order is the caller's basis order and is never
//! permuted behind the caller's back.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = F2Vector::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = F2Vector::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from 0/1 integers; any odd value counts as 1.
    pub fn from_u8s(bits: &[u8]) -> Self {
        F2Vector::from_bits(bits.iter().map(|b| b & 1 == 1))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn add_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Indices of the nonzero entries, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + tz)
                }
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.support().next()
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, ")")
    }
}

/// A dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = F2Matrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from row slices of 0/1 values.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        F2Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| F2Vector::from_u8s(r)).collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[F2Vector]) -> Self {
        let mut m = F2Matrix::zero(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for r in col.support() {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &F2Vector {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> F2Vector {
        F2Vector::from_bits((0..self.rows).map(|r| self.get(r, c)))
    }

    pub fn columns(&self) -> Vec<F2Vector> {
        self.transpose().data
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zero(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.support() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Keeps the listed rows, in the listed order.
    pub fn select_rows(&self, rows: &[usize]) -> F2Matrix {
        F2Matrix {
            rows: rows.len(),
            cols: self.cols,
            data: rows.iter().map(|&r| self.data[r].clone()).collect(),
        }
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> F2Matrix {
        F2Matrix::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.cols {
            return Err(Error::input(format!(
                "vector of length {} does not match {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(F2Vector::from_bits(self.data.iter().map(|row| row.dot(v))))
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.rows {
            return Err(Error::input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = F2Matrix::zero(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.support() {
                out.data[r].add_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vector::is_zero)
    }

    /// Row-reduces in place to reduced echelon form and returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.data[r].get(c)) else {
                continue;
            };
            self.data.swap(next, p);
            let pivot_row = self.data[next].clone();
            for r in 0..self.rows {
                if r != next && self.data[r].get(c) {
                    self.data[r].add_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        // eliminate on the shorter side
        if self.rows > self.cols {
            self.transpose().rank()
        } else {
            self.clone().rref_in_place().len()
        }
    }

    /// A basis of `{v : Mv = 0}`, one vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = F2Vector::unit(self.cols, free);
            for (i, &p) in pivots.iter().enumerate() {
                if r.data[i].get(free) {
                    v.set(p, true);
                }
            }
            out.push(v);
        }
        out
    }

    /// Some `x` with `Mx = b`, or `None` when `b` is outside the image.
    pub fn solve(&self, b: &F2Vector) -> Result<Option<F2Vector>> {
        if b.len() != self.rows {
            return Err(Error::input(format!(
                "right-hand side of length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        // augment with b as an extra column
        let mut aug = F2Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in self.data[r].support() {
                aug.set(r, c, true);
            }
            if b.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = F2Vector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if aug.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    /// Indices of a maximal independent subset of the columns, chosen greedily left to right.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().1
    }

    /// Dimension of the column space of `[self | other]`.
    pub fn rank_of_union(&self, other: &F2Matrix) -> usize {
        assert_eq!(self.rows, other.rows);
        let mut cols = self.columns();
        cols.extend(other.columns());
        F2Matrix::from_columns(self.rows, &cols).rank()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {:?}", row)?;
        }
        write!(f, "]")
    }
}

/// A subspace of `GF(2)^n` held as a reduced echelon basis.
///
/// Reduction against the basis gives a canonical representative of each
/// coset, which is how quotients and membership tests are computed.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    // rows in reduced echelon form, pivots[i] is the pivot column of basis[i]
    basis: Vec<F2Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::spanned_by(ambient, (0..ambient).map(|i| F2Vector::unit(ambient, i)))
    }

    pub fn spanned_by<I: IntoIterator<Item = F2Vector>>(ambient: usize, vectors: I) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[F2Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result has zeros in every pivot column.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut v = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v.get(p) {
                v.add_assign(b);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: F2Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let r = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        // keep the basis fully reduced
        for b in self.basis.iter_mut() {
            if b.get(p) {
                b.add_assign(&r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.basis.insert(pos, r);
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// Standard basis indices not used as pivots: a complement of the subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.pivots == other.pivots && self.basis == other.basis
    }
}

impl Eq for Subspace {}

/// The preimage `{v : Mv ∈ target}` of a subspace under a linear map.
pub fn preimage(m: &F2Matrix, target: &Subspace) -> Subspace {
    assert_eq!(m.rows(), target.ambient());
    // v ∈ preimage iff the complement coordinates of reduce(Mv) vanish;
    // reduction is linear, so stack the reduced columns and take a kernel.
    let reduced: Vec<F2Vector> = m.columns().iter().map(|c| target.reduce(c)).collect();
    let k = F2Matrix::from_columns(m.rows(), &reduced).kernel_basis();
    Subspace::spanned_by(m.cols(), k)
}

/// The image `M(source)` of a subspace.
pub fn image(m: &F2Matrix, source: &Subspace) -> Subspace {
    assert_eq!(m.cols(), source.ambient());
    Subspace::spanned_by(
        m.rows(),
        source
            .basis()
            .iter()
            .map(|v| m.mul_vec(v).expect("checked length")),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_kernel(m: &F2Matrix) -> Vec<F2Vector> {
        let n = m.cols();
        (0u32..(1 << n))
            .map(|bits| F2Vector::from_bits((0..n).map(|i| bits >> i & 1 == 1)))
            .filter(|v| m.mul_vec(v).unwrap().is_zero())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(F2Matrix::identity(4).rank(), 4);
        assert_eq!(F2Matrix::zero(3, 5).rank(), 0);
        assert_eq!(F2Matrix::from_rows(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn all_ones_2x2_has_a_one_dimensional_image() {
        // oracle: enumerate the images of all 4 vectors
        let m = F2Matrix::from_rows(&[&[1, 1], &[1, 1]]);
        let mut images: Vec<Vec<bool>> = (0u32..4)
            .map(|b| {
                m.mul_vec(&F2Vector::from_bits([b & 1 == 1, b & 2 == 2]))
                    .unwrap()
                    .to_bits()
            })
            .collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 2); // 2^rank
    }

    #[test]
    fn kernel_examples() {
        assert!(F2Matrix::identity(5).kernel_basis().is_empty());
        assert_eq!(F2Matrix::zero(2, 3).kernel_basis().len(), 3);

        let m = F2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![F2Vector::from_u8s(&[1, 1, 1])]);
        let brute: Vec<_> = brute_kernel(&m)
            .into_iter()
            .filter(|v| !v.is_zero())
            .collect();
        assert_eq!(brute, k);
    }

    #[test]
    fn solve_examples() {
        let b = F2Vector::from_u8s(&[1, 0, 1]);
        assert_eq!(F2Matrix::identity(3).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(F2Matrix::zero(3, 3).solve(&b).unwrap(), None);

        let m = F2Matrix::from_rows(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&F2Vector::from_u8s(&[0, 1])).unwrap().unwrap();
        assert_eq!(x, F2Vector::from_u8s(&[1, 1]));
        let hits: Vec<_> = (0u32..4)
            .map(|bits| F2Vector::from_bits([bits & 1 == 1, bits & 2 == 2]))
            .filter(|c| m.mul_vec(c).unwrap() == F2Vector::from_u8s(&[0, 1]))
            .collect();
        assert_eq!(hits, vec![x]);
    }

    #[test]
    fn solve_rejects_wrong_length() {
        let err = F2Matrix::identity(2)
            .solve(&F2Vector::zeros(3))
            .unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn subspace_reduction_is_canonical() {
        let s = Subspace::spanned_by(
            4,
            [
                F2Vector::from_u8s(&[1, 1, 0, 0]),
                F2Vector::from_u8s(&[0, 1, 1, 0]),
            ],
        );
        assert_eq!(s.dim(), 2);
        let a = F2Vector::from_u8s(&[1, 0, 0, 1]);
        let b = F2Vector::from_u8s(&[0, 0, 1, 1]); // a + (1,1,0,0) + (0,1,1,0)
        assert_eq!(s.reduce(&a), s.reduce(&b));
        assert!(s.contains(&F2Vector::from_u8s(&[1, 0, 1, 0])));
        assert_eq!(s.complement_indices().len(), 2);
    }

    #[test]
    fn preimage_and_image() {
        // projection onto the first coordinate of GF(2)^3
        let m = F2Matrix::from_rows(&[&[1, 0, 0], &[0, 0, 0]]);
        let zero = Subspace::zero(2);
        let ker = preimage(&m, &zero);
        assert_eq!(ker.dim(), 2);
        let im = image(&m, &Subspace::full(3));
        assert_eq!(im.dim(), 1);
    }

    #[test]
    fn wide_words() {
        let n = 130;
        let m = F2Matrix::from_fn(n, n, |r, c| r == c || c == r + 1);
        assert_eq!(m.rank(), n);
        let v = F2Vector::unit(n, 129);
        let x = m.solve(&v).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), v);
    }
}
