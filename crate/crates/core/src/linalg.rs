//! Dense linear algebra over GF(p): row reduction, rank, kernels and
//! canonical subspaces.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Elem, PrimeField};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of integers, reducing mod p.
    pub fn from_i64_rows(field: PrimeField, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        m
    }

    /// Stacks already-reduced row vectors of length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<Elem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let p = f.characteristic() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = v as Elem;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let p = self.field.characteristic() as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (&a, &b) in self.row(r).iter().zip(v) {
                    if a != 0 && b != 0 {
                        acc = (acc + a as u64 * b as u64) % p;
                    }
                }
                acc as Elem
            })
            .collect()
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Row-reduces in place; returns pivot columns. Nonzero rows come first.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.characteristic() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(found) = (lead..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if found != lead {
                for k in c..cols {
                    self.data.swap(found * cols + k, lead * cols + k);
                }
            }
            let inv = f.inv(self.data[lead * cols + c]) as u64;
            for k in c..cols {
                let v = &mut self.data[lead * cols + k];
                *v = ((*v as u64 * inv) % p) as Elem;
            }
            let (before, rest) = self.data.split_at_mut(lead * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [Elem]| {
                let factor = row[c];
                if factor == 0 {
                    return;
                }
                let neg = p - factor as u64;
                for k in c..cols {
                    let pv = pivot_row[k];
                    if pv != 0 {
                        row[k] = ((row[k] as u64 + neg * pv as u64) % p) as Elem;
                    }
                }
            };
            for row in before.chunks_mut(cols) {
                eliminate(row);
            }
            for row in after.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        self.clone().rref_in_place().len()
    }

    /// `{ v : M v = 0 }` with a canonical basis.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f, self.cols, &basis)
    }

    /// Image (column space) as a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }
}

/// A linear subspace of GF(p)^n stored by its reduced row-echelon basis.
///
/// Two equal subspaces always have identical representations, so structural
/// equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<Elem>]) -> Self {
        Self::from_matrix(&Matrix::from_rows(field, ambient, vectors))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut b = m.clone();
        let pivots = b.rref_in_place();
        b.rows = pivots.len();
        b.data.truncate(pivots.len() * b.cols);
        Self {
            ambient: m.cols,
            basis: b,
            pivots,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field
    }
    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vectors(&self) -> Vec<Vec<Elem>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Normal form of `v` modulo this subspace: entries at pivot columns vanish.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let mut out = v.to_vec();
        self.reduce_in_place(&mut out);
        out
    }

    pub fn reduce_in_place(&self, v: &mut [Elem]) {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (slot, &b) in v.iter_mut().zip(self.basis.row(i)).skip(pc) {
                if b != 0 {
                    *slot = f.mul_add(*slot, neg, b);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// `U^⊥` under the standard pairing.
    pub fn orthogonal_complement(&self) -> Subspace {
        self.basis.kernel()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient, &rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.orthogonal_complement()
            .sum(&other.orthogonal_complement())
            .orthogonal_complement()
    }

    /// Coordinates of the quotient `ambient / self`, indexed by non-pivot columns.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Incrementally maintained echelon basis, used to pick independent vectors
/// greedily and to reduce vectors modulo a growing span.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [Elem]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (slot, &b) in v.iter_mut().zip(row.iter()) {
                if b != 0 {
                    *slot = f.mul_add(*slot, neg, b);
                }
            }
        }
    }

    /// Adds `v` if it is independent of the current span; returns whether it was.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep earlier rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (slot, &b) in row.iter_mut().zip(w.iter()) {
                    if b != 0 {
                        *slot = f.mul_add(*slot, neg, b);
                    }
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.field, self.ambient, &self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(gf(7), 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(gf(7), 3).rank(), 3);
        let swap = Matrix::from_i64_rows(gf(101), &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(101);
        assert_eq!(Matrix::identity(f, 4).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(f, 2, 3).kernel(), Subspace::full(f, 3));
        // coefficient matrix of (x^2, y^2) over columns (x^2, xy, y^2)
        let m = Matrix::from_i64_rows(f, &[&[1, 0, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k, Subspace::span(f, 3, &[vec![0, 1, 0]]));
    }

    #[test]
    fn orthogonal_complement_examples() {
        let f = gf(5);
        assert_eq!(Subspace::zero(f, 4).orthogonal_complement(), Subspace::full(f, 4));
        assert_eq!(Subspace::full(f, 4).orthogonal_complement(), Subspace::zero(f, 4));
        let u = Subspace::span(f, 2, &[vec![1, 1]]);
        assert_eq!(u.orthogonal_complement(), Subspace::span(f, 2, &[vec![1, 4]]));
    }

    #[test]
    fn canonical_representation() {
        let f = gf(101);
        let a = Subspace::span(f, 3, &[vec![1, 2, 3], vec![0, 1, 1]]);
        let b = Subspace::span(f, 3, &[vec![1, 3, 4], vec![2, 5, 7], vec![1, 2, 3]]);
        assert_eq!(a, b);
    }

    #[test]
    fn echelon_tracks_span() {
        let f = gf(101);
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(&[1, 2, 3]));
        assert!(!e.insert(&[2, 4, 6]));
        assert!(e.insert(&[0, 0, 1]));
        assert!(e.contains(&[1, 2, 0]));
        assert!(!e.contains(&[0, 1, 0]));
        assert_eq!(e.into_subspace().dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let f = gf(101);
        let u = Subspace::span(f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::span(f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(u.intersection(&w), Subspace::span(f, 3, &[vec![0, 1, 0]]));
    }
}
