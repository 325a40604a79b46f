//! Degree-truncated connected graded algebras generated in degree one.
//!
//! Every basis element `b` of `A_q` (q ≥ 1) is stored as an explicit product
//! `parent · x_j` with `parent` a basis element of `A_{q-1}`, so arbitrary
//! products reduce to repeated right multiplication by generators.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Elem, PrimeField};
use crate::linalg::{Echelon, Matrix};
use crate::poly::Word;
use crate::series::TruncSeries;

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    field: PrimeField,
    ngens: usize,
    dims: Vec<usize>,
    /// `parent[q][b] = (p, j)` means `b = p · x_j`; empty for q = 0.
    parent: Vec<Vec<(usize, usize)>>,
    /// `right[q][j]` is the matrix of `a ↦ a·x_j : A_q → A_{q+1}`.
    right: Vec<Vec<Matrix>>,
}

impl GradedAlgebra {
    /// Assembles an algebra from its right-multiplication data.
    pub(crate) fn from_right_data(
        field: PrimeField,
        ngens: usize,
        dims: Vec<usize>,
        parent: Vec<Vec<(usize, usize)>>,
        right: Vec<Vec<Matrix>>,
    ) -> Self {
        Self {
            field,
            ngens,
            dims,
            parent,
            right,
        }
    }

    /// `maps[q][i]` is the matrix of `a ↦ x_i·a : A_q → A_{q+1}`, built from
    /// `x_i·(p·x_j) = (x_i·p)·x_j`.
    pub fn left_maps(&self) -> Vec<Vec<Matrix>> {
        let cutoff = self.cutoff();
        let mut left: Vec<Vec<Matrix>> = Vec::with_capacity(cutoff);
        for q in 0..cutoff {
            let per_gen = (0..self.ngens)
                .map(|i| {
                    if q == 0 {
                        let mut m = Matrix::zeros(self.field, self.dims[1], 1);
                        if self.dims[1] > 0 {
                            m.set(i, 0, 1);
                        }
                        return m;
                    }
                    let prev = &left[q - 1][i];
                    let cols: Vec<Vec<Elem>> = (0..self.dims[q])
                        .map(|b| {
                            let (p, j) = self.parent[q][b];
                            self.right[q][j].mul_vec(&prev.column(p))
                        })
                        .collect();
                    Matrix::from_columns(self.field, self.dims[q + 1], &cols)
                })
                .collect();
            left.push(per_gen);
        }
        left
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Highest degree whose piece is known.
    pub fn cutoff(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, q: usize) -> usize {
        self.dims.get(q).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn hilbert_series(&self) -> TruncSeries {
        TruncSeries::from_coeffs(self.dims.iter().map(|&d| d as i64).collect())
    }

    /// First degree with a zero piece, if one is visible within the cutoff.
    /// Since the algebra is generated in degree one, everything above it vanishes.
    pub fn first_zero_degree(&self) -> Option<usize> {
        self.dims.iter().position(|&d| d == 0)
    }

    /// `sup A` when the algebra is certified finite-dimensional.
    pub fn top_degree(&self) -> Option<usize> {
        self.first_zero_degree().map(|z| z - 1)
    }

    pub fn right_gen(&self, q: usize, j: usize) -> &Matrix {
        &self.right[q][j]
    }

    pub fn parent(&self, q: usize, b: usize) -> (usize, usize) {
        self.parent[q][b]
    }

    /// A word whose image is the basis element `b` of `A_q`.
    pub fn word(&self, q: usize, b: usize) -> Word {
        let mut w = Vec::with_capacity(q);
        let (mut deg, mut cur) = (q, b);
        while deg > 0 {
            let (p, j) = self.parent[deg][cur];
            w.push(j);
            cur = p;
            deg -= 1;
        }
        w.reverse();
        w
    }

    /// `a · b` for every basis element `b` of `A_q`, where `a ∈ A_p`.
    pub fn right_images(&self, p: usize, a: &[Elem], q: usize) -> Vec<Vec<Elem>> {
        assert!(p + q <= self.cutoff(), "product beyond the cutoff");
        let mut levels: Vec<Vec<Vec<Elem>>> = Vec::with_capacity(q + 1);
        levels.push(vec![a.to_vec()]);
        for r in 1..=q {
            let prev = &levels[r - 1];
            let cur: Vec<Vec<Elem>> = (0..self.dims[r])
                .map(|b| {
                    let (par, j) = self.parent[r][b];
                    self.right[p + r - 1][j].mul_vec(&prev[par])
                })
                .collect();
            levels.push(cur);
        }
        levels.pop().unwrap()
    }

    /// Product of homogeneous elements `a ∈ A_p`, `b ∈ A_q`.
    pub fn mul(&self, p: usize, a: &[Elem], q: usize, b: &[Elem]) -> Vec<Elem> {
        let f = self.field;
        let imgs = self.right_images(p, a, q);
        let mut out = vec![0; self.dims[p + q]];
        for (c, img) in b.iter().zip(&imgs) {
            if *c == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(img) {
                *o = f.mul_add(*o, *c, v);
            }
        }
        out
    }

    /// Multiplication map `A_p ⊗ A_q → A_{p+q}` as a matrix whose column
    /// `a·dim(A_q) + b` is the product of basis elements `a` and `b`.
    pub fn multiplication_matrix(&self, p: usize, q: usize) -> Matrix {
        let mut cols = Vec::with_capacity(self.dims[p] * self.dims[q]);
        for a in 0..self.dims[p] {
            let mut e = vec![0; self.dims[p]];
            e[a] = 1;
            cols.extend(self.right_images(p, &e, q));
        }
        Matrix::from_columns(self.field, self.dims[p + q], &cols)
    }

    /// The opposite algebra, with a fresh parent structure.
    pub fn opposite(&self) -> GradedAlgebra {
        let f = self.field;
        let cutoff = self.cutoff();
        let mut dims = vec![1];
        let mut parent: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        let mut right: Vec<Vec<Matrix>> = Vec::new();
        // new basis of degree q expressed in old coordinates
        let mut new_basis: Vec<Vec<Vec<Elem>>> = vec![vec![vec![1]]];
        let left = self.left_maps();
        for q in 1..=cutoff {
            let d = self.dims[q];
            // candidates x_j ·_A b for b in the new basis of degree q-1
            let mut ech = Echelon::new(f, d);
            let mut chosen = Vec::new();
            let mut chosen_parent = Vec::new();
            'outer: for (pb, vb) in new_basis[q - 1].iter().enumerate() {
                for (j, lj) in left[q - 1].iter().enumerate() {
                    let cand = lj.mul_vec(vb);
                    if ech.insert(&cand) {
                        chosen.push(cand);
                        chosen_parent.push((pb, j));
                        if chosen.len() == d {
                            break 'outer;
                        }
                    }
                }
            }
            assert_eq!(chosen.len(), d, "algebra is not generated in degree one");
            let change = Matrix::from_columns(f, d, &chosen);
            let inv = invert(&change);
            // right multiplication in the opposite algebra by x_j is left multiplication in A
            let maps: Vec<Matrix> = (0..self.ngens)
                .map(|j| {
                    inv.mul(&left[q - 1][j])
                        .mul(&Matrix::from_columns(f, self.dims[q - 1], &new_basis[q - 1]))
                })
                .collect();
            right.push(maps);
            dims.push(d);
            parent.push(chosen_parent);
            new_basis.push(chosen);
        }
        GradedAlgebra::from_right_data(f, self.ngens, dims, parent, right)
    }

    /// Right socle `{a : a·A_+ = 0}` dimension per degree.
    pub fn socle_dims(&self) -> Vec<usize> {
        let cutoff = self.cutoff();
        (0..=cutoff)
            .map(|q| {
                if q == cutoff {
                    // products leave the window; only a certified-zero top is usable
                    return self.dims[q];
                }
                let mut rows = Vec::new();
                for j in 0..self.ngens {
                    let m = &self.right[q][j];
                    for r in 0..m.rows() {
                        rows.push(m.row(r).to_vec());
                    }
                }
                Matrix::from_rows(self.field, self.dims[q], &rows).kernel().dim()
            })
            .collect()
    }
}

/// Inverse of a square invertible matrix.
pub(crate) fn invert(m: &Matrix) -> Matrix {
    let n = m.rows();
    assert_eq!(n, m.cols(), "inverse of a non-square matrix");
    let f = m.field();
    let mut aug = Matrix::zeros(f, n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, n + r, 1);
    }
    let piv = aug.rref_in_place();
    assert!(piv.len() == n && piv[n - 1] == n - 1, "matrix is singular");
    let mut inv = Matrix::zeros(f, n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, aug.get(r, n + c));
        }
    }
    inv
}
