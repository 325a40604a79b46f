//! Quadratic algebras `⟨V | W⟩` with `W ⊆ V⊗V`.
//!
//! Tensors of degree two are vectors of length `n²`, with `x_i⊗x_j` at
//! index `i·n + j`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::graded::GradedAlgebra;
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::poly::TensorElement;
use crate::series::TruncSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    field: PrimeField,
    n_gens: usize,
    relations: Subspace,
    names: Vec<String>,
}

/// Default generator names `x1, x2, …`.
pub fn default_names(n: usize, stem: &str) -> Vec<String> {
    (1..=n).map(|i| format!("{stem}{i}")).collect()
}

impl QuadraticPresentation {
    pub fn new(field: PrimeField, n_gens: usize, relations: Subspace, names: Vec<String>) -> Self {
        assert_eq!(relations.ambient_dim(), n_gens * n_gens, "relations must live in V⊗V");
        assert_eq!(names.len(), n_gens, "one name per generator");
        Self {
            field,
            n_gens,
            relations,
            names,
        }
    }

    /// Presentation spanned by the given degree-two tensors.
    pub fn from_tensors(field: PrimeField, n_gens: usize, rels: &[TensorElement], names: Vec<String>) -> Result<Self> {
        let mut vecs = Vec::with_capacity(rels.len());
        for r in rels {
            if r.is_zero() {
                continue;
            }
            vecs.push(r.to_vector(2).ok_or(Error::NonHomogeneous)?);
        }
        Ok(Self::new(field, n_gens, Subspace::span(field, n_gens * n_gens, &vecs), names))
    }

    /// The free algebra on `n` generators.
    pub fn free(field: PrimeField, n: usize) -> Self {
        Self::new(field, n, Subspace::zero(field, n * n), default_names(n, "x"))
    }

    /// Exterior algebra: relations `x_i⊗x_i` and `x_i⊗x_j + x_j⊗x_i`.
    pub fn exterior(field: PrimeField, n: usize) -> Self {
        let mut vecs = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut v = vec![0; n * n];
                v[i * n + j] = 1;
                v[j * n + i] = 1;
                vecs.push(v);
            }
        }
        Self::new(field, n, Subspace::span(field, n * n, &vecs), default_names(n, "x"))
    }

    /// Polynomial ring: relations `x_i⊗x_j − x_j⊗x_i`.
    pub fn polynomial(field: PrimeField, n: usize) -> Self {
        let mut vecs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0; n * n];
                v[i * n + j] = 1;
                v[j * n + i] = field.neg(1);
                vecs.push(v);
            }
        }
        Self::new(field, n, Subspace::span(field, n * n, &vecs), default_names(n, "x"))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n_gens);
        self.names = names;
        self
    }

    /// Canonical relation basis as tensors.
    pub fn relation_tensors(&self) -> Vec<TensorElement> {
        self.relations
            .basis_vectors()
            .iter()
            .map(|v| TensorElement::from_vector(self.field, self.n_gens, 2, v))
            .collect()
    }

    pub fn relation_texts(&self) -> Vec<String> {
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        self.relation_tensors().iter().map(|t| t.to_text(&names)).collect()
    }

    /// The quadratic dual, with relation space `W^⊥`.
    pub fn dual(&self) -> QuadraticPresentation {
        let names = self.names.iter().map(|s| format!("{s}*")).collect();
        Self::new(self.field, self.n_gens, self.relations.orthogonal_complement(), names)
    }

    /// The algebra with pieces in degrees `0..=cutoff`, computed as the
    /// degreewise quotient `A_d = (A_{d-1}⊗V) / image(A_{d-2}⊗W)`.
    pub fn algebra(&self, cutoff: usize) -> GradedAlgebra {
        self.algebra_within(cutoff, usize::MAX)
    }

    /// Like [`Self::algebra`], but stops before the first piece whose
    /// dimension exceeds `budget`; the returned cutoff may be smaller.
    pub fn algebra_within(&self, cutoff: usize, budget: usize) -> GradedAlgebra {
        let f = self.field;
        let n = self.n_gens;
        let w = self.relations.basis_vectors();
        let mut dims = vec![1];
        let mut parent: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        let mut right: Vec<Vec<Matrix>> = Vec::new();
        if cutoff >= 1 {
            dims.push(n);
            parent.push((0..n).map(|j| (0, j)).collect());
            right.push(
                (0..n)
                    .map(|j| {
                        let mut m = Matrix::zeros(f, n, 1);
                        m.set(j, 0, 1);
                        m
                    })
                    .collect(),
            );
        }
        for d in 2..=cutoff {
            let prev = dims[d - 1];
            let amb = prev * n;
            // relations: a ⊗ w for a in the basis of A_{d-2}
            let mut rows = Vec::new();
            for a in 0..dims[d - 2] {
                let cols_i: Vec<Vec<Elem>> = (0..n).map(|i| right[d - 2][i].column(a)).collect();
                for wv in &w {
                    let mut row = vec![0; amb];
                    for i in 0..n {
                        for j in 0..n {
                            let c = wv[i * n + j];
                            if c == 0 {
                                continue;
                            }
                            for (b, &v) in cols_i[i].iter().enumerate() {
                                if v != 0 {
                                    let idx = b * n + j;
                                    row[idx] = f.mul_add(row[idx], c, v);
                                }
                            }
                        }
                    }
                    rows.push(row);
                }
            }
            let rel = Subspace::span(f, amb, &rows);
            let free = rel.free_columns();
            let mut pos = vec![usize::MAX; amb];
            for (k, &c) in free.iter().enumerate() {
                pos[c] = k;
            }
            let mut pivot_row = vec![usize::MAX; amb];
            for (r, &c) in rel.pivots().iter().enumerate() {
                pivot_row[c] = r;
            }
            let dim = free.len();
            if dim > budget {
                break;
            }
            let maps = (0..n)
                .map(|j| {
                    let mut m = Matrix::zeros(f, dim, prev);
                    for b in 0..prev {
                        let c = b * n + j;
                        if pos[c] != usize::MAX {
                            m.set(pos[c], b, 1);
                        } else {
                            let row = rel.basis().row(pivot_row[c]);
                            for (k, &fc) in free.iter().enumerate() {
                                if row[fc] != 0 {
                                    m.set(k, b, f.neg(row[fc]));
                                }
                            }
                        }
                    }
                    m
                })
                .collect();
            right.push(maps);
            parent.push(free.iter().map(|&c| (c / n, c % n)).collect());
            dims.push(dim);
        }
        GradedAlgebra::from_right_data(f, n, dims, parent, right)
    }

    pub fn hilbert_series(&self, cutoff: usize) -> TruncSeries {
        self.algebra(cutoff).hilbert_series()
    }

    /// Single-relation rank data, when there is exactly one relation.
    pub fn single_relation_rank(&self) -> Option<QuadRank> {
        self.single_relation().map(|f| relation_rank(&f).expect("degree-two relation"))
    }

    /// The single relation, when the relation space is one-dimensional.
    pub fn single_relation(&self) -> Option<TensorElement> {
        (self.relations.dim() == 1).then(|| self.relation_tensors().remove(0))
    }
}

/// `A^□`: generators `A_1` and relations the kernel of `A_1⊗A_1 → A_2`.
pub fn quadratic_part(a: &GradedAlgebra) -> QuadraticPresentation {
    let n = a.ngens();
    let w = a.multiplication_matrix(1, 1).kernel();
    QuadraticPresentation::new(a.field(), n, w, default_names(n, "x"))
}

pub fn quadratic_dual(a: &QuadraticPresentation) -> QuadraticPresentation {
    a.dual()
}

pub fn hilbert_series_quadratic(a: &QuadraticPresentation, cutoff: usize) -> TruncSeries {
    a.hilbert_series(cutoff)
}

/// Rank of a degree-two relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRank {
    pub relation: TensorElement,
    pub rank: usize,
    pub maximal: bool,
}

/// Coefficient matrix `[ℓ_ij]` of a degree-two tensor.
pub fn coefficient_matrix(f: &TensorElement) -> Result<Matrix> {
    let n = f.n_gens();
    let v = f.to_vector(2).ok_or(Error::NonHomogeneous)?;
    let mut m = Matrix::zeros(f.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, v[i * n + j]);
        }
    }
    Ok(m)
}

pub fn relation_rank(f: &TensorElement) -> Result<QuadRank> {
    if !f.is_zero() && f.homogeneous_degree() != Some(2) {
        return Err(Error::NonHomogeneous);
    }
    let rank = coefficient_matrix(f)?.rank();
    Ok(QuadRank {
        relation: f.clone(),
        rank,
        maximal: rank == f.n_gens(),
    })
}

/// Frobenius certificate of a finite-dimensional graded algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCertificate {
    pub is_frobenius: bool,
    pub socle_dim: usize,
    pub sup: usize,
}

/// Socle criterion: a finite-dimensional connected algebra is Frobenius
/// (equivalently Gorenstein) iff its socle is one-dimensional.
pub fn frobenius_check(a: &GradedAlgebra) -> Result<FrobeniusCertificate> {
    let sup = a.top_degree().ok_or(Error::NotFiniteDimensional { cutoff: a.cutoff() })?;
    let socle_dim: usize = a.socle_dims().iter().sum();
    Ok(FrobeniusCertificate {
        is_frobenius: socle_dim == 1,
        socle_dim,
        sup,
    })
}

/// Frobenius via duality: `dim A_sup = 1` and every multiplication pairing
/// `A_i × A_{sup-i} → A_sup` is nondegenerate.
pub fn frobenius_pairing_check(a: &GradedAlgebra) -> Result<bool> {
    let sup = a.top_degree().ok_or(Error::NotFiniteDimensional { cutoff: a.cutoff() })?;
    if a.dim(sup) != 1 {
        return Ok(false);
    }
    for i in 0..=sup {
        let (p, q) = (a.dim(i), a.dim(sup - i));
        if p != q {
            return Ok(false);
        }
        // pairing matrix: entry (x, y) is the coefficient of x·y
        let m = a.multiplication_matrix(i, sup - i);
        let mut pair = Matrix::zeros(a.field(), p, q);
        for x in 0..p {
            for y in 0..q {
                pair.set(x, y, m.get(0, x * q + y));
            }
        }
        if pair.rank() != p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nondegeneracy of `B_1 ⊗ B_1 → B_2` for `dim B_2 = 1`.
pub fn degree_one_pairing_nondegenerate(b: &GradedAlgebra) -> bool {
    if b.dim(2) != 1 {
        return false;
    }
    let n = b.dim(1);
    let m = b.multiplication_matrix(1, 1);
    let mut pair = Matrix::zeros(b.field(), n, n);
    for x in 0..n {
        for y in 0..n {
            pair.set(x, y, m.get(0, x * n + y));
        }
    }
    pair.rank() == n
}

/// Largest piece dimension built for Hilbert-series checks.
pub const PIECE_BUDGET: usize = 3000;
/// Largest piece dimension of an algebra that gets resolved over.
pub const RESOLUTION_BUDGET: usize = 1000;

/// Truncated Koszulness evidence for a quadratic algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulCertificate {
    /// Degree to which both checks were run.
    pub cutoff: usize,
    /// `H_A(t)·H_{A^!}(-t) = 1` up to `t^cutoff`.
    pub series_identity_ok: bool,
    pub first_series_failure: Option<usize>,
    /// `β_{ij}(k) = 0` for `i ≠ j`, `i ≤ cutoff`, in internal degrees
    /// `≤ deg_cutoff` (lowered to keep pieces within [`RESOLUTION_BUDGET`]).
    pub diagonal_betti_ok: bool,
    pub first_off_diagonal: Option<(usize, usize)>,
    pub deg_cutoff: usize,
}

impl KoszulCertificate {
    pub fn passes(&self) -> bool {
        self.series_identity_ok && self.diagonal_betti_ok
    }
}

/// Both necessary conditions for Koszulness, checked to `cutoff` (lowered
/// if a piece of `A` or `A^!` would exceed [`PIECE_BUDGET`]).
pub fn koszul_numeric_check(a: &QuadraticPresentation, cutoff: usize) -> KoszulCertificate {
    let alg = a.algebra_within(cutoff, PIECE_BUDGET);
    let dual = a.dual().algebra_within(cutoff, PIECE_BUDGET);
    let c = alg.cutoff().min(dual.cutoff());
    let h = alg.hilbert_series().truncate(c);
    let hd = dual.hilbert_series().truncate(c).negate_variable();
    let prod = h.mul(&hd);
    let first_series_failure = prod.first_difference(&TruncSeries::one(c));
    let small = a.algebra_within(cutoff + 2, RESOLUTION_BUDGET);
    let d_max = small.cutoff();
    let res = crate::resolve::resolve_residue_field_graded(&small, c, d_max);
    let first_off_diagonal = res.betti().first_off_diagonal();
    KoszulCertificate {
        cutoff: c,
        series_identity_ok: first_series_failure.is_none(),
        first_series_failure,
        diagonal_betti_ok: first_off_diagonal.is_none(),
        first_off_diagonal,
        deg_cutoff: d_max,
    }
}

/// Echelon basis of `A_d` as a subspace of `V^{⊗d}`-quotient, computed by
/// the brute-force route: `I_d = Σ_i V^{⊗i}⊗W⊗V^{⊗(d-2-i)}`. Returns `dim A_d`.
pub fn brute_force_piece_dim(a: &QuadraticPresentation, d: usize) -> usize {
    let n = a.n_gens;
    if d < 2 {
        return n.pow(d as u32);
    }
    let total = n.pow(d as u32);
    let mut ech = Echelon::new(a.field, total);
    let w = a.relations.basis_vectors();
    for i in 0..=d - 2 {
        let left = n.pow(i as u32);
        let right = n.pow((d - 2 - i) as u32);
        for l in 0..left {
            for r in 0..right {
                for wv in &w {
                    let mut v = vec![0; total];
                    for (k, &c) in wv.iter().enumerate() {
                        if c != 0 {
                            v[(l * n * n + k) * right + r] = c;
                        }
                    }
                    ech.insert(&v);
                }
            }
        }
    }
    total - ech.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_tensor;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn pres(names: &[&str], rels: &[&str]) -> QuadraticPresentation {
        let ts: Vec<TensorElement> = rels.iter().map(|r| parse_tensor(r, names, f()).unwrap()).collect();
        QuadraticPresentation::from_tensors(f(), names.len(), &ts, names.iter().map(|s| String::from(*s)).collect())
            .unwrap()
    }

    #[test]
    fn anticommuting_pair_has_polynomial_growth() {
        let a = pres(&["u", "z"], &["u*z + z*u"]);
        assert_eq!(a.hilbert_series(6).coeffs(), &[1, 2, 3, 4, 5, 6, 7]);
        let d = a.dual();
        assert_eq!(d.hilbert_series(4).coeffs(), &[1, 2, 1, 0, 0]);
    }

    #[test]
    fn exterior_and_free() {
        assert_eq!(QuadraticPresentation::exterior(f(), 2).hilbert_series(4).coeffs(), &[1, 2, 1, 0, 0]);
        assert_eq!(QuadraticPresentation::free(f(), 3).hilbert_series(3).coeffs(), &[1, 3, 9, 27]);
        let full = QuadraticPresentation::new(f(), 2, Subspace::full(f(), 4), default_names(2, "x"));
        assert_eq!(full.hilbert_series(3).coeffs(), &[1, 2, 0, 0]);
        assert_eq!(full.dual().relations().dim(), 0);
    }

    #[test]
    fn dual_is_an_involution() {
        let a = pres(&["x", "y", "z"], &["x*y - 2*y*x", "z*z + x*y"]);
        assert_eq!(a.dual().dual().relations(), a.relations());
    }

    #[test]
    fn ranks() {
        let names = ["x", "y"];
        assert_eq!(relation_rank(&parse_tensor("x*x", &names, f()).unwrap()).unwrap().rank, 1);
        let r = relation_rank(&parse_tensor("x*y + y*x", &names, f()).unwrap()).unwrap();
        assert_eq!((r.rank, r.maximal), (2, true));
        assert_eq!(
            relation_rank(&parse_tensor("x*y*x", &names, f()).unwrap()).unwrap_err(),
            Error::NonHomogeneous
        );
    }

    #[test]
    fn frobenius_examples() {
        let ext = QuadraticPresentation::exterior(f(), 2).algebra(4);
        let c = frobenius_check(&ext).unwrap();
        assert_eq!((c.is_frobenius, c.socle_dim, c.sup), (true, 1, 2));
        assert!(frobenius_pairing_check(&ext).unwrap());
        let free = QuadraticPresentation::free(f(), 2).algebra(3);
        assert_eq!(frobenius_check(&free).unwrap_err(), Error::NotFiniteDimensional { cutoff: 3 });
    }

    #[test]
    fn koszul_examples() {
        let a = pres(&["u", "z"], &["u*z + z*u"]);
        let c = koszul_numeric_check(&a, 8);
        assert!(c.passes() && c.cutoff == 8);
        assert!(koszul_numeric_check(&QuadraticPresentation::free(f(), 1), 6).passes());
        // ⟨x,y | x⊗y⟩ is Koszul (monomial), so both checks pass together
        let b = pres(&["x", "y"], &["x*y"]);
        let c = koszul_numeric_check(&b, 6);
        assert_eq!(c.series_identity_ok, c.diagonal_betti_ok);
    }

    #[test]
    fn budget_lowers_the_cutoff() {
        let a = QuadraticPresentation::free(f(), 3);
        assert_eq!(a.algebra_within(10, 100).cutoff(), 4);
    }

    #[test]
    fn quotient_matches_brute_force() {
        let a = pres(&["x", "y", "z"], &["x*y - y*x", "z*z", "x*z + 3*z*y"]);
        let alg = a.algebra(5);
        for d in 0..=5 {
            assert_eq!(alg.dim(d), brute_force_piece_dim(&a, d), "degree {d}");
        }
    }
}
