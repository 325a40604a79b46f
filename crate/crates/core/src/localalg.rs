//! Artinian local algebras `k[x_1..x_n]/(f_1..f_c)` as finite-dimensional
//! algebras with an explicit monomial basis.
//!
//! Working in `S_{≤T} = S/𝔫^{T+1}`, the ideal is spanned by the truncated
//! products `m·f_h`. Echelonizing with monomials ordered by ascending degree
//! makes the reduction local: non-pivot monomials form a basis of
//! `R/𝔪^{T+1}` compatible with the 𝔪-adic filtration. Once the degree-`T`
//! piece vanishes, `𝔪^T = 𝔪^{T+1}` and Nakayama gives `𝔪^T = 0`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::graded::GradedAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{Monomial, MonomialIndex, Polynomial};

/// Default degree cap for [`build_finite_algebra`].
pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug)]
pub struct RingPresentation {
    field: PrimeField,
    vars: Vec<String>,
    relations: Vec<Polynomial>,
}

impl RingPresentation {
    /// Rejects presentations without variables and relations with a
    /// constant or linear term.
    pub fn new(field: PrimeField, vars: Vec<String>, relations: Vec<Polynomial>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::NoVariables);
        }
        for (index, f) in relations.iter().enumerate() {
            if f.nvars() != vars.len() {
                return Err(Error::InvalidArgument("relation has the wrong number of variables"));
            }
            if f.order().is_some_and(|o| o < 2) {
                return Err(Error::RelationNotInSquare { index });
            }
        }
        Ok(Self {
            field,
            vars,
            relations,
        })
    }

    /// Parses relations written in the polynomial grammar.
    pub fn parse(field: PrimeField, vars: &[&str], relations: &[&str]) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|r| crate::poly::parse_polynomial(r, vars, field))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, vars.iter().map(|v| String::from(*v)).collect(), rels)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }
}

/// Echelon form of the truncated ideal inside `S_{≤T}`.
struct TruncatedIdeal {
    index: MonomialIndex,
    rref: Matrix,
    pivots: Vec<usize>,
}

/// Span of `m·f_h` truncated at degree `t`, over monomials `m` with
/// `deg m ≥ min_mult_degree`.
fn truncated_ideal(p: &RingPresentation, t: usize, min_mult_degree: usize) -> TruncatedIdeal {
    let f = p.field;
    let n = p.nvars();
    let index = MonomialIndex::new(n, t);
    let mut rows = Vec::new();
    for rel in &p.relations {
        let Some(order) = rel.order() else { continue };
        let order = order as usize;
        if order > t {
            continue;
        }
        for mi in 0..index.len() {
            let m = index.monomial(mi);
            let dm = m.degree() as usize;
            if dm < min_mult_degree {
                continue;
            }
            if dm + order > t {
                break;
            }
            let mut row = vec![0; index.len()];
            for (mono, c) in rel.terms() {
                let prod = mono.mul(m);
                if prod.degree() as usize <= t {
                    row[index.position(&prod).unwrap()] = c;
                }
            }
            rows.push(row);
        }
    }
    let mut rref = Matrix::from_rows(f, index.len(), &rows);
    let pivots = rref.rref_in_place();
    TruncatedIdeal {
        index,
        rref,
        pivots,
    }
}

/// An artinian local algebra with basis the standard monomials.
#[derive(Clone, Debug)]
pub struct FiniteLocalAlgebra {
    presentation: RingPresentation,
    /// Degree `T` with `𝔪^T = 0`, i.e. `s + 1`.
    nilpotency: usize,
    index: MonomialIndex,
    /// Standard monomials, as indices into `index`, in ascending degree.
    basis: Vec<usize>,
    /// `degree_start[i]` is the first basis index of degree `i`.
    degree_start: Vec<usize>,
    /// Normal form of every monomial of degree ≤ T, in basis coordinates.
    normal_forms: Vec<Vec<Elem>>,
    /// `table[a * len + b]` is the product of basis elements `a` and `b`.
    table: Vec<Vec<Elem>>,
}

/// Builds `R = k[x]/(f)` by truncated linear algebra, certifying `𝔪^T = 0`
/// at the first `T ≤ degree_cap` where the degree-`T` piece vanishes.
pub fn build_finite_algebra(p: &RingPresentation, degree_cap: usize) -> Result<FiniteLocalAlgebra> {
    if degree_cap < 2 {
        return Err(Error::InvalidArgument("degree cap must be at least 2"));
    }
    if p.relations.iter().all(Polynomial::is_zero) {
        return Err(Error::NotArtinianAtCap { cap: degree_cap });
    }
    for t in 2..=degree_cap {
        let ideal = truncated_ideal(p, t, 0);
        let top = ideal.index.degree_range(t);
        let is_pivot = pivot_mask(&ideal);
        if top.clone().all(|c| is_pivot[c]) {
            return Ok(FiniteLocalAlgebra::from_ideal(p.clone(), t, ideal, &is_pivot));
        }
    }
    Err(Error::NotArtinianAtCap { cap: degree_cap })
}

fn pivot_mask(ideal: &TruncatedIdeal) -> Vec<bool> {
    let mut mask = vec![false; ideal.index.len()];
    for &c in &ideal.pivots {
        mask[c] = true;
    }
    mask
}

impl FiniteLocalAlgebra {
    fn from_ideal(presentation: RingPresentation, t: usize, ideal: TruncatedIdeal, is_pivot: &[bool]) -> Self {
        let f = presentation.field;
        let basis: Vec<usize> = (0..ideal.index.len()).filter(|&c| !is_pivot[c]).collect();
        let len = basis.len();
        let mut pos = vec![usize::MAX; ideal.index.len()];
        for (i, &c) in basis.iter().enumerate() {
            pos[c] = i;
        }
        let mut degree_start = Vec::with_capacity(t + 1);
        for d in 0..=t {
            let first = ideal.index.degree_range(d).start;
            degree_start.push(basis.iter().position(|&c| c >= first).unwrap_or(len));
        }
        let mut normal_forms = vec![vec![0; len]; ideal.index.len()];
        for &c in &basis {
            normal_forms[c][pos[c]] = 1;
        }
        for (r, &pc) in ideal.pivots.iter().enumerate() {
            let row = ideal.rref.row(r);
            for &c in &basis {
                if row[c] != 0 {
                    normal_forms[pc][pos[c]] = f.neg(row[c]);
                }
            }
        }
        let mut alg = Self {
            presentation,
            nilpotency: t,
            index: ideal.index,
            basis,
            degree_start,
            normal_forms,
            table: Vec::new(),
        };
        let mut table = Vec::with_capacity(len * len);
        for a in 0..len {
            for b in 0..len {
                let m = alg.basis_monomial(a).mul(alg.basis_monomial(b));
                table.push(alg.monomial_normal_form(&m));
            }
        }
        alg.table = table;
        alg
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn field(&self) -> PrimeField {
        self.presentation.field
    }

    /// Embedding dimension `n = dim 𝔪/𝔪²`.
    pub fn edim(&self) -> usize {
        self.presentation.nvars()
    }

    /// Length of `R`, which is also its multiplicity `e(R)`.
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Smallest `T` with `𝔪^T = 0`.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// Top degree `s` of the associated graded ring.
    pub fn top_degree(&self) -> usize {
        self.nilpotency - 1
    }

    /// `dim 𝔪^i/𝔪^{i+1}` for `i = 0..=s`.
    pub fn filtration_dims(&self) -> Vec<usize> {
        (0..self.nilpotency)
            .map(|d| self.degree_start[d + 1] - self.degree_start[d])
            .collect()
    }

    /// Basis indices of filtration degree `d`.
    pub fn degree_range(&self, d: usize) -> core::ops::Range<usize> {
        if d >= self.nilpotency {
            return self.len()..self.len();
        }
        self.degree_start[d]..self.degree_start[d + 1]
    }

    /// Filtration degree of a basis element.
    pub fn basis_degree(&self, b: usize) -> usize {
        self.basis_monomial(b).degree() as usize
    }

    pub fn basis_monomial(&self, b: usize) -> &Monomial {
        self.index.monomial(self.basis[b])
    }

    /// Normal form of a monomial; zero above the nilpotency degree.
    pub fn monomial_normal_form(&self, m: &Monomial) -> Vec<Elem> {
        match self.index.position(m) {
            Some(i) => self.normal_forms[i].clone(),
            None => vec![0; self.len()],
        }
    }

    pub fn polynomial_normal_form(&self, p: &Polynomial) -> Vec<Elem> {
        let f = self.field();
        let mut out = vec![0; self.len()];
        for (m, c) in p.terms() {
            if let Some(i) = self.index.position(m) {
                for (o, &v) in out.iter_mut().zip(&self.normal_forms[i]) {
                    *o = f.mul_add(*o, c, v);
                }
            }
        }
        out
    }

    /// Basis index of the variable `x_i`.
    pub fn var_index(&self, i: usize) -> usize {
        // variables are never pivots, and degree-one standard monomials
        // follow the grlex-descending order x_1, x_2, …
        self.degree_start[1] + i
    }

    pub fn unit(&self) -> Vec<Elem> {
        let mut v = vec![0; self.len()];
        v[0] = 1;
        v
    }

    pub fn basis_vector(&self, b: usize) -> Vec<Elem> {
        let mut v = vec![0; self.len()];
        v[b] = 1;
        v
    }

    pub fn basis_product(&self, a: usize, b: usize) -> &[Elem] {
        &self.table[a * self.len() + b]
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let len = self.len();
        let mut out = vec![0; len];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (o, &v) in out.iter_mut().zip(&self.table[i * len + j]) {
                    if v != 0 {
                        *o = f.mul_add(*o, c, v);
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `a` on `R`.
    pub fn multiplication_matrix(&self, a: &[Elem]) -> Matrix {
        let cols: Vec<Vec<Elem>> = (0..self.len()).map(|b| self.mul(a, &self.basis_vector(b))).collect();
        Matrix::from_columns(self.field(), self.len(), &cols)
    }

    /// `𝔪^m` as a coordinate subspace of `R`.
    pub fn max_ideal_power(&self, m: usize) -> Subspace {
        let start = if m >= self.nilpotency { self.len() } else { self.degree_start[m] };
        let vecs: Vec<Vec<Elem>> = (start..self.len()).map(|b| self.basis_vector(b)).collect();
        Subspace::span(self.field(), self.len(), &vecs)
    }

    /// Degree-one component of `a` in `𝔪/𝔪²` (coefficients of `x_1..x_n`).
    pub fn linear_component(&self, a: &[Elem]) -> Vec<Elem> {
        a[self.degree_range(1)].to_vec()
    }

    /// Socle `(0 : 𝔪)`.
    pub fn socle(&self) -> Subspace {
        let len = self.len();
        let mut rows = Vec::with_capacity(self.edim() * len);
        for i in 0..self.edim() {
            let m = self.multiplication_matrix(&self.basis_vector(self.var_index(i)));
            for r in 0..len {
                rows.push(m.row(r).to_vec());
            }
        }
        Matrix::from_rows(self.field(), len, &rows).kernel()
    }

    /// The associated graded ring `R^g = ⊕ 𝔪^i/𝔪^{i+1}`, with pieces up to
    /// `cutoff` (zero above the top degree).
    pub fn associated_graded(&self, cutoff: usize) -> GradedAlgebra {
        let f = self.field();
        let n = self.edim();
        let dims: Vec<usize> = (0..=cutoff).map(|d| self.degree_range(d).len()).collect();
        let mut parent = vec![Vec::new()];
        for q in 1..=cutoff {
            let par = self
                .degree_range(q)
                .map(|b| {
                    let m = self.basis_monomial(b);
                    let j = (0..n).rev().find(|&j| m.0[j] > 0).unwrap();
                    let mut pm = m.clone();
                    pm.0[j] -= 1;
                    let pi = self.index.position(&pm).unwrap();
                    let pb = self.basis.iter().position(|&c| c == pi).unwrap();
                    (pb - self.degree_start[q - 1], j)
                })
                .collect();
            parent.push(par);
        }
        let mut right = Vec::with_capacity(cutoff);
        for q in 0..cutoff {
            let src = self.degree_range(q);
            let dst = self.degree_range(q + 1);
            let maps = (0..n)
                .map(|j| {
                    let x = self.var_index(j);
                    let cols: Vec<Vec<Elem>> = src
                        .clone()
                        .map(|b| self.basis_product(b, x)[dst.clone()].to_vec())
                        .collect();
                    Matrix::from_columns(f, dst.len(), &cols)
                })
                .collect();
            right.push(maps);
        }
        GradedAlgebra::from_right_data(f, n, dims, parent, right)
    }

    /// Number of minimal generators of the defining ideal, computed as
    /// `dim (I + 𝔫^{T+1})/(𝔫I + 𝔫^{T+1})`.
    pub fn minimal_generator_count(&self) -> usize {
        let p = &self.presentation;
        let t = self.nilpotency;
        let all = truncated_ideal(p, t, 0);
        let shifted = truncated_ideal(p, t, 1);
        all.pivots.len() - shifted.pivots.len()
    }

    /// Whether the defining ideal is minimally generated by `edim` elements.
    pub fn is_complete_intersection(&self) -> bool {
        self.minimal_generator_count() == self.edim()
    }

    /// Hilbert function `H_R(t)` as a polynomial.
    pub fn hilbert_polynomial(&self) -> Vec<i64> {
        self.filtration_dims().iter().map(|&d| d as i64).collect()
    }
}

/// Free-standing spelling of [`FiniteLocalAlgebra::minimal_generator_count`].
pub fn minimal_generator_count(r: &FiniteLocalAlgebra) -> usize {
    r.minimal_generator_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn ring(vars: &[&str], rels: &[&str]) -> FiniteLocalAlgebra {
        let p = RingPresentation::parse(PrimeField::default(), vars, rels).unwrap();
        build_finite_algebra(&p, 6).unwrap()
    }

    #[test]
    fn filtrations_of_small_rings() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        assert_eq!(r.filtration_dims(), vec![1, 2, 1]);
        assert_eq!(r.nilpotency(), 3);
        assert_eq!(ring(&["x"], &["x^3"]).filtration_dims(), vec![1, 1, 1]);
        let fiber = ring(&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z"]);
        assert_eq!(fiber.filtration_dims(), vec![1, 3, 1]);
        assert_eq!(fiber.len(), 5);
    }

    #[test]
    fn rejects_bad_presentations() {
        let f = PrimeField::default();
        assert_eq!(
            RingPresentation::parse(f, &["x"], &["x"]).unwrap_err(),
            Error::RelationNotInSquare { index: 0 }
        );
        assert_eq!(RingPresentation::parse(f, &[], &[]).unwrap_err(), Error::NoVariables);
        let p = RingPresentation::parse(f, &["x", "y"], &["x^2"]).unwrap();
        assert_eq!(build_finite_algebra(&p, 6).unwrap_err(), Error::NotArtinianAtCap { cap: 6 });
        let p = RingPresentation::parse(f, &["x"], &[]).unwrap();
        assert!(matches!(build_finite_algebra(&p, 6), Err(Error::NotArtinianAtCap { .. })));
    }

    #[test]
    fn socles() {
        assert_eq!(ring(&["x", "y"], &["x^2", "y^2"]).socle().dim(), 1);
        assert_eq!(ring(&["x", "y"], &["x^2", "x*y", "y^2"]).socle().dim(), 2);
        let fiber = ring(&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z"]);
        assert_eq!(fiber.socle().dim(), 2);
    }

    #[test]
    fn generator_counts() {
        assert_eq!(ring(&["x", "y"], &["x^2", "y^2", "x^2+y^2"]).minimal_generator_count(), 2);
        assert_eq!(ring(&["x", "y"], &["x^2", "y^2"]).minimal_generator_count(), 2);
        assert_eq!(ring(&["x"], &["x^3"]).minimal_generator_count(), 1);
        // x^3 - y^3 lies in (xy) + 𝔫·(xy, x^3 - y^3)? no: it is a genuine generator
        assert_eq!(ring(&["x", "y"], &["x*y", "x^3-y^3"]).minimal_generator_count(), 2);
    }

    #[test]
    fn associated_graded_matches_filtration() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let g = r.associated_graded(4);
        assert_eq!(g.dims(), &[1, 2, 1, 0, 0]);
        let x = [1, 0];
        let y = [0, 1];
        assert_ne!(g.mul(1, &x, 1, &y), vec![0]);
        let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let g = r.associated_graded(3);
        assert!(g.multiplication_matrix(1, 1).is_zero());
    }

    #[test]
    fn table_is_commutative_and_associative() {
        let r = ring(&["x", "y", "z"], &["x*y", "x*z", "y*z", "x^2-y^2", "x^2-z^2"]);
        assert_eq!(r.filtration_dims(), vec![1, 3, 1]);
        let n = r.len();
        let e: Vec<Vec<Elem>> = (0..n).map(|i| r.basis_vector(i)).collect();
        for a in &e {
            for b in &e {
                assert_eq!(r.mul(a, b), r.mul(b, a));
                for c in &e {
                    assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
                }
            }
        }
    }
}
