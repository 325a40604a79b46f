//! The Ext-algebra `𝓔_R = Ext_R(k, k)` through its degree-two presentation
//! and Betti numbers, and the checkers built on it.
//!
//! Products beyond degree two are never computed: `dim 𝓔^i = β_i(k)` and
//! the quadratic model `A = ⟨ξ_1..ξ_n | relations⟩` carry everything else.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{Matrix, Subspace};
use crate::localalg::FiniteLocalAlgebra;
use crate::quadratic::{
    frobenius_check, koszul_numeric_check, quadratic_part, relation_rank, KoszulCertificate, QuadraticPresentation,
    PIECE_BUDGET, RESOLUTION_BUDGET,
};
use crate::resolve::{graded_ring, resolve_residue_field, resolve_residue_field_graded};
use crate::series::{binomial, poincare_series, TruncSeries};

/// Degree-two relations of `𝓔_R` read off the defining relations.
#[derive(Clone, Debug)]
pub struct SjodinPresentation {
    pub n: usize,
    /// `c × C(n+1,2)`; columns are `x_i x_j` for `i ≤ j` in lexicographic order.
    pub coeff_matrix: Matrix,
    /// Symmetric tensors in `V*⊗V*`, index `i·n + j`.
    pub relation_space: Subspace,
    pub names: Vec<String>,
}

impl SjodinPresentation {
    pub fn algebra(&self) -> QuadraticPresentation {
        QuadraticPresentation::new(
            self.coeff_matrix.field(),
            self.n,
            self.relation_space.clone(),
            self.names.clone(),
        )
    }

    pub fn relation_count(&self) -> usize {
        self.relation_space.dim()
    }
}

/// Pairs `(i, j)` with `i ≤ j`, in column order.
pub fn symmetric_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// The Sjödin presentation. The relations must generate the ideal minimally.
pub fn sjodin_presentation(r: &FiniteLocalAlgebra) -> Result<SjodinPresentation> {
    let p = r.presentation();
    let f = p.field();
    let n = p.nvars();
    let minimal = r.minimal_generator_count();
    if p.relations().len() != minimal {
        return Err(Error::NonMinimalPresentation {
            given: p.relations().len(),
            minimal,
        });
    }
    let pairs = symmetric_pairs(n);
    let rows: Vec<Vec<Elem>> = p
        .relations()
        .iter()
        .map(|rel| {
            let q = rel.homogeneous_part(2);
            pairs
                .iter()
                .map(|&(i, j)| {
                    let mut e = vec![0u32; n];
                    e[i] += 1;
                    e[j] += 1;
                    q.coefficient(&crate::poly::Monomial(e))
                })
                .collect()
        })
        .collect();
    let coeff_matrix = Matrix::from_rows(f, pairs.len(), &rows);
    let kernel = coeff_matrix.kernel();
    let tensors: Vec<Vec<Elem>> = kernel
        .basis_vectors()
        .iter()
        .map(|b| {
            let mut t = vec![0; n * n];
            for (&(i, j), &c) in pairs.iter().zip(b) {
                t[i * n + j] = c;
                t[j * n + i] = c;
            }
            t
        })
        .collect();
    let names = p.vars().iter().map(|v| format!("{v}*")).collect();
    Ok(SjodinPresentation {
        n,
        coeff_matrix,
        relation_space: Subspace::span(f, n * n, &tensors),
        names,
    })
}

/// `𝓔_R` against `(R^□)^!` and against the Betti numbers of `k`.
#[derive(Clone, Debug)]
pub struct ExtComparison {
    pub sjodin: SjodinPresentation,
    /// Relation space of the Sjödin model equals that of `(R^□)^!`.
    pub relation_spaces_equal: bool,
    /// `β_i(k)` over `R`, i.e. `dim 𝓔^i`.
    pub ext_hilbert: TruncSeries,
    /// `H_A` of the quadratic model, to `witness_degree`.
    pub model_hilbert: TruncSeries,
    pub witness_degree: usize,
    pub degree_match: Vec<bool>,
}

impl ExtComparison {
    /// `H_A = H_𝓔` through `witness_degree`: `𝓔_R` looks quadratic.
    pub fn quadratic_witness(&self) -> bool {
        self.degree_match.iter().all(|&b| b)
    }

    pub fn matches(&self) -> bool {
        self.relation_spaces_equal && self.quadratic_witness()
    }
}

pub fn ext_dual_comparison(r: &FiniteLocalAlgebra, cutoff: usize) -> Result<ExtComparison> {
    let sjodin = sjodin_presentation(r)?;
    let dual = quadratic_part(&graded_ring(r)).dual();
    let relation_spaces_equal = &sjodin.relation_space == dual.relations();
    let model = sjodin.algebra().algebra_within(cutoff, PIECE_BUDGET);
    let w = model.cutoff();
    let ext_hilbert = poincare_series(&resolve_residue_field(r, w).ranks);
    let model_hilbert = model.hilbert_series();
    let degree_match = (0..=w).map(|i| ext_hilbert.coeff(i) == model_hilbert.coeff(i)).collect();
    Ok(ExtComparison {
        sjodin,
        relation_spaces_equal,
        ext_hilbert,
        model_hilbert,
        witness_degree: w,
        degree_match,
    })
}

/// Truncated evidence for the global dimension of a quadratic algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalDimensionWitness {
    /// `β_i(k)` for `i ≤ hom_cutoff`, counting generators of internal
    /// degree `≤ deg_cutoff`.
    pub ranks: Vec<usize>,
    pub graded: Vec<Vec<usize>>,
    pub hom_cutoff: usize,
    pub deg_cutoff: usize,
}

impl GlobalDimensionWitness {
    /// `β_d ≠ 0` and `β_i = 0` for `d < i ≤ hom_cutoff` in the window.
    pub fn is_exactly(&self, d: usize) -> bool {
        self.ranks.get(d).is_some_and(|&b| b > 0) && self.ranks.iter().skip(d + 1).all(|&b| b == 0)
    }
}

pub fn global_dimension_witness(a: &QuadraticPresentation, s: usize) -> GlobalDimensionWitness {
    let alg = a.algebra_within(s + 2, RESOLUTION_BUDGET);
    let d = alg.cutoff();
    let res = resolve_residue_field_graded(&alg, s, d);
    GlobalDimensionWitness {
        ranks: res.ranks(),
        graded: res.degrees,
        hom_cutoff: s,
        deg_cutoff: d,
    }
}

#[derive(Clone, Debug)]
pub struct Theorem1Report {
    /// Gorenstein of minimal multiplicity.
    pub stmt1: bool,
    /// `𝓔_R` quadratic Gorenstein of global dimension 2.
    pub stmt2: bool,
    /// `𝓔_R` has one relation, of maximal rank.
    pub stmt3: bool,
    pub socle_dim: usize,
    pub multiplicity: usize,
    pub edim: usize,
    pub sjodin_relations: usize,
    pub sjodin_rank: Option<usize>,
    pub global_dimension: GlobalDimensionWitness,
    pub comparison_degree: usize,
}

impl Theorem1Report {
    pub fn consistent(&self) -> bool {
        self.stmt1 == self.stmt2 && self.stmt2 == self.stmt3
    }
}

pub fn theorem1_check(r: &FiniteLocalAlgebra, cutoff: usize) -> Result<Theorem1Report> {
    let n = r.edim();
    if n < 2 {
        return Err(Error::EmbeddingDimensionTooSmall { edim: n });
    }
    let socle_dim = r.socle().dim();
    let e = r.len();
    let gorenstein = socle_dim == 1;
    let stmt1 = gorenstein && r.nilpotency() <= 3 && e == n + 2 && e >= 3;

    let cmp = ext_dual_comparison(r, cutoff)?;
    let a = cmp.sjodin.algebra();
    let gd = global_dimension_witness(&a, cutoff);
    // global dimension 2 with the symmetric shape (0; 1^n; 2)
    let shape = gd.is_exactly(2) && gd.ranks[..3] == [1, n, 1] && gd.graded[2] == [2];
    let stmt2 = gorenstein && shape && cmp.matches();

    let sjodin_rank = a.single_relation_rank();
    let stmt3 = sjodin_rank.as_ref().is_some_and(|q| q.maximal);
    Ok(Theorem1Report {
        stmt1,
        stmt2,
        stmt3,
        socle_dim,
        multiplicity: e,
        edim: n,
        sjodin_relations: cmp.sjodin.relation_count(),
        sjodin_rank: sjodin_rank.map(|q| q.rank),
        global_dimension: gd,
        comparison_degree: cmp.witness_degree,
    })
}

#[derive(Clone, Debug)]
pub struct Theorem2Report {
    pub m: usize,
    /// Complete intersection of minimal multiplicity.
    pub stmt1: bool,
    /// CI, global dimension `m`, and `𝓔_R ≅ (R^□)^!`.
    pub stmt2: bool,
    /// CI and global dimension `m`.
    pub stmt2_prime: bool,
    /// `𝓔_R` Koszul AS-regular of global dimension `m`.
    pub stmt3: bool,
    /// `𝓔_R` Koszul with polynomial growth.
    pub stmt3_prime: bool,
    pub complete_intersection: bool,
    pub multiplicity: usize,
    pub global_dimension: GlobalDimensionWitness,
    pub koszul: KoszulCertificate,
    pub comparison_degree: usize,
    pub growth_degree: usize,
}

impl Theorem2Report {
    pub fn consistent(&self) -> bool {
        let s = [self.stmt2, self.stmt2_prime, self.stmt3, self.stmt3_prime];
        s.iter().all(|&b| b == self.stmt1)
    }
}

pub fn theorem2_check(r: &FiniteLocalAlgebra, cutoff: usize) -> Result<Theorem2Report> {
    let m = r.edim();
    let e = r.len();
    let ci = r.is_complete_intersection();
    let stmt1 = ci && e == 1 << m;

    let cmp = ext_dual_comparison(r, cutoff)?;
    let a = cmp.sjodin.algebra();
    let gd = global_dimension_witness(&a, cutoff);
    let stmt2_prime = ci && gd.is_exactly(m);
    let stmt2 = stmt2_prime && cmp.matches();

    // 𝓔_R is Koszul: it is the quadratic model and the model is Koszul
    let koszul = koszul_numeric_check(&a, cutoff);
    let ext_koszul = koszul.passes() && cmp.matches();
    let polynomial = TruncSeries::quotient(&[1], &crate::series::poly_mul(&[1], &one_minus_t_pow(m)), cutoff)
        .expect("unit constant term");
    let g = cmp.witness_degree.min(cutoff);
    let hilbert_ok = cmp.model_hilbert.truncate(g) == polynomial.truncate(g);
    let dual = a.dual().algebra(m + 2);
    let dual_frobenius = frobenius_check(&dual).is_ok_and(|c| c.is_frobenius && c.sup == m);
    let stmt3 = ext_koszul && hilbert_ok && dual_frobenius;

    // growth of dim 𝓔^i = β_i against the envelope C(i+m-1, m-1)
    let growth = (0..=g).all(|i| cmp.ext_hilbert.coeff(i) as usize <= binomial(i + m - 1, m - 1).max(1));
    let stmt3_prime = ext_koszul && growth;
    Ok(Theorem2Report {
        m,
        stmt1,
        stmt2,
        stmt2_prime,
        stmt3,
        stmt3_prime,
        complete_intersection: ci,
        multiplicity: e,
        global_dimension: gd,
        koszul,
        comparison_degree: cmp.witness_degree,
        growth_degree: g,
    })
}

/// `(1-t)^m`
fn one_minus_t_pow(m: usize) -> Vec<i64> {
    let mut p = vec![1i64];
    for _ in 0..m {
        p = crate::series::poly_mul(&p, &[1, -1]);
    }
    p
}

/// For Gorenstein `R` with `𝔪³ = 0` and `edim ≥ 2`: one Sjödin relation,
/// of maximal rank.
pub fn levin_avramov_check(r: &FiniteLocalAlgebra) -> Result<bool> {
    if r.edim() < 2 {
        return Err(Error::HypothesisViolation("embedding dimension below 2"));
    }
    if r.socle().dim() != 1 {
        return Err(Error::HypothesisViolation("ring is not Gorenstein"));
    }
    if r.nilpotency() > 3 {
        return Err(Error::HypothesisViolation("cube of the maximal ideal is nonzero"));
    }
    let a = sjodin_presentation(r)?.algebra();
    Ok(a.single_relation().map(|f| relation_rank(&f)).transpose()?.is_some_and(|q| q.maximal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_finite_algebra, parse_tensor, PrimeField, RingPresentation};

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn ring(vars: &[&str], rels: &[&str]) -> FiniteLocalAlgebra {
        build_finite_algebra(&RingPresentation::parse(f(), vars, rels).unwrap(), 12).unwrap()
    }

    fn space(n: usize, names: &[&str], rels: &[&str]) -> Subspace {
        let vecs: Vec<Vec<Elem>> = rels
            .iter()
            .map(|t| parse_tensor(t, names, f()).unwrap().to_vector(2).unwrap())
            .collect();
        Subspace::span(f(), n * n, &vecs)
    }

    #[test]
    fn sjodin_examples() {
        let s = sjodin_presentation(&ring(&["x", "y"], &["x^2", "y^2"])).unwrap();
        assert_eq!(s.coeff_matrix, Matrix::from_rows(f(), 3, &[vec![1, 0, 0], vec![0, 0, 1]]));
        assert_eq!(s.relation_space, space(2, &["u", "z"], &["u*z + z*u"]));

        let s = sjodin_presentation(&ring(&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z"])).unwrap();
        assert_eq!(s.relation_space, space(3, &["x", "u", "z"], &["u*z + z*u"]));

        let s = sjodin_presentation(&ring(&["x"], &["x^2"])).unwrap();
        assert_eq!(s.relation_count(), 0);
    }

    #[test]
    fn sjodin_rejects_redundant_relations() {
        let r = ring(&["x", "y"], &["x^2", "y^2", "x^2 + y^2"]);
        assert_eq!(
            sjodin_presentation(&r).unwrap_err(),
            Error::NonMinimalPresentation { given: 3, minimal: 2 }
        );
    }

    #[test]
    fn comparison_examples() {
        let c = ext_dual_comparison(&ring(&["x", "y"], &["x^2", "y^2"]), 8).unwrap();
        assert!(c.matches());
        assert_eq!(c.model_hilbert.coeffs(), &[1, 2, 3, 4, 5, 6, 7, 8, 9]);

        let c = ext_dual_comparison(&ring(&["x"], &["x^3"]), 8).unwrap();
        assert!(c.relation_spaces_equal && !c.quadratic_witness());
        assert_eq!(&c.model_hilbert.coeffs()[..3], &[1, 1, 0]);

        let c = ext_dual_comparison(&ring(&["x", "y"], &["x^2", "x*y", "y^2"]), 8).unwrap();
        assert!(c.matches());
        assert_eq!(c.ext_hilbert.coeff(8), 256);
    }

    #[test]
    fn theorem1_examples() {
        for (vars, rels, expect) in [
            (&["x", "y"][..], &["x^2", "y^2"][..], true),
            (&["x", "y", "z"], &["x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2"], true),
            (&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z"], false),
        ] {
            let rep = theorem1_check(&ring(vars, rels), 8).unwrap();
            assert!(rep.consistent(), "{rels:?}: {rep:?}");
            assert_eq!(rep.stmt1, expect, "{rels:?}");
        }
        assert_eq!(
            theorem1_check(&ring(&["x"], &["x^3"]), 8).unwrap_err(),
            Error::EmbeddingDimensionTooSmall { edim: 1 }
        );
    }

    #[test]
    fn theorem2_examples() {
        for (vars, rels, expect) in [
            (&["x", "y"][..], &["x^2", "y^2"][..], true),
            (&["x"], &["x^3"], false),
            (&["x", "y"], &["x^2 + y^2", "x*y"], true),
            (&["x", "y"], &["x^2", "y^3"], false),
        ] {
            let rep = theorem2_check(&ring(vars, rels), 8).unwrap();
            assert!(rep.consistent(), "{rels:?}: {rep:?}");
            assert_eq!(rep.stmt1, expect, "{rels:?}");
        }
    }

    #[test]
    fn levin_avramov_examples() {
        assert!(levin_avramov_check(&ring(&["x", "y"], &["x^2", "y^2"])).unwrap());
        let gor5 = ring(&["x", "y", "z"], &["x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2"]);
        assert!(levin_avramov_check(&gor5).unwrap());
        let fiber = ring(&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z"]);
        assert!(matches!(levin_avramov_check(&fiber), Err(Error::HypothesisViolation(_))));
    }
}
