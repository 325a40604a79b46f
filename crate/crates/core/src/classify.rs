//! Multiplicity, minimal-multiplicity classes, and the equivalences for
//! complete intersections and Golod rings.
//!
//! Everything here is zero-dimensional: `e(R)` is the length, computed both
//! as `dim_k R` and as `h(1)` for the Hilbert numerator `h`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lindef::{koszul_ring_check, linearity_defect, KoszulRingCertificate, LdVerdict};
use crate::localalg::FiniteLocalAlgebra;
use crate::resolve::{resolve_module, resolve_residue_field, ModuleSpec};
use crate::series::{
    ci_denominator, divide_by_one_plus_t, golod_denominator, golod_poincare, koszul_homology_dims, one_plus_t_pow,
    poincare_series, poly_eval, poly_trim, ring_hilbert_series, GolodData, TruncSeries,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub length: usize,
    pub multiplicity: usize,
    pub edim: usize,
    pub codim: usize,
    pub filtration: Vec<usize>,
    pub socle_dim: usize,
    pub is_ci: bool,
    pub is_gorenstein: bool,
    pub is_cm: bool,
    pub min_mult_cm: bool,
    pub min_mult_g: bool,
    pub min_mult_ci: bool,
    pub golod_witness: bool,
    pub koszul_witness: bool,
    pub froberg: bool,
    pub koszul_homology: Vec<i64>,
    pub betti: Vec<usize>,
    pub hom_cutoff: usize,
}

impl ClassificationReport {
    /// The three lower bounds on `e(R)`.
    pub fn bounds_hold(&self) -> bool {
        let e = self.multiplicity;
        let c = self.codim;
        let cm = e > c;
        let g = !(self.is_gorenstein && e >= 3) || e >= c + 2;
        let ci = !self.is_ci || e >= 1 << c;
        cm && g && ci
    }
}

fn same_series(a: &TruncSeries, b: &TruncSeries) -> bool {
    a.coeffs() == b.coeffs()
}

pub fn classify(r: &FiniteLocalAlgebra, cutoff: usize) -> Result<ClassificationReport> {
    let n = r.edim();
    let e = r.len();
    let h1 = poly_eval(&r.hilbert_polynomial(), 1);
    assert_eq!(h1 as usize, e, "h(1) disagrees with the length");
    let socle_dim = r.socle().dim();
    let is_gorenstein = socle_dim == 1;
    let betti = resolve_residue_field(r, cutoff).ranks;
    let p = poincare_series(&betti);
    let golod = koszul_homology_dims(r);
    let golod_witness = same_series(&golod_poincare(n, &golod.a, cutoff), &p);
    let froberg = ring_hilbert_series(r, cutoff).negate_variable().mul(&p).is_one();
    let koszul_witness = koszul_ring_check(r, cutoff)?.passes();
    let rep = ClassificationReport {
        length: e,
        multiplicity: h1 as usize,
        edim: n,
        codim: n,
        filtration: r.filtration_dims(),
        socle_dim,
        is_ci: r.is_complete_intersection(),
        is_gorenstein,
        is_cm: true,
        min_mult_cm: e == n + 1,
        min_mult_g: e == n + 2 && e >= 3,
        min_mult_ci: e == 1 << n,
        golod_witness,
        koszul_witness,
        froberg,
        koszul_homology: golod.a,
        betti,
        hom_cutoff: cutoff,
    };
    debug_assert!(rep.bounds_hold(), "multiplicity bound violated: {rep:?}");
    Ok(rep)
}

/// Where a denominator `D` with `P^R_k·D = (1+t)^n` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenominatorSource {
    CompleteIntersection,
    Golod,
}

/// `D = (1+t)^q · g` with `g(-1) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub q: usize,
    pub g: Vec<i64>,
    pub g_at_minus_one: i64,
}

/// Splits off every factor `1+t` of a nonzero polynomial.
pub fn factor_one_plus_t(d: &[i64]) -> Factorization {
    let mut g = poly_trim(d.to_vec());
    assert!(!g.is_empty(), "zero polynomial");
    let mut q = 0;
    while let Some(next) = divide_by_one_plus_t(&g) {
        g = poly_trim(next);
        q += 1;
    }
    let g_at_minus_one = poly_eval(&g, -1);
    Factorization { q, g, g_at_minus_one }
}

/// A denominator of `P^R_k` from the closed forms, checked to `cutoff`.
pub fn candidate_denominator(
    r: &FiniteLocalAlgebra,
    p: &TruncSeries,
    golod: &GolodData,
) -> Result<(DenominatorSource, Vec<i64>)> {
    let n = r.edim();
    let cutoff = p.cutoff();
    let target = TruncSeries::from_poly(&one_plus_t_pow(n), cutoff);
    let fits = |d: &[i64]| same_series(&p.mul(&TruncSeries::from_poly(d, cutoff)), &target);
    if r.is_complete_intersection() {
        let d = ci_denominator(n);
        if fits(&d) {
            return Ok((DenominatorSource::CompleteIntersection, d));
        }
    }
    let d = golod_denominator(&golod.a);
    if fits(&d) {
        return Ok((DenominatorSource::Golod, d));
    }
    Err(Error::NoCandidateDenominator)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma33Report {
    pub source: DenominatorSource,
    pub denominator: Vec<i64>,
    pub factorization: Factorization,
    pub edim: usize,
    pub multiplicity: usize,
}

impl Lemma33Report {
    /// `q = n` and `g(-1) = e(R)`.
    pub fn holds(&self) -> bool {
        self.factorization.q == self.edim && self.factorization.g_at_minus_one == self.multiplicity as i64
    }
}

/// The factorization `D(t) = (1+t)^n g(t)` with `g(-1) = e(R)`, for rings
/// with `ld_R k = 0` to the cutoff.
pub fn lemma33_check_d0(r: &FiniteLocalAlgebra, cutoff: usize) -> Result<Lemma33Report> {
    let ld = linearity_defect(r, &ModuleSpec::ResidueField, cutoff)?;
    if !ld.verdict.is_zero() {
        return Err(Error::HypothesisViolation("linearity defect of k is not certified zero"));
    }
    let p = poincare_series(&resolve_residue_field(r, cutoff).ranks);
    let (source, denominator) = candidate_denominator(r, &p, &koszul_homology_dims(r))?;
    Ok(Lemma33Report {
        source,
        factorization: factor_one_plus_t(&denominator),
        denominator,
        edim: r.edim(),
        multiplicity: r.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem3Case {
    CompleteIntersection,
    CmGolod,
}

#[derive(Clone, Debug)]
pub struct Theorem3Report {
    pub case: Theorem3Case,
    /// `R` is Koszul, via `R^g`.
    pub stmt1: bool,
    /// Fröberg's relation.
    pub stmt2: bool,
    /// Minimal multiplicity for the class.
    pub stmt3: bool,
    /// `ld_R k` finite, affirmed only as zero to the cutoff.
    pub stmt4: bool,
    pub koszul: KoszulRingCertificate,
    pub ld: LdVerdict,
    pub hom_cutoff: usize,
}

impl Theorem3Report {
    pub fn consistent(&self) -> bool {
        [self.stmt2, self.stmt3, self.stmt4].iter().all(|&b| b == self.stmt1)
    }
}

pub fn theorem3_check(r: &FiniteLocalAlgebra, cutoff: usize) -> Result<Theorem3Report> {
    let n = r.edim();
    let e = r.len();
    let betti = resolve_residue_field(r, cutoff).ranks;
    let p = poincare_series(&betti);
    let case = if r.is_complete_intersection() {
        Theorem3Case::CompleteIntersection
    } else if same_series(&golod_poincare(n, &koszul_homology_dims(r).a, cutoff), &p) {
        Theorem3Case::CmGolod
    } else {
        return Err(Error::Inapplicable);
    };
    let koszul = koszul_ring_check(r, cutoff)?;
    let stmt2 = ring_hilbert_series(r, cutoff).negate_variable().mul(&p).is_one();
    let stmt3 = match case {
        Theorem3Case::CompleteIntersection => e == 1 << n,
        Theorem3Case::CmGolod => e == n + 1,
    };
    let ld = linearity_defect(r, &ModuleSpec::ResidueField, cutoff)?.verdict;
    Ok(Theorem3Report {
        case,
        stmt1: koszul.graded_route(),
        stmt2,
        stmt3,
        stmt4: ld.is_zero(),
        koszul,
        ld,
        hom_cutoff: cutoff,
    })
}

/// `P^R_M = u/g` for one module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityRatio {
    pub module: ModuleSpec,
    pub numerator: Vec<i64>,
    pub module_multiplicity: usize,
    /// `P·g` has no terms past the numerator's degree bound.
    pub polynomial: bool,
    pub holds: bool,
}

/// For `M ∈ {k, 𝔪²}` with `ld_R M = 0`: `P^R_M·g = u` is a polynomial and
/// `e(M)/e(R) = u(-1)/g(-1)`, where `g` comes from the factorization of
/// the denominator.
pub fn multiplicity_ratio_check(r: &FiniteLocalAlgebra, cutoff: usize) -> Result<Vec<MultiplicityRatio>> {
    let lemma = lemma33_check_d0(r, cutoff)?;
    let g = &lemma.factorization.g;
    let g1 = lemma.factorization.g_at_minus_one;
    if g1 == 0 {
        return Err(Error::HypothesisViolation("g(-1) vanishes"));
    }
    let e_r = r.len() as i64;
    let top = r.top_degree();
    let mut out = Vec::new();
    for m in [ModuleSpec::ResidueField, ModuleSpec::MaxIdealPower(2)] {
        let e_m = match m {
            ModuleSpec::ResidueField => 1,
            ModuleSpec::MaxIdealPower(p) => r.filtration_dims().iter().skip(p).sum(),
            ModuleSpec::Submodule { .. } => unreachable!(),
        };
        if e_m == 0 {
            continue;
        }
        if !linearity_defect(r, &m, cutoff)?.verdict.is_zero() {
            return Err(Error::HypothesisViolation("module has nonzero linearity defect"));
        }
        let pm = poincare_series(&resolve_module(r, &m, cutoff).ranks);
        let u = pm.mul(&TruncSeries::from_poly(g, cutoff));
        let bound = top + 1;
        let polynomial = u.coeffs().iter().skip(bound).all(|&c| c == 0);
        let numerator = poly_trim(u.coeffs().iter().take(bound).copied().collect());
        let holds = polynomial && poly_eval(&numerator, -1) * e_r == e_m as i64 * g1;
        out.push(MultiplicityRatio {
            module: m,
            numerator,
            module_multiplicity: e_m,
            polynomial,
            holds,
        });
    }
    Ok(out)
}
