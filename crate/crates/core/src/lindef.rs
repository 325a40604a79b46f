//! Linear parts of minimal resolutions and the linearity defect.
//!
//! For a minimal resolution `F` over `R`, `lin F` is the complex over `R^g`
//! whose `i`-th module is `R^g(-i)^{β_i}` and whose differential keeps only
//! the `𝔪/𝔪²` component of each entry. It is computed one internal degree
//! at a time: `(lin F_i)_t = β_i · R^g_{t-i}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::linalg::Matrix;
use crate::localalg::FiniteLocalAlgebra;
use crate::quadratic::quadratic_part;
use crate::resolve::{
    graded_ring, is_standard_graded, resolve_module, resolve_residue_field_graded, LocalResolution, ModuleSpec,
};

/// `lin F`: `maps[i-1]` is the `(β_{i-1}·n) × β_i` matrix whose entry in
/// row `h·n + j`, column `g` is the coefficient of `x_j` in `∂_i[h, g]`.
#[derive(Clone, Debug)]
pub struct LinearPart {
    pub ranks: Vec<usize>,
    pub maps: Vec<Matrix>,
    /// Every entry of `∂` was already a linear form.
    pub all_entries_linear: bool,
}

/// The linear part of a minimal resolution.
pub fn linear_part(r: &FiniteLocalAlgebra, res: &LocalResolution) -> Result<LinearPart> {
    let f = r.field();
    let n = r.edim();
    let len = r.len();
    let lin = r.degree_range(1);
    let mut all_linear = true;
    let mut maps = Vec::with_capacity(res.differentials.len());
    for (k, d) in res.differentials.iter().enumerate() {
        let (src, tgt) = (res.ranks[k + 1], res.ranks[k]);
        let mut m = Matrix::zeros(f, tgt * n, src);
        for g in 0..src {
            for h in 0..tgt {
                let base = h * len;
                if d.get(base, g) != 0 {
                    return Err(Error::NonMinimalResolution { step: k + 1 });
                }
                for b in lin.end..len {
                    if d.get(base + b, g) != 0 {
                        all_linear = false;
                    }
                }
                for j in 0..n {
                    m.set(h * n + j, g, d.get(base + lin.start + j, g));
                }
            }
        }
        maps.push(m);
    }
    Ok(LinearPart {
        ranks: res.ranks.clone(),
        maps,
        all_entries_linear: all_linear,
    })
}

impl LinearPart {
    /// `lin ∂_i` restricted to `(lin F_i)_{i+q} → (lin F_{i-1})_{i+q}`.
    pub fn degree_matrix(&self, rg: &GradedAlgebra, i: usize, q: usize) -> Matrix {
        let f = rg.field();
        let n = rg.ngens();
        let (src, tgt) = (self.ranks[i], self.ranks[i - 1]);
        let (ds, dt) = (rg.dim(q), rg.dim(q + 1));
        let mut m = Matrix::zeros(f, tgt * dt, src * ds);
        if ds == 0 || dt == 0 {
            return m;
        }
        let l = &self.maps[i - 1];
        for g in 0..src {
            for h in 0..tgt {
                for j in 0..n {
                    let c = l.get(h * n + j, g);
                    if c == 0 {
                        continue;
                    }
                    let x = rg.right_gen(q, j);
                    for b in 0..ds {
                        for a in 0..dt {
                            let v = x.get(a, b);
                            if v != 0 {
                                let (row, col) = (h * dt + a, g * ds + b);
                                m.set(row, col, f.mul_add(m.get(row, col), c, v));
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// `lin ∂_{i} ∘ lin ∂_{i+1} = 0` in every internal degree.
    pub fn squares_to_zero(&self, rg: &GradedAlgebra) -> bool {
        let top = rg.top_degree().unwrap_or(0);
        (1..self.maps.len()).all(|i| {
            (0..top).all(|q| {
                let lo = self.degree_matrix(rg, i, q + 1);
                let hi = self.degree_matrix(rg, i + 1, q);
                lo.mul(&hi).is_zero()
            })
        })
    }
}

/// Three-valued linearity defect over a finite window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LdVerdict {
    /// `H_i(lin F) = 0` for `1 ≤ i ≤ s-1`.
    ZeroToCutoff,
    /// `H_{s-1}(lin F) ≠ 0`.
    AtLeast(usize),
    /// Homology vanishes from `v+1` up to the window edge; not certified.
    Candidate(usize),
}

impl LdVerdict {
    pub fn is_zero(self) -> bool {
        self == LdVerdict::ZeroToCutoff
    }

    /// Largest degree known to carry homology.
    pub fn lower_bound(self) -> usize {
        match self {
            LdVerdict::ZeroToCutoff => 0,
            LdVerdict::AtLeast(v) | LdVerdict::Candidate(v) => v,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinDefReport {
    pub module: ModuleSpec,
    pub hom_cutoff: usize,
    /// `homology[i-1][q] = dim H_i(lin F)_{i+q}` for `1 ≤ i ≤ s-1`.
    pub homology: Vec<Vec<usize>>,
    /// `lin F = F` literally (graded ring, linear differentials), so no rank
    /// computation was needed.
    pub linear_resolution: bool,
    pub verdict: LdVerdict,
}

impl LinDefReport {
    pub fn homology_dims(&self) -> Vec<usize> {
        self.homology.iter().map(|h| h.iter().sum()).collect()
    }
}

fn verdict(dims: &[usize]) -> LdVerdict {
    match dims.iter().rposition(|&d| d > 0) {
        None => LdVerdict::ZeroToCutoff,
        Some(i) if i + 1 == dims.len() => LdVerdict::AtLeast(i + 1),
        Some(i) => LdVerdict::Candidate(i + 1),
    }
}

/// Homology of `lin F` by ranks, degree by degree.
pub fn linear_part_homology(lp: &LinearPart, rg: &GradedAlgebra, s: usize) -> Vec<Vec<usize>> {
    let top = rg.top_degree().unwrap_or(0);
    let rank_of = |i: usize, q: usize| -> usize {
        if i >= lp.ranks.len() || i > lp.maps.len() {
            return 0;
        }
        lp.degree_matrix(rg, i, q).rank()
    };
    (1..s)
        .map(|i| {
            (0..=top)
                .map(|q| {
                    let dim = lp.ranks.get(i).copied().unwrap_or(0) * rg.dim(q);
                    let out = if q < top { rank_of(i, q) } else { 0 };
                    let inc = if q >= 1 { rank_of(i + 1, q - 1) } else { 0 };
                    dim - out - inc
                })
                .collect()
        })
        .collect()
}

/// `ld_R M` to homological degree `s`.
pub fn linearity_defect(r: &FiniteLocalAlgebra, m: &ModuleSpec, s: usize) -> Result<LinDefReport> {
    linearity_defect_with(r, m, s, false)
}

/// As [`linearity_defect`]; `force_ranks` disables the `lin F = F` shortcut.
pub fn linearity_defect_with(r: &FiniteLocalAlgebra, m: &ModuleSpec, s: usize, force_ranks: bool) -> Result<LinDefReport> {
    let res = resolve_module(r, m, s);
    let lp = linear_part(r, &res)?;
    let rg = graded_ring(r);
    let top = rg.top_degree().unwrap_or(0);
    // over a graded ring with linear differentials lin F is F itself, which
    // is acyclic in positive degrees
    let shortcut = !force_ranks && lp.all_entries_linear && is_standard_graded(r);
    let homology = if shortcut {
        (1..s).map(|_| alloc::vec![0; top + 1]).collect()
    } else {
        linear_part_homology(&lp, &rg, s)
    };
    let dims: Vec<usize> = homology.iter().map(|h| h.iter().sum()).collect();
    Ok(LinDefReport {
        module: m.clone(),
        hom_cutoff: s,
        homology,
        linear_resolution: shortcut,
        verdict: verdict(&dims),
    })
}

#[derive(Clone, Debug)]
pub struct KoszulRingCertificate {
    pub hom_cutoff: usize,
    /// `ld_R k = 0` to the cutoff.
    pub ld_zero: bool,
    /// `R^□` regenerates the Hilbert function of `R^g`.
    pub rg_quadratic: bool,
    /// `β^{R^g}_{ij}(k) = 0` for `i ≠ j` to the cutoff.
    pub rg_diagonal: bool,
}

impl KoszulRingCertificate {
    pub fn graded_route(&self) -> bool {
        self.rg_quadratic && self.rg_diagonal
    }

    pub fn passes(&self) -> bool {
        self.ld_zero && self.graded_route()
    }

    pub fn agree(&self) -> bool {
        self.ld_zero == self.graded_route()
    }
}

/// Koszulness of `R` two ways: through `ld_R k` and through `R^g`.
pub fn koszul_ring_check(r: &FiniteLocalAlgebra, s: usize) -> Result<KoszulRingCertificate> {
    let ld = linearity_defect(r, &ModuleSpec::ResidueField, s)?;
    let rg = graded_ring(r);
    let nil = r.nilpotency();
    let rq = quadratic_part(&rg).algebra(nil);
    let rg_quadratic = (0..=nil).all(|d| rq.dim(d) == rg.dim(d));
    let d_max = (s + 1) * r.top_degree().max(1) + nil + 1;
    let res = resolve_residue_field_graded(&rg, s, d_max);
    Ok(KoszulRingCertificate {
        hom_cutoff: s,
        ld_zero: ld.verdict.is_zero(),
        rg_quadratic,
        rg_diagonal: res.betti().is_diagonal(),
    })
}

#[derive(Clone, Debug)]
pub struct MonotonicityReport {
    pub residue: LdVerdict,
    /// `(m, verdict for 𝔪^m)`; powers with `𝔪^m = 0` are skipped.
    pub powers: Vec<(usize, LdVerdict)>,
    pub holds: bool,
}

/// `ld 𝔪^m ≤ ld k` on the computed windows, `1 ≤ m ≤ m_max`. Only an
/// exact zero for `k` can be contradicted.
pub fn sega_monotonicity_check(r: &FiniteLocalAlgebra, m_max: usize, s: usize) -> Result<MonotonicityReport> {
    let residue = linearity_defect(r, &ModuleSpec::ResidueField, s)?.verdict;
    let mut powers = Vec::new();
    for m in 1..=m_max.min(r.nilpotency().saturating_sub(1)) {
        let v = linearity_defect(r, &ModuleSpec::MaxIdealPower(m), s)?.verdict;
        powers.push((m, v));
    }
    let holds = !residue.is_zero() || powers.iter().all(|(_, v)| v.is_zero());
    Ok(MonotonicityReport { residue, powers, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_finite_algebra, PrimeField, RingPresentation};

    fn ring(vars: &[&str], rels: &[&str]) -> FiniteLocalAlgebra {
        let f = PrimeField::new(101).unwrap();
        build_finite_algebra(&RingPresentation::parse(f, vars, rels).unwrap(), 12).unwrap()
    }

    #[test]
    fn linear_part_examples() {
        let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let res = resolve_module(&r, &ModuleSpec::ResidueField, 5);
        assert!(linear_part(&r, &res).unwrap().all_entries_linear);

        let r = ring(&["x"], &["x^3"]);
        let res = resolve_module(&r, &ModuleSpec::ResidueField, 5);
        let lp = linear_part(&r, &res).unwrap();
        let z: Vec<bool> = lp.maps.iter().map(Matrix::is_zero).collect();
        assert_eq!(z, [false, true, false, true, false]);
        assert!(lp.squares_to_zero(&graded_ring(&r)));
    }

    #[test]
    fn defect_examples() {
        let v = |vars: &[&str], rels: &[&str]| {
            linearity_defect(&ring(vars, rels), &ModuleSpec::ResidueField, 8).unwrap().verdict
        };
        assert_eq!(v(&["x", "y"], &["x^2", "x*y", "y^2"]), LdVerdict::ZeroToCutoff);
        assert_eq!(v(&["x"], &["x^3"]), LdVerdict::AtLeast(7));
        assert_eq!(v(&["x", "y"], &["x^2", "y^2"]), LdVerdict::ZeroToCutoff);
    }

    #[test]
    fn shortcut_agrees_with_ranks() {
        for (vars, rels) in [
            (&["x", "y"][..], &["x^2", "y^2"][..]),
            (&["x", "y"], &["x^2", "x*y", "y^2"]),
            (&["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z"]),
            (&["x", "y"], &["x^2", "y^3"]),
            (&["x", "y"], &["x^2 - y^3", "x*y"]),
        ] {
            let r = ring(vars, rels);
            for m in [ModuleSpec::ResidueField, ModuleSpec::MaxIdealPower(1)] {
                let a = linearity_defect_with(&r, &m, 5, false).unwrap();
                let b = linearity_defect_with(&r, &m, 5, true).unwrap();
                assert_eq!(a.homology, b.homology, "{rels:?}");
            }
        }
    }

    #[test]
    fn koszul_ring_examples() {
        let c = koszul_ring_check(&ring(&["x", "y"], &["x^2", "y^2"]), 8).unwrap();
        assert!(c.passes());
        let c = koszul_ring_check(&ring(&["x"], &["x^3"]), 8).unwrap();
        assert!(!c.ld_zero && !c.graded_route());
        let c = koszul_ring_check(&ring(&["x", "y"], &["x^2", "x*y", "y^2"]), 8).unwrap();
        assert!(c.passes());
    }

    #[test]
    fn monotonicity_examples() {
        assert!(sega_monotonicity_check(&ring(&["x", "y"], &["x^2", "y^2"]), 2, 8).unwrap().holds);
        assert!(sega_monotonicity_check(&ring(&["x"], &["x^3"]), 2, 8).unwrap().holds);
        let rep = sega_monotonicity_check(&ring(&["x"], &["x^2"]), 1, 8).unwrap();
        assert!(rep.holds && rep.powers == [(1, LdVerdict::ZeroToCutoff)]);
    }
}
