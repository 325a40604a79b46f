//! Truncated minimal free resolutions.
//!
//! Graded mode works over a [`GradedAlgebra`] one internal degree at a time.
//! Free modules are right modules; an element of `F = ⊕_g g·A` in internal
//! degree `t` is the concatenation over generators `g` of coordinates in
//! `A_{t - deg g}`. A differential is stored by the images of generators
//! (the columns of its matrix).
//!
//! Local mode works over a [`FiniteLocalAlgebra`] with k-matrices on the
//! full representation `R^β ≅ k^{β·len R}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::graded::GradedAlgebra;
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::localalg::FiniteLocalAlgebra;
use crate::quadratic::QuadraticPresentation;

pub const DEFAULT_HOM_CUTOFF: usize = 8;
pub const DEFAULT_DEG_CUTOFF: usize = 16;

/// Dimension of a graded free module in internal degree `t`.
pub fn free_dim(a: &GradedAlgebra, degs: &[usize], t: usize) -> usize {
    degs.iter().filter(|&&d| d <= t).map(|&d| a.dim(t - d)).sum()
}

/// Offsets of each generator block in internal degree `t`.
fn block_offsets(a: &GradedAlgebra, degs: &[usize], t: usize) -> Vec<usize> {
    let mut off = Vec::with_capacity(degs.len() + 1);
    let mut acc = 0;
    for &d in degs {
        off.push(acc);
        if d <= t {
            acc += a.dim(t - d);
        }
    }
    off.push(acc);
    off
}

/// `v·x_j` for `v` in internal degree `t` of the free module.
fn act_right(a: &GradedAlgebra, degs: &[usize], t: usize, v: &[Elem], j: usize) -> Vec<Elem> {
    let src = block_offsets(a, degs, t);
    let dst = block_offsets(a, degs, t + 1);
    let mut out = vec![0; dst[degs.len()]];
    for (h, &d) in degs.iter().enumerate() {
        if d > t + 1 {
            continue;
        }
        let (s0, s1) = (src[h], src[h + 1]);
        let (d0, d1) = (dst[h], dst[h + 1]);
        if s0 == s1 || d0 == d1 {
            continue;
        }
        let prod = a.right_gen(t - d, j).mul_vec(&v[s0..s1]);
        out[d0..d1].copy_from_slice(&prod);
    }
    out
}

/// Images `g·b` of `g ∈ src` under a graded map, for every basis element
/// `b` of `A_{t - deg g}`, maintained one internal degree at a time.
struct ImageCache<'a> {
    a: &'a GradedAlgebra,
    src: &'a [usize],
    cols: &'a [Vec<Elem>],
    tgt: &'a [usize],
    t: Option<usize>,
    images: Vec<Vec<Vec<Elem>>>,
}

impl<'a> ImageCache<'a> {
    fn new(a: &'a GradedAlgebra, src: &'a [usize], cols: &'a [Vec<Elem>], tgt: &'a [usize]) -> Self {
        Self {
            a,
            src,
            cols,
            tgt,
            t: None,
            images: vec![Vec::new(); src.len()],
        }
    }

    /// Advances to internal degree `t` (must be called for consecutive `t`).
    fn advance(&mut self, t: usize) {
        let a = self.a;
        for (g, &d) in self.src.iter().enumerate() {
            if d > t {
                continue;
            }
            let q = t - d;
            if q == 0 {
                self.images[g] = vec![self.cols[g].clone()];
                continue;
            }
            let prev = core::mem::take(&mut self.images[g]);
            let cur: Vec<Vec<Elem>> = (0..a.dim(q))
                .map(|b| {
                    let (p, j) = a.parent(q, b);
                    act_right(a, self.tgt, t - 1, &prev[p], j)
                })
                .collect();
            self.images[g] = cur;
        }
        self.t = Some(t);
    }

    /// Matrix of the map in the current degree.
    fn matrix(&self) -> Matrix {
        let t = self.t.expect("cache not advanced");
        let rows = free_dim(self.a, self.tgt, t);
        let cols: Vec<Vec<Elem>> = self
            .src
            .iter()
            .enumerate()
            .filter(|(_, &d)| d <= t)
            .flat_map(|(g, _)| self.images[g].iter().cloned())
            .collect();
        Matrix::from_columns(self.a.field(), rows, &cols)
    }
}

/// Minimal homogeneous generators, in internal degrees `≤ t_max`, of a
/// submodule `K` of the free module with generator degrees `amb`, given the
/// pieces `K_t` in increasing `t`. Since `A` is generated in degree one,
/// `(K·A_+)_t = K_{t-1}·A_1`.
fn minimal_generators(
    a: &GradedAlgebra,
    amb: &[usize],
    t_min: usize,
    t_max: usize,
    mut piece: impl FnMut(usize) -> Vec<Vec<Elem>>,
) -> (Vec<usize>, Vec<Vec<Elem>>) {
    let f = a.field();
    let mut degs = Vec::new();
    let mut gens = Vec::new();
    let mut prev: Vec<Vec<Elem>> = Vec::new();
    for t in t_min..=t_max {
        let dim_t = free_dim(a, amb, t);
        let k_t = piece(t);
        if k_t.is_empty() {
            prev = k_t;
            continue;
        }
        let mut ech = Echelon::new(f, dim_t);
        'fill: for v in &prev {
            for j in 0..a.ngens() {
                ech.insert(&act_right(a, amb, t - 1, v, j));
                if ech.dim() == k_t.len() {
                    break 'fill;
                }
            }
        }
        if ech.dim() < k_t.len() {
            for v in &k_t {
                if ech.insert(v) {
                    degs.push(t);
                    gens.push(v.clone());
                }
            }
        }
        prev = k_t;
    }
    (degs, gens)
}

/// Minimal generators of the kernel of the map `src → tgt` given by `cols`.
pub fn kernel_generators(
    a: &GradedAlgebra,
    src: &[usize],
    cols: &[Vec<Elem>],
    tgt: &[usize],
    t_max: usize,
) -> (Vec<usize>, Vec<Vec<Elem>>) {
    let Some(&t_min) = src.iter().min() else {
        return (Vec::new(), Vec::new());
    };
    let mut cache = ImageCache::new(a, src, cols, tgt);
    let mut next = t_min;
    minimal_generators(a, src, t_min, t_max, |t| {
        while next <= t {
            cache.advance(next);
            next += 1;
        }
        cache.matrix().kernel().basis_vectors()
    })
}

/// Minimal generators of the submodule of `amb` spanned by `gens`.
pub fn submodule_generators(
    a: &GradedAlgebra,
    gen_degs: &[usize],
    gens: &[Vec<Elem>],
    amb: &[usize],
    t_max: usize,
) -> (Vec<usize>, Vec<Vec<Elem>>) {
    let Some(&t_min) = gen_degs.iter().min() else {
        return (Vec::new(), Vec::new());
    };
    let mut cache = ImageCache::new(a, gen_degs, gens, amb);
    let mut next = t_min;
    minimal_generators(a, amb, t_min, t_max, |t| {
        while next <= t {
            cache.advance(next);
            next += 1;
        }
        cache.matrix().image().basis_vectors()
    })
}

/// A minimal graded free resolution, truncated in homological degree `s`
/// and internal degree `D`.
#[derive(Clone, Debug)]
pub struct GradedResolution {
    pub hom_cutoff: usize,
    pub deg_cutoff: usize,
    /// Generator degrees of `F_0 … F_s`.
    pub degrees: Vec<Vec<usize>>,
    /// `differentials[i-1]` holds the columns of `∂_i : F_i → F_{i-1}`.
    pub differentials: Vec<Vec<Vec<Elem>>>,
    /// Columns of `F_0 → G` when resolving a submodule of a free module `G`.
    pub augmentation: Option<(Vec<usize>, Vec<Vec<Elem>>)>,
}

impl GradedResolution {
    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, degs) in self.degrees.iter().enumerate() {
            for &d in degs {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable {
            hom_cutoff: self.hom_cutoff,
            deg_cutoff: Some(self.deg_cutoff),
            entries,
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// Whether no generator reached the internal cutoff.
    pub fn is_saturated(&self) -> bool {
        self.degrees.iter().all(|d| d.iter().all(|&x| x < self.deg_cutoff))
    }

    pub fn check_saturated(&self) -> Result<()> {
        for (i, degs) in self.degrees.iter().enumerate() {
            if let Some(&d) = degs.iter().find(|&&d| d >= self.deg_cutoff) {
                return Err(Error::SaturationFailure {
                    hom_degree: i,
                    internal_degree: d,
                });
            }
        }
        Ok(())
    }

    /// Entry of `∂_i` in row `h`, column `g`, as a vector of `A_{d_g - d_h}`.
    pub fn entry(&self, a: &GradedAlgebra, i: usize, h: usize, g: usize) -> Vec<Elem> {
        let dg = self.degrees[i][g];
        let off = block_offsets(a, &self.degrees[i - 1], dg);
        self.differentials[i - 1][g][off[h]..off[h + 1]].to_vec()
    }
}

/// Continues a resolution whose first differential is known.
fn continue_resolution(
    a: &GradedAlgebra,
    mut degrees: Vec<Vec<usize>>,
    mut differentials: Vec<Vec<Vec<Elem>>>,
    s: usize,
    d_max: usize,
) -> (Vec<Vec<usize>>, Vec<Vec<Vec<Elem>>>) {
    while degrees.len() <= s {
        let i = degrees.len() - 1;
        let (degs, cols) = kernel_generators(a, &degrees[i], &differentials[i - 1], &degrees[i - 1], d_max);
        degrees.push(degs);
        differentials.push(cols);
    }
    (degrees, differentials)
}

fn check_window(a: &GradedAlgebra, d_max: usize) {
    assert!(
        a.first_zero_degree().is_some() || a.cutoff() >= d_max,
        "algebra known only to degree {} but internal cutoff is {d_max}",
        a.cutoff()
    );
}

/// Minimal resolution of `k_A` up to homological degree `s`, keeping all
/// generators of internal degree `≤ d_max`.
pub fn resolve_residue_field_graded(a: &GradedAlgebra, s: usize, d_max: usize) -> GradedResolution {
    check_window(a, d_max);
    let n = a.ngens();
    let mut degrees = vec![vec![0]];
    let mut differentials = Vec::new();
    if s >= 1 && a.dim(1) > 0 {
        degrees.push(vec![1; n]);
        differentials.push(
            (0..n)
                .map(|j| {
                    let mut v = vec![0; n];
                    v[j] = 1;
                    v
                })
                .collect(),
        );
    } else if s >= 1 {
        degrees.push(Vec::new());
        differentials.push(Vec::new());
    }
    let (degrees, differentials) = continue_resolution(a, degrees, differentials, s, d_max);
    GradedResolution {
        hom_cutoff: s,
        deg_cutoff: d_max,
        degrees,
        differentials,
        augmentation: None,
    }
}

/// Minimal resolution of the submodule of the free module `amb` spanned by
/// homogeneous generators.
pub fn resolve_submodule_graded(
    a: &GradedAlgebra,
    gen_degs: &[usize],
    gens: &[Vec<Elem>],
    amb: &[usize],
    s: usize,
    d_max: usize,
) -> GradedResolution {
    check_window(a, d_max);
    let (d0, aug) = submodule_generators(a, gen_degs, gens, amb, d_max);
    let mut degrees = vec![d0.clone()];
    let mut differentials = Vec::new();
    if s >= 1 {
        let (d1, c1) = kernel_generators(a, &d0, &aug, amb, d_max);
        degrees.push(d1);
        differentials.push(c1);
    }
    let (degrees, differentials) = continue_resolution(a, degrees, differentials, s, d_max);
    GradedResolution {
        hom_cutoff: s,
        deg_cutoff: d_max,
        degrees,
        differentials,
        augmentation: Some((d0, aug)),
    }
}

/// Betti numbers `β_{ij}` (graded) or `β_i` (local, stored with `j = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub hom_cutoff: usize,
    /// `None` in local mode.
    pub deg_cutoff: Option<usize>,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn local(ranks: &[usize]) -> Self {
        let entries = ranks
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, &b)| ((i, 0), b))
            .collect();
        Self {
            hom_cutoff: ranks.len().saturating_sub(1),
            deg_cutoff: None,
            entries,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{ij}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, usize::MAX)).map(|(_, &b)| b).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.hom_cutoff).map(|i| self.total(i)).collect()
    }

    /// Whether `β_{ij} = 0` whenever `i ≠ j`.
    pub fn is_diagonal(&self) -> bool {
        self.first_off_diagonal().is_none()
    }

    pub fn first_off_diagonal(&self) -> Option<(usize, usize)> {
        self.entries.iter().find(|((i, j), &b)| b > 0 && i != j).map(|(&k, _)| k)
    }
}

/// `β_{i,j} = β_{d-i, ℓ-j}` for every stored entry (entries outside
/// `0 ≤ i ≤ d` must vanish).
pub fn betti_symmetry_check(t: &BettiTable, d: usize, ell: usize) -> bool {
    if d > t.hom_cutoff {
        return false;
    }
    t.entries.iter().filter(|(_, &b)| b > 0).all(|(&(i, j), &b)| {
        i <= d && j <= ell && t.get(d - i, ell - j) == b
    })
}

/// Module to be resolved over a local ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    ResidueField,
    /// `𝔪^m` as an ideal of `R`.
    MaxIdealPower(usize),
    /// Submodule of `R^rank` spanned by the given vectors (length `rank·len R`).
    Submodule { rank: usize, gens: Vec<Vec<Elem>> },
}

/// Minimal resolution over an artinian local ring, in local form.
#[derive(Clone, Debug)]
pub struct LocalResolution {
    pub module: ModuleSpec,
    pub hom_cutoff: usize,
    pub ranks: Vec<usize>,
    /// `differentials[i-1]` is the `(β_{i-1}·L) × β_i` k-matrix of `∂_i`.
    pub differentials: Vec<Matrix>,
    /// Internal degrees of generators, when computed in graded mode.
    pub graded_degrees: Option<Vec<Vec<usize>>>,
}

impl LocalResolution {
    pub fn betti(&self) -> BettiTable {
        BettiTable::local(&self.ranks)
    }

    pub fn graded_betti(&self) -> Option<BettiTable> {
        let degs = self.graded_degrees.as_ref()?;
        let mut entries = BTreeMap::new();
        for (i, ds) in degs.iter().enumerate() {
            for &d in ds {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        Some(BettiTable {
            hom_cutoff: self.hom_cutoff,
            deg_cutoff: None,
            entries,
        })
    }

    /// Every entry lies in `𝔪`: no unit coefficient in any block.
    pub fn is_minimal(&self, r: &FiniteLocalAlgebra) -> bool {
        let len = r.len();
        self.differentials
            .iter()
            .all(|m| (0..m.rows()).step_by(len).all(|row| m.row(row).iter().all(|&c| c == 0)))
    }

    /// Entry of `∂_i` in row `h` and column `g`, as an element of `R`.
    pub fn entry(&self, r: &FiniteLocalAlgebra, i: usize, h: usize, g: usize) -> Vec<Elem> {
        let len = r.len();
        let m = &self.differentials[i - 1];
        (h * len..(h + 1) * len).map(|row| m.get(row, g)).collect()
    }
}

/// Whether every relation of the presentation is homogeneous, so `R ≅ R^g`
/// with matching bases.
pub fn is_standard_graded(r: &FiniteLocalAlgebra) -> bool {
    r.presentation().relations().iter().all(|f| f.degree() == f.order())
}

/// Minimal resolution of `M` over `R` to homological degree `s`. Uses the
/// internal grading when the presentation is homogeneous and `M` is `k` or
/// a power of `𝔪`.
pub fn resolve_module(r: &FiniteLocalAlgebra, m: &ModuleSpec, s: usize) -> LocalResolution {
    let graded_ok = is_standard_graded(r) && !matches!(m, ModuleSpec::Submodule { .. });
    if graded_ok {
        resolve_local_graded(r, m, s)
    } else {
        resolve_local_generic(r, m, s)
    }
}

pub fn resolve_residue_field(r: &FiniteLocalAlgebra, s: usize) -> LocalResolution {
    resolve_module(r, &ModuleSpec::ResidueField, s)
}

/// The associated graded ring with every piece (its top is certified zero).
pub fn graded_ring(r: &FiniteLocalAlgebra) -> GradedAlgebra {
    r.associated_graded(r.nilpotency())
}

/// Graded path: resolve over `R^g` and read the matrices back into `R`.
pub fn resolve_local_graded(r: &FiniteLocalAlgebra, m: &ModuleSpec, s: usize) -> LocalResolution {
    let a = graded_ring(r);
    // generator degrees grow by at most sup R per step
    let d_max = (s + 1) * r.top_degree().max(1) + r.nilpotency() + 1;
    let res = match m {
        ModuleSpec::ResidueField => resolve_residue_field_graded(&a, s, d_max),
        ModuleSpec::MaxIdealPower(p) => {
            let dim = a.dim(*p);
            let gens: Vec<Vec<Elem>> = (0..dim)
                .map(|b| {
                    let mut v = vec![0; dim];
                    v[b] = 1;
                    v
                })
                .collect();
            resolve_submodule_graded(&a, &vec![*p; dim], &gens, &[0], s, d_max)
        }
        ModuleSpec::Submodule { .. } => unreachable!("handled by the generic path"),
    };
    let len = r.len();
    let differentials = (1..res.degrees.len())
        .map(|i| {
            let rows = res.degrees[i - 1].len() * len;
            let cols: Vec<Vec<Elem>> = (0..res.degrees[i].len())
                .map(|g| {
                    let mut col = vec![0; rows];
                    let dg = res.degrees[i][g];
                    let off = block_offsets(&a, &res.degrees[i - 1], dg);
                    let src = &res.differentials[i - 1][g];
                    for h in 0..res.degrees[i - 1].len() {
                        let Some(q) = dg.checked_sub(res.degrees[i - 1][h]) else {
                            continue;
                        };
                        let start = r.degree_range(q).start;
                        for (k, &c) in src[off[h]..off[h + 1]].iter().enumerate() {
                            col[h * len + start + k] = c;
                        }
                    }
                    col
                })
                .collect();
            Matrix::from_columns(r.field(), rows, &cols)
        })
        .collect();
    LocalResolution {
        module: m.clone(),
        hom_cutoff: s,
        ranks: res.ranks(),
        differentials,
        graded_degrees: Some(res.degrees),
    }
}

/// `v·a` componentwise for `v ∈ R^β`.
fn scale_free(r: &FiniteLocalAlgebra, v: &[Elem], a: &[Elem]) -> Vec<Elem> {
    let len = r.len();
    v.chunks(len).flat_map(|c| r.mul(c, a)).collect()
}

/// The R-submodule of `R^β` generated by `gens`, as a k-subspace.
fn r_span(r: &FiniteLocalAlgebra, rank: usize, gens: &[Vec<Elem>]) -> Subspace {
    let mut vecs = Vec::with_capacity(gens.len() * r.len());
    for g in gens {
        for b in 0..r.len() {
            vecs.push(scale_free(r, g, &r.basis_vector(b)));
        }
    }
    Subspace::span(r.field(), rank * r.len(), &vecs)
}

/// Lifts of a basis of `K/𝔪K`, chosen among the rref rows of `K`.
fn local_minimal_generators(r: &FiniteLocalAlgebra, rank: usize, k: &Subspace) -> Vec<Vec<Elem>> {
    let mut ech = Echelon::new(r.field(), rank * r.len());
    for v in k.basis_vectors() {
        for i in 0..r.edim() {
            ech.insert(&scale_free(r, &v, &r.basis_vector(r.var_index(i))));
        }
    }
    k.basis_vectors().into_iter().filter(|v| ech.insert(v)).collect()
}

/// k-matrix of the R-linear map `R^{cols.len()} → R^{rank}` with the given
/// generator images.
fn full_matrix(r: &FiniteLocalAlgebra, rank: usize, cols: &[Vec<Elem>]) -> Matrix {
    let mut all = Vec::with_capacity(cols.len() * r.len());
    for c in cols {
        for b in 0..r.len() {
            all.push(scale_free(r, c, &r.basis_vector(b)));
        }
    }
    Matrix::from_columns(r.field(), rank * r.len(), &all)
}

/// Generic path: kernels over k on the full representation.
pub fn resolve_local_generic(r: &FiniteLocalAlgebra, m: &ModuleSpec, s: usize) -> LocalResolution {
    let f = r.field();
    let len = r.len();
    // (rank of F_0, first syzygy module inside F_0)
    let (b0, k1) = match m {
        ModuleSpec::ResidueField => (1, r.max_ideal_power(1)),
        ModuleSpec::MaxIdealPower(p) => {
            let gens = r.max_ideal_power(*p).basis_vectors();
            module_start(r, 1, &gens)
        }
        ModuleSpec::Submodule { rank, gens } => module_start(r, *rank, gens),
    };
    let mut ranks = vec![b0];
    let mut differentials = Vec::new();
    let mut k = k1;
    for _ in 1..=s {
        let prev_rank = *ranks.last().unwrap();
        let gens = local_minimal_generators(r, prev_rank, &k);
        let d = Matrix::from_columns(f, prev_rank * len, &gens);
        let full = full_matrix(r, prev_rank, &gens);
        k = full.kernel();
        ranks.push(gens.len());
        differentials.push(d);
    }
    LocalResolution {
        module: m.clone(),
        hom_cutoff: s,
        ranks,
        differentials,
        graded_degrees: None,
    }
}

/// `β_0` and the first syzygy module of a submodule of `R^rank`.
fn module_start(r: &FiniteLocalAlgebra, rank: usize, gens: &[Vec<Elem>]) -> (usize, Subspace) {
    let span = r_span(r, rank, gens);
    let mins = local_minimal_generators(r, rank, &span);
    let aug = full_matrix(r, rank, &mins);
    (mins.len(), aug.kernel())
}

/// Exactness of a local resolution inside its window: `∂_i∂_{i+1} = 0`
/// and `ker ∂_i = im ∂_{i+1}` for `1 ≤ i < s`.
pub fn local_resolution_is_exact(r: &FiniteLocalAlgebra, res: &LocalResolution) -> bool {
    for i in 1..res.differentials.len() {
        let di = full_matrix(r, res.ranks[i - 1], &columns(&res.differentials[i - 1]));
        let dn = full_matrix(r, res.ranks[i], &columns(&res.differentials[i]));
        if !di.mul(&dn).is_zero() {
            return false;
        }
        if di.kernel() != dn.image() {
            return false;
        }
    }
    true
}

fn columns(m: &Matrix) -> Vec<Vec<Elem>> {
    (0..m.cols()).map(|c| m.column(c)).collect()
}

/// Polynomial regularity: `reg` of `R^g` over `S = k[x_1..x_n]`, i.e. the
/// largest `j - i` with `β^S_{ij}(R^g) ≠ 0`.
pub fn polynomial_regularity(r: &FiniteLocalAlgebra) -> Result<usize> {
    let res = resolve_over_polynomial_ring(r)?;
    Ok(res
        .betti()
        .entries
        .iter()
        .filter(|(_, &b)| b > 0)
        .map(|(&(i, j), _)| j - i)
        .max()
        .unwrap_or(0))
}

/// Minimal resolution of `R^g = S/I*` over the polynomial ring; the internal
/// cutoff doubles until no generator reaches it.
pub fn resolve_over_polynomial_ring(r: &FiniteLocalAlgebra) -> Result<GradedResolution> {
    let n = r.edim();
    let mut d_max = n + r.nilpotency() + 1;
    for _ in 0..4 {
        let s_alg = QuadraticPresentation::polynomial(r.field(), n).algebra(d_max);
        // kernel of S_t → (R^g)_t, reading basis words as monomials
        let words: Vec<Vec<Vec<usize>>> = (0..=d_max)
            .map(|t| (0..s_alg.dim(t)).map(|b| s_alg.word(t, b)).collect())
            .collect();
        let (d1, c1) = minimal_generators(&s_alg, &[0], 1, d_max, |t| {
            let range = r.degree_range(t);
            let cols: Vec<Vec<Elem>> = words[t]
                .iter()
                .map(|w| {
                    let mut m = crate::poly::Monomial::one(n);
                    for &x in w {
                        m.0[x] += 1;
                    }
                    r.monomial_normal_form(&m)[range.clone()].to_vec()
                })
                .collect();
            Matrix::from_columns(r.field(), range.len(), &cols).kernel().basis_vectors()
        });
        let degrees = vec![vec![0], d1];
        let differentials = vec![c1];
        let (degrees, differentials) = continue_resolution(&s_alg, degrees, differentials, n, d_max);
        let res = GradedResolution {
            hom_cutoff: n,
            deg_cutoff: d_max,
            degrees,
            differentials,
            augmentation: None,
        };
        if res.is_saturated() {
            return Ok(res);
        }
        d_max *= 2;
    }
    Err(Error::SaturationFailure {
        hom_degree: n,
        internal_degree: d_max,
    })
}

/// `Ext^i(k_A, A_A)` dimensions for `i < s` over a finite-dimensional graded
/// algebra, from `Hom_A(F, A)`. The dual of `∂` sends `(u_h)` to
/// `(Σ_h u_h·a_{hg})_g`: the matrix is not transposed.
pub fn ext_k_a_dims(a: &GradedAlgebra, s: usize) -> Result<Vec<usize>> {
    let top = a.top_degree().ok_or(Error::NotFiniteDimensional { cutoff: a.cutoff() })?;
    let d_max = (s + 1) * top.max(1) + 1;
    let res = resolve_residue_field_graded(a, s, d_max);
    let total: usize = (0..=top).map(|q| a.dim(q)).sum();
    let offsets: Vec<usize> = (0..=top).scan(0, |acc, q| {
        let o = *acc;
        *acc += a.dim(q);
        Some(o)
    }).collect();
    // δ_i : C^i → C^{i+1}, C^i = A^{β_i}
    let delta = |i: usize| -> Matrix {
        let src = res.degrees[i].len();
        let tgt = res.degrees[i + 1].len();
        let mut cols = Vec::with_capacity(src * total);
        for h in 0..src {
            for p in 0..=top {
                for b in 0..a.dim(p) {
                    let mut e = vec![0; a.dim(p)];
                    e[b] = 1;
                    let mut col = vec![0; tgt * total];
                    for g in 0..tgt {
                        let Some(q) = res.degrees[i + 1][g].checked_sub(res.degrees[i][h]) else {
                            continue;
                        };
                        let entry = res.entry(a, i + 1, h, g);
                        if p + q > top || entry.iter().all(|&c| c == 0) {
                            continue;
                        }
                        let prod = a.mul(p, &e, q, &entry);
                        let o = g * total + offsets[p + q];
                        col[o..o + prod.len()].copy_from_slice(&prod);
                    }
                    cols.push(col);
                }
            }
        }
        Matrix::from_columns(a.field(), tgt * total, &cols)
    };
    let mut dims = Vec::with_capacity(s);
    let mut prev_rank = 0;
    for i in 0..s {
        let d = delta(i);
        let rank = d.rank();
        dims.push(d.cols() - rank - prev_rank);
        prev_rank = rank;
    }
    Ok(dims)
}

/// Gorenstein route: `Ext(k_A, A_A)` is one-dimensional within the window.
pub fn gorenstein_ext_check(a: &GradedAlgebra, s: usize) -> Result<bool> {
    Ok(ext_k_a_dims(a, s)?.iter().sum::<usize>() == 1)
}

/// Exactness, in internal degrees `1..=d_max`, of the left complex
/// `0 → A(-2) --[x_1 … x_m]--> A(-1)^m --[g_1 … g_m]ᵀ--> A → k → 0` with
/// `g_j = Σ_i ℓ_ij x_i`. Only right multiplication by generators is used.
pub fn left_hypersurface_complex_is_resolution(a: &GradedAlgebra, l: &Matrix, d_max: usize) -> bool {
    let f = a.field();
    let m = a.ngens();
    check_window(a, d_max);
    for t in 1..=d_max {
        let (c2, c1, c0) = (
            if t >= 2 { a.dim(t - 2) } else { 0 },
            a.dim(t - 1),
            a.dim(t),
        );
        // a ↦ (a·x_1, …, a·x_m)
        let mut first = Matrix::zeros(f, m * c0, c2);
        if t >= 2 {
            for j in 0..m {
                let rj = a.right_gen(t - 2, j);
                for r in 0..c1 {
                    for c in 0..c2 {
                        first.set(j * c1 + r, c, rj.get(r, c));
                    }
                }
            }
            // rows sized m·c1
            first = Matrix::from_rows(f, c2, &(0..m * c1).map(|r| first.row(r).to_vec()).collect::<Vec<_>>());
        }
        // (a_j) ↦ Σ_j Σ_i ℓ_ij a_j·x_i
        let mut second = Matrix::zeros(f, c0, m * c1);
        for j in 0..m {
            for i in 0..m {
                let lij = l.get(i, j);
                if lij == 0 {
                    continue;
                }
                let ri = a.right_gen(t - 1, i);
                for r in 0..c0 {
                    for c in 0..c1 {
                        let v = f.mul_add(second.get(r, j * c1 + c), lij, ri.get(r, c));
                        second.set(r, j * c1 + c, v);
                    }
                }
            }
        }
        let rank1 = if t >= 2 { first.rank() } else { 0 };
        let rank2 = second.rank();
        if rank1 != c2 || rank2 != c0 || m * c1 - rank2 != rank1 {
            return false;
        }
    }
    true
}

/// Shape `(1, m, 1)` with shifts `0; 1^m; 2` and nothing else in the window.
pub fn has_hypersurface_shape(t: &BettiTable, m: usize) -> bool {
    let mut expected = BTreeMap::new();
    expected.insert((0, 0), 1);
    expected.insert((1, 1), m);
    expected.insert((2, 2), 1);
    let actual: BTreeMap<_, _> = t.entries.iter().filter(|(_, &b)| b > 0).map(|(&k, &b)| (k, b)).collect();
    actual == expected
}

/// Field used by a resolution's ring (helper for reports).
pub fn field_of(r: &FiniteLocalAlgebra) -> PrimeField {
    r.field()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localalg::{build_finite_algebra, RingPresentation};
    use crate::poly::parse_tensor;
    use alloc::string::String;

    fn ring(vars: &[&str], rels: &[&str]) -> FiniteLocalAlgebra {
        let p = RingPresentation::parse(PrimeField::default(), vars, rels).unwrap();
        build_finite_algebra(&p, 12).unwrap()
    }

    #[test]
    fn residue_field_betti_numbers() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        assert_eq!(resolve_residue_field(&r, 8).ranks, (1..=9).collect::<Vec<_>>());
        let r = ring(&["x"], &["x^3"]);
        assert_eq!(resolve_residue_field(&r, 8).ranks, vec![1; 9]);
        let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(resolve_residue_field(&r, 8).ranks, (0..=8).map(|i| 1 << i).collect::<Vec<_>>());
    }

    #[test]
    fn graded_and_generic_paths_agree() {
        for (vars, rels) in [
            (&["x", "y"][..], &["x^2", "y^2"][..]),
            (&["x"][..], &["x^3"][..]),
            (&["x", "y"][..], &["x*y", "x^3-y^3"][..]),
            (&["x", "y", "z"][..], &["x^2", "y^2", "z^2", "x*y", "x*z"][..]),
        ] {
            let r = ring(vars, rels);
            for m in [ModuleSpec::ResidueField, ModuleSpec::MaxIdealPower(1), ModuleSpec::MaxIdealPower(2)] {
                let g = resolve_local_graded(&r, &m, 4);
                let l = resolve_local_generic(&r, &m, 4);
                assert_eq!(g.ranks, l.ranks, "{rels:?} {m:?}");
                assert!(g.is_minimal(&r) && l.is_minimal(&r));
                assert!(local_resolution_is_exact(&r, &g), "{rels:?} {m:?}");
                assert!(local_resolution_is_exact(&r, &l));
            }
        }
    }

    #[test]
    fn non_homogeneous_ring_uses_generic_path() {
        let r = ring(&["x", "y"], &["x^2 - y^3", "x*y"]);
        assert!(!is_standard_graded(&r));
        let res = resolve_residue_field(&r, 4);
        assert!(res.graded_degrees.is_none());
        assert!(local_resolution_is_exact(&r, &res));
        assert!(res.is_minimal(&r));
    }

    #[test]
    fn module_examples() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let k = resolve_residue_field(&r, 5).ranks;
        assert_eq!(resolve_module(&r, &ModuleSpec::MaxIdealPower(2), 5).ranks, k);
        let free = ModuleSpec::Submodule { rank: 1, gens: vec![r.unit()] };
        assert_eq!(resolve_module(&r, &free, 4).ranks, vec![1, 0, 0, 0, 0]);
        let r = ring(&["x"], &["x^3"]);
        assert_eq!(resolve_module(&r, &ModuleSpec::MaxIdealPower(1), 6).ranks, vec![1; 7]);
    }

    #[test]
    fn polynomial_regularity_examples() {
        assert_eq!(polynomial_regularity(&ring(&["x", "y"], &["x^2", "y^2"])).unwrap(), 2);
        assert_eq!(polynomial_regularity(&ring(&["x", "y"], &["x^2", "x*y", "y^2"])).unwrap(), 1);
        assert_eq!(polynomial_regularity(&ring(&["x"], &["x^2"])).unwrap(), 1);
        let res = resolve_over_polynomial_ring(&ring(&["x", "y"], &["x^2", "y^2"])).unwrap();
        let b = res.betti();
        assert_eq!((b.get(0, 0), b.get(1, 2), b.get(2, 4)), (1, 2, 1));
    }

    fn quad(names: &[&str], rels: &[&str]) -> QuadraticPresentation {
        let f = PrimeField::default();
        let ts: Vec<_> = rels.iter().map(|r| parse_tensor(r, names, f).unwrap()).collect();
        QuadraticPresentation::from_tensors(f, names.len(), &ts, names.iter().map(|s| String::from(*s)).collect())
            .unwrap()
    }

    #[test]
    fn hypersurface_algebras() {
        let a = quad(&["x", "y"], &["x*y + y*x"]).algebra(8);
        let res = resolve_residue_field_graded(&a, 5, 8);
        assert!(has_hypersurface_shape(&res.betti(), 2));
        assert!(betti_symmetry_check(&res.betti(), 2, 2));
        let l = crate::quadratic::coefficient_matrix(&parse_tensor("x*y + y*x", &["x", "y"], a.field()).unwrap())
            .unwrap();
        assert!(left_hypersurface_complex_is_resolution(&a, &l, 8));
        // rank 2 in three generators: right shape holds, left complex fails
        let b = quad(&["x", "y", "z"], &["y*z + z*y"]).algebra(6);
        let res = resolve_residue_field_graded(&b, 4, 6);
        assert!(has_hypersurface_shape(&res.betti(), 3));
        let l = crate::quadratic::coefficient_matrix(
            &parse_tensor("y*z + z*y", &["x", "y", "z"], b.field()).unwrap(),
        )
        .unwrap();
        assert!(!left_hypersurface_complex_is_resolution(&b, &l, 6));
    }

    #[test]
    fn exterior_algebra_has_infinite_resolution() {
        let e = QuadraticPresentation::exterior(PrimeField::default(), 2).algebra(3);
        let res = resolve_residue_field_graded(&e, 4, 10);
        assert_eq!(res.ranks(), vec![1, 2, 3, 4, 5]);
        assert!(res.betti().is_diagonal());
        for d in 0..=4 {
            assert!(!betti_symmetry_check(&res.betti(), d, d));
        }
        assert_eq!(ext_k_a_dims(&e, 4).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn ext_route_detects_non_gorenstein() {
        let r = ring(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let g = graded_ring(&r);
        assert!(!gorenstein_ext_check(&g, 3).unwrap());
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        assert!(gorenstein_ext_check(&graded_ring(&r), 3).unwrap());
    }

    #[test]
    fn free_algebra_on_one_generator() {
        let a = QuadraticPresentation::free(PrimeField::default(), 1).algebra(6);
        let res = resolve_residue_field_graded(&a, 4, 6);
        assert_eq!(res.ranks(), vec![1, 1, 0, 0, 0]);
        assert!(betti_symmetry_check(&res.betti(), 1, 1));
    }
}
