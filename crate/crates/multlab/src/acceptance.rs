//! The acceptance suite. Every criterion is an exact comparison; the only
//! tunables are the cutoffs and sample counts pinned below.

use multlab_core::classify::{classify, lemma33_check_d0, theorem3_check};
use multlab_core::extalg::{sjodin_presentation, theorem1_check, theorem2_check};
use multlab_core::lindef::{linearity_defect, sega_monotonicity_check, LdVerdict};
use multlab_core::quadratic::{
    coefficient_matrix, frobenius_check, frobenius_pairing_check, koszul_numeric_check, quadratic_part,
    relation_rank,
};
use multlab_core::resolve::{
    gorenstein_ext_check, graded_ring, left_hypersurface_complex_is_resolution, resolve_residue_field,
    resolve_residue_field_graded, ModuleSpec,
};
use multlab_core::series::{
    ci_poincare, froberg_check, golod_poincare, koszul_homology_dims, levin_check, poincare_series, sega_bound,
    TruncSeries,
};
use multlab_core::{
    build_finite_algebra, parse_tensor, FiniteLocalAlgebra, Monomial, Polynomial, PrimeField, QuadraticPresentation,
    RingPresentation, Subspace, TensorElement,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus;

/// Homological cutoff used throughout.
pub const HOM: usize = 8;
/// Randomized algebras for the Frobenius triangle.
pub const FROBENIUS_SAMPLES: usize = 24;
/// Random single-relation algebras with rank at least 2.
pub const SINGLE_RELATION_SAMPLES: usize = 12;
/// Random quadratic probes for the duality criterion.
pub const KOSZUL_PROBES: usize = 12;
pub const SEED: u64 = 0x6d75_6c74;
/// `Ext^i(k, A)` is computed for `i < EXT_WINDOW`.
pub const EXT_WINDOW: usize = 2;

/// Rings whose residue field has a linear resolution.
pub const KOSZUL_RINGS: &[&str] = &["x2", "ci2", "ci3", "ci_mixed", "golod2", "gor5", "fiber"];

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Criterion {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

type Check = fn() -> (bool, String);

pub const CRITERIA: &[(usize, &str, Check)] = &[
    (1, "ext presentations", ext_presentations),
    (2, "complete intersection series", ci_series),
    (3, "theorem 1 consistency", theorem1_consistency),
    (4, "theorem 2 consistency", theorem2_consistency),
    (5, "theorem 3 consistency", theorem3_consistency),
    (6, "frobenius triangle", frobenius_triangle),
    (7, "single relation shape", single_relation_shape),
    (8, "duality and koszul series", duality_and_series),
    (9, "golod arithmetic", golod_arithmetic),
    (10, "linearity defect", linearity_defects),
    (11, "froberg and levin", froberg_and_levin),
    (12, "denominator factorization", denominator_factorization),
];

pub fn run_one(id: usize) -> Criterion {
    let &(id, name, check) = CRITERIA.iter().find(|c| c.0 == id).expect("known criterion");
    let (passed, detail) = check();
    Criterion { id, name, passed, detail }
}

/// All criteria, each on its own thread, reported in order.
pub fn run_all() -> Vec<Criterion> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA.iter().map(|&(id, _, _)| s.spawn(move || run_one(id))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    })
}

fn field() -> PrimeField {
    PrimeField::new(101).unwrap()
}

fn tensor_space(names: &[&str], rels: &[&str]) -> Subspace {
    let f = field();
    let n = names.len();
    let vecs: Vec<_> = rels.iter().map(|r| parse_tensor(r, names, f).unwrap().to_vector(2).unwrap()).collect();
    Subspace::span(f, n * n, &vecs)
}

fn ext_presentations() -> (bool, String) {
    let cases: [(&str, &[&str], &[&str]); 3] = [
        ("x2", &["u"], &[]),
        ("ci2", &["u", "z"], &["u*z + z*u"]),
        ("fiber", &["x", "u", "z"], &["u*z + z*u"]),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, gens, rels) in cases {
        let p = sjodin_presentation(&corpus::ring(name)).expect("minimal presentation");
        let want = tensor_space(gens, rels);
        let same = p.relation_space == want;
        ok &= same;
        notes.push(format!("{name}: {} relation(s){}", p.relation_space.dim(), if same { "" } else { " MISMATCH" }));
    }
    (ok, notes.join(", "))
}

fn ci_series() -> (bool, String) {
    let mut ok = true;
    let mut seen = Vec::new();
    for (name, r) in corpus::all() {
        if !r.is_complete_intersection() {
            continue;
        }
        let n = r.edim();
        let betti = poincare_series(&resolve_residue_field(&r, HOM).ranks);
        let closed: Vec<i64> = (0..=HOM).map(|i| multlab_core::series::binomial(i + n - 1, n - 1) as i64).collect();
        let same = betti == TruncSeries::from_coeffs(closed) && betti == ci_poincare(n, n, HOM);
        ok &= same;
        seen.push(format!("{name}{}", if same { "" } else { " MISMATCH" }));
    }
    (ok && seen.len() >= 4, format!("1/(1-t)^n to degree {HOM} on {}", seen.join(", ")))
}

fn theorem1_consistency() -> (bool, String) {
    let mut ok = true;
    let mut count = 0;
    let mut notes = Vec::new();
    for (name, r) in corpus::all() {
        if r.edim() < 2 {
            continue;
        }
        let t = theorem1_check(&r, HOM).expect("theorem 1 check");
        count += 1;
        ok &= t.consistent();
        if !t.consistent() {
            notes.push(format!("{name} inconsistent"));
        }
        match name {
            "gor5" => ok &= t.stmt1 && t.stmt2 && t.stmt3,
            "fiber" => ok &= !t.stmt1 && !t.stmt2 && !t.stmt3,
            _ => {}
        }
        if t.stmt1 {
            notes.push(format!("{name} all-true"));
        }
    }
    ok &= count >= 10;
    (ok, format!("{count} rings; {}", notes.join(", ")))
}

fn theorem2_consistency() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, r) in corpus::all() {
        let t = theorem2_check(&r, HOM).expect("theorem 2 check");
        // the primed statements carry the criterion; the rest are reported
        let primed = t.stmt1 == t.stmt2_prime && t.stmt1 == t.stmt3_prime;
        ok &= primed && t.consistent();
        match name {
            "ci2" => ok &= t.stmt1 && t.stmt2_prime && t.stmt3_prime,
            "x3" => ok &= !t.stmt1 && !t.stmt2_prime && !t.stmt3_prime,
            _ => {}
        }
        notes.push(format!("{name}={}{}", u8::from(t.stmt1), if t.consistent() { "" } else { "!" }));
    }
    (ok, notes.join(" "))
}

fn theorem3_consistency() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, r) in corpus::all() {
        let t = match theorem3_check(&r, HOM) {
            Ok(t) => t,
            Err(multlab_core::Error::Inapplicable) => continue,
            Err(e) => return (false, format!("{name}: {e}")),
        };
        ok &= t.consistent();
        let all = [t.stmt1, t.stmt2, t.stmt3, t.stmt4];
        match name {
            "golod2" | "ci2" => ok &= all.iter().all(|&b| b),
            "x3" => ok &= all.iter().all(|&b| !b),
            _ => {}
        }
        notes.push(format!("{name}={}{}", u8::from(t.stmt1), if t.consistent() { "" } else { "!" }));
    }
    (ok, notes.join(" "))
}

/// Monomial quotient with pure powers and a cap in degree 5.
fn random_monomial_ring(rng: &mut ChaCha8Rng) -> FiniteLocalAlgebra {
    let f = field();
    let n = rng.gen_range(1..=3);
    let mut rels = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = rng.gen_range(2..=4);
        rels.push(Polynomial::monomial(f, Monomial(e), 1));
    }
    for m in multlab_core::poly::monomials_of_degree(n, 5) {
        rels.push(Polynomial::monomial(f, m, 1));
    }
    if rng.gen_bool(0.6) {
        for _ in 0..rng.gen_range(1..=3) {
            let d = rng.gen_range(2..=4);
            let all = multlab_core::poly::monomials_of_degree(n, d);
            let m = all[rng.gen_range(0..all.len())].clone();
            rels.push(Polynomial::monomial(f, m, 1));
        }
    }
    let names = (0..n).map(|i| format!("x{i}")).collect();
    let p = RingPresentation::new(f, names, rels).expect("monomials of degree at least two");
    build_finite_algebra(&p, 8).expect("artinian")
}

fn frobenius_triangle() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ok = true;
    let mut frob = 0;
    for _ in 0..FROBENIUS_SAMPLES {
        let r = random_monomial_ring(&mut rng);
        let g = graded_ring(&r);
        let cert = frobenius_check(&g).expect("finite");
        let socle_one = cert.socle_dim == 1;
        let pairing = frobenius_pairing_check(&g).expect("finite");
        let gorenstein = gorenstein_ext_check(&g, EXT_WINDOW).expect("finite");
        ok &= cert.sup <= 4 && socle_one == pairing && pairing == gorenstein && socle_one == (r.socle().dim() == 1);
        frob += usize::from(pairing);
    }
    ok &= frob > 0 && frob < FROBENIUS_SAMPLES;
    (ok, format!("{FROBENIUS_SAMPLES} algebras, {frob} Frobenius"))
}

fn single_relation_shape() -> (bool, String) {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut ok = true;
    let (mut done, mut maximal) = (0, 0);
    while done < SINGLE_RELATION_SAMPLES {
        let n = rng.gen_range(2..=3);
        let r = rng.gen_range(2..=n);
        let mut coeffs = vec![0u32; n * n];
        for _ in 0..r {
            let u: Vec<u32> = (0..n).map(|_| rng.gen_range(0..101)).collect();
            let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..101)).collect();
            for i in 0..n {
                for j in 0..n {
                    coeffs[i * n + j] = f.add(coeffs[i * n + j], f.mul(u[i], v[j]));
                }
            }
        }
        let t = TensorElement::from_vector(f, n, 2, &coeffs);
        let rank = match relation_rank(&t) {
            Ok(q) if q.rank >= 2 => q,
            _ => continue,
        };
        done += 1;
        let l = coefficient_matrix(&t).unwrap().transpose();
        let names = (0..n).map(|i| format!("x{i}")).collect();
        let a = QuadraticPresentation::from_tensors(f, n, &[t], names).unwrap().algebra(6);
        let res = resolve_residue_field_graded(&a, 4, 6);
        ok &= res.ranks() == [1, n, 1, 0, 0];
        ok &= rank.maximal == left_hypersurface_complex_is_resolution(&a, &l, 6);
        maximal += usize::from(rank.maximal);
    }
    ok &= maximal > 0 && maximal < SINGLE_RELATION_SAMPLES;
    (ok, format!("{SINGLE_RELATION_SAMPLES} relations of rank >= 2, {maximal} of maximal rank"))
}

fn duality_and_series() -> (bool, String) {
    let f = field();
    let mut ok = true;
    let mut algebras = Vec::new();
    for name in KOSZUL_RINGS {
        let r = corpus::ring(name);
        algebras.push(sjodin_presentation(&r).unwrap().algebra());
        algebras.push(quadratic_part(&graded_ring(&r)));
    }
    for a in &algebras {
        ok &= a.dual().dual().relations() == a.relations();
        let k = koszul_numeric_check(a, HOM);
        ok &= k.cutoff == HOM && k.series_identity_ok;
    }
    // probes: a failed identity must come with an off-diagonal Betti number
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut probes = vec![QuadraticPresentation::from_tensors(
        f,
        2,
        &[parse_tensor("x*y", &["x", "y"], f).unwrap()],
        vec!["x".into(), "y".into()],
    )
    .unwrap()];
    for _ in 0..KOSZUL_PROBES {
        let count = rng.gen_range(3..=6);
        let rows: Vec<Vec<u32>> = (0..count).map(|_| (0..9).map(|_| rng.gen_range(0..101)).collect()).collect();
        let names = vec!["x".into(), "y".into(), "z".into()];
        probes.push(QuadraticPresentation::new(f, 3, Subspace::span(f, 9, &rows), names));
    }
    let mut failures = 0;
    for a in &probes {
        ok &= a.dual().dual().relations() == a.relations();
        let k = koszul_numeric_check(a, 6);
        if !k.series_identity_ok {
            failures += 1;
            ok &= !k.diagonal_betti_ok;
        }
    }
    ok &= failures > 0;
    (
        ok,
        format!(
            "{} corpus algebras to degree {HOM}; {} probes, {failures} with a failed identity",
            algebras.len(),
            probes.len()
        ),
    )
}

fn golod_arithmetic() -> (bool, String) {
    let r = corpus::ring("golod2");
    let g = koszul_homology_dims(&r);
    let betti = poincare_series(&resolve_residue_field(&r, HOM).ranks);
    let powers = TruncSeries::from_coeffs((0..=HOM).map(|i| 1i64 << i).collect());
    let ok = g.a == [3, 2] && golod_poincare(g.edim, &g.a, HOM) == betti && betti == powers;
    (ok, format!("a = {:?}, beta = {:?}", g.a, betti.coeffs()))
}

fn linearity_defects() -> (bool, String) {
    let mut ok = true;
    for name in KOSZUL_RINGS {
        let v = linearity_defect(&corpus::ring(name), &ModuleSpec::ResidueField, HOM).unwrap().verdict;
        ok &= v.is_zero();
    }
    let x3 = corpus::ring("x3");
    let bounds: Vec<usize> = [4, 6, 8]
        .iter()
        .map(|&s| linearity_defect(&x3, &ModuleSpec::ResidueField, s).unwrap().verdict.lower_bound())
        .collect();
    ok &= bounds.windows(2).all(|w| w[0] < w[1]);
    ok &= matches!(linearity_defect(&x3, &ModuleSpec::ResidueField, HOM).unwrap().verdict, LdVerdict::AtLeast(_));
    let mut monotone = 0;
    for (_, r) in corpus::all() {
        let m = sega_monotonicity_check(&r, 2, 6).unwrap();
        ok &= m.holds;
        monotone += 1;
    }
    (ok, format!("ld k = 0 on {} rings; x3 lower bounds {bounds:?}; monotone on {monotone}", KOSZUL_RINGS.len()))
}

fn froberg_and_levin() -> (bool, String) {
    let mut ok = true;
    for name in KOSZUL_RINGS {
        ok &= froberg_check(&corpus::ring(name), HOM);
    }
    ok &= !froberg_check(&corpus::ring("x3"), HOM);
    let mut checked = 0;
    for (_, r) in corpus::all() {
        let bound = sega_bound(&r).unwrap();
        for m in bound..=r.nilpotency().max(bound) {
            ok &= levin_check(&r, m, HOM).holds;
            checked += 1;
        }
    }
    for (name, m) in [("ci2", 2), ("x3", 3), ("golod2", 1)] {
        ok &= levin_check(&corpus::ring(name), m, HOM).holds;
    }
    (ok, format!("froberg on {} Koszul rings; {checked} levin powers past the bound", KOSZUL_RINGS.len()))
}

fn denominator_factorization() -> (bool, String) {
    let mut ok = true;
    let (mut ci, mut golod) = (Vec::new(), Vec::new());
    for (name, r) in corpus::all() {
        let c = classify(&r, HOM).unwrap();
        if !(c.is_ci || c.golod_witness) || !c.koszul_witness {
            continue;
        }
        let l = lemma33_check_d0(&r, HOM).unwrap();
        ok &= l.holds();
        if c.is_ci {
            ci.push(name);
        } else {
            golod.push(name);
        }
    }
    ok &= !ci.is_empty() && !golod.is_empty();
    (ok, format!("CI {ci:?}, Golod {golod:?}"))
}
