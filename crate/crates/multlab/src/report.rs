//! JSON reports for each command, and their text rendering.
//!
//! Reports are `serde_json::Value` objects. Keys are kept in sorted order, so
//! identical inputs always serialize to identical bytes.

use multlab_core::classify::{classify, theorem3_check, Theorem3Case};
use multlab_core::extalg::{ext_dual_comparison, sjodin_presentation, theorem1_check, theorem2_check};
use multlab_core::lindef::{koszul_ring_check, linearity_defect, LdVerdict, LinDefReport};
use multlab_core::quadratic::{koszul_numeric_check, quadratic_part, QuadraticPresentation, PIECE_BUDGET};
use multlab_core::resolve::{
    graded_ring, polynomial_regularity, resolve_module, ModuleSpec, DEFAULT_DEG_CUTOFF,
};
use multlab_core::series::{
    froberg_check, golod_poincare, koszul_homology_dims, levin_check, poincare_series, ring_hilbert_series,
    sega_bound,
};
use multlab_core::{Error, FiniteLocalAlgebra, Matrix, Monomial, Polynomial, TruncSeries};
use serde_json::{json, Map, Value};

pub fn ring_summary(r: &FiniteLocalAlgebra) -> Value {
    let p = r.presentation();
    let names = p.var_names();
    json!({
        "field": r.field().characteristic(),
        "vars": p.vars(),
        "relations": p.relations().iter().map(|f| f.to_text(&names)).collect::<Vec<_>>(),
    })
}

fn series(s: &TruncSeries) -> Value {
    json!(s.coeffs())
}

fn matrix(m: &Matrix) -> Value {
    json!((0..m.rows()).map(|r| m.row(r).to_vec()).collect::<Vec<_>>())
}

fn element_text(r: &FiniteLocalAlgebra, v: &[u32]) -> String {
    let names = r.presentation().var_names();
    let mut p = Polynomial::zero(r.field(), r.edim());
    for (b, &c) in v.iter().enumerate() {
        if c != 0 {
            let m: &Monomial = r.basis_monomial(b);
            p.add_term(m.clone(), c);
        }
    }
    p.to_text(&names)
}

fn verdict(v: LdVerdict) -> Value {
    match v {
        LdVerdict::ZeroToCutoff => json!({ "kind": "zero_to_cutoff", "value": 0 }),
        LdVerdict::AtLeast(d) => json!({ "kind": "at_least", "value": d }),
        LdVerdict::Candidate(d) => json!({ "kind": "candidate", "value": d }),
    }
}

fn quadratic(a: &QuadraticPresentation) -> Value {
    json!({ "generators": a.names(), "relations": a.relation_texts() })
}

pub fn module_name(m: &ModuleSpec) -> String {
    match m {
        ModuleSpec::ResidueField => "k".into(),
        ModuleSpec::MaxIdealPower(j) => format!("m^{j}"),
        ModuleSpec::Submodule { rank, .. } => format!("submodule of R^{rank}"),
    }
}

pub fn hilbert(r: &FiniteLocalAlgebra) -> Value {
    json!({
        "length": r.len(),
        "multiplicity": r.len(),
        "edim": r.edim(),
        "nilpotency": r.nilpotency(),
        "hilbert_function": r.filtration_dims(),
    })
}

pub fn socle(r: &FiniteLocalAlgebra) -> Value {
    let s = r.socle();
    json!({
        "socle_dim": s.dim(),
        "socle_basis": s.basis_vectors().iter().map(|v| element_text(r, v)).collect::<Vec<_>>(),
        "gorenstein": s.dim() == 1,
    })
}

pub fn classification(r: &FiniteLocalAlgebra, s: usize) -> Result<Value, Error> {
    let c = classify(r, s)?;
    Ok(json!({
        "e": c.multiplicity,
        "length": c.length,
        "edim": c.edim,
        "codim": c.codim,
        "hilbert_function": c.filtration,
        "socle_dim": c.socle_dim,
        "is_ci": c.is_ci,
        "is_gorenstein": c.is_gorenstein,
        "is_cm": c.is_cm,
        "min_mult_CM": c.min_mult_cm,
        "min_mult_G": c.min_mult_g,
        "min_mult_CI": c.min_mult_ci,
        "golod": c.golod_witness,
        "koszul": c.koszul_witness,
        "froberg": c.froberg,
        "koszul_homology": c.koszul_homology,
        "betti": c.betti,
        "hom_cutoff": c.hom_cutoff,
        "bounds_hold": c.bounds_hold(),
    }))
}

pub fn betti(r: &FiniteLocalAlgebra, m: &ModuleSpec, s: usize, deg: usize) -> Value {
    let res = resolve_module(r, m, s);
    let graded = res.graded_betti().map(|t| {
        let kept: Vec<Value> =
            t.entries.iter().filter(|(&(_, j), &b)| b > 0 && j <= deg).map(|(&(i, j), &b)| json!([i, j, b])).collect();
        let dropped = t.entries.iter().any(|(&(_, j), &b)| b > 0 && j > deg);
        json!({ "entries": kept, "deg_cutoff": deg, "truncated": dropped })
    });
    json!({
        "module": module_name(m),
        "hom_cutoff": s,
        "ranks": res.ranks,
        "minimal": res.is_minimal(r),
        "graded": graded,
    })
}

pub fn ext_presentation(r: &FiniteLocalAlgebra) -> Result<Value, Error> {
    let p = sjodin_presentation(r)?;
    let a = p.algebra();
    Ok(json!({
        "generators": p.names,
        "relations": a.relation_texts(),
        "relation_count": p.relation_count(),
        "coeff_matrix": matrix(&p.coeff_matrix),
        "coeff_rank": p.coeff_matrix.rank(),
    }))
}

pub fn ext_compare(r: &FiniteLocalAlgebra, s: usize) -> Result<(bool, Value), Error> {
    let c = ext_dual_comparison(r, s)?;
    let ok = c.matches();
    Ok((ok, json!({
        "relation_spaces_equal": c.relation_spaces_equal,
        "ext_hilbert": series(&c.ext_hilbert),
        "model_hilbert": series(&c.model_hilbert),
        "witness_degree": c.witness_degree,
        "quadratic_witness": c.quadratic_witness(),
        "matches": ok,
    })))
}

pub fn quad_dual(r: &FiniteLocalAlgebra, s: usize) -> Value {
    let q = quadratic_part(&graded_ring(r));
    let d = q.dual();
    json!({
        "quadratic_part": quadratic(&q),
        "dual": quadratic(&d),
        "hilbert_quadratic_part": q.algebra_within(s, PIECE_BUDGET).dims(),
        "hilbert_dual": d.algebra_within(s, PIECE_BUDGET).dims(),
    })
}

pub fn koszul(r: &FiniteLocalAlgebra, s: usize) -> Result<(bool, Value), Error> {
    let ring = koszul_ring_check(r, s)?;
    let model = sjodin_presentation(r)?.algebra();
    let k = koszul_numeric_check(&model, s);
    let ok = ring.passes();
    Ok((ok, json!({
        "koszul": ok,
        "ld_zero": ring.ld_zero,
        "rg_quadratic": ring.rg_quadratic,
        "rg_diagonal": ring.rg_diagonal,
        "routes_agree": ring.agree(),
        "ext_model": {
            "cutoff": k.cutoff,
            "deg_cutoff": k.deg_cutoff,
            "series_identity": k.series_identity_ok,
            "first_series_failure": k.first_series_failure,
            "diagonal_betti": k.diagonal_betti_ok,
            "first_off_diagonal": k.first_off_diagonal,
        },
        "hom_cutoff": s,
    })))
}

pub fn lindef(rep: &LinDefReport) -> Value {
    json!({
        "module": module_name(&rep.module),
        "hom_cutoff": rep.hom_cutoff,
        "homology_dims": rep.homology_dims(),
        "linear_resolution": rep.linear_resolution,
        "ld": verdict(rep.verdict),
    })
}

pub fn lindef_k(r: &FiniteLocalAlgebra, s: usize) -> Result<Value, Error> {
    Ok(lindef(&linearity_defect(r, &ModuleSpec::ResidueField, s)?))
}

pub fn froberg(r: &FiniteLocalAlgebra, s: usize) -> (bool, Value) {
    let ok = froberg_check(r, s);
    let p = poincare_series(&resolve_module(r, &ModuleSpec::ResidueField, s).ranks);
    (ok, json!({
        "holds": ok,
        "hilbert": series(&ring_hilbert_series(r, s)),
        "poincare": series(&p),
        "hom_cutoff": s,
    }))
}

pub fn golod(r: &FiniteLocalAlgebra, s: usize) -> (bool, Value) {
    let g = koszul_homology_dims(r);
    let bound = golod_poincare(g.edim, &g.a, s);
    let p = poincare_series(&resolve_module(r, &ModuleSpec::ResidueField, s).ranks);
    let ok = bound == p;
    (ok, json!({
        "golod": ok,
        "koszul_homology": g.a,
        "golod_series": series(&bound),
        "poincare": series(&p),
        "hom_cutoff": s,
    }))
}

pub fn levin(r: &FiniteLocalAlgebra, power: Option<usize>, s: usize) -> Result<(bool, Value), Error> {
    let bound = sega_bound(r)?;
    let powers: Vec<usize> = match power {
        Some(m) => vec![m],
        None => (bound..=r.nilpotency().max(bound)).collect(),
    };
    let mut all = true;
    let mut checks = Vec::new();
    for m in powers {
        let o = levin_check(r, m, s);
        all &= o.holds;
        checks.push(json!({
            "power": o.power,
            "holds": o.holds,
            "zero_module": o.zero_module,
            "lhs": series(&o.lhs),
            "rhs": series(&o.rhs),
        }));
    }
    Ok((all, json!({ "holds": all, "sega_bound": bound, "checks": checks, "hom_cutoff": s })))
}

pub fn polreg(r: &FiniteLocalAlgebra) -> Result<Value, Error> {
    Ok(json!({ "polreg": polynomial_regularity(r)?, "sega_bound": sega_bound(r)? }))
}

pub fn theorem1(r: &FiniteLocalAlgebra, s: usize) -> Result<(bool, Value), Error> {
    let t = theorem1_check(r, s)?;
    Ok((t.consistent(), json!({
        "stmt1_gorenstein_min_mult": t.stmt1,
        "stmt2_ext_gorenstein_gldim2": t.stmt2,
        "stmt3_single_max_rank_relation": t.stmt3,
        "consistent": t.consistent(),
        "socle_dim": t.socle_dim,
        "e": t.multiplicity,
        "edim": t.edim,
        "sjodin_relations": t.sjodin_relations,
        "sjodin_rank": t.sjodin_rank,
        "global_dimension_ranks": t.global_dimension.ranks,
        "comparison_degree": t.comparison_degree,
        "hom_cutoff": s,
    })))
}

pub fn theorem2(r: &FiniteLocalAlgebra, s: usize) -> Result<(bool, Value), Error> {
    let t = theorem2_check(r, s)?;
    Ok((t.consistent(), json!({
        "m": t.m,
        "stmt1_ci_min_mult": t.stmt1,
        "stmt2_ci_gldim_dual": t.stmt2,
        "stmt2_prime_ci_gldim": t.stmt2_prime,
        "stmt3_koszul_as_regular": t.stmt3,
        "stmt3_prime_koszul_polynomial_growth": t.stmt3_prime,
        "consistent": t.consistent(),
        "complete_intersection": t.complete_intersection,
        "e": t.multiplicity,
        "global_dimension_ranks": t.global_dimension.ranks,
        "koszul_model_passes": t.koszul.passes(),
        "comparison_degree": t.comparison_degree,
        "growth_degree": t.growth_degree,
        "hom_cutoff": s,
    })))
}

pub fn theorem3(r: &FiniteLocalAlgebra, s: usize) -> Result<(bool, Value), Error> {
    let t = match theorem3_check(r, s) {
        Ok(t) => t,
        Err(Error::Inapplicable) => {
            return Ok((true, json!({ "applicable": false, "reason": "neither a complete intersection nor Golod" })))
        }
        Err(e) => return Err(e),
    };
    let case = match t.case {
        Theorem3Case::CompleteIntersection => "complete_intersection",
        Theorem3Case::CmGolod => "cm_golod",
    };
    Ok((t.consistent(), json!({
        "applicable": true,
        "case": case,
        "stmt1_koszul": t.stmt1,
        "stmt2_froberg": t.stmt2,
        "stmt3_min_mult": t.stmt3,
        "stmt4_ld_finite": t.stmt4,
        "consistent": t.consistent(),
        "ld": verdict(t.ld),
        "koszul_routes_agree": t.koszul.agree(),
        "hom_cutoff": t.hom_cutoff,
    })))
}

pub const DEFAULT_DEG: usize = DEFAULT_DEG_CUTOFF;

/// Indented `key: value` lines; scalar arrays stay on one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => render_object(m, indent, out),
        Value::Array(a) => match scalar(v) {
            Some(s) => out.push_str(&format!("{pad}{s}\n")),
            None => {
                for (i, x) in a.iter().enumerate() {
                    out.push_str(&format!("{pad}- [{i}]\n"));
                    render(x, indent + 1, out);
                }
            }
        },
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap())),
    }
}

fn render_object(m: &Map<String, Value>, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for (k, v) in m {
        match scalar(v) {
            Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
            None => {
                out.push_str(&format!("{pad}{k}:\n"));
                render(v, indent + 1, out);
            }
        }
    }
}
