//! The bundled rings, compiled in so `multlab corpus` needs no files.

use multlab_core::{build_finite_algebra, FiniteLocalAlgebra};

use crate::ringspec::parse_ring_spec;

pub const RINGS: &[(&str, &str)] = &[
    ("x2", include_str!("../rings/x2.ring")),
    ("x3", include_str!("../rings/x3.ring")),
    ("ci2", include_str!("../rings/ci2.ring")),
    ("ci3", include_str!("../rings/ci3.ring")),
    ("ci_mixed", include_str!("../rings/ci_mixed.ring")),
    ("ci_x2y3", include_str!("../rings/ci_x2y3.ring")),
    ("golod2", include_str!("../rings/golod2.ring")),
    ("golod_x2xy_y3", include_str!("../rings/golod_x2xy_y3.ring")),
    ("gor5", include_str!("../rings/gor5.ring")),
    ("gor_xy", include_str!("../rings/gor_xy.ring")),
    ("fiber", include_str!("../rings/fiber.ring")),
    ("cube", include_str!("../rings/cube.ring")),
    ("nonhom", include_str!("../rings/nonhom.ring")),
];

pub fn ring(name: &str) -> FiniteLocalAlgebra {
    let (_, text) = RINGS
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no corpus ring `{name}`"));
    let spec = parse_ring_spec(text).expect("corpus specs parse");
    build_finite_algebra(&spec.presentation, spec.cap).expect("corpus rings are artinian")
}

pub fn all() -> Vec<(&'static str, FiniteLocalAlgebra)> {
    RINGS.iter().map(|(n, _)| (*n, ring(n))).collect()
}
