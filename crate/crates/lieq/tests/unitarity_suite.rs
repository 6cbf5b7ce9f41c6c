//! End-to-end unitarity flows: half-integral points through the level
//! bound and alcove filters, extraneous points against the elimination
//! machinery, and the quasi-split reductions.

use lieq::analysis::{property_a_check, PropertyAVerdict};
use lieq::orbits::{classical_orbits, exceptional_catalog, NilpotentOrbit};
use lieq::rational::Rat;
use lieq::repweights::{is_half_integral, weight_pattern, weights_of, RepLabel};
use lieq::rootdata::{cached_datum, Family, SimpleType};
use lieq::unitarity::{
    central_point, extraneous_points, fundamental_alcove_test, half_integral_unitary_points,
    integral_point_nonunitary, max_level_bound, quasi_split_reduction, EliminationOutcome,
};
use num::One;

fn catalog_types() -> Vec<SimpleType> {
    let mut out: Vec<SimpleType> = Vec::new();
    for n in 2..=6 {
        out.push(SimpleType::new(Family::B, n).unwrap());
        out.push(SimpleType::new(Family::C, n).unwrap());
    }
    for n in 3..=6 {
        out.push(SimpleType::new(Family::D, n).unwrap());
    }
    out.extend(
        ["G2", "F4", "E6", "E7", "E8"]
            .iter()
            .map(|s| s.parse::<SimpleType>().unwrap()),
    );
    out
}

fn orbits_of(t: SimpleType) -> Vec<NilpotentOrbit> {
    if t.is_exceptional() {
        exceptional_catalog(t).unwrap().to_vec()
    } else {
        let boxes = if t.family == Family::B { 2 * t.rank + 1 } else { 2 * t.rank };
        classical_orbits(t, boxes).unwrap()
    }
}

/// Every returned half-integral unitary point is dominant, hermitian,
/// half-integral for the adjoint representation, and — away from type A —
/// sits inside the fundamental alcove.
#[test]
fn half_integral_points_pass_every_filter() {
    let mut types = catalog_types();
    for n in 2..=8 {
        types.push(SimpleType::new(Family::A, n).unwrap());
    }
    for t in types {
        let datum = cached_datum(t).unwrap();
        let points = half_integral_unitary_points(t).unwrap();
        assert!(!points.is_empty(), "{t}: zero is always in the set");
        for nu in &points {
            let point = datum.point(nu.clone()).unwrap();
            assert!(point.is_dominant(), "{t}: dominant");
            assert!(point.is_hermitian().unwrap(), "{t}: hermitian");
            assert!(
                is_half_integral(&datum, nu, &RepLabel::Adjoint).unwrap(),
                "{t}: adjoint half-integral"
            );
            if t.family != Family::A {
                assert!(fundamental_alcove_test(&point), "{t}: in the alcove");
                // No positive coroot pairing hits 1 exactly.
                for c in &datum.positive_coroots {
                    assert!(!c.dot(nu).is_one(), "{t}: pairing 1 with {c:?}");
                }
            }
        }
    }
}

/// The level bound is sharp: the listed top-level coroots give rows of
/// `r0` ones, and scaling the point `ρ/(h−1)` onto the wall fails the
/// alcove test while `ρ/h` passes it.
#[test]
fn level_bound_and_alcove_walls() {
    for t in catalog_types() {
        let datum = cached_datum(t).unwrap();
        let bound = max_level_bound(t).unwrap();
        for c in &bound.level_r0_coroots {
            assert_eq!(
                datum.coroot_level(c).unwrap(),
                Rat::from_integer(bound.r0.into()),
                "{t}: coroot level r0"
            );
        }
        let h = datum.coxeter_number as i64;
        let inside = datum.point(datum.rho.scale(&Rat::new(1.into(), h.into()))).unwrap();
        assert!(fundamental_alcove_test(&inside), "{t}: rho/h inside");
        let wall = datum
            .point(datum.rho.scale(&Rat::new(1.into(), (h - 1).into())))
            .unwrap();
        assert!(!fundamental_alcove_test(&wall), "{t}: rho/(h-1) on the wall");
        assert!(integral_point_nonunitary(&datum.point(datum.rho.clone()).unwrap()).unwrap());
    }
}

/// Cross-module: every extraneous point anywhere in the catalogs is
/// dominant, adjoint-half-integral, differs from the central point, and is
/// eliminated by the discriminating representation with a Violation.
#[test]
fn extraneous_entries_are_always_eliminated() {
    let mut seen = 0usize;
    for t in catalog_types() {
        for orbit in orbits_of(t) {
            let central = central_point(&orbit);
            let datum = orbit.datum().unwrap();
            for entry in extraneous_points(&orbit).unwrap() {
                seen += 1;
                assert_ne!(entry.re_s, central, "{orbit}: differs from central");
                let point = datum.point(entry.re_s.clone()).unwrap();
                assert!(point.is_dominant(), "{orbit}: dominant");
                assert!(
                    is_half_integral(&datum, &entry.re_s, &RepLabel::Adjoint).unwrap(),
                    "{orbit}: adjoint half-integral"
                );
                let rep = if t.is_exceptional() {
                    RepLabel::Adjoint
                } else {
                    RepLabel::StandardClassical
                };
                let weighted = weights_of(&datum, &rep).unwrap();
                let n_u = weight_pattern(&weighted, &central).unwrap();
                let n_v = weight_pattern(&weighted, &entry.re_s).unwrap();
                assert!(
                    matches!(
                        property_a_check(&n_u, &n_v).unwrap(),
                        PropertyAVerdict::Violation(_)
                    ),
                    "{orbit}: eliminated"
                );
            }
        }
    }
    assert!(seen >= 20, "catalogs contain many extraneous entries, saw {seen}");
}

/// The ε-assignments obey the parity rules of the generating theorem.
#[test]
fn epsilon_assignments_respect_parity_rules() {
    for t in catalog_types().into_iter().filter(|t| !t.is_exceptional()) {
        for orbit in orbits_of(t) {
            let parts = orbit.partition().unwrap().to_vec();
            for entry in extraneous_points(&orbit).unwrap() {
                let eps = entry.epsilon.expect("classical entries carry epsilon");
                assert!(!eps.is_empty());
                assert!(eps.iter().any(|(_, on)| *on), "not all zero");
                for &(d, _) in &eps {
                    let mult = parts.iter().filter(|&&p| p == d).count();
                    assert!(mult >= 3, "{orbit}: qualifying multiplicity");
                    if t.family == Family::C {
                        assert_eq!(d % 2, 0, "{orbit}: Sp uses even parts");
                    } else {
                        assert_eq!(d % 2, 1, "{orbit}: Spin uses odd parts");
                    }
                }
                if t.family != Family::C {
                    let on_count = eps.iter().filter(|(_, on)| *on).count();
                    assert_eq!(on_count % 2, 0, "{orbit}: even ε-sum for Spin");
                }
            }
        }
    }
}

/// Quasi-split reductions: the odd unitary case keeps a nonzero survivor,
/// every other folding eliminates everything but zero, and each recorded
/// elimination names a representation that is actually unavailable or
/// actually non-half-integral.
#[test]
fn quasi_split_reduction_traces_are_consistent() {
    let cases = [
        ("A5", 2u32, 1usize),
        ("A7", 2, 1),
        ("A4", 2, 2),
        ("A6", 2, 2),
        ("D5", 2, 1),
        ("D4", 3, 1),
        ("E6", 2, 1),
    ];
    for (name, order, expected_survivors) in cases {
        let t: SimpleType = name.parse().unwrap();
        let reduction = quasi_split_reduction(t, order).unwrap();
        assert_eq!(
            reduction.surviving.len(),
            expected_survivors,
            "{name}: survivor count"
        );
        assert!(
            reduction.surviving.contains(&reduction.candidates[0]),
            "{name}: zero survives"
        );
        let folded_datum = cached_datum(reduction.folded).unwrap();
        for record in &reduction.trace {
            match record.outcome {
                EliminationOutcome::Eliminated => {
                    assert!(
                        !is_half_integral(&folded_datum, &record.point, &record.rep).unwrap(),
                        "{name}: elimination is genuine"
                    );
                    assert!(
                        !reduction.surviving.contains(&record.point),
                        "{name}: eliminated points do not survive"
                    );
                }
                EliminationOutcome::SurvivesTest => {
                    assert!(
                        is_half_integral(&folded_datum, &record.point, &record.rep).unwrap(),
                        "{name}: survival is genuine"
                    );
                }
                EliminationOutcome::RepNotAvailable => {}
            }
        }
    }
}

/// Zero is always unitary; it never appears in any elimination trace.
#[test]
fn zero_never_traced() {
    for (name, order) in [("A5", 2u32), ("A4", 2), ("D5", 2), ("D4", 3), ("E6", 2)] {
        let t: SimpleType = name.parse().unwrap();
        let reduction = quasi_split_reduction(t, order).unwrap();
        let zero = &reduction.candidates[0];
        assert!(zero.is_zero(), "{name}: first candidate is zero");
        assert!(
            reduction.trace.iter().all(|r| &r.point != zero),
            "{name}: zero is not tested"
        );
    }
}
