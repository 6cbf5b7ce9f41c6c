//! Property-based and cross-type invariants for root data construction.

use lieq::rational::{Rat, RationalVector};
use lieq::rootdata::{cached_datum, fold, fold_preimages, Family, SimpleType};
use num::{BigInt, One, Zero};
use proptest::prelude::*;

fn supported_types() -> Vec<SimpleType> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(SimpleType::new(Family::A, n).unwrap());
    }
    for n in 2..=8 {
        out.push(SimpleType::new(Family::B, n).unwrap());
        out.push(SimpleType::new(Family::C, n).unwrap());
    }
    for n in 3..=8 {
        out.push(SimpleType::new(Family::D, n).unwrap());
    }
    for name in ["G2", "F4", "E6", "E7", "E8"] {
        out.push(name.parse().unwrap());
    }
    out
}

#[test]
fn structural_invariants_for_every_type() {
    for t in supported_types() {
        let datum = cached_datum(t).unwrap();
        let rank = datum.rank();
        let h = datum.coxeter_number;
        assert_eq!(
            datum.positive_coroots.len(),
            rank * h / 2,
            "{t}: |positive coroots| = rank*h/2"
        );
        assert_eq!(
            datum.coroot_level(datum.highest_coroot()).unwrap(),
            Rat::from_integer(BigInt::from(h as i64 - 1)),
            "{t}: highest coroot has level h-1"
        );
        assert_eq!(datum.degrees.len(), rank, "{t}: one degree per node");
        assert_eq!(
            datum.degrees.iter().map(|d| d - 1).sum::<usize>(),
            datum.positive_coroots.len(),
            "{t}: sum of exponents counts positive coroots"
        );
        // Duality of the bases: <a_i^v, w_j> = delta_ij.
        for (i, c) in datum.simple_coroots.iter().enumerate() {
            for (j, w) in datum.fundamental_weights.iter().enumerate() {
                let expected = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(c.dot(w), expected, "{t}: pairing ({i},{j})");
            }
        }
        // rho has every simple-coroot pairing 1.
        for c in &datum.simple_coroots {
            assert!(c.dot(&datum.rho).is_one(), "{t}: <a^v, rho> = 1");
        }
    }
}

#[test]
fn folding_table_round_trips() {
    let rows = [
        ("A5", 2u32, "B3"),
        ("A4", 2, "C2"),
        ("D5", 2, "C4"),
        ("D4", 3, "G2"),
        ("E6", 2, "F4"),
    ];
    for (source, order, folded) in rows {
        let s: SimpleType = source.parse().unwrap();
        let f: SimpleType = folded.parse().unwrap();
        assert_eq!(fold(s, order).unwrap(), f, "fold({source},{order})");
        assert!(
            fold_preimages(f).contains(&(s, order)),
            "fold_preimages({folded}) lists ({source},{order})"
        );
    }
    // Every listed preimage folds back.
    for f in supported_types() {
        for (s, order) in fold_preimages(f) {
            assert_eq!(fold(s, order).unwrap(), f, "round trip through {s}");
        }
    }
    assert!(fold("B3".parse().unwrap(), 2).is_err(), "B3 has no order-2 fold");
    assert!(fold("A5".parse().unwrap(), 3).is_err(), "A5 has no order-3 fold");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Fundamental-weight coefficients are a faithful chart on the weight
    /// span: build a point from coefficients and read them back.
    #[test]
    fn weight_coefficients_round_trip(
        type_index in 0usize..26,
        numerators in proptest::collection::vec(-6i64..=6, 8),
        denominator in 1i64..=4,
    ) {
        let types = supported_types();
        let t = types[type_index % types.len()];
        let datum = cached_datum(t).unwrap();
        let coeffs: Vec<Rat> = numerators
            .iter()
            .cycle()
            .take(datum.rank())
            .map(|&n| Rat::new(BigInt::from(n), BigInt::from(denominator)))
            .collect();
        let nu = datum.from_weight_coefficients(&coeffs).unwrap();
        let back = datum.weight_coefficients(&nu).unwrap();
        prop_assert_eq!(back, coeffs);
    }

    /// The dominant representative is dominant, fixes dominant inputs, and
    /// preserves the Weyl-invariant norm.
    #[test]
    fn dominant_representative_properties(
        type_index in 0usize..26,
        numerators in proptest::collection::vec(-5i64..=5, 9),
        denominator in 1i64..=3,
    ) {
        let types = supported_types();
        let t = types[type_index % types.len()];
        let datum = cached_datum(t).unwrap();
        let dim = datum.ambient_dim();
        let coords: Vec<Rat> = numerators
            .iter()
            .cycle()
            .take(dim)
            .map(|&n| Rat::new(BigInt::from(n), BigInt::from(denominator)))
            .collect();
        // Project type A onto the trace-zero weight span via coefficients.
        let raw = RationalVector::new(coords);
        let coeffs = datum.weight_coefficients(&raw).unwrap();
        let nu = datum.from_weight_coefficients(&coeffs).unwrap();

        let point = datum.point(nu.clone()).unwrap();
        let dominant = point.dominant_representative();
        prop_assert!(dominant.is_dominant());
        let again = dominant.dominant_representative();
        prop_assert!(again.nu == dominant.nu, "idempotent on dominant points");
        prop_assert!(nu.dot(&nu) == dominant.nu.dot(&dominant.nu), "norm preserved");
        if point.is_dominant() {
            prop_assert!(point.nu == dominant.nu);
        }
    }

    /// Hermitian parameters: outside type A and the two asymmetric
    /// exceptional data (D odd, E6), every dominant point is hermitian.
    #[test]
    fn hermitian_always_holds_when_w0_is_minus_one(
        type_index in 0usize..26,
        numerators in proptest::collection::vec(0i64..=4, 8),
    ) {
        let types = supported_types();
        let t = types[type_index % types.len()];
        let self_dual = match t.family {
            Family::B | Family::C | Family::G | Family::F => true,
            Family::D => t.rank % 2 == 0,
            Family::E => t.rank != 6,
            Family::A => t.rank == 1,
        };
        if self_dual {
            let datum = cached_datum(t).unwrap();
            let coeffs: Vec<Rat> = numerators
                .iter()
                .cycle()
                .take(datum.rank())
                .map(|&n| Rat::from_integer(BigInt::from(n)))
                .collect();
            let nu = datum.from_weight_coefficients(&coeffs).unwrap();
            let point = datum.point(nu).unwrap();
            prop_assert!(point.is_hermitian().unwrap());
        }
    }
}
