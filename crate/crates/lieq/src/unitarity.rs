//! Alcove geometry over the fundamental chamber, the half-integral
//! spherical unitarity classification, central and extraneous points of
//! complementary series, the rank-4 exceptional region attached to the
//! `E8` orbit `4A1`, and reduction to quasi-split forms via folding.
//!
//! All computations are exact over rationals. Points `ν` live on the
//! weight side of a [`RootDatum`]; sets of points are returned in a
//! deterministic order (sorted by fundamental-weight coefficients).

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::strict_interior_point;
use crate::orbits::{NilpotentOrbit, OrbitError, OrbitLabel};
use crate::rational::{rat, rint, Rat, RationalVector};
use crate::repweights::{is_half_integral, RepLabel, RepWeightError};
use crate::rootdata::{
    cached_datum, fold, ChamberPoint, Family, RootDataError, RootDatum, SimpleType,
};

/// Errors raised by the unitarity machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitarityError {
    #[error("operation not supported for type {0}: {1}")]
    UnsupportedType(String, String),
    #[error("brute-force region enumeration is limited to rank ≤ {max}, got {simple_type}")]
    RankTooLarge { simple_type: String, max: usize },
    #[error("expected four coordinates, got {0}")]
    CsDimension(usize),
    #[error("coordinates must satisfy 0 ≤ ν1 ≤ ν2 ≤ ν3 ≤ ν4, got {0}")]
    CsUnordered(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    RepWeight(#[from] RepWeightError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

// --- level bounds and the fundamental alcove ------------------------------

/// The maximum coroot level `r0` at which the unitarity bound argument
/// applies, with the full list of positive coroots at that level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelBound {
    pub simple_type: SimpleType,
    pub r0: i64,
    pub level_r0_coroots: Vec<RationalVector>,
}

fn r0_value(t: SimpleType) -> Option<i64> {
    let n = t.rank as i64;
    match t.family {
        Family::A => None,
        Family::B => Some(2 * n - 1),
        Family::C => Some(if n % 2 == 1 { n } else { n + 1 }),
        Family::D => Some(n - 1),
        Family::G => Some(3),
        Family::F => Some(9),
        Family::E => Some(if t.rank == 8 { 15 } else { 9 }),
    }
}

/// The per-type level bound `r0` (hardcoded per the case analysis) and the
/// level-`r0` positive coroots in ambient coordinates.
pub fn max_level_bound(t: SimpleType) -> Result<LevelBound, UnitarityError> {
    let r0 = r0_value(t).ok_or_else(|| {
        UnitarityError::UnsupportedType(
            t.to_string(),
            "the level bound route does not apply to type A".into(),
        )
    })?;
    let datum = cached_datum(t)?;
    let target = rint(r0);
    let level_r0_coroots: Vec<RationalVector> = datum
        .positive_coroots
        .iter()
        .filter(|c| datum.coroot_level(c).expect("coroot from same datum") == target)
        .cloned()
        .collect();
    debug_assert!(!level_r0_coroots.is_empty());
    Ok(LevelBound { simple_type: t, r0, level_r0_coroots })
}

/// True iff `ν` is dominant and `⟨γ∨, ν⟩ < 1` (strictly inside the
/// fundamental alcove walls other than the chamber walls).
pub fn fundamental_alcove_test(p: &ChamberPoint<'_>) -> bool {
    p.is_dominant() && p.datum.highest_coroot().dot(&p.nu) < rint(1)
}

/// True iff dominant `ν` hits a reducibility hyperplane: some positive
/// coroot pairs with it in `ℤ_{>0}` (the point is then outside the open
/// unitary set).
pub fn integral_point_nonunitary(p: &ChamberPoint<'_>) -> Result<bool, UnitarityError> {
    if !p.is_dominant() {
        return Err(UnitarityError::RootData(RootDataError::NotDominant(
            p.nu.to_tuple_string(),
        )));
    }
    Ok(p.datum.positive_coroots.iter().any(|c| {
        let v = c.dot(&p.nu);
        v.is_integer() && v > Rat::zero()
    }))
}

// --- the half-integral classification --------------------------------------

/// Hermiticity of `ν = Σ_{i ∈ mask} ½ω_i` as a condition on the mask
/// (which coefficients the longest Weyl element permutes onto each other).
fn mask_is_hermitian(t: SimpleType, mask: usize) -> bool {
    let rank = t.rank;
    let bit = |i: usize| mask >> i & 1;
    match t.family {
        Family::A => (0..rank).all(|i| bit(i) == bit(rank - 1 - i)),
        Family::D if rank % 2 == 1 => bit(0) == bit(1),
        Family::E if rank == 6 => bit(0) == bit(5) && bit(2) == bit(4),
        _ => true,
    }
}

/// The half-integral generic unitary points of the split adjoint group of
/// type `t`: candidates `ν = Σ ν_i ω_i` with `ν_i ∈ {0, ½}`, filtered by
/// hermiticity, the strict level-`r0` bounds, the reducibility hyperplanes
/// `⟨β∨, ν⟩ = 1`, and fundamental-alcove membership. Type `A` uses the
/// coordinate bound `a1 < ½` instead of the level-bound route.
///
/// The coroot filters run in integer coefficient space: for a candidate
/// mask, `2⟨β∨, ν⟩ = Σ_{i ∈ mask} ⟨β∨, ω_i⟩` with integer summands, so a
/// coroot bound `⟨β∨, ν⟩ < 1` is `Σ < 2`. Ambient vectors are built for
/// survivors only.
pub fn half_integral_unitary_points(t: SimpleType) -> Result<Vec<RationalVector>, UnitarityError> {
    let datum = cached_datum(t)?;
    let rank = datum.rank();
    let halves: Vec<RationalVector> =
        datum.fundamental_weights.iter().map(|w| w.halved()).collect();
    let build = |mask: usize| {
        (0..rank)
            .filter(|i| mask >> i & 1 == 1)
            .fold(RationalVector::zero(datum.ambient_dim()), |nu, i| &nu + &halves[i])
    };
    let mut kept_masks: Vec<usize> = Vec::new();
    if t.family == Family::A {
        let half = rat(1, 2);
        let first: Vec<Rat> = halves.iter().map(|w| w.coords()[0].clone()).collect();
        for mask in 0..(1usize << rank) {
            if !mask_is_hermitian(t, mask) {
                continue;
            }
            // Dominant ν has decreasing coordinates, so a1 is coordinate 0.
            let a1: Rat = (0..rank)
                .filter(|i| mask >> i & 1 == 1)
                .fold(Rat::zero(), |acc, i| acc + &first[i]);
            if a1 < half {
                kept_masks.push(mask);
            }
        }
    } else {
        let lb = max_level_bound(t)?;
        let rows: Vec<Vec<i64>> = datum
            .positive_coroots
            .iter()
            .map(|c| coroot_weight_row(&datum, c))
            .collect::<Result<_, _>>()?;
        let r0_rows: Vec<&Vec<i64>> = rows
            .iter()
            .filter(|row| row.iter().sum::<i64>() == lb.r0)
            .collect();
        debug_assert_eq!(r0_rows.len(), lb.level_r0_coroots.len());
        let top_row = rows
            .iter()
            .max_by_key(|row| row.iter().sum::<i64>())
            .expect("nonempty coroot list")
            .clone();
        for mask in 0..(1usize << rank) {
            if !mask_is_hermitian(t, mask) {
                continue;
            }
            let doubled = |row: &[i64]| -> i64 {
                (0..rank).filter(|i| mask >> i & 1 == 1).map(|i| row[i]).sum()
            };
            let keep = r0_rows.iter().all(|row| doubled(row) < 2)
                && !rows.iter().any(|row| doubled(row) == 2)
                && doubled(&top_row) < 2;
            if keep {
                kept_masks.push(mask);
            }
        }
    }
    // Deterministic order: by fundamental-weight coefficient vector.
    kept_masks.sort_by_key(|&mask| {
        (0..rank).map(|i| mask >> i & 1).collect::<Vec<_>>()
    });
    Ok(kept_masks.into_iter().map(build).collect())
}

/// Integer row `(⟨β∨, ω_1⟩, …, ⟨β∨, ω_l⟩)` of a positive coroot: its
/// coordinates in the simple-coroot basis.
fn coroot_weight_row(datum: &RootDatum, coroot: &RationalVector) -> Result<Vec<i64>, UnitarityError> {
    datum
        .fundamental_weights
        .iter()
        .map(|w| {
            let v = coroot.dot(w);
            debug_assert!(v.is_integer());
            num::ToPrimitive::to_i64(&v.to_integer()).ok_or_else(|| {
                UnitarityError::UnsupportedType(
                    datum.simple_type.to_string(),
                    "coroot coefficient overflow".into(),
                )
            })
        })
        .collect()
}

// --- chamber region counting ------------------------------------------------

/// Number of open regions into which the reducibility hyperplanes
/// `{⟨β∨, ν⟩ = 1}` cut the fundamental chamber: `∏_i (d_i + h) / d_i`
/// over the degrees of the Weyl group.
pub fn count_chamber_regions(t: SimpleType) -> Result<BigInt, UnitarityError> {
    let datum = cached_datum(t)?;
    let h = rint(datum.coxeter_number as i64);
    let mut product = Rat::one();
    for &d in &datum.degrees {
        let d = rint(d as i64);
        product *= (&d + &h) / d;
    }
    debug_assert!(product.is_integer());
    Ok(product.to_integer())
}

/// Counts the same regions by exact recursive hyperplane splitting with
/// rational interior-point certificates. Limited to rank ≤ 4.
pub fn brute_force_regions(t: SimpleType) -> Result<usize, UnitarityError> {
    const MAX_RANK: usize = 4;
    if t.rank > MAX_RANK {
        return Err(UnitarityError::RankTooLarge { simple_type: t.to_string(), max: MAX_RANK });
    }
    let datum = cached_datum(t)?;
    // A region is a list of strict constraints `normal·x > bound` together
    // with a certified interior witness.
    let base: Vec<(RationalVector, Rat)> = datum
        .simple_coroots
        .iter()
        .map(|c| (c.clone(), Rat::zero()))
        .collect();
    let witness = strict_interior_point(&base)
        .expect("the open fundamental chamber is nonempty");
    let mut regions = vec![(base, witness)];
    for beta in &datum.positive_coroots {
        let mut next = Vec::with_capacity(regions.len() + 8);
        for (constraints, witness) in std::mem::take(&mut regions) {
            let sides = [(beta.clone(), rint(1)), (-beta, rint(-1))];
            for side in sides {
                let mut cut = constraints.clone();
                cut.push(side.clone());
                if side.0.dot(&witness) > side.1 {
                    next.push((cut, witness.clone()));
                } else if let Some(w) = strict_interior_point(&cut) {
                    next.push((cut, w));
                }
            }
        }
        regions = next;
    }
    Ok(regions.len())
}

// --- central and extraneous points ------------------------------------------

/// The central point `½h∨` of the complementary series attached to an
/// orbit (dominant).
pub fn central_point(orbit: &NilpotentOrbit) -> RationalVector {
    orbit.neutral_element.halved()
}

/// One extraneous point of a complementary series: a half-integral
/// parameter whose real part differs from the central point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraneousCatalogEntry {
    /// Dynkin type of the dual group containing the orbit.
    pub ambient: SimpleType,
    pub orbit_label: OrbitLabel,
    /// Dominant real part, in the ambient coordinates of the orbit's datum.
    pub re_s: RationalVector,
    /// The reductive centralizer `z(O∨)` as printed in the catalog.
    pub centralizer_z: String,
    /// For classical families: the `(part, ε)` assignment over qualifying
    /// parts that generated this entry.
    pub epsilon: Option<Vec<(usize, bool)>>,
}

/// Exceptional-type extraneous points: fundamental-weight coefficient
/// vectors (numerator, denominator) and the centralizer `z(O∨)`.
const EXCEPTIONAL_EXTRANEOUS: &[(&str, &str, &[(i64, i64)], &str)] = &[
    ("F4", "B3", &[(1, 1), (0, 1), (1, 2), (1, 2)], "A1"),
    ("F4", "A1+Ã1", &[(1, 2), (0, 1), (0, 1), (1, 2)], "A1+A1"),
    (
        "E7",
        "D5(a1)+A1",
        &[(1, 2), (1, 2), (1, 2), (0, 1), (0, 1), (1, 2), (1, 2)],
        "A1",
    ),
    (
        "E8",
        "D6",
        &[(1, 1), (0, 1), (0, 1), (1, 2), (0, 1), (1, 2), (0, 1), (1, 1)],
        "B2",
    ),
    (
        "E8",
        "A6",
        &[(1, 2), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2), (1, 2)],
        "2A1",
    ),
    (
        "E8",
        "A4+A2",
        &[(1, 2), (0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (1, 2)],
        "2A1",
    ),
    (
        "E8",
        "A2+2A1",
        &[(0, 1), (1, 2), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 2)],
        "B3+A1",
    ),
];

/// All extraneous points of the complementary series attached to `orbit`.
/// Type `A`, `G2`, and `E6` orbits never have any; classical `Sp`/`Spin`
/// orbits generate them from ε-assignments on qualifying parts
/// (multiplicity ≥ 3 of even parts for `Sp`, of odd parts for `Spin`,
/// with an even ε-sum for `Spin`); `F4`/`E7`/`E8` orbits use the fixed
/// seven-entry catalog.
pub fn extraneous_points(
    orbit: &NilpotentOrbit,
) -> Result<Vec<ExtraneousCatalogEntry>, UnitarityError> {
    match orbit.ambient.family {
        Family::A | Family::G => Ok(Vec::new()),
        Family::E if orbit.ambient.rank == 6 => Ok(Vec::new()),
        Family::F | Family::E => exceptional_extraneous(orbit),
        Family::B | Family::C | Family::D => classical_extraneous(orbit),
    }
}

fn exceptional_extraneous(
    orbit: &NilpotentOrbit,
) -> Result<Vec<ExtraneousCatalogEntry>, UnitarityError> {
    let OrbitLabel::BalaCarter(label) = &orbit.label else {
        return Ok(Vec::new());
    };
    let type_name = orbit.ambient.to_string();
    let datum = orbit.datum()?;
    let mut out = Vec::new();
    for &(t, l, coeffs, z) in EXCEPTIONAL_EXTRANEOUS {
        if t == type_name && l == label {
            let coeff_vec: Vec<Rat> = coeffs.iter().map(|&(n, d)| rat(n, d)).collect();
            let re_s = datum.from_weight_coefficients(&coeff_vec)?;
            out.push(ExtraneousCatalogEntry {
                ambient: orbit.ambient,
                orbit_label: orbit.label.clone(),
                re_s,
                centralizer_z: z.to_owned(),
                epsilon: None,
            });
        }
    }
    Ok(out)
}

/// The half-string `(d−1)/2, (d−3)/2, …, (1−d)/2` of a part.
fn half_string(d: usize) -> Vec<Rat> {
    (0..d).map(|k| rat(d as i64 - 1 - 2 * k as i64, 2)).collect()
}

fn classical_extraneous(
    orbit: &NilpotentOrbit,
) -> Result<Vec<ExtraneousCatalogEntry>, UnitarityError> {
    let Some(parts) = orbit.partition() else {
        return Ok(Vec::new());
    };
    let datum = orbit.datum()?;
    let m = datum.ambient_dim();
    // Group the (decreasing) partition into (part, multiplicity).
    let mut grouped: Vec<(usize, usize)> = Vec::new();
    for &p in parts {
        match grouped.last_mut() {
            Some((d, r)) if *d == p => *r += 1,
            _ => grouped.push((p, 1)),
        }
    }
    let spin_ambient = orbit.ambient.family != Family::C;
    let qualifying: Vec<usize> = grouped
        .iter()
        .enumerate()
        .filter(|(_, &(d, r))| r >= 3 && (d % 2 == if spin_ambient { 1 } else { 0 }))
        .map(|(idx, _)| idx)
        .collect();
    let q = qualifying.len();
    if q == 0 {
        return Ok(Vec::new());
    }
    let half = rat(1, 2);
    let mut out = Vec::new();
    for mask in 1usize..(1 << q) {
        if spin_ambient && mask.count_ones() % 2 == 1 {
            continue;
        }
        let mut values: Vec<Rat> = Vec::new();
        for (idx, &(d, r)) in grouped.iter().enumerate() {
            let eps_on = qualifying
                .iter()
                .position(|&j| j == idx)
                .is_some_and(|pos| mask >> pos & 1 == 1);
            for s in half_string(d) {
                if eps_on {
                    values.push(&s + &half);
                    values.push(&s - &half);
                    values.extend(std::iter::repeat_with(|| s.clone()).take(r - 2));
                } else {
                    values.extend(std::iter::repeat_with(|| s.clone()).take(r));
                }
            }
        }
        values.sort_by(|a, b| b.cmp(a));
        values.truncate(m);
        values.reverse();
        let re_s = RationalVector::new(values);
        debug_assert!(datum.point(re_s.clone()).unwrap().is_dominant());
        let epsilon = qualifying
            .iter()
            .enumerate()
            .map(|(pos, &j)| (grouped[j].0, mask >> pos & 1 == 1))
            .collect();
        out.push(ExtraneousCatalogEntry {
            ambient: orbit.ambient,
            orbit_label: orbit.label.clone(),
            re_s,
            centralizer_z: orbit.centralizer_type.to_string(),
            epsilon: Some(epsilon),
        });
    }
    Ok(out)
}

// --- the E8 / 4A1 region ------------------------------------------------------

fn check_cs_coordinates(nu: &[Rat]) -> Result<(), UnitarityError> {
    if nu.len() != 4 {
        return Err(UnitarityError::CsDimension(nu.len()));
    }
    let ordered = nu[0] >= Rat::zero() && nu.windows(2).all(|w| w[0] <= w[1]);
    if !ordered {
        let shown: Vec<String> = nu.iter().map(|v| v.to_string()).collect();
        return Err(UnitarityError::CsUnordered(format!("({})", shown.join(", "))));
    }
    Ok(())
}

fn cs_base_region(nu: &[Rat]) -> bool {
    nu[3] < rat(1, 2)
}

fn cs_extra_region(nu: &[Rat]) -> bool {
    let one = rint(1);
    let three_halves = rat(3, 2);
    &nu[0] + &nu[3] < one
        && &nu[1] + &nu[2] < one
        && &nu[1] + &nu[3] > one
        && &(&nu[2] + &nu[3]) - &nu[0] < three_halves
        && &(&nu[0] + &nu[2]) + &nu[3] > three_halves
}

/// Membership in the complementary series of the `E8` orbit `4A1`, the
/// union of the base region `{ν4 < ½}` and the disjoint extra region cut
/// out by five strict inequalities. Requires `0 ≤ ν1 ≤ ν2 ≤ ν3 ≤ ν4`.
pub fn cs_e8_4a1_member(nu: &[Rat]) -> Result<bool, UnitarityError> {
    check_cs_coordinates(nu)?;
    Ok(cs_base_region(nu) || cs_extra_region(nu))
}

/// Membership in the extra region only.
pub fn cs_e8_4a1_extra_member(nu: &[Rat]) -> Result<bool, UnitarityError> {
    check_cs_coordinates(nu)?;
    Ok(cs_extra_region(nu))
}

/// Scans every point with all `ν_i ∈ ¼ℤ`, `0 ≤ ν1 ≤ ν2 ≤ ν3 ≤ ν4 < 2`,
/// returning those inside the extra region (expected: none).
pub fn cs_e8_4a1_quarter_grid_extra_members() -> Vec<Vec<Rat>> {
    let mut members = Vec::new();
    for k4 in 0..8i64 {
        for k3 in 0..=k4 {
            for k2 in 0..=k3 {
                for k1 in 0..=k2 {
                    let nu = vec![rat(k1, 4), rat(k2, 4), rat(k3, 4), rat(k4, 4)];
                    if cs_extra_region(&nu) {
                        members.push(nu);
                    }
                }
            }
        }
    }
    members
}

/// A certified member of the extra region with non-half-integral
/// coordinates.
pub fn cs_e8_4a1_extra_witness() -> Vec<Rat> {
    vec![rat(2, 5), rat(21, 50), rat(11, 20), rat(59, 100)]
}

// --- quasi-split reduction -----------------------------------------------------

/// What an elimination test said about one candidate point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EliminationOutcome {
    /// The representation's pattern indices at the point are non-integral:
    /// the point is eliminated.
    Eliminated,
    /// The point is half-integral for this representation (no elimination).
    SurvivesTest,
    /// The representation does not descend to the quasi-split form and
    /// cannot be used.
    RepNotAvailable,
}

/// One line of the elimination trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationRecord {
    pub point: RationalVector,
    pub rep: RepLabel,
    pub outcome: EliminationOutcome,
}

/// Result of reducing a quasi-split form to its folded split type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiSplitReduction {
    pub source: SimpleType,
    pub tau_order: u32,
    pub folded: SimpleType,
    /// Half-integral unitary candidates of the folded split type.
    pub candidates: Vec<RationalVector>,
    pub trace: Vec<EliminationRecord>,
    /// Candidates not eliminated by any available representation.
    pub surviving: Vec<RationalVector>,
}

/// Reduces the unramified unitarity question for the quasi-split outer
/// form `(t, tau_order)` to the folded split type, eliminating candidate
/// points by half-integrality against the representations that descend.
///
/// The spin representation descends for folds of type `D` sources but not
/// for the odd unitary case (`A_{2n}` source folding to `C_n`), which is
/// why a nonzero candidate survives there.
pub fn quasi_split_reduction(
    t: SimpleType,
    tau_order: u32,
) -> Result<QuasiSplitReduction, UnitarityError> {
    let folded = fold(t, tau_order)?;
    let discriminators: Vec<(RepLabel, bool)> = match (t.family, folded.family) {
        (Family::A, Family::B) => vec![(RepLabel::StandardClassical, true)],
        (Family::A, Family::C) => {
            vec![(RepLabel::StandardClassical, true), (RepLabel::Spin, false)]
        }
        (Family::D, Family::C) => {
            vec![(RepLabel::StandardClassical, true), (RepLabel::Spin, true)]
        }
        _ => Vec::new(),
    };
    let candidates = half_integral_unitary_points(folded)?;
    let datum = cached_datum(folded)?;
    let mut trace = Vec::new();
    let mut surviving = Vec::new();
    for nu in &candidates {
        if nu.is_zero() {
            surviving.push(nu.clone());
            continue;
        }
        let mut eliminated = false;
        for (rep, available) in &discriminators {
            if !available {
                trace.push(EliminationRecord {
                    point: nu.clone(),
                    rep: rep.clone(),
                    outcome: EliminationOutcome::RepNotAvailable,
                });
                continue;
            }
            let ok = is_half_integral(&datum, nu, rep)?;
            trace.push(EliminationRecord {
                point: nu.clone(),
                rep: rep.clone(),
                outcome: if ok {
                    EliminationOutcome::SurvivesTest
                } else {
                    EliminationOutcome::Eliminated
                },
            });
            if !ok {
                eliminated = true;
                break;
            }
        }
        if !eliminated {
            surviving.push(nu.clone());
        }
    }
    Ok(QuasiSplitReduction { source: t, tau_order, folded, candidates, trace, surviving })
}

/// Convenience: the set of half-points `{0} ∪ {½ω_i}` indexed by which
/// fundamental weights carry a `½` coefficient, as a printable map.
pub fn coefficient_map(
    datum: &RootDatum,
    nu: &RationalVector,
) -> Result<BTreeMap<usize, Rat>, UnitarityError> {
    let coeffs = datum.weight_coefficients(nu)?;
    Ok(coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i + 1, c))
        .collect())
}
