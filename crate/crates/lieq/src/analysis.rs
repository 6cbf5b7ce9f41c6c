//! Weight-pattern comparison tooling: marginal matrices and the top-down
//! Property A dichotomy, the elimination table for extraneous points,
//! orbit identification from filtration rows, and the half-spin
//! discriminator for very even `D` orbit pairs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orbits::{
    classical_orbits, exceptional_catalog, NilpotentOrbit, OrbitError, OrbitLabel,
};
use crate::rational::RationalVector;
use crate::repweights::{
    filtration_row, weight_pattern, weights_of, RepLabel, RepWeightError, WeightPattern,
};
use crate::rootdata::{Family, RootDataError, SimpleType};
use crate::unitarity::{central_point, extraneous_points, UnitarityError};

/// Errors raised by the comparison tooling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("patterns have different totals: {left} vs {right}")]
    TotalMismatch { left: usize, right: usize },
    #[error("no {simple_type} orbit has filtration row {row:?}")]
    NoMatch { simple_type: String, row: Vec<usize> },
    #[error("filtration row {row:?} matches more than one {simple_type} orbit")]
    AmbiguousMatch { simple_type: String, row: Vec<usize> },
    #[error("orbit {0} is not a very even D orbit")]
    NotVeryEven(String),
    #[error("point for {orbit} not eliminated: verdict {verdict}")]
    NotEliminated { orbit: String, verdict: String },
    #[error("type {0} has no exceptional catalog")]
    NotExceptional(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    RepWeight(#[from] RepWeightError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Unitarity(#[from] UnitarityError),
}

// --- marginal matrices ------------------------------------------------------

/// A finitely supported matrix `a(i, k)` of nonnegative integers. The
/// purity symmetry condition is `a(i, i+j) = a(i, i−j)` for all `i, j`
/// (each row is palindromic about its own index).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarginalMatrix {
    entries: BTreeMap<(i64, i64), usize>,
}

impl MarginalMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((i64, i64), usize)>) -> Self {
        let mut m = Self::new();
        for ((i, k), v) in entries {
            m.set(i, k, v);
        }
        m
    }

    pub fn set(&mut self, i: i64, k: i64, value: usize) {
        if value == 0 {
            self.entries.remove(&(i, k));
        } else {
            self.entries.insert((i, k), value);
        }
    }

    /// Adds `value` at `(i, i+j)` and `(i, i−j)`, keeping the symmetry.
    pub fn add_symmetric_pair(&mut self, i: i64, j: i64, value: usize) {
        if value == 0 {
            return;
        }
        *self.entries.entry((i, i + j)).or_insert(0) += value;
        if j != 0 {
            *self.entries.entry((i, i - j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: i64, k: i64) -> usize {
        self.entries.get(&(i, k)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), usize)> + '_ {
        self.entries.iter().map(|(&key, &v)| (key, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks the row-palindrome symmetry `a(i, i+j) = a(i, i−j)`.
    pub fn is_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(i, k), &v)| self.get(i, 2 * i - k) == v)
    }

    /// A random matrix satisfying the symmetry, with support inside
    /// `[−20, 20]²`. Deterministic given the generator state.
    pub fn random_symmetric<R: Rng>(rng: &mut R) -> Self {
        let mut m = Self::new();
        let blocks = rng.gen_range(1..=6);
        for _ in 0..blocks {
            let i = rng.gen_range(-10..=10i64);
            let j = rng.gen_range(0..=9i64.min(20 - i.abs()));
            let value = rng.gen_range(1..=4usize);
            m.add_symmetric_pair(i, j, value);
        }
        m
    }
}

impl fmt::Display for MarginalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .iter()
            .map(|((i, k), v)| format!("a({i},{k})={v}"))
            .collect();
        write!(f, "[{}]", cells.join(", "))
    }
}

/// Row sums (`n_v`) and column sums (`n_u`) of the matrix:
/// `n_v(i) = Σ_k a(i, k)` and `n_u(i) = Σ_k a(k, i)`.
pub fn marginals(m: &MarginalMatrix) -> (WeightPattern, WeightPattern) {
    let mut rows: BTreeMap<i64, usize> = BTreeMap::new();
    let mut cols: BTreeMap<i64, usize> = BTreeMap::new();
    for ((i, k), v) in m.iter() {
        *rows.entry(i).or_insert(0) += v;
        *cols.entry(k).or_insert(0) += v;
    }
    (WeightPattern::from_counts(rows), WeightPattern::from_counts(cols))
}

// --- Property A --------------------------------------------------------------

/// Result of comparing two equal-total weight patterns from the top index
/// downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PropertyAVerdict {
    /// `n_u(i) = n_v(i)` for all `i`.
    DiagonalMatch,
    /// At the first discrepancy `i0`, `n_u(i0) > n_v(i0)`.
    TruncationAt(i64),
    /// At the first discrepancy `i0`, `n_u(i0) < n_v(i0)` — the
    /// configuration forbidden for marginals of a symmetric matrix.
    Violation(i64),
}

impl fmt::Display for PropertyAVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyAVerdict::DiagonalMatch => f.write_str("diagonal-match"),
            PropertyAVerdict::TruncationAt(i) => write!(f, "truncation@{i}"),
            PropertyAVerdict::Violation(i) => write!(f, "violation@{i}"),
        }
    }
}

/// Compares two equal-total patterns scanning downward from the top of
/// their joint support.
pub fn property_a_check(
    n_u: &WeightPattern,
    n_v: &WeightPattern,
) -> Result<PropertyAVerdict, AnalysisError> {
    if n_u.total() != n_v.total() {
        return Err(AnalysisError::TotalMismatch { left: n_u.total(), right: n_v.total() });
    }
    let top = n_u.max_index().into_iter().chain(n_v.max_index()).max();
    let bottom = n_u
        .support()
        .chain(n_v.support())
        .min();
    let (Some(top), Some(bottom)) = (top, bottom) else {
        return Ok(PropertyAVerdict::DiagonalMatch);
    };
    for i in (bottom..=top).rev() {
        let u = n_u.n(i);
        let v = n_v.n(i);
        if u > v {
            return Ok(PropertyAVerdict::TruncationAt(i));
        }
        if u < v {
            return Ok(PropertyAVerdict::Violation(i));
        }
    }
    Ok(PropertyAVerdict::DiagonalMatch)
}

// --- the elimination table -----------------------------------------------------

/// One elimination: the discriminating representation separates the
/// extraneous point from the central point at index `i0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AzsRow {
    pub ambient: SimpleType,
    pub orbit_label: OrbitLabel,
    pub rep: RepLabel,
    pub i0: i64,
    pub n_v_i0: usize,
    pub n_u_i0: usize,
}

fn elimination_row(
    orbit: &NilpotentOrbit,
    rep: &RepLabel,
    re_s: &RationalVector,
) -> Result<AzsRow, AnalysisError> {
    let datum = orbit.datum()?;
    let weighted = weights_of(&datum, rep)?;
    let n_u = weight_pattern(&weighted, &central_point(orbit))?;
    let n_v = weight_pattern(&weighted, re_s)?;
    let verdict = property_a_check(&n_u, &n_v)?;
    let PropertyAVerdict::Violation(i0) = verdict else {
        return Err(AnalysisError::NotEliminated {
            orbit: orbit.to_string(),
            verdict: verdict.to_string(),
        });
    };
    Ok(AzsRow {
        ambient: orbit.ambient,
        orbit_label: orbit.label.clone(),
        rep: rep.clone(),
        i0,
        n_v_i0: n_v.n(i0),
        n_u_i0: n_u.n(i0),
    })
}

/// Recomputes the elimination data for every extraneous point: the seven
/// exceptional entries under the adjoint representation, and the
/// classical `Sp(2n)` (n ≤ 6) and `Spin(m)` (m ≤ 12) families under the
/// standard representation. Every extraneous pattern is a
/// [`PropertyAVerdict::Violation`] against the central pattern; for
/// classical entries the discrepancy index is the largest part with
/// `ε = 1` and the discrepancy is exactly one.
pub fn azs_elimination_table() -> Result<Vec<AzsRow>, AnalysisError> {
    let mut rows = Vec::new();
    for name in ["F4", "E7", "E8"] {
        let t: SimpleType = name.parse().expect("valid type name");
        for orbit in exceptional_catalog(t)? {
            for entry in extraneous_points(orbit)? {
                rows.push(elimination_row(orbit, &RepLabel::Adjoint, &entry.re_s)?);
            }
        }
    }
    let mut classical: Vec<SimpleType> = Vec::new();
    for n in 2..=6 {
        classical.push(SimpleType::new(Family::C, n).expect("valid rank"));
    }
    for n in 2..=5 {
        classical.push(SimpleType::new(Family::B, n).expect("valid rank"));
    }
    for n in 3..=6 {
        classical.push(SimpleType::new(Family::D, n).expect("valid rank"));
    }
    for t in classical {
        let boxes = if t.family == Family::B { 2 * t.rank + 1 } else { 2 * t.rank };
        for orbit in classical_orbits(t, boxes)? {
            for entry in extraneous_points(&orbit)? {
                let row = elimination_row(&orbit, &RepLabel::StandardClassical, &entry.re_s)?;
                let max_on_part = entry
                    .epsilon
                    .as_ref()
                    .and_then(|eps| eps.iter().filter(|(_, on)| *on).map(|(d, _)| *d).max())
                    .expect("classical entry has an ε-assignment");
                assert_eq!(row.i0, max_on_part as i64, "discrepancy index rule");
                assert_eq!(row.n_v_i0, row.n_u_i0 + 1, "discrepancy size rule");
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

// --- orbit identification ---------------------------------------------------

type RowTable = HashMap<SimpleType, Vec<(Vec<usize>, &'static NilpotentOrbit)>>;

/// Filtration rows of every exceptional catalog, computed once.
fn exceptional_row_table() -> Result<&'static RowTable, AnalysisError> {
    static TABLE: OnceLock<Result<RowTable, AnalysisError>> = OnceLock::new();
    TABLE
        .get_or_init(|| {
            let mut map = RowTable::new();
            for name in ["G2", "F4", "E6", "E7", "E8"] {
                let t: SimpleType = name.parse().expect("valid type name");
                let rows = exceptional_catalog(t)?
                    .iter()
                    .map(|o| Ok((filtration_row(o)?, o)))
                    .collect::<Result<Vec<_>, RepWeightError>>()?;
                map.insert(t, rows);
            }
            Ok(map)
        })
        .as_ref()
        .map_err(Clone::clone)
}

/// Finds the unique exceptional orbit whose filtration row matches.
pub fn orbit_from_pattern(
    t: SimpleType,
    row: &[usize],
) -> Result<&'static NilpotentOrbit, AnalysisError> {
    if !t.is_exceptional() {
        return Err(AnalysisError::NotExceptional(t.to_string()));
    }
    let table = exceptional_row_table()?;
    let rows = table
        .get(&t)
        .ok_or_else(|| AnalysisError::NotExceptional(t.to_string()))?;
    let matches: Vec<&'static NilpotentOrbit> = rows
        .iter()
        .filter(|(r, _)| r.as_slice() == row)
        .map(|(_, o)| *o)
        .collect();
    match matches.len() {
        0 => Err(AnalysisError::NoMatch { simple_type: t.to_string(), row: row.to_vec() }),
        1 => Ok(matches[0]),
        _ => Err(AnalysisError::AmbiguousMatch { simple_type: t.to_string(), row: row.to_vec() }),
    }
}

/// Finds a classical orbit from its adjoint filtration row. Ties —
/// notably a very even `D` pair, whose members share the adjoint row —
/// are resolved by the plus half-spin top level when one is supplied;
/// candidates whose half-spin level differs from the hint are dropped.
pub fn classical_orbit_from_pattern(
    t: SimpleType,
    boxes: usize,
    row: &[usize],
    halfspin_top: Option<i64>,
) -> Result<NilpotentOrbit, AnalysisError> {
    let mut matches: Vec<NilpotentOrbit> = classical_orbits(t, boxes)?
        .into_iter()
        .filter(|o| filtration_row(o).map(|r| r == row).unwrap_or(false))
        .collect();
    if matches.len() > 1 && t.family == Family::D {
        if let Some(target) = halfspin_top {
            let mut kept = Vec::new();
            for orbit in matches {
                if halfspin_plus_top_level(&orbit)? == target {
                    kept.push(orbit);
                }
            }
            matches = kept;
        }
    }
    match matches.len() {
        0 => Err(AnalysisError::NoMatch { simple_type: t.to_string(), row: row.to_vec() }),
        1 => Ok(matches.into_iter().next().expect("len checked")),
        _ => Err(AnalysisError::AmbiguousMatch { simple_type: t.to_string(), row: row.to_vec() }),
    }
}

/// Top weight level of the plus half-spin module at `½h∨`, defined for
/// any orbit with a type `D` datum.
pub fn halfspin_plus_top_level(orbit: &NilpotentOrbit) -> Result<i64, AnalysisError> {
    let datum = orbit.datum()?;
    let plus = weights_of(&datum, &RepLabel::HalfSpinPlus)?;
    let pattern = weight_pattern(&plus, &orbit.neutral_element.halved())?;
    Ok(pattern.max_index().expect("half-spin pattern is nonempty"))
}

/// The top half-spin weight levels `(i_I, i_II)` of the two neutral
/// elements of a very even `D` orbit pair: the maximum pattern index of
/// the plus half-spin representation at `½h∨` for each member.
pub fn halfspin_top_levels(orbit: &NilpotentOrbit) -> Result<(i64, i64), AnalysisError> {
    if !orbit.is_very_even() {
        return Err(AnalysisError::NotVeryEven(orbit.to_string()));
    }
    let datum = orbit.datum()?;
    let plus = weights_of(&datum, &RepLabel::HalfSpinPlus)?;
    let coords = orbit.neutral_element.coords();
    let mut h_one: Vec<_> = coords.to_vec();
    // Member I has all entries positive; member II negates the first.
    if h_one[0] < num::Zero::zero() {
        h_one[0] = -h_one[0].clone();
    }
    let mut h_two = h_one.clone();
    h_two[0] = -h_two[0].clone();
    let level = |coords: Vec<crate::rational::Rat>| -> Result<i64, AnalysisError> {
        let nu = RationalVector::new(coords).halved();
        let pattern = weight_pattern(&plus, &nu)?;
        Ok(pattern.max_index().expect("half-spin pattern is nonempty"))
    };
    Ok((level(h_one)?, level(h_two)?))
}
