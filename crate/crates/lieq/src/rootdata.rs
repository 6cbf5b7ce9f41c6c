//! Root data for the split simple families in ambient Euclidean coordinates.
//!
//! Conventions:
//!
//! * Every family is realized in a fixed ambient rational space with the
//!   standard dot product as the pairing. Type `A` rank `n−1` lives in the
//!   trace-zero hyperplane of `ℝ^n`; types `B`/`C`/`D` rank `n` in `ℝ^n`;
//!   `G2` in the sum-zero plane of `ℝ^3`; `F4` in `ℝ^4`; `E6`/`E7`/`E8` in
//!   `ℝ^8` (the smaller two as subsystems of the `E8` realization).
//! * Parameters `ν`, `ρ`, and neutral elements of dual-group orbits live on
//!   the weight side; adjoint and representation weights of the dual group
//!   live on the coweight side. The pairing between the two sides is the
//!   ambient dot product.
//! * Simple roots satisfy `α_i = 2 α_i∨ / |α_i∨|²`, and the fundamental
//!   weights are dual to the simple coroots: `⟨α_i∨, ω_j⟩ = δ_ij`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{rat, rint, Rat, RationalVector};

/// Errors raised by root-datum construction and chamber geometry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("unknown simple type `{0}`")]
    UnknownType(String),
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires a dominant parameter, got {0}")]
    NotDominant(String),
    #[error("({0}, order {1}) is not a diagram-folding row")]
    FoldNotInTable(String, u32),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// The simple Cartan–Killing families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(RootDataError::UnknownType(other.to_owned())),
        }
    }
}

/// Informational isogeny tag. Split-side data in this crate are adjoint;
/// dual groups are simply connected. The tag does not participate in
/// equality or hashing: two `SimpleType`s are the same Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Isogeny {
    #[default]
    Adjoint,
    SimplyConnected,
}

/// A simple Dynkin type `family` + `rank` with an informational isogeny tag.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
    pub isogeny: Isogeny,
}

impl PartialEq for SimpleType {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}
impl Eq for SimpleType {}

impl std::hash::Hash for SimpleType {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.family.hash(state);
        self.rank.hash(state);
    }
}

impl PartialOrd for SimpleType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for SimpleType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.family, self.rank).cmp(&(other.family, other.rank))
    }
}

impl SimpleType {
    /// Validates family/rank: `A_{≥1}`, `B_{≥1}`, `C_{≥1}`, `D_{≥3}`,
    /// `E6/E7/E8`, `F4`, `G2`.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank, isogeny: Isogeny::Adjoint })
        } else {
            Err(RootDataError::InvalidRank { family: family.letter(), rank })
        }
    }

    pub fn with_isogeny(mut self, isogeny: Isogeny) -> Self {
        self.isogeny = isogeny;
        self
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn algebra_dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::G => 14,
            Family::F => 52,
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
        }
    }

    /// The type whose weight side hosts neutral elements of nilpotent
    /// orbits of *this* type's group: `B` and `C` exchange (their root and
    /// coroot systems are transposed), all other families are self-paired.
    pub fn dual_partner(&self) -> SimpleType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        SimpleType { family, rank: self.rank, isogeny: self.isogeny }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.len() < 2 {
            return Err(RootDataError::UnknownType(t.to_owned()));
        }
        let (head, tail) = t.split_at(1);
        let family = Family::from_str(head)?;
        let rank: usize = tail
            .parse()
            .map_err(|_| RootDataError::UnknownType(t.to_owned()))?;
        SimpleType::new(family, rank)
    }
}

/// A complete exact root datum in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    pub simple_type: SimpleType,
    pub simple_roots: Vec<RationalVector>,
    pub simple_coroots: Vec<RationalVector>,
    pub fundamental_weights: Vec<RationalVector>,
    pub fundamental_coweights: Vec<RationalVector>,
    /// Positive coroots sorted by (level, coefficient vector).
    pub positive_coroots: Vec<RationalVector>,
    /// Half-sum of positive roots = sum of fundamental weights.
    pub rho: RationalVector,
    pub coxeter_number: usize,
    /// Fundamental invariant degrees of the (co)root Weyl group.
    pub degrees: Vec<usize>,
}

/// Schema version for serialized root data.
pub const ROOT_DATUM_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct RootDatumDocument {
    schema_version: u32,
    #[serde(flatten)]
    datum: RootDatum,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.rho.dim()
    }

    /// The highest positive coroot `γ∨` (unique, level `h − 1`).
    pub fn highest_coroot(&self) -> &RationalVector {
        self.positive_coroots
            .last()
            .expect("root datum has at least one positive coroot")
    }

    /// Level of a coroot-side vector: its pairing with `ρ`.
    pub fn coroot_level(&self, coroot: &RationalVector) -> Result<Rat, RootDataError> {
        pairing(coroot, &self.rho)
    }

    /// Fundamental-weight coefficients `⟨α_i∨, ν⟩` of a weight-side vector.
    pub fn weight_coefficients(&self, nu: &RationalVector) -> Result<Vec<Rat>, RootDataError> {
        self.simple_coroots
            .iter()
            .map(|av| pairing(av, nu))
            .collect()
    }

    /// Builds `Σ c_i ω_i` from fundamental-weight coefficients.
    pub fn from_weight_coefficients(&self, coeffs: &[Rat]) -> Result<RationalVector, RootDataError> {
        if coeffs.len() != self.rank() {
            return Err(RootDataError::DimensionMismatch {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        let mut v = RationalVector::zero(self.ambient_dim());
        for (c, w) in coeffs.iter().zip(&self.fundamental_weights) {
            v = &v + &w.scale(c);
        }
        Ok(v)
    }

    /// Wraps a weight-side vector as a chamber point after a dimension check.
    pub fn point(&self, nu: RationalVector) -> Result<ChamberPoint<'_>, RootDataError> {
        if nu.dim() != self.ambient_dim() {
            return Err(RootDataError::DimensionMismatch {
                expected: self.ambient_dim(),
                got: nu.dim(),
            });
        }
        Ok(ChamberPoint { datum: self, nu })
    }

    /// Serializes to the versioned JSON document format.
    pub fn to_json(&self) -> String {
        let doc = RootDatumDocument {
            schema_version: ROOT_DATUM_SCHEMA_VERSION,
            datum: self.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("root datum serializes")
    }

    /// Reads back a versioned JSON document.
    pub fn from_json(text: &str) -> Result<RootDatum, RootDataError> {
        let doc: RootDatumDocument = serde_json::from_str(text)
            .map_err(|e| RootDataError::Invariant(format!("deserialization failed: {e}")))?;
        if doc.schema_version != ROOT_DATUM_SCHEMA_VERSION {
            return Err(RootDataError::Invariant(format!(
                "unsupported schema version {}",
                doc.schema_version
            )));
        }
        Ok(doc.datum)
    }
}

/// The ambient pairing (dot product) between a coweight-side and a
/// weight-side vector; errors on dimension mismatch.
pub fn pairing(x: &RationalVector, y: &RationalVector) -> Result<Rat, RootDataError> {
    if x.dim() != y.dim() {
        return Err(RootDataError::DimensionMismatch { expected: x.dim(), got: y.dim() });
    }
    Ok(x.dot(y))
}

/// A weight-side parameter attached to its root datum.
#[derive(Clone)]
pub struct ChamberPoint<'a> {
    pub datum: &'a RootDatum,
    pub nu: RationalVector,
}

impl fmt::Debug for ChamberPoint<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChamberPoint[{}]{}", self.datum.simple_type, self.nu)
    }
}

impl PartialEq for ChamberPoint<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.datum.simple_type == other.datum.simple_type && self.nu == other.nu
    }
}
impl Eq for ChamberPoint<'_> {}

impl<'a> ChamberPoint<'a> {
    /// True when `⟨α_i∨, ν⟩ ≥ 0` for every simple coroot.
    pub fn is_dominant(&self) -> bool {
        self.datum
            .simple_coroots
            .iter()
            .all(|av| !av.dot(&self.nu).is_negative())
    }

    /// The dominant Weyl-chamber representative, computed by simple
    /// reflections `s_i(ν) = ν − ⟨α_i∨, ν⟩ α_i`. Idempotent and constant on
    /// Weyl orbits.
    pub fn dominant_representative(&self) -> ChamberPoint<'a> {
        let d = self.datum;
        let mut nu = self.nu.clone();
        loop {
            let mut changed = false;
            for (av, a) in d.simple_coroots.iter().zip(&d.simple_roots) {
                let c = av.dot(&nu);
                if c.is_negative() {
                    nu = &nu - &a.scale(&c);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        ChamberPoint { datum: d, nu }
    }

    /// Hermiticity of the dominant parameter: `w₀ν = −ν`.
    ///
    /// Automatic except in type `A` (coordinates anti-symmetric under
    /// reversal), type `D` of odd rank (`ν₁ = 0`), and `E6`
    /// (`c₁ = c₆`, `c₃ = c₅` in fundamental-weight coefficients).
    ///
    /// Errors when the point is not dominant.
    pub fn is_hermitian(&self) -> Result<bool, RootDataError> {
        if !self.is_dominant() {
            return Err(RootDataError::NotDominant(self.nu.to_tuple_string()));
        }
        let t = self.datum.simple_type;
        let coords = self.nu.coords();
        Ok(match (t.family, t.rank) {
            (Family::A, _) => {
                let n = coords.len();
                (0..n).all(|i| coords[i] == -coords[n - 1 - i].clone())
            }
            (Family::D, n) if n % 2 == 1 => coords[0].is_zero(),
            (Family::E, 6) => {
                let c = self.datum.weight_coefficients(&self.nu)?;
                c[0] == c[5] && c[2] == c[4]
            }
            _ => true,
        })
    }
}

/// Builds the root datum for a validated simple type.
pub fn build_root_datum(t: SimpleType) -> Result<RootDatum, RootDataError> {
    // Revalidate so raw struct literals cannot smuggle in bad ranks.
    let t = SimpleType::new(t.family, t.rank)?.with_isogeny(t.isogeny);
    let n = t.rank;
    let (coroots, weights, h, degrees): (Vec<RationalVector>, Vec<RationalVector>, usize, Vec<usize>) =
        match t.family {
            Family::A => {
                let amb = n + 1;
                // α_i∨ = ε_i − ε_{i+1}: dominance means decreasing coordinates.
                let coroots = (0..n)
                    .map(|i| basis_diff(amb, i, i + 1))
                    .collect::<Vec<_>>();
                // ω_i = ε_1 + … + ε_i − (i/(n+1)) Σ ε_k, inside trace zero.
                let weights = (1..=n)
                    .map(|i| {
                        let c = rat(-(i as i64), amb as i64);
                        let coords = (0..amb)
                            .map(|k| if k < i { &c + &rint(1) } else { c.clone() })
                            .collect();
                        RationalVector::new(coords)
                    })
                    .collect();
                (coroots, weights, n + 1, (2..=n + 1).collect())
            }
            Family::B => {
                let mut coroots = vec![scaled_basis(n, 0, rint(2))];
                coroots.extend((1..n).map(|i| basis_diff(n, i, i - 1)));
                let mut weights = vec![RationalVector::new(vec![rat(1, 2); n])];
                weights.extend((1..n).map(|i| tail_ones(n, i)));
                (coroots, weights, 2 * n, (1..=n).map(|d| 2 * d).collect())
            }
            Family::C => {
                let mut coroots = vec![scaled_basis(n, 0, rint(1))];
                coroots.extend((1..n).map(|i| basis_diff(n, i, i - 1)));
                let weights = (0..n).map(|i| tail_ones(n, i)).collect();
                (coroots, weights, 2 * n, (1..=n).map(|d| 2 * d).collect())
            }
            Family::D => {
                let mut coroots = vec![{
                    let mut c = RationalVector::zero(n).into_coords();
                    c[0] = rint(1);
                    c[1] = rint(1);
                    RationalVector::new(c)
                }];
                coroots.push(basis_diff(n, 1, 0));
                coroots.extend((2..n).map(|i| basis_diff(n, i, i - 1)));
                let mut w1 = vec![rat(1, 2); n];
                let mut w2 = vec![rat(1, 2); n];
                w1[0] = rat(1, 2);
                w2[0] = rat(-1, 2);
                let mut weights = vec![RationalVector::new(w1), RationalVector::new(w2)];
                weights.extend((2..n).map(|i| tail_ones(n, i)));
                let mut degrees: Vec<usize> = (1..n).map(|d| 2 * d).collect();
                degrees.push(n);
                degrees.sort_unstable();
                (coroots, weights, 2 * n - 2, degrees)
            }
            Family::G => {
                let coroots = vec![
                    RationalVector::from_pairs(&[(2, 3), (-1, 3), (-1, 3)]),
                    RationalVector::from_ints(&[-1, 1, 0]),
                ];
                let weights = vec![
                    RationalVector::from_ints(&[1, 1, -2]),
                    RationalVector::from_ints(&[0, 1, -1]),
                ];
                (coroots, weights, 6, vec![2, 6])
            }
            Family::F => {
                let coroots = vec![
                    RationalVector::from_ints(&[1, -1, -1, -1]),
                    RationalVector::from_ints(&[0, 0, 0, 2]),
                    RationalVector::from_ints(&[0, 0, 1, -1]),
                    RationalVector::from_ints(&[0, 1, -1, 0]),
                ];
                let weights = vec![
                    RationalVector::from_ints(&[1, 0, 0, 0]),
                    RationalVector::from_pairs(&[(3, 2), (1, 2), (1, 2), (1, 2)]),
                    RationalVector::from_ints(&[2, 1, 1, 0]),
                    RationalVector::from_ints(&[1, 1, 0, 0]),
                ];
                (coroots, weights, 12, vec![2, 6, 8, 12])
            }
            Family::E => {
                let full_coroots = e_series_coroots();
                let coroots = full_coroots[..n].to_vec();
                let weights = e_series_weights(n);
                let (h, degrees) = match n {
                    6 => (12, vec![2, 5, 6, 8, 9, 12]),
                    7 => (18, vec![2, 6, 8, 10, 12, 14, 18]),
                    _ => (30, vec![2, 8, 12, 14, 18, 20, 24, 30]),
                };
                (coroots, weights, h, degrees)
            }
        };

    let roots: Vec<RationalVector> = coroots
        .iter()
        .map(|cv| {
            let len2 = cv.dot(cv);
            cv.scale(&(rint(2) / len2))
        })
        .collect();
    let coweights: Vec<RationalVector> = coroots
        .iter()
        .zip(&weights)
        .map(|(cv, w)| w.scale(&(cv.dot(cv) / rint(2))))
        .collect();
    let rho = weights
        .iter()
        .fold(RationalVector::zero(weights[0].dim()), |acc, w| &acc + w);
    let positive_coroots = positive_coroot_closure(&coroots, &roots)?;

    let datum = RootDatum {
        simple_type: t,
        simple_roots: roots,
        simple_coroots: coroots,
        fundamental_weights: weights,
        fundamental_coweights: coweights,
        positive_coroots,
        rho,
        coxeter_number: h,
        degrees,
    };
    check_invariants(&datum)?;
    Ok(datum)
}

/// Process-wide cache of built root data (they are immutable).
pub fn cached_datum(t: SimpleType) -> Result<Arc<RootDatum>, RootDataError> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootDatum>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("datum cache poisoned");
    if let Some(d) = guard.get(&t) {
        return Ok(Arc::clone(d));
    }
    let d = Arc::new(build_root_datum(t)?);
    guard.insert(t, Arc::clone(&d));
    Ok(d)
}

fn basis_diff(dim: usize, plus: usize, minus: usize) -> RationalVector {
    let mut c = RationalVector::zero(dim).into_coords();
    c[plus] = rint(1);
    c[minus] = rint(-1);
    RationalVector::new(c)
}

fn scaled_basis(dim: usize, idx: usize, value: Rat) -> RationalVector {
    let mut c = RationalVector::zero(dim).into_coords();
    c[idx] = value;
    RationalVector::new(c)
}

/// `ε_{i+1} + … + ε_n` (0-based start index `i`).
fn tail_ones(dim: usize, from: usize) -> RationalVector {
    let coords = (0..dim)
        .map(|k| if k >= from { rint(1) } else { rint(0) })
        .collect();
    RationalVector::new(coords)
}

fn e_series_coroots() -> Vec<RationalVector> {
    let mut v = vec![
        RationalVector::from_pairs(&[
            (1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (1, 2),
        ]),
        RationalVector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
        RationalVector::from_ints(&[-1, 1, 0, 0, 0, 0, 0, 0]),
    ];
    for i in 4..=8 {
        // α_i∨ = ε_{i−1} − ε_{i−2} in 1-based ε numbering.
        v.push(basis_diff(8, i - 2, i - 3));
    }
    v
}

fn e_series_weights(rank: usize) -> Vec<RationalVector> {
    match rank {
        6 => vec![
            RationalVector::from_pairs(&[
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (-2, 3),
                (-2, 3),
                (2, 3),
            ]),
            RationalVector::from_pairs(&[
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (-1, 2),
                (-1, 2),
                (1, 2),
            ]),
            RationalVector::from_pairs(&[
                (-1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (-5, 6),
                (-5, 6),
                (5, 6),
            ]),
            RationalVector::from_ints(&[0, 0, 1, 1, 1, -1, -1, 1]),
            RationalVector::from_pairs(&[
                (0, 1),
                (0, 1),
                (0, 1),
                (1, 1),
                (1, 1),
                (-2, 3),
                (-2, 3),
                (2, 3),
            ]),
            RationalVector::from_pairs(&[
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (1, 1),
                (-1, 3),
                (-1, 3),
                (1, 3),
            ]),
        ],
        7 => vec![
            RationalVector::from_ints(&[0, 0, 0, 0, 0, 0, -1, 1]),
            RationalVector::from_pairs(&[
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (-1, 1),
                (1, 1),
            ]),
            RationalVector::from_pairs(&[
                (-1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (-3, 2),
                (3, 2),
            ]),
            RationalVector::from_ints(&[0, 0, 1, 1, 1, 1, -2, 2]),
            RationalVector::from_pairs(&[
                (0, 1),
                (0, 1),
                (0, 1),
                (1, 1),
                (1, 1),
                (1, 1),
                (-3, 2),
                (3, 2),
            ]),
            RationalVector::from_ints(&[0, 0, 0, 0, 1, 1, -1, 1]),
            RationalVector::from_pairs(&[
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (1, 1),
                (-1, 2),
                (1, 2),
            ]),
        ],
        8 => vec![
            RationalVector::from_ints(&[0, 0, 0, 0, 0, 0, 0, 2]),
            RationalVector::from_pairs(&[
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (5, 2),
            ]),
            RationalVector::from_pairs(&[
                (-1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (1, 2),
                (7, 2),
            ]),
            RationalVector::from_ints(&[0, 0, 1, 1, 1, 1, 1, 5]),
            RationalVector::from_ints(&[0, 0, 0, 1, 1, 1, 1, 4]),
            RationalVector::from_ints(&[0, 0, 0, 0, 1, 1, 1, 3]),
            RationalVector::from_ints(&[0, 0, 0, 0, 0, 1, 1, 2]),
            RationalVector::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]),
        ],
        _ => unreachable!("E-series rank validated earlier"),
    }
}

/// Generates all positive coroots by reflection closure over integer
/// coefficient vectors, then maps them to ambient coordinates sorted by
/// (level, coefficients).
fn positive_coroot_closure(
    coroots: &[RationalVector],
    roots: &[RationalVector],
) -> Result<Vec<RationalVector>, RootDataError> {
    let rank = coroots.len();
    // cartan[i][j] = ⟨α_i∨, α_j⟩ — integral by construction.
    let mut cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let v = coroots[i].dot(&roots[j]);
            if !v.is_integer() {
                return Err(RootDataError::Invariant(format!(
                    "non-integral Cartan entry at ({i},{j}): {v}"
                )));
            }
            cartan[i][j] = int_to_i64(&v)?;
        }
    }

    let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(c) = queue.pop() {
        for j in 0..rank {
            // s_j in coefficient space: c_j ← c_j − Σ_i c_i ⟨α_i∨, α_j⟩.
            let pair: i64 = (0..rank).map(|i| c[i] * cartan[i][j]).sum();
            let mut next = c.clone();
            next[j] -= pair;
            if next.iter().all(|&x| x >= 0) && seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }

    let mut with_level: Vec<(i64, Vec<i64>)> = seen
        .into_iter()
        .map(|c| (c.iter().sum::<i64>(), c))
        .collect();
    with_level.sort();
    Ok(with_level
        .into_iter()
        .map(|(_, c)| {
            let mut v = RationalVector::zero(coroots[0].dim());
            for (ci, av) in c.iter().zip(coroots) {
                v = &v + &av.scale(&rint(*ci));
            }
            v
        })
        .collect())
}

fn int_to_i64(v: &Rat) -> Result<i64, RootDataError> {
    use num::ToPrimitive;
    v.to_integer()
        .to_i64()
        .ok_or_else(|| RootDataError::Invariant(format!("integer out of range: {v}")))
}

fn check_invariants(d: &RootDatum) -> Result<(), RootDataError> {
    let rank = d.rank();
    for (i, av) in d.simple_coroots.iter().enumerate() {
        for (j, w) in d.fundamental_weights.iter().enumerate() {
            let expected = if i == j { Rat::one() } else { Rat::zero() };
            if av.dot(w) != expected {
                return Err(RootDataError::Invariant(format!(
                    "⟨α_{}∨, ω_{}⟩ ≠ δ for {}",
                    i + 1,
                    j + 1,
                    d.simple_type
                )));
            }
        }
        for (j, wv) in d.fundamental_coweights.iter().enumerate() {
            let expected = if i == j { Rat::one() } else { Rat::zero() };
            if d.simple_roots[i].dot(wv) != expected {
                return Err(RootDataError::Invariant(format!(
                    "⟨ω_{}∨, α_{}⟩ ≠ δ for {}",
                    j + 1,
                    i + 1,
                    d.simple_type
                )));
            }
        }
    }
    let expected_count = (d.simple_type.algebra_dim() - rank) / 2;
    if d.positive_coroots.len() != expected_count {
        return Err(RootDataError::Invariant(format!(
            "{} has {} positive coroots, expected {}",
            d.simple_type,
            d.positive_coroots.len(),
            expected_count
        )));
    }
    let top_level = d.coroot_level(d.highest_coroot())?;
    if top_level != rint(d.coxeter_number as i64 - 1) {
        return Err(RootDataError::Invariant(format!(
            "highest coroot level {} ≠ h − 1 for {}",
            top_level, d.simple_type
        )));
    }
    let penultimate = d.positive_coroots.len().checked_sub(2);
    if let Some(k) = penultimate {
        if d.coroot_level(&d.positive_coroots[k])? == top_level {
            return Err(RootDataError::Invariant(format!(
                "highest coroot not unique for {}",
                d.simple_type
            )));
        }
    }
    if d.degrees.len() != rank {
        return Err(RootDataError::Invariant(format!(
            "degree count mismatch for {}",
            d.simple_type
        )));
    }
    // Σ (d_i − 1) = number of positive roots.
    let deg_sum: usize = d.degrees.iter().map(|&x| x - 1).sum();
    if deg_sum != expected_count {
        return Err(RootDataError::Invariant(format!(
            "degrees inconsistent with positive root count for {}",
            d.simple_type
        )));
    }
    Ok(())
}

/// Diagram folding rows: `(source type, automorphism order) → folded split
/// type`. Supported rows: `(A_{2n−1}, 2) → B_n` (n ≥ 2), `(A_{2n}, 2) → C_n`
/// (n ≥ 1), `(D_n, 2) → C_{n−1}` (n ≥ 3), `(D_4, 3) → G_2`, `(E_6, 2) → F_4`.
pub fn fold(t: SimpleType, tau_order: u32) -> Result<SimpleType, RootDataError> {
    let fail = || RootDataError::FoldNotInTable(t.to_string(), tau_order);
    match (t.family, t.rank, tau_order) {
        (Family::A, r, 2) if r >= 3 && r % 2 == 1 => SimpleType::new(Family::B, (r + 1) / 2),
        (Family::A, r, 2) if r >= 2 && r % 2 == 0 => SimpleType::new(Family::C, r / 2),
        (Family::D, 4, 3) => SimpleType::new(Family::G, 2),
        (Family::D, r, 2) if r >= 3 => SimpleType::new(Family::C, r - 1),
        (Family::E, 6, 2) => SimpleType::new(Family::F, 4),
        _ => Err(fail()),
    }
}

/// All `(source, order)` pairs folding onto `t` (ranks are determined, so
/// the list is finite; empty when `t` is not a folding target).
pub fn fold_preimages(t: SimpleType) -> Vec<(SimpleType, u32)> {
    let mut out = Vec::new();
    let mut push = |family, rank, order| {
        if let Ok(s) = SimpleType::new(family, rank) {
            if fold(s, order) == Ok(t) {
                out.push((s, order));
            }
        }
    };
    match (t.family, t.rank) {
        (Family::B, n) => push(Family::A, 2 * n - 1, 2),
        (Family::C, n) => {
            push(Family::A, 2 * n, 2);
            push(Family::D, n + 1, 2);
        }
        (Family::G, 2) => push(Family::D, 4, 3),
        (Family::F, 4) => push(Family::E, 6, 2),
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn all_supported_types_build() {
        for s in [
            "A1", "A2", "A7", "A15", "B1", "B2", "B5", "B8", "C1", "C2", "C6", "C8", "D3", "D4",
            "D7", "D8", "G2", "F4", "E6", "E7", "E8",
        ] {
            let d = datum(s);
            assert_eq!(d.simple_type.to_string(), s);
        }
        assert!(build_root_datum(SimpleType { family: Family::D, rank: 2, isogeny: Isogeny::Adjoint }).is_err());
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("H3".parse::<SimpleType>().is_err());
    }

    #[test]
    fn g2_highest_coroot_is_3a1_2a2() {
        let d = datum("G2");
        let expected = &d.simple_coroots[0].scale(&rint(3)) + &d.simple_coroots[1].scale(&rint(2));
        assert_eq!(d.highest_coroot(), &expected);
        assert_eq!(d.coroot_level(d.highest_coroot()).unwrap(), rint(5));
    }

    #[test]
    fn a1_datum_shape() {
        let d = datum("A1");
        assert_eq!(d.positive_coroots.len(), 1);
        assert_eq!(d.coxeter_number, 2);
        assert_eq!(d.simple_roots[0], RationalVector::from_ints(&[1, -1]));
        assert_eq!(d.rho, RationalVector::from_pairs(&[(1, 2), (-1, 2)]));
    }

    #[test]
    fn f4_coroot_count_and_coxeter_number() {
        let d = datum("F4");
        assert_eq!(d.positive_coroots.len(), 24);
        assert_eq!(d.coxeter_number, 12);
        assert_eq!(d.highest_coroot(), &RationalVector::from_ints(&[2, 0, 0, 0]));
    }

    #[test]
    fn f4_level_nine_coroot_is_unique() {
        let d = datum("F4");
        let level9: Vec<_> = d
            .positive_coroots
            .iter()
            .filter(|c| d.coroot_level(c).unwrap() == rint(9))
            .collect();
        assert_eq!(level9.len(), 1);
        // β∨ = α1∨ + 2α2∨ + 4α3∨ + 2α4∨ = (1, 1, 1, −1).
        assert_eq!(level9[0], &RationalVector::from_ints(&[1, 1, 1, -1]));
    }

    #[test]
    fn e8_has_level_fifteen_coroot_beta1() {
        let d = datum("E8");
        let beta1 = RationalVector::from_pairs(&[
            (1, 2),
            (-1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (-1, 2),
            (1, 2),
        ]);
        assert!(d.positive_coroots.contains(&beta1));
        assert_eq!(d.coroot_level(&beta1).unwrap(), rint(15));
        let level15 = d
            .positive_coroots
            .iter()
            .filter(|c| d.coroot_level(c).unwrap() == rint(15))
            .count();
        assert_eq!(level15, 4);
    }

    #[test]
    fn e7_pairing_of_w7_covector_with_half_w7() {
        let d = datum("E7");
        let w7 = &d.fundamental_weights[6];
        let w7v = &d.fundamental_coweights[6];
        assert_eq!(pairing(w7v, &w7.halved()).unwrap(), rat(3, 8) * rint(2));
        assert_eq!(pairing(w7v, &w7.halved()).unwrap(), rat(3, 4));
    }

    #[test]
    fn b_family_pairings() {
        for n in 2..=8usize {
            let d = datum(&format!("B{n}"));
            let gamma = d.highest_coroot().clone();
            let mut two_en = RationalVector::zero(n).into_coords();
            two_en[n - 1] = rint(2);
            assert_eq!(gamma, RationalVector::new(two_en));
            assert_eq!(d.coroot_level(&gamma).unwrap(), rint(2 * n as i64 - 1));
            // ⟨ω_n∨, ½ω_1⟩ = ¼ (last coweight is ε_n, first weight is ½Σε).
            let p = pairing(&d.fundamental_coweights[n - 1], &d.fundamental_weights[0].halved())
                .unwrap();
            assert_eq!(p, rat(1, 4));
        }
    }

    #[test]
    fn c_family_pairings() {
        for n in 2..=8usize {
            let d = datum(&format!("C{n}"));
            // ⟨ω_1∨, ½ω_n⟩ = ¼ (first coweight is ½Σε, last weight is ε_n).
            let p = pairing(&d.fundamental_coweights[0], &d.fundamental_weights[n - 1].halved())
                .unwrap();
            assert_eq!(p, rat(1, 4));
            assert_eq!(d.rho, RationalVector::new((1..=n as i64).map(rint).collect()));
        }
    }

    #[test]
    fn d_family_pairings() {
        for n in 3..=8usize {
            let d = datum(&format!("D{n}"));
            for (cw, w) in [(0, n - 1), (n - 1, 0), (n - 1, 1)] {
                let p = pairing(&d.fundamental_coweights[cw], &d.fundamental_weights[w].halved())
                    .unwrap();
                assert_eq!(p, rat(1, 4), "D{n} pairing (ω_{}∨, ½ω_{})", cw + 1, w + 1);
            }
            assert_eq!(
                d.rho,
                RationalVector::new((0..n as i64).map(rint).collect())
            );
        }
    }

    #[test]
    fn a_type_pgl_even_pairing() {
        for n in [2usize, 4, 8, 16] {
            let d = datum(&format!("A{}", n - 1));
            let p = pairing(
                &d.fundamental_coweights[0],
                &d.fundamental_weights[n / 2 - 1].halved(),
            )
            .unwrap();
            assert_eq!(p, rat(1, 4), "PGL({n})");
        }
    }

    #[test]
    fn dominant_representative_is_idempotent_and_orbit_constant() {
        let d = datum("F4");
        let raw = d
            .point(RationalVector::from_pairs(&[(-3, 2), (7, 3), (0, 1), (-5, 1)]))
            .unwrap();
        let dom = raw.dominant_representative();
        assert!(dom.is_dominant());
        assert_eq!(dom.dominant_representative().nu, dom.nu);
        // Reflect through a few simple roots and re-dominantize.
        let mut nu = dom.nu.clone();
        for i in [0usize, 2, 1, 3, 0, 3, 2] {
            let c = d.simple_coroots[i].dot(&nu);
            nu = &nu - &d.simple_roots[i].scale(&c);
        }
        let back = d.point(nu).unwrap().dominant_representative();
        assert_eq!(back.nu, dom.nu);
    }

    #[test]
    fn e8_half_neutral_of_four_a1_dominantizes_to_half_w2() {
        let d = datum("E8");
        let raw = RationalVector::parse(&["0", "1", "-1/2", "1/2", "-1/2", "1/2", "0", "0"])
            .unwrap();
        let dom = d.point(raw).unwrap().dominant_representative();
        assert_eq!(dom.nu, d.fundamental_weights[1].halved());
    }

    #[test]
    fn hermiticity_per_family() {
        // Type A: anti-symmetric coordinates required.
        let a3 = datum("A3");
        let herm = a3
            .point(RationalVector::from_pairs(&[(1, 2), (0, 1), (0, 1), (-1, 2)]))
            .unwrap();
        assert!(herm.is_hermitian().unwrap());
        let not = a3
            .point(RationalVector::from_pairs(&[(1, 2), (0, 1), (0, 1), (0, 1)]))
            .unwrap();
        // Not dominant? (1/2,0,0,0) is decreasing, so dominant; not hermitian.
        assert!(!not.is_hermitian().unwrap());

        // D odd rank: first coordinate must vanish.
        let d5 = datum("D5");
        let ok = d5.point(d5.fundamental_weights[4].halved()).unwrap();
        assert!(ok.is_hermitian().unwrap());
        let bad = d5.point(d5.fundamental_weights[0].halved()).unwrap();
        assert!(!bad.is_hermitian().unwrap());
        // D even rank: always hermitian.
        let d6 = datum("D6");
        assert!(d6
            .point(d6.fundamental_weights[0].halved())
            .unwrap()
            .is_hermitian()
            .unwrap());

        // E6: coefficients must match under the diagram flip.
        let e6 = datum("E6");
        let sym = e6
            .point(
                e6.from_weight_coefficients(&[
                    rat(1, 2),
                    rint(0),
                    rint(0),
                    rint(0),
                    rint(0),
                    rat(1, 2),
                ])
                .unwrap(),
            )
            .unwrap();
        assert!(sym.is_hermitian().unwrap());
        let asym = e6
            .point(e6.fundamental_weights[0].halved())
            .unwrap();
        assert!(!asym.is_hermitian().unwrap());

        // Non-dominant input is rejected.
        let nd = a3
            .point(RationalVector::from_pairs(&[(-1, 2), (0, 1), (0, 1), (1, 2)]))
            .unwrap();
        assert!(matches!(nd.is_hermitian(), Err(RootDataError::NotDominant(_))));
    }

    #[test]
    fn rho_is_sum_of_weights_and_simple_pairings_are_one() {
        for s in ["A4", "B3", "C5", "D6", "G2", "F4", "E6", "E7", "E8"] {
            let d = datum(s);
            for av in &d.simple_coroots {
                assert_eq!(av.dot(&d.rho), rint(1), "{s}");
            }
        }
    }

    #[test]
    fn psp_fundamental_alcove_examples() {
        // ½ω_j for ⌊n/2⌋ < j < n pairs to exactly 1 with γ∨ in type C.
        for n in [4usize, 5, 6, 7] {
            let d = datum(&format!("C{n}"));
            let gamma = d.highest_coroot();
            for j in (n / 2 + 1)..n {
                let p = gamma.dot(&d.fundamental_weights[j - 1].halved());
                assert_eq!(p, rint(1), "C{n}, j = {j}");
            }
        }
    }

    #[test]
    fn folding_table() {
        let t = |s: &str| s.parse::<SimpleType>().unwrap();
        assert_eq!(fold(t("A3"), 2).unwrap(), t("B2"));
        assert_eq!(fold(t("A5"), 2).unwrap(), t("B3"));
        assert_eq!(fold(t("A4"), 2).unwrap(), t("C2"));
        assert_eq!(fold(t("A6"), 2).unwrap(), t("C3"));
        assert_eq!(fold(t("D5"), 2).unwrap(), t("C4"));
        assert_eq!(fold(t("D4"), 3).unwrap(), t("G2"));
        assert_eq!(fold(t("E6"), 2).unwrap(), t("F4"));
        assert!(fold(t("A1"), 2).is_err());
        assert!(fold(t("E7"), 2).is_err());
        assert!(fold(t("D4"), 4).is_err());
        assert!(fold_preimages(t("C3")).contains(&(t("A6"), 2)));
        assert!(fold_preimages(t("C3")).contains(&(t("D4"), 2)));
        assert_eq!(fold_preimages(t("F4")), vec![(t("E6"), 2)]);
        assert!(fold_preimages(t("E8")).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let d = datum("G2");
        let text = d.to_json();
        let back = RootDatum::from_json(&text).unwrap();
        assert_eq!(back, d);
        assert!(text.contains("\"schema_version\": 1"));
    }

    #[test]
    fn coroot_levels_are_positive_integers() {
        let d = datum("E7");
        for c in &d.positive_coroots {
            let l = d.coroot_level(c).unwrap();
            assert!(l.is_integer() && l.is_positive());
        }
        assert_eq!(
            d.coroot_level(d.highest_coroot()).unwrap(),
            rint(17)
        );
        assert_eq!(
            *d.highest_coroot(),
            RationalVector::from_ints(&[0, 0, 0, 0, 0, 0, -1, 1])
        );
    }

    #[test]
    fn weight_coefficient_round_trip() {
        let d = datum("E6");
        let coeffs: Vec<Rat> = ["1/2", "0", "2", "1/3", "0", "1/2"]
            .iter()
            .map(|s| parse_rational(s).unwrap())
            .collect();
        let nu = d.from_weight_coefficients(&coeffs).unwrap();
        assert_eq!(d.weight_coefficients(&nu).unwrap(), coeffs);
    }
}
