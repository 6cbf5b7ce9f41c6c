//! Weight multisets of distinguished representations of the dual group,
//! and the integer weight patterns they induce at a rational point.
//!
//! All vectors here live on the coroot side of a [`RootDatum`] and pair
//! against points `ν` on the weight side. The pattern index of a weight
//! `χ` at `ν` is `i = 2⟨χ, ν⟩`; a pattern exists only when every index is
//! an integer (half-integrality of `ν` relative to the representation).
//!
//! The filtration row of a nilpotent orbit is the adjoint pattern at the
//! point `½h∨`, restricted to indices `i ≥ 0`.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num::{BigInt, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orbits::NilpotentOrbit;
use crate::rational::{rat, rint, Rat, RationalVector};
use crate::rootdata::{Family, RootDataError, RootDatum};

/// Errors raised while building weight multisets or patterns.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepWeightError {
    #[error("representation {rep} is not available for type {simple_type}")]
    UnsupportedRep { rep: String, simple_type: String },
    #[error("weight pairing 2⟨χ,ν⟩ = {value} is not an integer (χ = {weight})")]
    NonIntegralPattern { weight: String, value: String },
    #[error("pattern index {0} does not fit in a machine integer")]
    IndexOverflow(String),
    #[error("{0} is not a minuscule highest weight")]
    NotMinuscule(String),
    #[error("unknown representation label `{0}`")]
    UnknownRepLabel(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Distinguished representations of the dual group `G∨`.
///
/// Which labels apply depends on the *datum* type `T` (where `ν` lives):
/// `G∨` is the simply connected group of the dual type. For datum `C_n`
/// the dual group is `Spin(2n+1)` (standard = vector representation plus
/// a zero weight, plus a full spin representation); for datum `B_n` it is
/// `Sp(2n)`; for datum `D_n` it is `Spin(2n)` with two half-spin
/// representations; for datum `A_{n−1}` it is `SL(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepLabel {
    /// Adjoint representation: all roots of `G∨` (= coroots of the datum)
    /// plus a zero weight of multiplicity `rank`.
    Adjoint,
    /// Defining representation of a classical dual group.
    StandardClassical,
    /// Spin representation of `Spin(2n+1)` (datum type `C_n`).
    Spin,
    /// Half-spin representation of `Spin(2n)` with an even number of `−½`
    /// coordinates (contains the all-`+½` weight).
    HalfSpinPlus,
    /// Half-spin representation of `Spin(2n)` with an odd number of `−½`
    /// coordinates.
    HalfSpinMinus,
    /// Minuscule representation given by its highest weight (coroot-side
    /// coordinates); the weight multiset is the Weyl orbit.
    MinusculeOrbit(RationalVector),
    /// A single weight, for direct pairing computations.
    HighestWeightPairingOnly(RationalVector),
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Adjoint => f.write_str("adjoint"),
            RepLabel::StandardClassical => f.write_str("standard"),
            RepLabel::Spin => f.write_str("spin"),
            RepLabel::HalfSpinPlus => f.write_str("halfspin+"),
            RepLabel::HalfSpinMinus => f.write_str("halfspin-"),
            RepLabel::MinusculeOrbit(w) => write!(f, "minuscule{w}"),
            RepLabel::HighestWeightPairingOnly(w) => write!(f, "weight{w}"),
        }
    }
}

impl FromStr for RepLabel {
    type Err = RepWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "adjoint" => Ok(RepLabel::Adjoint),
            "standard" => Ok(RepLabel::StandardClassical),
            "spin" => Ok(RepLabel::Spin),
            "halfspin+" | "halfspin-plus" => Ok(RepLabel::HalfSpinPlus),
            "halfspin-" | "halfspin-minus" => Ok(RepLabel::HalfSpinMinus),
            other => Err(RepWeightError::UnknownRepLabel(other.to_owned())),
        }
    }
}

/// A representation presented as a finite weight multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedRep {
    pub rep: RepLabel,
    /// Pairs `(weight, multiplicity)`.
    pub weights: Vec<(RationalVector, usize)>,
}

impl WeightedRep {
    pub fn dimension(&self) -> usize {
        self.weights.iter().map(|(_, m)| m).sum()
    }
}

/// Builds the weight multiset of `rep` for the dual group attached to
/// `datum`.
pub fn weights_of(datum: &RootDatum, rep: &RepLabel) -> Result<WeightedRep, RepWeightError> {
    let unsupported = || RepWeightError::UnsupportedRep {
        rep: rep.to_string(),
        simple_type: datum.simple_type.to_string(),
    };
    let family = datum.simple_type.family;
    let rank = datum.rank();
    let dim = datum.ambient_dim();
    let weights: Vec<(RationalVector, usize)> = match rep {
        RepLabel::Adjoint => {
            let mut w: Vec<(RationalVector, usize)> = Vec::new();
            for coroot in &datum.positive_coroots {
                w.push((coroot.clone(), 1));
                w.push((-coroot, 1));
            }
            w.push((RationalVector::zero(dim), rank));
            w
        }
        RepLabel::StandardClassical => match family {
            Family::A => (0..dim).map(|k| (unit(dim, k), 1)).collect(),
            Family::B | Family::D => plus_minus_units(dim),
            Family::C => {
                let mut w = plus_minus_units(dim);
                w.push((RationalVector::zero(dim), 1));
                w
            }
            _ => return Err(unsupported()),
        },
        RepLabel::Spin => match family {
            Family::C => sign_vectors(dim, None),
            _ => return Err(unsupported()),
        },
        RepLabel::HalfSpinPlus => match family {
            Family::D => sign_vectors(dim, Some(0)),
            _ => return Err(unsupported()),
        },
        RepLabel::HalfSpinMinus => match family {
            Family::D => sign_vectors(dim, Some(1)),
            _ => return Err(unsupported()),
        },
        RepLabel::MinusculeOrbit(top) => {
            if top.dim() != dim {
                return Err(RepWeightError::RootData(RootDataError::DimensionMismatch {
                    expected: dim,
                    got: top.dim(),
                }));
            }
            weyl_orbit_minuscule(datum, top)?
                .into_iter()
                .map(|w| (w, 1))
                .collect()
        }
        RepLabel::HighestWeightPairingOnly(w) => {
            if w.dim() != dim {
                return Err(RepWeightError::RootData(RootDataError::DimensionMismatch {
                    expected: dim,
                    got: w.dim(),
                }));
            }
            vec![(w.clone(), 1)]
        }
    };
    Ok(WeightedRep { rep: rep.clone(), weights })
}

fn unit(dim: usize, k: usize) -> RationalVector {
    let mut coords = vec![rint(0); dim];
    coords[k] = rint(1);
    RationalVector::new(coords)
}

fn plus_minus_units(dim: usize) -> Vec<(RationalVector, usize)> {
    (0..dim)
        .flat_map(|k| {
            let e = unit(dim, k);
            [(e.clone(), 1), (-&e, 1)]
        })
        .collect()
}

/// All `(±½, …, ±½)` vectors; `parity = Some(p)` keeps those whose number
/// of minus signs is `≡ p (mod 2)`.
fn sign_vectors(dim: usize, parity: Option<usize>) -> Vec<(RationalVector, usize)> {
    (0..1usize << dim)
        .filter(|mask| parity.is_none_or(|p| mask.count_ones() as usize % 2 == p))
        .map(|mask| {
            let coords = (0..dim)
                .map(|k| if mask >> k & 1 == 1 { rat(-1, 2) } else { rat(1, 2) })
                .collect();
            (RationalVector::new(coords), 1)
        })
        .collect()
}

/// Closes `top` under simple reflections, checking the minuscule property
/// `⟨χ, α_j⟩ ∈ {−1, 0, 1}` along the way.
fn weyl_orbit_minuscule(
    datum: &RootDatum,
    top: &RationalVector,
) -> Result<Vec<RationalVector>, RepWeightError> {
    let mut seen: HashSet<RationalVector> = HashSet::new();
    let mut queue = VecDeque::from([top.clone()]);
    seen.insert(top.clone());
    let bound = rint(1);
    while let Some(x) = queue.pop_front() {
        for (root, coroot) in datum.simple_roots.iter().zip(&datum.simple_coroots) {
            let c = x.dot(root);
            if c.abs() > bound {
                return Err(RepWeightError::NotMinuscule(top.to_tuple_string()));
            }
            if c.is_zero() {
                continue;
            }
            let image = &x - &coroot.scale(&c);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut orbit: Vec<RationalVector> = seen.into_iter().collect();
    orbit.sort_by(|a, b| b.coords().cmp(a.coords()));
    Ok(orbit)
}

/// Multiplicity function `i ↦ n(i)` of pattern indices `i = 2⟨χ, ν⟩`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPattern(BTreeMap<i64, usize>);

impl WeightPattern {
    pub fn from_counts(map: BTreeMap<i64, usize>) -> Self {
        let mut map = map;
        map.retain(|_, n| *n > 0);
        WeightPattern(map)
    }

    /// `n(i)`, zero off the support.
    pub fn n(&self, i: i64) -> usize {
        self.0.get(&i).copied().unwrap_or(0)
    }

    /// Largest index with a nonzero count (`None` for the empty pattern).
    pub fn max_index(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&i, &n)| (i, n))
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Counts `n(0), n(1), …, n(i_max)` as a dense row.
    pub fn nonnegative_row(&self) -> Vec<usize> {
        let imax = self.max_index().unwrap_or(0).max(0);
        (0..=imax).map(|i| self.n(i)).collect()
    }

    /// The dense row joined by commas, e.g. `4,2,1,2`.
    pub fn row_string(&self) -> String {
        self.nonnegative_row()
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for WeightPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.iter().map(|(i, n)| format!("{i}:{n}")).collect();
        write!(f, "{{{}}}", inner.join(", "))
    }
}

/// Computes the pattern of `rep` at `ν`, failing if any index `2⟨χ, ν⟩`
/// is not an integer.
pub fn weight_pattern(
    rep: &WeightedRep,
    nu: &RationalVector,
) -> Result<WeightPattern, RepWeightError> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    let two = rint(2);
    for (chi, mult) in &rep.weights {
        let doubled: Rat = &two * &chi.dot(nu);
        if !doubled.is_integer() {
            return Err(RepWeightError::NonIntegralPattern {
                weight: chi.to_tuple_string(),
                value: doubled.to_string(),
            });
        }
        let index = big_to_i64(&doubled.to_integer())?;
        *counts.entry(index).or_insert(0) += mult;
    }
    Ok(WeightPattern::from_counts(counts))
}

fn big_to_i64(value: &BigInt) -> Result<i64, RepWeightError> {
    value
        .to_i64()
        .ok_or_else(|| RepWeightError::IndexOverflow(value.to_string()))
}

/// Whether every pattern index of `rep` at `ν` is an integer.
pub fn is_half_integral(
    datum: &RootDatum,
    nu: &RationalVector,
    rep: &RepLabel,
) -> Result<bool, RepWeightError> {
    let rep = weights_of(datum, rep)?;
    match weight_pattern(&rep, nu) {
        Ok(_) => Ok(true),
        Err(RepWeightError::NonIntegralPattern { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The adjoint pattern of an orbit at `½h∨` (full, all indices).
pub fn orbit_adjoint_pattern(orbit: &NilpotentOrbit) -> Result<WeightPattern, RepWeightError> {
    let datum = orbit.datum()?;
    let adjoint = weights_of(&datum, &RepLabel::Adjoint)?;
    weight_pattern(&adjoint, &orbit.neutral_element.halved())
}

/// The filtration row of an orbit: adjoint pattern counts at `½h∨` for
/// indices `0, 1, …, i_max`.
pub fn filtration_row(orbit: &NilpotentOrbit) -> Result<Vec<usize>, RepWeightError> {
    Ok(orbit_adjoint_pattern(orbit)?.nonnegative_row())
}

/// `2⟨χ, ν⟩` for a single vector, as an exact rational.
pub fn doubled_pairing(chi: &RationalVector, nu: &RationalVector) -> Rat {
    let two = rint(2);
    &two * &chi.dot(nu)
}

/// Sanity helper: a pattern of a finite-dimensional representation must
/// account for every weight.
pub fn pattern_matches_dimension(rep: &WeightedRep, pattern: &WeightPattern) -> bool {
    rep.dimension() == pattern.total()
}
