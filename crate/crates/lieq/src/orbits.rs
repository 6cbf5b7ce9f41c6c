//! Nilpotent orbit catalogs for the dual group.
//!
//! Classical orbits are parametrized by partitions with the usual parity
//! rules (type `C` groups: odd parts with even multiplicity; type `B`/`D`
//! groups: even parts with even multiplicity); very even `D` partitions
//! split into two orbits tagged `I`/`II`. Exceptional catalogs (`G2`, `F4`,
//! `E6`, `E7`, `E8`) ship as a checked-in versioned dataset with
//! Bala–Carter labels, weighted marks, neutral elements, reductive
//! centralizers, and dimensions; the loader revalidates marks, dominance,
//! and dimensions against the root datum before exposing the catalog.
//!
//! The neutral element `h∨` of an orbit of the dual group lives on the
//! *weight* side of the paired split type ([`SimpleType::dual_partner`]):
//! orbits of `Sp(2n)` (ambient `C_n`) have neutral elements in `B_n`
//! coordinates and vice versa.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{rint, Rat, RationalVector};
use crate::rootdata::{cached_datum, Family, Isogeny, RootDataError, RootDatum, SimpleType};

/// Errors raised by orbit-catalog operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("type {0} is not a classical family")]
    NotClassical(String),
    #[error("type {0} is not an exceptional type")]
    NotExceptional(String),
    #[error("box count {boxes} does not match type {simple_type}")]
    BoxCountMismatch { simple_type: String, boxes: usize },
    #[error("partition {0:?} violates the parity rule for {1}")]
    ParityViolation(Vec<usize>, String),
    #[error("partition {0:?} does not sum to {1}")]
    WrongPartitionSize(Vec<usize>, usize),
    #[error("no orbit labelled `{label}` in the {simple_type} catalog")]
    UnknownLabel { simple_type: String, label: String },
    #[error("exceptional orbit dataset is invalid: {0}")]
    DatasetCorrupt(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// The two orbits attached to a very even `D` partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VeryEvenTag {
    I,
    II,
}

impl fmt::Display for VeryEvenTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VeryEvenTag::I => "I",
            VeryEvenTag::II => "II",
        })
    }
}

/// Orbit label: a decreasing partition (classical) or a Bala–Carter string
/// (exceptional), e.g. `(2,2,2)` or `E8(a7)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitLabel {
    Partition(Vec<usize>),
    BalaCarter(String),
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Partition(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", inner.join(","))
            }
            OrbitLabel::BalaCarter(s) => f.write_str(s),
        }
    }
}

/// Classical reductive-centralizer factor kinds. Type `C` ambient groups
/// have group factors `Sp(r)` (odd parts) and `O(r)` (even parts); type
/// `B`/`D` ambient algebras have `so(r)` (odd parts) and `sp(r)` (even
/// parts); type `A` has `GL(r)` factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    SpGroup,
    OGroup,
    SoAlgebra,
    SpAlgebra,
    GlGroup,
}

/// One factor of a classical centralizer, remembering which part of the
/// partition produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalFactor {
    pub kind: FactorKind,
    /// The part value `d` of the partition.
    pub part: usize,
    /// The multiplicity `r_d` of that part (the factor's rank parameter).
    pub size: usize,
}

impl fmt::Display for ClassicalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            FactorKind::SpGroup => "Sp",
            FactorKind::OGroup => "O",
            FactorKind::SoAlgebra => "so",
            FactorKind::SpAlgebra => "sp",
            FactorKind::GlGroup => "GL",
        };
        write!(f, "{}({})", name, self.size)
    }
}

/// Reductive centralizer of the orbit: structured factors for classical
/// types, the catalog's label (e.g. `B3+A1`) for exceptional types.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CentralizerType {
    Factors(Vec<ClassicalFactor>),
    Named(String),
}

impl fmt::Display for CentralizerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralizerType::Named(s) => f.write_str(s),
            CentralizerType::Factors(factors) => {
                if factors.is_empty() {
                    return f.write_str("1");
                }
                let group_like = factors
                    .iter()
                    .any(|x| matches!(x.kind, FactorKind::SpGroup | FactorKind::OGroup | FactorKind::GlGroup));
                let sep = if group_like { "x" } else { "+" };
                let inner: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                f.write_str(&inner.join(sep))
            }
        }
    }
}

/// A nilpotent orbit of the dual group.
///
/// Equality is by `(ambient, label, very_even_tag)`; the remaining fields
/// are determined by those.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NilpotentOrbit {
    /// Dynkin type of the dual group containing the orbit.
    pub ambient: SimpleType,
    pub label: OrbitLabel,
    /// Dominant neutral element `h∨` of an associated `sl2` triple, in the
    /// ambient coordinates of [`Self::datum_type`].
    pub neutral_element: RationalVector,
    pub centralizer_type: CentralizerType,
    /// Dimension of the orbit.
    pub dim: usize,
    pub very_even_tag: Option<VeryEvenTag>,
}

impl PartialEq for NilpotentOrbit {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.label == other.label
            && self.very_even_tag == other.very_even_tag
    }
}
impl Eq for NilpotentOrbit {}

impl std::hash::Hash for NilpotentOrbit {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.label.hash(state);
        self.very_even_tag.hash(state);
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ambient, self.label)?;
        if let Some(tag) = self.very_even_tag {
            write!(f, " ({tag})")?;
        }
        Ok(())
    }
}

impl NilpotentOrbit {
    /// The split type whose weight side hosts `neutral_element`.
    pub fn datum_type(&self) -> SimpleType {
        self.ambient.dual_partner()
    }

    /// The root datum hosting `neutral_element` (cached).
    pub fn datum(&self) -> Result<std::sync::Arc<RootDatum>, RootDataError> {
        cached_datum(self.datum_type())
    }

    /// Weighted marks `⟨α_i∨, h∨⟩` (the weighted Dynkin diagram).
    pub fn weighted_marks(&self) -> Result<Vec<Rat>, OrbitError> {
        let d = self.datum()?;
        Ok(d.weight_coefficients(&self.neutral_element)?)
    }

    /// Partition accessor for classical orbits.
    pub fn partition(&self) -> Option<&[usize]> {
        match &self.label {
            OrbitLabel::Partition(p) => Some(p),
            OrbitLabel::BalaCarter(_) => None,
        }
    }

    pub fn is_very_even(&self) -> bool {
        self.very_even_tag.is_some()
    }
}

/// The neutral element `h∨` of the orbit (dominant).
pub fn neutral_element(orbit: &NilpotentOrbit) -> &RationalVector {
    &orbit.neutral_element
}

/// Enumerates the nilpotent orbits of the classical dual group of type `t`
/// acting on `boxes` boxes (`C_n ↔ 2n`, `B_n ↔ 2n+1`, `D_n ↔ 2n`,
/// `A_{n−1} ↔ n`), sorted by decreasing dimension then label.
pub fn classical_orbits(t: SimpleType, boxes: usize) -> Result<Vec<NilpotentOrbit>, OrbitError> {
    let expected = classical_box_count(t)?;
    if boxes != expected {
        return Err(OrbitError::BoxCountMismatch { simple_type: t.to_string(), boxes });
    }
    let datum = cached_datum(t.dual_partner())?;
    let mut out = Vec::new();
    for parts in partitions(boxes) {
        if !parity_ok(t.family, &parts) {
            continue;
        }
        let very_even = t.family == Family::D && parts.iter().all(|p| p % 2 == 0);
        let tags: &[Option<VeryEvenTag>] = if very_even {
            &[Some(VeryEvenTag::I), Some(VeryEvenTag::II)]
        } else {
            &[None]
        };
        for &tag in tags {
            let neutral = neutral_from_partition(t.family, &parts, datum.ambient_dim(), tag);
            debug_assert!(datum.point(neutral.clone()).unwrap().is_dominant());
            let dim = orbit_dim_from_neutral(&datum, &neutral)?;
            out.push(NilpotentOrbit {
                ambient: t.with_isogeny(Isogeny::SimplyConnected),
                label: OrbitLabel::Partition(parts.clone()),
                neutral_element: neutral,
                centralizer_type: classical_centralizer(t.family, &parts),
                dim,
                very_even_tag: tag,
            });
        }
    }
    out.sort_by(|a, b| {
        (b.dim, &a.label, a.very_even_tag).cmp(&(a.dim, &b.label, b.very_even_tag))
    });
    Ok(out)
}

/// Builds the single classical orbit for an explicitly given partition.
pub fn classical_orbit(
    t: SimpleType,
    parts: &[usize],
    tag: Option<VeryEvenTag>,
) -> Result<NilpotentOrbit, OrbitError> {
    let boxes = classical_box_count(t)?;
    let total: usize = parts.iter().sum();
    if total != boxes {
        return Err(OrbitError::WrongPartitionSize(parts.to_vec(), boxes));
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if !parity_ok(t.family, &sorted) {
        return Err(OrbitError::ParityViolation(sorted, t.to_string()));
    }
    let all = classical_orbits(t, boxes)?;
    let wanted_tag = if t.family == Family::D && sorted.iter().all(|p| p % 2 == 0) {
        Some(tag.unwrap_or(VeryEvenTag::I))
    } else {
        None
    };
    all.into_iter()
        .find(|o| o.partition() == Some(sorted.as_slice()) && o.very_even_tag == wanted_tag)
        .ok_or_else(|| OrbitError::UnknownLabel {
            simple_type: t.to_string(),
            label: format!("{:?}", sorted),
        })
}

fn classical_box_count(t: SimpleType) -> Result<usize, OrbitError> {
    let n = t.rank;
    match t.family {
        Family::A => Ok(n + 1),
        Family::B => Ok(2 * n + 1),
        Family::C | Family::D => Ok(2 * n),
        _ => Err(OrbitError::NotClassical(t.to_string())),
    }
}

fn parity_ok(family: Family, parts: &[usize]) -> bool {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0) += 1;
    }
    match family {
        Family::A => true,
        // Sp(2n): odd parts occur with even multiplicity.
        Family::C => mult.iter().all(|(&p, &r)| p % 2 == 0 || r % 2 == 0),
        // Spin(2n+1), Spin(2n): even parts occur with even multiplicity.
        Family::B | Family::D => mult.iter().all(|(&p, &r)| p % 2 == 1 || r % 2 == 0),
        _ => false,
    }
}

/// All partitions of `n`, each decreasing, in deterministic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max: usize, head: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(head.clone());
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            head.push(next);
            rec(remaining - next, next, head, out);
            head.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The dominant neutral element from a partition: the union of the strings
/// `d−1, d−3, …, 1−d` over all parts, reduced to ambient coordinates.
///
/// Type `A` keeps the full decreasing multiset (trace zero). Types
/// `B`/`C`/`D` keep the top half sorted increasingly; the `II` member of a
/// very even `D` pair negates the smallest entry.
fn neutral_from_partition(
    family: Family,
    parts: &[usize],
    ambient: usize,
    tag: Option<VeryEvenTag>,
) -> RationalVector {
    let mut values: Vec<i64> = Vec::new();
    for &d in parts {
        let d = d as i64;
        let mut v = d - 1;
        while v >= 1 - d {
            values.push(v);
            v -= 2;
        }
    }
    values.sort_unstable_by(|a, b| b.cmp(a));
    match family {
        Family::A => RationalVector::from_ints(&values),
        _ => {
            let mut top: Vec<i64> = values.into_iter().take(ambient).collect();
            top.reverse();
            if tag == Some(VeryEvenTag::II) {
                top[0] = -top[0];
            }
            RationalVector::from_ints(&top)
        }
    }
}

fn classical_centralizer(family: Family, parts: &[usize]) -> CentralizerType {
    let mut mult: Vec<(usize, usize)> = Vec::new();
    for &p in parts {
        match mult.last_mut() {
            Some((q, r)) if *q == p => *r += 1,
            _ => mult.push((p, 1)),
        }
    }
    let factors = mult
        .into_iter()
        .map(|(part, size)| {
            let kind = match family {
                Family::A => FactorKind::GlGroup,
                Family::C => {
                    if part % 2 == 1 {
                        FactorKind::SpGroup
                    } else {
                        FactorKind::OGroup
                    }
                }
                _ => {
                    if part % 2 == 1 {
                        FactorKind::SoAlgebra
                    } else {
                        FactorKind::SpAlgebra
                    }
                }
            };
            ClassicalFactor { kind, part, size }
        })
        .collect();
    CentralizerType::Factors(factors)
}

/// `dim O = dim g − n(0) − n(1)` via the eigenvalue pattern of `h∨` on the
/// adjoint representation (coroot side).
fn orbit_dim_from_neutral(datum: &RootDatum, neutral: &RationalVector) -> Result<usize, OrbitError> {
    let mut n0 = datum.rank();
    let mut n1 = 0usize;
    for coroot in &datum.positive_coroots {
        let v = coroot.dot(neutral);
        if v.is_zero() {
            n0 += 2;
        } else if v.abs() == rint(1) {
            n1 += 1;
        }
    }
    Ok(datum.simple_type.algebra_dim() - n0 - n1)
}

// --- exceptional catalogs -------------------------------------------------

#[derive(Deserialize)]
struct DatasetDocument {
    schema_version: u32,
    types: HashMap<String, Vec<DatasetEntry>>,
}

#[derive(Deserialize)]
struct DatasetEntry {
    label: String,
    marks: Vec<i64>,
    h_dual: Vec<String>,
    centralizer: String,
    dim: usize,
}

const EXCEPTIONAL_DATA: &str = include_str!("../data/exceptional_orbits.json");

fn load_exceptional() -> Result<HashMap<SimpleType, Vec<NilpotentOrbit>>, OrbitError> {
    let doc: DatasetDocument = serde_json::from_str(EXCEPTIONAL_DATA)
        .map_err(|e| OrbitError::DatasetCorrupt(format!("parse failure: {e}")))?;
    if doc.schema_version != 1 {
        return Err(OrbitError::DatasetCorrupt(format!(
            "unsupported schema version {}",
            doc.schema_version
        )));
    }
    let expected_sizes: &[(&str, usize)] =
        &[("G2", 5), ("F4", 16), ("E6", 21), ("E7", 45), ("E8", 70)];
    let mut catalog = HashMap::new();
    for &(name, size) in expected_sizes {
        let entries = doc
            .types
            .get(name)
            .ok_or_else(|| OrbitError::DatasetCorrupt(format!("missing type {name}")))?;
        if entries.len() != size {
            return Err(OrbitError::DatasetCorrupt(format!(
                "{name} has {} entries, expected {size}",
                entries.len()
            )));
        }
        let t: SimpleType = name
            .parse()
            .map_err(|_| OrbitError::DatasetCorrupt(format!("bad type name {name}")))?;
        let datum = cached_datum(t)?;
        let mut orbits = Vec::with_capacity(entries.len());
        for entry in entries {
            let neutral = RationalVector::parse(
                &entry.h_dual.iter().map(String::as_str).collect::<Vec<_>>(),
            )
            .map_err(|e| OrbitError::DatasetCorrupt(format!("{name}/{}: {e}", entry.label)))?;
            let point = datum.point(neutral.clone())?;
            if !point.is_dominant() {
                return Err(OrbitError::DatasetCorrupt(format!(
                    "{name}/{} neutral element is not dominant",
                    entry.label
                )));
            }
            let marks = datum.weight_coefficients(&neutral)?;
            let expected_marks: Vec<Rat> = entry.marks.iter().map(|&m| rint(m)).collect();
            if marks != expected_marks {
                return Err(OrbitError::DatasetCorrupt(format!(
                    "{name}/{} marks disagree with neutral element",
                    entry.label
                )));
            }
            let dim = orbit_dim_from_neutral(&datum, &neutral)?;
            if dim != entry.dim {
                return Err(OrbitError::DatasetCorrupt(format!(
                    "{name}/{} dimension {} disagrees with computed {dim}",
                    entry.label, entry.dim
                )));
            }
            orbits.push(NilpotentOrbit {
                ambient: t.with_isogeny(Isogeny::SimplyConnected),
                label: OrbitLabel::BalaCarter(entry.label.clone()),
                neutral_element: neutral,
                centralizer_type: CentralizerType::Named(entry.centralizer.clone()),
                dim,
                very_even_tag: None,
            });
        }
        catalog.insert(t, orbits);
    }
    Ok(catalog)
}

fn exceptional_store() -> &'static Result<HashMap<SimpleType, Vec<NilpotentOrbit>>, OrbitError> {
    static STORE: OnceLock<Result<HashMap<SimpleType, Vec<NilpotentOrbit>>, OrbitError>> =
        OnceLock::new();
    STORE.get_or_init(load_exceptional)
}

/// The full orbit catalog of an exceptional type, in reference table order
/// (regular orbit first, zero orbit `1` last).
pub fn exceptional_catalog(t: SimpleType) -> Result<&'static [NilpotentOrbit], OrbitError> {
    if !t.is_exceptional() {
        return Err(OrbitError::NotExceptional(t.to_string()));
    }
    match exceptional_store() {
        Ok(map) => Ok(map
            .get(&t)
            .map(Vec::as_slice)
            .expect("validated catalog contains all exceptional types")),
        Err(e) => Err(e.clone()),
    }
}

/// Looks up one exceptional orbit by its Bala–Carter label.
pub fn exceptional_orbit(t: SimpleType, label: &str) -> Result<&'static NilpotentOrbit, OrbitError> {
    exceptional_catalog(t)?
        .iter()
        .find(|o| matches!(&o.label, OrbitLabel::BalaCarter(s) if s == label))
        .ok_or_else(|| OrbitError::UnknownLabel {
            simple_type: t.to_string(),
            label: label.to_owned(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn sp6_orbit_count_and_triple() {
        let orbits = classical_orbits(t("C3"), 6).unwrap();
        assert_eq!(orbits.len(), 8);
        let o = classical_orbit(t("C3"), &[2, 2, 2], None).unwrap();
        assert_eq!(o.neutral_element, RationalVector::from_ints(&[1, 1, 1]));
        assert_eq!(o.centralizer_type.to_string(), "O(3)");
        // Regular orbit: h∨ = 2ρ of B3.
        let reg = classical_orbit(t("C3"), &[6], None).unwrap();
        assert_eq!(
            reg.neutral_element,
            RationalVector::from_ints(&[1, 3, 5])
        );
        assert_eq!(reg.dim, 18); // dim sp(6) − rank = 21 − 3
    }

    #[test]
    fn parity_rules() {
        assert!(classical_orbit(t("C3"), &[5, 1], None).is_err());
        assert!(classical_orbit(t("C3"), &[3, 3], None).is_ok());
        assert!(classical_orbit(t("B3"), &[4, 2, 1], None).is_err());
        assert!(classical_orbit(t("B3"), &[3, 2, 2], None).is_ok());
        let spin7 = classical_orbits(t("B3"), 7).unwrap();
        assert_eq!(spin7.len(), 7);
        assert!(classical_orbits(t("C3"), 7).is_err());
        assert!(classical_orbits(t("G2"), 6).is_err());
    }

    #[test]
    fn spin7_neutral_elements_live_in_c3_coordinates() {
        let o = classical_orbit(t("B3"), &[3, 3, 1], None).unwrap();
        assert_eq!(o.datum_type(), t("C3"));
        assert_eq!(o.neutral_element, RationalVector::from_ints(&[0, 2, 2]));
        assert_eq!(o.centralizer_type.to_string(), "so(2)+so(1)");
    }

    #[test]
    fn very_even_d4_pair() {
        let orbits = classical_orbits(t("D4"), 8).unwrap();
        let pairs: Vec<_> = orbits
            .iter()
            .filter(|o| o.partition() == Some(&[4, 4][..]))
            .collect();
        assert_eq!(pairs.len(), 2);
        let h1 = &pairs
            .iter()
            .find(|o| o.very_even_tag == Some(VeryEvenTag::I))
            .unwrap()
            .neutral_element;
        let h2 = &pairs
            .iter()
            .find(|o| o.very_even_tag == Some(VeryEvenTag::II))
            .unwrap()
            .neutral_element;
        assert_eq!(*h1, RationalVector::from_ints(&[1, 1, 3, 3]));
        assert_eq!(*h2, RationalVector::from_ints(&[-1, 1, 3, 3]));
        // Both dominant, equal dimension, unequal as orbits.
        assert_eq!(pairs[0].dim, pairs[1].dim);
        assert_ne!(pairs[0], pairs[1]);
        // (2,2,2,2) is also very even.
        assert_eq!(
            orbits
                .iter()
                .filter(|o| o.partition() == Some(&[2, 2, 2, 2][..]))
                .count(),
            2
        );
    }

    #[test]
    fn type_a_orbits_are_trace_zero_decreasing() {
        let orbits = classical_orbits(t("A2"), 3).unwrap();
        assert_eq!(orbits.len(), 3);
        let reg = classical_orbit(t("A2"), &[3], None).unwrap();
        assert_eq!(reg.neutral_element, RationalVector::from_ints(&[2, 0, -2]));
        let sub = classical_orbit(t("A2"), &[2, 1], None).unwrap();
        assert_eq!(sub.neutral_element, RationalVector::from_ints(&[1, 0, -1]));
        assert_eq!(sub.centralizer_type.to_string(), "GL(1)xGL(1)");
        assert_eq!(sub.dim, 4);
    }

    #[test]
    fn exceptional_catalog_sizes() {
        for (name, size) in [("G2", 5usize), ("F4", 16), ("E6", 21), ("E7", 45), ("E8", 70)] {
            let catalog = exceptional_catalog(t(name)).unwrap();
            assert_eq!(catalog.len(), size, "{name}");
            // Regular orbit first (dim g − rank), zero orbit last.
            let st: SimpleType = t(name);
            assert_eq!(catalog[0].dim, st.algebra_dim() - st.rank);
            let zero = catalog.last().unwrap();
            assert_eq!(zero.label, OrbitLabel::BalaCarter("1".into()));
            assert_eq!(zero.dim, 0);
            assert!(zero.neutral_element.is_zero());
        }
        assert!(exceptional_catalog(t("B5")).is_err());
    }

    #[test]
    fn g2_catalog_details() {
        let sub = exceptional_orbit(t("G2"), "Ã1").unwrap();
        assert_eq!(sub.neutral_element, RationalVector::from_ints(&[1, 1, -2]));
        assert_eq!(sub.weighted_marks().unwrap(), vec![rint(1), rint(0)]);
        let min = exceptional_orbit(t("G2"), "A1").unwrap();
        assert_eq!(min.dim, 6);
        assert_eq!(min.centralizer_type.to_string(), "A1");
        assert!(exceptional_orbit(t("G2"), "B2").is_err());
    }

    #[test]
    fn e_series_extreme_orbits() {
        assert_eq!(exceptional_orbit(t("E6"), "A1").unwrap().dim, 22);
        assert_eq!(exceptional_orbit(t("E7"), "A1").unwrap().dim, 34);
        assert_eq!(exceptional_orbit(t("E8"), "A1").unwrap().dim, 58);
        assert_eq!(
            exceptional_orbit(t("E8"), "E8(a7)").unwrap().dim,
            208
        );
        assert_eq!(
            exceptional_orbit(t("E7"), "(3A1)''").unwrap().centralizer_type.to_string(),
            "F4"
        );
    }

    #[test]
    fn e8_four_a1_neutral_is_half_w2_doubled() {
        let d = cached_datum(t("E8")).unwrap();
        let o = exceptional_orbit(t("E8"), "4A1").unwrap();
        assert_eq!(o.neutral_element, d.fundamental_weights[1].clone());
        assert_eq!(o.weighted_marks().unwrap()[1], rint(1));
    }

    #[test]
    fn neutral_element_accessor() {
        let o = classical_orbit(t("C2"), &[2, 2], None).unwrap();
        assert_eq!(neutral_element(&o), &RationalVector::from_ints(&[1, 1]));
        assert_eq!(o.weighted_marks().unwrap(), vec![rat(2, 1), rat(0, 1)]);
    }

    #[test]
    fn partition_enumeration_small() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(7).len(), 15);
        assert!(partitions(5).contains(&vec![3, 1, 1]));
    }
}
