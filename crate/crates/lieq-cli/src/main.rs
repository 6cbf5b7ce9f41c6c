//! `lieq` — exact computations with root data, nilpotent orbits, weight
//! filtrations, and spherical unitarity, on the command line.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use lieq::analysis::{
    azs_elimination_table, classical_orbit_from_pattern, marginals, orbit_from_pattern,
    property_a_check, MarginalMatrix, PropertyAVerdict,
};
use lieq::orbits::{
    classical_orbit, classical_orbits, exceptional_catalog, exceptional_orbit, NilpotentOrbit,
    VeryEvenTag,
};
use lieq::rational::{parse_rational, Rat, RationalVector};
use lieq::repweights::{filtration_row, weight_pattern, weights_of, RepLabel, WeightPattern};
use lieq::rootdata::{cached_datum, fold, Family, RootDatum, SimpleType};
use lieq::unitarity::{
    brute_force_regions, central_point, coefficient_map, count_chamber_regions,
    cs_e8_4a1_extra_member, cs_e8_4a1_extra_witness, cs_e8_4a1_member,
    cs_e8_4a1_quarter_grid_extra_members, extraneous_points, half_integral_unitary_points,
    quasi_split_reduction, EliminationOutcome,
};

#[derive(Parser)]
#[command(
    name = "lieq",
    version,
    about = "Exact root data, nilpotent orbits, weight filtrations, and spherical unitarity"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::PaperTable)]
    format: OutputFormat,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Json,
    Tsv,
    PaperTable,
}

#[derive(ValueEnum, Clone, Copy)]
enum TagArg {
    #[value(name = "I", alias = "i")]
    One,
    #[value(name = "II", alias = "ii")]
    Two,
}

impl From<TagArg> for VeryEvenTag {
    fn from(t: TagArg) -> Self {
        match t {
            TagArg::One => VeryEvenTag::I,
            TagArg::Two => VeryEvenTag::II,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a root datum: simple roots/coroots, fundamental weights,
    /// positive coroots by level, the highest coroot, and invariants.
    Roots {
        /// Simple type, e.g. G2, B3, E8.
        type_name: String,
    },
    /// List the nilpotent orbit catalog of a type.
    Orbits {
        type_name: String,
    },
    /// Print the adjoint weight filtration table of an exceptional type.
    FiltrationTable {
        type_name: String,
    },
    /// List the half-integral spherical unitary points of a split
    /// adjoint group.
    HalfIntegral {
        type_name: String,
    },
    /// List extraneous complementary-series points, for one orbit
    /// (`extraneous C 3 2,2,2` or `extraneous E8 D6`) or a whole catalog
    /// (`extraneous C3`).
    Extraneous {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Print the central point ½h∨ of an orbit.
    CentralPoint {
        type_name: String,
        /// Partition like 2,2,2 (classical) or a catalog label (exceptional).
        orbit: String,
        /// Very even D form.
        #[arg(long)]
        tag: Option<TagArg>,
    },
    /// Weight pattern of a representation at a point, or at an orbit's
    /// central point (then the representation lives on the orbit's
    /// coordinate datum, the dual partner of TYPE).
    WeightPattern {
        type_name: String,
        /// adjoint | standard | spin | halfspin+ | halfspin-
        rep: String,
        /// Point in ambient coordinates of TYPE's datum, e.g. 0,1/2,1.
        #[arg(long, conflicts_with = "orbit")]
        point: Option<String>,
        /// Orbit of TYPE's group; evaluates at its central point.
        #[arg(long)]
        orbit: Option<String>,
        /// Very even D form.
        #[arg(long)]
        tag: Option<TagArg>,
    },
    /// Identify an orbit from its adjoint filtration row.
    OrbitFromPattern {
        type_name: String,
        /// Comma-separated row, e.g. 64,56,28,8.
        row: String,
        /// Plus half-spin top level, to split very even D ties.
        #[arg(long)]
        halfspin_top: Option<i64>,
    },
    /// Membership tests for the extra complementary-series region at the
    /// 4A1 orbit of E8.
    #[command(name = "cs-4a1")]
    Cs4a1 {
        /// Point 0 ≤ ν1 ≤ ν2 ≤ ν3 ≤ ν4 as comma-separated rationals.
        point: Option<String>,
        /// Scan all quarter-integer points with ν4 < 2 for extra-region
        /// members.
        #[arg(long)]
        scan: bool,
        /// Print the stored extra-region witness and verify membership.
        #[arg(long)]
        witness: bool,
    },
    /// Count the dominant chamber regions cut by the coroot-pairing
    /// hyperplanes.
    Regions {
        type_name: String,
        /// Also enumerate regions exhaustively (rank ≤ 4) and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// Fold a type by a diagram automorphism and run the quasi-split
    /// unitarity reduction.
    Fold {
        type_name: String,
        /// Automorphism order (2 or 3).
        tau_order: u32,
    },
    /// Check the marginal dichotomy on a matrix file (TSV with header
    /// "i<TAB>k<TAB>a"), or on a seeded random symmetric suite.
    CheckPropertyA {
        /// Matrix file path.
        file: Option<PathBuf>,
        /// Run this many random symmetric matrices instead of a file.
        #[arg(long, conflicts_with = "file")]
        random: Option<usize>,
    },
    /// Print the elimination table for every extraneous point.
    AzsTable,
}

enum Failure {
    Usage(String),
    Domain(String),
}

macro_rules! domain_from {
    ($($ty:ty),* $(,)?) => {
        $(impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure::Domain(e.to_string())
            }
        })*
    };
}

domain_from!(
    lieq::rootdata::RootDataError,
    lieq::orbits::OrbitError,
    lieq::repweights::RepWeightError,
    lieq::unitarity::UnitarityError,
    lieq::analysis::AnalysisError,
    lieq::rational::RationalParseError,
    std::io::Error,
    serde_json::Error,
);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code: u8 = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Roots { type_name } => cmd_roots(cli.format, type_name),
        Command::Orbits { type_name } => cmd_orbits(cli.format, type_name),
        Command::FiltrationTable { type_name } => cmd_filtration_table(cli.format, type_name),
        Command::HalfIntegral { type_name } => cmd_half_integral(cli.format, type_name),
        Command::Extraneous { spec } => cmd_extraneous(cli.format, spec),
        Command::CentralPoint { type_name, orbit, tag } => {
            cmd_central_point(cli.format, type_name, orbit, *tag)
        }
        Command::WeightPattern { type_name, rep, point, orbit, tag } => {
            cmd_weight_pattern(cli.format, type_name, rep, point.as_deref(), orbit.as_deref(), *tag)
        }
        Command::OrbitFromPattern { type_name, row, halfspin_top } => {
            cmd_orbit_from_pattern(cli.format, type_name, row, *halfspin_top)
        }
        Command::Cs4a1 { point, scan, witness } => {
            cmd_cs_4a1(cli.format, point.as_deref(), *scan, *witness)
        }
        Command::Regions { type_name, brute_force } => {
            cmd_regions(cli.format, type_name, *brute_force)
        }
        Command::Fold { type_name, tau_order } => cmd_fold(cli.format, type_name, *tau_order),
        Command::CheckPropertyA { file, random } => {
            cmd_check_property_a(cli.format, file.as_deref(), *random, cli.seed)
        }
        Command::AzsTable => cmd_azs_table(cli.format),
    }
}

// --- shared helpers ----------------------------------------------------------

fn render(format: OutputFormat, paper: String, tsv: String, json: Value) -> Result<String, Failure> {
    Ok(match format {
        OutputFormat::PaperTable => ensure_newline(paper),
        OutputFormat::Tsv => ensure_newline(tsv),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&json)?;
            s.push('\n');
            s
        }
    })
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn parse_type(name: &str) -> Result<SimpleType, Failure> {
    Ok(name.parse::<SimpleType>()?)
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Domain(format!("not a nonnegative integer: {p:?}")))
        })
        .collect()
}

fn parse_point(text: &str) -> Result<RationalVector, Failure> {
    let coords = text
        .split(',')
        .map(|p| parse_rational(p.trim()))
        .collect::<Result<Vec<Rat>, _>>()?;
    Ok(RationalVector::new(coords))
}

fn default_boxes(t: SimpleType) -> usize {
    match t.family {
        Family::A => t.rank + 1,
        Family::B => 2 * t.rank + 1,
        _ => 2 * t.rank,
    }
}

fn orbit_catalog(t: SimpleType) -> Result<Vec<NilpotentOrbit>, Failure> {
    if t.is_exceptional() {
        Ok(exceptional_catalog(t)?.to_vec())
    } else {
        Ok(classical_orbits(t, default_boxes(t))?)
    }
}

fn parse_orbit(
    t: SimpleType,
    spec: &str,
    tag: Option<TagArg>,
) -> Result<NilpotentOrbit, Failure> {
    if t.is_exceptional() {
        Ok(exceptional_orbit(t, spec)?.clone())
    } else {
        let parts = parse_usize_list(spec)?;
        Ok(classical_orbit(t, &parts, tag.map(Into::into))?)
    }
}

/// "c1*w1 + … + cl*wl" in fundamental-weight coordinates; "0" for zero.
fn weight_coord_string(datum: &RootDatum, nu: &RationalVector) -> Result<String, Failure> {
    let coeffs = coefficient_map(datum, nu)?;
    if coeffs.is_empty() {
        return Ok("0".to_owned());
    }
    Ok(coeffs
        .iter()
        .map(|(i, c)| {
            if c == &Rat::from_integer(1.into()) {
                format!("w{i}")
            } else {
                format!("{c}*w{i}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + "))
}

fn weight_coord_json(datum: &RootDatum, nu: &RationalVector) -> Result<Value, Failure> {
    let coeffs = coefficient_map(datum, nu)?;
    let map: BTreeMap<String, String> =
        coeffs.iter().map(|(i, c)| (i.to_string(), c.to_string())).collect();
    Ok(json!(map))
}

fn orbit_label_cell(orbit: &NilpotentOrbit) -> String {
    match orbit.very_even_tag {
        Some(VeryEvenTag::I) => format!("{} (I)", orbit.label),
        Some(VeryEvenTag::II) => format!("{} (II)", orbit.label),
        None => orbit.label.to_string(),
    }
}

fn orbit_json(orbit: &NilpotentOrbit) -> Result<Value, Failure> {
    let marks: Vec<String> =
        orbit.weighted_marks()?.iter().map(Rat::to_string).collect();
    Ok(json!({
        "simple_type": orbit.ambient,
        "label": orbit.label.to_string(),
        "tag": orbit.very_even_tag,
        "neutral": serde_json::to_value(&orbit.neutral_element)?,
        "marks": marks,
        "dim": orbit.dim,
        "centralizer": orbit.centralizer_type.to_string(),
    }))
}

fn pattern_json(pattern: &WeightPattern) -> Value {
    let map: BTreeMap<String, usize> =
        pattern.iter().map(|(i, n)| (i.to_string(), n)).collect();
    json!(map)
}

fn outcome_str(outcome: EliminationOutcome) -> &'static str {
    match outcome {
        EliminationOutcome::Eliminated => "eliminated",
        EliminationOutcome::SurvivesTest => "survives",
        EliminationOutcome::RepNotAvailable => "rep-not-available",
    }
}

// --- commands ----------------------------------------------------------------

fn cmd_roots(format: OutputFormat, type_name: &str) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let datum = cached_datum(t)?;
    let gamma = datum.highest_coroot();
    let combo = coroot_combo_string(&datum, gamma);
    let gamma_level = datum.coroot_level(gamma)?;

    let mut paper = String::new();
    let _ = writeln!(paper, "type: {t}");
    let _ = writeln!(paper, "ambient dim: {}", datum.ambient_dim());
    let _ = writeln!(paper, "coxeter number: {}", datum.coxeter_number);
    let _ = writeln!(
        paper,
        "degrees: {}",
        datum.degrees.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(paper, "simple roots:");
    for (i, a) in datum.simple_roots.iter().enumerate() {
        let _ = writeln!(paper, "  a{} = {}", i + 1, a.to_tuple_string());
    }
    let _ = writeln!(paper, "simple coroots:");
    for (i, a) in datum.simple_coroots.iter().enumerate() {
        let _ = writeln!(paper, "  a{}v = {}", i + 1, a.to_tuple_string());
    }
    let _ = writeln!(paper, "fundamental weights:");
    for (i, w) in datum.fundamental_weights.iter().enumerate() {
        let _ = writeln!(paper, "  w{} = {}", i + 1, w.to_tuple_string());
    }
    let _ = writeln!(paper, "positive coroots by level:");
    let mut by_level: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut level_order: Vec<(Rat, String)> = Vec::new();
    for c in &datum.positive_coroots {
        let level = datum.coroot_level(c)?;
        let key = level.to_string();
        if !by_level.contains_key(&key) {
            level_order.push((level.clone(), key.clone()));
        }
        by_level.entry(key).or_default().push(c.to_tuple_string());
    }
    level_order.sort_by(|a, b| a.0.cmp(&b.0));
    for (_, key) in &level_order {
        let _ = writeln!(paper, "  {}: {}", key, by_level[key].join(", "));
    }
    let _ = writeln!(paper, "highest coroot: {} = {}", combo, gamma.to_tuple_string());
    let _ = writeln!(paper, "highest coroot level: {gamma_level}");

    let mut tsv = String::from("kind\tindex\tlevel\tcoords\n");
    for (i, a) in datum.simple_roots.iter().enumerate() {
        let _ = writeln!(tsv, "simple_root\t{}\t\t{}", i + 1, a.to_tuple_string());
    }
    for (i, a) in datum.simple_coroots.iter().enumerate() {
        let _ = writeln!(tsv, "simple_coroot\t{}\t\t{}", i + 1, a.to_tuple_string());
    }
    for (i, w) in datum.fundamental_weights.iter().enumerate() {
        let _ = writeln!(tsv, "fundamental_weight\t{}\t\t{}", i + 1, w.to_tuple_string());
    }
    for (i, c) in datum.positive_coroots.iter().enumerate() {
        let _ = writeln!(
            tsv,
            "positive_coroot\t{}\t{}\t{}",
            i + 1,
            datum.coroot_level(c)?,
            c.to_tuple_string()
        );
    }

    let json_doc: Value = serde_json::from_str(&datum.to_json())?;
    render(format, paper, tsv, json_doc)
}

/// "3*a1v + 2*a2v": a coroot expanded over the simple coroot basis.
fn coroot_combo_string(datum: &RootDatum, coroot: &RationalVector) -> String {
    let mut terms = Vec::new();
    for (i, w) in datum.fundamental_weights.iter().enumerate() {
        let c = coroot.dot(w);
        if num::Zero::is_zero(&c) {
            continue;
        }
        if c == Rat::from_integer(1.into()) {
            terms.push(format!("a{}v", i + 1));
        } else {
            terms.push(format!("{}*a{}v", c, i + 1));
        }
    }
    if terms.is_empty() {
        "0".to_owned()
    } else {
        terms.join(" + ")
    }
}

fn cmd_orbits(format: OutputFormat, type_name: &str) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let catalog = orbit_catalog(t)?;
    let mut paper = String::new();
    let mut tsv = String::from("label\tneutral\tmarks\tdim\tcentralizer\n");
    let mut rows = Vec::new();
    for orbit in &catalog {
        let marks: Vec<String> =
            orbit.weighted_marks()?.iter().map(Rat::to_string).collect();
        let _ = writeln!(
            paper,
            "{} | h = {} | marks = {} | dim = {} | z = {}",
            orbit_label_cell(orbit),
            orbit.neutral_element.to_tuple_string(),
            marks.join(","),
            orbit.dim,
            orbit.centralizer_type
        );
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{}",
            orbit_label_cell(orbit),
            orbit.neutral_element.to_tuple_string(),
            marks.join(","),
            orbit.dim,
            orbit.centralizer_type
        );
        rows.push(orbit_json(orbit)?);
    }
    let json_doc = json!({ "simple_type": t, "orbits": rows });
    render(format, paper, tsv, json_doc)
}

fn cmd_filtration_table(format: OutputFormat, type_name: &str) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    if !t.is_exceptional() {
        return Err(Failure::Domain(format!(
            "filtration-table requires an exceptional type, got {t}"
        )));
    }
    let mut paper = String::new();
    let mut tsv = String::from("label\ti_max\trow\n");
    let mut rows = Vec::new();
    for orbit in exceptional_catalog(t)? {
        let row = filtration_row(orbit)?;
        let i_max = row.len() - 1;
        let row_str =
            row.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let _ = writeln!(paper, "{} | {} | {}", orbit.label, i_max, row_str);
        let _ = writeln!(tsv, "{}\t{}\t{}", orbit.label, i_max, row_str);
        rows.push(json!({
            "label": orbit.label.to_string(),
            "i_max": i_max,
            "row": row,
        }));
    }
    let json_doc = json!({ "simple_type": t, "rows": rows });
    render(format, paper, tsv, json_doc)
}

fn cmd_half_integral(format: OutputFormat, type_name: &str) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let datum = cached_datum(t)?;
    let points = half_integral_unitary_points(t)?;
    let names = points
        .iter()
        .map(|p| weight_coord_string(&datum, p))
        .collect::<Result<Vec<_>, _>>()?;
    let paper = names.join(", ");
    let mut tsv = String::from("weights\tambient\n");
    let mut rows = Vec::new();
    for (p, name) in points.iter().zip(&names) {
        let _ = writeln!(tsv, "{}\t{}", name, p.to_tuple_string());
        rows.push(json!({
            "weights": weight_coord_json(&datum, p)?,
            "ambient": serde_json::to_value(p)?,
        }));
    }
    let json_doc = json!({ "simple_type": t, "points": rows });
    render(format, paper, tsv, json_doc)
}

fn cmd_extraneous(format: OutputFormat, spec: &[String]) -> Result<String, Failure> {
    // Accept "C3 2,2,2", "C 3 2,2,2", "E8 D6", "C3".
    let (t, rest) = if let Ok(t) = spec[0].parse::<SimpleType>() {
        (t, &spec[1..])
    } else if spec.len() >= 2 {
        let joined = format!("{}{}", spec[0], spec[1]);
        (parse_type(&joined)?, &spec[2..])
    } else {
        return Err(Failure::Domain(format!("unknown type: {}", spec[0])));
    };
    let orbits: Vec<NilpotentOrbit> = if rest.is_empty() {
        orbit_catalog(t)?
    } else {
        vec![parse_orbit(t, &rest.join(" "), None)?]
    };
    let mut paper = String::new();
    let mut tsv = String::from("orbit\tre_s\tweights\tepsilon\tz\n");
    let mut rows = Vec::new();
    for orbit in &orbits {
        let datum = orbit.datum()?;
        for entry in extraneous_points(orbit)? {
            let eps = entry
                .epsilon
                .as_ref()
                .map(|eps| {
                    eps.iter()
                        .map(|(d, on)| format!("{d}:{}", usize::from(*on)))
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_else(|| "-".to_owned());
            let weights = weight_coord_string(&datum, &entry.re_s)?;
            let _ = writeln!(
                paper,
                "{} | Re(s) = {} | {} | eps = {} | z = {}",
                orbit_label_cell(orbit),
                entry.re_s.to_tuple_string(),
                weights,
                eps,
                entry.centralizer_z
            );
            let _ = writeln!(
                tsv,
                "{}\t{}\t{}\t{}\t{}",
                orbit_label_cell(orbit),
                entry.re_s.to_tuple_string(),
                weights,
                eps,
                entry.centralizer_z
            );
            rows.push(json!({
                "orbit": orbit_label_cell(orbit),
                "re_s": serde_json::to_value(&entry.re_s)?,
                "weights": weight_coord_json(&datum, &entry.re_s)?,
                "epsilon": entry.epsilon,
                "z": entry.centralizer_z,
            }));
        }
    }
    if rows.is_empty() {
        paper.push_str("no extraneous points\n");
    }
    let json_doc = json!({ "simple_type": t, "entries": rows });
    render(format, paper, tsv, json_doc)
}

fn cmd_central_point(
    format: OutputFormat,
    type_name: &str,
    orbit_spec: &str,
    tag: Option<TagArg>,
) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let orbit = parse_orbit(t, orbit_spec, tag)?;
    let datum = orbit.datum()?;
    let point = central_point(&orbit);
    let weights = weight_coord_string(&datum, &point)?;
    let paper = format!(
        "central point of {}: {} = {}\n",
        orbit,
        weights,
        point.to_tuple_string()
    );
    let tsv = format!(
        "orbit\tweights\tambient\n{}\t{}\t{}\n",
        orbit_label_cell(&orbit),
        weights,
        point.to_tuple_string()
    );
    let json_doc = json!({
        "orbit": orbit_json(&orbit)?,
        "weights": weight_coord_json(&datum, &point)?,
        "ambient": serde_json::to_value(&point)?,
    });
    render(format, paper, tsv, json_doc)
}

fn cmd_weight_pattern(
    format: OutputFormat,
    type_name: &str,
    rep_name: &str,
    point: Option<&str>,
    orbit_spec: Option<&str>,
    tag: Option<TagArg>,
) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let rep: RepLabel = rep_name.parse::<RepLabel>()?;
    let (datum, nu): (Arc<RootDatum>, RationalVector) = match (point, orbit_spec) {
        (Some(text), None) => {
            let datum = cached_datum(t)?;
            let nu = parse_point(text)?;
            if nu.dim() != datum.ambient_dim() {
                return Err(Failure::Domain(format!(
                    "point has {} coordinates, {} ambient needs {}",
                    nu.dim(),
                    t,
                    datum.ambient_dim()
                )));
            }
            (datum, nu)
        }
        (None, Some(spec)) => {
            let orbit = parse_orbit(t, spec, tag)?;
            (orbit.datum()?, central_point(&orbit))
        }
        _ => {
            return Err(Failure::Usage(
                "weight-pattern needs exactly one of --point or --orbit".to_owned(),
            ))
        }
    };
    let weighted = weights_of(&datum, &rep)?;
    let pattern = weight_pattern(&weighted, &nu)?;
    let paper = format!(
        "pattern of {} at {}: {}\ntotal = {}, max index = {}\n",
        rep,
        nu.to_tuple_string(),
        pattern,
        pattern.total(),
        pattern.max_index().map(|i| i.to_string()).unwrap_or_else(|| "-".into())
    );
    let mut tsv = String::from("index\tcount\n");
    for (i, n) in pattern.iter() {
        let _ = writeln!(tsv, "{i}\t{n}");
    }
    let json_doc = json!({
        "rep": rep.to_string(),
        "at": serde_json::to_value(&nu)?,
        "indices": pattern_json(&pattern),
        "total": pattern.total(),
        "max_index": pattern.max_index(),
    });
    render(format, paper, tsv, json_doc)
}

fn cmd_orbit_from_pattern(
    format: OutputFormat,
    type_name: &str,
    row_text: &str,
    halfspin_top: Option<i64>,
) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let row = parse_usize_list(row_text)?;
    let orbit: NilpotentOrbit = if t.is_exceptional() {
        orbit_from_pattern(t, &row)?.clone()
    } else {
        classical_orbit_from_pattern(t, default_boxes(t), &row, halfspin_top)?
    };
    let paper = format!(
        "{} | h = {} | dim = {} | z = {}\n",
        orbit,
        orbit.neutral_element.to_tuple_string(),
        orbit.dim,
        orbit.centralizer_type
    );
    let tsv = format!(
        "orbit\tneutral\tdim\tcentralizer\n{}\t{}\t{}\t{}\n",
        orbit_label_cell(&orbit),
        orbit.neutral_element.to_tuple_string(),
        orbit.dim,
        orbit.centralizer_type
    );
    let json_doc = orbit_json(&orbit)?;
    render(format, paper, tsv, json_doc)
}

fn cmd_cs_4a1(
    format: OutputFormat,
    point: Option<&str>,
    scan: bool,
    witness: bool,
) -> Result<String, Failure> {
    if point.is_none() && !scan && !witness {
        return Err(Failure::Usage(
            "cs-4a1 needs a point, --scan, or --witness".to_owned(),
        ));
    }
    let mut paper = String::new();
    let mut tsv = String::from("what\tpoint\tbase_member\textra_member\n");
    let mut json_doc = serde_json::Map::new();
    let tuple = |nu: &[Rat]| {
        format!(
            "({})",
            nu.iter().map(Rat::to_string).collect::<Vec<_>>().join(", ")
        )
    };
    if let Some(text) = point {
        let nu = parse_point(text)?;
        let coords = nu.coords().to_vec();
        let base = cs_e8_4a1_member(&coords)?;
        let extra = cs_e8_4a1_extra_member(&coords)?;
        let _ = writeln!(
            paper,
            "{}: base member = {}, extra member = {}",
            tuple(&coords),
            base,
            extra
        );
        let _ = writeln!(tsv, "point\t{}\t{}\t{}", tuple(&coords), base, extra);
        json_doc.insert(
            "point".into(),
            json!({
                "nu": serde_json::to_value(&nu)?,
                "base_member": base,
                "extra_member": extra,
            }),
        );
    }
    if scan {
        let members = cs_e8_4a1_quarter_grid_extra_members();
        let _ = writeln!(
            paper,
            "quarter-integer scan (nu4 < 2): {} extra-region members",
            members.len()
        );
        for m in &members {
            let _ = writeln!(paper, "  {}", tuple(m));
            let _ = writeln!(tsv, "scan_member\t{}\t\ttrue", tuple(m));
        }
        json_doc.insert(
            "scan".into(),
            json!({
                "extra_member_count": members.len(),
                "extra_members": members
                    .iter()
                    .map(|m| serde_json::to_value(RationalVector::new(m.clone())))
                    .collect::<Result<Vec<_>, _>>()?,
            }),
        );
    }
    if witness {
        let w = cs_e8_4a1_extra_witness();
        let base = cs_e8_4a1_member(&w)?;
        let extra = cs_e8_4a1_extra_member(&w)?;
        let _ = writeln!(
            paper,
            "witness {}: base member = {}, extra member = {}",
            tuple(&w),
            base,
            extra
        );
        let _ = writeln!(tsv, "witness\t{}\t{}\t{}", tuple(&w), base, extra);
        json_doc.insert(
            "witness".into(),
            json!({
                "nu": serde_json::to_value(RationalVector::new(w))?,
                "base_member": base,
                "extra_member": extra,
            }),
        );
    }
    render(format, paper, tsv, Value::Object(json_doc))
}

fn cmd_regions(
    format: OutputFormat,
    type_name: &str,
    brute: bool,
) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let formula = count_chamber_regions(t)?;
    let mut paper = format!("regions({t}) = {formula}\n");
    let mut tsv = format!("method\tcount\nformula\t{formula}\n");
    let mut json_doc = serde_json::Map::new();
    json_doc.insert("simple_type".into(), serde_json::to_value(t)?);
    json_doc.insert("formula".into(), json!(formula.to_string()));
    if brute {
        let enumerated = brute_force_regions(t)?;
        let agree = num::BigInt::from(enumerated) == formula;
        let _ = writeln!(paper, "brute force = {enumerated}\nagree = {agree}");
        let _ = writeln!(tsv, "brute_force\t{enumerated}");
        json_doc.insert("brute_force".into(), json!(enumerated));
        json_doc.insert("agree".into(), json!(agree));
    }
    render(format, paper, tsv, Value::Object(json_doc))
}

fn cmd_fold(format: OutputFormat, type_name: &str, tau_order: u32) -> Result<String, Failure> {
    let t = parse_type(type_name)?;
    let folded = fold(t, tau_order)?;
    let reduction = quasi_split_reduction(t, tau_order)?;
    let datum = cached_datum(folded)?;
    let mut paper = format!("fold: ({t}, {tau_order}) -> {folded}\n");
    let names = reduction
        .candidates
        .iter()
        .map(|p| weight_coord_string(&datum, p))
        .collect::<Result<Vec<_>, _>>()?;
    let _ = writeln!(paper, "candidates: {}", names.join(", "));
    if !reduction.trace.is_empty() {
        let _ = writeln!(paper, "trace:");
        for record in &reduction.trace {
            let _ = writeln!(
                paper,
                "  {} | {} | {}",
                weight_coord_string(&datum, &record.point)?,
                record.rep,
                outcome_str(record.outcome)
            );
        }
    }
    let survivors = reduction
        .surviving
        .iter()
        .map(|p| weight_coord_string(&datum, p))
        .collect::<Result<Vec<_>, _>>()?;
    let _ = writeln!(paper, "surviving: {}", survivors.join(", "));

    let mut tsv = String::from("point\trep\toutcome\n");
    for record in &reduction.trace {
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}",
            weight_coord_string(&datum, &record.point)?,
            record.rep,
            outcome_str(record.outcome)
        );
    }
    let json_doc = serde_json::to_value(&reduction)?;
    render(format, paper, tsv, json_doc)
}

fn cmd_check_property_a(
    format: OutputFormat,
    file: Option<&std::path::Path>,
    random: Option<usize>,
    seed: u64,
) -> Result<String, Failure> {
    match (file, random) {
        (Some(path), None) => {
            let m = read_matrix_file(path)?;
            let (n_v, n_u) = marginals(&m);
            let verdict = property_a_check(&n_u, &n_v)?;
            let paper = format!(
                "symmetric: {}\nn_v: {}\nn_u: {}\nverdict: {}\n",
                m.is_symmetric(),
                n_v,
                n_u,
                verdict
            );
            let tsv = format!(
                "symmetric\tn_v\tn_u\tverdict\n{}\t{}\t{}\t{}\n",
                m.is_symmetric(),
                n_v,
                n_u,
                verdict
            );
            let json_doc = json!({
                "symmetric": m.is_symmetric(),
                "n_v": pattern_json(&n_v),
                "n_u": pattern_json(&n_u),
                "verdict": verdict,
            });
            render(format, paper, tsv, json_doc)
        }
        (None, Some(instances)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut diagonal = 0usize;
            let mut truncation = 0usize;
            let mut violation = 0usize;
            for _ in 0..instances {
                let m = MarginalMatrix::random_symmetric(&mut rng);
                let (n_v, n_u) = marginals(&m);
                match property_a_check(&n_u, &n_v)? {
                    PropertyAVerdict::DiagonalMatch => diagonal += 1,
                    PropertyAVerdict::TruncationAt(_) => truncation += 1,
                    PropertyAVerdict::Violation(_) => violation += 1,
                }
            }
            let paper = format!(
                "instances: {instances}\nseed: {seed}\ndiagonal-match: {diagonal}\ntruncation: {truncation}\nviolation: {violation}\n"
            );
            let tsv = format!(
                "instances\tseed\tdiagonal_match\ttruncation\tviolation\n{instances}\t{seed}\t{diagonal}\t{truncation}\t{violation}\n"
            );
            let json_doc = json!({
                "instances": instances,
                "seed": seed,
                "diagonal_match": diagonal,
                "truncation": truncation,
                "violation": violation,
            });
            if violation > 0 {
                return Err(Failure::Domain(format!(
                    "{violation} symmetric matrices produced a violation verdict"
                )));
            }
            render(format, paper, tsv, json_doc)
        }
        _ => Err(Failure::Usage(
            "check-property-a needs a matrix file or --random <count>".to_owned(),
        )),
    }
}

/// Reads a TSV matrix file with header "i<TAB>k<TAB>a".
fn read_matrix_file(path: &std::path::Path) -> Result<MarginalMatrix, Failure> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines.next().map(str::trim).unwrap_or("");
    if header != "i\tk\ta" {
        return Err(Failure::Domain(format!(
            "matrix file must start with header \"i\\tk\\ta\", found {header:?}"
        )));
    }
    let mut m = MarginalMatrix::new();
    for (lineno, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Failure::Domain(format!(
                "line {}: expected 3 tab-separated fields",
                lineno + 2
            )));
        }
        let parse_i64 = |s: &str| {
            s.trim().parse::<i64>().map_err(|_| {
                Failure::Domain(format!("line {}: not an integer: {s:?}", lineno + 2))
            })
        };
        let i = parse_i64(fields[0])?;
        let k = parse_i64(fields[1])?;
        let a = fields[2].trim().parse::<usize>().map_err(|_| {
            Failure::Domain(format!(
                "line {}: not a nonnegative integer: {:?}",
                lineno + 2,
                fields[2]
            ))
        })?;
        m.set(i, k, a);
    }
    Ok(m)
}

fn cmd_azs_table(format: OutputFormat) -> Result<String, Failure> {
    let rows = azs_elimination_table()?;
    let mut paper = String::new();
    let mut tsv = String::from("type\torbit\trep\ti0\tn_v\tn_u\n");
    for row in &rows {
        let _ = writeln!(
            paper,
            "{} | {} | {} | {} | {} | {}",
            row.ambient, row.orbit_label, row.rep, row.i0, row.n_v_i0, row.n_u_i0
        );
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{}\t{}",
            row.ambient, row.orbit_label, row.rep, row.i0, row.n_v_i0, row.n_u_i0
        );
    }
    let json_doc = json!({ "rows": serde_json::to_value(&rows)? });
    render(format, paper, tsv, json_doc)
}

