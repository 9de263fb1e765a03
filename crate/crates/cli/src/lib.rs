//! Experiment plumbing behind the `alcove` binary: λ parsing, grids,
//! verification and oracle reports, gallery dumps, and SVG rendering.

pub mod render;

use std::collections::BTreeSet;
use std::time::Instant;

use alcove::galleries::{enumerate_positively_folded, positively_folded_endpoints};
use alcove::{
    a_type_set, dconv_hull, dominant_lattice_grid, freudenthal, support_check, wconv_membership,
    weyl_dim, AffineComplex, GalleryRecord, RootSystem, RootSystemKind, Vector,
};
use anyhow::{bail, ensure, Context, Result};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// Kinds and coordinate-sum caps of the default grid.
pub const DEFAULT_GRID: [(&str, u32); 5] = [("A1", 4), ("A2", 4), ("B2", 4), ("G2", 3), ("A3", 2)];

/// Minimal-gallery types tried per λ under `--all-minimal-types`.
pub const MAX_TYPES: usize = 6;

/// Coordinates in which `--lambda` is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    /// `⟨λ, α_i∨⟩`, nonnegative integers.
    #[default]
    Coroot,
    /// Coefficients of the simple roots.
    Root,
}

pub fn complex(kind: RootSystemKind) -> Result<AffineComplex> {
    Ok(AffineComplex::new(RootSystem::construct(kind)?))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .with_context(|| format!("bad coordinate {t:?} in {s:?}"))
        })
        .collect()
}

/// Parses a dominant λ; the result is in simple-root coordinates.
pub fn parse_lambda(rs: &RootSystem, s: &str, basis: Basis) -> Result<Vector> {
    let c = parse_ints(s)?;
    ensure!(
        c.len() == rs.rank(),
        "{} needs {} coordinates, got {}",
        rs.kind,
        rs.rank(),
        c.len()
    );
    let lam = match basis {
        Basis::Coroot => {
            ensure!(c.iter().all(|&k| k >= 0), "λ = {s} is not dominant");
            let q: Vec<Rational64> = c.iter().map(|&k| Rational64::from_integer(k)).collect();
            rs.from_coweight_coords(&q)?
        }
        Basis::Root => Vector::from_ints(&c),
    };
    ensure!(rs.is_dominant(&lam), "λ = {s} is not dominant");
    Ok(lam)
}

/// Parses a point given in simple-root coordinates.
pub fn parse_root_coords(rs: &RootSystem, s: &str) -> Result<Vector> {
    let c = parse_ints(s)?;
    ensure!(
        c.len() == rs.rank(),
        "{} needs {} coordinates, got {}",
        rs.kind,
        rs.rank(),
        c.len()
    );
    Ok(Vector::from_ints(&c))
}

fn require_type_zero(rs: &RootSystem, lam: &Vector) -> Result<()> {
    if !lam.is_integral() {
        bail!(
            "λ = {lam} (simple-root coordinates) is not in the root lattice of {}",
            rs.kind
        );
    }
    Ok(())
}

fn strings(v: &Vector) -> Vec<String> {
    v.coords().iter().map(|q| q.to_string()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: String,
    /// Simple-root coordinates, as exact rationals.
    pub lambda: Vec<String>,
    pub panel_types: Vec<usize>,
    pub type_length: usize,
    pub endpoint_set_size: usize,
    pub a_type_set_size: usize,
    pub verdict: Verdict,
    pub mismatch_witnesses: Vec<Vec<String>>,
    /// Seconds.
    pub wall_clock: f64,
}

/// Compares the endpoints of positively folded galleries with `A^type(λ)`
/// for up to `max_types` minimal-gallery types (one report each).
pub fn verify(
    cx: &AffineComplex,
    lam: &Vector,
    max_types: usize,
) -> Result<Vec<VerificationReport>> {
    let rs = cx.root_system();
    require_type_zero(rs, lam)?;
    let expected = a_type_set(rs, lam)?;
    let mut out = Vec::new();
    for t in cx.minimal_gallery_types(lam, max_types.max(1))? {
        let start = Instant::now();
        let (ends, _) = positively_folded_endpoints(cx, &t)?;
        let witnesses: Vec<Vec<String>> =
            ends.symmetric_difference(&expected).map(strings).collect();
        out.push(VerificationReport {
            kind: rs.kind.to_string(),
            lambda: strings(lam),
            panel_types: t.panel_types.clone(),
            type_length: t.panel_types.len(),
            endpoint_set_size: ends.len(),
            a_type_set_size: expected.len(),
            verdict: if witnesses.is_empty() {
                Verdict::Match
            } else {
                Verdict::Mismatch
            },
            mismatch_witnesses: witnesses,
            wall_clock: start.elapsed().as_secs_f64(),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub kind: String,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub distance_x: usize,
    pub distance_y: usize,
    pub y_in_wconv: bool,
    pub y_in_dual_hull: bool,
    pub y_in_a_type_set: bool,
    /// `y` is W-convex but outside the dual hull.
    pub separates: bool,
}

pub fn counterexample(cx: &AffineComplex, x: &Vector, y: &Vector) -> Result<CounterexampleReport> {
    let rs = cx.root_system();
    let o = Vector::zero(rs.rank());
    let y_in_wconv = wconv_membership(rs, x, y);
    let y_in_dual_hull = dconv_hull(rs, x).contains(y);
    Ok(CounterexampleReport {
        kind: rs.kind.to_string(),
        x: strings(x),
        y: strings(y),
        distance_x: cx.gallery_distance(&o, x)?,
        distance_y: cx.gallery_distance(&o, y)?,
        y_in_wconv,
        y_in_dual_hull,
        y_in_a_type_set: a_type_set(rs, x)?.contains(y),
        separates: y_in_wconv && !y_in_dual_hull,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiplicity {
    pub weight: Vec<String>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub kind: String,
    pub lambda: Vec<String>,
    pub weyl_dim: u64,
    pub multiplicity_sum: u64,
    pub support_matches_dominance: bool,
    pub pass: bool,
    pub dominant_multiplicities: Vec<WeightMultiplicity>,
}

pub fn oracle(rs: &RootSystem, lam: &Vector) -> Result<OracleReport> {
    let table = freudenthal(rs, lam)?;
    let dim = weyl_dim(rs, lam)?;
    let sum = table.total_dimension(rs);
    let support = support_check(rs, lam)?.agrees();
    Ok(OracleReport {
        kind: rs.kind.to_string(),
        lambda: strings(lam),
        weyl_dim: dim,
        multiplicity_sum: sum,
        support_matches_dominance: support,
        pass: support && sum == dim,
        dominant_multiplicities: table
            .entries
            .iter()
            .rev()
            .map(|(w, &m)| WeightMultiplicity {
                weight: strings(w),
                multiplicity: m,
            })
            .collect(),
    })
}

/// Sorted gallery records for the minimal type of `λ`, one per line.
pub fn dump_galleries(cx: &AffineComplex, lam: &Vector) -> Result<Vec<String>> {
    require_type_zero(cx.root_system(), lam)?;
    let t = cx.gallery_type(&cx.minimal_gallery(lam)?)?;
    let records: BTreeSet<GalleryRecord> = enumerate_positively_folded(cx, &t)?
        .iter()
        .map(|g| GalleryRecord::from_gallery(cx, g))
        .collect();
    Ok(records.iter().map(|r| r.to_string()).collect())
}

/// The λ of a grid: dominant root-lattice points with `⟨λ, α_i∨⟩` summing to
/// at most `max_sum`.
pub fn grid_cells(kind: RootSystemKind, max_sum: u32) -> Result<Vec<Vector>> {
    Ok(dominant_lattice_grid(
        &RootSystem::construct(kind)?,
        max_sum,
    ))
}
