//! Dual coordinates, dominance order, the target set `A^type(x)`, the dual
//! convex hull of a Weyl orbit, and classical W-convexity.
//!
//! The dual coordinate `μ_i(x)` is the coefficient of `α_i` in `x`, which in
//! this crate's basis is simply `x[i]`.

use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::vector::Vector;

/// `{x : μ_index(x) = level}`; `index` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualHyperplane {
    pub index: usize,
    pub level: Rational64,
}

/// Per-coordinate bounds of `μ` over a Weyl orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullDescription {
    pub lower: Vec<Rational64>,
    pub upper: Vec<Rational64>,
    pub orbit: BTreeSet<Vector>,
}

impl HullDescription {
    pub fn contains(&self, y: &Vector) -> bool {
        mu_coords(y)
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(m, (lo, hi))| lo <= m && m <= hi)
    }

    /// Bounding dual hyperplanes as `(lower, upper)` per index.
    pub fn walls(&self) -> Vec<(DualHyperplane, DualHyperplane)> {
        (0..self.lower.len())
            .map(|index| {
                (
                    DualHyperplane {
                        index,
                        level: self.lower[index],
                    },
                    DualHyperplane {
                        index,
                        level: self.upper[index],
                    },
                )
            })
            .collect()
    }
}

pub fn mu_coords(x: &Vector) -> Vec<Rational64> {
    x.coords().to_vec()
}

pub fn in_positive_cone(x: &Vector) -> bool {
    x.is_nonnegative()
}

fn ensure_dominant(rs: &RootSystem, x: &Vector) -> Result<()> {
    rs.ensure_rank(x)?;
    if rs.is_dominant(x) {
        Ok(())
    } else {
        Err(Error::NotDominant(x.clone()))
    }
}

/// `ν ≤ λ` iff `λ − ν` is a nonnegative integer combination of simple roots.
pub fn dominance_leq(rs: &RootSystem, nu: &Vector, lambda: &Vector) -> Result<bool> {
    ensure_dominant(rs, nu)?;
    ensure_dominant(rs, lambda)?;
    let d = lambda - nu;
    Ok(d.is_integral() && in_positive_cone(&d))
}

/// Dominant `ν ≤ λ`, in decreasing height order.
///
/// Dominant vectors have nonnegative simple-root coordinates, so every such
/// `ν = λ − Σ c_i α_i` has `0 ≤ c_i ≤ μ_i(λ)`; the box is scanned in full.
pub fn dominant_below(rs: &RootSystem, lambda: &Vector) -> Result<Vec<Vector>> {
    ensure_dominant(rs, lambda)?;
    let bounds: Vec<i64> = mu_coords(lambda)
        .iter()
        .map(|m| m.floor().to_integer())
        .collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; bounds.len()];
    loop {
        let nu = lambda - &Vector::from_ints(&c);
        if rs.is_dominant(&nu) {
            out.push(nu);
        }
        let mut i = 0;
        loop {
            if i == c.len() {
                out.sort_by(|a, b| b.height().cmp(&a.height()).then_with(|| b.cmp(a)));
                return Ok(out);
            }
            c[i] += 1;
            if c[i] <= bounds[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Dominant root-lattice points whose simple-coroot pairings sum to at most
/// `max_sum`, ordered by pairing vector.
pub fn dominant_lattice_grid(rs: &RootSystem, max_sum: u32) -> Vec<Vector> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut c = vec![0u32; n];
    loop {
        if c.iter().sum::<u32>() <= max_sum {
            let coords: Vec<Rational64> = c
                .iter()
                .map(|&k| Rational64::from_integer(k as i64))
                .collect();
            let lam = rs.from_coweight_coords(&coords).expect("rank matches");
            if lam.is_integral() {
                out.push(lam);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            c[i] += 1;
            if c[i] <= max_sum {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// `A^type(x) = {y : x⁺ − y⁺ ∈ C_p ∩ Q}`: the union of the Weyl orbits of
/// the dominant `ν ≤ x⁺`.
pub fn a_type_set(rs: &RootSystem, x: &Vector) -> Result<BTreeSet<Vector>> {
    rs.ensure_rank(x)?;
    let (plus, _) = rs.dominant_rep(x);
    let mut out = BTreeSet::new();
    for nu in dominant_below(rs, &plus)? {
        out.extend(rs.weyl_orbit(&nu));
    }
    Ok(out)
}

/// Membership test for `A^type(x)` without building the set.
pub fn in_a_type_set(rs: &RootSystem, x: &Vector, y: &Vector) -> Result<bool> {
    rs.ensure_rank(y)?;
    let (xp, _) = rs.dominant_rep(x);
    let (yp, _) = rs.dominant_rep(y);
    dominance_leq(rs, &yp, &xp)
}

pub fn dconv_hull(rs: &RootSystem, x: &Vector) -> HullDescription {
    let orbit = rs.weyl_orbit(x);
    let n = rs.rank();
    let lower = (0..n)
        .map(|i| orbit.iter().map(|v| v[i]).min().unwrap())
        .collect();
    let upper = (0..n)
        .map(|i| orbit.iter().map(|v| v[i]).max().unwrap())
        .collect();
    HullDescription {
        lower,
        upper,
        orbit,
    }
}

/// Outcome of comparing the coordinate hull with `A^type(x)` on `x + Q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HullComparison {
    /// In `A^type(x)` but outside the hull (never expected).
    pub missing_from_hull: Vec<Vector>,
    /// Inside the hull but not in `A^type(x)`.
    pub extra_in_hull: Vec<Vector>,
}

impl HullComparison {
    pub fn agrees(&self) -> bool {
        self.missing_from_hull.is_empty() && self.extra_in_hull.is_empty()
    }
}

/// Scans every point of `x + Q` inside the hull's bounding box.
pub fn compare_hull_with_a_type(rs: &RootSystem, x: &Vector) -> Result<HullComparison> {
    let hull = dconv_hull(rs, x);
    let a_type = a_type_set(rs, x)?;
    let mut cmp = HullComparison::default();
    for y in &a_type {
        if !hull.contains(y) {
            cmp.missing_from_hull.push(y.clone());
        }
    }
    // Lattice points x + c with lower ≤ x + c ≤ upper.
    let n = rs.rank();
    let lo: Vec<i64> = (0..n)
        .map(|i| (hull.lower[i] - x[i]).ceil().to_integer())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| (hull.upper[i] - x[i]).floor().to_integer())
        .collect();
    let mut c = lo.clone();
    'outer: loop {
        let y = x + &Vector::from_ints(&c);
        if !a_type.contains(&y) {
            cmp.extra_in_hull.push(y);
        }
        for i in 0..n {
            c[i] += 1;
            if c[i] <= hi[i] {
                continue 'outer;
            }
            c[i] = lo[i];
        }
        break;
    }
    Ok(cmp)
}

/// Classical W-convexity: `y` lies in every half-apartment `⟨·, α∨⟩ ≤ k` or
/// `≥ k` that contains the orbit `W.x`.
pub fn wconv_membership(rs: &RootSystem, x: &Vector, y: &Vector) -> bool {
    let orbit = rs.weyl_orbit(x);
    (0..rs.positive_roots.len()).all(|a| {
        let vals: Vec<Rational64> = orbit.iter().map(|v| rs.pair_positive(v, a)).collect();
        let lo = *vals.iter().min().unwrap();
        let hi = *vals.iter().max().unwrap();
        let k = rs.pair_positive(y, a);
        lo <= k && k <= hi
    })
}

/// Whether the hull bounds straddle zero in every coordinate.
pub fn hull_contains_origin(h: &HullDescription) -> bool {
    h.lower.iter().all(|l| *l <= Rational64::zero())
        && h.upper.iter().all(|u| *u >= Rational64::zero())
}
