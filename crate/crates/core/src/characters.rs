//! Dominant weight multiplicities by Freudenthal's recursion, checked
//! against the Weyl dimension formula and the dominance order.
//!
//! The candidate set is grown by root strings from `λ` and shares no code
//! with [`crate::convexity`], so the support comparison is a real check.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::convexity::dominant_below;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub lambda: Vector,
    /// Dominant weights with nonzero multiplicity.
    pub entries: BTreeMap<Vector, u64>,
}

impl MultiplicityTable {
    /// Multiplicity of any weight, read off its dominant representative.
    pub fn multiplicity(&self, rs: &RootSystem, mu: &Vector) -> u64 {
        let (plus, _) = rs.dominant_rep(mu);
        self.entries.get(&plus).copied().unwrap_or(0)
    }

    /// `Σ m(μ)·|W.μ|` over the dominant support.
    pub fn total_dimension(&self, rs: &RootSystem) -> u64 {
        self.entries
            .iter()
            .map(|(mu, m)| m * rs.weyl_orbit(mu).len() as u64)
            .sum()
    }

    pub fn support(&self) -> BTreeSet<Vector> {
        self.entries.keys().cloned().collect()
    }
}

fn dominant_or_err(rs: &RootSystem, lambda: &Vector) -> Result<()> {
    rs.ensure_rank(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

/// Saturation closure: for dominant `μ` in the set and `α > 0`, add the
/// dominant representatives of `μ − kα`, `1 ≤ k ≤ ⟨μ, α∨⟩`.
fn candidates(rs: &RootSystem, lambda: &Vector) -> BTreeSet<Vector> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for (a, alpha) in rs.positive_roots.iter().enumerate() {
            let n = rs.pair_positive(&mu, a).to_integer();
            let mut w = mu.clone();
            for _ in 0..n {
                w = &w - alpha;
                let (plus, _) = rs.dominant_rep(&w);
                if seen.insert(plus.clone()) {
                    stack.push(plus);
                }
            }
        }
    }
    seen
}

fn norm_shifted(rs: &RootSystem, x: &Vector) -> Rational64 {
    let y = x + &rs.weyl_vector;
    rs.form(&y, &y)
}

/// Freudenthal's recursion over dominant weights, highest first.
pub fn freudenthal(rs: &RootSystem, lambda: &Vector) -> Result<MultiplicityTable> {
    dominant_or_err(rs, lambda)?;
    let mut order: Vec<Vector> = candidates(rs, lambda).into_iter().collect();
    order.sort_by(|a, b| b.height().cmp(&a.height()).then_with(|| b.cmp(a)));
    let top = norm_shifted(rs, lambda);
    let mut m: BTreeMap<Vector, u64> = BTreeMap::new();
    for mu in order {
        if mu == *lambda {
            m.insert(mu, 1);
            continue;
        }
        let mut rhs = Rational64::zero();
        for alpha in &rs.positive_roots {
            let mut w = &mu + alpha;
            loop {
                let (plus, _) = rs.dominant_rep(&w);
                let Some(&mult) = m.get(&plus) else { break };
                rhs += rs.form(&w, alpha) * Rational64::from_integer(mult as i64);
                w = &w + alpha;
            }
        }
        let denom = top - norm_shifted(rs, &mu);
        if denom <= Rational64::zero() {
            return Err(Error::Internal(format!(
                "nonpositive Freudenthal denominator at {mu}"
            )));
        }
        let val = rhs * Rational64::from_integer(2) / denom;
        if !val.is_integer() || val < Rational64::zero() {
            return Err(Error::Internal(format!(
                "non-integral multiplicity {val} at {mu}"
            )));
        }
        m.insert(mu, val.to_integer() as u64);
    }
    m.retain(|_, v| *v > 0);
    Ok(MultiplicityTable {
        lambda: lambda.clone(),
        entries: m,
    })
}

/// `Π_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Vector) -> Result<u64> {
    dominant_or_err(rs, lambda)?;
    let shifted = lambda + &rs.weyl_vector;
    let mut d = Rational64::one();
    for a in 0..rs.positive_roots.len() {
        d *= rs.pair_positive(&shifted, a) / rs.pair_positive(&rs.weyl_vector, a);
    }
    if !d.is_integer() {
        return Err(Error::Internal(format!(
            "Weyl dimension {d} is not an integer"
        )));
    }
    Ok(d.to_integer() as u64)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SupportCheck {
    pub only_in_oracle: Vec<Vector>,
    pub only_in_dominance: Vec<Vector>,
}

impl SupportCheck {
    pub fn agrees(&self) -> bool {
        self.only_in_oracle.is_empty() && self.only_in_dominance.is_empty()
    }
}

/// Compares the nonzero-multiplicity dominant weights with `{ν dominant : ν ≤ λ}`.
pub fn support_check(rs: &RootSystem, lambda: &Vector) -> Result<SupportCheck> {
    let oracle = freudenthal(rs, lambda)?.support();
    let dom: BTreeSet<Vector> = dominant_below(rs, lambda)?.into_iter().collect();
    Ok(SupportCheck {
        only_in_oracle: oracle.difference(&dom).cloned().collect(),
        only_in_dominance: dom.difference(&oracle).cloned().collect(),
    })
}
