//! Exact vectors in simple-root coordinates.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Largest rank the fixed-size lattice kernels support.
pub const MAX_RANK: usize = 4;

/// Integer point in simple-root coordinates, padded with zeros past the rank.
pub type LatticePoint = [i32; MAX_RANK];

/// A point of the ambient space, `x = Σ coords[i]·α_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Vector(Vec<Rational64>);

impl Vector {
    pub fn zero(rank: usize) -> Self {
        Vector(vec![Rational64::zero(); rank])
    }

    pub fn new(coords: Vec<Rational64>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(
            coords
                .iter()
                .map(|&c| Rational64::from_integer(c))
                .collect(),
        )
    }

    /// Unit vector `α_i`.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = Rational64::one();
        v
    }

    pub fn from_lattice(p: &LatticePoint, rank: usize) -> Self {
        Vector(
            p[..rank]
                .iter()
                .map(|&c| Rational64::from_integer(c as i64))
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if every coordinate is an integer that fits.
    pub fn to_lattice(&self) -> Option<LatticePoint> {
        if self.rank() > MAX_RANK {
            return None;
        }
        let mut out = [0; MAX_RANK];
        for (o, c) in out.iter_mut().zip(&self.0) {
            if !c.is_integer() {
                return None;
            }
            *o = i32::try_from(*c.numer()).ok()?;
        }
        Some(out)
    }

    pub fn scale(&self, k: Rational64) -> Self {
        Vector(self.0.iter().map(|c| c * k).collect())
    }

    /// Sum of coordinates (height, for root-lattice vectors).
    pub fn height(&self) -> Rational64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

impl Index<usize> for Vector {
    type Output = Rational64;
    fn index(&self, i: usize) -> &Rational64 {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.rank(), rhs.rank());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.rank(), rhs.rank());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `"1,-2,3/2"`.
impl FromStr for Vector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<Rational64>()
                    .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Vector)
    }
}
