//! Irreducible crystallographic root systems with exact rational data.
//!
//! Every vector is written in the basis of simple roots. The invariant form
//! is the symmetrization `(α_i, α_j) = d_i·C[i][j]` of the Cartan matrix,
//! normalized so that long roots have squared length 2.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::vector::{LatticePoint, Vector, MAX_RANK};
use crate::weyl::{IntMatrix, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemKind {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemKind {
    pub const SUPPORTED: [(Family, usize); 10] = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
    ];

    /// Rejects pairs outside the supported table.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let kind = RootSystemKind { family, rank };
        if Self::SUPPORTED.contains(&(family, rank)) {
            Ok(kind)
        } else {
            Err(Error::UnsupportedKind(kind.to_string()))
        }
    }

    pub fn all() -> impl Iterator<Item = RootSystemKind> {
        Self::SUPPORTED
            .iter()
            .map(|&(family, rank)| RootSystemKind { family, rank })
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::BadKind(s.to_string())),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::BadKind(s.to_string()))?;
        RootSystemKind::new(family, rank)
    }
}

/// Cartan matrix with `C[i][j] = ⟨α_j, α_i∨⟩`, Bourbaki numbering.
fn cartan_matrix(kind: RootSystemKind) -> Vec<Vec<i32>> {
    let n = kind.rank;
    let mut c = vec![vec![0; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind.family {
        Family::A | Family::B | Family::C => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1)),
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        Family::F => (0..3).for_each(|i| link(i, i + 1)),
        Family::G => link(0, 1),
    }
    match kind.family {
        // last simple root short
        Family::B => c[n - 1][n - 2] = -2,
        // last simple root long
        Family::C => c[n - 2][n - 1] = -2,
        Family::F => c[2][1] = -2,
        Family::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Exact inverse by Gauss-Jordan elimination.
fn invert(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: RootSystemKind,
    pub cartan: Vec<Vec<i32>>,
    /// `d_i = (α_i, α_i)/2`.
    pub symmetrizer: Vec<Rational64>,
    /// Sorted by height; the first `rank` entries are the simple roots in order.
    pub positive_roots: Vec<Vector>,
    pub highest_root: Vector,
    pub fundamental_coweights: Vec<Vector>,
    pub weyl_vector: Vector,
    gram: Vec<Vec<Rational64>>,
    root_points: Vec<LatticePoint>,
    root_lookup: HashMap<LatticePoint, (usize, bool)>,
    /// `coroot_pairing[a][j] = ⟨α_j, β_a∨⟩` for the positive root `β_a`.
    coroot_pairing: Vec<LatticePoint>,
    affine_root: usize,
    weyl: WeylGroup,
}

impl RootSystem {
    pub fn construct(kind: RootSystemKind) -> Result<Self> {
        let kind = RootSystemKind::new(kind.family, kind.rank)?;
        let n = kind.rank;
        let cartan = cartan_matrix(kind);

        let mut d: Vec<Option<Rational64>> = vec![None; n];
        d[0] = Some(Rational64::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].unwrap();
                    d[j] = Some(di * Rational64::new(cartan[i][j] as i64, cartan[j][i] as i64));
                    queue.push_back(j);
                }
            }
        }
        let d: Vec<Rational64> = d
            .into_iter()
            .map(|x| x.expect("Dynkin diagram is connected"))
            .collect();
        let dmax = *d.iter().max().unwrap();
        let symmetrizer: Vec<Rational64> = d.iter().map(|x| x / dmax).collect();
        let gram: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| symmetrizer[i] * Rational64::from_integer(cartan[i][j] as i64))
                    .collect()
            })
            .collect();

        let generators: Vec<IntMatrix> = (0..n)
            .map(|i| {
                let rows: Vec<Vec<i32>> = (0..n)
                    .map(|k| {
                        (0..n)
                            .map(|j| i32::from(k == j) - if k == i { cartan[i][j] } else { 0 })
                            .collect()
                    })
                    .collect();
                IntMatrix::from_rows(&rows)
            })
            .collect();

        // Positive roots: close the simple roots under simple reflections,
        // keeping only images in the positive cone.
        let mut seen: BTreeSet<LatticePoint> = BTreeSet::new();
        let mut queue: VecDeque<LatticePoint> = VecDeque::new();
        for i in 0..n {
            let mut p = [0; MAX_RANK];
            p[i] = 1;
            seen.insert(p);
            queue.push_back(p);
        }
        while let Some(p) = queue.pop_front() {
            for s in &generators {
                let q = s.apply_lattice(&p);
                if q.iter().all(|&c| c >= 0) && seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        let mut root_points: Vec<LatticePoint> = seen.into_iter().collect();
        root_points.sort_by_key(|p| (p.iter().sum::<i32>(), std::cmp::Reverse(*p)));
        let positive_roots: Vec<Vector> = root_points
            .iter()
            .map(|p| Vector::from_lattice(p, n))
            .collect();
        let mut root_lookup = HashMap::new();
        for (a, p) in root_points.iter().enumerate() {
            root_lookup.insert(*p, (a, true));
            root_lookup.insert(p.map(|c| -c), (a, false));
        }
        let highest_root = positive_roots.last().unwrap().clone();

        let cartan_q: Vec<Vec<Rational64>> = cartan
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&c| Rational64::from_integer(c as i64))
                    .collect()
            })
            .collect();
        let inv =
            invert(&cartan_q).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        let fundamental_coweights: Vec<Vector> = (0..n)
            .map(|i| Vector::new((0..n).map(|k| inv[k][i]).collect()))
            .collect();

        let half = Rational64::new(1, 2);
        let weyl_vector = positive_roots
            .iter()
            .fold(Vector::zero(n), |acc, r| &acc + r)
            .scale(half);

        let weyl = WeylGroup::generate(&generators);

        let mut rs = RootSystem {
            kind,
            cartan,
            symmetrizer,
            positive_roots,
            highest_root,
            fundamental_coweights,
            weyl_vector,
            gram,
            root_points,
            root_lookup,
            coroot_pairing: vec![],
            affine_root: 0,
            weyl,
        };
        rs.coroot_pairing = (0..rs.positive_roots.len())
            .map(|a| {
                let mut row = [0; MAX_RANK];
                for (j, r) in row.iter_mut().enumerate().take(n) {
                    let v = rs.coroot_value(&Vector::basis(n, j), a);
                    debug_assert!(v.is_integer());
                    *r = *v.numer() as i32;
                }
                row
            })
            .collect();
        // The root whose coroot is the highest coroot bounds the fundamental
        // alcove: it is the highest short root (the highest root when simply laced).
        rs.affine_root = (0..rs.positive_roots.len())
            .max_by_key(|&a| {
                let h: Rational64 = rs
                    .fundamental_coweights
                    .iter()
                    .map(|w| rs.coroot_value(w, a))
                    .sum();
                h
            })
            .unwrap();
        Ok(rs)
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    /// The invariant form `(x, y)`.
    pub fn form(&self, x: &Vector, y: &Vector) -> Rational64 {
        let n = self.rank();
        let mut acc = Rational64::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += x[i] * y[j] * self.gram[i][j];
            }
        }
        acc
    }

    fn coroot_value(&self, x: &Vector, root: usize) -> Rational64 {
        let a = &self.positive_roots[root];
        Rational64::from_integer(2) * self.form(x, a) / self.form(a, a)
    }

    /// `⟨x, α∨⟩ = 2(x,α)/(α,α)`; `α` must be a root (of either sign).
    pub fn pair_with_coroot(&self, x: &Vector, alpha: &Vector) -> Result<Rational64> {
        self.check_rank(x)?;
        self.root_index(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.clone()))?;
        Ok(Rational64::from_integer(2) * self.form(x, alpha) / self.form(alpha, alpha))
    }

    /// `⟨x, β_a∨⟩` for the positive root with index `a`.
    pub fn pair_positive(&self, x: &Vector, a: usize) -> Rational64 {
        self.coroot_pairing[a][..self.rank()]
            .iter()
            .zip(x.coords())
            .map(|(&c, v)| v * Rational64::from_integer(c as i64))
            .sum()
    }

    /// Integer `⟨p, β_a∨⟩` for a root-lattice point.
    #[inline]
    pub fn pair_lattice(&self, p: &LatticePoint, a: usize) -> i32 {
        let row = &self.coroot_pairing[a];
        row[0] * p[0] + row[1] * p[1] + row[2] * p[2] + row[3] * p[3]
    }

    /// `⟨x, α_i∨⟩` for every simple root.
    pub fn simple_pairings(&self, x: &Vector) -> Vec<Rational64> {
        (0..self.rank())
            .map(|i| {
                self.cartan[i]
                    .iter()
                    .zip(x.coords())
                    .map(|(&c, v)| v * Rational64::from_integer(c as i64))
                    .sum()
            })
            .collect()
    }

    pub fn is_dominant(&self, x: &Vector) -> bool {
        self.simple_pairings(x).iter().all(|c| !c.is_negative())
    }

    /// Converts `⟨x, α_i∨⟩` coordinates to simple-root coordinates.
    pub fn from_coweight_coords(&self, c: &[Rational64]) -> Result<Vector> {
        if c.len() != self.rank() {
            return Err(Error::Rank {
                expected: self.rank(),
                got: c.len(),
            });
        }
        Ok(self
            .fundamental_coweights
            .iter()
            .zip(c)
            .fold(Vector::zero(self.rank()), |acc, (w, k)| &acc + &w.scale(*k)))
    }

    /// Index of `±α` among the positive roots, with `true` for the positive sign.
    pub fn root_index(&self, alpha: &Vector) -> Option<(usize, bool)> {
        alpha
            .to_lattice()
            .filter(|_| alpha.rank() == self.rank())
            .and_then(|p| self.root_lookup.get(&p).copied())
    }

    pub(crate) fn root_index_lattice(&self, p: &LatticePoint) -> Option<(usize, bool)> {
        self.root_lookup.get(p).copied()
    }

    pub fn root_point(&self, a: usize) -> &LatticePoint {
        &self.root_points[a]
    }

    pub fn simple_root(&self, i: usize) -> Vector {
        Vector::basis(self.rank(), i)
    }

    /// Index of the positive root whose coroot is the highest coroot; it
    /// defines the affine wall `⟨x, θ∨⟩ = 1` of the fundamental alcove.
    pub fn affine_root_index(&self) -> usize {
        self.affine_root
    }

    pub fn affine_root(&self) -> &Vector {
        &self.positive_roots[self.affine_root]
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        self.weyl.elements()
    }

    pub fn reflect_simple(&self, x: &Vector, i: usize) -> Vector {
        let k = self.simple_pairings(x)[i];
        let mut c = x.coords().to_vec();
        c[i] -= k;
        Vector::new(c)
    }

    /// Smallest W-stable set containing `v`.
    pub fn weyl_orbit(&self, v: &Vector) -> BTreeSet<Vector> {
        let mut seen = BTreeSet::from([v.clone()]);
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                let y = self.reflect_simple(&x, i);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// The dominant element `v⁺` of `W.v` together with `w ∈ W` such that `w·v = v⁺`.
    pub fn dominant_rep(&self, v: &Vector) -> (Vector, &WeylElement) {
        let mut x = v.clone();
        let mut w = 0usize;
        loop {
            let pairings = self.simple_pairings(&x);
            match pairings.iter().position(|c| c.is_negative()) {
                Some(i) => {
                    x = self.reflect_simple(&x, i);
                    // x_new = s_i·x_old, so the accumulated element is s_i·w.
                    let m = self
                        .weyl
                        .get(self.weyl.mul_generator(0, i))
                        .matrix
                        .mul(&self.weyl.get(w).matrix);
                    w = self.weyl.index_of(&m).expect("closed group");
                }
                None => return (x, self.weyl.get(w)),
            }
        }
    }

    fn check_rank(&self, x: &Vector) -> Result<()> {
        if x.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::Rank {
                expected: self.rank(),
                got: x.rank(),
            })
        }
    }

    pub(crate) fn ensure_rank(&self, x: &Vector) -> Result<()> {
        self.check_rank(x)
    }
}
