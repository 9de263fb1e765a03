//! The alcove model of the affine Coxeter complex.
//!
//! An alcove is `w·fa` for a unique element `w = (linear, translation)` of the
//! affine Weyl group `W ⋉ Q(R)`, acting by `x ↦ linear(x) + translation`.
//! Generator `0` is the affine reflection `s_0: x ↦ x − (⟨x,θ∨⟩ − 1)θ`,
//! generators `1..=rank` are the simple reflections. Crossing the panel of
//! cotype `g` is right multiplication by `s_g`, so panel cotypes and vertex
//! labels are global.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_rational::Rational64;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::galleries::{Gallery, GalleryType, Move};
use crate::root_system::RootSystem;
use crate::vector::{LatticePoint, Vector, MAX_RANK};
use crate::weyl::IntMatrix;

/// Largest number of positive roots among the supported kinds (F4).
pub const MAX_POSITIVE_ROOTS: usize = 24;

/// `H_{α,k} = {x : ⟨x, α∨⟩ = k}` with `α` a positive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineHyperplane {
    /// Index into `positive_roots`.
    pub root: usize,
    pub level: i32,
}

impl AffineHyperplane {
    /// Normalizes `H_{±β_a, k}` to a positive root.
    pub fn new(root: usize, positive: bool, level: i32) -> Self {
        if positive {
            AffineHyperplane { root, level }
        } else {
            AffineHyperplane {
                root,
                level: -level,
            }
        }
    }
}

impl fmt::Display for AffineHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(root#{}, {})", self.root, self.level)
    }
}

/// `x ↦ linear(x) + translation` with `translation ∈ Q(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    /// Index into the root system's Weyl group table.
    pub linear: usize,
    pub translation: LatticePoint,
}

impl AffineWeylElement {
    pub const IDENTITY: AffineWeylElement = AffineWeylElement {
        linear: 0,
        translation: [0; MAX_RANK],
    };
}

/// `element·fa`, identified by its level vector: `k_α < ⟨p, α∨⟩ < k_α + 1`
/// for interior points `p`.
#[derive(Clone, Copy, Debug)]
pub struct Alcove {
    element: AffineWeylElement,
    levels: [i32; MAX_POSITIVE_ROOTS],
    n_pos: u8,
}

impl Alcove {
    pub fn element(&self) -> &AffineWeylElement {
        &self.element
    }

    pub fn levels(&self) -> &[i32] {
        &self.levels[..self.n_pos as usize]
    }

    /// The type-0 vertex, i.e. the translation part.
    pub fn origin_vertex(&self) -> &LatticePoint {
        &self.element.translation
    }
}

impl PartialEq for Alcove {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
    }
}
impl Eq for Alcove {}
impl Hash for Alcove {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.levels().hash(state)
    }
}
impl PartialOrd for Alcove {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Alcove {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.levels.cmp(&other.levels)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexType(pub u8);

/// A codimension-one face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Panel {
    /// Sorted.
    pub vertices: Vec<Vector>,
    pub support: AffineHyperplane,
    /// Cotype: the generator whose reflection fixes this panel.
    pub ptype: usize,
}

/// Precomputed tables for one root system.
#[derive(Debug)]
pub struct AffineComplex {
    rs: RootSystem,
    /// `[w]` = index of `w·s_θ`.
    theta_reflect: Vec<usize>,
    /// `[w]` = `w(θ)`.
    theta_image: Vec<LatticePoint>,
    /// `[w][g]` = `±β_a` for `w(α_g)` (or `w(θ)` when `g = 0`).
    wall_root: Vec<Vec<(u8, bool)>>,
    /// `[w][a]` = level of `w·fa` at `β_a`.
    base_levels: Vec<[i32; MAX_POSITIVE_ROOTS]>,
    /// `[a][w]` = index of `s_{β_a}·w`.
    reflect_left: Vec<Vec<usize>>,
    fa_vertices: Vec<Vector>,
}

impl AffineComplex {
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.rank();
        let n_pos = rs.positive_roots.len();
        assert!(n_pos <= MAX_POSITIVE_ROOTS && n <= MAX_RANK);
        let weyl = rs.weyl();
        let theta = rs.affine_root_index();
        let theta_pt = *rs.root_point(theta);

        let reflection_matrix = |a: usize| {
            let beta = rs.root_point(a);
            let rows: Vec<Vec<i32>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| i32::from(i == j) - beta[i] * rs.pair_lattice(&unit(j), a))
                        .collect()
                })
                .collect();
            IntMatrix::from_rows(&rows)
        };
        let reflections: Vec<IntMatrix> = (0..n_pos).map(reflection_matrix).collect();
        let theta_reflect = weyl
            .elements()
            .iter()
            .map(|e| {
                weyl.index_of(&e.matrix.mul(&reflections[theta]))
                    .expect("closed group")
            })
            .collect();
        let reflect_left = reflections
            .iter()
            .map(|s| {
                weyl.elements()
                    .iter()
                    .map(|e| weyl.index_of(&s.mul(&e.matrix)).expect("closed group"))
                    .collect()
            })
            .collect();
        let theta_image: Vec<LatticePoint> = weyl
            .elements()
            .iter()
            .map(|e| e.matrix.apply_lattice(&theta_pt))
            .collect();
        let wall_root = weyl
            .elements()
            .iter()
            .enumerate()
            .map(|(w, e)| {
                (0..=n)
                    .map(|g| {
                        let img = if g == 0 {
                            theta_image[w]
                        } else {
                            e.matrix.apply_lattice(&unit(g - 1))
                        };
                        let (a, pos) = rs
                            .root_index_lattice(&img)
                            .expect("Weyl group permutes roots");
                        (a as u8, pos)
                    })
                    .collect()
            })
            .collect();
        let base_levels = (0..weyl.len())
            .map(|w| {
                let inv = weyl.get(weyl.inverse(w));
                let mut lv = [0; MAX_POSITIVE_ROOTS];
                for (a, l) in lv.iter_mut().enumerate().take(n_pos) {
                    let pre = inv.matrix.apply_lattice(rs.root_point(a));
                    if pre.iter().any(|&c| c < 0) {
                        *l = -1;
                    }
                }
                lv
            })
            .collect();

        let theta_v = rs.affine_root().clone();
        let mut fa_vertices = vec![Vector::zero(n)];
        for w in &rs.fundamental_coweights {
            let m = rs.pair_with_coroot(w, &theta_v).expect("θ is a root");
            fa_vertices.push(w.scale(Rational64::one() / m));
        }

        AffineComplex {
            rs,
            theta_reflect,
            theta_image,
            wall_root,
            base_levels,
            reflect_left,
            fa_vertices,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Number of Coxeter generators `s_0, …, s_rank`.
    pub fn n_generators(&self) -> usize {
        self.rank() + 1
    }

    /// Vertices of `fa`, indexed by type.
    pub fn fundamental_vertices(&self) -> &[Vector] {
        &self.fa_vertices
    }

    pub fn alcove(&self, element: AffineWeylElement) -> Alcove {
        let n_pos = self.rs.positive_roots.len();
        let mut levels = self.base_levels[element.linear];
        for (a, l) in levels.iter_mut().enumerate().take(n_pos) {
            *l += self.rs.pair_lattice(&element.translation, a);
        }
        Alcove {
            element,
            levels,
            n_pos: n_pos as u8,
        }
    }

    pub fn fundamental_alcove(&self) -> Alcove {
        self.alcove(AffineWeylElement::IDENTITY)
    }

    /// `element·s_g`.
    #[inline]
    pub fn cross_element(&self, e: &AffineWeylElement, g: usize) -> AffineWeylElement {
        if g == 0 {
            let th = &self.theta_image[e.linear];
            let mut translation = e.translation;
            for i in 0..MAX_RANK {
                translation[i] += th[i];
            }
            AffineWeylElement {
                linear: self.theta_reflect[e.linear],
                translation,
            }
        } else {
            AffineWeylElement {
                linear: self.rs.weyl().mul_generator(e.linear, g - 1),
                translation: e.translation,
            }
        }
    }

    /// The other alcove through the panel of cotype `g`.
    pub fn cross(&self, a: &Alcove, g: usize) -> Alcove {
        self.alcove(self.cross_element(&a.element, g))
    }

    /// Support of the panel of cotype `g`, from the tables.
    #[inline]
    pub fn wall_of_element(&self, e: &AffineWeylElement, g: usize) -> AffineHyperplane {
        let (a, pos) = self.wall_root[e.linear][g];
        let a = a as usize;
        let mut level = self.rs.pair_lattice(&e.translation, a);
        if g == 0 {
            level += if pos { 1 } else { -1 };
        }
        AffineHyperplane { root: a, level }
    }

    pub fn wall(&self, a: &Alcove, g: usize) -> AffineHyperplane {
        self.wall_of_element(&a.element, g)
    }

    /// Whether the panel of cotype `g` separates the alcove from `Cfm`.
    /// Depends only on the linear part.
    #[inline]
    pub fn wall_is_positive(&self, linear: usize, g: usize) -> bool {
        let (_, pos) = self.wall_root[linear][g];
        if g == 0 {
            !pos
        } else {
            pos
        }
    }

    /// Vertex of type `j`.
    pub fn vertex(&self, a: &Alcove, j: usize) -> Vector {
        let e = &a.element;
        let moved = self.rs.weyl().get(e.linear).apply(&self.fa_vertices[j]);
        &moved + &Vector::from_lattice(&e.translation, self.rank())
    }

    pub fn vertices(&self, a: &Alcove) -> Vec<Vector> {
        (0..self.n_generators())
            .map(|j| self.vertex(a, j))
            .collect()
    }

    pub fn barycenter(&self, a: &Alcove) -> Vector {
        let sum = self
            .vertices(a)
            .iter()
            .fold(Vector::zero(self.rank()), |acc, v| &acc + v);
        sum.scale(Rational64::new(1, self.n_generators() as i64))
    }

    /// Levels recomputed from the barycenter, independently of the tables.
    pub fn levels_from_barycenter(&self, a: &Alcove) -> Vec<i32> {
        let b = self.barycenter(a);
        (0..self.rs.positive_roots.len())
            .map(|r| self.rs.pair_positive(&b, r).floor().to_integer() as i32)
            .collect()
    }

    /// Recovers the alcove with the given level vector, if there is one.
    pub fn alcove_from_levels(&self, levels: &[i32]) -> Option<Alcove> {
        let n = self.rank();
        if levels.len() != self.rs.positive_roots.len() {
            return None;
        }
        (0..self.rs.weyl().len()).find_map(|w| {
            // Simple-root levels fix ⟨t, α_i∨⟩, hence t.
            let pairings: Vec<Rational64> = (0..n)
                .map(|i| Rational64::from_integer((levels[i] - self.base_levels[w][i]) as i64))
                .collect();
            let t = self.rs.from_coweight_coords(&pairings).ok()?.to_lattice()?;
            let a = self.alcove(AffineWeylElement {
                linear: w,
                translation: t,
            });
            (a.levels() == levels).then_some(a)
        })
    }

    /// The shared face of `a` and `cross(a, g)`, with its support found by
    /// searching for the hyperplane through all of its vertices.
    pub fn panel_of(&self, a: &Alcove, g: usize) -> Result<Panel> {
        let mut vertices: Vec<Vector> = (0..self.n_generators())
            .filter(|&j| j != g)
            .map(|j| self.vertex(a, j))
            .collect();
        vertices.sort();
        let support = (0..self.rs.positive_roots.len())
            .find_map(|r| {
                let k = self.rs.pair_positive(&vertices[0], r);
                let on_all = vertices.iter().all(|v| self.rs.pair_positive(v, r) == k);
                (on_all && k.is_integer()).then(|| AffineHyperplane {
                    root: r,
                    level: k.to_integer() as i32,
                })
            })
            .ok_or_else(|| {
                Error::Internal(format!(
                    "no wall through panel {g} of alcove {:?}",
                    a.levels()
                ))
            })?;
        Ok(Panel {
            vertices,
            support,
            ptype: g,
        })
    }

    /// True iff `a` lies on the side `⟨x, α∨⟩ > k`, the side away from `Cfm`.
    pub fn separates(&self, h: &AffineHyperplane, a: &Alcove) -> bool {
        a.levels[h.root] >= h.level
    }

    /// Reduces `v` into `fa`; returns the reduced point and the generators
    /// applied, in order.
    fn reduce_into_fundamental(&self, v: &Vector) -> (Vector, Vec<usize>) {
        let theta = self.rs.affine_root();
        let theta_idx = self.rs.affine_root_index();
        let mut x = v.clone();
        let mut applied = Vec::new();
        loop {
            if let Some(i) = self
                .rs
                .simple_pairings(&x)
                .iter()
                .position(|c| c.is_negative())
            {
                x = self.rs.reflect_simple(&x, i);
                applied.push(i + 1);
                continue;
            }
            let k = self.rs.pair_positive(&x, theta_idx);
            if k > Rational64::one() {
                x = &x - &theta.scale(k - Rational64::one());
                applied.push(0);
                continue;
            }
            return (x, applied);
        }
    }

    pub fn vertex_type(&self, v: &Vector) -> Result<VertexType> {
        self.rs.ensure_rank(v)?;
        let (x, _) = self.reduce_into_fundamental(v);
        self.fa_vertices
            .iter()
            .position(|u| *u == x)
            .map(|j| VertexType(j as u8))
            .ok_or_else(|| Error::NotAVertex(v.clone()))
    }

    /// Star of a vertex.
    pub fn alcoves_containing(&self, v: &Vector) -> Result<BTreeSet<Alcove>> {
        Ok(self
            .star_elements(v)?
            .into_iter()
            .map(|e| self.alcove(e))
            .collect())
    }

    fn star_elements(&self, v: &Vector) -> Result<Vec<AffineWeylElement>> {
        self.rs.ensure_rank(v)?;
        let (x, applied) = self.reduce_into_fundamental(v);
        let j = self
            .fa_vertices
            .iter()
            .position(|u| *u == x)
            .ok_or_else(|| Error::NotAVertex(v.clone()))?;
        let start = applied.iter().fold(AffineWeylElement::IDENTITY, |e, &g| {
            self.cross_element(&e, g)
        });
        // Panels of cotype ≠ j contain the type-j vertex.
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            for g in (0..self.n_generators()).filter(|&g| g != j) {
                let f = self.cross_element(&e, g);
                if seen.insert(f) {
                    queue.push_back(f);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by_key(|e| self.alcove(*e));
        Ok(out)
    }

    /// Breadth-first search from the star of `a` to the star of `b`.
    /// Returns the crossing sequence (first alcove, generators) of one
    /// shortest path, ties broken by canonical alcove order and generator index.
    fn shortest_path(&self, a: &Vector, b: &Vector) -> Result<(AffineWeylElement, Vec<usize>)> {
        let sources = self.star_elements(a)?;
        let targets: HashSet<AffineWeylElement> = self.star_elements(b)?.into_iter().collect();
        let mut parent: HashMap<AffineWeylElement, Option<(AffineWeylElement, usize)>> =
            HashMap::new();
        let mut queue = VecDeque::new();
        for s in &sources {
            parent.insert(*s, None);
            queue.push_back(*s);
        }
        while let Some(e) = queue.pop_front() {
            if targets.contains(&e) {
                let mut gens = Vec::new();
                let mut cur = e;
                while let Some(Some((prev, g))) = parent.get(&cur) {
                    gens.push(*g);
                    cur = *prev;
                }
                gens.reverse();
                return Ok((cur, gens));
            }
            for g in 0..self.n_generators() {
                let f = self.cross_element(&e, g);
                parent.entry(f).or_insert_with(|| {
                    queue.push_back(f);
                    Some((e, g))
                });
            }
        }
        Err(Error::Internal("alcove graph is connected".into()))
    }

    /// `δ(a, b)`: number of alcoves in a shortest gallery with `a` in the
    /// first and `b` in the last alcove. `δ(v, v) = 1`.
    pub fn gallery_distance(&self, a: &Vector, b: &Vector) -> Result<usize> {
        Ok(self.shortest_path(a, b)?.1.len() + 1)
    }

    /// A shortest gallery `0 ⇝ x` for a type-0 vertex `x`. For `x = 0` this
    /// is the degenerate gallery with no alcoves.
    pub fn minimal_gallery(&self, x: &Vector) -> Result<Gallery> {
        let origin = Vector::zero(self.rank());
        if self.vertex_type(x)? != VertexType(0) {
            return Err(Error::NotTypeZero(x.clone()));
        }
        if x.is_zero() {
            return Ok(Gallery::degenerate(origin));
        }
        let (first, gens) = self.shortest_path(&origin, x)?;
        let t = GalleryType {
            source_type: VertexType(0),
            panel_types: gens,
            target_type: VertexType(0),
        };
        let moves = vec![Move::Cross; t.panel_types.len()];
        self.build_gallery(&origin, self.alcove(first), &t, &moves)
    }

    /// Up to `limit` distinct types of minimal galleries `0 ⇝ x`, in a
    /// deterministic order; the first is the type of [`Self::minimal_gallery`].
    pub fn minimal_gallery_types(&self, x: &Vector, limit: usize) -> Result<Vec<GalleryType>> {
        let first = self.minimal_gallery(x)?;
        let first_type = self.gallery_type(&first)?;
        if x.is_zero() || limit <= 1 {
            return Ok(vec![first_type]);
        }
        let origin = Vector::zero(self.rank());
        let sources = self.star_elements(&origin)?;
        let targets: HashSet<AffineWeylElement> = self.star_elements(x)?.into_iter().collect();
        let steps = first_type.panel_types.len();

        // Distances from the source star, up to the target layer.
        let mut dist: HashMap<AffineWeylElement, usize> = sources.iter().map(|s| (*s, 0)).collect();
        let mut frontier = sources.clone();
        for d in 1..=steps {
            let mut next = Vec::new();
            for e in &frontier {
                for g in 0..self.n_generators() {
                    let f = self.cross_element(e, g);
                    if let std::collections::hash_map::Entry::Vacant(v) = dist.entry(f) {
                        v.insert(d);
                        next.push(f);
                    }
                }
            }
            frontier = next;
        }
        let mut ends: Vec<AffineWeylElement> = targets
            .iter()
            .filter(|e| dist.get(e) == Some(&steps))
            .copied()
            .collect();
        ends.sort_by_key(|e| self.alcove(*e));

        let mut search = TypeSearch {
            cx: self,
            dist: &dist,
            path: Vec::new(),
            found: vec![first_type.clone()],
            limit,
            budget: 200_000,
        };
        for e in ends {
            search.back(e, steps);
        }
        Ok(search.found)
    }

    /// Left action of the reflection across `h` on an alcove.
    pub fn reflect_alcove(&self, h: &AffineHyperplane, a: &Alcove) -> Alcove {
        let e = &a.element;
        let beta = self.rs.root_point(h.root);
        let shift = h.level - self.rs.pair_lattice(&e.translation, h.root);
        let mut translation = e.translation;
        for i in 0..MAX_RANK {
            translation[i] += shift * beta[i];
        }
        self.alcove(AffineWeylElement {
            linear: self.reflect_left[h.root][e.linear],
            translation,
        })
    }

    pub fn reflect_point(&self, h: &AffineHyperplane, x: &Vector) -> Vector {
        let k = self.rs.pair_positive(x, h.root) - Rational64::from_integer(h.level as i64);
        x - &self.rs.positive_roots[h.root].scale(k)
    }

    /// Image of a point under an affine Weyl group element.
    pub fn act(&self, e: &AffineWeylElement, x: &Vector) -> Vector {
        &self.rs.weyl().get(e.linear).apply(x) + &Vector::from_lattice(&e.translation, self.rank())
    }

    pub fn hyperplane_contains(&self, h: &AffineHyperplane, x: &Vector) -> bool {
        self.rs.pair_positive(x, h.root) == Rational64::from_integer(h.level as i64)
    }
}

fn unit(i: usize) -> LatticePoint {
    let mut p = [0; MAX_RANK];
    p[i] = 1;
    p
}

/// Backward walk along strictly decreasing distance, collecting the generator
/// strings of minimal galleries.
struct TypeSearch<'a> {
    cx: &'a AffineComplex,
    dist: &'a HashMap<AffineWeylElement, usize>,
    path: Vec<usize>,
    found: Vec<GalleryType>,
    limit: usize,
    budget: usize,
}

impl TypeSearch<'_> {
    fn back(&mut self, e: AffineWeylElement, d: usize) {
        if self.found.len() >= self.limit || self.budget == 0 {
            return;
        }
        if d == 0 {
            self.budget -= 1;
            let panel_types: Vec<usize> = self.path.iter().rev().copied().collect();
            if !self.found.iter().any(|t| t.panel_types == panel_types) {
                self.found.push(GalleryType {
                    source_type: VertexType(0),
                    panel_types,
                    target_type: VertexType(0),
                });
            }
            return;
        }
        for g in 0..self.cx.n_generators() {
            let f = self.cx.cross_element(&e, g);
            if self.dist.get(&f) == Some(&(d - 1)) {
                self.path.push(g);
                self.back(f, d - 1);
                self.path.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystemKind;

    fn complex(kind: &str) -> AffineComplex {
        AffineComplex::new(RootSystem::construct(kind.parse().unwrap()).unwrap())
    }

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    /// Alcoves within `radius` crossings of `fa`.
    fn ball(cx: &AffineComplex, radius: usize) -> Vec<Alcove> {
        let mut seen = HashSet::from([cx.fundamental_alcove()]);
        let mut frontier = vec![cx.fundamental_alcove()];
        for _ in 0..radius {
            let mut next = vec![];
            for a in &frontier {
                for g in 0..cx.n_generators() {
                    let b = cx.cross(a, g);
                    if seen.insert(b) {
                        next.push(b);
                    }
                }
            }
            frontier = next;
        }
        let mut v: Vec<_> = seen.into_iter().collect();
        v.sort();
        v
    }

    #[test]
    fn fundamental_alcove_vertices() {
        let a1 = complex("A1");
        assert_eq!(
            a1.fundamental_vertices(),
            &[Vector::zero(1), Vector::new(vec![q(1, 2)])]
        );
        let a2 = complex("A2");
        let rs = a2.root_system();
        assert_eq!(
            a2.fundamental_vertices(),
            &[
                Vector::zero(2),
                rs.fundamental_coweights[0].clone(),
                rs.fundamental_coweights[1].clone()
            ]
        );
        // ⟨ω_i, θ∨⟩ for θ∨ = 2α1∨ + 3α2∨.
        let g2 = complex("G2");
        let w = &g2.root_system().fundamental_coweights;
        assert_eq!(g2.fundamental_vertices()[1], w[0].scale(q(1, 2)));
        assert_eq!(g2.fundamental_vertices()[2], w[1].scale(q(1, 3)));
    }

    #[test]
    fn fundamental_alcove_is_an_alcove() {
        for kind in RootSystemKind::all() {
            let cx = AffineComplex::new(RootSystem::construct(kind).unwrap());
            let fa = cx.fundamental_alcove();
            assert!(fa.levels().iter().all(|&l| l == 0), "{kind}");
            assert_eq!(
                cx.levels_from_barycenter(&fa),
                fa.levels().to_vec(),
                "{kind}"
            );
            // Every vertex lies on the closed alcove.
            for v in cx.fundamental_vertices() {
                for r in 0..cx.root_system().positive_roots.len() {
                    let k = cx.root_system().pair_positive(v, r);
                    assert!(k >= q(0, 1) && k <= q(1, 1), "{kind}");
                }
            }
        }
    }

    #[test]
    fn cross_examples() {
        let cx = complex("A2");
        let fa = cx.fundamental_alcove();
        for i in 1..=2 {
            let b = cx.cross(&fa, i);
            assert_eq!(b.levels()[i - 1], -1);
            assert_eq!(cx.levels_from_barycenter(&b), b.levels().to_vec());
        }
        for g in 0..3 {
            assert_eq!(cx.cross(&cx.cross(&fa, g), g), fa);
        }
        let a1 = complex("A1");
        assert_eq!(a1.cross(&a1.fundamental_alcove(), 0).levels(), &[1]);
    }

    #[test]
    fn panel_examples() {
        let cx = complex("A2");
        let fa = cx.fundamental_alcove();
        let theta = cx.root_system().affine_root_index();
        assert_eq!(
            cx.panel_of(&fa, 0).unwrap().support,
            AffineHyperplane {
                root: theta,
                level: 1
            }
        );
        for i in 1..=2 {
            assert_eq!(
                cx.panel_of(&fa, i).unwrap().support,
                AffineHyperplane {
                    root: i - 1,
                    level: 0
                }
            );
        }
        // Rank 1, alcove u ∈ (1,2): the cotype-1 panel omits the type-1 vertex u = 1.
        let a1 = complex("A1");
        let b = a1.cross(&a1.fundamental_alcove(), 0);
        let p = a1.panel_of(&b, 1).unwrap();
        assert_eq!(p.support, AffineHyperplane { root: 0, level: 2 });
        assert_eq!(a1.vertex_type(&p.vertices[0]).unwrap(), VertexType(0));
        assert_eq!(
            a1.vertex_type(&Vector::new(vec![q(1, 2)])).unwrap(),
            VertexType(1)
        );
    }

    #[test]
    fn vertex_type_examples() {
        let cx = complex("A2");
        assert_eq!(cx.vertex_type(&Vector::zero(2)).unwrap(), VertexType(0));
        assert_eq!(
            cx.vertex_type(&Vector::from_ints(&[5, -3])).unwrap(),
            VertexType(0)
        );
        let w1 = cx.root_system().fundamental_coweights[0].clone();
        assert_eq!(cx.vertex_type(&w1).unwrap(), VertexType(1));
        assert_eq!(
            cx.vertex_type(&(&w1 + &Vector::from_ints(&[-2, 1])))
                .unwrap(),
            VertexType(1)
        );
        let half = Vector::new(vec![q(1, 2), q(0, 1)]);
        assert_eq!(cx.vertex_type(&half), Err(Error::NotAVertex(half)));
    }

    #[test]
    fn separation_examples() {
        let cx = complex("A2");
        let fa = cx.fundamental_alcove();
        let theta = cx.root_system().affine_root_index();
        assert!(cx.separates(&AffineHyperplane { root: 0, level: 0 }, &fa));
        assert!(!cx.separates(&AffineHyperplane { root: 0, level: 1 }, &fa));
        assert!(cx.separates(
            &AffineHyperplane {
                root: theta,
                level: 1
            },
            &cx.cross(&fa, 0)
        ));
    }

    #[test]
    fn stars_of_vertices() {
        assert_eq!(
            complex("A2")
                .alcoves_containing(&Vector::zero(2))
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            complex("A1")
                .alcoves_containing(&Vector::zero(1))
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            complex("G2")
                .alcoves_containing(&Vector::zero(2))
                .unwrap()
                .len(),
            12
        );
        for kind in RootSystemKind::all() {
            let cx = AffineComplex::new(RootSystem::construct(kind).unwrap());
            let n = cx.root_system().weyl_group().len();
            let origin = Vector::zero(cx.rank());
            let star = cx.alcoves_containing(&origin).unwrap();
            assert_eq!(star.len(), n, "{kind}");
            assert!(star.iter().all(|a| a.origin_vertex() == &[0; MAX_RANK]));
            // Every alcove containing a non-special vertex really contains it.
            let v = cx.fundamental_vertices()[cx.rank()].clone();
            for a in cx.alcoves_containing(&v).unwrap() {
                assert!(cx.vertices(&a).contains(&v), "{kind}");
            }
        }
    }

    #[test]
    fn minimal_gallery_examples() {
        let a1 = complex("A1");
        let g = a1.minimal_gallery(&Vector::from_ints(&[1])).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.first.unwrap().levels(), &[0]);
        assert_eq!(g.steps[0].wall, AffineHyperplane { root: 0, level: 1 });
        assert_eq!(g.steps[0].alcove.levels(), &[1]);

        let a2 = complex("A2");
        assert_eq!(a2.minimal_gallery(&Vector::zero(2)).unwrap().len(), 0);
        let x = Vector::from_ints(&[3, 3]);
        let g = a2.minimal_gallery(&x).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(g.target, x);
        a2.validate(&g).unwrap();
        assert_eq!(g.stutter_indices().count(), 0);
        let w1 = a2.root_system().fundamental_coweights[0].clone();
        assert_eq!(a2.minimal_gallery(&w1), Err(Error::NotTypeZero(w1)));
    }

    #[test]
    fn distance_examples() {
        let cx = complex("A2");
        let o = Vector::zero(2);
        assert_eq!(cx.gallery_distance(&o, &o).unwrap(), 1);
        assert_eq!(
            cx.gallery_distance(&o, &Vector::from_ints(&[3, 3]))
                .unwrap(),
            10
        );
        assert_eq!(
            cx.gallery_distance(&o, &Vector::from_ints(&[4, 2]))
                .unwrap(),
            11
        );
    }

    #[test]
    fn canonical_forms_within_ball() {
        for kind in ["A1", "A2", "B2", "G2", "C2"] {
            let cx = complex(kind);
            for a in ball(&cx, 8) {
                assert_eq!(cx.levels_from_barycenter(&a), a.levels().to_vec(), "{kind}");
                assert_eq!(cx.alcove_from_levels(a.levels()), Some(a));
                assert_eq!(
                    *cx.alcove_from_levels(a.levels()).unwrap().element(),
                    *a.element()
                );
            }
        }
    }

    #[test]
    fn wall_tables_agree_with_geometry() {
        for kind in ["A2", "B2", "C2", "G2", "A3"] {
            let cx = complex(kind);
            for a in ball(&cx, 5) {
                for g in 0..cx.n_generators() {
                    let panel = cx.panel_of(&a, g).unwrap();
                    assert_eq!(panel.support, cx.wall(&a, g), "{kind}");
                    assert_eq!(cx.panel_of(&cx.cross(&a, g), g).unwrap(), panel, "{kind}");
                    assert_eq!(
                        cx.wall_is_positive(a.element().linear, g),
                        cx.separates(&panel.support, &a)
                    );
                    assert_eq!(cx.reflect_alcove(&panel.support, &a), cx.cross(&a, g));
                }
            }
        }
    }

    #[test]
    fn reflection_of_alcove_moves_vertices() {
        let cx = complex("G2");
        let h = AffineHyperplane { root: 4, level: -2 };
        for a in ball(&cx, 4) {
            let b = cx.reflect_alcove(&h, &a);
            let mut moved: Vec<Vector> = cx
                .vertices(&a)
                .iter()
                .map(|v| cx.reflect_point(&h, v))
                .collect();
            moved.sort();
            let mut got = cx.vertices(&b);
            got.sort();
            assert_eq!(moved, got);
        }
    }

    #[test]
    fn minimal_gallery_types_are_minimal() {
        let cx = complex("A2");
        let x = Vector::from_ints(&[3, 3]);
        let types = cx.minimal_gallery_types(&x, 4).unwrap();
        assert!(types.len() >= 3);
        let d = cx.gallery_distance(&Vector::zero(2), &x).unwrap();
        for t in &types {
            assert_eq!(t.panel_types.len() + 1, d);
        }
        let distinct: HashSet<_> = types.iter().collect();
        assert_eq!(distinct.len(), types.len());
    }
}
