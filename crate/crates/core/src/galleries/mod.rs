//! Combinatorial galleries in the apartment, positive folding, and the
//! unfold/refold construction.
//!
//! A gallery `(c_0', c_0, c_1', c_1, …, c_n, c_{n+1}')` is stored as its
//! source vertex, first alcove, the `n` steps `(c_i', c_i)`, and its target.
//! Step indices are 1-based throughout, so step `i` is `steps[i - 1]`.

mod enumerate;
mod text;

pub use enumerate::{
    brute_force_positively_folded, enumerate_positively_folded, for_each_positively_folded,
    positively_folded_endpoints, EnumerationStats,
};
pub use text::GalleryRecord;

use crate::affine_coxeter::{AffineComplex, AffineHyperplane, Alcove, VertexType};
use crate::error::{Error, Result};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Cross,
    Fold,
}

impl Move {
    pub fn symbol(self) -> char {
        match self {
            Move::Cross => 'C',
            Move::Fold => 'F',
        }
    }
}

/// The panel `c_i'` (by cotype and support) and the alcove `c_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub panel_type: usize,
    pub wall: AffineHyperplane,
    pub alcove: Alcove,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gallery {
    pub source: Vector,
    /// `None` only for the degenerate gallery with no alcoves.
    pub first: Option<Alcove>,
    pub steps: Vec<Step>,
    pub target: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GalleryType {
    pub source_type: VertexType,
    pub panel_types: Vec<usize>,
    pub target_type: VertexType,
}

impl GalleryType {
    /// Number of alcoves of a gallery of this type (0 for the degenerate type
    /// with no panels and equal endpoints).
    pub fn is_degenerate(&self) -> bool {
        self.panel_types.is_empty() && self.source_type == self.target_type
    }
}

/// Ordered `(step index, wall)` pairs. Each wall is the support of the panel
/// at that step in the gallery as it stands when the entry is applied, which
/// is also the wall of that stutter in the folded result.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FoldScript {
    pub entries: Vec<(usize, AffineHyperplane)>,
}

impl FoldScript {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Gallery {
    pub fn degenerate(source: Vector) -> Self {
        Gallery {
            target: source.clone(),
            source,
            first: None,
            steps: vec![],
        }
    }

    /// Number of alcoves.
    pub fn len(&self) -> usize {
        if self.first.is_some() {
            self.steps.len() + 1
        } else {
            0
        }
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_none()
    }

    /// Alcove `c_i`, `0 ≤ i ≤ n`.
    pub fn alcove(&self, i: usize) -> &Alcove {
        if i == 0 {
            self.first.as_ref().expect("non-degenerate gallery")
        } else {
            &self.steps[i - 1].alcove
        }
    }

    pub fn last_alcove(&self) -> Option<&Alcove> {
        self.steps.last().map(|s| &s.alcove).or(self.first.as_ref())
    }

    /// Whether `c_i = c_{i-1}`.
    pub fn stutters_at(&self, i: usize) -> bool {
        self.alcove(i) == self.alcove(i - 1)
    }

    pub fn stutter_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.steps.len()).filter(|&i| self.stutters_at(i))
    }

    pub fn moves(&self) -> Vec<Move> {
        (1..=self.steps.len())
            .map(|i| {
                if self.stutters_at(i) {
                    Move::Fold
                } else {
                    Move::Cross
                }
            })
            .collect()
    }
}

impl AffineComplex {
    /// Walks from `first` along `t`, crossing or staying as `moves` dictates.
    pub fn build_gallery(
        &self,
        source: &Vector,
        first: Alcove,
        t: &GalleryType,
        moves: &[Move],
    ) -> Result<Gallery> {
        if moves.len() != t.panel_types.len() {
            return Err(Error::MalformedGallery(format!(
                "{} moves for {} panels",
                moves.len(),
                t.panel_types.len()
            )));
        }
        if let Some(&g) = t.panel_types.iter().find(|&&g| g >= self.n_generators()) {
            return Err(Error::MalformedGallery(format!(
                "panel type {g} out of range"
            )));
        }
        let mut cur = first;
        let mut steps = Vec::with_capacity(moves.len());
        for (&g, &m) in t.panel_types.iter().zip(moves) {
            let wall = self.wall(&cur, g);
            if m == Move::Cross {
                cur = self.cross(&cur, g);
            }
            steps.push(Step {
                panel_type: g,
                wall,
                alcove: cur,
            });
        }
        let target = self.vertex(&cur, t.target_type.0 as usize);
        Ok(Gallery {
            source: source.clone(),
            first: Some(first),
            steps,
            target,
        })
    }

    pub fn gallery_type(&self, g: &Gallery) -> Result<GalleryType> {
        Ok(GalleryType {
            source_type: self.vertex_type(&g.source)?,
            panel_types: g.steps.iter().map(|s| s.panel_type).collect(),
            target_type: self.vertex_type(&g.target)?,
        })
    }

    /// Checks the structural invariants of a gallery.
    pub fn validate(&self, g: &Gallery) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedGallery(msg));
        let Some(first) = g.first else {
            if !g.steps.is_empty() || g.source != g.target {
                return bad("degenerate gallery with steps or distinct endpoints".into());
            }
            return Ok(());
        };
        if !self.vertices(&first).contains(&g.source) {
            return bad("source is not a vertex of the first alcove".into());
        }
        let mut prev = first;
        for (k, step) in g.steps.iter().enumerate() {
            let panel = self.panel_of(&prev, step.panel_type)?;
            if panel.support != step.wall {
                return bad(format!("step {}: wall does not support the panel", k + 1));
            }
            let crossed = self.cross(&prev, step.panel_type);
            if step.alcove != prev && step.alcove != crossed {
                return bad(format!(
                    "step {}: alcove is not adjacent through the panel",
                    k + 1
                ));
            }
            if self.panel_of(&step.alcove, step.panel_type)?.vertices != panel.vertices {
                return bad(format!(
                    "step {}: panel is not a face of the next alcove",
                    k + 1
                ));
            }
            prev = step.alcove;
        }
        if !self.vertices(&prev).contains(&g.target) {
            return bad("target is not a vertex of the last alcove".into());
        }
        Ok(())
    }

    /// First stutter index at which the fold is not positive, if any.
    pub fn first_negative_fold(&self, g: &Gallery) -> Option<usize> {
        g.stutter_indices().find(|&i| {
            let step = &g.steps[i - 1];
            !self.separates(&step.wall, &step.alcove)
        })
    }

    pub fn is_positively_folded(&self, g: &Gallery) -> bool {
        self.first_negative_fold(g).is_none()
    }

    /// Reflects alcoves `c_i, …, c_n` (and with them the later panels and
    /// the target) across `h`.
    fn reflect_tail(&self, g: &mut Gallery, i: usize, h: &AffineHyperplane) {
        let mut prev = *g.alcove(i - 1);
        for step in &mut g.steps[i - 1..] {
            step.wall = self.wall(&prev, step.panel_type);
            step.alcove = self.reflect_alcove(h, &step.alcove);
            prev = step.alcove;
        }
        g.target = self.reflect_point(h, &g.target);
    }

    /// Removes every stutter, left to right, by reflecting the remaining tail
    /// across the stutter's wall. Returns the non-stuttering gallery and the
    /// script that folds it back.
    pub fn unfold(&self, g: &Gallery) -> Result<(Gallery, FoldScript)> {
        if let Some(i) = self.first_negative_fold(g) {
            return Err(Error::NegativeFold(i));
        }
        let mut u = g.clone();
        let mut script = FoldScript::default();
        for i in 1..=u.steps.len() {
            if u.stutters_at(i) {
                let current = u.steps[i - 1].wall;
                script.entries.push((i, g.steps[i - 1].wall));
                self.reflect_tail(&mut u, i, &current);
            }
        }
        Ok((u, script))
    }

    /// Folds `g` at each scripted step, in increasing order.
    pub fn apply_fold_script(&self, g: &Gallery, script: &FoldScript) -> Result<Gallery> {
        let mut out = g.clone();
        let mut last = 0;
        for &(i, h) in &script.entries {
            if i <= last || i > out.steps.len() {
                return Err(Error::BadScript(
                    i,
                    "indices must be increasing and within the gallery".into(),
                ));
            }
            last = i;
            if out.stutters_at(i) {
                return Err(Error::BadScript(i, "step is already folded".into()));
            }
            if out.steps[i - 1].wall != h {
                return Err(Error::BadScript(i, format!("panel does not lie on {h}")));
            }
            if !self.separates(&h, out.alcove(i - 1)) {
                return Err(Error::NegativeFold(i));
            }
            self.reflect_tail(&mut out, i, &h);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystem;

    fn complex(kind: &str) -> AffineComplex {
        AffineComplex::new(RootSystem::construct(kind.parse().unwrap()).unwrap())
    }

    fn a1_type() -> GalleryType {
        GalleryType {
            source_type: VertexType(0),
            panel_types: vec![0],
            target_type: VertexType(0),
        }
    }

    /// Alcove `[m, m+1]` in the coordinate `u = ⟨x, α∨⟩`.
    fn a1_alcove(cx: &AffineComplex, m: i32) -> Alcove {
        cx.alcove_from_levels(&[m]).unwrap()
    }

    #[test]
    fn a1_positivity_examples() {
        let cx = complex("A1");
        let o = Vector::zero(1);
        let folded_ok = cx
            .build_gallery(&o, a1_alcove(&cx, -1), &a1_type(), &[Move::Fold])
            .unwrap();
        assert_eq!(folded_ok.steps[0].wall.level, -1);
        assert!(cx.is_positively_folded(&folded_ok));
        let folded_bad = cx
            .build_gallery(&o, a1_alcove(&cx, 0), &a1_type(), &[Move::Fold])
            .unwrap();
        assert_eq!(folded_bad.steps[0].wall.level, 1);
        assert!(!cx.is_positively_folded(&folded_bad));
        assert_eq!(cx.unfold(&folded_bad), Err(Error::NegativeFold(1)));
        let straight = cx
            .build_gallery(&o, a1_alcove(&cx, 0), &a1_type(), &[Move::Cross])
            .unwrap();
        assert!(cx.is_positively_folded(&straight));
    }

    #[test]
    fn a1_unfold_example() {
        let cx = complex("A1");
        let o = Vector::zero(1);
        let g = cx
            .build_gallery(&o, a1_alcove(&cx, -1), &a1_type(), &[Move::Fold])
            .unwrap();
        assert_eq!(g.target, o);
        let (u, script) = cx.unfold(&g).unwrap();
        assert_eq!(u.target, Vector::from_ints(&[-1]));
        assert_eq!(u.stutter_indices().count(), 0);
        assert_eq!(
            script.entries,
            vec![(1, AffineHyperplane { root: 0, level: -1 })]
        );
        assert_eq!(cx.apply_fold_script(&u, &script).unwrap(), g);
        assert_eq!(u.len(), cx.gallery_distance(&o, &u.target).unwrap());
    }

    #[test]
    fn unfold_of_straight_gallery_is_identity() {
        let cx = complex("A2");
        let g = cx.minimal_gallery(&Vector::from_ints(&[2, 1])).unwrap();
        let (u, s) = cx.unfold(&g).unwrap();
        assert_eq!(u, g);
        assert!(s.is_empty());
        assert_eq!(cx.apply_fold_script(&g, &FoldScript::default()).unwrap(), g);
    }

    #[test]
    fn single_fold_reflects_endpoint() {
        let cx = complex("A2");
        let x = Vector::from_ints(&[2, 2]);
        let g = cx.minimal_gallery(&x).unwrap();
        for i in 1..=g.steps.len() {
            let h = g.steps[i - 1].wall;
            let script = FoldScript {
                entries: vec![(i, h)],
            };
            match cx.apply_fold_script(&g, &script) {
                Ok(f) => {
                    assert_eq!(f.target, cx.reflect_point(&h, &g.target));
                    assert!(cx.is_positively_folded(&f));
                    assert_eq!(cx.gallery_type(&f).unwrap(), cx.gallery_type(&g).unwrap());
                    cx.validate(&f).unwrap();
                }
                Err(e) => assert_eq!(e, Error::NegativeFold(i)),
            }
        }
    }

    #[test]
    fn script_errors() {
        let cx = complex("A2");
        let g = cx.minimal_gallery(&Vector::from_ints(&[1, 1])).unwrap();
        let h = g.steps[0].wall;
        let wrong = AffineHyperplane {
            root: h.root,
            level: h.level + 5,
        };
        assert!(matches!(
            cx.apply_fold_script(
                &g,
                &FoldScript {
                    entries: vec![(1, wrong)]
                }
            ),
            Err(Error::BadScript(1, _))
        ));
        assert!(matches!(
            cx.apply_fold_script(
                &g,
                &FoldScript {
                    entries: vec![(9, h)]
                }
            ),
            Err(Error::BadScript(9, _))
        ));
    }

    #[test]
    fn validate_detects_tampering() {
        let cx = complex("B2");
        let mut g = cx.minimal_gallery(&Vector::from_ints(&[2, 2])).unwrap();
        cx.validate(&g).unwrap();
        g.steps[1].wall.level += 1;
        assert!(cx.validate(&g).is_err());
    }

    #[test]
    fn degenerate_gallery_type() {
        let cx = complex("A2");
        let g = cx.minimal_gallery(&Vector::zero(2)).unwrap();
        assert_eq!(g.len(), 0);
        let t = cx.gallery_type(&g).unwrap();
        assert!(t.is_degenerate());
        assert!(cx.is_positively_folded(&g));
        cx.validate(&g).unwrap();
    }
}
