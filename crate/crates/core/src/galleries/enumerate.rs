use std::collections::{BTreeSet, HashSet};
use std::sync::Mutex;

use crate::affine_coxeter::{AffineComplex, AffineWeylElement, Alcove, VertexType};
use crate::error::{Error, Result};
use crate::galleries::{Gallery, GalleryType, Move, Step};
use crate::vector::Vector;

/// Depth below which the search forks onto the rayon pool.
const SPLIT_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Positively folded galleries visited.
    pub galleries: u64,
    /// Distinct last alcoves.
    pub distinct_last_alcoves: usize,
}

fn check_source(cx: &AffineComplex, t: &GalleryType) -> Result<()> {
    if t.source_type != VertexType(0) {
        return Err(Error::MalformedGallery(format!(
            "enumeration needs source type 0, got {}",
            t.source_type.0
        )));
    }
    if t.target_type.0 as usize >= cx.n_generators() {
        return Err(Error::MalformedGallery(format!(
            "target type {} out of range",
            t.target_type.0
        )));
    }
    if let Some(&g) = t.panel_types.iter().find(|&&g| g >= cx.n_generators()) {
        return Err(Error::MalformedGallery(format!(
            "panel type {g} out of range"
        )));
    }
    Ok(())
}

fn target_of(cx: &AffineComplex, a: &Alcove, t: &GalleryType) -> Vector {
    if t.target_type == VertexType(0) {
        Vector::from_lattice(a.origin_vertex(), cx.rank())
    } else {
        cx.vertex(a, t.target_type.0 as usize)
    }
}

fn visit<F>(
    cx: &AffineComplex,
    t: &GalleryType,
    g: &mut Gallery,
    cur: Alcove,
    depth: usize,
    f: &F,
) -> u64
where
    F: Fn(&Gallery) + Sync,
{
    if depth == t.panel_types.len() {
        g.target = target_of(cx, &cur, t);
        f(g);
        return 1;
    }
    let ptype = t.panel_types[depth];
    let wall = cx.wall(&cur, ptype);
    let crossed = cx.cross(&cur, ptype);
    let can_fold = cx.wall_is_positive(cur.element().linear, ptype);

    let step = |next: Alcove| Step {
        panel_type: ptype,
        wall,
        alcove: next,
    };
    if !can_fold {
        return descend(cx, t, g, step(crossed), depth, f);
    }
    if depth < SPLIT_DEPTH {
        let mut other = g.clone();
        let (a, b) = rayon::join(
            || descend(cx, t, g, step(crossed), depth, f),
            || descend(cx, t, &mut other, step(cur), depth, f),
        );
        a + b
    } else {
        descend(cx, t, g, step(crossed), depth, f) + descend(cx, t, g, step(cur), depth, f)
    }
}

fn descend<F>(
    cx: &AffineComplex,
    t: &GalleryType,
    g: &mut Gallery,
    step: Step,
    depth: usize,
    f: &F,
) -> u64
where
    F: Fn(&Gallery) + Sync,
{
    g.steps.push(step);
    let n = visit(cx, t, g, step.alcove, depth + 1, f);
    g.steps.pop();
    n
}

/// Calls `f` on every positively folded gallery of type `t` with source 0.
/// The first alcove ranges over every alcove containing 0; at each panel the
/// gallery crosses, or stays when the wall separates it from `Cfm`.
/// Visiting order is unspecified; returns the number of galleries visited.
pub fn for_each_positively_folded<F>(cx: &AffineComplex, t: &GalleryType, f: F) -> Result<u64>
where
    F: Fn(&Gallery) + Sync,
{
    check_source(cx, t)?;
    let origin = Vector::zero(cx.rank());
    if t.is_degenerate() {
        f(&Gallery::degenerate(origin));
        return Ok(1);
    }
    let starts: Vec<Alcove> = cx.alcoves_containing(&origin)?.into_iter().collect();
    let counts: Vec<u64> = {
        use rayon::prelude::*;
        starts
            .par_iter()
            .map(|first| {
                let mut g = Gallery {
                    source: origin.clone(),
                    first: Some(*first),
                    steps: vec![],
                    target: origin.clone(),
                };
                visit(cx, t, &mut g, *first, 0, &f)
            })
            .collect()
    };
    Ok(counts.iter().sum())
}

/// The full set of positively folded galleries of type `t` with source 0.
pub fn enumerate_positively_folded(
    cx: &AffineComplex,
    t: &GalleryType,
) -> Result<BTreeSet<Gallery>> {
    let out = Mutex::new(Vec::new());
    for_each_positively_folded(cx, t, |g| out.lock().unwrap().push(g.clone()))?;
    Ok(out.into_inner().unwrap().into_iter().collect())
}

fn collect_last(
    cx: &AffineComplex,
    t: &GalleryType,
    e: AffineWeylElement,
    depth: usize,
    out: &mut HashSet<AffineWeylElement>,
) -> u64 {
    if depth == t.panel_types.len() {
        out.insert(e);
        return 1;
    }
    let g = t.panel_types[depth];
    let crossed = cx.cross_element(&e, g);
    if !cx.wall_is_positive(e.linear, g) {
        return collect_last(cx, t, crossed, depth + 1, out);
    }
    if depth < SPLIT_DEPTH {
        let mut other = HashSet::new();
        let (a, b) = rayon::join(
            || collect_last(cx, t, crossed, depth + 1, out),
            || collect_last(cx, t, e, depth + 1, &mut other),
        );
        out.extend(other);
        a + b
    } else {
        collect_last(cx, t, crossed, depth + 1, out) + collect_last(cx, t, e, depth + 1, out)
    }
}

/// Endpoints of all positively folded galleries of type `t` with source 0,
/// computed on affine Weyl group elements without materializing galleries.
pub fn positively_folded_endpoints(
    cx: &AffineComplex,
    t: &GalleryType,
) -> Result<(BTreeSet<Vector>, EnumerationStats)> {
    check_source(cx, t)?;
    let origin = Vector::zero(cx.rank());
    if t.is_degenerate() {
        return Ok((
            BTreeSet::from([origin]),
            EnumerationStats {
                galleries: 1,
                distinct_last_alcoves: 0,
            },
        ));
    }
    let starts: Vec<AffineWeylElement> = cx
        .alcoves_containing(&origin)?
        .into_iter()
        .map(|a| *a.element())
        .collect();
    let parts: Vec<(u64, HashSet<AffineWeylElement>)> = {
        use rayon::prelude::*;
        starts
            .par_iter()
            .map(|e| {
                let mut out = HashSet::new();
                let n = collect_last(cx, t, *e, 0, &mut out);
                (n, out)
            })
            .collect()
    };
    let mut last = HashSet::new();
    let mut galleries = 0;
    for (n, set) in parts {
        galleries += n;
        last.extend(set);
    }
    let endpoints = last
        .iter()
        .map(|e| target_of(cx, &cx.alcove(*e), t))
        .collect();
    Ok((
        endpoints,
        EnumerationStats {
            galleries,
            distinct_last_alcoves: last.len(),
        },
    ))
}

/// Every (first alcove, cross/fold string) pair, filtered by positivity.
/// Exponential in the type length; an independent check on the pruned search.
pub fn brute_force_positively_folded(
    cx: &AffineComplex,
    t: &GalleryType,
) -> Result<BTreeSet<Gallery>> {
    check_source(cx, t)?;
    let origin = Vector::zero(cx.rank());
    if t.is_degenerate() {
        return Ok(BTreeSet::from([Gallery::degenerate(origin)]));
    }
    let n = t.panel_types.len();
    assert!(n < 24, "brute force over 2^{n} move strings");
    let mut out = BTreeSet::new();
    for first in cx.alcoves_containing(&origin)? {
        for bits in 0u32..(1 << n) {
            let moves: Vec<Move> = (0..n)
                .map(|k| {
                    if bits >> k & 1 == 1 {
                        Move::Fold
                    } else {
                        Move::Cross
                    }
                })
                .collect();
            let g = cx.build_gallery(&origin, first, t, &moves)?;
            if cx.is_positively_folded(&g) {
                out.insert(g);
            }
        }
    }
    Ok(out)
}
