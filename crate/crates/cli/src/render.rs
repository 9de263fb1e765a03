//! Static SVG pictures of a rank-2 apartment. Exact coordinates are turned
//! into floats here and nowhere else.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write;

use alcove::galleries::positively_folded_endpoints;
use alcove::{dconv_hull, AffineComplex, Alcove, Vector};
use anyhow::{ensure, Result};

const SCALE: f64 = 40.0;

pub struct Figure<'a> {
    pub lambda: &'a Vector,
    /// Extra point to highlight, in simple-root coordinates.
    pub mark: Option<&'a Vector>,
    /// Draw the minimal gallery `0 ⇝ λ`.
    pub gallery: bool,
}

/// Orthonormal-frame images of the two simple roots (Cholesky of the Gram matrix).
struct Frame {
    e1: (f64, f64),
    e2: (f64, f64),
}

fn to_f64(q: &num_rational::Rational64) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

impl Frame {
    fn new(cx: &AffineComplex) -> Self {
        let rs = cx.root_system();
        let (a1, a2) = (rs.simple_root(0), rs.simple_root(1));
        let g11 = to_f64(&rs.form(&a1, &a1));
        let g12 = to_f64(&rs.form(&a1, &a2));
        let g22 = to_f64(&rs.form(&a2, &a2));
        let r = g11.sqrt();
        Frame {
            e1: (r, 0.0),
            e2: (g12 / r, (g22 - g12 * g12 / g11).sqrt()),
        }
    }

    fn point(&self, v: &Vector) -> (f64, f64) {
        let (x, y) = (to_f64(&v[0]), to_f64(&v[1]));
        (x * self.e1.0 + y * self.e2.0, x * self.e1.1 + y * self.e2.1)
    }

    /// SVG coordinates: y grows downward.
    fn svg(&self, v: &Vector) -> (f64, f64) {
        let (x, y) = self.point(v);
        (x * SCALE, -y * SCALE)
    }
}

fn norm(p: (f64, f64)) -> f64 {
    (p.0 * p.0 + p.1 * p.1).sqrt()
}

fn polygon(pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Alcoves whose barycenter lies within `radius` of the origin.
fn window(cx: &AffineComplex, frame: &Frame, radius: f64) -> Vec<Alcove> {
    let fa = cx.fundamental_alcove();
    let mut seen = HashSet::from([fa]);
    let mut queue = VecDeque::from([fa]);
    let mut out = Vec::new();
    while let Some(a) = queue.pop_front() {
        if norm(frame.point(&cx.barycenter(&a))) > radius {
            continue;
        }
        out.push(a);
        for g in 0..cx.n_generators() {
            let b = cx.cross(&a, g);
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    out.sort();
    out
}

pub fn render_svg(cx: &AffineComplex, fig: &Figure) -> Result<String> {
    let rs = cx.root_system();
    ensure!(
        rs.rank() == 2,
        "render needs a rank-2 kind, {} has rank {}",
        rs.kind,
        rs.rank()
    );
    let frame = Frame::new(cx);
    let hull = dconv_hull(rs, fig.lambda);
    let longest = rs
        .positive_roots
        .iter()
        .map(|a| norm(frame.point(a)))
        .fold(0.0, f64::max);
    let mut reach = hull
        .orbit
        .iter()
        .map(|v| norm(frame.point(v)))
        .fold(0.0, f64::max);
    if let Some(m) = fig.mark {
        reach = reach.max(norm(frame.point(m)));
    }
    let radius = reach + 1.5 * longest;
    let half = radius * SCALE;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.2} {:.2} {:.2} {:.2}" width="{:.0}" height="{:.0}">"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half,
        2.0 * half,
        2.0 * half
    )?;
    writeln!(
        s,
        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="white"/>"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half
    )?;

    writeln!(
        s,
        r##"<g fill="none" stroke="#bbbbbb" stroke-width="0.8">"##
    )?;
    for a in window(cx, &frame, radius) {
        let pts: Vec<(f64, f64)> = cx.vertices(&a).iter().map(|v| frame.svg(v)).collect();
        writeln!(s, r#"<polygon points="{}"/>"#, polygon(&pts))?;
    }
    writeln!(s, "</g>")?;

    let corners = [
        (hull.lower[0], hull.lower[1]),
        (hull.upper[0], hull.lower[1]),
        (hull.upper[0], hull.upper[1]),
        (hull.lower[0], hull.upper[1]),
    ];
    let pts: Vec<(f64, f64)> = corners
        .iter()
        .map(|&(a, b)| frame.svg(&Vector::new(vec![a, b])))
        .collect();
    writeln!(
        s,
        r##"<polygon points="{}" fill="#3366cc" fill-opacity="0.08" stroke="#3366cc" stroke-width="1.5" stroke-dasharray="6,4"/>"##,
        polygon(&pts)
    )?;

    if fig.gallery && !fig.lambda.is_zero() {
        let g = cx.minimal_gallery(fig.lambda)?;
        let mut pts = vec![frame.svg(&g.source)];
        pts.extend((0..g.len()).map(|i| frame.svg(&cx.barycenter(g.alcove(i)))));
        pts.push(frame.svg(&g.target));
        writeln!(
            s,
            r##"<polyline points="{}" fill="none" stroke="#cc6600" stroke-width="2"/>"##,
            polygon(&pts)
        )?;
    }

    if !fig.lambda.is_zero() {
        let t = cx.gallery_type(&cx.minimal_gallery(fig.lambda)?)?;
        let (ends, _) = positively_folded_endpoints(cx, &t)?;
        writeln!(s, r##"<g fill="#222222">"##)?;
        for e in &ends {
            let (x, y) = frame.svg(e);
            writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#)?;
        }
        writeln!(s, "</g>")?;
    }

    writeln!(s, r##"<g fill="none" stroke="#3366cc" stroke-width="2">"##)?;
    for v in &hull.orbit {
        let (x, y) = frame.svg(v);
        writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="6"/>"#)?;
    }
    writeln!(s, "</g>")?;

    let (ox, oy) = frame.svg(&Vector::zero(2));
    writeln!(
        s,
        r##"<circle cx="{ox:.2}" cy="{oy:.2}" r="4" fill="#009933"/>"##
    )?;

    if let Some(m) = fig.mark {
        let (x, y) = frame.svg(m);
        writeln!(
            s,
            r##"<path d="M{:.2},{:.2} L{:.2},{:.2} M{:.2},{:.2} L{:.2},{:.2}" stroke="#cc0000" stroke-width="2.5"/>"##,
            x - 6.0,
            y - 6.0,
            x + 6.0,
            y + 6.0,
            x - 6.0,
            y + 6.0,
            x + 6.0,
            y - 6.0
        )?;
    }
    writeln!(s, "</svg>")?;
    Ok(s)
}
