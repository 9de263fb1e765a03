//! One-line gallery records:
//! `<kind> | src=<coords> | start=<levels> | moves=<C|F>* | end=<coords>`.
//! The degenerate gallery has an empty `start=` field.

use std::fmt;
use std::str::FromStr;

use crate::affine_coxeter::AffineComplex;
use crate::error::{Error, Result};
use crate::galleries::{Gallery, GalleryType, Move};
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GalleryRecord {
    pub kind: String,
    pub source: Vector,
    pub start: Vec<i32>,
    pub moves: Vec<Move>,
    pub end: Vector,
}

impl GalleryRecord {
    pub fn from_gallery(cx: &AffineComplex, g: &Gallery) -> Self {
        GalleryRecord {
            kind: cx.root_system().kind.to_string(),
            source: g.source.clone(),
            start: g.first.map(|a| a.levels().to_vec()).unwrap_or_default(),
            moves: g.moves(),
            end: g.target.clone(),
        }
    }

    /// Rebuilds the gallery, checking the recorded endpoint.
    pub fn to_gallery(&self, cx: &AffineComplex, t: &GalleryType) -> Result<Gallery> {
        if self.kind != cx.root_system().kind.to_string() {
            return Err(Error::Parse(format!(
                "record is for {}, complex is {}",
                self.kind,
                cx.root_system().kind
            )));
        }
        let g = if self.start.is_empty() {
            Gallery::degenerate(self.source.clone())
        } else {
            let first = cx
                .alcove_from_levels(&self.start)
                .ok_or_else(|| Error::Parse(format!("no alcove has levels {:?}", self.start)))?;
            cx.build_gallery(&self.source, first, t, &self.moves)?
        };
        if g.target != self.end {
            return Err(Error::Parse(format!(
                "recorded end {} but walk ends at {}",
                self.end, g.target
            )));
        }
        Ok(g)
    }
}

impl fmt::Display for GalleryRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let start = self
            .start
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let moves: String = self.moves.iter().map(|m| m.symbol()).collect();
        write!(
            f,
            "{} | src={} | start={} | moves={} | end={}",
            self.kind, self.source, start, moves, self.end
        )
    }
}

impl FromStr for GalleryRecord {
    type Err = Error;
    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.trim_end().split(" | ").collect();
        let [kind, src, start, moves, end] = fields[..] else {
            return Err(Error::Parse(format!("expected 5 fields in {line:?}")));
        };
        let field = |s: &'_ str, key: &str| -> Result<String> {
            s.strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("expected {key}= in {s:?}")))
        };
        let start = field(start, "start")?;
        let start = if start.is_empty() {
            vec![]
        } else {
            start
                .split(',')
                .map(|x| {
                    x.parse::<i32>()
                        .map_err(|e| Error::Parse(format!("level {x:?}: {e}")))
                })
                .collect::<Result<_>>()?
        };
        let moves = field(moves, "moves")?
            .chars()
            .map(|c| match c {
                'C' => Ok(Move::Cross),
                'F' => Ok(Move::Fold),
                _ => Err(Error::Parse(format!("bad move {c:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(GalleryRecord {
            kind: kind.to_string(),
            source: field(src, "src")?.parse()?,
            start,
            moves,
            end: field(end, "end")?.parse()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystem;

    #[test]
    fn a1_record_line() {
        let cx = AffineComplex::new(RootSystem::construct("A1".parse().unwrap()).unwrap());
        let g = cx.minimal_gallery(&Vector::from_ints(&[1])).unwrap();
        let rec = GalleryRecord::from_gallery(&cx, &g);
        let line = rec.to_string();
        assert_eq!(line, "A1 | src=0 | start=0 | moves=C | end=1");
        let back: GalleryRecord = line.parse().unwrap();
        assert_eq!(back, rec);
        let t = cx.gallery_type(&g).unwrap();
        assert_eq!(back.to_gallery(&cx, &t).unwrap(), g);
    }

    #[test]
    fn degenerate_record() {
        let cx = AffineComplex::new(RootSystem::construct("A2".parse().unwrap()).unwrap());
        let g = cx.minimal_gallery(&Vector::zero(2)).unwrap();
        let line = GalleryRecord::from_gallery(&cx, &g).to_string();
        assert_eq!(line, "A2 | src=0,0 | start= | moves= | end=0,0");
        let t = cx.gallery_type(&g).unwrap();
        assert_eq!(
            line.parse::<GalleryRecord>()
                .unwrap()
                .to_gallery(&cx, &t)
                .unwrap(),
            g
        );
    }

    #[test]
    fn malformed_lines() {
        assert!("A1 | src=0".parse::<GalleryRecord>().is_err());
        assert!("A1 | src=0 | start=0 | moves=X | end=1"
            .parse::<GalleryRecord>()
            .is_err());
        assert!("A1 | src=0 | begin=0 | moves=C | end=1"
            .parse::<GalleryRecord>()
            .is_err());
    }
}
