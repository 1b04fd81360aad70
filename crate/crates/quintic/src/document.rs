//! Typed design documents and their canonical file format.
//!
//! A [`DesignDocument`] is one concrete design instance: a complete system
//! (`S`), a group divisible design (`GDD`), a candelabra system (`CS`), or a
//! holey system (`HS`), with blocks drawn from one of two families:
//!
//! * `K4E` — five-point blocks with the fixed five-edge shape of [`Block`];
//! * `COMPLETE` — point subsets interpreted as complete 3-uniform
//!   hypergraphs, used for auxiliary ingredient designs.
//!
//! Documents are immutable values, canonical on construction: group members,
//! stem, and hole sorted, groups ordered lexicographically, blocks
//! canonicalized and sorted. Serialization is canonical JSON with the fixed
//! key order `kind, family, points, groups, stem, hole, blocks` and is
//! bit-exact across runs.

use crate::block::Block;
use crate::triple::Point;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Kind {
    S,
    GDD,
    CS,
    HS,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::S => "S",
            Kind::GDD => "GDD",
            Kind::CS => "CS",
            Kind::HS => "HS",
        };
        f.write_str(s)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    K4e,
    Complete,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::K4e => "K4E",
            Family::Complete => "COMPLETE",
        })
    }
}

/// Block storage; the variant fixes the block family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Blocks {
    K4e(Vec<Block>),
    Complete(Vec<Vec<Point>>),
}

impl Blocks {
    pub fn family(&self) -> Family {
        match self {
            Blocks::K4e(_) => Family::K4e,
            Blocks::Complete(_) => Family::Complete,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Blocks::K4e(b) => b.len(),
            Blocks::Complete(b) => b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantViolation {
    #[error("point {point} out of range 0..{points} in {place}")]
    PointOutOfRange { point: Point, points: Point, place: String },
    #[error("{place} lists point {point} twice")]
    RepeatedPoint { point: Point, place: String },
    #[error("point {point} appears in two structure parts ({first} and {second})")]
    OverlappingStructure { point: Point, first: String, second: String },
    #[error("kind {kind} requires groups and stem to partition the points; point {point} is unassigned")]
    NotAPartition { kind: Kind, point: Point },
    #[error("kind {kind} does not take {part}")]
    UnexpectedStructure { kind: Kind, part: String },
    #[error("kind {kind} requires at least one group")]
    MissingGroups { kind: Kind },
    #[error("block {index} malformed: {reason}")]
    BadBlock { index: usize, reason: String },
    #[error("family {family} cannot hold the given block list")]
    FamilyMismatch { family: String },
}

/// One design instance. Construct with [`DesignDocument::new`]; the value is
/// canonical and structurally valid from then on (coverage validity is the
/// verifier's concern, not this type's).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DesignDocument {
    kind: Kind,
    points: Point,
    groups: Vec<Vec<Point>>,
    stem: Vec<Point>,
    hole: Vec<Point>,
    blocks: Blocks,
}

impl DesignDocument {
    pub fn new(
        kind: Kind,
        points: Point,
        groups: Vec<Vec<Point>>,
        stem: Vec<Point>,
        hole: Vec<Point>,
        blocks: Blocks,
    ) -> Result<DesignDocument, InvariantViolation> {
        let mut groups: Vec<Vec<Point>> = groups
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        groups.sort();
        let mut stem = stem;
        stem.sort_unstable();
        let mut hole = hole;
        hole.sort_unstable();

        let blocks = canonicalize_blocks(blocks, points)?;
        let doc = DesignDocument { kind, points, groups, stem, hole, blocks };
        doc.check_structure()?;
        Ok(doc)
    }

    fn check_structure(&self) -> Result<(), InvariantViolation> {
        let v = self.points;
        // Range and duplicate checks per structure part.
        let mut owner: Vec<Option<String>> = vec![None; v as usize];
        let mut claim = |pts: &[Point], place: &str| -> Result<(), InvariantViolation> {
            let mut seen = std::collections::BTreeSet::new();
            for &p in pts {
                if p >= v {
                    return Err(InvariantViolation::PointOutOfRange {
                        point: p,
                        points: v,
                        place: place.to_string(),
                    });
                }
                if !seen.insert(p) {
                    return Err(InvariantViolation::RepeatedPoint {
                        point: p,
                        place: place.to_string(),
                    });
                }
                if let Some(first) = &owner[p as usize] {
                    return Err(InvariantViolation::OverlappingStructure {
                        point: p,
                        first: first.clone(),
                        second: place.to_string(),
                    });
                }
                owner[p as usize] = Some(place.to_string());
            }
            Ok(())
        };
        for (i, g) in self.groups.iter().enumerate() {
            claim(g, &format!("group {i}"))?;
        }
        claim(&self.stem, "stem")?;

        match self.kind {
            Kind::S => {
                for (part, present) in [
                    ("groups", !self.groups.is_empty()),
                    ("a stem", !self.stem.is_empty()),
                    ("a hole", !self.hole.is_empty()),
                ] {
                    if present {
                        return Err(InvariantViolation::UnexpectedStructure {
                            kind: self.kind,
                            part: part.to_string(),
                        });
                    }
                }
            }
            Kind::GDD | Kind::CS => {
                if !self.hole.is_empty() {
                    return Err(InvariantViolation::UnexpectedStructure {
                        kind: self.kind,
                        part: "a hole".to_string(),
                    });
                }
                if self.kind == Kind::GDD && !self.stem.is_empty() {
                    return Err(InvariantViolation::UnexpectedStructure {
                        kind: self.kind,
                        part: "a stem".to_string(),
                    });
                }
                if self.groups.is_empty() {
                    return Err(InvariantViolation::MissingGroups { kind: self.kind });
                }
                if let Some(p) = (0..v).find(|&p| owner[p as usize].is_none()) {
                    return Err(InvariantViolation::NotAPartition { kind: self.kind, point: p });
                }
            }
            Kind::HS => {
                if !self.groups.is_empty() || !self.stem.is_empty() {
                    return Err(InvariantViolation::UnexpectedStructure {
                        kind: self.kind,
                        part: "groups or a stem".to_string(),
                    });
                }
                let mut seen = std::collections::BTreeSet::new();
                for &p in &self.hole {
                    if p >= v {
                        return Err(InvariantViolation::PointOutOfRange {
                            point: p,
                            points: v,
                            place: "hole".to_string(),
                        });
                    }
                    if !seen.insert(p) {
                        return Err(InvariantViolation::RepeatedPoint {
                            point: p,
                            place: "hole".to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn family(&self) -> Family {
        self.blocks.family()
    }

    pub fn points(&self) -> Point {
        self.points
    }

    pub fn groups(&self) -> &[Vec<Point>] {
        &self.groups
    }

    pub fn stem(&self) -> &[Point] {
        &self.stem
    }

    pub fn hole(&self) -> &[Point] {
        &self.hole
    }

    pub fn blocks(&self) -> &Blocks {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Multiset type of the group sizes as sorted `(size, count)` pairs.
    pub fn group_type(&self) -> Vec<(u32, u32)> {
        let mut sizes: Vec<u32> = self.groups.iter().map(|g| g.len() as u32).collect();
        sizes.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::new();
        for s in sizes {
            match out.last_mut() {
                Some((size, count)) if *size == s => *count += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Display form of the structure, e.g. `S(v=10)`, `GDD 5^4`, `CS (10^2:1)`.
    pub fn type_label(&self) -> String {
        let ty = |doc: &DesignDocument| {
            doc.group_type()
                .iter()
                .map(|(g, a)| format!("{g}^{a}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self.kind {
            Kind::S => format!("S(v={})", self.points),
            Kind::GDD => format!("GDD {}", ty(self)),
            Kind::CS => format!("CS ({}:{})", ty(self), self.stem.len()),
            Kind::HS => format!("HS({},{})", self.points, self.hole.len()),
        }
    }

    /// Canonical JSON encoding.
    pub fn to_json(&self) -> String {
        let raw = RawDocument {
            kind: self.kind.to_string(),
            family: self.family().to_string(),
            points: self.points,
            groups: self.groups.clone(),
            stem: self.stem.clone(),
            hole: self.hole.clone(),
            blocks: match &self.blocks {
                Blocks::K4e(bs) => bs
                    .iter()
                    .map(|b| {
                        let (x, y, z, u, w) = b.tuple();
                        vec![x, y, z, u, w]
                    })
                    .collect(),
                Blocks::Complete(bs) => bs.clone(),
            },
        };
        serde_json::to_string(&raw).expect("document serialization never fails")
    }

    /// Parses and validates a document; rejects any invariant violation with
    /// a structured report.
    pub fn from_json(text: &str) -> Result<DesignDocument, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text)?;
        let kind = match raw.kind.as_str() {
            "S" => Kind::S,
            "GDD" => Kind::GDD,
            "CS" => Kind::CS,
            "HS" => Kind::HS,
            other => return Err(DocumentError::UnknownKind(other.to_string())),
        };
        let blocks = match raw.family.as_str() {
            "K4E" => {
                let mut out = Vec::with_capacity(raw.blocks.len());
                for (index, b) in raw.blocks.iter().enumerate() {
                    if b.len() != 5 {
                        return Err(InvariantViolation::BadBlock {
                            index,
                            reason: format!("expected 5 points, got {}", b.len()),
                        }
                        .into());
                    }
                    let blk = Block::new(b[0], b[1], b[2], b[3], b[4]).map_err(|e| {
                        InvariantViolation::BadBlock { index, reason: e.to_string() }
                    })?;
                    out.push(blk);
                }
                Blocks::K4e(out)
            }
            "COMPLETE" => Blocks::Complete(raw.blocks),
            other => return Err(DocumentError::UnknownFamily(other.to_string())),
        };
        let doc =
            DesignDocument::new(kind, raw.points, raw.groups, raw.stem, raw.hole, blocks)?;
        Ok(doc)
    }
}

fn canonicalize_blocks(blocks: Blocks, points: Point) -> Result<Blocks, InvariantViolation> {
    match blocks {
        Blocks::K4e(mut bs) => {
            for (index, b) in bs.iter().enumerate() {
                if b.max_point() >= points {
                    return Err(InvariantViolation::BadBlock {
                        index,
                        reason: format!("point {} out of range 0..{}", b.max_point(), points),
                    });
                }
            }
            bs.sort_unstable();
            Ok(Blocks::K4e(bs))
        }
        Blocks::Complete(bs) => {
            let mut out = Vec::with_capacity(bs.len());
            for (index, mut b) in bs.into_iter().enumerate() {
                b.sort_unstable();
                if b.len() < 3 {
                    return Err(InvariantViolation::BadBlock {
                        index,
                        reason: format!("complete block needs at least 3 points, got {}", b.len()),
                    });
                }
                if b.windows(2).any(|s| s[0] == s[1]) {
                    return Err(InvariantViolation::BadBlock {
                        index,
                        reason: "repeated point".to_string(),
                    });
                }
                if *b.last().unwrap() >= points {
                    return Err(InvariantViolation::BadBlock {
                        index,
                        reason: format!("point {} out of range 0..{}", b.last().unwrap(), points),
                    });
                }
                out.push(b);
            }
            out.sort();
            Ok(Blocks::Complete(out))
        }
    }
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
}

#[derive(Serialize, Deserialize)]
struct RawDocument {
    kind: String,
    family: String,
    points: Point,
    groups: Vec<Vec<Point>>,
    stem: Vec<Point>,
    hole: Vec<Point>,
    blocks: Vec<Vec<Point>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4e(blocks: &[(Point, Point, Point, Point, Point)]) -> Blocks {
        Blocks::K4e(
            blocks
                .iter()
                .map(|&(x, y, z, u, w)| Block::new(x, y, z, u, w).unwrap())
                .collect(),
        )
    }

    #[test]
    fn round_trip_identity() {
        let doc = DesignDocument::new(
            Kind::CS,
            7,
            vec![vec![2, 0], vec![1, 3]],
            vec![4, 5, 6],
            vec![],
            k4e(&[(0, 1, 2, 3, 4), (1, 2, 4, 5, 6)]),
        )
        .unwrap();
        let json = doc.to_json();
        let back = DesignDocument::from_json(&json).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn block_order_is_canonical() {
        let a = DesignDocument::new(
            Kind::S,
            6,
            vec![],
            vec![],
            vec![],
            k4e(&[(0, 1, 2, 3, 4), (1, 2, 3, 4, 5)]),
        )
        .unwrap();
        let b = DesignDocument::new(
            Kind::S,
            6,
            vec![],
            vec![],
            vec![],
            k4e(&[(2, 1, 4, 3, 5), (1, 0, 3, 2, 4)]),
        )
        .unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn stem_overlapping_group_is_rejected() {
        let err = DesignDocument::new(
            Kind::CS,
            5,
            vec![vec![0, 1], vec![2, 3]],
            vec![3],
            vec![],
            Blocks::K4e(vec![]),
        )
        .unwrap_err();
        assert!(matches!(err, InvariantViolation::OverlappingStructure { point: 3, .. }));
    }

    #[test]
    fn gdd_groups_must_partition() {
        let err = DesignDocument::new(
            Kind::GDD,
            5,
            vec![vec![0, 1], vec![2, 3]],
            vec![],
            vec![],
            Blocks::K4e(vec![]),
        )
        .unwrap_err();
        assert_eq!(err, InvariantViolation::NotAPartition { kind: Kind::GDD, point: 4 });
    }

    #[test]
    fn rejects_out_of_range_block() {
        let err = DesignDocument::new(Kind::S, 4, vec![], vec![], vec![], k4e(&[(0, 1, 2, 3, 4)]))
            .unwrap_err();
        assert!(matches!(err, InvariantViolation::BadBlock { index: 0, .. }));
    }

    #[test]
    fn type_labels() {
        let doc = DesignDocument::new(
            Kind::CS,
            7,
            vec![vec![0, 1], vec![2, 3], vec![4, 5]],
            vec![6],
            vec![],
            Blocks::Complete(vec![]),
        )
        .unwrap();
        assert_eq!(doc.type_label(), "CS (2^3:1)");
        assert_eq!(doc.group_type(), vec![(2, 3)]);
    }
}
