//! The five-point block and its edge semantics.
//!
//! A block `(x, y, z, u, w)` denotes the 3-uniform hypergraph on five
//! vertices with edge set `{xyz, xyu, xzu, yzu, zuw}`: all four triples of
//! the 4-set `{x,y,z,u}` plus one further edge through the pair `{z,u}`.
//! Swapping `x` and `y`, or `z` and `u`, leaves the edge set unchanged, so
//! the canonical form fixes `x < y` and `z < u`; the tail `w` is positional.

use crate::triple::{Point, Triple};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// A canonical labeled block `(x, y, z, u, w)` with `x < y`, `z < u`,
/// all five points distinct.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    x: Point,
    y: Point,
    z: Point,
    u: Point,
    w: Point,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("block points must be pairwise distinct, got ({0},{1},{2},{3},{4})")]
    RepeatedPoint(Point, Point, Point, Point, Point),
    #[error("expected exactly 5 edges, got {0}")]
    WrongEdgeCount(usize),
}

impl Block {
    /// Canonicalizes `(x, y, z, u, w)`; errors if the points are not distinct.
    pub fn new(x: Point, y: Point, z: Point, u: Point, w: Point) -> Result<Block, BlockError> {
        let mut seen = [x, y, z, u, w];
        seen.sort_unstable();
        if seen.windows(2).any(|s| s[0] == s[1]) {
            return Err(BlockError::RepeatedPoint(x, y, z, u, w));
        }
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        let (z, u) = if z < u { (z, u) } else { (u, z) };
        Ok(Block { x, y, z, u, w })
    }

    pub fn tuple(&self) -> (Point, Point, Point, Point, Point) {
        (self.x, self.y, self.z, self.u, self.w)
    }

    pub fn points(&self) -> [Point; 5] {
        [self.x, self.y, self.z, self.u, self.w]
    }

    pub fn max_point(&self) -> Point {
        self.points().into_iter().max().unwrap()
    }

    /// The five edges `{xyz, xyu, xzu, yzu, zuw}` as canonical triples.
    pub fn edges(&self) -> [Triple; 5] {
        let Block { x, y, z, u, w } = *self;
        [
            Triple::new(x, y, z),
            Triple::new(x, y, u),
            Triple::new(x, z, u),
            Triple::new(y, z, u),
            Triple::new(z, u, w),
        ]
    }

    /// Number of edges of this block containing `p`: 3 for `x`/`y`,
    /// 4 for `z`/`u`, 1 for `w`, 0 for points outside the block.
    pub fn degree_of(&self, p: Point) -> u32 {
        if p == self.x || p == self.y {
            3
        } else if p == self.z || p == self.u {
            4
        } else if p == self.w {
            1
        } else {
            0
        }
    }

    /// Relabels every point through `map` and re-canonicalizes.
    pub fn relabel(&self, map: impl Fn(Point) -> Point) -> Result<Block, BlockError> {
        Block::new(map(self.x), map(self.y), map(self.z), map(self.u), map(self.w))
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.x, self.y, self.z, self.u, self.w)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.x, self.y, self.z, self.u, self.w)
    }
}

/// Reconstructs the canonical block whose edge expansion equals `edges`,
/// or `None` if no labeling of the edge set has the required shape.
///
/// Strategy: locate the unique 4-subset `Q` all four of whose triples are
/// present; the remaining edge must meet `Q` in exactly a pair (which
/// becomes `{z, u}`) and contribute one new point (the tail `w`).
///
/// Errors only on a wrong edge count; an edge set over more than five
/// points simply has no labeling and yields `None`.
pub fn recognize_k4e(edges: &[Triple]) -> Result<Option<Block>, BlockError> {
    let mut sorted: Vec<Triple> = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 5 {
        return Err(BlockError::WrongEdgeCount(sorted.len()));
    }
    let mut points: Vec<Point> = sorted.iter().flat_map(|t| t.points()).collect();
    points.sort_unstable();
    points.dedup();
    if points.len() != 5 {
        return Ok(None);
    }

    // For each candidate tail, test whether the other four points span
    // four of the given edges.
    for (wi, &w) in points.iter().enumerate() {
        let quad: Vec<Point> = points
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != wi)
            .map(|(_, &p)| p)
            .collect();
        let quad_triples = [
            Triple::new(quad[0], quad[1], quad[2]),
            Triple::new(quad[0], quad[1], quad[3]),
            Triple::new(quad[0], quad[2], quad[3]),
            Triple::new(quad[1], quad[2], quad[3]),
        ];
        if !quad_triples.iter().all(|t| sorted.binary_search(t).is_ok()) {
            continue;
        }
        let extra = *sorted
            .iter()
            .find(|t| !quad_triples.contains(t))
            .expect("five edges minus four distinct quad triples leave one");
        if !extra.contains(w) {
            return Ok(None);
        }
        let shared: Vec<Point> = extra.points().into_iter().filter(|&p| p != w).collect();
        if shared.len() != 2 || !shared.iter().all(|p| quad.contains(p)) {
            return Ok(None);
        }
        let (z, u) = (shared[0], shared[1]);
        let rest: Vec<Point> = quad.iter().copied().filter(|&p| p != z && p != u).collect();
        let block = Block::new(rest[0], rest[1], z, u, w).expect("distinct by construction");
        // Guard: the reconstruction must expand back to the input.
        let mut check = block.edges().to_vec();
        check.sort_unstable();
        if check == sorted {
            return Ok(Some(block));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: Point, b: Point, c: Point) -> Triple {
        Triple::new(a, b, c)
    }

    #[test]
    fn edge_template() {
        let b = Block::new(1, 2, 3, 4, 5).unwrap();
        let mut edges = b.edges().to_vec();
        edges.sort_unstable();
        assert_eq!(edges, vec![t(1, 2, 3), t(1, 2, 4), t(1, 3, 4), t(2, 3, 4), t(3, 4, 5)]);

        let b = Block::new(0, 1, 2, 4, 5).unwrap();
        let mut edges = b.edges().to_vec();
        edges.sort_unstable();
        assert_eq!(edges, vec![t(0, 1, 2), t(0, 1, 4), t(0, 2, 4), t(1, 2, 4), t(2, 4, 5)]);

        // Canonicalization reorders the pairs but not the edge set.
        let b = Block::new(3, 4, 5, 0, 1).unwrap();
        assert_eq!(b.tuple(), (3, 4, 0, 5, 1));
        let mut edges = b.edges().to_vec();
        edges.sort_unstable();
        assert_eq!(edges, vec![t(0, 1, 5), t(0, 3, 4), t(0, 3, 5), t(0, 4, 5), t(3, 4, 5)]);
    }

    #[test]
    fn pair_swaps_are_identities() {
        let b = Block::new(1, 2, 3, 4, 5).unwrap();
        assert_eq!(Block::new(2, 1, 3, 4, 5).unwrap(), b);
        assert_eq!(Block::new(1, 2, 4, 3, 5).unwrap(), b);
        assert_eq!(Block::new(2, 1, 4, 3, 5).unwrap(), b);
    }

    #[test]
    fn degree_profile_is_1_3_3_4_4() {
        let b = Block::new(0, 1, 2, 3, 4).unwrap();
        let mut profile: Vec<u32> = b.points().iter().map(|&p| b.degree_of(p)).collect();
        profile.sort_unstable();
        assert_eq!(profile, vec![1, 3, 3, 4, 4]);
        assert_eq!(b.degree_of(4), 1);
        assert_eq!(b.degree_of(2), 4);
    }

    #[test]
    fn recognize_recovers_canonical_block() {
        let edges = [t(1, 2, 3), t(1, 2, 4), t(1, 3, 4), t(2, 3, 4), t(3, 4, 5)];
        let got = recognize_k4e(&edges).unwrap().unwrap();
        assert_eq!(got, Block::new(1, 2, 3, 4, 5).unwrap());
    }

    #[test]
    fn recognize_rejects_shapeless_sets() {
        // No 4-subset spans four of these edges.
        let edges = [t(0, 1, 2), t(0, 1, 3), t(0, 1, 4), t(0, 1, 5), t(0, 2, 3)];
        assert_eq!(recognize_k4e(&edges).unwrap(), None);
    }

    #[test]
    fn recognize_rejects_wrong_edge_count() {
        let edges = [t(1, 2, 3), t(1, 2, 4), t(1, 3, 4), t(2, 3, 4)];
        assert_eq!(recognize_k4e(&edges), Err(BlockError::WrongEdgeCount(4)));
    }

    #[test]
    fn recognize_round_trips_every_block_on_six_points() {
        for x in 0..6 {
            for y in x + 1..6 {
                for z in 0..6 {
                    for u in z + 1..6 {
                        for w in 0..6 {
                            if let Ok(b) = Block::new(x, y, z, u, w) {
                                let got = recognize_k4e(&b.edges()).unwrap();
                                assert_eq!(got, Some(b));
                            }
                        }
                    }
                }
            }
        }
    }
}
