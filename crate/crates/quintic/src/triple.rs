//! Canonical point triples and their dense integer encoding.
//!
//! A [`Triple`] is an unordered 3-subset of the point set `0..v`, stored
//! strictly increasing. The colexicographic rank gives a bijection onto
//! `0..C(v,3)`, which the verifier uses to index dense coverage tables.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Points are dense nonnegative integers `0..v`.
pub type Point = u32;

/// `C(n, 2)` without overflow for any `u32` input.
pub fn binom2(n: u64) -> u64 {
    n * n.wrapping_sub(1) / 2
}

/// `C(n, 3)` without overflow for any `u32` input.
pub fn binom3(n: u64) -> u64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) / 2 * (n - 2) / 3
    }
}

/// An unordered 3-subset of points in strictly increasing order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Triple([Point; 3]);

impl Triple {
    /// Sorts the three points; panics if any two coincide.
    pub fn new(a: Point, b: Point, c: Point) -> Triple {
        Triple::try_new(a, b, c).expect("triple points must be distinct")
    }

    /// Sorts the three points, or returns `None` if any two coincide.
    pub fn try_new(a: Point, b: Point, c: Point) -> Option<Triple> {
        let mut p = [a, b, c];
        p.sort_unstable();
        if p[0] == p[1] || p[1] == p[2] {
            None
        } else {
            Some(Triple(p))
        }
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    pub fn max_point(&self) -> Point {
        self.0[2]
    }

    /// Colexicographic rank: `C(c,3) + C(b,2) + a` for points `a < b < c`.
    ///
    /// Bijective from the triples over `0..v` onto `0..C(v,3)`.
    pub fn rank(&self) -> u64 {
        let [a, b, c] = self.0;
        binom3(c as u64) + binom2(b as u64) + a as u64
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// All triples over `0..v` in rank order.
pub fn all_triples(v: Point) -> impl Iterator<Item = Triple> {
    (2..v).flat_map(move |c| (1..c).flat_map(move |b| (0..b).map(move |a| Triple([a, b, c]))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_is_dense_bijection() {
        for v in 0..20u32 {
            for (i, t) in all_triples(v).enumerate() {
                assert_eq!(t.rank(), i as u64);
            }
            assert_eq!(all_triples(v).count() as u64, binom3(v as u64));
        }
    }

    #[test]
    fn canonical_form_sorts() {
        assert_eq!(Triple::new(5, 0, 3).points(), [0, 3, 5]);
        assert_eq!(Triple::try_new(1, 1, 2), None);
    }
}
