//! Construction and verification engine for decompositions of the complete
//! 3-uniform hypergraph on `v` points into copies of the five-edge,
//! five-vertex block `(x, y, z, u, w)` — all four triples of `{x,y,z,u}`
//! plus the extra edge `{z,u,w}`.
//!
//! Such a decomposition exists exactly when `v = 0, 1, 2 (mod 5)` and
//! `v >= 7`. This crate makes that constructive at desk scale:
//!
//! * [`catalog`] — an embedded library of direct constructions (base blocks
//!   developed under cyclic actions, plus explicit block lists) covering the
//!   small orders and the auxiliary group divisible, candelabra, and holey
//!   systems the recursion needs;
//! * [`devel`] — the development engine expanding base blocks by multipliers
//!   and additive shifts, with fixed and cyclically permuted infinity points;
//! * [`verify`] — the independent oracle checking exact triple coverage,
//!   block shape, structural constraints, admissibility, and degree profiles;
//! * [`search`] — a dancing-links exact-cover solver supplying small
//!   ingredient designs and the exhaustive nonexistence certificates for
//!   `v = 5, 6`;
//! * [`constructs`] — the recursive operators: weighting, candelabra
//!   assembly from pair systems, hole filling, stem-aware inflation, and
//!   pair-deletion candelabras;
//! * [`pipeline`] — the master builder that routes any admissible order to a
//!   verified design, with an ingredient registry and persistent cache.
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; the `quintic` binary exposes the same operations as a thin CLI.

pub mod block;
pub mod catalog;
pub mod constructs;
pub mod devel;
pub mod document;
pub mod pipeline;
pub mod search;
pub mod triple;
pub mod verify;

pub use block::{recognize_k4e, Block};
pub use document::{Blocks, DesignDocument, Family, Kind};
pub use triple::{Point, Triple};
