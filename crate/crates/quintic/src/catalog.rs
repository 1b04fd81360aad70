//! Embedded catalog of direct constructions (placeholder).
