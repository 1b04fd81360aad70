//! Master builder (placeholder).
