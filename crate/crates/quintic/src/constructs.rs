//! Recursive construction operators (placeholder).
