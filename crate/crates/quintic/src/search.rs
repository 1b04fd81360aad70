//! Exact-cover search engine (placeholder).
