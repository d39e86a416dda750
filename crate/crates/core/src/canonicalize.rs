//! Canonicalization of paths on structured point sets.
