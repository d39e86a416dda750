//! Flips of plane spanning paths on point sets in general position.
//!
//! A *plane spanning path* of a finite point set visits every point exactly
//! once with pairwise non-crossing straight-line edges. A *flip* removes one
//! edge of such a path and adds another so that the result is again a plane
//! spanning path. This crate provides:
//!
//! * exact integer geometry primitives ([`geometry`]),
//! * path representation and flip enumeration ([`paths`]),
//! * path families, flip graphs, connectivity, diameters ([`enumeration`]),
//! * structural classifiers: convex position, wheels, generalized double
//!   circles, spines ([`classifiers`]),
//! * constructive existence results: paths with prescribed endpoints or
//!   start edges, cycles through two prescribed incident edges, and flip
//!   sequences between paths sharing structure ([`constructions`]),
//! * canonicalization of paths on wheel sets and generalized double circles
//!   with bounded flip counts ([`canonicalize`]),
//! * an order-type corpus (generation, storage, batch verification)
//!   ([`corpus`]).
//!
//! All geometry is exact: coordinates are bounded integers and every
//! predicate is evaluated with integer (or where necessary rational)
//! arithmetic, so there are no epsilon decisions anywhere.

pub mod canonicalize;
pub mod classifiers;
pub mod constructions;
pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod paths;

pub use error::{Error, Result};
