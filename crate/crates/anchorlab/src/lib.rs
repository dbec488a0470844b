//! Anchor subgraphs, vertex-deleted decks, and reconstruction diagnostics
//! for small graphs.
//!
//! An *anchor* of a graph is a proper induced subgraph that occurs, up to
//! isomorphism, exactly once. Anchors pin down how the rest of the graph
//! attaches to them, which makes them useful levers on deck reconstruction
//! questions. This crate provides:
//!
//! - compact graphs on up to 11 vertices with a strict graph6 codec
//!   ([`graph`], [`graph6`]),
//! - canonical forms, orbits, and exact automorphism groups ([`canon`]),
//! - vertex-deleted decks, subgraph counting in the host and from the deck
//!   alone, and brute-force deck reconstruction ([`deck`]),
//! - anchor search, anchor numbers, shadows cast on an anchor, and maximal
//!   extension of anchors ([`anchor`]),
//! - connectional anchors: vertex subsets whose attachment to the rest of
//!   the graph is forced even when no ordinary anchor exists
//!   ([`connectional`]),
//! - structural criteria that certify a graph has an anchor, and a
//!   classifier that applies them in a fixed order ([`theorems`]),
//! - exhaustive enumeration of small graphs with anchor statistics and
//!   reconstruction censuses ([`enumeration`]),
//! - a command line interface ([`cli`]).

pub mod anchor;
pub mod canon;
pub mod cli;
pub mod connectional;
pub mod deck;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
