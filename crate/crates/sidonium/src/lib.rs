//! Exact computations with Sidon-type sets in finite groups.
//!
//! The crate covers three connected areas:
//!
//! - **Groups and verifiers** ([`group`], [`sidon`]): finite groups over
//!   dense element indices, exact checks of the distinct-products property
//!   (`S_k`) and the alternating-word property (`S_k'`), exhaustive maximum
//!   searches, and integer upper bounds from subgroup structure.
//! - **Constructions** ([`construct`]): conjugation recipes producing large
//!   `S_2[g]`-sets in product groups, permanent-counted permutation lifts,
//!   Hamilton-cycle lifts from high-girth graphs, deletion-method
//!   probabilistic constructions, and cyclic-shift hash families.
//! - **Digraphs** ([`digraph`]): Cayley digraphs, forbidden-pattern
//!   detection (equal-endpoint walk pairs, two-part directed cycles),
//!   layered constructions with prescribed semidegree, and exact Hamilton /
//!   Eulerian / transition-vector counting.
//!
//! Every computation is exact: counts use arbitrary-precision integers,
//! probability-style thresholds use rational arithmetic, and randomized
//! constructions take explicit seeds so results are reproducible.

pub mod cli;
pub mod construct;
pub mod digraph;
mod error;
pub mod group;
pub mod matrix;
pub mod report;
pub mod sidon;

pub use error::{Error, Result};
