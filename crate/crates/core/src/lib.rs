//! Rainbow cliques in edge-colored graphs.
//!
//! An edge-colored graph `G` has `e(G)` edges and `c(G)` distinct colors. A
//! rainbow clique `K_k` is a set of `k` pairwise adjacent vertices whose
//! `C(k, 2)` edges all carry different colors. This crate provides
//!
//! * an immutable [`ColoredGraph`] with saturation bookkeeping,
//! * exact Turán numbers and the `e + c` thresholds ([`turan`]),
//! * exact search and counting of rainbow, monochromatic and properly
//!   colored patterns ([`search`]),
//! * the explicit extremal colorings and counterexamples ([`constructions`]),
//! * exhaustive verifiers for the small cases and randomized experiments
//!   ([`verify`]),
//! * the `rainbow` command-line tool ([`cli`]).
//!
//! ```
//! use rainbow::{constructions, search, turan};
//!
//! let g = constructions::extremal(8, 4).unwrap();
//! assert_eq!(g.edges_plus_colors(), turan::thresholds(8, 4).unwrap().extremal);
//! assert!(search::find_rainbow_clique(&g, 4).is_none());
//! ```
//!
//! The guide in `book/` walks through the concepts; its code blocks are
//! compiled and run as doc-tests of this crate.

pub mod cli;
pub mod constructions;
pub mod ecg;
mod error;
pub mod graph;
pub mod random;
mod saturation;
pub mod search;
pub mod turan;
pub mod verify;
mod witness;

pub use error::{Error, GraphError, Result};
pub use graph::{Color, ColoredGraph, GraphBuilder, VertexSet};
pub use saturation::SaturationProfile;
pub use witness::{PatternKind, Witness};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/colored-graphs.md")]
    mod colored_graphs {}
    #[doc = include_str!("../../../book/src/turan.md")]
    mod turan {}
    #[doc = include_str!("../../../book/src/searching.md")]
    mod searching {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/supersaturation.md")]
    mod supersaturation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
