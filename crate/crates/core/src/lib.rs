//! Rainbow triangle analysis for edge-colored graphs.
//!
//! The crate counts rainbow triangles exactly, evaluates color-degree lower
//! bounds on the number of rainbow triangles as exact rationals, reduces
//! graphs to edge-minimal subgraphs with the same color degrees, generates
//! the extremal constructions, and finds rainbow friendship subgraphs with
//! a general maximum matching.
//!
//! ```
//! use rainbow_census::{census, generators, bounds};
//!
//! let g = generators::rainbow_turan(9, 3).unwrap();
//! assert_eq!(census::count_rainbow_fast(&g).total, 27);
//! let verdict = bounds::bound_rt1(&g);
//! assert!(verdict.satisfied);
//! ```

pub mod bounds;
pub mod census;
pub mod cli;
pub mod error;
pub mod experiment;
pub mod friendship;
pub mod generators;
pub mod io;
pub mod graph;
pub mod link;
pub mod matching;
pub mod rational;
pub mod reduction;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Color, Edge, EdgeColoredGraph, Vertex, VertexColorProfile};
