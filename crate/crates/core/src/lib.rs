//! Combinatorial maps on surfaces as flag systems.
//!
//! A map is stored as a set of flags `0..n` together with three fixed-point
//! free involutions `s0`, `s1`, `s2` (the 0-, 1- and 2-adjacency). Vertices,
//! edges and faces are orbits of the two-generator subgroups. On top of that
//! this crate computes the automorphism group, the symmetry type graph
//! (the quotient of the flag graph by the automorphism orbits), the vertex
//! and face type graphs of every element, and classifies 4-orbit maps
//! against the catalog of the 22 possible symmetry type graphs.
//!
//! ```
//! use mapsym_core::{catalog, generators, symmetry};
//!
//! let fs = generators::antiprism(4).unwrap();
//! assert_eq!(symmetry::orbit_count(&fs).unwrap(), 4);
//! assert_eq!(catalog::classify_4orbit(&fs).unwrap().name, "4_Dd");
//! ```

pub mod catalog;
pub mod error;
pub mod flagsys;
pub mod generators;
pub mod perm;
pub mod pregraph;
pub mod report;
pub mod symmetry;

pub use error::{Error, Result};
pub use flagsys::{FlagSystem, MapElements, OrbitPartition, ValidationReport, Violation};
pub use perm::Permutation;
pub use pregraph::{CanonicalCode, Colour, Pregraph};
