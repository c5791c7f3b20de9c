//! Armchair nanotube (tubulene) graphs and their distance-based descriptors.
//!
//! An open-ended armchair nanotube `AT(n, p)` is the graph of a hexagonal
//! tessellation of a cylinder with `n` vertical columns of hexagons, each
//! column `p` hexagons tall. This crate builds these graphs combinatorially,
//! enumerates their automorphism group by extending symmetries of the bottom
//! rim cycle, partitions the vertices into orbits, and computes the Wiener
//! and Graovac-Pisanski indices in exact integer arithmetic — both by
//! brute-force BFS oracles and by closed-form polynomial evaluation in
//! `O(p)` time.
//!
//! The two computation routes are kept side by side on purpose: the
//! [`verify`] module sweeps `(n, p)` ranges and cross-checks every closed
//! form against the BFS oracles, exactly.

pub mod armchair;
pub mod closed_form;
pub mod gp;
pub mod graph;
pub mod serialize;
pub mod symmetry;
pub mod verify;

pub use armchair::{RimEnd, TubuleneParams, VertexId};
pub use graph::{DistanceRow, Graph};
pub use symmetry::{Automorphism, GroupStructureReport, OrbitPartition, RimMap};
