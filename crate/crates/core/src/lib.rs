//! Consistent rotation maps of regular graphs.
//!
//! A rotation map of a `d`-regular graph on `n` vertices labels the `d`
//! edges leaving every vertex with ports `1..=d` and pairs each dart
//! `(v, i)` with the dart `(w, j)` at the other end of the same edge. The
//! map is *consistent* when every vertex also receives its `d` incoming
//! edges on `d` distinct labels, i.e. when every column of the matrix form
//! is a permutation of the vertex set.
//!
//! This crate is `no_std` (it needs `alloc`). It covers:
//!
//! - [`rotation`]: matrix and involution forms, validation, consistency.
//! - [`adjacency`]: adjacency matrices, the row-scan reading, the Kronecker-sum
//!   Cartesian product and its property check.
//! - [`spectrum`]: a cyclic Jacobi eigensolver for symmetric matrices.
//! - [`families`]: closed-form consistent maps for cycles, complete graphs,
//!   `K(n,n)`, generalized Petersen graphs and hypercubes.
//! - [`product`]: consistent maps on `G □ H` assembled cloud by cloud.
//! - [`solver`]: consistent maps for arbitrary regular graphs.
//! - [`shift`]: the dart permutation used as a quantum-walk shift operator.
//!
//! All vertex ids, ports and dart indices in the public API are 1-indexed.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adjacency;
mod error;
pub mod families;
pub mod product;
pub mod rotation;
pub mod shift;
pub mod solver;
pub mod spectrum;

pub use adjacency::AdjacencyMatrix;
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use product::{CartesianProduct, CloudPartition, cartesian_rotation};
pub use rotation::{Dart, RotationMatrix, RotationTable, ValidationReport, Violation, ViolationKind};
pub use shift::ShiftPermutation;
pub use spectrum::Spectrum;
