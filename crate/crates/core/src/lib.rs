//! Exact computations on quantum quivers.
//!
//! A quantum quiver is a pair of finite-dimensional C*-algebras, a vertex
//! algebra `B0` and an edge algebra `B1`, joined by two unital
//! *-homomorphisms `r, s: B0 -> B1`. Every algebra is a product of matrix
//! blocks and every map in scope is *regular* (diagonal copies of blocks), so
//! everything here is integer combinatorics on block sizes and diagonal
//! offsets. No floating point appears anywhere.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON and the
//! command line live in the `qquiver-cli` companion crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
#[cfg(test)]
mod fixtures;
pub mod hom;
pub mod lpa;
pub mod quiver;
pub mod relcheck;
pub mod vmonoid;

pub use algebra::{AlgebraShape, Block, IntLinearMap, MatrixUnit, ShapeError};
pub use hom::{HomError, OrderTable, RegularEmbedding, UnitImage, UnitalityReport};
pub use lpa::{GenKind, GeneratorSymbol, LpaPresentation, Poly, Word};
pub use quiver::{DirectedGraph, GraphEdge, QuantumQuiver, QuiverError, WeakIsoWitness};
pub use vmonoid::{MonoidElement, MonoidPresentation};
