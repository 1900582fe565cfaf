//! Arc complexes of low-complexity bordered surfaces as finite cell
//! complexes, checked by exact integer homology, together with
//! Dehn–Thurston coordinates on the pair of pants.

pub mod catalog;
pub mod chain;
pub mod pants;
pub mod polygon;
pub mod random;
pub mod surface;
pub mod verify;

pub use chain::{CellComplex, HomologyResult};
pub use surface::{classify, dimension, SphericityVerdict, SurfaceSpec, Type1Id};
