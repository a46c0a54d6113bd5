//! Exact equivariant Kazhdan–Lusztig polynomials of thagomizer matroids.
//!
//! Symmetric functions are carried with coefficients in `Z[t]`; products
//! run through the h-basis and results are presented in the Schur basis.
//! The [`kl`] module computes `P_n(x;t)` three ways, and [`matroid`]
//! recomputes the non-equivariant values directly from lattices of flats.

pub mod cli;
pub mod kl;
pub mod matroid;
pub mod partition;
pub mod poly;
pub mod symfunc;
pub mod verify;

pub use partition::Partition;
pub use poly::IntPoly;
pub use symfunc::{HPoly, SchurPoly};
