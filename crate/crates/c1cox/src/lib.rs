//! Combinatorial machinery for rational varieties with a torus action of
//! complexity one: defining data and gradings of trinomial algebras, exact
//! polyhedral fans, toric resolution of the associated K*-surfaces, and the
//! du Val catalog.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! no floating point appears anywhere in the crate.

pub mod fan;
pub mod input;
pub mod lattice;
pub mod report;
pub mod ringdata;
pub mod surface;
pub mod trinomial;

pub use lattice::{FgAbelianGroup, GradingMap, Int, IntMatrix};
pub use ringdata::{C1Data, DataVariant};
