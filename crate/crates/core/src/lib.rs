//! Exact Möbius functions of finite posets and checks of the identities
//! built on them, each paired with a brute-force oracle.
//!
//! All arithmetic is over arbitrary-precision integers or rationals.

pub mod bits;
pub mod complex;
pub mod error;
pub mod gf;
pub mod instances;
pub mod inversion;
pub mod io;
pub mod lattices;
pub mod matrix;
pub mod matroid;
pub mod null_design;
pub mod oracle;
pub mod poset;
pub mod report;
pub mod suite;
pub mod tree;

pub use error::{Error, Result};
pub use lattices::{Lattice, RankedLattice};
pub use matrix::{IntMatrix, RatMatrix};
pub use poset::Poset;
pub use report::Report;
