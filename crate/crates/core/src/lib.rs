//! Exact symbolic toolkit for integer partitions and symmetric polynomials.
//!
//! The crate is organized bottom-up:
//!
//! - [`partitions`]: Young diagrams, conjugacy-class vectors, shape statistics,
//!   Frobenius coordinates and accelerated ascending-composition enumeration.
//! - [`polyalgebra`]: sparse multivariate polynomials over arbitrary-precision
//!   rationals in the variables `Q`, `t_j` (Miwa coordinates) and `x_i`.
//! - [`characters`]: symmetric-group characters by the Murnaghan–Nakayama rule,
//!   centralizer orders and hook-length dimensions.
//! - [`symfun`]: complete homogeneous, elementary, (skew-)Schur, monomial and
//!   Hall–Littlewood polynomials.
//! - [`cli`]: the `symmpol` command-line front end.

pub mod characters;
pub mod cli;
pub mod partitions;
pub mod polyalgebra;
pub mod symfun;

pub use characters::{character, dimension, z_order, CharacterError, CharacterQuery};
pub use partitions::{
    enumerate_partitions, make_partition, ConjugacyClass, FrobeniusCoords, PartitionError,
    ShapeProfile, YoungDiagram,
};
pub use polyalgebra::{Monomial, PolyError, Polynomial, Variable};
pub use symfun::{AlphabetContext, MiwaContext, SymFunError};
