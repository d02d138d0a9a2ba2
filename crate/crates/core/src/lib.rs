//! Exact-arithmetic construction of the Grassmann graph `J_q(N,D)`, its
//! subconstituent-algebra apparatus relative to a base vertex `x`, and the
//! nucleus `N(x)` together with its two explicit bases.
//!
//! Arithmetic is over arbitrary-precision rationals throughout.
//!
//! Module map:
//!
//! - [`qfield`]: prime fields, q-integers, q-binomial coefficients and
//!   their identities.
//! - [`projgeom`]: canonical subspaces of `F_q^N`, the poset `P`, the
//!   partition `P_{i,j}` and the cover classification.
//! - [`exactla`]: exact rational matrices, products, elimination and
//!   column-space intersections.
//! - [`grassmann`]: the graph, its distance matrices, spectrum, dual system
//!   and Krein parameters.
//! - [`halgebra`]: the poset matrices `E*_{i,j}`, `K`, `L`, `R`.
//! - [`nucleus`]: the nucleus and the vector families `alpha^vee`, `alpha^N`.

pub mod check;
pub mod error;
pub mod exactla;
pub mod grassmann;
pub mod halgebra;
pub mod nucleus;
pub mod projgeom;
pub mod qfield;

pub use check::{Check, CheckList, Verdict};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
