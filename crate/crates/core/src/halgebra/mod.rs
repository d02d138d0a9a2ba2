//! The algebra `H = H(x)` acting on the standard module `Ψ` over `P`: the
//! diagonal generators `E*_{i,j}, K_1, K_2`, the raising/lowering maps
//! `L_1, L_2, R_1, R_2`, and the conversion from H-module types to
//! T-module parameters.

mod poset;
mod types;

pub use poset::{build_poset_matrices, poset_size, PosetMatrixSet, DEFAULT_POSET_CAP, PAIRWISE_COVER_CHECK_MAX};
pub use types::{alpha_dominant_multiplicity, type_to_parameters, ConversionCase, ModuleType};
