//! Character theory: complex character tables, Frobenius–Schur types, real
//! irreducibles and fixed-point dimensions.
//!
//! Character values are complex floating point. Every quantity that must be
//! an integer (degrees, indicators, fixed dimensions, multiplicities) is
//! rounded and rejected when the residual exceeds
//! [`real::INTEGRALITY_TOLERANCE`].

pub mod characters;
mod modp;
pub mod real;

pub use characters::{character_table, element_classes, CharacterTable, ElementClass};
pub use real::{
    complex_fixed_dim, fixed_dim, fixed_dim_matrix, frobenius_schur, perm_character_decomposition,
    real_irreducibles, FixedDimMatrix, FsType, RealIrrep, RealIrrepSet,
};
