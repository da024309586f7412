//! Burnside rings of small finite groups.
//!
//! The crate builds permutation groups, enumerates conjugacy classes of
//! subgroups, computes the table of marks and the multiplication tensor of
//! the Burnside ring `A(G)`, and works with its units. Character tables over
//! ℂ yield the real irreducible representations, whose fixed-point dimensions
//! give the basic degrees `deg_{𝒱_k}`. Every unit of `A(G)` is then factored
//! as a product of basic degrees by solving a parity system over GF(2).
//!
//! ```
//! use burnside_core::{verify_generation, Limits, Pipeline};
//!
//! let p = Pipeline::from_spec("symmetric:3", Limits::default()).unwrap();
//! let report = verify_generation(&p).unwrap();
//! assert_eq!(report.unit_count, 8);
//! assert!(report.is_success());
//! ```

// Matrix code reads more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod degree;
pub mod error;
pub mod gf2;
pub mod group;
pub mod gset;
pub mod marks;
pub mod pipeline;
pub mod poly;
pub mod rep;
pub mod ring;
pub mod subgroups;
pub mod units;

pub use catalog::{catalog_group, catalog_up_to, resolve_group, STANDARD_CATALOG};
pub use degree::{
    all_basic_degrees, basic_degree, basic_degree_by_recurrence, basic_ghost, degree_of_linear_iso,
    degree_product, ghost_degree_linear, negative_eigen_multiplicities, BasicDegree, SpectralBlock,
    SpectralInput,
};
pub use error::{Error, Result};
pub use group::{group_from_generators, perm_from_cycles, FiniteGroup, GroupFile, Perm, DEFAULT_MAX_ORDER};
pub use gset::{GSet, IsotropyCount};
pub use marks::{mark, table_of_marks, MarksMatrix};
pub use pipeline::{Limits, Pipeline};
pub use rep::{
    character_table, fixed_dim_matrix, perm_character_decomposition, real_irreducibles, CharacterTable,
    FixedDimMatrix, FsType, RealIrrep, RealIrrepSet,
};
pub use ring::{
    enumerate_units, ghost_map, ghost_preimage, is_unit, mult_tensor, multiply, power, BurnsideElement,
    GhostVector, MultTensor, DEFAULT_MAX_CLASSES,
};
pub use subgroups::{
    subgroup_classes, subgroup_classes_with_cap, ClassRef, Subgroup, SubgroupClass, SubgroupClassTable,
    DEFAULT_MAX_SUBGROUPS,
};
pub use units::{
    factor_unit, factor_unit_with, parity_vector, solve_parity, solve_parity_with, Factorization,
    ParityVector, SolutionRule, UnitResult, VerificationReport, VerificationStatus, verify_generation,
};
