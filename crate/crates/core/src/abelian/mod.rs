//! Exact integer linear algebra over ℤ: normal forms, subgroup calculus and
//! cohomology of complexes of finitely generated free abelian groups.

pub mod complex;
pub mod field_model;
pub mod group;
pub mod hnf;
pub mod matrix;
pub mod snf;

pub use complex::{complex_cohomology, complex_cohomology_mod};
pub use field_model::{coefficient_value, uct_mod, FieldModel, GroupValue};
pub use group::FgAbelianGroup;
pub use hnf::{hermite_normal_form, image_basis, kernel_basis, Subgroup};
pub use matrix::IntMatrix;
pub use snf::{cokernel, rank, smith_normal_form, solve, SmithNormalForm};
