//! Exact computations in the noncommutative geometry of the group
//! C*-algebras of the infinite dihedral group `Γ = Z ⋊ Z₂` and of `Z ⋊ Z`.

pub mod cyclic;
pub mod error;
pub mod fredholm;
pub mod group_algebra;
pub mod kclasses;
pub mod operator_rep;
pub mod scalar;

pub use error::{NcgError, Result};
