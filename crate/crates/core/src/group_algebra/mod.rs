//! The infinite dihedral group `Γ = Z ⋊ Z₂`, the semidirect product
//! `G = Z ⋊ Z`, their complex group rings, and the homomorphisms between
//! them that the K-homology calculations pull modules back along.

mod dihedral;
mod hom;
mod ring;
mod semidirect;
mod serial;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

pub use dihedral::{conjugacy_class, Dihedral};
pub use hom::{alpha_minus_one, quotient_hom, AlgebraMap, AlgebraTag};
pub use ring::{GroupRingElement, RingElement};
pub use semidirect::Semidirect;
pub use serial::{RingElementJson, TermJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupTag {
    Dihedral,
    Semidirect,
}

impl Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Dihedral => f.write_str("dihedral"),
            GroupTag::Semidirect => f.write_str("semidirect"),
        }
    }
}

/// A group whose elements have a canonical two-integer normal form.
pub trait GroupElement: Copy + Ord + Eq + Hash + Debug + Display + Send + Sync + 'static {
    const TAG: GroupTag;

    fn identity() -> Self;

    fn op(self, other: Self) -> Self;

    fn inverse(self) -> Self;

    /// The normal-form coordinates, `[m, ε]` or `[m, n]`.
    fn coords(self) -> [i64; 2];

    fn from_coords(coords: [i64; 2]) -> crate::Result<Self>;

    /// Largest absolute exponent in the normal form; used for window sizing.
    fn radius(self) -> i64;

    fn pow(self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.op(base))
    }
}
