use std::fmt;

use super::{GroupElement, GroupTag};
use crate::error::Result;

/// `(m, n) = U^m V^n` in `Z ⋊ Z`, where `V` acts on `U` by inversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Semidirect {
    pub m: i64,
    pub n: i64,
}

impl Semidirect {
    pub const IDENTITY: Semidirect = Semidirect { m: 0, n: 0 };
    pub const U: Semidirect = Semidirect { m: 1, n: 0 };
    pub const V: Semidirect = Semidirect { m: 0, n: 1 };

    pub const fn new(m: i64, n: i64) -> Self {
        Semidirect { m, n }
    }
}

fn parity_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl GroupElement for Semidirect {
    const TAG: GroupTag = GroupTag::Semidirect;

    fn identity() -> Self {
        Semidirect::IDENTITY
    }

    fn op(self, other: Self) -> Self {
        Semidirect::new(self.m + parity_sign(self.n) * other.m, self.n + other.n)
    }

    fn inverse(self) -> Self {
        Semidirect::new(-parity_sign(self.n) * self.m, -self.n)
    }

    fn coords(self) -> [i64; 2] {
        [self.m, self.n]
    }

    fn from_coords([m, n]: [i64; 2]) -> Result<Self> {
        Ok(Semidirect::new(m, n))
    }

    fn radius(self) -> i64 {
        self.m.abs().max(self.n.abs())
    }
}

impl fmt::Display for Semidirect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}
