use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Dihedral, GroupRingElement, RingElement, Semidirect};
use crate::error::{NcgError, Result};

/// `(m, n) ↦ S^m e^(n mod 2)`, the quotient `C[Z ⋊ Z] → C[Γ]` with `U ↦ S`, `V ↦ e`.
pub fn quotient_hom(b: &GroupRingElement<Semidirect>) -> GroupRingElement<Dihedral> {
    b.map_group(|g| Dihedral::new(g.m, g.n.rem_euclid(2) == 1))
}

/// The automorphism `S ↦ S`, `e ↦ S⁻¹e` of the dihedral group ring.
pub fn alpha_minus_one(a: &GroupRingElement<Dihedral>) -> GroupRingElement<Dihedral> {
    // S^m e ↦ S^m S⁻¹ e
    a.map_group(|g| if g.flip { Dihedral::se(g.power - 1) } else { g })
}

/// Which C*-algebra a module or class lives over. `CT` is `C(T)`, realised
/// as the subring of `C[Z ⋊ Z]` spanned by the powers of `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraTag {
    A,
    B,
    #[serde(rename = "C(T)")]
    CT,
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraTag::A => f.write_str("A"),
            AlgebraTag::B => f.write_str("B"),
            AlgebraTag::CT => f.write_str("C(T)"),
        }
    }
}

impl FromStr for AlgebraTag {
    type Err = NcgError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(AlgebraTag::A),
            "B" | "b" => Ok(AlgebraTag::B),
            "CT" | "C(T)" | "ct" => Ok(AlgebraTag::CT),
            other => Err(NcgError::Unknown { kind: "algebra", name: other.to_string() }),
        }
    }
}

impl AlgebraTag {
    /// Checks that `a` is an element of this algebra's group ring.
    pub fn check_member(self, a: &RingElement) -> Result<()> {
        match (self, a) {
            (AlgebraTag::A, RingElement::Dihedral(_)) => Ok(()),
            (AlgebraTag::B, RingElement::Semidirect(_)) => Ok(()),
            (AlgebraTag::CT, RingElement::Semidirect(x)) if x.support().all(|g| g.n == 0) => Ok(()),
            _ => Err(NcgError::OutsideDomain { what: format!("algebra {self}") }),
        }
    }
}

/// The *-homomorphisms modules are pulled back along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraMap {
    /// Identity on any algebra.
    Identity,
    /// `α₋₁` on `A`.
    AlphaMinusOne,
    /// `B → A`, `U ↦ S`, `V ↦ e`.
    Quotient,
    /// `C(T) → B`, `U ↦ U`.
    CircleToU,
    /// `C(T) → B`, `U ↦ V`: `C(T)` as the crossed product `C ⋊ Z` inside `B`.
    CircleToV,
}

impl AlgebraMap {
    pub fn domain(self) -> Option<AlgebraTag> {
        match self {
            AlgebraMap::Identity => None,
            AlgebraMap::AlphaMinusOne => Some(AlgebraTag::A),
            AlgebraMap::Quotient => Some(AlgebraTag::B),
            AlgebraMap::CircleToU | AlgebraMap::CircleToV => Some(AlgebraTag::CT),
        }
    }

    pub fn codomain(self, domain: AlgebraTag) -> AlgebraTag {
        match self {
            AlgebraMap::Identity => domain,
            AlgebraMap::AlphaMinusOne | AlgebraMap::Quotient => AlgebraTag::A,
            AlgebraMap::CircleToU | AlgebraMap::CircleToV => AlgebraTag::B,
        }
    }

    pub fn apply(self, a: &RingElement) -> Result<RingElement> {
        if let Some(domain) = self.domain() {
            domain.check_member(a)?;
        }
        Ok(match self {
            AlgebraMap::Identity | AlgebraMap::CircleToU => a.clone(),
            AlgebraMap::AlphaMinusOne => alpha_minus_one(a.as_dihedral()?).into(),
            AlgebraMap::Quotient => quotient_hom(a.as_semidirect()?).into(),
            AlgebraMap::CircleToV => a.as_semidirect()?.map_group(|g| Semidirect::new(0, g.m)).into(),
        })
    }
}

impl fmt::Display for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraMap::Identity => "id",
            AlgebraMap::AlphaMinusOne => "alpha_-1",
            AlgebraMap::Quotient => "q",
            AlgebraMap::CircleToU => "i",
            AlgebraMap::CircleToV => "j",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::GroupElement;
    use crate::scalar::real;

    type D = GroupRingElement<Dihedral>;
    type G = GroupRingElement<Semidirect>;

    fn half_plus_half(g: Dihedral) -> D {
        D::from_terms([(Dihedral::IDENTITY, real(1, 2)), (g, real(1, 2))])
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_hom(&G::basis(Semidirect::U)), D::basis(Dihedral::s(1)));
        assert_eq!(quotient_hom(&G::basis(Semidirect::V.pow(2))), D::one());
        let half_v = G::from_terms([(Semidirect::IDENTITY, real(1, 2)), (Semidirect::V, real(1, 2))]);
        assert_eq!(quotient_hom(&half_v), half_plus_half(Dihedral::e()));
    }

    #[test]
    fn quotient_kills_the_centre() {
        for n in -20..=20 {
            assert_eq!(quotient_hom(&G::basis(Semidirect::new(0, 2 * n))), D::one());
        }
    }

    #[test]
    fn alpha_examples() {
        let p1 = half_plus_half(Dihedral::e());
        let p2 = half_plus_half(Dihedral::se(1));
        assert_eq!(alpha_minus_one(&p2), p1);
        assert_eq!(alpha_minus_one(&D::one()), D::one());
        assert_eq!(alpha_minus_one(&p1), half_plus_half(Dihedral::se(-1)));
    }

    #[test]
    fn circle_maps_check_domain() {
        let u = RingElement::from(G::basis(Semidirect::U));
        let v = RingElement::from(G::basis(Semidirect::V));
        assert_eq!(AlgebraMap::CircleToV.apply(&u).unwrap(), v);
        assert_eq!(AlgebraMap::CircleToU.apply(&u).unwrap(), u);
        assert!(AlgebraMap::CircleToU.apply(&v).is_err());
        assert!(AlgebraMap::AlphaMinusOne.apply(&u).is_err());
    }
}
