use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Dihedral, GroupElement, GroupTag, Semidirect};
use crate::error::{NcgError, Result};
use crate::scalar::{ExactComplex, Scalar};

/// A finitely supported element of the complex group ring `C[G]` with exact
/// Gaussian-rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRingElement<G: GroupElement> {
    terms: BTreeMap<G, ExactComplex>,
}

impl<G: GroupElement> GroupRingElement<G> {
    pub fn zero() -> Self {
        GroupRingElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::basis(G::identity())
    }

    pub fn basis(g: G) -> Self {
        Self::term(g, ExactComplex::one())
    }

    pub fn term(g: G, c: ExactComplex) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (G, ExactComplex)>) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    fn add_term(&mut self, g: G, c: ExactComplex) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(ExactComplex::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn coeff(&self, g: G) -> ExactComplex {
        self.terms.get(&g).cloned().unwrap_or_else(ExactComplex::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = G> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Largest normal-form exponent in the support, 0 for the zero element.
    pub fn support_radius(&self) -> i64 {
        self.support().map(G::radius).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, x)| (*g, x.clone() * c.clone())))
    }

    /// The involution `Σ c_g g ↦ Σ conj(c_g) g⁻¹`.
    pub fn star(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, c)| (g.inverse(), Scalar::conj(c))))
    }

    /// Convolution product over the group law.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.op(*h), a.clone() * b.clone());
            }
        }
        out
    }

    /// Linear extension of a map on group elements; a ring homomorphism
    /// whenever `f` is a group homomorphism.
    pub fn map_group<H: GroupElement>(&self, f: impl Fn(G) -> H) -> GroupRingElement<H> {
        GroupRingElement::from_terms(self.terms.iter().map(|(g, c)| (f(*g), c.clone())))
    }

    pub fn is_projection(&self) -> bool {
        self.star() == *self && self.convolve(self) == *self
    }

    pub fn is_unitary(&self) -> bool {
        let one = Self::one();
        self.star().convolve(self) == one && self.convolve(&self.star()) == one
    }
}

impl<G: GroupElement> Add for &GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn add(self, rhs: Self) -> GroupRingElement<G> {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(*g, c.clone());
        }
        out
    }
}

impl<G: GroupElement> Add for GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn add(self, rhs: Self) -> GroupRingElement<G> {
        &self + &rhs
    }
}

impl<G: GroupElement> Neg for &GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn neg(self) -> GroupRingElement<G> {
        self.scale(&-ExactComplex::one())
    }
}

impl<G: GroupElement> Neg for GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn neg(self) -> GroupRingElement<G> {
        -&self
    }
}

impl<G: GroupElement> Sub for &GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn sub(self, rhs: Self) -> GroupRingElement<G> {
        self + &(-rhs)
    }
}

impl<G: GroupElement> Sub for GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn sub(self, rhs: Self) -> GroupRingElement<G> {
        &self - &rhs
    }
}

impl<G: GroupElement> Mul for &GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn mul(self, rhs: Self) -> GroupRingElement<G> {
        self.convolve(rhs)
    }
}

impl<G: GroupElement> Mul for GroupRingElement<G> {
    type Output = GroupRingElement<G>;

    fn mul(self, rhs: Self) -> GroupRingElement<G> {
        self.convolve(&rhs)
    }
}

impl<G: GroupElement> fmt::Display for GroupRingElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (g, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.im.is_zero() {
                write!(f, "({})·{}", c.re, g)?;
            } else {
                write!(f, "({}+{}i)·{}", c.re, c.im, g)?;
            }
        }
        Ok(())
    }
}

/// A group-ring element tagged with its group at runtime, for interfaces
/// (JSON, CLI, module catalog) where the group is data rather than a type.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(into = "super::RingElementJson", try_from = "super::RingElementJson")]
pub enum RingElement {
    Dihedral(GroupRingElement<Dihedral>),
    Semidirect(GroupRingElement<Semidirect>),
}

impl RingElement {
    pub fn tag(&self) -> GroupTag {
        match self {
            RingElement::Dihedral(_) => GroupTag::Dihedral,
            RingElement::Semidirect(_) => GroupTag::Semidirect,
        }
    }

    pub fn one(tag: GroupTag) -> Self {
        match tag {
            GroupTag::Dihedral => RingElement::Dihedral(GroupRingElement::one()),
            GroupTag::Semidirect => RingElement::Semidirect(GroupRingElement::one()),
        }
    }

    fn mismatch(&self, other: &Self) -> NcgError {
        NcgError::TagMismatch { left: self.tag(), right: other.tag() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (RingElement::Dihedral(a), RingElement::Dihedral(b)) => Ok(RingElement::Dihedral(a * b)),
            (RingElement::Semidirect(a), RingElement::Semidirect(b)) => Ok(RingElement::Semidirect(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (RingElement::Dihedral(a), RingElement::Dihedral(b)) => Ok(RingElement::Dihedral(a + b)),
            (RingElement::Semidirect(a), RingElement::Semidirect(b)) => Ok(RingElement::Semidirect(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        match self {
            RingElement::Dihedral(a) => RingElement::Dihedral(a.scale(c)),
            RingElement::Semidirect(a) => RingElement::Semidirect(a.scale(c)),
        }
    }

    pub fn star(&self) -> Self {
        match self {
            RingElement::Dihedral(a) => RingElement::Dihedral(a.star()),
            RingElement::Semidirect(a) => RingElement::Semidirect(a.star()),
        }
    }

    pub fn is_projection(&self) -> bool {
        match self {
            RingElement::Dihedral(a) => a.is_projection(),
            RingElement::Semidirect(a) => a.is_projection(),
        }
    }

    pub fn is_unitary(&self) -> bool {
        match self {
            RingElement::Dihedral(a) => a.is_unitary(),
            RingElement::Semidirect(a) => a.is_unitary(),
        }
    }

    pub fn support_radius(&self) -> i64 {
        match self {
            RingElement::Dihedral(a) => a.support_radius(),
            RingElement::Semidirect(a) => a.support_radius(),
        }
    }

    pub fn as_dihedral(&self) -> Result<&GroupRingElement<Dihedral>> {
        match self {
            RingElement::Dihedral(a) => Ok(a),
            other => Err(NcgError::TagMismatch { left: GroupTag::Dihedral, right: other.tag() }),
        }
    }

    pub fn as_semidirect(&self) -> Result<&GroupRingElement<Semidirect>> {
        match self {
            RingElement::Semidirect(a) => Ok(a),
            other => Err(NcgError::TagMismatch { left: GroupTag::Semidirect, right: other.tag() }),
        }
    }
}

impl From<GroupRingElement<Dihedral>> for RingElement {
    fn from(a: GroupRingElement<Dihedral>) -> Self {
        RingElement::Dihedral(a)
    }
}

impl From<GroupRingElement<Semidirect>> for RingElement {
    fn from(a: GroupRingElement<Semidirect>) -> Self {
        RingElement::Semidirect(a)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Dihedral(a) => a.fmt(f),
            RingElement::Semidirect(a) => a.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{imag, real};

    type D = GroupRingElement<Dihedral>;

    fn half_plus_half(g: Dihedral) -> D {
        D::from_terms([(Dihedral::IDENTITY, real(1, 2)), (g, real(1, 2))])
    }

    #[test]
    fn p1_is_idempotent() {
        let p1 = half_plus_half(Dihedral::e());
        assert_eq!(&p1 * &p1, p1);
        assert!(p1.is_projection());
    }

    #[test]
    fn p2_is_idempotent() {
        let p2 = half_plus_half(Dihedral::se(1));
        assert_eq!(&p2 * &p2, p2);
    }

    #[test]
    fn unit_and_zero() {
        let a = D::from_terms([(Dihedral::s(3), real(2, 3)), (Dihedral::se(-1), imag(1, 1))]);
        assert_eq!(&D::one() * &a, a);
        assert_eq!(&a * &D::one(), a);
        assert!((&a - &a).is_zero());
        assert_eq!(D::from_terms([(Dihedral::s(1), real(0, 1))]).len(), 0);
    }

    #[test]
    fn star_examples() {
        assert_eq!(D::basis(Dihedral::s(1)).star(), D::basis(Dihedral::s(-1)));
        let p1 = half_plus_half(Dihedral::e());
        assert_eq!(p1.star(), p1);
        let ie = D::term(Dihedral::e(), imag(1, 1));
        assert_eq!(ie.star(), D::term(Dihedral::e(), imag(-1, 1)));
    }

    #[test]
    fn projection_and_unitary_checks() {
        assert!(!half_plus_half(Dihedral::s(1)).is_projection());
        assert!(D::basis(Dihedral::se(1)).is_unitary());
        assert!(!D::from_terms([(Dihedral::s(1), real(2, 1))]).is_unitary());
    }

    #[test]
    fn tag_mismatch() {
        let a = RingElement::one(GroupTag::Dihedral);
        let b = RingElement::one(GroupTag::Semidirect);
        assert!(matches!(a.mul(&b), Err(NcgError::TagMismatch { .. })));
        assert!(a.mul(&a).is_ok());
    }
}
