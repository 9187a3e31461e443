use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::operator::WindowedOperator;
use super::window::{Site, Window, WindowKind};
use crate::error::{NcgError, Result};
use crate::group_algebra::{AlgebraMap, AlgebraTag, Dihedral, RingElement, Semidirect};
use crate::scalar::Scalar;

/// The concrete representations the module catalog is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepName {
    /// `φ ⊕ 0` on `C²`, `φ(S) = φ(e) = 1`.
    Pi0Dihedral,
    /// `φ ⊕ 0` on `C²`, `φ(U) = φ(V) = 1`.
    Pi0Semidirect,
    /// `φ ⊕ 0` on `C²`, `φ(U) = 1`.
    Pi0Circle,
    /// The character `φ ≡ 1` on group elements, on `C`.
    PhiScalar,
    /// On `ℓ²(Z) ⊕ ℓ²(Z)`: `S e_n = e_{n+1}`, `e e_n = e_{-n}`, with `e ↦ diag(e, -e)`.
    Pi1Dihedral,
    /// As `Pi1Dihedral` but with `e e_n = e_{-(n+1)}`.
    Pi2Dihedral,
    /// On `ℓ²(Z)`: `U ↦ I`, `V e_n = e_{n+1}`.
    Pi1SemidirectInduced,
    /// On `ℓ²(Z²) ⊕ ℓ²(Z²)`: `V e_{p,q} = e_{p+1,q}`, `U e_{p,q} = e_{p,q+(-1)^p}`, doubled.
    #[serde(rename = "pi_l2Z2")]
    PiL2Z2,
    /// On `ℓ²(Z)`: `U e_n = e_{n+1}`.
    ShiftCircle,
}

impl RepName {
    pub const ALL: [RepName; 9] = [
        RepName::Pi0Dihedral,
        RepName::Pi0Semidirect,
        RepName::Pi0Circle,
        RepName::PhiScalar,
        RepName::Pi1Dihedral,
        RepName::Pi2Dihedral,
        RepName::Pi1SemidirectInduced,
        RepName::PiL2Z2,
        RepName::ShiftCircle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RepName::Pi0Dihedral => "pi0_dihedral",
            RepName::Pi0Semidirect => "pi0_semidirect",
            RepName::Pi0Circle => "pi0_circle",
            RepName::PhiScalar => "phi_scalar",
            RepName::Pi1Dihedral => "pi1_dihedral",
            RepName::Pi2Dihedral => "pi2_dihedral",
            RepName::Pi1SemidirectInduced => "pi1_semidirect_induced",
            RepName::PiL2Z2 => "pi_l2Z2",
            RepName::ShiftCircle => "shift_circle",
        }
    }

    pub fn window_kind(self) -> WindowKind {
        match self {
            RepName::Pi0Dihedral | RepName::Pi0Semidirect | RepName::Pi0Circle | RepName::PhiScalar => {
                WindowKind::Point
            }
            RepName::Pi1Dihedral | RepName::Pi2Dihedral | RepName::Pi1SemidirectInduced | RepName::ShiftCircle => {
                WindowKind::Interval
            }
            RepName::PiL2Z2 => WindowKind::Box,
        }
    }

    pub fn blocks(self) -> usize {
        match self {
            RepName::PhiScalar | RepName::Pi1SemidirectInduced | RepName::ShiftCircle => 1,
            _ => 2,
        }
    }

    /// `None` for the character, which is defined on every group ring here.
    pub fn algebra(self) -> Option<AlgebraTag> {
        match self {
            RepName::Pi0Dihedral | RepName::Pi1Dihedral | RepName::Pi2Dihedral => Some(AlgebraTag::A),
            RepName::Pi0Semidirect | RepName::Pi1SemidirectInduced | RepName::PiL2Z2 => Some(AlgebraTag::B),
            RepName::Pi0Circle | RepName::ShiftCircle => Some(AlgebraTag::CT),
            RepName::PhiScalar => None,
        }
    }

    fn dihedral_image(self, g: Dihedral, block: usize, site: Site) -> Option<(usize, Site, i64)> {
        let n = site[0];
        let m = g.power;
        match self {
            RepName::Pi0Dihedral | RepName::PhiScalar => (block == 0).then_some((0, site, 1)),
            RepName::Pi1Dihedral | RepName::Pi2Dihedral => {
                let target = match (self, g.flip) {
                    (_, false) => m + n,
                    (RepName::Pi1Dihedral, true) => m - n,
                    _ => m - n - 1,
                };
                let sign = if block == 1 && g.flip { -1 } else { 1 };
                Some((block, [target, 0], sign))
            }
            _ => None,
        }
    }

    fn semidirect_image(self, g: Semidirect, block: usize, site: Site) -> Option<(usize, Site, i64)> {
        match self {
            RepName::Pi0Semidirect | RepName::Pi0Circle | RepName::PhiScalar => (block == 0).then_some((0, site, 1)),
            RepName::Pi1SemidirectInduced => Some((block, [site[0] + g.n, 0], 1)),
            RepName::ShiftCircle => Some((block, [site[0] + g.m, 0], 1)),
            RepName::PiL2Z2 => {
                // U^m V^n e_{p,q} = e_{p+n, q + m(-1)^(p+n)}
                let p = site[0] + g.n;
                let sign = if p.rem_euclid(2) == 0 { 1 } else { -1 };
                Some((block, [p, site[1] + sign * g.m], 1))
            }
            _ => None,
        }
    }

    fn dihedral_reach(self, g: Dihedral) -> i64 {
        match self {
            RepName::Pi1Dihedral => g.power.abs(),
            RepName::Pi2Dihedral => g.power.abs() + g.flip as i64,
            _ => 0,
        }
    }

    fn semidirect_reach(self, g: Semidirect) -> i64 {
        match self {
            RepName::Pi1SemidirectInduced => g.n.abs(),
            RepName::ShiftCircle => g.m.abs(),
            RepName::PiL2Z2 => g.m.abs().max(g.n.abs()),
            _ => 0,
        }
    }
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RepName {
    type Err = NcgError;

    fn from_str(s: &str) -> Result<Self> {
        RepName::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| NcgError::Unknown { kind: "representation", name: s.to_string() })
    }
}

/// A base representation precomposed with algebra maps: `a ↦ π(φ_1(⋯φ_k(a)))`,
/// where `maps = [φ_k, …, φ_1]` is stored in application order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepresentationSpec {
    pub base: RepName,
    pub maps: Vec<AlgebraMap>,
}

impl RepresentationSpec {
    pub fn new(base: RepName) -> Self {
        RepresentationSpec { base, maps: Vec::new() }
    }

    /// `a ↦ π(α(a))`
    pub fn precompose(&self, alpha: AlgebraMap) -> Self {
        let mut maps = vec![alpha];
        maps.extend(self.maps.iter().copied());
        RepresentationSpec { base: self.base, maps }
    }

    /// The algebra the representation accepts, when it is pinned down.
    pub fn algebra(&self) -> Option<AlgebraTag> {
        self.maps.iter().find_map(|m| m.domain()).or_else(|| self.base.algebra())
    }

    pub fn window_kind(&self) -> WindowKind {
        self.base.window_kind()
    }

    pub fn blocks(&self) -> usize {
        self.base.blocks()
    }

    /// Pushes `a` through the precomposed maps into the base algebra.
    pub fn pushforward(&self, a: &RingElement) -> Result<RingElement> {
        if let Some(alg) = self.algebra() {
            alg.check_member(a)?;
        }
        let mut x = a.clone();
        for m in &self.maps {
            x = m.apply(&x)?;
        }
        if let Some(alg) = self.base.algebra() {
            alg.check_member(&x)?;
        }
        Ok(x)
    }

    pub fn describe(&self) -> String {
        let mut s = self.base.to_string();
        for m in self.maps.iter().rev() {
            s.push_str(&format!(" ∘ {m}"));
        }
        s
    }
}

/// The windowed compression of `π(a)`.
pub fn represent<S: Scalar>(spec: &RepresentationSpec, a: &RingElement, window: Window) -> Result<WindowedOperator<S>> {
    if window.kind != spec.window_kind() {
        return Err(NcgError::WindowMismatch(format!(
            "{} acts on a {:?} window, got {window}",
            spec.base,
            spec.window_kind()
        )));
    }
    let x = spec.pushforward(a)?;
    let base = spec.base;
    let blocks = base.blocks();
    let (reach, op) = match &x {
        RingElement::Dihedral(el) => {
            let reach = el.support().map(|g| base.dihedral_reach(g)).max().unwrap_or(0);
            let terms: Vec<(Dihedral, S)> = el.terms().map(|(g, c)| (*g, S::from_exact(c))).collect();
            let op = WindowedOperator::from_action(window, blocks, reach, |b, site| {
                terms
                    .iter()
                    .filter_map(|(g, c)| {
                        base.dihedral_image(*g, b, site).map(|(b2, s2, sign)| (b2, s2, c.clone() * S::from_i64(sign)))
                    })
                    .collect()
            });
            (reach, op)
        }
        RingElement::Semidirect(el) => {
            let reach = el.support().map(|g| base.semidirect_reach(g)).max().unwrap_or(0);
            let terms: Vec<(Semidirect, S)> = el.terms().map(|(g, c)| (*g, S::from_exact(c))).collect();
            let op = WindowedOperator::from_action(window, blocks, reach, |b, site| {
                terms
                    .iter()
                    .filter_map(|(g, c)| {
                        base.semidirect_image(*g, b, site).map(|(b2, s2, sign)| (b2, s2, c.clone() * S::from_i64(sign)))
                    })
                    .collect()
            });
            (reach, op)
        }
    };
    if window.kind != WindowKind::Point && reach >= window.radius {
        return Err(NcgError::WindowTooSmall { needed: reach + 1, have: window.radius });
    }
    Ok(op)
}
