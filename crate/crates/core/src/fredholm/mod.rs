//! Fredholm modules over `A = C*(Γ)`, `B = C*(Z ⋊ Z)` and `C(T)`, their
//! pullbacks along algebra maps, and the Chern-character pairings with
//! K-theory.

mod catalog;
mod pairing;
mod verify;

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use catalog::{catalog, catalog_names, pullback, CATALOG_NAMES};
pub use pairing::{degeneracy_check, even_pairing, odd_pairing, PairingResult};
pub use verify::{
    homotopy_check, shell_norms, verify_module, verify_module_on, AxiomCheck, HomotopyReport, HomotopyStep,
    ModuleReport,
};

use crate::error::{NcgError, Result};
use crate::group_algebra::{AlgebraTag, RingElement};
use crate::operator_rep::{
    homotopy_operator_ft, represent, sign_operator, RepresentationSpec, Window, WindowKind, WindowedOperator,
};
use crate::scalar::{Backend, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// How to build the symmetry `F` on a given window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryRecipe {
    /// `[[0, 1], [1, 0]]` on `C²`.
    Swap,
    /// `sign(n)` on `ℓ²(Z)`.
    Sign,
    /// `[[0, iF], [-iF, 0]]` on `ℓ²(Z) ⊕ ℓ²(Z)` with `F = sign(n)`.
    OffDiagonalISign,
    /// `[[0, F_t], [F_t*, 0]]` on `ℓ²(Z²) ⊕ ℓ²(Z²)`.
    Phase {
        #[serde(with = "rational_string")]
        t: BigRational,
    },
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::scalar::format_rational(t))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::scalar::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// A diagonal grading, one sign per block: `diag(1, -1)` is the standard one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingRecipe {
    pub block_signs: Vec<i64>,
}

impl GradingRecipe {
    pub fn standard() -> Self {
        GradingRecipe { block_signs: vec![1, -1] }
    }
}

/// A Fredholm module `(H, π, F)` (odd) or `(H, π, F, γ)` (even).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FredholmModule {
    pub name: String,
    pub parity: Parity,
    pub algebra: AlgebraTag,
    pub rep: RepresentationSpec,
    pub symmetry: SymmetryRecipe,
    pub grading: Option<GradingRecipe>,
}

/// `F` and `γ` realised on one window.
#[derive(Clone, Debug)]
pub struct ModuleOperators<S: Scalar> {
    pub window: Window,
    pub f: WindowedOperator<S>,
    pub gamma: Option<WindowedOperator<S>>,
}

impl FredholmModule {
    pub fn backend(&self) -> Backend {
        match self.symmetry {
            SymmetryRecipe::Phase { .. } => Backend::Float,
            _ => Backend::Exact,
        }
    }

    /// The window of radius `n` of the kind this module's Hilbert space needs.
    pub fn window(&self, n: i64) -> Result<Window> {
        match self.rep.window_kind() {
            WindowKind::Point => Ok(Window::point()),
            WindowKind::Interval => Window::interval(n),
            WindowKind::Box => Window::square(n),
        }
    }

    pub fn blocks(&self) -> usize {
        self.rep.blocks()
    }

    pub fn represent<S: Scalar>(&self, a: &RingElement, window: Window) -> Result<WindowedOperator<S>> {
        self.algebra.check_member(a)?;
        represent(&self.rep, a, window)
    }

    pub fn operators<S: Scalar>(&self, window: Window) -> Result<ModuleOperators<S>> {
        if window.kind != self.rep.window_kind() {
            return Err(NcgError::WindowMismatch(format!("module {} on window {window}", self.name)));
        }
        let f = match &self.symmetry {
            SymmetryRecipe::Swap => {
                let one = WindowedOperator::identity(window, 1);
                WindowedOperator::from_blocks(&[vec![None, Some(&one)], vec![Some(&one), None]])?
            }
            SymmetryRecipe::Sign => sign_operator(window)?,
            SymmetryRecipe::OffDiagonalISign => {
                let f = sign_operator::<S>(window)?;
                let upper = f.scale(&S::i());
                let lower = f.scale(&-S::i());
                WindowedOperator::from_blocks(&[vec![None, Some(&upper)], vec![Some(&lower), None]])?
            }
            SymmetryRecipe::Phase { t } => {
                let ft = homotopy_operator_ft::<S>(window, t)?;
                let ft_star = ft.adjoint();
                WindowedOperator::from_blocks(&[vec![None, Some(&ft)], vec![Some(&ft_star), None]])?
            }
        };
        if f.blocks() != self.blocks() {
            return Err(NcgError::DimensionMismatch(format!(
                "module {}: F has {} blocks, representation has {}",
                self.name,
                f.blocks(),
                self.blocks()
            )));
        }
        let gamma = match &self.grading {
            None => None,
            Some(g) => {
                if g.block_signs.len() != self.blocks() {
                    return Err(NcgError::DimensionMismatch(format!(
                        "module {}: grading has {} blocks",
                        self.name,
                        g.block_signs.len()
                    )));
                }
                Some(WindowedOperator::diagonal(window, self.blocks(), |b, _| S::from_i64(g.block_signs[b])))
            }
        };
        Ok(ModuleOperators { window, f, gamma })
    }

    /// Generators of the algebra the module lives over.
    pub fn generators(&self) -> Vec<(String, RingElement)> {
        crate::kclasses::generators(self.algebra)
    }
}
