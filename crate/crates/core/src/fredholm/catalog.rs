use num_rational::BigRational;
use num_traits::Zero;

use super::{FredholmModule, GradingRecipe, Parity, SymmetryRecipe};
use crate::error::{NcgError, Result};
use crate::group_algebra::{AlgebraMap, AlgebraTag};
use crate::operator_rep::{RepName, RepresentationSpec};

pub const CATALOG_NAMES: [&str; 8] = ["z0_CT", "z1_CT", "w0_A", "w1_A", "w2_A", "w0_B", "w1_B", "d1z1_B"];

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    CATALOG_NAMES.into_iter()
}

fn even(name: &str, algebra: AlgebraTag, base: RepName, symmetry: SymmetryRecipe) -> FredholmModule {
    FredholmModule {
        name: name.to_string(),
        parity: Parity::Even,
        algebra,
        rep: RepresentationSpec::new(base),
        symmetry,
        grading: Some(GradingRecipe::standard()),
    }
}

fn odd(name: &str, algebra: AlgebraTag, base: RepName) -> FredholmModule {
    FredholmModule {
        name: name.to_string(),
        parity: Parity::Odd,
        algebra,
        rep: RepresentationSpec::new(base),
        symmetry: SymmetryRecipe::Sign,
        grading: None,
    }
}

/// The named Fredholm modules:
///
/// | name     | algebra | parity | `H`                 | `π`                        | `F`                      |
/// |----------|---------|--------|---------------------|----------------------------|--------------------------|
/// | `z0_CT`  | C(T)    | even   | `C²`                | `φ ⊕ 0`                    | swap                     |
/// | `z1_CT`  | C(T)    | odd    | `ℓ²(Z)`             | `U` = shift                | `sign(n)`                |
/// | `w0_A`   | A       | even   | `C²`                | `φ ⊕ 0`                    | swap                     |
/// | `w1_A`   | A       | even   | `ℓ²(Z)²`            | `S` = shift, `e e_n = e_{-n}`     | `[[0, iF], [-iF, 0]]` |
/// | `w2_A`   | A       | even   | `ℓ²(Z)²`            | `S` = shift, `e e_n = e_{-n-1}`   | `[[0, iF], [-iF, 0]]` |
/// | `w0_B`   | B       | even   | `C²`                | `φ ⊕ 0`                    | swap                     |
/// | `w1_B`   | B       | odd    | `ℓ²(Z)`             | `U = I`, `V` = shift       | `sign(n)`                |
/// | `d1z1_B` | B       | even   | `ℓ²(Z²)²`           | `V`, `U` lattice moves     | `[[0, F₀], [F₀*, 0]]`    |
pub fn catalog(name: &str) -> Result<FredholmModule> {
    Ok(match name {
        "z0_CT" => even(name, AlgebraTag::CT, RepName::Pi0Circle, SymmetryRecipe::Swap),
        "z1_CT" => odd(name, AlgebraTag::CT, RepName::ShiftCircle),
        "w0_A" => even(name, AlgebraTag::A, RepName::Pi0Dihedral, SymmetryRecipe::Swap),
        "w1_A" => even(name, AlgebraTag::A, RepName::Pi1Dihedral, SymmetryRecipe::OffDiagonalISign),
        "w2_A" => even(name, AlgebraTag::A, RepName::Pi2Dihedral, SymmetryRecipe::OffDiagonalISign),
        "w0_B" => even(name, AlgebraTag::B, RepName::Pi0Semidirect, SymmetryRecipe::Swap),
        "w1_B" => odd(name, AlgebraTag::B, RepName::Pi1SemidirectInduced),
        "d1z1_B" => even(name, AlgebraTag::B, RepName::PiL2Z2, SymmetryRecipe::Phase { t: BigRational::zero() }),
        other => return Err(NcgError::Unknown { kind: "module", name: other.to_string() }),
    })
}

/// `α*(M) = (H, π ∘ α, F, γ)`.
pub fn pullback(module: &FredholmModule, alpha: AlgebraMap) -> Result<FredholmModule> {
    let domain = alpha.domain().unwrap_or(module.algebra);
    if alpha.codomain(domain) != module.algebra {
        return Err(NcgError::OutsideDomain {
            what: format!("pullback of {} (over {}) along {alpha}", module.name, module.algebra),
        });
    }
    if alpha == AlgebraMap::Identity {
        return Ok(module.clone());
    }
    Ok(FredholmModule {
        name: format!("{alpha}*({})", module.name),
        algebra: domain,
        rep: module.rep.precompose(alpha),
        ..module.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in CATALOG_NAMES {
            let m = catalog(name).unwrap();
            assert_eq!(m.name, name);
            assert_eq!(m.parity == Parity::Even, m.grading.is_some());
        }
        assert!(matches!(catalog("w3_A"), Err(NcgError::Unknown { .. })));
    }

    #[test]
    fn pullback_checks_algebras() {
        let w1 = catalog("w1_A").unwrap();
        let w2 = pullback(&w1, AlgebraMap::AlphaMinusOne).unwrap();
        assert_eq!(w2.algebra, AlgebraTag::A);
        assert_eq!(pullback(&w1, AlgebraMap::Identity).unwrap(), w1);
        assert!(pullback(&w1, AlgebraMap::CircleToU).is_err());
        let w1b = catalog("w1_B").unwrap();
        assert_eq!(pullback(&w1b, AlgebraMap::CircleToU).unwrap().algebra, AlgebraTag::CT);
        let w0a = catalog("w0_A").unwrap();
        assert_eq!(pullback(&w0a, AlgebraMap::Quotient).unwrap().algebra, AlgebraTag::B);
    }
}
