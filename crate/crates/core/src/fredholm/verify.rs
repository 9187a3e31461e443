use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{catalog, pullback, FredholmModule, GradingRecipe, Parity, SymmetryRecipe};
use crate::error::Result;
use crate::group_algebra::{AlgebraMap, AlgebraTag, RingElement, Semidirect};
use crate::operator_rep::{RepName, RepresentationSpec, Window, WindowedOperator};
use crate::scalar::{format_rational, Backend, ExactComplex, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub module: String,
    pub window: i64,
    pub backend: Backend,
    pub checks: Vec<AxiomCheck>,
    /// `(generator, rank of [F, π(g)])`, exact backend only.
    pub commutator_ranks: Vec<(String, usize)>,
    pub passed: bool,
}

impl ModuleReport {
    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

fn check(axiom: &str, passed: bool, detail: impl Into<String>) -> AxiomCheck {
    AxiomCheck { axiom: axiom.to_string(), passed, detail: detail.into() }
}

fn residual<S: Scalar>(op: &WindowedOperator<S>) -> String {
    if S::BACKEND == Backend::Exact {
        format!("{} nonzero entries", op.entries().filter(|(_, _, c)| !c.is_negligible(0.0)).count())
    } else {
        format!("max residual {:e}", op.max_abs())
    }
}

/// Checks the Fredholm module axioms on the window of radius `n`:
/// `F = F*`, `F² = 1`, for even modules `γ = γ*`, `γ² = 1`, `γF = -Fγ` and
/// `[γ, π(g)] = 0`, and a compactness proxy for `[F, π(g)]` on generators.
///
/// On the exact backend the proxy is that the commutator ranks agree at `N`
/// and `N + 8`. On the float backend it is that the shell max-norms of the
/// commutators do not increase outward.
pub fn verify_module(module: &FredholmModule, n: i64, tol: f64) -> Result<ModuleReport> {
    verify_module_on(module, n, tol, module.backend())
}

/// [`verify_module`] with an explicit backend. Exact arithmetic is refused
/// for modules whose `F` has irrational entries.
pub fn verify_module_on(module: &FredholmModule, n: i64, tol: f64, backend: Backend) -> Result<ModuleReport> {
    if backend == Backend::Exact && module.backend() == Backend::Float {
        return Err(crate::NcgError::BackendMismatch(format!("module {} has no exact realisation", module.name)));
    }
    let (checks, commutator_ranks) = match backend {
        Backend::Exact => run_checks::<ExactComplex>(module, n, tol)?,
        Backend::Float => run_checks::<Complex64>(module, n, tol)?,
    };
    let passed = checks.iter().all(|c| c.passed);
    Ok(ModuleReport { module: module.name.clone(), window: n, backend, checks, commutator_ranks, passed })
}

type Checks = (Vec<AxiomCheck>, Vec<(String, usize)>);

fn run_checks<S: Scalar>(module: &FredholmModule, n: i64, tol: f64) -> Result<Checks> {
    let window = module.window(n)?;
    let ops = module.operators::<S>(window)?;
    let f = &ops.f;
    let one = WindowedOperator::<S>::identity(window, module.blocks());
    let gens = module.generators();
    let mut checks = Vec::new();

    let d = f.sub(&f.adjoint())?;
    checks.push(check("F = F*", d.is_zero(tol), residual(&d)));
    let d = f.mul(f)?.sub(&one)?;
    checks.push(check("F^2 = 1", d.is_zero(tol), residual(&d)));

    if module.parity == Parity::Even {
        match &ops.gamma {
            None => checks.push(check("grading", false, "even module without a grading")),
            Some(gamma) => {
                let d = gamma.sub(&gamma.adjoint())?;
                checks.push(check("gamma = gamma*", d.is_zero(tol), residual(&d)));
                let d = gamma.mul(gamma)?.sub(&one)?;
                checks.push(check("gamma^2 = 1", d.is_zero(tol), residual(&d)));
                let d = gamma.anticommutator(f)?;
                checks.push(check("gamma F + F gamma = 0", d.is_zero(tol), residual(&d)));
                let mut worst = None;
                for (label, g) in &gens {
                    let d = gamma.commutator(&module.represent::<S>(g, window)?)?;
                    if !d.is_zero(tol) {
                        worst = Some(format!("[gamma, pi({label})]: {}", residual(&d)));
                        break;
                    }
                }
                checks.push(check(
                    "[gamma, pi(a)] = 0",
                    worst.is_none(),
                    worst.unwrap_or_else(|| "all generators".to_string()),
                ));
            }
        }
    }

    let mut ranks = Vec::new();
    match S::BACKEND {
        Backend::Exact => {
            let wider = module.window(n + 8)?;
            let wide_ops = module.operators::<S>(wider)?;
            let mut stable = true;
            let mut detail = Vec::new();
            for (label, g) in &gens {
                let r = f.commutator(&module.represent::<S>(g, window)?)?.rank(tol);
                let r_wide = wide_ops.f.commutator(&module.represent::<S>(g, wider)?)?.rank(tol);
                stable &= r == r_wide;
                detail.push(format!("{label}: {r} (N+8: {r_wide})"));
                ranks.push((label.clone(), r));
            }
            checks.push(check("[F, pi(a)] finite rank", stable, detail.join(", ")));
        }
        Backend::Float => {
            let radii = shell_radii(n);
            let mut decays = !radii.is_empty();
            let mut detail = Vec::new();
            for (label, g) in &gens {
                let norms = shell_norms(module, g, n, &radii)?;
                decays &= norms.windows(2).all(|w| w[1] <= w[0] + tol);
                let shown: Vec<String> = radii.iter().zip(&norms).map(|(r, v)| format!("R={r}: {v:.3e}")).collect();
                detail.push(format!("{label}: {}", shown.join(" ")));
            }
            checks.push(check("[F, pi(a)] shell decay", decays, detail.join("; ")));
        }
    }
    Ok((checks, ranks))
}

/// Radii `R` whose shells `R ≤ |x| ≤ 2R` fit in a window of radius `n`
/// with room for unit-reach generators.
fn shell_radii(n: i64) -> Vec<i64> {
    let top = (n - 3) / 2;
    [top / 4, top / 2, top].into_iter().filter(|&r| r >= 1).collect()
}

/// Max-norm of `[F, π(g)]` over entries whose row and column lie in the shell
/// `R ≤ max(|p|, |q|) ≤ 2R`, for each `R` in `radii`. Needs
/// `n ≥ 2R + 2` for the largest `R`.
pub fn shell_norms(module: &FredholmModule, g: &RingElement, n: i64, radii: &[i64]) -> Result<Vec<f64>> {
    if let Some(&r) = radii.iter().max() {
        if n < 2 * r + 2 {
            return Err(crate::NcgError::WindowTooSmall { needed: 2 * r + 2, have: n });
        }
    }
    let window = module.window(n)?;
    match module.backend() {
        Backend::Exact => shell_max::<ExactComplex>(module, g, window, radii),
        Backend::Float => shell_max::<Complex64>(module, g, window, radii),
    }
}

fn shell_max<S: Scalar>(module: &FredholmModule, g: &RingElement, window: Window, radii: &[i64]) -> Result<Vec<f64>> {
    let ops = module.operators::<S>(window)?;
    let comm = ops.f.commutator(&module.represent::<S>(g, window)?)?;
    Ok(radii.iter().map(|&r| comm.max_abs_where(|s| (r..=2 * r).contains(&window.site_radius(s)))).collect())
}

fn float_commutator(module: &FredholmModule, g: &RingElement, window: Window) -> Result<WindowedOperator<Complex64>> {
    let ops = module.operators::<Complex64>(window)?;
    ops.f.commutator(&module.represent::<Complex64>(g, window)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomotopyStep {
    pub t: String,
    pub self_adjoint_residual: f64,
    pub square_residual: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomotopyReport {
    pub window: i64,
    pub steps: Vec<HomotopyStep>,
    /// Largest entrywise gap between `y₀` and `i*(d1z1_B)`.
    pub y0_gap: f64,
    pub y0_matches: bool,
    /// Largest entry of `[F̃₁, π(U)]`.
    pub y1_commutator: f64,
    pub y1_degenerate: bool,
    pub passed: bool,
}

/// The module `y_t` over `C(T)`: `ℓ²(Z²) ⊕ ℓ²(Z²)`, `U` acting as in
/// `d1z1_B` and `F̃_t = [[0, F_t], [F_t*, 0]]`.
pub fn homotopy_module(t: &BigRational) -> FredholmModule {
    FredholmModule {
        name: format!("y_{}", format_rational(t)),
        parity: Parity::Even,
        algebra: AlgebraTag::CT,
        rep: RepresentationSpec::new(RepName::PiL2Z2).precompose(AlgebraMap::CircleToU),
        symmetry: SymmetryRecipe::Phase { t: t.clone() },
        grading: Some(GradingRecipe::standard()),
    }
}

/// Checks the path `t ↦ y_t` on the window of radius `n`: each `F̃_t` is a
/// symmetry within `tol`, `y₀` is `i*(d1z1_B)` entrywise within `1e-15`, and
/// `y₁` commutes with `π(U)` within `tol`.
pub fn homotopy_check(n: i64, t_grid: &[BigRational], tol: f64) -> Result<HomotopyReport> {
    let steps = t_grid
        .par_iter()
        .map(|t| {
            let m = homotopy_module(t);
            let window = m.window(n)?;
            let f = m.operators::<Complex64>(window)?.f;
            let one = WindowedOperator::identity(window, m.blocks());
            let sa = f.sub(&f.adjoint())?.max_abs();
            let sq = f.mul(&f)?.sub(&one)?.max_abs();
            Ok(HomotopyStep {
                t: format_rational(t),
                self_adjoint_residual: sa,
                square_residual: sq,
                passed: sa <= tol && sq <= tol,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let y0 = homotopy_module(&BigRational::zero());
    let target = pullback(&catalog("d1z1_B")?, AlgebraMap::CircleToU)?;
    let window = y0.window(n)?;
    let y0_gap = y0.operators::<Complex64>(window)?.f.sub(&target.operators::<Complex64>(window)?.f)?.max_abs();

    let y1 = homotopy_module(&BigRational::one());
    let u = RingElement::from(crate::group_algebra::GroupRingElement::basis(Semidirect::U));
    let y1_commutator = float_commutator(&y1, &u, window)?.max_abs();
    let y1_degenerate = super::degeneracy_check(&y1, &[u], n, tol)?;

    let y0_matches = y0_gap <= 1e-15;
    let passed = steps.iter().all(|s| s.passed) && y0_matches && y1_degenerate;
    Ok(HomotopyReport { window: n, steps, y0_gap, y0_matches, y1_commutator, y1_degenerate, passed })
}
