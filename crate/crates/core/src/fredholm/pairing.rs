use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{FredholmModule, Parity, SymmetryRecipe};
use crate::error::{NcgError, Result};
use crate::group_algebra::RingElement;
use crate::operator_rep::linalg::rank_of_submatrix;
use crate::operator_rep::{Window, WindowKind, WindowedOperator};
use crate::scalar::{as_integer, Backend, ExactComplex, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingResult {
    pub value: i64,
    /// Pairing value at each degree `n` checked (even pairings only).
    pub values: Vec<i64>,
    pub degrees_checked: Vec<u32>,
    pub stabilized: bool,
    pub window_used: i64,
}

fn require_parity(module: &FredholmModule, parity: Parity) -> Result<()> {
    if module.parity != parity {
        return Err(NcgError::WrongParity {
            module: module.name.clone(),
            parity: module.parity.to_string(),
            required: parity.to_string(),
        });
    }
    Ok(())
}

fn require_exact(module: &FredholmModule) -> Result<()> {
    if module.backend() != Backend::Exact {
        return Err(NcgError::BackendMismatch(format!(
            "pairings are computed exactly; module {} needs the float backend",
            module.name
        )));
    }
    Ok(())
}

/// The even Chern-character pairing
/// `⟨ch(M), [p]⟩ = (-1)ⁿ Tr(γ π(p) [F, π(p)]^{2n})`, evaluated exactly for
/// `n = 1..=n_max` and accepted once the last two degrees agree.
///
/// The window must satisfy `N ≥ r(2 n_max + 1) + 2`, where `r` is the
/// reach of `π(p)`.
pub fn even_pairing(module: &FredholmModule, p: &RingElement, n_max: u32, n: i64) -> Result<PairingResult> {
    require_parity(module, Parity::Even)?;
    require_exact(module)?;
    if n_max < 2 {
        return Err(NcgError::InvalidArgument(format!("n_max must be ≥ 2, got {n_max}")));
    }
    module.algebra.check_member(p)?;
    if !p.is_projection() {
        return Err(NcgError::NotAProjection(p.to_string()));
    }
    let window = module.window(n)?;
    let ops = module.operators::<ExactComplex>(window)?;
    let gamma = ops.gamma.as_ref().expect("even modules carry a grading");
    let pi_p = module.represent::<ExactComplex>(p, window)?;
    if window.kind != WindowKind::Point {
        let needed = pi_p.reach() * (2 * n_max as i64 + 1) + 2;
        if n < needed {
            return Err(NcgError::WindowTooSmall { needed, have: n });
        }
    }
    let comm = ops.f.commutator(&pi_p)?;
    let comm_sq = comm.mul(&comm)?;
    let head = gamma.mul(&pi_p)?;
    let mut power = WindowedOperator::identity(window, module.blocks());
    let mut values = Vec::with_capacity(n_max as usize);
    for k in 1..=n_max {
        power = comm_sq.mul(&power)?;
        let x = head.mul(&power)?;
        if !x.interior_exact() {
            let needed = n + x.support_radius() - x.exact_radius();
            return Err(NcgError::WindowTooSmall { needed, have: n });
        }
        let mut tr = x.trace();
        if k % 2 == 1 {
            tr = -tr;
        }
        let v = as_integer(&tr).ok_or_else(|| NcgError::NonIntegral(format!("{tr}")))?;
        values.push(v);
    }
    let last = values[values.len() - 1];
    let stabilized = values[values.len() - 2] == last;
    if !stabilized {
        return Err(NcgError::NotStabilized { values: values.iter().map(i64::to_string).collect() });
    }
    Ok(PairingResult {
        value: last,
        values,
        degrees_checked: (1..=n_max).collect(),
        stabilized,
        window_used: window.radius,
    })
}

/// The odd pairing `⟨ch(M), [u]⟩ = Index(E π(u) E)` with `E = ½(1 + F)`,
/// computed as `dim ker(E π(u)* E) - dim ker(E π(u) E)`.
///
/// The compressions are taken on rectangles: the domain is the part of
/// `EH` within radius `N - b` and the codomain the part within `N`, where
/// `b` is the reach of `π(u)`, so no basis vector of the domain is mapped
/// out of the window and the truncation adds no kernel.
pub fn odd_pairing(module: &FredholmModule, u: &RingElement, n: i64) -> Result<PairingResult> {
    require_parity(module, Parity::Odd)?;
    require_exact(module)?;
    if module.symmetry != SymmetryRecipe::Sign {
        return Err(NcgError::InvalidArgument(format!(
            "odd pairing needs a diagonal ±1 symmetry, module {} has {:?}",
            module.name, module.symmetry
        )));
    }
    module.algebra.check_member(u)?;
    if !u.is_unitary() {
        return Err(NcgError::NotUnitary(u.to_string()));
    }
    let window = module.window(n)?;
    let pi_u = module.represent::<ExactComplex>(u, window)?;
    let bandwidth = pi_u.reach();
    let needed = u.support_radius() + bandwidth + 2;
    if n < needed {
        return Err(NcgError::WindowTooSmall { needed, have: n });
    }
    let ops = module.operators::<ExactComplex>(window)?;
    let positive = |w: Window, limit: i64| -> Vec<usize> {
        (0..ops.f.dim())
            .filter(|&i| {
                let (_, site) = ops.f.locate(i);
                w.site_radius(site) <= limit && ops.f.get(i, i) == ExactComplex::from_i64(1)
            })
            .collect()
    };
    let domain = positive(window, n - bandwidth);
    let codomain = positive(window, n);
    let nullity = |op: &WindowedOperator<ExactComplex>| {
        domain.len() - rank_of_submatrix(&codomain, &domain, |i, j| op.get(i, j), 0.0)
    };
    let k_minus = nullity(&pi_u);
    let k_plus = nullity(&pi_u.adjoint());
    let value = k_plus as i64 - k_minus as i64;
    Ok(PairingResult { value, values: vec![value], degrees_checked: Vec::new(), stabilized: true, window_used: n })
}

/// True iff `[F, π(g)] = 0` for every generator, exactly on the exact
/// backend and within `tol` on the float backend.
pub fn degeneracy_check(module: &FredholmModule, gens: &[RingElement], n: i64, tol: f64) -> Result<bool> {
    let window = module.window(n)?;
    for g in gens {
        let zero = match module.backend() {
            Backend::Exact => commutator_is_zero::<ExactComplex>(module, g, window, tol)?,
            Backend::Float => commutator_is_zero::<Complex64>(module, g, window, tol)?,
        };
        if !zero {
            return Ok(false);
        }
    }
    Ok(true)
}

fn commutator_is_zero<S: Scalar>(module: &FredholmModule, g: &RingElement, window: Window, tol: f64) -> Result<bool> {
    let ops = module.operators::<S>(window)?;
    let pi_g = module.represent::<S>(g, window)?;
    Ok(ops.f.commutator(&pi_g)?.is_zero(tol))
}
