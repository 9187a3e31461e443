//! Cyclic cochains on `CΓ`: defining data, the boundary `b`, cyclicity,
//! the periodicity operator `S`, coboundary solvers and pairings with
//! projections.
//!
//! Cochains are evaluated on group elements and extended multilinearly.
//! Group elements are written `S^m e^ε`; a "bound" `B` means `|m| ≤ B`.

mod cochains;
mod data;
mod solve;
mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use cochains::{
    boundary_b, periodicity_s, psi, psi_k, Boundary, Cocycle, Cocycle1, ExplicitCochain, Functional0, Periodicity2,
    Trace0,
};
pub use data::{cocycle_from_data, CochainData};
pub use solve::{solve_1_coboundary, solve_2_coboundary, PeriodicPrimitive};
pub use verify::{
    duality_matrix, random_cocycle1, random_trace0, suite_boundary_squared, suite_cocycle_condition, suite_duality,
    suite_s_compatibility, suite_solve_1, suite_solve_2, verify_identity, DualityReport, Failure, VerificationReport,
};

use crate::error::{NcgError, Result};
use crate::group_algebra::{Dihedral, GroupElement, GroupRingElement};
use crate::scalar::{factorial, real, ExactComplex};

/// A multilinear functional on `(degree + 1)`-tuples, given on group elements.
pub trait Cochain: Sync {
    fn degree(&self) -> usize;

    /// The value on a tuple of group elements; `args.len() == degree + 1`.
    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex>;
}

/// All `S^m` and `S^m e` with `|m| ≤ bound`.
pub fn words(bound: i64) -> Vec<Dihedral> {
    (-bound..=bound).flat_map(|m| [Dihedral::s(m), Dihedral::se(m)]).collect()
}

fn check_arity(c: &dyn Cochain, got: usize) -> Result<()> {
    if got != c.degree() + 1 {
        return Err(NcgError::ArityMismatch { expected: c.degree() + 1, got });
    }
    Ok(())
}

/// The multilinear extension of `c` to group-ring elements.
pub fn eval(c: &dyn Cochain, args: &[GroupRingElement<Dihedral>]) -> Result<ExactComplex> {
    check_arity(c, args.len())?;
    let mut total = ExactComplex::zero();
    let mut tuple = Vec::with_capacity(args.len());
    expand(c, args, &mut tuple, real(1, 1), &mut total)?;
    Ok(total)
}

fn expand(
    c: &dyn Cochain,
    args: &[GroupRingElement<Dihedral>],
    tuple: &mut Vec<Dihedral>,
    weight: ExactComplex,
    total: &mut ExactComplex,
) -> Result<()> {
    match args.split_first() {
        None => {
            *total = total.clone() + weight * c.value(tuple)?;
            Ok(())
        }
        Some((head, rest)) => {
            for (g, coeff) in head.terms() {
                tuple.push(*g);
                expand(c, rest, tuple, weight.clone() * coeff.clone(), total)?;
                tuple.pop();
            }
            Ok(())
        }
    }
}

/// Checks `c(x₀, …, xₙ) = (-1)ⁿ c(xₙ, x₀, …, xₙ₋₁)` on all tuples of words
/// within `bound`; for `n = 0` this is the trace property `c(xy) = c(yx)`.
pub fn is_cyclic(c: &dyn Cochain, bound: i64) -> Result<bool> {
    let ws = words(bound);
    let n = c.degree();
    if n == 0 {
        for x in &ws {
            for y in &ws {
                if c.value(&[x.op(*y)])? != c.value(&[y.op(*x)])? {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    let report = verify_identity("cyclicity", n + 1, bound, |t| {
        let mut rotated = Vec::with_capacity(t.len());
        rotated.push(t[n]);
        rotated.extend_from_slice(&t[..n]);
        let rhs = c.value(&rotated)?;
        Ok((c.value(t)?, if n % 2 == 1 { -rhs } else { rhs }))
    })?;
    Ok(report.passed())
}

/// `(n!)⁻¹ c(p, …, p)` for a cochain of degree `2n`.
pub fn pair_with_projection(c: &dyn Cochain, p: &GroupRingElement<Dihedral>) -> Result<ExactComplex> {
    if !c.degree().is_multiple_of(2) {
        return Err(NcgError::WrongParity {
            module: format!("cochain of degree {}", c.degree()),
            parity: "odd".into(),
            required: "even".into(),
        });
    }
    if &(p * p) != p {
        return Err(NcgError::NotAProjection(p.to_string()));
    }
    let args = vec![p.clone(); c.degree() + 1];
    let n = (c.degree() / 2) as u32;
    let norm = BigRational::new(BigInt::from(1), factorial(n));
    Ok(eval(c, &args)?.scale(norm))
}
