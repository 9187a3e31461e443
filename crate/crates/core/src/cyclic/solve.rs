use num_traits::Zero;

use super::{Cochain, Cocycle1, Functional0};
use crate::error::{NcgError, Result};
use crate::group_algebra::Dihedral;
use crate::scalar::{real, ExactComplex};

/// A functional `ψ` with `bψ = φ`, tabulated for `|m| ≤ bound`:
/// `a_m = -d_m` for `m > 0` and `0` otherwise;
/// `b_{2m} = c₁ + c₃ + … + c_{2m-1}` (`m > 0`), `0` (`m = 0`),
/// `-(c₋₁ + c₋₃ + … + c_{2m+1})` (`m < 0`);
/// `b_{2m+1} = c₀ + c₂ + … + c_{2m}` (`m ≥ 0`), `-(c₋₂ + c₋₄ + … + c_{2m+2})` (`m < 0`).
pub fn solve_1_coboundary(phi: &Cocycle1, bound: i64) -> Functional0 {
    let a = |m: i64| if m > 0 { -phi.d_at(m) } else { ExactComplex::zero() };
    // c_lo + c_{lo+2} + … + c_hi
    let sum = |lo: i64, hi: i64| (lo..=hi).step_by(2).fold(ExactComplex::zero(), |acc, i| acc + phi.c_at(i));
    let b = |j: i64| {
        let m = j.div_euclid(2);
        match (j.rem_euclid(2), m.signum()) {
            (0, 1) => sum(1, 2 * m - 1),
            (0, -1) => -sum(2 * m + 1, -1),
            (0, _) => ExactComplex::zero(),
            (_, -1) => -sum(2 * m + 2, -2),
            _ => sum(0, 2 * m),
        }
    };
    Functional0::from_fn(bound, a, b)
}

/// A 1-cochain `φ` with `bφ = Sψ_k`, in coefficient form:
/// `φ(S^m, Sⁿ) = α_{m,n}`, `φ(S^m, Sⁿe) = β_{m,n}`, `φ(S^m e, Sⁿ) = -β_{n,m}`,
/// `φ(S^m e, Sⁿe) = γ_{m,n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicPrimitive {
    k: i64,
    c_k: ExactComplex,
}

/// Rejects `k = 0`: `Sψ₀` is not a coboundary.
pub fn solve_2_coboundary(k: i64, c_k: ExactComplex) -> Result<PeriodicPrimitive> {
    if k == 0 {
        return Err(NcgError::InvalidArgument("k = 0 has no solution: psi_0 is not a coboundary".into()));
    }
    Ok(PeriodicPrimitive { k, c_k })
}

impl PeriodicPrimitive {
    pub fn k(&self) -> i64 {
        self.k
    }

    /// `(m - n)/(m + n)` on `m + n = ±k`, else `0`.
    pub fn alpha(&self, m: i64, n: i64) -> ExactComplex {
        if (m + n).abs() == self.k.abs() {
            real(m - n, m + n)
        } else {
            ExactComplex::zero()
        }
    }

    pub fn beta(&self, _m: i64, _n: i64) -> ExactComplex {
        ExactComplex::zero()
    }

    /// `2n/k - c_k` on `m - n = k`, `-2m/k + c_k` on `m - n = -k`, else `0`.
    pub fn gamma(&self, m: i64, n: i64) -> ExactComplex {
        if m - n == self.k {
            real(2 * n, self.k) - self.c_k.clone()
        } else if m - n == -self.k {
            real(-2 * m, self.k) + self.c_k.clone()
        } else {
            ExactComplex::zero()
        }
    }
}

impl Cochain for PeriodicPrimitive {
    fn degree(&self) -> usize {
        1
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        let (x, y) = (args[0], args[1]);
        Ok(match (x.flip, y.flip) {
            (false, false) => self.alpha(x.power, y.power),
            (false, true) => self.beta(x.power, y.power),
            (true, false) => -self.beta(y.power, x.power),
            (true, true) => self.gamma(x.power, y.power),
        })
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    #[test]
    fn single_odd_coefficient() {
        let phi = Cocycle1::new(BTreeMap::from([(1, real(1, 1))]), BTreeMap::new()).unwrap();
        let psi = solve_1_coboundary(&phi, 6);
        assert_eq!(*psi.b(2).unwrap(), real(1, 1));
        assert_eq!(*psi.b(0).unwrap(), ExactComplex::zero());
        assert_eq!(*psi.b(6).unwrap(), real(1, 1));
        assert_eq!(*psi.b(-2).unwrap(), ExactComplex::zero());
    }

    #[test]
    fn zero_cocycle_has_zero_primitive() {
        let phi = Cocycle1::new(BTreeMap::new(), BTreeMap::new()).unwrap();
        let psi = solve_1_coboundary(&phi, 5);
        for m in -5..=5 {
            assert!(psi.a(m).unwrap().is_zero() && psi.b(m).unwrap().is_zero());
        }
    }

    #[test]
    fn prefix_sums_by_hand() {
        let c: BTreeMap<i64, ExactComplex> = (-6..=6).map(|i| (i, real(1 << (i + 6), 1))).collect();
        let d = BTreeMap::from([(2, real(5, 1)), (-2, real(-5, 1))]);
        let psi = solve_1_coboundary(&Cocycle1::new(c, d).unwrap(), 6);
        let p = |i: i64| 1i64 << (i + 6);
        assert_eq!(*psi.a(2).unwrap(), real(-5, 1));
        assert_eq!(*psi.a(-2).unwrap(), ExactComplex::zero());
        assert_eq!(*psi.b(4).unwrap(), real(p(1) + p(3), 1));
        assert_eq!(*psi.b(-4).unwrap(), real(-(p(-1) + p(-3)), 1));
        assert_eq!(*psi.b(5).unwrap(), real(p(0) + p(2) + p(4), 1));
        assert_eq!(*psi.b(-1).unwrap(), ExactComplex::zero());
        assert_eq!(*psi.b(-3).unwrap(), real(-p(-2), 1));
        assert_eq!(*psi.b(-5).unwrap(), real(-(p(-2) + p(-4)), 1));
    }

    #[test]
    fn coefficient_examples() {
        let phi = solve_2_coboundary(2, ExactComplex::zero()).unwrap();
        assert_eq!(phi.alpha(3, -1), real(2, 1));
        assert_eq!(phi.alpha(-1, 3), real(-2, 1));
        assert_eq!(phi.alpha(3, 1), ExactComplex::zero());
        let phi = solve_2_coboundary(1, ExactComplex::zero()).unwrap();
        assert_eq!(phi.gamma(1, 0), ExactComplex::zero());
        assert_eq!(phi.gamma(0, 1), ExactComplex::zero());
        assert_eq!(phi.gamma(2, 1), real(2, 1));
        assert_eq!(phi.gamma(1, 2), real(-2, 1));
        assert!(matches!(solve_2_coboundary(0, ExactComplex::zero()), Err(NcgError::InvalidArgument(_))));
    }

    #[test]
    fn coefficients_are_antisymmetric() {
        for k in [1, 3, -2] {
            let phi = solve_2_coboundary(k, real(-3, 2)).unwrap();
            for m in -6..=6 {
                for n in -6..=6 {
                    assert_eq!(phi.alpha(m, n), -phi.alpha(n, m));
                    assert_eq!(phi.gamma(m, n), -phi.gamma(n, m));
                }
            }
        }
    }
}
