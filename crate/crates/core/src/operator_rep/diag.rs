use num_rational::BigRational;
use num_traits::{One, Zero};

use super::operator::WindowedOperator;
use super::window::{Window, WindowKind};
use crate::error::{NcgError, Result};
use crate::scalar::{rational_to_f64, Scalar};

fn sign(n: i64) -> i64 {
    if n >= 0 {
        1
    } else {
        -1
    }
}

/// `F e_n = sign(n) e_n` with `sign(0) = +1`.
pub fn sign_operator<S: Scalar>(w: Window) -> Result<WindowedOperator<S>> {
    if w.kind != WindowKind::Interval {
        return Err(NcgError::WindowMismatch(format!("sign operator needs an interval, got {w}")));
    }
    Ok(WindowedOperator::diagonal(w, 1, |_, s| S::from_i64(sign(s[0]))))
}

fn phase<S: Scalar>(re: f64, im: f64) -> Result<S> {
    S::from_f64_parts(re, im).ok_or_else(|| NcgError::BackendMismatch("phase operators need the float backend".into()))
}

/// `F₀ e_{p,q} = (p + iq)/√(p² + q²) e_{p,q}`, and `F₀ e_{0,0} = e_{0,0}`.
pub fn phase_operator_f0<S: Scalar>(w: Window) -> Result<WindowedOperator<S>> {
    homotopy_operator_ft(w, &BigRational::zero())
}

/// The path `F_t`, `t ∈ [0, 1]`: `sign(p)` on the line `q = 0`, and
/// `(p + i(1-t)q)/√(p² + (1-t)²q²)` elsewhere. At `t = 1` the formula is
/// `0/0` on the column `p = 0`; there `F₁ = sign(0) = +1`, so that `F₁` is
/// `sign(p)` on the whole lattice.
pub fn homotopy_operator_ft<S: Scalar>(w: Window, t: &BigRational) -> Result<WindowedOperator<S>> {
    if w.kind != WindowKind::Box {
        return Err(NcgError::WindowMismatch(format!("phase operators need a box window, got {w}")));
    }
    if *t < BigRational::zero() || *t > BigRational::one() {
        return Err(NcgError::InvalidArgument(format!("homotopy parameter {t} outside [0, 1]")));
    }
    let damp = 1.0 - rational_to_f64(t);
    let at_end = t.is_one();
    let mut entries: Vec<S> = Vec::with_capacity(w.site_count());
    for site in w.sites() {
        let (p, q) = (site[0] as f64, site[1] as f64);
        let z = if site[1] == 0 || at_end {
            phase(sign(site[0]) as f64, 0.0)?
        } else {
            let im = damp * q;
            let r = p.hypot(im);
            phase(p / r, im / r)?
        };
        entries.push(z);
    }
    Ok(WindowedOperator::diagonal(w, 1, |_, s| entries[w.index_of(s).expect("site in window")].clone()))
}
