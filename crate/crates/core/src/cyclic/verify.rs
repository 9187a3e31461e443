use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    boundary_b, pair_with_projection, periodicity_s, psi, psi_k, solve_1_coboundary, solve_2_coboundary, words,
    Cochain, Cocycle1, ExplicitCochain, Trace0,
};
use crate::error::{NcgError, Result};
use crate::group_algebra::{Dihedral, GroupRingElement};
use crate::kclasses::{p1, p2};
use crate::scalar::{format_scalar, rat, ExactComplex};

const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub args: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// `{"identity", "bound", "tuples_checked", "failures"}`; at most 20
/// failures are kept, `failure_count` has them all.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub bound: i64,
    pub tuples_checked: u64,
    pub failures: Vec<Failure>,
    pub failure_count: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn absorb(&mut self, other: VerificationReport) {
        self.tuples_checked += other.tuples_checked;
        self.failure_count += other.failure_count;
        let room = KEPT_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

/// Checks `lhs = rhs` on every `arity`-tuple of words within `bound`, where
/// `sides` returns `(lhs, rhs)` for a tuple.
pub fn verify_identity(
    identity: &str,
    arity: usize,
    bound: i64,
    sides: impl Fn(&[Dihedral]) -> Result<(ExactComplex, ExactComplex)> + Sync,
) -> Result<VerificationReport> {
    let ws = words(bound);
    let empty = || VerificationReport {
        identity: identity.to_string(),
        bound,
        tuples_checked: 0,
        failures: Vec::new(),
        failure_count: 0,
    };
    let parts = ws
        .par_iter()
        .map(|first| {
            let mut report = empty();
            let mut tuple = vec![*first; arity];
            let mut digits = vec![0usize; arity];
            loop {
                for i in 1..arity {
                    tuple[i] = ws[digits[i]];
                }
                let (lhs, rhs) = sides(&tuple)?;
                report.tuples_checked += 1;
                if lhs != rhs {
                    report.failure_count += 1;
                    if report.failures.len() < KEPT_FAILURES {
                        report.failures.push(Failure {
                            args: tuple.iter().map(|g| g.to_string()).collect(),
                            lhs: format_scalar(&lhs),
                            rhs: format_scalar(&rhs),
                        });
                    }
                }
                let mut pos = arity;
                loop {
                    if pos <= 1 {
                        return Ok(report);
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < ws.len() {
                        break;
                    }
                    digits[pos] = 0;
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = empty();
    for part in parts {
        total.absorb(part);
    }
    Ok(total)
}

fn random_scalar(rng: &mut ChaCha8Rng) -> ExactComplex {
    ExactComplex::new(rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)), rat(0, 1))
}

/// A trace with `aₙ` random for `|n| ≤ support` and random `b₀`, `b₁`.
pub fn random_trace0(rng: &mut ChaCha8Rng, support: i64) -> Trace0 {
    let mut a = BTreeMap::new();
    for n in 0..=support {
        let v = random_scalar(rng);
        a.insert(n, v.clone());
        a.insert(-n, v);
    }
    let b0 = random_scalar(rng);
    let b1 = random_scalar(rng);
    Trace0::new(a, b0, b1).expect("symmetric by construction")
}

/// Cocycle data with `cₙ` random for `|n| ≤ support` and `dₙ = -d₋ₙ`
/// random for `1 ≤ n ≤ support`.
pub fn random_cocycle1(rng: &mut ChaCha8Rng, support: i64) -> Cocycle1 {
    let c = (-support..=support).map(|n| (n, random_scalar(rng))).collect();
    let mut d = BTreeMap::new();
    for n in 1..=support {
        let v = random_scalar(rng);
        d.insert(-n, -v.clone());
        d.insert(n, v);
    }
    Cocycle1::new(c, d).expect("odd by construction")
}

fn require_bound(bound: i64, support: i64) -> Result<()> {
    if bound < 2 * support {
        return Err(NcgError::InvalidArgument(format!(
            "bound {bound} is too small for data supported in |n| ≤ {support}; need at least {}",
            2 * support
        )));
    }
    Ok(())
}

fn merge(identity: String, bound: i64, reports: Vec<VerificationReport>) -> VerificationReport {
    let mut total = VerificationReport { identity, bound, tuples_checked: 0, failures: Vec::new(), failure_count: 0 };
    for r in reports {
        total.absorb(r);
    }
    total
}

/// `b(bψ) = 0` on triples within `bound`, for `count` random traces.
pub fn suite_boundary_squared(seed: u64, count: usize, support: i64, bound: i64) -> Result<VerificationReport> {
    require_bound(bound, support)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let psi = random_trace0(&mut rng, support);
        let b_psi = ExplicitCochain::tabulate(&boundary_b(&psi)?, 2 * bound)?;
        let bb = boundary_b(&b_psi)?;
        reports.push(verify_identity("b(b psi) = 0", 3, bound, |t| {
            Ok((bb.value(t)?, ExactComplex::new(rat(0, 1), rat(0, 1))))
        })?);
    }
    Ok(merge(format!("b(b psi) = 0 for {count} random traces"), bound, reports))
}

/// `bφ = 0` on triples within `bound`, for `count` random `(c, d)` data.
pub fn suite_cocycle_condition(seed: u64, count: usize, support: i64, bound: i64) -> Result<VerificationReport> {
    require_bound(bound, support)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let phi = ExplicitCochain::tabulate(&random_cocycle1(&mut rng, support), 2 * bound)?;
        let b_phi = boundary_b(&phi)?;
        reports.push(verify_identity("b phi = 0", 3, bound, |t| {
            Ok((b_phi.value(t)?, ExactComplex::new(rat(0, 1), rat(0, 1))))
        })?);
        let anti =
            verify_identity("phi(x, y) = -phi(y, x)", 2, bound, |t| Ok((phi.value(t)?, -phi.value(&[t[1], t[0]])?)))?;
        reports.push(anti);
    }
    Ok(merge(format!("b phi = 0 and antisymmetry for {count} random (c, d)"), bound, reports))
}

/// `b(solve_1_coboundary(φ)) = φ` on pairs within `bound`, for `count`
/// random `(c, d)` data supported in `|n| ≤ support`.
pub fn suite_solve_1(seed: u64, count: usize, support: i64, bound: i64) -> Result<VerificationReport> {
    require_bound(bound, support)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let phi = random_cocycle1(&mut rng, support);
        let psi = solve_1_coboundary(&phi, 2 * bound);
        let b_psi = boundary_b(&psi)?;
        reports.push(verify_identity("b psi = phi", 2, bound, |t| Ok((b_psi.value(t)?, phi.value(t)?)))?);
    }
    Ok(merge(format!("b(solve_1(phi)) = phi for {count} random (c, d)"), bound, reports))
}

/// `b(solve_2_coboundary(k, c_k)) = Sψ_k` on triples within `bound`.
pub fn suite_solve_2(k: i64, c_k: &ExactComplex, bound: i64) -> Result<VerificationReport> {
    if bound < k.abs() {
        return Err(NcgError::InvalidArgument(format!("bound {bound} is below |k| = {}", k.abs())));
    }
    let phi = ExplicitCochain::tabulate(&solve_2_coboundary(k, c_k.clone())?, 2 * bound)?;
    let b_phi = boundary_b(&phi)?;
    let s_psi = periodicity_s(&psi_k(k));
    let mut report = verify_identity("b phi = S psi_k", 3, bound, |t| Ok((b_phi.value(t)?, s_psi.value(t)?)))?;
    report.identity = format!("b(solve_2({k}, {})) = S psi_{k}", format_scalar(c_k));
    Ok(report)
}

/// Rows `ψ₀, ψ₁, ψ₂` (or `Sψᵢ`), columns `1, P₁, P₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub cocycles: Vec<String>,
    pub projections: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub expected: Vec<Vec<String>>,
    pub passed: bool,
}

fn projections() -> [(&'static str, GroupRingElement<Dihedral>); 3] {
    [("1", GroupRingElement::one()), ("P1", p1()), ("P2", p2())]
}

/// `[pair(cᵢ, Pⱼ)]` for `cᵢ` in `cochains`.
pub fn duality_matrix(cochains: &[&dyn Cochain]) -> Result<Vec<Vec<ExactComplex>>> {
    cochains.iter().map(|c| projections().iter().map(|(_, p)| pair_with_projection(*c, p)).collect()).collect()
}

fn strings(m: &[Vec<ExactComplex>]) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(format_scalar).collect()).collect()
}

fn distinguished() -> Result<Vec<Trace0>> {
    (0..3).map(psi).collect()
}

/// `[pair(ψᵢ, Pⱼ)]` against the identity matrix.
pub fn suite_duality() -> Result<DualityReport> {
    let psis = distinguished()?;
    let refs: Vec<&dyn Cochain> = psis.iter().map(|p| p as &dyn Cochain).collect();
    let matrix = duality_matrix(&refs)?;
    let identity: Vec<Vec<ExactComplex>> =
        (0..3).map(|i| (0..3).map(|j| ExactComplex::new(rat((i == j) as i64, 1), rat(0, 1))).collect()).collect();
    Ok(DualityReport {
        cocycles: vec!["psi_0".into(), "psi_1".into(), "psi_2".into()],
        projections: projections().iter().map(|(l, _)| l.to_string()).collect(),
        passed: matrix == identity,
        matrix: strings(&matrix),
        expected: strings(&identity),
    })
}

/// `[pair(Sψᵢ, Pⱼ)]` against `[pair(ψᵢ, Pⱼ)]`.
pub fn suite_s_compatibility() -> Result<DualityReport> {
    let psis = distinguished()?;
    let s_psis: Vec<_> = psis.iter().map(periodicity_s).collect();
    let base: Vec<&dyn Cochain> = psis.iter().map(|p| p as &dyn Cochain).collect();
    let lifted: Vec<&dyn Cochain> = s_psis.iter().map(|p| p as &dyn Cochain).collect();
    let expected = duality_matrix(&base)?;
    let matrix = duality_matrix(&lifted)?;
    Ok(DualityReport {
        cocycles: vec!["S psi_0".into(), "S psi_1".into(), "S psi_2".into()],
        projections: projections().iter().map(|(l, _)| l.to_string()).collect(),
        passed: matrix == expected,
        matrix: strings(&matrix),
        expected: strings(&expected),
    })
}
