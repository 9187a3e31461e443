//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ncg_core::cyclic::{suite_duality, suite_s_compatibility, suite_solve_1, suite_solve_2};
use ncg_core::fredholm::{
    catalog, even_pairing, homotopy_check, odd_pairing, pullback, shell_norms, verify_module, CATALOG_NAMES,
};
use ncg_core::group_algebra::{
    alpha_minus_one, AlgebraMap, AlgebraTag, Dihedral, GroupRingElement, RingElement, Semidirect,
};
use ncg_core::kclasses::{p1, p2, standard_classes};
use ncg_core::scalar::{cq, rat, ExactComplex};
use serde_json::Value;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_s), format!("took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64()))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn dih(a: GroupRingElement<Dihedral>) -> RingElement {
    a.into()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let out = ncg_cli::run(["ncg", "table", "A", "--window", "32", "--degree", "2", "--format", "json"]);
    let elapsed = start.elapsed();
    ensure(out.passed(), format!("exit {}: {}", out.code, out.stderr))?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(err)?;
    let want = serde_json::json!([[1, 1, 1], [0, 1, 0], [0, 0, 1]]);
    ensure(v["matrix"] == want, format!("table {}", v["matrix"]))?;
    within(elapsed, 10)?;
    Ok(format!("table A at N=32, n_max=2 is {} in {:.2} s", v["matrix"], elapsed.as_secs_f64()))
}

fn criterion_2() -> Verdict {
    let w0a = catalog("w0_A").map_err(err)?;
    let mut seen = Vec::new();
    for c in standard_classes(AlgebraTag::A) {
        let v = even_pairing(&w0a, &c.element, 2, 32).map_err(err)?.value;
        ensure(v == 1, format!("<ch(w0_A), {}> = {v}", c.label))?;
        seen.push(format!("{}: {v}", c.label));
    }
    let w0b = catalog("w0_B").map_err(err)?;
    let one = RingElement::one(ncg_core::group_algebra::GroupTag::Semidirect);
    let v = even_pairing(&w0b, &one, 2, 32).map_err(err)?.value;
    ensure(v == 1, format!("<ch(w0_B), [1]> = {v}"))?;
    Ok(format!("w0_A against {} and w0_B against [1]: {v}", seen.join(", ")))
}

fn criterion_3() -> Verdict {
    let u: RingElement = GroupRingElement::basis(Semidirect::U).into();
    let v: RingElement = GroupRingElement::basis(Semidirect::V).into();
    let cases = [("z1_CT", "U", &u, 1), ("w1_B", "V", &v, 1), ("w1_B", "U", &u, 0)];
    for n in [16, 32] {
        for (module, label, x, want) in &cases {
            let got = odd_pairing(&catalog(module).map_err(err)?, x, n).map_err(err)?.value;
            ensure(got == *want, format!("index({module}, {label}) = {got} at N={n}, want {want}"))?;
        }
    }
    Ok("index(z1_CT, U) = 1, index(w1_B, V) = 1, index(w1_B, U) = 0 at N = 16 and 32".into())
}

fn criterion_4() -> Verdict {
    let r = suite_duality().map_err(err)?;
    let shown = format!("{:?}", r.matrix);
    ensure(r.passed, format!("[pair(psi_i, P_j)] = {shown}, expected the identity"))?;
    Ok(format!("[pair(psi_i, P_j)] = {shown}"))
}

fn criterion_5() -> Verdict {
    let start = Instant::now();
    let r = suite_solve_1(7, 200, 8, 16).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(r.passed(), format!("{} of {} pairs differ: {:?}", r.failure_count, r.tuples_checked, r.failures.first()))?;
    within(elapsed, 30)?;
    Ok(format!(
        "200 random (c, d), {} pairs with exponents <= 16, exact, in {:.2} s",
        r.tuples_checked,
        elapsed.as_secs_f64()
    ))
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let cs = [cq(rat(0, 1), rat(0, 1)), cq(rat(1, 1), rat(0, 1)), cq(rat(-3, 2), rat(0, 1))];
    let mut tuples = 0;
    for k in 1..=8 {
        for c in &cs {
            let r = suite_solve_2(k, c, 12).map_err(err)?;
            ensure(
                r.passed(),
                format!("{}: {} failures, first {:?}", r.identity, r.failure_count, r.failures.first()),
            )?;
            tuples += r.tuples_checked;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 60)?;
    Ok(format!(
        "k = 1..8, c_k in {{0, 1, -3/2}}: {tuples} triples with exponents <= 12 in {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn criterion_7() -> Verdict {
    for name in CATALOG_NAMES {
        let r = verify_module(&catalog(name).map_err(err)?, 32, 1e-12).map_err(err)?;
        let failed: Vec<_> =
            r.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.axiom, c.detail)).collect();
        ensure(r.passed, format!("{name}: {}", failed.join("; ")))?;
    }
    let w1 = catalog("w1_A").map_err(err)?;
    let ranks = verify_module(&w1, 32, 0.0).map_err(err)?.commutator_ranks;
    let want = vec![("S".to_string(), 2), ("e".to_string(), 2)];
    ensure(ranks == want, format!("w1_A generator ranks {ranks:?}"))?;
    let w = w1.window(32).map_err(err)?;
    let f = w1.operators::<ExactComplex>(w).map_err(err)?.f;
    let rank = |a: RingElement| -> Result<usize, String> {
        Ok(f.commutator(&w1.represent::<ExactComplex>(&a, w).map_err(err)?).map_err(err)?.rank(0.0))
    };
    let half = cq(rat(1, 2), rat(0, 1));
    let p2_es = GroupRingElement::from_terms([(Dihedral::IDENTITY, half.clone()), (Dihedral::se(-1), half)]);
    let r_es = rank(dih(p2_es))?;
    ensure(r_es == 0, format!("rank [F, pi_1(1/2(1 + eS))] = {r_es}"))?;
    let r_se = rank(dih(p2()))?;
    Ok(format!(
        "all {} modules pass; w1_A ranks S: 2, e: 2; [F, pi_1(1/2(1 + eS))] rank 0 (1/2(1 + Se): {r_se})",
        CATALOG_NAMES.len()
    ))
}

fn criterion_8() -> Verdict {
    let grid: Vec<_> = (0..=4).map(|i| rat(i, 4)).collect();
    let r = homotopy_check(32, &grid, 1e-12).map_err(err)?;
    ensure(r.y1_commutator == 0.0, format!("[F_1, pi(U)] has entry {:e}", r.y1_commutator))?;
    for s in &r.steps {
        ensure(s.square_residual <= 1e-12, format!("t = {}: |F^2 - 1| = {:e}", s.t, s.square_residual))?;
    }
    ensure(r.y0_gap <= 1e-15, format!("y_0 differs from i*(d1z1_B) by {:e}", r.y0_gap))?;
    let worst = r.steps.iter().map(|s| s.square_residual).fold(0.0, f64::max);
    Ok(format!(
        "[F_1, pi(U)] = 0 exactly; max |F_t^2 - 1| = {worst:.1e} over t in {{0, 1/4, 1/2, 3/4, 1}}; y_0 gap {:.1e}",
        r.y0_gap
    ))
}

fn criterion_9() -> Verdict {
    let w1 = catalog("w1_A").map_err(err)?;
    let pulled = pullback(&w1, AlgebraMap::AlphaMinusOne).map_err(err)?;
    let mut shown = Vec::new();
    for (label, p) in [("1", GroupRingElement::one()), ("P1", p1()), ("P2", p2())] {
        let lhs = even_pairing(&pulled, &dih(p.clone()), 2, 32).map_err(err)?.value;
        let rhs = even_pairing(&w1, &dih(alpha_minus_one(&p)), 2, 32).map_err(err)?.value;
        ensure(lhs == rhs, format!("{label}: {lhs} vs {rhs}"))?;
        shown.push(format!("{label}: {lhs}"));
    }
    Ok(format!("alpha_-1*(w1_A) against 1, P1, P2 equals w1_A against their images ({})", shown.join(", ")))
}

fn criterion_10() -> Verdict {
    let d = catalog("d1z1_B").map_err(err)?;
    let v: RingElement = GroupRingElement::basis(Semidirect::V).into();
    let radii = [8, 16, 32];
    let norms = shell_norms(&d, &v, 66, &radii).map_err(err)?;
    ensure(norms.windows(2).all(|w| w[1] < w[0]), format!("not strictly decreasing: {norms:?}"))?;
    for (r, n) in radii.iter().zip(&norms) {
        ensure(*n <= 4.0 / *r as f64, format!("R={r}: {n} > 4/R"))?;
    }
    let shown: Vec<String> = radii.iter().zip(&norms).map(|(r, n)| format!("R={r}: {n:.4}")).collect();
    Ok(format!("shell max-norms of [F_0, pi(V)] {}", shown.join(", ")))
}

fn criterion_11() -> Verdict {
    let r = suite_s_compatibility().map_err(err)?;
    ensure(r.passed, format!("{:?} vs {:?}", r.matrix, r.expected))?;
    Ok(format!("[pair(S psi_i, P_j)] = [pair(psi_i, P_j)] = {:?}", r.matrix))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("pairing table reproduction", criterion_1),
        ("canonical pairings", criterion_2),
        ("odd pairings", criterion_3),
        ("cocycle duality", criterion_4),
        ("1-cocycles are coboundaries", criterion_5),
        ("S psi_k coboundaries", criterion_6),
        ("module axioms", criterion_7),
        ("degeneracy and homotopy", criterion_8),
        ("pullback naturality", criterion_9),
        ("compactness proxy for d1z1_B", criterion_10),
        ("S-compatibility", criterion_11),
    ];
    let mut passed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => {
                passed += 1;
                println!("criterion {:>2} PASS {name}: {detail}", i + 1);
            }
            Err(detail) => println!("criterion {:>2} FAIL {name}: {detail}", i + 1),
        }
    }
    println!("{passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
