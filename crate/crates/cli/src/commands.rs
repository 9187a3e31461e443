use ncg_core::cyclic::{
    suite_boundary_squared, suite_cocycle_condition, suite_duality, suite_s_compatibility, suite_solve_1,
    suite_solve_2, DualityReport, VerificationReport,
};
use ncg_core::fredholm::{
    catalog, catalog_names, even_pairing, homotopy_check, odd_pairing, pullback, verify_module_on, FredholmModule,
    ModuleReport, Parity, SymmetryRecipe,
};
use ncg_core::group_algebra::{AlgebraMap, AlgebraTag, RingElement};
use ncg_core::kclasses::{class_by_label, pairing_table, CellStatus, ClassKind};
use ncg_core::scalar::{cq, format_rational, parse_rational, rat, Backend};
use ncg_core::{NcgError, Result};
use serde::Serialize;
use serde_json::json;

use crate::render::{csv, grid, json, verdict};
use crate::{
    exit_code, BackendArg, Command, CyclicSuite, Format, Outcome, RandomData, RunConfig, EXIT_ERROR, EXIT_FAILED,
    EXIT_NOT_STABILIZED, EXIT_OK,
};

/// Printed output and exit code of a command that ran to completion.
struct Emitted {
    text: String,
    code: i32,
}

impl Emitted {
    fn new(text: String, passed: bool) -> Self {
        Emitted { text, code: if passed { EXIT_OK } else { EXIT_FAILED } }
    }
}

pub fn execute(command: &Command, config: &RunConfig) -> Outcome {
    let result = match command {
        Command::Catalog { name } => cmd_catalog(name.as_deref(), config),
        Command::Table { algebra } => cmd_table(algebra, config),
        Command::Index { module, unitary } => cmd_index(module, unitary, config),
        Command::Pair { module, class, via } => cmd_pair(module, class, via.as_deref(), config),
        Command::Verify { module } => cmd_verify(module.as_deref(), config),
        Command::Homotopy => cmd_homotopy(config),
        Command::Cyclic { suite } => cmd_cyclic(suite, config),
    };
    match result {
        Ok(e) => Outcome { stdout: e.text, stderr: String::new(), code: e.code },
        Err(err) => Outcome { stdout: String::new(), stderr: format!("error: {err}\n"), code: exit_code(&err) },
    }
}

fn symmetry_name(s: &SymmetryRecipe) -> String {
    match s {
        SymmetryRecipe::Swap => "swap".into(),
        SymmetryRecipe::Sign => "sign(n)".into(),
        SymmetryRecipe::OffDiagonalISign => "[[0, iF], [-iF, 0]]".into(),
        SymmetryRecipe::Phase { t } => format!("phase F_t, t = {}", format_rational(t)),
    }
}

#[derive(Serialize)]
struct CatalogEntry {
    name: String,
    parity: Parity,
    algebra: String,
    representation: String,
    symmetry: String,
    graded: bool,
    backend: Backend,
}

impl From<&FredholmModule> for CatalogEntry {
    fn from(m: &FredholmModule) -> Self {
        CatalogEntry {
            name: m.name.clone(),
            parity: m.parity,
            algebra: m.algebra.to_string(),
            representation: m.rep.describe(),
            symmetry: symmetry_name(&m.symmetry),
            graded: m.grading.is_some(),
            backend: m.backend(),
        }
    }
}

fn cmd_catalog(name: Option<&str>, config: &RunConfig) -> Result<Emitted> {
    let modules = match name {
        Some(n) => vec![catalog(n)?],
        None => catalog_names().map(catalog).collect::<Result<Vec<_>>>()?,
    };
    let entries: Vec<CatalogEntry> = modules.iter().map(CatalogEntry::from).collect();
    let text = match config.format {
        Format::Json => json(&entries),
        Format::Csv => csv(
            &["name", "parity", "algebra", "representation", "symmetry", "graded", "backend"],
            entries.iter().map(|e| {
                vec![
                    e.name.clone(),
                    e.parity.to_string(),
                    e.algebra.clone(),
                    e.representation.clone(),
                    e.symmetry.clone(),
                    e.graded.to_string(),
                    e.backend.to_string(),
                ]
            }),
        ),
        Format::Text if name.is_some() => {
            let e = &entries[0];
            format!(
                "name={}\nparity={}\nalgebra={}\nrepresentation={}\nsymmetry={}\ngraded={}\nbackend={}\n",
                e.name, e.parity, e.algebra, e.representation, e.symmetry, e.graded, e.backend
            )
        }
        Format::Text => {
            let rows: Vec<String> = entries.iter().map(|e| e.name.clone()).collect();
            let cells: Vec<Vec<String>> = entries
                .iter()
                .map(|e| vec![e.parity.to_string(), e.algebra.clone(), e.backend.to_string(), e.representation.clone()])
                .collect();
            let cols = ["parity", "algebra", "backend", "representation"].map(String::from);
            grid(&rows, &cols, &cells)
        }
    };
    Ok(Emitted::new(text, true))
}

fn cmd_table(algebra: &str, config: &RunConfig) -> Result<Emitted> {
    let tag: AlgebraTag = algebra.parse()?;
    let table = pairing_table(tag, config.window, config.degree)?;
    let code = if table.cells.iter().any(|c| c.status == CellStatus::Failed) {
        EXIT_ERROR
    } else if table.cells.iter().any(|c| c.status == CellStatus::NotStabilized) {
        EXIT_NOT_STABILIZED
    } else {
        EXIT_OK
    };
    let text = match config.format {
        Format::Json => {
            let mut v = serde_json::to_value(&table).expect("table serializes");
            v["matrix"] = json!(table.matrix());
            v["passed"] = json!(table.all_ok());
            json(&v)
        }
        Format::Csv => csv(
            &["module", "class", "value", "stabilized", "window", "status"],
            table.cells.iter().map(|c| {
                vec![
                    c.module.clone(),
                    c.class.clone(),
                    c.value.map(|v| v.to_string()).unwrap_or_default(),
                    c.stabilized.to_string(),
                    c.window.to_string(),
                    serde_json::to_value(c.status).expect("status").as_str().unwrap_or("").to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!("pairings over {tag}, window {}, degree {}\n", table.window, table.n_max);
            s.push_str(&table.to_string());
            for c in table.cells.iter().filter(|c| c.status != CellStatus::Ok) {
                s.push_str(&format!("{} {}: {}\n", c.module, c.class, c.message.as_deref().unwrap_or("failed")));
            }
            s
        }
    };
    Ok(Emitted { text, code })
}

/// A class label (`P1`, `[V]`) over `tag`, or a JSON group-ring element.
fn resolve_class(tag: AlgebraTag, spec: &str) -> Result<(String, RingElement, Option<ClassKind>)> {
    if spec.trim_start().starts_with('{') {
        let a: RingElement = serde_json::from_str(spec).map_err(|e| NcgError::Parse(format!("element JSON: {e}")))?;
        return Ok((a.to_string(), a, None));
    }
    let c = class_by_label(tag, spec)?;
    Ok((c.label, c.element, Some(c.kind)))
}

fn parse_map(s: &str) -> Result<AlgebraMap> {
    serde_json::from_value(json!(s)).map_err(|_| NcgError::Unknown { kind: "algebra map", name: s.to_string() })
}

#[derive(Serialize)]
struct PairingOutput {
    module: String,
    class: String,
    value: i64,
    values: Vec<i64>,
    degrees_checked: Vec<u32>,
    stabilized: bool,
    window: i64,
}

fn emit_pairing(out: PairingOutput, label: &str, config: &RunConfig) -> Emitted {
    let text = match config.format {
        Format::Json => json(&out),
        Format::Csv => csv(
            &["module", "class", "value", "stabilized", "window"],
            [vec![
                out.module.clone(),
                out.class.clone(),
                out.value.to_string(),
                out.stabilized.to_string(),
                out.window.to_string(),
            ]],
        ),
        Format::Text => {
            let mut s = format!("{label}({}, {}) = {}\n", out.module, out.class, out.value);
            if !out.degrees_checked.is_empty() {
                let per: Vec<String> =
                    out.degrees_checked.iter().zip(&out.values).map(|(n, v)| format!("n={n}: {v}")).collect();
                s.push_str(&format!("degrees {}\n", per.join(", ")));
            }
            s.push_str(&format!("window {}\n", out.window));
            s
        }
    };
    Emitted::new(text, out.stabilized)
}

fn cmd_index(module: &str, unitary: &str, config: &RunConfig) -> Result<Emitted> {
    let m = catalog(module)?;
    if m.parity != Parity::Odd {
        return Err(NcgError::WrongParity { module: m.name, parity: m.parity.to_string(), required: "odd".into() });
    }
    let (label, u, kind) = resolve_class(m.algebra, unitary)?;
    if kind == Some(ClassKind::Projection) {
        return Err(NcgError::NotUnitary(label));
    }
    let r = odd_pairing(&m, &u, config.window)?;
    let out = PairingOutput {
        module: m.name,
        class: label,
        value: r.value,
        values: r.values,
        degrees_checked: r.degrees_checked,
        stabilized: r.stabilized,
        window: r.window_used,
    };
    Ok(emit_pairing(out, "index", config))
}

fn cmd_pair(module: &str, class: &str, via: Option<&str>, config: &RunConfig) -> Result<Emitted> {
    let mut m = catalog(module)?;
    if let Some(map) = via {
        m = pullback(&m, parse_map(map)?)?;
    }
    let (label, a, _) = resolve_class(m.algebra, class)?;
    let r = match m.parity {
        Parity::Even => even_pairing(&m, &a, config.degree, config.window)?,
        Parity::Odd => odd_pairing(&m, &a, config.window)?,
    };
    let out = PairingOutput {
        module: m.name,
        class: label,
        value: r.value,
        values: r.values,
        degrees_checked: r.degrees_checked,
        stabilized: r.stabilized,
        window: r.window_used,
    };
    Ok(emit_pairing(out, "pair", config))
}

fn cmd_verify(module: Option<&str>, config: &RunConfig) -> Result<Emitted> {
    let modules = match module {
        Some(n) => vec![catalog(n)?],
        None => catalog_names().map(catalog).collect::<Result<Vec<_>>>()?,
    };
    let reports = modules
        .iter()
        .map(|m| {
            let backend = match config.backend {
                None => m.backend(),
                Some(BackendArg::Exact) => Backend::Exact,
                Some(BackendArg::Float) => Backend::Float,
            };
            verify_module_on(m, config.window, config.tol, backend)
        })
        .collect::<Result<Vec<ModuleReport>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let text = match config.format {
        Format::Json => json(&reports),
        Format::Csv => csv(
            &["module", "axiom", "passed", "detail"],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(|c| vec![r.module.clone(), c.axiom.clone(), c.passed.to_string(), c.detail.clone()])
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format!("{} ({}, N={}): {}\n", r.module, r.backend, r.window, verdict(r.passed)));
                for c in &r.checks {
                    s.push_str(&format!("  [{}] {}: {}\n", if c.passed { "ok" } else { "!!" }, c.axiom, c.detail));
                }
            }
            s
        }
    };
    Ok(Emitted::new(text, passed))
}

fn cmd_homotopy(config: &RunConfig) -> Result<Emitted> {
    let grid_t: Vec<_> = (0..=4).map(|i| rat(i, 4)).collect();
    let r = homotopy_check(config.window, &grid_t, config.tol)?;
    let text = match config.format {
        Format::Json => json(&r),
        Format::Csv => csv(
            &["t", "self_adjoint_residual", "square_residual", "passed"],
            r.steps.iter().map(|s| {
                vec![
                    s.t.clone(),
                    format!("{:e}", s.self_adjoint_residual),
                    format!("{:e}", s.square_residual),
                    s.passed.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!("homotopy y_t on window {}\n", r.window);
            for st in &r.steps {
                s.push_str(&format!(
                    "  t = {:<4} |F - F*| = {:.2e}  |F^2 - 1| = {:.2e}  {}\n",
                    st.t,
                    st.self_adjoint_residual,
                    st.square_residual,
                    verdict(st.passed)
                ));
            }
            s.push_str(&format!("  y_0 vs i*(d1z1_B): max gap {:.2e}  {}\n", r.y0_gap, verdict(r.y0_matches)));
            s.push_str(&format!("  [F_1, pi(U)]: max entry {:.2e}  {}\n", r.y1_commutator, verdict(r.y1_degenerate)));
            s.push_str(&format!("{}\n", verdict(r.passed)));
            s
        }
    };
    Ok(Emitted::new(text, r.passed))
}

fn support_for(data: &RandomData, bound: i64) -> i64 {
    data.support.unwrap_or_else(|| (bound / 2).min(8))
}

fn emit_reports(reports: &[VerificationReport], config: &RunConfig) -> Emitted {
    let passed = reports.iter().all(|r| r.passed());
    let text = match config.format {
        Format::Json => {
            let items: Vec<_> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("report serializes");
                    v["passed"] = json!(r.passed());
                    v
                })
                .collect();
            json(&items)
        }
        Format::Csv => csv(
            &["identity", "bound", "tuples_checked", "failure_count", "passed"],
            reports.iter().map(|r| {
                vec![
                    r.identity.clone(),
                    r.bound.to_string(),
                    r.tuples_checked.to_string(),
                    r.failure_count.to_string(),
                    r.passed().to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!(
                    "{} {} (bound {}, {} tuples, {} failures)\n",
                    verdict(r.passed()),
                    r.identity,
                    r.bound,
                    r.tuples_checked,
                    r.failure_count
                ));
                for f in &r.failures {
                    s.push_str(&format!("  ({}): {} != {}\n", f.args.join(", "), f.lhs, f.rhs));
                }
            }
            s
        }
    };
    Emitted::new(text, passed)
}

fn emit_duality(r: &DualityReport, config: &RunConfig) -> Emitted {
    let text = match config.format {
        Format::Json => json(r),
        Format::Csv => csv(
            &["cocycle", "projection", "value", "expected"],
            r.cocycles.iter().enumerate().flat_map(|(i, c)| {
                r.projections
                    .iter()
                    .enumerate()
                    .map(move |(j, p)| vec![c.clone(), p.clone(), r.matrix[i][j].clone(), r.expected[i][j].clone()])
            }),
        ),
        Format::Text => {
            let mut s = grid(&r.cocycles, &r.projections, &r.matrix);
            s.push_str("expected\n");
            s.push_str(&grid(&r.cocycles, &r.projections, &r.expected));
            s.push_str(&format!("{}\n", verdict(r.passed)));
            s
        }
    };
    Emitted::new(text, r.passed)
}

fn cmd_cyclic(suite: &CyclicSuite, config: &RunConfig) -> Result<Emitted> {
    let bound = config.bound;
    let seed = config.seed;
    Ok(match suite {
        CyclicSuite::Verify0(d) => {
            let r = suite_boundary_squared(seed, d.count.unwrap_or(100), support_for(d, bound), bound)?;
            emit_reports(&[r], config)
        }
        CyclicSuite::Verify1(d) => {
            let r = suite_cocycle_condition(seed, d.count.unwrap_or(100), support_for(d, bound), bound)?;
            emit_reports(&[r], config)
        }
        CyclicSuite::Solve1(d) => {
            let r = suite_solve_1(seed, d.count.unwrap_or(200), support_for(d, bound), bound)?;
            emit_reports(&[r], config)
        }
        CyclicSuite::Solve2 { k, c } => {
            let ks: Vec<i64> = match k {
                Some(k) => vec![*k],
                None => (1..=8).collect(),
            };
            let cs = match c {
                Some(c) => vec![cq(parse_rational(c)?, rat(0, 1))],
                None => vec![cq(rat(0, 1), rat(0, 1)), cq(rat(1, 1), rat(0, 1)), cq(rat(-3, 2), rat(0, 1))],
            };
            let mut reports = Vec::new();
            for &k in &ks {
                for c in &cs {
                    reports.push(suite_solve_2(k, c, bound)?);
                }
            }
            emit_reports(&reports, config)
        }
        CyclicSuite::Duality => emit_duality(&suite_duality()?, config),
        CyclicSuite::SCompat => emit_duality(&suite_s_compatibility()?, config),
    })
}
