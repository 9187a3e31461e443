//! K-theory class representatives and the assembled pairing tables.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{NcgError, Result};
use crate::fredholm::{catalog, even_pairing, odd_pairing, PairingResult, Parity};
use crate::group_algebra::{AlgebraTag, Dihedral, GroupRingElement, RingElement, Semidirect};
use crate::scalar::{real, ExactComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Projection,
    Unitary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KClassRep {
    pub label: String,
    pub kind: ClassKind,
    pub algebra: AlgebraTag,
    pub element: RingElement,
}

impl KClassRep {
    fn new(label: &str, kind: ClassKind, algebra: AlgebraTag, element: impl Into<RingElement>) -> Self {
        KClassRep { label: label.to_string(), kind, algebra, element: element.into() }
    }

    /// Exact check of `a² = a = a*` or `a*a = aa* = 1`, as the kind requires.
    pub fn is_valid(&self) -> bool {
        self.algebra.check_member(&self.element).is_ok()
            && match self.kind {
                ClassKind::Projection => self.element.is_projection(),
                ClassKind::Unitary => self.element.is_unitary(),
            }
    }
}

pub fn is_projection(a: &RingElement) -> bool {
    a.is_projection()
}

pub fn is_unitary(a: &RingElement) -> bool {
    a.is_unitary()
}

fn half() -> ExactComplex {
    real(1, 2)
}

/// `½(1 + e)`
pub fn p1() -> GroupRingElement<Dihedral> {
    GroupRingElement::from_terms([(Dihedral::IDENTITY, half()), (Dihedral::e(), half())])
}

/// `½(1 + Se)`
pub fn p2() -> GroupRingElement<Dihedral> {
    GroupRingElement::from_terms([(Dihedral::IDENTITY, half()), (Dihedral::se(1), half())])
}

/// Generators of the group underlying each algebra, labelled.
pub fn generators(tag: AlgebraTag) -> Vec<(String, RingElement)> {
    let d = |g: Dihedral| RingElement::from(GroupRingElement::basis(g));
    let s = |g: Semidirect| RingElement::from(GroupRingElement::basis(g));
    match tag {
        AlgebraTag::A => vec![("S".into(), d(Dihedral::s(1))), ("e".into(), d(Dihedral::e()))],
        AlgebraTag::B => vec![("U".into(), s(Semidirect::U)), ("V".into(), s(Semidirect::V))],
        AlgebraTag::CT => vec![("U".into(), s(Semidirect::U))],
    }
}

/// `A: [1], [P1], [P2]`; `B: [1]` even and `[V], [U]` odd; `C(T): [1], [U]`.
pub fn standard_classes(tag: AlgebraTag) -> Vec<KClassRep> {
    use ClassKind::*;
    let unit = RingElement::one(match tag {
        AlgebraTag::A => crate::group_algebra::GroupTag::Dihedral,
        _ => crate::group_algebra::GroupTag::Semidirect,
    });
    let basis = |g: Semidirect| GroupRingElement::basis(g);
    match tag {
        AlgebraTag::A => vec![
            KClassRep::new("[1]", Projection, tag, unit),
            KClassRep::new("[P1]", Projection, tag, p1()),
            KClassRep::new("[P2]", Projection, tag, p2()),
        ],
        AlgebraTag::B => vec![
            KClassRep::new("[1]", Projection, tag, unit),
            KClassRep::new("[V]", Unitary, tag, basis(Semidirect::V)),
            KClassRep::new("[U]", Unitary, tag, basis(Semidirect::U)),
        ],
        AlgebraTag::CT => vec![
            KClassRep::new("[1]", Projection, tag, unit),
            KClassRep::new("[U]", Unitary, tag, basis(Semidirect::U)),
        ],
    }
}

/// Looks a class up by label, with or without brackets (`P1`, `[P1]`).
/// `[S]` is accepted over `A` as the unitary `S`.
pub fn class_by_label(tag: AlgebraTag, label: &str) -> Result<KClassRep> {
    let wanted = if label.starts_with('[') { label.to_string() } else { format!("[{label}]") };
    if tag == AlgebraTag::A && wanted == "[S]" {
        return Ok(KClassRep::new("[S]", ClassKind::Unitary, tag, GroupRingElement::basis(Dihedral::s(1))));
    }
    standard_classes(tag)
        .into_iter()
        .find(|c| c.label == wanted)
        .ok_or_else(|| NcgError::Unknown { kind: "class", name: format!("{label} over {tag}") })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Ok,
    NotStabilized,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingCell {
    pub module: String,
    pub class: String,
    pub value: Option<i64>,
    pub stabilized: bool,
    pub window: i64,
    pub status: CellStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingTable {
    pub algebra: AlgebraTag,
    pub window: i64,
    pub n_max: u32,
    pub modules: Vec<String>,
    pub classes: Vec<String>,
    /// Row-major over `modules × classes`; pairs that are not computed
    /// (parity mismatch) are absent.
    pub cells: Vec<PairingCell>,
}

fn table_layout(tag: AlgebraTag) -> (Vec<&'static str>, Vec<(&'static str, &'static str)>) {
    match tag {
        AlgebraTag::A => {
            let modules = vec!["w0_A", "w1_A", "w2_A"];
            let cells = modules.iter().flat_map(|m| ["[1]", "[P1]", "[P2]"].map(|c| (*m, c))).collect();
            (modules, cells)
        }
        AlgebraTag::B => (vec!["w0_B", "w1_B"], vec![("w0_B", "[1]"), ("w1_B", "[V]"), ("w1_B", "[U]")]),
        AlgebraTag::CT => (vec!["z0_CT", "z1_CT"], vec![("z0_CT", "[1]"), ("z1_CT", "[U]")]),
    }
}

fn pair_cell(module: &str, class: &KClassRep, n_max: u32, n: i64) -> Result<PairingResult> {
    let m = catalog(module)?;
    match m.parity {
        Parity::Even => even_pairing(&m, &class.element, n_max, n),
        Parity::Odd => odd_pairing(&m, &class.element, n),
    }
}

/// The pairings of the generating modules of `tag` with its standard
/// classes, cell by cell. Per-cell failures are recorded in the cell.
pub fn pairing_table(tag: AlgebraTag, n: i64, n_max: u32) -> Result<PairingTable> {
    let classes = standard_classes(tag);
    let (modules, layout) = table_layout(tag);
    let cells = layout
        .par_iter()
        .map(|(module, label)| {
            let class = classes.iter().find(|c| c.label == *label).expect("layout uses standard labels");
            let (value, stabilized, status, message) = match pair_cell(module, class, n_max, n) {
                Ok(r) => (Some(r.value), r.stabilized, CellStatus::Ok, None),
                Err(e @ NcgError::NotStabilized { .. }) => {
                    (None, false, CellStatus::NotStabilized, Some(e.to_string()))
                }
                Err(e) => (None, false, CellStatus::Failed, Some(e.to_string())),
            };
            PairingCell {
                module: module.to_string(),
                class: label.to_string(),
                value,
                stabilized,
                window: n,
                status,
                message,
            }
        })
        .collect();
    Ok(PairingTable {
        algebra: tag,
        window: n,
        n_max,
        modules: modules.into_iter().map(String::from).collect(),
        classes: classes.into_iter().map(|c| c.label).collect(),
        cells,
    })
}

impl PairingTable {
    pub fn cell(&self, module: &str, class: &str) -> Option<&PairingCell> {
        self.cells.iter().find(|c| c.module == module && c.class == class)
    }

    pub fn value(&self, module: &str, class: &str) -> Option<i64> {
        self.cell(module, class).and_then(|c| c.value)
    }

    pub fn all_ok(&self) -> bool {
        self.cells.iter().all(|c| c.status == CellStatus::Ok)
    }

    /// `modules × classes` values; `None` where a pair is not computed or failed.
    pub fn matrix(&self) -> Vec<Vec<Option<i64>>> {
        self.modules.iter().map(|m| self.classes.iter().map(|c| self.value(m, c)).collect()).collect()
    }
}

impl fmt::Display for PairingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.classes.iter().map(|c| c.len()).max().unwrap_or(3).max(4) + 2;
        let head = self.modules.iter().map(|m| m.len() + 5).max().unwrap_or(8);
        write!(f, "{:head$}", "")?;
        for c in &self.classes {
            write!(f, "{c:>width$}")?;
        }
        writeln!(f)?;
        for m in &self.modules {
            write!(f, "{:head$}", format!("ch({m})"))?;
            for c in &self.classes {
                let shown = match self.cell(m, c) {
                    None => "-".to_string(),
                    Some(cell) => match (cell.value, cell.status) {
                        (Some(v), _) => v.to_string(),
                        (None, CellStatus::NotStabilized) => "unstable".to_string(),
                        (None, _) => "error".to_string(),
                    },
                };
                write!(f, "{shown:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
