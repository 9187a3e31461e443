use std::collections::BTreeMap;

use num_traits::Zero;

use super::{words, Cochain};
use crate::error::{NcgError, Result};
use crate::group_algebra::{Dihedral, GroupElement};
use crate::scalar::{real, ExactComplex};

fn lookup(map: &BTreeMap<i64, ExactComplex>, n: i64) -> ExactComplex {
    map.get(&n).cloned().unwrap_or_else(ExactComplex::zero)
}

fn prune(map: BTreeMap<i64, ExactComplex>) -> BTreeMap<i64, ExactComplex> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// A trace on `CΓ`: `ψ(Sⁿ) = aₙ` with `a₋ₙ = aₙ`, `ψ(S^{2n}e) = b₀`,
/// `ψ(S^{2n+1}e) = b₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trace0 {
    a: BTreeMap<i64, ExactComplex>,
    b0: ExactComplex,
    b1: ExactComplex,
}

impl Trace0 {
    pub fn new(a: BTreeMap<i64, ExactComplex>, b0: ExactComplex, b1: ExactComplex) -> Result<Self> {
        let a = prune(a);
        for (n, v) in &a {
            if lookup(&a, -n) != *v {
                return Err(NcgError::SymmetryViolation(format!("a_{n} = {v} but a_{} = {}", -n, lookup(&a, -n))));
            }
        }
        Ok(Trace0 { a, b0, b1 })
    }

    pub fn a(&self) -> &BTreeMap<i64, ExactComplex> {
        &self.a
    }

    pub fn b0(&self) -> &ExactComplex {
        &self.b0
    }

    pub fn b1(&self) -> &ExactComplex {
        &self.b1
    }

    pub fn at(&self, g: Dihedral) -> ExactComplex {
        if g.flip {
            if g.power.rem_euclid(2) == 0 {
                self.b0.clone()
            } else {
                self.b1.clone()
            }
        } else {
            lookup(&self.a, g.power)
        }
    }
}

impl Cochain for Trace0 {
    fn degree(&self) -> usize {
        0
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        Ok(self.at(args[0]))
    }
}

/// `ψ₀`, `ψ₁`, `ψ₂`: `a₀ = 1`, `b₀ = 2`, `b₁ = 2` respectively, all other data zero.
pub fn psi(i: usize) -> Result<Trace0> {
    let zero = ExactComplex::zero;
    match i {
        0 => Trace0::new(BTreeMap::from([(0, real(1, 1))]), zero(), zero()),
        1 => Trace0::new(BTreeMap::new(), real(2, 1), zero()),
        2 => Trace0::new(BTreeMap::new(), zero(), real(2, 1)),
        _ => Err(NcgError::Unknown { kind: "distinguished cocycle", name: format!("psi_{i}") }),
    }
}

/// `ψ_k`: `a_k = a_{-k} = 1`, all other data zero.
pub fn psi_k(k: i64) -> Trace0 {
    Trace0::new(BTreeMap::from([(k, real(1, 1)), (-k, real(1, 1))]), ExactComplex::zero(), ExactComplex::zero())
        .expect("symmetric by construction")
}

/// A linear functional on `CΓ` given by values on `S^m` and `S^m e` for
/// `|m| ≤ bound`; not necessarily a trace.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional0 {
    bound: i64,
    a: Vec<ExactComplex>,
    b: Vec<ExactComplex>,
}

impl Functional0 {
    pub fn from_fn(bound: i64, a: impl Fn(i64) -> ExactComplex, b: impl Fn(i64) -> ExactComplex) -> Self {
        Functional0 { bound, a: (-bound..=bound).map(&a).collect(), b: (-bound..=bound).map(&b).collect() }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// `ψ(S^m)`
    pub fn a(&self, m: i64) -> Result<&ExactComplex> {
        self.slot(&self.a, m)
    }

    /// `ψ(S^m e)`
    pub fn b(&self, m: i64) -> Result<&ExactComplex> {
        self.slot(&self.b, m)
    }

    fn slot<'a>(&self, table: &'a [ExactComplex], m: i64) -> Result<&'a ExactComplex> {
        if m.abs() > self.bound {
            return Err(NcgError::OutsideDomain {
                what: format!("functional tabulated to |m| ≤ {} at m = {m}", self.bound),
            });
        }
        Ok(&table[(m + self.bound) as usize])
    }
}

impl Cochain for Functional0 {
    fn degree(&self) -> usize {
        0
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        let g = args[0];
        if g.flip { self.b(g.power) } else { self.a(g.power) }.cloned()
    }
}

/// The 1-cocycle with data `(c, d)`, `d₋ₙ = -dₙ`:
/// `φ(S^m, Sⁿ) = 0`, `φ(S^m, Sⁿe) = f(m, n)`, `φ(S^m e, Sⁿ) = -f(n, m)`,
/// `φ(S^m e, Sⁿe) = d_{n-m}`, where `f(m, n) = Σ_{k=0}^{m-1} c_{n+m-1-2k}`
/// for `m > 0` and `f(m, n) = -Σ_{k=m}^{-1} c_{n+m-1-2k}` for `m < 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle1 {
    c: BTreeMap<i64, ExactComplex>,
    d: BTreeMap<i64, ExactComplex>,
}

impl Cocycle1 {
    pub fn new(c: BTreeMap<i64, ExactComplex>, d: BTreeMap<i64, ExactComplex>) -> Result<Self> {
        let d = prune(d);
        for (n, v) in &d {
            if lookup(&d, -n) != -v.clone() {
                return Err(NcgError::SymmetryViolation(format!("d_{n} = {v} but d_{} = {}", -n, lookup(&d, -n))));
            }
        }
        Ok(Cocycle1 { c: prune(c), d })
    }

    pub fn c(&self) -> &BTreeMap<i64, ExactComplex> {
        &self.c
    }

    pub fn d(&self) -> &BTreeMap<i64, ExactComplex> {
        &self.d
    }

    pub fn c_at(&self, n: i64) -> ExactComplex {
        lookup(&self.c, n)
    }

    pub fn d_at(&self, n: i64) -> ExactComplex {
        lookup(&self.d, n)
    }

    /// Sum of `c_j` over `lo ≤ j ≤ hi` with `j ≡ hi (mod 2)`.
    fn c_sum(&self, lo: i64, hi: i64) -> ExactComplex {
        if lo > hi {
            return ExactComplex::zero();
        }
        self.c
            .range(lo..=hi)
            .filter(|(j, _)| (hi - **j) % 2 == 0)
            .fold(ExactComplex::zero(), |acc, (_, v)| acc + v.clone())
    }

    pub fn f(&self, m: i64, n: i64) -> ExactComplex {
        // the indices n+m-1-2k run over n-m+1, n-m+3, …, n+m-1 (m > 0)
        // and over n+m+1, …, n-m-1 (m < 0)
        match m.signum() {
            1 => self.c_sum(n - m + 1, n + m - 1),
            -1 => -self.c_sum(n + m + 1, n - m - 1),
            _ => ExactComplex::zero(),
        }
    }
}

impl Cochain for Cocycle1 {
    fn degree(&self) -> usize {
        1
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        let (x, y) = (args[0], args[1]);
        Ok(match (x.flip, y.flip) {
            (false, false) => ExactComplex::zero(),
            (false, true) => self.f(x.power, y.power),
            (true, false) => -self.f(y.power, x.power),
            (true, true) => self.d_at(y.power - x.power),
        })
    }
}

/// A cocycle produced from defining data.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Cocycle {
    Zero(Trace0),
    One(Cocycle1),
}

impl Cochain for Cocycle {
    fn degree(&self) -> usize {
        match self {
            Cocycle::Zero(_) => 0,
            Cocycle::One(_) => 1,
        }
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        match self {
            Cocycle::Zero(c) => c.value(args),
            Cocycle::One(c) => c.value(args),
        }
    }
}

/// `bψ(x, y) = ψ(xy) - ψ(yx)` or `bφ(x, y, z) = φ(xy, z) - φ(x, yz) + φ(zx, y)`.
pub struct Boundary<'a> {
    inner: &'a dyn Cochain,
}

pub fn boundary_b(c: &dyn Cochain) -> Result<Boundary<'_>> {
    if c.degree() > 1 {
        return Err(NcgError::InvalidArgument(format!("b is implemented on degrees 0 and 1, got {}", c.degree())));
    }
    Ok(Boundary { inner: c })
}

impl Cochain for Boundary<'_> {
    fn degree(&self) -> usize {
        self.inner.degree() + 1
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        let c = self.inner;
        if c.degree() == 0 {
            let (x, y) = (args[0], args[1]);
            return Ok(c.value(&[x.op(y)])? - c.value(&[y.op(x)])?);
        }
        let (x, y, z) = (args[0], args[1], args[2]);
        Ok(c.value(&[x.op(y), z])? - c.value(&[x, y.op(z)])? + c.value(&[z.op(x), y])?)
    }
}

/// `Sψ(x, y, z) = ψ(xyz)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Periodicity2 {
    psi: Trace0,
}

pub fn periodicity_s(psi: &Trace0) -> Periodicity2 {
    Periodicity2 { psi: psi.clone() }
}

impl Periodicity2 {
    /// The explicit table of values on triples within `bound`.
    pub fn to_table(&self, bound: i64) -> Result<ExplicitCochain> {
        ExplicitCochain::tabulate(self, bound)
    }
}

impl Cochain for Periodicity2 {
    fn degree(&self) -> usize {
        2
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        Ok(self.psi.at(args[0].op(args[1]).op(args[2])))
    }
}

/// A cochain given by its values on all tuples of words within `bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitCochain {
    degree: usize,
    bound: i64,
    values: Vec<ExactComplex>,
}

impl ExplicitCochain {
    fn width(bound: i64) -> usize {
        2 * (2 * bound + 1) as usize
    }

    fn slot(&self, args: &[Dihedral]) -> Result<usize> {
        let width = Self::width(self.bound);
        let mut idx = 0;
        for g in args {
            if g.power.abs() > self.bound {
                return Err(NcgError::OutsideDomain { what: format!("table with bound {} at {g}", self.bound) });
            }
            idx = idx * width + 2 * (g.power + self.bound) as usize + g.flip as usize;
        }
        Ok(idx)
    }

    /// Zero everywhere except the listed entries.
    pub fn from_entries(
        degree: usize,
        bound: i64,
        entries: impl IntoIterator<Item = (Vec<Dihedral>, ExactComplex)>,
    ) -> Result<Self> {
        let size = Self::width(bound).pow(degree as u32 + 1);
        let mut table = ExplicitCochain { degree, bound, values: vec![ExactComplex::zero(); size] };
        for (args, v) in entries {
            if args.len() != degree + 1 {
                return Err(NcgError::ArityMismatch { expected: degree + 1, got: args.len() });
            }
            let i = table.slot(&args)?;
            table.values[i] = v;
        }
        Ok(table)
    }

    /// Caches `c` on every tuple within `bound`.
    pub fn tabulate(c: &dyn Cochain, bound: i64) -> Result<Self> {
        let ws = words(bound);
        let degree = c.degree();
        let mut values = Vec::with_capacity(ws.len().pow(degree as u32 + 1));
        let mut tuple = vec![ws[0]; degree + 1];
        let mut digits = vec![0usize; degree + 1];
        loop {
            for (t, d) in tuple.iter_mut().zip(&digits) {
                *t = ws[*d];
            }
            values.push(c.value(&tuple)?);
            // odometer, last slot fastest, matching `slot`
            let mut pos = degree + 1;
            loop {
                if pos == 0 {
                    return Ok(ExplicitCochain { degree, bound, values });
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < ws.len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Nonzero entries in tuple order.
    pub fn support(&self) -> Vec<(Vec<Dihedral>, ExactComplex)> {
        let ws = words(self.bound);
        let width = ws.len();
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(mut i, v)| {
                let mut args = vec![ws[0]; self.degree + 1];
                for slot in args.iter_mut().rev() {
                    *slot = ws[i % width];
                    i /= width;
                }
                (args, v.clone())
            })
            .collect()
    }
}

impl Cochain for ExplicitCochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn value(&self, args: &[Dihedral]) -> Result<ExactComplex> {
        Ok(self.values[self.slot(args)?].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{eval, is_cyclic};
    use crate::group_algebra::GroupRingElement;

    #[test]
    fn trace_symmetry_is_enforced() {
        let bad = Trace0::new(BTreeMap::from([(2, real(1, 1))]), ExactComplex::zero(), ExactComplex::zero());
        assert!(matches!(bad, Err(NcgError::SymmetryViolation(_))));
        let d = BTreeMap::from([(1, real(1, 1)), (-1, real(1, 1))]);
        assert!(matches!(Cocycle1::new(BTreeMap::new(), d), Err(NcgError::SymmetryViolation(_))));
    }

    #[test]
    fn trace_values_follow_parity_of_reflections() {
        let t = Trace0::new(BTreeMap::new(), real(3, 1), real(5, 1)).unwrap();
        assert_eq!(t.at(Dihedral::se(4)), real(3, 1));
        assert_eq!(t.at(Dihedral::se(-3)), real(5, 1));
        assert_eq!(t.at(Dihedral::s(7)), ExactComplex::zero());
    }

    #[test]
    fn f_matches_its_defining_sum() {
        let c: BTreeMap<i64, ExactComplex> = (-5..=5).map(|n| (n, real(n * n - 3 * n + 1, 1))).collect();
        let phi = Cocycle1::new(c.clone(), BTreeMap::new()).unwrap();
        let at = |j: i64| c.get(&j).cloned().unwrap_or_else(ExactComplex::zero);
        for m in -6..=6i64 {
            for n in -6..=6i64 {
                let expected = if m > 0 {
                    (0..m).fold(ExactComplex::zero(), |acc, k| acc + at(n + m - 1 - 2 * k))
                } else {
                    -(m..0).fold(ExactComplex::zero(), |acc, k| acc + at(n + m - 1 - 2 * k))
                };
                assert_eq!(phi.f(m, n), expected, "m={m} n={n}");
                // the other indexing of the same sum
                if m > 0 {
                    let alt = (0..m).fold(ExactComplex::zero(), |acc, k| acc + at(n - m + 1 + 2 * k));
                    assert_eq!(phi.f(m, n), alt);
                }
            }
        }
    }

    #[test]
    fn boundary_of_a_trace_vanishes_on_rotations() {
        let t = psi_k(3);
        let b = boundary_b(&t).unwrap();
        assert_eq!(b.value(&[Dihedral::s(1), Dihedral::s(2)]).unwrap(), ExactComplex::zero());
        assert!(is_cyclic(&t, 4).unwrap());
    }

    #[test]
    fn boundary_of_a_general_functional() {
        // bψ(S^m, S^n e) = b_{m+n} - b_{n-m}
        let f = Functional0::from_fn(10, |_| ExactComplex::zero(), |m| real(m * m, 1));
        let b = boundary_b(&f).unwrap();
        for (m, n) in [(1, 2), (3, -1), (-2, 4)] {
            let v = b.value(&[Dihedral::s(m), Dihedral::se(n)]).unwrap();
            assert_eq!(v, real((m + n) * (m + n) - (n - m) * (n - m), 1));
        }
        let zero = Functional0::from_fn(4, |_| ExactComplex::zero(), |_| ExactComplex::zero());
        let bz = boundary_b(&zero).unwrap();
        assert!(ExplicitCochain::tabulate(&bz, 2).unwrap().support().is_empty());
        let s = periodicity_s(&t0());
        assert!(boundary_b(&s).is_err());
    }

    fn t0() -> Trace0 {
        psi(0).unwrap()
    }

    #[test]
    fn explicit_tables_round_trip() {
        let lazy = periodicity_s(&psi_k(2));
        let s = lazy.to_table(3).unwrap();
        let support = s.support();
        assert!(!support.is_empty());
        for (args, v) in &support {
            assert_eq!(lazy.value(args).unwrap(), *v);
        }
        let rotations = support.iter().filter(|(args, _)| args.iter().all(|g| !g.flip)).count();
        // (p, q, r) with |p|, |q|, |r| ≤ 3 and p + q + r = ±2
        let expected =
            (-3..=3i64).flat_map(|p| (-3..=3i64).map(move |q| p + q)).filter(|pq| (-3..=3).contains(&(2 - pq))).count()
                * 2;
        assert_eq!(rotations, expected);
        let rebuilt = ExplicitCochain::from_entries(2, 3, support).unwrap();
        assert_eq!(rebuilt, s);
        assert!(matches!(
            s.value(&[Dihedral::s(4), Dihedral::s(0), Dihedral::s(0)]),
            Err(NcgError::OutsideDomain { .. })
        ));
    }

    #[test]
    fn periodicity_on_rotations() {
        let s = periodicity_s(&psi_k(3));
        for (p, q, r) in [(1, 1, 1), (3, 0, 0), (-1, -1, -1), (2, 2, -1), (1, 0, 0)] {
            let expected = if p + q + r == 3 || p + q + r == -3 { real(1, 1) } else { ExactComplex::zero() };
            assert_eq!(s.value(&[Dihedral::s(p), Dihedral::s(q), Dihedral::s(r)]).unwrap(), expected);
        }
        let s0 = periodicity_s(&t0());
        let one = GroupRingElement::one();
        assert_eq!(eval(&s0, &[one.clone(), one.clone(), one]).unwrap(), real(1, 1));
    }

    #[test]
    fn explicit_negative_control_is_not_cyclic() {
        let phi = ExplicitCochain::from_entries(1, 2, [(vec![Dihedral::s(1), Dihedral::e()], real(1, 1))]).unwrap();
        assert!(!is_cyclic(&phi, 2).unwrap());
    }
}
