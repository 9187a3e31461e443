use std::collections::BTreeMap;

use super::window::{Site, Window};
use crate::error::{NcgError, Result};
use crate::scalar::{Backend, Scalar};

/// A sparse matrix over a finite window of `ℓ²(Z)`, `ℓ²(Z²)` or `C`, with
/// `blocks` orthogonal copies of the window (`H ⊕ H` for graded modules).
///
/// Operators are compressions: entries whose row or column falls outside the
/// window are dropped. Two numbers track how far the compression can be
/// trusted. `reach` bounds how much one entry of the untruncated operator can
/// change the site radius, and `exact_radius` is the radius within which
/// every stored entry equals the corresponding entry of the untruncated
/// operator. Products shrink `exact_radius` by the smaller of the two reaches.
#[derive(Clone, Debug, PartialEq)]
pub struct WindowedOperator<S: Scalar> {
    window: Window,
    blocks: usize,
    rows: Vec<BTreeMap<usize, S>>,
    reach: i64,
    exact_radius: i64,
}

impl<S: Scalar> WindowedOperator<S> {
    pub fn zeros(window: Window, blocks: usize) -> Self {
        let dim = window.site_count() * blocks;
        WindowedOperator { window, blocks, rows: vec![BTreeMap::new(); dim], reach: 0, exact_radius: window.radius }
    }

    pub fn identity(window: Window, blocks: usize) -> Self {
        Self::diagonal(window, blocks, |_, _| S::one())
    }

    pub fn diagonal(window: Window, blocks: usize, f: impl Fn(usize, Site) -> S) -> Self {
        let mut op = Self::zeros(window, blocks);
        for b in 0..blocks {
            for (i, site) in window.sites().enumerate() {
                let idx = b * window.site_count() + i;
                op.insert(idx, idx, f(b, site));
            }
        }
        op
    }

    /// Builds the compression of the operator sending basis vector
    /// `(block, site)` to `Σ coeff · (block', site')` as listed by `image`.
    /// `reach` must bound `| |site'| - |site| |` over all images.
    pub fn from_action(
        window: Window,
        blocks: usize,
        reach: i64,
        image: impl Fn(usize, Site) -> Vec<(usize, Site, S)>,
    ) -> Self {
        let mut op = Self::zeros(window, blocks);
        op.reach = reach;
        let n = window.site_count();
        for b in 0..blocks {
            for (j, site) in window.sites().enumerate() {
                for (b2, site2, c) in image(b, site) {
                    if let Some(i) = window.index_of(site2) {
                        op.accumulate(b2 * n + i, b * n + j, c);
                    }
                }
            }
        }
        op
    }

    /// Assembles a block operator from single-block pieces; `None` is zero.
    pub fn from_blocks(grid: &[Vec<Option<&WindowedOperator<S>>>]) -> Result<Self> {
        let blocks = grid.len();
        let first = grid
            .iter()
            .flatten()
            .flatten()
            .next()
            .ok_or_else(|| NcgError::InvalidArgument("empty block grid".into()))?;
        let window = first.window;
        let n = window.site_count();
        let mut op = Self::zeros(window, blocks);
        op.reach = 0;
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != blocks {
                return Err(NcgError::DimensionMismatch("block grid is not square".into()));
            }
            for (bj, piece) in row.iter().enumerate() {
                let Some(piece) = piece else { continue };
                if piece.window != window || piece.blocks != 1 {
                    return Err(NcgError::DimensionMismatch(
                        "block pieces must be single-block operators on one window".into(),
                    ));
                }
                op.reach = op.reach.max(piece.reach);
                op.exact_radius = op.exact_radius.min(piece.exact_radius);
                for (i, row) in piece.rows.iter().enumerate() {
                    for (j, c) in row {
                        op.insert(bi * n + i, bj * n + j, c.clone());
                    }
                }
            }
        }
        Ok(op)
    }

    fn insert(&mut self, i: usize, j: usize, c: S) {
        if c.is_negligible(0.0) {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, c);
        }
    }

    fn accumulate(&mut self, i: usize, j: usize, c: S) {
        let v = match self.rows[i].remove(&j) {
            Some(old) => old + c,
            None => c,
        };
        self.insert(i, j, v);
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn backend(&self) -> Backend {
        S::BACKEND
    }

    pub fn reach(&self) -> i64 {
        self.reach
    }

    pub fn exact_radius(&self) -> i64 {
        self.exact_radius
    }

    /// `(block, site)` of a linear index.
    pub fn locate(&self, index: usize) -> (usize, Site) {
        let n = self.window.site_count();
        (index / n, self.window.site(index % n))
    }

    pub fn index(&self, block: usize, site: Site) -> Option<usize> {
        (block < self.blocks)
            .then(|| self.window.index_of(site).map(|i| block * self.window.site_count() + i))
            .flatten()
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.rows[i].get(&j).cloned().unwrap_or_else(S::zero)
    }

    pub fn entry(&self, row: (usize, Site), col: (usize, Site)) -> S {
        match (self.index(row.0, row.1), self.index(col.0, col.1)) {
            (Some(i), Some(j)) => self.get(i, j),
            _ => S::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, c)| (i, *j, c)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    /// Apply to the basis vector at linear index `j`.
    pub fn column(&self, j: usize) -> Vec<(usize, S)> {
        self.entries().filter(|(_, c, _)| *c == j).map(|(i, _, v)| (i, v.clone())).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.window != other.window || self.blocks != other.blocks {
            return Err(NcgError::DimensionMismatch(format!(
                "{} x{} vs {} x{}",
                self.window, self.blocks, other.window, other.blocks
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (i, j, c) in other.entries() {
            out.accumulate(i, j, c.clone());
        }
        out.reach = self.reach.max(other.reach);
        out.exact_radius = self.exact_radius.min(other.exact_radius);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zeros(self.window, self.blocks);
        out.reach = self.reach;
        out.exact_radius = self.exact_radius;
        for (i, j, v) in self.entries() {
            out.insert(i, j, v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zeros(self.window, self.blocks);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    let term = a.clone() * b.clone();
                    match acc.remove(j) {
                        Some(old) => acc.insert(*j, old + term),
                        None => acc.insert(*j, term),
                    };
                }
            }
            acc.retain(|_, v| !v.is_negligible(0.0));
            out.rows[i] = acc;
        }
        out.reach = self.reach + other.reach;
        // a summed index lies within min(reach) of the row or the column
        out.exact_radius = (self.exact_radius.min(other.exact_radius) - self.reach.min(other.reach)).max(-1);
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::identity(self.window, self.blocks);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.window, self.blocks);
        out.reach = self.reach;
        out.exact_radius = self.exact_radius;
        for (i, j, c) in self.entries() {
            out.insert(j, i, c.conj());
        }
        out
    }

    /// `AB - BA`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `AB + BA`
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn trace(&self) -> S {
        self.rows.iter().enumerate().filter_map(|(i, row)| row.get(&i).cloned()).fold(S::zero(), |acc, c| acc + c)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().map(|(_, _, c)| c.modulus()).fold(0.0, f64::max)
    }

    /// Largest entry modulus over entries whose row and column sites both
    /// satisfy `keep`.
    pub fn max_abs_where(&self, keep: impl Fn(Site) -> bool) -> f64 {
        self.entries()
            .filter(|(i, j, _)| keep(self.locate(*i).1) && keep(self.locate(*j).1))
            .map(|(_, _, c)| c.modulus())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.entries().all(|(_, _, c)| c.is_negligible(tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> Result<bool> {
        Ok(self.sub(other)?.is_zero(tol))
    }

    /// Largest site radius carrying a nonzero stored entry, -1 if none.
    pub fn support_radius(&self) -> i64 {
        self.entries()
            .map(|(i, j, _)| {
                let r = self.window.site_radius(self.locate(i).1);
                r.max(self.window.site_radius(self.locate(j).1))
            })
            .max()
            .unwrap_or(-1)
    }

    /// True when every stored nonzero entry lies where the compression is
    /// known to agree with the untruncated operator.
    pub fn interior_exact(&self) -> bool {
        self.support_radius() <= self.exact_radius
    }

    /// Rank by Gaussian elimination: exact over `Q(i)`, or with pivots below
    /// `tol` treated as zero on the float backend.
    pub fn rank(&self, tol: f64) -> usize {
        let rows: Vec<BTreeMap<usize, S>> = self.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        super::linalg::rank_of_rows(rows, tol)
    }

    /// Coordinate-list dump, one line per stored entry:
    /// `row col block_r block_c re im`, sorted by (row, col, block_r, block_c).
    pub fn dump(&self) -> String {
        let mut lines: Vec<((Site, Site, usize, usize), String)> = self
            .entries()
            .map(|(i, j, c)| {
                let (br, sr) = self.locate(i);
                let (bc, sc) = self.locate(j);
                let (re, im) = c.format_parts();
                let line = format!(
                    "{} {} {} {} {} {}",
                    self.window.format_site(sr),
                    self.window.format_site(sc),
                    br,
                    bc,
                    re,
                    im
                );
                ((sr, sc, br, bc), line)
            })
            .collect();
        lines.sort();
        let mut out = String::new();
        for (_, line) in lines {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Overrides the exactness bookkeeping, for comparing entries alone.
    #[cfg(test)]
    pub(crate) fn with_bounds(mut self, reach: i64, exact_radius: i64) -> Self {
        self.reach = reach;
        self.exact_radius = exact_radius;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{real, ExactComplex};

    type Op = WindowedOperator<ExactComplex>;

    fn shift(n: i64) -> Op {
        let w = Window::interval(n).unwrap();
        Op::from_action(w, 1, 1, |_, s| vec![(0, [s[0] + 1, 0], real(1, 1))])
    }

    fn sign(n: i64) -> Op {
        let w = Window::interval(n).unwrap();
        Op::diagonal(w, 1, |_, s| if s[0] >= 0 { real(1, 1) } else { real(-1, 1) })
    }

    #[test]
    fn shift_commutator_is_rank_one_at_minus_one() {
        let c = sign(6).commutator(&shift(6)).unwrap();
        let w = c.window();
        assert_eq!(c.nnz(), 1);
        assert_eq!(c.entry((0, [0, 0]), (0, [-1, 0])), real(2, 1));
        assert_eq!(c.rank(0.0), 1);
        assert!(c.interior_exact());
        assert_eq!(w.radius, 6);
    }

    #[test]
    fn truncation_bookkeeping() {
        let s = shift(4);
        assert_eq!(s.exact_radius(), 4);
        let s2 = s.mul(&s).unwrap();
        assert_eq!(s2.exact_radius(), 3);
        assert_eq!(s2.reach(), 2);
        // the compressed S·S* is not the identity at the top edge
        let p = s.mul(&s.adjoint()).unwrap();
        assert!(!p.interior_exact());
    }

    #[test]
    fn adjoint_is_conjugate_transpose() {
        let w = Window::interval(3).unwrap();
        let a = Op::from_action(w, 2, 1, |b, s| {
            vec![(1 - b, [s[0] + 1, 0], crate::scalar::cq(crate::scalar::rat(1, 2), crate::scalar::rat(b as i64, 1)))]
        });
        let adj = a.adjoint();
        for (i, j, c) in a.entries() {
            assert_eq!(adj.get(j, i), Scalar::conj(c));
        }
        assert_eq!(adj.adjoint(), a);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(matches!(shift(3).mul(&shift(4)), Err(NcgError::DimensionMismatch(_))));
    }

    #[test]
    fn dump_is_sorted() {
        let d = shift(1).dump();
        assert_eq!(d, "0 -1 0 0 1/1 0/1\n1 0 0 0 1/1 0/1\n");
    }
}
