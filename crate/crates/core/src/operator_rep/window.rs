use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{NcgError, Result};

/// A lattice site: `[n, 0]` on `Z`, `[p, q]` on `Z²`, `[0, 0]` for a point.
pub type Site = [i64; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowKind {
    /// A single site, for the finite-dimensional modules on `C²`.
    Point,
    /// `[-N, N] ⊂ Z`
    Interval,
    /// `[-N, N]² ⊂ Z²`
    Box,
}

/// A finite index window of `ℓ²(Z)` or `ℓ²(Z²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub kind: WindowKind,
    pub radius: i64,
}

impl Window {
    pub fn point() -> Self {
        Window { kind: WindowKind::Point, radius: 0 }
    }

    pub fn interval(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(NcgError::InvalidArgument(format!("window radius must be ≥ 1, got {n}")));
        }
        Ok(Window { kind: WindowKind::Interval, radius: n })
    }

    pub fn square(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(NcgError::InvalidArgument(format!("window radius must be ≥ 1, got {n}")));
        }
        Ok(Window { kind: WindowKind::Box, radius: n })
    }

    /// The same kind of window with a different radius; points stay points.
    pub fn with_radius(self, n: i64) -> Result<Self> {
        match self.kind {
            WindowKind::Point => Ok(self),
            WindowKind::Interval => Window::interval(n),
            WindowKind::Box => Window::square(n),
        }
    }

    fn side(&self) -> usize {
        (2 * self.radius + 1) as usize
    }

    pub fn site_count(&self) -> usize {
        match self.kind {
            WindowKind::Point => 1,
            WindowKind::Interval => self.side(),
            WindowKind::Box => self.side() * self.side(),
        }
    }

    pub fn index_of(&self, site: Site) -> Option<usize> {
        let n = self.radius;
        match self.kind {
            WindowKind::Point => (site == [0, 0]).then_some(0),
            WindowKind::Interval => (site[1] == 0 && site[0].abs() <= n).then(|| (site[0] + n) as usize),
            WindowKind::Box => (site[0].abs() <= n && site[1].abs() <= n)
                .then(|| ((site[0] + n) as usize) * self.side() + (site[1] + n) as usize),
        }
    }

    pub fn site(&self, index: usize) -> Site {
        let n = self.radius;
        match self.kind {
            WindowKind::Point => [0, 0],
            WindowKind::Interval => [index as i64 - n, 0],
            WindowKind::Box => {
                let side = self.side();
                [(index / side) as i64 - n, (index % side) as i64 - n]
            }
        }
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        (0..self.site_count()).map(|i| self.site(i))
    }

    /// `|n|` on `Z`, `max(|p|, |q|)` on `Z²`.
    pub fn site_radius(&self, site: Site) -> i64 {
        site[0].abs().max(site[1].abs())
    }

    pub fn format_site(&self, site: Site) -> String {
        match self.kind {
            WindowKind::Point | WindowKind::Interval => site[0].to_string(),
            WindowKind::Box => format!("{},{}", site[0], site[1]),
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WindowKind::Point => f.write_str("point"),
            WindowKind::Interval => write!(f, "[-{0},{0}]", self.radius),
            WindowKind::Box => write!(f, "[-{0},{0}]^2", self.radius),
        }
    }
}
