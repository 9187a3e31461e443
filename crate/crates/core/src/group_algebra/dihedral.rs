use std::collections::BTreeSet;
use std::fmt;

use super::{GroupElement, GroupTag};
use crate::error::{NcgError, Result};

/// `S^power e^flip`, the normal form of an element of the infinite dihedral
/// group under `e² = 1`, `eS = S⁻¹e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    pub power: i64,
    pub flip: bool,
}

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral { power: 0, flip: false };

    pub const fn new(power: i64, flip: bool) -> Self {
        Dihedral { power, flip }
    }

    /// `S^m`
    pub const fn s(m: i64) -> Self {
        Dihedral::new(m, false)
    }

    pub const fn e() -> Self {
        Dihedral::new(0, true)
    }

    /// `S^m e`
    pub const fn se(m: i64) -> Self {
        Dihedral::new(m, true)
    }

    pub fn is_reflection(self) -> bool {
        self.flip
    }
}

impl GroupElement for Dihedral {
    const TAG: GroupTag = GroupTag::Dihedral;

    fn identity() -> Self {
        Dihedral::IDENTITY
    }

    fn op(self, other: Self) -> Self {
        // S^m e^a S^p e^b = S^(m ± p) e^(a+b)
        let p = if self.flip { -other.power } else { other.power };
        Dihedral::new(self.power + p, self.flip ^ other.flip)
    }

    fn inverse(self) -> Self {
        if self.flip {
            self
        } else {
            Dihedral::s(-self.power)
        }
    }

    fn coords(self) -> [i64; 2] {
        [self.power, self.flip as i64]
    }

    fn from_coords([m, eps]: [i64; 2]) -> Result<Self> {
        match eps {
            0 => Ok(Dihedral::s(m)),
            1 => Ok(Dihedral::se(m)),
            _ => Err(NcgError::Parse(format!("dihedral flip must be 0 or 1, got {eps}"))),
        }
    }

    fn radius(self) -> i64 {
        self.power.abs()
    }
}

impl fmt::Display for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.power, self.flip) {
            (0, false) => f.write_str("1"),
            (0, true) => f.write_str("e"),
            (1, false) => f.write_str("S"),
            (1, true) => f.write_str("Se"),
            (m, false) => write!(f, "S^{m}"),
            (m, true) => write!(f, "S^{m}e"),
        }
    }
}

/// All conjugates `h g h⁻¹` with conjugator `h = S^m e^ε`, `|m| ≤ bound`.
pub fn conjugacy_class(g: Dihedral, bound: i64) -> BTreeSet<Dihedral> {
    let mut class = BTreeSet::new();
    for m in -bound..=bound {
        for flip in [false, true] {
            let h = Dihedral::new(m, flip);
            class.insert(h.op(g).op(h.inverse()));
        }
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rewrites a word in the letters S, S⁻¹, e by pushing every e to the
    /// right with eS → S⁻¹e, eS⁻¹ → Se, ee → 1.
    fn rewrite(word: &[char]) -> Dihedral {
        let mut w: Vec<char> = word.to_vec();
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < w.len() {
                match (w[i], w[i + 1]) {
                    ('e', 'e') => {
                        w.drain(i..i + 2);
                        changed = true;
                    }
                    ('e', 'S') => {
                        w[i] = 's';
                        w[i + 1] = 'e';
                        changed = true;
                    }
                    ('e', 's') => {
                        w[i] = 'S';
                        w[i + 1] = 'e';
                        changed = true;
                    }
                    ('S', 's') | ('s', 'S') => {
                        w.drain(i..i + 2);
                        changed = true;
                    }
                    _ => i += 1,
                }
            }
            if !changed {
                break;
            }
        }
        let power = w
            .iter()
            .map(|c| match c {
                'S' => 1,
                's' => -1,
                _ => 0,
            })
            .sum();
        let flip = w.last() == Some(&'e');
        Dihedral::new(power, flip)
    }

    fn spell(g: Dihedral) -> Vec<char> {
        let letter = if g.power >= 0 { 'S' } else { 's' };
        let mut w = vec![letter; g.power.unsigned_abs() as usize];
        if g.flip {
            w.push('e');
        }
        w
    }

    #[test]
    fn relations() {
        assert_eq!(Dihedral::e().op(Dihedral::e()), Dihedral::IDENTITY);
        let ese = Dihedral::e().op(Dihedral::s(1)).op(Dihedral::e());
        assert_eq!(ese, Dihedral::s(-1));
    }

    #[test]
    fn product_matches_rewriting_oracle() {
        assert_eq!(rewrite(&['S', 'S', 'e', 'S', 'S', 'S', 'e']), Dihedral::s(-1));
        assert_eq!(Dihedral::se(2).op(Dihedral::se(3)), Dihedral::s(-1));
        for m in -4..=4 {
            for p in -4..=4 {
                for a in [false, true] {
                    for b in [false, true] {
                        let g = Dihedral::new(m, a);
                        let h = Dihedral::new(p, b);
                        let mut word = spell(g);
                        word.extend(spell(h));
                        assert_eq!(g.op(h), rewrite(&word), "{g} * {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(Dihedral::s(5).inverse(), Dihedral::s(-5));
        assert_eq!(Dihedral::se(5).inverse(), Dihedral::se(5));
        for m in -6..=6 {
            for flip in [false, true] {
                let g = Dihedral::new(m, flip);
                assert_eq!(g.op(g.inverse()), Dihedral::IDENTITY);
            }
        }
    }

    #[test]
    fn conjugacy_classes() {
        let class = conjugacy_class(Dihedral::e(), 3);
        assert!(class.iter().all(|g| g.flip && g.power % 2 == 0));
        assert!(class.contains(&Dihedral::se(6)) && class.contains(&Dihedral::se(-6)));

        let class = conjugacy_class(Dihedral::se(1), 3);
        assert!(class.iter().all(|g| g.flip && g.power.rem_euclid(2) == 1));

        assert_eq!(conjugacy_class(Dihedral::IDENTITY, 5).len(), 1);

        let class = conjugacy_class(Dihedral::s(2), 3);
        assert_eq!(class, [Dihedral::s(2), Dihedral::s(-2)].into_iter().collect());
    }

    #[test]
    fn display() {
        assert_eq!(Dihedral::s(-2).to_string(), "S^-2");
        assert_eq!(Dihedral::se(1).to_string(), "Se");
    }
}
