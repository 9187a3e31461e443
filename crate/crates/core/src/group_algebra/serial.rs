use serde::{Deserialize, Serialize};

use super::{GroupElement, GroupRingElement, GroupTag, RingElement};
use crate::error::Result;
use crate::scalar::{cq, format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub elem: [i64; 2],
    pub re: String,
    pub im: String,
}

/// `{"group": "dihedral"|"semidirect", "terms": [{"elem": [m, ε|n], "re": "p/q", "im": "p/q"}]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingElementJson {
    pub group: GroupTag,
    pub terms: Vec<TermJson>,
}

fn terms_of<G: GroupElement>(a: &GroupRingElement<G>) -> Vec<TermJson> {
    a.terms()
        .map(|(g, c)| TermJson { elem: g.coords(), re: format_rational(&c.re), im: format_rational(&c.im) })
        .collect()
}

fn parse_terms<G: GroupElement>(terms: &[TermJson]) -> Result<GroupRingElement<G>> {
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        parsed.push((G::from_coords(t.elem)?, cq(parse_rational(&t.re)?, parse_rational(&t.im)?)));
    }
    Ok(GroupRingElement::from_terms(parsed))
}

impl From<&RingElement> for RingElementJson {
    fn from(a: &RingElement) -> Self {
        let terms = match a {
            RingElement::Dihedral(x) => terms_of(x),
            RingElement::Semidirect(x) => terms_of(x),
        };
        RingElementJson { group: a.tag(), terms }
    }
}

impl TryFrom<&RingElementJson> for RingElement {
    type Error = crate::NcgError;

    fn try_from(j: &RingElementJson) -> Result<Self> {
        Ok(match j.group {
            GroupTag::Dihedral => RingElement::Dihedral(parse_terms(&j.terms)?),
            GroupTag::Semidirect => RingElement::Semidirect(parse_terms(&j.terms)?),
        })
    }
}

impl From<RingElement> for RingElementJson {
    fn from(a: RingElement) -> Self {
        RingElementJson::from(&a)
    }
}

impl TryFrom<RingElementJson> for RingElement {
    type Error = crate::NcgError;

    fn try_from(j: RingElementJson) -> Result<Self> {
        RingElement::try_from(&j)
    }
}

impl RingElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RingElementJson::from(self)).expect("ring element serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: RingElementJson = serde_json::from_str(s).map_err(|e| crate::NcgError::Parse(e.to_string()))?;
        RingElement::try_from(&j)
    }
}
