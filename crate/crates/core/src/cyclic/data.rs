use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Cocycle, Cocycle1, Trace0};
use crate::error::Result;
use crate::scalar::{cq, format_rational, parse_rational, ExactComplex};

/// Defining data of a cocycle, as in its JSON form:
///
/// ```json
/// {"kind": "trace", "a": [{"n": 0, "re": "1/1", "im": "0/1"}], "b0": {"re": "0/1", "im": "0/1"}, "b1": …}
/// {"kind": "cocycle1", "c": [{"n": …, "re": …, "im": …}], "d": […]}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum CochainData {
    Trace {
        #[serde(with = "support_list")]
        a: BTreeMap<i64, ExactComplex>,
        #[serde(with = "scalar_json")]
        b0: ExactComplex,
        #[serde(with = "scalar_json")]
        b1: ExactComplex,
    },
    Cocycle1 {
        #[serde(with = "support_list")]
        c: BTreeMap<i64, ExactComplex>,
        #[serde(with = "support_list")]
        d: BTreeMap<i64, ExactComplex>,
    },
}

impl CochainData {
    pub fn zero_trace() -> Self {
        CochainData::Trace { a: BTreeMap::new(), b0: ExactComplex::zero(), b1: ExactComplex::zero() }
    }
}

impl From<&Trace0> for CochainData {
    fn from(t: &Trace0) -> Self {
        CochainData::Trace { a: t.a().clone(), b0: t.b0().clone(), b1: t.b1().clone() }
    }
}

impl From<&Cocycle1> for CochainData {
    fn from(c: &Cocycle1) -> Self {
        CochainData::Cocycle1 { c: c.c().clone(), d: c.d().clone() }
    }
}

/// The cocycle with the given data; `a` must be even and `d` odd.
pub fn cocycle_from_data(data: &CochainData) -> Result<Cocycle> {
    Ok(match data {
        CochainData::Trace { a, b0, b1 } => Cocycle::Zero(Trace0::new(a.clone(), b0.clone(), b1.clone())?),
        CochainData::Cocycle1 { c, d } => Cocycle::One(Cocycle1::new(c.clone(), d.clone())?),
    })
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    re: String,
    im: String,
}

impl From<&ExactComplex> for ScalarRepr {
    fn from(z: &ExactComplex) -> Self {
        ScalarRepr { re: format_rational(&z.re), im: format_rational(&z.im) }
    }
}

impl ScalarRepr {
    fn parse(&self) -> Result<ExactComplex> {
        Ok(cq(parse_rational(&self.re)?, parse_rational(&self.im)?))
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    n: i64,
    re: String,
    im: String,
}

mod scalar_json {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::ScalarRepr;
    use crate::scalar::ExactComplex;

    pub fn serialize<S: Serializer>(z: &ExactComplex, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr::from(z).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactComplex, D::Error> {
        ScalarRepr::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

mod support_list {
    use std::collections::BTreeMap;

    use num_traits::Zero;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{EntryRepr, ScalarRepr};
    use crate::scalar::ExactComplex;

    pub fn serialize<S: Serializer>(map: &BTreeMap<i64, ExactComplex>, s: S) -> Result<S::Ok, S::Error> {
        map.iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(n, v)| {
                let r = ScalarRepr::from(v);
                EntryRepr { n: *n, re: r.re, im: r.im }
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<i64, ExactComplex>, D::Error> {
        let entries = Vec::<EntryRepr>::deserialize(d)?;
        let mut map = BTreeMap::new();
        for e in entries {
            let v = ScalarRepr { re: e.re, im: e.im }.parse().map_err(serde::de::Error::custom)?;
            if map.insert(e.n, v).is_some() {
                return Err(serde::de::Error::custom(format!("index {} listed twice", e.n)));
            }
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{psi, Cochain};
    use crate::error::NcgError;
    use crate::group_algebra::Dihedral;
    use crate::scalar::real;

    #[test]
    fn distinguished_data() {
        let c = cocycle_from_data(&CochainData::Trace { a: BTreeMap::new(), b0: ExactComplex::zero(), b1: real(2, 1) })
            .unwrap();
        assert_eq!(c, Cocycle::Zero(psi(2).unwrap()));
        let zero = cocycle_from_data(&CochainData::Cocycle1 { c: BTreeMap::new(), d: BTreeMap::new() }).unwrap();
        assert_eq!(zero.degree(), 1);
        assert_eq!(zero.value(&[Dihedral::s(2), Dihedral::se(1)]).unwrap(), ExactComplex::zero());
    }

    #[test]
    fn asymmetric_data_is_rejected() {
        let odd_a = CochainData::Trace {
            a: BTreeMap::from([(1, real(1, 1))]),
            b0: ExactComplex::zero(),
            b1: ExactComplex::zero(),
        };
        assert!(matches!(cocycle_from_data(&odd_a), Err(NcgError::SymmetryViolation(_))));
    }

    #[test]
    fn json_is_a_support_list() {
        let data = CochainData::from(&psi(0).unwrap());
        let json = serde_json::to_string(&data).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"trace","a":[{"n":0,"re":"1/1","im":"0/1"}],"b0":{"re":"0/1","im":"0/1"},"b1":{"re":"0/1","im":"0/1"}}"#
        );
        let back: CochainData = serde_json::from_str(&json).unwrap();
        assert_eq!(back, data);
        let dup = r#"{"kind":"cocycle1","c":[{"n":1,"re":"1","im":"0"},{"n":1,"re":"2","im":"0"}],"d":[]}"#;
        assert!(serde_json::from_str::<CochainData>(dup).is_err());
    }
}
