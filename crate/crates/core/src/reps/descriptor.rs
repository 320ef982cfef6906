use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    eta1_composition_factor, eta1_matrix, eta1_quotient, eta2_matrix, two_local_family_t2,
    vt_extension_eta1, vt_wt_extension_eta2, MatrixRep, T2Family,
};
use crate::presentations::GroupKind;
use crate::ring::{LaurentPoly, RatFunc};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepName {
    Eta1,
    Eta1p,
    Eta1q,
    Eta2,
    Vt1,
    T2fam,
    Vtwt2,
}

impl RepName {
    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::InvalidParameter(format!("unknown representation {s:?}")))
    }
}

/// JSON description of a representation, e.g.
/// `{"rep": "eta2", "n": 3, "params": {"f": "t"}}`.
///
/// Polynomial parameters use the canonical ring grammar. `t2fam` reads
/// `family` and whichever of `a`, `b`, `c` it needs; `vtwt2` reads `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDescriptor {
    pub rep: RepName,
    pub n: usize,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

impl RepDescriptor {
    pub fn new(rep: RepName, n: usize) -> Self {
        Self {
            rep,
            n,
            params: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::SyntaxError {
            pos: e.column(),
            msg: e.to_string(),
        })
    }

    fn poly(&self, key: &str) -> Result<LaurentPoly> {
        self.params
            .get(key)
            .map_or(Ok(LaurentPoly::one()), |s| s.parse())
    }

    fn ratfunc(&self, key: &str) -> Result<Option<RatFunc>> {
        self.params.get(key).map(|s| s.parse()).transpose()
    }

    pub fn build(&self) -> Result<MatrixRep> {
        let n = self.n;
        match self.rep {
            RepName::Eta1 => eta1_matrix(n),
            RepName::Eta1p => eta1_composition_factor(n),
            RepName::Eta1q => eta1_quotient(n),
            RepName::Eta2 => eta2_matrix(n, &self.poly("f")?),
            RepName::Vt1 => vt_extension_eta1(n, &self.poly("b")?),
            RepName::Vtwt2 => {
                let kind = self
                    .params
                    .get("kind")
                    .map_or(Ok(GroupKind::WT), |k| GroupKind::parse(k))?;
                vt_wt_extension_eta2(n, &self.poly("f")?, &self.poly("g")?, kind)
            }
            RepName::T2fam => {
                if n != 2 {
                    return Err(Error::BadStrandCount { n, min: 2 });
                }
                let tag: u8 = self
                    .params
                    .get("family")
                    .ok_or_else(|| Error::InvalidParameter("t2fam needs a family".into()))?
                    .parse()
                    .map_err(|_| Error::InvalidParameter("family must be 1..5".into()))?;
                let fam = T2Family::from_tag(
                    tag,
                    self.ratfunc("a")?,
                    self.ratfunc("b")?,
                    self.ratfunc("c")?,
                )?;
                two_local_family_t2(&fam)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::Letter;

    #[test]
    fn json_round_trip_and_build() {
        let d =
            RepDescriptor::from_json(r#"{"rep": "eta2", "n": 3, "params": {"f": "t"}}"#).unwrap();
        assert_eq!(d, RepDescriptor::new(RepName::Eta2, 3).param("f", "t"));
        let rep = d.build().unwrap();
        assert_eq!(rep.label(), "eta2");
        let back = serde_json::to_string(&d).unwrap();
        assert_eq!(back, r#"{"rep":"eta2","n":3,"params":{"f":"t"}}"#);

        let d = RepDescriptor::from_json(r#"{"rep": "eta1", "n": 4}"#).unwrap();
        assert_eq!(d.build().unwrap().degree(), 4);
    }

    #[test]
    fn t2_family_descriptor() {
        let rep = RepDescriptor::new(RepName::T2fam, 2)
            .param("family", 3)
            .param("c", "t")
            .build()
            .unwrap();
        assert_eq!(
            rep.image(Letter::Rho(1)).unwrap().to_strings(),
            [["-1", "0"], ["t", "1"]]
        );
        let missing = RepDescriptor::new(RepName::T2fam, 2).build();
        assert!(matches!(missing, Err(Error::InvalidParameter(_))));
        let bad = RepDescriptor::new(RepName::T2fam, 2)
            .param("family", 9)
            .build();
        assert_eq!(bad, Err(Error::BadFamilyTag(9)));
    }

    #[test]
    fn unknown_names_and_bad_params() {
        assert!(RepName::parse("eta3").is_err());
        assert_eq!(RepName::parse("vtwt2").unwrap(), RepName::Vtwt2);
        let bad = RepDescriptor::new(RepName::Eta2, 3)
            .param("f", "t +")
            .build();
        assert!(matches!(bad, Err(Error::SyntaxError { .. })));
        let zero = RepDescriptor::new(RepName::Eta2, 3).param("f", "0").build();
        assert_eq!(zero, Err(Error::ZeroScalar("f")));
    }
}
