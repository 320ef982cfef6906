use serde::Serialize;

use crate::matrix::Matrix;
use crate::presentations::{Presentation, RelationTag};
use crate::reps::{evaluate_word, MatrixRep};
use crate::ring::RatFunc;
use crate::{Error, Result};

/// Both sides of one relation evaluated in a representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    #[serde(skip)]
    pub tag: RelationTag,
    pub holds: bool,
    pub lhs: Matrix<RatFunc>,
    pub rhs: Matrix<RatFunc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub presentation: String,
    pub rep: String,
    pub relations: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &RelationCheck> {
        self.relations.iter().filter(|r| !r.holds)
    }
}

/// Evaluates both sides of every relation of `p` in `rep` and compares them exactly.
pub fn verify_relations(rep: &MatrixRep, p: &Presentation) -> Result<RelationReport> {
    if rep.n() != p.n() {
        return Err(Error::KindMismatch(format!(
            "{}_{} representation against {}",
            rep.kind(),
            rep.n(),
            p.id()
        )));
    }
    if p.kind().has_rho() && !rep.kind().has_rho() {
        return Err(Error::KindMismatch(format!(
            "{} representation against {}",
            rep.kind(),
            p.id()
        )));
    }
    let relations = p
        .relations()
        .iter()
        .map(|r| {
            let lhs = evaluate_word(rep, &r.lhs)?;
            let rhs = evaluate_word(rep, &r.rhs)?;
            Ok(RelationCheck {
                relation: r.label(),
                tag: r.tag,
                holds: lhs == rhs,
                lhs,
                rhs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport {
        presentation: p.id(),
        rep: rep.label().to_string(),
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_presentation, GroupKind};
    use crate::reps::{eta1_matrix, vt_extension_eta1};
    use crate::ring::LaurentPoly;

    #[test]
    fn eta1_satisfies_t4() {
        let rep = eta1_matrix(4).unwrap();
        let report = verify_relations(&rep, &build_presentation(GroupKind::T, 4).unwrap()).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.relations.len(), 3 + 1);
    }

    #[test]
    fn vt_extension_fails_only_the_welded_relation() {
        let rep = vt_extension_eta1(3, &LaurentPoly::t()).unwrap();
        let vt = verify_relations(&rep, &build_presentation(GroupKind::VT, 3).unwrap()).unwrap();
        assert!(vt.all_hold());
        let wt = verify_relations(&rep, &build_presentation(GroupKind::WT, 3).unwrap()).unwrap();
        let failed: Vec<RelationTag> = wt.violations().map(|r| r.tag).collect();
        assert_eq!(failed, [RelationTag::Welded]);
        let v = wt.violations().next().unwrap();
        assert_ne!(v.lhs, v.rhs);
    }

    #[test]
    fn mismatched_inputs() {
        let rep = eta1_matrix(3).unwrap();
        assert!(verify_relations(&rep, &build_presentation(GroupKind::T, 4).unwrap()).is_err());
        assert!(verify_relations(&rep, &build_presentation(GroupKind::VT, 3).unwrap()).is_err());
    }

    #[test]
    fn json_shape() {
        let rep = eta1_matrix(2).unwrap();
        let report = verify_relations(&rep, &build_presentation(GroupKind::T, 2).unwrap()).unwrap();
        let json = serde_json::to_string(&report.relations[0]).unwrap();
        assert_eq!(
            json,
            r#"{"relation":"[s-involution] s1 s1 = 1","holds":true,"lhs":{"degree":2,"entries":[["1","0"],["0","1"]]},"rhs":{"degree":2,"entries":[["1","0"],["0","1"]]}}"#
        );
    }
}
