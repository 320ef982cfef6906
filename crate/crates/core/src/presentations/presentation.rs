use std::fmt;

use serde::Serialize;

use super::{GroupKind, Letter, TwinWord};
use crate::{Error, Result};

/// The defining relation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RelationTag {
    /// `s_i^2 = 1`
    SInvolution,
    /// `s_i s_j = s_j s_i`, `|i - j| >= 2`
    SCommute,
    /// `ρ_i ρ_{i+1} ρ_i = ρ_{i+1} ρ_i ρ_{i+1}`
    RhoBraid,
    /// `ρ_i ρ_j = ρ_j ρ_i`, `|i - j| >= 2`
    RhoCommute,
    /// `ρ_i^2 = 1`
    RhoInvolution,
    /// `s_i ρ_j = ρ_j s_i`, `|i - j| >= 2`
    MixedCommute,
    /// `ρ_i ρ_{i+1} s_i = s_{i+1} ρ_i ρ_{i+1}`
    Mixed,
    /// `ρ_{i+1} ρ_i s_{i+1} = s_i ρ_{i+1} ρ_i`
    MixedAlt,
    /// `ρ_i s_{i+1} s_i = s_{i+1} s_i ρ_{i+1}`
    Welded,
    /// `s_{i+1} ρ_i ρ_{i+1} = ρ_i ρ_{i+1} s_i`, the stated equivalent of `Welded`
    WeldedAlt,
}

impl RelationTag {
    pub fn name(self) -> &'static str {
        match self {
            RelationTag::SInvolution => "s-involution",
            RelationTag::SCommute => "s-commute",
            RelationTag::RhoBraid => "rho-braid",
            RelationTag::RhoCommute => "rho-commute",
            RelationTag::RhoInvolution => "rho-involution",
            RelationTag::MixedCommute => "mixed-commute",
            RelationTag::Mixed => "mixed",
            RelationTag::MixedAlt => "mixed-alt",
            RelationTag::Welded => "welded",
            RelationTag::WeldedAlt => "welded-alt",
        }
    }
}

/// `lhs = rhs` in the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub tag: RelationTag,
    pub lhs: TwinWord,
    pub rhs: TwinWord,
}

impl Relation {
    pub fn label(&self) -> String {
        let side = |w: &TwinWord| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            }
        };
        format!(
            "[{}] {} = {}",
            self.tag.name(),
            side(&self.lhs),
            side(&self.rhs)
        )
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    kind: GroupKind,
    n: usize,
    generators: Vec<Letter>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Letter] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// e.g. `"VT_3"`
    pub fn id(&self) -> String {
        format!("{}_{}", self.kind, self.n)
    }
}

/// Full relation list of `T_n`, `VT_n` or `WT_n`, including the printed
/// alternative forms of the mixed relations as extra checkable pairs.
pub fn build_presentation(kind: GroupKind, n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::BadStrandCount { n, min: 2 });
    }
    use Letter::{Rho as R, S};
    let mut relations = Vec::new();
    let mut push = |tag, lhs: Vec<Letter>, rhs: Vec<Letter>| {
        relations.push(Relation {
            tag,
            lhs: TwinWord::new(kind, n, lhs).expect("indices in range"),
            rhs: TwinWord::new(kind, n, rhs).expect("indices in range"),
        });
    };
    let gens = 1..n;
    let far_pairs: Vec<(usize, usize)> = gens
        .clone()
        .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
        .collect();

    for i in gens.clone() {
        push(RelationTag::SInvolution, vec![S(i), S(i)], vec![]);
    }
    for &(i, j) in &far_pairs {
        push(RelationTag::SCommute, vec![S(i), S(j)], vec![S(j), S(i)]);
    }
    if kind.has_rho() {
        for i in 1..n - 1 {
            push(
                RelationTag::RhoBraid,
                vec![R(i), R(i + 1), R(i)],
                vec![R(i + 1), R(i), R(i + 1)],
            );
        }
        for &(i, j) in &far_pairs {
            push(RelationTag::RhoCommute, vec![R(i), R(j)], vec![R(j), R(i)]);
        }
        for i in gens.clone() {
            push(RelationTag::RhoInvolution, vec![R(i), R(i)], vec![]);
        }
        for i in gens.clone() {
            for j in gens.clone() {
                if i.abs_diff(j) >= 2 {
                    push(
                        RelationTag::MixedCommute,
                        vec![S(i), R(j)],
                        vec![R(j), S(i)],
                    );
                }
            }
        }
        for i in 1..n - 1 {
            push(
                RelationTag::Mixed,
                vec![R(i), R(i + 1), S(i)],
                vec![S(i + 1), R(i), R(i + 1)],
            );
            push(
                RelationTag::MixedAlt,
                vec![R(i + 1), R(i), S(i + 1)],
                vec![S(i), R(i + 1), R(i)],
            );
        }
    }
    if kind == GroupKind::WT {
        for i in 1..n - 1 {
            push(
                RelationTag::Welded,
                vec![R(i), S(i + 1), S(i)],
                vec![S(i + 1), S(i), R(i + 1)],
            );
            push(
                RelationTag::WeldedAlt,
                vec![S(i + 1), R(i), R(i + 1)],
                vec![R(i), R(i + 1), S(i)],
            );
        }
    }

    let mut generators: Vec<Letter> = (1..n).map(S).collect();
    if kind.has_rho() {
        generators.extend((1..n).map(R));
    }
    Ok(Presentation {
        kind,
        n,
        generators,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(p: &Presentation, tag: RelationTag) -> usize {
        p.relations().iter().filter(|r| r.tag == tag).count()
    }

    #[test]
    fn small_twin_groups() {
        let t2 = build_presentation(GroupKind::T, 2).unwrap();
        assert_eq!(t2.relations().len(), 1);
        assert_eq!(t2.relations()[0].label(), "[s-involution] s1 s1 = 1");

        let t3 = build_presentation(GroupKind::T, 3).unwrap();
        let labels: Vec<String> = t3.relations().iter().map(Relation::label).collect();
        assert_eq!(
            labels,
            ["[s-involution] s1 s1 = 1", "[s-involution] s2 s2 = 1"]
        );
    }

    #[test]
    fn virtual_twin_group_on_three_strands() {
        let vt3 = build_presentation(GroupKind::VT, 3).unwrap();
        assert_eq!(count(&vt3, RelationTag::SInvolution), 2);
        assert_eq!(count(&vt3, RelationTag::RhoInvolution), 2);
        assert_eq!(count(&vt3, RelationTag::RhoBraid), 1);
        assert_eq!(count(&vt3, RelationTag::Mixed), 1);
        assert_eq!(count(&vt3, RelationTag::MixedAlt), 1);
        assert_eq!(count(&vt3, RelationTag::SCommute), 0);
        assert_eq!(count(&vt3, RelationTag::MixedCommute), 0);
        assert_eq!(count(&vt3, RelationTag::Welded), 0);
        assert_eq!(vt3.relations().len(), 7);
        assert_eq!(vt3.id(), "VT_3");
        assert_eq!(vt3.generators().len(), 4);
    }

    #[test]
    fn index_ranges_for_larger_n() {
        // n = 5: far pairs (1,3),(1,4),(2,4); ordered mixed pairs are twice that
        let wt5 = build_presentation(GroupKind::WT, 5).unwrap();
        assert_eq!(count(&wt5, RelationTag::SCommute), 3);
        assert_eq!(count(&wt5, RelationTag::RhoCommute), 3);
        assert_eq!(count(&wt5, RelationTag::MixedCommute), 6);
        assert_eq!(count(&wt5, RelationTag::Welded), 3);
        assert_eq!(count(&wt5, RelationTag::WeldedAlt), 3);
        let welded: Vec<String> = wt5
            .relations()
            .iter()
            .filter(|r| r.tag == RelationTag::Welded)
            .map(Relation::label)
            .collect();
        assert_eq!(welded[0], "[welded] r1 s2 s1 = s2 s1 r2");
    }

    #[test]
    fn rejects_single_strand() {
        assert_eq!(
            build_presentation(GroupKind::T, 1),
            Err(Error::BadStrandCount { n: 1, min: 2 })
        );
    }
}
