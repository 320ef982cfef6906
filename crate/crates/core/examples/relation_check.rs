//! Verifying group presentations symbolically in each representation.

use twinrep::analysis::verify_relations;
use twinrep::presentations::{build_presentation, GroupKind};
use twinrep::reps::{
    eta1_composition_factor, eta1_matrix, eta2_matrix, vt_extension_eta1, vt_wt_extension_eta2,
    MatrixRep,
};
use twinrep::ring::LaurentPoly;

fn report(rep: &MatrixRep, kind: GroupKind) -> twinrep::Result<()> {
    let r = verify_relations(rep, &build_presentation(kind, rep.n())?)?;
    let bad: Vec<&str> = r.violations().map(|c| c.relation.as_str()).collect();
    println!(
        "{:>6} on {:<5} {:>2} relations, violated: {bad:?}",
        r.rep,
        r.presentation,
        r.relations.len()
    );
    Ok(())
}

fn main() -> twinrep::Result<()> {
    let t = LaurentPoly::t();
    report(&eta1_matrix(5)?, GroupKind::T)?;
    report(&eta2_matrix(5, &"1 + t".parse()?)?, GroupKind::T)?;
    report(&vt_extension_eta1(4, &t)?, GroupKind::VT)?;
    report(&vt_extension_eta1(4, &t)?, GroupKind::WT)?;
    report(
        &vt_wt_extension_eta2(4, &t, &LaurentPoly::one(), GroupKind::WT)?,
        GroupKind::WT,
    )?;
    report(&eta1_composition_factor(5)?, GroupKind::T)?;

    let rep = eta1_composition_factor(4)?;
    for (l, m) in rep.images() {
        println!("{l}:\n{m}");
    }
    Ok(())
}
