//! The virtual extension of eta1 does not descend to the welded twin group.

use twinrep::analysis::wt_obstruction_check;

fn main() -> twinrep::Result<()> {
    for b in ["1", "t", "1 + t", "t^-1"] {
        let w = wt_obstruction_check(4, &b.parse()?)?;
        println!("b = {b}: obstructed = {}", w.obstructed);
        for c in &w.indices {
            println!(
                "  i = {}: welded {}, welded-alt {}, variant {}",
                c.i, c.welded, c.welded_alt, c.mixed_variant
            );
        }
        if let Some(wit) = w.witness {
            println!(
                "  {} at ({}, {}): {} vs {}",
                wit.relation, wit.row, wit.col, wit.lhs, wit.rhs
            );
        }
    }
    Ok(())
}
