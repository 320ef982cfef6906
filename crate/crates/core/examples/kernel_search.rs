//! Bounded search for twin-group elements acting trivially.

use twinrep::analysis::kernel_search;
use twinrep::reps::{eta1_matrix, eta2_matrix};
use twinrep::ring::LaurentPoly;

fn main() -> twinrep::Result<()> {
    let eta1 = eta1_matrix(3)?;
    println!(
        "eta1, n = 3, length <= 14: {} kernel words",
        kernel_search(&eta1, 14)?.len()
    );

    for f in ["1", "t", "2*t^2"] {
        let rep = eta2_matrix(4, &f.parse::<LaurentPoly>()?)?;
        let kernel = kernel_search(&rep, 6)?;
        println!("eta2, n = 4, f = {f}, length <= 6:");
        for w in kernel {
            println!("  {w}");
        }
    }
    Ok(())
}
