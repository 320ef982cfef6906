//! Fox derivatives of the free-group automorphisms behind eta1, and the
//! Magnus specialization of their Jacobians.

use twinrep::freegroup::{fox_derivative, jacobian_matrix, FreeAut, FreeWord};
use twinrep::reps::eta1_automorphism;

fn main() -> twinrep::Result<()> {
    let w = FreeWord::parse(2, "x1*x2*x1^-1")?;
    for k in 1..=2 {
        println!("d({w})/dx{k} = {}", fox_derivative(&w, k)?);
    }

    let phi = eta1_automorphism(3, 1)?;
    println!("\nautomorphism:\n{phi}");
    let j = jacobian_matrix(&phi);
    println!("Jacobian:\n{j}");
    println!("Magnus specialization:\n{}", j.magnus());
    println!("phi o phi = id: {}", phi.compose(&phi)?.is_identity());

    let custom = FreeAut::parse("x1 -> x2\nx2 -> x1*x2*x1^-1\n")?;
    println!(
        "\ncustom automorphism Magnus image:\n{}",
        jacobian_matrix(&custom).magnus()
    );
    Ok(())
}
