//! The five families of 2-local extensions of T_2 to VT_2.

use twinrep::analysis::{classify_involution_2x2, verify_relations};
use twinrep::presentations::{build_presentation, GroupKind, Letter};
use twinrep::reps::two_local_family_t2;
use twinrep::sampling;

fn main() -> twinrep::Result<()> {
    let mut rng = sampling::rng(sampling::seed_from_env());
    let vt2 = build_presentation(GroupKind::VT, 2)?;
    for _ in 0..8 {
        let fam = sampling::random_t2_family(&mut rng);
        let rep = two_local_family_t2(&fam)?;
        let rho = rep.image(Letter::Rho(1)).expect("rho_1 image");
        let tag = classify_involution_2x2(rho)?;
        let ok = verify_relations(&rep, &vt2)?.all_hold();
        println!(
            "family {} -> classified {tag}, relations hold: {ok}",
            fam.tag()
        );
        println!("{rho}");
    }
    Ok(())
}
