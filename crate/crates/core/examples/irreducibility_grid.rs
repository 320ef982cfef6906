//! Irreducibility of the (n-1)-dimensional factor of eta1 at rational points,
//! for the printed matrices and for the quotient by the fixed line.

use twinrep::analysis::{criterion_predicate, irreducibility_verdict, Verdict};
use twinrep::reps::{eta1_composition_factor, eta1_quotient};
use twinrep::ring::{format_rational, parse_rational};

fn main() -> twinrep::Result<()> {
    let points = ["-2", "1/2", "3/2", "2", "8/3", "3", "4", "5"];
    println!(
        "{:>3} {:>6} {:>10} {:>10} {:>10}",
        "n", "t", "predicate", "printed", "quotient"
    );
    for n in 3..=5 {
        for p in points {
            let t0 = parse_rational(p)?;
            let show = |v: Verdict| {
                if v == Verdict::AbsolutelyIrreducible {
                    "irred"
                } else {
                    "red"
                }
            };
            let printed = irreducibility_verdict(&eta1_composition_factor(n)?, &t0)?;
            let quotient = irreducibility_verdict(&eta1_quotient(n)?, &t0)?;
            println!(
                "{n:>3} {:>6} {:>10} {:>10} {:>10}",
                format_rational(&t0),
                if criterion_predicate(n, &t0) {
                    "irred"
                } else {
                    "red"
                },
                format!("{} ({})", show(printed.verdict), printed.dim),
                format!("{} ({})", show(quotient.verdict), quotient.dim),
            );
        }
    }
    Ok(())
}
