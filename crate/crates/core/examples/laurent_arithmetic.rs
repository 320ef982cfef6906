//! Exact arithmetic in Z[t, t^-1] and its fraction field.

use twinrep::ring::{parse_rational, LaurentPoly, RatFunc};

fn main() -> twinrep::Result<()> {
    let p: LaurentPoly = "1 - t + 2*t^-2".parse()?;
    let q: LaurentPoly = "t^3 + 1".parse()?;
    println!("p = {p}");
    println!("q = {q}");
    println!("p + q = {}", &p + &q);
    println!("p * q = {}", &p * &q);
    println!("p^-1 exists: {}", p.pow(-1).is_ok());
    println!("t^-2 = {}", LaurentPoly::t().pow(-2)?);

    let r = RatFunc::new(&p * &q, q.clone())?;
    println!("(p q) / q = {r}");
    let s: RatFunc = "(1 - t^2)/(1 + t)".parse()?;
    println!("(1 - t^2)/(1 + t) = {s}");
    let half = parse_rational("1/2")?;
    println!("p(1/2) = {}", p.eval(&half)?);
    println!(
        "(1/(1 - t))(1/2) = {}",
        "(1)/(1 - t)".parse::<RatFunc>()?.eval(&half)?
    );
    Ok(())
}
