//! Word problem in the twin group T_n.

use twinrep::presentations::{
    enumerate_t_elements, normal_form_t, words_equal_in_t, GroupKind, TwinWord,
};

fn main() -> twinrep::Result<()> {
    let w = TwinWord::parse(GroupKind::T, 4, "s3 s1 s2 s2 s3 s1 s2")?;
    println!("{w}  ->  {}", normal_form_t(&w)?);

    let u = TwinWord::parse(GroupKind::T, 4, "s1 s3 s2")?;
    let v = TwinWord::parse(GroupKind::T, 4, "s3 s1 s2")?;
    let x = TwinWord::parse(GroupKind::T, 4, "s2 s1 s3")?;
    println!("{u} == {v}: {}", words_equal_in_t(&u, &v)?);
    println!("{u} == {x}: {}", words_equal_in_t(&u, &x)?);

    for n in 3..=5 {
        let counts: Vec<usize> = (0..=6)
            .map(|l| enumerate_t_elements(n, l).map(|e| e.len()))
            .collect::<Result<_, _>>()?;
        println!("T_{n}: elements of length <= 0..6: {counts:?}");
    }
    Ok(())
}
