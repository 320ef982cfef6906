//! One PASS/FAIL line per acceptance criterion. Each criterion is checked
//! exactly and within its runtime budget.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use twinrep::analysis::{
    check_irreducibility_criterion, classify_involution_2x2, common_fixed_vectors, kernel_search,
    verify_relations, wt_obstruction_check, Verdict,
};
use twinrep::freegroup::{fox_derivative, jacobian_matrix, FreeWord, GroupRingElt};
use twinrep::matrix::Matrix;
use twinrep::presentations::{build_presentation, GroupKind, TwinWord};
use twinrep::reps::{
    eta1_automorphism, eta1_matrix, eta2_matrix, evaluate_word, two_local_family_t2,
    vt_extension_eta1, vt_wt_extension_eta2,
};
use twinrep::ring::{parse_rational, LaurentPoly, RatFunc, Rational};
use twinrep::sampling;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn lp(s: &str) -> LaurentPoly {
    s.parse().expect("polynomial literal")
}

fn q(s: &str) -> Rational {
    parse_rational(s).expect("rational literal")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Image of s_i written out by hand: the block [[1-t, t], [2-t, t-1]] at rows i, i+1.
fn eta1_oracle(n: usize, i: usize) -> Matrix<RatFunc> {
    let mut m = Matrix::identity(n);
    m[(i - 1, i - 1)] = lp("1 - t").into();
    m[(i - 1, i)] = lp("t").into();
    m[(i, i - 1)] = lp("2 - t").into();
    m[(i, i)] = lp("t - 1").into();
    m
}

fn jacobian_reconstruction() -> Outcome {
    let mut count = 0;
    for n in 2..=6 {
        let rep = eta1_matrix(n).map_err(|e| e.to_string())?;
        for i in 1..n {
            let phi = eta1_automorphism(n, i).map_err(|e| e.to_string())?;
            let magnus = Matrix::<RatFunc>::from(&jacobian_matrix(&phi).magnus());
            let image = rep
                .image(twinrep::presentations::Letter::S(i))
                .expect("generator image");
            ensure(magnus == *image, || {
                format!("n={n} i={i}: Magnus image differs from eta1")
            })?;
            ensure(magnus == eta1_oracle(n, i), || {
                format!("n={n} i={i}: differs from the explicit block")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} generator images match"))
}

fn relation_suites() -> Outcome {
    let mut checked = 0;
    let mut run = |rep: twinrep::reps::MatrixRep, kind: GroupKind| -> Result<(), String> {
        let p = build_presentation(kind, rep.n()).map_err(|e| e.to_string())?;
        let report = verify_relations(&rep, &p).map_err(|e| e.to_string())?;
        let bad: Vec<String> = report.violations().map(|r| r.relation.clone()).collect();
        checked += report.relations.len();
        ensure(bad.is_empty(), || {
            format!(
                "{} on {}: {}",
                report.rep,
                report.presentation,
                bad.join("; ")
            )
        })
    };
    for n in 2..=6 {
        run(eta1_matrix(n).map_err(|e| e.to_string())?, GroupKind::T)?;
        for f in ["1", "t", "1 + t"] {
            run(
                eta2_matrix(n, &lp(f)).map_err(|e| e.to_string())?,
                GroupKind::T,
            )?;
        }
    }
    for n in 3..=5 {
        for b in ["1", "t", "t^-1"] {
            run(
                vt_extension_eta1(n, &lp(b)).map_err(|e| e.to_string())?,
                GroupKind::VT,
            )?;
        }
        for (f, g) in [("1", "1"), ("t", "1"), ("t", "1 + t")] {
            let rep = vt_wt_extension_eta2(n, &lp(f), &lp(g), GroupKind::WT)
                .map_err(|e| e.to_string())?;
            run(rep, GroupKind::WT)?;
        }
    }
    Ok(format!("{checked} relations hold symbolically"))
}

fn reducibility_witness() -> Outcome {
    for n in 2..=6 {
        let rep = eta1_matrix(n).map_err(|e| e.to_string())?;
        let ones = vec![BigInt::from(1); n];
        for t in ["3", "1/2"] {
            let fixed = common_fixed_vectors(&rep, &q(t)).map_err(|e| e.to_string())?;
            ensure(fixed.contains(&ones), || {
                format!("n={n} t={t}: all-ones vector missing from {fixed:?}")
            })?;
            for (l, m) in rep.specialize(&q(t)).map_err(|e| e.to_string())? {
                let v =
                    Matrix::from_rows(vec![vec![Rational::from_integer(1.into()); n]]).transpose();
                ensure(m.mul(&v) == v, || {
                    format!("n={n} t={t}: {l} moves the all-ones vector")
                })?;
            }
        }
    }
    Ok("all-ones vector fixed for n <= 6, t in {3, 1/2}".into())
}

fn irreducibility_grid() -> Outcome {
    let mut cases = 0;
    for n in 3..=5usize {
        let special = Rational::new(BigInt::from(2 * n - 2), BigInt::from(n - 2));
        let mut grid: Vec<Rational> = ["-3", "-2", "-1", "1/2", "1", "3/2", "2", "3", "4", "5"]
            .iter()
            .map(|s| q(s))
            .collect();
        if !grid.contains(&special) {
            grid.push(special.clone());
        }
        for t0 in grid {
            let expect_irreducible = t0 != q("2") && t0 != special;
            let v = check_irreducibility_criterion(n, &t0).map_err(|e| e.to_string())?;
            let irreducible = v.verdict == Verdict::AbsolutelyIrreducible;
            ensure(irreducible == expect_irreducible, || {
                format!("n={n} t={t0}: verdict {:?}", v.verdict)
            })?;
            if expect_irreducible {
                ensure(v.dim == (n - 1) * (n - 1), || {
                    format!("n={n} t={t0}: dimension {}", v.dim)
                })?;
            } else {
                ensure(v.dim < (n - 1) * (n - 1) && v.witness.is_some(), || {
                    format!("n={n} t={t0}: reducible without a witness (dim {})", v.dim)
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} grid points agree with the criterion"))
}

fn faithfulness_n3() -> Outcome {
    let rep = eta1_matrix(3).map_err(|e| e.to_string())?;
    let kernel = kernel_search(&rep, 14).map_err(|e| e.to_string())?;
    ensure(kernel.is_empty(), || {
        format!("kernel elements found: {}", kernel[0])
    })?;
    let base = TwinWord::from_s(3, &[1, 2]).map_err(|e| e.to_string())?;
    for r in 1..=7 {
        let m = evaluate_word(&rep, &base.power(r)).map_err(|e| e.to_string())?;
        ensure(!m.is_identity(), || format!("(s1 s2)^{r} acts trivially"))?;
    }
    Ok("no kernel up to length 14; (s1 s2)^r nontrivial for r <= 7".into())
}

fn eta2_unfaithfulness() -> Outcome {
    for n in 3..=4 {
        for f in ["1", "t", "2*t^2"] {
            let rep = eta2_matrix(n, &lp(f)).map_err(|e| e.to_string())?;
            for i in 1..n - 1 {
                let w = TwinWord::from_s(n, &[i, i + 1])
                    .map_err(|e| e.to_string())?
                    .power(3);
                let m = evaluate_word(&rep, &w).map_err(|e| e.to_string())?;
                ensure(m.is_identity(), || {
                    format!("n={n} f={f}: ({w}) is not trivial")
                })?;
            }
        }
    }
    let kernel = kernel_search(
        &eta2_matrix(3, &LaurentPoly::one()).map_err(|e| e.to_string())?,
        6,
    )
    .map_err(|e| e.to_string())?;
    ensure(!kernel.is_empty(), || {
        "no kernel element up to length 6".into()
    })?;
    Ok(format!(
        "(s_i s_i+1)^3 trivial; {} kernel words up to length 6, first {}",
        kernel.len(),
        kernel[0]
    ))
}

fn t2_round_trip() -> Outcome {
    let mut rng = sampling::rng(sampling::seed_from_env());
    let mut per_family = [0usize; 5];
    for _ in 0..200 {
        let fam = sampling::random_t2_family(&mut rng);
        let rep = two_local_family_t2(&fam).map_err(|e| e.to_string())?;
        let rho = rep
            .image(twinrep::presentations::Letter::Rho(1))
            .expect("rho image")
            .clone();
        ensure(rho.mul(&rho).is_identity(), || {
            format!("family {}: rho^2 != I", fam.tag())
        })?;
        let (a, b, c, d) = (&rho[(0, 0)], &rho[(0, 1)], &rho[(1, 0)], &rho[(1, 1)]);
        let det_ok = (&(a * a) + &(b * c)).is_one() && (&(d * d) + &(b * c)).is_one();
        ensure(det_ok || (b.is_zero() && c.is_zero()), || {
            format!("family {}: a^2 + bc != 1", fam.tag())
        })?;
        let tag = classify_involution_2x2(&rho).map_err(|e| e.to_string())?;
        ensure(tag == fam.tag(), || {
            format!("constructed family {}, classified {tag}", fam.tag())
        })?;
        per_family[usize::from(tag) - 1] += 1;
    }
    ensure(per_family.iter().all(|&k| k > 0), || {
        format!("families not all sampled: {per_family:?}")
    })?;
    Ok(format!("200 cases, per family {per_family:?}"))
}

fn wt_obstruction() -> Outcome {
    for n in 3..=5 {
        for b in ["1", "t", "1 + t"] {
            let w = wt_obstruction_check(n, &lp(b)).map_err(|e| e.to_string())?;
            ensure(w.obstructed, || format!("n={n} b={b}: not obstructed"))?;
            let wit = w
                .witness
                .ok_or_else(|| format!("n={n} b={b}: no witness"))?;
            ensure(wit.lhs != wit.rhs, || {
                format!("n={n} b={b}: witness entries agree")
            })?;
        }
    }
    Ok("obstructed with entry witnesses for n in 3..=5".into())
}

fn fox_identity() -> Outcome {
    let mut rng = sampling::rng(sampling::seed_from_env());
    for k in 0..600 {
        let rank = 1 + k % 5;
        let w = sampling::random_free_word(&mut rng, rank, 12);
        let one = GroupRingElt::one(rank);
        let mut sum = GroupRingElt::zero(rank);
        for g in 1..=rank {
            let x =
                GroupRingElt::from_word(FreeWord::generator(rank, g).map_err(|e| e.to_string())?);
            let d = fox_derivative(&w, g).map_err(|e| e.to_string())?;
            sum = &sum + &(&d * &(&x - &one));
        }
        let expected = &GroupRingElt::from_word(w.clone()) - &one;
        ensure(sum == expected, || format!("identity fails for {w}"))?;
    }
    Ok("600 random reduced words".into())
}

fn full_suite() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_twinrep"))
        .args(["verify-paper", "--n-max", "5"])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let summary = stdout.lines().last().unwrap_or_default().to_string();
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {summary}", out.status.code())
    })?;
    ensure(!stdout.lines().any(|l| l.starts_with("FAIL")), || {
        "a check failed".into()
    })?;
    Ok(summary)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "1 jacobian reconstruction",
            Duration::from_secs(1),
            jacobian_reconstruction,
        ),
        (
            "2 relation suites",
            Duration::from_secs(10),
            relation_suites,
        ),
        (
            "3 reducibility witness",
            Duration::from_secs(1),
            reducibility_witness,
        ),
        (
            "4 irreducibility criterion grid",
            Duration::from_secs(20),
            irreducibility_grid,
        ),
        (
            "5 faithfulness support n=3",
            Duration::from_secs(10),
            faithfulness_n3,
        ),
        (
            "6 eta2 unfaithfulness",
            Duration::from_secs(2),
            eta2_unfaithfulness,
        ),
        (
            "7 T_2 classification round-trip",
            Duration::from_secs(2),
            t2_round_trip,
        ),
        ("8 WT obstruction", Duration::from_secs(2), wt_obstruction),
        (
            "9 Fox fundamental identity",
            Duration::from_secs(5),
            fox_identity,
        ),
        ("10 full suite", Duration::from_secs(60), full_suite),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget of {budget:?}")),
            Err(e) => (false, e),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} {name:<34} {:>9.1} ms / {:>6} ms  {detail}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64() * 1e3,
            budget.as_millis()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
