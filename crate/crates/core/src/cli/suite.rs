use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    check_irreducibility_criterion, classify_involution_2x2, common_fixed_vectors, kernel_search,
    verify_relations, wt_obstruction_check, Verdict,
};
use crate::freegroup::{fox_derivative, jacobian_matrix, FreeWord, GroupRingElt};
use crate::matrix::Matrix;
use crate::presentations::{build_presentation, GroupKind, Letter, TwinWord};
use crate::reps::{
    eta1_automorphism, eta1_composition_factor, eta1_matrix, eta1_quotient, eta2_matrix,
    evaluate_word, vt_extension_eta1, vt_wt_extension_eta2, MatrixRep,
};
use crate::ring::{format_rational, LaurentPoly, RatFunc, Rational};
use crate::sampling;
use crate::Result;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n_max: usize,
    pub seed: u64,
    /// Replace one entry of every `η₁` image used by the suite.
    pub corrupt_eta1: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub reference: &'static str,
    pub pass: bool,
    pub detail: Value,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub n_max: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

type CheckFn = Box<dyn Fn() -> Result<(bool, Value)> + Send + Sync>;

struct Check {
    id: String,
    reference: &'static str,
    run: CheckFn,
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("suite constant")
}

fn q(s: &str) -> Rational {
    crate::ring::parse_rational(s).expect("suite constant")
}

fn eta1(n: usize, corrupt: bool) -> Result<MatrixRep> {
    let rep = eta1_matrix(n)?;
    if !corrupt {
        return Ok(rep);
    }
    let mut m = rep.image(Letter::S(1)).expect("s1").clone();
    m[(0, 0)] = RatFunc::from(poly("2 - t"));
    Ok(rep.with_image(Letter::S(1), m))
}

fn relation_check(rep: &MatrixRep, kind: GroupKind) -> Result<(bool, Value)> {
    let report = verify_relations(rep, &build_presentation(kind, rep.n())?)?;
    let violations: Vec<&str> = report.violations().map(|r| r.relation.as_str()).collect();
    Ok((
        violations.is_empty(),
        json!({ "relations": report.relations.len(), "violations": violations }),
    ))
}

fn fox_identity_holds(w: &FreeWord) -> Result<bool> {
    let rank = w.rank();
    let mut sum = GroupRingElt::zero(rank);
    for k in 1..=rank {
        let xk = GroupRingElt::from_word(FreeWord::generator(rank, k)?);
        let term = &fox_derivative(w, k)? * &(&xk - &GroupRingElt::one(rank));
        sum = &sum + &term;
    }
    Ok(sum == &GroupRingElt::from_word(w.clone()) - &GroupRingElt::one(rank))
}

fn build_checks(opts: &SuiteOptions) -> Vec<Check> {
    let n_max = opts.n_max;
    let corrupt = opts.corrupt_eta1;
    let seed = opts.seed;
    let mut checks: Vec<Check> = Vec::new();
    let mut add = |id: String, reference: &'static str, run: CheckFn| {
        checks.push(Check { id, reference, run });
    };

    for n in 2..=n_max {
        add(
            format!("automorphism/n{n}"),
            "eta1 automorphisms are involutions",
            Box::new(move || {
                let ok = (1..n).all(|i| {
                    let phi = eta1_automorphism(n, i).expect("valid index");
                    phi.compose(&phi).expect("same rank").is_identity()
                });
                Ok((ok, json!({ "generators": n - 1 })))
            }),
        );
        add(
            format!("jacobian/n{n}"),
            "Fox Jacobian specializes to eta1",
            Box::new(move || {
                let rep = eta1(n, corrupt)?;
                let mut mismatched = Vec::new();
                for i in 1..n {
                    let j = jacobian_matrix(&eta1_automorphism(n, i)?).magnus();
                    if Matrix::<RatFunc>::from(&j) != *rep.image(Letter::S(i)).expect("generator") {
                        mismatched.push(format!("s{i}"));
                    }
                }
                Ok((mismatched.is_empty(), json!({ "mismatched": mismatched })))
            }),
        );
    }

    for n in 2..=n_max {
        add(
            format!("relations/eta1/T{n}"),
            "eta1 is a representation",
            Box::new(move || relation_check(&eta1(n, corrupt)?, GroupKind::T)),
        );
        for f in ["1", "t", "1 + t"] {
            add(
                format!("relations/eta2/f={f}/T{n}"),
                "eta2 is a representation",
                Box::new(move || relation_check(&eta2_matrix(n, &poly(f))?, GroupKind::T)),
            );
        }
    }
    for n in 3..=n_max {
        for b in ["1", "t", "t^-1"] {
            add(
                format!("relations/vt1/b={b}/VT{n}"),
                "eta1 extends to VT_n",
                Box::new(move || relation_check(&vt_extension_eta1(n, &poly(b))?, GroupKind::VT)),
            );
        }
        for (f, g) in [("1", "1"), ("t", "1"), ("t", "1 + t")] {
            add(
                format!("relations/vtwt2/f={f},g={g}/WT{n}"),
                "eta2 extends to WT_n",
                Box::new(move || {
                    relation_check(
                        &vt_wt_extension_eta2(n, &poly(f), &poly(g), GroupKind::WT)?,
                        GroupKind::WT,
                    )
                }),
            );
        }
    }

    for n in 2..=n_max {
        for t in ["3", "1/2"] {
            add(
                format!("fixed-vector/n{n}/t={t}"),
                "all-ones vector is invariant",
                Box::new(move || {
                    let basis = common_fixed_vectors(&eta1(n, corrupt)?, &q(t))?;
                    let ones: Vec<num_bigint::BigInt> = vec![1.into(); n];
                    let basis_json: Vec<Vec<String>> = basis
                        .iter()
                        .map(|v| v.iter().map(ToString::to_string).collect())
                        .collect();
                    Ok((basis.contains(&ones), json!({ "basis": basis_json })))
                }),
            );
        }
    }

    for n in 2..=n_max {
        add(
            format!("composition-factor/n{n}"),
            "composition factor images are involutions",
            Box::new(move || {
                let rep = eta1_composition_factor(n)?;
                let ok = rep.images().all(|(_, m)| m.mul(m).is_identity());
                Ok((ok, json!({ "degree": rep.degree() })))
            }),
        );
        add(
            format!("quotient/relations/T{n}"),
            "quotient by the all-ones line",
            Box::new(move || relation_check(&eta1_quotient(n)?, GroupKind::T)),
        );
    }

    for n in 3..=n_max {
        let special = format!("{}/{}", 2 * n - 2, n - 2);
        let mut grid: Vec<String> = ["-3", "-2", "-1", "1/2", "1", "3/2", "2", "3", "4", "5"]
            .iter()
            .map(ToString::to_string)
            .collect();
        if !grid.iter().any(|t| q(t) == q(&special)) {
            grid.push(special);
        }
        for t in grid {
            add(
                format!("irreducibility/n{n}/t={}", format_rational(&q(&t))),
                "irreducibility criterion",
                Box::new(move || {
                    let v = check_irreducibility_criterion(n, &q(&t))?;
                    let full = (n - 1) * (n - 1);
                    let ok = (v.verdict == Verdict::AbsolutelyIrreducible) == (v.dim == full);
                    Ok((ok, serde_json::to_value(&v).expect("verdict serializes")))
                }),
            );
        }
    }

    add(
        "faithfulness/eta1/n2".into(),
        "eta1 is faithful for n = 2",
        Box::new(move || {
            let kernel = kernel_search(&eta1(2, corrupt)?, 8)?;
            Ok((
                kernel.is_empty(),
                json!({ "maxlen": 8, "kernel": kernel.len() }),
            ))
        }),
    );
    if n_max >= 3 {
        add(
            "faithfulness/eta1/n3".into(),
            "eta1 is faithful for n = 3",
            Box::new(move || {
                let kernel = kernel_search(&eta1(3, corrupt)?, 14)?;
                let words: Vec<String> = kernel.iter().map(ToString::to_string).collect();
                Ok((kernel.is_empty(), json!({ "maxlen": 14, "kernel": words })))
            }),
        );
        add(
            "faithfulness/eta1/n3/powers".into(),
            "eta1 is faithful for n = 3",
            Box::new(move || {
                let rep = eta1(3, corrupt)?;
                let base = TwinWord::from_s(3, &[1, 2])?;
                let identities: Vec<usize> = (1..=7)
                    .filter(|&r| {
                        evaluate_word(&rep, &base.power(r)).map_or(true, |m| m.is_identity())
                    })
                    .collect();
                Ok((
                    identities.is_empty(),
                    json!({ "powers": 7, "identity_at": identities }),
                ))
            }),
        );
    }

    for n in 3..=n_max {
        for f in ["1", "t", "2*t^2"] {
            add(
                format!("unfaithfulness/eta2/n{n}/f={f}"),
                "eta2 is not faithful",
                Box::new(move || {
                    let rep = eta2_matrix(n, &poly(f))?;
                    let mut failing = Vec::new();
                    for i in 1..n - 1 {
                        let w = TwinWord::from_s(n, &[i, i + 1])?.power(3);
                        if !evaluate_word(&rep, &w)?.is_identity() {
                            failing.push(i);
                        }
                    }
                    Ok((failing.is_empty(), json!({ "failing_indices": failing })))
                }),
            );
        }
    }
    if n_max >= 3 {
        add(
            "unfaithfulness/eta2/n3/kernel".into(),
            "eta2 is not faithful",
            Box::new(move || {
                let kernel = kernel_search(&eta2_matrix(3, &LaurentPoly::one())?, 6)?;
                let words: Vec<String> = kernel.iter().map(ToString::to_string).collect();
                Ok((!kernel.is_empty(), json!({ "maxlen": 6, "kernel": words })))
            }),
        );
    }

    add(
        "t2-classification".into(),
        "five extension families of T_2",
        Box::new(move || {
            let mut rng = sampling::rng(seed);
            let mut mismatches = 0usize;
            let cases = 100;
            for _ in 0..cases {
                let fam = sampling::random_t2_family(&mut rng);
                let m = fam.block()?;
                if !m.mul(&m).is_identity() || classify_involution_2x2(&m)? != fam.tag() {
                    mismatches += 1;
                }
            }
            Ok((
                mismatches == 0,
                json!({ "cases": cases, "mismatches": mismatches }),
            ))
        }),
    );

    for n in 3..=n_max {
        for b in ["1", "t", "1 + t"] {
            add(
                format!("wt-obstruction/n{n}/b={b}"),
                "eta1 has no welded extension",
                Box::new(move || {
                    let w = wt_obstruction_check(n, &poly(b))?;
                    let ok = w.obstructed && w.witness.is_some();
                    Ok((
                        ok,
                        serde_json::to_value(&w.witness).expect("witness serializes"),
                    ))
                }),
            );
        }
    }

    add(
        "fox-identity".into(),
        "fundamental formula of Fox calculus",
        Box::new(move || {
            let mut rng = sampling::rng(seed ^ 0xf0c5);
            let cases = 500;
            let mut failures = Vec::new();
            for k in 0..cases {
                let rank = 1 + k % 5;
                let w = sampling::random_free_word(&mut rng, rank, 12);
                if !fox_identity_holds(&w)? {
                    failures.push(w.to_string());
                }
            }
            Ok((
                failures.is_empty(),
                json!({ "cases": cases, "failures": failures }),
            ))
        }),
    );

    checks
}

/// Runs every check for `2 <= n <= n_max` in parallel; results keep the
/// order in which checks were listed.
pub fn verify_paper_suite(opts: &SuiteOptions) -> SuiteReport {
    let checks = build_checks(opts);
    let results: Vec<CheckResult> = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let (pass, detail) = match (c.run)() {
                Ok(r) => r,
                Err(e) => (false, json!({ "error": e.to_string() })),
            };
            CheckResult {
                id: c.id.clone(),
                reference: c.reference,
                pass,
                detail,
                elapsed: start.elapsed(),
            }
        })
        .collect();
    SuiteReport {
        n_max: opts.n_max,
        pass: results.iter().all(|r| r.pass),
        checks: results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = verify_paper_suite(&SuiteOptions {
            n_max: 3,
            seed: 1,
            corrupt_eta1: false,
        });
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect();
        assert!(failed.is_empty(), "failed: {failed:?}");
        assert!(report.pass);
    }

    #[test]
    fn corruption_is_detected() {
        let report = verify_paper_suite(&SuiteOptions {
            n_max: 3,
            seed: 1,
            corrupt_eta1: true,
        });
        assert!(!report.pass);
        let rel = report
            .checks
            .iter()
            .find(|c| c.id == "relations/eta1/T3")
            .unwrap();
        assert!(!rel.pass);
    }

    #[test]
    fn fox_identity_sample() {
        let w = FreeWord::parse(3, "x1*x2^-1*x3*x1^2").unwrap();
        assert!(fox_identity_holds(&w).unwrap());
    }
}
