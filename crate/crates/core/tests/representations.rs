use twinrep::analysis::{irreducibility_verdict, verify_relations, Verdict};
use twinrep::presentations::{build_presentation, GroupKind, RelationTag};
use twinrep::reps::{eta1_composition_factor, eta1_quotient, RepDescriptor, RepName};
use twinrep::ring::{parse_rational, Rational};

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

#[test]
fn printed_factor_fails_one_commutation_per_far_pair_with_last_generator() {
    for n in 4..=6 {
        let rep = eta1_composition_factor(n).unwrap();
        let report = verify_relations(&rep, &build_presentation(GroupKind::T, n).unwrap()).unwrap();
        let failed: Vec<String> = report.violations().map(|r| r.relation.clone()).collect();
        let expected: Vec<String> = (1..n - 2)
            .map(|i| format!("[s-commute] s{i} s{} = s{} s{i}", n - 1, n - 1))
            .collect();
        assert_eq!(failed, expected, "n = {n}");
        assert!(report.violations().all(|r| r.tag == RelationTag::SCommute));
    }
    let rep = eta1_composition_factor(3).unwrap();
    assert!(
        verify_relations(&rep, &build_presentation(GroupKind::T, 3).unwrap())
            .unwrap()
            .all_hold()
    );
}

#[test]
fn quotient_is_a_representation() {
    for n in 3..=6 {
        let rep = eta1_quotient(n).unwrap();
        assert_eq!(rep.degree(), n - 1);
        assert!(
            verify_relations(&rep, &build_presentation(GroupKind::T, n).unwrap())
                .unwrap()
                .all_hold()
        );
    }
}

#[test]
fn quotient_is_reducible_only_at_two() {
    for n in 3..=5usize {
        let special = Rational::new(((2 * n - 2) as i64).into(), ((n - 2) as i64).into());
        for t0 in [q("-1"), q("1/2"), q("3"), q("5"), special.clone()] {
            let v = irreducibility_verdict(&eta1_quotient(n).unwrap(), &t0).unwrap();
            assert_eq!(
                v.verdict,
                Verdict::AbsolutelyIrreducible,
                "n = {n}, t = {t0}"
            );
        }
        let v = irreducibility_verdict(&eta1_quotient(n).unwrap(), &q("2")).unwrap();
        assert_eq!(v.verdict, Verdict::Reducible, "n = {n}");
    }
}

#[test]
fn descriptors_round_trip_through_json() {
    let d = RepDescriptor::new(RepName::Vtwt2, 3)
        .param("f", "t")
        .param("g", "1 + t");
    let json = serde_json::to_string(&d).unwrap();
    let back = RepDescriptor::from_json(&json).unwrap();
    assert_eq!(back, d);
    let rep = back.build().unwrap();
    assert_eq!(rep.kind(), GroupKind::WT);
    assert!(
        verify_relations(&rep, &build_presentation(GroupKind::WT, 3).unwrap())
            .unwrap()
            .all_hold()
    );
}
