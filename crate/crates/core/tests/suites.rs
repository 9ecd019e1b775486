use staircase_core::grothendieck::{dual_grothendieck, grothendieck};
use staircase_core::verify::{self, passes_converse, Plan, Report, Role};
use staircase_core::{Partition, SkewShape, TruncationProfile};

fn skew(outer: &str, inner: &str) -> SkewShape {
    SkewShape::new(outer.parse().unwrap(), inner.parse().unwrap()).unwrap()
}

#[test]
fn equality_is_specific_to_staircases() {
    // same comparison as the Stembridge suite, on a non-staircase outer shape
    let t = TruncationProfile::degree(6);
    let a = dual_grothendieck(&skew("3,2,1,1", "2"), t).unwrap();
    let b = dual_grothendieck(&skew("3,2,1,1", "1,1"), t).unwrap();
    assert_ne!(a, b);
    let (a, b) = (
        grothendieck(&skew("3,1", "2"), t),
        grothendieck(&skew("3,1", "1,1"), t),
    );
    assert_ne!(a, b);
    assert!(passes_converse(&"3,1".parse().unwrap()).is_err());
}

#[test]
fn a_failing_gate_fails_the_report_and_keeps_a_rerun() {
    let mut plan = Plan::new("stembridge-g", "--n 2");
    plan.push(Role::Gate, "mu=1".to_string(), "always true", None, || {
        Ok(())
    });
    plan.push(Role::Gate, "mu=2".to_string(), "always false", None, || {
        Err("left 1 vs right 2".into())
    });
    plan.push(Role::Finding, "note".to_string(), "differs", None, || {
        Err("noted".into())
    });
    let r = plan.run();
    assert!(!r.passed);
    let bad = r.case("mu=2").unwrap();
    let w = bad.witness.as_ref().unwrap();
    assert!(
        w.rerun
            .ends_with("verify --suite stembridge-g --n 2 --case 'mu=2'"),
        "{}",
        w.rerun
    );
    assert!(r.to_text().contains("FAIL"));
}

#[test]
fn findings_alone_do_not_fail_a_report() {
    let mut plan = Plan::new("alpha-recurrence", "--n 2");
    plan.push(Role::Finding, "x".to_string(), "differs", None, || {
        Err("noted".into())
    });
    assert!(plan.run().passed);
}

#[test]
fn reports_round_trip_through_json() {
    let r = verify::verify_alpha_recurrence(3, Some(1), true);
    let text = serde_json::to_string(&r).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

#[test]
fn reports_are_deterministic() {
    assert_eq!(
        verify::verify_stembridge_g(3),
        verify::verify_stembridge_g(3)
    );
    assert_eq!(
        verify::verify_arithmetic(7, 10),
        verify::verify_arithmetic(7, 10)
    );
    assert_ne!(
        verify::plan_arithmetic(7, 10).inputs(),
        verify::plan_arithmetic(8, 10).inputs()
    );
}

#[test]
fn staircase_subpartition_counts_are_catalan() {
    let counts: Vec<usize> = (0..=5)
        .map(|n| Partition::staircase(n).subpartitions().len())
        .collect();
    assert_eq!(counts, [1, 2, 5, 14, 42, 132]);
}
