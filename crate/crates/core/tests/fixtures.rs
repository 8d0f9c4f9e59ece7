use gradlab_core::fixtures::{build_fixture, build_fixture_with, FixtureOptions, Structure, FIXTURE_NAMES};
use gradlab_core::report::Caps;
use gradlab_core::ring_props as rp;

fn finite(name: &str) -> gradlab_core::ring::FiniteGradedRing {
    match build_fixture(name).unwrap().structure {
        Structure::Ring(r) => r.as_finite().unwrap().clone(),
        Structure::Module(_) => panic!("{name} is a module"),
    }
}

#[test]
fn every_expectation_carries_an_origin_label() {
    for name in FIXTURE_NAMES {
        let f = build_fixture(name).unwrap();
        assert!(!f.expected.is_empty(), "{name}");
        for e in &f.expected {
            assert!(["example", "derived", "trivial"].contains(&e.origin.label()));
        }
    }
}

/// With the stated degrees `(ab)^-1 = ab`, so `e41 e14 = e44` lies in
/// `R_e` and is nonzero. The fixture still expects "degenerate".
#[test]
fn d10_product_that_rules_out_degeneracy() {
    let f = finite("m4_d10");
    let b = f.basis();
    let idx = |n: &str| b.vectors().iter().position(|v| v.name == n).unwrap();
    let (e41, e14, e44) = (idx("e41"), idx("e14"), idx("e44"));
    let prod = f.basis_product(e41, e14);
    assert_eq!(*prod, b.unit(e44));
    let g = f.group();
    let ab = g.parse_label("ab").unwrap();
    assert_eq!(g.inverse(ab), ab);
    let d = rp::degeneracy_class(&gradlab_core::ring::GradedRing::Finite(f.clone()), &Caps::default());
    assert!(d.class.unwrap().is_nondegenerate());
}

#[test]
fn gf9_components_have_three_elements() {
    let f = finite("gf9_z2");
    assert_eq!(f.order(), 9);
    assert_eq!(f.component(0).order(), 3);
    assert_eq!(f.component(1).order(), 3);
}

#[test]
fn field_option_changes_matrix_fixtures() {
    let f = build_fixture_with("m2_z4", FixtureOptions { field: 3 }).unwrap();
    let r = f.ring().unwrap().as_finite().unwrap().clone();
    assert_eq!(r.order(), 81);
    let evals = f.evaluate(&Caps::default()).unwrap();
    assert!(evals.iter().all(|e| e.matches()));
}

#[test]
fn unknown_fixture_is_an_input_error() {
    assert!(build_fixture("m5_z9").is_err());
}
