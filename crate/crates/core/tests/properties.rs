use gradlab_core::group::{Degree, Group};
use gradlab_core::module::build::gaussian_pair;
use gradlab_core::module_props::ModuleAnalysis;
use gradlab_core::periodic::PeriodicSet;
use gradlab_core::report::Caps;
use gradlab_core::ring::build::{matrix_ring, quadratic};
use gradlab_core::ring::{FiniteGradedRing, GradedRing};
use gradlab_core::ring_props as rp;
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn group_strategy() -> impl Strategy<Value = Group> {
    prop_oneof![
        (1usize..=12).prop_map(|n| Group::cyclic(n).unwrap()),
        (3usize..=6).prop_map(|n| Group::dihedral(n).unwrap()),
    ]
}

fn decided(r: &gradlab_core::report::PropertyReport) -> Option<bool> {
    r.verdict.decided()
}

fn matrix_strategy() -> impl Strategy<Value = GradedRing> {
    (group_strategy(), 2usize..=3, any::<u64>()).prop_map(|(g, n, seed)| {
        let order = g.order().unwrap() as u64;
        let degrees: Vec<Degree> = (0..n).map(|i| ((seed >> (8 * i)) % order) as Degree).collect();
        GradedRing::Finite(matrix_ring(g, 2, &degrees).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms(g in group_strategy(), a in 0i64..12, b in 0i64..12, c in 0i64..12) {
        let n = g.order().unwrap() as i64;
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
        prop_assert_eq!(g.op(a, g.identity()), a);
        prop_assert_eq!(g.op(a, g.inverse(a)), g.identity());
        prop_assert_eq!(g.parse_label(&g.label(a)).unwrap(), a);
    }

    #[test]
    fn good_gradings_validate_and_respect_the_implication_chain(r in matrix_strategy()) {
        let f: &FiniteGradedRing = r.as_finite().unwrap();
        prop_assert!(f.validate().is_empty());
        let caps = Caps::default();
        let weak = decided(&rp::is_weak(&r));
        let nondeg = rp::degeneracy_class(&r, &caps).class.map(|c| c.is_nondegenerate());
        let strong = decided(&rp::is_strong(&r));
        let first = decided(&rp::is_first_strong(&r));
        let second = decided(&rp::is_second_strong(&r));
        if nondeg == Some(true) { prop_assert_eq!(weak, Some(true)); }
        if strong == Some(true) { prop_assert_eq!(first, Some(true)); }
        if first == Some(true) { prop_assert_eq!(second, Some(true)); prop_assert_eq!(weak, Some(true)); }
        // A full good grading has a symmetric support.
        prop_assert_eq!(weak, Some(true));
    }

    #[test]
    fn quadratic_strong_iff_c_is_a_unit(n in 2u64..=40, c in 0u64..40) {
        let c = c % n;
        let g = Group::cyclic(2).unwrap();
        let r = GradedRing::Finite(quadratic(g, n, c, 1, ("1", "x")).unwrap());
        let caps = Caps::default();
        prop_assert_eq!(decided(&rp::is_strong(&r)), Some(gcd(c, n) == 1));
        prop_assert_eq!(decided(&rp::is_invertible_graded(&r, &caps)), Some(is_prime(n)));
        prop_assert_eq!(decided(&rp::is_weak(&r)), Some(true));
    }

    #[test]
    fn periodic_set_laws(
        (t1, p1, r1, e1) in (0u64..15, 1u64..9, any::<u16>(), any::<u16>()),
        (t2, p2, r2, e2) in (0u64..15, 1u64..9, any::<u16>(), any::<u16>()),
    ) {
        let make = |t: u64, p: u64, r: u16, e: u16| {
            let res: Vec<u64> = (0..p).filter(|i| r >> i & 1 == 1).collect();
            let exc: Vec<u64> = (0..t).filter(|i| e >> i & 1 == 1).collect();
            PeriodicSet::new(t, p, &res, &exc).unwrap()
        };
        let a = make(t1, p1, r1, e1);
        let b = make(t2, p2, r2, e2);
        prop_assert_eq!(a.sumset(&b), b.sumset(&a));
        prop_assert_eq!(a.intersection(&b), b.intersection(&a));
        prop_assert_eq!(a.union(&a.intersection(&b)), a.clone());
        for j in 0..120 {
            prop_assert_eq!(a.difference(&b).contains(j), a.contains(j) && !b.contains(j));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gaussian_pair_lattice_facts(n in 2u64..=24) {
        let m = gaussian_pair(n).unwrap();
        prop_assert!(m.validate().is_empty());
        let an = ModuleAnalysis::new(&m, Caps::default());
        let lattice = an.lattice().unwrap().to_vec();
        for k in lattice.iter().filter(|k| !k.is_zero()) {
            if an.is_essential(k).is_holds() {
                prop_assert!(an.is_semi_essential(k).is_holds());
            }
            let rad = an.radical(k).unwrap();
            prop_assert!(k.is_subset(&rad));
            prop_assert_eq!(an.is_essential(k).is_holds(), an.is_essential_bruteforce(k).is_holds());
        }
        for a in &lattice {
            for b in &lattice {
                prop_assert!(lattice.contains(&a.sum(b)));
                prop_assert!(lattice.contains(&a.intersection(b)));
            }
        }
    }
}
