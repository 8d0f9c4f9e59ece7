use gradlab::format::{canonical, format_text, parse_str, structure_to_value, to_pretty, Document};
use gradlab::harness::generate::{generate_graded_module, generate_graded_ring, GeneratorParams};
use gradlab_core::fixtures::Structure;
use proptest::prelude::*;

fn text(s: &Structure) -> String {
    to_pretty(&structure_to_value(s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generated_rings_are_valid_and_replayable(seed in any::<u64>(), index in 0u64..1000) {
        let p = GeneratorParams::with_seed(seed);
        let a = generate_graded_ring(&p, index);
        let b = generate_graded_ring(&p, index);
        prop_assert_eq!(&a, &b);
        if let Some(f) = a.ring.as_finite() {
            prop_assert!(f.validate().is_empty(), "{}", a.description);
        }
    }

    #[test]
    fn generated_rings_round_trip(seed in any::<u64>(), index in 0u64..1000) {
        let g = generate_graded_ring(&GeneratorParams::with_seed(seed), index);
        let s = Structure::Ring(g.ring);
        let back = parse_str(&text(&s), None).unwrap();
        prop_assert_eq!(&back.structure, &s);
        let once = format_text(&text(&s), None).unwrap();
        prop_assert_eq!(format_text(&once, None).unwrap(), once);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn generated_modules_are_valid_and_round_trip(seed in any::<u64>(), index in 0u64..200) {
        let p = GeneratorParams::with_seed(seed);
        let g = generate_graded_module(&p, index);
        prop_assert_eq!(&g, &generate_graded_module(&p, index));
        prop_assert!(g.module.validate().is_empty(), "{}", g.description);
        let s = Structure::Module(g.module);
        let back = parse_str(&text(&s), None).unwrap();
        prop_assert_eq!(&back.structure, &s);
        let doc = Document { structure: s, submodules: Vec::new() };
        let c = canonical(&doc);
        prop_assert_eq!(canonical(&c).structure, c.structure);
    }
}
