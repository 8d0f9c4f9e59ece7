//! Predicate catalogs behind `check` and `submodules`.

use gradlab_core::fixtures::Structure;
use gradlab_core::module::{FiniteGradedModule, GradedSubmodule};
use gradlab_core::module_props::ModuleAnalysis;
use gradlab_core::report::{Caps, PropertyReport, Verdict, WitnessValue};
use gradlab_core::ring::GradedRing;
use gradlab_core::ring_props as rp;

/// Predicate names accepted by `check` on rings.
pub const RING_PREDICATES: &[&str] = &[
    "support",
    "weak",
    "degeneracy",
    "regular",
    "strongness",
    "strong",
    "first_strong",
    "second_strong",
    "crossed",
    "invertible",
    "division_identity_component",
    "no_zero_divisors",
    "graded_simple",
    "identity_component_map",
    "component_modules",
    "graded_prime_ideals",
    "semi_uniform_ring",
];

/// Predicate names accepted by `check` on modules. Named submodules add
/// per-submodule rows.
pub const MODULE_PREDICATES: &[&str] =
    &["submodule_count", "graded_primes", "faithful", "multiplication", "uniform", "semi_uniform", "submodules"];

fn renamed(mut r: PropertyReport, name: &str) -> PropertyReport {
    r.name = name.to_string();
    r
}

fn class_report<C>(c: gradlab_core::report::Classified<C>, name: &str) -> PropertyReport {
    renamed(c.report, name)
}

fn ring_predicate(r: &GradedRing, name: &str, caps: &Caps) -> Vec<PropertyReport> {
    let finite_only = |name: &str| PropertyReport::not_applicable(name, "needs a finite ring");
    let one = |rep: PropertyReport| vec![renamed(rep, name)];
    match name {
        "support" => one(rp::support_class_report(r)),
        "weak" => one(rp::is_weak(r)),
        "degeneracy" => vec![class_report(rp::degeneracy_class(r, caps), name)],
        "regular" => one(rp::is_regular(r, caps)),
        "strongness" => vec![class_report(rp::strongness_class(r), name)],
        "strong" => one(rp::is_strong(r)),
        "first_strong" => one(rp::is_first_strong(r)),
        "second_strong" => one(rp::is_second_strong(r)),
        "crossed" => vec![class_report(rp::crossed_class(r, caps), name)],
        "invertible" => one(rp::is_invertible_graded(r, caps)),
        "division_identity_component" => match r.as_finite() {
            Some(f) => one(rp::identity_component_is_division_ring(f, caps)),
            None => one(finite_only(name)),
        },
        "no_zero_divisors" => one(rp::zero_divisor_report(r, caps)),
        "graded_simple" => one(rp::is_graded_simple(r, caps)),
        "identity_component_map" => match rp::identity_component_linear_report(r, caps) {
            Some(l) => one(l.report),
            None => one(PropertyReport::not_applicable(name, "identity component is not a field")),
        },
        "component_modules" => {
            let group = r.group();
            let degrees = match rp::support(r) {
                rp::Support::Finite(s) => s,
                rp::Support::Integers(_) => {
                    return one(PropertyReport::not_applicable(name, "support is infinite"));
                }
            };
            let mut out = Vec::new();
            for g in degrees {
                let c = rp::component_as_identity_module(r, g, caps);
                let label = group.label(g);
                out.push(renamed(c.cyclic, &format!("component_cyclic({label})")));
                out.push(renamed(c.simple, &format!("component_simple({label})")));
            }
            out
        }
        "graded_prime_ideals" => match r.as_finite() {
            Some(f) => match rp::enumerate_graded_primes_ring(f, caps) {
                Ok(ps) => {
                    let list: Vec<String> = ps.iter().map(|p| p.render(f.basis())).collect();
                    one(PropertyReport::holds(name).value(list.len().to_string()).with("primes", WitnessValue::text(list.join("; "))))
                }
                Err(e) => one(PropertyReport::from_error(name, &e)),
            },
            None => one(finite_only(name)),
        },
        "semi_uniform_ring" => match r.as_finite() {
            Some(f) => one(rp::is_semi_uniform_ring(f, caps)),
            None => one(finite_only(name)),
        },
        other => one(PropertyReport::not_applicable(other, "unknown ring predicate")),
    }
}

pub fn ring_checks(r: &GradedRing, names: &[String], caps: &Caps) -> Vec<PropertyReport> {
    let all: Vec<String> = RING_PREDICATES.iter().map(|s| s.to_string()).collect();
    let names = if names.is_empty() { &all } else { names };
    names.iter().flat_map(|n| ring_predicate(r, n, caps)).collect()
}

/// Rows for one named submodule: prime, essential, semi-essential, radical.
pub fn submodule_rows(an: &ModuleAnalysis<'_>, label: &str, s: &GradedSubmodule) -> Vec<PropertyReport> {
    let m = an.module();
    let mut out = Vec::new();
    out.push(renamed(an.is_graded_prime(s), &format!("graded_prime({label})")));
    out.push(renamed(an.is_essential(s), &format!("graded_essential({label})")));
    out.push(renamed(an.is_semi_essential(s), &format!("graded_semi_essential({label})")));
    let rad = format!("graded_radical({label})");
    out.push(match an.radical(s) {
        Ok(r) => PropertyReport::holds(&rad).value(r.render(m.basis())),
        Err(e) => PropertyReport::from_error(&rad, &e),
    });
    out
}

fn module_predicate(an: &ModuleAnalysis<'_>, named: &[(String, GradedSubmodule)], name: &str) -> Vec<PropertyReport> {
    let m = an.module();
    let one = |rep: PropertyReport| vec![renamed(rep, name)];
    match name {
        "submodule_count" => match an.lattice() {
            Ok(l) => one(PropertyReport::holds(name).value(l.len().to_string())),
            Err(e) => one(PropertyReport::from_error(name, &e)),
        },
        "graded_primes" => match an.primes() {
            Ok(ps) => {
                let list: Vec<String> = ps.iter().map(|p| p.render(m.basis())).collect();
                one(PropertyReport::holds(name).value(list.len().to_string()).with("primes", WitnessValue::text(list.join("; "))))
            }
            Err(e) => one(PropertyReport::from_error(name, &e)),
        },
        "faithful" => one(an.is_faithful()),
        "multiplication" => one(an.is_multiplication()),
        "uniform" => one(an.is_uniform()),
        "semi_uniform" => one(an.is_semi_uniform()),
        "submodules" => named.iter().flat_map(|(label, s)| submodule_rows(an, label, s)).collect(),
        other => one(PropertyReport::not_applicable(other, "unknown module predicate")),
    }
}

pub fn module_checks(
    m: &FiniteGradedModule,
    named: &[(String, GradedSubmodule)],
    names: &[String],
    caps: &Caps,
) -> Vec<PropertyReport> {
    let an = ModuleAnalysis::new(m, *caps);
    let all: Vec<String> = MODULE_PREDICATES.iter().map(|s| s.to_string()).collect();
    let names = if names.is_empty() { &all } else { names };
    names.iter().flat_map(|n| module_predicate(&an, named, n)).collect()
}

pub fn structure_checks(
    s: &Structure,
    named: &[(String, GradedSubmodule)],
    names: &[String],
    caps: &Caps,
) -> Vec<PropertyReport> {
    match s {
        Structure::Ring(r) => ring_checks(r, names, caps),
        Structure::Module(m) => module_checks(m, named, names, caps),
    }
}

pub fn any_aborted(reports: &[PropertyReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::AbortedCap)
}

/// Names not in the catalog for this kind of structure.
pub fn unknown_predicates<'a>(s: &Structure, names: &'a [String]) -> Vec<&'a str> {
    let known = match s {
        Structure::Ring(_) => RING_PREDICATES,
        Structure::Module(_) => MODULE_PREDICATES,
    };
    names.iter().map(String::as_str).filter(|n| !known.contains(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gradlab_core::fixtures::build_fixture;

    #[test]
    fn m2_z4_rows() {
        let f = build_fixture("m2_z4").unwrap();
        let reps = structure_checks(&f.structure, &[], &[], &Caps::default());
        let get = |n: &str| reps.iter().find(|r| r.name == n).unwrap();
        assert!(get("weak").is_holds());
        assert_eq!(get("strongness").value.as_deref(), Some("first_strong"));
        assert!(!any_aborted(&reps));
    }

    #[test]
    fn tiny_cap_aborts() {
        let f = build_fixture("m4_d10").unwrap();
        let caps = Caps { elements: 4, lattice: 10 };
        let reps = structure_checks(&f.structure, &[], &[], &caps);
        assert!(any_aborted(&reps));
    }

    #[test]
    fn module_rows_for_named_submodules() {
        let f = build_fixture("z12i").unwrap();
        let reps = structure_checks(&f.structure, &f.submodules, &["submodules".into()], &Caps::default());
        let get = |n: &str| reps.iter().find(|r| r.name == n).unwrap();
        assert!(get("graded_semi_essential(<6>)").is_holds());
        assert!(get("graded_essential(<6>)").is_fails());
    }
}
