//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gradlab::format::{document_to_value, parse_str, to_pretty, Document};
use gradlab::harness::generate::{generate_graded_ring, GeneratorParams};
use gradlab::harness::run::{run_suite, SuiteConfig};
use gradlab::harness::suite::{default_suite, Kind};
use gradlab::render::json_text;
use gradlab::verify::verify;
use gradlab_core::fixtures::{build_fixture, Fixture, FixtureOptions, Structure, FIXTURE_NAMES};
use gradlab_core::group::SubsetClass;
use gradlab_core::module::{FiniteGradedModule, GradedSubmodule};
use gradlab_core::module_props::ModuleAnalysis;
use gradlab_core::periodic::PeriodicSet;
use gradlab_core::report::{Caps, PropertyReport};
use gradlab_core::ring::{FiniteGradedRing, GradedRing};
use gradlab_core::ring_props::{self as rp, CrossedClass, DegeneracyClass, StrongnessClass};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn ring(name: &str) -> GradedRing {
    match build_fixture(name).expect("fixture").structure {
        Structure::Ring(r) => r,
        Structure::Module(_) => panic!("{name} is a module fixture"),
    }
}

fn fixture_module(name: &str) -> (Fixture, FiniteGradedModule) {
    let f = build_fixture(name).expect("fixture");
    let m = f.module().expect("module fixture").clone();
    (f, m)
}

fn holds(r: &PropertyReport) -> Option<bool> {
    r.verdict.decided()
}

// 1. ring fixture verdicts, each recomputed from the predicates

fn criterion_1() -> Outcome {
    let caps = Caps::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut check = |fixture: &str, what: &str, ok: bool| {
        if !ok {
            failures.push(format!("{fixture}: {what}"));
        }
    };
    let weak = |r: &GradedRing| holds(&rp::is_weak(r)) == Some(true);
    let strong = |r: &GradedRing| holds(&rp::is_strong(r));
    let first = |r: &GradedRing| holds(&rp::is_first_strong(r));
    let second = |r: &GradedRing| holds(&rp::is_second_strong(r));
    let crossed = |r: &GradedRing| rp::crossed_class(r, &caps).class.map(|c| c != CrossedClass::None);
    let invertible = |r: &GradedRing| holds(&rp::is_invertible_graded(r, &caps));
    let degeneracy = |r: &GradedRing| rp::degeneracy_class(r, &caps).class;

    let r = ring("m2_z4");
    check("m2_z4", "weak", weak(&r));
    check("m2_z4", "first strong", first(&r) == Some(true));
    check("m2_z4", "not strong", strong(&r) == Some(false));
    check("m2_z4", "weakly crossed", crossed(&r) == Some(true));

    let r = ring("kx_z");
    check("kx_z", "second strong", second(&r) == Some(true));
    check("kx_z", "not first strong", first(&r) == Some(false));
    check("kx_z", "not weak", !weak(&r));
    check("kx_z", "not weakly crossed", crossed(&r) == Some(false));
    check("kx_z", "invertible", invertible(&r) == Some(true));

    let r = ring("m4_d10");
    check("m4_d10", "weak", weak(&r));
    let d = degeneracy(&r);
    check("m4_d10", &format!("degenerate (computed {})", d.map(|c| c.label()).unwrap_or("undecided")), d == Some(DegeneracyClass::Degenerate));

    let r = ring("m3_z7");
    check("m3_z7", "weak", weak(&r));
    check("m3_z7", "support not a subgroup", rp::support(&r).class(r.group()) != SubsetClass::Subgroup);
    check("m3_z7", "strongness none", rp::strongness_class(&r).class == Some(StrongnessClass::None));

    let r = ring("kx_z3");
    check("kx_z3", "weak", weak(&r));
    check("kx_z3", "not second strong", second(&r) == Some(false));

    let r = ring("gf9_z2");
    check("gf9_z2", "invertible", invertible(&r) == Some(true));
    check("gf9_z2", "first strong", first(&r) == Some(true));
    check("gf9_z2", "graded simple", holds(&rp::is_graded_simple(&r, &caps)) == Some(true));
    check("gf9_z2", "weakly crossed", crossed(&r) == Some(true));

    let r = ring("z6i");
    check("z6i", "strong", strong(&r) == Some(true));
    check("z6i", "not invertible", invertible(&r) == Some(false));

    let r = ring("m2_z");
    check("m2_z", "non-degenerate", degeneracy(&r).map(|c| c.is_nondegenerate()) == Some(true));
    check("m2_z", "not weakly crossed", crossed(&r) == Some(false));

    let r = ring("m3_z2");
    check("m3_z2", "weak", weak(&r));
    check("m3_z2", "not weakly crossed", crossed(&r) == Some(false));

    let run = verify(None, FixtureOptions::default(), &caps).map_err(|e| e.to_string())?;
    for r in &run.runs {
        for e in r.evaluations.iter().filter(|e| !e.matches()) {
            failures.push(format!("verify-paper {} {}: expected {}, computed {}", r.fixture.name, e.property.label(), e.expected, e.computed));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("took {elapsed:?}"));
    }
    if failures.is_empty() {
        Ok(format!("all ring verdicts and the verify-paper table match in {:.1}s", elapsed.as_secs_f64()))
    } else {
        Err(failures.join("; "))
    }
}

// 2. module fixture verdicts

fn criterion_2() -> Outcome {
    let caps = Caps::default();
    let (f, m) = fixture_module("z12i");
    let an = ModuleAnalysis::new(&m, caps);
    let sub = |n: &str| f.submodule(n).expect("named submodule");
    let render = |m: &FiniteGradedModule, s: &GradedSubmodule| s.render(m.basis());
    ensure(an.is_semi_essential(sub("<6>")).is_holds(), "z12i <6> semi-essential")?;
    ensure(an.is_essential(sub("<6>")).is_fails(), "z12i <6> not essential")?;
    let r4 = an.is_semi_essential(sub("<4>"));
    ensure(r4.is_fails(), "z12i <4> not semi-essential")?;
    let p = r4.witness_value("P").map(|w| w.render());
    ensure(p.as_deref() == Some(render(&m, sub("<3>")).as_str()), format!("z12i <4> witness {p:?}"))?;
    ensure(an.is_semi_essential(sub("<2>")).is_holds(), "z12i <2> semi-essential")?;

    let (f, m) = fixture_module("z36i");
    let an = ModuleAnalysis::new(&m, caps);
    let sub = |n: &str| f.submodule(n).expect("named submodule");
    ensure(an.is_semi_essential(sub("<12>")).is_holds(), "z36i <12> semi-essential")?;
    ensure(an.is_semi_essential(sub("<18>")).is_holds(), "z36i <18> semi-essential")?;
    ensure(sub("<12>").intersection(sub("<18>")).is_zero(), "z36i <12> n <18> = 0")?;
    ensure(an.is_semi_uniform().is_holds(), "z36i semi-uniform")?;
    ensure(an.is_uniform().is_fails(), "z36i not uniform")?;

    let (f, m) = fixture_module("z36i_k3");
    let an = ModuleAnalysis::new(&m, caps);
    let sub = |n: &str| f.submodule(n).expect("named submodule");
    let su = an.is_semi_uniform();
    ensure(su.is_fails(), "z36i_k3 not semi-uniform")?;
    let n = su.witness_value("N").map(|w| w.render());
    let p = su.witness_value("P").map(|w| w.render());
    ensure(n.as_deref() == Some(render(&m, sub("<12>")).as_str()), format!("z36i_k3 witness N {n:?}"))?;
    ensure(p.as_deref() == Some(render(&m, sub("<9>")).as_str()), format!("z36i_k3 witness P {p:?}"))?;
    Ok("z12i, z36i and z36i_k3 verdicts and witnesses match".into())
}

// 3. implication suite

fn criterion_3() -> Outcome {
    let cfg = SuiteConfig::default();
    let suite = default_suite();
    let start = Instant::now();
    let report = run_suite(&cfg, &suite).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if let Some(v) = &report.violation {
        return Err(format!("{} violated on {}: {}", v.implication, v.instance, v.witness));
    }
    let missing: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| e.implication.kind == Kind::NonImplication && e.stats.counterexamples == 0)
        .map(|e| e.implication.name)
        .collect();
    ensure(missing.is_empty(), format!("no counterexample for {}", missing.join(", ")))?;
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    let again = run_suite(&cfg, &suite).map_err(|e| e.to_string())?;
    ensure(again.to_value() == report.to_value(), "second run with the same seed differs")?;
    let theorems = suite.iter().filter(|i| i.kind == Kind::Theorem).count();
    Ok(format!(
        "{} instances, {theorems} theorem entries without violation, {} non-implications refuted, {:.1}s",
        report.instances,
        suite.len() - theorems,
        elapsed.as_secs_f64()
    ))
}

// 4. oracle equivalences

/// Nonzero and meets every nonzero member of the full lattice.
fn essential_by_definition(lattice: &[GradedSubmodule], k: &GradedSubmodule) -> bool {
    !k.is_zero() && lattice.iter().filter(|n| !n.is_zero()).all(|n| !k.intersection(n).is_zero())
}

fn criterion_4a() -> Result<usize, String> {
    let caps = Caps::default();
    let mut compared = 0;
    for name in FIXTURE_NAMES {
        let f = build_fixture(name).map_err(|e| e.to_string())?;
        let Some(m) = f.module() else { continue };
        let an = ModuleAnalysis::new(m, caps);
        let lattice = an.lattice().map_err(|e| format!("{name}: {e}"))?;
        ensure(lattice.len() <= 10_000, format!("{name}: lattice too large"))?;
        for k in lattice.iter().filter(|k| !k.is_zero()) {
            let shortcut = an.is_essential(k).is_holds();
            ensure(shortcut == essential_by_definition(lattice, k), format!("{name}: {}", k.render(m.basis())))?;
            compared += 1;
        }
    }
    Ok(compared)
}

/// A nonzero `u` in `R_g` with a two-sided inverse anywhere in `R`.
fn unit_in_component(f: &FiniteGradedRing, g: i64, elements: &[Vec<u64>]) -> bool {
    let comp = f.component(g);
    let b = f.basis();
    let one = f.one();
    elements
        .iter()
        .filter(|u| !b.is_zero(u) && comp.contains(b, u))
        .any(|u| elements.iter().any(|v| f.mul(u, v) == *one && f.mul(v, u) == *one))
}

fn criterion_4b() -> Result<usize, String> {
    let caps = Caps::default();
    let mut rings: Vec<(String, GradedRing)> = Vec::new();
    for name in FIXTURE_NAMES {
        if let Ok(f) = build_fixture(name) {
            if let Structure::Ring(r) = f.structure {
                rings.push((name.to_string(), r));
            }
        }
    }
    let params = GeneratorParams::default();
    for i in 0..200 {
        rings.push((format!("ring:{i}"), generate_graded_ring(&params, i).ring));
    }
    let mut compared = 0;
    for (name, r) in &rings {
        let Some(f) = r.as_finite() else { continue };
        if f.order() > 5000 {
            continue;
        }
        let elements = f.elements(caps.elements).map_err(|e| e.to_string())?;
        for g in f.support() {
            let restricted = f.homogeneous_unit_search(g, caps.elements).map_err(|e| e.to_string())?.is_some();
            ensure(restricted == unit_in_component(f, g, &elements), format!("{name} at degree {}", f.group().label(g)))?;
        }
        compared += 1;
    }
    Ok(compared)
}

fn random_periodic(rng: &mut ChaCha8Rng) -> PeriodicSet {
    let threshold = rng.gen_range(0..25u64);
    let period = rng.gen_range(1..13u64);
    let residues: Vec<u64> = (0..period).filter(|_| rng.gen_bool(0.35)).collect();
    let exceptional: Vec<u64> = (0..threshold).filter(|_| rng.gen_bool(0.3)).collect();
    PeriodicSet::new(threshold, period, &residues, &exceptional).expect("valid periodic set")
}

fn criterion_4c() -> Result<usize, String> {
    const BOUND: u64 = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let a = random_periodic(&mut rng);
        let b = random_periodic(&mut rng);
        let sa: Vec<bool> = (0..=BOUND).map(|j| a.contains(j)).collect();
        let sb: Vec<bool> = (0..=BOUND).map(|j| b.contains(j)).collect();
        let mut sum = vec![false; BOUND as usize + 1];
        for x in 0..=BOUND as usize {
            for y in 0..=BOUND as usize - x {
                if sa[x] && sb[y] {
                    sum[x + y] = true;
                }
            }
        }
        let (s, m) = (a.sumset(&b), a.intersection(&b));
        for j in 0..=BOUND {
            let ju = j as usize;
            ensure(s.contains(j) == sum[ju], format!("pair {i}: sumset at {j} ({a} + {b})"))?;
            ensure(m.contains(j) == (sa[ju] && sb[ju]), format!("pair {i}: intersection at {j} ({a}, {b})"))?;
        }
    }
    Ok(1000)
}

fn criterion_4() -> Outcome {
    let a = criterion_4a()?;
    let b = criterion_4b()?;
    let c = criterion_4c()?;
    Ok(format!("essential shortcut on {a} submodules, unit search on {b} rings, {c} periodic pairs"))
}

// 5. prime enumeration on z36i

fn criterion_5() -> Outcome {
    let caps = Caps::default();
    let (f, m) = fixture_module("z36i");
    let an = ModuleAnalysis::new(&m, caps);
    let primes = an.primes().map_err(|e| e.to_string())?;
    let sub = |n: &str| f.submodule(n).expect("named submodule");
    ensure(primes.contains(sub("<2>")), "2M is not listed")?;
    ensure(primes.contains(sub("<3>")), "3M is not listed")?;
    for k in ["<12>", "<18>"] {
        let meets_all = primes.iter().filter(|p| !p.is_zero()).all(|p| !sub(k).intersection(p).is_zero());
        ensure(meets_all, format!("{k} misses an enumerated prime"))?;
        ensure(an.is_semi_essential(sub(k)).is_holds(), format!("{k} semi-essential"))?;
    }
    let run = verify(Some("z36i"), FixtureOptions::default(), &caps).map_err(|e| e.to_string())?;
    let listed = run.runs[0].primes.as_ref().ok_or("no prime list emitted")?;
    ensure(listed.len() == primes.len(), "emitted list is incomplete")?;
    ensure(run.to_table().contains("note:"), "no discrepancy note")?;
    ensure(run.to_value()["fixtures"][0]["prime_note"].is_string(), "no discrepancy note in json")?;
    Ok(format!("{} graded primes including 2M and 3M; note emitted", primes.len()))
}

// 6. linear report on gf9_z2

fn criterion_6() -> Outcome {
    let caps = Caps::default();
    let r = ring("gf9_z2");
    let f = r.as_finite().ok_or("gf9_z2 is not finite")?;
    let lin = rp::identity_component_linear_report(&r, &caps).ok_or("no linear report")?;
    ensure(lin.kernel_meets_identity_trivially, "Ker T n R_0 != 0")?;
    ensure(lin.components_in_kernel, "R_1 not inside Ker T")?;
    ensure(lin.surjective, "T not onto")?;
    let (r0, r1) = (f.component(0), f.component(1));
    ensure(r0.order() == 3 && r1.order() == 3, "component orders")?;
    ensure(r0.sum(&r1).order() / r0.order() == 3, "|R_0 + R_1| / |R_0|")?;
    let q = lin.quotient_checks.iter().find(|q| q.g == 0 && q.h == 1).ok_or("no quotient check for (0, 1)")?;
    ensure(q.index == Some(3) && q.component_order == Some(3) && q.bijective, format!("{q:?}"))?;
    Ok("Ker T n R_0 = 0, R_1 in Ker T, T onto, index 3 = |R_1|".into())
}

// 7. round trip and byte-identical reruns

fn criterion_7() -> Outcome {
    for name in FIXTURE_NAMES {
        let f = build_fixture(name).map_err(|e| e.to_string())?;
        let doc = Document { structure: f.structure.clone(), submodules: f.submodules.clone() };
        let text = to_pretty(&document_to_value(&doc));
        let back = parse_str(&text, None).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.structure == f.structure, format!("{name}: structure changed"))?;
        ensure(back.submodules == f.submodules, format!("{name}: submodules changed"))?;
    }
    let cfg = SuiteConfig { params: GeneratorParams::with_seed(11), rings: 25, modules: 8, caps: Caps::default() };
    let fuzz = || run_suite(&cfg, &default_suite()).map(|r| json_text(&r.to_value())).map_err(|e| e.to_string());
    ensure(fuzz()? == fuzz()?, "fuzz reports differ")?;
    let verify_json = || verify(None, FixtureOptions::default(), &Caps::default()).map(|r| json_text(&r.to_value())).map_err(|e| e.to_string());
    ensure(verify_json()? == verify_json()?, "verify-paper reports differ")?;
    Ok(format!("{} fixtures round-trip; fuzz and verify-paper json are byte-identical", FIXTURE_NAMES.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 fixture verdict table", criterion_1),
        ("2 module fixture verdicts", criterion_2),
        ("3 implication suite", criterion_3),
        ("4 oracle equivalences", criterion_4),
        ("5 prime enumeration", criterion_5),
        ("6 linear report", criterion_6),
        ("7 round trip and determinism", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
