//! The fixture verdict table.

use gradlab_core::fixtures::{build_fixture_with, prime_listing, Evaluation, Fixture, FixtureOptions, FIXTURE_NAMES};
use gradlab_core::report::Caps;
use serde_json::{json, Value};

use crate::error::Result;
use crate::render::table;

/// Printed with the prime list of a module whose enumerated primes go beyond
/// the submodules named in the worked example.
pub const PRIME_DISCREPANCY_NOTE: &str = "the worked example names specific graded primes; the enumeration under the <x> = x*M reading lists every graded prime, mixed ones included; only membership of the named primes is checked";

pub struct FixtureRun {
    pub fixture: Fixture,
    pub evaluations: Vec<Evaluation>,
    /// Full prime list for module fixtures whose primes are pinned by membership.
    pub primes: Option<Vec<String>>,
}

impl FixtureRun {
    pub fn mismatches(&self) -> usize {
        self.evaluations.iter().filter(|e| !e.matches()).count()
    }
}

pub struct VerifyRun {
    pub runs: Vec<FixtureRun>,
}

impl VerifyRun {
    pub fn mismatches(&self) -> usize {
        self.runs.iter().map(FixtureRun::mismatches).sum()
    }

    pub fn passed(&self) -> bool {
        self.mismatches() == 0
    }

    pub fn to_value(&self) -> Value {
        let fixtures: Vec<Value> = self
            .runs
            .iter()
            .map(|r| {
                let rows: Vec<Value> = r
                    .evaluations
                    .iter()
                    .map(|e| {
                        json!({
                            "property": e.property.label(),
                            "expected": e.expected,
                            "computed": e.computed,
                            "origin": e.origin.label(),
                            "status": if e.matches() { "ok" } else { "MISMATCH" },
                        })
                    })
                    .collect();
                let mut v = json!({"name": r.fixture.name, "checks": rows, "notes": r.fixture.notes});
                if let Some(p) = &r.primes {
                    v["graded_primes"] = json!(p);
                    v["prime_note"] = json!(PRIME_DISCREPANCY_NOTE);
                }
                v
            })
            .collect();
        json!({"fixtures": fixtures, "mismatches": self.mismatches(), "passed": self.passed()})
    }

    pub fn to_table(&self) -> String {
        let mut rows = Vec::new();
        for r in &self.runs {
            for e in &r.evaluations {
                rows.push(vec![
                    r.fixture.name.clone(),
                    e.property.label(),
                    e.expected.clone(),
                    e.computed.clone(),
                    e.origin.label().to_string(),
                    if e.matches() { "ok".into() } else { "MISMATCH".into() },
                ]);
            }
        }
        let mut out = table(&["fixture", "property", "expected", "computed", "origin", "status"], &rows);
        for r in &self.runs {
            if let Some(p) = &r.primes {
                out.push_str(&format!("\n{} graded primes ({}):\n", r.fixture.name, p.len()));
                for x in p {
                    out.push_str(&format!("  {x}\n"));
                }
                out.push_str(&format!("note: {PRIME_DISCREPANCY_NOTE}\n"));
            }
        }
        let mism: Vec<String> = self
            .runs
            .iter()
            .flat_map(|r| {
                r.evaluations.iter().filter(|e| !e.matches()).map(move |e| {
                    format!("  {} {}: expected {}, computed {}", r.fixture.name, e.property.label(), e.expected, e.computed)
                })
            })
            .collect();
        if mism.is_empty() {
            out.push_str("\nall fixture verdicts match\n");
        } else {
            out.push_str(&format!("\n{} mismatch(es):\n{}\n", mism.len(), mism.join("\n")));
        }
        out
    }
}

fn pins_prime_membership(f: &Fixture) -> bool {
    f.expected.iter().any(|e| matches!(e.property, gradlab_core::fixtures::Property::PrimesContain(_)))
}

pub fn run_fixture(name: &str, opts: FixtureOptions, caps: &Caps) -> Result<FixtureRun> {
    let fixture = build_fixture_with(name, opts)?;
    let evaluations = fixture.evaluate(caps)?;
    let primes = if pins_prime_membership(&fixture) { Some(prime_listing(&fixture, caps)?) } else { None };
    Ok(FixtureRun { fixture, evaluations, primes })
}

/// Runs one fixture or the whole registry. Unknown names are input errors.
pub fn verify(name: Option<&str>, opts: FixtureOptions, caps: &Caps) -> Result<VerifyRun> {
    let names: Vec<&str> = match name {
        Some(n) => vec![n],
        None => FIXTURE_NAMES.to_vec(),
    };
    let runs = names.into_iter().map(|n| run_fixture(n, opts, caps)).collect::<Result<Vec<_>>>()?;
    Ok(VerifyRun { runs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z36i_lists_its_primes() {
        let run = verify(Some("z36i"), FixtureOptions::default(), &Caps::default()).unwrap();
        assert!(run.passed());
        let primes = run.runs[0].primes.as_ref().unwrap();
        assert!(primes.len() > 2);
        assert!(run.to_table().contains("note:"));
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert!(verify(Some("nope"), FixtureOptions::default(), &Caps::default()).is_err());
    }
}
