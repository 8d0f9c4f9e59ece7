//! Runs an implication suite over fixtures plus generated instances.

use std::path::Path;

use gradlab_core::fixtures::{build_fixture, Structure, FIXTURE_NAMES};
use gradlab_core::report::Caps;
use serde_json::{json, Value};

use super::generate::{generate_graded_module, generate_graded_ring, GeneratorParams};
use super::suite::{default_suite, find, Eval, Implication, Kind, ModuleFacts, Obs, RingFacts};
use crate::error::{GradlabError, Result};
use crate::format::{parse_str, structure_to_value};
use crate::render::table;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub params: GeneratorParams,
    pub rings: u64,
    pub modules: u64,
    pub caps: Caps,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { params: GeneratorParams::default(), rings: 200, modules: 60, caps: Caps::default() }
    }
}

/// One member of the instance pool.
pub struct Instance {
    /// `fixture:<name>` or `ring:<index>` / `module:<index>`.
    pub id: String,
    pub description: String,
    pub structure: Structure,
}

/// Fixtures first, then generated rings, then generated modules.
pub fn instance_pool(cfg: &SuiteConfig) -> Vec<Instance> {
    let mut pool = Vec::new();
    for name in FIXTURE_NAMES {
        if let Ok(f) = build_fixture(name) {
            pool.push(Instance { id: format!("fixture:{name}"), description: name.to_string(), structure: f.structure });
        }
    }
    for i in 0..cfg.rings {
        let g = generate_graded_ring(&cfg.params, i);
        pool.push(Instance { id: format!("ring:{i}"), description: g.description, structure: Structure::Ring(g.ring) });
    }
    for i in 0..cfg.modules {
        let g = generate_graded_module(&cfg.params, i);
        pool.push(Instance { id: format!("module:{i}"), description: g.description, structure: Structure::Module(g.module) });
    }
    pool
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EntryStats {
    pub confirmations: u64,
    pub vacuous: u64,
    pub undecided: u64,
    pub counterexamples: u64,
    pub first_counterexample: Option<(String, String)>,
}

impl EntryStats {
    fn record(&mut self, id: &str, obs: Obs) {
        match obs {
            Obs::Holds => self.confirmations += 1,
            Obs::Vacuous => self.vacuous += 1,
            Obs::Undecided => self.undecided += 1,
            Obs::Fails(w) => {
                self.counterexamples += 1;
                if self.first_counterexample.is_none() {
                    self.first_counterexample = Some((id.to_string(), w));
                }
            }
        }
    }
}

pub struct EntryResult {
    pub implication: Implication,
    pub stats: EntryStats,
}

impl EntryResult {
    /// `ok`, `violated` or `no_counterexample`.
    pub fn status(&self) -> &'static str {
        match (self.implication.kind, self.stats.counterexamples) {
            (Kind::Theorem, 0) => "ok",
            (Kind::Theorem, _) => "violated",
            (Kind::NonImplication, 0) => "no_counterexample",
            (Kind::NonImplication, _) => "ok",
        }
    }
}

/// A theorem violation with everything needed to rerun it.
pub struct Violation {
    pub implication: String,
    pub instance: String,
    pub witness: String,
    pub structure: Value,
}

impl Violation {
    pub fn to_value(&self) -> Value {
        json!({
            "implication": self.implication,
            "instance": self.instance,
            "witness": self.witness,
            "structure": self.structure,
        })
    }
}

pub struct SuiteReport {
    pub seed: u64,
    pub instances: usize,
    pub entries: Vec<EntryResult>,
    pub violation: Option<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none() && self.entries.iter().all(|e| e.status() == "ok")
    }

    pub fn entry(&self, name: &str) -> Option<&EntryResult> {
        self.entries.iter().find(|e| e.implication.name == name)
    }

    pub fn to_value(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let s = &e.stats;
                json!({
                    "name": e.implication.name,
                    "statement": e.implication.statement,
                    "kind": e.implication.kind.label(),
                    "status": e.status(),
                    "confirmations": s.confirmations,
                    "vacuous": s.vacuous,
                    "undecided": s.undecided,
                    "counterexamples": s.counterexamples,
                    "first_counterexample": s.first_counterexample.as_ref().map(|(i, w)| json!({"instance": i, "witness": w})),
                })
            })
            .collect();
        json!({
            "seed": self.seed,
            "instances": self.instances,
            "entries": entries,
            "violation": self.violation.as_ref().map(Violation::to_value),
            "passed": self.passed(),
        })
    }

    pub fn to_table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|e| {
                let s = &e.stats;
                let first = s.first_counterexample.as_ref().map(|(i, w)| format!("{i} {w}").trim().to_string()).unwrap_or_default();
                vec![
                    e.implication.name.to_string(),
                    e.implication.kind.label().to_string(),
                    e.status().to_string(),
                    s.confirmations.to_string(),
                    s.vacuous.to_string(),
                    s.undecided.to_string(),
                    s.counterexamples.to_string(),
                    first,
                ]
            })
            .collect();
        let mut out = table(&["implication", "kind", "status", "holds", "vacuous", "undecided", "counterexamples", "first"], &rows);
        out.push_str(&format!("\nseed {}, {} instances\n", self.seed, self.instances));
        if let Some(v) = &self.violation {
            out.push_str(&format!("VIOLATION of {} on {}: {}\n", v.implication, v.instance, v.witness));
        }
        out
    }
}

fn evaluate(imp: &Implication, ring: Option<&RingFacts>, module: Option<&ModuleFacts>) -> Option<Obs> {
    match (imp.eval, ring, module) {
        (Eval::Ring(f), Some(r), _) => Some(f(r)),
        (Eval::Module(f), _, Some(m)) => Some(f(m)),
        _ => None,
    }
}

/// Evaluates `suite` on one structure. Returns one observation per entry,
/// `None` where the entry does not apply to this kind of structure.
pub fn observe(suite: &[Implication], s: &Structure, caps: Caps) -> Vec<Option<Obs>> {
    match s {
        Structure::Ring(r) => {
            let facts = RingFacts::new(r, caps);
            suite.iter().map(|imp| evaluate(imp, Some(&facts), None)).collect()
        }
        Structure::Module(m) => {
            let facts = ModuleFacts::new(m, caps);
            suite.iter().map(|imp| evaluate(imp, None, Some(&facts))).collect()
        }
    }
}

/// Stops at the first theorem violation.
pub fn run_suite(cfg: &SuiteConfig, suite: &[Implication]) -> Result<SuiteReport> {
    if suite.is_empty() {
        return Err(GradlabError::semantic("suite", "empty suite"));
    }
    let pool = instance_pool(cfg);
    let mut stats: Vec<EntryStats> = vec![EntryStats::default(); suite.len()];
    let mut violation = None;
    'pool: for inst in &pool {
        for (k, obs) in observe(suite, &inst.structure, cfg.caps).into_iter().enumerate() {
            let Some(obs) = obs else { continue };
            if let (Kind::Theorem, Obs::Fails(w)) = (suite[k].kind, &obs) {
                violation = Some(Violation {
                    implication: suite[k].name.to_string(),
                    instance: inst.id.clone(),
                    witness: w.clone(),
                    structure: structure_to_value(&inst.structure),
                });
                stats[k].record(&inst.id, obs);
                break 'pool;
            }
            stats[k].record(&inst.id, obs);
        }
    }
    let entries = suite.iter().zip(stats).map(|(i, s)| EntryResult { implication: *i, stats: s }).collect();
    Ok(SuiteReport { seed: cfg.params.seed, instances: pool.len(), entries, violation })
}

/// `default` or a JSON list of entry names.
pub fn load_suite(source: &str) -> Result<Vec<Implication>> {
    if source == "default" {
        return Ok(default_suite());
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|source| GradlabError::Io { path: path.into(), source })?;
    let names: Vec<String> = serde_json::from_str(&text).map_err(|e| GradlabError::from_json(e).in_file(source))?;
    names
        .iter()
        .enumerate()
        .map(|(i, n)| find(n).ok_or_else(|| GradlabError::semantic(format!("[{i}]"), format!("unknown implication {n:?}")).in_file(source)))
        .collect()
}

/// Reruns the implication stored in a replay file on its stored instance.
pub fn replay(path: &Path, caps: Caps) -> Result<(Implication, Obs)> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| GradlabError::Io { path: path.into(), source })?;
    let v: Value = serde_json::from_str(&text).map_err(|e| GradlabError::from_json(e).in_file(&name))?;
    let imp_name = v["implication"].as_str().ok_or_else(|| GradlabError::semantic("implication", "missing").in_file(&name))?;
    let imp = find(imp_name).ok_or_else(|| GradlabError::semantic("implication", format!("unknown implication {imp_name:?}")).in_file(&name))?;
    let structure = v.get("structure").ok_or_else(|| GradlabError::semantic("structure", "missing").in_file(&name))?;
    let doc = parse_str(&structure.to_string(), path.parent()).map_err(|e| e.in_file(&name))?;
    let obs = observe(&[imp], &doc.structure, caps).pop().flatten();
    let obs = obs.ok_or_else(|| GradlabError::semantic("structure", "implication does not apply to this kind of structure").in_file(&name))?;
    Ok((imp, obs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_obs(name: &str, entry: &str) -> Obs {
        let f = build_fixture(name).unwrap();
        let imp = find(entry).unwrap();
        observe(&[imp], &f.structure, Caps::default()).pop().flatten().unwrap()
    }

    #[test]
    fn fixture_counterexamples() {
        let cases = [
            ("t2_z2", "weak_not_nondegenerate"),
            ("m3_z7", "weak_not_first_strong"),
            ("m3_z7", "weak_not_second_strong"),
            ("kx_z", "second_strong_not_weak"),
            ("m2_z", "nondegenerate_not_weakly_crossed"),
            ("m3_z2", "weak_not_weakly_crossed"),
            ("z6i", "strong_not_invertible"),
            ("kx_z", "invertible_not_strong"),
            ("z12i", "semi_essential_not_essential"),
            ("z12i", "semi_essential_not_downward_closed"),
            ("z36i", "semi_essential_not_closed_under_meets"),
            ("z36i", "semi_uniform_not_uniform"),
            ("z36i", "semi_uniform_not_hereditary"),
        ];
        for (fx, entry) in cases {
            assert!(matches!(fixture_obs(fx, entry), Obs::Fails(_)), "{fx} {entry}");
        }
    }

    #[test]
    fn theorems_hold_on_fixtures() {
        let suite = default_suite();
        for name in FIXTURE_NAMES {
            let f = build_fixture(name).unwrap();
            for (imp, obs) in suite.iter().zip(observe(&suite, &f.structure, Caps::default())) {
                if imp.kind == Kind::Theorem {
                    assert!(!matches!(obs, Some(Obs::Fails(_))), "{name} {} {obs:?}", imp.name);
                }
            }
        }
    }

    #[test]
    fn small_run_is_deterministic() {
        let cfg = SuiteConfig { params: GeneratorParams::with_seed(3), rings: 6, modules: 2, caps: Caps::default() };
        let a = run_suite(&cfg, &default_suite()).unwrap().to_value();
        let b = run_suite(&cfg, &default_suite()).unwrap().to_value();
        assert_eq!(a, b);
    }

    /// Over M_2(GF(2)) as a module over itself there is no graded prime, so
    /// every nonzero submodule is semi-essential by an empty quantifier while
    /// two distinct columns meet in zero. The entry counts this as vacuous.
    #[test]
    fn meet_statement_needs_a_nonzero_prime() {
        use gradlab_core::group::Group;
        use gradlab_core::module::FiniteGradedModule;
        use gradlab_core::ring::build::matrix_ring;

        let r = matrix_ring(Group::cyclic(1).unwrap(), 2, &[0, 0]).unwrap();
        let m = FiniteGradedModule::regular(&r);
        let facts = ModuleFacts::new(&m, Caps::default());
        assert!(facts.primes().unwrap().is_empty());
        let l = facts.lattice().unwrap();
        let (i, j) = (1..l.len())
            .flat_map(|i| (1..l.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !l[i].is_full() && !l[j].is_full() && l[i].intersection(&l[j]).is_zero() && i != j)
            .unwrap();
        assert_eq!(facts.semi(i), Some(true));
        assert_eq!(facts.semi(j), Some(true));
        assert_eq!(facts.semi_of(&l[i].intersection(&l[j])), Some(false));
        assert_eq!(fixture_free_obs(&m, "colon_condition_meet_semi_essential"), Obs::Vacuous);
    }

    fn fixture_free_obs(m: &gradlab_core::module::FiniteGradedModule, entry: &str) -> Obs {
        let imp = find(entry).unwrap();
        observe(&[imp], &Structure::Module(m.clone()), Caps::default()).pop().flatten().unwrap()
    }
}
