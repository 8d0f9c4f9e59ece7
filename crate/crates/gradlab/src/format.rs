//! JSON documents for rings and modules.
//!
//! Ring: `{"kind":"finite_graded_ring","group":G,"basis":[{name,order,degree}],
//! "one":{name:coeff},"mul":[[a,b,{name:coeff}],...]}` with zero products
//! omitted, or `{"kind":"monomial_ring","group":G,"coeff_field_order":q,
//! "generator_degree":d}`.
//!
//! Module: `{"kind":"finite_graded_module","ring":R|"file.json","basis":[...],
//! "action":[[ring_basis,module_basis,{name:coeff}],...]}`, or
//! `{"kind":"finite_graded_module","ring":R,"regular":true}` for a ring over
//! itself. An optional `"submodules":{name:[{name:coeff},...]}` names graded
//! submodules by homogeneous generators.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use gradlab_core::fixtures::Structure;
use gradlab_core::graded::{BasisVector, GradedBasis, Vector};
use gradlab_core::group::{FiniteGroup, Group, GroupKind, DEFAULT_GROUP_ORDER_CAP};
use gradlab_core::module::{FiniteGradedModule, GradedSubmodule};
use gradlab_core::monomial::MonomialGradedRing;
use gradlab_core::ring::{FiniteGradedRing, GradedRing};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{GradlabError, Result};

pub const RING_KIND: &str = "finite_graded_ring";
pub const MONOMIAL_KIND: &str = "monomial_ring";
pub const MODULE_KIND: &str = "finite_graded_module";

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum GroupDoc {
    Cyclic { n: usize },
    Dihedral { n: usize },
    Integers,
    Table { elements: Vec<String>, table: Vec<Vec<usize>> },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Label {
    Int(i64),
    Text(String),
}

impl Label {
    fn text(&self) -> String {
        match self {
            Label::Int(i) => i.to_string(),
            Label::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisDoc {
    name: String,
    order: u64,
    degree: Label,
}

type Entry = (String, String, Map<String, Value>);

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    kind: String,
    #[serde(default)]
    group: Option<GroupDoc>,
    #[serde(default)]
    basis: Option<Vec<BasisDoc>>,
    #[serde(default)]
    one: Option<Map<String, Value>>,
    #[serde(default)]
    mul: Option<Vec<Entry>>,
    #[serde(default)]
    coeff_field_order: Option<u64>,
    #[serde(default)]
    generator_degree: Option<Label>,
    #[serde(default)]
    ring: Option<Value>,
    #[serde(default)]
    action: Option<Vec<Entry>>,
    #[serde(default)]
    regular: Option<bool>,
    #[serde(default)]
    submodules: Option<Map<String, Value>>,
}

/// A parsed document: the structure plus any named submodules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub structure: Structure,
    pub submodules: Vec<(String, GradedSubmodule)>,
}

fn missing(field: &str) -> GradlabError {
    GradlabError::semantic(field, "required field is missing")
}

fn group_from_doc(g: GroupDoc) -> Result<Group> {
    let at = |e| GradlabError::semantic("group", format!("{e}"));
    Ok(match g {
        GroupDoc::Cyclic { n } => Group::cyclic(n).map_err(at)?,
        GroupDoc::Dihedral { n } => Group::dihedral(n).map_err(at)?,
        GroupDoc::Integers => Group::Integers,
        GroupDoc::Table { elements, table } => {
            Group::Finite(FiniteGroup::from_table(elements, table, DEFAULT_GROUP_ORDER_CAP).map_err(at)?)
        }
    })
}

pub fn group_to_value(g: &Group) -> Value {
    match g {
        Group::Integers => json!({"type": "integers"}),
        Group::Finite(f) => match f.kind() {
            GroupKind::Cyclic(n) => json!({"type": "cyclic", "n": n}),
            GroupKind::Dihedral(n) => json!({"type": "dihedral", "n": n}),
            _ => json!({"type": "table", "elements": f.labels(), "table": f.table_rows()}),
        },
    }
}

fn basis_from_doc(group: &Group, docs: Vec<BasisDoc>, field: &str) -> Result<Vec<BasisVector>> {
    docs.into_iter()
        .enumerate()
        .map(|(i, b)| {
            let degree = group
                .parse_label(&b.degree.text())
                .map_err(|e| GradlabError::semantic(format!("{field}[{i}].degree"), e.to_string()))?;
            Ok(BasisVector::new(b.name, b.order, degree))
        })
        .collect()
}

fn index_of(basis: &[BasisVector], name: &str, path: &str) -> Result<usize> {
    basis
        .iter()
        .position(|b| b.name == name)
        .ok_or_else(|| GradlabError::semantic(path, format!("unknown basis name '{name}'")))
}

fn coeffs(basis: &[BasisVector], map: &Map<String, Value>, path: &str) -> Result<Vector> {
    let mut v = vec![0u64; basis.len()];
    for (name, c) in map {
        let at = format!("{path}.{name}");
        let i = index_of(basis, name, &at)?;
        let c = c
            .as_i64()
            .ok_or_else(|| GradlabError::semantic(&at, "coefficient must be an integer"))?;
        let n = basis[i].order as i64;
        if n < 1 {
            return Err(GradlabError::semantic(&at, "basis order must be positive"));
        }
        v[i] = (v[i] as i64 + c).rem_euclid(n) as u64;
    }
    Ok(v)
}

fn coeff_map(basis: &GradedBasis, v: &[u64]) -> Value {
    let mut m = Map::new();
    for (i, &c) in v.iter().enumerate() {
        if c != 0 {
            m.insert(basis.vector(i).name.clone(), json!(c));
        }
    }
    Value::Object(m)
}

fn basis_value(group: &Group, basis: &GradedBasis) -> Value {
    Value::Array(
        basis
            .vectors()
            .iter()
            .map(|b| json!({"name": b.name, "order": b.order, "degree": group.label(b.degree)}))
            .collect(),
    )
}

fn ring_from_doc(doc: Doc) -> Result<GradedRing> {
    let group = group_from_doc(doc.group.ok_or_else(|| missing("group"))?)?;
    match doc.kind.as_str() {
        MONOMIAL_KIND => {
            let q = doc.coeff_field_order.ok_or_else(|| missing("coeff_field_order"))?;
            let d = doc.generator_degree.ok_or_else(|| missing("generator_degree"))?;
            let d = group
                .parse_label(&d.text())
                .map_err(|e| GradlabError::semantic("generator_degree", e.to_string()))?;
            Ok(MonomialGradedRing::new(q, group, d)
                .map_err(|e| GradlabError::semantic("coeff_field_order", e.to_string()))?
                .into())
        }
        RING_KIND => {
            let basis = basis_from_doc(&group, doc.basis.ok_or_else(|| missing("basis"))?, "basis")?;
            let k = basis.len();
            let one = coeffs(&basis, &doc.one.ok_or_else(|| missing("one"))?, "one")?;
            let mut mul = vec![vec![vec![0u64; k]; k]; k];
            let mut seen = vec![vec![false; k]; k];
            for (t, (a, b, m)) in doc.mul.unwrap_or_default().iter().enumerate() {
                let path = format!("mul[{t}]");
                let i = index_of(&basis, a, &format!("{path}[0]"))?;
                let j = index_of(&basis, b, &format!("{path}[1]"))?;
                if std::mem::replace(&mut seen[i][j], true) {
                    return Err(GradlabError::semantic(path, format!("product {a}*{b} given twice")));
                }
                mul[i][j] = coeffs(&basis, m, &format!("{path}[2]"))?;
            }
            Ok(FiniteGradedRing::new(group, basis, mul, one)?.into())
        }
        other => Err(GradlabError::semantic("kind", format!("'{other}' is not a ring kind"))),
    }
}

pub fn ring_to_value(r: &GradedRing) -> Value {
    match r {
        GradedRing::Monomial(m) => json!({
            "kind": MONOMIAL_KIND,
            "group": group_to_value(m.group()),
            "coeff_field_order": m.field_order(),
            "generator_degree": m.group().label(m.generator_degree()),
        }),
        GradedRing::Finite(f) => {
            let b = f.basis();
            let mut mul = Vec::new();
            for i in 0..f.len() {
                for j in 0..f.len() {
                    let p = f.basis_product(i, j);
                    if !b.is_zero(p) {
                        mul.push(json!([b.vector(i).name, b.vector(j).name, coeff_map(b, p)]));
                    }
                }
            }
            json!({
                "kind": RING_KIND,
                "group": group_to_value(f.group()),
                "basis": basis_value(f.group(), b),
                "one": coeff_map(b, f.one()),
                "mul": mul,
            })
        }
    }
}

pub fn module_to_value(m: &FiniteGradedModule) -> Value {
    let ring = ring_to_value(&GradedRing::Finite(m.ring().clone()));
    if m.is_regular() {
        return json!({"kind": MODULE_KIND, "ring": ring, "regular": true});
    }
    let (rb, mb) = (m.ring().basis(), m.basis());
    let mut action = Vec::new();
    for i in 0..rb.len() {
        for j in 0..mb.len() {
            let v = m.action_basis(i, j);
            if !mb.is_zero(v) {
                action.push(json!([rb.vector(i).name, mb.vector(j).name, coeff_map(mb, v)]));
            }
        }
    }
    json!({
        "kind": MODULE_KIND,
        "ring": ring,
        "basis": basis_value(m.group(), mb),
        "action": action,
    })
}

pub fn structure_to_value(s: &Structure) -> Value {
    match s {
        Structure::Ring(r) => ring_to_value(r),
        Structure::Module(m) => module_to_value(m),
    }
}

pub fn document_to_value(d: &Document) -> Value {
    let mut v = structure_to_value(&d.structure);
    if let (Structure::Module(m), false) = (&d.structure, d.submodules.is_empty()) {
        let mut subs = Map::new();
        for (name, s) in &d.submodules {
            let gens: Vec<Value> = s.generators(m.basis()).iter().map(|g| coeff_map(m.basis(), g)).collect();
            subs.insert(name.clone(), Value::Array(gens));
        }
        v.as_object_mut().expect("object").insert("submodules".into(), Value::Object(subs));
    }
    v
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses a ring or module document. `base` resolves file references to rings.
pub fn parse_str(text: &str, base: Option<&Path>) -> Result<Document> {
    let doc: Doc = serde_json::from_str(text).map_err(GradlabError::from_json)?;
    from_doc(doc, base)
}

fn from_doc(doc: Doc, base: Option<&Path>) -> Result<Document> {
    match doc.kind.as_str() {
        RING_KIND | MONOMIAL_KIND => {
            if doc.submodules.is_some() {
                return Err(GradlabError::semantic("submodules", "only modules carry named submodules"));
            }
            Ok(Document { structure: Structure::Ring(ring_from_doc(doc)?), submodules: Vec::new() })
        }
        MODULE_KIND => module_from_doc(doc, base),
        other => Err(GradlabError::semantic("kind", format!("unknown kind '{other}'"))),
    }
}

fn load_ring(v: Value, base: Option<&Path>) -> Result<FiniteGradedRing> {
    let ring = match v {
        Value::String(file) => {
            let path: PathBuf = base.map(|b| b.join(&file)).unwrap_or_else(|| PathBuf::from(&file));
            let text = std::fs::read_to_string(&path).map_err(|source| GradlabError::Io { path: path.clone(), source })?;
            let doc: Doc = serde_json::from_str(&text).map_err(|e| GradlabError::from_json(e).in_file(&file))?;
            ring_from_doc(doc).map_err(|e| e.in_file(&file))?
        }
        v @ Value::Object(_) => {
            let doc: Doc = serde_json::from_value(v).map_err(|e| GradlabError::semantic("ring", e.to_string()))?;
            ring_from_doc(doc).map_err(|e| match e {
                GradlabError::Semantic { file, path, message } => {
                    GradlabError::Semantic { file, path: format!("ring.{path}"), message }
                }
                e => e,
            })?
        }
        _ => return Err(GradlabError::semantic("ring", "expected an inline ring or a file name")),
    };
    match ring {
        GradedRing::Finite(f) => Ok(f),
        GradedRing::Monomial(_) => Err(GradlabError::semantic("ring", "modules need a finite ring")),
    }
}

fn module_from_doc(doc: Doc, base: Option<&Path>) -> Result<Document> {
    if doc.group.is_some() {
        return Err(GradlabError::semantic("group", "a module takes its group from the ring"));
    }
    let ring = load_ring(doc.ring.ok_or_else(|| missing("ring"))?, base)?;
    let module = if doc.regular == Some(true) {
        if doc.basis.is_some() || doc.action.is_some() {
            return Err(GradlabError::semantic("regular", "a regular module takes basis and action from the ring"));
        }
        FiniteGradedModule::regular(&ring)
    } else {
        let basis = basis_from_doc(ring.group(), doc.basis.ok_or_else(|| missing("basis"))?, "basis")?;
        let (k, n) = (ring.len(), basis.len());
        let rnames: Vec<BasisVector> = ring.basis().vectors().to_vec();
        let mut action = vec![vec![vec![0u64; n]; n]; k];
        let mut seen = vec![vec![false; n]; k];
        for (t, (a, b, m)) in doc.action.unwrap_or_default().iter().enumerate() {
            let path = format!("action[{t}]");
            let i = index_of(&rnames, a, &format!("{path}[0]"))?;
            let j = index_of(&basis, b, &format!("{path}[1]"))?;
            if std::mem::replace(&mut seen[i][j], true) {
                return Err(GradlabError::semantic(path, format!("action {a}*{b} given twice")));
            }
            action[i][j] = coeffs(&basis, m, &format!("{path}[2]"))?;
        }
        FiniteGradedModule::new(ring, basis, action)?
    };
    let mut submodules = Vec::new();
    for (name, gens) in doc.submodules.unwrap_or_default() {
        let s = submodule_from_value(&module, &gens, &format!("submodules.{name}"))?;
        submodules.push((name, s));
    }
    Ok(Document { structure: Structure::Module(module), submodules })
}

fn submodule_from_value(m: &FiniteGradedModule, v: &Value, path: &str) -> Result<GradedSubmodule> {
    let arr = v.as_array().ok_or_else(|| GradlabError::semantic(path, "expected a list of generators"))?;
    let basis = m.basis().vectors().to_vec();
    let gens = arr
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let at = format!("{path}[{i}]");
            let map = g.as_object().ok_or_else(|| GradlabError::semantic(&at, "expected {name: coeff}"))?;
            coeffs(&basis, map, &at)
        })
        .collect::<Result<Vec<_>>>()?;
    m.submodule_generated(&gens).map_err(|e| GradlabError::semantic(path, e.to_string()))
}

/// A submodule literal: a JSON list of homogeneous generators `{name: coeff}`.
pub fn parse_submodule(m: &FiniteGradedModule, text: &str) -> Result<GradedSubmodule> {
    let v: Value = serde_json::from_str(text).map_err(GradlabError::from_json)?;
    submodule_from_value(m, &v, "submodule")
}

pub fn read_file(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|source| GradlabError::Io { path: path.into(), source })?;
    let name = path.display().to_string();
    parse_str(&text, path.parent()).map_err(|e| e.in_file(&name))
}

// ---------------------------------------------------------------- canonical form

fn canonical_order(group: &Group, basis: &GradedBasis) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| {
        let (va, vb) = (basis.vector(a), basis.vector(b));
        (group.witness_key(va.degree), &va.name).cmp(&(group.witness_key(vb.degree), &vb.name))
    });
    idx
}

fn permute(v: &[u64], order: &[usize]) -> Vector {
    order.iter().map(|&i| v[i]).collect()
}

/// Same ring with the basis sorted by degree, then name.
pub fn canonical_ring(f: &FiniteGradedRing) -> FiniteGradedRing {
    let order = canonical_order(f.group(), f.basis());
    let basis = order.iter().map(|&i| f.basis().vector(i).clone()).collect();
    let mul = order
        .iter()
        .map(|&i| order.iter().map(|&j| permute(f.basis_product(i, j), &order)).collect())
        .collect();
    let one = permute(f.one(), &order);
    FiniteGradedRing::new_unchecked(f.group().clone(), basis, mul, one).expect("permuted ring keeps its shape")
}

pub fn canonical_module(m: &FiniteGradedModule) -> FiniteGradedModule {
    let ring = canonical_ring(m.ring());
    if m.is_regular() {
        return FiniteGradedModule::regular(&ring);
    }
    let rorder = canonical_order(m.group(), m.ring().basis());
    let morder = canonical_order(m.group(), m.basis());
    let basis = morder.iter().map(|&j| m.basis().vector(j).clone()).collect();
    let action = rorder
        .iter()
        .map(|&i| morder.iter().map(|&j| permute(m.action_basis(i, j), &morder)).collect())
        .collect();
    FiniteGradedModule::new_unchecked(ring, basis, action).expect("permuted module keeps its shape")
}

pub fn canonical(d: &Document) -> Document {
    match &d.structure {
        Structure::Ring(GradedRing::Finite(f)) => {
            Document { structure: Structure::Ring(GradedRing::Finite(canonical_ring(f))), submodules: Vec::new() }
        }
        Structure::Ring(r) => Document { structure: Structure::Ring(r.clone()), submodules: Vec::new() },
        Structure::Module(m) => {
            let c = canonical_module(m);
            let morder = canonical_order(m.group(), m.basis());
            let mut subs: BTreeMap<String, GradedSubmodule> = BTreeMap::new();
            for (name, s) in &d.submodules {
                let gens: Vec<Vector> = s.generators(m.basis()).iter().map(|g| permute(g, &morder)).collect();
                let t = c.submodule_generated(&gens).expect("generators stay homogeneous");
                subs.insert(name.clone(), t);
            }
            Document { structure: Structure::Module(c), submodules: subs.into_iter().collect() }
        }
    }
}

/// `fmt`: parse, canonicalize, print.
pub fn format_text(text: &str, base: Option<&Path>) -> Result<String> {
    let d = parse_str(text, base)?;
    Ok(to_pretty(&document_to_value(&canonical(&d))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gradlab_core::fixtures::{build_fixture, FIXTURE_NAMES};

    #[test]
    fn every_fixture_round_trips() {
        for name in FIXTURE_NAMES {
            let f = build_fixture(name).unwrap();
            let text = to_pretty(&structure_to_value(&f.structure));
            let back = parse_str(&text, None).unwrap();
            assert_eq!(back.structure, f.structure, "{name}");
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_str("{\n  \"kind\": \"finite_graded_ring\",\n  \"group\": [\n}", None).unwrap_err();
        match e {
            GradlabError::Syntax { line, .. } => assert_eq!(line, 4),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn semantic_errors_carry_paths() {
        let text = r#"{"kind":"finite_graded_ring","group":{"type":"cyclic","n":2},
            "basis":[{"name":"1","order":5,"degree":"0"}],"one":{"1":1},"mul":[["1","x",{"1":1}]]}"#;
        let e = parse_str(text, None).unwrap_err().to_string();
        assert!(e.contains("mul[0][1]"), "{e}");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"kind":"monomial_ring","group":{"type":"integers"},"coeff_field_order":2,"generator_degree":1,"extra":0}"#;
        assert!(parse_str(text, None).is_err());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for name in FIXTURE_NAMES {
            let f = build_fixture(name).unwrap();
            let once = format_text(&to_pretty(&structure_to_value(&f.structure)), None).unwrap();
            let twice = format_text(&once, None).unwrap();
            assert_eq!(once, twice, "{name}");
        }
    }

    #[test]
    fn canonical_form_sorts_basis_by_degree() {
        let text = r#"{"kind":"finite_graded_module",
            "ring":{"kind":"finite_graded_ring","group":{"type":"cyclic","n":2},
                    "basis":[{"name":"1","order":12,"degree":"0"}],"one":{"1":1},"mul":[["1","1",{"1":1}]]},
            "basis":[{"name":"i","order":12,"degree":"1"},{"name":"1","order":12,"degree":"0"}],
            "action":[["1","i",{"i":1}],["1","1",{"1":1}]]}"#;
        let out = format_text(text, None).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        let names: Vec<&str> = v["basis"].as_array().unwrap().iter().map(|b| b["name"].as_str().unwrap()).collect();
        assert_eq!(names, ["1", "i"]);
        let fixture = build_fixture("z12i").unwrap();
        assert_eq!(parse_str(&out, None).unwrap().structure, fixture.structure);
    }

    #[test]
    fn named_submodules_parse() {
        let f = build_fixture("z12i").unwrap();
        let mut v = structure_to_value(&f.structure);
        v["submodules"] = json!({"six": [{"1": 6}, {"i": 6}]});
        let d = parse_str(&v.to_string(), None).unwrap();
        assert_eq!(d.submodules[0].1, *f.submodule("<6>").unwrap());
    }
}
