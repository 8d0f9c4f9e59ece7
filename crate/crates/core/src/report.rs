//! Predicate results: a verdict, a witness and enumeration counts.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::graded::{GradedBasis, GradedSubgroup};
use crate::group::{Degree, Group};

pub const DEFAULT_ELEMENT_CAP: u64 = 100_000;
pub const DEFAULT_LATTICE_CAP: usize = 10_000;

/// Enumeration limits shared by every predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub elements: u64,
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { elements: DEFAULT_ELEMENT_CAP, lattice: DEFAULT_LATTICE_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    AbortedCap,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::AbortedCap => "aborted_cap",
            Verdict::NotApplicable => "not_applicable",
        }
    }

    /// `Some(true/false)` for a decided verdict.
    pub fn decided(self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessValue {
    Degree { degree: Degree, label: String },
    Element { coords: Vec<u64>, text: String },
    Subgroup { generators: Vec<Vec<u64>>, text: String, order: u128 },
    Number(i128),
    Text(String),
}

impl WitnessValue {
    pub fn degree(group: &Group, g: Degree) -> Self {
        WitnessValue::Degree { degree: g, label: group.label(g) }
    }

    pub fn element(basis: &GradedBasis, v: &[u64]) -> Self {
        WitnessValue::Element { coords: v.to_vec(), text: basis.render(v) }
    }

    pub fn subgroup(basis: &GradedBasis, s: &GradedSubgroup) -> Self {
        WitnessValue::Subgroup { generators: s.generators(basis), text: s.render(basis), order: s.order() }
    }

    pub fn text(s: impl Into<String>) -> Self {
        WitnessValue::Text(s.into())
    }

    pub fn render(&self) -> String {
        match self {
            WitnessValue::Degree { label, .. } => label.clone(),
            WitnessValue::Element { text, .. } => text.clone(),
            WitnessValue::Subgroup { text, .. } => text.clone(),
            WitnessValue::Number(n) => n.to_string(),
            WitnessValue::Text(t) => t.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub elements_enumerated: u64,
    /// Cap in force when the verdict is `aborted_cap`.
    pub cap: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub verdict: Verdict,
    /// Class label for classifying predicates (e.g. `first_strong`).
    pub value: Option<String>,
    pub witness: Vec<(String, WitnessValue)>,
    pub stats: Stats,
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        PropertyReport {
            name: name.into(),
            verdict,
            value: None,
            witness: Vec::new(),
            stats: Stats::default(),
            notes: Vec::new(),
        }
    }

    pub fn holds(name: impl Into<String>) -> Self {
        Self::new(name, Verdict::Holds)
    }

    pub fn fails(name: impl Into<String>) -> Self {
        Self::new(name, Verdict::Fails)
    }

    pub fn not_applicable(name: impl Into<String>, why: impl Into<String>) -> Self {
        Self::new(name, Verdict::NotApplicable).note(why)
    }

    /// Report for an enumeration that hit a cap; other errors become notes.
    pub fn from_error(name: impl Into<String>, err: &Error) -> Self {
        match err {
            Error::CapExceeded { limit, .. } => {
                let mut r = Self::new(name, Verdict::AbortedCap).note(err.to_string());
                r.stats.cap = Some(*limit);
                r
            }
            e => Self::not_applicable(name, e.to_string()),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: WitnessValue) -> Self {
        self.witness.push((key.into(), value));
        self
    }

    pub fn value(mut self, v: impl Into<String>) -> Self {
        self.value = Some(v.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn counted(mut self, n: u64) -> Self {
        self.stats.elements_enumerated += n;
        self
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    pub fn witness_value(&self, key: &str) -> Option<&WitnessValue> {
        self.witness.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn is_vacuous(&self) -> bool {
        self.notes.iter().any(|n| n == VACUOUS)
    }
}

/// Note attached to verdicts that hold because the quantified set is empty.
pub const VACUOUS: &str = "vacuous";

/// Result of a classifying predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classified<C> {
    pub class: Option<C>,
    pub report: PropertyReport,
}
