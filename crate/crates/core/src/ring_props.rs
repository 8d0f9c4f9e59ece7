//! Decision procedures for ring-level grading properties.
//!
//! Every predicate is exact. Quantifiers over an infinite grading group are
//! reduced to finitely many degrees: a finite ring graded by `ℤ` has
//! `R_g = 0` outside the finite set `D` of basis degrees, and a monomial ring
//! is handled through its exponent sets.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{CyclicDecomposition, Hom, Subgroup};
use crate::error::{Error, Result};
use crate::graded::{GradedSubgroup, Vector};
use crate::group::{classify_integer_subset, classify_subset, Degree, Group, SubsetClass};
use crate::monomial::MonomialGradedRing;
use crate::periodic::{IntegerSubset, PeriodicSet};
use crate::report::{Caps, Classified, PropertyReport, Verdict, WitnessValue, VACUOUS};
use crate::ring::{FiniteGradedRing, GradedRing, Side};

/// `supp(R, G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Support {
    Finite(Vec<Degree>),
    Integers(IntegerSubset),
}

impl Support {
    pub fn contains(&self, g: Degree) -> bool {
        match self {
            Support::Finite(s) => s.contains(&g),
            Support::Integers(s) => s.contains(g),
        }
    }

    pub fn class(&self, group: &Group) -> SubsetClass {
        match self {
            Support::Finite(s) => classify_subset(group, &s.iter().copied().collect()),
            Support::Integers(s) => classify_integer_subset(s),
        }
    }

    pub fn render(&self, group: &Group) -> String {
        match self {
            Support::Finite(s) => {
                let labels: Vec<String> = s.iter().map(|&g| group.label(g)).collect();
                format!("{{{}}}", labels.join(", "))
            }
            Support::Integers(s) => s.render(),
        }
    }
}

pub fn support(r: &GradedRing) -> Support {
    match r {
        GradedRing::Finite(f) => Support::Finite(f.support()),
        GradedRing::Monomial(m) => match m.support_integers() {
            Some(s) => Support::Integers(s),
            None => Support::Finite(m.support_finite().expect("finite group")),
        },
    }
}

pub fn support_class_report(r: &GradedRing) -> PropertyReport {
    let s = support(r);
    let class = s.class(r.group());
    PropertyReport::new("support_subgroup", Verdict::from_bool(class == SubsetClass::Subgroup))
        .value(class.label())
        .with("support", WitnessValue::text(s.render(r.group())))
}

/// Smallest `h > 0` with `R_h = R_{-h} = 0`, for a finite ring graded by `ℤ`.
fn h_star(r: &FiniteGradedRing) -> Degree {
    let d: BTreeSet<Degree> = r.basis().degrees().into_iter().collect();
    (1..).find(|h| !d.contains(h) && !d.contains(&-h)).expect("finite basis")
}

/// Degrees to quantify over: the whole group when finite; otherwise
/// `D ∪ -D ∪ (D + D) ∪ {0, h*, -h*}`, outside of which every component is 0.
fn degree_window(r: &FiniteGradedRing) -> Vec<Degree> {
    let mut w: Vec<Degree> = match r.group().elements() {
        Some(all) => all,
        None => {
            let d = r.basis().degrees();
            let mut s: BTreeSet<Degree> = BTreeSet::from([0]);
            for &a in &d {
                s.insert(a);
                s.insert(-a);
                for &b in &d {
                    s.insert(a + b);
                }
            }
            let h = h_star(r);
            s.insert(h);
            s.insert(-h);
            s.into_iter().collect()
        }
    };
    r.group().sort_for_witness(&mut w);
    w
}

/// `{ a ∈ R_g : a R_h = 0 }` (Left) or `{ a ∈ R_g : R_h a = 0 }` (Right), in
/// block-local coordinates of `R_g`.
fn annihilator_in_component(r: &FiniteGradedRing, g: Degree, h: Degree, side: Side) -> Subgroup {
    let b = r.basis();
    let bg = b.block(g).expect("g in support");
    let (Some(bh), Some(target)) = (
        b.block(h),
        b.block(if side == Side::Right { r.group().op(h, g) } else { r.group().op(g, h) }),
    ) else {
        return Subgroup::full(&bg.moduli);
    };
    let to = target.degree;
    let mut dst = Vec::new();
    for _ in &bh.indices {
        dst.extend_from_slice(&target.moduli);
    }
    let images = bg
        .indices
        .iter()
        .map(|&i| {
            let mut img = Vec::new();
            for &j in &bh.indices {
                let p = if side == Side::Right { r.basis_product(j, i) } else { r.basis_product(i, j) };
                img.extend(b.local(to, p));
            }
            img
        })
        .collect();
    Hom::new(&bg.moduli, &dst, images).expect("bilinear").kernel()
}

fn component_elements(r: &FiniteGradedRing, g: Degree, cap: u64) -> Result<Vec<Vector>> {
    let b = r.basis();
    match b.block(g) {
        Some(block) => Ok(Subgroup::full(&block.moduli)
            .elements(cap)?
            .into_iter()
            .map(|loc| b.embed(g, &loc))
            .collect()),
        None => Ok(vec![b.zero()]),
    }
}

fn component_order(r: &FiniteGradedRing, g: Degree) -> u128 {
    r.basis()
        .block(g)
        .map(|b| b.moduli.iter().map(|&n| n as u128).product())
        .unwrap_or(1)
}

fn cap_check(r: &FiniteGradedRing, g: Degree, cap: u64, name: &str) -> Option<PropertyReport> {
    (component_order(r, g) > cap as u128).then(|| {
        PropertyReport::from_error(
            name,
            &Error::CapExceeded { what: format!("component {}", r.group().label(g)), limit: cap },
        )
    })
}

// ---------------------------------------------------------------- weak

pub fn is_weak(r: &GradedRing) -> PropertyReport {
    const NAME: &str = "weak";
    let group = r.group();
    match r {
        GradedRing::Finite(f) => {
            let supp = f.support();
            let mut missing: Vec<Degree> = supp
                .iter()
                .map(|&g| group.inverse(g))
                .filter(|h| !supp.contains(h))
                .collect();
            group.sort_for_witness(&mut missing);
            match missing.first() {
                None => PropertyReport::holds(NAME),
                Some(&g) => weak_failure(group, g),
            }
        }
        GradedRing::Monomial(m) => match (group, m.generator_degree()) {
            (Group::Integers, gamma) if gamma != 0 => weak_failure(group, -gamma),
            // the support is the cyclic subgroup generated by γ
            _ => PropertyReport::holds(NAME),
        },
    }
}

fn weak_failure(group: &Group, g: Degree) -> PropertyReport {
    PropertyReport::fails("weak")
        .with("g", WitnessValue::degree(group, g))
        .with("g_inverse", WitnessValue::degree(group, group.inverse(g)))
        .note(format!(
            "R_{} = 0 but R_{} != 0",
            group.label(g),
            group.label(group.inverse(g))
        ))
}

// ---------------------------------------------------------------- degeneracy

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegeneracyClass {
    Faithful,
    NondegenerateNotFaithful,
    Degenerate,
}

impl DegeneracyClass {
    pub fn label(self) -> &'static str {
        match self {
            DegeneracyClass::Faithful => "faithful",
            DegeneracyClass::NondegenerateNotFaithful => "nondegenerate_not_faithful",
            DegeneracyClass::Degenerate => "degenerate",
        }
    }

    pub fn is_nondegenerate(self) -> bool {
        self != DegeneracyClass::Degenerate
    }

    pub fn is_faithful(self) -> bool {
        self == DegeneracyClass::Faithful
    }
}

fn classified<C: Copy>(class: C, label: &str, report: PropertyReport) -> Classified<C> {
    Classified { class: Some(class), report: report.value(label) }
}

pub fn degeneracy_class(r: &GradedRing, caps: &Caps) -> Classified<DegeneracyClass> {
    match r {
        GradedRing::Finite(f) => degeneracy_finite(f, caps),
        GradedRing::Monomial(m) => degeneracy_monomial(m),
    }
}

fn annihilation_witness(
    f: &FiniteGradedRing,
    g: Degree,
    h: Degree,
) -> Option<(Side, Vector)> {
    for side in [Side::Left, Side::Right] {
        let ker = annihilator_in_component(f, g, h, side);
        if let Some(a) = ker.first_nonzero() {
            return Some((side, f.basis().embed(g, &a)));
        }
    }
    None
}

fn annihilation_report(f: &FiniteGradedRing, class: DegeneracyClass, g: Degree, h: Degree, side: Side, a: &[u64]) -> Classified<DegeneracyClass> {
    let group = f.group();
    let rel = if side == Side::Left { "a R_h = 0" } else { "R_h a = 0" };
    let rep = PropertyReport::holds("degeneracy")
        .with("g", WitnessValue::degree(group, g))
        .with("a", WitnessValue::element(f.basis(), a))
        .with("h", WitnessValue::degree(group, h))
        .with("side", WitnessValue::text(side.label()))
        .note(rel);
    classified(class, class.label(), rep)
}

fn degeneracy_finite(f: &FiniteGradedRing, _caps: &Caps) -> Classified<DegeneracyClass> {
    let group = f.group();
    let supp = f.support();
    for &g in &supp {
        let h = group.inverse(g);
        if let Some((side, a)) = annihilation_witness(f, g, h) {
            return annihilation_report(f, DegeneracyClass::Degenerate, g, h, side, &a);
        }
    }
    let window = degree_window(f);
    for &g in &supp {
        for &h in &window {
            if let Some((side, a)) = annihilation_witness(f, g, h) {
                return annihilation_report(f, DegeneracyClass::NondegenerateNotFaithful, g, h, side, &a);
            }
        }
    }
    classified(DegeneracyClass::Faithful, "faithful", PropertyReport::holds("degeneracy"))
}

fn degeneracy_monomial(m: &MonomialGradedRing) -> Classified<DegeneracyClass> {
    // K[x] is a domain: a R_h = 0 with a != 0 happens exactly when R_h = 0
    let group = m.group();
    let weak = is_weak(&GradedRing::Monomial(m.clone()));
    let power = |g: Degree| {
        let j = m.exponents(g).min_element().expect("g in support");
        WitnessValue::text(if j == 0 { "1".to_string() } else { format!("x^{j}") })
    };
    if weak.is_fails() {
        let Some(WitnessValue::Degree { degree: h, .. }) = weak.witness_value("g").cloned() else {
            unreachable!()
        };
        let g = group.inverse(h);
        let rep = PropertyReport::holds("degeneracy")
            .with("g", WitnessValue::degree(group, g))
            .with("a", power(g))
            .with("h", WitnessValue::degree(group, h))
            .note("R_h = 0");
        return classified(DegeneracyClass::Degenerate, "degenerate", rep);
    }
    let outside = match group {
        Group::Integers => Some((1..).flat_map(|k| [k, -k]).find(|&h| !m.in_support(h)).expect("Z is infinite")),
        Group::Finite(_) => {
            let mut all = group.elements().expect("finite");
            group.sort_for_witness(&mut all);
            all.into_iter().find(|&h| !m.in_support(h))
        }
    };
    match outside {
        Some(h) => {
            let e = group.identity();
            let rep = PropertyReport::holds("degeneracy")
                .with("g", WitnessValue::degree(group, e))
                .with("a", power(e))
                .with("h", WitnessValue::degree(group, h))
                .note("R_h = 0");
            classified(DegeneracyClass::NondegenerateNotFaithful, "nondegenerate_not_faithful", rep)
        }
        None => classified(DegeneracyClass::Faithful, "faithful", PropertyReport::holds("degeneracy")),
    }
}

// ---------------------------------------------------------------- regular

pub fn is_regular(r: &GradedRing, caps: &Caps) -> PropertyReport {
    const NAME: &str = "regular";
    let f = match r {
        GradedRing::Finite(f) => f,
        GradedRing::Monomial(m) => {
            // x ∉ x R_{γ^{-1}} x ⊆ x^2 K[x]
            return PropertyReport::fails(NAME)
                .with("g", WitnessValue::degree(m.group(), m.generator_degree()))
                .with("a", WitnessValue::text("x"));
        }
    };
    let group = f.group();
    let b = f.basis();
    let mut count = 0;
    for g in f.support() {
        if let Some(rep) = cap_check(f, g, caps.elements, NAME) {
            return rep.counted(count);
        }
        let gi = group.inverse(g);
        for a in component_elements(f, g, caps.elements).expect("checked").into_iter().skip(1) {
            count += 1;
            let ok = match b.block(gi) {
                None => false,
                Some(bi) => {
                    let gens: Vec<Vector> = bi
                        .indices
                        .iter()
                        .map(|&j| b.local(g, &f.mul(&f.mul(&a, &b.unit(j)), &a)))
                        .collect();
                    let bg = b.block(g).expect("support");
                    Subgroup::generated(&bg.moduli, gens.iter().map(|v| v.as_slice())).contains(&b.local(g, &a))
                }
            };
            if !ok {
                return PropertyReport::fails(NAME)
                    .with("g", WitnessValue::degree(group, g))
                    .with("a", WitnessValue::element(b, &a))
                    .counted(count);
            }
        }
    }
    PropertyReport::holds(NAME).counted(count)
}

// ---------------------------------------------------------------- strongness

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StrongnessClass {
    Strong,
    FirstStrong,
    SecondStrong,
    None,
}

impl StrongnessClass {
    pub fn label(self) -> &'static str {
        match self {
            StrongnessClass::Strong => "strong",
            StrongnessClass::FirstStrong => "first_strong",
            StrongnessClass::SecondStrong => "second_strong",
            StrongnessClass::None => "none",
        }
    }
}

fn product_is_full(f: &FiniteGradedRing, g: Degree, h: Degree) -> bool {
    match f.component_product_local(g, h) {
        None => true,
        Some(p) => p.is_full(),
    }
}

fn pair_failure(name: &str, group: &Group, g: Degree, h: Degree) -> PropertyReport {
    PropertyReport::fails(name)
        .with("g", WitnessValue::degree(group, g))
        .with("h", WitnessValue::degree(group, h))
        .note(format!(
            "R_{} R_{} != R_{}",
            group.label(g),
            group.label(h),
            group.label(group.op(g, h))
        ))
}

pub fn is_strong(r: &GradedRing) -> PropertyReport {
    const NAME: &str = "strong";
    match r {
        GradedRing::Finite(f) => {
            let group = f.group();
            if f.is_zero_ring() {
                return PropertyReport::holds(NAME);
            }
            if !group.is_finite() {
                let h = h_star(f);
                return pair_failure(NAME, group, -h, h);
            }
            let all = degree_window(f);
            for &g in &all {
                for &h in &all {
                    if !product_is_full(f, g, h) {
                        return pair_failure(NAME, group, g, h);
                    }
                }
            }
            PropertyReport::holds(NAME)
        }
        GradedRing::Monomial(m) => {
            let group = m.group();
            match group {
                Group::Integers => {
                    let gamma = m.generator_degree();
                    let h = if gamma == 0 { 1 } else { gamma };
                    pair_failure(NAME, group, -h, h)
                }
                Group::Finite(_) => {
                    let mut all = group.elements().expect("finite");
                    group.sort_for_witness(&mut all);
                    for &g in &all {
                        for &h in &all {
                            if m.product_exponents(g, h) != m.exponents(group.op(g, h)) {
                                return pair_failure(NAME, group, g, h);
                            }
                        }
                    }
                    PropertyReport::holds(NAME)
                }
            }
        }
    }
}

pub fn is_first_strong(r: &GradedRing) -> PropertyReport {
    const NAME: &str = "first_strong";
    let group = r.group();
    let fail = |g: Degree| {
        PropertyReport::fails(NAME)
            .with("g", WitnessValue::degree(group, g))
            .note(format!("1 not in R_{} R_{}", group.label(g), group.label(group.inverse(g))))
    };
    match r {
        GradedRing::Finite(f) => {
            let e = group.identity();
            for g in f.support() {
                let gi = group.inverse(g);
                let ok = f.basis().block(gi).is_some()
                    && f.component_product_local(g, gi)
                        .is_some_and(|p| p.contains(&f.basis().local(e, f.one())));
                if !ok {
                    return fail(g);
                }
            }
            PropertyReport::holds(NAME)
        }
        GradedRing::Monomial(m) => match group {
            Group::Integers => match m.generator_degree() {
                0 => PropertyReport::holds(NAME),
                gamma => fail(gamma),
            },
            Group::Finite(_) => {
                for g in m.support_finite().expect("finite") {
                    if !m.product_exponents(g, group.inverse(g)).contains(0) {
                        return fail(g);
                    }
                }
                PropertyReport::holds(NAME)
            }
        },
    }
}

pub fn is_second_strong(r: &GradedRing) -> PropertyReport {
    const NAME: &str = "second_strong";
    let group = r.group();
    let supp = support(r);
    let class = supp.class(group);
    if class == SubsetClass::NotMonoid {
        return PropertyReport::fails(NAME)
            .with("support", WitnessValue::text(supp.render(group)))
            .note("support is not a monoid");
    }
    match r {
        GradedRing::Finite(f) => {
            let s = f.support();
            for &g in &s {
                for &h in &s {
                    if !product_is_full(f, g, h) {
                        return pair_failure(NAME, group, g, h);
                    }
                }
            }
            PropertyReport::holds(NAME)
        }
        GradedRing::Monomial(m) => match group {
            // components are single monomials x^j, and x^i x^j = x^{i+j}
            Group::Integers => PropertyReport::holds(NAME),
            Group::Finite(_) => {
                let s = m.support_finite().expect("finite");
                for &g in &s {
                    for &h in &s {
                        if m.product_exponents(g, h) != m.exponents(group.op(g, h)) {
                            return pair_failure(NAME, group, g, h);
                        }
                    }
                }
                PropertyReport::holds(NAME)
            }
        },
    }
}

pub fn strongness_class(r: &GradedRing) -> Classified<StrongnessClass> {
    let strong = is_strong(r);
    let first = is_first_strong(r);
    let second = is_second_strong(r);
    let zero = r.as_finite().is_some_and(|f| f.is_zero_ring());
    debug_assert!(zero || !strong.is_holds() || first.is_holds(), "strong without first strong");
    debug_assert!(zero || !first.is_holds() || second.is_holds(), "first strong without second strong");
    let (class, next) = if strong.is_holds() {
        (StrongnessClass::Strong, None)
    } else if first.is_holds() {
        (StrongnessClass::FirstStrong, Some(strong))
    } else if second.is_holds() {
        (StrongnessClass::SecondStrong, Some(first))
    } else {
        (StrongnessClass::None, Some(second))
    };
    let mut rep = PropertyReport::holds("strongness");
    if let Some(n) = next {
        rep.witness = n.witness;
        rep.notes = n.notes;
        rep = rep.note(format!("{} fails", n.name));
    }
    classified(class, class.label(), rep)
}

// ---------------------------------------------------------------- crossed

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossedClass {
    Crossed,
    WeaklyCrossed,
    None,
}

impl CrossedClass {
    pub fn label(self) -> &'static str {
        match self {
            CrossedClass::Crossed => "crossed",
            CrossedClass::WeaklyCrossed => "weakly_crossed",
            CrossedClass::None => "none",
        }
    }
}

/// First degree in `degrees` whose component has no unit.
fn first_without_unit(f: &FiniteGradedRing, degrees: &[Degree], caps: &Caps) -> Result<Option<Degree>> {
    for &g in degrees {
        if f.basis().block(g).is_none() || f.homogeneous_unit_search(g, caps.elements)?.is_none() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

pub fn crossed_class(r: &GradedRing, caps: &Caps) -> Classified<CrossedClass> {
    const NAME: &str = "crossed";
    let group = r.group();
    let no_unit = |g: Degree| WitnessValue::degree(group, g);
    match r {
        GradedRing::Finite(f) => {
            let supp = f.support();
            let weak = match first_without_unit(f, &supp, caps) {
                Ok(w) => w,
                Err(e) => return Classified { class: None, report: PropertyReport::from_error(NAME, &e) },
            };
            if let Some(g) = weak {
                let rep = PropertyReport::holds(NAME).with("g", no_unit(g)).note("no unit in R_g");
                return classified(CrossedClass::None, "none", rep);
            }
            let outside: Option<Degree> = if f.is_zero_ring() {
                None
            } else if group.is_finite() {
                degree_window(f).into_iter().find(|g| !supp.contains(g))
            } else {
                Some(h_star(f))
            };
            match outside {
                Some(g) => {
                    let rep = PropertyReport::holds(NAME).with("g", no_unit(g)).note("R_g = 0");
                    classified(CrossedClass::WeaklyCrossed, "weakly_crossed", rep)
                }
                None => classified(CrossedClass::Crossed, "crossed", PropertyReport::holds(NAME)),
            }
        }
        GradedRing::Monomial(m) => {
            // the units of K[x] are the nonzero constants, all of degree e
            let e = group.identity();
            let supp = support(r);
            let nontrivial = match &supp {
                Support::Finite(s) => s.iter().copied().find(|&g| g != e),
                Support::Integers(_) => (m.generator_degree() != 0).then(|| m.generator_degree()),
            };
            if let Some(g) = nontrivial {
                let rep = PropertyReport::holds(NAME).with("g", no_unit(g)).note("no unit in R_g");
                return classified(CrossedClass::None, "none", rep);
            }
            let outside = match group {
                Group::Integers => Some(1),
                Group::Finite(_) => group.elements().expect("finite").into_iter().find(|&g| g != e),
            };
            match outside {
                Some(g) => {
                    let rep = PropertyReport::holds(NAME).with("g", no_unit(g)).note("R_g = 0");
                    classified(CrossedClass::WeaklyCrossed, "weakly_crossed", rep)
                }
                None => classified(CrossedClass::Crossed, "crossed", PropertyReport::holds(NAME)),
            }
        }
    }
}

// ---------------------------------------------------------------- invertible

pub fn is_invertible_graded(r: &GradedRing, caps: &Caps) -> PropertyReport {
    const NAME: &str = "invertible";
    let f = match r {
        GradedRing::Finite(f) => f,
        GradedRing::Monomial(m) => {
            let e = m.group().identity();
            let ee = m.exponents(e);
            return match ee.elements_below(ee.threshold() + ee.period() + 1).into_iter().find(|&j| j > 0) {
                None => PropertyReport::holds(NAME).note("R_e = K"),
                Some(j) => PropertyReport::fails(NAME)
                    .with("x", WitnessValue::text(format!("x^{j}")))
                    .note("non-constant element of R_e has no inverse"),
            };
        }
    };
    let e = f.group().identity();
    let b = f.basis();
    let Some(block) = b.block(e) else {
        return PropertyReport::fails(NAME).note("zero ring");
    };
    for &i in &block.indices {
        for &j in &block.indices {
            if f.basis_product(i, j) != f.basis_product(j, i) {
                return PropertyReport::fails(NAME)
                    .with("a", WitnessValue::element(b, &b.unit(i)))
                    .with("b", WitnessValue::element(b, &b.unit(j)))
                    .note("R_e is not commutative");
            }
        }
    }
    if let Some(rep) = cap_check(f, e, caps.elements, NAME) {
        return rep;
    }
    let mut count = 0;
    for x in component_elements(f, e, caps.elements).expect("checked").into_iter().skip(1) {
        count += 1;
        let (_, hom) = f.mul_map(&x, e, Side::Left).expect("x in R_e");
        if let Some(y) = hom.kernel().first_nonzero() {
            return PropertyReport::fails(NAME)
                .with("a", WitnessValue::element(b, &x))
                .with("b", WitnessValue::element(b, &b.embed(e, &y)))
                .note("zero divisors in R_e")
                .counted(count);
        }
        if hom.solve(&b.local(e, f.one())).is_none() {
            return PropertyReport::fails(NAME)
                .with("a", WitnessValue::element(b, &x))
                .note("no inverse in R_e")
                .counted(count);
        }
    }
    PropertyReport::holds(NAME).counted(count)
}

/// Every nonzero element of `R_e` has a two-sided inverse in `R_e`.
pub fn identity_component_is_division_ring(f: &FiniteGradedRing, caps: &Caps) -> PropertyReport {
    const NAME: &str = "identity_component_division_ring";
    let e = f.group().identity();
    if f.basis().block(e).is_none() {
        return PropertyReport::fails(NAME).note("zero ring");
    }
    if let Some(rep) = cap_check(f, e, caps.elements, NAME) {
        return rep;
    }
    let mut count = 0;
    for x in component_elements(f, e, caps.elements).expect("checked").into_iter().skip(1) {
        count += 1;
        if f.inverse_in(&x, e).is_none() {
            return PropertyReport::fails(NAME)
                .with("a", WitnessValue::element(f.basis(), &x))
                .counted(count);
        }
    }
    PropertyReport::holds(NAME).counted(count)
}

// ---------------------------------------------------------------- zero divisors

/// `(x, y)` nonzero with `xy = 0`, smallest `x` first.
pub fn zero_divisor_witness(r: &GradedRing, caps: &Caps) -> Result<Option<(Vector, Vector)>> {
    let f = match r {
        GradedRing::Finite(f) => f,
        GradedRing::Monomial(_) => return Ok(None),
    };
    if f.order() > caps.elements as u128 {
        return Err(Error::CapExceeded { what: "ring elements".to_string(), limit: caps.elements });
    }
    for x in f.elements(caps.elements)?.into_iter().skip(1) {
        if let Some(y) = f.left_mul_hom(&x).kernel().first_nonzero() {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

pub fn zero_divisor_report(r: &GradedRing, caps: &Caps) -> PropertyReport {
    const NAME: &str = "no_zero_divisors";
    match zero_divisor_witness(r, caps) {
        Err(e) => PropertyReport::from_error(NAME, &e),
        Ok(None) => PropertyReport::holds(NAME),
        Ok(Some((x, y))) => {
            let b = r.as_finite().expect("finite").basis();
            PropertyReport::fails(NAME)
                .with("a", WitnessValue::element(b, &x))
                .with("b", WitnessValue::element(b, &y))
        }
    }
}

pub fn is_commutative(r: &GradedRing) -> bool {
    match r {
        GradedRing::Finite(f) => f.is_commutative(),
        GradedRing::Monomial(_) => true,
    }
}

// ---------------------------------------------------------------- graded simple

pub fn is_graded_simple(r: &GradedRing, caps: &Caps) -> PropertyReport {
    const NAME: &str = "graded_simple";
    let f = match r {
        GradedRing::Finite(f) => f,
        GradedRing::Monomial(m) => {
            return PropertyReport::fails(NAME)
                .with("a", WitnessValue::text("x"))
                .with("g", WitnessValue::degree(m.group(), m.generator_degree()))
                .note("(x) is a proper graded ideal");
        }
    };
    if f.is_zero_ring() {
        return PropertyReport::fails(NAME).note("zero ring");
    }
    let b = f.basis();
    let homs = match GradedSubgroup::full(b).homogeneous_elements(b, caps.elements) {
        Ok(h) => h,
        Err(e) => return PropertyReport::from_error(NAME, &e),
    };
    let mut seen: BTreeSet<GradedSubgroup> = BTreeSet::new();
    let mut count = 0;
    let mut ordered = homs;
    ordered.sort_by_key(|(g, v)| (f.group().witness_key(*g), v.clone()));
    for (g, a) in ordered {
        count += 1;
        let ideal = f.ideal_generated(core::slice::from_ref(&a), Side::TwoSided).expect("homogeneous");
        if !ideal.is_full() {
            return PropertyReport::fails(NAME)
                .with("g", WitnessValue::degree(f.group(), g))
                .with("a", WitnessValue::element(b, &a))
                .with("ideal", WitnessValue::subgroup(b, &ideal))
                .counted(count);
        }
        seen.insert(ideal);
    }
    PropertyReport::holds(NAME).counted(count)
}

// ---------------------------------------------------------------- identity component map

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCheck {
    pub g: Degree,
    pub h: Degree,
    /// `|R_g + R_h| / |R_g|`, when finite.
    pub index: Option<u128>,
    /// `|R_h|`, when finite.
    pub component_order: Option<u128>,
    /// `x ↦ x + R_g` is a bijection `R_h → (R_g + R_h)/R_g`.
    pub bijective: bool,
}

/// Checks on `T : R → R_e`, `x ↦ x_e`, and on the maps `R → R/R_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearReport {
    pub linear: bool,
    pub kernel_meets_identity_trivially: bool,
    pub components_in_kernel: bool,
    pub surjective: bool,
    pub noninjective_iff_nontrivial: bool,
    pub quotient_checks: Vec<QuotientCheck>,
    pub quotient_kernels: bool,
    pub report: PropertyReport,
}

impl LinearReport {
    fn finish(mut self) -> Self {
        let all = self.linear
            && self.kernel_meets_identity_trivially
            && self.components_in_kernel
            && self.surjective
            && self.noninjective_iff_nontrivial
            && self.quotient_kernels
            && self.quotient_checks.iter().all(|q| {
                q.bijective && (q.index.is_none() || q.index == q.component_order)
            });
        self.report.verdict = Verdict::from_bool(all);
        let flags = [
            ("linear", self.linear),
            ("kernel_meets_identity_trivially", self.kernel_meets_identity_trivially),
            ("components_in_kernel", self.components_in_kernel),
            ("surjective", self.surjective),
            ("noninjective_iff_nontrivial", self.noninjective_iff_nontrivial),
            ("quotient_kernels", self.quotient_kernels),
        ];
        for (k, v) in flags {
            self.report.witness.push((k.to_string(), WitnessValue::text(if v { "true" } else { "false" })));
        }
        self
    }

    pub fn quotient_check(&self, g: Degree, h: Degree) -> Option<&QuotientCheck> {
        self.quotient_checks.iter().find(|q| q.g == g && q.h == h)
    }
}

pub fn identity_component_linear_report(r: &GradedRing, caps: &Caps) -> Option<LinearReport> {
    const NAME: &str = "identity_component_map";
    let inv = is_invertible_graded(r, caps);
    if !inv.is_holds() {
        return None;
    }
    let empty = |rep| LinearReport {
        linear: true,
        kernel_meets_identity_trivially: true,
        components_in_kernel: true,
        surjective: true,
        noninjective_iff_nontrivial: true,
        quotient_checks: Vec::new(),
        quotient_kernels: true,
        report: rep,
    };
    match r {
        GradedRing::Monomial(m) => {
            // R_e = K, T is the constant term; components are spanned by
            // disjoint sets of monomials
            let group = m.group();
            let e = group.identity();
            let ee = m.exponents(e);
            let mut rep = empty(PropertyReport::holds(NAME));
            rep.kernel_meets_identity_trivially = ee == PeriodicSet::from_finite([0]);
            let mut window: Vec<Degree> = match group {
                Group::Integers => {
                    let gamma = m.generator_degree().abs().max(1);
                    (-3 * gamma..=3 * gamma).collect()
                }
                Group::Finite(_) => group.elements().expect("finite"),
            };
            group.sort_for_witness(&mut window);
            rep.components_in_kernel = window.iter().filter(|&&g| g != e).all(|&g| !m.exponents(g).contains(0));
            rep.noninjective_iff_nontrivial = window.iter().any(|&g| g != e && m.in_support(g));
            for &g in &window {
                for &h in &window {
                    if g != h {
                        let disjoint = m.exponents(g).intersection(&m.exponents(h)).is_empty();
                        rep.quotient_checks.push(QuotientCheck { g, h, index: None, component_order: None, bijective: disjoint });
                    }
                }
            }
            rep.report = rep.report.note("checked on exponent sets");
            Some(rep.finish())
        }
        GradedRing::Finite(f) => Some(linear_report_finite(f, empty(PropertyReport::holds(NAME))).finish()),
    }
}

fn linear_report_finite(f: &FiniteGradedRing, mut rep: LinearReport) -> LinearReport {
    let b = f.basis();
    let group = f.group();
    let e = group.identity();
    let m = b.moduli();
    let block_e = b.block(e).expect("invertible implies nonzero");
    // T on basis vectors; T(x) for arbitrary x follows by additivity
    let images: Vec<Vector> = (0..f.len())
        .map(|i| b.local(e, &b.decompose(&b.unit(i)).remove(&e).unwrap_or_else(|| b.zero())))
        .collect();
    let t = Hom::new(m, &block_e.moduli, images).expect("projection");
    let apply = |x: &[u64]| b.embed(e, &t.apply(x));
    // R_e-linearity on generators: T(r x) = r T(x) for r, x basis vectors
    rep.linear = block_e.indices.iter().all(|&ri| {
        (0..f.len()).all(|xi| {
            let rv = b.unit(ri);
            let xv = b.unit(xi);
            apply(&f.mul(&rv, &xv)) == f.mul(&rv, &apply(&xv))
        })
    });
    let kernel = t.kernel();
    let comp = |g: Degree| GradedSubgroup::component(b, g).to_subgroup(b);
    rep.kernel_meets_identity_trivially = kernel.intersection(&comp(e)).is_zero();
    let supp = f.support();
    rep.components_in_kernel = supp.iter().filter(|&&g| g != e).all(|&g| comp(g).is_subgroup_of(&kernel));
    rep.surjective = t.is_surjective();
    let nontrivial = supp.iter().any(|&g| g != e);
    rep.noninjective_iff_nontrivial = (!kernel.is_zero()) == nontrivial;
    rep.report = rep
        .report
        .with("kernel_order", WitnessValue::Number(kernel.order() as i128));
    let mut window = degree_window(f);
    window.retain(|g| supp.contains(g) || group.is_finite());
    for &g in &window {
        let rg = comp(g);
        let quotient = CyclicDecomposition::quotient(&rg);
        let images = (0..f.len()).map(|i| quotient.coords(&b.unit(i))).collect();
        let proj = Hom::new(m, &quotient.orders, images).expect("projection");
        if proj.kernel() != rg {
            rep.quotient_kernels = false;
        }
        for &h in &window {
            if g == h {
                continue;
            }
            let rh = comp(h);
            let index = rg.sum(&rh).order() / rg.order();
            let image = proj.image(&rh);
            let injective = rh.intersection(&rg).is_zero();
            let bijective = injective && image.order() == index;
            rep.quotient_checks.push(QuotientCheck {
                g,
                h,
                index: Some(index),
                component_order: Some(rh.order()),
                bijective,
            });
        }
    }
    rep
}

// ---------------------------------------------------------------- components over R_e

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentModuleReport {
    pub cyclic: PropertyReport,
    pub simple: PropertyReport,
}

pub fn component_as_identity_module(r: &GradedRing, g: Degree, caps: &Caps) -> ComponentModuleReport {
    let group = r.group();
    let f = match r {
        GradedRing::Finite(f) => f,
        GradedRing::Monomial(m) => {
            let eg = m.exponents(g);
            if eg.is_empty() {
                let z = || PropertyReport::holds("").note("zero component");
                return ComponentModuleReport { cyclic: named(z(), "component_cyclic"), simple: named(z(), "component_simple") };
            }
            let j = eg.min_element().expect("nonempty");
            let gen = WitnessValue::text(if j == 0 { "1".to_string() } else { format!("x^{j}") });
            let cyclic = PropertyReport::holds("component_cyclic").with("r", gen);
            let simple = if eg.is_finite() && eg.elements_below(eg.threshold()).len() == 1 {
                PropertyReport::holds("component_simple")
            } else {
                let next = eg.elements_below(eg.threshold() + eg.period() + j + 2).into_iter().find(|&k| k > j);
                PropertyReport::fails("component_simple")
                    .with("x", WitnessValue::text(format!("x^{}", next.unwrap_or(j + 1))))
            };
            return ComponentModuleReport { cyclic, simple };
        }
    };
    let b = f.basis();
    let e = group.identity();
    let Some(block) = b.block(g) else {
        let z = |n: &str| PropertyReport::holds(n).note("zero component");
        return ComponentModuleReport { cyclic: z("component_cyclic"), simple: z("component_simple") };
    };
    let full = Subgroup::full(&block.moduli);
    let elems = match component_elements(f, g, caps.elements) {
        Ok(v) => v,
        Err(err) => {
            return ComponentModuleReport {
                cyclic: PropertyReport::from_error("component_cyclic", &err),
                simple: PropertyReport::from_error("component_simple", &err),
            }
        }
    };
    let span = |x: &Vector| -> Subgroup {
        match f.mul_map(x, e, Side::Right) {
            Some((_, hom)) => hom.image_of_all(),
            None => Subgroup::zero(&block.moduli),
        }
    };
    let mut cyclic = PropertyReport::fails("component_cyclic");
    let mut simple = PropertyReport::holds("component_simple");
    let mut simple_done = false;
    let mut count = 0;
    for x in elems.iter().skip(1) {
        count += 1;
        let s = span(x);
        if s == full {
            if !cyclic.is_holds() {
                cyclic = PropertyReport::holds("component_cyclic").with("r", WitnessValue::element(b, x));
            }
        } else if !simple_done {
            let sub = GradedSubgroup::generated_by_components(
                b,
                s.generators().map(|v| b.embed(g, v)).collect::<Vec<_>>().iter().map(|v| v.as_slice()),
            );
            simple = PropertyReport::fails("component_simple")
                .with("x", WitnessValue::element(b, x))
                .with("submodule", WitnessValue::subgroup(b, &sub));
            simple_done = true;
        }
        if cyclic.is_holds() && simple_done {
            break;
        }
    }
    ComponentModuleReport { cyclic: cyclic.counted(count), simple: simple.counted(count) }
}

fn named(mut r: PropertyReport, name: &str) -> PropertyReport {
    r.name = name.to_string();
    r
}

// ---------------------------------------------------------------- ideals and primes

/// Every graded two-sided ideal, smallest first.
pub fn enumerate_graded_ideals(f: &FiniteGradedRing, caps: &Caps) -> Result<Vec<GradedSubgroup>> {
    let b = f.basis();
    let homs = GradedSubgroup::full(b).homogeneous_elements(b, caps.elements)?;
    let mut principal: BTreeSet<GradedSubgroup> = BTreeSet::new();
    for (_, a) in &homs {
        principal.insert(f.ideal_generated(core::slice::from_ref(a), Side::TwoSided)?);
    }
    join_closure(GradedSubgroup::zero(b), principal, caps.lattice)
}

/// Closure of `{zero} ∪ atoms` under sums.
pub(crate) fn join_closure(
    zero: GradedSubgroup,
    atoms: BTreeSet<GradedSubgroup>,
    cap: usize,
) -> Result<Vec<GradedSubgroup>> {
    let mut all: BTreeSet<GradedSubgroup> = atoms.clone();
    all.insert(zero);
    let mut frontier: Vec<GradedSubgroup> = all.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        for p in &atoms {
            let s = a.sum(p);
            if !all.contains(&s) {
                all.insert(s.clone());
                frontier.push(s);
                if all.len() > cap {
                    return Err(Error::CapExceeded { what: "lattice members".to_string(), limit: cap as u64 });
                }
            }
        }
    }
    Ok(all.into_iter().collect())
}

/// Proper graded ideal `B` with `ab ∈ B ⇒ a ∈ B or b ∈ B` on homogeneous elements.
pub fn is_graded_prime_ideal(f: &FiniteGradedRing, ideal: &GradedSubgroup, caps: &Caps) -> PropertyReport {
    const NAME: &str = "graded_prime_ideal";
    if ideal.is_full() {
        return PropertyReport::not_applicable(NAME, "ideal is not proper");
    }
    let b = f.basis();
    let group = f.group();
    let homs = match GradedSubgroup::full(b).homogeneous_elements(b, caps.elements) {
        Ok(h) => h,
        Err(e) => return PropertyReport::from_error(NAME, &e),
    };
    let mut count = 0;
    for (g, a) in homs {
        if ideal.contains(b, &a) {
            continue;
        }
        count += 1;
        for block in b.blocks() {
            let h = block.degree;
            let Some((to, hom)) = f.mul_map(&a, h, Side::Left) else {
                continue;
            };
            let target = ideal.part(b, to).expect("block exists");
            let pre = hom.preimage(target);
            let bh = ideal.part(b, h).expect("block exists");
            if !pre.is_subgroup_of(bh) {
                let witness = pre
                    .elements(caps.elements)
                    .ok()
                    .and_then(|els| els.into_iter().find(|v| !bh.contains(v)))
                    .unwrap_or_else(|| pre.generators().find(|v| !bh.contains(v)).expect("not a subgroup").to_vec());
                return PropertyReport::fails(NAME)
                    .with("a", WitnessValue::element(b, &a))
                    .with("b", WitnessValue::element(b, &b.embed(h, &witness)))
                    .with("g", WitnessValue::degree(group, g))
                    .counted(count);
            }
        }
        // a R_h with R_{gh} = 0 lands in B trivially
        let _ = g;
    }
    PropertyReport::holds(NAME).counted(count)
}

pub fn enumerate_graded_primes_ring(f: &FiniteGradedRing, caps: &Caps) -> Result<Vec<GradedSubgroup>> {
    let ideals = enumerate_graded_ideals(f, caps)?;
    let mut out = Vec::new();
    for i in ideals {
        if i.is_full() {
            continue;
        }
        let rep = is_graded_prime_ideal(f, &i, caps);
        match rep.verdict {
            Verdict::Holds => out.push(i),
            Verdict::AbortedCap => {
                return Err(Error::CapExceeded { what: "prime test".to_string(), limit: caps.elements })
            }
            _ => {}
        }
    }
    Ok(out)
}

fn semi_essential_against(
    name: &str,
    f: &FiniteGradedRing,
    ideal: &GradedSubgroup,
    primes: &[GradedSubgroup],
) -> PropertyReport {
    let b = f.basis();
    let nonzero: Vec<&GradedSubgroup> = primes.iter().filter(|p| !p.is_zero()).collect();
    for p in &nonzero {
        if ideal.intersection(p).is_zero() {
            return PropertyReport::fails(name)
                .with("ideal", WitnessValue::subgroup(b, ideal))
                .with("prime", WitnessValue::subgroup(b, p));
        }
    }
    let rep = PropertyReport::holds(name);
    if nonzero.is_empty() {
        rep.note(VACUOUS)
    } else {
        rep
    }
}

pub fn is_semi_essential_ideal(f: &FiniteGradedRing, ideal: &GradedSubgroup, caps: &Caps) -> PropertyReport {
    const NAME: &str = "semi_essential_ideal";
    if ideal.is_zero() {
        return PropertyReport::not_applicable(NAME, "ideal must be nonzero");
    }
    if !f.is_ideal(ideal, Side::TwoSided) {
        return PropertyReport::not_applicable(NAME, "not a two-sided ideal");
    }
    match enumerate_graded_primes_ring(f, caps) {
        Err(e) => PropertyReport::from_error(NAME, &e),
        Ok(primes) => semi_essential_against(NAME, f, ideal, &primes),
    }
}

pub fn is_semi_uniform_ring(f: &FiniteGradedRing, caps: &Caps) -> PropertyReport {
    const NAME: &str = "semi_uniform_ring";
    let (ideals, primes) = match enumerate_graded_ideals(f, caps)
        .and_then(|i| enumerate_graded_primes_ring(f, caps).map(|p| (i, p)))
    {
        Ok(x) => x,
        Err(e) => return PropertyReport::from_error(NAME, &e),
    };
    let mut vacuous = true;
    for i in ideals.iter().filter(|i| !i.is_zero()) {
        let rep = semi_essential_against(NAME, f, i, &primes);
        if rep.is_fails() {
            return rep;
        }
        vacuous &= rep.is_vacuous();
    }
    let rep = PropertyReport::holds(NAME);
    if vacuous {
        rep.note(VACUOUS)
    } else {
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::ring::build;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn z12_semi_essential_ideals() {
        let z12 = build::trivial_cyclic(Group::cyclic(2).unwrap(), 12).unwrap();
        let b = z12.basis();
        let ideal = |d: u64| GradedSubgroup::generated_by_components(b, [[d].as_slice()]);
        let primes = enumerate_graded_primes_ring(&z12, &caps()).unwrap();
        assert_eq!(primes, vec![ideal(3), ideal(2)]);
        let four = is_semi_essential_ideal(&z12, &ideal(4), &caps());
        assert!(four.is_fails());
        assert_eq!(four.witness_value("prime").unwrap().render(), "<3*1>");
        assert!(is_semi_essential_ideal(&z12, &ideal(6), &caps()).is_holds());
        let su = is_semi_uniform_ring(&z12, &caps());
        assert!(su.is_fails());
        assert_eq!(su.witness_value("ideal").unwrap().render(), "<4*1>");
        assert!(is_semi_essential_ideal(&z12, &ideal(0), &caps()).verdict == Verdict::NotApplicable);
    }

    #[test]
    fn z36_semi_uniform() {
        let z36 = build::trivial_cyclic(Group::cyclic(2).unwrap(), 36).unwrap();
        assert!(is_semi_uniform_ring(&z36, &caps()).is_holds());
        let gf5 = build::trivial_cyclic(Group::cyclic(1).unwrap(), 5).unwrap();
        let su = is_semi_uniform_ring(&gf5, &caps());
        assert!(su.is_holds() && su.is_vacuous());
    }

    #[test]
    fn zero_divisors_of_z36() {
        let z36 = GradedRing::from(build::trivial_cyclic(Group::cyclic(2).unwrap(), 36).unwrap());
        let (x, y) = zero_divisor_witness(&z36, &caps()).unwrap().unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!((x[0] * y[0]) % 36, 0);
    }

    #[test]
    fn trivial_z6_not_graded_simple() {
        let z6 = GradedRing::from(build::trivial_cyclic(Group::cyclic(2).unwrap(), 6).unwrap());
        let r = is_graded_simple(&z6, &caps());
        assert!(r.is_fails());
        assert_eq!(r.witness_value("a").unwrap().render(), "2*1");
    }
}
