//! Implications checked over an instance pool.
//!
//! A theorem must never see its hypothesis hold while its conclusion fails.
//! A non-implication must see that at least once.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use gradlab_core::abelian::Subgroup;
use gradlab_core::graded::{GradedSubgroup, Vector};
use gradlab_core::group::{Degree, Group, SubsetClass};
use gradlab_core::module::{FiniteGradedModule, GradedModuleHom, GradedSubmodule, HomKind};
use gradlab_core::module_props::{image_transfer, preimage_transfer, quotient_transfer, ModuleAnalysis};
use gradlab_core::report::{Caps, PropertyReport, Verdict};
use gradlab_core::ring::{FiniteGradedRing, GradedRing, Side};
use gradlab_core::ring_props::{self as rp, CrossedClass, DegeneracyClass, StrongnessClass, Support};

/// Observation of one implication on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obs {
    /// Hypothesis false everywhere it was tested.
    Vacuous,
    /// Hypothesis held somewhere and the conclusion held there too.
    Holds,
    /// Hypothesis held and the conclusion failed; carries a short witness.
    Fails(String),
    /// A cap or a missing backend prevented a decision.
    Undecided,
}

impl Obs {
    fn from_parts(h: Option<bool>, c: impl FnOnce() -> Option<bool>) -> Obs {
        match h {
            Some(false) => Obs::Vacuous,
            None => Obs::Undecided,
            Some(true) => match c() {
                Some(true) => Obs::Holds,
                Some(false) => Obs::Fails(String::new()),
                None => Obs::Undecided,
            },
        }
    }

    fn witness(self, w: impl FnOnce() -> String) -> Obs {
        match self {
            Obs::Fails(_) => Obs::Fails(w()),
            o => o,
        }
    }

    /// Aggregates observations over many sub-instances (pairs, degrees).
    fn merge(self, other: Obs) -> Obs {
        use Obs::*;
        match (self, other) {
            (Fails(w), _) | (_, Fails(w)) => Fails(w),
            (Holds, _) | (_, Holds) => Holds,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => Vacuous,
        }
    }
}

fn all(xs: &[Option<bool>]) -> Option<bool> {
    if xs.contains(&Some(false)) {
        Some(false)
    } else if xs.contains(&None) {
        None
    } else {
        Some(true)
    }
}

fn decided(r: &PropertyReport) -> Option<bool> {
    r.verdict.decided()
}

fn merge_all(it: impl IntoIterator<Item = Obs>) -> Obs {
    let mut acc = Obs::Vacuous;
    for o in it {
        acc = acc.merge(o);
        if matches!(acc, Obs::Fails(_)) {
            break;
        }
    }
    acc
}

// ---------------------------------------------------------------- ring facts

/// Lazily computed predicate values for one ring.
pub struct RingFacts<'a> {
    pub ring: &'a GradedRing,
    pub caps: Caps,
    weak: OnceCell<Option<bool>>,
    degeneracy: OnceCell<Option<DegeneracyClass>>,
    regular: OnceCell<Option<bool>>,
    domain: OnceCell<Option<bool>>,
    support_class: OnceCell<SubsetClass>,
    strong: OnceCell<Option<bool>>,
    first: OnceCell<Option<bool>>,
    second: OnceCell<Option<bool>>,
    strongness: OnceCell<Option<StrongnessClass>>,
    crossed: OnceCell<Option<CrossedClass>>,
    invertible: OnceCell<Option<bool>>,
    simple: OnceCell<Option<bool>>,
    division: OnceCell<Option<bool>>,
    components: OnceCell<(Option<bool>, Option<bool>)>,
}

impl<'a> RingFacts<'a> {
    pub fn new(ring: &'a GradedRing, caps: Caps) -> Self {
        RingFacts {
            ring,
            caps,
            weak: OnceCell::new(),
            degeneracy: OnceCell::new(),
            regular: OnceCell::new(),
            domain: OnceCell::new(),
            support_class: OnceCell::new(),
            strong: OnceCell::new(),
            first: OnceCell::new(),
            second: OnceCell::new(),
            strongness: OnceCell::new(),
            crossed: OnceCell::new(),
            invertible: OnceCell::new(),
            simple: OnceCell::new(),
            division: OnceCell::new(),
            components: OnceCell::new(),
        }
    }

    fn finite(&self) -> Option<&FiniteGradedRing> {
        self.ring.as_finite()
    }

    pub fn is_zero_ring(&self) -> bool {
        self.finite().is_some_and(|f| f.is_zero_ring())
    }

    pub fn weak(&self) -> Option<bool> {
        *self.weak.get_or_init(|| decided(&rp::is_weak(self.ring)))
    }

    pub fn degeneracy(&self) -> Option<DegeneracyClass> {
        *self.degeneracy.get_or_init(|| rp::degeneracy_class(self.ring, &self.caps).class)
    }

    pub fn nondegenerate(&self) -> Option<bool> {
        self.degeneracy().map(|d| d.is_nondegenerate())
    }

    pub fn faithful(&self) -> Option<bool> {
        self.degeneracy().map(|d| d.is_faithful())
    }

    pub fn regular(&self) -> Option<bool> {
        *self.regular.get_or_init(|| decided(&rp::is_regular(self.ring, &self.caps)))
    }

    /// No zero divisors. The zero ring counts as having none.
    pub fn domain(&self) -> Option<bool> {
        *self.domain.get_or_init(|| rp::zero_divisor_witness(self.ring, &self.caps).ok().map(|w| w.is_none()))
    }

    pub fn support_class(&self) -> SubsetClass {
        *self.support_class.get_or_init(|| rp::support(self.ring).class(self.ring.group()))
    }

    pub fn support_subgroup(&self) -> Option<bool> {
        Some(self.support_class() == SubsetClass::Subgroup)
    }

    pub fn strong(&self) -> Option<bool> {
        *self.strong.get_or_init(|| decided(&rp::is_strong(self.ring)))
    }

    pub fn first_strong(&self) -> Option<bool> {
        *self.first.get_or_init(|| decided(&rp::is_first_strong(self.ring)))
    }

    pub fn second_strong(&self) -> Option<bool> {
        *self.second.get_or_init(|| decided(&rp::is_second_strong(self.ring)))
    }

    pub fn strongness(&self) -> Option<StrongnessClass> {
        *self.strongness.get_or_init(|| rp::strongness_class(self.ring).class)
    }

    pub fn crossed(&self) -> Option<CrossedClass> {
        *self.crossed.get_or_init(|| rp::crossed_class(self.ring, &self.caps).class)
    }

    pub fn weakly_crossed(&self) -> Option<bool> {
        self.crossed().map(|c| c != CrossedClass::None)
    }

    pub fn invertible(&self) -> Option<bool> {
        *self.invertible.get_or_init(|| decided(&rp::is_invertible_graded(self.ring, &self.caps)))
    }

    pub fn graded_simple(&self) -> Option<bool> {
        *self.simple.get_or_init(|| decided(&rp::is_graded_simple(self.ring, &self.caps)))
    }

    /// `R_e` is a division ring. For the monomial backend `R_e` is
    /// commutative, so this is the invertibility test.
    pub fn identity_division(&self) -> Option<bool> {
        *self.division.get_or_init(|| match self.finite() {
            Some(f) => decided(&rp::identity_component_is_division_ring(f, &self.caps)),
            None => self.invertible(),
        })
    }

    /// Every supported component is cyclic / simple over `R_e`.
    pub fn components_cyclic_simple(&self) -> (Option<bool>, Option<bool>) {
        *self.components.get_or_init(|| match rp::support(self.ring) {
            Support::Integers(_) => (None, None),
            Support::Finite(s) => {
                let mut cyc = Vec::new();
                let mut sim = Vec::new();
                for g in s {
                    let c = rp::component_as_identity_module(self.ring, g, &self.caps);
                    cyc.push(decided(&c.cyclic));
                    sim.push(decided(&c.simple));
                }
                (all(&cyc), all(&sim))
            }
        })
    }

    pub fn commutative(&self) -> Option<bool> {
        Some(rp::is_commutative(self.ring))
    }

    /// The support is a subgroup on which the group operation commutes.
    pub fn support_abelian_subgroup(&self) -> Option<bool> {
        if self.support_class() != SubsetClass::Subgroup {
            return Some(false);
        }
        match (rp::support(self.ring), self.ring.group()) {
            (Support::Finite(s), g @ Group::Finite(_)) => {
                Some(s.iter().all(|&a| s.iter().all(|&b| g.op(a, b) == g.op(b, a))))
            }
            _ => Some(true),
        }
    }

    /// Every nonzero element generates the whole ring as a two-sided ideal.
    pub fn ungraded_simple(&self) -> Option<bool> {
        let f = self.finite()?;
        if f.is_zero_ring() {
            return Some(false);
        }
        let els = f.elements(self.caps.elements).ok()?;
        Some(els.iter().skip(1).all(|x| f.ideal_generated_ungraded(std::slice::from_ref(x), Side::TwoSided).is_full()))
    }

    /// Ideals generated by single elements that miss `R_e` also miss every `R_g`.
    pub fn ideals_missing_identity_component(&self) -> Obs {
        let Some(f) = self.finite() else { return Obs::Undecided };
        let Ok(els) = f.elements(self.caps.elements) else { return Obs::Undecided };
        let b = f.basis();
        let comp = |g: Degree| f.component(g).to_subgroup(b);
        let e = f.group().identity();
        let re = comp(e);
        merge_all(els.iter().skip(1).take(512).map(|x| {
            let ideal = f.ideal_generated_ungraded(std::slice::from_ref(x), Side::TwoSided);
            let h = ideal.intersection(&re).is_zero();
            Obs::from_parts(Some(h), || Some(b.degrees().iter().all(|&g| ideal.intersection(&comp(g)).is_zero())))
                .witness(|| format!("x={}", b.render(x)))
        }))
    }

    pub fn identity_component_map_checks(&self) -> Option<bool> {
        rp::identity_component_linear_report(self.ring, &self.caps).map(|l| l.report.is_holds())
    }

    /// The restricted unit search agrees with a search over the whole ring.
    pub fn unit_search_agrees(&self) -> Option<bool> {
        let f = self.finite()?;
        if f.order() > 5000 {
            return None;
        }
        let els = f.elements(self.caps.elements).ok()?;
        let b = f.basis();
        for g in f.support() {
            let restricted = f.homogeneous_unit_search(g, self.caps.elements).ok()?.is_some();
            let block = b.block(g)?;
            let unrestricted = Subgroup::full(&block.moduli).elements(self.caps.elements).ok()?.iter().skip(1).any(|loc| {
                let u = b.embed(g, loc);
                els.iter().any(|v| f.mul(&u, v) == *f.one() && f.mul(v, &u) == *f.one())
            });
            if restricted != unrestricted {
                return Some(false);
            }
        }
        Some(true)
    }
}

// ---------------------------------------------------------------- module facts

pub struct ModuleFacts<'a> {
    pub module: &'a FiniteGradedModule,
    pub an: ModuleAnalysis<'a>,
    index: OnceCell<BTreeMap<GradedSubgroup, usize>>,
    semi: OnceCell<Vec<OnceCell<Option<bool>>>>,
    ess: OnceCell<Vec<OnceCell<Option<bool>>>>,
    colon_all: OnceCell<Vec<OnceCell<Option<bool>>>>,
    ring_primes: OnceCell<Option<Vec<GradedSubgroup>>>,
    multiplication: OnceCell<Option<bool>>,
    faithful: OnceCell<Option<bool>>,
    semi_uniform: OnceCell<Option<bool>>,
}

/// Pair-quantified checks are skipped above this lattice size.
pub const PAIR_LATTICE_LIMIT: usize = 150;

impl<'a> ModuleFacts<'a> {
    pub fn new(module: &'a FiniteGradedModule, caps: Caps) -> Self {
        ModuleFacts {
            module,
            an: ModuleAnalysis::new(module, caps),
            index: OnceCell::new(),
            semi: OnceCell::new(),
            ess: OnceCell::new(),
            colon_all: OnceCell::new(),
            ring_primes: OnceCell::new(),
            multiplication: OnceCell::new(),
            faithful: OnceCell::new(),
            semi_uniform: OnceCell::new(),
        }
    }

    pub fn lattice(&self) -> Option<&[GradedSubmodule]> {
        self.an.lattice().ok()
    }

    fn small_lattice(&self) -> Option<&[GradedSubmodule]> {
        self.lattice().filter(|l| l.len() <= PAIR_LATTICE_LIMIT)
    }

    pub fn primes(&self) -> Option<&[GradedSubmodule]> {
        self.an.primes().ok()
    }

    fn nonzero_primes(&self) -> Option<Vec<&GradedSubmodule>> {
        Some(self.primes()?.iter().filter(|p| !p.is_zero()).collect())
    }

    fn index_of(&self, s: &GradedSubmodule) -> Option<usize> {
        let idx = self.index.get_or_init(|| {
            self.lattice().map(|l| l.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect()).unwrap_or_default()
        });
        idx.get(s).copied()
    }

    fn per_submodule(
        &self,
        cell: &OnceCell<Vec<OnceCell<Option<bool>>>>,
        i: usize,
        f: impl FnOnce(&GradedSubmodule) -> Option<bool>,
    ) -> Option<bool> {
        let l = self.lattice()?;
        let v = cell.get_or_init(|| (0..l.len()).map(|_| OnceCell::new()).collect());
        *v[i].get_or_init(|| f(&l[i]))
    }

    /// Semi-essential; the zero submodule never is.
    pub fn semi(&self, i: usize) -> Option<bool> {
        self.per_submodule(&self.semi, i, |k| if k.is_zero() { Some(false) } else { decided(&self.an.is_semi_essential(k)) })
    }

    pub fn semi_of(&self, s: &GradedSubmodule) -> Option<bool> {
        self.semi(self.index_of(s)?)
    }

    pub fn ess(&self, i: usize) -> Option<bool> {
        self.per_submodule(&self.ess, i, |k| if k.is_zero() { Some(false) } else { decided(&self.an.is_essential(k)) })
    }

    /// The colon condition of `K` against every nonzero graded prime.
    pub fn colon_against_all_primes(&self, i: usize) -> Option<bool> {
        self.per_submodule(&self.colon_all, i, |k| {
            let ps = self.nonzero_primes()?;
            let mut out = Vec::new();
            for p in ps {
                out.push(self.an.colon_condition(k, p).ok());
            }
            all(&out)
        })
    }

    pub fn ring_primes(&self) -> Option<&[GradedSubgroup]> {
        self.ring_primes
            .get_or_init(|| rp::enumerate_graded_primes_ring(self.module.ring(), self.an.caps()).ok())
            .as_deref()
    }

    /// Nonzero and meets every nonzero graded prime ideal.
    pub fn semi_essential_ideal(&self, ideal: &GradedSubgroup) -> Option<bool> {
        if ideal.is_zero() {
            return Some(false);
        }
        let ps = self.ring_primes()?;
        Some(ps.iter().filter(|p| !p.is_zero()).all(|p| !ideal.intersection(p).is_zero()))
    }

    pub fn multiplication(&self) -> Option<bool> {
        *self.multiplication.get_or_init(|| decided(&self.an.is_multiplication()))
    }

    pub fn faithful(&self) -> Option<bool> {
        *self.faithful.get_or_init(|| decided(&self.an.is_faithful()))
    }

    pub fn semi_uniform(&self) -> Option<bool> {
        *self.semi_uniform.get_or_init(|| decided(&self.an.is_semi_uniform()))
    }

    fn render(&self, s: &GradedSubmodule) -> String {
        s.render(self.module.basis())
    }

    fn pairs(&self, f: impl Fn(usize, usize) -> Obs) -> Obs {
        let Some(l) = self.small_lattice() else { return Obs::Undecided };
        let n = l.len();
        merge_all((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| f(i, j)))
    }

    fn singles(&self, f: impl Fn(usize) -> Obs) -> Obs {
        let Some(l) = self.lattice() else { return Obs::Undecided };
        merge_all((0..l.len()).map(f))
    }
}

// ---------------------------------------------------------------- the catalog

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Theorem,
    NonImplication,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Theorem => "theorem",
            Kind::NonImplication => "non_implication",
        }
    }
}

#[derive(Clone, Copy)]
pub enum Eval {
    Ring(fn(&RingFacts) -> Obs),
    Module(fn(&ModuleFacts) -> Obs),
}

#[derive(Clone, Copy)]
pub struct Implication {
    pub name: &'static str,
    pub statement: &'static str,
    pub kind: Kind,
    pub eval: Eval,
}

impl Implication {
    pub fn is_ring(&self) -> bool {
        matches!(self.eval, Eval::Ring(_))
    }
}

fn o(h: Option<bool>, c: Option<bool>) -> Obs {
    Obs::from_parts(h, || c)
}

/// Same as `o` but the zero ring is left out of the quantifier.
fn nz(f: &RingFacts, h: Option<bool>, c: impl FnOnce() -> Option<bool>) -> Obs {
    if f.is_zero_ring() {
        Obs::Vacuous
    } else {
        Obs::from_parts(h, c)
    }
}

fn iff(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    Some(a? == b?)
}

fn first_strong_or_strong(f: &RingFacts) -> Option<bool> {
    f.strongness().map(|s| matches!(s, StrongnessClass::Strong | StrongnessClass::FirstStrong))
}

fn invertible_weak_domain(f: &RingFacts) -> Option<bool> {
    all(&[f.invertible(), f.weak(), f.domain()])
}

macro_rules! imp {
    ($name:expr, $stmt:expr, $kind:ident, ring $f:expr) => {
        Implication { name: $name, statement: $stmt, kind: Kind::$kind, eval: Eval::Ring($f) }
    };
    ($name:expr, $stmt:expr, $kind:ident, module $f:expr) => {
        Implication { name: $name, statement: $stmt, kind: Kind::$kind, eval: Eval::Module($f) }
    };
}

pub fn default_suite() -> Vec<Implication> {
    vec![
        // ring theorems
        imp!("faithful_implies_weak", "faithful => weak", Theorem, ring |f| o(f.faithful(), f.weak())),
        imp!("nondegenerate_implies_weak", "non-degenerate => weak", Theorem, ring |f| o(f.nondegenerate(), f.weak())),
        imp!("regular_implies_nondegenerate", "regular => non-degenerate", Theorem, ring |f| nz(f, f.regular(), || f.nondegenerate())),
        imp!("domain_weak_iff_nondegenerate", "no zero divisors => (weak <=> non-degenerate)", Theorem, ring |f| {
            nz(f, f.domain(), || iff(f.weak(), f.nondegenerate()))
        }),
        imp!("domain_weak_iff_support_subgroup", "no zero divisors => (weak <=> supp is a subgroup)", Theorem, ring |f| {
            nz(f, f.domain(), || iff(f.weak(), f.support_subgroup()))
        }),
        imp!("support_subgroup_implies_weak", "supp is a subgroup => weak", Theorem, ring |f| o(f.support_subgroup(), f.weak())),
        imp!("first_strong_implies_weak", "strong or first strong => weak", Theorem, ring |f| o(first_strong_or_strong(f), f.weak())),
        imp!("strong_implies_first_strong", "strong => first strong", Theorem, ring |f| nz(f, f.strong(), || f.first_strong())),
        imp!("first_strong_implies_second_strong", "first strong => second strong", Theorem, ring |f| {
            nz(f, f.first_strong(), || f.second_strong())
        }),
        imp!("second_strong_weak_implies_first_strong", "second strong and weak => first strong", Theorem, ring |f| {
            nz(f, all(&[f.second_strong(), f.weak()]), || f.first_strong())
        }),
        imp!("weakly_crossed_implies_first_strong", "weakly crossed => first strong", Theorem, ring |f| {
            nz(f, f.weakly_crossed(), || f.first_strong())
        }),
        imp!("weakly_crossed_implies_weak", "weakly crossed => weak", Theorem, ring |f| o(f.weakly_crossed(), f.weak())),
        imp!("weakly_crossed_components_cyclic", "weakly crossed => every supported R_g = R_e r", Theorem, ring |f| {
            nz(f, f.weakly_crossed(), || f.components_cyclic_simple().0)
        }),
        imp!("invertible_weak_domain_first_strong", "invertible, weak, no zero divisors => first strong", Theorem, ring |f| {
            nz(f, invertible_weak_domain(f), || f.first_strong())
        }),
        imp!("invertible_weak_domain_graded_simple", "invertible, weak, no zero divisors => graded simple", Theorem, ring |f| {
            nz(f, invertible_weak_domain(f), || f.graded_simple())
        }),
        imp!("invertible_weak_domain_components_cyclic", "invertible, weak, no zero divisors => supported components cyclic over R_e", Theorem, ring |f| {
            nz(f, invertible_weak_domain(f), || f.components_cyclic_simple().0)
        }),
        imp!("invertible_weak_domain_components_simple", "invertible, weak, no zero divisors => supported components simple over R_e", Theorem, ring |f| {
            nz(f, invertible_weak_domain(f), || f.components_cyclic_simple().1)
        }),
        imp!("invertible_weak_domain_weakly_crossed", "invertible, weak, no zero divisors => weakly crossed", Theorem, ring |f| {
            nz(f, invertible_weak_domain(f), || f.weakly_crossed())
        }),
        imp!("commutative_domain_weak_abelian_support", "commutative, weak, no zero divisors => supp an abelian subgroup", Theorem, ring |f| {
            nz(f, all(&[f.domain(), f.commutative(), f.weak()]), || f.support_abelian_subgroup())
        }),
        imp!("weak_domain_division_identity_simple", "weak, no zero divisors, R_e a division ring => R simple", Theorem, ring |f| {
            nz(f, all(&[f.weak(), f.domain(), f.identity_division()]), || f.ungraded_simple())
        }),
        imp!("weak_domain_ideal_misses_components", "weak, no zero divisors, I meets R_e trivially => I meets every R_g trivially", Theorem, ring |f| {
            match all(&[f.weak(), f.domain()]) {
                Some(true) if !f.is_zero_ring() => f.ideals_missing_identity_component(),
                Some(true) | Some(false) => Obs::Vacuous,
                None => Obs::Undecided,
            }
        }),
        imp!("invertible_identity_component_map", "invertible => x -> x_e is onto R_e, kills R_g (g != e), and (R_g+R_h)/R_g ~ R_h", Theorem, ring |f| {
            nz(f, f.invertible(), || f.identity_component_map_checks())
        }),
        imp!("unit_search_in_inverse_component", "a homogeneous unit of R_g has its inverse in R_{g^-1}", Theorem, ring |f| {
            o(f.ring.as_finite().map(|_| true), f.unit_search_agrees())
        }),
        // ring non-implications
        imp!("weak_not_nondegenerate", "weak does not imply non-degenerate", NonImplication, ring |f| o(f.weak(), f.nondegenerate())),
        imp!("weak_not_first_strong", "weak does not imply first strong", NonImplication, ring |f| o(f.weak(), f.first_strong())),
        imp!("weak_not_second_strong", "weak does not imply second strong", NonImplication, ring |f| o(f.weak(), f.second_strong())),
        imp!("second_strong_not_weak", "second strong does not imply weak", NonImplication, ring |f| o(f.second_strong(), f.weak())),
        imp!("nondegenerate_not_weakly_crossed", "non-degenerate does not imply weakly crossed", NonImplication, ring |f| {
            o(f.nondegenerate(), f.weakly_crossed())
        }),
        imp!("weak_not_weakly_crossed", "weak does not imply weakly crossed", NonImplication, ring |f| o(f.weak(), f.weakly_crossed())),
        imp!("strong_not_invertible", "strong does not imply invertible", NonImplication, ring |f| o(f.strong(), f.invertible())),
        imp!("invertible_not_strong", "invertible does not imply strong", NonImplication, ring |f| o(f.invertible(), f.strong())),
        // module theorems
        imp!("essential_implies_semi_essential", "K essential => K semi-essential", Theorem, module |m| {
            m.singles(|i| o(m.ess(i), m.semi(i)).witness(|| m.render(&m.lattice().unwrap()[i])))
        }),
        imp!("semi_essential_upward_closed", "K1 <= K2, K1 semi-essential => K2 semi-essential", Theorem, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.pairs(|i, j| {
                if !l[i].is_subset(&l[j]) {
                    return Obs::Vacuous;
                }
                Obs::from_parts(m.semi(i), || m.semi(j)).witness(|| format!("K1={} K2={}", m.render(&l[i]), m.render(&l[j])))
            })
        }),
        imp!("intersection_semi_essential_implies_both", "K1 n K2 semi-essential => K1 and K2 semi-essential", Theorem, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.pairs(|i, j| {
                let k = l[i].intersection(&l[j]);
                Obs::from_parts(m.semi_of(&k), || all(&[m.semi(i), m.semi(j)]))
                    .witness(|| format!("K1={} K2={}", m.render(&l[i]), m.render(&l[j])))
            })
        }),
        imp!("essential_meet_semi_essential", "K1 essential, K2 semi-essential => K1 n K2 semi-essential", Theorem, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.pairs(|i, j| {
                Obs::from_parts(all(&[m.ess(i), m.semi(j)]), || m.semi_of(&l[i].intersection(&l[j])))
                    .witness(|| format!("K1={} K2={}", m.render(&l[i]), m.render(&l[j])))
            })
        }),
        imp!("colon_condition_meet_semi_essential", "colon condition on K1, K1 and K2 semi-essential => K1 n K2 semi-essential", Theorem, module |m| {
            // Without a nonzero graded prime every nonzero K is semi-essential
            // by an empty quantifier and K1 n K2 may be zero.
            if m.nonzero_primes().is_some_and(|p| p.is_empty()) {
                return Obs::Vacuous;
            }
            let l = m.lattice().unwrap_or(&[]);
            m.pairs(|i, j| {
                let h = all(&[m.semi(i), m.semi(j)]);
                let h = if h == Some(true) { m.colon_against_all_primes(i) } else { h };
                Obs::from_parts(h, || m.semi_of(&l[i].intersection(&l[j])))
                    .witness(|| format!("K1={} K2={}", m.render(&l[i]), m.render(&l[j])))
            })
        }),
        imp!("colon_condition_gives_prime", "(K n P : m) = Ann(M) off K n P => K n P graded prime", Theorem, module |m| {
            let (Some(l), Some(ps)) = (m.small_lattice(), m.primes()) else { return Obs::Undecided };
            merge_all(l.iter().flat_map(|k| ps.iter().map(move |p| (k, p))).map(|(k, p)| {
                Obs::from_parts(m.an.colon_condition(k, p).ok(), || decided(&m.an.is_graded_prime(&k.intersection(p))))
                    .witness(|| format!("K={} P={}", m.render(k), m.render(p)))
            }))
        }),
        imp!("multiplication_faithful_colon_semi_essential", "M multiplication and faithful, (K:M) semi-essential ideal => K semi-essential", Theorem, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            let base = all(&[m.multiplication(), m.faithful()]);
            m.singles(|i| {
                let h = if base == Some(true) { m.semi_essential_ideal(&m.module.colon(&l[i])) } else { base };
                Obs::from_parts(h, || m.semi(i)).witness(|| m.render(&l[i]))
            })
        }),
        imp!("semi_uniform_ring_multiplication_faithful", "R semi-uniform, M multiplication and faithful => M semi-uniform", Theorem, module |m| {
            let ring = decided(&rp::is_semi_uniform_ring(m.module.ring(), m.an.caps()));
            o(all(&[ring, m.multiplication(), m.faithful()]), m.semi_uniform())
        }),
        imp!("prime_colon_is_prime_ideal", "P graded prime => (P:M) graded prime ideal", Theorem, module |m| {
            let Some(ps) = m.primes() else { return Obs::Undecided };
            merge_all(ps.iter().map(|p| {
                o(Some(true), decided(&rp::is_graded_prime_ideal(m.module.ring(), &m.module.colon(p), m.an.caps())))
                    .witness(|| m.render(p))
            }))
        }),
        imp!("essential_shortcut_matches_lattice", "cyclic-submodule essential test agrees with the full lattice test", Theorem, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.singles(|i| {
                if l[i].is_zero() {
                    return Obs::Vacuous;
                }
                o(Some(true), iff(m.ess(i), decided(&m.an.is_essential_bruteforce(&l[i])))).witness(|| m.render(&l[i]))
            })
        }),
        imp!("semi_essential_elementwise", "K semi-essential <=> each nonzero prime P has m in P, r homogeneous with 0 != rm in K", Theorem, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.singles(|i| {
                if l[i].is_zero() {
                    return Obs::Vacuous;
                }
                o(Some(true), iff(m.semi(i), decided(&m.an.semi_essential_characterization(&l[i])))).witness(|| m.render(&l[i]))
            })
        }),
        imp!("semi_essential_preimage", "graded epimorphism with kernel inside Grad(0): preimage of semi-essential is semi-essential", Theorem, module |m| {
            preimage_checks(m)
        }),
        imp!("semi_essential_image", "graded isomorphism: image of semi-essential is semi-essential", Theorem, module |m| {
            image_checks(m)
        }),
        imp!("semi_essential_quotient", "(K+T)/T semi-essential in M/T, T prime => T is the only prime over T missing K", Theorem, module |m| {
            quotient_checks(m)
        }),
        imp!("uniform_implies_semi_uniform", "uniform => semi-uniform", Theorem, module |m| {
            o(decided(&m.an.is_uniform()), m.semi_uniform())
        }),
        imp!("lattice_closed", "graded submodules are closed under sum and intersection", Theorem, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.pairs(|i, j| {
                let ok = m.index_of(&l[i].sum(&l[j])).is_some() && m.index_of(&l[i].intersection(&l[j])).is_some();
                o(Some(true), Some(ok)).witness(|| format!("{} {}", m.render(&l[i]), m.render(&l[j])))
            })
        }),
        // module non-implications
        imp!("semi_essential_not_essential", "semi-essential does not imply essential", NonImplication, module |m| {
            m.singles(|i| o(m.semi(i), m.ess(i)).witness(|| m.render(&m.lattice().unwrap()[i])))
        }),
        imp!("semi_essential_not_downward_closed", "K2 semi-essential, 0 != K1 <= K2 does not make K1 semi-essential", NonImplication, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.pairs(|i, j| {
                if l[i].is_zero() || !l[i].is_subset(&l[j]) {
                    return Obs::Vacuous;
                }
                Obs::from_parts(m.semi(j), || m.semi(i)).witness(|| format!("K1={} K2={}", m.render(&l[i]), m.render(&l[j])))
            })
        }),
        imp!("semi_essential_not_closed_under_meets", "K1, K2 semi-essential does not make K1 n K2 semi-essential", NonImplication, module |m| {
            let l = m.lattice().unwrap_or(&[]);
            m.pairs(|i, j| {
                Obs::from_parts(all(&[m.semi(i), m.semi(j)]), || m.semi_of(&l[i].intersection(&l[j])))
                    .witness(|| format!("K1={} K2={}", m.render(&l[i]), m.render(&l[j])))
            })
        }),
        imp!("semi_uniform_not_uniform", "semi-uniform does not imply uniform", NonImplication, module |m| {
            o(m.semi_uniform(), decided(&m.an.is_uniform()))
        }),
        imp!("semi_uniform_not_hereditary", "a graded submodule of a semi-uniform module need not be semi-uniform", NonImplication, module |m| {
            hereditary_checks(m)
        }),
    ]
}

/// Projections `M -> M/N` with `0 != N <= Grad(0)`, at most three of them.
fn preimage_checks(m: &ModuleFacts) -> Obs {
    let (Some(l), Ok(rad0)) = (m.small_lattice(), m.an.radical(&m.module.zero_submodule())) else {
        return Obs::Undecided;
    };
    let caps = *m.an.caps();
    let ns: Vec<&GradedSubmodule> = l.iter().filter(|n| !n.is_zero() && n.is_subset(&rad0)).take(3).collect();
    merge_all(ns.into_iter().map(|n| {
        let Ok(q) = m.module.quotient(n) else { return Obs::Undecided };
        let Ok(ql) = q.module.enumerate_graded_submodules(&caps) else { return Obs::Undecided };
        merge_all(ql.iter().filter(|k| !k.is_zero()).take(40).map(|k| transfer_obs(preimage_transfer(&q.projection, k, &caps)).witness(|| format!("N={}", m.render(n)))))
    }))
}

fn image_checks(m: &ModuleFacts) -> Obs {
    let Some(l) = m.small_lattice() else { return Obs::Undecided };
    let caps = *m.an.caps();
    let b = m.module.basis();
    let images: Vec<Vector> = (0..b.len()).map(|j| b.unit(j)).collect();
    let Ok(id) = GradedModuleHom::new(m.module.clone(), m.module.clone(), images, HomKind::Graded) else {
        return Obs::Undecided;
    };
    merge_all(l.iter().filter(|k| !k.is_zero()).take(40).map(|k| transfer_obs(image_transfer(&id, k, &caps)).witness(|| m.render(k))))
}

fn quotient_checks(m: &ModuleFacts) -> Obs {
    let (Some(l), Some(ps)) = (m.small_lattice(), m.primes()) else { return Obs::Undecided };
    let caps = *m.an.caps();
    let ts: Vec<&GradedSubmodule> = ps.iter().filter(|t| !t.is_zero()).take(4).collect();
    merge_all(ts.into_iter().flat_map(|t| l.iter().filter(|k| !k.is_zero()).take(20).map(move |k| (t, k))).map(|(t, k)| {
        transfer_obs(quotient_transfer(m.module, k, t, &caps)).witness(|| format!("K={} T={}", m.render(k), m.render(t)))
    }))
}

fn hereditary_checks(m: &ModuleFacts) -> Obs {
    if m.semi_uniform() != Some(true) {
        return o(m.semi_uniform(), None);
    }
    let Some(l) = m.lattice().filter(|l| l.len() <= 100) else { return Obs::Undecided };
    let caps = *m.an.caps();
    merge_all(l.iter().filter(|k| !k.is_zero()).map(|k| {
        let Ok(r) = m.module.restrict(k) else { return Obs::Undecided };
        let an = ModuleAnalysis::new(&r.module, caps);
        o(Some(true), decided(&an.is_semi_uniform())).witness(|| format!("K={}", m.render(k)))
    }))
}

fn transfer_obs(t: gradlab_core::module_props::Transfer) -> Obs {
    match t.report.verdict {
        Verdict::AbortedCap | Verdict::NotApplicable => Obs::Undecided,
        _ => o(Some(t.hypothesis), Some(t.conclusion)),
    }
}

pub fn find(name: &str) -> Option<Implication> {
    default_suite().into_iter().find(|i| i.name == name)
}
