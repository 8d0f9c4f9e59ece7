//! Prime, essential, semi-essential, radical, uniform, multiplication and
//! faithfulness predicates on finite graded modules.
//!
//! Homogeneous elements are scanned by degree, then lexicographically inside
//! a degree; this fixes every witness.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::error::{Error, Result};
use crate::graded::GradedSubgroup;
use crate::module::{FiniteGradedModule, GradedModuleHom, GradedSubmodule};
use crate::report::{Caps, PropertyReport, Verdict, WitnessValue, VACUOUS};

/// Lattice and prime list of one module, computed on first use.
pub struct ModuleAnalysis<'a> {
    module: &'a FiniteGradedModule,
    caps: Caps,
    lattice: OnceCell<Result<Vec<GradedSubmodule>>>,
    primes: OnceCell<Result<Vec<GradedSubmodule>>>,
}

impl<'a> ModuleAnalysis<'a> {
    pub fn new(module: &'a FiniteGradedModule, caps: Caps) -> Self {
        ModuleAnalysis { module, caps, lattice: OnceCell::new(), primes: OnceCell::new() }
    }

    pub fn module(&self) -> &FiniteGradedModule {
        self.module
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// Every graded submodule, smallest first.
    pub fn lattice(&self) -> Result<&[GradedSubmodule]> {
        self.lattice
            .get_or_init(|| self.module.enumerate_graded_submodules(&self.caps))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Every graded prime submodule, in lattice order.
    pub fn primes(&self) -> Result<&[GradedSubmodule]> {
        self.primes
            .get_or_init(|| {
                let mut out = Vec::new();
                for p in self.lattice()? {
                    if p.is_full() {
                        continue;
                    }
                    let rep = self.is_graded_prime(p);
                    match rep.verdict {
                        Verdict::Holds => out.push(p.clone()),
                        Verdict::AbortedCap => {
                            return Err(Error::CapExceeded {
                                what: "prime test".to_string(),
                                limit: self.caps.elements,
                            })
                        }
                        _ => {}
                    }
                }
                Ok(out)
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    fn elem(&self, v: &[u64]) -> WitnessValue {
        WitnessValue::element(self.module.basis(), v)
    }

    fn sub(&self, s: &GradedSubmodule) -> WitnessValue {
        WitnessValue::subgroup(self.module.basis(), s)
    }

    fn check_submodule(&self, name: &str, s: &GradedSubmodule) -> Option<PropertyReport> {
        (!self.module.is_submodule(s)).then(|| PropertyReport::not_applicable(name, "not a graded submodule"))
    }

    /// `rm ∈ P ⇒ m ∈ P or r ∈ (P:M)` on homogeneous `r`, `m`.
    pub fn is_graded_prime(&self, p: &GradedSubmodule) -> PropertyReport {
        const NAME: &str = "graded_prime";
        if let Some(r) = self.check_submodule(NAME, p) {
            return r;
        }
        if p.is_full() {
            return PropertyReport::not_applicable(NAME, "submodule must be proper");
        }
        let m = self.module;
        let ring = m.ring();
        let rb = ring.basis();
        let mb = m.basis();
        let colon = m.colon(p);
        let homs = match GradedSubgroup::full(rb).homogeneous_elements(rb, self.caps.elements) {
            Ok(h) => h,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        let mut count = 0;
        for (g, r) in homs {
            if colon.contains(rb, &r) {
                continue;
            }
            count += 1;
            for (block, part) in mb.blocks().iter().zip(p.parts()) {
                let h = block.degree;
                let to = m.group().op(g, h);
                // m ↦ r m from M_h into M_{gh}; zero when M_{gh} = 0
                let pre = match mb.block(to) {
                    None => crate::abelian::Subgroup::full(&block.moduli),
                    Some(target) => {
                        let images = block
                            .indices
                            .iter()
                            .map(|&j| mb.local(to, &m.act(&r, &mb.unit(j))))
                            .collect();
                        let hom = crate::abelian::Hom::new(&block.moduli, &target.moduli, images).expect("bilinear");
                        hom.preimage(p.part(mb, to).expect("block exists"))
                    }
                };
                if !pre.is_subgroup_of(part) {
                    let witness = match pre.elements(self.caps.elements) {
                        Ok(els) => els.into_iter().find(|v| !part.contains(v)).expect("not a subgroup"),
                        Err(_) => pre.generators().find(|v| !part.contains(v)).expect("not a subgroup").to_vec(),
                    };
                    let mv = mb.embed(h, &witness);
                    return PropertyReport::fails(NAME)
                        .with("r", WitnessValue::element(rb, &r))
                        .with("m", self.elem(&mv))
                        .with("rm", self.elem(&m.act(&r, &mv)))
                        .with("colon", WitnessValue::subgroup(rb, &colon))
                        .counted(count);
                }
            }
        }
        PropertyReport::holds(NAME).counted(count)
    }

    /// `K ∩ R x ≠ 0` for every nonzero homogeneous `x`.
    pub fn is_essential(&self, k: &GradedSubmodule) -> PropertyReport {
        const NAME: &str = "graded_essential";
        if let Some(r) = self.check_submodule(NAME, k) {
            return r;
        }
        if k.is_zero() {
            return PropertyReport::not_applicable(NAME, "submodule must be nonzero");
        }
        let homs = match self.module.homogeneous_elements(&self.caps) {
            Ok(h) => h,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        let mut count = 0;
        for (_, x) in homs {
            count += 1;
            let rx = self.module.cyclic(&x).expect("homogeneous");
            if k.intersection(&rx).is_zero() {
                return PropertyReport::fails(NAME)
                    .with("x", self.elem(&x))
                    .with("Rx", self.sub(&rx))
                    .counted(count);
            }
        }
        PropertyReport::holds(NAME).counted(count)
    }

    /// Essentiality quantified over the whole lattice.
    pub fn is_essential_bruteforce(&self, k: &GradedSubmodule) -> PropertyReport {
        const NAME: &str = "graded_essential";
        if k.is_zero() {
            return PropertyReport::not_applicable(NAME, "submodule must be nonzero");
        }
        let lattice = match self.lattice() {
            Ok(l) => l,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        match lattice.iter().find(|n| !n.is_zero() && k.intersection(n).is_zero()) {
            Some(n) => PropertyReport::fails(NAME).with("N", self.sub(n)),
            None => PropertyReport::holds(NAME),
        }
    }

    /// `K ∩ P ≠ 0` for every nonzero graded prime `P`.
    pub fn is_semi_essential(&self, k: &GradedSubmodule) -> PropertyReport {
        const NAME: &str = "graded_semi_essential";
        if let Some(r) = self.check_submodule(NAME, k) {
            return r;
        }
        if k.is_zero() {
            return PropertyReport::not_applicable(NAME, "submodule must be nonzero");
        }
        let primes = match self.primes() {
            Ok(p) => p,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        self.semi_essential_against(NAME, k, primes)
    }

    fn semi_essential_against(&self, name: &str, k: &GradedSubmodule, primes: &[GradedSubmodule]) -> PropertyReport {
        let mut any = false;
        for p in primes.iter().filter(|p| !p.is_zero()) {
            any = true;
            if k.intersection(p).is_zero() {
                return PropertyReport::fails(name).with("K", self.sub(k)).with("P", self.sub(p));
            }
        }
        let rep = PropertyReport::holds(name);
        if any {
            rep
        } else {
            rep.note(VACUOUS)
        }
    }

    /// Semi-essentiality through elements: for every nonzero graded prime
    /// `P` there are homogeneous `r`, `m` with `m ∈ P` and `0 ≠ rm ∈ K`.
    pub fn semi_essential_characterization(&self, k: &GradedSubmodule) -> PropertyReport {
        const NAME: &str = "graded_semi_essential_elementwise";
        if k.is_zero() {
            return PropertyReport::not_applicable(NAME, "submodule must be nonzero");
        }
        let primes = match self.primes() {
            Ok(p) => p,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        let m = self.module;
        let mb = m.basis();
        let rb = m.ring().basis();
        let rs = match GradedSubgroup::full(rb).homogeneous_elements(rb, self.caps.elements) {
            Ok(h) => h,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        let mut count = 0;
        let mut any = false;
        for p in primes.iter().filter(|p| !p.is_zero()) {
            any = true;
            let ms = match p.homogeneous_elements(mb, self.caps.elements) {
                Ok(h) => h,
                Err(e) => return PropertyReport::from_error(NAME, &e),
            };
            let found = ms.iter().any(|(_, x)| {
                rs.iter().any(|(_, r)| {
                    count += 1;
                    let y = m.act(r, x);
                    !mb.is_zero(&y) && k.contains(mb, &y)
                })
            });
            if !found {
                return PropertyReport::fails(NAME).with("K", self.sub(k)).with("P", self.sub(p)).counted(count);
            }
        }
        let rep = PropertyReport::holds(NAME).counted(count);
        if any {
            rep
        } else {
            rep.note(VACUOUS)
        }
    }

    /// `Grad_M(N)`: intersection of the graded primes containing `N`, or `M`.
    pub fn radical(&self, n: &GradedSubmodule) -> Result<GradedSubmodule> {
        let mut out = self.module.full_submodule();
        for p in self.primes()? {
            if n.is_subset(p) {
                out = out.intersection(p);
            }
        }
        Ok(out)
    }

    /// Every nonzero graded submodule is graded essential. The witness is
    /// the largest failing submodule.
    pub fn is_uniform(&self) -> PropertyReport {
        const NAME: &str = "graded_uniform";
        if self.module.is_zero_module() {
            return PropertyReport::not_applicable(NAME, "zero module");
        }
        let lattice = match self.lattice() {
            Ok(l) => l,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        for n in lattice.iter().rev().filter(|n| !n.is_zero()) {
            let rep = self.is_essential(n);
            match rep.verdict {
                Verdict::Holds => {}
                Verdict::Fails => {
                    let mut out = PropertyReport::fails(NAME).with("N", self.sub(n));
                    out.witness.extend(rep.witness);
                    return out;
                }
                _ => return PropertyReport { name: NAME.into(), ..rep },
            }
        }
        PropertyReport::holds(NAME)
    }

    /// Every nonzero graded submodule is graded semi-essential. The witness
    /// is the largest failing submodule with the first prime it misses.
    pub fn is_semi_uniform(&self) -> PropertyReport {
        const NAME: &str = "graded_semi_uniform";
        if self.module.is_zero_module() {
            return PropertyReport::not_applicable(NAME, "zero module");
        }
        let (lattice, primes) = match self.lattice().and_then(|l| self.primes().map(|p| (l, p))) {
            Ok(x) => x,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        let mut vacuous = true;
        for n in lattice.iter().rev().filter(|n| !n.is_zero()) {
            let rep = self.semi_essential_against(NAME, n, primes);
            if rep.is_fails() {
                let p = rep.witness_value("P").cloned().expect("prime witness");
                return PropertyReport::fails(NAME).with("N", self.sub(n)).with("P", p);
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

    /// `N = (N:M) M` for every graded submodule `N`.
    pub fn is_multiplication(&self) -> PropertyReport {
        const NAME: &str = "graded_multiplication";
        let lattice = match self.lattice() {
            Ok(l) => l,
            Err(e) => return PropertyReport::from_error(NAME, &e),
        };
        let m = self.module;
        for n in lattice {
            let colon = m.colon(n);
            let prod = m.ideal_times(&colon, &m.full_submodule());
            if prod != *n {
                return PropertyReport::fails(NAME)
                    .with("N", self.sub(n))
                    .with("colon", WitnessValue::subgroup(m.ring().basis(), &colon))
                    .with("product", self.sub(&prod));
            }
        }
        PropertyReport::holds(NAME)
    }

    /// `Ann(M) = 0`.
    pub fn is_faithful(&self) -> PropertyReport {
        const NAME: &str = "faithful";
        let m = self.module;
        let ann = m.annihilator(&m.full_submodule());
        match ann.generators(m.ring().basis()).into_iter().next() {
            None => PropertyReport::holds(NAME),
            Some(r) => PropertyReport::fails(NAME)
                .with("r", WitnessValue::element(m.ring().basis(), &r))
                .with("Ann", WitnessValue::subgroup(m.ring().basis(), &ann)),
        }
    }

    /// `(K ∩ P : m) = Ann(M)` for every homogeneous `m ∉ K ∩ P`.
    pub fn colon_condition(&self, k: &GradedSubmodule, p: &GradedSubmodule) -> Result<bool> {
        let m = self.module;
        let kp = k.intersection(p);
        let ann = m.annihilator(&m.full_submodule());
        for (_, x) in m.homogeneous_elements(&self.caps)? {
            if !kp.contains(m.basis(), &x) && m.colon_of_element(&kp, &x)? != ann {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn is_graded_prime_submodule(m: &FiniteGradedModule, p: &GradedSubmodule, caps: &Caps) -> PropertyReport {
    ModuleAnalysis::new(m, *caps).is_graded_prime(p)
}

pub fn enumerate_graded_prime_submodules(m: &FiniteGradedModule, caps: &Caps) -> Result<Vec<GradedSubmodule>> {
    ModuleAnalysis::new(m, *caps).primes().map(<[_]>::to_vec)
}

pub fn is_graded_essential(m: &FiniteGradedModule, k: &GradedSubmodule, caps: &Caps) -> PropertyReport {
    ModuleAnalysis::new(m, *caps).is_essential(k)
}

pub fn is_graded_semi_essential(m: &FiniteGradedModule, k: &GradedSubmodule, caps: &Caps) -> PropertyReport {
    ModuleAnalysis::new(m, *caps).is_semi_essential(k)
}

pub fn graded_radical(m: &FiniteGradedModule, n: &GradedSubmodule, caps: &Caps) -> Result<GradedSubmodule> {
    ModuleAnalysis::new(m, *caps).radical(n)
}

/// Outcome of one transfer statement on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub report: PropertyReport,
}

impl Transfer {
    fn new(name: &str, hypothesis: bool, conclusion: bool) -> Self {
        let report = PropertyReport::new(name, Verdict::from_bool(!hypothesis || conclusion))
            .with("hypothesis", WitnessValue::text(if hypothesis { "true" } else { "false" }))
            .with("conclusion", WitnessValue::text(if conclusion { "true" } else { "false" }));
        Transfer { hypothesis, conclusion, report }
    }

    fn aborted(name: &str, e: &Error) -> Self {
        Transfer { hypothesis: false, conclusion: false, report: PropertyReport::from_error(name, e) }
    }

    pub fn respected(&self) -> bool {
        self.report.is_holds()
    }
}

fn decided(rep: &PropertyReport) -> Result<bool> {
    match rep.verdict {
        Verdict::AbortedCap => Err(Error::CapExceeded { what: rep.name.clone(), limit: rep.stats.cap.unwrap_or(0) }),
        v => Ok(v == Verdict::Holds),
    }
}

/// `f` a graded epimorphism with `Ker f ⊆ Grad_M(0)` and `K` semi-essential
/// in the target; concludes `f^{-1}(K)` semi-essential.
pub fn preimage_transfer(f: &GradedModuleHom, k: &GradedSubmodule, caps: &Caps) -> Transfer {
    const NAME: &str = "semi_essential_preimage";
    let run = || -> Result<Transfer> {
        let src = ModuleAnalysis::new(f.source(), *caps);
        let dst = ModuleAnalysis::new(f.target(), *caps);
        let ker = f.kernel_graded().ok_or_else(|| Error::precondition("map is not graded"))?;
        let rad0 = src.radical(&f.source().zero_submodule())?;
        let hyp = f.is_graded() && f.is_epi() && ker.is_subset(&rad0) && decided(&dst.is_semi_essential(k))?;
        let pre = f.preimage_graded(k).ok_or_else(|| Error::precondition("map is not graded"))?;
        let concl = decided(&src.is_semi_essential(&pre))?;
        Ok(Transfer::new(NAME, hyp, concl))
    };
    run().unwrap_or_else(|e| Transfer::aborted(NAME, &e))
}

/// `f` a graded isomorphism and `K` semi-essential; concludes `f(K)`
/// semi-essential.
pub fn image_transfer(f: &GradedModuleHom, k: &GradedSubmodule, caps: &Caps) -> Transfer {
    const NAME: &str = "semi_essential_image";
    let run = || -> Result<Transfer> {
        let src = ModuleAnalysis::new(f.source(), *caps);
        let dst = ModuleAnalysis::new(f.target(), *caps);
        let hyp = f.is_graded() && f.is_epi() && f.is_mono() && decided(&src.is_semi_essential(k))?;
        let img = f.image_graded(k).ok_or_else(|| Error::precondition("map is not graded"))?;
        let concl = !img.is_zero() && decided(&dst.is_semi_essential(&img))?;
        Ok(Transfer::new(NAME, hyp, concl))
    };
    run().unwrap_or_else(|e| Transfer::aborted(NAME, &e))
}

/// `K ≠ 0`, `T` a nonzero graded prime and `(K+T)/T` semi-essential in
/// `M/T`; concludes that every graded prime `P ⊇ T` with `K ∩ P = 0` is `T`.
pub fn quotient_transfer(m: &FiniteGradedModule, k: &GradedSubmodule, t: &GradedSubmodule, caps: &Caps) -> Transfer {
    const NAME: &str = "semi_essential_quotient";
    let run = || -> Result<Transfer> {
        let an = ModuleAnalysis::new(m, *caps);
        let mut hyp = !k.is_zero() && !t.is_zero() && !t.is_full() && decided(&an.is_graded_prime(t))?;
        if hyp {
            let q = m.quotient(t)?;
            let qa = ModuleAnalysis::new(&q.module, *caps);
            let image = q.push(&k.sum(t));
            hyp = !image.is_zero() && decided(&qa.is_semi_essential(&image))?;
        }
        let concl = an
            .primes()?
            .iter()
            .filter(|p| t.is_subset(p) && k.intersection(p).is_zero())
            .all(|p| p == t);
        Ok(Transfer::new(NAME, hyp, concl))
    };
    run().unwrap_or_else(|e| Transfer::aborted(NAME, &e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{build, AngleReading, HomKind};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn z12i_prime_and_essential() {
        let m = build::gaussian_pair(12).unwrap();
        let a = ModuleAnalysis::new(&m, caps());
        let angle = |x| m.angle(x, AngleReading::Basis);
        assert!(a.is_graded_prime(&angle(3)).is_holds());
        let six = a.is_graded_prime(&angle(6));
        assert!(six.is_fails());
        assert_eq!(six.witness_value("r").unwrap().render(), "2*1");
        assert_eq!(six.witness_value("m").unwrap().render(), "3*1");
        assert_eq!(a.is_graded_prime(&m.full_submodule()).verdict, Verdict::NotApplicable);

        let ess = a.is_essential(&angle(6));
        assert!(ess.is_fails());
        assert_eq!(ess.witness_value("x").unwrap().render(), "4*1");
        assert!(a.is_essential_bruteforce(&angle(6)).is_fails());
        assert!(a.is_semi_essential(&angle(6)).is_holds());
        let four = a.is_semi_essential(&angle(4));
        assert!(four.is_fails());
        assert_eq!(four.witness_value("P").unwrap().render(), "<3*1, 3*i>");
        assert!(a.is_semi_essential(&angle(2)).is_holds());
        assert_eq!(a.radical(&angle(4)).unwrap(), angle(2));
        assert!(a.is_faithful().is_holds());
        for k in a.lattice().unwrap().iter().filter(|k| !k.is_zero()) {
            assert_eq!(a.is_semi_essential(k).verdict, a.semi_essential_characterization(k).verdict);
        }
    }

    #[test]
    fn z36i_uniformity() {
        let m = build::gaussian_pair(36).unwrap();
        let a = ModuleAnalysis::new(&m, caps());
        let angle = |x| m.angle(x, AngleReading::Basis);
        let primes = a.primes().unwrap();
        assert!(primes.contains(&angle(2)) && primes.contains(&angle(3)));
        assert!(a.is_semi_essential(&angle(12)).is_holds());
        assert!(a.is_semi_essential(&angle(18)).is_holds());
        assert!(a.is_semi_uniform().is_holds());
        assert!(a.is_uniform().is_fails());
        assert!(a.is_multiplication().is_fails());

        let k = m.restrict(&angle(3)).unwrap();
        let ka = ModuleAnalysis::new(&k.module, caps());
        let su = ka.is_semi_uniform();
        assert!(su.is_fails());
        let n = k.pull(&angle(12));
        let p = k.pull(&angle(9));
        let sub = |s: &GradedSubmodule| WitnessValue::subgroup(k.module.basis(), s);
        assert_eq!(su.witness_value("N"), Some(&sub(&n)));
        assert_eq!(su.witness_value("P"), Some(&sub(&p)));
    }

    #[test]
    fn transfers_on_identity_and_projection() {
        let m = build::gaussian_pair(36).unwrap();
        let id = GradedModuleHom::new(m.clone(), m.clone(), (0..2).map(|j| m.basis().unit(j)).collect(), HomKind::Graded).unwrap();
        let k = m.angle(12, AngleReading::Basis);
        let t = image_transfer(&id, &k, &caps());
        assert!(t.hypothesis && t.conclusion && t.respected());
        let q = m.quotient(&m.angle(2, AngleReading::Basis)).unwrap();
        let t = preimage_transfer(&q.projection, &q.module.full_submodule(), &caps());
        assert!(t.respected());
        let z12 = build::gaussian_pair(12).unwrap();
        let t = quotient_transfer(&z12, &z12.angle(4, AngleReading::Basis), &z12.angle(3, AngleReading::Basis), &caps());
        assert!(t.respected());
    }
}
