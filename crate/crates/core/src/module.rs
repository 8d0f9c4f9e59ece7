//! Finite graded modules over finite graded rings.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::abelian::{CyclicDecomposition, Hom, Subgroup};
use crate::error::{Error, Result};
use crate::graded::{BasisVector, GradedBasis, GradedSubgroup, Operators, Vector};
use crate::group::{Degree, Group};
use crate::report::Caps;
use crate::ring::FiniteGradedRing;
use crate::ring_props::join_closure;

/// Graded submodules are graded subgroups of the module basis that are
/// closed under the action.
pub type GradedSubmodule = GradedSubgroup;

/// `M = ⊕_h M_h` with `action[i][j] = e_i · m_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGradedModule {
    ring: FiniteGradedRing,
    basis: GradedBasis,
    action: Vec<Vector>,
    regular: bool,
}

/// Reading of the `⟨x⟩` notation for an integer `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AngleReading {
    /// Generated by `x·b` for every module basis vector `b`.
    #[default]
    Basis,
    /// Generated by the single element `x·b_0`.
    Elementwise,
}

impl FiniteGradedModule {
    pub fn new(ring: FiniteGradedRing, basis: Vec<BasisVector>, action: Vec<Vec<Vector>>) -> Result<Self> {
        let m = Self::new_unchecked(ring, basis, action)?;
        let v = m.validate();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(Error::Validation(v))
        }
    }

    pub fn new_unchecked(ring: FiniteGradedRing, basis: Vec<BasisVector>, action: Vec<Vec<Vector>>) -> Result<Self> {
        for b in &basis {
            if !ring.group().contains(b.degree) {
                return Err(Error::input(format!("degree of '{}' is not a group element", b.name)));
            }
        }
        let basis = GradedBasis::new(basis)?;
        let (k, n) = (ring.len(), basis.len());
        if action.len() != k || action.iter().any(|r| r.len() != n) {
            return Err(Error::input(format!("action table must be {k}x{n}")));
        }
        let mut flat = Vec::with_capacity(k * n);
        for row in action {
            for mut v in row {
                if v.len() != n {
                    return Err(Error::input("action vector has wrong length"));
                }
                basis.reduce(&mut v);
                flat.push(v);
            }
        }
        Ok(FiniteGradedModule { ring, basis, action: flat, regular: false })
    }

    /// `R` as a left module over itself.
    pub fn regular(ring: &FiniteGradedRing) -> Self {
        let k = ring.len();
        let action = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| ring.basis_product(i, j).clone())
            .collect();
        FiniteGradedModule { ring: ring.clone(), basis: ring.basis().clone(), action, regular: true }
    }

    /// Whether this is `R` acting on itself.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn validate(&self) -> Vec<String> {
        let r = &self.ring;
        let rb = r.basis();
        let b = &self.basis;
        let group = r.group();
        let mut out = Vec::new();
        for i in 0..r.len() {
            for j in 0..self.len() {
                let p = self.action_basis(i, j);
                let expected = group.op(rb.vector(i).degree, b.vector(j).degree);
                for (t, &c) in p.iter().enumerate() {
                    if c != 0 && b.vector(t).degree != expected {
                        out.push(format!(
                            "grading: {}*{} has a component on {} of degree {} but should have degree {}",
                            rb.vector(i).name,
                            b.vector(j).name,
                            b.vector(t).name,
                            group.label(b.vector(t).degree),
                            group.label(expected)
                        ));
                    }
                }
                for &o in &[rb.vector(i).order, b.vector(j).order] {
                    if !b.is_zero(&b.scale(o, p)) {
                        out.push(format!(
                            "orders: {}*{} is not killed by {}",
                            rb.vector(i).name,
                            b.vector(j).name,
                            o
                        ));
                        break;
                    }
                }
            }
        }
        for i in 0..r.len() {
            for j in 0..r.len() {
                let ij = r.basis_product(i, j);
                for t in 0..self.len() {
                    let lhs = self.act(ij, &b.unit(t));
                    let rhs = self.act(&rb.unit(i), self.action_basis(j, t));
                    if lhs != rhs {
                        out.push(format!(
                            "associativity fails on ({}, {}, {})",
                            rb.vector(i).name,
                            rb.vector(j).name,
                            b.vector(t).name
                        ));
                    }
                }
            }
        }
        for t in 0..self.len() {
            if self.act(r.one(), &b.unit(t)) != b.unit(t) {
                out.push(format!("identity does not fix {}", b.vector(t).name));
            }
        }
        out
    }

    pub fn ring(&self) -> &FiniteGradedRing {
        &self.ring
    }

    pub fn group(&self) -> &Group {
        self.ring.group()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn order(&self) -> u128 {
        self.basis.moduli().iter().map(|&n| n as u128).product()
    }

    pub fn is_zero_module(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn action_basis(&self, i: usize, j: usize) -> &Vector {
        &self.action[i * self.len() + j]
    }

    /// `r · m`.
    pub fn act(&self, r: &[u64], m: &[u64]) -> Vector {
        let n = self.len();
        let moduli = self.basis.moduli();
        let mut out = alloc::vec![0u128; n];
        for (i, &a) in r.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &c) in m.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let coef = a as u128 * c as u128;
                for (t, &x) in self.action_basis(i, j).iter().enumerate() {
                    if x != 0 {
                        out[t] = (out[t] + coef % moduli[t] as u128 * x as u128) % moduli[t] as u128;
                    }
                }
            }
        }
        out.into_iter().map(|x| x as u64).collect()
    }

    /// Action of each ring basis vector.
    pub fn operators(&self) -> Operators {
        let n = self.len();
        Operators::new(
            (0..self.ring.len())
                .map(|i| (0..n).map(|j| self.action_basis(i, j).clone()).collect())
                .collect(),
        )
    }

    pub fn zero_submodule(&self) -> GradedSubmodule {
        GradedSubgroup::zero(&self.basis)
    }

    pub fn full_submodule(&self) -> GradedSubmodule {
        GradedSubgroup::full(&self.basis)
    }

    /// Smallest submodule containing the homogeneous elements `gens`.
    pub fn submodule_generated(&self, gens: &[Vector]) -> Result<GradedSubmodule> {
        if let Some(g) = gens.iter().find(|g| !self.basis.is_homogeneous(g)) {
            return Err(Error::precondition(format!("generator {} is not homogeneous", self.basis.render(g))));
        }
        let start = GradedSubgroup::generated_by_components(&self.basis, gens.iter().map(|v| v.as_slice()));
        Ok(self.operators().close(&self.basis, start))
    }

    /// Submodule generated by arbitrary elements, possibly not graded.
    pub fn submodule_generated_ungraded(&self, gens: &[Vector]) -> Subgroup {
        let m = self.basis.moduli();
        self.operators().close_ungraded(m, Subgroup::generated(m, gens.iter().map(|v| v.as_slice())))
    }

    /// Whether the submodule generated by `gens` is graded.
    pub fn is_graded_check(&self, gens: &[Vector]) -> bool {
        GradedSubgroup::is_graded(&self.basis, &self.submodule_generated_ungraded(gens))
    }

    pub fn is_submodule(&self, s: &GradedSubgroup) -> bool {
        s.parts().len() == self.basis.blocks().len() && self.operators().close(&self.basis, s.clone()) == *s
    }

    /// `R x` for homogeneous `x`.
    pub fn cyclic(&self, x: &[u64]) -> Result<GradedSubmodule> {
        self.submodule_generated(&[x.to_vec()])
    }

    /// `⟨x⟩` for an integer `x`.
    pub fn angle(&self, x: u64, reading: AngleReading) -> GradedSubmodule {
        let b = &self.basis;
        let gens: Vec<Vector> = match reading {
            AngleReading::Basis => (0..self.len()).map(|j| b.scale(x, &b.unit(j))).collect(),
            AngleReading::Elementwise => (0..self.len().min(1)).map(|j| b.scale(x, &b.unit(j))).collect(),
        };
        self.submodule_generated(&gens).expect("scaled basis vectors are homogeneous")
    }

    /// `r ↦ (r·g_1, …, r·g_t)` on all of `R`.
    fn evaluation(&self, gens: &[Vector]) -> Hom {
        let rb = self.ring.basis();
        let mut dst = Vec::new();
        for _ in gens {
            dst.extend_from_slice(self.basis.moduli());
        }
        let images = (0..self.ring.len())
            .map(|i| {
                let mut img = Vec::with_capacity(dst.len());
                for g in gens {
                    img.extend(self.act(&rb.unit(i), g));
                }
                img
            })
            .collect();
        Hom::new(rb.moduli(), &dst, images).expect("bilinear action")
    }

    fn ring_ideal(&self, s: &Subgroup) -> GradedSubgroup {
        GradedSubgroup::from_subgroup(self.ring.basis(), s).expect("colon ideals of graded submodules are graded")
    }

    /// `(N : M) = { r : r M ⊆ N }`.
    pub fn colon(&self, n: &GradedSubmodule) -> GradedSubgroup {
        self.colon_generated(n, &self.full_submodule())
    }

    /// `(N : L) = { r : r L ⊆ N }`.
    pub fn colon_generated(&self, n: &GradedSubmodule, l: &GradedSubmodule) -> GradedSubgroup {
        let gens = l.generators(&self.basis);
        let hom = self.evaluation(&gens);
        let ns = n.to_subgroup(&self.basis);
        let mut target_gens: Vec<Vector> = Vec::new();
        for (t, _) in gens.iter().enumerate() {
            for g in ns.generators() {
                let mut v = alloc::vec![0u64; gens.len() * self.len()];
                v[t * self.len()..(t + 1) * self.len()].copy_from_slice(g);
                target_gens.push(v);
            }
        }
        let target = Subgroup::generated(hom.target(), target_gens.iter().map(|v| v.as_slice()));
        self.ring_ideal(&hom.preimage(&target))
    }

    /// `Ann(N) = { r : r N = 0 }`.
    pub fn annihilator(&self, n: &GradedSubmodule) -> GradedSubgroup {
        self.colon_generated(&self.zero_submodule(), n)
    }

    /// `(N : m) = { r : r m ∈ N }` for homogeneous `m`.
    pub fn colon_of_element(&self, n: &GradedSubmodule, m: &[u64]) -> Result<GradedSubgroup> {
        if !self.basis.is_homogeneous(m) && !self.basis.is_zero(m) {
            return Err(Error::precondition("element must be homogeneous"));
        }
        let hom = self.evaluation(&[m.to_vec()]);
        Ok(self.ring_ideal(&hom.preimage(&n.to_subgroup(&self.basis))))
    }

    /// `I L` for a graded ideal `I` and a submodule `L`.
    pub fn ideal_times(&self, ideal: &GradedSubgroup, l: &GradedSubmodule) -> GradedSubmodule {
        let rb = self.ring.basis();
        let mut gens = Vec::new();
        for r in ideal.generators(rb) {
            for m in l.generators(&self.basis) {
                gens.push(self.act(&r, &m));
            }
        }
        self.submodule_generated(&gens).expect("products of homogeneous elements are homogeneous")
    }

    /// Every graded submodule, smallest first: the join closure of the cyclic
    /// submodules `R x` over nonzero homogeneous `x`.
    pub fn enumerate_graded_submodules(&self, caps: &Caps) -> Result<Vec<GradedSubmodule>> {
        let homs = self.full_submodule().homogeneous_elements(&self.basis, caps.elements)?;
        let mut cyclic = alloc::collections::BTreeSet::new();
        for (_, x) in &homs {
            cyclic.insert(self.cyclic(x)?);
        }
        join_closure(self.zero_submodule(), cyclic, caps.lattice)
    }

    /// Nonzero homogeneous elements, by degree then coordinates.
    pub fn homogeneous_elements(&self, caps: &Caps) -> Result<Vec<(Degree, Vector)>> {
        self.full_submodule().homogeneous_elements(&self.basis, caps.elements)
    }

    /// `M / N` with the induced grading.
    pub fn quotient(&self, n: &GradedSubmodule) -> Result<Quotient> {
        if !self.is_submodule(n) {
            return Err(Error::precondition("not a graded submodule"));
        }
        let b = &self.basis;
        let mut vectors = Vec::new();
        let mut decomps = Vec::new();
        for (block, part) in b.blocks().iter().zip(n.parts()) {
            let d = CyclicDecomposition::quotient(part);
            for (ord, gen) in d.orders.iter().zip(&d.generators) {
                let full = b.embed(block.degree, gen);
                vectors.push(BasisVector::new(format!("[{}]", b.render(&full)), *ord, block.degree));
            }
            decomps.push(d);
        }
        let push = |v: &[u64]| -> Vector {
            let mut out = Vec::new();
            for (block, d) in b.blocks().iter().zip(&decomps) {
                out.extend(d.coords(&b.local(block.degree, v)));
            }
            out
        };
        let mut reps = Vec::new();
        for (block, d) in b.blocks().iter().zip(&decomps) {
            for gen in &d.generators {
                reps.push(b.embed(block.degree, gen));
            }
        }
        let rb = self.ring.basis();
        let action = (0..self.ring.len())
            .map(|i| reps.iter().map(|m| push(&self.act(&rb.unit(i), m))).collect())
            .collect();
        let module = FiniteGradedModule::new_unchecked(self.ring.clone(), vectors, action)?;
        let images = (0..self.len()).map(|j| push(&b.unit(j))).collect();
        let projection = GradedModuleHom::new(self.clone(), module.clone(), images, HomKind::Graded)?;
        Ok(Quotient { module, projection, kernel: n.clone() })
    }

    /// `K` as a module in its own right, with the inclusion into `M`.
    pub fn restrict(&self, k: &GradedSubmodule) -> Result<Restriction> {
        if !self.is_submodule(k) {
            return Err(Error::precondition("not a graded submodule"));
        }
        let b = &self.basis;
        let mut vectors = Vec::new();
        let mut reps = Vec::new();
        let mut decomps = Vec::new();
        for (block, part) in b.blocks().iter().zip(k.parts()) {
            let d = CyclicDecomposition::subgroup(part);
            for (ord, gen) in d.orders.iter().zip(&d.generators) {
                let full = b.embed(block.degree, gen);
                vectors.push(BasisVector::new(b.render(&full), *ord, block.degree));
                reps.push(full);
            }
            decomps.push(d);
        }
        let coords = |v: &[u64]| -> Vector {
            let mut out = Vec::new();
            for (block, d) in b.blocks().iter().zip(&decomps) {
                out.extend(d.coords(&b.local(block.degree, v)));
            }
            out
        };
        let rb = self.ring.basis();
        let action = (0..self.ring.len())
            .map(|i| reps.iter().map(|m| coords(&self.act(&rb.unit(i), m))).collect())
            .collect();
        let module = FiniteGradedModule::new_unchecked(self.ring.clone(), vectors, action)?;
        let inclusion = GradedModuleHom::new(module.clone(), self.clone(), reps, HomKind::Graded)?;
        Ok(Restriction { module, inclusion })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub module: FiniteGradedModule,
    pub projection: GradedModuleHom,
    kernel: GradedSubmodule,
}

impl Quotient {
    /// `L ↦ L / N` for `L ⊇ N`.
    pub fn push(&self, l: &GradedSubmodule) -> GradedSubmodule {
        self.projection.image_graded(l).expect("graded hom")
    }

    /// The submodule `π^{-1}(L)` of `M`, which contains `N`.
    pub fn lift(&self, l: &GradedSubmodule) -> GradedSubmodule {
        self.projection.preimage_graded(l).expect("graded hom")
    }

    pub fn kernel(&self) -> &GradedSubmodule {
        &self.kernel
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub module: FiniteGradedModule,
    pub inclusion: GradedModuleHom,
}

impl Restriction {
    /// `L ∩ K` in the coordinates of `K`.
    pub fn pull(&self, l: &GradedSubmodule) -> GradedSubmodule {
        self.inclusion.preimage_graded(l).expect("graded hom")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomKind {
    Plain,
    Graded,
    GradeFixing,
}

/// An `R`-linear map given by images of the source basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModuleHom {
    source: FiniteGradedModule,
    target: FiniteGradedModule,
    hom: Hom,
    kind: HomKind,
}

impl GradedModuleHom {
    pub fn new(source: FiniteGradedModule, target: FiniteGradedModule, images: Vec<Vector>, kind: HomKind) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::input("source and target are over different rings"));
        }
        if images.len() != source.len() || images.iter().any(|v| v.len() != target.len()) {
            return Err(Error::input("image list does not match the bases"));
        }
        let mut images = images;
        for v in images.iter_mut() {
            target.basis.reduce(v);
        }
        let hom = Hom::new(source.basis.moduli(), target.basis.moduli(), images)
            .map_err(|_| Error::Validation(alloc::vec!["images are not compatible with additive orders".into()]))?;
        let f = GradedModuleHom { source, target, hom, kind };
        let mut problems = Vec::new();
        let rb = f.source.ring.basis();
        for i in 0..f.source.ring.len() {
            let r = rb.unit(i);
            for j in 0..f.source.len() {
                let m = f.source.basis.unit(j);
                if f.apply(&f.source.act(&r, &m)) != f.target.act(&r, &f.apply(&m)) {
                    problems.push(format!(
                        "not linear on ({}, {})",
                        rb.vector(i).name,
                        f.source.basis.vector(j).name
                    ));
                }
            }
        }
        match kind {
            HomKind::Plain => {}
            HomKind::Graded => {
                if !f.is_graded() {
                    problems.push("does not preserve degrees".into());
                }
            }
            HomKind::GradeFixing => {
                if !f.target.regular {
                    problems.push("grade fixing maps must land in the ring".into());
                } else if !f.is_graded() {
                    problems.push("f(M_g) is not inside R_g".into());
                }
            }
        }
        if problems.is_empty() {
            Ok(f)
        } else {
            Err(Error::Validation(problems))
        }
    }

    pub fn source(&self) -> &FiniteGradedModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteGradedModule {
        &self.target
    }

    pub fn kind(&self) -> HomKind {
        self.kind
    }

    pub fn images(&self) -> &[Vector] {
        self.hom.images()
    }

    pub fn apply(&self, v: &[u64]) -> Vector {
        self.hom.apply(v)
    }

    /// `f(M_g) ⊆ M'_g` for every `g`.
    pub fn is_graded(&self) -> bool {
        (0..self.source.len()).all(|j| {
            let img = self.apply(&self.source.basis.unit(j));
            let g = self.source.basis.vector(j).degree;
            self.target.basis.is_zero(&img) || self.target.basis.homogeneous_degree(&img) == Some(g)
        })
    }

    /// `f(M_g) ⊆ R_g` with the ring as target.
    pub fn is_grade_fixing(&self) -> bool {
        self.target.regular && self.is_graded()
    }

    pub fn image(&self, n: &GradedSubmodule) -> Subgroup {
        self.hom.image(&n.to_subgroup(&self.source.basis))
    }

    pub fn image_graded(&self, n: &GradedSubmodule) -> Option<GradedSubmodule> {
        GradedSubgroup::from_subgroup(&self.target.basis, &self.image(n))
    }

    pub fn preimage(&self, l: &GradedSubmodule) -> Subgroup {
        self.hom.preimage(&l.to_subgroup(&self.target.basis))
    }

    pub fn preimage_graded(&self, l: &GradedSubmodule) -> Option<GradedSubmodule> {
        GradedSubgroup::from_subgroup(&self.source.basis, &self.preimage(l))
    }

    pub fn kernel(&self) -> Subgroup {
        self.hom.kernel()
    }

    pub fn kernel_graded(&self) -> Option<GradedSubmodule> {
        GradedSubgroup::from_subgroup(&self.source.basis, &self.kernel())
    }

    pub fn is_epi(&self) -> bool {
        self.hom.is_surjective()
    }

    pub fn is_mono(&self) -> bool {
        self.hom.is_injective()
    }
}

pub mod build {
    //! Module constructors used by fixtures and the generator.

    use super::*;
    use crate::ring::build as ring_build;

    /// `Z_n[i]`-style pair `M_0 = Z_n`, `M_1 = i Z_n` over `Z_n` graded
    /// trivially by `Z_2`.
    pub fn gaussian_pair(n: u64) -> Result<FiniteGradedModule> {
        let ring = ring_build::trivial_cyclic(Group::cyclic(2)?, n)?;
        let basis = alloc::vec![BasisVector::new("1", n, 0), BasisVector::new("i", n, 1)];
        let action = alloc::vec![alloc::vec![alloc::vec![1, 0], alloc::vec![0, 1]]];
        FiniteGradedModule::new(ring, basis, action)
    }

    /// Column vectors `K^n` over a good-graded `M_n(K)`, with
    /// `deg(v_i) = d_i^{-1} s` for a shift `s`.
    pub fn column_module(ring: &FiniteGradedRing, p: u64, n: usize, degrees: &[Degree], shift: Degree) -> Result<FiniteGradedModule> {
        let group = ring.group();
        let rb = ring.basis();
        let basis: Vec<BasisVector> = (0..n)
            .map(|i| BasisVector::new(format!("v{}", i + 1), p, group.op(group.inverse(degrees[i]), shift)))
            .collect();
        let mut action = Vec::new();
        for t in 0..ring.len() {
            let name = &rb.vector(t).name;
            let (i, j) = parse_unit(name).ok_or_else(|| Error::input(format!("'{name}' is not a matrix unit")))?;
            action.push(
                (0..n)
                    .map(|k| {
                        let mut v = alloc::vec![0u64; n];
                        if k == j {
                            v[i] = 1;
                        }
                        v
                    })
                    .collect(),
            );
        }
        FiniteGradedModule::new(ring.clone(), basis, action)
    }

    fn parse_unit(name: &str) -> Option<(usize, usize)> {
        let rest = name.strip_prefix('e')?;
        let b = rest.as_bytes();
        if b.len() != 2 {
            return None;
        }
        let i = (b[0] as char).to_digit(10)? as usize;
        let j = (b[1] as char).to_digit(10)? as usize;
        (i >= 1 && j >= 1).then(|| (i - 1, j - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn z12i_basics() {
        let m = build::gaussian_pair(12).unwrap();
        assert!(m.validate().is_empty());
        let six = m.angle(6, AngleReading::Basis);
        assert_eq!(six.order(), 4);
        let four = m.angle(4, AngleReading::Basis);
        assert!(six.intersection(&four).is_zero());
        let colon = m.colon(&six);
        assert_eq!(colon.order(), 2);
        let c3 = m.colon_of_element(&six, &[3, 0]).unwrap();
        assert_eq!(c3.order(), 6);
        assert!(m.annihilator(&m.full_submodule()).is_zero());
        assert_eq!(m.enumerate_graded_submodules(&caps()).unwrap().len(), 36);
        let elementwise = m.angle(6, AngleReading::Elementwise);
        assert_eq!(elementwise.order(), 2);
    }

    #[test]
    fn z36i_lattice_and_quotient() {
        let m = build::gaussian_pair(36).unwrap();
        assert_eq!(m.enumerate_graded_submodules(&caps()).unwrap().len(), 81);
        assert!(m.angle(12, AngleReading::Basis).intersection(&m.angle(18, AngleReading::Basis)).is_zero());
        let three = m.angle(3, AngleReading::Basis);
        let q = m.quotient(&three).unwrap();
        assert!(q.module.validate().is_empty());
        assert_eq!(q.module.order(), 9);
        assert_eq!(q.lift(&q.module.zero_submodule()), three);
        let two = m.angle(2, AngleReading::Basis);
        let above = two.sum(&three);
        assert_eq!(q.lift(&q.push(&above)), above);
        let k = m.restrict(&three).unwrap();
        assert!(k.module.validate().is_empty());
        assert_eq!(k.module.order(), 144);
        assert_eq!(k.inclusion.image_graded(&k.module.full_submodule()).unwrap(), three);
    }

    #[test]
    fn grade_fixing_detection() {
        let ring = crate::ring::build::quadratic(Group::cyclic(2).unwrap(), 3, 2, 1, ("1", "i")).unwrap();
        let r = FiniteGradedModule::regular(&ring);
        let i = ring.basis().unit(1);
        let images: Vec<Vector> = (0..2).map(|j| ring.mul(&ring.basis().unit(j), &i)).collect();
        let f = GradedModuleHom::new(r.clone(), r.clone(), images.clone(), HomKind::Plain).unwrap();
        assert!(!f.is_grade_fixing());
        assert!(GradedModuleHom::new(r.clone(), r, images, HomKind::GradeFixing).is_err());
    }
}
