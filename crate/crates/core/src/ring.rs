//! Finite graded rings given by a multiplication table on a graded basis.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{Hom, Subgroup};
use crate::error::{Error, Result};
use crate::graded::{BasisVector, GradedBasis, GradedSubgroup, Operators, Vector};
use crate::group::{Degree, Group};
use crate::monomial::MonomialGradedRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two",
        }
    }
}

/// `R = ⊕_g R_g` with `R_g` spanned by the basis vectors of degree `g`.
///
/// `mul[i][j]` is the product of basis vectors `i` and `j`; `one` is the
/// multiplicative identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGradedRing {
    group: Group,
    basis: GradedBasis,
    mul: Vec<Vector>,
    one: Vector,
}

impl FiniteGradedRing {
    /// Checks shapes and every ring and grading axiom.
    pub fn new(group: Group, basis: Vec<BasisVector>, mul: Vec<Vec<Vector>>, one: Vector) -> Result<Self> {
        let r = Self::new_unchecked(group, basis, mul, one)?;
        let v = r.validate();
        if v.is_empty() {
            Ok(r)
        } else {
            Err(Error::Validation(v))
        }
    }

    /// Checks shapes only. Use [`validate`](Self::validate) for the axioms.
    pub fn new_unchecked(group: Group, basis: Vec<BasisVector>, mul: Vec<Vec<Vector>>, one: Vector) -> Result<Self> {
        for b in &basis {
            if !group.contains(b.degree) {
                return Err(Error::input(format!("degree of '{}' is not a group element", b.name)));
            }
        }
        let basis = GradedBasis::new(basis)?;
        let k = basis.len();
        if mul.len() != k || mul.iter().any(|r| r.len() != k) || one.len() != k {
            return Err(Error::input(format!("multiplication table must be {k}x{k}")));
        }
        let mut flat = Vec::with_capacity(k * k);
        for row in mul {
            for mut v in row {
                if v.len() != k {
                    return Err(Error::input("product vector has wrong length"));
                }
                basis.reduce(&mut v);
                flat.push(v);
            }
        }
        let mut one = one;
        basis.reduce(&mut one);
        Ok(FiniteGradedRing { group, basis, mul: flat, one })
    }

    /// Human-readable list of violated axioms; empty when valid.
    pub fn validate(&self) -> Vec<String> {
        let k = self.len();
        let b = &self.basis;
        let mut out = Vec::new();
        let name = |i: usize| b.vector(i).name.as_str();
        for i in 0..k {
            for j in 0..k {
                let p = self.basis_product(i, j);
                let expected = self.group.op(b.vector(i).degree, b.vector(j).degree);
                for (t, &c) in p.iter().enumerate() {
                    if c != 0 && b.vector(t).degree != expected {
                        out.push(format!(
                            "grading: {}*{} has a component on {} of degree {} but should have degree {}",
                            name(i),
                            name(j),
                            name(t),
                            self.group.label(b.vector(t).degree),
                            self.group.label(expected)
                        ));
                    }
                }
                for &o in &[b.vector(i).order, b.vector(j).order] {
                    if !b.is_zero(&b.scale(o, p)) {
                        out.push(format!(
                            "orders: {}*{} is not killed by {}",
                            name(i),
                            name(j),
                            o
                        ));
                        break;
                    }
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                let ij = self.basis_product(i, j).clone();
                for t in 0..k {
                    let lhs = self.mul(&ij, &b.unit(t));
                    let rhs = self.mul(&b.unit(i), self.basis_product(j, t));
                    if lhs != rhs {
                        out.push(format!("associativity fails on ({}, {}, {})", name(i), name(j), name(t)));
                    }
                }
            }
        }
        for j in 0..k {
            let e = b.unit(j);
            if self.mul(&self.one, &e) != e {
                out.push(format!("identity: 1*{} != {}", name(j), name(j)));
            }
            if self.mul(&e, &self.one) != e {
                out.push(format!("identity: {}*1 != {}", name(j), name(j)));
            }
        }
        if !b.is_zero(&self.one) && b.homogeneous_degree(&self.one) != Some(self.group.identity()) {
            out.push("identity is not homogeneous of the neutral degree".to_string());
        }
        out
    }

    pub fn group(&self) -> &Group {
        &self.group
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

    /// Number of elements of `R`.
    pub fn order(&self) -> u128 {
        self.basis.moduli().iter().map(|&n| n as u128).product()
    }

    pub fn is_zero_ring(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.mul[i * self.len() + j]
    }

    pub fn zero(&self) -> Vector {
        self.basis.zero()
    }

    pub fn one(&self) -> &Vector {
        &self.one
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vector {
        self.basis.add(a, b)
    }

    pub fn neg(&self, a: &[u64]) -> Vector {
        self.basis.neg(a)
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vector {
        self.basis.sub(a, b)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vector {
        let k = self.len();
        let m = self.basis.moduli();
        let mut acc = vec![0u128; k];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = x as u128 * y as u128;
                for (t, &p) in self.basis_product(i, j).iter().enumerate() {
                    if p != 0 {
                        acc[t] = (acc[t] + c * p as u128) % m[t] as u128;
                    }
                }
            }
        }
        acc.into_iter().map(|x| x as u64).collect()
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        self.basis.is_zero(a)
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| (0..k).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Degrees `g` with `R_g ≠ 0`, sorted for witnesses.
    pub fn support(&self) -> Vec<Degree> {
        let mut s = self.basis.degrees();
        self.group.sort_for_witness(&mut s);
        s
    }

    pub fn decompose(&self, a: &[u64]) -> alloc::collections::BTreeMap<Degree, Vector> {
        self.basis.decompose(a)
    }

    pub fn component(&self, g: Degree) -> GradedSubgroup {
        GradedSubgroup::component(&self.basis, g)
    }

    /// `R_g R_h` as a subgroup of the block `gh` (block-local coordinates).
    /// `None` when `R_{gh} = 0`.
    pub fn component_product_local(&self, g: Degree, h: Degree) -> Option<Subgroup> {
        let gh = self.group.op(g, h);
        let target = self.basis.block(gh)?;
        let mut gens = Vec::new();
        if let (Some(bg), Some(bh)) = (self.basis.block(g), self.basis.block(h)) {
            for &i in &bg.indices {
                for &j in &bh.indices {
                    gens.push(self.basis.local(gh, self.basis_product(i, j)));
                }
            }
        }
        Some(Subgroup::generated(&target.moduli, gens.iter().map(|v| v.as_slice())))
    }

    pub fn component_product(&self, g: Degree, h: Degree) -> GradedSubgroup {
        let gh = self.group.op(g, h);
        let mut parts: Vec<Subgroup> = GradedSubgroup::zero(&self.basis).parts().to_vec();
        if let Some(local) = self.component_product_local(g, h) {
            let pos = self.basis.degrees().iter().position(|&d| d == gh).expect("block exists");
            parts[pos] = local;
        }
        GradedSubgroup::from_parts(&self.basis, parts).expect("shapes match")
    }

    /// Multiplication by basis vectors from the left (`x ↦ e_i x`) and/or the right.
    pub fn operators(&self, side: Side) -> Operators {
        let k = self.len();
        let mut maps = Vec::new();
        if matches!(side, Side::Left | Side::TwoSided) {
            for i in 0..k {
                maps.push((0..k).map(|j| self.basis_product(i, j).clone()).collect());
            }
        }
        if matches!(side, Side::Right | Side::TwoSided) {
            for i in 0..k {
                maps.push((0..k).map(|j| self.basis_product(j, i).clone()).collect());
            }
        }
        Operators::new(maps)
    }

    /// Ideal generated by homogeneous elements.
    pub fn ideal_generated(&self, gens: &[Vector], side: Side) -> Result<GradedSubgroup> {
        if let Some(g) = gens.iter().find(|g| !self.basis.is_homogeneous(g)) {
            return Err(Error::precondition(format!(
                "generator {} is not homogeneous",
                self.basis.render(g)
            )));
        }
        let start = GradedSubgroup::generated_by_components(&self.basis, gens.iter().map(|v| v.as_slice()));
        Ok(self.operators(side).close(&self.basis, start))
    }

    /// Ideal generated by arbitrary elements, as an ungraded subgroup.
    pub fn ideal_generated_ungraded(&self, gens: &[Vector], side: Side) -> Subgroup {
        let m = self.basis.moduli();
        let start = Subgroup::generated(m, gens.iter().map(|v| v.as_slice()));
        self.operators(side).close_ungraded(m, start)
    }

    pub fn is_ideal(&self, s: &GradedSubgroup, side: Side) -> bool {
        self.operators(side).close(&self.basis, s.clone()) == *s
    }

    /// `y ↦ x y` (Left) or `y ↦ y x` (Right) restricted to `R_from`, as a map
    /// into the block of the product degree. `x` must be homogeneous or zero.
    pub fn mul_map(&self, x: &[u64], from: Degree, side: Side) -> Option<(Degree, Hom)> {
        let dx = self.basis.homogeneous_degree(x)?;
        let src = self.basis.block(from)?;
        let to = match side {
            Side::Right => self.group.op(from, dx),
            _ => self.group.op(dx, from),
        };
        let dst = self.basis.block(to)?;
        let images = src
            .indices
            .iter()
            .map(|&j| {
                let e = self.basis.unit(j);
                let p = if side == Side::Right { self.mul(&e, x) } else { self.mul(x, &e) };
                self.basis.local(to, &p)
            })
            .collect();
        Some((to, Hom::new(&src.moduli, &dst.moduli, images).expect("bilinear")))
    }

    /// `y ↦ x y` on all of `R`.
    pub fn left_mul_hom(&self, x: &[u64]) -> Hom {
        let m = self.basis.moduli();
        let images = (0..self.len()).map(|j| self.mul(x, &self.basis.unit(j))).collect();
        Hom::new(m, m, images).expect("bilinear")
    }

    /// `y ↦ y x` on all of `R`.
    pub fn right_mul_hom(&self, x: &[u64]) -> Hom {
        let m = self.basis.moduli();
        let images = (0..self.len()).map(|j| self.mul(&self.basis.unit(j), x)).collect();
        Hom::new(m, m, images).expect("bilinear")
    }

    /// `v ∈ R_{g^{-1}}` with `u v = v u = 1`, if any.
    pub fn inverse_in(&self, u: &[u64], target_degree: Degree) -> Option<Vector> {
        let g_inv = target_degree;
        let e = self.group.identity();
        let (to, hom) = self.mul_map(u, g_inv, Side::Left)?;
        if to != e {
            return None;
        }
        let v_local = hom.solve(&self.basis.local(e, &self.one))?;
        let v = self.basis.embed(g_inv, &v_local);
        (self.mul(&v, u) == self.one).then_some(v)
    }

    /// Smallest `u ∈ R_g` (lexicographic) with an inverse; the inverse is only
    /// sought in `R_{g^{-1}}`.
    pub fn homogeneous_unit_search(&self, g: Degree, cap: u64) -> Result<Option<(Vector, Vector)>> {
        let Some(block) = self.basis.block(g) else {
            return Ok(None);
        };
        let g_inv = self.group.inverse(g);
        if self.basis.block(g_inv).is_none() {
            return Ok(None);
        }
        for loc in Subgroup::full(&block.moduli).elements(cap)?.into_iter().skip(1) {
            let u = self.basis.embed(g, &loc);
            if let Some(v) = self.inverse_in(&u, g_inv) {
                return Ok(Some((u, v)));
            }
        }
        Ok(None)
    }

    /// All elements of `R`, lexicographically.
    pub fn elements(&self, cap: u64) -> Result<Vec<Vector>> {
        Subgroup::full(self.basis.moduli()).elements(cap)
    }
}

/// Either backend behind one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradedRing {
    Finite(FiniteGradedRing),
    Monomial(MonomialGradedRing),
}

impl GradedRing {
    pub fn group(&self) -> &Group {
        match self {
            GradedRing::Finite(r) => r.group(),
            GradedRing::Monomial(r) => r.group(),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteGradedRing> {
        match self {
            GradedRing::Finite(r) => Some(r),
            GradedRing::Monomial(_) => None,
        }
    }
}

impl From<FiniteGradedRing> for GradedRing {
    fn from(r: FiniteGradedRing) -> Self {
        GradedRing::Finite(r)
    }
}

impl From<MonomialGradedRing> for GradedRing {
    fn from(r: MonomialGradedRing) -> Self {
        GradedRing::Monomial(r)
    }
}

/// Helpers for building tables by hand.
pub mod build {
    use super::*;

    /// Full matrix ring `M_n(Z_p)` with `deg e_ij = d_i^{-1} d_j`, basis
    /// named `e11, e12, …` in row-major order.
    pub fn matrix_ring(group: Group, p: u64, degrees: &[Degree]) -> Result<FiniteGradedRing> {
        let keep = |_: usize, _: usize| true;
        matrix_subring(group, p, degrees, keep)
    }

    /// Span of the matrix units `e_ij` with `keep(i, j)`; the caller picks a
    /// set closed under multiplication and containing the diagonal.
    pub fn matrix_subring(
        group: Group,
        p: u64,
        degrees: &[Degree],
        keep: impl Fn(usize, usize) -> bool,
    ) -> Result<FiniteGradedRing> {
        let n = degrees.len();
        let mut units = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if keep(i, j) {
                    units.push((i, j));
                }
            }
        }
        let basis: Vec<BasisVector> = units
            .iter()
            .map(|&(i, j)| {
                let d = group.op(group.inverse(degrees[i]), degrees[j]);
                BasisVector::new(unit_name(n, i, j), p, d)
            })
            .collect();
        let k = units.len();
        let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j));
        let mut mul = vec![vec![vec![0u64; k]; k]; k];
        for (a, &(i, j)) in units.iter().enumerate() {
            for (b, &(s, t)) in units.iter().enumerate() {
                if j == s {
                    let c = index(i, t).ok_or_else(|| Error::input("matrix unit set not closed"))?;
                    mul[a][b][c] = 1;
                }
            }
        }
        let mut one = vec![0u64; k];
        for i in 0..n {
            one[index(i, i).ok_or_else(|| Error::input("diagonal unit missing"))?] = 1;
        }
        FiniteGradedRing::new(group, basis, mul, one)
    }

    fn unit_name(n: usize, i: usize, j: usize) -> String {
        if n <= 9 {
            format!("e{}{}", i + 1, j + 1)
        } else {
            format!("e{}_{}", i + 1, j + 1)
        }
    }

    /// `Z_n[x]/(x^2 - c)` with `1` in degree `e` and `x` in degree `h`, which
    /// must have order dividing 2.
    pub fn quadratic(group: Group, n: u64, c: u64, h: Degree, names: (&str, &str)) -> Result<FiniteGradedRing> {
        let e = group.identity();
        let basis = vec![BasisVector::new(names.0, n, e), BasisVector::new(names.1, n, h)];
        let mul = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![c % n, 0]],
        ];
        FiniteGradedRing::new(group, basis, mul, vec![1, 0])
    }

    /// `Z_n` concentrated in degree `e`.
    pub fn trivial_cyclic(group: Group, n: u64) -> Result<FiniteGradedRing> {
        let e = group.identity();
        FiniteGradedRing::new(group, vec![BasisVector::new("1", n, e)], vec![vec![vec![1]]], vec![1])
    }

    /// Group algebra `Z_p[H]` graded by `H → H/N`, given the quotient map.
    pub fn group_algebra(
        h: &crate::group::FiniteGroup,
        p: u64,
        grading: Group,
        quotient: impl Fn(usize) -> Degree,
    ) -> Result<FiniteGradedRing> {
        let n = h.order();
        let basis = (0..n)
            .map(|x| BasisVector::new(format!("[{}]", h.label(x)), p, quotient(x)))
            .collect();
        let mut mul = vec![vec![vec![0u64; n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                mul[a][b][h.mul(a, b)] = 1;
            }
        }
        let mut one = vec![0u64; n];
        one[h.identity()] = 1;
        FiniteGradedRing::new(grading, basis, mul, one)
    }

    /// `R ⊕ S` over the same group.
    pub fn direct_sum(a: &FiniteGradedRing, b: &FiniteGradedRing) -> Result<FiniteGradedRing> {
        if a.group() != b.group() {
            return Err(Error::input("direct sum needs a common grading group"));
        }
        let (ka, kb) = (a.len(), b.len());
        let k = ka + kb;
        let mut basis: Vec<BasisVector> = Vec::with_capacity(k);
        for v in a.basis().vectors() {
            basis.push(BasisVector::new(format!("{}.0", v.name), v.order, v.degree));
        }
        for v in b.basis().vectors() {
            basis.push(BasisVector::new(format!("{}.1", v.name), v.order, v.degree));
        }
        let mut mul = vec![vec![vec![0u64; k]; k]; k];
        for i in 0..ka {
            for j in 0..ka {
                mul[i][j][..ka].copy_from_slice(a.basis_product(i, j));
            }
        }
        for i in 0..kb {
            for j in 0..kb {
                mul[ka + i][ka + j][ka..].copy_from_slice(b.basis_product(i, j));
            }
        }
        let mut one = a.one().clone();
        one.extend_from_slice(b.one());
        FiniteGradedRing::new(a.group().clone(), basis, mul, one)
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    #[test]
    fn matrix_ring_arithmetic() {
        let z4 = Group::cyclic(4).unwrap();
        let r = matrix_ring(z4, 2, &[0, 2]).unwrap();
        assert_eq!(r.order(), 16);
        let b = r.basis();
        let e12 = b.unit(b.index_of("e12").unwrap());
        let e21 = b.unit(b.index_of("e21").unwrap());
        let e11 = b.unit(b.index_of("e11").unwrap());
        assert_eq!(r.mul(&e12, &e21), e11);
        assert_eq!(b.vector(b.index_of("e12").unwrap()).degree, 2);
        assert_eq!(r.support(), vec![0, 2]);
        assert!(!r.is_commutative());
    }

    #[test]
    fn invalid_grading_is_reported() {
        let z4 = Group::cyclic(4).unwrap();
        let r = matrix_ring(z4.clone(), 2, &[0, 2]).unwrap();
        let mut basis: Vec<BasisVector> = r.basis().vectors().to_vec();
        let k = basis.len();
        let i = r.basis().index_of("e12").unwrap();
        basis[i].degree = 1;
        let mul = (0..k).map(|a| (0..k).map(|b| r.basis_product(a, b).clone()).collect()).collect();
        let err = FiniteGradedRing::new(z4, basis, mul, r.one().clone()).unwrap_err();
        match err {
            Error::Validation(v) => assert!(v.iter().any(|m| m.starts_with("grading"))),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn ideals_and_units() {
        let z4 = Group::cyclic(4).unwrap();
        let r = matrix_ring(z4, 2, &[0, 2]).unwrap();
        let b = r.basis();
        let e11 = b.unit(b.index_of("e11").unwrap());
        let left = r.ideal_generated(std::slice::from_ref(&e11), Side::Left).unwrap();
        assert_eq!(left.order(), 4);
        let two = r.ideal_generated(&[e11], Side::TwoSided).unwrap();
        assert!(two.is_full());
        let (u, v) = r.homogeneous_unit_search(2, 1000).unwrap().unwrap();
        assert_eq!(r.mul(&u, &v), *r.one());
        assert!(r.homogeneous_unit_search(1, 1000).unwrap().is_none());
        let mixed = r.add(&b.unit(0), &b.unit(1));
        assert!(r.ideal_generated(&[mixed], Side::Left).is_err());
    }

    #[test]
    fn quadratic_extension() {
        let z2 = Group::cyclic(2).unwrap();
        let r = quadratic(z2, 3, 2, 1, ("1", "i")).unwrap();
        assert!(r.is_commutative());
        let i = r.basis().unit(1);
        assert_eq!(r.mul(&i, &i), vec![2, 0]);
        assert!(r.homogeneous_unit_search(1, 100).unwrap().is_some());
    }
}
