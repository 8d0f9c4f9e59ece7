//! Graded additive groups: a basis of cyclic generators, each with a degree,
//! and subgroups that split along the degree blocks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::Subgroup;
use crate::error::{Error, Result};
use crate::group::Degree;

pub type Vector = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector {
    pub name: String,
    pub order: u64,
    pub degree: Degree,
}

impl BasisVector {
    pub fn new(name: impl Into<String>, order: u64, degree: Degree) -> Self {
        BasisVector { name: name.into(), order, degree }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub degree: Degree,
    pub indices: Vec<usize>,
    pub moduli: Vec<u64>,
}

/// Cyclic generators grouped by degree. Blocks are sorted by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    vectors: Vec<BasisVector>,
    blocks: Vec<Block>,
    moduli: Vec<u64>,
}

impl GradedBasis {
    pub fn new(vectors: Vec<BasisVector>) -> Result<Self> {
        let mut names = alloc::collections::BTreeSet::new();
        for v in &vectors {
            if v.order < 2 {
                return Err(Error::input(format!("basis vector '{}' must have order at least 2", v.name)));
            }
            if !names.insert(v.name.clone()) {
                return Err(Error::input(format!("duplicate basis name '{}'", v.name)));
            }
        }
        let mut by_degree: BTreeMap<Degree, Vec<usize>> = BTreeMap::new();
        for (i, v) in vectors.iter().enumerate() {
            by_degree.entry(v.degree).or_default().push(i);
        }
        let blocks = by_degree
            .into_iter()
            .map(|(degree, indices)| Block {
                degree,
                moduli: indices.iter().map(|&i| vectors[i].order).collect(),
                indices,
            })
            .collect();
        let moduli = vectors.iter().map(|v| v.order).collect();
        Ok(GradedBasis { vectors, blocks, moduli })
    }

    /// A single-block basis; subgroups over it are arbitrary subgroups.
    pub fn ungraded(moduli: &[u64]) -> Self {
        let vectors: Vec<BasisVector> = moduli
            .iter()
            .enumerate()
            .map(|(i, &n)| BasisVector::new(format!("x{i}"), n, 0))
            .collect();
        GradedBasis::new(vectors).expect("distinct names")
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[BasisVector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &BasisVector {
        &self.vectors[i]
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn degrees(&self) -> Vec<Degree> {
        self.blocks.iter().map(|b| b.degree).collect()
    }

    pub fn block(&self, g: Degree) -> Option<&Block> {
        self.blocks
            .binary_search_by_key(&g, |b| b.degree)
            .ok()
            .map(|i| &self.blocks[i])
    }

    fn block_pos(&self, g: Degree) -> Option<usize> {
        self.blocks.binary_search_by_key(&g, |b| b.degree).ok()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vectors.iter().position(|v| v.name == name)
    }

    pub fn zero(&self) -> Vector {
        vec![0; self.len()]
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn reduce(&self, v: &mut [u64]) {
        for (x, n) in v.iter_mut().zip(&self.moduli) {
            *x %= n;
        }
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vector {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), n)| (x + y) % n).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vector {
        a.iter().zip(&self.moduli).map(|(x, n)| (n - x % n) % n).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vector {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: u64, a: &[u64]) -> Vector {
        a.iter()
            .zip(&self.moduli)
            .map(|(x, n)| ((c as u128 * *x as u128) % *n as u128) as u64)
            .collect()
    }

    pub fn is_zero(&self, v: &[u64]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    /// Nonzero homogeneous components, by degree.
    pub fn decompose(&self, v: &[u64]) -> BTreeMap<Degree, Vector> {
        let mut out = BTreeMap::new();
        for b in &self.blocks {
            if b.indices.iter().any(|&i| v[i] != 0) {
                let mut w = self.zero();
                for &i in &b.indices {
                    w[i] = v[i];
                }
                out.insert(b.degree, w);
            }
        }
        out
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn homogeneous_degree(&self, v: &[u64]) -> Option<Degree> {
        let d = self.decompose(v);
        if d.len() == 1 {
            d.keys().next().copied()
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self, v: &[u64]) -> bool {
        self.decompose(v).len() <= 1
    }

    pub fn local(&self, g: Degree, v: &[u64]) -> Vector {
        match self.block(g) {
            Some(b) => b.indices.iter().map(|&i| v[i]).collect(),
            None => Vec::new(),
        }
    }

    pub fn embed(&self, g: Degree, local: &[u64]) -> Vector {
        let mut v = self.zero();
        if let Some(b) = self.block(g) {
            for (&i, &x) in b.indices.iter().zip(local) {
                v[i] = x;
            }
        }
        v
    }

    pub fn render(&self, v: &[u64]) -> String {
        let mut terms = Vec::new();
        for (i, &c) in v.iter().enumerate() {
            match c {
                0 => {}
                1 => terms.push(self.vectors[i].name.clone()),
                c => terms.push(format!("{c}*{}", self.vectors[i].name)),
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// A subgroup `⊕_g H_g` with `H_g` inside the degree-`g` block.
///
/// Only meaningful together with the basis it was built on. Ordered by size
/// first so sorted collections list small subgroups first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSubgroup {
    parts: Vec<Subgroup>,
}

impl PartialOrd for GradedSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GradedSubgroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl GradedSubgroup {
    pub fn zero(basis: &GradedBasis) -> Self {
        GradedSubgroup { parts: basis.blocks.iter().map(|b| Subgroup::zero(&b.moduli)).collect() }
    }

    pub fn full(basis: &GradedBasis) -> Self {
        GradedSubgroup { parts: basis.blocks.iter().map(|b| Subgroup::full(&b.moduli)).collect() }
    }

    /// The whole block of degree `g`, zero elsewhere.
    pub fn component(basis: &GradedBasis, g: Degree) -> Self {
        let mut s = Self::zero(basis);
        if let Some(p) = basis.block_pos(g) {
            s.parts[p] = Subgroup::full(&basis.blocks[p].moduli);
        }
        s
    }

    pub fn from_parts(basis: &GradedBasis, parts: Vec<Subgroup>) -> Result<Self> {
        if parts.len() != basis.blocks.len()
            || parts.iter().zip(&basis.blocks).any(|(p, b)| p.moduli() != b.moduli.as_slice())
        {
            return Err(Error::input("graded subgroup does not match the basis"));
        }
        Ok(GradedSubgroup { parts })
    }

    /// Generated by the homogeneous components of `gens`.
    pub fn generated_by_components<'a>(basis: &GradedBasis, gens: impl IntoIterator<Item = &'a [u64]>) -> Self {
        let mut per: Vec<Vec<Vector>> = vec![Vec::new(); basis.blocks.len()];
        for v in gens {
            for (p, b) in basis.blocks.iter().enumerate() {
                let loc: Vector = b.indices.iter().map(|&i| v[i]).collect();
                if loc.iter().any(|&x| x != 0) {
                    per[p].push(loc);
                }
            }
        }
        GradedSubgroup {
            parts: per
                .iter()
                .zip(&basis.blocks)
                .map(|(g, b)| Subgroup::generated(&b.moduli, g.iter().map(|v| v.as_slice())))
                .collect(),
        }
    }

    pub fn parts(&self) -> &[Subgroup] {
        &self.parts
    }

    pub fn part(&self, basis: &GradedBasis, g: Degree) -> Option<&Subgroup> {
        basis.block_pos(g).map(|p| &self.parts[p])
    }

    pub fn order(&self) -> u128 {
        self.parts.iter().map(|p| p.order()).product()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    pub fn is_full(&self) -> bool {
        self.parts.iter().all(|p| p.is_full())
    }

    /// Degrees with a nonzero part.
    pub fn support(&self, basis: &GradedBasis) -> Vec<Degree> {
        self.parts
            .iter()
            .zip(&basis.blocks)
            .filter(|(p, _)| !p.is_zero())
            .map(|(_, b)| b.degree)
            .collect()
    }

    pub fn contains(&self, basis: &GradedBasis, v: &[u64]) -> bool {
        self.parts.iter().zip(&basis.blocks).all(|(p, b)| {
            let loc: Vector = b.indices.iter().map(|&i| v[i]).collect();
            p.contains(&loc)
        })
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a.is_subgroup_of(b))
    }

    pub fn sum(&self, other: &Self) -> Self {
        GradedSubgroup { parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.sum(b)).collect() }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        GradedSubgroup {
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.intersection(b))
                .collect(),
        }
    }

    /// Generators, each homogeneous, as full vectors.
    pub fn generators(&self, basis: &GradedBasis) -> Vec<Vector> {
        let mut out = Vec::new();
        for (p, b) in self.parts.iter().zip(&basis.blocks) {
            for g in p.generators() {
                out.push(basis.embed(b.degree, g));
            }
        }
        out
    }

    /// Nonzero homogeneous elements, ordered by degree then coordinates.
    pub fn homogeneous_elements(&self, basis: &GradedBasis, cap: u64) -> Result<Vec<(Degree, Vector)>> {
        let total: u128 = self.parts.iter().map(|p| p.order()).sum();
        if total > cap as u128 {
            return Err(Error::CapExceeded { what: "homogeneous elements".to_string(), limit: cap });
        }
        let mut out = Vec::new();
        for (p, b) in self.parts.iter().zip(&basis.blocks) {
            for loc in p.elements(cap)?.into_iter().skip(1) {
                out.push((b.degree, basis.embed(b.degree, &loc)));
            }
        }
        Ok(out)
    }

    /// All elements, in lexicographic order of full coordinates.
    pub fn elements(&self, basis: &GradedBasis, cap: u64) -> Result<Vec<Vector>> {
        self.to_subgroup(basis).elements(cap)
    }

    /// The same subgroup without the grading.
    pub fn to_subgroup(&self, basis: &GradedBasis) -> Subgroup {
        let gens = self.generators(basis);
        Subgroup::generated(basis.moduli(), gens.iter().map(|v| v.as_slice()))
    }

    /// Whether an arbitrary subgroup is the sum of its homogeneous parts.
    pub fn is_graded(basis: &GradedBasis, h: &Subgroup) -> bool {
        h.generators().all(|g| basis.decompose(g).values().all(|c| h.contains(c)))
    }

    /// The graded subgroup with the same elements, if `h` is graded.
    pub fn from_subgroup(basis: &GradedBasis, h: &Subgroup) -> Option<Self> {
        if !Self::is_graded(basis, h) {
            return None;
        }
        let gens: Vec<Vector> = h.generators().map(|g| g.to_vec()).collect();
        Some(Self::generated_by_components(basis, gens.iter().map(|v| v.as_slice())))
    }

    pub fn render(&self, basis: &GradedBasis) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let gens: Vec<String> = self.generators(basis).iter().map(|g| basis.render(g)).collect();
        format!("<{}>", gens.join(", "))
    }
}

/// Additive operators on a graded group given by the images of basis vectors,
/// each mapping homogeneous elements to homogeneous elements.
#[derive(Debug, Clone)]
pub struct Operators {
    maps: Vec<Vec<Vector>>,
}

impl Operators {
    pub fn new(maps: Vec<Vec<Vector>>) -> Self {
        Operators { maps }
    }

    pub fn apply(basis_out: &GradedBasis, images: &[Vector], v: &[u64]) -> Vector {
        let n = basis_out.len();
        let mut out = vec![0u128; n];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (t, &x) in images[j].iter().enumerate() {
                out[t] = (out[t] + c as u128 * x as u128) % basis_out.moduli()[t] as u128;
            }
        }
        out.into_iter().map(|x| x as u64).collect()
    }

    /// Smallest subgroup containing `start` and closed under every operator.
    /// Images are split into homogeneous parts, which is exact when the
    /// operators are homogeneous.
    pub fn close(&self, basis: &GradedBasis, start: GradedSubgroup) -> GradedSubgroup {
        let mut current = start;
        let mut work = current.generators(basis);
        while let Some(w) = work.pop() {
            for images in &self.maps {
                let u = Self::apply(basis, images, &w);
                for (_, part) in basis.decompose(&u) {
                    if !current.contains(basis, &part) {
                        current = current.sum(&GradedSubgroup::generated_by_components(basis, [part.as_slice()]));
                        work.push(part);
                    }
                }
            }
        }
        current
    }

    /// Closure inside the ungraded group: the submodule generated, with no
    /// splitting into components.
    pub fn close_ungraded(&self, moduli: &[u64], start: Subgroup) -> Subgroup {
        let flat = GradedBasis::ungraded(moduli);
        let mut current = start;
        let mut work: Vec<Vector> = current.generators().map(|g| g.to_vec()).collect();
        while let Some(w) = work.pop() {
            for images in &self.maps {
                let u = Self::apply(&flat, images, &w);
                if !current.contains(&u) {
                    current = current.sum(&Subgroup::generated(moduli, [u.as_slice()]));
                    work.push(u);
                }
            }
        }
        current
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis() -> GradedBasis {
        GradedBasis::new(vec![
            BasisVector::new("a", 4, 0),
            BasisVector::new("b", 2, 1),
            BasisVector::new("c", 4, 0),
        ])
        .unwrap()
    }

    #[test]
    fn blocks_and_decomposition() {
        let b = basis();
        assert_eq!(b.degrees(), vec![0, 1]);
        assert_eq!(b.block(0).unwrap().indices, vec![0, 2]);
        let d = b.decompose(&[1, 1, 3]);
        assert_eq!(d[&0], vec![1, 0, 3]);
        assert_eq!(d[&1], vec![0, 1, 0]);
        assert_eq!(b.homogeneous_degree(&[0, 1, 0]), Some(1));
        assert_eq!(b.homogeneous_degree(&[1, 1, 0]), None);
        assert_eq!(b.render(&[2, 0, 1]), "2*a + c");
    }

    #[test]
    fn graded_check() {
        let b = basis();
        let h = Subgroup::generated(b.moduli(), [[1u64, 1, 0].as_slice()]);
        assert!(!GradedSubgroup::is_graded(&b, &h));
        let g = GradedSubgroup::generated_by_components(&b, [[1u64, 1, 0].as_slice()]);
        assert_eq!(g.order(), 8);
        assert!(GradedSubgroup::is_graded(&b, &g.to_subgroup(&b)));
        assert_eq!(GradedSubgroup::from_subgroup(&b, &g.to_subgroup(&b)), Some(g));
    }

    #[test]
    fn closure_under_operators() {
        // multiplication by 2 on every coordinate
        let b = basis();
        let images: Vec<Vector> = (0..3).map(|i| b.scale(2, &b.unit(i))).collect();
        let ops = Operators::new(vec![images]);
        let start = GradedSubgroup::generated_by_components(&b, [[1u64, 0, 0].as_slice()]);
        let closed = ops.close(&b, start.clone());
        assert_eq!(closed, start);
        let flat = ops.close_ungraded(b.moduli(), Subgroup::generated(b.moduli(), [[1u64, 1, 1].as_slice()]));
        assert_eq!(flat.order(), 4);
    }
}
