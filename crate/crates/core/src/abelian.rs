//! Subgroups of finite abelian groups `Z_{n_1} ⊕ … ⊕ Z_{n_k}`.
//!
//! A subgroup `H` is stored as the Hermite normal form of its preimage lattice
//! `L ⊇ n_1 Z ⊕ … ⊕ n_k Z` in `Z^k`: an upper triangular basis with pivots
//! `d_j | n_j` and entries right of each pivot reduced into `[0, d_col)`.
//! The form is unique, so equal subgroups compare equal.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::periodic::gcd;

fn reduce_row(row: &mut [i128], moduli: &[i128], from: usize) {
    for t in from..row.len() {
        row[t] = row[t].rem_euclid(moduli[t]);
    }
}

fn sub_multiple(row: &mut [i128], q: i128, pivot: &[i128], from: usize) {
    for t in from..row.len() {
        row[t] -= q * pivot[t];
    }
}

/// Hermite normal form of the lattice spanned by `gens` and `n_j e_j`.
fn hnf(moduli: &[u64], gens: Vec<Vec<i128>>) -> Vec<Vec<u64>> {
    let k = moduli.len();
    let m: Vec<i128> = moduli.iter().map(|&x| x as i128).collect();
    let mut pool: Vec<Vec<i128>> = Vec::with_capacity(gens.len() + k);
    for mut g in gens {
        reduce_row(&mut g, &m, 0);
        if g.iter().any(|&x| x != 0) {
            pool.push(g);
        }
    }
    for j in 0..k {
        let mut r = vec![0i128; k];
        r[j] = m[j];
        pool.push(r);
    }
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(k);
    for j in 0..k {
        let (mut active, mut rest): (Vec<_>, Vec<_>) = pool.into_iter().partition(|r| r[j] != 0);
        while active.len() > 1 {
            let (pi, _) = active
                .iter()
                .enumerate()
                .min_by_key(|(_, r)| r[j].abs())
                .expect("nonempty");
            let pivot = active.swap_remove(pi);
            let mut next = vec![pivot.clone()];
            for mut r in active {
                let q = r[j].div_euclid(pivot[j]);
                sub_multiple(&mut r, q, &pivot, j);
                reduce_row(&mut r, &m, j + 1);
                if r[j] != 0 {
                    next.push(r);
                } else if r.iter().any(|&x| x != 0) {
                    rest.push(r);
                }
            }
            active = next;
        }
        let mut p = active.pop().expect("n_j e_j keeps column j nonzero");
        if p[j] < 0 {
            p.iter_mut().for_each(|x| *x = -*x);
        }
        reduce_row(&mut p, &m, j + 1);
        rows.push(p);
        pool = rest;
    }
    for j in 0..k {
        let d = rows[j][j];
        for i in 0..j {
            let q = rows[i][j].div_euclid(d);
            if q != 0 {
                let pivot = rows[j].clone();
                sub_multiple(&mut rows[i], q, &pivot, j);
            }
        }
    }
    rows.into_iter()
        .map(|r| r.into_iter().map(|x| x as u64).collect())
        .collect()
}

fn to_i128(v: &[u64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

/// A subgroup of `Z_{n_1} ⊕ … ⊕ Z_{n_k}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    moduli: Vec<u64>,
    rows: Vec<Vec<u64>>,
}

impl Subgroup {
    pub fn generated<'a>(moduli: &[u64], gens: impl IntoIterator<Item = &'a [u64]>) -> Self {
        let gens = gens.into_iter().map(to_i128).collect();
        Subgroup { moduli: moduli.to_vec(), rows: hnf(moduli, gens) }
    }

    fn from_i128(moduli: &[u64], gens: Vec<Vec<i128>>) -> Self {
        Subgroup { moduli: moduli.to_vec(), rows: hnf(moduli, gens) }
    }

    pub fn zero(moduli: &[u64]) -> Self {
        Self::generated(moduli, core::iter::empty())
    }

    pub fn full(moduli: &[u64]) -> Self {
        let k = moduli.len();
        let gens: Vec<Vec<i128>> = (0..k)
            .map(|j| {
                let mut r = vec![0; k];
                r[j] = 1;
                r
            })
            .collect();
        Self::from_i128(moduli, gens)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// Pivot of column `j`.
    pub fn pivot(&self, j: usize) -> u64 {
        self.rows[j][j]
    }

    pub fn order(&self) -> u128 {
        (0..self.rank())
            .map(|j| (self.moduli[j] / self.pivot(j)) as u128)
            .product()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rank()).all(|j| self.pivot(j) == self.moduli[j])
    }

    pub fn is_full(&self) -> bool {
        (0..self.rank()).all(|j| self.pivot(j) == 1)
    }

    /// Nonzero rows of the normal form; they generate the subgroup.
    pub fn generators(&self) -> impl Iterator<Item = &[u64]> + '_ {
        (0..self.rank())
            .filter(|&j| self.pivot(j) != self.moduli[j])
            .map(|j| self.rows[j].as_slice())
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        v.iter().zip(&self.moduli).map(|(&x, &n)| x % n).collect()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let k = self.rank();
        let m: Vec<i128> = self.moduli.iter().map(|&x| x as i128).collect();
        let mut w = to_i128(v);
        reduce_row(&mut w, &m, 0);
        for j in 0..k {
            let d = self.rows[j][j] as i128;
            if w[j] % d != 0 {
                return false;
            }
            let q = w[j] / d;
            if q != 0 {
                let row = to_i128(&self.rows[j]);
                sub_multiple(&mut w, q, &row, j);
                reduce_row(&mut w, &m, j);
            }
        }
        true
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.generators().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &Subgroup) -> Subgroup {
        let gens = self
            .generators()
            .chain(other.generators())
            .map(to_i128)
            .collect();
        Self::from_i128(&self.moduli, gens)
    }

    /// Intersection by the Zassenhaus construction on `(x, x)` and `(y, 0)`.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let k = self.rank();
        let mut dm = self.moduli.clone();
        dm.extend_from_slice(&self.moduli);
        let mut gens = Vec::new();
        for g in self.generators() {
            let mut r = to_i128(g);
            r.extend(to_i128(g));
            gens.push(r);
        }
        for g in other.generators() {
            let mut r = to_i128(g);
            r.extend(core::iter::repeat_n(0, k));
            gens.push(r);
        }
        let rows = hnf(&dm, gens);
        let tail = rows[k..].iter().map(|r| to_i128(&r[k..])).collect();
        Self::from_i128(&self.moduli, tail)
    }

    /// Elements in lexicographic order of their reduced coordinates.
    pub fn elements(&self, cap: u64) -> Result<Vec<Vec<u64>>> {
        if self.order() > cap as u128 {
            return Err(Error::CapExceeded { what: "subgroup elements".to_string(), limit: cap });
        }
        let k = self.rank();
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = vec![0u64; k];
        self.enumerate(0, &mut vec![0i128; k], &mut cur, &mut out);
        Ok(out)
    }

    fn enumerate(&self, j: usize, partial: &mut Vec<i128>, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let k = self.rank();
        if j == k {
            out.push(cur.clone());
            return;
        }
        let d = self.rows[j][j] as i128;
        let n = self.moduli[j] as i128;
        let base = partial[j].rem_euclid(d);
        let mut v = base;
        while v < n {
            let c = (v - partial[j]) / d;
            cur[j] = v as u64;
            let saved = partial.clone();
            for t in j..k {
                partial[t] += c * self.rows[j][t] as i128;
            }
            self.enumerate(j + 1, partial, cur, out);
            *partial = saved;
            v += d;
        }
    }

    /// Smallest nonzero element in lexicographic order: the last nontrivial
    /// normal-form row, since every later row is trivial.
    pub fn first_nonzero(&self) -> Option<Vec<u64>> {
        (0..self.rank())
            .rev()
            .find(|&j| self.pivot(j) != self.moduli[j])
            .map(|j| self.reduce(&self.rows[j]))
    }
}

/// Additive map `Z_n → Z_m` given by the images of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom {
    src: Vec<u64>,
    dst: Vec<u64>,
    images: Vec<Vec<u64>>,
}

impl Hom {
    /// Fails unless `n_i · image_i = 0` for every generator.
    pub fn new(src: &[u64], dst: &[u64], images: Vec<Vec<u64>>) -> Result<Self> {
        if images.len() != src.len() || images.iter().any(|v| v.len() != dst.len()) {
            return Err(Error::input("homomorphism shape mismatch"));
        }
        for (i, img) in images.iter().enumerate() {
            for (t, &x) in img.iter().enumerate() {
                if !(x as u128 * src[i] as u128).is_multiple_of(dst[t] as u128) {
                    return Err(Error::input("homomorphism not well defined on generator orders"));
                }
            }
        }
        let images = images
            .into_iter()
            .map(|v| v.iter().zip(dst).map(|(&x, &n)| x % n).collect())
            .collect();
        Ok(Hom { src: src.to_vec(), dst: dst.to_vec(), images })
    }

    pub fn source(&self) -> &[u64] {
        &self.src
    }

    pub fn target(&self) -> &[u64] {
        &self.dst
    }

    pub fn images(&self) -> &[Vec<u64>] {
        &self.images
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u128; self.dst.len()];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (t, &x) in self.images[i].iter().enumerate() {
                out[t] = (out[t] + c as u128 * x as u128) % self.dst[t] as u128;
            }
        }
        out.into_iter().map(|x| x as u64).collect()
    }

    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<Vec<u64>> = h.generators().map(|g| self.apply(g)).collect();
        Subgroup::generated(&self.dst, gens.iter().map(|v| v.as_slice()))
    }

    pub fn image_of_all(&self) -> Subgroup {
        Subgroup::generated(&self.dst, self.images.iter().map(|v| v.as_slice()))
    }

    pub fn kernel(&self) -> Subgroup {
        self.preimage(&Subgroup::zero(&self.dst))
    }

    /// `{ x : f(x) ∈ target }`, via the graph lattice `(f(e_i), e_i)`.
    pub fn preimage(&self, target: &Subgroup) -> Subgroup {
        let (l, k) = (self.dst.len(), self.src.len());
        let mut moduli = self.dst.clone();
        moduli.extend_from_slice(&self.src);
        let mut gens = Vec::with_capacity(k + l);
        for (i, img) in self.images.iter().enumerate() {
            let mut r = to_i128(img);
            r.extend((0..k).map(|t| if t == i { 1 } else { 0 }));
            gens.push(r);
        }
        for g in target.generators() {
            let mut r = to_i128(g);
            r.extend(core::iter::repeat_n(0, k));
            gens.push(r);
        }
        let rows = hnf(&moduli, gens);
        let tail = rows[l..].iter().map(|r| to_i128(&r[l..])).collect();
        Subgroup::from_i128(&self.src, tail)
    }

    /// Some `x` with `f(x) = t`, if one exists.
    pub fn solve(&self, t: &[u64]) -> Option<Vec<u64>> {
        let t: Vec<u64> = t.iter().zip(&self.dst).map(|(&x, &n)| x % n).collect();
        if t.iter().all(|&x| x == 0) {
            return Some(vec![0; self.src.len()]);
        }
        let ord = t
            .iter()
            .zip(&self.dst)
            .map(|(&x, &n)| n / gcd(x, n))
            .fold(1u64, crate::periodic::lcm);
        // kernel of (s, x) ↦ f(x) - s t on Z_ord ⊕ source, with s as the first column
        let (l, k) = (self.dst.len(), self.src.len());
        let mut moduli = self.dst.clone();
        moduli.push(ord);
        moduli.extend_from_slice(&self.src);
        let mut gens = Vec::with_capacity(k + 1);
        let mut r: Vec<i128> = t.iter().map(|&x| -(x as i128)).collect();
        r.push(1);
        r.extend(core::iter::repeat_n(0, k));
        gens.push(r);
        for (i, img) in self.images.iter().enumerate() {
            let mut r = to_i128(img);
            r.push(0);
            r.extend((0..k).map(|s| if s == i { 1 } else { 0 }));
            gens.push(r);
        }
        let rows = hnf(&moduli, gens);
        let row = &rows[l];
        if row[l] != 1 {
            return None;
        }
        Some(row[l + 1..].to_vec())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_of_all().is_full()
    }
}

/// `Z^k / rowspace` written as `⊕ Z_{d_i}` with explicit generators and a
/// coordinate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicDecomposition {
    /// Orders `d_i > 1` of the cyclic factors.
    pub orders: Vec<u64>,
    /// Representatives of the factor generators in ambient coordinates.
    pub generators: Vec<Vec<u64>>,
    ambient: Vec<u64>,
    /// Upper triangular change of basis for subgroup decompositions.
    lattice: Option<Vec<Vec<i128>>>,
    /// Columns of `V` kept after dropping trivial factors.
    projection: Vec<Vec<i128>>,
}

struct Diagonal {
    diag: Vec<i128>,
    v: Vec<Vec<i128>>,
    vinv: Vec<Vec<i128>>,
}

/// Diagonalizes a full-rank square matrix with unimodular row and column
/// operations, tracking the column transform `V` and its inverse.
fn diagonalize(mut a: Vec<Vec<i128>>) -> Diagonal {
    let k = a.len();
    let mut v: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| (i == j) as i128).collect()).collect();
    let mut vinv = v.clone();
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..k {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let (bi, bj) = best.expect("full rank");
            a.swap(bi, t);
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(bj, t);
                }
                for row in v.iter_mut() {
                    row.swap(bj, t);
                }
                vinv.swap(bj, t);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..k {
                let q = a[i][t] / p;
                if q != 0 {
                    for c in t..k {
                        a[i][c] -= q * a[t][c];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..k {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    let rj = vinv[j].clone();
                    for (c, x) in vinv[t].iter_mut().enumerate() {
                        *x += q * rj[c];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
        if a[t][t] < 0 {
            for c in 0..k {
                a[t][c] = -a[t][c];
            }
        }
    }
    Diagonal { diag: (0..k).map(|i| a[i][i]).collect(), v, vinv }
}

fn hnf_matrix(h: &Subgroup) -> Vec<Vec<i128>> {
    h.rows.iter().map(|r| to_i128(r)).collect()
}

impl CyclicDecomposition {
    /// `ambient / h`.
    pub fn quotient(h: &Subgroup) -> Self {
        let ambient = h.moduli.clone();
        let dg = diagonalize(hnf_matrix(h));
        let keep: Vec<usize> = (0..dg.diag.len()).filter(|&i| dg.diag[i] > 1).collect();
        let generators = keep
            .iter()
            .map(|&i| {
                dg.vinv[i]
                    .iter()
                    .zip(&ambient)
                    .map(|(&x, &n)| x.rem_euclid(n as i128) as u64)
                    .collect()
            })
            .collect();
        let projection = keep
            .iter()
            .map(|&i| dg.v.iter().map(|row| row[i]).collect())
            .collect();
        CyclicDecomposition {
            orders: keep.iter().map(|&i| dg.diag[i] as u64).collect(),
            generators,
            ambient,
            lattice: None,
            projection,
        }
    }

    /// `h` itself, as an abstract group.
    pub fn subgroup(h: &Subgroup) -> Self {
        let ambient = h.moduli.clone();
        let k = ambient.len();
        let a = hnf_matrix(h);
        // C = diag(n) A^{-1}; integral because n_i e_i lies in the lattice
        let c: Vec<Vec<i128>> = (0..k)
            .map(|i| {
                let mut target = vec![0i128; k];
                target[i] = ambient[i] as i128;
                solve_upper(&a, &target)
            })
            .collect();
        let dg = diagonalize(c);
        let keep: Vec<usize> = (0..dg.diag.len()).filter(|&i| dg.diag[i] > 1).collect();
        let generators = keep
            .iter()
            .map(|&i| {
                let y = &dg.vinv[i];
                (0..k)
                    .map(|col| {
                        let s: i128 = (0..k).map(|t| y[t] * a[t][col]).sum();
                        s.rem_euclid(ambient[col] as i128) as u64
                    })
                    .collect()
            })
            .collect();
        let projection = keep
            .iter()
            .map(|&i| dg.v.iter().map(|row| row[i]).collect())
            .collect();
        CyclicDecomposition {
            orders: keep.iter().map(|&i| dg.diag[i] as u64).collect(),
            generators,
            ambient,
            lattice: Some(a),
            projection,
        }
    }

    pub fn ambient(&self) -> &[u64] {
        &self.ambient
    }

    /// Coordinates of `x` in the cyclic factors. For a subgroup decomposition
    /// `x` must lie in the subgroup.
    pub fn coords(&self, x: &[u64]) -> Vec<u64> {
        let x: Vec<i128> = x.iter().zip(&self.ambient).map(|(&v, &n)| (v % n) as i128).collect();
        let y = match &self.lattice {
            None => x,
            Some(a) => solve_upper(a, &x),
        };
        self.projection
            .iter()
            .zip(&self.orders)
            .map(|(col, &d)| {
                let s: i128 = y.iter().zip(col).map(|(a, b)| a * b).sum();
                s.rem_euclid(d as i128) as u64
            })
            .collect()
    }

    /// Ambient representative of a coordinate vector.
    pub fn element(&self, coords: &[u64]) -> Vec<u64> {
        let mut out = vec![0u128; self.ambient.len()];
        for (c, g) in coords.iter().zip(&self.generators) {
            for (t, &x) in g.iter().enumerate() {
                out[t] = (out[t] + *c as u128 * x as u128) % self.ambient[t] as u128;
            }
        }
        out.into_iter().map(|x| x as u64).collect()
    }
}

/// Solves `y A = b` for upper triangular `A` with exact division.
fn solve_upper(a: &[Vec<i128>], b: &[i128]) -> Vec<i128> {
    let k = a.len();
    let mut y = vec![0i128; k];
    for j in 0..k {
        let s: i128 = (0..j).map(|t| y[t] * a[t][j]).sum();
        let r = b[j] - s;
        debug_assert_eq!(r % a[j][j], 0, "vector outside the lattice");
        y[j] = r / a[j][j];
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    /// Closure oracle: all `Σ c_i g_i` by breadth-first search.
    fn closure(moduli: &[u64], gens: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
        let zero = vec![0u64; moduli.len()];
        let mut seen = BTreeSet::from([zero.clone()]);
        let mut stack = vec![zero];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y: Vec<u64> = x.iter().zip(g).zip(moduli).map(|((a, b), n)| (a + b) % n).collect();
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    fn all_vectors(moduli: &[u64]) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &n in moduli {
            out = out
                .into_iter()
                .flat_map(|v| (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                }))
                .collect();
        }
        out
    }

    fn setup() -> impl Strategy<Value = (Vec<u64>, Vec<Vec<u64>>, Vec<Vec<u64>>)> {
        prop::collection::vec(2u64..9, 1..4).prop_flat_map(|m| {
            let vecs = m.iter().map(|&n| 0..n).collect::<Vec<_>>();
            let gens = prop::collection::vec(vecs.clone(), 0..4);
            let gens2 = prop::collection::vec(vecs, 0..4);
            (Just(m), gens, gens2)
        })
    }

    proptest! {
        #[test]
        fn hnf_matches_closure((m, g, _) in setup()) {
            let h = Subgroup::generated(&m, g.iter().map(|v| v.as_slice()));
            let oracle = closure(&m, &g);
            let elems: BTreeSet<Vec<u64>> = h.elements(1 << 20).unwrap().into_iter().collect();
            prop_assert_eq!(&elems, &oracle);
            prop_assert_eq!(h.order(), oracle.len() as u128);
            for v in all_vectors(&m) {
                prop_assert_eq!(h.contains(&v), oracle.contains(&v));
            }
        }

        #[test]
        fn normal_form_is_canonical((m, g, _) in setup()) {
            let h = Subgroup::generated(&m, g.iter().map(|v| v.as_slice()));
            let elems = h.elements(1 << 20).unwrap();
            let h2 = Subgroup::generated(&m, elems.iter().rev().map(|v| v.as_slice()));
            prop_assert_eq!(h, h2);
        }

        #[test]
        fn enumeration_is_sorted((m, g, _) in setup()) {
            let h = Subgroup::generated(&m, g.iter().map(|v| v.as_slice()));
            let elems = h.elements(1 << 20).unwrap();
            prop_assert!(elems.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(h.first_nonzero(), elems.get(1).cloned());
        }

        #[test]
        fn sum_and_intersection((m, g1, g2) in setup()) {
            let a = Subgroup::generated(&m, g1.iter().map(|v| v.as_slice()));
            let b = Subgroup::generated(&m, g2.iter().map(|v| v.as_slice()));
            let ea = closure(&m, &g1);
            let eb = closure(&m, &g2);
            let inter: BTreeSet<_> = ea.intersection(&eb).cloned().collect();
            let got: BTreeSet<_> = a.intersection(&b).elements(1 << 20).unwrap().into_iter().collect();
            prop_assert_eq!(got, inter);
            let mut all = g1.clone();
            all.extend(g2.clone());
            let s: BTreeSet<_> = a.sum(&b).elements(1 << 20).unwrap().into_iter().collect();
            prop_assert_eq!(s, closure(&m, &all));
        }

        #[test]
        fn kernel_preimage_solve((m, g1, g2) in setup(), seed in any::<u64>()) {
            // a map Z_m -> Z_m sending e_i to a multiple-compatible image
            let k = m.len();
            let mut images = Vec::new();
            let mut s = seed;
            for i in 0..k {
                let mut img = Vec::new();
                for t in 0..k {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let step = m[t] / gcd(m[t], m[i]);
                    img.push(((s >> 33) % m[t]) / step * step % m[t]);
                }
                images.push(img);
            }
            let f = Hom::new(&m, &m, images).unwrap();
            let target = Subgroup::generated(&m, g2.iter().map(|v| v.as_slice()));
            let pre = f.preimage(&target);
            for v in all_vectors(&m) {
                prop_assert_eq!(pre.contains(&v), target.contains(&f.apply(&v)));
            }
            let src = Subgroup::generated(&m, g1.iter().map(|v| v.as_slice()));
            let img = f.image(&src);
            let oracle: BTreeSet<_> = closure(&m, &g1).iter().map(|v| f.apply(v)).collect();
            let got: BTreeSet<_> = img.elements(1 << 20).unwrap().into_iter().collect();
            prop_assert_eq!(got, oracle.clone());
            for t in all_vectors(&m) {
                match f.solve(&t) {
                    Some(x) => prop_assert_eq!(f.apply(&x), t),
                    None => prop_assert!(!all_vectors(&m).iter().any(|x| f.apply(x) == t)),
                }
            }
        }

        #[test]
        fn decompositions((m, g, _) in setup()) {
            let h = Subgroup::generated(&m, g.iter().map(|v| v.as_slice()));
            let q = CyclicDecomposition::quotient(&h);
            let qorder: u128 = q.orders.iter().map(|&d| d as u128).product();
            let total: u128 = m.iter().map(|&n| n as u128).product();
            prop_assert_eq!(qorder * h.order(), total);
            for v in all_vectors(&m) {
                let c = q.coords(&v);
                // v and its normalized representative differ by an element of h
                let back = q.element(&c);
                let diff: Vec<u64> = v.iter().zip(&back).zip(&m).map(|((a, b), n)| (a + n - b) % n).collect();
                prop_assert!(h.contains(&diff));
            }
            let s = CyclicDecomposition::subgroup(&h);
            let sorder: u128 = s.orders.iter().map(|&d| d as u128).product();
            prop_assert_eq!(sorder, h.order());
            for x in h.elements(1 << 20).unwrap() {
                prop_assert_eq!(s.element(&s.coords(&x)), x);
            }
        }
    }

    #[test]
    fn small_cases() {
        let m = [12u64, 12];
        let six = Subgroup::generated(&m, [[6u64, 0].as_slice(), [0, 6].as_slice()]);
        assert_eq!(six.order(), 4);
        assert_eq!(
            six.elements(100).unwrap(),
            vec![vec![0, 0], vec![0, 6], vec![6, 0], vec![6, 6]]
        );
        let zero = Subgroup::zero(&m);
        assert!(zero.is_zero() && zero.generators().count() == 0);
        assert!(Subgroup::full(&m).is_full());
        assert!(six.elements(3).unwrap_err().is_cap());
    }
}
