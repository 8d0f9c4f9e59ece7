//! Eventually periodic subsets of the naturals and sign-split subsets of the
//! integers built from them.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// `A ⊆ ℕ` described by a threshold `T`, a period `P`, the residues mod `P`
/// present from `T` on, and the members below `T`.
///
/// Always stored in canonical form: minimal period, then minimal threshold.
/// Two equal sets therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicSet {
    threshold: u64,
    period: u64,
    residues: Vec<bool>,
    exceptional: Vec<bool>,
}

impl PeriodicSet {
    /// Builds from explicit parts and canonicalizes.
    pub fn new(threshold: u64, period: u64, residues: &[u64], exceptional: &[u64]) -> Result<Self> {
        if period == 0 {
            return Err(Error::input("period must be positive"));
        }
        let mut res = vec![false; period as usize];
        for &r in residues {
            if r >= period {
                return Err(Error::input("residue out of range"));
            }
            res[r as usize] = true;
        }
        let mut exc = vec![false; threshold as usize];
        for &x in exceptional {
            if x >= threshold {
                return Err(Error::input("exceptional element not below threshold"));
            }
            exc[x as usize] = true;
        }
        Ok(Self::from_raw(threshold, period, res, exc))
    }

    fn from_raw(threshold: u64, period: u64, residues: Vec<bool>, exceptional: Vec<bool>) -> Self {
        let mut s = PeriodicSet { threshold, period, residues, exceptional };
        s.canonicalize();
        s
    }

    pub fn empty() -> Self {
        Self::from_raw(0, 1, vec![false], Vec::new())
    }

    pub fn naturals() -> Self {
        Self::from_raw(0, 1, vec![true], Vec::new())
    }

    pub fn from_finite(elements: impl IntoIterator<Item = u64>) -> Self {
        let elems: Vec<u64> = elements.into_iter().collect();
        let t = elems.iter().map(|&x| x + 1).max().unwrap_or(0);
        let mut exc = vec![false; t as usize];
        for x in elems {
            exc[x as usize] = true;
        }
        Self::from_raw(t, 1, vec![false], exc)
    }

    /// `{ r + k m : k ≥ 0 }` intersected with `[start, ∞)`, for `r < m`.
    pub fn arithmetic(r: u64, m: u64, start: u64) -> Self {
        let m = m.max(1);
        let mut res = vec![false; m as usize];
        res[(r % m) as usize] = true;
        let t = start.max(r);
        let exc = (0..t).map(|_| false).collect();
        Self::from_raw(t, m, res, exc)
    }

    /// The set agreeing with `f` below `threshold` and periodic with `period`
    /// from `threshold` on, using `f` on `[threshold, threshold + period)`.
    pub fn from_predicate(threshold: u64, period: u64, f: impl Fn(u64) -> bool) -> Self {
        let exc = (0..threshold).map(&f).collect();
        let res = (0..period)
            .map(|r| {
                // residue r is realized by the first j >= threshold with j = r mod period
                let j = threshold + (r + period - threshold % period) % period;
                f(j)
            })
            .collect();
        Self::from_raw(threshold, period, res, exc)
    }

    fn canonicalize(&mut self) {
        let p = self.period as usize;
        let mut best = p;
        for d in 1..p {
            if p.is_multiple_of(d) && (0..p).all(|r| self.residues[r] == self.residues[r % d]) {
                best = d;
                break;
            }
        }
        self.residues.truncate(best);
        self.period = best as u64;
        while self.threshold > 0 {
            let j = self.threshold - 1;
            if self.exceptional[j as usize] == self.residues[(j % self.period) as usize] {
                self.threshold -= 1;
                self.exceptional.pop();
            } else {
                break;
            }
        }
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn residues(&self) -> Vec<u64> {
        (0..self.period).filter(|&r| self.residues[r as usize]).collect()
    }

    pub fn exceptional(&self) -> Vec<u64> {
        (0..self.threshold).filter(|&j| self.exceptional[j as usize]).collect()
    }

    pub fn contains(&self, j: u64) -> bool {
        if j < self.threshold {
            self.exceptional[j as usize]
        } else {
            self.residues[(j % self.period) as usize]
        }
    }

    pub fn is_empty(&self) -> bool {
        self.threshold == 0 && !self.residues.iter().any(|&b| b)
    }

    pub fn is_finite(&self) -> bool {
        !self.residues.iter().any(|&b| b)
    }

    pub fn min_element(&self) -> Option<u64> {
        (0..self.threshold + self.period).find(|&j| self.contains(j))
    }

    /// Members below `bound`.
    pub fn elements_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&j| self.contains(j)).collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| a && !b)
    }

    fn pointwise(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let t = self.threshold.max(other.threshold);
        let p = lcm(self.period, other.period);
        Self::from_predicate(t, p, |j| op(self.contains(j), other.contains(j)))
    }

    /// `A + B = { a + b }`.
    ///
    /// Past `T_A + T_B + 2 lcm(P_A, P_B)` the sumset is periodic with period
    /// `lcm(P_A, P_B)`, so membership is computed directly on a window of that
    /// length plus one period.
    pub fn sumset(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return Self::empty();
        }
        let l = lcm(self.period, other.period);
        let t = self.threshold + other.threshold + 2 * l;
        let window = t + l;
        let a = self.elements_below(window);
        let mut hit = vec![false; window as usize];
        for &x in &a {
            for y in 0..window - x {
                if other.contains(y) {
                    hit[(x + y) as usize] = true;
                }
            }
        }
        Self::from_predicate(t, l, |j| hit[j as usize])
    }

    /// Greatest common divisor of all members (0 for `∅` and `{0}`).
    pub fn gcd_of_members(&self) -> u64 {
        self.elements_below(self.threshold + 2 * self.period)
            .into_iter()
            .fold(0, gcd)
    }

    /// Translate by `k ≥ 0`.
    pub fn shift(&self, k: u64) -> Self {
        Self::from_predicate(self.threshold + k, self.period, |j| j >= k && self.contains(j - k))
    }
}

impl fmt::Display for PeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exc = self.exceptional();
        let res = self.residues();
        if res.is_empty() {
            write!(f, "{{")?;
            for (i, x) in exc.iter().enumerate() {
                write!(f, "{}{x}", if i > 0 { ", " } else { "" })?;
            }
            return write!(f, "}}");
        }
        write!(f, "{{")?;
        for (i, x) in exc.iter().enumerate() {
            write!(f, "{}{x}", if i > 0 { ", " } else { "" })?;
        }
        if !exc.is_empty() {
            write!(f, "; ")?;
        }
        write!(f, "j >= {} with j mod {} in [", self.threshold, self.period)?;
        for (i, r) in res.iter().enumerate() {
            write!(f, "{}{r}", if i > 0 { ", " } else { "" })?;
        }
        write!(f, "]}}")
    }
}

/// Subset of `ℤ` split into a nonnegative half and a negative half, each
/// eventually periodic. `negative` holds magnitudes; its `0` is ignored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntegerSubset {
    nonnegative: PeriodicSet,
    negative: PeriodicSet,
}

impl IntegerSubset {
    pub fn new(nonnegative: PeriodicSet, negative: PeriodicSet) -> Self {
        let negative = negative.difference(&PeriodicSet::from_finite([0]));
        IntegerSubset { nonnegative, negative }
    }

    pub fn from_finite(elements: impl IntoIterator<Item = i64>) -> Self {
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for x in elements {
            if x >= 0 {
                pos.push(x as u64);
            } else {
                neg.push(x.unsigned_abs());
            }
        }
        Self::new(PeriodicSet::from_finite(pos), PeriodicSet::from_finite(neg))
    }

    pub fn nonnegative(&self) -> &PeriodicSet {
        &self.nonnegative
    }

    pub fn negative(&self) -> &PeriodicSet {
        &self.negative
    }

    pub fn contains(&self, x: i64) -> bool {
        if x >= 0 {
            self.nonnegative.contains(x as u64)
        } else {
            self.negative.contains(x.unsigned_abs())
        }
    }

    pub fn is_empty(&self) -> bool {
        self.nonnegative.is_empty() && self.negative.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.nonnegative.is_finite() && self.negative.is_finite()
    }

    fn positive_part(&self) -> PeriodicSet {
        self.nonnegative.difference(&PeriodicSet::from_finite([0]))
    }

    /// `x ∈ S ⇔ -x ∈ S`.
    pub fn is_symmetric(&self) -> bool {
        self.positive_part() == self.negative
    }

    /// `S + S ⊆ S`.
    ///
    /// With members of both signs a submonoid of `ℤ` is a subgroup `dℤ`, so
    /// that case reduces to comparing against `dℤ`.
    pub fn is_closed_under_addition(&self) -> bool {
        let pos = self.positive_part();
        let neg = &self.negative;
        match (pos.is_empty(), neg.is_empty()) {
            (true, true) => true,
            (false, true) => {
                let s = &self.nonnegative;
                s.sumset(s).difference(s).is_empty()
            }
            (true, false) => {
                let s = neg;
                s.sumset(s).difference(s).is_empty()
            }
            (false, false) => {
                if !self.nonnegative.contains(0) {
                    return false;
                }
                let d = gcd(pos.gcd_of_members(), neg.gcd_of_members());
                let multiples = PeriodicSet::arithmetic(0, d, 0);
                self.nonnegative == multiples && *neg == multiples.difference(&PeriodicSet::from_finite([0]))
            }
        }
    }

    pub fn render(&self) -> String {
        alloc::format!("nonnegative {} / negative {}", self.nonnegative, self.negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(a: &PeriodicSet, b: &PeriodicSet, n: u64) -> Vec<u64> {
        (0..=n)
            .filter(|&j| (0..=j).any(|x| a.contains(x) && b.contains(j - x)))
            .collect()
    }

    #[test]
    fn canonical_form_is_minimal() {
        let s = PeriodicSet::new(6, 4, &[0, 2], &[0, 2, 4]).unwrap();
        assert_eq!((s.threshold(), s.period()), (0, 2));
        assert_eq!(s.residues(), vec![0]);
        let t = PeriodicSet::new(3, 2, &[1], &[0]).unwrap();
        assert_eq!((t.threshold(), t.period()), (2, 2));
        assert_eq!(t.exceptional(), vec![0]);
    }

    #[test]
    fn numerical_semigroup() {
        let g = PeriodicSet::from_finite([0, 3, 5]);
        let mut s = g.clone();
        for _ in 0..10 {
            s = s.sumset(&g);
        }
        // Frobenius number of <3,5> is 7
        assert!(!s.contains(7));
        assert!((8..40).all(|j| s.contains(j)));
        assert_eq!(s.elements_below(8), vec![0, 3, 5, 6]);
    }

    #[test]
    fn sumset_matches_brute_force() {
        let a = PeriodicSet::new(5, 3, &[1], &[0, 2]).unwrap();
        let b = PeriodicSet::new(2, 4, &[0, 3], &[1]).unwrap();
        let s = a.sumset(&b);
        assert_eq!(s.elements_below(201), brute(&a, &b, 200));
    }

    #[test]
    fn integer_subsets() {
        let evens = PeriodicSet::arithmetic(0, 2, 0);
        let z2 = IntegerSubset::new(evens.clone(), evens.clone());
        assert!(z2.is_symmetric() && z2.is_closed_under_addition());
        let n = IntegerSubset::new(PeriodicSet::naturals(), PeriodicSet::empty());
        assert!(n.is_closed_under_addition() && !n.is_symmetric());
        let bad = IntegerSubset::from_finite([-1, 0, 1]);
        assert!(!bad.is_closed_under_addition());
        let mixed = IntegerSubset::new(PeriodicSet::naturals(), PeriodicSet::from_finite([2]));
        assert!(!mixed.is_closed_under_addition());
    }
}
