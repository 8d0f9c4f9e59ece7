//! Grading groups.
//!
//! A degree is an `i64`. For a finite group it is the index of an element in
//! the multiplication table; for the additive group of integers it is the
//! integer itself.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::periodic::IntegerSubset;

pub type Degree = i64;

/// Largest finite group order accepted unless a caller passes its own cap.
pub const DEFAULT_GROUP_ORDER_CAP: usize = 64;

/// How a finite group was built; used for labels and descriptors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    /// Dihedral group of order `2n`, elements `a^i b^j`.
    Dihedral(usize),
    Product(alloc::boxed::Box<FiniteGroup>, alloc::boxed::Box<FiniteGroup>),
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    kind: GroupKind,
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a full Cayley table, checking closure, associativity,
    /// identity and inverses.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        Self::build(GroupKind::Table, labels, table, cap)
    }

    fn build(kind: GroupKind, labels: Vec<String>, rows: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::input("group must have at least one element"));
        }
        if n > cap {
            return Err(Error::CapExceeded { what: "group elements".to_string(), limit: cap as u64 });
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::input(format!("group table must be {n}x{n}")));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::input("group element labels must be distinct"));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::input(format!("table entry ({i},{j}) = {v} out of range")));
                }
                table.push(v);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::Validation(vec![format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )]));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::Validation(vec!["no identity element".to_string()]))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::Validation(vec![format!("{} has no inverse", labels[a])]))?;
            inverses.push(inv);
        }
        Ok(FiniteGroup { kind, labels, table, identity, inverses })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_with_cap(n, DEFAULT_GROUP_ORDER_CAP)
    }

    pub fn cyclic_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("cyclic group order must be positive"));
        }
        if n > cap {
            return Err(Error::CapExceeded { what: "group elements".to_string(), limit: cap as u64 });
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::build(GroupKind::Cyclic(n), labels, rows, cap)
    }

    /// Dihedral group of order `2n`: `a^n = b^2 = e`, `b a = a^{-1} b`.
    /// Element `a^i b^j` has index `i + n*j`.
    pub fn dihedral(n: usize) -> Result<Self> {
        Self::dihedral_with_cap(n, DEFAULT_GROUP_ORDER_CAP)
    }

    pub fn dihedral_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::input("dihedral parameter must be positive"));
        }
        if 2 * n > cap {
            return Err(Error::CapExceeded { what: "group elements".to_string(), limit: cap as u64 });
        }
        let labels = (0..2 * n).map(|k| dihedral_label(k % n, k / n)).collect();
        // a^i b^j * a^k b^l = a^(i + (-1)^j k) b^(j+l)
        let rows = (0..2 * n)
            .map(|x| {
                let (i, j) = (x % n, x / n);
                (0..2 * n)
                    .map(|y| {
                        let (k, l) = (y % n, y / n);
                        let ai = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                        ai + n * ((j + l) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::build(GroupKind::Dihedral(n), labels, rows, cap)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        Self::direct_product_with_cap(a, b, DEFAULT_GROUP_ORDER_CAP)
    }

    pub fn direct_product_with_cap(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<Self> {
        let (na, nb) = (a.order(), b.order());
        if na * nb > cap {
            return Err(Error::CapExceeded { what: "group elements".to_string(), limit: cap as u64 });
        }
        let labels = (0..na * nb)
            .map(|x| format!("({},{})", a.labels[x / nb], b.labels[x % nb]))
            .collect();
        let rows = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Self::build(
            GroupKind::Product(alloc::boxed::Box::new(a.clone()), alloc::boxed::Box::new(b.clone())),
            labels,
            rows,
            cap,
        )
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The Cayley table as rows of element indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|a| self.table[a * n..(a + 1) * n].to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Finds an element by label. Dihedral groups also accept loose spellings
    /// such as `ab`, `a^4 b`, `b`, `e`.
    pub fn parse_label(&self, s: &str) -> Option<usize> {
        let t = s.trim();
        if let Some(i) = self.labels.iter().position(|l| l == t) {
            return Some(i);
        }
        match &self.kind {
            GroupKind::Dihedral(n) => parse_dihedral(t, *n).map(|(i, j)| i + n * j),
            GroupKind::Cyclic(n) => t.parse::<i64>().ok().map(|v| v.rem_euclid(*n as i64) as usize),
            _ => None,
        }
    }
}

fn dihedral_label(i: usize, j: usize) -> String {
    match (i, j) {
        (0, 0) => "e".to_string(),
        (0, 1) => "b".to_string(),
        (1, 0) => "a".to_string(),
        (1, 1) => "ab".to_string(),
        (i, 0) => format!("a^{i}"),
        (i, _) => format!("a^{i}b"),
    }
}

fn parse_dihedral(s: &str, n: usize) -> Option<(usize, usize)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "e" || s == "1" {
        return Some((0, 0));
    }
    let mut rest = s.as_str();
    let power = |rest: &mut &str, letter: char| -> Option<i64> {
        if !rest.starts_with(letter) {
            return Some(0);
        }
        *rest = &rest[1..];
        if let Some(r) = rest.strip_prefix('^') {
            let end = r.find(|c: char| !(c.is_ascii_digit() || c == '-')).unwrap_or(r.len());
            let v = r[..end].parse::<i64>().ok()?;
            *rest = &r[end..];
            Some(v)
        } else {
            Some(1)
        }
    };
    let i = power(&mut rest, 'a')?;
    let j = power(&mut rest, 'b')?;
    if !rest.is_empty() {
        return None;
    }
    Some((i.rem_euclid(n as i64) as usize, j.rem_euclid(2) as usize))
}

/// A grading group: finite (given by its table) or the additive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group {
    Finite(FiniteGroup),
    Integers,
}

impl Group {
    pub fn cyclic(n: usize) -> Result<Self> {
        FiniteGroup::cyclic(n).map(Group::Finite)
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        FiniteGroup::dihedral(n).map(Group::Finite)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Group::Finite(_))
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            Group::Finite(g) => Some(g.order()),
            Group::Integers => None,
        }
    }

    pub fn identity(&self) -> Degree {
        match self {
            Group::Finite(g) => g.identity() as Degree,
            Group::Integers => 0,
        }
    }

    pub fn op(&self, a: Degree, b: Degree) -> Degree {
        match self {
            Group::Finite(g) => g.mul(a as usize, b as usize) as Degree,
            Group::Integers => a + b,
        }
    }

    pub fn inverse(&self, a: Degree) -> Degree {
        match self {
            Group::Finite(g) => g.inverse(a as usize) as Degree,
            Group::Integers => -a,
        }
    }

    pub fn contains(&self, a: Degree) -> bool {
        match self {
            Group::Finite(g) => a >= 0 && (a as usize) < g.order(),
            Group::Integers => true,
        }
    }

    /// All elements of a finite group, in index order.
    pub fn elements(&self) -> Option<Vec<Degree>> {
        self.order().map(|n| (0..n as Degree).collect())
    }

    pub fn label(&self, a: Degree) -> String {
        match self {
            Group::Finite(g) => g.label(a as usize).to_string(),
            Group::Integers => a.to_string(),
        }
    }

    pub fn parse_label(&self, s: &str) -> Result<Degree> {
        match self {
            Group::Finite(g) => g
                .parse_label(s)
                .map(|i| i as Degree)
                .ok_or_else(|| Error::input(format!("unknown group element '{s}'"))),
            Group::Integers => s
                .trim()
                .parse::<Degree>()
                .map_err(|_| Error::input(format!("'{s}' is not an integer degree"))),
        }
    }

    /// Sort key used to pick deterministic witnesses: element index for
    /// finite groups, `0, 1, -1, 2, -2, ...` for the integers.
    pub fn witness_key(&self, a: Degree) -> (u64, bool) {
        match self {
            Group::Finite(_) => (a as u64, false),
            Group::Integers => (a.unsigned_abs(), a < 0),
        }
    }

    pub fn sort_for_witness(&self, v: &mut [Degree]) {
        v.sort_by_key(|&a| self.witness_key(a));
    }
}

pub fn group_product(group: &Group, g: Degree, h: Degree) -> Result<Degree> {
    if !group.contains(g) || !group.contains(h) {
        return Err(Error::input("degree not in group"));
    }
    Ok(group.op(g, h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubsetClass {
    Subgroup,
    MonoidNotSubgroup,
    NotMonoid,
}

impl SubsetClass {
    pub fn label(self) -> &'static str {
        match self {
            SubsetClass::Subgroup => "subgroup",
            SubsetClass::MonoidNotSubgroup => "monoid_not_subgroup",
            SubsetClass::NotMonoid => "not_monoid",
        }
    }
}

/// Subgroup generated by a finite set. For the integers only the trivial
/// subgroup is finite, so any other input is refused.
pub fn subgroup_closure(group: &Group, set: &BTreeSet<Degree>) -> Result<BTreeSet<Degree>> {
    match group {
        Group::Integers => {
            if set.iter().all(|&x| x == 0) {
                Ok(BTreeSet::from([0]))
            } else {
                Err(Error::Resource(
                    "subgroup of the integers generated by a nonzero element is infinite".to_string(),
                ))
            }
        }
        Group::Finite(g) => {
            let mut out = BTreeSet::from([g.identity() as Degree]);
            let mut frontier: Vec<Degree> = vec![g.identity() as Degree];
            let gens: Vec<Degree> = set
                .iter()
                .flat_map(|&s| [s, g.inverse(s as usize) as Degree])
                .collect();
            while let Some(x) = frontier.pop() {
                for &s in &gens {
                    let y = g.mul(x as usize, s as usize) as Degree;
                    if out.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Classifies a finite subset of the group.
pub fn classify_subset(group: &Group, set: &BTreeSet<Degree>) -> SubsetClass {
    let e = group.identity();
    if !set.contains(&e) {
        return SubsetClass::NotMonoid;
    }
    for &a in set {
        for &b in set {
            if !set.contains(&group.op(a, b)) {
                return SubsetClass::NotMonoid;
            }
        }
    }
    if set.iter().all(|&a| set.contains(&group.inverse(a))) {
        SubsetClass::Subgroup
    } else {
        SubsetClass::MonoidNotSubgroup
    }
}

/// Classifies a possibly infinite subset of the integers.
pub fn classify_integer_subset(set: &IntegerSubset) -> SubsetClass {
    if !set.contains(0) || !set.is_closed_under_addition() {
        return SubsetClass::NotMonoid;
    }
    if set.is_symmetric() {
        SubsetClass::Subgroup
    } else {
        SubsetClass::MonoidNotSubgroup
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let g = FiniteGroup::dihedral(5).unwrap();
        let a = g.parse_label("a").unwrap();
        let b = g.parse_label("b").unwrap();
        let ab = g.parse_label("ab").unwrap();
        assert_eq!(g.mul(a, b), ab);
        assert_eq!(g.mul(b, a), g.parse_label("a^4b").unwrap());
        assert_eq!(g.element_order(a), 5);
        assert_eq!(g.element_order(b), 2);
        // every reflection is an involution
        assert_eq!(g.inverse(ab), ab);
        assert!(!g.is_abelian());
    }

    #[test]
    fn dihedral_loose_labels() {
        let g = FiniteGroup::dihedral(5).unwrap();
        assert_eq!(g.parse_label("a^4 b"), g.parse_label("a^4b"));
        assert_eq!(g.parse_label("a^6"), g.parse_label("a"));
        assert_eq!(g.parse_label("e"), Some(g.identity()));
        assert_eq!(g.parse_label("c"), None);
    }

    #[test]
    fn rejects_non_group_table() {
        let labels = vec!["x".into(), "y".into()];
        let err = FiniteGroup::from_table(labels, vec![vec![0, 0], vec![0, 1]], 64).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn order_cap() {
        assert!(FiniteGroup::cyclic(65).unwrap_err().is_cap());
        assert!(FiniteGroup::cyclic_with_cap(65, 100).is_ok());
    }

    #[test]
    fn product_of_cyclics() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let p = FiniteGroup::direct_product(&z2, &z3).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
        assert!((0..6).any(|x| p.element_order(x) == 6));
    }

    #[test]
    fn closure_and_classification() {
        let z7 = Group::cyclic(7).unwrap();
        let s: BTreeSet<Degree> = [0, 1, 2, 5, 6].into();
        assert_eq!(classify_subset(&z7, &s), SubsetClass::NotMonoid);
        assert_eq!(subgroup_closure(&z7, &BTreeSet::from([3])).unwrap().len(), 7);
        let z4 = Group::cyclic(4).unwrap();
        assert_eq!(classify_subset(&z4, &BTreeSet::from([0, 2])), SubsetClass::Subgroup);
        assert_eq!(classify_subset(&Group::Integers, &BTreeSet::from([0])), SubsetClass::Subgroup);
        assert!(subgroup_closure(&Group::Integers, &BTreeSet::from([0, 2])).is_err());
    }

    #[test]
    fn integer_witness_order() {
        let mut v = vec![-2, 3, -1, 0, 1];
        Group::Integers.sort_for_witness(&mut v);
        assert_eq!(v, vec![0, 1, -1, -2, 3]);
    }
}
