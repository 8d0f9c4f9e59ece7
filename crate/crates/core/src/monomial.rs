//! Polynomial ring `K[x]` over a prime field, graded by `deg x^j = γ^j`.
//!
//! Components are infinite in general, so everything is expressed through
//! exponent sets `E_g = { j : γ^j = g }`, which are eventually periodic.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Degree, Group};
use crate::periodic::{IntegerSubset, PeriodicSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialGradedRing {
    field_order: u64,
    group: Group,
    generator_degree: Degree,
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

impl MonomialGradedRing {
    pub fn new(field_order: u64, group: Group, generator_degree: Degree) -> Result<Self> {
        if !is_prime(field_order) {
            return Err(Error::input(format!("coefficient field order {field_order} must be prime")));
        }
        if !group.contains(generator_degree) {
            return Err(Error::input("generator degree is not a group element"));
        }
        Ok(MonomialGradedRing { field_order, group, generator_degree })
    }

    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn generator_degree(&self) -> Degree {
        self.generator_degree
    }

    /// Degree of `x^j`.
    pub fn degree_of_power(&self, j: u64) -> Degree {
        match &self.group {
            Group::Integers => self.generator_degree * j as i64,
            Group::Finite(g) => {
                let mut x = g.identity();
                for _ in 0..j % g.element_order(self.generator_degree as usize) as u64 {
                    x = g.mul(x, self.generator_degree as usize);
                }
                x as Degree
            }
        }
    }

    /// Order of `γ`; `None` for a nonzero integer degree.
    pub fn generator_order(&self) -> Option<u64> {
        match &self.group {
            Group::Integers => (self.generator_degree == 0).then_some(1),
            Group::Finite(g) => Some(g.element_order(self.generator_degree as usize) as u64),
        }
    }

    /// `E_g`, so that `R_g = span{ x^j : j ∈ E_g }`.
    pub fn exponents(&self, g: Degree) -> PeriodicSet {
        match (&self.group, self.generator_degree) {
            (Group::Integers, 0) => {
                if g == 0 {
                    PeriodicSet::naturals()
                } else {
                    PeriodicSet::empty()
                }
            }
            (Group::Integers, gamma) => {
                if g % gamma == 0 && g / gamma >= 0 {
                    PeriodicSet::from_finite([(g / gamma) as u64])
                } else {
                    PeriodicSet::empty()
                }
            }
            (Group::Finite(_), _) => {
                let o = self.generator_order().expect("finite");
                let res: Vec<u64> = (0..o).filter(|&r| self.degree_of_power(r) == g).collect();
                PeriodicSet::new(0, o, &res, &[]).expect("valid parts")
            }
        }
    }

    /// Support as a finite list, when the group is finite.
    pub fn support_finite(&self) -> Option<Vec<Degree>> {
        let o = self.generator_order()?;
        let mut s: Vec<Degree> = (0..o).map(|r| self.degree_of_power(r)).collect();
        s.sort_unstable();
        s.dedup();
        self.group.sort_for_witness(&mut s);
        Some(s)
    }

    /// Support as a subset of the integers.
    pub fn support_integers(&self) -> Option<IntegerSubset> {
        if !matches!(self.group, Group::Integers) {
            return None;
        }
        let gamma = self.generator_degree;
        Some(match gamma {
            0 => IntegerSubset::from_finite([0]),
            g if g > 0 => IntegerSubset::new(PeriodicSet::arithmetic(0, g as u64, 0), PeriodicSet::empty()),
            g => IntegerSubset::new(
                PeriodicSet::from_finite([0]),
                PeriodicSet::arithmetic(0, g.unsigned_abs(), 0),
            ),
        })
    }

    pub fn in_support(&self, g: Degree) -> bool {
        !self.exponents(g).is_empty()
    }

    /// `E_g + E_h`, the exponents reached by `R_g R_h`.
    pub fn product_exponents(&self, g: Degree, h: Degree) -> PeriodicSet {
        self.exponents(g).sumset(&self.exponents(h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_sets() {
        let kx = MonomialGradedRing::new(2, Group::Integers, 1).unwrap();
        assert_eq!(kx.exponents(3), PeriodicSet::from_finite([3]));
        assert!(kx.exponents(-1).is_empty());
        let z3 = MonomialGradedRing::new(2, Group::cyclic(3).unwrap(), 1).unwrap();
        let e1 = z3.exponents(1);
        assert_eq!((e1.period(), e1.residues()), (3, vec![1]));
        assert_eq!(z3.support_finite().unwrap(), vec![0, 1, 2]);
        // E_1 + E_2 = {3, 6, ...} is a proper part of E_0
        let p = z3.product_exponents(1, 2);
        assert!(!p.contains(0) && p.contains(3));
        assert!(MonomialGradedRing::new(4, Group::Integers, 1).is_err());
    }
}
