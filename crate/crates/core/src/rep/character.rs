use std::fmt;

use crate::cyclo::{CycNum, GaloisAut};
use crate::grp::{Group, Subgroup};

use super::RepError;

/// A class function, one value per conjugacy class in the group's class order.
#[derive(Clone)]
pub struct Character {
    group: Group,
    values: Vec<CycNum>,
}

impl Character {
    pub fn new(group: &Group, values: Vec<CycNum>) -> Result<Self, RepError> {
        if values.len() != group.num_classes() {
            return Err(RepError::DimensionMismatch(format!(
                "{} values for {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(Character { group: group.clone(), values })
    }

    pub fn trivial(group: &Group) -> Self {
        Character { group: group.clone(), values: vec![CycNum::one(); group.num_classes()] }
    }

    pub fn zero(group: &Group) -> Self {
        Character { group: group.clone(), values: vec![CycNum::zero(); group.num_classes()] }
    }

    /// Character of the regular representation.
    pub fn regular(group: &Group) -> Self {
        let mut values = vec![CycNum::zero(); group.num_classes()];
        values[0] = CycNum::from(group.order() as i64);
        Character { group: group.clone(), values }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    /// Value at an element (by index).
    pub fn at(&self, x: usize) -> &CycNum {
        &self.values[self.group.class_of(x)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &CycNum {
        &self.values[0]
    }

    pub fn degree_usize(&self) -> Option<usize> {
        self.values[0].to_integer().and_then(|d| usize::try_from(d).ok())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycNum::is_zero)
    }

    fn check_same(&self, other: &Character) -> Result<(), RepError> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(RepError::GroupMismatch)
        }
    }

    /// `⟨a, b⟩ = |G|⁻¹ Σ_g a(g)·conj(b(g))`.
    pub fn inner(&self, other: &Character) -> Result<CycNum, RepError> {
        self.check_same(other)?;
        let mut acc = CycNum::zero();
        for (c, size) in self.group.class_sizes().into_iter().enumerate() {
            let a = &self.values[c];
            let b = &other.values[c];
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += &(&(a * &b.conj()) * &CycNum::from(size as i64));
        }
        Ok(&acc * &CycNum::from_ratio(1, self.group.order() as i64))
    }

    /// `⟨χ, χ⟩`.
    pub fn norm2(&self) -> CycNum {
        self.inner(self).expect("same group")
    }

    pub fn is_irreducible(&self) -> bool {
        self.norm2().is_one() && self.degree().to_integer().is_some_and(|d| d > 0.into())
    }

    pub fn add(&self, other: &Character) -> Result<Character, RepError> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Character) -> Result<Character, RepError> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Character, f: impl Fn(&CycNum, &CycNum) -> CycNum) -> Character {
        Character {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Character {
        let k = CycNum::from(k);
        Character { group: self.group.clone(), values: self.values.iter().map(|v| v * &k).collect() }
    }

    pub fn conj(&self) -> Character {
        Character { group: self.group.clone(), values: self.values.iter().map(CycNum::conj).collect() }
    }

    pub fn galois(&self, s: &GaloisAut) -> Character {
        Character { group: self.group.clone(), values: self.values.iter().map(|v| s.apply(v)).collect() }
    }

    /// Restriction to a subgroup, as a character of `h.group()`.
    pub fn restrict(&self, h: &Subgroup) -> Result<Character, RepError> {
        if !h.parent().same_as(&self.group) {
            return Err(RepError::NotSubgroup);
        }
        let hg = h.group();
        let values = hg.class_reps().iter().map(|&r| self.at(h.to_parent(r)).clone()).collect();
        Ok(Character { group: hg, values })
    }

    /// `Ind_H^G ψ` for a character `ψ` of `h.group()`:
    /// value `|G|/(|H|·|C|) · Σ_{x ∈ H ∩ C} ψ(x)` on the class `C`.
    pub fn induce(psi: &Character, h: &Subgroup) -> Result<Character, RepError> {
        let hg = h.group();
        if !psi.group.same_as(&hg) {
            return Err(RepError::GroupMismatch);
        }
        let g = h.parent();
        let mut sums = vec![CycNum::zero(); g.num_classes()];
        for (local, &x) in h.elements().iter().enumerate() {
            let v = psi.at(local);
            if !v.is_zero() {
                sums[g.class_of(x)] += v;
            }
        }
        let sizes = g.class_sizes();
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(c, s)| {
                if s.is_zero() {
                    s
                } else {
                    &s * &CycNum::from_ratio(g.order() as i64, (h.order() * sizes[c]) as i64)
                }
            })
            .collect();
        Ok(Character { group: g.clone(), values })
    }

    /// All values lie in the rationals.
    pub fn is_rational(&self) -> bool {
        self.values.iter().all(CycNum::is_rational)
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.values == other.values
    }
}

impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(CycNum::to_string).collect();
        write!(f, "χ[{}]", vals.join(", "))
    }
}

/// Irreducible characters of a group, trivial character first, then by
/// degree and value tuple. Cached on the group.
pub fn char_table(group: &Group) -> Vec<Character> {
    group
        .cache
        .char_table
        .get_or_init(|| super::dixon::character_table(group))
        .iter()
        .map(|v| Character { group: group.clone(), values: v.clone() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;

    #[test]
    fn s3_table() {
        let g = named::s3();
        let t = char_table(&g);
        let degs: Vec<usize> = t.iter().map(|c| c.degree_usize().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        assert_eq!(t[0], Character::trivial(&g));
        for a in &t {
            for b in &t {
                let ip = a.inner(b).unwrap();
                assert_eq!(ip.is_one(), a == b);
                assert!(ip.is_one() || ip.is_zero());
            }
        }
    }

    #[test]
    fn induction_from_a3() {
        let g = named::s3();
        let a3 = named::alternating_in(&g);
        let t3 = char_table(&a3.group());
        let w = t3.iter().find(|c| !c.is_rational()).unwrap();
        let ind = Character::induce(w, &a3).unwrap();
        assert!(ind.is_irreducible());
        assert_eq!(ind.degree_usize(), Some(2));
        let std = char_table(&g).pop().unwrap();
        assert_eq!(ind, std);
    }
}
