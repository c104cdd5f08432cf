use std::collections::BTreeSet;
use std::fmt;

use super::table::{gcd, lcm, prime_factors, units_mod};
use super::{CycError, CycNum};

/// The automorphism `ζ_n ↦ ζ_n^k` of `Q(ζ_n)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisAut {
    n: u64,
    k: u64,
}

impl GaloisAut {
    pub fn new(n: u64, k: i64) -> Result<Self, CycError> {
        if n == 0 {
            return Err(CycError::Malformed("conductor 0".into()));
        }
        let k = k.rem_euclid(n as i64) as u64;
        if n > 1 && gcd(k, n) != 1 {
            return Err(CycError::Malformed(format!("{k} is not a unit modulo {n}")));
        }
        Ok(GaloisAut { n, k })
    }

    pub fn identity(n: u64) -> Self {
        GaloisAut { n, k: 1 % n }
    }

    pub fn complex_conjugation(n: u64) -> Self {
        GaloisAut { n, k: (n - 1) % n.max(1) }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn unit(&self) -> u64 {
        self.k
    }

    pub fn is_identity(&self) -> bool {
        self.n == 1 || self.k == 1
    }

    /// The same automorphism seen on `Q(ζ_m)` for a multiple `m` of the
    /// conductor: the least unit `k' ≡ k (mod n)` modulo `m`.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.n == 0, "{} does not divide {m}", self.n);
        if m == 1 {
            return GaloisAut { n: 1, k: 0 };
        }
        let mut k = self.k;
        if self.n == 1 {
            k = 1;
        }
        while gcd(k, m) != 1 {
            k += self.n;
        }
        GaloisAut { n: m, k: k % m }
    }

    /// Restriction to `Q(ζ_m)`, `m | n`.
    pub fn restrict(&self, m: u64) -> Self {
        assert!(self.n % m == 0);
        GaloisAut { n: m, k: self.k % m }
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &GaloisAut) -> GaloisAut {
        let n = lcm(self.n, other.n);
        let a = self.lift(n);
        let b = other.lift(n);
        GaloisAut { n, k: (a.k * b.k) % n }
    }

    pub fn inverse(&self) -> GaloisAut {
        if self.n == 1 {
            return *self;
        }
        GaloisAut { n: self.n, k: super::modinv(self.k, self.n) }
    }

    /// Apply to a value; values of larger conductor are handled by lifting the
    /// automorphism to the common cyclotomic field.
    pub fn apply(&self, a: &CycNum) -> CycNum {
        let c = a.conductor();
        if c == 1 {
            return a.clone();
        }
        let k = if self.n % c == 0 { self.k % c } else { self.lift(lcm(c, self.n)).k % c };
        a.apply_unit(k)
    }
}

impl fmt::Debug for GaloisAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ_{}(mod {})", self.k, self.n)
    }
}

/// A subfield `k₀ ⊆ Q(ζ_n)`, recorded as the fixed field of a subgroup of `(Z/n)^×`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubfieldSpec {
    n: u64,
    stabilizer: Vec<u64>,
}

impl SubfieldSpec {
    /// Fixed field of the subgroup generated by `gens` (units mod `n`).
    pub fn new(n: u64, gens: &[u64]) -> Result<Self, CycError> {
        if n == 0 {
            return Err(CycError::Malformed("conductor 0".into()));
        }
        if n == 1 {
            return Ok(Self::rationals());
        }
        let mut set = BTreeSet::from([1 % n]);
        let gens: Vec<u64> = gens.iter().map(|g| g % n).collect();
        for &g in &gens {
            if gcd(g, n) != 1 {
                return Err(CycError::Malformed(format!("{g} is not a unit modulo {n}")));
            }
        }
        let mut frontier: Vec<u64> = set.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = x * g % n;
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(SubfieldSpec { n, stabilizer: set.into_iter().collect() })
    }

    pub fn rationals() -> Self {
        SubfieldSpec { n: 1, stabilizer: vec![0] }
    }

    /// The whole cyclotomic field `Q(ζ_n)`.
    pub fn cyclotomic(n: u64) -> Self {
        if n == 1 {
            return Self::rationals();
        }
        SubfieldSpec { n, stabilizer: vec![1] }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn stabilizer(&self) -> &[u64] {
        &self.stabilizer
    }

    pub fn degree(&self) -> usize {
        units_mod(self.n).len() / self.stabilizer.len()
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// The stabilizer subgroup lifted to `(Z/m)^×` for a multiple `m` of the conductor.
    pub fn stabilizer_mod(&self, m: u64) -> Vec<u64> {
        assert!(m % self.n == 0, "{} does not divide {m}", self.n);
        if self.n == 1 {
            return units_mod(m);
        }
        units_mod(m)
            .into_iter()
            .filter(|k| self.stabilizer.binary_search(&(k % self.n)).is_ok())
            .collect()
    }

    /// `Gal(Q(ζ_m)/k₀)` as automorphisms of `Q(ζ_m)`.
    pub fn galois_group(&self, m: u64) -> Vec<GaloisAut> {
        self.stabilizer_mod(m)
            .into_iter()
            .map(|k| GaloisAut { n: m, k })
            .collect()
    }

    /// Membership test: fixed by every stabilizer element.
    pub fn contains(&self, a: &CycNum) -> bool {
        let c = a.conductor();
        if c == 1 {
            return true;
        }
        if self.n % c != 0 {
            return false;
        }
        self.stabilizer.iter().all(|&k| a.apply_unit(k % c) == *a)
    }

    /// `other ⊆ self`.
    pub fn contains_field(&self, other: &SubfieldSpec) -> bool {
        let m = lcm(self.n, other.n);
        let theirs: BTreeSet<u64> = other.stabilizer_mod(m).into_iter().collect();
        self.stabilizer_mod(m).iter().all(|k| theirs.contains(k))
    }

    /// Same field described with the least possible conductor.
    pub fn normalized(&self) -> SubfieldSpec {
        let mut cur = self.clone();
        'outer: loop {
            if cur.n == 1 {
                return cur;
            }
            for p in prime_factors(cur.n) {
                let m = cur.n / p;
                // the fixed field lies in Q(ζ_m) iff the stabilizer contains ker((Z/n)^× → (Z/m)^×)
                let kernel_inside = units_mod(cur.n)
                    .into_iter()
                    .filter(|k| m == 1 || k % m == 1)
                    .all(|k| cur.stabilizer.binary_search(&k).is_ok());
                if kernel_inside {
                    if m == 1 {
                        cur = SubfieldSpec::rationals();
                        continue 'outer;
                    }
                    let set: BTreeSet<u64> = cur.stabilizer.iter().map(|k| k % m).collect();
                    cur = SubfieldSpec { n: m, stabilizer: set.into_iter().collect() };
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Same field, equal after normalisation.
    pub fn same_field(&self, other: &SubfieldSpec) -> bool {
        self.normalized() == other.normalized()
    }

    /// The smallest subfield of `Q(ζ_ambient)` containing every value; its
    /// stabilizer is the joint stabilizer of the values. `ambient` must be a
    /// multiple of every conductor.
    pub fn generated_by_in(values: &[CycNum], ambient: u64) -> Result<SubfieldSpec, CycError> {
        for v in values {
            if ambient % v.conductor() != 0 {
                return Err(CycError::IncompatibleConductor(v.conductor(), ambient));
            }
        }
        if ambient == 1 {
            return Ok(Self::rationals());
        }
        let stabilizer: Vec<u64> = units_mod(ambient)
            .into_iter()
            .filter(|&k| values.iter().all(|v| v.apply_unit(k % v.conductor().max(1)) == *v))
            .collect();
        Ok(SubfieldSpec { n: ambient, stabilizer })
    }

    /// [`SubfieldSpec::generated_by_in`] with ambient field the lcm of the
    /// conductors, normalised.
    pub fn generated_by(values: &[CycNum]) -> SubfieldSpec {
        let ambient = values.iter().fold(1, |acc, v| lcm(acc, v.conductor()));
        Self::generated_by_in(values, ambient)
            .expect("ambient is a common multiple")
            .normalized()
    }
}

impl fmt::Debug for SubfieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fix({:?} in Q(z{}))", self.stabilizer, self.n)
    }
}
