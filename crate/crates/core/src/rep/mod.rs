//! Matrix representations and characters over cyclotomic fields.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::cyclo::{CycError, CycNum, GaloisAut, SubfieldSpec};
use crate::grp::{Group, GroupError, Subgroup};
use crate::linalg::Matrix;

mod character;
mod dixon;
mod ops;
mod realize;

pub use character::{char_table, Character};
pub use ops::{
    clifford_component, hom_space, induce_rep, inertia_subgroup, isotypic_projector, HomBasis,
};
pub use realize::realize_irreducible;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("objects belong to different groups")]
    GroupMismatch,
    #[error("not a subgroup of the representation's group")]
    NotSubgroup,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator images do not define a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("the character is not a constituent of the restriction")]
    NotConstituent,
    #[error("subspace is not invariant")]
    NotInvariant,
    #[error("could not realize the character: {0}")]
    RealizationFailed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

/// A homomorphism `G → GL_r(Q(ζ_n))` given by the images of the group's
/// generators. Images of other elements are computed on demand along the
/// group's spanning tree and memoised.
#[derive(Clone)]
pub struct MatrixRep {
    group: Group,
    rank: usize,
    gens: Arc<Vec<Matrix>>,
    cache: Arc<Vec<OnceLock<Matrix>>>,
}

impl MatrixRep {
    /// Validated constructor: checks shapes and that the generator images
    /// extend to a homomorphism on every element.
    /// The rank is read off the first image (zero for a group without generators).
    pub fn new(group: &Group, gens: Vec<Matrix>) -> Result<Self, RepError> {
        let rank = gens.first().map_or(0, Matrix::rows);
        Self::with_rank(group, rank, gens)
    }

    pub fn with_rank(group: &Group, rank: usize, gens: Vec<Matrix>) -> Result<Self, RepError> {
        let rep = Self::new_unchecked(group, rank, gens)?;
        rep.validate()?;
        Ok(rep)
    }

    /// Shape-checked only; for images produced by the library itself.
    pub fn new_unchecked(group: &Group, rank: usize, gens: Vec<Matrix>) -> Result<Self, RepError> {
        if gens.len() != group.generators().len() {
            return Err(RepError::DimensionMismatch(format!(
                "{} images for {} generators",
                gens.len(),
                group.generators().len()
            )));
        }
        if gens.iter().any(|m| m.rows() != rank || m.cols() != rank) {
            return Err(RepError::DimensionMismatch("generator images must be square of equal size".into()));
        }
        let cache: Vec<OnceLock<Matrix>> = (0..group.order()).map(|_| OnceLock::new()).collect();
        cache[0].set(Matrix::identity(rank)).expect("fresh cache");
        Ok(MatrixRep { group: group.clone(), rank, gens: Arc::new(gens), cache: Arc::new(cache) })
    }

    /// The rank-zero representation.
    pub fn zero(group: &Group) -> Self {
        let gens = vec![Matrix::zeros(0, 0); group.generators().len()];
        Self::new_unchecked(group, 0, gens).expect("shapes agree")
    }

    pub fn trivial(group: &Group) -> Self {
        let gens = vec![Matrix::identity(1); group.generators().len()];
        Self::new_unchecked(group, 1, gens).expect("shapes agree")
    }

    /// Rank-one representation of a linear character.
    pub fn linear(chi: &Character) -> Result<Self, RepError> {
        if chi.degree_usize() != Some(1) {
            return Err(RepError::DimensionMismatch("not a linear character".into()));
        }
        let g = chi.group();
        let gens = g
            .generators()
            .iter()
            .map(|&s| Matrix::scalar(1, chi.at(s)))
            .collect();
        Self::new_unchecked(g, 1, gens)
    }

    /// The permutation representation on the points the group acts on.
    pub fn permutation(group: &Group) -> Self {
        let d = group.degree();
        let gens = group
            .generator_perms()
            .iter()
            .map(|p| Matrix::from_fn(d, d, |i, j| CycNum::from((p.apply(j) == i) as i64)))
            .collect();
        Self::new_unchecked(group, d, gens).expect("shapes agree")
    }

    /// The regular representation (basis indexed by group elements).
    pub fn regular(group: &Group) -> Self {
        let n = group.order();
        let gens = group
            .generators()
            .iter()
            .map(|&s| Matrix::from_fn(n, n, |i, j| CycNum::from((group.mul(s, j) == i) as i64)))
            .collect();
        Self::new_unchecked(group, n, gens).expect("shapes agree")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator_images(&self) -> &[Matrix] {
        &self.gens
    }

    /// `ρ(x)` for the element with index `x`.
    pub fn image(&self, x: usize) -> &Matrix {
        if let Some(m) = self.cache[x].get() {
            return m;
        }
        let mut path = Vec::new();
        let mut y = x;
        while self.cache[y].get().is_none() {
            path.push(y);
            y = self.group.tree_parent(y).expect("identity is cached").0;
        }
        for &z in path.iter().rev() {
            let (p, j) = self.group.tree_parent(z).expect("non-identity");
            let m = self.cache[p].get().expect("parent filled first") * &self.gens[j];
            let _ = self.cache[z].set(m);
        }
        self.cache[x].get().expect("filled")
    }

    /// Check that the memoised tree images are multiplicative along every edge.
    pub fn validate(&self) -> Result<(), RepError> {
        let g = &self.group;
        for x in 0..g.order() {
            for (j, &s) in g.generators().iter().enumerate() {
                let lhs = self.image(x) * &self.gens[j];
                if &lhs != self.image(g.mul(x, s)) {
                    return Err(RepError::NotHomomorphism(format!(
                        "ρ({})·ρ({}) ≠ ρ of the product",
                        g.element(x),
                        g.element(s)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn character(&self) -> Character {
        let values = self
            .group
            .class_reps()
            .iter()
            .map(|&r| if self.rank == 0 { CycNum::zero() } else { self.image(r).trace() })
            .collect();
        Character::new(&self.group, values).expect("one value per class")
    }

    /// `⟨χ, χ⟩ = 1`.
    pub fn is_abs_irreducible(&self) -> bool {
        self.rank > 0 && self.character().norm2().is_one()
    }

    pub fn direct_sum(&self, other: &MatrixRep) -> Result<MatrixRep, RepError> {
        if !self.group.same_as(&other.group) {
            return Err(RepError::GroupMismatch);
        }
        let gens = self.gens.iter().zip(other.gens.iter()).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new_unchecked(&self.group, self.rank + other.rank, gens)
    }

    /// `P⁻¹·ρ·P`.
    pub fn conjugate_by(&self, p: &Matrix) -> Result<MatrixRep, RepError> {
        if p.rows() != self.rank || !p.is_square() {
            return Err(RepError::DimensionMismatch("change of basis must be r×r".into()));
        }
        let inv = p
            .inverse()
            .ok_or_else(|| RepError::DimensionMismatch("change of basis is singular".into()))?;
        let gens = self.gens.iter().map(|m| &(&inv * m) * p).collect();
        Self::new_unchecked(&self.group, self.rank, gens)
    }

    /// Entrywise Galois action on every image.
    pub fn galois_twist(&self, s: &GaloisAut) -> MatrixRep {
        let gens = self.gens.iter().map(|m| m.galois(s)).collect();
        Self::new_unchecked(&self.group, self.rank, gens).expect("shapes preserved")
    }

    /// Restriction to a subgroup, as a representation of `h.group()`.
    pub fn restrict(&self, h: &Subgroup) -> Result<MatrixRep, RepError> {
        if !h.parent().same_as(&self.group) {
            return Err(RepError::NotSubgroup);
        }
        let hg = h.group();
        let gens = hg.generators().iter().map(|&s| self.image(h.to_parent(s)).clone()).collect();
        Self::new_unchecked(&hg, self.rank, gens)
    }

    /// Restriction of the action to the invariant subspace spanned by the
    /// columns of `basis` (full column rank).
    pub fn subrepresentation(&self, basis: &Matrix) -> Result<MatrixRep, RepError> {
        let rows = basis.independent_rows();
        if rows.len() != basis.cols() {
            return Err(RepError::DimensionMismatch("basis is not of full column rank".into()));
        }
        let sel_inv = basis.select_rows(&rows).inverse().expect("independent rows");
        let mut gens = Vec::with_capacity(self.gens.len());
        for m in self.gens.iter() {
            let mb = m * basis;
            let x = &sel_inv * &mb.select_rows(&rows);
            if &(basis * &x) != &mb {
                return Err(RepError::NotInvariant);
            }
            gens.push(x);
        }
        Self::new_unchecked(&self.group, basis.cols(), gens)
    }

    /// Every entry of every generator image lies in `k`.
    pub fn defined_over(&self, k: &SubfieldSpec) -> bool {
        self.gens.iter().all(|m| m.entries().all(|x| k.contains(x)))
    }

    /// `det ρ(s)` has order dividing `|G|` for every generator.
    pub fn determinant_has_finite_order(&self) -> bool {
        let n = self.group.order() as i64;
        self.gens.iter().all(|m| m.det().pow(n).is_ok_and(|d| d.is_one()))
    }

    /// Same group and identical generator matrices.
    pub fn same_matrices(&self, other: &MatrixRep) -> bool {
        self.group.same_as(&other.group) && self.gens == other.gens
    }

    /// Least common conductor of all generator entries.
    pub fn conductor(&self) -> u64 {
        self.gens
            .iter()
            .flat_map(|m| m.entries().map(CycNum::conductor).collect::<Vec<_>>())
            .fold(1, crate::cyclo::table::lcm)
    }
}

impl fmt::Debug for MatrixRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixRep(rank {}, {:?}) {:?}", self.rank, self.group, self.gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;

    pub(crate) fn std_s3_over_q3() -> MatrixRep {
        let g = named::s3();
        let w = CycNum::zeta(3);
        let a = Matrix::from_rows(vec![
            vec![w.clone(), CycNum::zero()],
            vec![CycNum::zero(), w.conj()],
        ]);
        let b = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        MatrixRep::new(&g, vec![a, b]).unwrap()
    }

    #[test]
    fn character_of_std() {
        let rho = std_s3_over_q3();
        let chi = rho.character();
        let g = rho.group();
        for (c, &r) in g.class_reps().iter().enumerate() {
            let expect = match g.element_order(r) {
                1 => 2,
                2 => 0,
                _ => -1,
            };
            assert_eq!(chi.values()[c], CycNum::from(expect));
        }
        assert!(rho.is_abs_irreducible());
    }

    #[test]
    fn invalid_images_are_rejected() {
        let g = named::s3();
        let a = Matrix::from_int_rows(&[&[1, 0], &[0, 1]]);
        let b = Matrix::from_int_rows(&[&[2, 0], &[0, 1]]);
        assert!(matches!(MatrixRep::new(&g, vec![a, b]), Err(RepError::NotHomomorphism(_))));
    }

    #[test]
    fn regular_rep_is_reducible() {
        let g = named::cyclic(2);
        let reg = MatrixRep::regular(&g);
        assert!(reg.validate().is_ok());
        assert!(!reg.is_abs_irreducible());
        assert_eq!(reg.character(), Character::regular(&g));
    }

    #[test]
    fn twist_round_trip() {
        let rho = std_s3_over_q3();
        let s = GaloisAut::new(3, 2).unwrap();
        let back = rho.galois_twist(&s).galois_twist(&s.inverse());
        assert!(back.same_matrices(&rho));
        assert_eq!(rho.galois_twist(&s).character(), rho.character());
    }
}
