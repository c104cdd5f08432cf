use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclo::table::lcm;
use crate::cyclo::{CycNum, GaloisAut, SubfieldSpec};
use crate::linalg::Matrix;
use crate::rep::{hom_space, MatrixRep};

use super::{DescentError, MultOneWitness};

pub const H90_RETRY_LIMIT: usize = 64;

/// Normalized intertwiners `a(σ) : σρ → ρ` for `σ ∈ Gal(Q(ζ_n)/k₀)`, after a
/// change of basis making the witness eigenvector the first basis vector.
#[derive(Debug, Clone)]
pub struct Cocycle {
    pub base: SubfieldSpec,
    pub conductor: u64,
    pub auts: Vec<GaloisAut>,
    pub maps: Vec<Matrix>,
    /// Columns: the witness eigenvector, then the unit vectors completing it.
    pub change: Matrix,
    /// `change⁻¹ · ρ · change`.
    pub rep: MatrixRep,
}

impl Cocycle {
    pub fn get(&self, s: &GaloisAut) -> Option<&Matrix> {
        let s = s.lift(self.conductor);
        self.auts.iter().position(|t| *t == s).map(|i| &self.maps[i])
    }

    /// `a(σ′σ) = a(σ′)·σ′(a(σ))` for every pair.
    pub fn check(&self) -> bool {
        self.auts.iter().zip(&self.maps).all(|(s1, a1)| {
            self.auts.iter().zip(&self.maps).all(|(s2, a2)| {
                let prod = s1.compose(s2);
                self.get(&prod).is_some_and(|a12| *a12 == a1 * &a2.galois(s1))
            })
        })
    }
}

fn eigenvector(m: &Matrix, alpha: &CycNum) -> Option<Vec<CycNum>> {
    let shifted = m - &Matrix::scalar(m.rows(), alpha);
    let mut ns = shifted.nullspace();
    if ns.len() == 1 {
        ns.pop()
    } else {
        None
    }
}

pub fn intertwiner_cocycle(
    rho: &MatrixRep,
    k0: &SubfieldSpec,
    witness: &MultOneWitness,
) -> Result<Cocycle, DescentError> {
    if !rho.is_abs_irreducible() {
        return Err(DescentError::NotAbsolutelyIrreducible);
    }
    if !rho.character().values().iter().all(|v| k0.contains(v)) {
        return Err(DescentError::TraceNotRational);
    }
    let g = rho.group();
    if witness.class_rep >= g.order() || g.element(witness.class_rep) != &witness.element {
        return Err(DescentError::WitnessInvalid("element does not match the group".into()));
    }
    if !k0.contains(&witness.alpha) {
        return Err(DescentError::WitnessInvalid("eigenvalue outside the base field".into()));
    }
    let image = rho.image(witness.class_rep);
    if image.charpoly().root_multiplicity(&witness.alpha) != 1 {
        return Err(DescentError::WitnessInvalid("eigenvalue is not of multiplicity one".into()));
    }
    let v = eigenvector(image, &witness.alpha)
        .ok_or_else(|| DescentError::WitnessInvalid("eigenspace is not a line".into()))?;
    let pivot = v.iter().position(|x| !x.is_zero()).expect("nonzero eigenvector");
    let r = rho.rank();
    let mut cols = vec![v];
    for j in (0..r).filter(|&j| j != pivot) {
        cols.push((0..r).map(|i| CycNum::from((i == j) as i64)).collect());
    }
    let change = Matrix::from_columns(r, &cols);
    let rep = rho.conjugate_by(&change)?;

    let conductor = lcm(lcm(rep.conductor(), k0.conductor()), witness.alpha.conductor());
    let auts = k0.galois_group(conductor);
    let mut maps = Vec::with_capacity(auts.len());
    for s in &auts {
        let twisted = rep.galois_twist(s);
        let hom = hom_space(&twisted, &rep)?;
        if hom.dim() != 1 {
            return Err(DescentError::NotAbsolutelyIrreducible);
        }
        let x = &hom.basis[0];
        let c = x.get(0, 0).clone();
        if c.is_zero() || (1..r).any(|i| !x.get(i, 0).is_zero()) {
            return Err(DescentError::CocycleCheckFailed("intertwiner does not preserve the eigenline".into()));
        }
        maps.push(x.scale(&c.inv()?));
    }
    let cocycle = Cocycle { base: k0.clone(), conductor, auts, maps, change, rep };
    if !cocycle.check() {
        return Err(DescentError::CocycleCheckFailed("a(σ′σ) ≠ a(σ′)·σ′(a(σ))".into()));
    }
    Ok(cocycle)
}

fn trial_matrix(r: usize, n: u64, rng: &mut ChaCha8Rng) -> Matrix {
    let z = CycNum::zeta(n);
    Matrix::from_fn(r, r, |_, _| {
        let a = CycNum::from(rng.gen_range(-3..=3));
        let b = CycNum::from(rng.gen_range(-3..=3));
        &a + &(&b * &z)
    })
}

/// `b = Σ_σ a(σ)·σ(C)`, retried with fresh trial matrices `C` (the identity
/// first, then seeded random ones) until `b` is invertible.
pub fn hilbert90_solve(c: &Cocycle, seed: u64) -> Result<Matrix, DescentError> {
    let r = c.rep.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..H90_RETRY_LIMIT {
        let trial_c = if trial == 0 { Matrix::identity(r) } else { trial_matrix(r, c.conductor, &mut rng) };
        let mut b = Matrix::zeros(r, r);
        for (s, a) in c.auts.iter().zip(&c.maps) {
            b = &b + &(a * &trial_c.galois(s));
        }
        if b.det().is_zero() {
            continue;
        }
        if c.auts.iter().zip(&c.maps).all(|(s, a)| a * &b.galois(s) == b) {
            return Ok(b);
        }
        return Err(DescentError::CocycleCheckFailed("a(σ)·σ(b) ≠ b".into()));
    }
    Err(DescentError::RetryLimitExceeded(H90_RETRY_LIMIT))
}

/// `descended = b⁻¹·original·b` with every entry in `base`.
#[derive(Debug, Clone)]
pub struct DescentWitness {
    pub original: MatrixRep,
    pub base: SubfieldSpec,
    pub b: Matrix,
    pub descended: MatrixRep,
}

pub fn descend_prop7(
    rho: &MatrixRep,
    k0: &SubfieldSpec,
    witness: &MultOneWitness,
    seed: u64,
) -> Result<DescentWitness, DescentError> {
    let cocycle = intertwiner_cocycle(rho, k0, witness)?;
    let b0 = hilbert90_solve(&cocycle, seed)?;
    let b = &cocycle.change * &b0;
    let descended = rho.conjugate_by(&b)?;
    if !descended.defined_over(k0) {
        return Err(DescentError::DescentCheckFailed("an entry lies outside the base field".into()));
    }
    if descended.character() != rho.character() {
        return Err(DescentError::DescentCheckFailed("character changed".into()));
    }
    Ok(DescentWitness { original: rho.clone(), base: k0.clone(), b, descended })
}
