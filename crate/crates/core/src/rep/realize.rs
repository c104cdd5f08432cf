//! Explicit matrices for an irreducible character, cut out of a monomial
//! induced representation by the central idempotent.

use crate::cyclo::CycNum;
use crate::grp::{subgroup_classes, Subgroup};
use crate::linalg::Matrix;

use super::ops::left_cosets;
use super::{char_table, induce_rep, isotypic_projector, Character, MatrixRep, RepError};

/// The `χ`-isotypic part of `Ind_H^G λ` for a linear `λ` of `H`, computed
/// without forming the induced matrices of every element.
fn from_monomial(chi: &Character, h: &Subgroup, lambda: &Character) -> Result<MatrixRep, RepError> {
    let g = chi.group();
    let (coset_of, reps) = left_cosets(h);
    let m = reps.len();
    let entry = |x: usize, j: usize| {
        let y = g.mul(x, reps[j]);
        let i = coset_of[y];
        let inner = g.mul(g.inv(reps[i]), y);
        (i, lambda.at(h.to_local(inner).expect("in H")).clone())
    };
    let mut proj = Matrix::zeros(m, m);
    for (c, members) in g.classes().iter().enumerate() {
        let coeff = chi.values()[c].conj();
        if coeff.is_zero() {
            continue;
        }
        let mut sum = Matrix::zeros(m, m);
        for &x in members {
            for j in 0..m {
                let (i, v) = entry(x, j);
                let cur = sum.get(i, j) + &v;
                sum.set(i, j, cur);
            }
        }
        proj = &proj + &sum.scale(&coeff);
    }
    let proj = proj.scale(&(chi.degree() * &CycNum::from_ratio(1, g.order() as i64)));
    let basis = proj.column_basis();
    let gens = g
        .generators()
        .iter()
        .map(|&s| {
            let mut out = Matrix::zeros(m, m);
            for j in 0..m {
                let (i, v) = entry(s, j);
                out.set(i, j, v);
            }
            out
        })
        .collect();
    MatrixRep::new_unchecked(g, m, gens)?.subrepresentation(&basis)
}

/// A matrix representation affording the irreducible character `χ`.
///
/// Searches subgroups by increasing index for a linear character `λ` with
/// `⟨Res χ, λ⟩ = 1`; if none exists, uses an irreducible `ψ` of a proper
/// subgroup with multiplicity one, realized recursively.
pub fn realize_irreducible(chi: &Character) -> Result<MatrixRep, RepError> {
    let g = chi.group();
    if !chi.is_irreducible() {
        return Err(RepError::RealizationFailed("character is not irreducible".into()));
    }
    if chi.degree_usize() == Some(1) {
        return MatrixRep::linear(chi);
    }
    let deg = chi.degree_usize().expect("positive integer degree");
    let mut subs: Vec<Subgroup> = subgroup_classes(g)
        .into_iter()
        .filter(|h| !h.is_whole() && h.index() >= deg)
        .collect();
    subs.sort_by(|a, b| a.index().cmp(&b.index()).then(a.sort_key().cmp(&b.sort_key())));

    let mut fallback: Option<(Subgroup, Character)> = None;
    for h in &subs {
        let res = chi.restrict(h)?;
        for psi in char_table(&h.group()) {
            if !res.inner(&psi)?.is_one() {
                continue;
            }
            if psi.degree_usize() == Some(1) {
                let rep = from_monomial(chi, h, &psi)?;
                if rep.character() != *chi {
                    return Err(RepError::RealizationFailed("projected character mismatch".into()));
                }
                return Ok(rep);
            }
            if fallback.is_none() {
                fallback = Some((h.clone(), psi));
            }
        }
    }
    let (h, psi) = fallback
        .ok_or_else(|| RepError::RealizationFailed("no multiplicity-one constituent on a proper subgroup".into()))?;
    let sigma = realize_irreducible(&psi)?;
    let ind = induce_rep(&sigma, &h)?;
    let proj = isotypic_projector(&ind, &Subgroup::whole(g), chi)?;
    let rep = ind.subrepresentation(&proj.column_basis())?;
    if rep.character() != *chi {
        return Err(RepError::RealizationFailed("projected character mismatch".into()));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;

    #[test]
    fn realizes_every_irreducible_of_small_groups() {
        for g in [
            named::s3(),
            named::dihedral(4),
            named::quaternion(),
            named::alternating(4),
            named::symmetric(4),
            named::cyclic(6),
        ] {
            for chi in char_table(&g) {
                let rho = realize_irreducible(&chi).unwrap();
                rho.validate().unwrap();
                assert_eq!(rho.character(), chi);
            }
        }
    }
}

#[cfg(test)]
mod s6_tests {
    use super::*;
    use crate::grp::named;

    #[test]
    fn s6_degree_sixteen() {
        let g = named::symmetric(6);
        let chi = char_table(&g).pop().unwrap();
        let t = std::time::Instant::now();
        let rho = realize_irreducible(&chi).unwrap();
        eprintln!("realize {:?} conductor {}", t.elapsed(), rho.conductor());
        let t = std::time::Instant::now();
        rho.validate().unwrap();
        eprintln!("validate {:?}", t.elapsed());
        assert_eq!(rho.rank(), 16);
    }
}
