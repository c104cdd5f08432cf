use crate::cyclo::CycNum;
use crate::grp::Subgroup;
use crate::linalg::Matrix;

use super::{Character, MatrixRep, RepError};

/// Left cosets `xH` ordered by their least member; returns the coset index
/// of every element and the least member of each coset.
pub(crate) fn left_cosets(h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    let g = h.parent();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] == usize::MAX {
            for &y in h.elements() {
                coset_of[g.mul(x, y)] = reps.len();
            }
            reps.push(x);
        }
    }
    (coset_of, reps)
}

/// `Ind_H^G σ` on the transversal of least coset members: the block `(i, j)`
/// of `Ind(g)` is `σ(t_i⁻¹·g·t_j)` when that element lies in `H`.
pub fn induce_rep(sigma: &MatrixRep, h: &Subgroup) -> Result<MatrixRep, RepError> {
    if !sigma.group().same_as(&h.group()) {
        return Err(RepError::GroupMismatch);
    }
    let g = h.parent();
    let (coset_of, reps) = left_cosets(h);
    let m = reps.len();
    let r = sigma.rank();
    let gens = g
        .generators()
        .iter()
        .map(|&s| {
            let mut out = Matrix::zeros(m * r, m * r);
            for (j, &tj) in reps.iter().enumerate() {
                let y = g.mul(s, tj);
                let i = coset_of[y];
                let inner = g.mul(g.inv(reps[i]), y);
                let block = sigma.image(h.to_local(inner).expect("in H"));
                for a in 0..r {
                    for b in 0..r {
                        out.set(i * r + a, j * r + b, block.get(a, b).clone());
                    }
                }
            }
            out
        })
        .collect();
    MatrixRep::new_unchecked(g, m * r, gens)
}

/// Basis of `Hom_G(ρ, τ)`: matrices `X` (rank τ × rank ρ) with `τ(g)·X = X·ρ(g)`.
#[derive(Debug, Clone)]
pub struct HomBasis {
    pub source_rank: usize,
    pub target_rank: usize,
    pub basis: Vec<Matrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Exact null space of the stacked generator constraints.
pub fn hom_space(rho: &MatrixRep, tau: &MatrixRep) -> Result<HomBasis, RepError> {
    if !rho.group().same_as(tau.group()) {
        return Err(RepError::GroupMismatch);
    }
    let (rs, rt) = (rho.rank(), tau.rank());
    let unknowns = rs * rt;
    let var = |a: usize, b: usize| a * rs + b;
    let mut rows = Vec::new();
    for (rm, tm) in rho.generator_images().iter().zip(tau.generator_images()) {
        for a in 0..rt {
            for b in 0..rs {
                let mut row = vec![CycNum::zero(); unknowns];
                for k in 0..rt {
                    let t = tm.get(a, k);
                    if !t.is_zero() {
                        row[var(k, b)] += t;
                    }
                }
                for k in 0..rs {
                    let r = rm.get(k, b);
                    if !r.is_zero() {
                        row[var(a, k)] -= r;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis_vecs = if rows.is_empty() {
        (0..unknowns)
            .map(|u| (0..unknowns).map(|v| CycNum::from((u == v) as i64)).collect())
            .collect()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    let basis = basis_vecs
        .into_iter()
        .map(|v: Vec<CycNum>| Matrix::from_fn(rt, rs, |a, b| v[var(a, b)].clone()))
        .collect();
    Ok(HomBasis { source_rank: rs, target_rank: rt, basis })
}

/// `e = (deg χ / |L|) Σ_{x∈L} conj(χ(x))·ρ(x)` for a character `χ` of `l.group()`.
pub fn isotypic_projector(rho: &MatrixRep, l: &Subgroup, chi: &Character) -> Result<Matrix, RepError> {
    if !l.parent().same_as(rho.group()) {
        return Err(RepError::NotSubgroup);
    }
    let lg = l.group();
    if !chi.group().same_as(&lg) {
        return Err(RepError::GroupMismatch);
    }
    let r = rho.rank();
    let mut acc = Matrix::zeros(r, r);
    for (c, members) in lg.classes().iter().enumerate() {
        let coeff = chi.values()[c].conj();
        if coeff.is_zero() {
            continue;
        }
        let mut sum = Matrix::zeros(r, r);
        for &local in members {
            sum = &sum + rho.image(l.to_parent(local));
        }
        acc = &acc + &sum.scale(&coeff);
    }
    let scale = chi.degree() * &CycNum::from_ratio(1, l.order() as i64);
    Ok(acc.scale(&scale))
}

/// `{g ∈ G : χ(g⁻¹·x·g) = χ(x) for all x ∈ L}` for `L` normal in `G`.
pub fn inertia_subgroup(l: &Subgroup, chi: &Character) -> Result<Subgroup, RepError> {
    let g = l.parent();
    let lg = l.group();
    if !chi.group().same_as(&lg) {
        return Err(RepError::GroupMismatch);
    }
    if !l.is_normal() {
        return Err(crate::grp::GroupError::NotNormal.into());
    }
    let reps: Vec<usize> = lg.class_reps().iter().map(|&r| l.to_parent(r)).collect();
    let stab: Vec<usize> = (0..g.order())
        .filter(|&x| {
            reps.iter().all(|&y| {
                let conj = g.conjugate(y, g.inv(x));
                chi.at(l.to_local(conj).expect("normal")) == chi.at(l.to_local(y).unwrap())
            })
        })
        .collect();
    Ok(Subgroup::generated(g, &stab))
}

/// Inertia subgroup `I` of a constituent `σ₁` of `Res_L ρ`, and the
/// `σ₁`-isotypic component of `Res_L ρ` as a representation of `I`; checks
/// that inducing it back gives `χ_ρ`.
pub fn clifford_component(
    rho: &MatrixRep,
    l: &Subgroup,
    sigma1: &Character,
) -> Result<(Subgroup, MatrixRep), RepError> {
    let chi = rho.character();
    let res = chi.restrict(l)?;
    if res.inner(sigma1)?.is_zero() {
        return Err(RepError::NotConstituent);
    }
    let inertia = inertia_subgroup(l, sigma1)?;
    let proj = isotypic_projector(rho, l, sigma1)?;
    let basis = proj.column_basis();
    let rho_i = rho.restrict(&inertia)?;
    let component = rho_i.subrepresentation(&basis)?;
    let back = Character::induce(&component.character(), &inertia)?;
    if back != chi {
        return Err(RepError::RealizationFailed(
            "induced isotypic component does not recover the character".into(),
        ));
    }
    Ok((inertia, component))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;
    use crate::rep::char_table;

    fn std_s3() -> MatrixRep {
        let g = named::s3();
        let w = CycNum::zeta(3);
        let a = Matrix::from_rows(vec![vec![w.clone(), CycNum::zero()], vec![CycNum::zero(), w.conj()]]);
        let b = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        MatrixRep::new(&g, vec![a, b]).unwrap()
    }

    #[test]
    fn induction_examples() {
        let g = named::s3();
        let a3 = named::alternating_in(&g);
        let w = char_table(&a3.group()).into_iter().find(|c| !c.is_rational()).unwrap();
        let ind = induce_rep(&MatrixRep::linear(&w).unwrap(), &a3).unwrap();
        ind.validate().unwrap();
        assert_eq!(ind.character(), std_s3().character());

        let whole = Subgroup::whole(&g);
        let rho = std_s3();
        let same = induce_rep(&rho.restrict(&whole).unwrap(), &whole).unwrap();
        assert_eq!(same.character(), rho.character());

        let c2 = named::cyclic(2);
        let triv = Subgroup::trivial(&c2);
        let reg = induce_rep(&MatrixRep::trivial(&triv.group()), &triv).unwrap();
        assert_eq!(reg.character(), Character::regular(&c2));
    }

    #[test]
    fn hom_dimensions() {
        let rho = std_s3();
        assert_eq!(hom_space(&rho, &rho).unwrap().dim(), 1);
        let g = rho.group().clone();
        let t = char_table(&g);
        let triv = MatrixRep::linear(&t[0]).unwrap();
        let sign = MatrixRep::linear(&t[1]).unwrap();
        assert_eq!(hom_space(&triv, &sign).unwrap().dim(), 0);
        let c3 = named::cyclic(3);
        let reg = MatrixRep::regular(&c3);
        let w = char_table(&c3).into_iter().find(|c| !c.is_rational()).unwrap();
        let h = hom_space(&reg, &MatrixRep::linear(&w).unwrap()).unwrap();
        assert_eq!(h.dim(), 1);
        for x in &h.basis {
            assert_eq!(x.rows(), 1);
            assert_eq!(x.cols(), 3);
        }
    }

    #[test]
    fn clifford_on_s3() {
        let rho = std_s3();
        let g = rho.group().clone();
        let a3 = named::alternating_in(&g);
        let w = char_table(&a3.group()).into_iter().find(|c| !c.is_rational()).unwrap();
        let (i, comp) = clifford_component(&rho, &a3, &w).unwrap();
        assert_eq!(i, a3);
        assert_eq!(comp.rank(), 1);
        assert_eq!(comp.character(), w);
        let triv = Character::trivial(&a3.group());
        assert_eq!(clifford_component(&rho, &a3, &triv).unwrap_err(), RepError::NotConstituent);
    }
}
