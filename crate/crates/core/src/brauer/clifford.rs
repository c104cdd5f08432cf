use crate::grp::{chief_step, is_nilpotent_quotient, normal_subgroups, normal_subgroups_containing, Group, Subgroup};
use crate::rep::{char_table, clifford_component, inertia_subgroup, Character, MatrixRep};

use super::BrauerError;

/// Shape of `Res_L π` for a `G`-invariant irreducible `π` of `K`, where
/// `K/L` is an abelian chief factor of `G`. Constituents are characters of
/// `L` viewed inside `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trichotomy {
    /// `[K:L]` pairwise distinct constituents, each with multiplicity one.
    I { constituents: Vec<Character> },
    /// The restriction is irreducible.
    II { constituent: Character },
    /// A single constituent with multiplicity `e`, `e² = [K:L]`.
    III { constituent: Character, e: usize },
}

impl Trichotomy {
    pub fn case_tag(&self) -> &'static str {
        match self {
            Trichotomy::I { .. } => "I",
            Trichotomy::II { .. } => "II",
            Trichotomy::III { .. } => "III",
        }
    }
}

fn violation(msg: &str) -> BrauerError {
    BrauerError::HypothesisViolation(msg.to_string())
}

pub fn clifford_trichotomy(
    pi: &MatrixRep,
    g: &Group,
    k: &Subgroup,
    l: &Subgroup,
) -> Result<Trichotomy, BrauerError> {
    if !k.parent().same_as(g) || !l.parent().same_as(g) {
        return Err(violation("K and L must be subgroups of G"));
    }
    if !k.is_normal() || !l.is_normal() {
        return Err(violation("K and L must be normal in G"));
    }
    if !l.is_subgroup_of(k) || l == k {
        return Err(violation("L must be a proper subgroup of K"));
    }
    let kg = k.generators();
    for &a in kg {
        for &b in kg {
            let comm = g.mul(g.mul(a, b), g.inv(g.mul(b, a)));
            if !l.contains(comm) {
                return Err(violation("K/L is not abelian"));
            }
        }
    }
    let chief_factor = !normal_subgroups(g)
        .iter()
        .any(|m| l.is_subgroup_of(m) && m.is_subgroup_of(k) && m != l && m != k);
    let kgrp = k.group();
    if !pi.group().same_as(&kgrp) {
        return Err(violation("π must be a representation of K"));
    }
    let chi = pi.character();
    if !chi.is_irreducible() {
        return Err(violation("π is not irreducible"));
    }
    for &s in g.generators() {
        for &r in &kgrp.class_reps() {
            let y = k.to_parent(r);
            let conj = g.conjugate(y, g.inv(s));
            if chi.at(k.to_local(conj).expect("K normal")) != chi.at(r) {
                return Err(violation("π is not invariant under conjugation by G"));
            }
        }
    }

    let l_in_k = l.within(k)?;
    let res = chi.restrict(&l_in_k)?;
    let mut parts = Vec::new();
    for sigma in char_table(&l_in_k.group()) {
        let m = res.inner(&sigma).map_err(BrauerError::from)?;
        if !m.is_zero() {
            let m = m.to_integer().and_then(|x| usize::try_from(x).ok()).expect("multiplicity");
            parts.push((sigma, m));
        }
    }
    if !chief_factor {
        // the classification only needs K ∩ I ∈ {L, K} for the inertia group I
        let sigma = parts.first().map(|(s, _)| s.clone()).ok_or_else(|| violation("empty restriction"))?;
        let sigma_on_l = Character::new(&l.group(), sigma.values().to_vec())?;
        let inertia = inertia_subgroup(l, &sigma_on_l)?;
        let meet = inertia.intersection(k);
        if meet != *l && meet != *k {
            return Err(violation("a normal subgroup of G lies strictly between L and K"));
        }
    }
    let index = k.order() / l.order();
    match parts.as_slice() {
        [(sigma, 1)] => Ok(Trichotomy::II { constituent: sigma.clone() }),
        [(sigma, e)] if e * e == index => Ok(Trichotomy::III { constituent: sigma.clone(), e: *e }),
        _ if parts.len() == index && parts.iter().all(|(_, m)| *m == 1) => {
            Ok(Trichotomy::I { constituents: parts.into_iter().map(|(s, _)| s).collect() })
        }
        _ => Err(violation("restriction matches none of the three cases")),
    }
}

/// One reduction step, with every subgroup viewed inside the original group.
#[derive(Debug, Clone)]
pub struct IsaacsStep {
    pub k: Subgroup,
    pub l: Subgroup,
    pub constituent: Character,
    pub inertia: Subgroup,
}

/// `ρ ≅ Ind_H σ` with `σ` irreducible and `Res_N σ` irreducible.
#[derive(Debug, Clone)]
pub struct IsaacsWitness {
    pub h: Subgroup,
    pub sigma: MatrixRep,
    pub chain: Vec<IsaacsStep>,
}

pub fn isaacs_reduce(rho: &MatrixRep, g: &Group, n: &Subgroup) -> Result<IsaacsWitness, BrauerError> {
    if !rho.group().same_as(g) || !n.parent().same_as(g) {
        return Err(crate::rep::RepError::GroupMismatch.into());
    }
    if !rho.is_abs_irreducible() {
        return Err(BrauerError::NotIrreducible);
    }
    if !is_nilpotent_quotient(g, n)? {
        return Err(BrauerError::NotNilpotent);
    }
    let target = rho.character();
    let mut cur = Subgroup::whole(g);
    let mut rep = rho.clone();
    let mut chain = Vec::new();
    loop {
        let hg = cur.group();
        let n_loc = n.within(&cur)?;
        let chi = rep.character();
        if chi.restrict(&n_loc)?.is_irreducible() {
            break;
        }
        let mut k = None;
        for cand in normal_subgroups_containing(&hg, &n_loc)? {
            if chi.restrict(&cand)?.is_irreducible() {
                k = Some(cand);
                break;
            }
        }
        let k = k.expect("the whole group restricts irreducibly");
        let l = chief_step(&hg, &n_loc, &k)?;
        let pi = rep.restrict(&k)?;
        let constituent = match clifford_trichotomy(&pi, &hg, &k, &l)? {
            Trichotomy::I { mut constituents } => constituents.remove(0),
            other => return Err(BrauerError::InternalCaseViolation(format!("case {}", other.case_tag()))),
        };
        let (inertia, component) = clifford_component(&rep, &l, &constituent)?;
        chain.push(IsaacsStep {
            k: cur.lift(&k),
            l: cur.lift(&l),
            constituent,
            inertia: cur.lift(&inertia),
        });
        cur = cur.lift(&inertia);
        rep = component;
    }
    let witness = IsaacsWitness { h: cur, sigma: rep, chain };
    let ind = Character::induce(&witness.sigma.character(), &witness.h)?;
    if ind != target {
        return Err(BrauerError::InternalCaseViolation("induced character differs".into()));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;
    use crate::rep::realize_irreducible;

    fn top_irrep(g: &Group) -> MatrixRep {
        realize_irreducible(&char_table(g).pop().unwrap()).unwrap()
    }

    #[test]
    fn d4_over_c4_is_case_one() {
        let g = named::dihedral(4);
        let whole = Subgroup::whole(&g);
        let c4 = crate::grp::subgroup_classes(&g)
            .into_iter()
            .find(|h| h.order() == 4 && g.element_order(h.generators()[0]) == 4)
            .unwrap();
        let pi = top_irrep(&g);
        let t = clifford_trichotomy(&pi, &g, &whole, &c4).unwrap();
        match t {
            Trichotomy::I { constituents } => {
                assert_eq!(constituents.len(), 2);
                assert!(constituents.iter().all(|c| !c.is_rational()));
            }
            other => panic!("expected case I, got {other:?}"),
        }
    }

    #[test]
    fn s3_sign_is_case_two() {
        let g = named::s3();
        let sign = MatrixRep::linear(&char_table(&g)[1]).unwrap();
        let t = clifford_trichotomy(&sign, &g, &Subgroup::whole(&g), &named::alternating_in(&g)).unwrap();
        assert_eq!(t.case_tag(), "II");
    }

    #[test]
    fn q8_over_center_is_case_three() {
        let g = named::quaternion();
        let center = normal_subgroups(&g).into_iter().find(|h| h.order() == 2).unwrap();
        let pi = top_irrep(&g);
        match clifford_trichotomy(&pi, &g, &Subgroup::whole(&g), &center).unwrap() {
            Trichotomy::III { e, .. } => assert_eq!(e, 2),
            other => panic!("expected case III, got {other:?}"),
        }
    }

    #[test]
    fn hypotheses_are_checked() {
        let g = named::symmetric(4);
        let v4 = normal_subgroups(&g).into_iter().find(|h| h.order() == 4).unwrap();
        let triv = Subgroup::trivial(&g);
        // S4/V4 is not abelian
        let pi = MatrixRep::trivial(&g);
        assert!(matches!(
            clifford_trichotomy(&pi, &g, &Subgroup::whole(&g), &v4),
            Err(BrauerError::HypothesisViolation(_))
        ));
        let pi = MatrixRep::trivial(&v4.group());
        assert_eq!(clifford_trichotomy(&pi, &g, &v4, &triv).unwrap().case_tag(), "II");
    }

    #[test]
    fn isaacs_on_small_groups() {
        let g = named::s3();
        let a3 = named::alternating_in(&g);
        let w = isaacs_reduce(&top_irrep(&g), &g, &a3).unwrap();
        assert_eq!(w.h, a3);
        assert_eq!(w.sigma.rank(), 1);

        let d4 = named::dihedral(4);
        let w = isaacs_reduce(&top_irrep(&d4), &d4, &Subgroup::trivial(&d4)).unwrap();
        assert_eq!(w.h.order(), 4);
        assert_eq!(w.chain.len(), 1);

        let s3 = named::s3();
        let err = isaacs_reduce(&top_irrep(&s3), &s3, &Subgroup::trivial(&s3)).unwrap_err();
        assert_eq!(err, BrauerError::NotNilpotent);
    }
}
