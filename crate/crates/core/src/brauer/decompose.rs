use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cyclo::table::lcm;
use crate::cyclo::CycNum;
use crate::grp::{elementary_mod_n, Group, Subgroup};
use crate::hnf::solve_integer;
use crate::rep::{char_table, Character};

use super::BrauerError;

#[derive(Debug, Clone)]
pub struct BrauerTerm {
    pub h: Subgroup,
    /// An irreducible character of `h.group()`.
    pub psi: Character,
    pub coeff: i64,
}

/// `target = Σ coeff · Ind_H ψ` with every `H/N` elementary.
#[derive(Debug, Clone)]
pub struct BrauerDecomposition {
    pub target: Character,
    pub terms: Vec<BrauerTerm>,
}

impl BrauerDecomposition {
    /// `Σ coeff · Ind ψ`, re-evaluated classwise.
    pub fn evaluate(&self) -> Result<Character, BrauerError> {
        let mut acc = Character::zero(self.target.group());
        for t in &self.terms {
            let ind = Character::induce(&t.psi, &t.h)?;
            acc = acc.add(&ind.scale(t.coeff))?;
        }
        Ok(acc)
    }

    pub fn residual_is_zero(&self) -> Result<bool, BrauerError> {
        Ok(self.evaluate()? == self.target)
    }
}

fn flatten(chars: &[&Character], cond: u64) -> Vec<Vec<BigInt>> {
    // one column per character, one row per (class, coordinate)
    let cols: Vec<Vec<num_rational::BigRational>> = chars
        .iter()
        .map(|c| {
            c.values()
                .iter()
                .flat_map(|v| v.coords_in(cond).expect("conductor divides the common one"))
                .collect()
        })
        .collect();
    let rows = cols.first().map_or(0, Vec::len);
    (0..rows)
        .map(|r| {
            let den = cols.iter().fold(BigInt::one(), |acc, c| acc.lcm(c[r].denom()));
            cols.iter().map(|c| (&c[r] * &den).to_integer()).collect()
        })
        .collect()
}

/// Integer combination of characters induced from the irreducible characters
/// of the subgroups `H ⊇ N` with `H/N` elementary (one per conjugacy class).
pub fn brauer_decompose(chi: &Character, g: &Group, n: &Subgroup) -> Result<BrauerDecomposition, BrauerError> {
    if !chi.group().same_as(g) || !n.parent().same_as(g) {
        return Err(crate::rep::RepError::GroupMismatch.into());
    }
    let subs = elementary_mod_n(g, n)?;
    let whole = Subgroup::whole(g);
    if chi.is_irreducible() && subs.iter().any(|h| *h == whole) {
        return Ok(BrauerDecomposition {
            target: chi.clone(),
            terms: vec![BrauerTerm { h: whole, psi: chi.clone(), coeff: 1 }],
        });
    }
    if chi.is_zero() {
        return Ok(BrauerDecomposition { target: chi.clone(), terms: vec![] });
    }

    let mut sources = Vec::new();
    let mut induced = Vec::new();
    for h in &subs {
        for psi in char_table(&h.group()) {
            induced.push(Character::induce(&psi, h)?);
            sources.push((h.clone(), psi));
        }
    }
    let cond = induced
        .iter()
        .chain(std::iter::once(chi))
        .flat_map(|c| c.values().iter().map(CycNum::conductor))
        .fold(1, lcm);

    // the target is flattened as an extra column so that rows share a denominator scaling
    let mut all: Vec<&Character> = induced.iter().collect();
    all.push(chi);
    let mut rows = flatten(&all, cond);
    let b: Vec<BigInt> = rows.iter_mut().map(|r| r.pop().expect("target column")).collect();
    let x = solve_integer(&rows, induced.len(), &b).ok_or(BrauerError::NoIntegralSolution)?;

    let mut terms = Vec::new();
    for ((h, psi), c) in sources.into_iter().zip(x) {
        if c.is_zero() {
            continue;
        }
        let coeff = c.to_i64().ok_or(BrauerError::NoIntegralSolution)?;
        terms.push(BrauerTerm { h, psi, coeff });
    }
    let dec = BrauerDecomposition { target: chi.clone(), terms };
    if !dec.residual_is_zero()? {
        return Err(BrauerError::NoIntegralSolution);
    }
    Ok(dec)
}
