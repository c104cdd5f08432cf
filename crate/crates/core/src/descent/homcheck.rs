use crate::cyclo::table::lcm;
use crate::cyclo::{CycNum, SubfieldSpec};
use crate::linalg::Matrix;
use crate::rep::{MatrixRep, RepError};

use super::DescentError;

/// A `Q`-basis of `k`, chosen among the Gaussian periods `Σ_{h∈Stab} ζ_n^{jh}`.
pub fn fixed_field_basis(k: &SubfieldSpec) -> Vec<CycNum> {
    let n = k.conductor();
    if n == 1 {
        return vec![CycNum::one()];
    }
    let periods: Vec<CycNum> = (0..n)
        .map(|j| k.stabilizer().iter().map(|&h| CycNum::root_of_unity(n, (j * h % n) as i64)).sum())
        .collect();
    let rows: Vec<Vec<CycNum>> = periods
        .iter()
        .map(|p| p.coords_in(n).expect("period lies in Q(ζ_n)").into_iter().map(CycNum::from).collect())
        .collect();
    let keep = Matrix::from_rows(rows).independent_rows();
    debug_assert_eq!(keep.len(), k.degree());
    keep.into_iter().map(|i| periods[i].clone()).collect()
}

/// Dimension of `Hom_G(ρ, τ)` over `F`, from the rational linear system
/// obtained by writing each unknown entry in a `Q`-basis of `F`.
fn hom_dim_over(rho: &MatrixRep, tau: &MatrixRep, field: &SubfieldSpec) -> usize {
    let basis = fixed_field_basis(field);
    let d = basis.len();
    let (rs, rt) = (rho.rank(), tau.rank());
    let cond = [rho.conductor(), tau.conductor(), field.conductor()].into_iter().fold(1, lcm);
    let phi = CycNum::one().coords_in(cond).expect("1 is rational").len();
    let var = |b: usize, a: usize, c: usize| (b * rt + a) * rs + c;
    let unknowns = d * rt * rs;
    let mut rows: Vec<Vec<CycNum>> = Vec::new();
    for (rm, tm) in rho.generator_images().iter().zip(tau.generator_images()) {
        for a in 0..rt {
            for c in 0..rs {
                let mut eq = vec![CycNum::zero(); unknowns];
                for (b, w) in basis.iter().enumerate() {
                    for k in 0..rt {
                        let t = tm.get(a, k);
                        if !t.is_zero() {
                            eq[var(b, k, c)] += &(t * w);
                        }
                    }
                    for k in 0..rs {
                        let r = rm.get(k, c);
                        if !r.is_zero() {
                            eq[var(b, a, k)] -= &(w * r);
                        }
                    }
                }
                let coords: Vec<Vec<num_rational::BigRational>> =
                    eq.iter().map(|x| x.coords_in(cond).expect("conductor divides")).collect();
                for i in 0..phi {
                    let row: Vec<CycNum> = coords.iter().map(|v| CycNum::from(v[i].clone())).collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
    (unknowns - rank) / d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomDimCheck {
    pub dim_base: usize,
    pub dim_extension: usize,
}

impl HomDimCheck {
    pub fn holds(&self) -> bool {
        self.dim_base == self.dim_extension
    }
}

/// Compare `dim_{k₀} Hom_{k₀[G]}(M, N)` with `dim_k Hom_{k[G]}(k⊗M, k⊗N)`.
pub fn hom_dim_base_change_check(
    m: &MatrixRep,
    n: &MatrixRep,
    k0: &SubfieldSpec,
    k: &SubfieldSpec,
) -> Result<HomDimCheck, DescentError> {
    if !m.group().same_as(n.group()) {
        return Err(RepError::GroupMismatch.into());
    }
    if !m.defined_over(k0) || !n.defined_over(k0) || !k.contains_field(k0) {
        return Err(DescentError::EntriesNotInBaseField);
    }
    Ok(HomDimCheck { dim_base: hom_dim_over(m, n, k0), dim_extension: hom_dim_over(m, n, k) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;
    use crate::rep::char_table;

    #[test]
    fn period_bases_have_the_right_size() {
        assert_eq!(fixed_field_basis(&SubfieldSpec::cyclotomic(5)).len(), 4);
        assert_eq!(fixed_field_basis(&SubfieldSpec::new(5, &[4]).unwrap()).len(), 2);
        assert_eq!(fixed_field_basis(&SubfieldSpec::rationals()).len(), 1);
    }

    #[test]
    fn regular_c3() {
        let g = named::cyclic(3);
        let reg = MatrixRep::regular(&g);
        let q = SubfieldSpec::rationals();
        let chk = hom_dim_base_change_check(&reg, &reg, &q, &SubfieldSpec::cyclotomic(3)).unwrap();
        assert_eq!(chk, HomDimCheck { dim_base: 3, dim_extension: 3 });
    }

    #[test]
    fn trivial_to_sign() {
        let g = named::s3();
        let t = char_table(&g);
        let a = MatrixRep::linear(&t[0]).unwrap();
        let b = MatrixRep::linear(&t[1]).unwrap();
        let q = SubfieldSpec::rationals();
        let chk = hom_dim_base_change_check(&a, &b, &q, &SubfieldSpec::cyclotomic(12)).unwrap();
        assert_eq!((chk.dim_base, chk.dim_extension), (0, 0));
    }

    #[test]
    fn entries_must_be_in_base() {
        let g = named::cyclic(3);
        let w = MatrixRep::linear(&char_table(&g)[1]).unwrap();
        let q = SubfieldSpec::rationals();
        assert_eq!(
            hom_dim_base_change_check(&w, &w, &q, &SubfieldSpec::cyclotomic(3)).unwrap_err(),
            DescentError::EntriesNotInBaseField
        );
    }
}
