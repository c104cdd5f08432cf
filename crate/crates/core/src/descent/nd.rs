//! Cancellation descent: given `ρ ⊕ τ₀ ≅ π₀` with `τ₀, π₀` over `k₀`, strip
//! the `k₀`-irreducible constituents of `τ₀` from `π₀` one at a time.

use crate::cyclo::table::lcm;
use crate::cyclo::{CycNum, SubfieldSpec};
use crate::grp::Subgroup;
use crate::linalg::Matrix;
use crate::rep::{char_table, hom_space, isotypic_projector, Character, MatrixRep};

use super::DescentError;

/// Orbits of `Gal(Q(ζ_m)/k₀)` on the irreducible characters (indices into
/// `table`), each sorted, in order of least member.
pub fn galois_orbits(table: &[Character], k0: &SubfieldSpec) -> Vec<Vec<usize>> {
    let m = table
        .iter()
        .flat_map(|c| c.values().iter().map(CycNum::conductor))
        .fold(k0.conductor(), lcm);
    let auts = k0.galois_group(m);
    let mut seen = vec![false; table.len()];
    let mut orbits = Vec::new();
    for i in 0..table.len() {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<usize> = auts
            .iter()
            .map(|s| {
                let img = table[i].galois(s);
                table.iter().position(|c| *c == img).expect("Galois permutes irreducibles")
            })
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            seen[j] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

/// `k₀(χ)` inside a common cyclotomic field.
fn character_field(chi: &Character, k0: &SubfieldSpec) -> Result<SubfieldSpec, DescentError> {
    let m = chi.values().iter().map(CycNum::conductor).fold(k0.conductor(), lcm);
    let stab: Vec<u64> = k0
        .stabilizer_mod(m)
        .into_iter()
        .filter(|&u| {
            let s = crate::cyclo::GaloisAut::new(m, u as i64).expect("unit");
            chi.values().iter().all(|v| s.apply(v) == *v)
        })
        .collect();
    Ok(SubfieldSpec::new(m, &stab)?)
}

/// Span of the orbit of `v` under the representation, as columns.
fn spin(rep: &MatrixRep, v: Vec<CycNum>) -> Matrix {
    let r = rep.rank();
    let mut span: Vec<Vec<CycNum>> = vec![v];
    let mut next = 0;
    while next < span.len() {
        let w = span[next].clone();
        next += 1;
        for m in rep.generator_images() {
            let image = m.mul_vec(&w);
            let mut trial = span.clone();
            trial.push(image.clone());
            if Matrix::from_columns(r, &trial).rank() == trial.len() {
                span.push(image);
            }
        }
    }
    Matrix::from_columns(r, &span)
}

/// A `k₀`-subrepresentation of `tau` with character `Σ_{χ ∈ orbit} χ`.
///
/// A copy of `χ₁` over `k₁ = k₀(χ₁)` is spun from an eigenvector for an
/// eigenvalue that `χ₁` takes with multiplicity one; its Galois conjugates
/// then span a subspace whose reduced echelon basis is `k₀`-rational.
fn rational_constituent(
    tau: &MatrixRep,
    table: &[Character],
    orbit: &[usize],
    k0: &SubfieldSpec,
) -> Result<MatrixRep, DescentError> {
    let g = tau.group();
    let chi1 = &table[orbit[0]];
    let deg = chi1.degree_usize().expect("irreducible degree");
    let k1 = character_field(chi1, k0)?;
    let proj = isotypic_projector(tau, &Subgroup::whole(g), chi1)?;

    let mut copy = None;
    'search: for x in g.class_reps() {
        let o = g.element_order(x) as u64;
        for j in 0..o as i64 {
            let alpha = CycNum::root_of_unity(o, j);
            if !k1.contains(&alpha) {
                continue;
            }
            // multiplicity of α as an eigenvalue in χ₁(x)
            let mut mult = CycNum::zero();
            for s in 0..o as i64 {
                let a = alpha.pow(-s)?;
                mult += &(chi1.at(g.pow(x, s)) * &a);
            }
            if !(&mult * &CycNum::from_ratio(1, o as i64)).is_one() {
                continue;
            }
            let shifted = tau.image(x) - &Matrix::scalar(tau.rank(), &alpha);
            for n in shifted.nullspace() {
                let v = proj.mul_vec(&n);
                if v.iter().all(CycNum::is_zero) {
                    continue;
                }
                let span = spin(tau, v);
                if span.cols() == deg {
                    copy = Some(span);
                    break 'search;
                }
            }
        }
    }
    let copy = copy.ok_or_else(|| {
        DescentError::ConstituentMissing(format!(
            "no copy of a degree-{deg} constituent over its character field (nontrivial Schur index)"
        ))
    })?;

    let m = copy.entries().map(CycNum::conductor).fold(k0.conductor(), lcm);
    let mut vectors = Vec::new();
    for s in k0.galois_group(m) {
        for j in 0..copy.cols() {
            vectors.push(copy.column(j).iter().map(|x| s.apply(x)).collect::<Vec<_>>());
        }
    }
    let rref = Matrix::from_rows(vectors).rref();
    let rows: Vec<Vec<CycNum>> = (0..rref.pivots.len()).map(|i| rref.matrix.row(i).to_vec()).collect();
    if rows.len() != deg * orbit.len() || !rows.iter().flatten().all(|x| k0.contains(x)) {
        return Err(DescentError::DescentCheckFailed("Galois closure is not k₀-rational".into()));
    }
    let basis = Matrix::from_columns(tau.rank(), &rows);
    Ok(tau.subrepresentation(&basis)?)
}

/// A `G`-stable complement in `pi` to one copy of the `k₀`-irreducible `sigma`.
fn peel(pi: &MatrixRep, sigma: &MatrixRep) -> Result<MatrixRep, DescentError> {
    let into = hom_space(sigma, pi)?;
    let x = into
        .basis
        .iter()
        .find(|x| x.rank() == sigma.rank())
        .ok_or_else(|| DescentError::ConstituentMissing("constituent of τ₀ does not occur in π₀".into()))?
        .clone();
    let back = hom_space(pi, sigma)?;
    // solve Σ c_i (Y_i·X) = I for a retraction Y
    let r = sigma.rank();
    let mut cols: Vec<Vec<CycNum>> = back.basis.iter().map(|y| (y * &x).entries().cloned().collect()).collect();
    cols.push(Matrix::identity(r).entries().map(|e| -e).collect());
    let ns = Matrix::from_columns(r * r, &cols).nullspace();
    let last = back.dim();
    let v = ns
        .into_iter()
        .find(|v| !v[last].is_zero())
        .ok_or_else(|| DescentError::ConstituentMissing("no equivariant retraction".into()))?;
    let scale = v[last].inv()?;
    let mut y = Matrix::zeros(r, pi.rank());
    for (c, yi) in v[..last].iter().zip(&back.basis) {
        y = &y + &yi.scale(&(c * &scale));
    }
    let kernel = y.nullspace();
    if kernel.is_empty() {
        return Ok(MatrixRep::zero(pi.group()));
    }
    Ok(pi.subrepresentation(&Matrix::from_columns(pi.rank(), &kernel))?)
}

pub fn noether_deuring(
    rho: &MatrixRep,
    tau0: &MatrixRep,
    pi0: &MatrixRep,
    k0: &SubfieldSpec,
) -> Result<MatrixRep, DescentError> {
    let g = rho.group();
    if !tau0.group().same_as(g) || !pi0.group().same_as(g) {
        return Err(crate::rep::RepError::GroupMismatch.into());
    }
    let chi = rho.character();
    if chi.add(&tau0.character())? != pi0.character() {
        return Err(DescentError::CharacterMismatch);
    }
    if !tau0.defined_over(k0) || !pi0.defined_over(k0) {
        return Err(DescentError::EntriesNotInBaseField);
    }
    if tau0.rank() == 0 {
        return Ok(pi0.clone());
    }
    let table = char_table(g);
    let chi_tau = tau0.character();
    let mut pi = pi0.clone();
    for orbit in galois_orbits(&table, k0) {
        let mult = chi_tau.inner(&table[orbit[0]])?;
        let mult = mult.to_integer().and_then(|m| usize::try_from(m).ok()).expect("multiplicity");
        if mult == 0 {
            continue;
        }
        let sigma0 = rational_constituent(tau0, &table, &orbit, k0)?;
        for _ in 0..mult {
            pi = peel(&pi, &sigma0)?;
        }
    }
    if pi.character() != chi || !pi.defined_over(k0) {
        return Err(DescentError::DescentCheckFailed("remaining summand does not match ρ".into()));
    }
    Ok(pi)
}
