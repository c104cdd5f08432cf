use crate::cyclo::CycNum;
use crate::grp::{Group, Subgroup};
use crate::rep::{realize_irreducible, Character, MatrixRep};

use super::{brauer_decompose, isaacs_reduce, BrauerError};

/// `χ_ρ + Σ_{i<t} Ind σ_i = Σ_{i≥t} Ind σ_i`, with each `σ_i` a representation
/// of `pairs[i].0` whose restriction to `N` is irreducible.
#[derive(Debug, Clone)]
pub struct DevissageCertificate {
    pub rho: MatrixRep,
    pub n: Subgroup,
    pub pairs: Vec<(Subgroup, MatrixRep)>,
    pub t: usize,
    pub s: usize,
}

impl DevissageCertificate {
    pub fn group(&self) -> &Group {
        self.rho.group()
    }

    pub fn left(&self) -> &[(Subgroup, MatrixRep)] {
        &self.pairs[..self.t.min(self.pairs.len())]
    }

    pub fn right(&self) -> &[(Subgroup, MatrixRep)] {
        &self.pairs[self.t.min(self.pairs.len())..]
    }
}

pub fn devissage(rho: &MatrixRep, g: &Group, n: &Subgroup) -> Result<DevissageCertificate, BrauerError> {
    if !rho.group().same_as(g) || !n.parent().same_as(g) {
        return Err(crate::rep::RepError::GroupMismatch.into());
    }
    if !rho.is_abs_irreducible() {
        return Err(BrauerError::NotIrreducible);
    }
    if !rho.determinant_has_finite_order() {
        return Err(BrauerError::HypothesisViolation("determinant does not have finite order".into()));
    }
    let chi = rho.character();
    let dec = brauer_decompose(&chi, g, n)?;

    let mut left = Vec::new();
    let mut right = Vec::new();
    for term in &dec.terms {
        let sigma = if term.h.is_whole() && term.psi == chi {
            rho.clone()
        } else {
            realize_irreducible(&term.psi)?
        };
        let n_in_h = n.within(&term.h)?;
        let pair = if sigma.character().restrict(&n_in_h)?.is_irreducible() {
            (term.h.clone(), sigma)
        } else {
            let w = isaacs_reduce(&sigma, &term.h.group(), &n_in_h)?;
            (term.h.lift(&w.h), w.sigma)
        };
        let side = if term.coeff < 0 { &mut left } else { &mut right };
        for _ in 0..term.coeff.unsigned_abs() {
            side.push(pair.clone());
        }
    }
    let t = left.len();
    left.extend(right);
    let cert = DevissageCertificate { rho: rho.clone(), n: n.clone(), s: left.len(), pairs: left, t };

    let ind = |pairs: &[(Subgroup, MatrixRep)]| -> Result<Character, BrauerError> {
        let mut acc = Character::zero(g);
        for (h, sigma) in pairs {
            acc = acc.add(&Character::induce(&sigma.character(), h)?)?;
        }
        Ok(acc)
    };
    let lhs = chi.add(&ind(cert.left())?)?;
    if lhs != ind(cert.right())? {
        return Err(BrauerError::CertificateCheckFailed("induced characters do not balance".into()));
    }
    Ok(cert)
}

/// Outcome of re-checking a certificate: containment of `N` (a), irreducibility
/// of each `σ_i` (b), irreducibility of each restriction to `N` (c), and the
/// character identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub contains_n: bool,
    pub irreducible: bool,
    pub restriction_irreducible: bool,
    pub identity: bool,
    pub failures: Vec<String>,
}

impl CertificateReport {
    pub fn ok(&self) -> bool {
        self.contains_n && self.irreducible && self.restriction_irreducible && self.identity
    }
}

/// `|X|⁻¹ Σ_{x∈X} |f(x)|²` for a trace function on a subset of elements.
fn mean_square(values: impl Iterator<Item = CycNum>, size: usize) -> CycNum {
    let total: CycNum = values.map(|v| &v * &v.conj()).sum();
    &total * &CycNum::from_ratio(1, size as i64)
}

/// Value of `Ind_H ψ` at `x` by the conjugation sum `|H|⁻¹ Σ_{y∈G} ψ°(y x y⁻¹)`.
fn induced_value(g: &Group, h: &Subgroup, trace: &dyn Fn(usize) -> CycNum, x: usize) -> CycNum {
    let mut acc = CycNum::zero();
    for y in 0..g.order() {
        if let Some(local) = h.to_local(g.conjugate(x, y)) {
            acc += &trace(local);
        }
    }
    &acc * &CycNum::from_ratio(1, h.order() as i64)
}

/// Independent re-check of every condition from the raw matrices.
pub fn verify_certificate(cert: &DevissageCertificate) -> CertificateReport {
    let g = cert.group();
    let mut report = CertificateReport {
        contains_n: true,
        irreducible: true,
        restriction_irreducible: true,
        identity: true,
        failures: Vec::new(),
    };
    if cert.s != cert.pairs.len() || cert.t > cert.s {
        report.identity = false;
        report.failures.push(format!("(**): t={} s={} with {} pairs", cert.t, cert.s, cert.pairs.len()));
    }
    if !cert.n.parent().same_as(g) {
        report.contains_n = false;
        report.failures.push("(a): N is not a subgroup of G".into());
        return report;
    }
    let reps = g.class_reps();
    let mut lhs: Vec<CycNum> = reps.iter().map(|&x| cert.rho.image(x).trace()).collect();
    let mut rhs = vec![CycNum::zero(); reps.len()];
    for (i, (h, sigma)) in cert.pairs.iter().enumerate() {
        if !h.parent().same_as(g) || !cert.n.is_subgroup_of(h) {
            report.contains_n = false;
            report.failures.push(format!("(a): pair {i} does not contain N"));
            continue;
        }
        if !sigma.group().same_as(&h.group()) || sigma.validate().is_err() {
            report.irreducible = false;
            report.failures.push(format!("(b): pair {i} is not a representation of H"));
            continue;
        }
        let hg = sigma.group();
        let class_traces: Vec<CycNum> = hg.class_reps().iter().map(|&r| sigma.image(r).trace()).collect();
        let trace = |local: usize| class_traces[hg.class_of(local)].clone();
        if !mean_square((0..h.order()).map(trace), h.order()).is_one() {
            report.irreducible = false;
            report.failures.push(format!("(b): σ_{i} is not irreducible"));
        }
        let on_n = cert.n.elements().iter().map(|&x| trace(h.to_local(x).expect("N ⊆ H")));
        if !mean_square(on_n, cert.n.order()).is_one() {
            report.restriction_irreducible = false;
            report.failures.push(format!("(c): restriction of σ_{i} to N is reducible"));
        }
        let side = if i < cert.t { &mut lhs } else { &mut rhs };
        for (c, &x) in reps.iter().enumerate() {
            side[c] += &induced_value(g, h, &trace, x);
        }
    }
    if lhs != rhs {
        report.identity = false;
        report.failures.push("(**): the two sides differ as characters".into());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{named, normal_subgroups};
    use crate::rep::char_table;

    #[test]
    fn s3_over_a3() {
        let g = named::s3();
        let a3 = named::alternating_in(&g);
        let rho = realize_irreducible(&char_table(&g).pop().unwrap()).unwrap();
        let cert = devissage(&rho, &g, &a3).unwrap();
        assert_eq!((cert.t, cert.s), (0, 1));
        assert_eq!(cert.pairs[0].0, a3);
        assert!(verify_certificate(&cert).ok());
    }

    #[test]
    fn s4_over_klein() {
        let g = named::symmetric(4);
        let v4 = normal_subgroups(&g).into_iter().find(|h| h.order() == 4).unwrap();
        let chi = char_table(&g).into_iter().find(|c| c.degree_usize() == Some(2)).unwrap();
        let rho = realize_irreducible(&chi).unwrap();
        let cert = devissage(&rho, &g, &v4).unwrap();
        let report = verify_certificate(&cert);
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn corrupted_certificates_fail() {
        let g = named::s3();
        let a3 = named::alternating_in(&g);
        let rho = realize_irreducible(&char_table(&g).pop().unwrap()).unwrap();
        let mut cert = devissage(&rho, &g, &a3).unwrap();
        cert.t = 1;
        assert!(!verify_certificate(&cert).identity);

        let mut cert = devissage(&rho, &g, &a3).unwrap();
        let a3g = a3.group();
        cert.pairs[0].1 = MatrixRep::trivial(&a3g);
        let report = verify_certificate(&cert);
        assert!(!report.ok());
        assert!(report.failures.iter().any(|f| f.starts_with("(**)")));
    }
}
