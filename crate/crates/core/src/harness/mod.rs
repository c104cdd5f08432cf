//! End-to-end replay at finite scale: dévissage, multiplicity-one witnesses,
//! the trace identity over a composite field, a Galois-twisted family, and
//! descent of the twisted representation.

use thiserror::Error;

use crate::brauer::{devissage, verify_certificate, BrauerError, CertificateReport, DevissageCertificate};
use crate::cyclo::{CycError, CycNum, GaloisAut, SubfieldSpec};
use crate::descent::{descend_prop7, find_multiplicity_one, noether_deuring, DescentError, DescentWitness, MultOneWitness};
use crate::grp::{Group, Subgroup};
use crate::rep::{induce_rep, Character, MatrixRep, RepError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("identity check failed: {0}")]
    IdentityCheckFailed(String),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Descent(#[from] DescentError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

/// Smallest subfield of the cyclotomic field generated by the values.
pub fn composite_field(values: &[CycNum]) -> SubfieldSpec {
    SubfieldSpec::generated_by(values)
}

/// As [`composite_field`], described inside `Q(ζ_ambient)` without normalising.
pub fn composite_field_in(values: &[CycNum], ambient: u64) -> Result<SubfieldSpec, CycError> {
    SubfieldSpec::generated_by_in(values, ambient)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HarnessStatus {
    Complete,
    /// No multiplicity-one eigenvalue in the trace field for these pairs.
    WitnessUnavailable { pairs: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct HarnessReport {
    pub certificate: DevissageCertificate,
    pub certificate_report: CertificateReport,
    /// Trace field of each `σ_i`, the base used for its witness search.
    pub trace_fields: Vec<SubfieldSpec>,
    pub witnesses: Vec<Option<MultOneWitness>>,
    pub field: SubfieldSpec,
    pub twist: GaloisAut,
    pub identity_check: bool,
    pub twisted_identity_check: bool,
    pub descents: Vec<DescentWitness>,
    pub final_rep: Option<MatrixRep>,
    pub final_check: bool,
    pub status: HarnessStatus,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.status == HarnessStatus::Complete
            && self.certificate_report.ok()
            && self.identity_check
            && self.twisted_identity_check
            && self.final_check
    }

    /// One pass/fail line per stage.
    pub fn summary_lines(&self) -> Vec<String> {
        let mark = |b: bool| if b { "PASS" } else { "FAIL" };
        let mut out = vec![
            format!(
                "devissage: {} (t={}, s={})",
                mark(self.certificate_report.ok()),
                self.certificate.t,
                self.certificate.s
            ),
            format!(
                "witnesses: {} ({}/{} pairs)",
                mark(self.witnesses.iter().all(Option::is_some)),
                self.witnesses.iter().filter(|w| w.is_some()).count(),
                self.witnesses.len()
            ),
            format!("composite field: degree {}", self.field.degree()),
            format!("trace identity: {}", mark(self.identity_check)),
            format!("twisted identity: {}", mark(self.twisted_identity_check)),
        ];
        match &self.status {
            HarnessStatus::Complete => {
                out.push(format!("descent: {} ({} pairs)", mark(self.descents.len() == self.certificate.s), self.descents.len()));
                out.push(format!("final representation: {}", mark(self.final_check)));
            }
            HarnessStatus::WitnessUnavailable { pairs } => {
                out.push(format!("descent: BLOCKED (WitnessUnavailable for pairs {pairs:?})"));
            }
        }
        out
    }
}

fn induced_sum(g: &Group, pairs: &[(Subgroup, MatrixRep)]) -> Result<MatrixRep, HarnessError> {
    let mut acc = MatrixRep::zero(g);
    for (h, sigma) in pairs {
        acc = acc.direct_sum(&induce_rep(sigma, h)?)?;
    }
    Ok(acc)
}

fn identity_holds(
    chi: &Character,
    pairs: &[(Subgroup, MatrixRep)],
    t: usize,
    field: &SubfieldSpec,
) -> Result<bool, HarnessError> {
    let mut lhs = chi.clone();
    let mut rhs = Character::zero(chi.group());
    for (i, (h, sigma)) in pairs.iter().enumerate() {
        let ind = Character::induce(&sigma.character(), h)?;
        if i < t {
            lhs = lhs.add(&ind)?;
        } else {
            rhs = rhs.add(&ind)?;
        }
    }
    Ok(lhs == rhs && lhs.values().iter().all(|v| field.contains(v)))
}

pub fn run_harness(
    rho: &MatrixRep,
    g: &Group,
    n: &Subgroup,
    twist: &GaloisAut,
    seed: u64,
) -> Result<HarnessReport, HarnessError> {
    let certificate = devissage(rho, g, n)?;
    let certificate_report = verify_certificate(&certificate);

    let mut trace_fields = Vec::new();
    let mut witnesses = Vec::new();
    for (_, sigma) in &certificate.pairs {
        let e = composite_field(sigma.character().values());
        witnesses.push(find_multiplicity_one(sigma, &e));
        trace_fields.push(e);
    }
    let blocked: Vec<usize> = witnesses.iter().enumerate().filter(|(_, w)| w.is_none()).map(|(i, _)| i).collect();

    let mut values: Vec<CycNum> = rho.character().values().to_vec();
    for (_, sigma) in &certificate.pairs {
        values.extend(sigma.character().values().iter().cloned());
    }
    values.extend(witnesses.iter().flatten().map(|w| w.alpha.clone()));
    let field = composite_field(&values);

    let chi = rho.character();
    let identity_check = identity_holds(&chi, &certificate.pairs, certificate.t, &field)?;
    if !identity_check {
        return Err(HarnessError::IdentityCheckFailed("character identity over the composite field".into()));
    }

    let rho_t = rho.galois_twist(twist);
    let pairs_t: Vec<(Subgroup, MatrixRep)> =
        certificate.pairs.iter().map(|(h, s)| (h.clone(), s.galois_twist(twist))).collect();
    let chi_t = rho_t.character();
    let twisted_identity_check =
        chi_t == chi.galois(twist) && identity_holds(&chi_t, &pairs_t, certificate.t, &field)?;
    if !twisted_identity_check {
        return Err(HarnessError::IdentityCheckFailed("twisted character identity".into()));
    }

    let mut report = HarnessReport {
        certificate,
        certificate_report,
        trace_fields,
        witnesses,
        field,
        twist: *twist,
        identity_check,
        twisted_identity_check,
        descents: Vec::new(),
        final_rep: None,
        final_check: false,
        status: HarnessStatus::Complete,
    };
    if !blocked.is_empty() {
        report.status = HarnessStatus::WitnessUnavailable { pairs: blocked };
        return Ok(report);
    }

    let mut descended_pairs = Vec::new();
    for (i, (h, sigma_t)) in pairs_t.iter().enumerate() {
        let w = report.witnesses[i].as_ref().expect("not blocked");
        let w_t = MultOneWitness { alpha: twist.apply(&w.alpha), ..w.clone() };
        let d = descend_prop7(sigma_t, &report.field, &w_t, seed.wrapping_add(i as u64))?;
        descended_pairs.push((h.clone(), d.descended.clone()));
        report.descents.push(d);
    }
    let t = report.certificate.t;
    let tau0 = induced_sum(g, &descended_pairs[..t])?;
    let pi0 = induced_sum(g, &descended_pairs[t..])?;
    let final_rep = noether_deuring(&rho_t, &tau0, &pi0, &report.field)?;
    report.final_check = final_rep.defined_over(&report.field) && final_rep.character() == chi.galois(twist);
    report.final_rep = Some(final_rep);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;
    use crate::rep::{char_table, realize_irreducible};

    #[test]
    fn composite_field_examples() {
        assert!(composite_field(&[CycNum::from(3), CycNum::from_ratio(1, 2)]).is_rationals());
        assert_eq!(composite_field(&[CycNum::zeta(3)]).degree(), 2);
        let a = &CycNum::zeta(3) + &CycNum::root_of_unity(3, 2);
        let b = &CycNum::zeta(5) + &CycNum::root_of_unity(5, 4);
        let f = composite_field_in(&[a, b], 15).unwrap();
        assert_eq!(f.stabilizer(), &[1, 4, 11, 14]);
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn s3_harness_passes() {
        let g = named::s3();
        let a3 = named::alternating_in(&g);
        let rho = realize_irreducible(&char_table(&g).pop().unwrap()).unwrap();
        let twist = GaloisAut::new(3, 2).unwrap();
        let report = run_harness(&rho, &g, &a3, &twist, 1).unwrap();
        assert!(report.passed(), "{:?}", report.summary_lines());
        let id = run_harness(&rho, &g, &a3, &GaloisAut::identity(3), 1).unwrap();
        assert!(id.passed());
    }
}
