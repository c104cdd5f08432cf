//! Brauer induction relative to a normal subgroup, Clifford theory for a
//! chief factor, reduction to representations with irreducible restriction,
//! and the resulting induction certificates.

use thiserror::Error;

use crate::grp::GroupError;
use crate::rep::RepError;

mod certificate;
mod clifford;
mod decompose;

pub use certificate::{devissage, verify_certificate, CertificateReport, DevissageCertificate};
pub use clifford::{clifford_trichotomy, isaacs_reduce, IsaacsStep, IsaacsWitness, Trichotomy};
pub use decompose::{brauer_decompose, BrauerDecomposition, BrauerTerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("no integral solution to the induction system")]
    NoIntegralSolution,
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("quotient by the normal subgroup is not nilpotent")]
    NotNilpotent,
    #[error("representation is not irreducible")]
    NotIrreducible,
    #[error("unexpected Clifford case: {0}")]
    InternalCaseViolation(String),
    #[error("certificate identity check failed: {0}")]
    CertificateCheckFailed(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
