//! Galois descent of matrix representations: multiplicity-one witnesses,
//! intertwiner cocycles and Hilbert 90, Hom-dimension base change, and
//! cancellation descent.

use thiserror::Error;

use crate::cyclo::CycError;
use crate::rep::RepError;

mod homcheck;
mod nd;
mod prop7;
mod witness;

pub use homcheck::{fixed_field_basis, hom_dim_base_change_check, HomDimCheck};
pub use nd::{galois_orbits, noether_deuring};
pub use prop7::{descend_prop7, hilbert90_solve, intertwiner_cocycle, Cocycle, DescentWitness, H90_RETRY_LIMIT};
pub use witness::{find_multiplicity_one, simple_root_scan, ClassScan, MultOneWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescentError {
    #[error("representation is not absolutely irreducible")]
    NotAbsolutelyIrreducible,
    #[error("a character value lies outside the base field")]
    TraceNotRational,
    #[error("invalid multiplicity-one witness: {0}")]
    WitnessInvalid(String),
    #[error("cocycle condition failed: {0}")]
    CocycleCheckFailed(String),
    #[error("no invertible Hilbert 90 solution after {0} trials")]
    RetryLimitExceeded(usize),
    #[error("descent check failed: {0}")]
    DescentCheckFailed(String),
    #[error("matrix entries do not lie in the base field")]
    EntriesNotInBaseField,
    #[error("characters do not satisfy χ_ρ + χ_τ = χ_π")]
    CharacterMismatch,
    #[error("constituent missing: {0}")]
    ConstituentMissing(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Cyc(#[from] CycError),
}
