use crate::cyclo::{CycNum, SubfieldSpec};
use crate::grp::Perm;
use crate::rep::MatrixRep;

/// A class representative whose image has `alpha` as an eigenvalue of
/// multiplicity exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultOneWitness {
    /// Element index in the representation's group.
    pub class_rep: usize,
    pub element: Perm,
    pub alpha: CycNum,
}

/// Per-class outcome of the simple-root test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassScan {
    pub class_rep: usize,
    pub element: Perm,
    pub has_simple_root: bool,
    /// Simple eigenvalues, as powers of `ζ_m` with `m` the element order.
    pub simple_eigenvalues: Vec<CycNum>,
}

/// Eigenvalues of `ρ(x)` are `m`-th roots of unity for `m` the order of `x`;
/// their multiplicities are read off the characteristic polynomial.
pub fn simple_root_scan(rho: &MatrixRep) -> Vec<ClassScan> {
    let g = rho.group();
    g.class_reps()
        .into_iter()
        .map(|x| {
            let poly = rho.image(x).charpoly();
            let has_simple_root = rho.rank() > 0 && poly.has_simple_root().unwrap_or(false);
            let m = g.element_order(x) as u64;
            let simple_eigenvalues = if has_simple_root {
                (0..m as i64)
                    .map(|j| CycNum::root_of_unity(m, j))
                    .filter(|a| poly.root_multiplicity(a) == 1)
                    .collect()
            } else {
                Vec::new()
            };
            ClassScan { class_rep: x, element: g.element(x).clone(), has_simple_root, simple_eigenvalues }
        })
        .collect()
}

/// First class (in class order) with a simple eigenvalue lying in `base`;
/// candidates `ζ_m^j` are tried in increasing `j`.
pub fn find_multiplicity_one(rho: &MatrixRep, base: &SubfieldSpec) -> Option<MultOneWitness> {
    let g = rho.group();
    for x in g.class_reps() {
        let poly = rho.image(x).charpoly();
        if rho.rank() == 0 || !poly.has_simple_root().unwrap_or(false) {
            continue;
        }
        let m = g.element_order(x) as u64;
        for j in 0..m as i64 {
            let alpha = CycNum::root_of_unity(m, j);
            if base.contains(&alpha) && poly.root_multiplicity(&alpha) == 1 {
                return Some(MultOneWitness { class_rep: x, element: g.element(x).clone(), alpha });
            }
        }
    }
    None
}
