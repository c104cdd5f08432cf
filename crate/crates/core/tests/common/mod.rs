#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use repdesc::cyclo::CycNum;
use repdesc::grp::{named, normal_subgroups, subgroup_classes, Group, Subgroup};
use repdesc::linalg::Matrix;
use repdesc::rep::{char_table, induce_rep, isotypic_projector, Character, MatrixRep};

/// The small-group corpus: cyclic groups up to order 12 and the non-abelian
/// groups of order at most 24 used throughout the tests.
pub fn corpus_groups() -> Vec<(String, Group)> {
    let mut out: Vec<(String, Group)> = (1..=12).map(|n| (format!("C{n}"), named::cyclic(n))).collect();
    out.push(("S3".into(), named::s3()));
    out.push(("D4".into(), named::dihedral(4)));
    out.push(("Q8".into(), named::quaternion()));
    out.push(("A4".into(), named::alternating(4)));
    out.push(("D6".into(), named::dihedral(6)));
    out.push(("C2xC2xC2".into(), named::elementary_abelian_8()));
    out.push(("S4".into(), named::symmetric(4)));
    out
}

/// Non-cyclic groups of the corpus, plus two small cyclic ones.
pub fn small_groups() -> Vec<(String, Group)> {
    corpus_groups().into_iter().filter(|(n, _)| !n.starts_with('C') || n == "C4" || n == "C6" || n == "C2xC2xC2").collect()
}

/// Smallest normal subgroup that is neither trivial nor the whole group.
pub fn proper_normal(g: &Group) -> Option<Subgroup> {
    normal_subgroups(g).into_iter().find(|n| !n.is_trivial() && !n.is_whole())
}

/// `Q`-rational matrices for every rational-valued irreducible character that
/// occurs exactly once in some permutation representation on cosets: the
/// isotypic projector then has rational entries.
pub fn rational_irreducibles(g: &Group) -> Vec<MatrixRep> {
    let subs = subgroup_classes(g);
    let mut out = Vec::new();
    for chi in char_table(g).into_iter().filter(Character::is_rational) {
        if chi.degree_usize() == Some(1) {
            out.push(MatrixRep::linear(&chi).unwrap());
            continue;
        }
        for h in &subs {
            let perm = Character::induce(&Character::trivial(&h.group()), h).unwrap();
            if perm.inner(&chi).unwrap().is_one() {
                let p = induce_rep(&MatrixRep::trivial(&h.group()), h).unwrap();
                let e = isotypic_projector(&p, &Subgroup::whole(g), &chi).unwrap();
                out.push(p.subrepresentation(&e.column_basis()).unwrap());
                break;
            }
        }
    }
    out
}

/// Random element `a + b·ζ_n` with small integer `a`, `b`.
pub fn small_cyc(rng: &mut ChaCha8Rng, n: u64) -> CycNum {
    let a = CycNum::from(rng.gen_range(-2i64..=2));
    if n <= 2 {
        return a;
    }
    &a + &(&CycNum::from(rng.gen_range(-2i64..=2)) * &CycNum::zeta(n))
}

pub fn random_invertible(rng: &mut ChaCha8Rng, r: usize, n: u64) -> Matrix {
    loop {
        let m = Matrix::from_fn(r, r, |_, _| small_cyc(rng, n));
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn direct_sum(g: &Group, parts: &[MatrixRep]) -> MatrixRep {
    parts.iter().fold(MatrixRep::zero(g), |acc, p| acc.direct_sum(p).unwrap())
}

/// Property-test configuration without a regression file (integration tests
/// have no source root for one).
pub fn prop_config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config { cases, failure_persistence: None, ..Default::default() }
}

/// Rational irreducible forms of every small corpus group.
pub fn rational_pool() -> Vec<MatrixRep> {
    small_groups().iter().flat_map(|(_, g)| rational_irreducibles(g)).collect()
}

pub const EXTENSION_CONDUCTORS: [u64; 5] = [3, 4, 5, 8, 12];
