mod common;

use proptest::prelude::*;

use repdesc::cyclo::table::gcd;
use repdesc::cyclo::GaloisAut;
use repdesc::grp::{named, normal_subgroups, Group, Subgroup};
use repdesc::harness::{run_harness, HarnessStatus};
use repdesc::rep::{char_table, realize_irreducible, Character, MatrixRep};

fn instances() -> Vec<(Group, MatrixRep, Subgroup)> {
    let mut out = Vec::new();
    for g in [named::s3(), named::dihedral(4), named::quaternion(), named::alternating(4)] {
        let rho = realize_irreducible(char_table(&g).last().unwrap()).unwrap();
        let n = normal_subgroups(&g).into_iter().find(|n| !n.is_trivial() && !n.is_whole()).unwrap();
        out.push((g, rho, n));
    }
    out
}

proptest! {
    #![proptest_config(common::prop_config(16))]

    #[test]
    fn harness_identities_are_galois_equivariant(i in 0usize..4, k in 1u64..24, seed in any::<u64>()) {
        let (g, rho, n) = instances().swap_remove(i);
        prop_assume!(gcd(k, 24) == 1);
        let twist = GaloisAut::new(24, k as i64).unwrap();
        let r = run_harness(&rho, &g, &n, &twist, seed).unwrap();
        prop_assert!(r.identity_check && r.twisted_identity_check);
        prop_assert_eq!(&r.status, &HarnessStatus::Complete);
        let chi = rho.character();
        prop_assert!(chi.values().iter().all(|v| r.field.contains(v)));
        for (_, sigma) in &r.certificate.pairs {
            prop_assert!(sigma.character().values().iter().all(|v| r.field.contains(v)));
        }
        for w in r.witnesses.iter().flatten() {
            prop_assert!(r.field.contains(&w.alpha));
        }
        for d in &r.descents {
            prop_assert!(d.descended.defined_over(&r.field));
        }
        let fin = r.final_rep.as_ref().unwrap();
        prop_assert!(fin.defined_over(&r.field));
        prop_assert_eq!(fin.character(), chi.galois(&twist));
        // the twisted identity, recomputed from the twisted values
        let mut lhs = chi.galois(&twist);
        let mut rhs = Character::zero(&g);
        for (i, (h, sigma)) in r.certificate.pairs.iter().enumerate() {
            let ind = Character::induce(&sigma.character().galois(&twist), h).unwrap();
            if i < r.certificate.t { lhs = lhs.add(&ind).unwrap() } else { rhs = rhs.add(&ind).unwrap() }
        }
        prop_assert_eq!(lhs, rhs);
        prop_assert!(r.passed());
    }
}
