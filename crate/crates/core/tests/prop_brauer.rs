mod common;

use proptest::prelude::*;

use repdesc::brauer::{brauer_decompose, clifford_trichotomy, devissage, isaacs_reduce, verify_certificate, Trichotomy};
use repdesc::grp::{is_nilpotent_quotient, normal_subgroups};
use repdesc::rep::{char_table, realize_irreducible, Character};

proptest! {
    #![proptest_config(common::prop_config(24))]

    #[test]
    fn brauer_sums_re_evaluate_to_the_target(gi in 0usize..100, ci in 0usize..100, ni in 0usize..100) {
        let groups = common::corpus_groups();
        let g = &groups[gi % groups.len()].1;
        let table = char_table(g);
        let chi = &table[ci % table.len()];
        let normals = normal_subgroups(g);
        let n = &normals[ni % normals.len()];
        let d = brauer_decompose(chi, g, n).unwrap();
        prop_assert!(d.residual_is_zero().unwrap());
        prop_assert_eq!(&d.evaluate().unwrap(), chi);
        for t in &d.terms {
            prop_assert!(n.is_subgroup_of(&t.h));
        }
    }

    #[test]
    fn isaacs_reduction_recovers_the_character(gi in 0usize..100, ci in 0usize..100, ni in 0usize..100) {
        let groups = common::small_groups();
        let g = &groups[gi % groups.len()].1;
        let table = char_table(g);
        let rho = realize_irreducible(&table[ci % table.len()]).unwrap();
        let normals = normal_subgroups(g);
        let n = &normals[ni % normals.len()];
        prop_assume!(is_nilpotent_quotient(g, n).unwrap());
        let w = isaacs_reduce(&rho, g, n).unwrap();
        prop_assert_eq!(Character::induce(&w.sigma.character(), &w.h).unwrap(), rho.character());
        let n_in_h = n.within(&w.h).unwrap();
        prop_assert!(w.sigma.character().restrict(&n_in_h).unwrap().is_irreducible());
    }

    #[test]
    fn devissage_certificates_verify(gi in 0usize..100, ci in 0usize..100, ni in 0usize..100) {
        let groups = common::small_groups();
        let g = &groups[gi % groups.len()].1;
        let table = char_table(g);
        let rho = realize_irreducible(&table[ci % table.len()]).unwrap();
        let normals = normal_subgroups(g);
        let n = &normals[ni % normals.len()];
        let cert = devissage(&rho, g, n).unwrap();
        let report = verify_certificate(&cert);
        prop_assert!(report.ok(), "{:?}", report.failures);
    }
}

#[test]
fn trichotomy_side_conditions_hold_on_every_admissible_instance() {
    let mut seen = [0usize; 3];
    for (name, g) in common::small_groups() {
        let normals = normal_subgroups(&g);
        for k in &normals {
            for l in normals.iter().filter(|l| l.is_subgroup_of(k) && *l != k) {
                for chi in char_table(&k.group()) {
                    let pi = realize_irreducible(&chi).unwrap();
                    let Ok(case) = clifford_trichotomy(&pi, &g, k, l) else { continue };
                    let index = k.order() / l.order();
                    let l_in_k = l.within(k).unwrap();
                    match &case {
                        Trichotomy::I { constituents } => {
                            seen[0] += 1;
                            assert_eq!(constituents.len(), index, "{name}");
                            for s in constituents {
                                let ind = Character::induce(s, &l_in_k).unwrap();
                                assert!(ind.inner(&chi).unwrap().is_one(), "{name}");
                            }
                        }
                        Trichotomy::II { constituent } => {
                            seen[1] += 1;
                            assert_eq!(&chi.restrict(&l_in_k).unwrap(), constituent, "{name}");
                        }
                        Trichotomy::III { e, .. } => {
                            seen[2] += 1;
                            assert_eq!(e * e, index, "{name}");
                            let back = Character::induce(&chi.restrict(&l_in_k).unwrap(), &l_in_k).unwrap();
                            assert_eq!(back, chi.scale(index as i64), "{name}");
                        }
                    }
                }
            }
        }
    }
    assert!(seen.iter().all(|&c| c > 0), "every case should occur in the corpus: {seen:?}");
}
