mod common;

use proptest::prelude::*;

use repdesc::cyclo::GaloisAut;
use repdesc::grp::subgroup_classes;
use repdesc::rep::{char_table, hom_space, induce_rep, realize_irreducible, Character, MatrixRep};

proptest! {
    #![proptest_config(common::prop_config(32))]

    #[test]
    fn frobenius_reciprocity(gi in 0usize..100, hi in 0usize..100, ci in 0usize..100, pi in 0usize..100) {
        let groups = common::small_groups();
        let g = &groups[gi % groups.len()].1;
        let subs = subgroup_classes(g);
        let h = &subs[hi % subs.len()];
        let th = char_table(&h.group());
        let tg = char_table(g);
        let chi = &th[ci % th.len()];
        let psi = &tg[pi % tg.len()];
        let lhs = Character::induce(chi, h).unwrap().inner(psi).unwrap();
        let rhs = chi.inner(&psi.restrict(h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_dimension_is_the_character_inner_product(gi in 0usize..100, a in prop::collection::vec(0usize..100, 1..3), b in prop::collection::vec(0usize..100, 1..3)) {
        let groups = common::small_groups();
        let g = &groups[gi % groups.len()].1;
        let table = char_table(g);
        let build = |idx: &[usize]| {
            let parts: Vec<MatrixRep> = idx.iter().map(|i| realize_irreducible(&table[i % table.len()]).unwrap()).collect();
            common::direct_sum(g, &parts)
        };
        let (rho, tau) = (build(&a), build(&b));
        let ip = rho.character().inner(&tau.character()).unwrap();
        prop_assert_eq!(ip, (hom_space(&rho, &tau).unwrap().dim() as i64).into());
    }

    #[test]
    fn induced_matrices_have_the_induced_character(gi in 0usize..100, hi in 0usize..100, ci in 0usize..100, k in 1i64..24) {
        let groups = common::small_groups();
        let g = &groups[gi % groups.len()].1;
        let subs = subgroup_classes(g);
        let h = &subs[hi % subs.len()];
        let th = char_table(&h.group());
        let sigma = realize_irreducible(&th[ci % th.len()]).unwrap();
        let ind = induce_rep(&sigma, h).unwrap();
        ind.validate().unwrap();
        prop_assert_eq!(ind.character(), Character::induce(&sigma.character(), h).unwrap());

        let n = g.exponent().max(2);
        let Ok(s) = GaloisAut::new(n, k) else { return Ok(()) };
        let twisted_then_induced = induce_rep(&sigma.galois_twist(&s), h).unwrap().character();
        prop_assert_eq!(ind.galois_twist(&s).character(), twisted_then_induced);
    }
}

#[test]
fn character_tables_are_orthonormal() {
    for (name, g) in common::corpus_groups() {
        let table = char_table(&g);
        assert_eq!(table.len(), g.num_classes(), "{name}");
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                assert_eq!(a.inner(b).unwrap(), ((i == j) as i64).into(), "{name}");
            }
        }
        for c in 0..g.num_classes() {
            let s: repdesc::cyclo::CycNum = table.iter().map(|x| &x.values()[c] * &x.values()[c].conj()).sum();
            assert_eq!(s, (g.centralizer_order(c) as i64).into(), "{name}");
        }
    }
}
