use proptest::prelude::*;

use sqcomm_core::catalog::{self, CatalogEntry};
use sqcomm_core::presentation::DEFAULT_MAX_COSETS;
use sqcomm_core::sqcomm;
use sqcomm_core::{are_isomorphic, todd_coxeter, CayleyGroup, ElementId, Presentation};

fn small_entry() -> impl Strategy<Value = CatalogEntry> {
    prop_oneof![
        (1u64..=8).prop_map(|n| catalog::cyclic(n).unwrap()),
        (1u64..=6).prop_map(|n| catalog::dihedral(n).unwrap()),
        Just(catalog::quaternion8()),
        Just(catalog::heisenberg_mod(2).unwrap()),
        (1u64..=2).prop_map(|k| catalog::elementary_abelian(3, k as u32).unwrap()),
    ]
}

/// Rebuilds `g` with its elements renumbered by `perm`.
fn relabel(g: &CayleyGroup, perm: &[usize]) -> CayleyGroup {
    let n = g.order();
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| perm[g.mul(ElementId::new(inverse[x]), ElementId::new(inverse[y])).index()]).collect())
        .collect();
    let labels = (0..n).map(|x| g.label(ElementId::new(inverse[x])).to_string()).collect();
    CayleyGroup::from_table(&table, labels, Vec::new()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn characterizations_agree(a in small_entry(), b in small_entry()) {
        let p = catalog::direct_product(&a, &b);
        let sq = sqcomm::is_square_commutative(&p.group);
        prop_assert_eq!(sq, sqcomm::squares_central(&p.group));
        prop_assert_eq!(sq, sqcomm::hat_group(&p.group).quotient().is_abelian());
        prop_assert_eq!(
            sq,
            sqcomm::is_square_commutative(&a.group) && sqcomm::is_square_commutative(&b.group)
        );
        let report = sqcomm::analyze(&p.group, Some(&p.canonical_generators)).unwrap();
        prop_assert!(report.consistent);
        if sq {
            prop_assert!(report.g_mod_z_abelian);
            prop_assert_eq!(report.coverage_ok, Some(true));
        }
    }

    #[test]
    fn verdicts_survive_relabelling(e in small_entry(), seed in any::<u64>()) {
        let n = e.group.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a splitmix sequence
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            perm.swap(i, (z ^ (z >> 31)) as usize % (i + 1));
        }
        let h = relabel(&e.group, &perm);
        prop_assert_eq!(sqcomm::is_square_commutative(&h), sqcomm::is_square_commutative(&e.group));
        prop_assert_eq!(h.center().len(), e.group.center().len());
        prop_assert_eq!(sqcomm::z2_subgroup(&h).len(), sqcomm::z2_subgroup(&e.group).len());
        let iso = are_isomorphic(&e.group, &h).unwrap();
        prop_assert!(iso.is_some_and(|f| f.is_valid(&e.group, &h)));
    }

    #[test]
    fn enumeration_matches_metacyclic_tables(n in 2u64..=10, m in 1u64..=4, j in 1u64..=9) {
        prop_assume!(j < n);
        let e = catalog::metacyclic(n, m, j).unwrap();
        let text = format!("< a, b | a^{n} = b^{m} = 1, a b = b a^{j} >");
        let r = todd_coxeter(&Presentation::parse(&text).unwrap(), DEFAULT_MAX_COSETS).unwrap();
        prop_assert!(r.satisfies(&Presentation::parse(&text).unwrap()));
        prop_assert_eq!(r.group.order(), e.group.order());
        prop_assert!(are_isomorphic(&r.group, &e.group).unwrap().is_some());
        prop_assert_eq!(e.warning.is_none(), e.group.order() as u64 == n * m);
    }

    #[test]
    fn central_even_powers_under_the_criterion(e in small_entry(), f in small_entry()) {
        let p = catalog::direct_product(&e, &f);
        let g = &p.group;
        if sqcomm::is_square_commutative(g) {
            let center = g.center();
            for x in g.elements() {
                prop_assert!(center.contains(g.pow(x, 2)));
                prop_assert!(center.contains(g.pow(x, -2)));
            }
        }
    }
}
