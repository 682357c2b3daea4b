use std::sync::OnceLock;

use proptest::prelude::*;

use isemlab::enumerate::{
    canonical_form, canonical_labelling, enumerate_semigroups, EnumerateOptions, Filter,
};
use isemlab::families;
use isemlab::io::{emit_table, parse_table};
use isemlab::morphisms::{is_antiautomorphism, is_automorphism};
use isemlab::partialperm::{all_partial_perms, PartialPerm};
use isemlab::structure::clifford_decomposition;
use isemlab::table::{first_associativity_violation, light_associativity_test};
use isemlab::{automorphism_group, FiniteSemigroup, UnaryMap};

fn pool() -> &'static [FiniteSemigroup] {
    static POOL: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    POOL.get_or_init(|| {
        let opts = EnumerateOptions::default();
        let mut v: Vec<FiniteSemigroup> = enumerate_semigroups(4, Filter::All, opts)
            .unwrap()
            .semigroups()
            .collect();
        v.extend(
            enumerate_semigroups(5, Filter::Inverse, opts)
                .unwrap()
                .semigroups(),
        );
        v.extend([
            families::brandt_b2(),
            families::band_b4(),
            families::symmetric_group(3),
            families::dihedral_group(4),
            families::quaternion_group(),
            families::adjoin_zero(&families::symmetric_group(3)),
            families::direct_product(&families::cyclic_group(2), &families::brandt_b2()),
        ]);
        v
    })
}

fn inverse_pool() -> &'static [FiniteSemigroup] {
    static POOL: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    POOL.get_or_init(|| {
        pool()
            .iter()
            .filter(|s| s.is_inverse_semigroup())
            .cloned()
            .collect()
    })
}

fn from(p: &'static [FiniteSemigroup]) -> impl Strategy<Value = FiniteSemigroup> {
    (0..p.len()).prop_map(move |i| p[i].clone())
}

/// A member of `p` with a random permutation of its elements.
fn with_perm(
    p: &'static [FiniteSemigroup],
) -> impl Strategy<Value = (FiniteSemigroup, Vec<usize>)> {
    from(p).prop_flat_map(|s| {
        let n = s.order();
        (Just(s), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_ignores_relabelling((s, perm) in with_perm(pool())) {
        prop_assert_eq!(canonical_form(&s.relabel(&perm)), canonical_form(&s));
    }

    #[test]
    fn canonical_form_is_idempotent(s in from(pool())) {
        let c = canonical_form(&s);
        prop_assert_eq!(canonical_form(&c.to_semigroup()), c);
    }

    #[test]
    fn canonical_labelling_is_an_isomorphism((s, perm) in with_perm(pool())) {
        let t = s.relabel(&perm);
        let (c, labels) = canonical_labelling(&t);
        let (relabelled, canonical) = (t.relabel(&labels), c.to_semigroup());
        prop_assert_eq!(relabelled.table(), canonical.table());
    }

    #[test]
    fn inversion_is_an_involutive_antiautomorphism(s in from(inverse_pool())) {
        let inv = s.inversion_map().unwrap();
        prop_assert!(inv.then(&inv).is_identity());
        prop_assert!(is_antiautomorphism(&s, &inv));
        for x in s.elements() {
            let xi = inv.apply(x);
            prop_assert_eq!(s.product(&[x, xi, x]), x);
            prop_assert_eq!(s.product(&[xi, x, xi]), xi);
        }
    }

    #[test]
    fn automorphisms_commute_with_inversion(s in from(inverse_pool())) {
        let inv = s.inversion_map().unwrap();
        for a in automorphism_group(&s) {
            for x in s.elements() {
                prop_assert_eq!(a.apply(inv.apply(x)), inv.apply(a.apply(x)));
            }
        }
    }

    #[test]
    fn automorphisms_form_a_group(s in from(pool())) {
        let aut: Vec<UnaryMap> = automorphism_group(&s).into_iter().map(|a| a.perm).collect();
        prop_assert!(aut.contains(&UnaryMap::identity(s.order())));
        for a in &aut {
            prop_assert!(is_automorphism(&s, a));
            prop_assert!(aut.contains(&a.inverse().unwrap()));
            for b in &aut {
                prop_assert!(aut.contains(&a.then(b)));
            }
        }
    }

    #[test]
    fn automorphism_count_is_an_invariant((s, perm) in with_perm(pool())) {
        prop_assert_eq!(automorphism_group(&s.relabel(&perm)).len(), automorphism_group(&s).len());
    }

    #[test]
    fn text_round_trip(s in from(pool())) {
        prop_assert_eq!(parse_table(&emit_table(&s)).unwrap(), s);
    }

    #[test]
    fn natural_order_is_a_compatible_partial_order(s in from(inverse_pool())) {
        let o = s.natural_partial_order().unwrap();
        prop_assert!(o.is_partial_order());
        for (b, a) in o.pairs() {
            for c in s.elements() {
                prop_assert!(o.leq(s.mul(b, c), s.mul(a, c)));
                prop_assert!(o.leq(s.mul(c, b), s.mul(c, a)));
            }
        }
    }

    #[test]
    fn clifford_decompositions_reconstruct(s in from(pool())) {
        if let Ok(d) = clifford_decomposition(&s) {
            prop_assert_eq!(d.check(&s), Ok(()));
            for x in s.elements() {
                for y in s.elements() {
                    prop_assert_eq!(d.product_via_links(&s, x, y), s.mul(x, y));
                }
            }
        }
    }

    #[test]
    fn associativity_paths_agree(n in 1usize..=4, seed in prop::collection::vec(0usize..4, 16)) {
        let table: Vec<usize> = seed[..n * n].iter().map(|v| v % n).collect();
        let direct = first_associativity_violation(n, &table).is_none();
        prop_assert_eq!(light_associativity_test(n, &table), direct);
        prop_assert_eq!(FiniteSemigroup::new(n, table).is_ok(), direct);
    }

    #[test]
    fn large_tables_use_the_same_verdict(i in 0..pool().len(), j in 0..pool().len(), cell in any::<prop::sample::Index>(), value in any::<prop::sample::Index>()) {
        // products of pool members give associative tables above the direct-loop limit
        let p = families::direct_product(&pool()[i], &pool()[j]);
        let n = p.order();
        let mut table = p.table().to_vec();
        let idx = cell.index(n * n);
        table[idx] = value.index(n);
        let direct = first_associativity_violation(n, &table);
        prop_assert_eq!(light_associativity_test(n, &table), direct.is_none());
        match FiniteSemigroup::new(n, table) {
            Ok(_) => prop_assert!(direct.is_none()),
            Err(isemlab::Error::NotAssociative { x, y, z }) => prop_assert_eq!(direct, Some((x, y, z))),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn partial_perm_laws(i in 0..209usize, j in 0..209usize, k in 0..209usize) {
        let all = all_partial_perms(4);
        let (a, b, c) = (&all[i], &all[j], &all[k]);
        let ab_c = a.compose(b).unwrap().compose(c).unwrap();
        let a_bc = a.compose(&b.compose(c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let ai = a.invert();
        prop_assert_eq!(&a.compose(&ai).unwrap().compose(a).unwrap(), a);
        prop_assert!(a.compose(&ai).unwrap().is_partial_identity());
        prop_assert_eq!(a.to_string().parse::<PartialPerm>().unwrap(), a.clone());
    }
}
