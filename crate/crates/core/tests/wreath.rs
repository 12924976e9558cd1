use autorbit_core::catalog;
use autorbit_core::wreath::{WreathElement, WreathGroup};
use autorbit_core::{FiniteGroup, Permutation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn id_of(g: &FiniteGroup, cycles: &str) -> u32 {
    let p = Permutation::parse_cycles(g.degree(), cycles).unwrap();
    g.index_of(p.images()).unwrap()
}

fn perm(n: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(n, cycles).unwrap()
}

#[test]
fn bcpc_of_sym3_three_cycle_example() {
    let s3 = catalog::sym(3).unwrap();
    let wr = WreathGroup::full(&s3, 3).unwrap();
    let w = wr
        .element(vec![id_of(&s3, "(1 2)"), 0, id_of(&s3, "(1 3)")], perm(3, "(1 2 3)"))
        .unwrap();
    let product = wr.cycle_product(&w, &[0, 1, 2]).unwrap();
    assert_eq!(product, id_of(&s3, "(1 2 3)"));
    let three_cycles = s3.classes().class_of(id_of(&s3, "(1 2 3)"));
    let profile = wr.profile(&w, None);
    assert_eq!(profile.by_length.len(), 1);
    assert_eq!(profile.by_length[&3], vec![(three_cycles, 1)]);
    assert!(wr.bcpc(&w, &[0, 2, 1]).is_err());
}

#[test]
fn conjugation_by_a_base_tuple_expands_as_expected() {
    let s3 = catalog::sym(3).unwrap();
    let wr = WreathGroup::full(&s3, 2).unwrap();
    let (g1, g2) = (id_of(&s3, "(1 2)"), id_of(&s3, "(1 2 3)"));
    let (k1, k2) = (id_of(&s3, "(2 3)"), id_of(&s3, "(1 3 2)"));
    let a = wr.element(vec![g1, g2], perm(2, "(1 2)")).unwrap();
    let b = wr.element(vec![k1, k2], Permutation::identity(2)).unwrap();
    let expected = wr
        .element(
            vec![
                s3.mul(s3.mul(k1, g1), s3.inv(k2)),
                s3.mul(s3.mul(k2, g2), s3.inv(k1)),
            ],
            perm(2, "(1 2)"),
        )
        .unwrap();
    assert_eq!(wr.w_conj(&a, &b).unwrap(), expected);
}

#[test]
fn exhaustive_agreement_on_small_products() {
    for (base, n) in [("cyclic2", 2), ("cyclic3", 2), ("sym3", 2)] {
        let g = catalog::by_name(base).unwrap();
        let wr = WreathGroup::full(&g, n).unwrap();
        let els = wr.elements().unwrap();
        for v in &els {
            for w in &els {
                assert_eq!(wr.conj_test(v, w).unwrap(), wr.brute_force_conj(v, w).unwrap(), "{base}");
            }
        }
    }
}

#[test]
fn one_coordinate_degenerates_to_base_conjugacy() {
    let s4 = catalog::sym(4).unwrap();
    let wr = WreathGroup::full(&s4, 1).unwrap();
    let top = Permutation::identity(1);
    for g in 0..24 {
        for h in 0..24 {
            let v = WreathElement { base: vec![g], top: top.clone() };
            let w = WreathElement { base: vec![h], top: top.clone() };
            let same = s4.classes().class_of(g) == s4.classes().class_of(h);
            assert_eq!(wr.conj_test(&v, &w).unwrap(), same);
        }
    }
}

#[test]
fn class_sizes_of_sym3_wr_sym2() {
    let s3 = catalog::sym(3).unwrap();
    let wr = WreathGroup::full(&s3, 2).unwrap();
    let class_of = wr.conjugacy_classes_brute().unwrap();
    let classes = class_of.iter().max().unwrap() + 1;
    let mut sizes = vec![0usize; classes as usize];
    for &c in &class_of {
        sizes[c as usize] += 1;
    }
    assert_eq!(sizes.iter().sum::<usize>(), 72);
    assert!(sizes.iter().all(|s| 72 % s == 0));
    // 6 classes with identity top and 3 with swapped top
    assert_eq!(classes, 9);
}

fn sym3_wr(n: usize) -> (&'static FiniteGroup, WreathGroup<'static>) {
    let base: &'static FiniteGroup = Box::leak(Box::new(catalog::sym(3).unwrap()));
    (base, WreathGroup::full(base, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative_with_inverses(seed in any::<u64>()) {
        let (_, wr) = sym3_wr(4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (wr.random_element(&mut rng), wr.random_element(&mut rng), wr.random_element(&mut rng));
        let ab_c = wr.w_mul(&wr.w_mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = wr.w_mul(&a, &wr.w_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(wr.w_mul(&a, &wr.w_inv(&a).unwrap()).unwrap(), wr.identity());
        prop_assert_eq!(wr.w_inv(&wr.w_inv(&a).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(wr.w_mul(&wr.identity(), &a).unwrap(), a);
    }

    #[test]
    fn bcpc_is_invariant_under_rotation(seed in any::<u64>()) {
        let (_, wr) = sym3_wr(5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = wr.random_element(&mut rng);
        for zeta in w.top.cycles().cycles() {
            let class = wr.bcpc(&w, zeta).unwrap();
            for r in 1..zeta.len() {
                let mut rotated = zeta.clone();
                rotated.rotate_left(r);
                prop_assert_eq!(wr.bcpc(&w, &rotated).unwrap(), class);
            }
        }
    }

    #[test]
    fn profile_is_invariant_under_conjugation(seed in any::<u64>()) {
        let (_, wr) = sym3_wr(5);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = wr.random_element(&mut rng);
        let k = wr.random_element(&mut rng);
        let psi = WreathElement { base: vec![0; 5], top: k.top.clone() };
        prop_assert_eq!(wr.profile(&w, None), wr.profile(&wr.w_conj(&w, &psi).unwrap(), None));
        prop_assert_eq!(wr.profile(&w, None), wr.profile(&wr.w_conj(&w, &k).unwrap(), None));
        let total: usize = wr.profile(&w, None).by_length.iter().map(|(l, m)| l * m.iter().map(|x| x.1).sum::<usize>()).sum();
        prop_assert_eq!(total, 5);
    }

    #[test]
    fn conj_test_is_an_equivalence(seed in any::<u64>()) {
        let (_, wr) = sym3_wr(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = wr.random_element(&mut rng);
        let k1 = wr.random_element(&mut rng);
        let k2 = wr.random_element(&mut rng);
        let v = wr.w_conj(&u, &k1).unwrap();
        let w = wr.w_conj(&v, &k2).unwrap();
        prop_assert!(wr.conj_test(&u, &u).unwrap());
        prop_assert!(wr.conj_test(&u, &v).unwrap() && wr.conj_test(&v, &u).unwrap());
        prop_assert!(wr.conj_test(&v, &w).unwrap() && wr.conj_test(&u, &w).unwrap());
        let x = wr.random_element(&mut rng);
        prop_assert_eq!(wr.conj_test(&u, &x).unwrap(), wr.conj_test(&x, &u).unwrap());
        prop_assert_eq!(wr.conj_test(&u, &x).unwrap(), wr.conj_test(&w, &x).unwrap());
    }
}
