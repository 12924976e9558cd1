use autorbit_core::multinomial::{
    excluded_case_value, lemma3_candidate_value, partitions, pmf, r_value, verify_lemma3_on, weak_compositions,
    TypeDistribution,
};
use autorbit_core::rational::ratio;
use autorbit_core::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn candidate_values() {
    assert_eq!(lemma3_candidate_value(3, &[2, 1]).unwrap(), ratio(3, 4));
    assert_eq!(lemma3_candidate_value(2, &[1, 1]).unwrap(), ratio(2, 1));
    assert_eq!(lemma3_candidate_value(7, &[7]).unwrap(), BigRational::one());
    assert!(lemma3_candidate_value(4, &[2, 1]).is_err());
    assert_eq!(excluded_case_value(2), ratio(2, 1));
}

#[test]
fn excluded_diagonal_cases_exceed_one() {
    assert!(lemma3_candidate_value(2, &[1, 1]).unwrap() > BigRational::one());
    assert!(lemma3_candidate_value(3, &[1, 1, 1]).unwrap() > BigRational::one());
}

// The quoted k = 2 range starts at n = 10; the small cases hold as well.
#[test]
fn two_part_grid_below_ten() {
    let grid: Vec<(usize, u64)> = (3..10).map(|n| (2, n)).collect();
    let r = verify_lemma3_on(&grid);
    assert!(r.passed(), "{:?}", r.violations);
    assert_eq!(r.checked, (3..10u64).map(|n| n / 2).sum::<u64>());
}

#[test]
fn pmf_examples() {
    let third = ratio(1, 3);
    assert_eq!(pmf(&[third.clone(), third.clone(), third], &[1, 1, 1]), ratio(2, 9));
    let half = ratio(1, 2);
    assert_eq!(r_value(&TypeDistribution::new(vec![half.clone(), half], vec![1, 1]).unwrap()), ratio(1, 2));
    assert_eq!(r_value(&TypeDistribution::new(vec![BigRational::one()], vec![5]).unwrap()), BigRational::one());
    assert!(TypeDistribution::new(vec![ratio(1, 3), ratio(1, 3)], vec![1, 1]).is_err());
}

fn rho_strategy() -> impl Strategy<Value = Vec<BigRational>> {
    (1usize..=4, 1u64..=6).prop_flat_map(|(k, den)| {
        proptest::collection::vec(0u64..=den, k - 1).prop_map(move |mut cuts| {
            cuts.push(0);
            cuts.push(den);
            cuts.sort_unstable();
            cuts.windows(2).map(|w| ratio(w[1] - w[0], den)).collect()
        })
    })
}

proptest! {
    #[test]
    fn pmf_sums_to_one(rho in rho_strategy(), n in 0u64..=6) {
        let total = weak_compositions(n, rho.len())
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + pmf(&rho, c));
        prop_assert_eq!(total, BigRational::one());
    }

    #[test]
    fn pmf_bounded_by_largest_probability(rho in rho_strategy(), n in 1u64..=8, pick in any::<prop::sample::Index>()) {
        let comps = weak_compositions(n, rho.len());
        let counts = &comps[pick.index(comps.len())];
        let max = rho.iter().max().unwrap().clone();
        prop_assert!(pmf(&rho, counts) <= max);
    }

    #[test]
    fn partitions_are_valid(n in 1u64..=20, k in 1usize..=5) {
        for p in partitions(n, k) {
            prop_assert_eq!(p.len(), k);
            prop_assert_eq!(p.iter().sum::<u64>(), n);
            prop_assert!(p.windows(2).all(|w| w[0] >= w[1]) && p[k - 1] >= 1);
        }
    }
}
