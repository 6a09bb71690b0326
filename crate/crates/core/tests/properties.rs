use proptest::prelude::*;

use p3crank::congruence::is_divisible;
use p3crank::cranks::{build_arrangement, c_ls, step_f, CaseLabel};
use p3crank::ehrhart::{box_compose, box_decompose, fundamental_points};
use p3crank::partitions::{column_multiplicities, mult_to_partition, Partition3, PartitionIndex};
use p3crank::quasipoly::{p3_binomial, p3_circulator, p3_monomial, p3_nearest};

fn partition() -> impl Strategy<Value = Partition3> {
    (1u64..400, 0u64..400, 0u64..400).prop_map(|(c, b, a)| Partition3::new(c + b + a, c + b, c).unwrap())
}

fn minus_one_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![5u64, 11, 17, 23, 29])
}

proptest! {
    #[test]
    fn decomposition_round_trips(lambda in partition()) {
        let d = box_decompose(&lambda);
        prop_assert!(d.quotient.iter().all(|&t| t >= 0));
        prop_assert_eq!(box_compose(&d.remainder, d.quotient), Ok(lambda));
        prop_assert_eq!(d.remainder.height() as u64 + 6 * d.quotient_size() as u64, lambda.height());
    }

    #[test]
    fn composition_round_trips(idx in 0usize..36, tau in prop::array::uniform3(0i64..50)) {
        let mu = fundamental_points().iter().nth(idx).copied().unwrap();
        let lambda = box_compose(&mu, tau).unwrap();
        let d = box_decompose(&lambda);
        prop_assert_eq!(d.remainder, mu);
        prop_assert_eq!(d.quotient, tau);
    }

    #[test]
    fn multiplicities_round_trip(lambda in partition()) {
        prop_assert_eq!(mult_to_partition(&column_multiplicities(&lambda)), Ok(lambda));
    }

    #[test]
    fn evaluators_agree(n in 0u64..2_000_000_000) {
        let v = p3_nearest(n);
        prop_assert_eq!(p3_monomial(n), v);
        prop_assert_eq!(p3_binomial(n), v);
        prop_assert_eq!(p3_circulator(n), Ok(v));
    }

    #[test]
    fn index_ranks_and_unranks(lambda in partition()) {
        let index = PartitionIndex::new(lambda.height());
        let r = index.rank(&lambda).unwrap();
        prop_assert_eq!(index.unrank(r), Some(lambda));
    }

    #[test]
    fn step_shifts_by_one(m in minus_one_prime(), case_idx in 0usize..9, kp in 0u64..6, pick in any::<prop::sample::Index>()) {
        let case = CaseLabel::ALL[case_idx];
        let n = 6 * m as i64 * kp as i64 + case.offset(m);
        prop_assume!(n >= 3);
        let index = PartitionIndex::new(n as u64);
        let lambda = index.unrank(pick.index(index.len())).unwrap();
        let next = step_f(&lambda, m).unwrap();
        prop_assert_eq!(next.height(), lambda.height());
        prop_assert_eq!((c_ls(&lambda, m) + 1) % m, c_ls(&next, m));
    }

    #[test]
    fn plan_walk_stays_in_place(m in minus_one_prime(), case_idx in 0usize..9, kp in 1u64..4, pick in any::<prop::sample::Index>()) {
        let case = CaseLabel::ALL[case_idx];
        let plan = build_arrangement(case, m).unwrap();
        let n = plan.table.n_at(kp) as u64;
        let index = PartitionIndex::new(n);
        let lambda = index.unrank(pick.index(index.len())).unwrap();
        let (_, cell) = plan.position(&lambda).unwrap();
        prop_assert_eq!(plan.partition_at(kp, cell), Some(lambda));
        let next = plan.cycle_step(&lambda).unwrap();
        prop_assert_eq!(next.height(), n);
        prop_assert_eq!((plan.crank(&lambda).unwrap() + 1) % m, plan.crank(&next).unwrap());
    }

    #[test]
    fn divisibility_matches_count(m in minus_one_prime(), n in 0u64..5000) {
        prop_assert_eq!(is_divisible(n, m).unwrap(), p3_nearest(n).is_multiple_of(m));
    }
}
