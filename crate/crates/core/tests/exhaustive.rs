mod common;

use std::collections::HashSet;

use common::{decompose_by_gaps, forward_by_gaps, inverse_by_gaps, partition_count};
use kstrips::identities::{
    count_class, enumerate_partitions, identity1_sides, identity2_sides, identity3_forms,
    PartitionClass,
};
use kstrips::{bijection, decompose, insert_strips, Partition};
use num_bigint::BigInt;

fn all_partitions(max_n: u64) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(|n| enumerate_partitions(n).unwrap())
}

#[test]
fn enumeration_matches_independent_counts() {
    let mut euler = kstrips::Series::one(40);
    for j in 1..=40 {
        euler.mul_geometric_inverse(j);
    }
    for n in 0..=40u64 {
        let listed: Vec<Partition> = enumerate_partitions(n).unwrap().collect();
        assert_eq!(listed.len() as u64, partition_count(n), "n={n}");
        assert_eq!(euler.coeff(n as usize), &BigInt::from(listed.len()), "n={n}");
        assert!(listed.windows(2).all(|w| w[0].parts() > w[1].parts()), "order at n={n}");
        assert!(listed.iter().all(|p| p.weight() == n));
    }
}

#[test]
fn decompose_then_insert_is_identity() {
    for lambda in all_partitions(25) {
        for k in 1..=5 {
            let d = decompose(&lambda, k);
            let (pi, delta) = decompose_by_gaps(lambda.parts(), k);
            assert_eq!((d.pi.parts(), d.delta.parts()), (&pi[..], &delta[..]));
            assert_eq!(insert_strips(&d).unwrap(), lambda, "k={k}");
        }
    }
}

#[test]
fn strict_roundtrip_and_onto() {
    for k in 1..=4u64 {
        for n in 0..=28u64 {
            let mut images = HashSet::new();
            for lambda in enumerate_partitions(n).unwrap() {
                if !lambda.is_repetition_bounded(k) {
                    assert!(bijection::forward(&lambda, k, true).is_err());
                    continue;
                }
                let beta = bijection::forward(&lambda, k, true).unwrap();
                assert!(beta.has_initial_k_repetitions(k), "{lambda} -> {beta} at k={k}");
                assert_eq!(bijection::inverse(&beta, k, true).unwrap(), lambda);
                assert!(images.insert(beta), "collision at {lambda}, k={k}");
            }
            let targets: HashSet<Partition> = enumerate_partitions(n)
                .unwrap()
                .filter(|b| b.has_initial_k_repetitions(k))
                .collect();
            assert_eq!(images, targets, "n={n} k={k}");
            for beta in &targets {
                let lambda = bijection::inverse(beta, k, true).unwrap();
                assert_eq!(&bijection::forward(&lambda, k, true).unwrap(), beta);
            }
        }
    }
}

#[test]
fn lax_map_is_a_bijection_on_every_partition() {
    for k in 1..=5u64 {
        for n in 0..=22u64 {
            let mut images = HashSet::new();
            for lambda in enumerate_partitions(n).unwrap() {
                let beta = bijection::forward(&lambda, k, false).unwrap();
                assert_eq!(beta.parts(), &forward_by_gaps(lambda.parts(), k)[..]);
                assert_eq!(inverse_by_gaps(beta.parts(), k), lambda.parts());
                assert_eq!(bijection::inverse(&beta, k, false).unwrap(), lambda);
                images.insert(beta);
            }
            assert_eq!(images.len() as u64, partition_count(n), "n={n} k={k}");
        }
    }
}

#[test]
fn inverse_of_hand_example_by_search() {
    let target = Partition::new(vec![3, 1, 1, 1, 1, 1, 1]).unwrap();
    let preimages: Vec<Partition> = enumerate_partitions(9)
        .unwrap()
        .filter(|l| l.is_repetition_bounded(2))
        .filter(|l| bijection::forward(l, 2, true).unwrap() == target)
        .collect();
    assert_eq!(preimages, vec![Partition::new(vec![3, 3, 3]).unwrap()]);
}

#[test]
fn equinumerosity_and_identity1_counts() {
    for k in 1..=4u64 {
        let (lhs, rhs) = identity1_sides(k, 28).unwrap();
        for n in 0..=28u64 {
            let bounded = count_class(n, k, PartitionClass::RepetitionBounded).unwrap();
            let initial = count_class(n, k, PartitionClass::InitialReps).unwrap();
            assert_eq!(bounded, initial, "n={n} k={k}");
            assert_eq!(rhs.coeff(n as usize), &BigInt::from(bounded));
            assert_eq!(lhs.coeff(n as usize), &BigInt::from(initial));
        }
    }
}

#[test]
fn identity2_lhs_counts_capped_class() {
    for k in [2u64, 3] {
        for m in 0..=3u64 {
            let (lhs, rhs) = identity2_sides(k, m, 40).unwrap();
            assert_eq!(lhs, rhs, "k={k} m={m}");
            for n in 0..=26u64 {
                let count = count_class(n, k, PartitionClass::InitialRepsCapped(m)).unwrap();
                assert_eq!(lhs.coeff(n as usize), &BigInt::from(count), "n={n} k={k} m={m}");
            }
        }
    }
}

#[test]
fn identity3_sum_counts_strong_class() {
    let forms = identity3_forms(2, 26).unwrap();
    for n in 0..=26u64 {
        let count = count_class(n, 2, PartitionClass::StrongInitialReps).unwrap();
        assert_eq!(forms.sum_form.coeff(n as usize), &BigInt::from(count), "n={n}");
    }
}

#[test]
fn k_flat_conjugates_counted_by_flat_product() {
    for k in 1..=4u64 {
        let mut flat = kstrips::Series::one(24);
        for j in 1..=24 {
            flat.mul_finite_geometric(j, (k - 1) as usize);
        }
        for n in 0..=24u64 {
            let count = count_class(n, k, PartitionClass::KFlatConjugate).unwrap();
            assert_eq!(flat.coeff(n as usize), &BigInt::from(count));
        }
    }
}

#[test]
fn strong_class_yields_widely_spaced_strips() {
    for n in 0..=24u64 {
        for k in 1..=3u64 {
            for beta in enumerate_partitions(n).unwrap() {
                if !beta.has_strong_initial_repetitions(k) {
                    continue;
                }
                let lambda = bijection::inverse(&beta, k, true).unwrap();
                let delta = decompose(&lambda.conjugate(), k).delta;
                assert!(
                    delta.parts().windows(2).all(|w| w[0] - w[1] >= 2 * k),
                    "beta={beta} delta={delta} k={k}"
                );
            }
        }
    }
}
