mod common;

use std::collections::BTreeSet;

use btchow::groups::{
    all_subgroups, all_subgroups_up_to_conjugacy, coset_representatives, partition_by_conjugacy, FiniteActionGroup,
    Subgroup,
};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every subset of the group containing the identity and closed under
/// multiplication.
fn brute_force_subgroups(g: &FiniteActionGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let others: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << others.len() {
        let mut members = vec![g.identity()];
        members.extend(others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x));
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if members.iter().all(|&a| members.iter().all(|&b| set.contains(&g.mul(a, b)))) {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

fn small_group(seed: u64) -> FiniteActionGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 + (seed % 5) as usize;
    if seed.is_multiple_of(2) {
        random_permutation_group(&mut rng, n, 16)
    } else {
        random_signed_group(&mut rng, n.min(4), 16)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn subgroup_enumeration_matches_brute_force(seed in any::<u64>()) {
        let g = small_group(seed);
        let fast: BTreeSet<Vec<usize>> = all_subgroups(&g).iter().map(|h| h.members().to_vec()).collect();
        prop_assert_eq!(fast, brute_force_subgroups(&g));
    }

    #[test]
    fn conjugacy_classes_partition_the_subgroups(seed in any::<u64>()) {
        let g = small_group(seed);
        let subs = all_subgroups(&g);
        let classes = partition_by_conjugacy(&g, subs.clone());
        prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), subs.len());
        for class in &classes {
            let rep = &class[0];
            for h in class {
                prop_assert!((0..g.order()).any(|x| &rep.conjugate_by(&g, x) == h));
            }
        }
        let reps = all_subgroups_up_to_conjugacy(&g);
        prop_assert_eq!(reps.len(), classes.len());
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                prop_assert!((0..g.order()).all(|x| &a.conjugate_by(&g, x) != b));
            }
        }
        prop_assert!(reps.iter().any(Subgroup::is_trivial));
        prop_assert!(reps.iter().any(|h| h.order() == g.order()));
    }

    #[test]
    fn coset_representatives_split_the_group(seed in any::<u64>()) {
        let g = small_group(seed);
        for h in all_subgroups(&g) {
            let reps = coset_representatives(&g, &h);
            prop_assert_eq!(reps.len() * h.order(), g.order());
            let mut covered = BTreeSet::new();
            for &x in &reps {
                let coset: BTreeSet<usize> = h.members().iter().map(|&k| g.mul(x, k)).collect();
                prop_assert_eq!(coset.iter().next().copied(), Some(x));
                for y in coset {
                    prop_assert!(covered.insert(y));
                }
            }
        }
    }

    #[test]
    fn group_tables_are_associative_with_inverses(seed in any::<u64>()) {
        let g = small_group(seed);
        let n = g.order();
        for a in 0..n {
            prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity());
            for b in 0..n {
                let ab = g.element(a).compose(g.element(b));
                prop_assert_eq!(g.element(g.mul(a, b)), &ab);
            }
        }
    }
}

#[test]
fn symmetric_group_on_four_points_has_thirty_subgroups_in_eleven_classes() {
    let g = symmetric_group(4);
    assert_eq!(g.order(), 24);
    assert_eq!(all_subgroups(&g).len(), 30);
    assert_eq!(all_subgroups_up_to_conjugacy(&g).len(), 11);
}

#[test]
fn quaternion_group_has_six_subgroups_each_normal() {
    let g = q8_group();
    assert_eq!(g.order(), 8);
    assert_eq!(all_subgroups(&g).len(), 6);
    assert_eq!(all_subgroups_up_to_conjugacy(&g).len(), 6);
}

#[test]
fn signed_symmetric_groups_have_factorial_order() {
    assert_eq!(signed_sn_group(4).order(), 24);
    assert_eq!(signed_sn_group(5).order(), 120);
    assert!(signed_sn_group(4).is_unsigned());
}
