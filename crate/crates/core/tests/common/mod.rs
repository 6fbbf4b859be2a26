#![allow(dead_code)]

use btchow::chow::{ComputeOptions, ResolutionProblem, ValidatedProblem};
use btchow::groups::{close_group, FiniteActionGroup, SignedPermutation, DEFAULT_GROUP_BOUND};
use btchow::lattice::IntegerMatrix;
use num_bigint::BigInt;

pub fn perm(images: &[usize]) -> SignedPermutation {
    SignedPermutation::from_images(images.to_vec()).unwrap()
}

pub fn group(degree: usize, gens: &[SignedPermutation]) -> FiniteActionGroup {
    close_group(degree, gens, DEFAULT_GROUP_BOUND).unwrap()
}

pub fn solve(group: FiniteActionGroup, embedding: IntegerMatrix) -> ValidatedProblem {
    ResolutionProblem::new(group, embedding).validate(ComputeOptions::default()).unwrap()
}

/// Columns `e_{2i} + e_{2i+1}`, for lattices built from pairs.
pub fn pair_sums(pairs: usize) -> IntegerMatrix {
    let cols: Vec<Vec<BigInt>> = (0..pairs)
        .map(|i| (0..2 * pairs).map(|r| BigInt::from(i64::from(r / 2 == i))).collect())
        .collect();
    IntegerMatrix::from_columns(2 * pairs, &cols).unwrap()
}

/// Quaternion group acting on itself by left multiplication. Basis order
/// `1, -1, i, -i, j, -j, k, -k`, written `e, e', x, x', y, y', z, z'`.
pub fn q8_group() -> FiniteActionGroup {
    let left_i = perm(&[2, 3, 1, 0, 6, 7, 5, 4]);
    let left_j = perm(&[4, 5, 7, 6, 1, 0, 2, 3]);
    group(8, &[left_i, left_j])
}

pub fn q8() -> ValidatedProblem {
    solve(q8_group(), pair_sums(4))
}

/// `S_n` on `a_1^+, a_1^-, …` (index `2i` and `2i+1`) by
/// `σ(a_i^±) = a_{σ(i)}^{±sgn σ}`.
pub fn signed_sn_group(n: usize) -> FiniteActionGroup {
    let lift = |sigma: &[usize], odd: bool| {
        let mut images = vec![0; 2 * n];
        for i in 0..n {
            let (p, m) = (2 * sigma[i], 2 * sigma[i] + 1);
            images[2 * i] = if odd { m } else { p };
            images[2 * i + 1] = if odd { p } else { m };
        }
        perm(&images)
    };
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    group(2 * n, &[lift(&transposition, true), lift(&cycle, n.is_multiple_of(2))])
}

pub fn signed_sn(n: usize) -> ValidatedProblem {
    solve(signed_sn_group(n), pair_sums(n))
}

pub fn symmetric_group(n: usize) -> FiniteActionGroup {
    let mut t: Vec<usize> = (0..n).collect();
    if n > 1 {
        t.swap(0, 1);
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    group(n, &[perm(&t), perm(&cycle)])
}

/// `S_3` permuting `Z^3`, resolved by the all-ones line.
pub fn norm_one_s3() -> ValidatedProblem {
    solve(symmetric_group(3), IntegerMatrix::from_i64_rows(&[&[1], &[1], &[1]]))
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_signed_permutation<R: Rng>(rng: &mut R, n: usize) -> SignedPermutation {
    let signs = (0..n).map(|_| if rng.gen_bool(0.3) { -1 } else { 1 }).collect();
    SignedPermutation::new(random_permutation(rng, n), signs).unwrap()
}

/// A plain permutation group of the given degree with at most `max_order`
/// elements, generated by one or two random permutations.
pub fn random_permutation_group<R: Rng>(rng: &mut R, n: usize, max_order: usize) -> FiniteActionGroup {
    loop {
        let k = rng.gen_range(1..=2);
        let gens: Vec<SignedPermutation> = (0..k).map(|_| perm(&random_permutation(rng, n))).collect();
        if let Ok(g) = close_group(n, &gens, max_order) {
            return g;
        }
    }
}

pub fn random_signed_group<R: Rng>(rng: &mut R, n: usize, max_order: usize) -> FiniteActionGroup {
    loop {
        let k = rng.gen_range(1..=2);
        let gens: Vec<SignedPermutation> = (0..k).map(|_| random_signed_permutation(rng, n)).collect();
        if let Ok(g) = close_group(n, &gens, max_order) {
            return g;
        }
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// A `Γ`-invariant partition of the points: the equivalence generated by
/// the `Γ`-orbit of one random pair, or the orbit partition.
pub fn random_invariant_partition<R: Rng>(rng: &mut R, g: &FiniteActionGroup) -> Vec<Vec<usize>> {
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let orbit_partition = rng.gen_bool(0.3);
    for s in g.elements() {
        let pairs = if orbit_partition { (0..n).map(|i| (i, s.image_of(i))).collect() } else { vec![(s.image_of(a), s.image_of(b))] };
        for (x, y) in pairs {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    blocks.into_values().collect()
}

/// Block sums of a `Γ`-invariant partition, or of one `Γ`-orbit of its
/// blocks. Always a saturated `Γ`-stable sublattice.
pub fn random_embedding<R: Rng>(rng: &mut R, g: &FiniteActionGroup) -> IntegerMatrix {
    let n = g.degree();
    let blocks = random_invariant_partition(rng, g);
    let chosen: Vec<Vec<usize>> = if rng.gen_bool(0.5) {
        let seed = blocks[rng.gen_range(0..blocks.len())].clone();
        let mut orbit: Vec<Vec<usize>> = g
            .elements()
            .iter()
            .map(|s| {
                let mut b: Vec<usize> = seed.iter().map(|&i| s.image_of(i)).collect();
                b.sort_unstable();
                b
            })
            .collect();
        orbit.sort();
        orbit.dedup();
        orbit
    } else {
        blocks
    };
    let cols: Vec<Vec<BigInt>> =
        chosen.iter().map(|b| (0..n).map(|i| BigInt::from(i64::from(b.contains(&i)))).collect()).collect();
    IntegerMatrix::from_columns(n, &cols).unwrap()
}

/// A random resolution with a plain permutation group of degree at most
/// `max_n` and order at most `max_order`.
pub fn random_resolution<R: Rng>(rng: &mut R, max_n: usize, max_order: usize) -> ValidatedProblem {
    let n = rng.gen_range(2..=max_n);
    let g = random_permutation_group(rng, n, max_order);
    let e = random_embedding(rng, &g);
    solve(g, e)
}
