mod common;

use std::collections::BTreeMap;

use btchow::chow::{base_change_cokernel, base_change_kernel, chow_group, cokernel_image, ideal_i, ideal_j};
use btchow::groups::Subgroup;
use btchow::lattice::{quotient_structure, AbelianGroupStructure, IntegerMatrix, Membership, Sublattice};
use btchow::symalg::{induce, monomial_basis, multiply, sym_power_map, GradedPiece, Monomial};
use common::*;
use num_bigint::BigInt;

// Variables of the quaternion example.
const E: usize = 0;
const E_: usize = 1;
const X: usize = 2;
const X_: usize = 3;
const Y: usize = 4;
const Y_: usize = 5;
const Z: usize = 6;
const Z_: usize = 7;

fn monomial(rank: usize, vars: &[usize]) -> Monomial {
    let mut exps = vec![0u32; rank];
    for &v in vars {
        exps[v] += 1;
    }
    Monomial::new(exps)
}

/// Sum of `coef * Π vars` in `piece`.
fn poly(piece: &GradedPiece, terms: &[(i64, &[usize])]) -> Vec<BigInt> {
    let mut v = piece.zero();
    for (c, vars) in terms {
        v[piece.index_of(&monomial(piece.rank(), vars)).unwrap()] += BigInt::from(*c);
    }
    v
}

fn scale(v: &[BigInt], k: i64) -> Vec<BigInt> {
    v.iter().map(|x| x * k).collect()
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn orbit_sum_w(piece: &GradedPiece) -> Vec<BigInt> {
    poly(
        piece,
        &[
            (1, &[X, Y, Z]),
            (1, &[X_, Y_, Z_]),
            (1, &[E_, Z, Y_]),
            (1, &[E, Z_, Y]),
            (1, &[Z_, E_, X]),
            (1, &[Z, E, X_]),
            (1, &[Y, X_, E_]),
            (1, &[Y_, X, E]),
        ],
    )
}

#[test]
fn quaternion_kernel_is_z2_generated_by_w() {
    let vp = q8();
    let k = base_change_kernel(&vp, 3).unwrap();
    assert_eq!(k.structure, AbelianGroupStructure::from_cyclic_orders([BigInt::from(2)]));
    let piece = vp.q().piece(3).unwrap();
    let w = orbit_sum_w(piece);
    assert_eq!(k.witnesses.len(), 1);
    assert_eq!(k.witnesses[0].order, BigInt::from(2));
    assert_eq!(k.witnesses[0].vector, w);
}

#[test]
fn quaternion_w_is_invariant_and_in_j() {
    let vp = q8();
    let piece = vp.q().piece(3).unwrap();
    let w = orbit_sum_w(piece);
    assert!(vp.q_invariants(3).unwrap().contains(&w).unwrap());
    assert!(ideal_j(&vp, 3).unwrap().contains(&w).unwrap());
}

#[test]
fn quaternion_certificate_for_2w() {
    let vp = q8();
    let g = vp.group();
    let minus_one = g.index_of(&perm(&[1, 0, 3, 2, 5, 4, 7, 6])).unwrap();
    let center = Subgroup::from_members(g, vec![g.identity(), minus_one]).unwrap();
    let (p1, p2, p3) = (vp.q().piece(1).unwrap(), vp.q().piece(2).unwrap(), vp.q().piece(3).unwrap());
    let action = vp.q().action(3).unwrap();

    let term = |a: usize, a_: usize, quad: &[(i64, &[usize])]| {
        let lin = poly(p1, &[(1, &[a]), (1, &[a_])]);
        multiply(p1, &lin, p2, &poly(p2, quad), p3).unwrap()
    };
    let t1 = term(X, X_, &[(1, &[Y, Z]), (1, &[Y_, Z_])]);
    let t2 = scale(&term(Y, Y_, &[(1, &[X_, Z]), (1, &[X, Z_])]), -1);
    let t3 = term(Z, Z_, &[(1, &[X, Y]), (1, &[X_, Y_])]);

    let i3 = ideal_i(&vp, 3).unwrap();
    let mut total = p3.zero();
    for t in [&t1, &t2, &t3] {
        let induced = induce(t, &center, g, action).unwrap();
        assert!(i3.contains(&induced).unwrap());
        total = add(&total, &induced);
    }
    let w = orbit_sum_w(p3);
    assert_eq!(total, scale(&w, 2));

    assert!(!i3.membership(&w).unwrap().is_member());
    match i3.membership(&scale(&w, 2)).unwrap() {
        Membership::Member { coefficients } => {
            let mut rebuilt = p3.zero();
            for (c, row) in coefficients.iter().zip(i3.basis_vectors()) {
                rebuilt = add(&rebuilt, &row.iter().map(|x| x * c).collect::<Vec<_>>());
            }
            assert_eq!(rebuilt, scale(&w, 2));
        }
        Membership::NonMember(r) => panic!("2w should lie in I_3: {r:?}"),
    }
}

#[test]
fn quaternion_low_degrees_have_no_kernel() {
    let vp = q8();
    for d in 1..=2 {
        assert!(base_change_kernel(&vp, d).unwrap().structure.is_trivial());
    }
}

/// `a_i^± ↦ ±a_i` from `Z^{2n}` onto `Z^n`.
fn signed_projection(n: usize) -> IntegerMatrix {
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..2 * n).map(|c| BigInt::from(if c == 2 * i { 1 } else if c == 2 * i + 1 { -1 } else { 0 })).collect())
        .collect();
    IntegerMatrix::from_rows(2 * n, &rows).unwrap()
}

/// Hand-written generators of `S(Q̂)_2^{S_n}` for the signed lattice:
/// `Σ (a_i^+)² + (a_i^-)²`, `Σ a_i^+ a_i^-`, and the two pair sums
/// `Σ_{i<j} a_i^ε a_j^δ + a_i^{-ε} a_j^{-δ}`.
fn signed_quadratic_invariants(n: usize, piece: &GradedPiece) -> Vec<Vec<BigInt>> {
    let plus = |i: usize| 2 * i;
    let minus = |i: usize| 2 * i + 1;
    let squares: Vec<(i64, Vec<usize>)> =
        (0..n).flat_map(|i| [(1, vec![plus(i), plus(i)]), (1, vec![minus(i), minus(i)])]).collect();
    let mixed: Vec<(i64, Vec<usize>)> = (0..n).map(|i| (1, vec![plus(i), minus(i)])).collect();
    let pairs = |same: bool| -> Vec<(i64, Vec<usize>)> {
        let mut t = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if same {
                    t.push((1, vec![plus(i), plus(j)]));
                    t.push((1, vec![minus(i), minus(j)]));
                } else {
                    t.push((1, vec![plus(i), minus(j)]));
                    t.push((1, vec![minus(i), plus(j)]));
                }
            }
        }
        t
    };
    [squares, mixed, pairs(true), pairs(false)]
        .iter()
        .map(|terms| {
            let refs: Vec<(i64, &[usize])> = terms.iter().map(|(c, v)| (*c, v.as_slice())).collect();
            poly(piece, &refs)
        })
        .collect()
}

fn check_signed_cokernel(n: usize) {
    let vp = signed_sn(n);
    let q2 = vp.q().piece(2).unwrap();
    let gens = signed_quadratic_invariants(n, q2);
    let expected_inv = Sublattice::from_generators(q2.dimension(), &gens).unwrap();
    assert_eq!(vp.q_invariants(2).unwrap(), expected_inv);

    // Independent computation in the coordinates a_1..a_n of T̂.
    let proj = sym_power_map(&signed_projection(n), 2);
    let t2 = monomial_basis(n, 2);
    let images: Vec<Vec<BigInt>> = gens.iter().map(|v| proj.mul_vec(v).unwrap()).collect();
    let image = Sublattice::from_generators(t2.dimension(), &images).unwrap();
    let sum_sq = poly(&t2, &(0..n).map(|i| (1, vec![i, i])).collect::<Vec<_>>().iter().map(|(c, v)| (*c, v.as_slice())).collect::<Vec<_>>());
    let pair_terms: Vec<(i64, Vec<usize>)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (1, vec![i, j]))).collect();
    let x_t = poly(&t2, &pair_terms.iter().map(|(c, v)| (*c, v.as_slice())).collect::<Vec<_>>());
    let t_inv = Sublattice::from_generators(t2.dimension(), &[sum_sq, x_t.clone()]).unwrap();
    assert!(!image.contains(&x_t).unwrap());
    assert!(image.contains(&scale(&x_t, 2)).unwrap());
    let oracle = quotient_structure(&image, &t_inv).unwrap();
    assert_eq!(oracle, AbelianGroupStructure::from_cyclic_orders([BigInt::from(2)]));

    assert_eq!(base_change_cokernel(&vp, 2).unwrap(), oracle);

    // The same element seen through the pipeline's own quotient basis.
    let lift: Vec<(i64, Vec<usize>)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (1, vec![2 * i, 2 * j]))).collect();
    let lift_v = poly(q2, &lift.iter().map(|(c, v)| (*c, v.as_slice())).collect::<Vec<_>>());
    let x_pipeline = vp.projection_power(2).unwrap().mul_vec(&lift_v).unwrap();
    let pipeline_image = cokernel_image(&vp, 2).unwrap();
    assert!(vp.t_invariants(2).unwrap().contains(&x_pipeline).unwrap());
    assert!(!pipeline_image.contains(&x_pipeline).unwrap());
    assert!(pipeline_image.contains(&scale(&x_pipeline, 2)).unwrap());
}

#[test]
fn signed_s4_cokernel_is_z2() {
    check_signed_cokernel(4);
}

#[test]
fn signed_s5_cokernel_is_z2() {
    check_signed_cokernel(5);
}

/// Invariants of `S_3` on `Z[x1,x2,x3]_d`: one orbit sum per multiset of exponents.
fn symmetric_invariants(piece: &GradedPiece) -> Vec<Vec<BigInt>> {
    let mut orbits: BTreeMap<Vec<u32>, Vec<BigInt>> = BTreeMap::new();
    for (k, m) in piece.basis().iter().enumerate() {
        let mut key = m.exponents().to_vec();
        key.sort();
        orbits.entry(key).or_insert_with(|| piece.zero())[k] = BigInt::from(1);
    }
    orbits.into_values().collect()
}

#[test]
fn norm_one_chow_ring_matches_quotient_by_e1() {
    let vp = norm_one_s3();
    let p1 = monomial_basis(3, 1);
    let e1 = poly(&p1, &[(1, &[0]), (1, &[1]), (1, &[2])]);
    for d in 1..=4 {
        let pd = monomial_basis(3, d);
        let inv = Sublattice::from_generators(pd.dimension(), &symmetric_invariants(&pd)).unwrap();
        let prev = monomial_basis(3, d - 1);
        let multiples: Vec<Vec<BigInt>> = symmetric_invariants(&prev)
            .iter()
            .map(|v| multiply(&p1, &e1, &prev, v, &pd).unwrap())
            .collect();
        let ideal = Sublattice::from_generators(pd.dimension(), &multiples).unwrap();
        let expected = quotient_structure(&ideal, &inv).unwrap();
        assert_eq!(chow_group(&vp, d).unwrap(), expected, "degree {d}");
        assert!(base_change_kernel(&vp, d).unwrap().structure.is_trivial());
        assert!(base_change_cokernel(&vp, d).unwrap().is_trivial());
    }
}

#[test]
fn degree_zero_chow_group_is_z() {
    assert_eq!(chow_group(&q8(), 0).unwrap(), AbelianGroupStructure::free(1));
}

