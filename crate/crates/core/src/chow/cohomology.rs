use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groups::{FiniteActionGroup, MatrixAction};
use crate::lattice::{kernel_basis, quotient_structure, AbelianGroupStructure, IntegerMatrix, Membership, Sublattice};
use crate::symalg::SymmetricAction;

/// Generators used for the cocycle presentation, never empty for a
/// nontrivial group.
fn presentation_generators(group: &FiniteActionGroup) -> Vec<usize> {
    let gens: Vec<usize> = group.generator_indices().iter().copied().filter(|&s| s != group.identity()).collect();
    if gens.is_empty() && group.order() > 1 {
        (1..group.order()).collect()
    } else {
        gens
    }
}

/// `H^1(G, M)` for `M = Z^m` with `G` acting through `images` (one matrix
/// per generator in `gens`, same order).
///
/// A crossed homomorphism is fixed by its values on generators, so the
/// unknowns are `f(s)` for each generator `s`. Walking a breadth-first
/// spanning tree of the Cayley graph expresses every `f(g)` linearly in
/// them via `f(s·g) = f(s) + s·f(g)`; each remaining edge of the graph is
/// one linear constraint. Coboundaries are `(s·m - m)_s`.
fn h1_from_generators(group: &FiniteActionGroup, gens: &[usize], images: &[IntegerMatrix], m: usize) -> Result<AbelianGroupStructure> {
    let k = gens.len();
    let width = k * m;
    if width == 0 {
        return Ok(AbelianGroupStructure::trivial());
    }
    // coeff[g] is the m × km matrix giving f(g) in terms of the unknowns.
    let mut coeff: Vec<Option<IntegerMatrix>> = vec![None; group.order()];
    coeff[group.identity()] = Some(IntegerMatrix::zeros(m, width));
    let mut queue = VecDeque::from([group.identity()]);
    let mut constraints: Vec<Vec<BigInt>> = Vec::new();
    let step = |g_coeff: &IntegerMatrix, si: usize| -> Result<IntegerMatrix> {
        let mut c = images[si].mul(g_coeff)?;
        for r in 0..m {
            *c.get_mut(r, si * m + r) += 1;
        }
        Ok(c)
    };
    while let Some(g) = queue.pop_front() {
        let current = coeff[g].clone().expect("queued elements are reached");
        for (si, &s) in gens.iter().enumerate() {
            let h = group.mul(s, g);
            let candidate = step(&current, si)?;
            match &coeff[h] {
                None => {
                    coeff[h] = Some(candidate);
                    queue.push_back(h);
                }
                Some(existing) => {
                    let diff = candidate.sub(existing)?;
                    constraints.extend(diff.row_vectors().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
                }
            }
        }
    }
    let cocycles = if constraints.is_empty() {
        Sublattice::full(width)
    } else {
        let reduced = Sublattice::from_generators(width, &constraints)?;
        kernel_basis(reduced.basis())
    };
    let mut boundary = Vec::with_capacity(m);
    for j in 0..m {
        let mut v = vec![BigInt::zero(); width];
        for (si, img) in images.iter().enumerate() {
            for r in 0..m {
                let mut x = img.get(r, j).clone();
                if r == j {
                    x -= 1;
                }
                v[si * m + r] = x;
            }
        }
        boundary.push(v);
    }
    let coboundaries = Sublattice::from_generators(width, &boundary)?;
    quotient_structure(&coboundaries, &cocycles).map_err(|_| Error::InvariantViolation("a coboundary failed the cocycle relations".into()))
}

/// First cohomology `H^1(G, M)` of the lattice `M = Z^rank` with the given
/// action, via the generator presentation of crossed homomorphisms.
pub fn h1(group: &FiniteActionGroup, module: &MatrixAction) -> Result<AbelianGroupStructure> {
    let gens = presentation_generators(group);
    let images: Vec<IntegerMatrix> = gens.iter().map(|&s| module.image(s).clone()).collect();
    h1_from_generators(group, &gens, &images, module.rank())
}

/// `H^1(G, M)` straight from the definition: `Z^1` is the kernel of the
/// cocycle relation over all pairs `(g, h)` inside the maps `G → M`, and
/// `B^1` is the image of `m ↦ (g ↦ g·m - m)`. Cost grows like `|G|^2`, so
/// the group order is bounded by `max_order`.
pub fn h1_full_cochains(group: &FiniteActionGroup, module: &MatrixAction, max_order: usize) -> Result<AbelianGroupStructure> {
    let n = group.order();
    if n > max_order {
        return Err(Error::GroupTooLarge { bound: max_order });
    }
    let m = module.rank();
    let width = n * m;
    if width == 0 {
        return Ok(AbelianGroupStructure::trivial());
    }
    // f(gh) - f(g) - g·f(h) = 0
    let mut rows = Vec::with_capacity(n * n * m);
    for g in 0..n {
        let rho = module.image(g);
        for h in 0..n {
            let gh = group.mul(g, h);
            for r in 0..m {
                let mut row = vec![BigInt::zero(); width];
                row[gh * m + r] += 1;
                row[g * m + r] -= 1;
                for c in 0..m {
                    row[h * m + c] -= rho.get(r, c);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let relations = Sublattice::from_generators(width, &rows)?;
    let cocycles = kernel_basis(relations.basis());
    let mut boundary = Vec::with_capacity(m);
    for j in 0..m {
        let mut v = vec![BigInt::zero(); width];
        for g in 0..n {
            for r in 0..m {
                let mut x = module.image(g).get(r, j).clone();
                if r == j {
                    x -= 1;
                }
                v[g * m + r] = x;
            }
        }
        boundary.push(v);
    }
    let coboundaries = Sublattice::from_generators(width, &boundary)?;
    quotient_structure(&coboundaries, &cocycles)
}

/// Matrices of the generators of `group` on a stable sublattice `l`, in
/// the Hermite basis of `l`.
fn restricted_generator_images(
    gens: &[usize],
    ambient: &SymmetricAction,
    l: &Sublattice,
) -> Result<Vec<IntegerMatrix>> {
    let basis = l.basis_vectors();
    let mut images = Vec::with_capacity(gens.len());
    for &s in gens {
        let mut columns = Vec::with_capacity(basis.len());
        for b in &basis {
            match l.membership(&ambient.apply(s, b))? {
                Membership::Member { coefficients } => columns.push(coefficients),
                Membership::NonMember(_) => return Err(Error::NotStable { element: s }),
            }
        }
        images.push(IntegerMatrix::from_columns(basis.len(), &columns)?);
    }
    Ok(images)
}

/// `H^1(G, L)` for a `G`-stable sublattice `L` of a graded piece.
pub fn h1_of_sublattice(group: &FiniteActionGroup, ambient: &SymmetricAction, l: &Sublattice) -> Result<AbelianGroupStructure> {
    let gens = presentation_generators(group);
    let images = restricted_generator_images(&gens, ambient, l)?;
    h1_from_generators(group, &gens, &images, l.rank())
}
