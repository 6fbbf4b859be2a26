use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exponent vector over a fixed ambient basis.
///
/// Ordered graded-lexicographically: lower degree first, then the larger
/// exponent vector first, so the degree-2 basis in two variables is
/// `x², xy, y²`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(rank: usize) -> Self {
        Monomial { exponents: vec![0; rank] }
    }

    pub fn variable(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        Monomial { exponents: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }

    /// Variable indices with multiplicity, ascending.
    pub fn factors(&self) -> Vec<usize> {
        self.exponents.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect()
    }

    /// Renders with the given variable names; `x^2*y` style.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

/// The degree-`d` slice of the symmetric algebra on `Z^rank`: the ordered
/// list of all monomials of that degree. Elements of the slice are integer
/// coordinate vectors over this basis.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    rank: usize,
    degree: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// All monomials of degree `d` in `n` variables, in graded-lex order.
pub fn monomial_basis(n: usize, d: usize) -> GradedPiece {
    fn fill(n: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == n {
            cur[pos] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            fill(n, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut basis = Vec::new();
    if n == 0 {
        if d == 0 {
            basis.push(Monomial::one(0));
        }
    } else {
        fill(n, 0, d as u32, &mut vec![0; n], &mut basis);
    }
    let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    GradedPiece { rank: n, degree: d, basis, index }
}

impl GradedPiece {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.basis[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.dimension()]
    }

    /// Coordinate vector of a single monomial.
    pub fn unit(&self, m: &Monomial) -> Result<Vec<BigInt>> {
        let i = self.index_of(m).ok_or(Error::DimensionMismatch { expected: self.degree, found: m.degree() })?;
        let mut v = self.zero();
        v[i] = BigInt::from(1);
        Ok(v)
    }

    /// Vector from `(coefficient, exponents)` terms; repeated monomials add up.
    pub fn from_terms(&self, terms: &[(i64, Vec<u32>)]) -> Result<Vec<BigInt>> {
        let mut v = self.zero();
        for (c, e) in terms {
            let m = Monomial::new(e.clone());
            let i = self.index_of(&m).ok_or(Error::DimensionMismatch { expected: self.degree, found: m.degree() })?;
            v[i] += *c;
        }
        Ok(v)
    }

    /// Nonzero terms of a coordinate vector.
    pub fn terms<'a>(&'a self, v: &'a [BigInt]) -> impl Iterator<Item = (&'a BigInt, &'a Monomial)> + 'a {
        v.iter().zip(&self.basis).filter(|(c, _)| !c.is_zero())
    }

    pub fn render(&self, v: &[BigInt], names: &[String]) -> String {
        let mut out = String::new();
        for (c, m) in self.terms(v) {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render(names);
            if abs == BigInt::from(1) && mono != "1" {
                out.push_str(&mono);
            } else if mono == "1" {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// Product of `u ∈ S_e` and `v ∈ S_f`, landing in `out = S_{e+f}`.
pub fn multiply(
    pu: &GradedPiece,
    u: &[BigInt],
    pv: &GradedPiece,
    v: &[BigInt],
    out: &GradedPiece,
) -> Result<Vec<BigInt>> {
    if pu.rank != pv.rank || pu.rank != out.rank {
        return Err(Error::DimensionMismatch { expected: pu.rank, found: pv.rank });
    }
    if out.degree != pu.degree + pv.degree {
        return Err(Error::DimensionMismatch { expected: pu.degree + pv.degree, found: out.degree });
    }
    if u.len() != pu.dimension() || v.len() != pv.dimension() {
        return Err(Error::DimensionMismatch { expected: pu.dimension(), found: u.len() });
    }
    let mut w = out.zero();
    for (a, ma) in pu.terms(u) {
        for (b, mb) in pv.terms(v) {
            let i = out.index_of(&ma.mul(mb)).expect("product degree matches");
            w[i] += a * b;
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int_vector;

    #[test]
    fn bases() {
        let p = monomial_basis(2, 2);
        let exps: Vec<&[u32]> = p.basis().iter().map(Monomial::exponents).collect();
        assert_eq!(exps, vec![&[2, 0][..], &[1, 1], &[0, 2]]);
        // C(10, 3)
        assert_eq!(monomial_basis(8, 3).dimension(), 120);
        let p = monomial_basis(5, 0);
        assert_eq!(p.dimension(), 1);
        assert_eq!(p.monomial(0).degree(), 0);
    }

    #[test]
    fn basis_is_sorted_and_distinct() {
        let p = monomial_basis(4, 3);
        assert!(p.basis().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn products() {
        let p1 = monomial_basis(2, 1);
        let p2 = monomial_basis(2, 2);
        let x = int_vector(&[1, 0]);
        let y = int_vector(&[0, 1]);
        assert_eq!(multiply(&p1, &x, &p1, &y, &p2).unwrap(), int_vector(&[0, 1, 0]));
        let s = int_vector(&[1, 1]);
        let d = int_vector(&[1, -1]);
        assert_eq!(multiply(&p1, &s, &p1, &d, &p2).unwrap(), int_vector(&[1, 0, -1]));
        assert_eq!(multiply(&p1, &s, &p1, &s, &p2).unwrap(), int_vector(&[1, 2, 1]));
        assert!(multiply(&p1, &s, &p1, &s, &p1).is_err());
    }

    #[test]
    fn rendering() {
        let p = monomial_basis(2, 2);
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(p.render(&int_vector(&[1, -2, 0]), &names), "a^2 - 2*a*b");
    }
}
