use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::IntegerMatrix;

/// A permutation of `{0, …, n-1}` with a sign attached to each point.
///
/// Acts on a lattice basis by `g · e_i = sign[i] · e_{image[i]}`, and
/// composes as `(g·h)(i) = g(h(i))` with `sign_{g·h}(i) = sign_g(h(i)) · sign_h(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    image: Vec<u32>,
    sign: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(image: Vec<usize>, sign: Vec<i8>) -> Result<Self> {
        let n = image.len();
        if sign.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "sign vector has length {}, permutation has degree {n}",
                sign.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection of 0..{n}")));
            }
        }
        if let Some(s) = sign.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidPermutation(format!("sign {s} is not ±1")));
        }
        Ok(SignedPermutation { image: image.into_iter().map(|x| x as u32).collect(), sign })
    }

    /// Unsigned permutation.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        Self::new(image, vec![1; n])
    }

    /// Permutation given in 1-based one-line notation.
    pub fn from_one_line(one_based: &[usize], sign: Vec<i8>) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(Error::InvalidPermutation("one-line notation is 1-based; found 0".into()));
        }
        Self::new(one_based.iter().map(|&x| x - 1).collect(), sign)
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { image: (0..n as u32).collect(), sign: vec![1; n] }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image_of(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn sign_of(&self, i: usize) -> i8 {
        self.sign[i]
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().map(|&x| x as usize)
    }

    pub fn signs(&self) -> &[i8] {
        &self.sign
    }

    pub fn is_unsigned(&self) -> bool {
        self.sign.iter().all(|&s| s == 1)
    }

    pub fn is_identity(&self) -> bool {
        self.is_unsigned() && self.image.iter().enumerate().all(|(i, &x)| x as usize == i)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.degree(), other.degree());
        let image = other.image.iter().map(|&h| self.image[h as usize]).collect();
        let sign = other.image.iter().zip(&other.sign).map(|(&h, &s)| self.sign[h as usize] * s).collect();
        SignedPermutation { image, sign }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.degree();
        let mut image = vec![0u32; n];
        let mut sign = vec![1i8; n];
        for i in 0..n {
            let j = self.image[i] as usize;
            image[j] = i as u32;
            sign[j] = self.sign[i];
        }
        SignedPermutation { image, sign }
    }

    /// Matrix with column `i` equal to `sign[i] · e_{image[i]}`.
    pub fn to_matrix(&self) -> IntegerMatrix {
        let n = self.degree();
        let mut data = vec![BigInt::from(0); n * n];
        for i in 0..n {
            data[self.image[i] as usize * n + i] = BigInt::from(self.sign[i]);
        }
        IntegerMatrix::new(n, n, data).expect("square")
    }

    /// Recognises a signed permutation matrix (one ±1 per column and row).
    pub fn from_matrix(m: &IntegerMatrix) -> Option<SignedPermutation> {
        if m.rows() != m.cols() {
            return None;
        }
        let n = m.rows();
        let mut image = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        for j in 0..n {
            let mut hit = None;
            for i in 0..n {
                let x = m.get(i, j);
                if *x == BigInt::from(0) {
                    continue;
                }
                if hit.is_some() {
                    return None;
                }
                let s = if *x == BigInt::from(1) {
                    1
                } else if *x == BigInt::from(-1) {
                    -1
                } else {
                    return None;
                };
                hit = Some((i, s));
            }
            let (i, s) = hit?;
            image.push(i);
            sign.push(s);
        }
        SignedPermutation::new(image, sign).ok()
    }

    /// Applies the permutation to a coordinate vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::from(0); v.len()];
        for (i, x) in v.iter().enumerate() {
            let j = self.image[i] as usize;
            out[j] = if self.sign[i] < 0 { -x } else { x.clone() };
        }
        out
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.degree() {
            if i > 0 {
                write!(f, " ")?;
            }
            let s = if self.sign[i] < 0 { "-" } else { "" };
            write!(f, "{s}{}", self.image[i] + 1)?;
        }
        write!(f, "]")
    }
}
