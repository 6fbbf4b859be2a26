use std::collections::{HashMap, VecDeque};

use super::permutation::SignedPermutation;
use crate::error::{Error, Result};

pub const DEFAULT_GROUP_BOUND: usize = 256;

/// A finite group of signed permutations, stored as its full element list
/// with a multiplication table.
///
/// Element 0 is the identity. Elements are ordered breadth-first from the
/// identity, extending by generators in the order given.
#[derive(Clone, Debug)]
pub struct FiniteActionGroup {
    degree: usize,
    generators: Vec<usize>,
    elements: Vec<SignedPermutation>,
    lookup: HashMap<SignedPermutation, usize>,
    table: Vec<u32>,
    inverses: Vec<usize>,
}

/// Closes `generators` under composition. Fails once more than `bound`
/// elements have been produced.
pub fn close_group(degree: usize, generators: &[SignedPermutation], bound: usize) -> Result<FiniteActionGroup> {
    FiniteActionGroup::generate(degree, generators, bound)
}

impl FiniteActionGroup {
    pub fn generate(degree: usize, generators: &[SignedPermutation], bound: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g:?} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let identity = SignedPermutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in generators {
                let h = s.compose(&elements[i]);
                if !lookup.contains_key(&h) {
                    if elements.len() == bound {
                        return Err(Error::GroupTooLarge { bound });
                    }
                    lookup.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = lookup[&elements[a].compose(&elements[b])] as u32;
            }
        }
        let inverses = (0..n).map(|a| (0..n).find(|&b| table[a * n + b] == 0).expect("finite group")).collect();
        let generators = generators.iter().map(|g| lookup[g]).collect();
        Ok(FiniteActionGroup { degree, generators, elements, lookup, table, inverses })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, &[], 1).expect("trivial group fits")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SignedPermutation {
        &self.elements[i]
    }

    /// Element indices of the generators, in input order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, g: &SignedPermutation) -> Option<usize> {
        self.lookup.get(g).copied()
    }

    /// Index of `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g a g⁻¹`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inverse(g))
    }

    pub fn is_unsigned(&self) -> bool {
        self.elements.iter().all(SignedPermutation::is_unsigned)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}
