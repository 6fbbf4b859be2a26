use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::groups::{close_group, FiniteActionGroup, SignedPermutation};

pub const MAX_DEGREE: usize = 8;
/// Every group of order below 60 is solvable, which the enumeration needs.
pub const MAX_ORDER: usize = 59;

/// Permutation of at most 16 points, four bits per image.
type Packed = u64;

fn get(p: Packed, i: usize) -> usize {
    (p >> (4 * i) & 0xF) as usize
}

fn pack(images: &[usize]) -> Packed {
    images.iter().enumerate().fold(0, |acc, (i, &x)| acc | (x as u64) << (4 * i))
}

fn identity(n: usize) -> Packed {
    pack(&(0..n).collect::<Vec<_>>())
}

/// `a ∘ b`.
fn compose(a: Packed, b: Packed, n: usize) -> Packed {
    (0..n).fold(0, |acc, i| acc | (get(a, get(b, i)) as u64) << (4 * i))
}

fn inverse(a: Packed, n: usize) -> Packed {
    (0..n).fold(0, |acc, i| acc | (i as u64) << (4 * get(a, i)))
}

fn all_permutations(n: usize) -> Vec<Packed> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Packed>) {
        if cur.len() == n {
            out.push(pack(cur));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Closure of `gens`, or `None` once it exceeds `limit` elements. Sorted.
fn closure(gens: &[Packed], n: usize, limit: usize) -> Option<Vec<Packed>> {
    let mut elems = vec![identity(n)];
    let mut seen: HashSet<Packed> = elems.iter().copied().collect();
    let mut i = 0;
    while i < elems.len() {
        for &s in gens {
            let h = compose(s, elems[i], n);
            if seen.insert(h) {
                if elems.len() == limit {
                    return None;
                }
                elems.push(h);
            }
        }
        i += 1;
    }
    elems.sort_unstable();
    Some(elems)
}

fn cycle_type(p: Packed, n: usize) -> Vec<u8> {
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = get(p, j);
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable();
    lens
}

fn orbit_lengths(gens: &[Packed], n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut stack = vec![i];
        seen[i] = true;
        let mut len = 0;
        while let Some(x) = stack.pop() {
            len += 1;
            for &g in gens {
                let y = get(g, x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        lens.push(len);
    }
    lens.sort_unstable();
    lens
}

/// Conjugation invariants: order, cycle-type census, orbit lengths.
type ClassKey = (usize, Vec<(Vec<u8>, usize)>, Vec<usize>);

#[derive(Clone, Debug)]
struct Class {
    elements: Vec<Packed>,
    gens: Vec<Packed>,
}

impl Class {
    fn contains(&self, p: Packed) -> bool {
        self.elements.binary_search(&p).is_ok()
    }

    fn key(&self, n: usize) -> ClassKey {
        let mut census: HashMap<Vec<u8>, usize> = HashMap::new();
        for &e in &self.elements {
            *census.entry(cycle_type(e, n)).or_default() += 1;
        }
        let mut census: Vec<_> = census.into_iter().collect();
        census.sort();
        (self.elements.len(), census, orbit_lengths(&self.gens, n))
    }

    /// `g K g⁻¹ = K`, checked on generators.
    fn normalized_by(&self, g: Packed, gi: Packed, n: usize) -> bool {
        self.gens.iter().all(|&h| self.contains(compose(compose(g, h, n), gi, n)))
    }
}

/// Representatives of the conjugacy classes in `S_n` of subgroups of order
/// at most `max_order`.
///
/// Each subgroup of a solvable group sits on top of a chain of subgroups,
/// each normal of prime index in the next. Starting from the trivial group,
/// every representative `H` is extended by the elements `g` of its
/// normalizer in `S_n` with `g^p ∈ H` for a prime `p`; new groups are kept
/// up to conjugacy, compared first by cheap invariants and then by search.
fn subgroup_classes(n: usize, max_order: usize) -> Vec<Class> {
    let sym = all_permutations(n);
    let inverses: Vec<Packed> = sym.iter().map(|&g| inverse(g, n)).collect();
    let id = identity(n);
    let mut classes = vec![Class { elements: vec![id], gens: Vec::new() }];
    let mut by_key: HashMap<ClassKey, Vec<usize>> = HashMap::new();
    by_key.insert(classes[0].key(n), vec![0]);
    let mut i = 0;
    while i < classes.len() {
        let h = classes[i].clone();
        let mut tried: HashSet<Vec<Packed>> = HashSet::new();
        for (k, &g) in sym.iter().enumerate() {
            if h.contains(g) || !h.normalized_by(g, inverses[k], n) {
                continue;
            }
            // Order of g modulo H must be prime.
            let mut power = g;
            let mut m = 1;
            while !h.contains(power) {
                power = compose(power, g, n);
                m += 1;
            }
            if !is_prime(m) || h.elements.len() * m > max_order {
                continue;
            }
            let mut gens = h.gens.clone();
            gens.push(g);
            let Some(elements) = closure(&gens, n, max_order) else { continue };
            if !tried.insert(elements.clone()) {
                continue;
            }
            let candidate = Class { elements, gens };
            let key = candidate.key(n);
            let known = by_key.get(&key).is_some_and(|idxs| {
                idxs.iter().any(|&j| conjugate_in_sym(&candidate, &classes[j], &sym, &inverses, n))
            });
            if !known {
                by_key.entry(key).or_default().push(classes.len());
                classes.push(candidate);
            }
        }
        i += 1;
    }
    classes
}

fn is_prime(m: usize) -> bool {
    m >= 2 && (2..m).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d))
}

fn conjugate_in_sym(a: &Class, b: &Class, sym: &[Packed], inverses: &[Packed], n: usize) -> bool {
    sym.iter().zip(inverses).any(|(&g, &gi)| a.gens.iter().all(|&h| b.contains(compose(compose(g, h, n), gi, n))))
}

/// Transitive subgroups of `S_n` of order at most `max_order`, one per
/// conjugacy class, ordered by group order. `n ≤ 8`, `max_order < 60`.
pub fn transitive_groups(n: usize, max_order: usize) -> Result<Vec<FiniteActionGroup>> {
    if n > MAX_DEGREE {
        return Err(Error::RankTooLarge { rank: n, max: MAX_DEGREE });
    }
    if max_order > MAX_ORDER {
        return Err(Error::GroupTooLarge { bound: MAX_ORDER });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut transitive: Vec<Class> =
        subgroup_classes(n, max_order).into_iter().filter(|c| orbit_lengths(&c.gens, n) == vec![n]).collect();
    transitive.sort_by_key(|c| (c.elements.len(), c.elements.clone()));
    transitive
        .iter()
        .map(|c| {
            let gens: Vec<SignedPermutation> = c
                .gens
                .iter()
                .map(|&g| SignedPermutation::from_images((0..n).map(|i| get(g, i)).collect()).expect("packed permutation"))
                .collect();
            close_group(n, &gens, max_order.max(1))
        })
        .collect()
}
