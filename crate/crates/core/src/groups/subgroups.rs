use std::collections::HashSet;

use super::group::FiniteActionGroup;

/// A subgroup of a [`FiniteActionGroup`], given by sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

/// Dense membership bitmap over the parent's element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn is_superset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

/// Closure of `seed` under multiplication; finite, so this is a subgroup.
fn closure_bits(g: &FiniteActionGroup, seed: &[usize]) -> (Bits, Vec<usize>) {
    let mut bits = Bits::empty(g.order());
    let mut list = vec![0];
    bits.set(0);
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in seed {
            let y = g.mul(x, s);
            if !bits.get(y) {
                bits.set(y);
                list.push(y);
            }
        }
        i += 1;
    }
    (bits, list)
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(g: &FiniteActionGroup) -> Self {
        Subgroup { members: (0..g.order()).collect() }
    }

    /// Subgroup generated by the given element indices.
    pub fn generated_by(g: &FiniteActionGroup, gens: &[usize]) -> Self {
        let (_, mut members) = closure_bits(g, gens);
        members.sort_unstable();
        Subgroup { members }
    }

    /// Accepts an explicit member list if it is closed under composition.
    pub fn from_members(g: &FiniteActionGroup, mut members: Vec<usize>) -> Option<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) || members.iter().any(|&m| m >= g.order()) {
            return None;
        }
        let set: HashSet<usize> = members.iter().copied().collect();
        let closed = members.iter().all(|&a| members.iter().all(|&b| set.contains(&g.mul(a, b))));
        closed.then_some(Subgroup { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// A small generating set, picked greedily in index order.
    pub fn generators(&self, g: &FiniteActionGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Bits::empty(g.order());
        span.set(0);
        for &m in &self.members {
            if !span.get(m) {
                gens.push(m);
                span = closure_bits(g, &gens).0;
            }
        }
        gens
    }

    /// `x H x⁻¹`.
    pub fn conjugate_by(&self, g: &FiniteActionGroup, x: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&h| g.conjugate(h, x)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    fn bits(&self, n: usize) -> Bits {
        let mut b = Bits::empty(n);
        for &m in &self.members {
            b.set(m);
        }
        b
    }
}

/// Every subgroup of `g`: all cyclic subgroups, then joins with cyclic
/// subgroups until no new subgroup appears. Sorted by order, then members.
pub fn all_subgroups(g: &FiniteActionGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut cyclic: Vec<(usize, Bits)> = Vec::new();
    let mut found: Vec<(Bits, Vec<usize>)> = Vec::new();
    for x in 0..n {
        let (bits, list) = closure_bits(g, &[x]);
        if seen.insert(bits.clone()) {
            cyclic.push((x, bits.clone()));
            found.push((bits, list));
        }
    }
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            let base = found[idx].0.clone();
            let base_list = found[idx].1.clone();
            for (x, cbits) in &cyclic {
                if base.is_superset(cbits) {
                    continue;
                }
                let mut seed = base_list.clone();
                seed.push(*x);
                let (bits, list) = closure_bits(g, &seed);
                if seen.insert(bits.clone()) {
                    next.push(found.len());
                    found.push((bits, list));
                }
            }
        }
        frontier = next;
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|(_, mut list)| {
            list.sort_unstable();
            Subgroup { members: list }
        })
        .collect();
    subs.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    subs
}

/// One representative per conjugacy class of subgroups, including the
/// trivial subgroup and `g` itself. Each representative is the class member
/// that comes first in (order, member list) order, and classes are listed
/// in that order as well.
pub fn all_subgroups_up_to_conjugacy(g: &FiniteActionGroup) -> Vec<Subgroup> {
    partition_by_conjugacy(g, all_subgroups(g)).into_iter().map(|class| class[0].clone()).collect()
}

/// Groups the given subgroups into conjugacy classes. Input order within a
/// class is preserved; classes are ordered by their first member.
pub fn partition_by_conjugacy(g: &FiniteActionGroup, mut subs: Vec<Subgroup>) -> Vec<Vec<Subgroup>> {
    subs.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    let n = g.order();
    let mut assigned: HashSet<Bits> = HashSet::new();
    let mut classes: Vec<(HashSet<Bits>, Vec<Subgroup>)> = Vec::new();
    for h in subs {
        let hb = h.bits(n);
        if assigned.contains(&hb) {
            if let Some(c) = classes.iter_mut().find(|(set, _)| set.contains(&hb)) {
                c.1.push(h);
            }
            continue;
        }
        let conj: HashSet<Bits> = (0..n).map(|x| h.conjugate_by(g, x).bits(n)).collect();
        assigned.extend(conj.iter().cloned());
        classes.push((conj, vec![h]));
    }
    classes.into_iter().map(|(_, c)| c).collect()
}

/// One representative per left coset `xH`: the smallest element index in it.
pub fn coset_representatives(g: &FiniteActionGroup, h: &Subgroup) -> Vec<usize> {
    let n = g.order();
    let mut covered = vec![false; n];
    let mut reps = Vec::with_capacity(n / h.order());
    for x in 0..n {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &m in h.members() {
            covered[g.mul(x, m)] = true;
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{close_group, SignedPermutation};

    fn s3() -> FiniteActionGroup {
        let c = SignedPermutation::from_images(vec![1, 2, 0]).unwrap();
        let t = SignedPermutation::from_images(vec![1, 0, 2]).unwrap();
        close_group(3, &[c, t], 256).unwrap()
    }

    #[test]
    fn trivial_group_has_one_class() {
        let g = FiniteActionGroup::trivial(3);
        assert_eq!(all_subgroups_up_to_conjugacy(&g), vec![Subgroup::trivial()]);
    }

    #[test]
    fn s3_subgroups() {
        let g = s3();
        assert_eq!(all_subgroups(&g).len(), 6);
        let classes = all_subgroups_up_to_conjugacy(&g);
        assert_eq!(classes.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn cosets_of_a3() {
        let g = s3();
        let a3 = all_subgroups(&g).into_iter().find(|h| h.order() == 3).unwrap();
        let reps = coset_representatives(&g, &a3);
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0], 0);
        assert_eq!(coset_representatives(&g, &Subgroup::whole(&g)), vec![0]);
        assert_eq!(coset_representatives(&g, &Subgroup::trivial()), (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn generators_regenerate() {
        let g = s3();
        for h in all_subgroups(&g) {
            assert_eq!(Subgroup::generated_by(&g, &h.generators(&g)), h);
        }
    }
}
