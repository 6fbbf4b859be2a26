use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groups::{FiniteActionGroup, Subgroup};

pub const MAX_POINTS: usize = 16;

/// A group acting on `{0, …, N-1}` by plain permutations.
#[derive(Clone, Debug)]
pub struct GammaSet {
    group: FiniteActionGroup,
}

impl GammaSet {
    pub fn new(group: FiniteActionGroup) -> Result<Self> {
        if let Some(g) = (0..group.order()).find(|&g| !group.element(g).is_unsigned()) {
            return Err(Error::SignedGammaSet { element: g });
        }
        if group.degree() > MAX_POINTS {
            return Err(Error::RankTooLarge { rank: group.degree(), max: MAX_POINTS });
        }
        Ok(GammaSet { group })
    }

    pub fn group(&self) -> &FiniteActionGroup {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.group.degree()
    }

    fn image_mask(&self, g: usize, mask: u32) -> u32 {
        let el = self.group.element(g);
        (0..self.points()).filter(|&i| mask >> i & 1 == 1).fold(0, |acc, i| acc | 1 << el.image_of(i))
    }

    /// Elements of `over` fixing `mask` as a set.
    fn set_stabilizer(&self, mask: u32, over: &Subgroup) -> Subgroup {
        let members = over.members().iter().copied().filter(|&g| self.image_mask(g, mask) == mask).collect();
        Subgroup::from_members(&self.group, members).expect("a set stabilizer is a subgroup")
    }

    fn point_stabilizer(&self, point: usize, over: &Subgroup) -> Subgroup {
        let members =
            over.members().iter().copied().filter(|&g| self.group.element(g).image_of(point) == point).collect();
        Subgroup::from_members(&self.group, members).expect("a point stabilizer is a subgroup")
    }

    /// Orbits of `over` on the points of `mask`, each with the stabilizer
    /// of its least point, ordered by least point.
    pub fn blocks(&self, mask: u32, over: &Subgroup) -> Vec<Block> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for i in 0..self.points() {
            if mask >> i & 1 == 0 || seen >> i & 1 == 1 {
                continue;
            }
            let mut orbit: Vec<usize> = over.members().iter().map(|&g| self.group.element(g).image_of(i)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &j in &orbit {
                seen |= 1 << j;
            }
            out.push(Block { points: orbit, stabilizer: self.point_stabilizer(i, over) });
        }
        out
    }
}

/// One orbit of an acting subgroup on a set of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub points: Vec<usize>,
    /// Stabilizer of `points[0]`.
    pub stabilizer: Subgroup,
}

/// One `Γ`-orbit of `p`-element subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumDescriptor {
    /// Lexicographically least subset of the orbit, ascending.
    pub subset: Vec<usize>,
    pub orbit_size: usize,
    /// `S_J`, the set stabilizer of `subset`.
    pub stabilizer: Subgroup,
    /// Orbits of `S_J` on `subset`.
    pub blocks: Vec<Block>,
}

fn mask_of(points: &[usize]) -> u32 {
    points.iter().fold(0, |acc, &i| acc | 1 << i)
}

fn points_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// All `p`-subsets of `{0..n}`, as bitmasks in increasing order.
fn subsets(n: usize, p: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |m| m.count_ones() as usize == p)
}

/// One descriptor per `Γ`-orbit of `p`-subsets, ordered by representative.
pub fn strata(gs: &GammaSet, p: usize) -> Result<Vec<StratumDescriptor>> {
    let n = gs.points();
    if p > n {
        return Err(Error::DimensionMismatch { expected: n, found: p });
    }
    let whole = Subgroup::whole(gs.group());
    let mut visited = std::collections::HashSet::new();
    let mut reps: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for mask in subsets(n, p) {
        if visited.contains(&mask) {
            continue;
        }
        let mut orbit: Vec<u32> = (0..gs.group().order()).map(|g| gs.image_mask(g, mask)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        let least = orbit.iter().map(|&m| points_of(m, n)).min().expect("orbits are nonempty");
        visited.extend(orbit.iter().copied());
        reps.insert(least, orbit.len());
    }
    Ok(reps
        .into_iter()
        .map(|(subset, orbit_size)| {
            let mask = mask_of(&subset);
            let stabilizer = gs.set_stabilizer(mask, &whole);
            let blocks = gs.blocks(mask, &stabilizer);
            StratumDescriptor { subset, orbit_size, stabilizer, blocks }
        })
        .collect())
}

/// A transitive component of one side of the comparison, matched to a
/// component of the other side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatch {
    /// Points of the component coming from `J` or its complement.
    pub left: Vec<usize>,
    /// Points of the `S_J`-orbit on `{0..N}` it was matched with.
    pub right: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma12Report {
    pub passed: bool,
    pub stabilizer: Subgroup,
    pub matches: Vec<BlockMatch>,
    pub details: String,
}

/// Compares two `S_J`-sets: the blocks of `J` and of its complement, both
/// read off the stratum descriptors of their orbits and transported back
/// to `J`, against the orbits of `S_J` on all points. Transitive
/// components are matched when their point stabilizers are conjugate in
/// `S_J`.
pub fn lemma12_check(gs: &GammaSet, subset: &[usize]) -> Result<Lemma12Report> {
    let n = gs.points();
    if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad + 1 });
    }
    let group = gs.group();
    let mask = mask_of(subset);
    let complement = !mask & ((1u64 << n) - 1) as u32;
    let whole = Subgroup::whole(group);
    let sj = gs.set_stabilizer(mask, &whole);

    let mut left: Vec<Block> = Vec::new();
    for part in [mask, complement] {
        let size = part.count_ones() as usize;
        let descriptor = strata(gs, size)?
            .into_iter()
            .find(|s| (0..group.order()).any(|g| gs.image_mask(g, part) == mask_of(&s.subset)))
            .ok_or_else(|| Error::InvariantViolation("subset missing from its strata".into()))?;
        // x sends `part` to the representative; pull the blocks back by x⁻¹.
        let rep = mask_of(&descriptor.subset);
        let x = (0..group.order()).find(|&g| gs.image_mask(g, part) == rep).expect("found above");
        let xi = group.inverse(x);
        for b in &descriptor.blocks {
            let mut points: Vec<usize> = b.points.iter().map(|&p| group.element(xi).image_of(p)).collect();
            points.sort_unstable();
            left.push(Block { points, stabilizer: b.stabilizer.conjugate_by(group, xi) });
        }
    }
    let right = gs.blocks(((1u64 << n) - 1) as u32, &sj);

    let mut used = vec![false; right.len()];
    let mut matches = Vec::new();
    let mut failures = Vec::new();
    for b in &left {
        let found = right
            .iter()
            .enumerate()
            .find(|(k, r)| !used[*k] && r.points.len() == b.points.len() && conjugate_within(group, &sj, &b.stabilizer, &r.stabilizer));
        match found {
            Some((k, r)) => {
                used[k] = true;
                matches.push(BlockMatch { left: b.points.clone(), right: r.points.clone() });
            }
            None => failures.push(format!("no partner for block {:?}", b.points)),
        }
    }
    for (k, r) in right.iter().enumerate() {
        if !used[k] {
            failures.push(format!("orbit {:?} left unmatched", r.points));
        }
    }
    let passed = failures.is_empty();
    let details = if passed {
        format!("{} components matched", matches.len())
    } else {
        failures.join("; ")
    };
    Ok(Lemma12Report { passed, stabilizer: sj, matches, details })
}

/// Whether `a` and `b` are conjugate by an element of `within`.
fn conjugate_within(group: &FiniteActionGroup, within: &Subgroup, a: &Subgroup, b: &Subgroup) -> bool {
    a.order() == b.order() && within.members().iter().any(|&s| &a.conjugate_by(group, s) == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{close_group, SignedPermutation};

    fn swap() -> GammaSet {
        GammaSet::new(close_group(2, &[SignedPermutation::from_images(vec![1, 0]).unwrap()], 4).unwrap()).unwrap()
    }

    #[test]
    fn quadratic_strata() {
        let gs = swap();
        let counts: Vec<usize> = (0..=2).map(|p| strata(&gs, p).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1]);
        let one = &strata(&gs, 1).unwrap()[0];
        assert_eq!(one.subset, vec![0]);
        assert_eq!(one.orbit_size, 2);
        assert!(one.stabilizer.is_trivial());
        let empty = &strata(&gs, 0).unwrap()[0];
        assert!(empty.blocks.is_empty());
        assert_eq!(empty.stabilizer.order(), 2);
    }

    #[test]
    fn signed_sets_rejected() {
        let g = close_group(1, &[SignedPermutation::new(vec![0], vec![-1]).unwrap()], 4).unwrap();
        assert!(matches!(GammaSet::new(g), Err(Error::SignedGammaSet { .. })));
    }

    #[test]
    fn lemma_on_small_cases() {
        let gs = swap();
        assert!(lemma12_check(&gs, &[]).unwrap().passed);
        let r = lemma12_check(&gs, &[0]).unwrap();
        assert!(r.passed);
        assert!(r.stabilizer.is_trivial());
        assert_eq!(r.matches.len(), 2);
    }
}
