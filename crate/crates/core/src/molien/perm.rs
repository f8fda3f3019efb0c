//! Permutations, cycle types, group closure and the conjugacy classes of
//! the symmetric and alternating groups.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// From one-line notation with images `1..=n`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[i - 1] = true;
            out.push((i - 1) as u32);
        }
        Ok(Permutation(out))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Zero-based images.
    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            parts.push(len);
        }
        CycleType::new(parts)
    }
}

/// Cycle lengths of a permutation, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of points moved plus fixed, i.e. the sum of the parts.
    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `(-1)^(n - #parts)`.
    pub fn is_even(&self) -> bool {
        (self.n() as usize - self.0.len()).is_multiple_of(2)
    }

    /// All parts odd and pairwise distinct: the classes that split in `A_n`.
    pub fn splits_in_alternating(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1) && self.0.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Enumerates the group generated by `generators` on `n` points by
/// breadth-first closure and tallies its elements by cycle type.
pub fn perm_group_closure(n: usize, generators: &[Permutation], bound: u64) -> Result<Vec<(CycleType, u64)>> {
    if bound == 0 {
        return Err(Error::Invalid("enumeration bound must be at least 1".into()));
    }
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(Error::Invalid(format!("generator acts on {} points, expected {n}", g.degree())));
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut tally: BTreeMap<CycleType, u64> = BTreeMap::new();
    while let Some(g) = queue.pop_front() {
        *tally.entry(g.cycle_type()).or_insert(0) += 1;
        for s in generators {
            let h = s.compose(&g);
            if !seen.contains(&h) {
                if seen.len() as u64 >= bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(tally.into_iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Symmetric,
    Alternating,
}

/// `Sigma_n` or `A_n` in their permutation representation on `K^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub name: FamilyName,
    pub n: u32,
}

impl Family {
    pub fn symmetric(n: u32) -> Self {
        Family { name: FamilyName::Symmetric, n }
    }

    pub fn alternating(n: u32) -> Self {
        Family { name: FamilyName::Alternating, n }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name {
            FamilyName::Symmetric => write!(f, "symmetric {}", self.n),
            FamilyName::Alternating => write!(f, "alternating {}", self.n),
        }
    }
}

/// Elements of one cycle type. For a cycle type that splits into two
/// `A_n`-classes, `size` counts both halves together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: CycleType,
    pub size: u128,
    pub splits: bool,
}

/// Partitions of `n` in reverse lexicographic order, largest part first.
pub fn partitions(n: u32) -> Vec<CycleType> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<CycleType>) {
        if n == 0 {
            out.push(CycleType(prefix.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: u32) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("factorial")))
}

/// `n! / prod_k (k^{m_k} m_k!)`.
pub fn class_size(c: &CycleType) -> Result<u128> {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in c.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut centralizer: u128 = 1;
    for (&k, &m) in &counts {
        let pow = (k as u128).checked_pow(m).ok_or(Error::Overflow("class size"))?;
        centralizer = centralizer
            .checked_mul(pow)
            .and_then(|x| x.checked_mul(factorial(m).ok()?))
            .ok_or(Error::Overflow("class size"))?;
    }
    Ok(factorial(c.n())? / centralizer)
}

pub fn group_order(family: Family) -> Result<u128> {
    let full = factorial(family.n)?;
    Ok(match family.name {
        FamilyName::Symmetric => full,
        FamilyName::Alternating if family.n <= 1 => 1,
        FamilyName::Alternating => full / 2,
    })
}

/// Conjugacy classes grouped by cycle type.
pub fn conjugacy_classes(family: Family) -> Result<Vec<ConjugacyClass>> {
    if family.n == 0 {
        return Err(Error::Invalid("group acts on at least one point".into()));
    }
    let mut out = Vec::new();
    for c in partitions(family.n) {
        let alternating = family.name == FamilyName::Alternating;
        if alternating && !c.is_even() {
            continue;
        }
        let size = class_size(&c)?;
        // A_1 is trivial; its single class does not split
        let splits = alternating && family.n > 1 && c.splits_in_alternating();
        out.push(ConjugacyClass { cycle_type: c, size, splits });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec())
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn closure_examples() {
        let got = perm_group_closure(2, &[perm(&[2, 1])], 100).unwrap();
        assert_eq!(got, vec![(ct(&[1, 1]), 1), (ct(&[2]), 1)]);

        let got = perm_group_closure(3, &[perm(&[2, 3, 1]), perm(&[2, 1, 3])], 100).unwrap();
        let map: BTreeMap<_, _> = got.into_iter().collect();
        assert_eq!(map, BTreeMap::from([(ct(&[1, 1, 1]), 1), (ct(&[2, 1]), 3), (ct(&[3]), 2)]));

        let got = perm_group_closure(3, &[], 1).unwrap();
        assert_eq!(got, vec![(ct(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn closure_bound() {
        let gens = [perm(&[2, 3, 4, 5, 1]), perm(&[2, 1, 3, 4, 5])];
        assert_eq!(perm_group_closure(5, &gens, 119), Err(Error::GroupTooLarge { bound: 119 }));
        let total: u64 = perm_group_closure(5, &gens, 120).unwrap().iter().map(|x| x.1).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn bad_permutations() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(perm_group_closure(3, &[perm(&[2, 1])], 10).is_err());
    }

    // Brute-force oracle: tally every permutation of n points by cycle type.
    fn brute_classes(n: usize, even_only: bool) -> BTreeMap<CycleType, u128> {
        fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == 1 {
                out.push(a.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, a, out);
                if k.is_multiple_of(2) {
                    a.swap(i, k - 1)
                } else {
                    a.swap(0, k - 1)
                }
            }
        }
        let mut all = Vec::new();
        heap(n, &mut (1..=n).collect(), &mut all);
        let mut map = BTreeMap::new();
        for p in all {
            let c = perm(&p).cycle_type();
            if even_only && !c.is_even() {
                continue;
            }
            *map.entry(c).or_insert(0u128) += 1;
        }
        map
    }

    #[test]
    fn classes_match_brute_force() {
        for n in 1..=7u32 {
            for (fam, even) in [(Family::symmetric(n), false), (Family::alternating(n), true)] {
                let got: BTreeMap<_, _> =
                    conjugacy_classes(fam).unwrap().into_iter().map(|c| (c.cycle_type, c.size)).collect();
                assert_eq!(got, brute_classes(n as usize, even), "{fam}");
                let total: u128 = got.values().sum();
                assert_eq!(total, group_order(fam).unwrap());
            }
        }
    }

    #[test]
    fn class_examples() {
        let s3: Vec<_> = conjugacy_classes(Family::symmetric(3))
            .unwrap()
            .into_iter()
            .map(|c| (c.cycle_type.to_string(), c.size))
            .collect();
        assert_eq!(s3, vec![("(3)".into(), 2), ("(2,1)".into(), 3), ("(1,1,1)".into(), 1)]);
        let a3 = conjugacy_classes(Family::alternating(3)).unwrap();
        assert_eq!(a3.len(), 2);
        assert_eq!((a3[0].size, a3[0].splits), (2, true));
        let s1 = conjugacy_classes(Family::symmetric(1)).unwrap();
        assert_eq!((s1[0].cycle_type.to_string(), s1[0].size), ("(1)".into(), 1));
    }

    #[test]
    fn splitting_criterion() {
        assert!(ct(&[5, 3, 1]).splits_in_alternating());
        assert!(!ct(&[3, 3]).splits_in_alternating());
        assert!(!ct(&[4, 2]).splits_in_alternating());
    }
}
