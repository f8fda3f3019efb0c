//! Finite groups acting linearly on `K^n` in characteristic zero.
//!
//! The universal denominator of the invariant ring is the lcm of
//! `det(id - t g)` over the group. Each determinant is determined by the
//! eigenvalue multiset of `g`, so the lcm is read off the pointwise maximum of
//! those multisets. Molien's formula
//! `H(t) = (1/|G|) sum_g 1/det(id - t g)` gives the Hilbert series itself and
//! is used to cross-check: its reduced denominator must divide the universal
//! one.

mod closed;
mod perm;
mod roots;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use closed::{
    alt_closed_form_mismatches, alt_denom_closed, alt_hilbert_closed, alt_udenom_closed, sym_udenom_closed,
    ClosedFormMismatch,
};
pub use perm::{
    class_size, conjugacy_classes, group_order, partitions, perm_group_closure, ConjugacyClass, CycleType, Family,
    FamilyName, Permutation,
};
pub use roots::{char_det_factored, EigenEntry, RootFraction, RootMultiset};

use crate::cyclo::{CycloKey, CycloSource, ExactCyclo};
use crate::error::{Error, Result};
use crate::factored::CycloFactored;
use crate::rational::{rational_sum_with, RationalFn};

/// Default cap on the number of group elements (or classes) enumerated.
pub const DEFAULT_GROUP_BOUND: u64 = 1_000_000;

/// How a finite group is handed to the library.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupSpecJson", into = "GroupSpecJson")]
pub enum GroupSpec {
    /// Every element, each given by its eigenvalues.
    Elements(Vec<RootMultiset>),
    /// Permutation group on `n` points given by generators.
    Permutation {
        n: usize,
        generators: Vec<Permutation>,
    },
    Family(Family),
}

/// Wire form of [`GroupSpec`]. Permutations use one-line notation on `1..=n`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpecJson {
    Elements { eigenvalues: Vec<Vec<EigenEntry>> },
    Permutation { n: usize, generators: Vec<Vec<usize>> },
    Family { name: FamilyName, n: u32 },
}

impl TryFrom<GroupSpecJson> for GroupSpec {
    type Error = Error;
    fn try_from(j: GroupSpecJson) -> Result<Self> {
        Ok(match j {
            GroupSpecJson::Elements { eigenvalues } => {
                GroupSpec::Elements(eigenvalues.iter().map(|e| RootMultiset::from_entries(e)).collect::<Result<_>>()?)
            }
            GroupSpecJson::Permutation { n, generators } => {
                let generators =
                    generators.iter().map(|g| Permutation::from_one_line(g)).collect::<Result<Vec<_>>>()?;
                GroupSpec::Permutation { n, generators }
            }
            GroupSpecJson::Family { name, n } => GroupSpec::Family(Family { name, n }),
        })
    }
}

impl From<GroupSpec> for GroupSpecJson {
    fn from(g: GroupSpec) -> Self {
        match g {
            GroupSpec::Elements(els) => {
                GroupSpecJson::Elements { eigenvalues: els.iter().map(|e| e.to_entries()).collect() }
            }
            GroupSpec::Permutation { n, generators } => GroupSpecJson::Permutation {
                n,
                generators: generators.iter().map(|p| p.images().iter().map(|&i| i as usize + 1).collect()).collect(),
            },
            GroupSpec::Family(f) => GroupSpecJson::Family { name: f.name, n: f.n },
        }
    }
}

/// A group flattened to eigenvalue classes with element counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupClasses {
    pub classes: Vec<(RootMultiset, u128)>,
    pub order: u128,
    pub dim: u32,
}

impl GroupClasses {
    /// Builds the class list, merging equal multisets.
    pub fn new(classes: impl IntoIterator<Item = (RootMultiset, u128)>) -> Result<Self> {
        let mut merged: std::collections::BTreeMap<RootMultiset, u128> = Default::default();
        for (m, c) in classes {
            *merged.entry(m).or_insert(0) += c;
        }
        let dim = merged.keys().next().map(|m| m.dim()).unwrap_or(0);
        if merged.keys().any(|m| m.dim() != dim) {
            return Err(Error::Invalid("elements act on spaces of different dimension".into()));
        }
        if !merged.keys().any(|m| m.is_identity()) {
            return Err(Error::Invalid("element list must contain the identity".into()));
        }
        let order = merged.values().sum();
        Ok(GroupClasses { classes: merged.into_iter().collect(), order, dim })
    }

    /// `G x H` acting on `V (+) W`.
    pub fn product(&self, other: &GroupClasses) -> Result<GroupClasses> {
        let mut pairs = Vec::with_capacity(self.classes.len() * other.classes.len());
        for (a, x) in &self.classes {
            for (b, y) in &other.classes {
                pairs.push((a.direct_sum(b), x * y));
            }
        }
        GroupClasses::new(pairs)
    }
}

/// Eigenvalues of a permutation with the given cycle type: a `k`-cycle
/// contributes every `k`-th root of unity once.
pub fn eigen_from_cycle_type(c: &CycleType) -> RootMultiset {
    let mut m = RootMultiset::new();
    for &k in c.parts() {
        for j in 0..k {
            m.insert(RootFraction::new(j as i64, k as u64).expect("k > 0"), 1);
        }
    }
    m
}

impl GroupSpec {
    /// Enumerates the group into eigenvalue classes. `bound` caps the number
    /// of elements generated (or, for named families, classes listed).
    pub fn classes(&self, bound: u64) -> Result<GroupClasses> {
        match self {
            GroupSpec::Elements(els) => {
                if els.len() as u64 > bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                GroupClasses::new(els.iter().map(|e| (e.clone(), 1)))
            }
            GroupSpec::Permutation { n, generators } => {
                let tally = perm_group_closure(*n, generators, bound)?;
                GroupClasses::new(tally.into_iter().map(|(c, k)| (eigen_from_cycle_type(&c), k as u128)))
            }
            GroupSpec::Family(f) => {
                let classes = conjugacy_classes(*f)?;
                if classes.len() as u64 > bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                GroupClasses::new(classes.into_iter().map(|c| (eigen_from_cycle_type(&c.cycle_type), c.size)))
            }
        }
    }
}

/// Pointwise maximum of all eigenvalue multiplicities over the group.
pub fn max_multiplicities(g: &GroupClasses) -> RootMultiset {
    g.classes.iter().fold(RootMultiset::new(), |acc, (m, _)| acc.pointwise_max(m))
}

/// `lcm { det(id - t g) }` from already-enumerated classes.
pub fn udenom_from_classes(g: &GroupClasses) -> Result<CycloFactored> {
    let max = max_multiplicities(g);
    let mut out = CycloFactored::one();
    for (d, m) in max.galois_exponents()? {
        out.multiply_key(CycloKey::univariate(d)?, m);
    }
    Ok(out)
}

/// Universal denominator of `H(S^G, t)`.
pub fn udenom_finite(g: &GroupSpec, bound: u64) -> Result<CycloFactored> {
    udenom_from_classes(&g.classes(bound)?)
}

/// Hilbert series of the invariant ring by Molien's formula, reduced.
pub fn molien_series(classes: &[(RootMultiset, u128)], order: u128) -> Result<RationalFn> {
    molien_series_with(classes, order, &ExactCyclo)
}

pub fn molien_series_with(
    classes: &[(RootMultiset, u128)],
    order: u128,
    source: &dyn CycloSource,
) -> Result<RationalFn> {
    let total: u128 = classes.iter().map(|(_, c)| c).sum();
    if total != order || order == 0 {
        return Err(Error::Invalid(format!("class sizes sum to {total}, not {order}")));
    }
    let group_order = BigInt::from(order);
    let terms = classes
        .iter()
        .map(|(m, c)| Ok((BigRational::new(BigInt::from(*c), group_order.clone()), m.det_factored()?)))
        .collect::<Result<Vec<_>>>()?;
    rational_sum_with(&terms, source)
}

/// Molien series of an enumerated group.
pub fn molien_of(g: &GroupClasses) -> Result<RationalFn> {
    molien_series(&g.classes, g.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SparsePoly;
    use crate::rational::{reduce_rational, series_expand};

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec())
    }

    fn fac(s: &str) -> CycloFactored {
        s.parse().unwrap()
    }

    fn sym(n: u32) -> GroupSpec {
        GroupSpec::Family(Family::symmetric(n))
    }

    #[test]
    fn eigenvalues_of_cycle_types() {
        assert_eq!(eigen_from_cycle_type(&ct(&[1, 1, 1])), RootMultiset::identity(3));
        assert_eq!(eigen_from_cycle_type(&ct(&[3])).to_string(), "{0/1: 1, 1/3: 1, 2/3: 1}");
        let m = eigen_from_cycle_type(&ct(&[2, 2, 1]));
        assert_eq!(m.to_string(), "{0/1: 3, 1/2: 2}");
        // multiplicity of -1 is #{i : 2 | k_i}
        assert_eq!(m.multiplicity(&RootFraction::new(1, 2).unwrap()), 2);
    }

    #[test]
    fn determinant_examples() {
        let p = char_det_factored(&eigen_from_cycle_type(&ct(&[3]))).unwrap();
        assert_eq!(p.to_string(), "1 - t^3");
        let p = char_det_factored(&eigen_from_cycle_type(&ct(&[2, 1]))).unwrap();
        let oracle = &CycloFactored::one_minus_powers([1]).unwrap().expand().unwrap()
            * &CycloFactored::one_minus_powers([2]).unwrap().expand().unwrap();
        assert_eq!(p, oracle);
    }

    #[test]
    fn udenom_examples() {
        assert_eq!(udenom_finite(&sym(3), 100).unwrap(), fac("phi_1^3*phi_2*phi_3"));
        let trivial = GroupSpec::Elements(vec![RootMultiset::identity(4)]);
        assert_eq!(udenom_finite(&trivial, 100).unwrap(), fac("phi_1^4"));
        let a10 = GroupSpec::Family(Family::alternating(10));
        assert_eq!(
            udenom_finite(&a10, 100).unwrap(),
            fac("phi_1^10*phi_2^4*phi_3^3*phi_4^2*phi_5^2*phi_6*phi_7*phi_8*phi_9")
        );
    }

    #[test]
    fn unstable_input_is_rejected() {
        let mut g = RootMultiset::new();
        g.insert(RootFraction::new(1, 3).unwrap(), 1);
        let spec = GroupSpec::Elements(vec![RootMultiset::identity(1), g]);
        assert_eq!(udenom_finite(&spec, 100), Err(Error::GaloisUnstable { order: 3 }));
        let classes = spec.classes(100).unwrap();
        assert!(matches!(molien_of(&classes), Err(Error::GaloisUnstable { .. })));
    }

    #[test]
    fn identity_is_required() {
        let mut g = RootMultiset::new();
        g.insert(RootFraction::new(1, 2).unwrap(), 1);
        assert!(GroupSpec::Elements(vec![g]).classes(10).is_err());
    }

    #[test]
    fn molien_examples() {
        let trivial = GroupSpec::Elements(vec![RootMultiset::identity(2)]).classes(10).unwrap();
        assert_eq!(molien_of(&trivial).unwrap(), RationalFn::reciprocal_of(fac("phi_1^2")));

        let mut neg = RootMultiset::new();
        neg.insert(RootFraction::new(1, 2).unwrap(), 1);
        let sign = GroupSpec::Elements(vec![RootMultiset::identity(1), neg]).classes(10).unwrap();
        assert_eq!(molien_of(&sign).unwrap(), RationalFn::reciprocal_of(fac("phi_1*phi_2")));

        let s3 = sym(3).classes(100).unwrap();
        let expect = CycloFactored::one_minus_powers([1, 2, 3]).unwrap();
        assert_eq!(molien_of(&s3).unwrap(), RationalFn::reciprocal_of(expect));
    }

    #[test]
    fn molien_series_is_a_hilbert_series() {
        for n in 1..=6 {
            for fam in [Family::symmetric(n), Family::alternating(n)] {
                let g = GroupSpec::Family(fam).classes(1000).unwrap();
                let h = molien_of(&g).unwrap();
                let s = series_expand(&h, 20).unwrap();
                assert_eq!(s[0], BigInt::from(1));
                assert!(s.iter().all(|c| c >= &BigInt::from(0)));
                assert!(h.denominator.divides(&udenom_from_classes(&g).unwrap()));
            }
        }
    }

    #[test]
    fn alternating_series_matches_closed_form() {
        for n in 3..=7 {
            let g = GroupSpec::Family(Family::alternating(n)).classes(1000).unwrap();
            assert_eq!(molien_of(&g).unwrap(), alt_hilbert_closed(n).unwrap(), "A_{n}");
        }
    }

    #[test]
    fn permutation_and_family_agree() {
        let gens = vec![
            Permutation::from_one_line(&[2, 3, 4, 1]).unwrap(),
            Permutation::from_one_line(&[2, 1, 3, 4]).unwrap(),
        ];
        let p = GroupSpec::Permutation { n: 4, generators: gens };
        assert_eq!(p.classes(100).unwrap(), sym(4).classes(100).unwrap());
    }

    #[test]
    fn product_of_sign_groups() {
        let mut neg = RootMultiset::new();
        neg.insert(RootFraction::new(1, 2).unwrap(), 1);
        let sign = GroupSpec::Elements(vec![RootMultiset::identity(1), neg]).classes(10).unwrap();
        let prod = sign.product(&sign).unwrap();
        assert_eq!(prod.order, 4);
        assert_eq!(udenom_from_classes(&prod).unwrap(), fac("phi_1^2*phi_2^2"));
        // Sigma_2 permuting K^2, squared, acting on K^4
        let s2 = sym(2).classes(10).unwrap();
        let s2s2 = s2.product(&s2).unwrap();
        let u = udenom_from_classes(&s2).unwrap();
        assert_eq!(udenom_from_classes(&s2s2).unwrap(), u.mul(&u));
        assert_eq!(udenom_from_classes(&s2s2).unwrap(), fac("phi_1^4*phi_2^2"));
    }

    #[test]
    fn json_schema() {
        let g: GroupSpec = serde_json::from_str(r#"{"kind":"family","name":"alternating","n":5}"#).unwrap();
        assert_eq!(g, GroupSpec::Family(Family::alternating(5)));
        let g: GroupSpec =
            serde_json::from_str(r#"{"kind":"permutation","n":3,"generators":[[2,3,1],[2,1,3]]}"#).unwrap();
        assert_eq!(g.classes(10).unwrap().order, 6);
        let g: GroupSpec = serde_json::from_str(
            r#"{"kind":"elements","eigenvalues":[[{"num":0,"den":1,"mult":1}],[{"num":1,"den":2,"mult":1}]]}"#,
        )
        .unwrap();
        assert_eq!(udenom_finite(&g, 10).unwrap(), fac("phi_1*phi_2"));
        let back = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<GroupSpec>(&back).unwrap(), g);
        assert!(serde_json::from_str::<GroupSpec>(r#"{"kind":"permutation","n":2,"generators":[[1,1]]}"#).is_err());
    }

    #[test]
    fn hilbert_closed_form_display() {
        // (1+t^3) / ((1-t)(1-t^2)(1-t^3)) before reduction
        let raw = reduce_rational(
            &SparsePoly::from_terms(1, [(vec![0], 1.into()), (vec![3], 1.into())]),
            &CycloFactored::one_minus_powers([1, 2, 3]).unwrap(),
        )
        .unwrap();
        assert_eq!(alt_hilbert_closed(3).unwrap(), raw);
    }
}
