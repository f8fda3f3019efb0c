//! Roots of unity as elements of `Q/Z`, and eigenvalue multisets.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclo::CycloKey;
use crate::error::{Error, Result};
use crate::factored::CycloFactored;
use crate::poly::SparsePoly;

/// The root of unity `exp(2 pi i num/den)`, stored as a reduced fraction in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootFraction {
    num: u64,
    den: u64,
}

impl RootFraction {
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Invalid("root of unity with zero denominator".into()));
        }
        let num = num.rem_euclid(den as i64) as u64;
        let g = num.gcd(&den);
        Ok(RootFraction { num: num / g, den: den / g })
    }

    /// The root 1.
    pub fn one() -> Self {
        RootFraction { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    /// Multiplicative order of the root.
    pub fn order(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for RootFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Eigenvalues of a group element with multiplicities; stands for
/// `det(id - t g) = prod (1 - zeta_j t)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootMultiset(BTreeMap<RootFraction, u32>);

/// One entry of the JSON eigenvalue list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenEntry {
    pub num: i64,
    pub den: u64,
    pub mult: u32,
}

impl RootMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// The identity element on `K^n`.
    pub fn identity(n: u32) -> Self {
        let mut m = Self::new();
        m.insert(RootFraction::one(), n);
        m
    }

    pub fn from_entries(entries: &[EigenEntry]) -> Result<Self> {
        let mut m = Self::new();
        for e in entries {
            m.insert(RootFraction::new(e.num, e.den)?, e.mult);
        }
        Ok(m)
    }

    pub fn to_entries(&self) -> Vec<EigenEntry> {
        self.iter().map(|(r, mult)| EigenEntry { num: r.num as i64, den: r.den, mult }).collect()
    }

    pub fn insert(&mut self, root: RootFraction, mult: u32) {
        if mult > 0 {
            *self.0.entry(root).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, root: &RootFraction) -> u32 {
        self.0.get(root).copied().unwrap_or(0)
    }

    /// Dimension of the representation.
    pub fn dim(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (RootFraction, u32)> + '_ {
        self.0.iter().map(|(r, &m)| (*r, m))
    }

    pub fn is_identity(&self) -> bool {
        self.0.keys().all(|r| r.den == 1)
    }

    /// Eigenvalues of `(g, h)` acting on `V (+) W`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, m) in other.iter() {
            out.insert(r, m);
        }
        out
    }

    /// Pointwise maximum of multiplicities.
    pub fn pointwise_max(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, m) in other.iter() {
            let slot = out.0.entry(r).or_insert(0);
            *slot = (*slot).max(m);
        }
        out
    }

    /// Multiplicity per root order, after checking that it is constant over
    /// all primitive roots of each order.
    pub fn galois_exponents(&self) -> Result<BTreeMap<u64, u32>> {
        let mut out = BTreeMap::new();
        for (root, _) in self.iter() {
            let d = root.den;
            if out.contains_key(&d) {
                continue;
            }
            let canonical = self.multiplicity(&RootFraction { num: 1 % d, den: d });
            for b in 0..d {
                if b.gcd(&d) != 1 {
                    continue;
                }
                if self.multiplicity(&RootFraction { num: b, den: d }) != canonical {
                    return Err(Error::GaloisUnstable { order: d });
                }
            }
            out.insert(d, canonical);
        }
        out.retain(|_, m| *m > 0);
        Ok(out)
    }

    /// `det(id - t g)` as `prod phi_d^{mult at 1/d}`.
    pub fn det_factored(&self) -> Result<CycloFactored> {
        let mut f = CycloFactored::one();
        for (d, m) in self.galois_exponents()? {
            f.multiply_key(CycloKey::univariate(d)?, m);
        }
        Ok(f)
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (r, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}: {m}")?;
        }
        write!(f, "}}")
    }
}

/// Expanded `det(id - t g)` for a Galois-stable eigenvalue multiset.
pub fn char_det_factored(e: &RootMultiset) -> Result<SparsePoly> {
    e.det_factored()?.expand()
}
