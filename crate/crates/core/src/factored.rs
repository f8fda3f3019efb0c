//! Finite products of cyclotomic factors, `prod phi_d^{e_d}`.
//!
//! Every denominator in the crate is carried in this form. Multiplication is
//! exponentwise addition, lcm and gcd are exponentwise max and min.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::cyclo::{cyclo_expand_with, factor_one_minus, CycloKey, CycloSource, ExactCyclo};
use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::poly::{dense, SparsePoly};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CycloFactored {
    factors: BTreeMap<CycloKey, u32>,
}

impl CycloFactored {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_key(key: CycloKey, exponent: u32) -> Self {
        let mut f = Self::one();
        f.multiply_key(key, exponent);
        f
    }

    /// Univariate product from `(order, exponent)` pairs.
    pub fn from_orders<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> Result<Self> {
        let mut f = Self::one();
        for (d, e) in pairs {
            f.multiply_key(CycloKey::univariate(d)?, e);
        }
        Ok(f)
    }

    /// `prod_k (1 - t^k)` over the given univariate degrees.
    pub fn one_minus_powers<I: IntoIterator<Item = u64>>(degrees: I) -> Result<Self> {
        let mut f = Self::one();
        for k in degrees {
            f = f.mul(&factor_one_minus(&DegreeVector::scalar(k))?);
        }
        Ok(f)
    }

    pub fn multiply_key(&mut self, key: CycloKey, exponent: u32) {
        if exponent == 0 {
            return;
        }
        *self.factors.entry(key).or_insert(0) += exponent;
    }

    /// Replaces the exponent of `key` (removing it at zero).
    pub fn set_exponent(&mut self, key: CycloKey, exponent: u32) {
        if exponent == 0 {
            self.factors.remove(&key);
        } else {
            self.factors.insert(key, exponent);
        }
    }

    pub fn exponent(&self, key: &CycloKey) -> u32 {
        self.factors.get(key).copied().unwrap_or(0)
    }

    /// Exponent of univariate `phi_d`.
    pub fn exponent_of(&self, d: u64) -> u32 {
        CycloKey::univariate(d).map(|k| self.exponent(&k)).unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycloKey, u32)> {
        self.factors.iter().map(|(k, &e)| (k, e))
    }

    /// Number of variables, if any factor is present.
    pub fn nvars(&self) -> Option<usize> {
        self.factors.keys().next().map(|k| k.nvars())
    }

    pub fn is_univariate(&self) -> bool {
        self.factors.keys().all(|k| k.is_univariate())
    }

    /// Total degree of the expanded univariate product.
    pub fn degree(&self) -> u64 {
        self.iter().map(|(k, e)| crate::cyclo::totient(k.order()) * k.direction().total() * e as u64).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in other.iter() {
            out.multiply_key(k.clone(), e);
        }
        out
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in other.iter() {
            if e > out.exponent(k) {
                out.factors.insert(k.clone(), e);
            }
        }
        out
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let factors = self
            .iter()
            .filter_map(|(k, e)| {
                let m = e.min(other.exponent(k));
                (m > 0).then(|| (k.clone(), m))
            })
            .collect();
        CycloFactored { factors }
    }

    /// `true` iff `self` divides `other` (exponentwise `<=`).
    pub fn divides(&self, other: &Self) -> bool {
        self.iter().all(|(k, e)| e <= other.exponent(k))
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut out = self.clone();
        for (k, e) in other.iter() {
            let left = out.exponent(k) - e;
            out.set_exponent(k.clone(), left);
        }
        Some(out)
    }

    /// Signed exponent difference `self / other`.
    pub fn ratio(&self, other: &Self) -> SignedFactored {
        let mut map: BTreeMap<CycloKey, i64> = BTreeMap::new();
        for (k, e) in self.iter() {
            *map.entry(k.clone()).or_insert(0) += e as i64;
        }
        for (k, e) in other.iter() {
            *map.entry(k.clone()).or_insert(0) -= e as i64;
        }
        map.retain(|_, e| *e != 0);
        SignedFactored(map)
    }

    pub fn expand(&self) -> Result<SparsePoly> {
        self.expand_with(&ExactCyclo)
    }

    /// Expanded product. The empty product expands to the univariate 1.
    pub fn expand_with(&self, source: &dyn CycloSource) -> Result<SparsePoly> {
        let nvars = self.nvars().unwrap_or(1);
        let mut out = SparsePoly::one(nvars);
        for (k, e) in self.iter() {
            if k.nvars() != nvars {
                return Err(Error::LengthMismatch(nvars, k.nvars()));
            }
            let phi = cyclo_expand_with(k, source);
            for _ in 0..e {
                out = &out * &phi;
            }
        }
        Ok(out)
    }

    /// Dense ascending coefficients of a univariate product.
    pub fn expand_dense_with(&self, source: &dyn CycloSource) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::one()];
        for (k, e) in self.iter() {
            if !k.is_univariate() {
                return Err(Error::NotUnivariate(k.nvars()));
            }
            let phi = source.coefficients(k.order());
            for _ in 0..e {
                out = dense::mul(&out, &phi);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CycloFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (k, e)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{k}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CycloFactored {
    type Err = Error;

    /// Parses the text form, e.g. `phi_1^3 * phi_2 * phi_(4,2)^2` or `1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = CycloFactored::one();
        if s == "1" || s.is_empty() {
            return Ok(out);
        }
        for part in s.split('*') {
            let part = part.trim();
            let body =
                part.strip_prefix("phi_").ok_or_else(|| Error::Invalid(format!("expected phi_<d>, found {part:?}")))?;
            let (deg, exp) = match body.rsplit_once('^') {
                Some((d, e)) => {
                    let e: u32 = e.trim().parse().map_err(|_| Error::Invalid(format!("bad exponent in {part:?}")))?;
                    (d.trim(), e)
                }
                None => (body, 1),
            };
            let deg = deg.trim_start_matches('(').trim_end_matches(')');
            let entries = deg
                .split(',')
                .map(|x| x.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Invalid(format!("bad degree in {part:?}")))?;
            let key = CycloKey::from_degree(&DegreeVector::new(entries)?)?;
            out.multiply_key(key, exp);
        }
        Ok(out)
    }
}

/// A product of cyclotomic factors with signed exponents, as produced by
/// [`CycloFactored::ratio`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignedFactored(pub BTreeMap<CycloKey, i64>);

impl SignedFactored {
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SignedFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (k, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{k}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
