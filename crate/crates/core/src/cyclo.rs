//! Cyclotomic polynomials normalized to take the value 1 at `t = 0`.
//!
//! `phi_1 = 1 - t`, and for `k >= 2` `phi_k` is the usual cyclotomic
//! polynomial. A multidegree `d = k*p` with `p` primitive indexes
//! `phi_d(t) = phi_k(t^p)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::factored::CycloFactored;
use crate::poly::{dense, SparsePoly};

/// `(order k, primitive direction p)`, denoting `phi_{k*p}`.
///
/// Ordering is by order first, then direction; this is the printing order
/// of factored products.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycloKey {
    order: u64,
    direction: DegreeVector,
}

impl CycloKey {
    pub fn new(order: u64, direction: DegreeVector) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidKey("order must be positive".into()));
        }
        if direction.content() != 1 {
            return Err(Error::InvalidKey(format!("direction {direction} is not primitive")));
        }
        Ok(CycloKey { order, direction })
    }

    /// Univariate `phi_k`.
    pub fn univariate(order: u64) -> Result<Self> {
        Self::new(order, DegreeVector::scalar(1))
    }

    /// Key of `phi_d` for a nonzero multidegree `d`.
    pub fn from_degree(d: &DegreeVector) -> Result<Self> {
        let (k, p) = d.split_primitive()?;
        Self::new(k, p)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn direction(&self) -> &DegreeVector {
        &self.direction
    }

    pub fn nvars(&self) -> usize {
        self.direction.rank()
    }

    /// The multidegree `k*p`.
    pub fn degree(&self) -> DegreeVector {
        self.direction.scale(self.order)
    }

    pub fn is_univariate(&self) -> bool {
        self.nvars() == 1
    }
}

impl fmt::Display for CycloKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi_{}", self.degree())
    }
}

/// Source of univariate cyclotomic coefficient tables.
///
/// Everything that expands a cyclotomic factor goes through one of these, so
/// callers can substitute a table (for instance to check that a computation
/// really depends on a given factor).
pub trait CycloSource: Sync {
    /// Ascending coefficients of `phi_order`.
    fn coefficients(&self, order: u64) -> Vec<BigInt>;
}

/// Computes tables by exact division.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactCyclo;

impl CycloSource for ExactCyclo {
    fn coefficients(&self, order: u64) -> Vec<BigInt> {
        cyclotomic(order)
    }
}

pub(crate) fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= k {
        if k.is_multiple_of(i) {
            small.push(i);
            if i != k / i {
                large.push(k / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Ascending coefficients of `phi_k`, with `phi_k(0) = 1`.
///
/// Each `phi_j` for `j | k` is obtained as `(1 - t^j)` divided by the
/// product of the `phi_i` with `i | j, i < j`.
pub fn cyclotomic(k: u64) -> Vec<BigInt> {
    assert!(k > 0, "cyclotomic order must be positive");
    let divs = divisors(k);
    let mut table: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for &j in &divs {
        let mut q = dense::one_minus_power(j as usize);
        for (&i, phi) in &table {
            if j % i == 0 {
                q = dense::div_exact(&q, phi).expect("cyclotomic division is exact");
            }
        }
        table.insert(j, q);
    }
    table.remove(&k).expect("k divides itself")
}

/// Expansion of `phi_{k*p}` as a polynomial in `p.len()` variables.
pub fn cyclo_expand(key: &CycloKey) -> SparsePoly {
    cyclo_expand_with(key, &ExactCyclo)
}

pub fn cyclo_expand_with(key: &CycloKey, source: &dyn CycloSource) -> SparsePoly {
    let coeffs = source.coefficients(key.order());
    SparsePoly::from_dense_along(&coeffs, key.direction().entries())
}

/// Factors `1 - t^d` as the product of `phi_{j*p}` over `j | k`, where
/// `d = k*p` with `p` primitive.
pub fn factor_one_minus(d: &DegreeVector) -> Result<CycloFactored> {
    let (k, p) = d.split_primitive()?;
    let mut out = CycloFactored::one();
    for j in divisors(k) {
        out.multiply_key(CycloKey::new(j, p.clone())?, 1);
    }
    Ok(out)
}

/// Euler's totient, used to sanity-check cyclotomic degrees.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
