//! Univariate rational functions `A(t) / B(t)` with `B` a product of
//! cyclotomic factors, and the exact operations on them that the Molien
//! computation needs: reduction, summation and series expansion.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::{CycloSource, ExactCyclo};
use crate::error::{Error, Result};
use crate::factored::CycloFactored;
use crate::poly::{dense, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    pub numerator: SparsePoly,
    pub denominator: CycloFactored,
}

impl RationalFn {
    /// Unreduced pair; see [`reduce_rational`] for the canonical form.
    pub fn new(numerator: SparsePoly, denominator: CycloFactored) -> Self {
        RationalFn { numerator, denominator }
    }

    /// `1 / denominator`.
    pub fn reciprocal_of(denominator: CycloFactored) -> Self {
        RationalFn { numerator: SparsePoly::one(1), denominator }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Both sides represent the same function: `a.num * b.den == b.num * a.den`.
    pub fn same_function(&self, other: &RationalFn) -> Result<bool> {
        let lhs = &self.numerator * &other.denominator.expand()?;
        let rhs = &other.numerator * &self.denominator.expand()?;
        Ok(lhs == rhs)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

fn require_univariate(numer: &SparsePoly, denom: &CycloFactored) -> Result<()> {
    if numer.nvars() != 1 {
        return Err(Error::NotUnivariate(numer.nvars()));
    }
    if let Some(n) = denom.nvars().filter(|_| !denom.is_univariate()) {
        return Err(Error::NotUnivariate(n));
    }
    Ok(())
}

/// Cancels every denominator factor that divides the numerator.
pub fn reduce_rational(numer: &SparsePoly, denom: &CycloFactored) -> Result<RationalFn> {
    reduce_rational_with(numer, denom, &ExactCyclo)
}

pub fn reduce_rational_with(numer: &SparsePoly, denom: &CycloFactored, source: &dyn CycloSource) -> Result<RationalFn> {
    require_univariate(numer, denom)?;
    if numer.is_zero() {
        return Ok(RationalFn::new(SparsePoly::zero(1), CycloFactored::one()));
    }
    // cyclotomic factors are coprime to t, so a Laurent shift is harmless
    let (shift, mut coeffs) = numer.to_dense()?;
    let mut out = denom.clone();
    for (key, e) in denom.iter() {
        let phi = source.coefficients(key.order());
        let mut left = e;
        while left > 0 {
            match dense::div_exact(&coeffs, &phi) {
                Some(q) => {
                    coeffs = q;
                    left -= 1;
                }
                None => break,
            }
        }
        out.set_exponent(key.clone(), left);
    }
    Ok(RationalFn::new(SparsePoly::from_dense_shifted(&coeffs, shift), out))
}

/// Exact sum of `c_i / D_i` over the common denominator `lcm(D_i)`, reduced.
///
/// The summed numerator must come out integral; Hilbert series always do.
pub fn rational_sum(terms: &[(BigRational, CycloFactored)]) -> Result<RationalFn> {
    rational_sum_with(terms, &ExactCyclo)
}

pub fn rational_sum_with(terms: &[(BigRational, CycloFactored)], source: &dyn CycloSource) -> Result<RationalFn> {
    let mut grouped: BTreeMap<String, (BigRational, &CycloFactored)> = BTreeMap::new();
    for (c, d) in terms {
        if !d.is_univariate() {
            return Err(Error::NotUnivariate(d.nvars().unwrap_or(0)));
        }
        grouped.entry(d.to_string()).and_modify(|(acc, _)| *acc += c).or_insert_with(|| (c.clone(), d));
    }
    let common = grouped.values().fold(CycloFactored::one(), |acc, (_, d)| acc.lcm(d));

    let mut numer: Vec<BigRational> = Vec::new();
    for (c, d) in grouped.values() {
        if c.is_zero() {
            continue;
        }
        let cofactor = common
            .checked_div(d)
            .ok_or_else(|| Error::InexactDivision("denominator does not divide the lcm".into()))?;
        let poly = cofactor.expand_dense_with(source)?;
        if numer.len() < poly.len() {
            numer.resize(poly.len(), BigRational::zero());
        }
        for (slot, x) in numer.iter_mut().zip(poly) {
            *slot += c * BigRational::from_integer(x);
        }
    }
    let mut ints = Vec::with_capacity(numer.len());
    for c in numer {
        if !c.denom().is_one() {
            return Err(Error::NonIntegral);
        }
        ints.push(c.to_integer());
    }
    reduce_rational_with(&SparsePoly::from_dense(&ints), &common, source)
}

/// The first `order + 1` Taylor coefficients.
pub fn series_expand(f: &RationalFn, order: usize) -> Result<Vec<BigInt>> {
    require_univariate(&f.numerator, &f.denominator)?;
    let (shift, coeffs) = f.numerator.to_dense()?;
    if shift < 0 {
        return Err(Error::Invalid("numerator has negative exponents".into()));
    }
    let mut numer = vec![BigInt::zero(); shift as usize];
    numer.extend(coeffs);
    let den = f.denominator.expand_dense_with(&ExactCyclo)?;
    Ok(dense::series_div(&numer, &den, order + 1))
}
