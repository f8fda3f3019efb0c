//! Sparse Laurent polynomials with big-integer coefficients, plus the dense
//! univariate kernels used for division and power-series work.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in `nvars` variables. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exponent: Vec<i64>, c: BigInt) -> Self {
        assert_eq!(exponent.len(), nvars, "exponent length must match variable count");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exponent), c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must match variable count");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Univariate polynomial from ascending dense coefficients.
    pub fn from_dense(coeffs: &[BigInt]) -> Self {
        Self::from_dense_shifted(coeffs, 0)
    }

    /// Univariate `t^shift * sum coeffs[i] t^i`.
    pub fn from_dense_shifted(coeffs: &[BigInt], shift: i64) -> Self {
        Self::from_terms(1, coeffs.iter().enumerate().map(|(i, c)| (vec![i as i64 + shift], c.clone())))
    }

    /// `sum coeffs[i] * (t^direction)^i`: a univariate polynomial pushed into
    /// `direction.len()` variables.
    pub fn from_dense_along(coeffs: &[BigInt], direction: &[u64]) -> Self {
        Self::from_terms(
            direction.len(),
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (direction.iter().map(|&p| p as i64 * i as i64).collect(), c.clone())),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coeff(&self, exponent: &[i64]) -> BigInt {
        self.terms.get(&Monomial(exponent.to_vec())).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Value at `t = 0`; only meaningful without negative exponents.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars])
    }

    /// Dense ascending coefficients of a univariate polynomial together with
    /// the exponent of the first slot (may be negative for Laurent input).
    pub fn to_dense(&self) -> Result<(i64, Vec<BigInt>)> {
        if self.nvars != 1 {
            return Err(Error::NotUnivariate(self.nvars));
        }
        let Some(lo) = self.terms.keys().next().map(|m| m.0[0]) else {
            return Ok((0, Vec::new()));
        };
        let hi = self.terms.keys().next_back().map(|m| m.0[0]).unwrap_or(lo);
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (m, c) in &self.terms {
            out[(m.0[0] - lo) as usize] = c.clone();
        }
        Ok((lo, out))
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_vars(rhs);
        let mut out = SparsePoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.0.iter().zip(&b.0).map(|(i, j)| i + j).collect();
                out.add_term(Monomial(e), x * y);
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = m.0.iter().all(|&e| e == 0);
            if is_const {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut first = true;
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if self.nvars == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t{}", v + 1)?;
                }
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Dense univariate kernels on ascending coefficient vectors.
pub mod dense {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    pub fn trim(v: &mut Vec<BigInt>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    /// `1 - t^k`.
    pub fn one_minus_power(k: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); k + 1];
        v[0] = BigInt::one();
        v[k] -= BigInt::one();
        v
    }

    /// Quotient of `num / den` when the division is exact over the integers.
    pub fn div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rem: Vec<BigInt> = num.to_vec();
        trim(&mut rem);
        let mut den = den.to_vec();
        trim(&mut den);
        let lead = den.last()?.clone();
        if rem.is_empty() {
            return Some(Vec::new());
        }
        if rem.len() < den.len() {
            return None;
        }
        let shift_max = rem.len() - den.len();
        let mut q = vec![BigInt::zero(); shift_max + 1];
        for s in (0..=shift_max).rev() {
            let top = &rem[s + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in den.iter().enumerate() {
                rem[s + j] -= &c * d;
            }
            q[s] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        trim(&mut q);
        Some(q)
    }

    /// First `len` power-series coefficients of `num / den`; `den[0]` must be 1.
    pub fn series_div(num: &[BigInt], den: &[BigInt], len: usize) -> Vec<BigInt> {
        debug_assert!(den.first().is_some_and(|c| c.is_one()));
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for i in 0..len {
            let mut c = num.get(i).cloned().unwrap_or_else(BigInt::zero);
            for j in 1..den.len().min(i + 1) {
                c -= &den[j] * &out[i - j];
            }
            out.push(c);
        }
        out
    }
}
