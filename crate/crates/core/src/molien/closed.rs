//! Closed forms for the symmetric and alternating groups permuting `K^n`.

use num_bigint::BigInt;
use num_traits::One;

use super::{udenom_finite, Family, GroupSpec, DEFAULT_GROUP_BOUND};
use crate::error::{Error, Result};
use crate::factored::CycloFactored;
use crate::poly::SparsePoly;
use crate::rational::{reduce_rational, RationalFn};

fn require(n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::Invalid(format!("closed form needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// `(1-t)(1-t^2)...(1-t^n)`, i.e. `prod_d phi_d^{floor(n/d)}`.
pub fn sym_udenom_closed(n: u32) -> Result<CycloFactored> {
    require(n, 2)?;
    CycloFactored::one_minus_powers(1..=n as u64)
}

/// Exponent of `phi_d` in the universal denominator of `S^{A_n}`:
/// `floor(n/d)` if `d` is odd, `floor(n/d)` is even, or
/// `d*floor(n/d) <= n-2`; one less otherwise.
fn alt_udenom_exponent(n: u32, d: u32) -> u32 {
    let q = n / d;
    if d % 2 == 1 || q.is_multiple_of(2) || d * q + 2 <= n {
        q
    } else {
        q - 1
    }
}

pub fn alt_udenom_closed(n: u32) -> Result<CycloFactored> {
    require(n, 3)?;
    CycloFactored::from_orders((1..=n).map(|d| (d as u64, alt_udenom_exponent(n, d))))
}

/// Reduced denominator of `H(S^{A_n}, t)`: `phi_d` loses one power when
/// `n(n-1)/d` is an odd integer, since those `phi_d` make up `1 + t^{n(n-1)/2}`.
pub fn alt_denom_closed(n: u32) -> Result<CycloFactored> {
    require(n, 3)?;
    let twice = (n as u64) * (n as u64 - 1);
    CycloFactored::from_orders((1..=n as u64).map(|d| {
        let q = n as u64 / d;
        let cancels = twice.is_multiple_of(d) && (twice / d) % 2 == 1;
        let e = if cancels { q.saturating_sub(1) } else { q };
        (d, e as u32)
    }))
}

/// `(1 + t^{n(n-1)/2}) / prod_{k<=n} (1 - t^k)`, reduced.
pub fn alt_hilbert_closed(n: u32) -> Result<RationalFn> {
    require(n, 3)?;
    let disc = (n as i64) * (n as i64 - 1) / 2;
    let numer = SparsePoly::from_terms(1, [(vec![0], BigInt::one()), (vec![disc], BigInt::one())]);
    reduce_rational(&numer, &CycloFactored::one_minus_powers(1..=n as u64)?)
}

/// A disagreement between the closed-form exponent and enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormMismatch {
    pub order: u64,
    pub closed: u32,
    pub enumerated: u32,
}

/// Compares [`alt_udenom_closed`] against class enumeration, exponent by exponent.
pub fn alt_closed_form_mismatches(n: u32) -> Result<Vec<ClosedFormMismatch>> {
    let closed = alt_udenom_closed(n)?;
    let enumerated = udenom_finite(&GroupSpec::Family(Family::alternating(n)), DEFAULT_GROUP_BOUND)?;
    let mut out = Vec::new();
    for d in 1..=n as u64 {
        let (c, e) = (closed.exponent_of(d), enumerated.exponent_of(d));
        if c != e {
            out.push(ClosedFormMismatch { order: d, closed: c, enumerated: e });
        }
    }
    Ok(out)
}
