//! `SL_2` acting on binary forms of degree `n`.
//!
//! The maximal torus acts on the `n + 1` coefficients with weights
//! `-n, -n+2, ..., n`. For `d` above a small threshold the `SL_2` exponent
//! `u_d` equals the torus exponent `m_d`; the low orders are fixed directly:
//!
//! * `n` odd: `u_1 = u_2 = n - 2`, and `u_d = m_d` for `d >= 3`.
//! * `n` even: `u_1 = n - 2`, and `u_d = m_d` for `d >= 2`.
//!
//! Both rules reproduce the Dixmier products in [`dixmier_closed`] for every
//! `n` tested, which is how they are validated.

use std::fmt;

use crate::cyclo::CycloKey;
use crate::error::{Error, Result};
use crate::factored::CycloFactored;
use crate::torus::{binary_torus_weights, torus_udenom_rank1};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Congruence {
    Odd,
    TwoMod4,
    ZeroMod4,
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Congruence::Odd => "odd",
            Congruence::TwoMod4 => "2 mod 4",
            Congruence::ZeroMod4 => "0 mod 4",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryFormsCase {
    n: u32,
    congruence: Congruence,
}

impl BinaryFormsCase {
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid(format!("binary forms need n >= 3, got {n}")));
        }
        let congruence = match n % 4 {
            1 | 3 => Congruence::Odd,
            2 => Congruence::TwoMod4,
            _ => Congruence::ZeroMod4,
        };
        Ok(BinaryFormsCase { n, congruence })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn congruence(&self) -> Congruence {
        self.congruence
    }

    /// Universal denominator of the maximal torus on the same space.
    pub fn torus_udenom(&self) -> CycloFactored {
        torus_udenom_rank1(&binary_torus_weights(self.n))
    }
}

pub fn sl2_udenom_via_torus(n: u32) -> Result<CycloFactored> {
    let case = BinaryFormsCase::new(n)?;
    let mut out = case.torus_udenom();
    let low = u64::from(n) - 2;
    let key = |d| CycloKey::univariate(d).expect("d >= 1");
    out.set_exponent(key(1), low as u32);
    if case.congruence == Congruence::Odd {
        out.set_exponent(key(2), low as u32);
    }
    Ok(out)
}

/// Dixmier's products:
///
/// * `n` odd: `prod_{k=2}^{n-1} (1-t^{2k})`
/// * `n = 2 mod 4`: `(1+t) prod_{k=2}^{n-1} (1-t^k)`
/// * `n = 0 mod 4`: `(1+t) prod_{k=2}^{n-3} (1-t^k) (1-t^{n/2-1}) (1-t^{n-1})`
pub fn dixmier_closed(n: u32) -> Result<CycloFactored> {
    let case = BinaryFormsCase::new(n)?;
    let n = u64::from(n);
    let one_plus_t = CycloFactored::from_orders([(2, 1)])?;
    Ok(match case.congruence {
        Congruence::Odd => CycloFactored::one_minus_powers((2..n).map(|k| 2 * k))?,
        Congruence::TwoMod4 => one_plus_t.mul(&CycloFactored::one_minus_powers(2..n)?),
        Congruence::ZeroMod4 => one_plus_t.mul(&CycloFactored::one_minus_powers((2..n - 2).chain([n / 2 - 1, n - 1]))?),
    })
}

/// Whether the `SL_2` universal denominator divides the torus one.
pub fn divides_check(n: u32) -> Result<bool> {
    let case = BinaryFormsCase::new(n)?;
    Ok(sl2_udenom_via_torus(n)?.divides(&case.torus_udenom()))
}
