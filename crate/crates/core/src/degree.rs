//! Multidegrees in `N^r` and the divisibility order on them.
//!
//! `d` divides `e` when `e = k*d` for some natural number `k`. Two vectors
//! need not have a common nonzero multiple at all, in which case their lcm
//! is the zero vector.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A multidegree: `r >= 1` nonnegative entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DegreeVector(Vec<u64>);

impl DegreeVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Invalid("degree vector needs at least one entry".into()));
        }
        Ok(DegreeVector(entries))
    }

    /// The univariate degree `(d)`.
    pub fn scalar(d: u64) -> Self {
        DegreeVector(vec![d])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// gcd of the entries; zero for the zero vector.
    pub fn content(&self) -> u64 {
        self.0.iter().fold(0, |g, &x| g.gcd(&x))
    }

    /// Splits `d = k*p` with `k` the content and `p` primitive.
    pub fn split_primitive(&self) -> Result<(u64, DegreeVector)> {
        let k = self.content();
        if k == 0 {
            return Err(Error::ZeroVector);
        }
        Ok((k, DegreeVector(self.0.iter().map(|x| x / k).collect())))
    }

    pub fn scale(&self, k: u64) -> DegreeVector {
        DegreeVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    fn check_pair(&self, other: &DegreeVector) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::LengthMismatch(self.rank(), other.rank()));
        }
        Ok(())
    }

    /// `true` iff `other = k*self` for some `k` in `N`.
    pub fn divides(&self, other: &DegreeVector) -> Result<bool> {
        self.check_pair(other)?;
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let mut ratio: Option<u64> = None;
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a == 0 {
                if b != 0 {
                    return Ok(false);
                }
                continue;
            }
            if b % a != 0 {
                return Ok(false);
            }
            let k = b / a;
            match ratio {
                None => ratio = Some(k),
                Some(r) if r != k => return Ok(false),
                _ => {}
            }
        }
        Ok(true)
    }

    /// Smallest nonzero common multiple, or the zero vector when none exists.
    pub fn lcm(&self, other: &DegreeVector) -> Result<DegreeVector> {
        self.check_pair(other)?;
        let (k1, p1) = self.split_primitive()?;
        let (k2, p2) = other.split_primitive()?;
        if p1 != p2 {
            return Ok(DegreeVector(vec![0; self.rank()]));
        }
        Ok(p1.scale(k1.lcm(&k2)))
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u64>> for DegreeVector {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        DegreeVector::new(v)
    }
}

impl From<DegreeVector> for Vec<u64> {
    fn from(d: DegreeVector) -> Vec<u64> {
        d.0
    }
}

/// `d | e` in the sense of `e = k*d`. Rejects zero `d`.
pub fn vec_divides(d: &DegreeVector, e: &DegreeVector) -> Result<bool> {
    d.divides(e)
}

/// Least nonzero common multiple, or zero if none exists. Rejects zero inputs.
pub fn vec_lcm(d: &DegreeVector, e: &DegreeVector) -> Result<DegreeVector> {
    d.lcm(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[u64]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn divides_examples() {
        assert!(vec_divides(&dv(&[2, 1]), &dv(&[6, 3])).unwrap());
        assert!(!vec_divides(&dv(&[4, 2]), &dv(&[6, 3])).unwrap());
        assert!(vec_divides(&dv(&[1]), &dv(&[0])).unwrap());
        assert!(!vec_divides(&dv(&[1, 0]), &dv(&[1, 1])).unwrap());
        assert_eq!(vec_divides(&dv(&[0, 0]), &dv(&[1, 1])), Err(Error::ZeroVector));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(vec_lcm(&dv(&[4, 2]), &dv(&[6, 3])).unwrap(), dv(&[12, 6]));
        assert_eq!(vec_lcm(&dv(&[4, 2]), &dv(&[2, 2])).unwrap(), dv(&[0, 0]));
        assert_eq!(vec_lcm(&dv(&[3]), &dv(&[3])).unwrap(), dv(&[3]));
        assert_eq!(vec_lcm(&dv(&[0]), &dv(&[3])), Err(Error::ZeroVector));
        assert!(matches!(vec_lcm(&dv(&[1]), &dv(&[1, 2])), Err(Error::LengthMismatch(1, 2))));
    }

    #[test]
    fn lcm_is_divisible_by_both() {
        for a in 1..8u64 {
            for b in 0..8u64 {
                for c in 1..8u64 {
                    for e in 0..8u64 {
                        let (x, y) = (dv(&[a, b]), dv(&[c, e]));
                        let l = x.lcm(&y).unwrap();
                        if !l.is_zero() {
                            assert!(x.divides(&l).unwrap() && y.divides(&l).unwrap());
                        }
                    }
                }
            }
        }
    }
}
