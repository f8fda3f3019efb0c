//! Diagonal torus actions on `K^n`.
//!
//! Coordinate `y_i` has torus weight `w_i` in `Z^l` and degree `d_i` in `N^r`.
//! For a subset `I` of coordinates, let `M_I` be the lattice generated by the
//! pairs `(w_i, d_i)`. The exponent of `phi_d` in the universal denominator
//! is the largest `#I - rank span(w_i : i in I)` over subsets `I` such that
//! `0` is interior to the hull of their weights and every element of
//! `M_I` with zero weight part has degree part in `Z d`.
//!
//! The interior test guarantees a nonzero element of that kernel lattice, so
//! `I` can only contribute when the kernel has rank one, and then it
//! contributes to exactly the `d` dividing the kernel generator.
//!
//! For a one-dimensional torus with all degrees 1 the same numbers come from
//! residue classes of the weights; [`torus_udenom_rank1`] implements that
//! shortcut and [`rank1_evidence`] exposes the per-class counts.

mod lattice;
mod lp;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use lattice::{hermite_rows, split_kernel};
pub use lp::interior_contains_zero;

use crate::cyclo::{divisors, CycloKey};
use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::factored::CycloFactored;

/// Largest number of coordinates the subset enumeration accepts by default.
pub const DEFAULT_SUBSET_BOUND: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WeightSystemJson", into = "WeightSystemJson")]
pub struct WeightSystem {
    l: usize,
    r: usize,
    weights: Vec<Vec<i64>>,
    degrees: Vec<DegreeVector>,
}

/// Wire form: either the full description or just integer weights for a
/// one-dimensional torus with every degree 1.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightSystemJson {
    Full { l: usize, r: usize, weights: Vec<Vec<i64>>, degrees: Vec<Vec<u64>> },
    Rank1 { weights: Vec<i64> },
}

impl TryFrom<WeightSystemJson> for WeightSystem {
    type Error = Error;
    fn try_from(j: WeightSystemJson) -> Result<Self> {
        match j {
            WeightSystemJson::Full { l, r, weights, degrees } => {
                let degrees = degrees.into_iter().map(DegreeVector::new).collect::<Result<_>>()?;
                WeightSystem::new(l, r, weights, degrees)
            }
            WeightSystemJson::Rank1 { weights } => WeightSystem::rank_one(&weights),
        }
    }
}

impl From<WeightSystem> for WeightSystemJson {
    fn from(w: WeightSystem) -> Self {
        WeightSystemJson::Full {
            l: w.l,
            r: w.r,
            weights: w.weights,
            degrees: w.degrees.into_iter().map(Vec::from).collect(),
        }
    }
}

impl WeightSystem {
    pub fn new(l: usize, r: usize, weights: Vec<Vec<i64>>, degrees: Vec<DegreeVector>) -> Result<Self> {
        if l == 0 || r == 0 {
            return Err(Error::Invalid("torus rank and grading rank must be positive".into()));
        }
        if weights.is_empty() {
            return Err(Error::Invalid("need at least one coordinate".into()));
        }
        if weights.len() != degrees.len() {
            return Err(Error::Invalid(format!("{} weights but {} degrees", weights.len(), degrees.len())));
        }
        if let Some(w) = weights.iter().find(|w| w.len() != l) {
            return Err(Error::LengthMismatch(l, w.len()));
        }
        if let Some(d) = degrees.iter().find(|d| d.rank() != r) {
            return Err(Error::LengthMismatch(r, d.rank()));
        }
        if degrees.iter().any(|d| d.is_zero()) {
            return Err(Error::ZeroVector);
        }
        Ok(WeightSystem { l, r, weights, degrees })
    }

    /// One-dimensional torus, single grading, every degree 1.
    pub fn rank_one(weights: &[i64]) -> Result<Self> {
        Self::new(1, 1, weights.iter().map(|&w| vec![w]).collect(), vec![DegreeVector::scalar(1); weights.len()])
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn torus_rank(&self) -> usize {
        self.l
    }

    pub fn grading_rank(&self) -> usize {
        self.r
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn degrees(&self) -> &[DegreeVector] {
        &self.degrees
    }

    /// The integer weights when this is the one-dimensional, degree-one case.
    pub fn as_rank_one(&self) -> Option<Vec<i64>> {
        let simple = self.l == 1 && self.r == 1 && self.degrees.iter().all(|d| d.entries() == [1]);
        simple.then(|| self.weights.iter().map(|w| w[0]).collect())
    }

    /// Appends one coordinate.
    pub fn push(&mut self, weight: Vec<i64>, degree: DegreeVector) -> Result<()> {
        let mut w = self.weights.clone();
        let mut d = self.degrees.clone();
        w.push(weight);
        d.push(degree);
        *self = Self::new(self.l, self.r, w, d)?;
        Ok(())
    }
}

/// What a subset of coordinates looks like to the general algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetData {
    pub indices: Vec<usize>,
    pub weight_rank: usize,
    pub interior: bool,
    /// Echelon basis of `M_I` intersected with `{0} x Z^r`.
    pub kernel: Vec<Vec<i64>>,
}

/// The kernel lattice of a subset: the rank of its weight span and a basis
/// of the degree vectors reachable with zero total weight.
pub fn kernel_lattice(ws: &WeightSystem, indices: &[usize]) -> Result<(usize, Vec<Vec<i64>>)> {
    if indices.is_empty() {
        return Err(Error::Invalid("subset must be nonempty".into()));
    }
    let rows = indices
        .iter()
        .map(|&i| {
            let w = ws.weights.get(i).ok_or_else(|| Error::Invalid(format!("index {i} out of range")))?;
            Ok(w.iter()
                .map(|&x| BigInt::from(x))
                .chain(ws.degrees[i].entries().iter().map(|&x| BigInt::from(x)))
                .collect())
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    let (rank, kernel) = split_kernel(rows, ws.l);
    let kernel = kernel
        .into_iter()
        .map(|row| row.iter().map(|x| x.to_i64().ok_or(Error::Overflow("kernel lattice"))).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok((rank, kernel))
}

pub fn subset_data(ws: &WeightSystem, indices: &[usize]) -> Result<SubsetData> {
    let points: Vec<Vec<i64>> = indices.iter().map(|&i| ws.weights[i].clone()).collect();
    let interior = interior_contains_zero(&points);
    let (weight_rank, kernel) = kernel_lattice(ws, indices)?;
    Ok(SubsetData { indices: indices.to_vec(), weight_rank, interior, kernel })
}

type Credits = BTreeMap<CycloKey, u32>;

fn merge_max(mut a: Credits, b: Credits) -> Credits {
    for (k, e) in b {
        let slot = a.entry(k).or_insert(0);
        *slot = (*slot).max(e);
    }
    a
}

fn credit_subset(ws: &WeightSystem, mask: u64, credits: &mut Credits) -> Result<()> {
    let indices: Vec<usize> = (0..ws.n()).filter(|&i| mask >> i & 1 == 1).collect();
    let points: Vec<Vec<i64>> = indices.iter().map(|&i| ws.weights[i].clone()).collect();
    if !interior_contains_zero(&points) {
        return Ok(());
    }
    let (weight_rank, kernel) = kernel_lattice(ws, &indices)?;
    match kernel.len() {
        0 => Err(Error::Invalid("interior subset with trivial kernel lattice".into())),
        1 => {
            // first entry of an HNF row is positive, and the row is a
            // positive rational multiple of sum(lambda_i d_i), so it lies in N^r
            let g = kernel[0]
                .iter()
                .map(|&x| u64::try_from(x).map_err(|_| Error::Invalid("negative kernel generator".into())))
                .collect::<Result<Vec<u64>>>()?;
            let (c, p) = DegreeVector::new(g)?.split_primitive()?;
            let value = (indices.len() - weight_rank) as u32;
            for j in divisors(c) {
                let slot = credits.entry(CycloKey::new(j, p.clone())?).or_insert(0);
                *slot = (*slot).max(value);
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// Universal denominator by enumerating all subsets of coordinates.
///
/// Work is split across threads by ranges of subset bitmasks; the partial
/// results are merged by exponentwise max, so the answer does not depend on
/// the split.
pub fn torus_udenom_general(ws: &WeightSystem, subset_bound: usize) -> Result<CycloFactored> {
    let n = ws.n();
    if n > subset_bound || n > 62 {
        return Err(Error::SubsetBoundExceeded { n, bound: subset_bound.min(62) });
    }
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << 10;
    let chunks = total.div_ceil(chunk);
    let credits = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = Credits::new();
            for mask in (c * chunk).max(1)..((c + 1) * chunk).min(total) {
                credit_subset(ws, mask, &mut local)?;
            }
            Ok(local)
        })
        .try_reduce(Credits::new, |a, b| Ok(merge_max(a, b)))?;
    let mut out = CycloFactored::one();
    for (k, e) in credits {
        out.multiply_key(k, e);
    }
    Ok(out)
}

/// A residue class `residue + modulus Z` and how many weights fall in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClass {
    pub residue: i64,
    pub modulus: i64,
    pub count: usize,
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}Z:{}", self.residue, self.modulus, self.count)
    }
}

/// Classes `ab + adZ` (`a >= 1`, `1 <= b < d` coprime to `d`, `ad` at most
/// the weight spread) holding both a positive and a negative weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvidenceRow {
    pub d: u64,
    pub classes: Vec<ResidueClass>,
    pub exponent: u32,
}

impl fmt::Display for EvidenceRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={})", self.d)?;
        if self.classes.is_empty() {
            write!(f, " -")?;
        }
        for c in &self.classes {
            write!(f, " {c}")?;
        }
        write!(f, " => m_{}={}", self.d, self.exponent)
    }
}

/// Per-`d` residue-class evidence for `d = 2 ..= max - min`.
pub fn rank1_evidence(weights: &[i64]) -> Vec<EvidenceRow> {
    let (Some(&lo), Some(&hi)) = (weights.iter().min(), weights.iter().max()) else {
        return Vec::new();
    };
    let spread = hi - lo;
    let mut rows = Vec::new();
    for d in 2..=spread {
        let mut classes = Vec::new();
        for a in 1..=spread / d {
            let modulus = a * d;
            for b in 1..d {
                if b.gcd(&d) != 1 {
                    continue;
                }
                let residue = a * b;
                let members: Vec<i64> =
                    weights.iter().copied().filter(|w| (w - residue).rem_euclid(modulus) == 0).collect();
                if members.iter().any(|&w| w > 0) && members.iter().any(|&w| w < 0) {
                    classes.push(ResidueClass { residue, modulus, count: members.len() });
                }
            }
        }
        let exponent = classes.iter().map(|c| c.count as u32 - 1).max().unwrap_or(0);
        rows.push(EvidenceRow { d: d as u64, classes, exponent });
    }
    rows
}

/// Exponent of `phi_1` for a one-dimensional torus with degree-one coordinates.
pub fn rank1_phi1_exponent(weights: &[i64]) -> u32 {
    let one_sided = weights.iter().all(|&w| w >= 0) || weights.iter().all(|&w| w <= 0);
    if one_sided {
        weights.iter().filter(|&&w| w == 0).count() as u32
    } else {
        weights.len() as u32 - 1
    }
}

/// Fast path for a one-dimensional torus with every degree 1.
pub fn torus_udenom_rank1(weights: &[i64]) -> CycloFactored {
    let mut out = CycloFactored::one();
    let one = CycloKey::univariate(1).expect("order 1 is valid");
    out.multiply_key(one, rank1_phi1_exponent(weights));
    for row in rank1_evidence(weights) {
        let key = CycloKey::univariate(row.d).expect("d >= 2");
        out.multiply_key(key, row.exponent);
    }
    out
}

/// Weights `-n, -n+2, ..., n` of the maximal torus of `SL_2` on binary forms
/// of degree `n`.
pub fn binary_torus_weights(n: u32) -> Vec<i64> {
    (0..=n as i64).map(|i| 2 * i - n as i64).collect()
}

/// Closed form of the universal denominator for [`binary_torus_weights`].
///
/// * `n` odd: `(1-t^2) * prod_{k=1}^{n-1} (1-t^{2k})`
/// * `n = 2 mod 4`: `(1-t)(1-t^2) * prod_{k=2}^{n-1} (1-t^k)`
/// * `n = 0 mod 4`: `(1-t)(1-t^2) * prod_{k=2}^{n-3} (1-t^k) * (1-t^{n/2-1}) * (1-t^{n-1})`
///
/// Empty ranges are empty products; the repeated factor in the last case is kept.
pub fn binary_torus_udenom_closed(n: u32) -> Result<CycloFactored> {
    if n < 3 {
        return Err(Error::Invalid(format!("binary forms need n >= 3, got {n}")));
    }
    let n = n as u64;
    let degrees: Vec<u64> = if n % 2 == 1 {
        std::iter::once(2).chain((1..n).map(|k| 2 * k)).collect()
    } else if n % 4 == 2 {
        [1, 2].into_iter().chain(2..n).collect()
    } else {
        [1, 2].into_iter().chain(2..n - 2).chain([n / 2 - 1, n - 1]).collect()
    };
    CycloFactored::one_minus_powers(degrees)
}
