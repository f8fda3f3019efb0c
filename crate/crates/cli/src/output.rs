//! Output modes and the versioned JSON documents.
//!
//! Every JSON document carries `"schema": 1`. Documents are plain structs
//! with a fixed field order, so parsing an emitted document and serializing
//! it again reproduces the same bytes.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use udenom::{CycloFactored, CycloKey, DegreeVector, SparsePoly};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputForm {
    /// `phi_d^e` products, one result per line.
    #[default]
    Factored,
    /// Versioned JSON document.
    Json,
    /// Expanded coefficients in ascending degree.
    Coeffs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub degree: Vec<u64>,
    pub exponent: u32,
}

pub fn factors_json(f: &CycloFactored) -> Vec<FactorJson> {
    f.iter().map(|(k, e)| FactorJson { degree: k.degree().into(), exponent: e }).collect()
}

pub fn factors_from_json(v: &[FactorJson]) -> Result<CycloFactored, CliError> {
    let mut out = CycloFactored::one();
    for f in v {
        let d = DegreeVector::new(f.degree.clone())?;
        out.multiply_key(CycloKey::from_degree(&d)?, f.exponent);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exponent: Vec<i64>,
    pub coefficient: String,
}

pub fn poly_json(p: &SparsePoly) -> Vec<TermJson> {
    p.terms().map(|(e, c)| TermJson { exponent: e.to_vec(), coefficient: c.to_string() }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalJson {
    pub numerator: Vec<TermJson>,
    pub denominator: Vec<FactorJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteDoc {
    pub schema: u32,
    pub command: String,
    pub group_order: String,
    pub dim: u32,
    pub udenom: Vec<FactorJson>,
    pub hilbert: RationalJson,
    pub quotient: Vec<FactorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvidenceJson {
    pub d: u64,
    pub classes: Vec<String>,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusDoc {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    pub udenom: Vec<FactorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Vec<EvidenceJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinaryFormsDoc {
    pub schema: u32,
    pub command: String,
    pub n: u32,
    pub congruence: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<Vec<FactorJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<Vec<FactorJson>>,
    pub maximal_torus: Vec<FactorJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycloDoc {
    pub schema: u32,
    pub command: String,
    pub op: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Vec<TermJson>>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// Writes `f` as `(1-t^a)(1-t^b)...` when it splits that way, peeling the
/// largest order first.
pub fn one_minus_product(f: &CycloFactored) -> Option<String> {
    if !f.is_univariate() || f.is_one() {
        return None;
    }
    let mut left: Vec<(u64, u32)> = f.iter().map(|(k, e)| (k.order(), e)).collect();
    let mut degrees = Vec::new();
    while let Some(&(d, _)) = left.iter().rev().find(|(_, e)| *e > 0) {
        for j in (1..=d).filter(|j| d % j == 0) {
            let slot = left.iter_mut().find(|(o, e)| *o == j && *e > 0)?;
            slot.1 -= 1;
        }
        degrees.push(d);
    }
    degrees.sort_unstable();
    Some(degrees.iter().map(|&k| if k == 1 { "(1-t)".to_string() } else { format!("(1-t^{k})") }).collect())
}

pub fn coeff_line(c: &[BigInt]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Expanded coefficients of a factored product; multivariate products are
/// printed as polynomials instead.
pub fn expanded(f: &CycloFactored) -> Result<String, CliError> {
    if f.is_univariate() {
        Ok(coeff_line(&f.expand_dense_with(&udenom::ExactCyclo)?))
    } else {
        Ok(f.expand()?.to_string())
    }
}
