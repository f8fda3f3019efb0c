use std::fmt::Write as _;

use clap::ValueEnum;
use udenom::binary_forms::{dixmier_closed, sl2_udenom_via_torus, BinaryFormsCase};
use udenom::molien::{molien_series_with, udenom_from_classes, GroupSpec};
use udenom::torus::{rank1_evidence, torus_udenom_general, torus_udenom_rank1, WeightSystem};
use udenom::{cyclo_expand_with, factor_one_minus, series_expand, CycloFactored, CycloKey, CycloSource, DegreeVector};

use crate::error::CliError;
use crate::output::{
    coeff_line, expanded, factors_json, one_minus_product, poly_json, to_json, BinaryFormsDoc, CycloDoc, EvidenceJson,
    FiniteDoc, OutputForm, RationalJson, TorusDoc, SCHEMA_VERSION,
};

type Result<T> = std::result::Result<T, CliError>;

fn with_product(f: &CycloFactored) -> String {
    match one_minus_product(f) {
        Some(p) => format!("{f} = {p}"),
        None => f.to_string(),
    }
}

pub fn cmd_finite(
    input: &str,
    form: OutputForm,
    order: Option<usize>,
    bound: u64,
    source: &dyn CycloSource,
) -> Result<String> {
    let spec: GroupSpec = serde_json::from_str(input)?;
    let classes = spec.classes(bound)?;
    let udenom = udenom_from_classes(&classes)?;
    let hilbert = molien_series_with(&classes.classes, classes.order, source)?;
    let quotient = udenom.checked_div(&hilbert.denominator).ok_or_else(|| {
        CliError::consistency(format!(
            "denominator {} of the Hilbert series does not divide {}",
            hilbert.denominator, udenom
        ))
    })?;
    let series = order.map(|k| series_expand(&hilbert, k)).transpose()?;

    let mut out = String::new();
    match form {
        OutputForm::Factored => {
            writeln!(out, "group: order {}, acting on K^{}", classes.order, classes.dim).unwrap();
            writeln!(out, "udenom = {}", with_product(&udenom)).unwrap();
            writeln!(out, "denom(H) = {}", with_product(&hilbert.denominator)).unwrap();
            writeln!(out, "H(t) = {hilbert}").unwrap();
            let shown = one_minus_product(&udenom).unwrap_or_else(|| udenom.to_string());
            if quotient.is_one() {
                writeln!(out, "summary: udenom = {shown}; denom(H) = same").unwrap();
            } else {
                writeln!(out, "summary: udenom = denom(H) * {quotient}").unwrap();
            }
            if let Some(s) = &series {
                writeln!(out, "series: {}", coeff_line(s)).unwrap();
            }
        }
        OutputForm::Json => {
            let doc = FiniteDoc {
                schema: SCHEMA_VERSION,
                command: "finite".into(),
                group_order: classes.order.to_string(),
                dim: classes.dim,
                udenom: factors_json(&udenom),
                hilbert: RationalJson {
                    numerator: poly_json(&hilbert.numerator),
                    denominator: factors_json(&hilbert.denominator),
                },
                quotient: factors_json(&quotient),
                series: series.map(|s| s.iter().map(|c| c.to_string()).collect()),
            };
            out = to_json(&doc);
        }
        OutputForm::Coeffs => {
            writeln!(out, "udenom: {}", expanded(&udenom)?).unwrap();
            writeln!(out, "denom(H): {}", expanded(&hilbert.denominator)?).unwrap();
            let (shift, num) = hilbert.numerator.to_dense()?;
            writeln!(out, "numerator (from t^{shift}): {}", coeff_line(&num)).unwrap();
            if let Some(s) = &series {
                writeln!(out, "series: {}", coeff_line(s)).unwrap();
            }
        }
    }
    Ok(out)
}

pub fn cmd_torus(input: &str, form: OutputForm, subset_bound: usize) -> Result<String> {
    let ws: WeightSystem = serde_json::from_str(input)?;
    let rank_one = ws.as_rank_one();
    let general = if rank_one.is_none() || ws.n() <= subset_bound {
        Some(torus_udenom_general(&ws, subset_bound)?)
    } else {
        None
    };
    let fast = rank_one.as_deref().map(torus_udenom_rank1);
    if let (Some(g), Some(f)) = (&general, &fast) {
        if g != f {
            return Err(CliError::consistency(format!("subset enumeration gives {g} but residue classes give {f}")));
        }
    }
    let udenom = general.clone().or(fast.clone()).expect("one method always runs");
    let evidence = rank_one.as_deref().map(rank1_evidence);

    let mut out = String::new();
    match form {
        OutputForm::Factored => {
            writeln!(out, "n = {}, torus rank {}, grading rank {}", ws.n(), ws.torus_rank(), ws.grading_rank())
                .unwrap();
            for row in evidence.iter().flatten() {
                writeln!(out, "{row}").unwrap();
            }
            writeln!(out, "udenom = {udenom}").unwrap();
            match (&general, &fast) {
                (Some(_), Some(_)) => writeln!(out, "check: subset enumeration agrees with residue classes"),
                (None, Some(_)) => writeln!(out, "check: residue classes only (n above subset bound {subset_bound})"),
                _ => writeln!(out, "check: subset enumeration only"),
            }
            .unwrap();
        }
        OutputForm::Json => {
            let doc = TorusDoc {
                schema: SCHEMA_VERSION,
                command: "torus".into(),
                n: ws.n(),
                udenom: factors_json(&udenom),
                evidence: evidence.map(|rows| {
                    rows.iter()
                        .map(|r| EvidenceJson {
                            d: r.d,
                            classes: r.classes.iter().map(|c| c.to_string()).collect(),
                            exponent: r.exponent,
                        })
                        .collect()
                }),
            };
            out = to_json(&doc);
        }
        OutputForm::Coeffs => writeln!(out, "udenom: {}", expanded(&udenom)?).unwrap(),
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Maximal torus plus the low-order correction.
    Torus,
    /// Dixmier's closed products.
    Closed,
    #[default]
    Both,
}

pub fn cmd_binary_forms(n: u32, method: Method, form: OutputForm) -> Result<String> {
    let case = BinaryFormsCase::new(n)?;
    let torus = matches!(method, Method::Torus | Method::Both).then(|| sl2_udenom_via_torus(n)).transpose()?;
    let closed = matches!(method, Method::Closed | Method::Both).then(|| dixmier_closed(n)).transpose()?;
    if let (Some(a), Some(b)) = (&torus, &closed) {
        if a != b {
            return Err(CliError::consistency(format!("torus pipeline gives {a}, closed form gives {b}")));
        }
    }
    let maximal = case.torus_udenom();
    let mut out = String::new();
    match form {
        OutputForm::Factored => {
            writeln!(out, "n = {n} ({})", case.congruence()).unwrap();
            if let Some(t) = &torus {
                writeln!(out, "torus: {t}").unwrap();
            }
            if let Some(c) = &closed {
                writeln!(out, "closed: {c}").unwrap();
            }
            if torus.is_some() && closed.is_some() {
                writeln!(out, "methods agree").unwrap();
            }
            let result = torus.as_ref().or(closed.as_ref()).expect("at least one method");
            writeln!(out, "maximal torus: {maximal}").unwrap();
            let verdict = if result.divides(&maximal) { "yes" } else { "no" };
            writeln!(out, "divides maximal torus: {verdict}").unwrap();
        }
        OutputForm::Json => {
            let doc = BinaryFormsDoc {
                schema: SCHEMA_VERSION,
                command: "binary-forms".into(),
                n,
                congruence: case.congruence().to_string(),
                torus: torus.as_ref().map(factors_json),
                closed: closed.as_ref().map(factors_json),
                maximal_torus: factors_json(&maximal),
            };
            out = to_json(&doc);
        }
        OutputForm::Coeffs => {
            let result = torus.as_ref().or(closed.as_ref()).expect("at least one method");
            writeln!(out, "udenom: {}", expanded(result)?).unwrap();
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloOp {
    /// Expand `phi_d`.
    Expand(String),
    /// Factor `1 - t^d`.
    Factor(String),
    Lcm(String, String),
    Gcd(String, String),
}

/// Accepts `6`, `4,2` or `(4,2)`.
pub fn parse_degree(s: &str) -> Result<DegreeVector> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let entries = body
        .split(',')
        .map(|x| x.trim().parse::<u64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| CliError::parse(format!("bad degree {s:?}")))?;
    Ok(DegreeVector::new(entries)?)
}

fn parse_factored(s: &str) -> Result<CycloFactored> {
    Ok(s.parse()?)
}

pub fn cmd_cyclo(op: &CycloOp, form: OutputForm, source: &dyn CycloSource) -> Result<String> {
    let (name, factors, poly) = match op {
        CycloOp::Expand(d) => {
            let key = CycloKey::from_degree(&parse_degree(d)?)?;
            ("expand", None, Some(cyclo_expand_with(&key, source)))
        }
        CycloOp::Factor(d) => ("factor", Some(factor_one_minus(&parse_degree(d)?)?), None),
        CycloOp::Lcm(a, b) => ("lcm", Some(parse_factored(a)?.lcm(&parse_factored(b)?)), None),
        CycloOp::Gcd(a, b) => ("gcd", Some(parse_factored(a)?.gcd(&parse_factored(b)?)), None),
    };
    Ok(match form {
        OutputForm::Json => to_json(&CycloDoc {
            schema: SCHEMA_VERSION,
            command: "cyclo".into(),
            op: name.into(),
            factors: factors.as_ref().map(factors_json),
            polynomial: poly.as_ref().map(poly_json),
        }),
        OutputForm::Factored => match (factors, poly) {
            (Some(f), _) => format!("{f}\n"),
            (_, Some(p)) => format!("{p}\n"),
            _ => unreachable!(),
        },
        OutputForm::Coeffs => match (factors, poly) {
            (Some(f), _) => format!("{}\n", expanded(&f)?),
            (_, Some(p)) if p.nvars() == 1 => format!("{}\n", coeff_line(&p.to_dense()?.1)),
            (_, Some(p)) => format!("{p}\n"),
            _ => unreachable!(),
        },
    })
}
