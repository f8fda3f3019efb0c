//! Reproduces every published example the tool can check and reports
//! pass/fail per item.
//!
//! Items that expand cyclotomic polynomials take them from the supplied
//! [`CycloSource`], so a corrupted table only breaks the items that use it.

use std::fmt::Write as _;

use num_bigint::BigInt;
use udenom::binary_forms::{dixmier_closed, sl2_udenom_via_torus};
use udenom::molien::{
    alt_denom_closed, alt_hilbert_closed, molien_series_with, udenom_finite, Family, GroupSpec, DEFAULT_GROUP_BOUND,
};
use udenom::rational::reduce_rational_with;
use udenom::torus::{
    binary_torus_udenom_closed, rank1_evidence, torus_udenom_general, torus_udenom_rank1, WeightSystem,
    DEFAULT_SUBSET_BOUND,
};
use udenom::{
    cyclo_expand_with, series_expand, vec_lcm, CycloFactored, CycloKey, CycloSource, DegreeVector, RationalFn,
    SparsePoly,
};

use crate::commands::{cmd_binary_forms, cmd_cyclo, cmd_finite, cmd_torus, CycloOp, Method};
use crate::output::OutputForm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportItem {
    pub id: &'static str,
    pub claim: String,
    pub passed: bool,
    /// What was computed, shown on failure.
    pub actual: String,
}

type Check = Box<dyn Fn(&dyn CycloSource) -> Result<(bool, String), String>>;

fn fac(s: &str) -> CycloFactored {
    s.parse().expect("report literals are well formed")
}

fn powers(k: &[u64]) -> CycloFactored {
    CycloFactored::one_minus_powers(k.iter().copied()).expect("positive degrees")
}

fn dv(v: &[u64]) -> DegreeVector {
    DegreeVector::new(v.to_vec()).expect("nonempty")
}

fn poly(c: &[i64]) -> SparsePoly {
    SparsePoly::from_dense(&c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

fn same(expected: &CycloFactored, actual: Result<CycloFactored, udenom::Error>) -> Result<(bool, String), String> {
    let a = actual.map_err(|e| e.to_string())?;
    Ok((&a == expected, a.to_string()))
}

fn contains(out: Result<String, crate::CliError>, needle: &str) -> Result<(bool, String), String> {
    let out = out.map_err(|e| e.message)?;
    let hit = out.lines().any(|l| l.contains(needle));
    Ok((hit, out.trim_end().replace('\n', " | ")))
}

const TORUS_WEIGHTS: [i64; 5] = [-3, -2, 2, 5, 6];

fn items() -> Vec<(&'static str, String, Check)> {
    let torus_expect = fac("phi_1^4 * phi_2^2 * phi_3 * phi_4 * phi_5 * phi_7 * phi_8");
    let a10 = fac("phi_1^10 * phi_2^4 * phi_3^3 * phi_4^2 * phi_5^2 * phi_6 * phi_7 * phi_8 * phi_9");
    let a10_denom = fac("phi_1^10 * phi_2^4 * phi_3^3 * phi_4^2 * phi_5^2 * phi_7 * phi_8 * phi_9");
    let phi2 = fac("phi_2");
    let mut v: Vec<(&'static str, String, Check)> = Vec::new();

    v.push((
        "lcm-vec-1",
        "lcm((4,2),(6,3)) = (12,6)".into(),
        Box::new(|_| {
            let l = vec_lcm(&dv(&[4, 2]), &dv(&[6, 3])).map_err(|e| e.to_string())?;
            Ok((l == dv(&[12, 6]), l.to_string()))
        }),
    ));
    v.push((
        "lcm-vec-2",
        "lcm((4,2),(2,2)) = (0,0)".into(),
        Box::new(|_| {
            let l = vec_lcm(&dv(&[4, 2]), &dv(&[2, 2])).map_err(|e| e.to_string())?;
            Ok((l == dv(&[0, 0]), l.to_string()))
        }),
    ));
    v.push((
        "cyclo-phi6",
        "phi_6(t) = 1 - t + t^2".into(),
        Box::new(|src| {
            let p = cyclo_expand_with(&CycloKey::univariate(6).unwrap(), src);
            Ok((p.to_string() == "1 - t + t^2", p.to_string()))
        }),
    ));
    v.push((
        "reduce-quotient-ring",
        "(1+t)/(1-t^2) reduces to 1/(1-t)".into(),
        Box::new(|src| {
            let r = reduce_rational_with(&poly(&[1, 1]), &powers(&[2]), src).map_err(|e| e.to_string())?;
            Ok((r == RationalFn::reciprocal_of(fac("phi_1")), r.to_string()))
        }),
    ));
    v.push((
        "reduce-ideal",
        "t/(1-t^2) is already reduced".into(),
        Box::new(|src| {
            let r = reduce_rational_with(&poly(&[0, 1]), &powers(&[2]), src).map_err(|e| e.to_string())?;
            Ok((r == RationalFn::new(poly(&[0, 1]), powers(&[2])), r.to_string()))
        }),
    ));
    v.push((
        "series-quotient-ring",
        "(1+t)/(1-t^2) to order 4 is 1 1 1 1 1".into(),
        Box::new(|_| {
            let s = series_expand(&RationalFn::new(poly(&[1, 1]), powers(&[2])), 4).map_err(|e| e.to_string())?;
            Ok((s == vec![BigInt::from(1); 5], format!("{s:?}")))
        }),
    ));
    v.push((
        "sym3-udenom",
        "udenom of S_3 on K^3 = (1-t)(1-t^2)(1-t^3)".into(),
        Box::new(|_| {
            let g = GroupSpec::Family(Family::symmetric(3));
            same(&powers(&[1, 2, 3]), udenom_finite(&g, DEFAULT_GROUP_BOUND))
        }),
    ));
    v.push((
        "sym3-molien",
        "H of S_3 on K^3 = 1/((1-t)(1-t^2)(1-t^3))".into(),
        Box::new(|src| {
            let c = GroupSpec::Family(Family::symmetric(3)).classes(DEFAULT_GROUP_BOUND).map_err(|e| e.to_string())?;
            let h = molien_series_with(&c.classes, c.order, src).map_err(|e| e.to_string())?;
            Ok((h == RationalFn::reciprocal_of(powers(&[1, 2, 3])), h.to_string()))
        }),
    ));
    {
        let a10 = a10.clone();
        v.push((
            "a10-udenom",
            format!("udenom of A_10 on K^10 = {a10}"),
            Box::new(move |src| {
                let g = GroupSpec::Family(Family::alternating(10));
                let u = udenom_finite(&g, DEFAULT_GROUP_BOUND).map_err(|e| e.to_string())?;
                // expanded through the table, it must still be a polynomial of the right degree
                let dense = u.expand_dense_with(src).map_err(|e| e.to_string())?;
                let direct = a10.expand_dense_with(&udenom::ExactCyclo).map_err(|e| e.to_string())?;
                Ok((u == a10 && dense == direct, u.to_string()))
            }),
        ));
    }
    {
        let a10_denom = a10_denom.clone();
        v.push((
            "a10-denom-closed",
            format!("denom of H(A_10) = {a10_denom}"),
            Box::new(move |_| same(&a10_denom, alt_denom_closed(10))),
        ));
    }
    {
        let a10 = a10.clone();
        v.push((
            "a10-gap",
            "udenom of A_10 has the extra factor phi_6 over denom(H)".into(),
            Box::new(move |src| {
                let h = alt_hilbert_closed(10).map_err(|e| e.to_string())?;
                let unreduced = powers(&(1..=10).collect::<Vec<_>>());
                let mut top = vec![BigInt::from(0); 46];
                top[0] = BigInt::from(1);
                top[45] = BigInt::from(1);
                let r =
                    reduce_rational_with(&SparsePoly::from_dense(&top), &unreduced, src).map_err(|e| e.to_string())?;
                let gap = a10.ratio(&r.denominator);
                Ok((r == h && gap.to_string() == "phi_6", gap.to_string()))
            }),
        ));
    }
    v.push((
        "alt3-hilbert",
        "H of A_3 on K^3 = (1+t^3)/((1-t)(1-t^2)(1-t^3))".into(),
        Box::new(|_| {
            let h = alt_hilbert_closed(3).map_err(|e| e.to_string())?;
            let want = RationalFn::new(poly(&[1, 0, 0, 1]), powers(&[1, 2, 3]));
            Ok((h.same_function(&want).map_err(|e| e.to_string())?, h.to_string()))
        }),
    ));
    {
        let expect = torus_expect.clone();
        v.push((
            "torus-general",
            format!("weights -3,-2,2,5,6 give {expect} by subset enumeration"),
            Box::new(move |_| {
                let ws = WeightSystem::rank_one(&TORUS_WEIGHTS).unwrap();
                same(&expect, torus_udenom_general(&ws, DEFAULT_SUBSET_BOUND))
            }),
        ));
    }
    {
        let expect = torus_expect.clone();
        v.push((
            "torus-rank1",
            format!("weights -3,-2,2,5,6 give {expect} by residue classes"),
            Box::new(move |_| same(&expect, Ok(torus_udenom_rank1(&TORUS_WEIGHTS)))),
        ));
    }
    v.push((
        "torus-m2-class",
        "m_2 = 2 through the class 2+4Z of size 3".into(),
        Box::new(|_| {
            let row = rank1_evidence(&TORUS_WEIGHTS).into_iter().find(|r| r.d == 2).unwrap();
            let hit = row.classes.iter().any(|c| c.to_string() == "2+4Z:3");
            Ok((hit && row.exponent == 2, row.to_string()))
        }),
    ));
    v.push((
        "torus-m6-empty",
        "no class qualifies for d = 6, so m_6 = 0".into(),
        Box::new(|_| {
            let row = rank1_evidence(&TORUS_WEIGHTS).into_iter().find(|r| r.d == 6).unwrap();
            Ok((row.classes.is_empty() && row.exponent == 0, row.to_string()))
        }),
    ));
    for (id, n, want) in [
        ("binary-torus-3", 3, vec![2, 2, 4]),
        ("binary-torus-6", 6, vec![1, 2, 2, 3, 4, 5]),
        ("binary-torus-5", 5, vec![2, 2, 4, 6, 8]),
    ] {
        let expect = powers(&want);
        v.push((
            id,
            format!("maximal torus on binary forms of degree {n}: {expect}"),
            Box::new(move |_| {
                let closed = binary_torus_udenom_closed(n).map_err(|e| e.to_string())?;
                let enumerated = torus_udenom_rank1(&udenom::torus::binary_torus_weights(n));
                Ok((closed == expect && enumerated == expect, closed.to_string()))
            }),
        ));
    }
    for (id, n, want) in [
        ("sl2-3", 3u32, fac("phi_1 * phi_2 * phi_4")),
        ("sl2-6", 6, phi2.mul(&powers(&[2, 3, 4, 5]))),
        ("sl2-8", 8, phi2.mul(&powers(&[2, 3, 4, 5, 3, 7]))),
    ] {
        v.push((
            id,
            format!("SL_2 on binary forms of degree {n}: {want}"),
            Box::new(move |_| same(&want, sl2_udenom_via_torus(n))),
        ));
    }
    for (id, n, want) in
        [("dixmier-5", 5u32, powers(&[4, 6, 8])), ("dixmier-10", 10, phi2.mul(&powers(&[2, 3, 4, 5, 6, 7, 8, 9])))]
    {
        v.push((id, format!("Dixmier product for n = {n}: {want}"), Box::new(move |_| same(&want, dixmier_closed(n)))));
    }
    v.push((
        "cli-finite-sym3",
        "finite on symmetric 3 prints udenom = (1-t)(1-t^2)(1-t^3); denom(H) = same".into(),
        Box::new(|src| {
            let out = cmd_finite(
                r#"{"kind":"family","name":"symmetric","n":3}"#,
                OutputForm::Factored,
                None,
                DEFAULT_GROUP_BOUND,
                src,
            );
            contains(out, "udenom = (1-t)(1-t^2)(1-t^3); denom(H) = same")
        }),
    ));
    v.push((
        "cli-finite-a10",
        "finite on alternating 10 reports udenom = denom(H) * phi_6".into(),
        Box::new(|src| {
            let out = cmd_finite(
                r#"{"kind":"family","name":"alternating","n":10}"#,
                OutputForm::Factored,
                None,
                DEFAULT_GROUP_BOUND,
                src,
            );
            contains(out, "summary: udenom = denom(H) * phi_6")
        }),
    ));
    v.push((
        "torus-evidence-d2",
        "d = 2 evidence row reads (d=2) 1+2Z:2 2+4Z:3 3+6Z:2 => m_2=2".into(),
        Box::new(|_| {
            let row = rank1_evidence(&TORUS_WEIGHTS).into_iter().find(|r| r.d == 2).unwrap();
            Ok((row.to_string() == "(d=2) 1+2Z:2 2+4Z:3 3+6Z:2 => m_2=2", row.to_string()))
        }),
    ));
    v.push((
        "cli-torus-evidence",
        "torus command prints the row (d=2) 1+2Z:2 2+4Z:3 3+6Z:2 => m_2=2".into(),
        Box::new(|_| {
            let out = cmd_torus(r#"{"weights":[-3,-2,2,5,6]}"#, OutputForm::Factored, DEFAULT_SUBSET_BOUND);
            let out = out.map_err(|e| e.message)?;
            let row = out.lines().find(|l| l.starts_with("(d=2)")).unwrap_or("").to_string();
            Ok((row == "(d=2) 1+2Z:2 2+4Z:3 3+6Z:2 => m_2=2", row))
        }),
    ));
    v.push((
        "cli-binary-6-both",
        "binary-forms 6 --method both prints identical results".into(),
        Box::new(|_| {
            let out = cmd_binary_forms(6, Method::Both, OutputForm::Factored).map_err(|e| e.message)?;
            let pick = |p: &str| out.lines().find_map(|l| l.strip_prefix(p)).map(str::to_string);
            let (t, c) = (pick("torus: "), pick("closed: "));
            Ok((t.is_some() && t == c, out.trim_end().replace('\n', " | ")))
        }),
    ));
    v.push((
        "cli-cyclo-expand-6",
        "cyclo expand 6 prints 1 - t + t^2".into(),
        Box::new(|src| {
            let out = cmd_cyclo(&CycloOp::Expand("6".into()), OutputForm::Factored, src).map_err(|e| e.message)?;
            Ok((out == "1 - t + t^2\n", out.trim_end().to_string()))
        }),
    ));
    v
}

/// Runs every item against `source`.
pub fn paper_report(source: &dyn CycloSource) -> Vec<ReportItem> {
    items()
        .into_iter()
        .map(|(id, claim, check)| {
            let (passed, actual) = match check(source) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            ReportItem { id, claim, passed, actual }
        })
        .collect()
}

pub fn render_report(items: &[ReportItem]) -> String {
    let mut out = String::new();
    for it in items {
        let tag = if it.passed { "pass" } else { "FAIL" };
        writeln!(out, "[{tag}] {}: {}", it.id, it.claim).unwrap();
        if !it.passed {
            writeln!(out, "       got: {}", it.actual).unwrap();
        }
    }
    let ok = items.iter().filter(|i| i.passed).count();
    writeln!(out, "{ok}/{} items passed", items.len()).unwrap();
    out
}
