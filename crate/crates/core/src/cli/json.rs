//! Canonical JSON encodings. Rationals are `"p/q"` strings and terms follow
//! the canonical (descending) order, so output bytes are reproducible.

use serde::{Deserialize, Serialize};

use crate::casimir::{Table, VerifyReport};
use crate::error::{Error, Result};
use crate::ratpoly::{
    parse_rat, rat_to_canonical, ClosedForm, MPoly, Partition, PowerSumPoly, UPoly,
};
use crate::tuplegraph::{enumerate_cycles, IndexTuple, SecondMin, SignConvention};

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct MPolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    parts: Vec<u32>,
    coeff_n: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ClosedFormJson {
    partitions: Vec<PartitionJson>,
}

#[derive(Serialize, Deserialize)]
struct PowerSumTermJson {
    parts: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PowerSumJson {
    partitions: Vec<PowerSumTermJson>,
}

/// Values with a canonical JSON form.
pub trait CanonicalJson {
    fn to_canonical_json(&self) -> String;
}

pub(crate) fn mpoly_json(p: &MPoly) -> MPolyJson {
    MPolyJson {
        nvars: p.nvars(),
        terms: p
            .terms()
            .map(|(m, c)| TermJson {
                c: rat_to_canonical(c),
                e: m.exponents().to_vec(),
            })
            .collect(),
    }
}

impl CanonicalJson for MPoly {
    fn to_canonical_json(&self) -> String {
        serde_json::to_string(&mpoly_json(self)).expect("serializable")
    }
}

impl CanonicalJson for ClosedForm {
    fn to_canonical_json(&self) -> String {
        let partitions = self
            .terms()
            .map(|(p, u)| PartitionJson {
                parts: p.parts().to_vec(),
                coeff_n: u.coeffs().iter().map(rat_to_canonical).collect(),
            })
            .collect();
        serde_json::to_string(&ClosedFormJson { partitions }).expect("serializable")
    }
}

impl CanonicalJson for PowerSumPoly {
    fn to_canonical_json(&self) -> String {
        let partitions = self
            .terms()
            .map(|(p, c)| PowerSumTermJson {
                parts: p.parts().to_vec(),
                c: rat_to_canonical(c),
            })
            .collect();
        serde_json::to_string(&PowerSumJson { partitions }).expect("serializable")
    }
}

pub fn emit_polynomial_json<T: CanonicalJson + ?Sized>(p: &T) -> String {
    p.to_canonical_json()
}

fn bad_json(e: serde_json::Error) -> Error {
    Error::InvalidInput(format!("malformed JSON: {e}"))
}

pub fn parse_mpoly_json(text: &str) -> Result<MPoly> {
    let j: MPolyJson = serde_json::from_str(text).map_err(bad_json)?;
    let terms = j
        .terms
        .into_iter()
        .map(|t| Ok((parse_rat(&t.c)?, t.e)))
        .collect::<Result<Vec<_>>>()?;
    MPoly::from_terms(j.nvars, terms)
}

pub fn parse_closed_form_json(text: &str) -> Result<ClosedForm> {
    let j: ClosedFormJson = serde_json::from_str(text).map_err(bad_json)?;
    let coeffs = j
        .partitions
        .into_iter()
        .map(|p| {
            let c = p
                .coeff_n
                .iter()
                .map(|s| parse_rat(s))
                .collect::<Result<Vec<_>>>()?;
            Ok((Partition::new(p.parts)?, UPoly::new(c)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClosedForm::from_coeffs(coeffs))
}

#[derive(Serialize)]
struct CycleJson {
    start: usize,
    end: usize,
    values: Vec<usize>,
    proper: bool,
    v1: usize,
    v2: String,
}

#[derive(Serialize)]
struct ElementaryJson {
    tuple: Vec<usize>,
    n: usize,
    shifted: bool,
    sign: &'static str,
    eigenvalue: MPolyJson,
    cycles: Vec<CycleJson>,
}

pub(crate) fn elementary_json(
    t: &IndexTuple,
    shifted: bool,
    sign: SignConvention,
    value: &MPoly,
) -> String {
    let closed = t.closed();
    let cycles = enumerate_cycles(t)
        .into_iter()
        .map(|c| CycleJson {
            start: c.start_pos + 1,
            end: c.end_pos + 1,
            values: c.values(&closed).to_vec(),
            proper: c.proper,
            v1: c.v1,
            v2: match c.v2 {
                SecondMin::Finite(v) => v.to_string(),
                SecondMin::Infinite => "inf".into(),
            },
        })
        .collect();
    serde_json::to_string(&ElementaryJson {
        tuple: t.entries().to_vec(),
        n: t.n(),
        shifted,
        sign: sign.name(),
        eigenvalue: mpoly_json(value),
        cycles,
    })
    .expect("serializable")
}

#[derive(Serialize)]
struct VerifyJson {
    m: usize,
    n: usize,
    shifted: bool,
    sign: &'static str,
    in_stated_range: bool,
    total: usize,
    zero: usize,
    match_literal: usize,
    match_alternating: usize,
    consistent: Vec<&'static str>,
    mismatch: Vec<Vec<usize>>,
}

pub(crate) fn verify_json(report: &VerifyReport, sign: SignConvention) -> String {
    serde_json::to_string(&VerifyJson {
        m: report.m,
        n: report.n,
        shifted: report.shifted,
        sign: sign.name(),
        in_stated_range: report.in_stated_range(),
        total: report.total(),
        zero: report.zero(),
        match_literal: report.match_count(SignConvention::Literal),
        match_alternating: report.match_count(SignConvention::Alternating),
        consistent: report
            .consistent_conventions()
            .iter()
            .map(|s| s.name())
            .collect(),
        mismatch: report
            .mismatches(sign)
            .into_iter()
            .map(|t| t.entries().to_vec())
            .collect(),
    })
    .expect("serializable")
}

#[derive(Serialize)]
struct RowJson<'a> {
    case: &'a str,
    computed: &'a str,
    printed: &'a str,
    matches: bool,
}

#[derive(Serialize)]
struct TableJson<'a> {
    m: usize,
    rows: Vec<RowJson<'a>>,
}

pub(crate) fn table_json(table: &Table) -> String {
    serde_json::to_string(&TableJson {
        m: table.m,
        rows: table
            .rows
            .iter()
            .map(|r| RowJson {
                case: r.case,
                computed: &r.computed_text,
                printed: r.printed_text,
                matches: r.matches_printed(),
            })
            .collect(),
    })
    .expect("serializable")
}
