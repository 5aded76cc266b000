//! Symbolic eigenvalue tables for orders 2 and 3, one row per relative-order
//! case, in the shifted parameters.
//!
//! Polynomials here live in `2m + 1` symbols: `alpha_{i_1..i_m}`, then
//! `i_1..i_m`, then `n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ratpoly::{rat, rat_int, MPoly};
use crate::tuplegraph::{cycle_product, IndexTuple, LinearFactor, SignConvention};

use super::sum::{patterns, tuple_at, tuple_count};

#[derive(Clone, Debug)]
pub struct TableRow {
    pub case: &'static str,
    pub computed: MPoly,
    pub computed_text: String,
    pub printed: MPoly,
    pub printed_text: &'static str,
    /// Every relative-order pattern of the case gave the same polynomial.
    pub consistent: bool,
    cond: fn(&[usize]) -> bool,
}

impl TableRow {
    pub fn matches_printed(&self) -> bool {
        self.consistent && self.computed == self.printed
    }

    pub fn applies_to(&self, entries: &[usize]) -> bool {
        (self.cond)(entries)
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub m: usize,
    pub rows: Vec<TableRow>,
}

struct Symbols {
    m: usize,
}

impl Symbols {
    fn nvars(&self) -> usize {
        2 * self.m + 1
    }

    fn alpha(&self, k: usize) -> MPoly {
        MPoly::var(self.nvars(), k - 1)
    }

    fn index(&self, k: usize) -> MPoly {
        MPoly::var(self.nvars(), self.m + k - 1)
    }

    fn n(&self) -> MPoly {
        MPoly::var(self.nvars(), 2 * self.m)
    }

    fn c(&self, v: i64) -> MPoly {
        MPoly::constant(self.nvars(), rat_int(v))
    }

    /// `alpha_{i_k} + (n+1)/2 - i_k`
    fn beta(&self, k: usize) -> MPoly {
        let half_n = self.n().scale(&rat(1, 2));
        &(&(&self.alpha(k) + &half_n) + &MPoly::constant(self.nvars(), rat(1, 2))) - &self.index(k)
    }

    /// `-alpha_{i_a} + alpha_{i_b} + i_a - i_b`
    fn diff(&self, a: usize, b: usize) -> MPoly {
        &(&(&self.alpha(b) - &self.alpha(a)) + &self.index(a)) - &self.index(b)
    }
}

type Printed = (
    &'static str,
    fn(&[usize]) -> bool,
    &'static str,
    fn(&Symbols) -> MPoly,
);

fn order_two() -> Vec<Printed> {
    vec![
        ("i1 > i2", |t| t[0] > t[1], "0", |s| s.c(0)),
        (
            "i1 = i2",
            |t| t[0] == t[1],
            "(α_{i1} + (n+1)/2 - i1)^2",
            |s| s.beta(1).pow(2),
        ),
        (
            "i1 < i2",
            |t| t[0] < t[1],
            "-α_{i1} + α_{i2} + i1 - i2",
            |s| s.diff(1, 2),
        ),
    ]
}

fn order_three() -> Vec<Printed> {
    vec![
        ("i1 > i2", |t| t[0] > t[1], "0", |s| s.c(0)),
        ("i1 > i3", |t| t[0] > t[2], "0", |s| s.c(0)),
        (
            "i1 < i2 < i3",
            |t| t[0] < t[1] && t[1] < t[2],
            "α_{i1} - α_{i2} - i1 + i2",
            |s| -&s.diff(1, 2),
        ),
        (
            "i1 < i3 < i2",
            |t| t[0] < t[2] && t[2] < t[1],
            "α_{i1} - α_{i3} - i1 + i3",
            |s| -&s.diff(1, 3),
        ),
        (
            "i1 = i2 < i3",
            |t| t[0] == t[1] && t[1] < t[2],
            "(α_{i1} + (n+1)/2 - i1)(-α_{i1} + α_{i3} + i1 - i3)",
            |s| &s.beta(1) * &s.diff(1, 3),
        ),
        (
            "i1 = i3 < i2",
            |t| t[0] == t[2] && t[2] < t[1],
            "(α_{i1} + (n+1)/2 - i1)(-α_{i1} + α_{i2} + i1 - i2)",
            |s| &s.beta(1) * &s.diff(1, 2),
        ),
        (
            "i1 < i2 = i3",
            |t| t[0] < t[1] && t[1] == t[2],
            "α_{i1} - α_{i2} - i1 + i2 + (α_{i1} + (n+1)/2 - i1)(-α_{i1} + α_{i2} + i1 - i2)",
            |s| &(-&s.diff(1, 2)) + &(&s.beta(1) * &s.diff(1, 2)),
        ),
        (
            "i1 = i2 = i3",
            |t| t[0] == t[1] && t[1] == t[2],
            "(α_{i1} + (n+1)/2 - i1)^3",
            |s| s.beta(1).pow(3),
        ),
    ]
}

/// Position (1-based) of the first entry with each rank.
fn first_positions(pattern: &[usize]) -> Vec<usize> {
    let ell = *pattern.iter().max().unwrap_or(&0);
    (1..=ell)
        .map(|r| pattern.iter().position(|&v| v == r).unwrap() + 1)
        .collect()
}

fn pattern_value(s: &Symbols, pattern: &[usize]) -> (MPoly, String) {
    let ell = *pattern.iter().max().unwrap();
    let t = IndexTuple::new(pattern.to_vec(), ell).expect("pattern");
    match cycle_product(&t, SignConvention::Alternating) {
        None => (s.c(0), "0".to_string()),
        Some(cp) => {
            let pos = first_positions(pattern);
            let poly = cp.to_mpoly(&|r| s.beta(pos[r - 1]), s.nvars());
            (poly, render_factored(cp.negate, &cp.factors, &pos))
        }
    }
}

fn join_terms(terms: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (idx, (neg, body)) in terms.iter().enumerate() {
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

/// Renders `(-1)^negate * prod factors` with each factor written out in
/// `alpha`, `i` and `n`, preferring positive leading signs.
fn render_factored(negate: bool, factors: &[LinearFactor], pos: &[usize]) -> String {
    let a = |r: usize| format!("α_{{i{}}}", pos[r - 1]);
    let i = |r: usize| format!("i{}", pos[r - 1]);
    let mut negative = negate;
    let mut oriented: Vec<(bool, &LinearFactor)> = factors
        .iter()
        .map(|f| {
            let flip = f.high.is_none() && !f.plus_one;
            negative ^= flip;
            (flip, f)
        })
        .collect();
    if negative {
        if let Some(slot) = oriented
            .iter_mut()
            .find(|(flip, f)| !flip && f.high.is_some() && !f.plus_one)
        {
            slot.0 = true;
            negative = false;
        }
    }
    // beta-style factors first
    oriented.sort_by_key(|(flip, f)| !(*flip && f.high.is_none()));
    let mut rendered: Vec<String> = oriented
        .iter()
        .map(|(flip, f)| {
            // terms of -beta_low + beta_high (+ 1), as (negative, symbol)
            let mut terms: Vec<(bool, String)> = Vec::new();
            if f.plus_one && f.high.is_none() {
                terms.push((false, "1".into()));
            }
            terms.push((true, a(f.low)));
            match f.high {
                Some(h) => {
                    terms.push((false, a(h)));
                    terms.push((false, i(f.low)));
                    terms.push((true, i(h)));
                }
                None => {
                    terms.push((true, "(n+1)/2".into()));
                    terms.push((false, i(f.low)));
                }
            }
            if f.plus_one && f.high.is_some() {
                terms.push((false, "1".into()));
            }
            if *flip {
                for t in &mut terms {
                    t.0 = !t.0;
                }
            }
            join_terms(&terms)
        })
        .collect();
    if rendered.is_empty() {
        return if negative { "-1".into() } else { "1".into() };
    }
    let mut grouped: Vec<(String, usize)> = Vec::new();
    for r in rendered.drain(..) {
        match grouped.last_mut() {
            Some((prev, k)) if *prev == r => *k += 1,
            _ => grouped.push((r, 1)),
        }
    }
    let body = if grouped.len() == 1 && grouped[0].1 == 1 {
        grouped[0].0.clone()
    } else {
        grouped
            .iter()
            .map(|(r, k)| {
                if *k == 1 {
                    format!("({r})")
                } else {
                    format!("({r})^{k}")
                }
            })
            .collect()
    };
    if negative {
        if grouped.len() == 1 && grouped[0].1 == 1 {
            format!("-({body})")
        } else {
            format!("-{body}")
        }
    } else {
        body
    }
}

/// Builds the table for `m` in {2, 3}: the computed value of each case next
/// to the transcribed printed value.
pub fn eigenvalue_table(m: usize) -> Result<Table> {
    let printed = match m {
        2 => order_two(),
        3 => order_three(),
        _ => return Err(Error::invalid("tables exist for orders 2 and 3 only")),
    };
    let s = Symbols { m };
    let all: Vec<Vec<usize>> = (1..=m).flat_map(|ell| patterns(m, ell)).collect();
    let rows = printed
        .into_iter()
        .map(|(case, cond, printed_text, build)| {
            let mut members: Vec<&Vec<usize>> = all.iter().filter(|p| cond(p)).collect();
            members.sort();
            let values: Vec<(MPoly, String)> =
                members.iter().map(|p| pattern_value(&s, p)).collect();
            let distinct: BTreeSet<String> = values.iter().map(|(p, _)| p.to_string()).collect();
            let (computed, computed_text) = values.into_iter().next().expect("case has a pattern");
            TableRow {
                case,
                computed,
                computed_text,
                printed: build(&s),
                printed_text,
                consistent: distinct.len() == 1,
                cond,
            }
        })
        .collect();
    Ok(Table { m, rows })
}

impl Table {
    /// Sum of the row values over `{1..n}^m`, each tuple taking the first row
    /// that applies, as a polynomial in `alpha_1..alpha_n` (shifted form).
    pub fn row_sum(&self, n: usize, use_printed: bool) -> Result<MPoly> {
        let m = self.m;
        let mut sum = MPoly::zero(n);
        for idx in 0..tuple_count(m, n)? {
            let t = tuple_at(idx, m, n);
            let e = t.entries();
            let row = self
                .rows
                .iter()
                .find(|r| r.applies_to(e))
                .ok_or_else(|| Error::invalid("tuple not covered by any row"))?;
            let poly = if use_printed {
                &row.printed
            } else {
                &row.computed
            };
            let mut images: Vec<MPoly> = e.iter().map(|&v| MPoly::var(n, v - 1)).collect();
            images.extend(e.iter().map(|&v| MPoly::constant(n, rat_int(v as i64))));
            images.push(MPoly::constant(n, rat_int(n as i64)));
            sum += &poly.substitute(&images, n)?;
        }
        Ok(sum)
    }
}
