//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when verification finds a mismatch under the
//! configured sign convention, 2 on invalid input or usage.

mod json;

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

pub use json::{emit_polynomial_json, parse_closed_form_json, parse_mpoly_json, CanonicalJson};

use crate::casimir::{
    casimir_eigenvalue_patterned, closed_form, eigenvalue_table, verify_tuples, Basis,
    CasimirRequest, Selection, Table, VerifyReport,
};
use crate::error::{Error, Result};
use crate::ratpoly::{to_power_sum, MPoly, VarNames};
use crate::tuplegraph::{elementary_eigenvalue, enumerate_cycles, IndexTuple, SignConvention};

#[derive(Parser, Debug)]
#[command(
    name = "gln-casimir",
    version,
    about = "Exact Casimir eigenvalues for GL(n,R)"
)]
struct Cli {
    /// Write alpha_i as α_i instead of ai
    #[arg(long, global = true)]
    latex: bool,
    /// Worker thread cap; output does not depend on it
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Literal,
    Alternating,
}

impl From<SignArg> for SignConvention {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Literal => SignConvention::Literal,
            SignArg::Alternating => SignConvention::Alternating,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Monomial,
    PowerSum,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Md,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalue of one elementary operator, with its cycle table
    Elementary {
        /// Comma-separated indices, e.g. 1,2,2
        #[arg(long)]
        tuple: String,
        /// Rank; defaults to the largest index
        #[arg(long)]
        n: Option<usize>,
        /// Unshifted parameters (alpha instead of alpha + rho)
        #[arg(long)]
        raw: bool,
        #[arg(long, value_enum, default_value = "alternating")]
        sign: SignArg,
        #[arg(long)]
        json: bool,
    },
    /// Eigenvalue of the Casimir operator of order m
    Casimir {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "monomial")]
        basis: BasisArg,
        #[arg(long)]
        raw: bool,
        #[arg(long, value_enum, default_value = "alternating")]
        sign: SignArg,
        #[arg(long)]
        json: bool,
    },
    /// Closed form in power sums and the rank n
    ClosedForm {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare the cycle formula with the Iwasawa oracle
    #[command(group(ArgGroup::new("selection").required(true).args(["exhaustive", "random"])))]
    Verify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        exhaustive: bool,
        /// Number of distinct tuples to sample
        #[arg(long, requires = "seed")]
        random: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        raw: bool,
        /// Convention whose mismatches fail the run
        #[arg(long, value_enum, default_value = "alternating")]
        sign: SignArg,
        #[arg(long)]
        json: bool,
    },
    /// Symbolic eigenvalue table for order 2 or 3
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        m: u8,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatArg,
    },
}

/// Entry point for the binary: parses `args` (program name first), writes to
/// stdout and stderr, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Parses and dispatches one invocation.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(0) => Err(Error::invalid("--threads must be positive")),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))
            .and_then(|pool| pool.install(|| dispatch(&cli, &mut buf))),
        None => dispatch(&cli, &mut buf),
    };
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: write failed: {e}");
        return 2;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn names(cli: &Cli) -> VarNames {
    if cli.latex {
        VarNames::Greek
    } else {
        VarNames::Plain
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("write failed: {e}"))
}

fn params(shifted: bool) -> &'static str {
    if shifted {
        "alpha + rho"
    } else {
        "alpha"
    }
}

const OUT_OF_RANGE: &str = "note: m > n is outside the stated range 1 <= m <= n";

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Result<i32> {
    match &cli.command {
        Command::Elementary {
            tuple,
            n,
            raw,
            sign,
            json,
        } => {
            let t = IndexTuple::parse(tuple, *n)?;
            let sign = SignConvention::from(*sign);
            let value = elementary_eigenvalue(&t, sign, !raw);
            if *json {
                writeln!(out, "{}", json::elementary_json(&t, !raw, sign, &value)).map_err(io)?;
            } else {
                write_elementary(out, &t, !raw, sign, &value.display_with(names(cli)))
                    .map_err(io)?;
            }
            Ok(0)
        }
        Command::Casimir {
            m,
            n,
            basis,
            raw,
            sign,
            json,
        } => {
            let req = CasimirRequest {
                m: *m,
                n: *n,
                shifted: !raw,
                basis: match basis {
                    BasisArg::Monomial => Basis::Monomial,
                    BasisArg::PowerSum => Basis::PowerSum,
                },
                sign: (*sign).into(),
            };
            let value = casimir_eigenvalue_patterned(&req)?;
            write_casimir(cli, out, &req, &value, *json)?;
            Ok(0)
        }
        Command::ClosedForm { m, json } => {
            let cf = closed_form(*m)?;
            if *json {
                writeln!(out, "{}", emit_polynomial_json(&cf)).map_err(io)?;
            } else {
                writeln!(out, "{cf}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Verify {
            m,
            n,
            exhaustive: _,
            random,
            seed,
            raw,
            sign,
            json,
        } => {
            let selection = match (random, seed) {
                (Some(count), Some(seed)) => Selection::Random {
                    count: *count,
                    seed: *seed,
                },
                (Some(_), None) => return Err(Error::invalid("--random needs --seed")),
                _ => Selection::Exhaustive,
            };
            let sign = SignConvention::from(*sign);
            let report = verify_tuples(*m, *n, selection, !raw)?;
            if *json {
                writeln!(out, "{}", json::verify_json(&report, sign)).map_err(io)?;
            } else {
                write_verify(out, &report, selection, sign).map_err(io)?;
            }
            Ok(if report.mismatches(sign).is_empty() {
                0
            } else {
                1
            })
        }
        Command::Tables { m, format } => {
            let table = eigenvalue_table(*m as usize)?;
            match format {
                FormatArg::Md => write!(out, "{}", emit_markdown_table(&table)).map_err(io)?,
                FormatArg::Json => writeln!(out, "{}", json::table_json(&table)).map_err(io)?,
            }
            Ok(0)
        }
    }
}

fn write_elementary(
    out: &mut dyn Write,
    t: &IndexTuple,
    shifted: bool,
    sign: SignConvention,
    value: &str,
) -> std::io::Result<()> {
    writeln!(out, "tuple: {t}")?;
    writeln!(out, "rank: {}", t.n())?;
    writeln!(out, "parameters: {}", params(shifted))?;
    writeln!(out, "sign: {sign}")?;
    writeln!(out, "eigenvalue: {value}")?;
    writeln!(out)?;
    writeln!(out, "| cycle | positions | proper | v1 | v2 |")?;
    writeln!(out, "|---|---|---|---|---|")?;
    let closed = t.closed();
    for c in enumerate_cycles(t) {
        let vals: Vec<String> = c.values(&closed).iter().map(|v| v.to_string()).collect();
        writeln!(
            out,
            "| ({}) | {}-{} | {} | {} | {} |",
            vals.join(","),
            c.start_pos + 1,
            c.end_pos + 1,
            if c.proper { "yes" } else { "no" },
            c.v1,
            c.v2
        )?;
    }
    Ok(())
}

fn write_casimir(
    cli: &Cli,
    out: &mut dyn Write,
    req: &CasimirRequest,
    value: &MPoly,
    json: bool,
) -> Result<()> {
    let text = match (req.basis, json) {
        (Basis::Monomial, true) => emit_polynomial_json(value),
        (Basis::Monomial, false) => value.display_with(names(cli)),
        (Basis::PowerSum, true) => emit_polynomial_json(&to_power_sum(value, req.n)?),
        (Basis::PowerSum, false) => to_power_sum(value, req.n)?.to_string(),
    };
    if json {
        writeln!(out, "{text}").map_err(io)?;
        return Ok(());
    }
    writeln!(out, "order: {}", req.m).map_err(io)?;
    writeln!(out, "rank: {}", req.n).map_err(io)?;
    writeln!(out, "parameters: {}", params(req.shifted)).map_err(io)?;
    if !req.in_stated_range() {
        writeln!(out, "{OUT_OF_RANGE}").map_err(io)?;
    }
    writeln!(out, "eigenvalue: {text}").map_err(io)?;
    Ok(())
}

fn write_verify(
    out: &mut dyn Write,
    report: &VerifyReport,
    selection: Selection,
    sign: SignConvention,
) -> std::io::Result<()> {
    let sel = match selection {
        Selection::Exhaustive => "exhaustive".to_string(),
        Selection::Random { count, seed } => format!("random {count}, seed {seed}"),
    };
    writeln!(out, "order: {}", report.m)?;
    writeln!(out, "rank: {}", report.n)?;
    writeln!(out, "selection: {sel}")?;
    writeln!(out, "parameters: {}", params(report.shifted))?;
    if !report.in_stated_range() {
        writeln!(out, "{OUT_OF_RANGE}")?;
    }
    let total = report.total();
    writeln!(out, "tuples: {total}")?;
    writeln!(out, "zero: {}", report.zero())?;
    for s in SignConvention::ALL {
        writeln!(out, "match {s}: {}/{total}", report.match_count(s))?;
    }
    let consistent: Vec<&str> = report
        .consistent_conventions()
        .iter()
        .map(|s| s.name())
        .collect();
    let summary = match consistent.len() {
        0 => "none".to_string(),
        1 => consistent[0].to_string(),
        _ if !report.discriminating() => format!(
            "{} (the conventions coincide on every nonzero tuple here)",
            consistent.join(", ")
        ),
        _ => consistent.join(", "),
    };
    writeln!(out, "consistent convention: {summary}")?;
    let bad = report.mismatches(sign);
    writeln!(out, "mismatches under {sign}: {}", bad.len())?;
    for t in bad {
        writeln!(out, "  ({t})")?;
    }
    Ok(())
}

/// Markdown rendering of an eigenvalue table. Rows whose computed value
/// differs from the printed one carry both, marked as a discrepancy.
pub fn emit_markdown_table(table: &Table) -> String {
    let ops: Vec<String> = (1..=table.m)
        .map(|k| format!("D_{{i{k},i{}}}", k % table.m + 1))
        .collect();
    let mut s = format!(
        "Eigenvalue of {} on |.|^(alpha + rho)\n\n| case | eigenvalue | note |\n|---|---|---|\n",
        ops.join(" o ")
    );
    for r in &table.rows {
        let note = if r.matches_printed() {
            String::new()
        } else {
            format!("DISCREPANCY: printed as {}", r.printed_text)
        };
        s.push_str(&format!(
            "| {} | {} | {} |\n",
            r.case, r.computed_text, note
        ));
    }
    s
}
