//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Run with `cargo test -p gln-casimir --test acceptance`.

use std::time::{Duration, Instant};

use gln_casimir::casimir::{
    casimir_eigenvalue, casimir_eigenvalue_patterned, closed_form, eigenvalue_table, verify_tuples,
    CasimirRequest, Selection,
};
use gln_casimir::cli::run;
use gln_casimir::jetoracle::{jet_inv, jet_pow, path_coefficient_check, Jet};
use gln_casimir::ratpoly::{
    rat, rat_int, to_power_sum, ClosedForm, MPoly, Partition, PowerSumPoly, Rat, UPoly,
};
use gln_casimir::tuplegraph::{IndexTuple, SignConvention};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gln-casimir").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf8"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn upoly(c: &[(i64, i64)]) -> UPoly {
    UPoly::new(c.iter().map(|&(p, q)| rat(p, q)).collect())
}

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

/// Theorem values, built coefficient by coefficient.
fn expected_closed_form(m: usize) -> ClosedForm {
    match m {
        1 => ClosedForm::from_coeffs([]),
        2 => ClosedForm::from_coeffs([
            (part(&[2]), upoly(&[(1, 1)])),
            (part(&[]), upoly(&[(0, 1), (1, 12), (0, 1), (-1, 12)])),
        ]),
        3 => ClosedForm::from_coeffs([
            (part(&[3]), upoly(&[(1, 1)])),
            (part(&[2]), upoly(&[(0, 1), (-1, 2)])),
            (
                part(&[]),
                upoly(&[(0, 1), (0, 1), (-1, 24), (0, 1), (1, 24)]),
            ),
        ]),
        4 => ClosedForm::from_coeffs([
            (part(&[4]), upoly(&[(1, 1)])),
            (part(&[3]), upoly(&[(0, 1), (-1, 1)])),
            (part(&[2]), upoly(&[(1, 2)])),
            (
                part(&[]),
                upoly(&[(0, 1), (1, 80), (0, 1), (0, 1), (0, 1), (-1, 80)]),
            ),
        ]),
        _ => unreachable!(),
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let texts = [
        "0",
        "p2 - (n^3 - n)/12",
        "p3 - (n/2) p2 + (n^4 - n^2)/24",
        "p4 - n p3 + (1/2) p2 - (n^5 - n)/80",
    ];
    for m in 1..=4 {
        let cf = closed_form(m).map_err(|e| e.to_string())?;
        ensure(cf == expected_closed_form(m), || format!("m={m}: got {cf}"))?;
        let (code, out) = cli(&["closed-form", "--m", &m.to_string()]);
        ensure(code == 0 && out.trim_end() == texts[m - 1], || {
            format!("m={m}: cli printed {out:?}")
        })?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("m = 1..4 exact, {:.2?}", took))
}

fn criterion_2() -> Check {
    let (code, out) = cli(&["elementary", "--tuple", "1,9,2,5,5,9,6,8,4,5", "--raw"]);
    ensure(code == 0, || format!("exit {code}"))?;
    ensure(
        out.lines()
            .any(|l| l == "eigenvalue: a1*a5 - a2*a5 - a1 + a2"),
        || format!("eigenvalue line missing in {out}"),
    )?;
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("| (")).collect();
    let expect = [
        "| (1,9,2,5,5,9,6,8,4,5,1) | 1-11 | yes | 1 | 2 |",
        "| (9,2,5,5,9) | 2-6 | no | 2 | 5 |",
        "| (5,5) | 4-5 | yes | 5 | inf |",
        "| (5,9,6,8,4,5) | 5-10 | no | 4 | 5 |",
    ];
    ensure(rows == expect, || format!("cycle table {rows:?}"))?;
    Ok("eigenvalue and four-row cycle table exact".into())
}

fn table_rows_md(out: &str) -> Vec<Vec<String>> {
    out.lines()
        .filter(|l| l.starts_with("| i1"))
        .map(|l| {
            l.trim_matches('|')
                .split(" | ")
                .map(|c| c.trim().to_string())
                .collect()
        })
        .collect()
}

fn criterion_3() -> Check {
    let table = eigenvalue_table(2).map_err(|e| e.to_string())?;
    ensure(table.rows.len() == 3, || "row count".into())?;
    for r in &table.rows {
        ensure(r.consistent && r.computed == r.printed, || {
            format!("row {}", r.case)
        })?;
    }
    let (code, out) = cli(&["tables", "--m", "2"]);
    ensure(code == 0, || format!("exit {code}"))?;
    let rows = table_rows_md(&out);
    let expect = [
        ("i1 > i2", "0"),
        ("i1 = i2", "(α_{i1} + (n+1)/2 - i1)^2"),
        ("i1 < i2", "-α_{i1} + α_{i2} + i1 - i2"),
    ];
    ensure(rows.len() == 3, || format!("{rows:?}"))?;
    for (row, (case, value)) in rows.iter().zip(expect) {
        ensure(
            row[0] == case && row[1] == value && row[2].is_empty(),
            || format!("{row:?}"),
        )?;
    }
    Ok("3/3 rows symbolically equal".into())
}

fn criterion_4() -> Check {
    let table = eigenvalue_table(3).map_err(|e| e.to_string())?;
    ensure(table.rows.len() == 8, || "row count".into())?;
    let flagged = "i1 < i2 = i3";
    for r in &table.rows {
        ensure(r.consistent, || {
            format!("row {} not constant on its patterns", r.case)
        })?;
        let equal = r.computed == r.printed;
        ensure(equal == (r.case != flagged), || {
            format!("row {} equal={equal}", r.case)
        })?;
    }
    let (code, out) = cli(&["tables", "--m", "3"]);
    ensure(code == 0, || format!("exit {code}"))?;
    let rows = table_rows_md(&out);
    ensure(rows.len() == 8, || format!("{rows:?}"))?;
    for row in &rows {
        let marked = row[2].starts_with("DISCREPANCY");
        ensure(marked == (row[0] == flagged), || format!("{row:?}"))?;
    }
    let f = rows.iter().find(|r| r[0] == flagged).unwrap();
    let printed = "α_{i1} - α_{i2} - i1 + i2 + (α_{i1} + (n+1)/2 - i1)(-α_{i1} + α_{i2} + i1 - i2)";
    ensure(
        f[1] == "(α_{i1} - α_{i2} - i1 + i2)(1 - α_{i2} - (n+1)/2 + i2)",
        || f[1].clone(),
    )?;
    ensure(f[2].contains(printed), || f[2].clone())?;

    let sum = table.row_sum(3, false).map_err(|e| e.to_string())?;
    let ps = to_power_sum(&sum, 3).map_err(|e| e.to_string())?;
    let thm = PowerSumPoly::from_coeffs([
        (part(&[3]), rat_int(1)),
        (part(&[2]), rat(-3, 2)),
        (part(&[]), rat_int(3)),
    ]);
    ensure(ps == thm, || format!("row sum {ps}"))?;
    Ok(format!(
        "7/8 rows equal, flagged row carries both values; row sum {ps}"
    ))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut runs: Vec<(usize, usize, Selection)> = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 3), (3, 4)]
        .into_iter()
        .map(|(m, n)| (m, n, Selection::Exhaustive))
        .collect();
    runs.push((
        4,
        4,
        Selection::Random {
            count: 200,
            seed: 7,
        },
    ));
    runs.push((
        5,
        5,
        Selection::Random {
            count: 200,
            seed: 7,
        },
    ));
    let mut everywhere = SignConvention::ALL.to_vec();
    let mut checked = 0;
    for (m, n, sel) in runs {
        let report = verify_tuples(m, n, sel, true).map_err(|e| e.to_string())?;
        let ok = report.consistent_conventions();
        ensure(ok.contains(&SignConvention::Alternating), || {
            format!(
                "m={m} n={n}: alternating mismatches {:?}",
                report.mismatches(SignConvention::Alternating)
            )
        })?;
        ensure(
            report.match_count(SignConvention::Alternating) == report.total(),
            || format!("m={m} n={n}: partial agreement"),
        )?;
        everywhere.retain(|s| ok.contains(s));
        checked += report.total();

        let mut args = vec![
            "verify".to_string(),
            "--m".into(),
            m.to_string(),
            "--n".into(),
            n.to_string(),
        ];
        match sel {
            Selection::Exhaustive => args.push("--exhaustive".into()),
            Selection::Random { count, seed } => args.extend([
                "--random".into(),
                count.to_string(),
                "--seed".into(),
                seed.to_string(),
            ]),
        }
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _) = cli(&argv);
        ensure(code == 0, || format!("cli exit {code} for m={m} n={n}"))?;
    }
    ensure(everywhere == [SignConvention::Alternating], || {
        format!("consistent everywhere: {everywhere:?}")
    })?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(120), || format!("took {took:?}"))?;
    Ok(format!(
        "{checked} tuples, 100% agreement under alternating only, {:.2?}",
        took
    ))
}

fn criterion_6() -> Check {
    let mut tuples = 0;
    let mut coefficients = 0;
    for m in 1..=4u32 {
        for n in 1..=4usize {
            for idx in 0..(n as u64).pow(m) {
                let mut e = vec![0; m as usize];
                let mut rest = idx;
                for x in e.iter_mut().rev() {
                    *x = (rest % n as u64) as usize + 1;
                    rest /= n as u64;
                }
                let t = IndexTuple::new(e, n).unwrap();
                let report = path_coefficient_check(&t);
                ensure(report.passed(), || {
                    format!("{t}: {:?}", report.violations[0])
                })?;
                tuples += 1;
                coefficients += report.checked;
            }
        }
    }
    Ok(format!("{tuples} tuples, {coefficients} coefficients"))
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    let mut p: Vec<Rat> = (0..n - 1)
        .map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=9)))
        .collect();
    let s: Rat = p.iter().sum();
    p.push(-s);
    p
}

fn random_jet(rng: &mut ChaCha8Rng, m: usize, unit: bool) -> Jet {
    let mut j = if unit {
        Jet::one(m, 1)
    } else {
        Jet::zero(m, 1)
    };
    for _ in 0..rng.gen_range(0..6) {
        let lo = if unit { 1 } else { 0 };
        let set = rng.gen_range(lo..(1u32 << m));
        let c = MPoly::constant(1, rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
        let c = if !unit && rng.gen_bool(0.3) {
            &c * &MPoly::var(1, 0)
        } else {
            c
        };
        j = &j + &Jet::monomial(m, set, c).unwrap();
    }
    j
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut evals = 0;
    for (m, n) in [(2, 3), (3, 3), (3, 4), (4, 4)] {
        let p = casimir_eigenvalue(&CasimirRequest::new(m, n)).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let pt = random_point(&mut rng, n);
            let v = p.eval(&pt).unwrap();
            for _ in 0..5 {
                let mut q = pt.clone();
                q.shuffle(&mut rng);
                ensure(p.eval(&q).unwrap() == v, || {
                    format!("m={m} n={n} point {pt:?}")
                })?;
                evals += 1;
            }
        }
    }
    for m in 1..=3 {
        for n in 1..=5 {
            for shifted in [true, false] {
                let req = CasimirRequest {
                    shifted,
                    ..CasimirRequest::new(m, n)
                };
                let a = casimir_eigenvalue(&req).map_err(|e| e.to_string())?;
                let b = casimir_eigenvalue_patterned(&req).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("patterned differs at m={m} n={n}"))?;
            }
        }
    }
    let m = 4;
    for i in 0..1000 {
        let (a, b, c) = (
            random_jet(&mut rng, m, false),
            random_jet(&mut rng, m, false),
            random_jet(&mut rng, m, false),
        );
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || {
            format!("mul assoc #{i}")
        })?;
        ensure(&(&a + &b) + &c == &a + &(&b + &c), || {
            format!("add assoc #{i}")
        })?;
        ensure(&a * &b == &b * &a, || format!("mul comm #{i}"))?;
        ensure(&a + &b == &b + &a, || format!("add comm #{i}"))?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || {
            format!("distrib #{i}")
        })?;
        let u = random_jet(&mut rng, m, true);
        ensure(&u * &jet_inv(&u).unwrap() == Jet::one(m, 1), || {
            format!("inverse #{i}")
        })?;
        let k = rng.gen_range(0..6i64);
        let mut prod = Jet::one(m, 1);
        for _ in 0..k {
            prod = &prod * &u;
        }
        let pw = jet_pow(&u, &MPoly::constant(1, rat_int(k))).unwrap();
        ensure(pw == prod, || format!("jet_pow k={k} #{i}"))?;
    }
    Ok(format!(
        "{evals} permuted evaluations, 30 summation pairs, 1000 jet triples"
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("closed forms for m = 1..4", criterion_1),
        ("worked example and its cycle table", criterion_2),
        ("order-2 table", criterion_3),
        ("order-3 table and its row sum", criterion_4),
        ("fast path agrees with the jet oracle", criterion_5),
        ("path-coefficient identity for m, n <= 4", criterion_6),
        ("property suites", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
