use std::collections::BTreeMap;

use serde_json::{json, Value};

use eqlr::afring::{compare_d, ring_star_table};
use eqlr::coeffs::{
    big_d, brec_check, crec_check, d_coeff, eq_c, format_star, l_from_o, lr, o_l_fixture_checks,
    shifted_o, star_table, EqMethod, LrMethod, Report, ShiftedMethod, StarRow,
};
use eqlr::horn::{
    belkale_scan, classical_horn_scan, equiv_horn_scan, monical_scan, purbhoo_sottile_scan,
    saturation_scan, semigroup_scan, shifted_saturation_scan, snp_scan, CoeffKind, Scan,
};
use eqlr::par::Exec;
use eqlr::shapes::{Partition, Rectangle, StrictPartition};

use crate::output::{bracket, parts, Output};
use crate::{verify, Command, EqMethodArg, Failure, KindArg, LrMethodArg, SaturationKind, ShiftedMethodArg, StarMethod};

type Res = Result<Output, Failure>;

/// Rejects bounds below `min` or above `max`; warns above `warn`.
fn bound(name: &str, v: u32, min: u32, warn: u32, max: u32, warnings: &mut Vec<String>) -> Result<(), Failure> {
    if v < min || v > max {
        return Err(Failure::usage(format!("{name} = {v} is outside the supported range {min}..={max}")));
    }
    if v > warn {
        warnings.push(format!("{name} = {v} is beyond desk scale (<= {warn}); this may take a long time"));
    }
    Ok(())
}

fn rect_bound(name: &str, r: Rectangle, warn: u32, max: u32, warnings: &mut Vec<String>) -> Result<(), Failure> {
    if r.k == 0 || r.w == 0 {
        return Err(Failure::usage(format!("{name} {r} is empty")));
    }
    bound(&format!("{name} {r} cells"), r.k * r.w, 1, warn, max, warnings)
}

fn default_rect(ps: [&Partition; 3]) -> Rectangle {
    let k = ps.iter().map(|p| p.len() as u32).max().unwrap_or(0).max(1);
    let w = ps.iter().map(|p| p.part(1)).max().unwrap_or(0).max(1);
    Rectangle::new(k, w)
}

fn default_n(ps: [&StrictPartition; 3]) -> u32 {
    ps.iter().map(|p| p.part(1)).max().unwrap_or(0).max(1)
}

fn triple_json(l: &[u32], m: &[u32], n: &[u32]) -> Value {
    json!({ "lambda": l, "mu": m, "nu": n })
}

fn coeff_name(sym: &str, l: &[u32], m: &[u32], n: &[u32]) -> String {
    format!("{sym}_{{{},{}}}^{{{}}}", parts(l), parts(m), parts(n))
}

/// Runs each method and reports their common value, or a disagreement with status 1.
fn method_output<T: ToString>(
    name: String,
    context: &str,
    trip: Value,
    results: Vec<(&str, T)>,
) -> Output {
    let values: Vec<String> = results.iter().map(|(_, v)| v.to_string()).collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let per: Vec<String> = results.iter().zip(&values).map(|((m, _), v)| format!("{m} {v}")).collect();
    let verdict = if results.len() == 1 {
        String::new()
    } else if agree {
        format!(" ({}; methods agree)", per.join(", "))
    } else {
        format!(" ({}; METHODS DISAGREE)", per.join(", "))
    };
    let text = format!("{name} = {}{verdict} in {context}", values[0]);
    let rows = results.iter().zip(&values).map(|((m, _), v)| vec![m.to_string(), v.clone()]).collect();
    let methods: BTreeMap<&str, &String> = results.iter().map(|(m, _)| *m).zip(&values).collect();
    let mut j = trip;
    j["context"] = json!(context);
    j["value"] = json!(values[0]);
    j["methods"] = json!(methods);
    j["agree"] = json!(agree);
    Output::new(text, &["method", "value"], rows, j).with_status(if agree { 0 } else { 1 })
}

fn scan_output(scan: &Scan, labels: (&str, &str), gate: bool) -> Output {
    let mism = scan.mismatches();
    let mut text = format!("{}\ntriples: {}, mismatches: {}\n", scan.name, scan.rows.len(), mism.len());
    for n in &scan.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    for r in &mism {
        let [l, m, v] = &r.triple;
        text.push_str(&format!(
            "mismatch {} {} {}: {} {}, {} {}",
            parts(l),
            parts(m),
            parts(v),
            labels.0,
            r.verdict_a,
            labels.1,
            r.verdict_b
        ));
        if let Some(n) = &r.note {
            text.push_str(&format!(" [{n}]"));
        }
        text.push('\n');
    }
    let rows = scan
        .rows
        .iter()
        .map(|r| {
            let [l, m, v] = &r.triple;
            vec![
                parts(l),
                parts(m),
                parts(v),
                r.verdict_a.to_string(),
                r.verdict_b.to_string(),
                r.agree.to_string(),
                r.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let mut j = serde_json::to_value(scan).expect("serializable");
    j["labels"] = json!([labels.0, labels.1]);
    j["mismatch_count"] = json!(mism.len());
    let status = if gate && !mism.is_empty() { 1 } else { 0 };
    Output::new(text, &["lambda", "mu", "nu", labels.0, labels.1, "agree", "note"], rows, j).with_status(status)
}

fn report_text(r: &Report) -> String {
    let mut s = format!(
        "{}: {} ({} checked, {} failures)\n",
        r.name,
        if r.passed() { "PASS" } else { "FAIL" },
        r.checked,
        r.failures.len()
    );
    for n in &r.notes {
        s.push_str(&format!("  note: {n}\n"));
    }
    for f in &r.failures {
        s.push_str(&format!("  failure: {f}\n"));
    }
    s
}

fn star_rows(rows: &[StarRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| vec![bracket(r.lambda.parts()), bracket(r.mu.parts()), format_star(&r.product)])
        .collect()
}

pub(crate) fn dispatch(cmd: &Command, exec: Exec, warnings: &mut Vec<String>) -> Res {
    match cmd {
        Command::Lr { lambda, mu, nu, rect, method } => {
            let r = rect.unwrap_or_else(|| default_rect([lambda, mu, nu]));
            rect_bound("rectangle", r, 36, 100, warnings)?;
            let methods: Vec<(&str, LrMethod)> = match method {
                LrMethodArg::Jdt => vec![("jdt", LrMethod::Jdt)],
                LrMethodArg::Ballot => vec![("ballot", LrMethod::Ballot)],
                LrMethodArg::Polytope => vec![("polytope", LrMethod::Polytope)],
                LrMethodArg::All => {
                    vec![("jdt", LrMethod::Jdt), ("ballot", LrMethod::Ballot), ("polytope", LrMethod::Polytope)]
                }
            };
            let mut res = Vec::new();
            for (name, m) in methods {
                res.push((name, lr(lambda, mu, nu, r, m)?));
            }
            let (l, m, v) = (lambda.parts(), mu.parts(), nu.parts());
            Ok(method_output(coeff_name("c", l, m, v), &r.to_string(), triple_json(l, m, v), res))
        }
        Command::EqLr { lambda, mu, nu, rect, method } => {
            let r = rect.unwrap_or_else(|| default_rect([lambda, mu, nu]));
            rect_bound("rectangle", r, 12, 30, warnings)?;
            let methods: Vec<(&str, EqMethod)> = match method {
                EqMethodArg::Ejdt => vec![("ejdt", EqMethod::Ejdt)],
                EqMethodArg::Eballot => vec![("eballot", EqMethod::Eballot)],
                EqMethodArg::Factorial => vec![("factorial", EqMethod::Factorial)],
                EqMethodArg::All => vec![
                    ("ejdt", EqMethod::Ejdt),
                    ("eballot", EqMethod::Eballot),
                    ("factorial", EqMethod::Factorial),
                ],
            };
            let mut res = Vec::new();
            for (name, m) in methods {
                res.push((name, eq_c(lambda, mu, nu, r, m)?));
            }
            let beta = res[0].1.t_to_beta()?;
            let (l, m, v) = (lambda.parts(), mu.parts(), nu.parts());
            let mut out = method_output(coeff_name("C", l, m, v), &r.to_string(), triple_json(l, m, v), res);
            out.text.push_str(&format!("\nin the betas: {beta}"));
            out.json["beta"] = json!(beta.to_string());
            Ok(out)
        }
        Command::ShiftedLr { lambda, mu, nu, n, method } => {
            let n = n.unwrap_or_else(|| default_n([lambda, mu, nu]));
            bound("n", n, 1, 6, 10, warnings)?;
            let methods: Vec<(&str, ShiftedMethod)> = match method {
                ShiftedMethodArg::Jdt => vec![("jdt", ShiftedMethod::Jdt)],
                ShiftedMethodArg::Ballot => vec![("ballot", ShiftedMethod::Ballot)],
                ShiftedMethodArg::All => vec![("jdt", ShiftedMethod::Jdt), ("ballot", ShiftedMethod::Ballot)],
            };
            let mut res = Vec::new();
            for (name, m) in methods {
                res.push((name, shifted_o(lambda, mu, nu, n, m)?));
            }
            let l_val = l_from_o(lambda, mu, nu, res[0].1)?;
            let (l, m, v) = (lambda.parts(), mu.parts(), nu.parts());
            let mut out = method_output(coeff_name("o", l, m, v), &format!("rho_{n}"), triple_json(l, m, v), res);
            out.text.push_str(&format!("\n{} = {l_val}", coeff_name("l", l, m, v)));
            out.json["l"] = json!(l_val.to_string());
            Ok(out)
        }
        Command::DCoeff { lambda, mu, nu, n } => {
            let n = n.unwrap_or_else(|| default_n([lambda, mu, nu]));
            bound("n", n, 1, 5, 8, warnings)?;
            let d = d_coeff(lambda, mu, nu, n)?;
            let big = big_d(lambda, mu, nu, n)?;
            let (l, m, v) = (lambda.parts(), mu.parts(), nu.parts());
            let text = format!("{} = {d}\n{} = {big}", coeff_name("d", l, m, v), coeff_name("D", l, m, v));
            let mut j = triple_json(l, m, v);
            j["n"] = json!(n);
            j["d"] = json!(d);
            j["D"] = json!(big.to_string());
            Ok(Output::new(text, &["d", "D"], vec![vec![d.to_string(), big.to_string()]], j))
        }
        Command::StarTable { n, method } => {
            bound("n", *n, 1, 4, 5, warnings)?;
            let rows = match method {
                StarMethod::Tableaux => star_table(*n, exec)?,
                StarMethod::Ring => ring_star_table(*n, exec)?,
            };
            let rows = star_rows(&rows);
            let text = rows.iter().map(|r| format!("{} * {} = {}", r[0], r[1], r[2])).collect::<Vec<_>>().join("\n");
            let j = Value::Array(rows.iter().map(|r| json!({"lambda": r[0], "mu": r[1], "product": r[2]})).collect());
            Ok(Output::new(text, &["lambda", "mu", "product"], rows, j))
        }
        Command::AfCompare { n } => {
            bound("n", *n, 1, 4, 5, warnings)?;
            let rep = compare_d(*n, exec)?;
            let mut text = format!(
                "ring coefficients against D inside rho_{n}\ntriples: {}, mismatches: {}, nonnegative: {}\n",
                rep.checked,
                rep.mismatches.len(),
                rep.nonnegative
            );
            for m in &rep.mismatches {
                text.push_str(&format!("mismatch {} {} {}: ring {}, tableaux {}\n", m.lambda, m.mu, m.nu, m.ring, m.tableaux));
            }
            for o in &rep.outside {
                text.push_str(&format!("outside rho_{n}: {o}\n"));
            }
            let rows = rep
                .mismatches
                .iter()
                .map(|m| vec![m.lambda.to_string(), m.mu.to_string(), m.nu.to_string(), m.ring.clone(), m.tableaux.clone()])
                .collect();
            let j = serde_json::to_value(&rep).expect("serializable");
            Ok(Output::new(text, &["lambda", "mu", "nu", "ring", "tableaux"], rows, j))
        }
        Command::Horn { kind, r, max_entry, belkale } => {
            bound("r", *r, 1, 3, 5, warnings)?;
            bound("max-entry", *max_entry, 1, 4, 8, warnings)?;
            let (scan, labels) = match (kind, belkale) {
                (KindArg::Lr, false) => (classical_horn_scan(*r, *max_entry, exec)?, ("direct", "horn")),
                (KindArg::Lr, true) => (belkale_scan(*r, *max_entry, exec)?, ("horn", "belkale")),
                (KindArg::Eq, false) => (equiv_horn_scan(*r, *max_entry, exec)?, ("direct", "horn")),
                (KindArg::Eq, true) => {
                    return Err(Failure::usage("--belkale applies to --kind lr only"));
                }
            };
            Ok(scan_output(&scan, labels, true))
        }
        Command::Saturation { kind, rect, n, max_stretch } => {
            bound("max-stretch", *max_stretch, 2, 3, 5, warnings)?;
            let labels = ("nonzero", "stretched_nonzero");
            match kind {
                SaturationKind::Lr | SaturationKind::Eq => {
                    let (k, default) = match kind {
                        SaturationKind::Lr => (CoeffKind::Lr, Rectangle::new(3, 3)),
                        _ => (CoeffKind::EqLr, Rectangle::new(2, 2)),
                    };
                    let r = rect.unwrap_or(default);
                    rect_bound("bound", r, 9, 16, warnings)?;
                    Ok(scan_output(&saturation_scan(k, r, *max_stretch, exec)?, labels, true))
                }
                SaturationKind::Shifted => {
                    bound("n", *n, 1, 3, 4, warnings)?;
                    Ok(scan_output(&shifted_saturation_scan(*n, *max_stretch, exec)?, labels, false))
                }
            }
        }
        Command::Semigroup { kind, r, max_entry } => {
            bound("r", *r, 1, 2, 3, warnings)?;
            bound("max-entry", *max_entry, 1, 2, 4, warnings)?;
            Ok(scan_output(&semigroup_scan((*kind).into(), *r, *max_entry, exec)?, ("summands", "sum"), true))
        }
        Command::Snp { rect } => {
            rect_bound("bound", *rect, 6, 12, warnings)?;
            Ok(scan_output(&snp_scan(*rect, exec)?, ("nonzero", "snp"), false))
        }
        Command::Monical { n } => {
            bound("n", *n, 1, 4, 5, warnings)?;
            Ok(scan_output(&monical_scan(*n, exec)?, ("truth", "conjecture"), false))
        }
        Command::PurbhooSottile { n } => {
            bound("n", *n, 1, 4, 5, warnings)?;
            Ok(scan_output(&purbhoo_sottile_scan(*n, exec)?, ("direct", "inequalities"), true))
        }
        Command::Fixtures => fixtures(exec),
        Command::VerifyAll => {
            let lines = verify::all(exec);
            let text = lines.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("\n");
            let rows = lines
                .iter()
                .map(|l| {
                    vec![
                        l.id.to_string(),
                        if l.pass { "PASS" } else { "FAIL" }.to_string(),
                        l.label.clone(),
                        l.detail.clone(),
                    ]
                })
                .collect();
            let unexpected = verify::unexpected_failures(&lines);
            let j = json!({ "lines": lines, "unexpected_failures": unexpected });
            let status = if unexpected.is_empty() { 0 } else { 1 };
            Ok(Output::new(text, &["id", "verdict", "label", "detail"], rows, j).with_status(status))
        }
    }
}

fn fixtures(exec: Exec) -> Res {
    let reports = [o_l_fixture_checks(), brec_check(), crec_check()];
    let mut text: String = reports.iter().map(report_text).collect();
    let computed = star_rows(&star_table(3, exec)?);
    let golden = verify::golden_star_n3();
    let diffs = verify::diff_rows(&golden, &computed);
    text.push_str(&format!(
        "star table n=3 against golden/star_n3.csv: {} ({} rows, {} differences)\n",
        if diffs.is_empty() { "PASS" } else { "FAIL" },
        golden.len(),
        diffs.len()
    ));
    for d in &diffs {
        text.push_str(&format!("  {d}\n"));
    }
    let ok = reports.iter().all(Report::passed) && diffs.is_empty();
    let mut rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| vec![r.name.clone(), r.passed().to_string(), r.checked.to_string()])
        .collect();
    rows.push(vec!["star table n=3".into(), diffs.is_empty().to_string(), golden.len().to_string()]);
    let j = json!({ "reports": reports, "star_differences": diffs, "passed": ok });
    Ok(Output::new(text, &["check", "passed", "checked"], rows, j).with_status(if ok { 0 } else { 1 }))
}
