use std::process::Command;

use eqlr_cli::{run, STAR_N3_GOLDEN};

fn eqlr(args: &[&str], threads: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eqlr"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("EQLR_THREADS", t),
        None => cmd.env_remove("EQLR_THREADS"),
    };
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut argv = vec!["eqlr"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--format", "json"]);
    let r = run(argv);
    assert_eq!(r.status, 0, "{args:?}: {}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn lr_example_agrees_across_methods() {
    let (s, out, _) = eqlr(&["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--method", "all"], None);
    assert_eq!(s, 0);
    assert!(out.starts_with("c_{(2,1),(2,1)}^{(3,2,1)} = 2 "), "{out}");
    assert!(out.contains("methods agree"));
    let v = json(&["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]);
    assert_eq!(v["methods"]["polytope"], "2");
}

#[test]
fn empty_shapes_give_one() {
    let v = json(&["lr", "--lambda", "0", "--mu", "0", "--nu", "0"]);
    assert_eq!(v["value"], "1");
}

#[test]
fn single_coefficient_verbs() {
    let v = json(&["eq-lr", "--lambda", "2,2", "--mu", "2,1", "--nu", "3,3", "--rect", "2x3"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["value"], "t_1+t_2-t_4-t_5");
    let v = json(&["shifted-lr", "--lambda", "3,1", "--mu", "3,1", "--nu", "4,3,1"]);
    assert_eq!((v["value"].as_str(), v["l"].as_str()), (Some("2"), Some("4")));
    let v = json(&["d-coeff", "--lambda", "2,1", "--mu", "3,1", "--nu", "3,1", "--n", "3"]);
    assert_eq!((v["d"].as_u64(), v["D"].as_str()), (Some(2), Some("z^3")));
}

#[test]
fn star_table_matches_golden_bytes() {
    let (s, out, _) = eqlr(&["star-table", "--n", "3"], None);
    assert_eq!(s, 0);
    assert_eq!(out, STAR_N3_GOLDEN);
    let text = run(["eqlr", "star-table", "--format", "text"]).stdout;
    assert!(text.contains("[2,1] * [2,1] = z^3[2,1] + 3z^2[3,1] + 6z[3,2]"), "{text}");
}

#[test]
fn output_does_not_depend_on_threads() {
    let args = ["horn", "--r", "2", "--max-entry", "3", "--format", "csv"];
    let (_, one, _) = eqlr(&args, Some("1"));
    let (_, four, _) = eqlr(&args, Some("4"));
    let (_, seq, _) = eqlr(&[&args[..], &["--sequential"]].concat(), None);
    assert_eq!(one, four);
    assert_eq!(one, seq);
    assert!(one.starts_with("lambda,mu,nu,direct,horn,agree,note\n"));
    let args = ["star-table", "--n", "3", "--format", "json"];
    assert_eq!(eqlr(&args, Some("1")).1, eqlr(&args, Some("3")).1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["lr", "--lambda", "x", "--mu", "1", "--nu", "1"],
        vec!["lr", "--lambda", "1,2", "--mu", "1", "--nu", "2"],
        vec!["lr", "--lambda", "4", "--mu", "1", "--nu", "4", "--rect", "2x3"],
        vec!["shifted-lr", "--lambda", "2,2", "--mu", "1", "--nu", "3"],
        vec!["horn", "--kind", "eq", "--belkale"],
        vec!["horn", "--r", "0"],
        vec!["star-table", "--n", "9"],
        vec!["snp", "--rect", "2y3"],
    ] {
        let (s, out, err) = eqlr(&args, None);
        assert_eq!(s, 2, "{args:?}: {err}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    let (s, _, err) = eqlr(&["lr", "--lambda", "1", "--mu", "1", "--nu", "2"], Some("0"));
    assert_eq!(s, 2, "{err}");
}

#[test]
fn help_exits_zero() {
    let (s, out, _) = eqlr(&["--help"], None);
    assert_eq!(s, 0);
    assert!(out.contains("verify-all"));
}

#[test]
fn beyond_desk_scale_warns() {
    let r = run(["eqlr", "horn", "--r", "1", "--max-entry", "5"]);
    assert_eq!(r.status, 0);
    assert!(r.stderr.starts_with("warning: max-entry = 5"), "{}", r.stderr);
}

#[test]
fn conjecture_scans_exit_zero_with_findings() {
    let v = json(&["saturation", "--kind", "shifted", "--n", "3", "--max-stretch", "2"]);
    assert_eq!(v["mismatch_count"], 1);
    assert_eq!(v["rows"].as_array().unwrap().iter().filter(|r| r["agree"] == false).count(), 1);
    let v = json(&["monical", "--n", "2"]);
    assert_eq!(v["mismatch_count"], 0);
    let v = json(&["snp", "--rect", "2x2"]);
    assert_eq!(v["mismatch_count"], 0);
    let v = json(&["af-compare", "--n", "2"]);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(v["nonnegative"], true);
}

#[test]
fn theorem_scans_pass() {
    for args in [
        vec!["horn", "--r", "2", "--max-entry", "3"],
        vec!["horn", "--r", "3", "--max-entry", "2", "--belkale"],
        vec!["horn", "--kind", "eq", "--r", "2", "--max-entry", "2"],
        vec!["saturation", "--kind", "lr", "--rect", "2x2"],
        vec!["saturation", "--kind", "eq", "--rect", "2x2", "--max-stretch", "2"],
        vec!["semigroup", "--kind", "lr"],
        vec!["semigroup", "--kind", "eq", "--r", "2", "--max-entry", "1"],
        vec!["purbhoo-sottile", "--n", "3"],
    ] {
        let v = json(&args);
        assert_eq!(v["mismatch_count"], 0, "{args:?}");
        assert!(!v["rows"].as_array().unwrap().is_empty(), "{args:?}");
    }
}

#[test]
fn fixtures_pass() {
    let r = run(["eqlr", "fixtures"]);
    assert_eq!(r.status, 0, "{}", r.stdout);
    assert!(r.stdout.contains("star table n=3 against golden/star_n3.csv: PASS (28 rows, 0 differences)"));
}

#[test]
fn output_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("eqlr-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("star_n3.csv");
    let p = path.to_str().unwrap();
    let r = run(["eqlr", "star-table", "--output", p]);
    assert_eq!(r.status, 0);
    assert!(r.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), STAR_N3_GOLDEN);
    std::fs::remove_dir_all(&dir).ok();
}
