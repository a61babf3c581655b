//! One PASS/FAIL line per acceptance criterion. Lines listed in `KNOWN_FAILURES` test
//! reference claims that do not hold; any other failure, or a known failure that starts
//! passing, fails the target.

use std::process::{Command, ExitCode};
use std::time::Instant;

use eqlr::par::Exec;
use eqlr_cli::verify::{self, Line, KNOWN_FAILURES};
use eqlr_cli::STAR_N3_GOLDEN;

fn eqlr(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_eqlr")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

fn cli_line(id: &'static str, label: &str, args: &[&str], check: impl Fn(i32, &str) -> bool) -> Line {
    let start = Instant::now();
    let (status, stdout) = eqlr(args);
    let pass = check(status, &stdout);
    let first = stdout.lines().next().unwrap_or("").to_string();
    Line {
        id,
        label: label.into(),
        pass,
        detail: format!("`eqlr {}` exit {status}: {first}", args.join(" ")),
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn main() -> ExitCode {
    let mut lines = vec![
        cli_line("1cli", "star-table --n 3 is byte-identical to golden/star_n3.csv", &["star-table", "--n", "3"], |s, out| {
            s == 0 && out == STAR_N3_GOLDEN
        }),
        cli_line("1ring", "the ring reproduces the same table", &["star-table", "--n", "3", "--method", "ring"], |s, out| {
            s == 0 && out == STAR_N3_GOLDEN
        }),
        cli_line(
            "3cli",
            "lr on the worked example gives 2 by every method",
            &["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--method", "all", "--format", "json"],
            |s, out| {
                let v: serde_json::Value = serde_json::from_str(out).unwrap_or_default();
                s == 0 && v["value"] == "2" && v["agree"] == true
            },
        ),
        cli_line("3triv", "lr on three empty shapes gives 1", &["lr", "--lambda", "0", "--mu", "0", "--nu", "0", "--format", "csv"], |s, out| {
            s == 0 && out.lines().skip(1).all(|l| l.ends_with(",1"))
        }),
    ];
    lines.extend(verify::all(Exec::Parallel));
    for l in &lines {
        println!("{l}");
    }
    let unexpected = verify::unexpected_failures(&lines);
    let failed: Vec<&str> = lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    println!("failed: {failed:?}; expected failures: {KNOWN_FAILURES:?}");
    if unexpected.is_empty() {
        println!("acceptance: ok");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results on {unexpected:?}");
        ExitCode::FAILURE
    }
}
