//! Scripted scenarios with recorded output and exit status.
//!
//! Each block in `golden/scenarios.txt` is a `$` line holding tab-separated
//! arguments, a `?` line with the exit status, the expected output and a
//! closing `%%`. Set `ORDTRUTH_BLESS=1` to rewrite the file from current
//! behavior.

use std::path::PathBuf;

use ordtruth_cli::run;

struct Scenario {
    args: Vec<String>,
    status: i32,
    output: String,
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/scenarios.txt")
}

fn load() -> Vec<Scenario> {
    let text = std::fs::read_to_string(golden_path()).unwrap();
    let mut out = Vec::new();
    let mut lines = text.lines();
    while let Some(head) = lines.next() {
        if head.is_empty() {
            continue;
        }
        let args = head.strip_prefix("$ ").expect("block starts with `$ `");
        let status = lines.next().and_then(|l| l.strip_prefix("? ")).expect("status line");
        let mut output = String::new();
        for l in lines.by_ref() {
            if l == "%%" {
                break;
            }
            output.push_str(l);
            output.push('\n');
        }
        out.push(Scenario {
            args: args.split('\t').map(str::to_owned).collect(),
            status: status.parse().unwrap(),
            output,
        });
    }
    out
}

fn render(scenarios: &[Scenario]) -> String {
    let mut s = String::new();
    for sc in scenarios {
        s.push_str(&format!("$ {}\n? {}\n{}%%\n", sc.args.join("\t"), sc.status, sc.output));
    }
    s
}

#[test]
fn golden_scenarios() {
    let scenarios = load();
    assert!(scenarios.len() >= 50, "only {} scenarios", scenarios.len());
    let actual: Vec<Scenario> = scenarios
        .iter()
        .map(|sc| {
            let (status, output) = run(&sc.args);
            Scenario { args: sc.args.clone(), status, output }
        })
        .collect();
    if std::env::var_os("ORDTRUTH_BLESS").is_some() {
        std::fs::write(golden_path(), render(&actual)).unwrap();
        return;
    }
    for (want, got) in scenarios.iter().zip(&actual) {
        assert_eq!(
            (want.status, &want.output),
            (got.status, &got.output),
            "scenario `{}`",
            want.args.join(" ")
        );
    }
}

#[test]
fn every_exit_status_is_exercised() {
    let statuses: std::collections::BTreeSet<i32> = load().iter().map(|s| s.status).collect();
    assert_eq!(statuses.into_iter().collect::<Vec<_>>(), vec![0, 1, 2]);
}
