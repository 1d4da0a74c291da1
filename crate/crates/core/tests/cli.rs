use std::process::{Command, Output};

use serde_json::Value;

fn permident(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permident"))
        .args(args)
        .env_remove("PERMIDENT_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn untimed(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v.to_string()
        })
        .collect()
}

#[test]
fn verify_all_small() {
    let out = permident(&["verify", "all", "--max-n", "3", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().count() > 50);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        for key in ["identity", "n", "seed", "trial", "lhs", "rhs", "status", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key} missing in {line}");
        }
        assert_eq!(v["status"], "pass");
        assert!(v["elapsed_ms"].is_u64());
    }
}

#[test]
fn output_is_independent_of_worker_count() {
    let args = |w: &'static str| ["verify", "theorem1", "--max-n", "3", "--trials", "4", "--seed", "7", "--parallel", w];
    let one = permident(&args("1"));
    let four = permident(&args("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(untimed(&stdout(&one)), untimed(&stdout(&four)));

    let a = permident(&["verify", "all", "--max-n", "2", "--parallel", "1"]);
    let b = permident(&["verify", "all", "--max-n", "2", "--parallel", "3"]);
    assert_eq!(untimed(&stdout(&a)), untimed(&stdout(&b)));
}

#[test]
fn seeds_change_samples() {
    let a = permident(&["verify", "theorem1", "--n", "2", "--seed", "1"]);
    let b = permident(&["verify", "theorem1", "--n", "2", "--seed", "2"]);
    assert_ne!(untimed(&stdout(&a)), untimed(&stdout(&b)));
}

#[test]
fn records_are_ordered_by_size_then_trial() {
    let out = permident(&["verify", "vanishing", "--max-n", "3", "--trials", "3"]);
    let keys: Vec<(u64, u64)> = stdout(&out)
        .lines()
        .map(|l| {
            let v: Value = serde_json::from_str(l).unwrap();
            (v["n"].as_u64().unwrap(), v["trial"].as_u64().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(keys.len(), 9);
}

#[test]
fn compute_commands() {
    let cases: [(&[&str], &str); 6] = [
        (&["compute", "rn", "1"], "-10"),
        (&["compute", "rn", "2"], "5870/9"),
        (&["compute", "tangent", "5"], "1 2 16 272 7936"),
        (&["compute", "bernoulli", "12"], "-691/2730"),
        (&["compute", "S", "--points", "1,2,3,4"], "1352/3"),
        (&["compute", "s", "--points", "1,2,3,5,8,13"], "-16"),
    ];
    for (args, want) in cases {
        let out = permident(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out).trim(), want, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify"][..],
        &["verify", "theorem9"],
        &["verify", "theorem1", "--n", "2", "--max-n", "3"],
        &["verify", "theorem1", "--trials", "0"],
        &["verify", "theorem1", "--output", "xml"],
        &["compute", "rn"],
        &["compute", "S", "--points", "1,1"],
        &["bench", "rn", "--sizes", "1-3"],
        &["launch"],
    ] {
        let out = permident(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let out = permident(&["frobnicate"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("permident compute"));
}

#[test]
fn guard_errors_name_the_guard() {
    let out = permident(&["verify", "theorem2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("theorem2 n"));
    let out = permident(&["verify", "sun-congruence", "--n", "9", "--force"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));
}

#[test]
fn human_output() {
    let out = permident(&["verify", "cyclo-even", "--n", "6", "--output", "human"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("PASS cyclo_even n=6 trial=0 lhs=225 rhs=225"));
    assert!(text.ends_with("1 checks, 0 failed\n"));
}

#[test]
fn logging_goes_to_stderr_only() {
    let quiet = permident(&["verify", "perA", "--max-n", "3"]);
    let loud = Command::new(env!("CARGO_BIN_EXE_permident"))
        .args(["verify", "all", "--max-n", "1"])
        .env("PERMIDENT_LOG", "info")
        .output()
        .unwrap();
    assert!(quiet.stderr.is_empty());
    assert_eq!(loud.status.code(), Some(0));
    assert!(!loud.stderr.is_empty());
    for line in String::from_utf8(loud.stdout).unwrap().lines() {
        serde_json::from_str::<Value>(line).unwrap();
    }
}

#[test]
fn bench_reports() {
    let out = permident(&["bench", "rn", "--sizes", "1..4", "--reps", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let values: Vec<String> = stdout(&out)
        .lines()
        .map(|l| {
            let v: Value = serde_json::from_str(l).unwrap();
            assert!(v["median_ms"].is_f64());
            v["value"].as_str().unwrap().to_owned()
        })
        .collect();
    assert_eq!(values, ["-10", "5870/9", "-436619903/4050", "204409938157631/6125000"]);

    let out = permident(&["bench", "cyclo", "--sizes", "8..8", "--reps", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], "11025");
    assert_eq!(v["naive"], "11025");

    let out = permident(&["bench", "rn", "--sizes", "1..1", "--reps", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"value\":\"-10\""));
}
