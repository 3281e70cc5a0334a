//! End-to-end tests of the `okrank` binary: subcommand behavior, exit
//! codes, wire formats, and the result cache.

use std::process::{Command, Output};

fn okrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_okrank"))
        .args(args)
        .env_remove("OKRANK_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

const PAPER_EXAMPLE: &str = "13,10,9,7o,6,4o,4,4,3,1,1,1";

#[test]
fn map_worked_example() {
    let out = okrank(&["map", "--overpartition", PAPER_EXAMPLE]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["generalized_durfee"], 6);
    assert_eq!(v["vector"]["gamma_len"], 6);
    assert_eq!(v["vector"]["delta"], serde_json::json!([5, 3, 1, 0]));
    assert_eq!(v["vector"]["alpha"], serde_json::json!([5, 5, 4, 2, 1, 1, 1]));
    assert_eq!(v["vector"]["beta"], serde_json::json!([4, 4, 3, 1, 1, 1]));
    assert_eq!(v["kbar_ranks"]["5"], 2);
}

#[test]
fn map_inverse_round_trips() {
    let out = okrank(&["map", "--overpartition", PAPER_EXAMPLE]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let vector = serde_json::to_string(&v["vector"]).unwrap();

    let back = okrank(&["map", "--inverse", "--vector", &vector]);
    assert!(back.status.success());
    assert_eq!(stdout(&back).trim(), PAPER_EXAMPLE);
}

#[test]
fn map_inverse_rejects_invalid_vector() {
    let bad = r#"{"gamma_len":2,"delta":[3],"alpha":[],"beta":[]}"#;
    let out = okrank(&["map", "--inverse", "--vector", bad]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rank_is_the_k_bar_rank() {
    // D-rank of (2,1): largest part 2 minus 2 parts
    let out = okrank(&["rank", "--k", "2", "--overpartition", "2,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");

    let out = okrank(&["rank", "--k", "5", "--overpartition", PAPER_EXAMPLE]);
    assert_eq!(stdout(&out).trim(), "2");

    let out = okrank(&["rank", "--k", "3", "--overpartition", "2,1"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn malformed_overpartition_is_a_usage_error() {
    for bad in ["1,2", "4,4o", "3,x", "0"] {
        let out = okrank(&["rank", "--k", "2", "--overpartition", bad]);
        assert_eq!(out.status.code(), Some(2), "input {bad:?}");
    }
}

#[test]
fn conjugate_is_an_involution() {
    let out = okrank(&["conjugate", "--k", "3", "--overpartition", PAPER_EXAMPLE]);
    assert!(out.status.success());
    let image = stdout(&out).trim().to_string();

    let out = okrank(&["conjugate", "--k", "3", "--overpartition", &image]);
    assert_eq!(stdout(&out).trim(), PAPER_EXAMPLE);
}

#[test]
fn verify_single_identity() {
    let out = okrank(&["verify", "--id", "garvan-lemma36-n2", "--order", "12"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("equal"));

    let out = okrank(&["verify", "--id", "no-such-id"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_report_schema() {
    let out = okrank(&[
        "verify", "--id", "tenord-x", "--order", "15", "--format", "json",
    ]);
    assert!(out.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r["id"], "tenord-x");
    assert_eq!(r["order"], 15);
    assert_eq!(r["outcome"], "equal");
    assert!(r["ms"].is_number());
    assert!(r.get("mismatch").is_none());
}

#[test]
fn verify_all_small_scale() {
    let out = okrank(&["verify", "--all", "--scale", "0.1", "--jobs", "4"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.lines().count() >= 25);
    assert!(text.contains("eqmock"));
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn count_routes_agree_and_ids_are_case_insensitive() {
    // the three routes print identical tables at small size
    let gf = okrank(&["count", "--stat", "nbark", "--k", "3", "--max-n", "10", "--method", "gf"]);
    let ms = okrank(&["count", "--stat", "nbark", "--k", "3", "--max-n", "10", "--method", "multisum"]);
    let en = okrank(&["count", "--stat", "nbark", "--k", "3", "--max-n", "10", "--method", "enum"]);
    assert!(gf.status.success() && ms.status.success() && en.status.success());
    let strip = |out: &Output| {
        stdout(out)
            .lines()
            .skip(1)
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&gf), strip(&ms));
    assert_eq!(strip(&gf), strip(&en));

    let out = okrank(&["verify", "--id", "tenord-X", "--order", "10"]);
    assert!(out.status.success());
}

#[test]
fn list_identities_contains_the_flagship_cases() {
    let out = okrank(&["list-identities"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in [
        "eqmock",
        "bracket-modular",
        "tenord-x",
        "tenord-chi",
        "mdif1",
        "mdif2",
        "skcon-k4",
        "kgen-vs-multisum-k3",
        "jacobi-bilateral",
    ] {
        assert!(text.lines().any(|l| l == id), "missing {id}");
    }
}

#[test]
fn count_formats() {
    let out = okrank(&["count", "--stat", "n", "--max-n", "4", "--method", "enum"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n\tm\tj\tcount\n"));
    assert!(text.contains("4\t0\t0\t1\n"));

    let out = okrank(&[
        "count", "--stat", "n", "--max-n", "4", "--method", "enum", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stat"], "n");

    // unsupported pair
    let out = okrank(&["count", "--stat", "nbar", "--max-n", "4", "--method", "multisum"]);
    assert_eq!(out.status.code(), Some(2));

    // missing k for a k-statistic
    let out = okrank(&["count", "--stat", "nbark", "--max-n", "4", "--method", "gf"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache_dir = dir.path().to_str().unwrap();
    let args = [
        "count", "--stat", "nbark", "--k", "2", "--max-n", "8", "--method", "gf",
        "--cache-dir", cache_dir, "--verbose",
    ];

    let first = okrank(&args);
    assert!(first.status.success());
    assert!(String::from_utf8_lossy(&first.stderr).contains("via computation"));

    let second = okrank(&args);
    assert!(second.status.success());
    let diag = String::from_utf8_lossy(&second.stderr);
    assert!(diag.contains("cache hit"), "diagnostics: {diag}");
    // cached output is byte-identical
    assert_eq!(first.stdout, second.stdout);

    // corrupt every cache file: the command recomputes and still agrees
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), b"OKRK1garbage").unwrap();
    }
    let third = okrank(&args);
    assert!(third.status.success());
    assert_eq!(first.stdout, third.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("via computation"));
}

#[test]
fn cache_ignores_foreign_keys() {
    // entries addressed by a different key (e.g. another library
    // version) are misses, not hits
    let dir = tempfile::tempdir().unwrap();
    let cache_dir = dir.path().to_str().unwrap();
    let args = [
        "count", "--stat", "n", "--max-n", "5", "--method", "gf",
        "--cache-dir", cache_dir, "--verbose",
    ];
    let first = okrank(&args);
    assert!(first.status.success());

    // rewrite the stored entry under a mangled key, as a version bump
    // would leave behind
    let path = std::fs::read_dir(dir.path())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    let mut bytes = std::fs::read(&path).unwrap();
    let key_len = u32::from_le_bytes(bytes[5..9].try_into().unwrap()) as usize;
    bytes[9..9 + key_len].reverse();
    std::fs::write(&path, bytes).unwrap();

    let second = okrank(&args);
    assert!(second.status.success());
    assert!(String::from_utf8_lossy(&second.stderr).contains("via computation"));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn unwritable_cache_dir_disables_caching() {
    let out = Command::new(env!("CARGO_BIN_EXE_okrank"))
        .args([
            "count", "--stat", "n", "--max-n", "3", "--method", "enum",
            "--cache-dir", "/proc/okrank-no-such-dir",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("caching disabled"));
}

#[test]
fn cache_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let run = |verbose: bool| {
        let mut args = vec![
            "count", "--stat", "m", "--max-n", "6", "--method", "enum",
        ];
        if verbose {
            args.push("--verbose");
        }
        Command::new(env!("CARGO_BIN_EXE_okrank"))
            .args(&args)
            .env("OKRANK_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run(false);
    assert!(first.status.success());
    let second = run(true);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
    assert_eq!(first.stdout, second.stdout);
}
