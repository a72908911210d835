//! End-to-end tests of the `bsz` binary: golden outputs, exit codes,
//! config precedence, and byte-level determinism of repeated runs.

use bernstein_szego::bszcore::{build_p, BszParams, DEFAULT_EXPANSION_CAP};
use bernstein_szego::rational::{rat_str, ratio};
use bernstein_szego::rootsys::build_root_system;
use bernstein_szego::symalg::CharTable;
use bernstein_szego::weightlat::Weight;
use bernstein_szego::weylgrp::WeylGroup;
use std::process::{Command, Output};

fn bsz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsz"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

const EXPAND_A1_JSON: &str = r#"{
  "system": "A1",
  "weight": "[2]",
  "deep": true,
  "characters": {
    "[2]": "1",
    "[0]": "1/3"
  },
  "monomials": {
    "[2]": "1",
    "[0]": "4/3"
  },
  "norm": "1"
}
"#;

#[test]
fn expand_golden_json() {
    let out = bsz(&["expand", "--system", "A1", "--weight", "2", "--ts", "1/3"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), EXPAND_A1_JSON);
}

#[test]
fn expand_golden_plain() {
    let out = bsz(&[
        "expand", "--system", "A1", "--weight", "2", "--ts", "1/3", "--format", "plain",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "system A1\nweight [2]\ndeep true\ncharacters:\n  [2] 1\n  [0] 1/3\n\
                    monomials:\n  [2] 1\n  [0] 4/3\nnorm 1\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn expand_round_trips_against_library() {
    let out = bsz(&[
        "expand",
        "--system",
        "B2",
        "--weight",
        "2,1",
        "--ts",
        "1/2",
        "--tl=-1/3",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");

    let rs = build_root_system("B2").unwrap();
    let wg = WeylGroup::enumerate(&rs);
    let mut table = CharTable::new();
    let params = BszParams::new(&rs, vec![ratio(1, 2)], vec![ratio(-1, 3)]).unwrap();
    let p = build_p(
        &rs,
        &wg,
        &mut table,
        &Weight(vec![2, 1]),
        &params,
        DEFAULT_EXPANSION_CAP,
    )
    .unwrap();

    for (basis, exp) in [("monomials", &p.mono_exp), ("characters", &p.char_exp)] {
        let obj = v[basis].as_object().unwrap();
        assert_eq!(obj.len(), exp.len(), "{basis} key count");
        for (mu, c) in exp {
            assert_eq!(
                obj[&mu.to_string()].as_str().unwrap(),
                rat_str(c),
                "{basis} coefficient of {mu}"
            );
        }
    }
    assert_eq!(v["deep"], serde_json::Value::Bool(p.deep));
    let norm = p.norm_const.as_ref().expect("deep weight carries its norm");
    assert_eq!(v["norm"].as_str().unwrap(), rat_str(norm));
}

#[test]
fn domain_errors_exit_1() {
    // Non-dominant weight.
    let out = bsz(&["expand", "--system", "A1", "--weight=-1", "--ts", "1/3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error"), "stderr: {}", stderr(&out));

    // Long parameters on a simply-laced system.
    let out = bsz(&["expand", "--system", "A2", "--weight", "1,1", "--tl", "1/2"]);
    assert_eq!(out.status.code(), Some(1));

    // Unknown flag is a usage error.
    let out = bsz(&["expand", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));

    // Parameter outside (-1,1).
    let out = bsz(&["expand", "--system", "A1", "--weight", "2", "--ts", "3/2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cap_exhaustion_exits_3() {
    let out = bsz(&[
        "expand", "--system", "B2", "--weight", "3,3", "--ts", "1/2,1/3", "--tl", "1/2,1/3",
        "--cap", "10",
    ]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("cap"), "stderr: {}", stderr(&out));
}

#[test]
fn verify_failure_exits_2() {
    // A deliberately coarse grid wrecks the quadrature agreement while every
    // exact check still passes: the reported failures must be numeric ones
    // and the exit code 2.
    let out = bsz(&[
        "verify", "--suite", "theorems", "--grid", "8", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let suite = &reports[0];
    assert!(suite["failed"].as_u64().unwrap() > 0);
    for check in suite["checks"].as_array().unwrap() {
        if check["status"] == "fail" {
            assert!(
                check["name"].as_str().unwrap().contains("numeric"),
                "unexpected exact failure: {check}"
            );
        }
    }
}

#[test]
fn verify_cap_overrun_reports_skip_not_failure() {
    let out = bsz(&[
        "verify", "--suite", "classic", "--cap", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "skips are not failures");
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let suite = &reports[0];
    assert_eq!(suite["failed"].as_u64(), Some(0));
    assert!(suite["skipped"].as_u64().unwrap() > 0);
    let detail = suite["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["status"] == "skip")
        .map(|c| c["detail"].as_str().unwrap().to_string())
        .expect("at least one skip");
    assert!(detail.contains("cap"), "skip explains itself: {detail}");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let verify_args = ["verify", "--suite", "classic", "--format", "json"];
    let a = bsz(&verify_args);
    let b = bsz(&verify_args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let scan_args = [
        "scan-shallow",
        "--system",
        "B2",
        "--ts",
        "1/2,1/3",
        "--tl",
        "1/2,1/3",
        "--bound",
        "2",
    ];
    let a = bsz(&scan_args);
    let b = bsz(&scan_args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_shallow_reports_and_exits_zero() {
    let out = bsz(&[
        "scan-shallow",
        "--system",
        "B2",
        "--ts",
        "1/2,1/3",
        "--tl",
        "1/2,1/3",
        "--bound",
        "2",
        "--threshold",
        "1e-6",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let entries = report["entries"].as_array().unwrap();
    assert!(
        !entries.is_empty(),
        "B2 at two parameters per class has shallow pairs"
    );
    for e in entries {
        assert!(e["value"].as_f64().unwrap().is_finite());
        assert!(e["error_bound"].as_f64().unwrap().is_finite());
    }

    // On G2 the dominance order is total this close to the origin, so the
    // scan is legitimately empty — and must say so rather than fail.
    let out = bsz(&[
        "scan-shallow",
        "--system",
        "G2",
        "--ts",
        "1/2,1/3",
        "--tl",
        "1/2,1/3",
        "--bound",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(report["entries"].as_array().unwrap().is_empty());
    assert!(report["note"]
        .as_str()
        .unwrap()
        .contains("no dominance-incomparable pairs"));
}

#[test]
fn config_file_defaults_with_flag_precedence() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bsz-config-test.conf");
    std::fs::write(
        &path,
        "# defaults for the expand smoke test\nsystem = A1\nweight = 2\nts = 1/3\nformat = plain\n",
    )
    .unwrap();
    let path_s = path.to_str().unwrap();

    let from_config = bsz(&["--config", path_s, "expand"]);
    assert_eq!(
        from_config.status.code(),
        Some(0),
        "stderr: {}",
        stderr(&from_config)
    );
    assert!(stdout(&from_config).starts_with("system A1\nweight [2]\n"));

    // Explicit flags override the file: same command, JSON format and a
    // different weight.
    let overridden = bsz(&[
        "--config", path_s, "--format", "json", "expand", "--weight", "0",
    ]);
    assert_eq!(overridden.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&overridden)).expect("valid json");
    assert_eq!(v["weight"].as_str(), Some("[0]"));
    assert_eq!(v["system"].as_str(), Some("A1"));
}

#[test]
fn list_systems_covers_every_format() {
    let json = bsz(&["list-systems"]);
    assert_eq!(json.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("valid json");
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 12);
    let f4 = arr.iter().find(|s| s["system"] == "F4").unwrap();
    assert_eq!(f4["weyl_order"].as_u64(), Some(1152));
    assert_eq!(f4["positive_roots"].as_u64(), Some(24));

    let csv = bsz(&["list-systems", "--format", "csv"]);
    let text = stdout(&csv);
    assert!(text.starts_with("system,rank,"));
    assert_eq!(text.lines().count(), 13);

    let plain = bsz(&["list-systems", "--format", "plain"]);
    assert!(stdout(&plain).contains("G2"));
}
