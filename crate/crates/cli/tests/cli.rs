use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn szlab(args: &[&str]) -> Output {
    szlab_with(args, None, &[])
}

fn szlab_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_szlab"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.env_remove("SZLAB_WORKERS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn compute_c4() {
    let v = json(&szlab(&["compute", "--graph6", "Cr"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(
        (v["wiener"].as_u64(), v["szeged"].as_u64(), v["gap"].as_i64()),
        (Some(8), Some(16), Some(8))
    );
    assert_eq!(v["per_edge"].as_array().unwrap().len(), 4);
    let raw = String::from_utf8(szlab(&["compute", "--graph6", "Cr"]).stdout).unwrap();
    assert!(raw.starts_with("{\n  \"schema\": 1,\n  \"n\": 4,"));
}

#[test]
fn compute_tree_from_edge_list() {
    let v = json(&szlab(&["compute", "--edges", "3 2\\n0 1\\n1 2"]));
    assert_eq!(v["wiener"], 4);
    assert_eq!(v["szeged"], 4);
    assert_eq!(v["gap"], 0);
}

#[test]
fn compute_odd_cycle_revised_szeged() {
    let v = json(&szlab(&["compute", "--edges", "5 5\\n0 1\\n1 2\\n2 3\\n3 4\\n4 0"]));
    assert_eq!(v["revised_szeged"], "125/4");
    assert_eq!(v["bipartite"], false);
}

#[test]
fn compute_from_file_and_stdin() {
    let dir = std::env::temp_dir().join(format!("szlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k23.txt");
    std::fs::write(&path, "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n").unwrap();
    let v = json(&szlab(&["compute", "--file", path.to_str().unwrap()]));
    assert_eq!((v["wiener"].as_u64(), v["szeged"].as_u64()), (Some(14), Some(36)));
    let v = json(&szlab_with(&["compute"], Some("Cr\n"), &[]));
    assert_eq!(v["gap"], 8);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn compute_errors() {
    let out = szlab(&["compute", "--edges", "4 2\\n0 1\\n2 3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("disconnected"));
    assert_eq!(szlab(&["compute", "--graph6", "C"]).status.code(), Some(2));
    assert_eq!(szlab(&["compute", "--edges", "3 1\\n0 5"]).status.code(), Some(2));
    // two sources at once is a usage error
    assert_eq!(
        szlab(&["compute", "--graph6", "Cr", "--edges", "1 0"]).status.code(),
        Some(2)
    );
}

#[test]
fn compute_csv_and_human() {
    let out = szlab(&["compute", "--graph6", "Cr", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("u,v,n_u,n_v,n_0,product"));
    assert_eq!(text.lines().count(), 5);
    let out = szlab(&["compute", "--graph6", "Cr", "--format", "human"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("Sz - W = 8"));
}

#[test]
fn decompose_c4_with_pendant() {
    let v = json(&szlab(&["decompose", "--edges", "5 5\\n0 1\\n1 2\\n2 3\\n3 0\\n0 4"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["within_block"], serde_json::json!([8, 0]));
    assert_eq!(v["cross_with_b1"], serde_json::json!([4]));
    assert_eq!(v["cross_other"], 0);
    assert_eq!(v["total"], 12);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["holds"] == true));
    assert!(v["surplus_histogram"].is_array());
}

#[test]
fn decompose_csv_blocks_and_pairs() {
    let args = [
        "decompose",
        "--edges",
        "5 5\\n0 1\\n1 2\\n2 3\\n3 0\\n0 4",
        "--format",
        "csv",
    ];
    let blocks = String::from_utf8(szlab(&args).stdout).unwrap();
    assert!(blocks.starts_with("block,designated,size,vertices,attach,gate,within"));
    assert_eq!(blocks.lines().count(), 3);
    let mut verbose = args.to_vec();
    verbose.push("-v");
    let pairs = String::from_utf8(szlab(&verbose).stdout).unwrap();
    assert!(pairs.starts_with("x,y,distance,mu_sum,surplus,category,block"));
    assert_eq!(pairs.lines().count(), 1 + 10);
}

#[test]
fn decompose_hypotheses() {
    let out = szlab(&["decompose", "--edges", "4 3\\n0 1\\n1 2\\n2 3"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("m ≥ n violated"));
    let out = szlab(&["decompose", "--edges", "5 5\\n0 1\\n1 2\\n2 3\\n3 4\\n4 0"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("bipartite violated"));
}

#[test]
fn verify_stream() {
    // C4 and K_{2,3}
    let v = json(&szlab_with(&["verify"], Some("Cr\nDFw\n"), &[]));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["min_gap"], 8);
    assert_eq!(reports[1]["min_gap"], 22);
    assert_eq!(v["holds"], true);
}

#[test]
fn verify_tallies_bad_lines() {
    let out = szlab_with(&["verify"], Some("Cr\nnot graph6\nCr\nC~\n"), &[]);
    let v = json(&out);
    assert_eq!(v["lines_parsed"], 3);
    assert_eq!(v["parse_errors"][0]["line"], 2);
    assert_eq!(v["rejected"][0]["reason"], "bipartite violated");
    assert_eq!(v["reports"][0]["graphs_received"], 2);
    assert_eq!(v["reports"][0]["graphs_checked"], 1);
    let empty = json(&szlab_with(&["verify"], Some(""), &[]));
    assert_eq!(empty["reports"], serde_json::json!([]));
}

#[test]
fn enumerate_desk_scale() {
    let v = json(&szlab(&["enumerate", "--n", "4..8"]));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 5);
    for (r, n) in reports.iter().zip(4..) {
        assert_eq!(r["n"], n);
        assert_eq!(r["violations"], serde_json::json!([]));
        assert_eq!(r["min_gap"], 4 * n - 8);
        assert_eq!(r["extremal_match"], true);
    }
    assert_eq!(v["holds"], true);
}

#[test]
fn enumerate_limits_and_listing() {
    let out = szlab(&["enumerate", "--n", "9"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stderr(&out).contains("verify"));
    let out = szlab(&["enumerate", "--n", "5", "--list"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);
    let out = szlab(&["enumerate", "--n", "5", "--list", "--min-edges", "0"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 5);
    let v = json(&szlab(&["enumerate", "--n", "5", "--min-edges", "0"]));
    assert_eq!(
        (
            v["reports"][0]["generated"].as_u64(),
            v["reports"][0]["rejected"].as_u64()
        ),
        (Some(5), Some(3))
    );
}

#[test]
fn enumerate_csv_records() {
    let out = szlab(&["enumerate", "--n", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("code,n,m,wiener,szeged,gap"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn output_is_independent_of_worker_count() {
    let one = szlab(&["enumerate", "--n", "4..7", "--workers", "1"]);
    let env = szlab_with(&["enumerate", "--n", "4..7"], None, &[("SZLAB_WORKERS", "4")]);
    let many = szlab(&["enumerate", "--n", "4..7", "--workers", "8"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, env.stdout);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(
        szlab(&["enumerate", "--n", "4", "--workers", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn extremal_lines_and_summary() {
    let out = szlab(&["extremal", "--n", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let summary: Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(summary["n"], 5);
    assert_eq!(summary["count"], 1);
    assert_eq!(summary["all_gaps_equal_4n_minus_8"], true);
    let g6 = szlab(&["compute", "--graph6", lines[0]]);
    assert_eq!(json(&g6)["gap"], 12);

    let out = szlab(&["extremal", "--n", "6"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
    assert_eq!(szlab(&["extremal", "--n", "3"]).status.code(), Some(2));
    let v = json(&szlab(&["extremal", "--n", "4..7", "--format", "json"]));
    let counts: Vec<_> = v["families"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 4]);
}

#[test]
fn canon_ignores_labels() {
    let a = json(&szlab(&["canon", "--graph6", "Cr"]));
    let b = json(&szlab(&["canon", "--graph6", "Cl"]));
    assert_eq!(a["code"], b["code"]);
    let c = json(&szlab(&["canon", "--edges", "4 4\\n0 1\\n1 2\\n2 3\\n3 0"]));
    assert_eq!(a["code"], c["code"]);
}

#[test]
fn help_documents_exit_codes() {
    let out = szlab(&["--help"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Exit codes"));
    for sub in ["compute", "decompose", "verify", "enumerate", "extremal", "canon"] {
        assert!(text.contains(sub), "{sub}");
    }
}
