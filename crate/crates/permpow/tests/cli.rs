use std::path::PathBuf;
use std::process::{Command, Output};

use permpow::io::{graph_from_json, read_graph};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn permpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permpow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn power_of_three_c4_copies_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = data("c4.json");
    let out = permpow(&[
        "power",
        c4.to_str().unwrap(),
        "--k",
        "3",
        "--perm",
        "(0 11)(1 9)(2 5)(3 6)(4 10)(7 8)",
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("symmetric: true"));
    let g = read_graph(dir.path().join("power.json")).unwrap();
    assert_eq!(g.vertex_count(), 12);
    let dot = std::fs::read_to_string(dir.path().join("power.dot")).unwrap();
    assert!(dot.contains("[label=\"2.3\"]"));
    assert!(dir.path().join("clouds.dot").exists());
}

#[test]
fn power_prints_json_without_out_dir() {
    let out = permpow(&["power", data("c4.json").to_str().unwrap(), "--perm", "(0 2)"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let json = &text[text.find('{').unwrap()..];
    assert_eq!(graph_from_json(json).unwrap().vertex_count(), 4);
}

#[test]
fn three_cycle_on_c8_is_not_symmetric() {
    let out = permpow(&["power", data("c8.json").to_str().unwrap(), "--perm", "(0 1 2)"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("symmetric: false"));
}

#[test]
fn input_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2, \"matrix\": [[0, 1]").unwrap();
    assert_eq!(code(&permpow(&["power", bad.to_str().unwrap(), "--perm", "()"])), 2);
    let c4 = data("c4.json");
    assert_eq!(code(&permpow(&["power", c4.to_str().unwrap(), "--perm", "(0 9)"])), 2);
    assert_eq!(code(&permpow(&["power", "/nonexistent/graph.json", "--perm", "()"])), 2);
    assert_eq!(code(&permpow(&["power", c4.to_str().unwrap()])), 2);
}

#[test]
fn equal_reports_and_exits() {
    let c4 = data("c4.json");
    let same = permpow(&[
        "equal",
        c4.to_str().unwrap(),
        "--k",
        "3",
        "--perm",
        "(0 11)(1 9)(2 5)(3 6)(4 10)(7 8)",
        "--perm2",
        "(0 11 3 6 10 7 8 4 1 9 2 5)",
    ]);
    assert_eq!(code(&same), 0);
    assert!(stdout(&same).contains("products equal: true"));
    let differ = permpow(&["equal", c4.to_str().unwrap(), "--perm", "()", "--perm2", "(0 1)"]);
    assert_eq!(code(&differ), 1);
}

#[test]
fn reduce_on_two_h6_copies() {
    let out = permpow(&[
        "reduce",
        data("h6.json").to_str().unwrap(),
        "--k",
        "2",
        "--perm",
        "(0 4 6 3 7 5 1 8)(2 9)(10 11)",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("involution: true"));
    assert!(text.contains("products equal: true"));
}

#[test]
fn reduce_without_symmetric_quotient_exits_with_1() {
    let out = permpow(&["reduce", data("c8.json").to_str().unwrap(), "--perm", "(0 1 2)"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn enumerate_c8() {
    let out = permpow(&["enumerate", data("c8.json").to_str().unwrap(), "--mode", "exhaustive"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("non-involutive valid: 112"));
    assert!(text.contains("involutive: 764"));
    assert!(text.contains("symmetric: 876"));
}

#[test]
fn enumerate_respects_cap() {
    let out = permpow(&["enumerate", data("c8.json").to_str().unwrap(), "--cap", "1000"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn sampled_enumeration_is_reproducible() {
    let k23 = data("k23.json");
    let args = [
        "enumerate",
        k23.to_str().unwrap(),
        "--k",
        "2",
        "--mode",
        "sample",
        "--samples",
        "3000",
        "--seed",
        "42",
    ];
    let a = permpow(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, permpow(&args).stdout);
    assert!(stdout(&a).contains("total scanned: 3000"));
}

#[test]
fn sampling_does_not_depend_on_thread_count() {
    let k23 = data("k23.json");
    let args = [
        "enumerate",
        k23.to_str().unwrap(),
        "--k",
        "2",
        "--mode",
        "sample",
        "--samples",
        "5000",
        "--seed",
        "7",
    ];
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_permpow"))
            .args(args)
            .env("PERMPOW_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, run("3").stdout);
    assert_eq!(code(&run("zero")), 2);
}

#[test]
fn catalog_lists_112_sorted_lines() {
    let out = permpow(&["catalog-c8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 112);
    let parsed: Vec<_> = lines
        .iter()
        .map(|l| permpow_core::Permutation::parse_cycles(l, 8).unwrap())
        .collect();
    assert!(parsed.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn zigzag_of_the_four_vertex_example() {
    let out = permpow(&[
        "zigzag",
        data("zigzag_g.json").to_str().unwrap(),
        data("zigzag_h.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let g = graph_from_json(&text[text.find('{').unwrap()..]).unwrap();
    let support: Vec<usize> = g.neighbors(0).into_iter().map(|(w, _)| w).collect();
    assert_eq!(support, vec![6, 7, 10, 11]);
}

#[test]
fn partition_quotient_and_gap() {
    let out = permpow(&["quotient", data("h6.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sizes"], serde_json::json!([2, 1, 1, 2]));
    assert_eq!(v["counts"], serde_json::json!([[0, 2, 0, 0], [2, 0, 1, 0], [0, 1, 0, 2], [0, 0, 2, 0]]));

    let out = permpow(&["partition", data("k35.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("equitable: true"));

    let out = permpow(&["gap", data("k4.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("lambda2: 0.333333333"));
    assert_eq!(code(&permpow(&["gap", data("h6.json").to_str().unwrap()])), 2);
}
