use std::io::Write;
use std::process::{Command, Output, Stdio};

use mbdom::formulas::{erdos_selfridge, tree_values};
use mbdom::graph::{generate, Family};
use mbdom::residual::reduce_and_solve;
use mbdom::{gmb, gmb_prime};

fn mbdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mbdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mbdom(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Value of `key=...` anywhere in the text output.
fn value(text: &str, key: &str) -> String {
    text.split_whitespace()
        .find_map(|tok| tok.strip_prefix(key)?.strip_prefix('='))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

fn graph(spec: &str) -> mbdom::Graph {
    generate(&spec.parse::<Family>().unwrap()).unwrap()
}

#[test]
fn solve_examples() {
    assert_eq!(value(&stdout(&["solve", "gen:cycle:9", "--first", "d"]), "value"), "4");
    let out = stdout(&["solve", "gen:fig4", "--first", "s", "--pre-dominated", "u"]);
    assert_eq!(value(&out, "value"), "1");
    assert_eq!(value(&out, "pre_dominated"), "u");
    assert_eq!(value(&stdout(&["solve", "gen:path:3", "--first", "s"]), "value"), "inf");
}

#[test]
fn solve_options_keep_the_value() {
    for extra in [&["--jobs", "4"][..], &["--allow-pass", "d,s"], &["--allow-pass", "s"]] {
        let mut args = vec!["solve", "gen:cycle:8"];
        args.extend_from_slice(extra);
        assert_eq!(value(&stdout(&args), "value"), "4", "{extra:?}");
    }
}

#[test]
fn formula_examples() {
    let out = stdout(&["formula", "gen:star:4", "--which", "tree"]);
    assert!(out.contains("gmb=1 gmb'=inf"), "{out}");
    let out = stdout(&["formula", "gen:cycle:14", "--which", "es"]);
    assert!(out.contains("criterion=true gamma=5"), "{out}");
    let out = stdout(&["formula", "gen:cycle:6", "--which", "gamma2"]);
    assert_eq!(value(&out, "witness"), "none");
    let out = stdout(&["formula", "gen:cycle:7", "--which", "cycle"]);
    assert!(out.contains("gmb=3 gmb'=3"), "{out}");
}

#[test]
fn formula_union_prints_four_bounds() {
    let out = stdout(&["formula", "gen:yk:2", "--which", "union", "--other", "gen:yk:3"]);
    for key in ["d_low", "d_high", "s_low", "s_high"] {
        value(&out, key);
    }
}

#[test]
fn residual_examples() {
    let out = stdout(&["residual", "gen:path:5"]);
    assert_eq!(value(&out, "residual"), "K1");
    assert_eq!(value(&out, "pairs"), "2");
    assert_eq!(value(&out, "sgame"), "inf");
    assert_eq!(value(&out, "dgame"), "[2,3]");
    let out = stdout(&["residual", "gen:path:4"]);
    assert_eq!(value(&out, "residual"), "empty");
    assert_eq!(value(&out, "sgame"), "2");
    assert_eq!(value(&stdout(&["residual", "gen:star:3"]), "residual"), "self");
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "--suite", "cycles", "--max-n", "14"]);
    assert_eq!(value(&out, "instances"), "12");
    assert!(out.contains("result=pass"), "{out}");
    let out = stdout(&["verify", "--suite", "lemmas", "--max-n", "10", "--seed", "7"]);
    for check in ["continuation", "no-skip", "pairing-oracle"] {
        assert!(out.contains(&format!("check={check} ")), "{out}");
    }
    assert!(out.contains("failures=0"));
    assert!(!out.contains("counterexample"));
}

#[test]
fn simulate_examples() {
    let out = stdout(&["simulate", "gen:cycle:6", "--dom", "optimal", "--sta", "cycle", "--first", "s"]);
    assert!(out.contains("WINNER D 3"), "{out}");
    let out = stdout(&["simulate", "gen:path:4", "--dom", "pairing", "--sta", "optimal", "--first", "d"]);
    assert!(out.contains("WINNER D 2"), "{out}");
    let out = stdout(&["simulate", "gen:double_star:2,2", "--dom", "optimal", "--sta", "optimal"]);
    assert!(out.lines().any(|l| l == "WINNER S"), "{out}");
}

#[test]
fn values_match_library_calls() {
    for spec in ["gen:cycle:10", "gen:path:6", "gen:fig4", "gen:grst:2,3,4", "gen:star:5"] {
        let g = graph(spec);
        let d = value(&stdout(&["solve", spec, "--first", "d"]), "value");
        let s = value(&stdout(&["solve", spec, "--first", "s"]), "value");
        assert_eq!(d, gmb(&g).unwrap().to_string(), "{spec}");
        assert_eq!(s, gmb_prime(&g).unwrap().to_string(), "{spec}");

        let r = reduce_and_solve(&g).unwrap();
        let out = stdout(&["residual", spec]);
        assert_eq!(value(&out, "sgame"), r.sgame_exact.to_string());
        assert_eq!(value(&out, "dgame"), format!("[{},{}]", r.dgame_low, r.dgame_high));

        let es = erdos_selfridge(&g).unwrap();
        let out = stdout(&["formula", spec, "--which", "es"]);
        assert_eq!(value(&out, "criterion"), es.criterion.to_string());
        assert_eq!(value(&out, "gamma_sets"), es.num_gamma_sets.to_string());
    }
    let t = graph("gen:path:6");
    let (d, s) = tree_values(&t).unwrap();
    let out = stdout(&["formula", "gen:path:6", "--which", "tree"]);
    assert_eq!((value(&out, "gmb"), value(&out, "gmb'")), (d.to_string(), s.to_string()));
}

#[test]
fn reads_files_and_stdin() {
    let text = graph("gen:cycle:9").to_edge_list();
    let path = std::env::temp_dir().join(format!("mbdom-cli-{}.txt", std::process::id()));
    std::fs::write(&path, &text).unwrap();
    let out = stdout(&["solve", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(value(&out, "value"), "4");

    let mut child = Command::new(env!("CARGO_BIN_EXE_mbdom"))
        .args(["solve", "-", "--first", "s"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(value(&String::from_utf8(out.stdout).unwrap(), "value"), "4");
}

#[test]
fn generate_output_parses_back() {
    let out = stdout(&["generate", "grst:2,2,3"]);
    let parsed = mbdom::graph::parse_edge_list(&out).unwrap();
    assert_eq!(parsed, graph("gen:grst:2,2,3"));
}

#[test]
fn json_output() {
    let out = stdout(&["--json", "solve", "gen:cycle:9"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["command"], "solve");
    assert_eq!(v["input"], "gen:cycle:9");
    assert_eq!(v["values"]["value"], "4");
    assert!(v["elapsed_ms"].is_u64());

    let out = stdout(&["verify", "--suite", "cycles", "--max-n", "6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["body"].as_str().unwrap().contains("check=cycle-values"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--suite", "union", "--max-n", "6", "--seed", "3"][..],
        &["simulate", "gen:path:8", "--dom", "random", "--sta", "random", "--seed", "11"],
        &["residual", "gen:fig4"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(mbdom(&["--help"]).status.code(), Some(0));
    assert_eq!(mbdom(&["solve"]).status.code(), Some(1));
    assert_eq!(mbdom(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(mbdom(&["solve", "gen:nosuchfamily:3"]).status.code(), Some(1));
    assert_eq!(mbdom(&["solve", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(mbdom(&["formula", "gen:cycle:5", "--which", "tree"]).status.code(), Some(1));
    assert_eq!(mbdom(&["simulate", "gen:path:4", "--dom", "tree"]).status.code(), Some(1));

    let out = mbdom(&["solve", "gen:path:30"]);
    assert_eq!(out.status.code(), Some(3));
    let out = mbdom(&["solve", "gen:cycle:14", "--memo-cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
