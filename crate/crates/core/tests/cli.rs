//! End-to-end behaviour of the command-line surface.

use std::process::Command;

use critgroup::cli::{run, Report, SCHEMA};
use critgroup::graph::io::parse_graph;
use critgroup::graph::{generate, Family};
use serde_json::Value;

fn run_args(args: &[&str]) -> critgroup::cli::RunOutput {
    run(std::iter::once("critgroup").chain(args.iter().copied()))
}

fn ok_json(args: &[&str]) -> Value {
    let out = run_args(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("critgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn group_of_k33() {
    let v = ok_json(&["group", "--family", "complete_multipartite", "--params", "3,3"]);
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(strings(&v["result"]["invariant_factors"]), ["3", "3", "9"]);
    assert_eq!(v["result"]["exponent"], "9");
}

#[test]
fn tail_heavy_on_clebsch_complement() {
    // The pair (0000,0011), (1110,1101) in 1-based labels.
    let v = ok_json(&["verify", "--family", "clebsch_complement", "--check", "tail-heavy", "--edges", "1,4;15,14"]);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(strings(&v["result"]["prediction"]), ["16", "96"]);
    assert_eq!(v["result"]["is_orthogonal"], true);

    // The default exhaustive search finds a larger orthogonal set.
    let v = ok_json(&["verify", "--family", "clebsch_complement", "--check", "tail-heavy"]);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(strings(&v["result"]["prediction"]), ["16", "16", "16", "96"]);
    assert_eq!(v["result"]["orthogonal"]["proven_maximum"], true);
}

#[test]
fn scan_lists_the_eta_hits() {
    let v = ok_json(&["scan", "--nmax", "100"]);
    let tuples: Vec<(u64, u64, u64, u64)> = v["result"]["tuples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let p = &t["parameters"];
            (p["n"].as_u64().unwrap(), p["k"].as_u64().unwrap(), p["lambda"].as_u64().unwrap(), p["mu"].as_u64().unwrap())
        })
        .collect();
    for want in [(5, 2, 0, 1), (35, 18, 9, 9), (45, 12, 3, 3), (85, 20, 3, 5)] {
        assert!(tuples.contains(&want), "{want:?}");
    }
    assert!(v["result"]["tuples"].as_array().unwrap().iter().all(|t| t["flagged_for_review"] == true));
    let all = ok_json(&["scan", "--nmax", "20", "--all"]);
    assert!(all["result"]["count"].as_u64().unwrap() > 5);
}

#[test]
fn analyze_petersen() {
    let v = ok_json(&["analyze", "--family", "petersen"]);
    let r = &v["result"];
    assert_eq!(r["srg"]["mu"], 1);
    let eig: Vec<(String, u64)> = r["integer_eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_str().unwrap().to_string(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(eig, [("0".to_string(), 1), ("2".to_string(), 5), ("5".to_string(), 4)]);
    assert_eq!(r["distinct_nonzero_eigenvalue_product"], "10");
    assert_eq!(r["group"]["order"], "2000");
    assert_eq!(r["group"]["exponent"], "10");
}

#[test]
fn verify_exponent_and_lorenzini() {
    let v = ok_json(&["verify", "--family", "paley", "--params", "13", "--check", "exponent"]);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["result"]["classification"], "match");
    assert_eq!(v["result"]["exponent"], "39");
    let v = ok_json(&["verify", "--family", "star", "--params", "4", "--check", "exponent"]);
    assert_eq!(v["result"]["classification"], "exceptional-star");
    let v = ok_json(&["verify", "--family", "cycle", "--params", "7", "--check", "lorenzini"]);
    assert_eq!(v["result"]["holds"], true);
}

#[test]
fn pairing_and_orthogonal() {
    let v = ok_json(&["pairing", "--family", "petersen", "--edge", "1,8", "--edge2", "1,8"]);
    // Self-pairing 2(n-1)/(kn) = 18/30 = 3/5.
    assert_eq!(v["result"]["value"], "3/5");
    let v = ok_json(&["pairing", "--family", "cycle", "--params", "5"]);
    assert_eq!(v["result"]["table"].as_array().unwrap().len(), 5);
    let v = ok_json(&["orthogonal", "--family", "petersen", "--mode", "exact", "--no-hints"]);
    assert_eq!(v["result"]["proven_maximum"], true);
    let v = ok_json(&["orthogonal", "--family", "paley", "--params", "9", "--mode", "greedy"]);
    assert!(v["result"]["size"].as_u64().unwrap() >= 1);
}

#[test]
fn generate_round_trips_through_the_file_format() {
    let v = ok_json(&["generate", "--family", "triangular", "--params", "5"]);
    let parsed = parse_graph(v["result"]["file"].as_str().unwrap()).unwrap();
    assert_eq!(parsed, generate(&Family::Triangular(5)).unwrap());
    let path = temp_file("t5.txt", v["result"]["file"].as_str().unwrap());
    let g = ok_json(&["group", "--input", &path]);
    let h = ok_json(&["group", "--family", "triangular", "--params", "5"]);
    assert_eq!(g["result"], h["result"]);
}

#[test]
fn exit_codes() {
    let bad = temp_file("bad.txt", "n 3\n1 2\n2 x\n");
    let out = run_args(&["group", "--input", &bad]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
    assert!(out.stdout.is_empty());

    assert_eq!(run_args(&["group", "--family", "nope"]).code, 2);
    assert_eq!(run_args(&["group", "--input", "/nonexistent/graph.txt"]).code, 2);
    assert_eq!(run_args(&["frobnicate"]).code, 2);
    assert_eq!(run_args(&["group"]).code, 2);
    // Not a two-eigenvalue graph: invalid input for this check.
    assert_eq!(run_args(&["verify", "--family", "cycle", "--params", "6", "--check", "exponent"]).code, 2);
    // Disconnected input is rejected.
    assert_eq!(run_args(&["group", "--family", "disjoint_cliques", "--params", "2,3"]).code, 2);

    // Two Petersen edges on a common vertex do not pair to zero: a failed verification.
    let out = run_args(&["verify", "--family", "petersen", "--check", "tail-heavy", "--edges", "1,8;1,9"]);
    assert_eq!(out.code, 1, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "fail");

    let help = run_args(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("scan"));
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let cases: [&[&str]; 4] = [
        &["analyze", "--family", "clebsch_complement"],
        &["verify", "--family", "petersen", "--check", "tail-heavy"],
        &["scan", "--nmax", "50"],
        &["pairing", "--family", "paley", "--params", "9"],
    ];
    for args in cases {
        let a = run_args(args);
        let b = run_args(args);
        assert_eq!(a, b, "{args:?}");
        let report: Report = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(report.to_json(), a.stdout);
        assert!(report.timing.is_none());
    }
    let timed = ok_json(&["group", "--family", "petersen", "--timing"]);
    assert!(timed["timing"]["elapsed_ms"].is_u64());
}

fn lookup<'a>(root: &'a Value, path: &str) -> &'a Value {
    let mut cur = root;
    for part in path.split('.') {
        let (key, idx) = match part.find('[') {
            Some(i) => (&part[..i], Some(&part[i..])),
            None => (part, None),
        };
        cur = &cur[key];
        if let Some(mut rest) = idx {
            while let Some(end) = rest.find(']') {
                cur = &cur[rest[1..end].parse::<usize>().unwrap()];
                rest = &rest[end + 1..];
            }
        }
    }
    cur
}

fn count_leaves(v: &Value) -> usize {
    match v {
        Value::Object(m) if !m.is_empty() => m.values().map(count_leaves).sum(),
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => a.iter().map(count_leaves).sum(),
        _ => 1,
    }
}

#[test]
fn text_and_json_carry_the_same_content() {
    for args in [
        vec!["analyze", "--family", "petersen"],
        vec!["verify", "--family", "clebsch_complement", "--check", "exponent"],
        vec!["scan", "--nmax", "30"],
    ] {
        let json: Value = serde_json::from_str(&run_args(&args).stdout).unwrap();
        let mut text_args = args.clone();
        text_args.extend(["--format", "text"]);
        let text = run_args(&text_args).stdout;
        assert_eq!(text.lines().count(), count_leaves(&json), "{args:?}");
        for line in text.lines() {
            let (path, value) = line.split_once(": ").unwrap();
            let leaf = lookup(&json, path);
            let rendered = match leaf {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(rendered, value, "{path}");
        }
    }
}

#[test]
fn binary_matches_library_entry_point() {
    let args = ["group", "--family", "clebsch_complement"];
    let out = Command::new(env!("CARGO_BIN_EXE_critgroup")).args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), run_args(&args).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_critgroup")).args(["scan"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
