use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn domlab(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(args)
        .env_remove("DOMLAB_TIER")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // Commands that fail early may exit before reading; a broken pipe is fine.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn graph6_of(gadget: &[&str]) -> String {
    let mut args = vec!["gadget"];
    args.extend_from_slice(gadget);
    String::from_utf8(domlab(&args, "").stdout).unwrap()
}

#[test]
fn solve_examples() {
    let c7 = graph6_of(&["cycle:7"]);
    let out = domlab(&["solve", "--kind", "weakly-convex"], &c7);
    assert_eq!(out.status.code(), Some(0));
    let cert = &json_lines(&out)[0];
    assert_eq!(cert["value"], 7);
    assert_eq!(cert["kind"], "WEAKLY_CONVEX");
    assert_eq!(cert["optimal"], true);

    let k1 = domlab(&["solve", "--kind", "connected"], "@\n");
    assert_eq!(json_lines(&k1)[0]["value"], 1);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "6 5\n0 1\n1 2\n2 3\n3 4\n4 5").unwrap();
    let p6 = domlab(&["solve", "--input", file.path().to_str().unwrap(), "--format", "edgelist", "--solver", "grow"], "");
    let cert = &json_lines(&p6)[0];
    assert_eq!((cert["value"].as_u64(), cert["solver"].as_str()), (Some(4), Some("grow")));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(domlab(&["solve"], "not graph6 at all\n").status.code(), Some(2));
    // Two isolated vertices.
    assert_eq!(domlab(&["solve"], "A?\n").status.code(), Some(2));
    assert_eq!(domlab(&["solve", "--input", "/no/such/file"], "").status.code(), Some(2));
    assert_eq!(domlab(&["solve", "--solver", "nope"], "Bw\n").status.code(), Some(2));
    assert_eq!(domlab(&["verify", "--theorems", "S9.missing"], "").status.code(), Some(2));
    assert_eq!(domlab(&["verify", "--corpus", "file:/no/such.g6"], "").status.code(), Some(2));
}

#[test]
fn tier_override_rejects_large_inputs() {
    let c7 = graph6_of(&["cycle:7"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(["solve"])
        .env("DOMLAB_TIER", "6")
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let _ = child.stdin.take().unwrap().write_all(c7.as_bytes());
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tier"));
}

#[test]
fn classify_examples() {
    let hs = graph6_of(&["h-star"]);
    let r = &json_lines(&domlab(&["classify"], &hs))[0];
    assert_eq!((r["is_chordal"].as_bool(), r["is_h_star_free"].as_bool()), (Some(true), Some(false)));
    let c4 = graph6_of(&["cycle:4"]);
    let r = &json_lines(&domlab(&["classify"], &c4))[0];
    assert_eq!((r["is_cograph"].as_bool(), r["is_chordal"].as_bool()), (Some(true), Some(false)));
}

#[test]
fn gadget_formats() {
    let meta = &json_lines(&domlab(&["gadget", "gap", "--k", "6", "--meta"], ""))[0];
    assert_eq!((meta["n"].as_u64(), meta["m"].as_u64()), (Some(28), Some(37)));
    assert_eq!(meta["predictions"]["gamma_wcon"], 16);
    let neg = &json_lines(&domlab(&["gadget", "edge-gap", "--k", "-2", "--meta"], ""))[0];
    assert_eq!(neg["parameter"], -2);
    let dot = String::from_utf8(domlab(&["gadget", "h-star", "--format", "dot"], "").stdout).unwrap();
    assert!(dot.starts_with("graph") && dot.contains("A'"));
    let edges = String::from_utf8(domlab(&["gadget", "path:3", "--format", "edgelist"], "").stdout).unwrap();
    assert_eq!(edges.lines().next(), Some("3 2"));
    assert_eq!(domlab(&["gadget", "gap", "--k", "2"], "").status.code(), Some(2));
}

#[test]
fn verify_writes_report_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let args = ["verify", "--theorems", "S2.gap,S3.cactus", "--corpus", "gadget:gap:6+random:cactus:40:1", "--json-out", path.to_str().unwrap()];
    let first = domlab(&args, "");
    assert_eq!(first.status.code(), Some(0));
    let lines = json_lines(&first);
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["status"], "PASS");
    assert_eq!(lines[2]["summary"]["ok"], true);
    assert!(lines[3].get("timing").is_some());
    let saved = std::fs::read_to_string(&path).unwrap();
    assert_eq!(saved, String::from_utf8(first.stdout.clone()).unwrap());

    let second = domlab(&args, "");
    let strip = |o: &Output| String::from_utf8_lossy(&o.stdout).lines().filter(|l| !l.starts_with("{\"timing\"")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&first), strip(&second));

    let reseeded = domlab(&["verify", "--theorems", "S3.cactus", "--corpus", "random:cactus:5:1", "--seed", "9"], "");
    assert_eq!(json_lines(&reseeded)[0]["corpus"], "random:cactus:5:9");
}

#[test]
fn verify_failure_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.g6");
    // Perfect on eight vertices yet violating the cycle conditions.
    std::fs::write(&file, "GHP@Eo\n").unwrap();
    let corpus = format!("file:{}", file.display());
    let out = domlab(&["verify", "--theorems", "S3.perfect-lemma", "--corpus", &corpus], "");
    assert_eq!(out.status.code(), Some(1));
    let check = &json_lines(&out)[0];
    assert_eq!(check["status"], "FAIL");
    assert_eq!(check["counterexamples"][0]["graph6"], "GHP@Eo");

    let list = String::from_utf8(domlab(&["verify", "--list"], "").stdout).unwrap();
    assert!(list.lines().any(|l| l.starts_with("S2.gap\t")));
}

#[test]
fn sweep_and_interpolate() {
    let c7 = graph6_of(&["cycle:7"]);
    let records = &json_lines(&domlab(&["sweep-edges"], &c7))[0];
    let records = records.as_array().unwrap();
    assert_eq!(records.len(), 7);
    assert!(records.iter().all(|r| r["delta_wcon"] == -2));
    let paw = "Cx\n";
    let spectrum = &json_lines(&domlab(&["interpolate"], paw))[0];
    assert_eq!(spectrum["is_interval"], true);
    assert_eq!(spectrum["tree_count"], 3);
}
