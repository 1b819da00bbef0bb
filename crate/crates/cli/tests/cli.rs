use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewpart"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str], input: &Path) -> Output {
    bin().args(args).arg(input).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

const P4: &str = "c path on four vertices\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const C5: &str = "1 2\n2 3\n3 4\n4 5\n5 1\n";
const C6: &str = "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n";
const TUSP8: &str = "p edge 8 14\ne 1 2\ne 3 4\ne 5 7\ne 5 8\ne 6 7\ne 6 8\ne 5 1\ne 5 3\ne 6 2\ne 6 4\ne 7 1\ne 7 4\ne 8 2\ne 8 3\n";

#[test]
fn balanced_on_p4() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.col", P4);
    let doc = json(&run(&["balanced", "--output", "json"], &p4));
    assert_eq!(doc["command"], "balanced");
    assert_eq!((doc["n"].as_u64(), doc["m"].as_u64()), (Some(4), Some(3)));
    assert_eq!(doc["result"]["A"], serde_json::json!([1, 4]));
    assert_eq!(doc["result"]["B"], serde_json::json!([2, 3]));
    assert!(doc["stats"]["elapsed_ms"].is_null());
    assert!(doc["stats"]["candidates_examined"].is_u64());
}

#[test]
fn colour_rejects_c5() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", C5);
    let out = run(&["colour"], &c5);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not Berge"));
    // the other Berge-gated commands agree
    assert_eq!(run(&["balanced"], &c5).status.code(), Some(3));
    assert_eq!(run(&["unbalanced-tight-list"], &c5).status.code(), Some(3));
}

#[test]
fn tight_list_on_c6_is_empty() {
    let dir = TempDir::new().unwrap();
    let c6 = write(&dir, "c6.txt", C6);
    let doc = json(&run(&["tight-list", "--output", "json"], &c6));
    assert_eq!(doc["result"], serde_json::json!([]));
}

#[test]
fn tusp8_unbalanced_tight_partition() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "tusp8.col", TUSP8);
    let doc = json(&run(&["unbalanced-tight-list", "--output", "json"], &g));
    assert_eq!(doc["result"], serde_json::json!([{ "A": [1, 2, 3, 4], "B": [5, 6, 7, 8] }]));
    assert_eq!(doc["certificates"][0]["square"].as_array().unwrap().len(), 4);
    let doc = json(&run(&["tight-list", "--output", "json"], &g));
    assert!(doc["result"].as_array().unwrap().contains(&serde_json::json!({ "A": [1, 2, 3, 4], "B": [5, 6, 7, 8] })));
}

#[test]
fn not_found_is_null_with_exit_zero() {
    let dir = TempDir::new().unwrap();
    let c6 = write(&dir, "c6.txt", C6);
    let doc = json(&run(&["loose", "--output", "json"], &c6));
    assert!(doc["result"].is_null());
    let doc = json(&run(&["balanced", "--output", "json"], &c6));
    assert!(doc["result"].is_null());
}

#[test]
fn colour_emits_optimal_certified_colouring() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "tusp8.col", TUSP8);
    let doc = json(&run(&["colour", "--output", "json"], &g));
    let colours: Vec<u64> = doc["result"]["colours"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    assert_eq!(colours.len(), 8);
    // x1, y1, a1 form a triangle, and three colours suffice
    assert_eq!(doc["result"]["palette"], 3);
    assert_eq!(doc["certificates"]["clique"].as_array().unwrap().len(), 3);

    // feed the colouring back through `verify`
    let text: String = colours.iter().enumerate().map(|(v, c)| format!("{} {c}\n", v + 1)).collect();
    let col = write(&dir, "tusp8.colouring", &text);
    let out = bin().args(["verify", "--output", "json", "--colouring"]).arg(&col).arg(&g).output().unwrap();
    assert_eq!(json(&out)["result"]["valid"], true);
}

#[test]
fn verify_reports_conflicts() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.col", P4);
    let col = write(&dir, "bad", "1 1\n2 2\n3 1\n4 1\n");
    let out = bin().args(["verify", "--output", "json", "--colouring"]).arg(&col).arg(&p4).output().unwrap();
    let doc = json(&out);
    assert_eq!(doc["result"]["valid"], false);
    assert_eq!(doc["certificates"]["conflict"], serde_json::json!([3, 4]));
    let missing = write(&dir, "short", "1 1\n");
    let out = bin().args(["verify", "--colouring"]).arg(&missing).arg(&p4).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [
        ("loop.col", "p edge 2 1\ne 1 1\n"),
        ("dup.col", "p edge 2 2\ne 1 2\ne 2 1\n"),
        ("range.col", "p edge 2 1\ne 1 3\n"),
        ("header.col", "p edge x 1\n"),
        ("empty.txt", ""),
        ("junk.txt", "1 2 3\n"),
    ] {
        let f = write(&dir, name, text);
        let out = run(&["loose"], &f);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"), "{name}");
    }
    let dimacs_err = run(&["loose"], &write(&dir, "l.col", "p edge 2 1\ne 1 1\n"));
    assert!(String::from_utf8_lossy(&dimacs_err.stderr).contains("line 2"));
    assert_eq!(run(&["loose"], &dir.path().join("missing")).status.code(), Some(2));
}

#[test]
fn empty_edgelist_needs_vertices() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "empty.txt", "# nothing\n");
    let doc = json(&run(&["colour", "--vertices", "3", "--output", "json"], &f));
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["result"]["palette"], 1);
}

#[test]
fn budget_gates_berge_commands() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "tusp8.col", TUSP8);
    assert_eq!(run(&["colour", "--budget", "6"], &g).status.code(), Some(3));
    assert_eq!(run(&["check-berge", "--budget", "6"], &g).status.code(), Some(3));
    assert!(run(&["colour", "--budget", "6", "--assume-berge"], &g).status.success());
    let c5 = write(&dir, "c5.txt", C5);
    let doc = json(&run(&["check-berge", "--output", "json"], &c5));
    assert_eq!(doc["result"], false);
    assert_eq!(doc["certificates"]["kind"], "odd-hole");
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let dir = TempDir::new().unwrap();
    let gen = bin().args(["gen", "berge", "--n", "11", "--seed", "5", "--max-clique", "3"]).output().unwrap();
    assert!(gen.status.success());
    let g = write(&dir, "g.col", std::str::from_utf8(&gen.stdout).unwrap());
    let gnp = bin().args(["gen", "gnp", "--n", "14", "--seed", "9"]).output().unwrap();
    let h = write(&dir, "h.col", std::str::from_utf8(&gnp.stdout).unwrap());
    for (cmd, file) in [
        ("tight-list", &h),
        ("kr-list", &h),
        ("loose", &h),
        ("cc-tree", &h),
        ("balanced", &g),
        ("unbalanced-tight-list", &g),
        ("colour", &g),
    ] {
        let outputs: Vec<Vec<u8>> = ["1", "4", "1", "4"]
            .iter()
            .map(|t| {
                let out = run(&[cmd, "--output", "json", "--threads", t], file);
                assert!(out.status.success(), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
                out.stdout
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{cmd} output differs");
    }
}

#[test]
fn timing_is_opt_in() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.col", P4);
    let doc = json(&run(&["loose", "--output", "json", "--timing"], &p4));
    assert!(doc["stats"]["elapsed_ms"].is_number());
}

#[test]
fn gen_families_round_trip() {
    for family in ["gnp", "bipartite", "co-bipartite", "line-bipartite", "berge"] {
        let out = bin().args(["gen", family, "--n", "9", "--seed", "1"]).output().unwrap();
        assert!(out.status.success(), "{family}");
        let again = bin().args(["gen", family, "--n", "9", "--seed", "1"]).output().unwrap();
        assert_eq!(out.stdout, again.stdout, "{family} is not reproducible");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("p edge "), "{family}");
    }
    let out = bin().args(["gen", "berge", "--n", "40"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["gen", "gnp", "--n", "5", "--p", "1.5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn human_output_is_one_based() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.col", P4);
    let out = run(&["balanced"], &p4);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("A = {1, 4}  B = {2, 3}"), "{text}");
}
