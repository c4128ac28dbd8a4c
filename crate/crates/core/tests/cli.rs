use std::io::Write;
use std::process::{Command, Output};

const C3: &str = "\
semiring B
elements 2
zero 0
one 1
add
0 1
1 1
mul
0 0
0 1
end

semimodule C3 over B
elements 3
zero 0
add
0 1 2
1 1 2
2 2 2
act
0 0 0
0 1 2
end
";

fn semimod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semimod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file_with(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn validate_reports_blocks() {
    let f = file_with(C3);
    let out = semimod(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "semiring B: 2 elements\nsemimodule C3 over B: 3 elements\n");
}

#[test]
fn validate_rejects_bad_tables_with_exit_2() {
    let f = file_with(&C3.replace("act\n0 0 0", "act\n0 1 0"));
    let out = semimod(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 13") && err.contains("0m=0"), "{err}");
    let missing = semimod(&["validate", "/nonexistent/file"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn enumerate_from_a_file_and_from_the_catalog() {
    let f = file_with(C3);
    let path = f.path().to_str().unwrap();
    let subs = semimod(&["enumerate", "--subsemimodules", path, "--name", "C3"]);
    assert_eq!(stdout(&subs), "{0}\n{0,1}\n{0,2}\n{0,1,2}\n");
    let ideals = semimod(&["enumerate", "--ideals", path, "--name", "B", "--format", "json"]);
    assert_eq!(stdout(&ideals), "[[0],[0,1]]\n");
    let seconds = semimod(&["enumerate", "--seconds", "--catalog", "--name", "Z6_over_Z6"]);
    assert_eq!(stdout(&seconds), "{0,3}\n{0,2,4}\n");
    let socle = semimod(&["enumerate", "--socle", "--catalog", "--name", "Z16_over_Z16"]);
    assert_eq!(stdout(&socle), "{0,8}\n");
    let max = semimod(&["enumerate", "--maximal-seconds", "--catalog", "--name", "Z6_over_Z6"]);
    assert_eq!(stdout(&max), "{0,3}\n{0,2,4}\n");
    let wrong = semimod(&["enumerate", "--ideals", path, "--name", "C3"]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let ok = semimod(&["check", "--theorem", "P2.2a", "--catalog"]);
    assert_eq!(ok.status.code(), Some(0));
    let refuted = semimod(&["check", "--theorem", "Tt3.8", "--catalog"]);
    assert_eq!(refuted.status.code(), Some(1));
    assert!(stdout(&refuted).contains("Z6_over_Z6"));
    let unknown = semimod(&["check", "--theorem", "X9", "--catalog"]);
    assert_eq!(unknown.status.code(), Some(2));
    let no_source = semimod(&["check", "--all"]);
    assert_eq!(no_source.status.code(), Some(2));
}

#[test]
fn check_on_a_file_uses_its_structures() {
    let f = file_with(C3);
    let out = semimod(&["check", "--theorem", "P27.6", "--theorem", "P2.2b", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = report.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["theorem"], "P27.6");
    assert_eq!(rows[0]["structure"], "C3");
    assert_eq!(rows[0]["status"], "verified");
    assert_eq!(rows[1]["status"], "hypotheses-unmet");
    assert!(rows[0].get("elapsed_ms").is_none());
}

#[test]
fn size_cap_and_timings() {
    let capped = semimod(&["check", "--theorem", "Pt2.5c", "--catalog", "--size-cap", "1", "--format", "json", "--timings"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&capped)).unwrap();
    let rows = report.as_array().unwrap();
    assert!(rows.iter().all(|r| r["elapsed_ms"].is_u64()));
    let z2 = rows.iter().find(|r| r["structure"] == "Z2_over_Z2").unwrap();
    assert_eq!(z2["status"], "skipped(size)");
}

#[test]
fn catalog_listing_and_dump() {
    let list = stdout(&semimod(&["catalog", "--list"]));
    assert!(list.contains("semimodule Z16_over_Z16 over Z16: 16 elements"));
    let dump = semimod(&["catalog", "--dump"]);
    let f = file_with(&stdout(&dump));
    let again = semimod(&["validate", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(again.status.code(), Some(0));
    let blocks: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    assert_eq!(blocks.as_array().unwrap().len(), 24);
}
