use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use sghom::gen::paley;
use sghom_harness::format::parse_graph;
use sghom_harness::VerificationReport;

fn sg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sg")).args(args).env_remove("SG_CACHE").output().expect("run sg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_gen(dir: &Path, file: &str, args: &[&str]) -> String {
    let path = dir.join(file).to_str().unwrap().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    assert!(sg(&full).status.success());
    path
}

#[test]
fn gen_writes_parseable_graphs() {
    let o = sg(&["gen", "paley", "--q", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_graph(&stdout(&o)).unwrap(), paley(5).unwrap());
    let o = sg(&["gen", "tower", "--level", "3"]);
    assert_eq!(parse_graph(&stdout(&o)).unwrap().order(), 32);
    let o = sg(&["--json", "gen", "named", "--name", "K6_M"]);
    assert!(stdout(&o).starts_with('{'));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(sg(&["gen", "paley", "--q", "7"]).status.code(), Some(2));
    assert_eq!(sg(&["gen", "named", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(sg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sg(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sg");
    fs::write(&bad, "sg 1\nn 2\ne 0 0 +\n").unwrap();
    let o = sg(&["switch", "-i", bad.to_str().unwrap(), "--set", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn switch_and_hom() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_gen(dir.path(), "k4.sg", &["named", "--name", "K4_bad_positive"]);
    let t = write_gen(dir.path(), "t.sg", &["paley-plus", "--q", "5"]);
    let o = sg(&["hom", "-s", &k4, "-t", &t]);
    assert_eq!(stdout(&o).trim(), "no");
    // switching does not change the answer; flipping one edge's sign does
    let switched = dir.path().join("s.sg");
    let o = sg(&["switch", "-i", &k4, "--set", "0,2", "-o", switched.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(parse_graph(&fs::read_to_string(&switched).unwrap()).unwrap().negative_edge_count(), 4);
    assert_eq!(stdout(&sg(&["hom", "-s", switched.to_str().unwrap(), "-t", &t])).trim(), "no");
    let one = dir.path().join("one.sg");
    fs::write(&one, "sg 1\nn 4\ne 0 1 -\ne 0 2 +\ne 0 3 +\ne 1 2 +\ne 1 3 +\ne 2 3 +\n").unwrap();
    let o = sg(&["hom", "-s", one.to_str().unwrap(), "-t", &t, "--witness"]);
    let out = stdout(&o);
    assert!(out.starts_with("yes\nmap "), "{out}");
    let o = sg(&["--json", "hom", "-s", one.to_str().unwrap(), "-t", &t, "--sp"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exists"], true);
}

#[test]
fn chi_with_cache() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_gen(dir.path(), "p.sg", &["named", "--name", "P5_M"]);
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();
    let first = sg(&["chi", "-i", &g, "--mode", "sp", "--max-order", "6", "--cache", c]);
    assert_eq!(stdout(&first).trim(), "chi_sp = 4");
    let again = sg(&["--json", "chi", "-i", &g, "--mode", "sp", "--max-order", "6", "--cache", c]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    assert_eq!((v["chi_sp"].as_u64(), v["cached"].as_bool()), (Some(4), Some(true)));
    // a damaged cache is ignored and rebuilt
    fs::write(&cache, fs::read_to_string(&cache).unwrap().replace("4", "3")).unwrap();
    let o = sg(&["--json", "chi", "-i", &g, "--mode", "sp", "--max-order", "6", "--cache", c]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["chi_sp"].as_u64(), v["cached"].as_bool()), (Some(4), Some(false)));
    assert!(String::from_utf8_lossy(&o.stderr).contains("checksum"));
}

#[test]
fn cap_exhaustion_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_gen(dir.path(), "k6.sg", &["named", "--name", "K6_M"]);
    let o = sg(&["chi", "-i", &g, "--mode", "sp", "--max-order", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn props_report_and_exit() {
    let dir = tempfile::tempdir().unwrap();
    let sp5 = write_gen(dir.path(), "sp5.sg", &["paley", "--q", "5"]);
    let plus = write_gen(dir.path(), "plus.sg", &["paley-plus", "--q", "5"]);
    assert_eq!(stdout(&sg(&["props", "-i", &sp5, "--check", "P:1,2"])).trim(), "true");
    assert_eq!(sg(&["props", "-i", &sp5, "--check", "P:1,3"]).status.code(), Some(1));
    assert!(sg(&["props", "-i", &plus, "--check", "Phat:2,2"]).status.success());
    assert!(sg(&["props", "-i", &plus, "--check", "transitivity:edge"]).status.success());
    assert_eq!(sg(&["props", "-i", &plus, "--check", "transitivity:sp_vertex"]).status.code(), Some(1));
    assert_eq!(stdout(&sg(&["props", "-i", &plus, "--check", "splitters"])).lines().count(), 15);
    assert_eq!(sg(&["props", "-i", &sp5, "--check", "Q:1"]).status.code(), Some(2));
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for (i, threads) in ["1", "3"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}.json"));
        let o = Command::new(env!("CARGO_BIN_EXE_sg"))
            .args(["verify", "--suite", "paley,k4,splitters,gadget-cases", "--seed", "7", "--report"])
            .arg(&path)
            .env("SG_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
        let r: VerificationReport = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        reports.push(r.without_timings());
    }
    assert_eq!(reports[0], reports[1]);
    let names: Vec<&str> = reports[0].checks.iter().map(|c| c.name.as_str()).collect();
    assert!(names.contains(&"k4.bad-classes") && !names.contains(&"sp9.neighbourhoods"));
}
