use std::io::Write;
use std::process::{Command, Output, Stdio};

fn powertuple(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powertuple")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn verify_first_quadruple() {
    let o = powertuple(&["verify", "-k", "4", "310300575/317623684", "-17689/17956", "-75195840/79405921", "17956/17689"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["roots"]["s"], "4661/8911");
    assert_eq!(v["roots"]["v"], "0");
}

#[test]
fn verify_fermat_and_invalid() {
    assert_eq!(powertuple(&["verify", "-k", "2", "1", "3", "8", "120"]).status.code(), Some(0));
    let o = powertuple(&["verify", "-k", "4", "1", "2", "3", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["valid"], false);
}

#[test]
fn map_published_point() {
    let o = powertuple(&["map", "158:59:134:133@4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["elements"][0], "310300575/317623684");
    assert_eq!(v["source_point"], "158:59:134:133@4");
}

#[test]
fn map_degenerate_point_names_the_factor() {
    let o = powertuple(&["map", "2:1:2:1@4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate: Y^2=W^2"));
}

#[test]
fn map_cubic_point_with_lambda() {
    let o = powertuple(&["map", "--lambda", "2", "88:-43:21:84@3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["elements"], serde_json::json!(["11096/9261", "-8", "-672211/74088", "1/8"]));
}

#[test]
fn map_output_pipes_into_verify() {
    let map = powertuple(&["map", "134:133:158:59@4"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_powertuple"))
        .arg("verify")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&map.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["valid"], true);
}

#[test]
fn family_reports_exceptional_parameters() {
    let o = powertuple(&["family", "quartic", "2", "-1"]);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["valid"], true);
    assert_eq!(lines[0]["param"], "2");
    assert_eq!(lines[1]["valid"], false);
    assert!(lines[1]["diagnostic"].as_str().unwrap().contains("exceptional"));

    let sweep = powertuple(&["family", "quartic", "--max-height", "3"]);
    assert_eq!(sweep.status.code(), Some(0));
    assert_eq!(stdout(&sweep).lines().count(), 14);
}

#[test]
fn cubic_family_and_members() {
    let o = powertuple(&["family", "cubic", "1/8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["valid"], true);
    let o = powertuple(&["cubic", "2"]);
    assert_eq!(json(&o)["source_point"], "88:-43:21:84@3");
    assert_eq!(powertuple(&["cubic", "-1"]).status.code(), Some(1));
}

#[test]
fn special_locus_from_point() {
    let o = powertuple(&["special-locus", "--point", "158:59:134:133@4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["third_holds"], true);
    assert_eq!(v["product"], "0");
    assert_eq!(v["kappa"], "133/134");
    let off = powertuple(&["special-locus", "--kappa", "2", "--u", "3", "--w", "5"]);
    assert_eq!(off.status.code(), Some(1));
}

#[test]
fn genus1_and_extend() {
    let o = powertuple(&["genus1", "59/134", "79/67", "158/133", "59/133", "--bound", "3"]);
    assert_eq!(json(&o)["implied_s"], "4661/8911");
    let bad = powertuple(&["genus1", "1/2", "1/3", "1/5", "1/7"]);
    assert_eq!(bad.status.code(), Some(1));
    let o = powertuple(&["extend", "384", "-85/32768", "--bound", "20"]);
    assert_eq!(json(&o)["x"], "435/2");
}

#[test]
fn enumerate_order_and_index() {
    let o = powertuple(&["enumerate", "--count", "7"]);
    assert_eq!(stdout(&o), "1\n1/2\n2\n1/3\n2/3\n3/2\n3\n");
    assert_eq!(stdout(&powertuple(&["enumerate", "--max-height", "10"])).lines().count(), 63);
    assert_eq!(stdout(&powertuple(&["enumerate", "--index-of", "3"])).trim(), "7");
}

#[test]
fn search_is_deterministic_across_partitions() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, parts: &str| {
        let out = dir.path().join(name);
        let o = powertuple(&["search", "--height-bound", "100", "--partitions", parts, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        (stdout(&o), std::fs::read_to_string(out).unwrap())
    };
    let (stats_a, file_a) = run("a.jsonl", "4");
    let (stats_b, file_b) = run("b.jsonl", "4");
    assert_eq!((&stats_a, &file_a), (&stats_b, &file_b));
    let (stats_one, _) = run("one.jsonl", "1");
    assert_eq!(stats_one, stats_a);
}

#[test]
fn search_rediscovers_almost_quadruple() {
    let o = powertuple(&["search", "--height-bound", "16384", "--around", "64/9", "--window-radius", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let hit = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .find(|v| v["class"] == "almost_quadruple")
        .unwrap();
    assert_eq!(hit["elements"], serde_json::json!(["64/9", "145/36", "-2295/16384", "-317135/2359296"]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(powertuple(&["map", "1:2:3"]).status.code(), Some(2));
    assert_eq!(powertuple(&["search", "--resume"]).status.code(), Some(2));
    assert_eq!(powertuple(&["verify", "1/0"]).status.code(), Some(2));
    let o = powertuple(&["search", "--height-bound", "10", "--out", "/nonexistent/dir/x.jsonl"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pretty_format_is_indented_json() {
    let o = powertuple(&["--format", "pretty", "verify", "-k", "2", "1", "3", "8", "120"]);
    let text = stdout(&o);
    assert!(text.contains("\n  \"k\": 2"));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["valid"], true);
}
