use std::process::Command;

use serde_json::Value;

fn qgrass(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(args)
        .env_remove("QGRASS_CACHE_DIR")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn json(path: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let (code, stdout) = qgrass(&[
        "verify", "--q", "2", "--n", "5", "--d", "2", "--suite", "nucleus,actions,bases", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("nucleus dims [1, 3, 1]"));
    let r = json(&out);
    assert_eq!(r["nucleus_dims"], serde_json::json!([1, 3, 1]));
    assert_eq!(r["action_theorems"]["Astar_vee"], "pass");
    assert_eq!(r["bases"]["nuc"], "pass");
    assert_eq!(r["params"]["N"], 5);
    assert_eq!(r["failures"], serde_json::json!([]));
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("r{k}.json"));
        let (code, _) = qgrass(&["verify", "--q", "3", "--n", "4", "--d", "1", "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("run");
        reports.push(v);
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn boundary_is_report_only() {
    let (code, stdout) = qgrass(&["verify", "--q", "2", "--n", "4", "--d", "2", "--suite", "boundary"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("boundary"));
}

#[test]
fn bad_parameters_exit_2() {
    assert_eq!(qgrass(&["verify", "--q", "4", "--n", "5", "--d", "2"]).0, 2);
    assert_eq!(qgrass(&["verify", "--q", "2", "--n", "5", "--d", "3"]).0, 2);
    assert_eq!(qgrass(&["verify", "--q", "2", "--n", "5", "--d", "2", "--max-vertices", "10", "--suite", "spectrum"]).0, 2);
    assert_eq!(qgrass(&["verify", "--q", "2", "--n", "5", "--d", "2", "--max-poset", "100", "--suite", "geometry"]).0, 2);
    assert_eq!(qgrass(&["verify", "--q", "2", "--n", "4", "--d", "2", "--x-rows", "1 1 0 0;1 1 0 0"]).0, 2);
}

#[test]
fn explicit_base_vertex_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    std::fs::create_dir(&cache).unwrap();
    let args = [
        "verify", "--q", "2", "--n", "5", "--d", "2", "--suite", "nucleus,gamma", "--cache-dir", cache.to_str().unwrap(),
        "--x-rows", "1 0 1 0 0;0 1 0 0 1",
    ];
    let (code, stdout) = qgrass(&args);
    assert_eq!(code, 0, "{stdout}");
    assert!(std::fs::read_dir(&cache).unwrap().count() >= 2);
    // second run reads the cached tables
    let (code, stdout2) = qgrass(&args);
    assert_eq!(code, 0);
    assert!(stdout2.contains("nucleus dims [1, 3, 1]"), "{stdout2}");
    assert!(stdout.contains("nucleus dims [1, 3, 1]"));
}

#[test]
fn identities_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("id.json");
    let (code, stdout) = qgrass(&["identities", "--q", "3", "--lmax", "12", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().filter(|l| l.contains("pass")).count(), 3);
    assert_eq!(json(&out)["l_max"], 12);
    assert_eq!(qgrass(&["identities", "--q", "3", "--lmax", "1"]).0, 2);
}
