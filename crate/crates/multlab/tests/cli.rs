use std::path::PathBuf;

use multlab::cli::{run, EXIT_FALSE, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

fn ring(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "rings", &format!("{name}.ring")].iter().collect();
    p.display().to_string()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["multlab"];
    full.extend_from_slice(args);
    let out = run(full);
    assert!(out.stderr.is_empty() || out.code == EXIT_INPUT, "{}", out.stderr);
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, v)
}

#[test]
fn classify_gor5() {
    let (code, v) = json(&["classify", &ring("gor5")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["e"], 5);
    assert_eq!(v["min_mult_G"], true);
    assert_eq!(v["is_gorenstein"], true);
    assert_eq!(v["ring"]["vars"], serde_json::json!(["x", "y", "z"]));
}

#[test]
fn theorem1_on_the_fiber_product() {
    let (code, v) = json(&["theorem1", &ring("fiber")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["consistent"], true);
    for k in ["stmt1_gorenstein_min_mult", "stmt2_ext_gorenstein_gldim2", "stmt3_single_max_rank_relation"] {
        assert_eq!(v[k], false, "{k}");
    }
}

#[test]
fn missing_file_is_an_input_error() {
    let out = run(["multlab", "hilbert", "missing.ring"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("missing.ring"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_report_positions() {
    let dir = std::env::temp_dir().join(format!("multlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.ring");
    std::fs::write(&path, "vars x y\nrel x^2 + w\n").unwrap();
    let out = run(["multlab", "hilbert", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains(":2:11:"), "{}", out.stderr);
    std::fs::write(&path, "vars x\nrel x\n").unwrap();
    assert_eq!(run(["multlab", "hilbert", path.to_str().unwrap()]).code, EXIT_INPUT);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn boolean_commands_use_exit_one_for_false() {
    assert_eq!(json(&["froberg", &ring("ci2")]).0, EXIT_OK);
    assert_eq!(json(&["froberg", &ring("x3")]).0, EXIT_FALSE);
    assert_eq!(json(&["golod", &ring("golod2")]).0, EXIT_OK);
    assert_eq!(json(&["golod", &ring("ci2")]).0, EXIT_FALSE);
    assert_eq!(json(&["koszul", &ring("x3"), "--hom", "5"]).0, EXIT_FALSE);
    let (code, v) = json(&["ext-compare", &ring("x3")]);
    assert_eq!((code, &v["quadratic_witness"]), (EXIT_FALSE, &Value::Bool(false)));
    assert_eq!(json(&["levin", &ring("ci2"), "--power", "2"]).0, EXIT_OK);
}

#[test]
fn reports() {
    let (_, v) = json(&["hilbert", &ring("gor5")]);
    assert_eq!(v["hilbert_function"], serde_json::json!([1, 3, 1]));
    let (_, v) = json(&["socle", &ring("ci2")]);
    assert_eq!(v["socle_basis"], serde_json::json!(["y*z"]));
    let (_, v) = json(&["betti", &ring("golod2"), "--hom", "4"]);
    assert_eq!(v["ranks"], serde_json::json!([1, 2, 4, 8, 16]));
    let (_, v) = json(&["betti", &ring("ci2"), "--module", "m^1", "--hom", "3"]);
    assert_eq!(v["module"], "m^1");
    assert_eq!(v["ranks"], serde_json::json!([2, 3, 4, 5]));
    let (_, v) = json(&["ext-pres", &ring("ci2")]);
    assert_eq!(v["generators"], serde_json::json!(["y*", "z*"]));
    assert_eq!(v["relation_count"], 1);
    let (_, v) = json(&["quad-dual", &ring("ci2"), "--hom", "4"]);
    assert_eq!(v["hilbert_dual"], serde_json::json!([1, 2, 3, 4, 5]));
    let (_, v) = json(&["lindef", &ring("x3"), "--hom", "5"]);
    assert_eq!(v["ld"]["kind"], "at_least");
    let (_, v) = json(&["polreg", &ring("ci2")]);
    assert_eq!((v["polreg"].as_u64(), v["sega_bound"].as_u64()), (Some(2), Some(3)));
    let (code, v) = json(&["theorem2", &ring("ci2")]);
    assert_eq!((code, &v["stmt1_ci_min_mult"]), (EXIT_OK, &Value::Bool(true)));
    let (code, v) = json(&["theorem3", &ring("golod2")]);
    assert_eq!((code, &v["case"]), (EXIT_OK, &Value::String("cm_golod".into())));
    let (code, v) = json(&["theorem3", &ring("fiber")]);
    assert_eq!((code, &v["applicable"]), (EXIT_OK, &Value::Bool(false)));
}

#[test]
fn output_is_deterministic_and_text_renders() {
    let a = run(["multlab", "classify", &ring("fiber")]);
    let b = run(["multlab", "classify", &ring("fiber")]);
    assert_eq!(a.stdout, b.stdout);
    let t = run(["multlab", "--format", "text", "classify", &ring("gor5")]);
    assert_eq!(t.code, EXIT_OK);
    assert!(t.stdout.lines().any(|l| l == "min_mult_G: true"), "{}", t.stdout);
}

#[test]
fn usage_errors() {
    assert_eq!(run(["multlab", "frobnicate"]).code, EXIT_INPUT);
    assert_eq!(run(["multlab", "betti", &ring("ci2"), "--module", "q"]).code, EXIT_INPUT);
    assert_eq!(run(["multlab", "theorem1", &ring("x3")]).code, EXIT_INPUT);
    assert_eq!(run(["multlab", "--help"]).code, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_multlab");
    let st = std::process::Command::new(bin).args(["hilbert", "missing.ring"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_INPUT));
    let st = std::process::Command::new(bin).args(["hilbert", &ring("x2")]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&st.stdout).unwrap();
    assert_eq!(v["command"], "hilbert");
}
