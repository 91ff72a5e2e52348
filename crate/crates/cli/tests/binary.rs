use std::process::{Command, Output};

fn inverf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inverf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["coeffs", "--max-n", "40"][..],
        &["poly", "--n", "12", "--format", "json"],
        &["table"],
        &["figure", "p10"],
        &["figure", "taylor_ratio_zoom", "--format", "json"],
        &["eval", "--x", "0.9999"],
    ] {
        let a = inverf(args);
        let b = inverf(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(inverf(&[]).status.code(), Some(2));
    assert_eq!(inverf(&["figure", "p9"]).status.code(), Some(2));
    assert_eq!(inverf(&["eval", "--x", "abc"]).status.code(), Some(2));
    assert_eq!(inverf(&["eval", "--x", "0.5", "--tail", "2"]).status.code(), Some(2));
    let domain = inverf(&["eval", "--x", "-1"]);
    assert_eq!(domain.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("domain"));
    let io = inverf(&["coeffs", "--max-n", "3", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(io.status.code(), Some(4));
    assert_eq!(inverf(&["--version"]).status.code(), Some(0));
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("inverf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("poly.csv");
    let o = inverf(&["poly", "--n", "4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "power,coefficient\n0,7\n2,46\n4,24\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_command() {
    let out = stdout(&inverf(&["table"]));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("0.7,6,"));
    assert!(lines[6].starts_with("0.9999,3685,"));
    let printed = stdout(&inverf(&["table", "--tail-form", "printed-n", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&printed).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn figure_commands() {
    let p10 = stdout(&inverf(&["figure", "p10"]));
    assert_eq!(p10.lines().count(), 32);
    assert_eq!(p10.lines().next().unwrap(), "x,exact,asymptotic");
    let dn = stdout(&inverf(&["figure", "dn_ratio", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&dn).unwrap();
    let row9 = &v[3];
    assert_eq!(row9["n"], 9);
    assert!((row9["exact"].as_f64().unwrap() - 0.064_959_6).abs() < 1e-7);
    assert_eq!(inverf(&["figure", "dn-ratio"]).stdout, inverf(&["figure", "dn_ratio"]).stdout);
    let tr = stdout(&inverf(&["figure", "taylor_ratio"]));
    assert!(tr.lines().any(|l| l == "0.0000000000000000e0,1.0000000000000000e0,1.0000000000000000e0,1.0000000000000000e0"));
}

#[test]
fn eval_modes() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&inverf(&["eval", "--x", "0.8", "--format", "json"]))).unwrap();
    assert!((v["value"].as_f64().unwrap() - 0.906_194).abs() < 1e-5);
    let v: serde_json::Value = serde_json::from_str(&stdout(&inverf(&[
        "eval", "--x", "0.9999", "--no-polish", "--method", "lambert", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["method"], "lambert");
    assert!((v["value"].as_f64().unwrap() - 2.7609).abs() < 1e-3);
    let v: serde_json::Value = serde_json::from_str(&stdout(&inverf(&[
        "eval", "--x", "0.7", "--no-polish", "--method", "taylor", "--tail", "6", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["method"], "taylor_tail");
    assert_eq!(v["terms_used"], 7);
    assert!((v["value"].as_f64().unwrap() - 0.732_751).abs() < 5e-5);
}
