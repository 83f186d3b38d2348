use std::io::Write;
use std::process::{Command, Output};

fn fano_gw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano-gw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_all_succeeds() {
    let out = fano_gw(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("0 unexplained mismatches"), "{text}");
    assert!(text.contains("printed typo"), "{text}");
}

#[test]
fn corrupted_golden_fails_and_is_named() {
    let out = fano_gw(&["verify", "--variety", "V14", "--corrupt-golden", "V14 a03"]);
    assert_eq!(out.status.code(), Some(1));
    let line = stdout(&out)
        .lines()
        .find(|l| l.starts_with("V14 a03"))
        .map(str::to_owned)
        .unwrap();
    assert!(line.contains("MISMATCH") && line.contains("5937"), "{line}");
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["matrix", "--variety", "V99"][..],
        &["d3", "--lambda", "1/0"],
        &["matrix", "--order", "0"],
        &["invert", "--periods", "1,2,3"],
        &["frobnicate"],
    ] {
        let out = fano_gw(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_reproducible() {
    let args = [
        "report",
        "--variety",
        "V10",
        "--order",
        "8",
        "--format",
        "json",
    ];
    let a = fano_gw(&args);
    let b = fano_gw(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_matrix_and_periods() {
    let out = fano_gw(&["periods", "--variety", "V10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["matrix"]["matrix"][0][3], "33120");
    assert_eq!(v["periods"][4], "524413/12");
    assert_eq!(v["discriminant"], "-10182375");
}

#[test]
fn d3_defaults_to_the_shift() {
    let out = fano_gw(&["d3", "--variety", "V14", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lambda"], "4");
    assert_eq!(v["indicial"], "m^3");
    assert_eq!(v["annihilated"], true);
    assert_eq!(v["solution"][2], "48");
}

#[test]
fn variety_from_config_file() {
    let dir = std::env::temp_dir().join(format!("fano-gw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("quartic.json");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(
        f,
        r#"{{"ambient": {{"type": "projective", "n": 5}}, "degrees": [4]}}"#
    )
    .unwrap();
    drop(f);

    let out = fano_gw(&[
        "matrix",
        "--variety",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["matrix"]["a03"], "18323712");

    std::fs::write(
        &path,
        r#"{"ambient": {"type": "projective", "n": 5}, "degree": [4]}"#,
    )
    .unwrap();
    assert_eq!(
        fano_gw(&["matrix", "--variety", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).ok();
}
