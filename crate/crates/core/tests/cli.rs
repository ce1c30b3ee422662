use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_finite-bases"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = bin().args(args).output().unwrap();
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn search_reports_witnesses() {
    let (code, out, _) = run(&["search", "--k", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["n_best"], 5);
    assert_eq!(v["witnesses"], serde_json::json!([[0, 1, 2], [0, 1, 3]]));
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["search", "--k", "8"];
    let (_, one, _) = run(&[&args[..], &["--threads", "1"]].concat());
    let (_, four, _) = run(&[&args[..], &["--threads", "4"]].concat());
    let via_env = bin()
        .args(args)
        .env("FINITE_BASES_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(one, four);
    assert_eq!(one, String::from_utf8(via_env.stdout).unwrap());

    let fast = ["bound", "two-var", "--fast"];
    let (_, a, _) = run(&[&fast[..], &["--threads", "1"]].concat());
    let (_, b, _) = run(&[&fast[..], &["--threads", "3"]].concat());
    assert_eq!(a, b);
}

#[test]
fn fast_certificate() {
    for route in ["corner", "lemma"] {
        let (code, out, _) = run(&["bound", "two-var", "--fast", "--route", route]);
        assert_eq!(code, 0);
        let v = json(&out);
        assert!(v["coefficient_upper"].as_f64().unwrap() <= 0.4798);
        assert_eq!(v["route"], route);
        assert_eq!(v["c_main"]["N"], 500);
    }
}

#[test]
fn moser_and_rohrbach() {
    let (code, out, _) = run(&["bound", "moser"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["coefficient_upper"].as_f64().unwrap(), 0.4898);

    let (code, out, _) = run(&["construct", "rohrbach", "--k", "20"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["size"], 19);
    assert!(v["n2"].as_u64().unwrap() >= 101);
}

#[test]
fn basis_stats_examples() {
    let (code, out, _) = run(&["basis", "stats", "--set", "0"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(
        (v["n2"].as_u64(), v["delta_total"].as_u64()),
        (Some(1), Some(0))
    );

    let (_, out, _) = run(&["basis", "stats", "--set", "0,1,3", "--n", "7"]);
    let v = json(&out);
    assert_eq!(v["modulus"], 7);
    assert_eq!(v["inequalities"].as_array().unwrap().len(), 3);

    let (code, _, err) = run(&["basis", "stats", "--set", "0,x"]);
    assert_eq!(code, 1);
    assert!(err.contains("bad element"));
    let (code, _, err) = run(&["basis", "stats", "--set", ""]);
    assert_eq!(code, 1);
    assert!(err.contains("empty basis"));
}

#[test]
fn phi_dump() {
    let dir = tempfile_dir();
    let path = dir.join("phi.csv");
    let (code, _, _) = run(&[
        "dump",
        "phi",
        "--grid",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 101);
    assert_eq!(text.lines().next(), Some("t1,t2,phi"));
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("finite-bases-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn formulas_pass_on_small_square() {
    let (code, out, _) = run(&["verify", "formulas", "--rmax", "2", "--grid", "256"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("PASS"));
}

#[test]
fn usage_errors_exit_nonzero() {
    let (code, _, err) = run(&["nope"]);
    assert_ne!(code, 0);
    assert!(err.contains("Usage"));
    let (code, _, _) = run(&["bound", "two-var", "--route", "sideways"]);
    assert_ne!(code, 0);
    let (code, _, err) = run(&["search", "--k", "3", "--budget", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("budget"));
}
