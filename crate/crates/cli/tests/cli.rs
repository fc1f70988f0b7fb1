use std::path::Path;
use std::process::{Command, Output};

use gate_geometry_cli::sweep::read_csv;

fn gategeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gategeo"))
        .args(args)
        .env_remove("GATEGEO_TOLERANCES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_gate(dir: &Path, name: &str, params: &[&str]) -> String {
    let path = dir.join(format!("{name}.json"));
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["gates", name, "--out", &p];
    let joined = params.join(",");
    if !params.is_empty() {
        args.extend(["--param", &joined]);
    }
    let o = gategeo(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn analyze_builtin_gates() {
    let dir = tempfile::tempdir().unwrap();

    let cnot = write_gate(dir.path(), "cnot", &[]);
    let o = gategeo(&["analyze", &cnot, "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["g1"][0].as_f64().unwrap().abs() < 1e-12);
    assert!((v["g2"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((v["coordinates"][0].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
    assert_eq!(v["perfect_entangler_coords"], true);
    assert_eq!(v["perfect_entangler_hull"], true);
    assert!((v["e_p"].as_f64().unwrap() - 2.0 / 9.0).abs() < 1e-12);

    let id = write_gate(dir.path(), "identity", &[]);
    let o = gategeo(&["analyze", &id]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("G2 = 3.000000000000"), "{text}");
    assert!(text.contains("[0π, 0π, 0π]"), "{text}");
    assert!(text.contains("coordinates no, convex hull no"), "{text}");

    let s = write_gate(dir.path(), "swap-inv-alpha", &["0.5"]);
    let o = gategeo(&["analyze", &s, "--mc", "20000", "--seed", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("[0.75π, 0.25π, 0.25π]"), "{text}");
    assert!(text.contains("e_p (closed form) = 0.166666666667"), "{text}");
    assert!(text.contains("Monte Carlo, n=20000, seed=3"), "{text}");
}

#[test]
fn analyze_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let o = gategeo(&["analyze", bad.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed"));

    let ones = dir.path().join("ones.json");
    let row = "[[1,0],[1,0],[1,0],[1,0]]";
    std::fs::write(&ones, format!("{{\"matrix\": [{row},{row},{row},{row}]}}")).unwrap();
    let o = gategeo(&["analyze", ones.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("not unitary"));

    let missing = dir.path().join("missing.json");
    assert!(!gategeo(&["analyze", missing.to_str().unwrap()]).status.success());
}

#[test]
fn tolerance_file_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    // A slightly non-unitary gate passes only with a relaxed tolerance.
    let g = dir.path().join("g.json");
    let z = "[0,0]";
    std::fs::write(
        &g,
        format!(
            "{{\"matrix\": [[[1.000001,0],{z},{z},{z}],[{z},[1,0],{z},{z}],[{z},{z},[1,0],{z}],[{z},{z},{z},[1,0]]]}}"
        ),
    )
    .unwrap();
    assert!(!gategeo(&["analyze", g.to_str().unwrap()]).status.success());

    let tol = dir.path().join("tol.toml");
    std::fs::write(&tol, "unitary = 1e-4\ng2_imag = 1e-4\ncoordinate_match = 1e-4\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_gategeo"))
        .args(["analyze", g.to_str().unwrap()])
        .env("GATEGEO_TOLERANCES", &tol)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn sweep_writes_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = gategeo(&["sweep", "LQ", "--grid", "11", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let records = read_csv(bytes.as_slice()).unwrap();
    assert_eq!(records.len(), 11);
    assert!((records[0].e_p - 2.0 / 9.0).abs() < 1e-11);
    assert!((records[10].e_p - 1.0 / 6.0).abs() < 1e-11);

    assert!(!gategeo(&["sweep", "XYZ", "--out", a.to_str().unwrap()]).status.success());
    let unwritable = dir.path().join("no/such/dir.csv");
    assert!(!gategeo(&["sweep", "QP", "--out", unwritable.to_str().unwrap()]).status.success());
}

#[test]
fn tables_output() {
    let o = gategeo(&["tables", "weyl", "--grid", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows = text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("edge")).count();
    assert_eq!(rows, 30);
    let o = gategeo(&["tables", "polyhedron", "--grid", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows = text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("edge")).count();
    assert_eq!(rows, 18);
}

#[test]
fn verify_exit_status() {
    for grid in ["21", "2"] {
        let o = gategeo(&["verify", "--grid", grid]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("7/7 constructions verify as CNOT class"));
    }
    let o = gategeo(&["verify", "--grid", "3", "--probe-layers"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("layers PN"));
    assert!(!gategeo(&["verify", "--grid", "1"]).status.success());
}

#[test]
fn pe_volume_is_reproducible() {
    let a = gategeo(&["pe-volume", "--n", "10000", "--seed", "4"]);
    let b = gategeo(&["pe-volume", "--n", "10000", "--seed", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let frac: f64 = text.split_whitespace().nth(2).unwrap().parse().unwrap();
    assert!((frac - 0.5).abs() <= 0.02, "{text}");
    assert!(!gategeo(&["pe-volume", "--n", "100", "--seed", "4"]).status.success());
}

#[test]
fn gates_for_families_and_canonical_points() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_gate(dir.path(), "canonical", &["1.5707963267948966", "0", "0"]);
    let o = gategeo(&["analyze", &p, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["g2"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let p = write_gate(dir.path(), "MN", &["0.7853981633974483"]);
    let o = gategeo(&["analyze", &p]);
    assert!(stdout(&o).contains("[0.75π, 0.25π, 0.25π]"), "{}", stdout(&o));

    let out = dir.path().join("x.json");
    let o = gategeo(&["gates", "swap-alpha", "--param", "2", "--out", out.to_str().unwrap()]);
    assert!(!o.status.success());
}
