use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coxgrowth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn coxgrowth")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in\n{out}"))
}

/// Data rows of a CSV block, skipping comments and the header.
fn rows(out: &str) -> Vec<Vec<String>> {
    out.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn rank2(dir: &TempDir, m: &str) -> PathBuf {
    write(dir, &format!("i{m}.txt"), &format!("rank 2\nm 1 2 = {m}\n"))
}

#[test]
fn classify_reports_types() {
    let dir = TempDir::new().unwrap();
    let a2 = rank2(&dir, "3");
    assert_eq!(field(&ok(&["classify", s(&a2)]), "type"), "Elliptic");
    assert_eq!(
        field(&ok(&["classify", "--rank2", "inf"]), "type"),
        "Affine"
    );
    assert_eq!(
        field(&ok(&["classify", "--polygon", "inf,inf,inf"]), "type"),
        "NonAffine"
    );
}

#[test]
fn json_matrix_files_are_accepted() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "m.json",
        r#"{"rank": 3, "entries": [[1, 2, 3], [2, 3, 3]]}"#,
    );
    assert_eq!(field(&ok(&["classify", s(&p)]), "type"), "Elliptic");
}

#[test]
fn growth_of_known_systems() {
    let out = ok(&["growth", "--polygon", "2,3,7", "--rate"]);
    assert_eq!(field(&out, "rate"), "1.176280818");
    assert_eq!(field(&out, "type"), "NonAffine");
    assert_eq!(field(&out, "coefficients"), "1,3,5,7,9,12,16,20,24");

    let dir = TempDir::new().unwrap();
    let a3 = write(&dir, "a3.txt", "rank 3\nm 1 2 = 3\nm 2 3 = 3\n");
    let out = ok(&["growth", s(&a3)]);
    assert_eq!(field(&out, "bracket"), "[2;3;4]");
    assert_eq!(field(&out, "order"), "24");

    let out = ok(&["growth", "--rank2", "inf", "--rate"]);
    assert!(
        out.lines().any(|l| l == "f(z) = (1 + z) / (1 - z)"),
        "{out}"
    );
    assert_eq!(field(&out, "rate"), "1");
}

#[test]
fn polygon_sweep_increases() {
    let out = ok(&[
        "sweep",
        "polygon",
        "--template",
        "2,3,l",
        "--params",
        "7,8,10,20,100",
    ]);
    let rows = rows(&out);
    assert_eq!(rows.last().unwrap()[0], "inf");
    let rates: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    assert_eq!(rates.len(), 6);
    // the limit agrees with l=100 to the printed precision
    assert!(rates[..5].windows(2).all(|w| w[0] < w[1]), "{rates:?}");
    assert!(rates[4] <= rates[5]);
}

#[test]
fn normal_sweep_deviation_decreases() {
    let out = ok(&[
        "sweep",
        "normal",
        "--polygon",
        "2,3,inf",
        "--l-list",
        "6,12,24,48",
    ]);
    let rows = rows(&out);
    let (limit, finite) = rows.split_last().unwrap();
    assert_eq!((limit[0].as_str(), limit[4].as_str()), ("inf", ""));
    let sups: Vec<f64> = finite.iter().map(|r| r[4].parse().unwrap()).collect();
    assert_eq!(sups.len(), 4);
    assert!(sups.windows(2).all(|w| w[0] > w[1]), "{sups:?}");
}

#[test]
fn rate_sweep_uses_config_l_list() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "c.toml", "l_list = [7, 9]\n");
    let out = ok(&["--config", s(&cfg), "sweep", "rate", "--polygon", "2,3,inf"]);
    let ls: Vec<String> = rows(&out).into_iter().map(|r| r[0].clone()).collect();
    assert_eq!(ls, ["7", "9", "inf"]);
}

#[test]
fn non_contractible_edge_is_an_input_error() {
    let args = [
        "sweep",
        "edge",
        "--polygon",
        "2,3,7",
        "--pair",
        "1,2",
        "--edge-type",
        "3,2,2,2,2",
    ];
    assert_eq!(code(&args), 2);
}

#[test]
fn oracle_ball_of_a2() {
    let dir = TempDir::new().unwrap();
    let a2 = rank2(&dir, "3");
    let out = ok(&["oracle", s(&a2), "--ball", "3"]);
    assert_eq!(field(&out, "vertices"), "6");
    assert_eq!(field(&out, "layers"), "1,2,2,1");

    let dot = ok(&["oracle", s(&a2), "--ball", "3", "--dot"]);
    assert!(dot.starts_with("// coxgrowth"));
    // each of the 6 undirected edges appears in both directions
    assert_eq!(dot.matches(" -> ").count(), 12);
}

#[test]
fn oracle_distance_between_dihedral_groups() {
    let dir = TempDir::new().unwrap();
    let (i5, i6) = (rank2(&dir, "5"), rank2(&dir, "6"));
    let out = ok(&["oracle", s(&i5), "--distance", "8", "--compare", s(&i6)]);
    assert_eq!(field(&out, "first_disagreement"), "5");
    assert_eq!(field(&out, "agree_through"), "4");
}

#[test]
fn oracle_coefficients_match_growth_csv() {
    let dir = TempDir::new().unwrap();
    for body in [
        "rank 3\nm 1 2 = 3\nm 2 3 = 4\n",
        "rank 3\nm 1 2 = 2\nm 1 3 = 3\nm 2 3 = 7\n",
        "rank 3\nm 1 2 = inf\nm 1 3 = inf\nm 2 3 = inf\n",
    ] {
        let p = write(&dir, "m.txt", body);
        let oracle = ok(&["oracle", s(&p), "--coeffs", "8", "--format", "csv"]);
        let growth = ok(&["growth", s(&p), "--terms", "8", "--format", "csv"]);
        assert_eq!(oracle, growth, "{body}");
    }
}

#[test]
fn salem_verdicts() {
    let out = ok(&["salem", "--polygon", "2,3,7"]);
    assert_eq!(field(&out, "classification"), "Salem");
    let out = ok(&["salem", "--polygon", "2,3,inf"]);
    assert_eq!(field(&out, "classification"), "Pisot");

    let out = ok(&["salem", "--template", "2,3,l", "--params", "7,8,9"]);
    assert!(
        out.contains("# salem-to-pisot transition: index 3"),
        "{out}"
    );
    let verdicts: Vec<String> = rows(&out).into_iter().map(|r| r[3].clone()).collect();
    assert_eq!(verdicts, ["Salem", "Salem", "Salem", "Pisot"]);
}

#[test]
fn catalog_dump_is_json() {
    let out = ok(&["catalog", "dump", "--max-rank", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["generator"].as_str().unwrap().starts_with("coxgrowth"));
    let text = v["data"].to_string();
    assert!(text.contains("H4"), "{text}");
}

#[test]
fn json_growth_output_parses() {
    let out = ok(&["growth", "--polygon", "2,3,7", "--rate", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["data"].is_object());
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "c.toml", "radius = 3\n");
    assert_eq!(code(&["--config", s(&cfg), "classify", "--rank2", "3"]), 2);
}

#[test]
fn caps_and_input_errors_have_distinct_codes() {
    let dir = TempDir::new().unwrap();
    let a2 = rank2(&dir, "3");
    assert_eq!(code(&["oracle", s(&a2), "--ball", "30"]), 3);
    assert_eq!(code(&["growth", "--rank2", "3", "--terms", "20000"]), 3);
    assert_eq!(code(&["classify", "--rank2", "1"]), 2);
    assert_eq!(code(&["classify", s(&dir.path().join("missing.txt"))]), 2);
    assert_eq!(code(&["classify", s(&a2), "--rank2", "3"]), 2);
    let bad = write(&dir, "bad.txt", "rank 2\nm 1 1 = 3\n");
    assert_eq!(code(&["classify", s(&bad)]), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["salem", "--template", "2,3,l", "--params", "7,10,20"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["sweep", "normal", "--polygon", "2,3,inf"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out.txt");
    let printed = ok(&["growth", "--polygon", "2,3,7"]);
    let silent = ok(&["-o", s(&out), "growth", "--polygon", "2,3,7"]);
    assert!(silent.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), printed);
}
