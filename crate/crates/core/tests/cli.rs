use std::io::Write;
use std::process::{Command, Output};

use grassdim::cli::{OrbitReport, RecoverReport, ScanRow};
use grassdim::terracini::DimensionReport;

fn grassdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grassdim"))
        .args(args)
        .env("GRASSDIM_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn point_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn dim_json_is_reproducible() {
    let args = ["--format", "json", "dim", "7", "3", "2", "1", "--seed", "5"];
    let a = stdout(&grassdim(&args));
    let b = stdout(&grassdim(&args));
    assert_eq!(a, b);
    let rep: DimensionReport = serde_json::from_str(&a).unwrap();
    assert_eq!(rep.proj_dim, 19);
    assert_eq!(rep.predicted.fiber, 19);
    assert!(rep.agreed);
    let again: DimensionReport = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
    assert_eq!(again, rep);
}

#[test]
fn dim_over_rationals() {
    let rep: DimensionReport =
        serde_json::from_str(&stdout(&grassdim(&["--format", "json", "dim", "6", "3", "2", "0", "--rationals"]))).unwrap();
    assert_eq!(rep.proj_dim, 19);
}

#[test]
fn bad_parameters_exit_with_usage_code() {
    assert_eq!(grassdim(&["dim", "3", "4", "2", "0"]).status.code(), Some(2));
    assert_eq!(grassdim(&["dim", "7", "3"]).status.code(), Some(2));
    assert_eq!(grassdim(&["dim", "7", "3", "2", "1", "--trials", "1"]).status.code(), Some(2));
}

#[test]
fn defect_scan_rows() {
    let text = stdout(&grassdim(&[
        "--format", "csv", "defect-scan", "--n", "6..7", "--k", "3", "--s", "2", "--r", "0..1",
    ]));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<ScanRow> = reader.deserialize().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 4);
    let find = |n, r| rows.iter().find(|x| x.n == n && x.r == r).unwrap();
    assert_eq!(find(6, 0).proj, 19);
    assert_eq!(find(6, 0).defect, 0);
    assert_eq!(find(7, 1).proj, 19);
    assert_eq!(find(7, 1).expected, 23);
    assert_eq!(find(7, 1).defect, 4);
    assert!(rows.iter().all(|x| x.fiber_match));
}

#[test]
fn recover_splits_off_common_line() {
    let f = point_file("5 3\n1 0 0 0 0 1 0 0 0 0\n");
    let path = f.path().to_str().unwrap();
    let rep: RecoverReport = serde_json::from_str(&stdout(&grassdim(&["--format", "json", "recover", path, "1"]))).unwrap();
    assert_eq!(rep.overlap, vec![vec!["1", "0", "0", "0", "0"]]);
    assert_eq!(rep.fiber.len(), 2);
    assert!(rep.scalar.is_some());
}

#[test]
fn recover_decomposable_with_full_overlap() {
    let f = point_file("4 2\n0 0 0 1 0 0\n");
    let path = f.path().to_str().unwrap();
    let rep: RecoverReport =
        serde_json::from_str(&stdout(&grassdim(&["--format", "json", "recover", path, "2", "--prime", "101"]))).unwrap();
    assert_eq!(rep.overlap.len(), 2);
    assert_eq!(rep.scalar.as_deref(), Some("1"));
}

#[test]
fn recover_rejects_general_secant_point() {
    let f = point_file("4 2\n1 0 0 0 0 1\n");
    let out = grassdim(&["recover", f.path().to_str().unwrap(), "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn recover_missing_file_is_io_error() {
    let out = grassdim(&["recover", "/nonexistent/point.txt", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn orbit_count_seed_forms() {
    let grass: OrbitReport =
        serde_json::from_str(&stdout(&grassdim(&["--format", "json", "orbit-count", "--seed-form", "012"]))).unwrap();
    assert_eq!(grass.size, 1395);
    let generic: OrbitReport =
        serde_json::from_str(&stdout(&grassdim(&["--format", "json", "orbit-count", "--seed-form", "012+345"]))).unwrap();
    assert_eq!(generic.size, 357120);
    assert_eq!(generic.label, "sigma_2");
}

#[test]
fn orbit_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("orbit.bin");
    stdout(&grassdim(&["orbit-count", "--seed-form", "012", "--export-bin", bin.to_str().unwrap()]));
    let masks = grassdim::finite_codes::read_mask_set(std::fs::File::open(&bin).unwrap()).unwrap();
    assert_eq!(masks.len(), 1395);
    assert!(masks.windows(2).all(|w| w[0].0 < w[1].0));
}

#[test]
fn code_gen_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gen.csv");
    stdout(&grassdim(&["--format", "csv", "--output", out.to_str().unwrap(), "code-gen", "4", "2"]));
    let text = std::fs::read_to_string(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[0].starts_with("p0,p1,"));
    assert!(lines.iter().all(|l| l.split(',').count() == 35));
}

#[test]
fn predict_text_mentions_dimensions() {
    let text = stdout(&grassdim(&["predict", "8", "4", "3", "1"]));
    assert!(text.contains("45"), "{text}");
}
