use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn kepes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kepes")).args(args).output().expect("binary runs")
}

fn run_config(dir: &Path, text: &str, extra: &[&str]) -> Output {
    let cfg = dir.join("case.cfg");
    fs::write(&cfg, text).unwrap();
    let out = dir.join("out");
    let mut args = vec!["run", cfg.to_str().unwrap(), "--output-dir", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    kepes(&args)
}

#[test]
fn preset_list_names_every_preset() {
    let out = kepes(&["preset", "--list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in kepes::presets::NAMES {
        assert!(text.contains(name), "{name} missing");
    }
}

#[test]
fn sod_run_writes_final_snapshot_with_100_rows() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run_config(tmp.path(), "preset = sod\n", &[]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dir = tmp.path().join("out");
    let snap = fs::read_to_string(dir.join("snapshot_0001.csv")).unwrap();
    let mut lines = snap.lines();
    assert_eq!(lines.next(), Some("x,rho,u,p,T,s"));
    assert_eq!(lines.count(), 100);
    let index = fs::read_to_string(dir.join("snapshots.csv")).unwrap();
    assert!(index.lines().last().unwrap().contains("2e-1"));
    let header = fs::read_to_string(dir.join("budget.csv")).unwrap();
    assert!(header.starts_with("time,total_ke,total_entropy,dke_dt,"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let text = "preset = sod\n[output]\nbudget_every = 1\nsnapshot_interval = 0.05\n";
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    assert!(run_config(a.path(), text, &[]).status.success());
    assert!(run_config(b.path(), text, &[]).status.success());
    let mut names: Vec<_> = fs::read_dir(a.path().join("out")).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.len() >= 7);
    for n in names {
        let (x, y) =
            (fs::read(a.path().join("out").join(&n)).unwrap(), fs::read(b.path().join("out").join(&n)).unwrap());
        assert!(x == y, "{n:?} differs between runs");
    }
}

#[test]
fn overrides_apply_after_file() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run_config(tmp.path(), "preset = sod\n", &["--override", "n_cells=40", "--override", "t_final=0.05"]);
    assert!(out.status.success());
    let snap = fs::read_to_string(tmp.path().join("out/snapshot_0001.csv")).unwrap();
    assert_eq!(snap.lines().count(), 41);
}

#[test]
fn solver_abort_reports_cell_and_time() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run_config(tmp.path(), "preset = stationary_shock M=20\nflux = kepec_ac\n", &[]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("t = 0") && err.contains("cell"), "{err}");
}

#[test]
fn bad_config_is_rejected_with_line_number() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run_config(tmp.path(), "preset = sod\nwidgets = 3\n", &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("widgets"), "{err}");
}

#[test]
fn unwritable_output_fails() {
    let tmp = tempfile::tempdir().unwrap();
    let blocker = tmp.path().join("file");
    fs::write(&blocker, "").unwrap();
    let out = kepes(&["run", "--preset", "sod", "--output-dir", blocker.join("sub").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}
