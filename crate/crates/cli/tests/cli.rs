//! End-to-end tests of the binary: determinism, exit-code contract, CSV
//! round-trip precision and the full verification battery.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mixedtype"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mixedtype-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn analyze_is_byte_deterministic() {
    let dir = scratch("det-analyze");
    let a = dir.join("a.csv");
    let b = dir.join("b.csv");
    for out in [&a, &b] {
        let o = run(&[
            "analyze",
            "--surface",
            "fK",
            "--window",
            "-3:3:-3:3",
            "--res",
            "40x40",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn export_is_byte_deterministic() {
    let dir = scratch("det-export");
    let a = dir.join("a.obj");
    let b = dir.join("b.obj");
    for out in [&a, &b] {
        let o = run(&[
            "export",
            "--surface",
            "fP",
            "--window",
            "-2:2:0.05:2",
            "--res",
            "50x50",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 2500);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2 * 49 * 49);
}

#[test]
fn export_covers_the_gallery_shapes() {
    let dir = scratch("export-shapes");
    // hyperbolic CMC surface inside its analytic strip
    let fh = dir.join("fh.obj");
    let o = run(&[
        "export",
        "--surface",
        "fH",
        "--window",
        "-2:2:-0.95:0.95",
        "--res",
        "30x30",
        "--out",
        fh.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // de Sitter surface with the time coordinate dropped
    let fz = dir.join("fz.obj");
    let o = run(&[
        "export",
        "--surface",
        "fZ",
        "--res",
        "30x30",
        "--project",
        "0",
        "--out",
        fz.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&fz).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 900);
}

#[test]
fn csv_round_trip_reproduces_values_at_output_precision() {
    let dir = scratch("roundtrip");
    let path = dir.join("fk.csv");
    let o = run(&[
        "analyze",
        "--surface",
        "fK",
        "--window",
        "-3:3:-3:3",
        "--res",
        "50x50",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2500);
    // re-evaluate B at the printed (u, v); 9 significant digits in the
    // inputs bound the reproduction error
    for idx in (0..rows.len()).step_by(rows.len() / 10) {
        let fields: Vec<&str> = rows[idx].split(',').collect();
        let u: f64 = fields[0].parse().unwrap();
        let v: f64 = fields[1].parse().unwrap();
        let beta: f64 = fields[2].parse().unwrap();
        let fy = u / v.cosh().powi(2);
        let fx = v.tanh();
        let b = 1.0 - fx * fx - fy * fy;
        assert!(
            (b - beta).abs() <= 1e-6 * (1.0 + beta.abs()),
            "row {idx}: re-evaluated {b} vs printed {beta}"
        );
    }
    // the causal column follows the sign of B: space-like inside
    // x² < cosh²y for this graph
    for row in &rows {
        let fields: Vec<&str> = row.split(',').collect();
        let u: f64 = fields[0].parse().unwrap();
        let v: f64 = fields[1].parse().unwrap();
        let inside = u * u < v.cosh().powi(2);
        let expect = if inside { "spacelike" } else { "timelike" };
        if (u.abs() - v.cosh()).abs() > 1e-3 {
            assert_eq!(fields[5], expect, "causal class at ({u}, {v})");
        }
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: passing suite
    let o = run(&["verify", "spaceform"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));

    // 1: verification failure (tolerance forced to an impossible value)
    let o = run(&["verify", "cmc", "--tol", "cmc.fP=1e-30"]);
    assert_eq!(o.status.code(), Some(1));

    // 2: usage errors
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2)); // missing surface
    assert_eq!(
        run(&["analyze", "--surface", "fK", "--window", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["trace", "--surface", "fZ", "--out", "x"]).status.code(),
        Some(2)
    ); // parametric surface cannot be traced
    assert_eq!(run(&["export", "--surface", "fZ", "--out", "x.obj"]).status.code(), Some(2));
    assert_eq!(run(&["--definitely-not-a-flag"]).status.code(), Some(2));
}

#[test]
fn trace_reports_and_exits_zero_without_zero_set() {
    let dir = scratch("trace-empty");
    let graph = dir.join("flat.txt");
    std::fs::write(&graph, "# a flat graph\n0\n").unwrap();
    let out = dir.join("flat");
    let o = run(&[
        "trace",
        "--surface",
        &format!("graph:{}", graph.display()),
        "--window",
        "-1:1:-1:1",
        "--res",
        "30",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["curves"].as_array().unwrap().len(), 0);
}

#[test]
fn trace_flags_degenerate_vertices_with_exit_one() {
    // t = x + x⁴/4 has B = −2x³ − x⁶: the zero line x = 0 changes sign
    // with ∇B = 0 on it. The window puts x = 0 on a grid node, so the
    // traced vertices sit on the degenerate line exactly.
    let dir = scratch("trace-degenerate");
    let graph = dir.join("cubic.txt");
    std::fs::write(&graph, "x + x*x*x*x/4\n").unwrap();
    let out = dir.join("cubic");
    let o = run(&[
        "trace",
        "--surface",
        &format!("graph:{}", graph.display()),
        "--window",
        "-0.5:0.5:-0.5:0.5",
        "--res",
        "21",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["degenerate_vertices"], serde_json::Value::Bool(true));

    // a healthy trace of the helicoid graph exits 0
    let out = dir.join("fk");
    let o = run(&[
        "trace",
        "--surface",
        "fK",
        "--window",
        "-3:3:-3:3",
        "--res",
        "40",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["degenerate_vertices"], serde_json::Value::Bool(false));
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = scratch("config");
    let cfg = dir.join("run.cfg");
    let out_cfg = dir.join("from-config.csv");
    std::fs::write(
        &cfg,
        format!(
            "# analysis defaults\nsurface=fK\nwindow=-2:2:-2:2\nres=10x10\nout={}\n",
            out_cfg.display()
        ),
    )
    .unwrap();
    let o = run(&["analyze", "--config", cfg.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out_cfg.exists());
    let config_rows = std::fs::read_to_string(&out_cfg).unwrap().lines().count();
    assert_eq!(config_rows, 101);

    // flag overrides the file's resolution
    let out_flag = dir.join("from-flag.csv");
    let o = run(&[
        "analyze",
        "--config",
        cfg.to_str().unwrap(),
        "--res",
        "5x5",
        "--out",
        out_flag.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&out_flag).unwrap().lines().count(), 26);
}

#[test]
fn graph_expression_surfaces_analyze_like_gallery_ones() {
    let dir = scratch("graph-expr");
    let graph = dir.join("helicoid.txt");
    std::fs::write(&graph, "x * tanh(y)\n").unwrap();
    let via_expr = dir.join("expr.csv");
    let via_gallery = dir.join("gallery.csv");
    let o = run(&[
        "analyze",
        "--surface",
        &format!("graph:{}", graph.display()),
        "--window",
        "-3:3:-3:3",
        "--res",
        "15x15",
        "--out",
        via_expr.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&[
        "analyze",
        "--surface",
        "fK",
        "--window",
        "-3:3:-3:3",
        "--res",
        "15x15",
        "--out",
        via_gallery.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(std::fs::read(&via_expr).unwrap(), std::fs::read(&via_gallery).unwrap());
}

#[test]
fn full_verify_battery_passes_within_a_minute() {
    let start = std::time::Instant::now();
    let o = run(&["verify", "all"]);
    let elapsed = start.elapsed().as_secs_f64();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(elapsed < 60.0, "battery took {elapsed:.1}s");
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    assert_eq!(report["suites"].as_array().unwrap().len(), 8);
    println!("criterion 15 PASS — CLI determinism, exit codes, battery in {elapsed:.1}s");
}
