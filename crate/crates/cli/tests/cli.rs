use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_cheeger");

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("CHEEGER_TOL").output().unwrap()
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strip_spec(l: f64) -> String {
    format!(r#"{{"type":"strip","halfwidth":1,"spine":[{{"kind":"line","length":{l}}}]}}"#)
}

#[test]
fn straight_strip_report() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.json", &strip_spec(4.5 * std::f64::consts::PI));
    let out = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    let h = r["h"].as_f64().unwrap();
    assert!((h - 1.1142234290148607).abs() < 1e-9, "{h}");
    assert!((h * r["r"].as_f64().unwrap() - 1.0).abs() < 1e-15);
    assert!(r["bounds"]["krepra_upper"].as_f64().unwrap() > h);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    assert!(r["version"].as_str().unwrap().starts_with("cheeger "));
}

#[test]
fn unit_square_report() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "q.json", r#"{"type":"convex_polygon","vertices":[[0,0],[1,0],[1,1],[0,1]]}"#);
    let out = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let h = report(&out)["h"].as_f64().unwrap();
    assert!((h - (2.0 + std::f64::consts::PI.sqrt())).abs() < 1e-9);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let spine = r#"{"type":"strip","halfwidth":1,"spine":[{"kind":"line","length":8},{"kind":"arc","length":6,"curvature":0.5},{"kind":"line","length":8}]}"#;
    let f = write(dir.path(), "c.json", spine);
    let a = run(&["solve", f.to_str().unwrap()]);
    let b = run(&["solve", f.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"type\": \"strip\",");
    let out = run(&["solve", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let field = write(dir.path(), "f.json", r#"{"type":"strip","halfwidth":1,"spine":[{"kind":"arc","length":20,"curvature":2}]}"#);
    let out = run(&["solve", field.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("spine[0].curvature"));

    let short = write(dir.path(), "short.json", &strip_spec(5.0));
    assert_eq!(run(&["solve", short.to_str().unwrap()]).status.code(), Some(1));
    let out = run(&["solve", short.to_str().unwrap(), "--allow-short-strip"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!report(&out)["warnings"].as_array().unwrap().is_empty());

    assert_eq!(run(&["verify", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "/does/not/exist.json"]).status.code(), Some(1));
}

#[test]
fn tolerance_override() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.json", &strip_spec(20.0));
    let loose = Command::new(BIN).args(["solve", f.to_str().unwrap()]).env("CHEEGER_TOL", "1e-4").output().unwrap();
    let tight = run(&["solve", f.to_str().unwrap()]);
    let (il, it) = (report(&loose)["iterations"].as_u64().unwrap(), report(&tight)["iterations"].as_u64().unwrap());
    assert!(il < it, "{il} vs {it}");
    let bad = Command::new(BIN).args(["solve", f.to_str().unwrap()]).env("CHEEGER_TOL", "-1").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn gallery_specs() {
    let dir = tempfile::tempdir().unwrap();
    let pin = write(dir.path(), "p.json", r#"{"type":"pinocchio","theta":"auto","alpha":0,"nose":0}"#);
    let out = run(&["solve", pin.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!((1.0 / r["h"].as_f64().unwrap() - 0.531f64.sin()).abs() < 5e-3);

    let off = write(dir.path(), "p2.json", r#"{"type":"pinocchio","theta":0.6}"#);
    let out = run(&["solve", off.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!report(&out)["warnings"].as_array().unwrap().is_empty());

    let balls = write(dir.path(), "b.json", r#"{"type":"two_balls"}"#);
    let out = run(&["solve", balls.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["h"].as_f64().unwrap(), 2.0);

    for spec in [r#"{"type":"two_ears","theta":"auto"}"#, r#"{"type":"bowtie","gap":0}"#] {
        let f = write(dir.path(), "g.json", spec);
        assert_eq!(run(&["solve", f.to_str().unwrap()]).status.code(), Some(0), "{spec}");
    }
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.json", &strip_spec(20.0));
    let svg = dir.path().join("s.svg");
    let out = run(&["render", f.to_str().unwrap(), svg.to_str().unwrap(), "--show-inner", "--show-cheeger", "--show-balls"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains(" A ") && text.contains("<circle"));
    assert_eq!(text.matches("<path").count(), 3);

    let bow = write(dir.path(), "b.json", r#"{"type":"bowtie","gap":0}"#);
    let svg2 = dir.path().join("b.svg");
    assert_eq!(run(&["solve", bow.to_str().unwrap(), "--svg", svg2.to_str().unwrap()]).status.code(), Some(0));
    let text = std::fs::read_to_string(&svg2).unwrap();
    assert_eq!(text.matches(" A ").count(), 4);

    let nowhere = dir.path().join("missing").join("x.svg");
    assert_eq!(run(&["render", f.to_str().unwrap(), nowhere.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn verify_gallery_suite() {
    let out = run(&["verify", "gallery"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let r = report(&out);
    assert!(r["checks"].as_array().unwrap().len() > 10);
    assert!(r["h"].is_null());
}
