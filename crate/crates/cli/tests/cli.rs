use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn kappa3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kappa3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn complete(n: usize) -> String {
    let mut lines = vec![format!("{n} {}", n * (n - 1) / 2)];
    for u in 0..n {
        for v in u + 1..n {
            lines.push(format!("{u} {v}"));
        }
    }
    lines.join("\n") + "\n"
}

fn cycle(n: usize) -> String {
    let mut lines = vec![format!("{n} {n}")];
    for u in 0..n {
        lines.push(format!("{u} {}", (u + 1) % n));
    }
    lines.join("\n") + "\n"
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn kappa_values() {
    let dir = TempDir::new().unwrap();
    let c6 = write(dir.path(), "c6.txt", &cycle(6));
    let k5 = write(dir.path(), "k5.txt", &complete(5));
    assert_eq!(stdout(&kappa3(&["kappa", p(&c6)])).trim(), "2");
    assert_eq!(stdout(&kappa3(&["kappa", p(&k5)])).trim(), "4");
}

#[test]
fn disconnected_input_is_rejected() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.txt", "4 2\n0 1\n2 3\n");
    let o = kappa3(&["kappa", p(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("graph disconnected"));
}

#[test]
fn parse_error_exits_two() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.txt", "3 1\n0 banana\n");
    let o = kappa3(&["kappa", p(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn kappa3_modes() {
    let dir = TempDir::new().unwrap();
    let k5 = write(dir.path(), "k5.txt", &complete(5));
    let o = kappa3(&["kappa3", p(&k5), "--exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("3"));
    assert!(stdout(&o).contains("argmin: 0,1,2"));

    let o = kappa3(&["kappa3", p(&k5), "--planar"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not planar"));

    let o = kappa3(&["kappa3", p(&k5), "--exact", "--bounds"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn icosahedron_bounds_and_planar() {
    let dir = TempDir::new().unwrap();
    let ico = dir.path().join("ico.txt");
    assert!(kappa3(&["generate", "--family", "icosahedron", "--out", p(&ico)]).status.success());
    let o = kappa3(&["kappa3", p(&ico), "--bounds"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("[4,4]"));
    assert!(text.lines().any(|l| l.starts_with("lower:")));
    assert!(text.lines().any(|l| l.starts_with("upper:")));
    let o = kappa3(&["kappa3", p(&ico), "--planar"]);
    assert_eq!(stdout(&o).lines().next(), Some("4"));
}

#[test]
fn exact_cap_exits_three() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "k14.txt", &complete(14));
    let o = kappa3(&["kappa3", p(&g)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--bounds"));
}

#[test]
fn trees_then_verify() {
    let dir = TempDir::new().unwrap();
    let k5 = write(dir.path(), "k5.txt", &complete(5));
    let cert = dir.path().join("cert.json");
    let o = kappa3(&["trees", p(&k5), "--terminals", "0,1,2", "--out", p(&cert)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let json: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(json["v"], 1);
    assert_eq!(json["trees"].as_array().unwrap().len(), 3);
    assert_eq!(json["terminals"], serde_json::json!([0, 1, 2]));
    assert!(kappa3(&["verify", p(&k5), "--cert", p(&cert)]).status.success());

    let c6 = write(dir.path(), "c6.txt", &cycle(6));
    let o = kappa3(&["trees", p(&c6), "--terminals", "0,2,4"]);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["trees"].as_array().unwrap().len(), 1);
}

#[test]
fn bad_terminals_exit_two() {
    let dir = TempDir::new().unwrap();
    let k5 = write(dir.path(), "k5.txt", &complete(5));
    assert_eq!(kappa3(&["trees", p(&k5), "--terminals", "0,0,2"]).status.code(), Some(2));
    assert_eq!(kappa3(&["trees", p(&k5), "--terminals", "0,1"]).status.code(), Some(2));
    assert_eq!(kappa3(&["trees", p(&k5), "--terminals", "0,1,9"]).status.code(), Some(2));
}

#[test]
fn tampered_certificates_fail() {
    let dir = TempDir::new().unwrap();
    let k5 = write(dir.path(), "k5.txt", &complete(5));
    let cert = dir.path().join("cert.json");
    kappa3(&["trees", p(&k5), "--terminals", "0,1,2", "--out", p(&cert)]);
    let mut json: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();

    let mut cut = json.clone();
    cut["trees"][0].as_array_mut().unwrap().pop();
    let cut_path = write(dir.path(), "cut.json", &cut.to_string());
    let o = kappa3(&["verify", p(&k5), "--cert", p(&cut_path)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("violation"));

    let k6 = write(dir.path(), "k6.txt", &complete(6));
    let o = kappa3(&["verify", p(&k6), "--cert", p(&cert)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("hash"));

    json["v"] = Value::from(7);
    let future = write(dir.path(), "future.json", &json.to_string());
    assert_eq!(kappa3(&["verify", p(&k5), "--cert", p(&future)]).status.code(), Some(2));
}

#[test]
fn generate_families() {
    let o = kappa3(&["generate", "--family", "lower-bound-even", "--params", "k=1,i=0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert!(header.starts_with("9 "));
    assert!(text.contains("# terminals: 0,1,2"));

    assert_eq!(kappa3(&["generate", "--family", "dodecahedron"]).status.code(), Some(2));
    assert_eq!(kappa3(&["generate", "--family", "cycle", "--params", "n"]).status.code(), Some(2));

    let a = kappa3(&["generate", "--family", "random", "--params", "n=9,p=0.4"]);
    let b = kappa3(&["generate", "--family", "random", "--params", "n=9,p=0.4", "--seed", "1"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stderr(&a).contains("seed: 1"));
}

#[test]
fn generate_round_trips_through_kappa() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("oct.txt");
    kappa3(&["generate", "--family", "complete-multipartite", "--params", "parts=2:2:2", "--out", p(&g)]);
    assert_eq!(stdout(&kappa3(&["kappa", p(&g)])).trim(), "4");
    assert_eq!(stdout(&kappa3(&["kappa3", p(&g), "--planar"])).lines().next(), Some("3"));
}

#[test]
fn dot_colours_each_tree() {
    let dir = TempDir::new().unwrap();
    let k5 = write(dir.path(), "k5.txt", &complete(5));
    let cert = dir.path().join("cert.json");
    kappa3(&["trees", p(&k5), "--terminals", "0,1,2", "--out", p(&cert)]);
    let o = kappa3(&["dot", p(&k5), "--cert", p(&cert)]);
    let dot = stdout(&o);
    for label in ["T1", "T2", "T3"] {
        assert!(dot.contains(label), "{label} missing");
    }
    assert_eq!(dot.matches("shape=box").count(), 3);
}
