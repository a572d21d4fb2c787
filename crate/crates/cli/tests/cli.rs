use std::io::Write;
use std::process::{Command, Output, Stdio};

use cubeflow::io::{parse, serialize, Document};
use cubeflow::{boundary_cube, skeleton, standard_cube, PrecubicalSet};
use serde_json::Value;
use tempfile::TempDir;

fn cubeflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubeflow")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cubeflow"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn write_doc(dir: &TempDir, name: &str, k: &PrecubicalSet) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, serialize(k)).unwrap();
    path.to_str().unwrap().to_owned()
}

fn json(out: &Output) -> Value {
    assert!(out.stdout.ends_with(b"\n"));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn paths_on_the_square_give_one_class() {
    let dir = TempDir::new().unwrap();
    let f = write_doc(&dir, "sq.json", &standard_cube(2));
    let out = cubeflow(&["paths", &f, "--from", "00", "--to", "11", "--max-len", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["count"], 1);
    assert_eq!(report["classes"][0]["members"].as_array().unwrap().len(), 2);
    assert_eq!(report["classes"][0]["representative"], serde_json::json!(["*0", "1*"]));

    let out = cubeflow(&["paths", &f]);
    assert_eq!(json(&out)["morphism_count"], 5);
}

#[test]
fn homology_of_the_hollow_cube() {
    let dir = TempDir::new().unwrap();
    let f = write_doc(&dir, "b3.json", &boundary_cube(3));
    let report = json(&cubeflow(&["homology", &f]));
    let betti: Vec<u64> = report.as_array().unwrap().iter().map(|g| g["betti"].as_u64().unwrap()).collect();
    assert_eq!(betti, vec![1, 0, 1]);
    assert!(report.as_array().unwrap().iter().all(|g| g["torsion"].as_array().unwrap().is_empty()));
    assert_eq!(json(&cubeflow(&["euler", &f]))["euler_characteristic"], 2);
}

#[test]
fn validate_reports_corruption() {
    let dir = TempDir::new().unwrap();
    let mut doc = Document::from_complex(&standard_cube(2));
    let rec = doc.faces.iter_mut().find(|r| r.dim == 2 && r.index == 1).unwrap();
    rec.value = "1*".into();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = cubeflow(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["valid"], false);
    assert!(!report["issues"]["issues"].as_array().unwrap().is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("cubical relation fails"));

    // Other subcommands refuse the document with the same status.
    assert_eq!(cubeflow(&["homology", path.to_str().unwrap()]).status.code(), Some(1));

    let good = write_doc(&dir, "good.json", &standard_cube(2));
    let out = cubeflow(&["validate", &good]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(cubeflow(&[]).status.code(), Some(2));
    assert_eq!(cubeflow(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cubeflow(&["homology", "/nonexistent/doc.json"]).status.code(), Some(2));
    assert_eq!(cubeflow(&["generate", "sphere", "2"]).status.code(), Some(2));
    assert_eq!(cubeflow(&["generate", "cube"]).status.code(), Some(2));
    let out = with_stdin(&["info", "-"], "{ not json");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    let sq = serialize(&standard_cube(2));
    assert_eq!(with_stdin(&["paths", "-", "--from", "00"], &sq).status.code(), Some(2));
    assert_eq!(with_stdin(&["paths", "-", "--from", "00", "--to", "zz"], &sq).status.code(), Some(2));
}

#[test]
fn generated_documents_parse() {
    for args in
        [&["cube", "3"][..], &["boundary", "2"], &["circle"], &["torus", "2"], &["cylinder"], &["interval", "3"]]
    {
        let mut argv = vec!["generate"];
        argv.extend_from_slice(args);
        let out = cubeflow(&argv);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let k = parse(&out.stdout).unwrap();
        assert_eq!(serialize(&k).as_bytes(), &out.stdout[..]);
    }
}

#[test]
fn boundary_is_codimension_one_skeleton() {
    for n in 1..=5 {
        let b = parse(&cubeflow(&["generate", "boundary", &n.to_string()]).stdout).unwrap();
        let cube = cubeflow(&["generate", "cube", &n.to_string()]).stdout;
        let out = with_stdin(&["skeleton", "-", "--dim", &(n - 1).to_string()], std::str::from_utf8(&cube).unwrap());
        assert_eq!(parse(&out.stdout).unwrap(), b, "n = {n}");
        assert_eq!(b, skeleton(&standard_cube(n), n - 1));
    }
}

#[test]
fn output_flag_and_stdin() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("report.json");
    let out = with_stdin(&["states", "-", "-o", target.to_str().unwrap()], &serialize(&standard_cube(1)));
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(report["states"], serde_json::json!(["0", "1"]));
}

#[test]
fn order_info_and_globular() {
    let dir = TempDir::new().unwrap();
    let circle = cubeflow(&["generate", "circle"]).stdout;
    let out = with_stdin(&["order", "-"], std::str::from_utf8(&circle).unwrap());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["kind"], "loop");

    let f = write_doc(&dir, "c2.json", &standard_cube(2));
    let info = json(&cubeflow(&["info", &f]));
    assert_eq!(info["cell_counts"], serde_json::json!([4, 4, 1]));
    assert_eq!(info["loopless"], true);
    let g = json(&cubeflow(&["globular", &f]));
    assert_eq!(g["cells"].as_array().unwrap().len(), 5);
    let s = json(&cubeflow(&["globular", &f, "--summary"]));
    assert_eq!(s["total_cells"], 5);
}
