use std::path::Path;
use std::process::{Command, Output};

fn polyexact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyexact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_analyze_compare() {
    let dir = tempfile::tempdir().unwrap();
    let rco = dir.path().join("rco.json");
    let pseudo = dir.path().join("pseudo.json");
    assert_eq!(polyexact(&["generate", "--solid", "rco", "--out", path_str(&rco)]).status.code(), Some(0));
    assert_eq!(
        polyexact(&["generate", "--solid", "pseudo-rco", "--out", path_str(&pseudo)]).status.code(),
        Some(0)
    );
    // nothing but the target files is left behind
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);

    let a = polyexact(&["analyze", path_str(&pseudo)]);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    assert!(text.contains("V=24 E=48 F=26 euler=2"), "{text}");
    assert!(text.contains("census: {3:8, 4:18}"));
    assert!(text.contains("symmetry order: 16"));
    assert!(text.contains("vertex orbits: [8, 16]"));
    assert!(text.contains("classification: PseudoRCO"));

    let j = polyexact(&["analyze", path_str(&rco), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["symmetry"]["order"], 48);
    assert_eq!(v["classification"], "RCO");
    assert_eq!(v["validation"]["manifold"], true);

    let c = polyexact(&["compare", path_str(&rco), path_str(&pseudo)]);
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).contains("isomorphic: false"));
    let c = polyexact(&["compare", path_str(&rco), path_str(&rco), "--witness", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&c.stdout).unwrap();
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["congruent_up_to_scale"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 24);
}

#[test]
fn obj_generation_is_deterministic() {
    let args = ["generate", "--solid", "rco", "--variant", "star-skeleton", "--precision", "10"];
    let a = polyexact(&args);
    let b = polyexact(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().filter(|l| l.starts_with("g ")).count(), 96);
}

#[test]
fn exit_codes() {
    assert_eq!(polyexact(&[]).status.code(), Some(1));
    assert_eq!(polyexact(&["--version"]).status.code(), Some(0));
    assert_eq!(polyexact(&["generate", "--solid", "prism"]).status.code(), Some(1));
    assert_eq!(
        polyexact(&["generate", "--solid", "cube", "--variant", "star", "--height", "4=0"]).status.code(),
        Some(2)
    );
    assert_eq!(polyexact(&["analyze", "/definitely/not/here.json"]).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, b"{\"schema_version\": \"1.0\", \"radicand\": 3, \"vertices\": [], \"faces\": []}").unwrap();
    let o = polyexact(&["analyze", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported radicand"));

    let missing_dir = dir.path().join("no/such/dir/out.json");
    assert_eq!(
        polyexact(&["generate", "--solid", "cube", "--out", path_str(&missing_dir)]).status.code(),
        Some(3)
    );
}
