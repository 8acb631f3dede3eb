use std::process::{Command, Output};

fn partgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partgroup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decompose_z6() {
    let o = partgroup(&["decompose", "Z6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("E = ")).count(), 4);
}

#[test]
fn build_and_errors() {
    let o = partgroup(&["build", "Z6", "--support", "0,3", "--defect", "0,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{0,2,3,5}"));

    let o = partgroup(&["build", "Z6", "--support", "0,3", "--defect", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("free"));

    assert_eq!(partgroup(&["build", "Y9", "--support", "0", "--defect", "0"]).status.code(), Some(2));
    assert_eq!(partgroup(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let o = partgroup(&["check", "P3.2-assoc", "--max-order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["summary"]["verified"], 3);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 3);

    let o = partgroup(&["check", "P4.3-decomposition", "--max-order", "6", "--catalog", "Z6"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(partgroup(&["check", "nonexistent-id"]).status.code(), Some(2));
}

#[test]
fn check_writes_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "2")] {
        let o = Command::new(env!("CARGO_BIN_EXE_partgroup"))
            .args(["--jobs", jobs, "check", "all", "--max-order", "4", "--out"])
            .arg(path)
            .output()
            .unwrap();
        assert!(o.status.code().is_some());
        assert!(stdout(&o).contains("reports:"));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn homs_quotient_theorems() {
    let o = partgroup(&["homs", "Z6:0,3:0,2", "Z2:0:0"]);
    assert!(stdout(&o).starts_with("1 homomorphisms"));

    let o = partgroup(&["quotient", "Z6:0,3:0,2", "--normal", "0,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class 1: {3,5}"));

    for args in [
        vec!["theorem", "1", "Z6:0,3:0,2", "Z6:0,3:0,2"],
        vec!["theorem", "2", "S3:0,1,2,3,4,5:0"],
        vec!["theorem", "3", "Z6:0,3:0,2"],
    ] {
        let o = partgroup(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("VERIFIED"));
    }
    let o = partgroup(&["theorem", "1", "Z6:0,3:0,2", "Z6:0,3:0,2", "--images", "0,2,3,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn file_groups() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.cayley");
    std::fs::write(&path, "2\n0 1\n1 0\n").unwrap();
    let spec = format!("file:{}", path.display());
    let o = partgroup(&["decompose", &spec]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("E = ")).count(), 2);

    std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 0\n").unwrap();
    let o = partgroup(&["decompose", &spec]);
    assert_eq!(o.status.code(), Some(2));
}
