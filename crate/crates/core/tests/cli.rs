use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn hopflab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopflab"))
        .args(args)
        .current_dir(dir)
        .env_remove("HOPFLAB_FIELD")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_example(dir: &Path, file: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["example"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", file]);
    let o = hopflab(dir, &full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    dir.join(file)
}

fn edit(path: &Path, f: impl FnOnce(&mut Value)) {
    let mut v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    f(&mut v);
    fs::write(path, serde_json::to_string(&v).unwrap()).unwrap();
}

#[test]
fn example_verifies_and_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    for (file, args) in [
        ("t3.json", vec!["taft", "--n", "3"]),
        ("phi.json", vec!["taft-inclusion", "--n", "3"]),
        ("y.json", vec!["yd-simple", "--n", "3", "--i", "1", "--j", "2"]),
        ("m.json", vec!["a-hk", "--n", "2"]),
        ("s3.json", vec!["function-s3"]),
    ] {
        let p = write_example(dir.path(), file, &args);
        let o = hopflab(dir.path(), &["verify", file]);
        assert_eq!(code(&o), 0, "{file}: {}", String::from_utf8_lossy(&o.stdout));
        let text = fs::read_to_string(&p).unwrap();
        let doc = hopflab::cli::load_document(&p).unwrap();
        assert_eq!(hopflab::cli::document_text(&doc), text, "{file}");
    }
}

#[test]
fn sparse_entries_are_quadruples() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_example(dir.path(), "t2.json", &["sweedler"]);
    let v: Value = serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap();
    let first = &v["mult"][0];
    assert_eq!(first.as_array().unwrap().len(), 4);
    assert!(first[3].is_string());
    assert_eq!(v["field"], "Q");
}

#[test]
fn missing_field_names_its_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_example(dir.path(), "t.json", &["taft", "--n", "2"]);
    edit(&p, |v| {
        v.as_object_mut().unwrap().remove("counit");
    });
    let o = hopflab(dir.path(), &["verify", "t.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("counit"), "{}", stderr(&o));
}

#[test]
fn root_symbol_in_rational_document_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("k.json");
    fs::write(
        &p,
        r#"{"kind":"hopf","field":"Q","labels":["1"],"mult":[[0,0,0,"z"]],"unit":[[0,"1"]],"comult":[[0,0,0,"1"]],"counit":[[0,"1"]]}"#,
    )
    .unwrap();
    let o = hopflab(dir.path(), &["verify", "k.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("/mult/0/3"), "{}", stderr(&o));
}

#[test]
fn field_defaults_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_example(dir.path(), "c3.json", &["cyclic", "--n", "3"]);
    edit(&p, |v| {
        v.as_object_mut().unwrap().remove("field");
    });
    let without = hopflab(dir.path(), &["verify", "c3.json"]);
    assert_eq!(code(&without), 0);
    let o = Command::new(env!("CARGO_BIN_EXE_hopflab"))
        .args(["verify", "c3.json"])
        .current_dir(dir.path())
        .env("HOPFLAB_FIELD", "Q(z3)")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let bad = Command::new(env!("CARGO_BIN_EXE_hopflab"))
        .args(["verify", "c3.json"])
        .current_dir(dir.path())
        .env("HOPFLAB_FIELD", "R")
        .output()
        .unwrap();
    assert_eq!(code(&bad), 2);
}

#[test]
fn corrupted_antipode_fails_with_named_check() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_example(dir.path(), "t.json", &["taft", "--n", "2"]);
    edit(&p, |v| {
        v["antipode"] = serde_json::json!([[0, 0, "1"], [1, 1, "1"], [2, 2, "1"], [3, 3, "1"]]);
    });
    let o = hopflab(dir.path(), &["verify", "t.json", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["passed"], false);
    let failed: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"antipode_left"), "{failed:?}");
}

#[test]
fn nested_documents_resolve_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    write_example(dir.path(), "t.json", &["taft", "--n", "3"]);
    let sub = dir.path().join("mods");
    fs::create_dir(&sub).unwrap();
    fs::write(
        sub.join("chi.json"),
        r#"{"kind":"module","hopf":"../t.json","dim":1,"action":[[0,0,0,"1"],[3,0,0,"z"],[6,0,0,"-1 - z"]]}"#,
    )
    .unwrap();
    let o = hopflab(dir.path(), &["verify", "mods/chi.json"]);
    assert_eq!(code(&o), 0, "{}{}", String::from_utf8_lossy(&o.stdout), stderr(&o));
}

#[test]
fn transport_and_center_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write_example(d, "phi.json", &["taft-inclusion", "--n", "3"]);
    write_example(d, "y.json", &["yd-simple", "--n", "3", "--i", "0", "--j", "1"]);
    for cmd in ["induce", "coinduce"] {
        let out = format!("{cmd}.json");
        let o = hopflab(d, &[cmd, "--phi", "phi.json", "--object", "y.json", "-o", &out]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert_eq!(code(&hopflab(d, &["verify", &out])), 0);
    }
    for via in ["ind", "coind"] {
        let o = hopflab(d, &["center", "check", "--phi", "phi.json", "--object", "y.json", "--via", via]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    }
    let o = hopflab(d, &["monoid", "r-unit", "--phi", "phi.json", "-o", "m.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(code(&hopflab(d, &["verify", "m.json"])), 0);
    // Free(Ind k_{0,1}) is not local; the trivial YD module is
    let o = hopflab(d, &["monoid", "local", "--monoid", "m.json", "--object", "induce.json"]);
    assert_eq!(code(&o), 1);
    let o = hopflab(d, &["center", "check", "--phi", "phi.json", "--object", "induce.json"]);
    assert_eq!(code(&o), 2, "object over the wrong algebra");
}

#[test]
fn object_over_wrong_algebra_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write_example(d, "phi.json", &["taft-inclusion", "--n", "3"]);
    write_example(d, "chi.json", &["taft-character", "--n", "3", "--j", "1"]);
    let o = hopflab(d, &["coinduce", "--phi", "phi.json", "--object", "chi.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("field mismatch") || stderr(&o).contains("expected"), "{}", stderr(&o));
}

#[test]
fn monadicity_of_retraction_fails() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write_example(d, "pi.json", &["taft-projection", "--n", "2"]);
    let o = hopflab(d, &["monoid", "monadicity", "--phi", "pi.json"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn suite_json_is_deterministic_and_untimed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write_example(d, "phi.json", &["taft-inclusion", "--n", "2"]);
    let a = hopflab(d, &["suite", "--phi", "phi.json", "--format", "json"]);
    let b = hopflab(d, &["suite", "--phi", "phi.json", "--format", "json"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(!text.contains("ms"));
    let t = hopflab(d, &["suite", "--phi", "phi.json"]);
    assert!(String::from_utf8_lossy(&t.stdout).contains(" ms)"));
}

#[test]
fn suite_seed_changes_only_random_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write_example(d, "phi.json", &["taft-inclusion", "--n", "2"]);
    let ids = |seed: &str| {
        let o = hopflab(d, &["suite", "--phi", "phi.json", "--seed", seed, "--format", "json"]);
        assert_eq!(code(&o), 0);
        let r: Value = serde_json::from_slice(&o.stdout).unwrap();
        r["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["id"].as_str().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(ids("1"), ids("99"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&hopflab(dir.path(), &["bogus"])), 2);
    assert_eq!(code(&hopflab(dir.path(), &["verify", "missing.json"])), 2);
    assert_eq!(code(&hopflab(dir.path(), &["example", "taft", "--n", "0"])), 2);
    fs::write(dir.path().join("x.json"), r#"{"kind":"vector"}"#).unwrap();
    let o = hopflab(dir.path(), &["verify", "x.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("/kind"));
}
