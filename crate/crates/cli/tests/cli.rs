use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn ideal(name: &str) -> String {
    root().join("ideals").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ginlab"))
        .args(args)
        .env_remove("GINLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

fn assert_schema(schema: &str, value: &Value) {
    let path = root().join("schemas").join(format!("{schema}.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(value).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{}: {errors:#?}", path.display());
}

fn betti_cells(v: &Value) -> Vec<(u64, u64, u64)> {
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["beta"].as_u64().unwrap()))
        .collect()
}

#[test]
fn gin_of_three_variable_example() {
    let out = stdout(&["gin", &ideal("gin_example.ideal")]);
    let gens: Vec<&str> = out.lines().skip(1).take_while(|l| !l.starts_with('#')).collect();
    assert_eq!(gens, ["x1^2", "x1*x2", "x2^3", "x2^2*x3^2", "x1*x3^4", "x2*x3^5", "x3^6"]);
    assert!(out.starts_with("ring poly 3 QQ degrevlex\n"));
    assert!(out.contains("# certificate: seed 0, order degrevlex"));
    assert!(out.contains("2 trials agree, strongly stable: true"));
}

#[test]
fn gin_of_strongly_stable_ideal_is_itself() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stable.ideal");
    std::fs::write(&path, "ring poly 3 QQ\nx1^2\nx1*x2\nx2^2\nx1*x3\n").unwrap();
    let v = json(&["gin", path.to_str().unwrap()]);
    assert_eq!(v["generators"], serde_json::json!(["x1^2", "x1*x2", "x2^2", "x1*x3"]));
}

#[test]
fn cancellation_example_tables_and_numbers() {
    let v = json(&["cancel", &ideal("cancellation_example.ideal")]);
    assert_schema("cancel", &v);
    assert_eq!(
        betti_cells(&v["ideal_betti"]),
        [(0, 3, 6), (1, 4, 6), (1, 5, 1), (2, 5, 1), (2, 6, 1)]
    );
    assert_eq!(
        betti_cells(&v["gin_betti"]),
        [(0, 3, 6), (0, 4, 1), (1, 4, 7), (1, 5, 2), (2, 5, 2), (2, 6, 1)]
    );
    let c: Vec<(u64, u64, u64)> = v["cancellation"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["c"].as_u64().unwrap()))
        .collect();
    assert_eq!(c, [(1, 4, 1), (2, 5, 1)]);
    let text = stdout(&["cancel", &ideal("cancellation_example.ideal")]);
    assert!(text.ends_with("c_{1,4} = 1\nc_{2,5} = 1\n"), "{text}");
}

#[test]
fn ideal_convention_betti_of_cancellation_example() {
    let v = json(&["betti", &ideal("cancellation_example.ideal"), "--convention", "ideal"]);
    assert_schema("betti", &v);
    assert_eq!(v["convention"], "ideal");
    assert_eq!(betti_cells(&v), [(0, 3, 6), (1, 4, 6), (1, 5, 1), (2, 5, 1), (2, 6, 1)]);
}

#[test]
fn empty_ideal_has_only_the_unit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.ideal");
    std::fs::write(&path, "ring poly 3 QQ\n").unwrap();
    let v = json(&["betti", path.to_str().unwrap()]);
    assert_eq!(betti_cells(&v), [(0, 0, 1)]);
}

#[test]
fn dlinear_at_three_holds_on_three_variable_example() {
    let out = stdout(&["check", &ideal("gin_example.ideal"), "--statement", "dlinear", "--k", "3"]);
    assert!(out.starts_with("dlinear k=3: holds"), "{out}");
    let v = json(&["check", &ideal("gin_example.ideal"), "--statement", "dlinear", "--k", "3"]);
    assert_schema("report", &v);
    assert_eq!(v["reports"][0]["verdict"], "holds");
    assert!(v["reports"][0]["conditions"].as_array().unwrap().iter().all(|c| c["value"] == true));
}

#[test]
fn rigidity_at_second_column_of_first_column_example() {
    let v = json(&["check", &ideal("first_column_example.ideal"), "--statement", "rigidgin", "--i", "2", "--k", "4"]);
    assert_schema("report", &v);
    let r = &v["reports"][0];
    assert_eq!(r["verdict"], "holds");
    assert_eq!(r["hypothesis"][0]["left"], 2);
    assert_eq!(r["hypothesis"][0]["right"], 2);
}

#[test]
fn check_all_passes_and_validates() {
    for file in ["gin_example.ideal", "exterior_example.ideal"] {
        let v = json(&["check", &ideal(file), "--all"]);
        assert_schema("report", &v);
        assert_eq!(v["tally"]["violated"], 0);
        assert_eq!(v["tally"]["premise_violated"], 0);
        assert!(v["tally"]["holds"].as_u64().unwrap() > 0);
    }
}

#[test]
fn json_outputs_validate() {
    for file in ["gin_example.ideal", "exterior_example.ideal"] {
        let f = ideal(file);
        assert_schema("betti", &json(&["betti", &f]));
        assert_schema("gin", &json(&["gin", &f]));
        assert_schema("lex", &json(&["lex", &f]));
        let alpha = json(&["alpha", &f, "--source", "both"]);
        assert_schema("alpha", &alpha);
        assert_eq!(alpha["agree"], true);
        let formula = json(&["formula", &f]);
        assert_schema("formula", &formula);
    }
    let ideals = json(&["corpus", "--count", "5"]);
    assert_schema("corpus-ideals", &ideals);
}

#[test]
fn text_and_json_agree_on_betti_numbers() {
    let f = ideal("first_column_example.ideal");
    let v = json(&["betti", &f]);
    let text = stdout(&["betti", &f]);
    // rows of the text table are strands j - i
    let mut from_text = Vec::new();
    for line in text.lines().skip(3) {
        let (row, rest) = line.split_once(':').unwrap();
        let k: u64 = row.trim().parse().unwrap();
        for (i, cell) in rest.split_whitespace().enumerate() {
            if cell != "." {
                from_text.push((i as u64, i as u64 + k, cell.parse::<u64>().unwrap()));
            }
        }
    }
    from_text.sort();
    assert_eq!(from_text, betti_cells(&v));
}

#[test]
fn monomial_corpus_passes_every_statement() {
    let args = [
        "--json", "corpus", "--count", "100", "--n", "3", "--max-degree", "4", "--kind", "poly", "--family", "monomial",
        "--check-all",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_schema("corpus", &v);
    assert_schema("corpus-spec", &v["spec"]);
    assert_eq!(v["summary"]["passed"], 100);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["family"] == "monomial" && e["n"] == 3));
}

#[test]
fn corpus_spec_file_and_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"count": 4, "seed": 7, "max_vars": 3}"#).unwrap();
    let out_dir = dir.path().join("out");
    let text = stdout(&[
        "corpus",
        "--spec",
        spec.to_str().unwrap(),
        "--check-all",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(text.contains("\n4 of 4 entries passed; 0 errors, 0 oracle failures;"), "{text}");
    for k in 0..4 {
        let body = std::fs::read_to_string(out_dir.join(format!("entry-{k:03}.ideal"))).unwrap();
        assert!(body.starts_with("ring "));
    }
    let report: Value = serde_json::from_str(&std::fs::read_to_string(out_dir.join("report.json")).unwrap()).unwrap();
    assert_schema("corpus", &report);
    assert_eq!(report["spec"]["seed"], 7);
}

#[test]
fn reruns_are_byte_identical() {
    let g = ideal("gin_example.ideal");
    let c = ideal("cancellation_example.ideal");
    let e = ideal("exterior_example.ideal");
    let commands: Vec<Vec<&str>> = vec![
        vec!["gin", &g, "--seed", "17"],
        vec!["--json", "gin", &e, "--seed", "3", "--order", "lex"],
        vec!["betti", &c],
        vec!["alpha", &e, "--source", "both"],
        vec!["cancel", &c],
        vec!["lex", &g],
        vec!["check", &e, "--all", "--verbose"],
        vec!["--json", "formula", &g],
        vec!["corpus", "--count", "6", "--check-all", "--max-vars", "3"],
    ];
    for args in commands {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
    let one = stdout(&["--json", "corpus", "--count", "6", "--check-all", "--max-vars", "3", "--jobs", "1"]);
    let three = stdout(&["--json", "corpus", "--count", "6", "--check-all", "--max-vars", "3", "--jobs", "3"]);
    assert_eq!(one, three);
}

#[test]
fn seed_comes_from_the_environment() {
    let g = ideal("gin_example.ideal");
    let flag = stdout(&["gin", &g, "--seed", "9"]);
    let env = Command::new(env!("CARGO_BIN_EXE_ginlab"))
        .args(["gin", &g])
        .env("GINLAB_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), flag);
    assert_ne!(flag, stdout(&["gin", &g]));
}

#[test]
fn exit_codes() {
    let g = ideal("gin_example.ideal");
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["betti", "/nonexistent.ideal"]).status.code(), Some(1));
    assert_eq!(run(&["check", &g, "--statement", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["check", &g, "--statement", "rigidgin", "--i", "2"]).status.code(), Some(1));
    assert_eq!(run(&["gin", &g, "--trials", "1"]).status.code(), Some(1));
    assert_eq!(run(&["cancel", &ideal("exterior_example.ideal")]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "ring poly 2 QQ\nx1 + x2^2\n").unwrap();
    let out = run(&["betti", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&["gin", &g, "--coeff-bound", "1", "--max-doublings", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not certified"));
}
