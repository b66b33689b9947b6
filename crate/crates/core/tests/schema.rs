//! Every JSON document the command line emits validates against the schema
//! files in `docs/schema`.

use serde_json::{json, Value};

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/../../docs/schema/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn cli(args: &[&str], stdin: &str) -> Value {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = matchcover::cli::run([&["matchcover"], args].concat(), &mut input, &mut out, &mut err);
    assert!(code <= 1, "{args:?}: {}", String::from_utf8_lossy(&err));
    serde_json::from_slice(&out).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let s = schema(name);
    let errors: Vec<String> = s.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{v:#}");
}

const SPANNER1: &str = "0 1\n0 2\n2 3\n0 4\n4 5\n0 10\n10 11\n1 6\n6 7\n1 8\n8 9\n";

#[test]
fn outputs_match_their_schemas() {
    assert_valid("params_report", &cli(&["compute", "--params", "nu3,nu4"], SPANNER1));
    assert_valid("params_report", &cli(&["compute"], "A_\nA?\n"));
    assert_valid("theorem2", &cli(&["verify", "--check", "theorem2"], SPANNER1));
    assert_valid("theorem2", &cli(&["verify", "--check", "theorem2"], "0 1\n1 2\n"));
    assert_valid("augpaths", &cli(&["verify", "--check", "augpaths"], SPANNER1));
    assert_valid("augpaths", &cli(&["verify", "--check", "augpaths"], "0 1\n1 2\n"));
    assert_valid("new_edge", &cli(&["verify", "--check", "new-edge"], "0 1\n1 2\n2 3\n"));
    assert_valid("bounds", &cli(&["verify", "--check", "bounds"], SPANNER1));
    assert_valid("bounds", &cli(&["verify", "--check", "bounds"], "n 3\n"));
    assert_valid("greedy", &cli(&["greedy"], SPANNER1));
    assert_valid("run_report", &cli(&["enumerate", "--n", "5", "--check", "all"], ""));
    assert_valid("run_report", &cli(&["enumerate", "--n", "0", "--no-timing"], ""));
}

#[test]
fn failure_entries_match_the_schema() {
    let report = json!({
        "graphs": 1,
        "checks": {"theorem2": {"processed": 1, "passed": 0, "failed": 1, "skipped": 0, "skipped_by_bound": 0, "not_applicable": 0}},
        "failures": [{"graph6": "I??", "check": "theorem2", "witness": {"nu": 5, "mu": 4}}]
    });
    assert_valid("run_report", &report);
}

#[test]
fn schemas_reject_malformed_documents() {
    let mut v = cli(&["compute"], SPANNER1);
    v.as_object_mut().unwrap().remove("mu");
    assert!(!schema("params_report").is_valid(&v));
    assert!(!schema("greedy").is_valid(&json!({"greedy_total": -1, "lambda": 1, "gap": 0})));
    let bad_check = json!({"graphs": 0, "checks": {"bogus": {}}, "failures": []});
    assert!(!schema("run_report").is_valid(&bad_check));
}
