//! The `matchcover` binary end to end: outputs, formats and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_matchcover"))
        .args(args)
        .env_remove("MATCHCOVER_SOLVER_EDGES")
        .env_remove("MATCHCOVER_ENUM_EDGES")
        .env_remove("MATCHCOVER_NEW_EDGE_EDGES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const SPANNER0: &str = "0 1\n0 2\n2 3\n0 4\n4 5\n1 6\n6 7\n1 8\n8 9\n";

#[test]
fn compute_examples() {
    let o = run(&["compute"], SPANNER0);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert_eq!((&v["nu"], &v["lambda"], &v["mu"], &v["ratio"]), (&json!(5), &json!(8), &json!(4), &json!([4, 5])));

    let v = json_of(&run(&["compute"], "0 1\n"));
    assert_eq!((&v["nu"], &v["lambda"], &v["mu"], &v["ratio"]), (&json!(1), &json!(1), &json!(1), &json!([1, 1])));

    let v = json_of(&run(&["compute", "--params", "nu3"], "C~\n"));
    assert_eq!(v["nu_k"]["3"], 6);
}

#[test]
fn compute_reads_files_and_forced_formats() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("s.el");
    std::fs::write(&el, SPANNER0).unwrap();
    let v = json_of(&run(&["compute", el.to_str().unwrap()], ""));
    assert_eq!(v["mu"], 4);
    // A graph6 line forced to be read as an edge list is a parse error.
    assert_eq!(code(&run(&["compute", "--input-format", "el"], "C~\n")), 2);
    assert_eq!(code(&run(&["compute", "/nonexistent/graph"], "")), 2);
    let two = run(&["compute"], "A_\nC~\n");
    assert_eq!(json_of(&two).as_array().unwrap().len(), 2);
}

#[test]
fn bound_exceeded_names_the_bound() {
    let path: String = (0..45).map(|i| format!("{i} {}\n", i + 1)).collect();
    let o = run(&["compute"], &path);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound exceeded"));
    assert!(o.stdout.is_empty());
}

#[test]
fn construct_examples() {
    let o = run(&["construct", "theorem1", "--m", "17", "--n", "19", "--verify"], "");
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let g = matchcover::graph::parse_edge_list(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (38, 37));

    let o = run(&["construct", "spanner", "--k", "0"], "");
    let g = matchcover::graph::parse_edge_list(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count(), g.is_connected()), (10, 9, true));

    let o = run(&["construct", "theorem1", "--m", "1", "--n", "2"], "");
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("4n <= 5m"));

    for args in [
        &["construct", "diamond", "--d", "2", "--verify"][..],
        &["construct", "propeller", "--n", "5", "--verify"],
        &["construct", "chain", "--spanners", "0,2:1,1", "--verify"],
        &["construct", "spanner", "--k", "4", "--left", "1", "--verify", "--format", "g6"],
    ] {
        let o = run(args, "");
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn construct_output_pipes_into_compute() {
    let g6 = run(&["construct", "spanner", "--k", "2", "--format", "g6"], "");
    let v = json_of(&run(&["compute"], std::str::from_utf8(&g6.stdout).unwrap()));
    assert_eq!((&v["nu"], &v["mu"]), (&json!(7), &json!(6)));
    let dot = run(&["construct", "theorem1", "--m", "8", "--n", "10", "--format", "dot"], "");
    assert!(String::from_utf8_lossy(&dot.stdout).contains("color=\"red\""));
}

#[test]
fn verify_examples() {
    let s3 = run(&["construct", "spanner", "--k", "3"], "");
    let s3 = String::from_utf8(s3.stdout).unwrap();
    let o = run(&["verify", "--check", "theorem2"], &s3);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert_eq!((&v["consistent"], &v["detector_found"]), (&json!(true), &json!(true)));

    let o = run(&["verify", "--check", "new-edge"], "0 1\n1 2\n0 2\n");
    assert_eq!(code(&o), 0);
    assert_eq!(json_of(&o)["passed"], true);

    assert_eq!(code(&run(&["verify", "--check", "bounds"], "0 1\n1 2\n2 3\n3 0\n0 2\n")), 0);
    assert_eq!(code(&run(&["verify", "--check", "augpaths"], &s3)), 0);
    assert_eq!(code(&run(&["verify", "--check", "theorem2"], "0 1\n2 3\n")), 5);
}

#[test]
fn enumerate_examples() {
    let o = run(&["enumerate", "--n", "7", "--check", "bounds,theorem2", "--no-timing"], "");
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert_eq!(v["failures"], json!([]));
    assert_eq!(v["graphs"], 1 + 1 + 4 + 38 + 728 + 26704 + 1866256);

    let cubic = concat!(env!("CARGO_MANIFEST_DIR"), "/data/cubic_le12.g6");
    let o = run(&["enumerate", "--g6", cubic, "--check", "cubic_bounds"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(json_of(&o)["checks"]["cubic_bounds"]["passed"], 112);

    let v = json_of(&run(&["enumerate", "--n", "0"], ""));
    assert_eq!(v["graphs"], 0);

    let o = run(&["enumerate", "--n", "9"], "");
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--g6"));
    assert_eq!(code(&run(&["enumerate", "--n", "3", "--check", "nonsense"], "")), 5);
}

#[test]
fn enumerate_is_deterministic() {
    let args = ["enumerate", "--random", "11,13,200", "--seed", "5", "--check", "all", "--no-timing"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let serial = run(&[&args[..], &["--serial"]].concat(), "");
    assert_eq!(a.stdout, serial.stdout);
}

#[test]
fn greedy_examples() {
    assert_eq!(json_of(&run(&["greedy"], SPANNER0)), json!({"greedy_total": 7, "lambda": 8, "gap": 1}));
    assert_eq!(json_of(&run(&["greedy"], "0 1\n"))["gap"], 0);
    let chain = run(&["construct", "chain", "--spanners", "0,0"], "");
    let v = json_of(&run(&["greedy"], std::str::from_utf8(&chain.stdout).unwrap()));
    assert_eq!(v["gap"], 2);
}

#[test]
fn usage_errors_stop_before_work() {
    assert_eq!(code(&run(&["enumerate", "--n", "3", "--random", "5,5,1"], "")), 2);
    assert_eq!(code(&run(&["compute", "--format", "xml"], SPANNER0)), 2);
    assert_eq!(code(&run(&[], "")), 2);
    assert_eq!(code(&run(&["construct", "propeller", "--k", "2", "--n", "3"], "")), 4);
}
