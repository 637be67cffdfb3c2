use clap::Parser;
use qcluster::cli::{run, Cli, Output};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

fn call(args: &[&str]) -> qcluster::Result<Output> {
    let argv = std::iter::once("qcluster").chain(args.iter().copied());
    run(&Cli::try_parse_from(argv).unwrap())
}

fn surface(name: &str) -> String {
    format!("{DATA}/{name}.json")
}

fn scratch(name: &str, edit: impl FnOnce(&mut serde_json::Value)) -> String {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(surface("pentagon")).unwrap()).unwrap();
    edit(&mut v);
    let path = std::env::temp_dir().join(format!("qcluster-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&path, v.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_bundled_annulus() {
    let out = call(&["--surface", &surface("annulus_c11"), "validate"]).unwrap();
    assert!(out.success, "{}", out.text);
    assert!(out.text.contains("D = diag(2, 2)"));
}

#[test]
fn unknown_arc_names_the_triangle() {
    let path = scratch("unknown-arc", |v| v["triangles"][1][2] = 42.into());
    let out = call(&["--surface", &path, "validate"]).unwrap();
    assert!(!out.success);
    assert!(out.text.contains("triangle 1 uses unknown arc 42"), "{}", out.text);
}

#[test]
fn corrupted_lambda_fails_before_the_string_checks() {
    let path = scratch("bad-lambda", |v| v["lambda"] = serde_json::json!([[0, 1], [0, 0]]));
    let out = call(&["--surface", &path, "verify"]).unwrap();
    assert!(!out.success);
    let first_fail = out.text.lines().find(|l| l.contains("FAIL")).unwrap();
    assert!(first_fail.starts_with("compatible_pair"), "{}", out.text);
    assert!(!out.text.contains("counts"));
}

#[test]
fn verify_runs_all_checks() {
    let out = call(&["--surface", &surface("pentagon"), "verify", "--max-len", "2", "--seq", "1,2,1"]).unwrap();
    assert!(out.success, "{}", out.text);
    let out = call(&["--surface", &surface("annulus_c11"), "verify", "--s", "4", "--format", "structured"]).unwrap();
    assert!(out.success, "{}", out.text);
    let names: Vec<String> = out
        .text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["check"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        names,
        [
            "surface",
            "gentle",
            "compatible_pair",
            "counts",
            "bijection",
            "omega",
            "valuation",
            "factorization",
            "expansion",
            "bar_invariance",
            "positivity",
            "kronecker"
        ]
    );
}

#[test]
fn expand_and_matchings() {
    let a = surface("annulus_c11");
    let out = call(&["--surface", &a, "expand", "--string", "1 > 2 < 1", "--terms", "--check"]).unwrap();
    assert!(out.success);
    let first = out.text.lines().next().unwrap();
    assert_eq!(first, "X = X[(-2,-1)] + q^-1X[(-2,1)] + q^1X[(-2,1)] + X[(-2,3)] + X[(0,-1)]");
    assert_eq!(out.text.lines().filter(|l| l.trim_start().starts_with("N = ")).count(), 5);
    let out = call(&["--surface", &a, "matchings", "--string", "1 > 2 < 1"]).unwrap();
    assert_eq!(out.text.lines().filter(|l| l.contains("enclosed")).count(), 5);
    let out = call(&["--surface", &a, "submodules", "--string", "1 > 2 < 1", "--valuations"]).unwrap();
    assert!(out.text.contains("{1,2}        dim [1, 1]  v =  -1"), "{}", out.text);
}

#[test]
fn bad_string_is_an_error() {
    let r = call(&["--surface", &surface("pentagon"), "expand", "--string", "1 > 2"]);
    assert!(r.is_err());
}

#[test]
fn kronecker_check() {
    let out = call(&["kronecker", "--s", "2", "--check"]).unwrap();
    assert!(out.success && out.text.contains("kronecker        pass"), "{}", out.text);
    let out = call(&["kronecker", "--s", "3", "--family", "H", "--check"]).unwrap();
    assert!(out.success);
}

#[test]
fn mutate_and_multiply() {
    let p = surface("pentagon");
    let out = call(&["--surface", &p, "mutate", "--seq", "1,2"]).unwrap();
    assert!(out.text.contains("X1 = X[(-1,0)] + X[(-1,1)]"), "{}", out.text);
    let out = call(&["--surface", &p, "skein-multiply", "--string", "1", "--string", "2"]).unwrap();
    assert!(out.success, "{}", out.text);
    assert!(out.text.contains("lambda = 1/4"));
    assert!(call(&["--surface", &p, "skein-multiply", "--string", "1"]).is_err());
}
