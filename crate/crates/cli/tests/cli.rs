use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TRIPLE_BRACKET: &str = "almost-lie-spec v1
base_dim 0
rank 3
kernel_rank 3
STRUCTURE
1 2 1 : 1
2 3 2 : 1
3 1 3 : 1
KERNEL_FRAME
1 1 : 1
2 2 : 1
3 3 : 1
KERNEL_PROJECTION
1 1 : 1
2 2 : 1
3 3 : 1
END
";

// rho(e1) = d/dx, rho(e2) = x d/dx, [e1, e2] = 0
const BROKEN_MORPHISM: &str = "almost-lie-spec v1
base_dim 1
rank 2
kernel_rank 0
ANCHOR
1 1 : 1
2 1 : x1
END
";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_almost-lie")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn recipe(dir: &TempDir, name: &str, extra: &[&str]) -> PathBuf {
    let path = dir.path().join(format!("{name}.spec"));
    let mut args = vec!["recipe", name, "-o", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = run(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn betti_column(lines: &str) -> Vec<usize> {
    lines.lines().map(|l| l.split_whitespace().nth(3).unwrap().parse().unwrap()).collect()
}

#[test]
fn tangent_recipe_passes_check() {
    let dir = TempDir::new().unwrap();
    let spec = recipe(&dir, "tangent", &[]);
    let out = run(&["check", s(&spec)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("axiom morphism"));
    assert!(text.contains("jacobiator: zero"));
    assert!(text.ends_with("result: PASS\n"));
}

#[test]
fn broken_morphism_exits_one() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "broken.spec", BROKEN_MORPHISM);
    let out = run(&["check", s(&spec)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("axiom morphism") && l.contains("FAIL")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("d-squared") && l.contains("SKIP")), "{text}");
}

#[test]
fn triple_bracket_has_nonzero_jacobiator() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "triple.spec", TRIPLE_BRACKET);
    let out = run(&["check", s(&spec)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("jacobiator: nonzero on 1 frame triple(s)"), "{text}");
    assert!(text.contains("J(e1, e2, e3) = (1, 1, 1)"), "{text}");
}

#[test]
fn cohomology_lines() {
    let dir = TempDir::new().unwrap();
    let triple = write(&dir, "triple.spec", TRIPLE_BRACKET);
    let out = run(&["cohomology", s(&triple), "--lines", "--max-degree", "4"]);
    assert!(out.status.success());
    assert_eq!(betti_column(&stdout(&out)), vec![1, 0, 0, 0, 0]);

    let tangent = recipe(&dir, "tangent", &[]);
    let out = run(&["cohomology", s(&tangent), "--lines", "--max-degree", "3"]);
    assert_eq!(betti_column(&stdout(&out)), vec![1, 2, 1, 0]);

    let product = recipe(&dir, "product", &[]);
    let out = run(&["cohomology", s(&product), "--lines", "--max-degree", "3"]);
    assert_eq!(betti_column(&stdout(&out)), vec![1, 1, 0, 0]);
}

#[test]
fn random_algebra_is_reproducible() {
    let a = run(&["recipe", "random-algebra", "--dim", "4", "--seed", "7"]);
    let b = run(&["recipe", "random-algebra", "--dim", "4", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("rank 4\n"));

    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "random.spec", &stdout(&a));
    let first = run(&["check", s(&spec), "--seed", "3"]);
    let second = run(&["check", s(&spec), "--seed", "3", "--timings"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stderr(&second).contains("d-squared:"));
}

#[test]
fn default_recipes_pass_check() {
    let dir = TempDir::new().unwrap();
    for name in ["product", "b-twist", "twisted-poisson", "twisted-action"] {
        let spec = recipe(&dir, name, &[]);
        let out = run(&["check", s(&spec)]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }
}

#[test]
fn twisted_action_default_has_nonzero_jacobiator() {
    let dir = TempDir::new().unwrap();
    let spec = recipe(&dir, "twisted-action", &[]);
    let out = run(&["check", s(&spec)]);
    assert!(stdout(&out).contains("J(e1, e2, e4) = (0, 0, 1)"));
}

#[test]
fn product_from_params() {
    let dir = TempDir::new().unwrap();
    let params = write(&dir, "so3.params", "# so(3)\nLIE\n1 2 3 : 1\n2 3 1 : 1\n3 1 2 : 1\n");
    let spec = recipe(&dir, "product", &["--base-dim", "1", "--dim", "3", "--params", s(&params)]);
    let text = std::fs::read_to_string(&spec).unwrap();
    assert!(text.contains("rank 4\nkernel_rank 3\n"), "{text}");
    assert_eq!(run(&["check", s(&spec)]).status.code(), Some(0));
}

#[test]
fn twisted_poisson_params_rejects_non_twisted_data() {
    let dir = TempDir::new().unwrap();
    let params = write(&dir, "tp.params", "PI\n1 2 : 1\n3 4 : 1\nH\n1 2 3 : 1\n");
    let out = run(&["recipe", "twisted-poisson", "--base-dim", "4", "--params", s(&params)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not twisted Poisson"), "{}", stderr(&out));
}

#[test]
fn unknown_recipe_is_a_usage_error() {
    let out = run(&["recipe", "moebius"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown recipe `moebius`"));
}

#[test]
fn parse_error_names_the_line() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "bad.spec", "almost-lie-spec v1\nbase_dim 1\nrank 1\nkernel_rank 0\nANCHOR\n1 1 : x1 +\nEND\n");
    let out = run(&["check", s(&spec)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 6"), "{}", stderr(&out));

    let params = write(&dir, "bad.params", "LIE\n1 2 3 : 1\n1 2 : 1\n");
    let out = run(&["recipe", "product", "--dim", "3", "--params", s(&params)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn structured_output_is_json() {
    let dir = TempDir::new().unwrap();
    let spec = write(&dir, "triple.spec", TRIPLE_BRACKET);
    let out = run(&["check", s(&spec), "--structured"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["spec"]["rank"], 3);
    assert_eq!(v["jacobiator"]["zero"], false);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    let out = run(&["cohomology", s(&spec), "--structured", "--max-degree", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["betti"].as_array().unwrap().len(), 3);
    assert_eq!(v["betti"][0]["betti"], 1);
}

#[test]
fn non_constant_spec_is_infinite_dimensional() {
    let dir = TempDir::new().unwrap();
    let spec = recipe(&dir, "b-twist", &[]);
    let out = run(&["cohomology", s(&spec)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("infinite-dimensional"), "{}", stdout(&out));
}
