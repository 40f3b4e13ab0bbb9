use std::path::PathBuf;
use std::process::Command as Process;

use kercoker_cli::{parse_algebra_file, run, write_algebra, Command, Options, Results};

fn data(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect()
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_kercoker")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn opposite_algebras_match_golden_files() {
    for name in ["semi2", "a2", "a3r", "loop2"] {
        let alg = parse_algebra_file(&data(&format!("{name}.alg"))).unwrap().build().unwrap();
        let golden_path = data(&format!("golden/{name}.op.alg"));
        let golden = std::fs::read_to_string(&golden_path).unwrap();
        assert_eq!(write_algebra(&alg.opposite()), golden, "{name}");
        let reparsed = parse_algebra_file(&golden_path).unwrap().build().unwrap();
        assert_eq!(write_algebra(&reparsed), golden, "{name}");
        assert_eq!(reparsed.dimension(), alg.dimension(), "{name}");
    }
}

#[test]
fn data_files_match_the_builtin_zoo() {
    for (name, alg) in kercoker::zoo::all(kercoker::exactla::Field::Rational) {
        let parsed = parse_algebra_file(&data(&format!("{name}.alg"))).unwrap().build().unwrap();
        assert_eq!(*parsed, *alg, "{name}");
    }
}

#[test]
fn gldim_text() {
    let (code, out) = bin(&["gldim", data("a3r.alg").to_str().unwrap(), "--cutoff", "8"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("gldim mod Λ = 2, gldim mod Λ^op = 2, equal"));
}

#[test]
fn check_theorem_text() {
    let (code, out) = bin(&["check-theorem", data("a3r.alg").to_str().unwrap(), "--n", "1", "--trials", "100", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("100/100 constructed n-cokernels verified"));

    let (code, out) = bin(&["check-theorem", data("semi2.alg").to_str().unwrap(), "--n", "0", "--trials", "100", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("100/100 0-cokernels verified"));
}

#[test]
fn violated_precondition_fails() {
    let (code, out) = bin(&["check-theorem", data("loop2.alg").to_str().unwrap(), "--n", "1", "--trials", "5"]);
    assert_eq!(code, 1);
    assert!(out.contains("precondition violated"));
    assert!(out.trim_end().ends_with("FAILED"));
}

#[test]
fn failing_trials_report_first_trace() {
    let dir = std::env::temp_dir().join(format!("kercoker-trace-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("a4.alg");
    std::fs::write(
        &file,
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a 1 2\narrow b 2 3\narrow c 3 4\nrelation b a\nrelation c b\n",
    )
    .unwrap();
    let path = file.to_str().unwrap();
    let (code, out) = bin(&["check-theorem", path, "--n", "1", "--trials", "40", "--seed", "5", "--trace"]);
    assert_eq!(code, 1);
    assert!(out.contains("precondition violated: gldim mod Λ = 3 exceeds 2"));
    assert!(out.contains("is not a monomorphism"), "{out}");
    assert!(out.contains("first failure (trial"));
    let (code, _) = bin(&["check-theorem", path, "--n", "2", "--trials", "20", "--seed", "5"]);
    assert_eq!(code, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    let (code, _) = bin(&["check-theorem", data("a2.alg").to_str().unwrap()]);
    assert_eq!(code, 2);
    let dir = std::env::temp_dir().join(format!("kercoker-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "vertex 1\narrow a 1 2\n").unwrap();
    let out = Process::new(env!("CARGO_BIN_EXE_kercoker")).args(["gldim", bad.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 11"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_report_schema() {
    let (code, out) = bin(&["gldim", data("loop2.alg").to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 5);
    for k in ["algebra", "command", "seed", "results", "passed"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["results"]["algebra"]["gldim"], "above-cutoff");
    assert_eq!(v["results"]["equal"], true);
}

#[test]
fn library_runs_are_deterministic() {
    let cmd = Command::CheckTheorem { file: data("a3r.alg") };
    let opts = Options {
        n: Some(2),
        trials: 30,
        seed: 5,
        ..Options::default()
    };
    let a = run(&cmd, &opts).unwrap();
    let b = run(&cmd, &opts).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.passed);
    let Results::Theorem(t) = &a.results else { panic!("theorem results") };
    assert_eq!((t.verified, t.trials), (30, 30));
}

#[test]
fn resolve_and_demo() {
    let report = run(&Command::Resolve { file: data("a3r.alg") }, &Options::default()).unwrap();
    assert!(report.passed);
    let Results::Resolve(list) = &report.results else { panic!("resolutions") };
    assert_eq!(list[0].projectives, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);

    let report = run(&Command::Demo, &Options { trials: 10, ..Options::default() }).unwrap();
    assert!(report.passed, "{}", report.to_text());
    assert!(report.algebra.is_none());
}

#[test]
fn file_cutoff_is_used_unless_overridden() {
    let dir = std::env::temp_dir().join(format!("kercoker-cutoff-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("loop.alg");
    std::fs::write(&file, "vertex 1\narrow x 1 1\nrelation x x\ncap cutoff 3\n").unwrap();
    let cmd = Command::Gldim { file: file.clone() };
    assert_eq!(run(&cmd, &Options::default()).unwrap().command.cutoff, 3);
    let over = Options {
        cutoff: Some(5),
        ..Options::default()
    };
    assert_eq!(run(&cmd, &over).unwrap().command.cutoff, 5);
    std::fs::remove_dir_all(&dir).unwrap();
}
