use std::path::PathBuf;
use std::process::{Command, Output};

fn girthscope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthscope")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("girthscope-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn count_triangle() {
    let k3 = fixture("k3.txt", "0 1\n1 2\n2 0\n");
    let out = girthscope(&["count", "--graph", k3.to_str().unwrap(), "-k", "4", "--mode", "induced"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7\n");
    for alg in ["baseline", "fast", "auto"] {
        let out = girthscope(&["count", "--graph", k3.to_str().unwrap(), "-k", "3", "--mode", "edge", "--algorithm", alg]);
        assert_eq!(stdout(&out), "8\n", "{alg}");
    }
}

#[test]
fn girth_of_c5() {
    let c5 = fixture("c5.txt", "# five-cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = girthscope(&["girth", "--graph", c5.to_str().unwrap()]);
    assert_eq!(stdout(&out), "5\n");
    assert_eq!(stdout(&girthscope(&["girth", "--path", "4"])), "inf\n");
    let w = fixture("w.txt", "0 1 1\n1 2 2\n2 0 3\n");
    assert_eq!(stdout(&girthscope(&["girth", "--graph", w.to_str().unwrap(), "--weighted"])), "6\n");
}

#[test]
fn extremal_report() {
    let out = girthscope(&["extremal", "-n", "5", "-k", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("max_edges=5\n"), "{text}");
    assert!(text.contains("complete=true\n"));
    let out = girthscope(&["extremal", "-n", "6", "-k", "4", "--distinct"]);
    assert!(stdout(&out).contains("distinct_witnesses=1\n"));
}

#[test]
fn enum_output_is_deterministic() {
    let args = ["enum", "--petersen", "-k", "6", "--mode", "induced"];
    let a = girthscope(&args);
    let b = girthscope(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 351);
}

#[test]
fn enum_formats() {
    let out = girthscope(&["enum", "--path", "3", "-k", "inf", "--no-empty"]);
    assert_eq!(stdout(&out), "0\n0 1\n0 1 2\n1\n1 2\n2\n");
    let out = girthscope(&["enum", "--complete", "3", "-k", "4", "--mode", "edge", "--endpoints", "--limit", "3"]);
    assert_eq!(stdout(&out), "\n0-1\n0-1 0-2\n");
    let labelled = fixture("labels.txt", "10 20\n20 30\n");
    let out = girthscope(&["enum", "--graph", labelled.to_str().unwrap(), "-k", "3", "--no-empty", "--limit", "2"]);
    assert_eq!(stdout(&out), "10\n10 20\n");
}

#[test]
fn enum_to_file() {
    let target = fixture("out.txt", "");
    let out = girthscope(&["enum", "--cycle", "4", "-k", "4", "--output", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap().lines().count(), 14);
}

#[test]
fn variants() {
    let out = girthscope(&["count", "--path", "3", "-k", "3", "--connectivity", "any"]);
    assert_eq!(stdout(&out), "8\n");
    let w = fixture("w2.txt", "0 1 2\n1 2 2\n2 0 2\n");
    let out = girthscope(&["count", "--graph", w.to_str().unwrap(), "-k", "6", "--weighted"]);
    assert_eq!(stdout(&out), "8\n");
}

#[test]
fn bench_and_verify() {
    let out = girthscope(&["bench", "--complete", "5", "-k", "4", "--baseline"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("speedup="));
    assert!(text.ends_with("status=PASSED\n"));
    let out = girthscope(&["verify", "--exhaustive-n", "4", "--random", "5"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("status=PASSED\n"));
}

#[test]
fn distinct_exit_codes() {
    let missing = girthscope(&["count", "--graph", "/nonexistent/graph.txt", "-k", "3"]);
    let bad = fixture("bad.txt", "0 0\n");
    let invalid = girthscope(&["count", "--graph", bad.to_str().unwrap(), "-k", "3"]);
    let config = girthscope(&["count", "--complete", "3", "-k", "4", "--algorithm", "fast", "--connectivity", "any"]);
    let budget = girthscope(&["bench", "--complete", "8", "-k", "4", "--brute-budget", "20"]);
    let usage = girthscope(&["count", "-k", "3"]);
    let codes: Vec<i32> = [&missing, &invalid, &config, &budget, &usage].iter().map(|o| o.status.code().unwrap()).collect();
    assert_eq!(codes, vec![3, 4, 5, 6, 2]);
    for o in [&missing, &invalid, &config, &budget] {
        let err = String::from_utf8_lossy(&o.stderr);
        assert_eq!(err.lines().count(), 1, "{err}");
    }
    assert!(String::from_utf8_lossy(&config.stderr).contains("--algorithm baseline"));
}
