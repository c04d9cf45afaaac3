//! End-to-end runs of the `trirange` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use trirange::lab::cli;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trirange"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn gen_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let p = dir.join(name);
    let mut full: Vec<&str> = args.to_vec();
    let ps = p.to_str().unwrap().to_string();
    full.extend(["--out", &ps]);
    let o = bin(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    ps
}

#[test]
fn k4_counts_and_detection() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(
        dir.path(),
        "k4.txt",
        &["gen", "graph", "--model", "K", "--n", "4"],
    );
    assert_eq!(std::fs::read_to_string(&g).unwrap().lines().count(), 7);
    for algo in ["oracle", "ayz", "via-2req"] {
        let o = bin(&["count", "--graph", &g, "--algo", algo]);
        assert!(o.status.success());
        assert!(stdout(&o).lines().all(|l| l.ends_with(" 2")), "{algo}");
    }
    for algo in ["oracle", "ayz", "via-listing"] {
        let o = bin(&["detect", "--graph", &g, "--algo", algo]);
        assert!(stdout(&o).lines().all(|l| l.ends_with(" 1")), "{algo}");
    }
    let o = bin(&["list", "--graph", &g, "--t", "10", "--format", "csv"]);
    assert_eq!(stdout(&o), "a,b,c\n1,2,3\n1,2,4\n1,3,4\n2,3,4\n");
}

#[test]
fn generated_files_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let args = [
        "--seed",
        "17",
        "gen",
        "graph",
        "--model",
        "power-law",
        "--n",
        "50",
    ];
    let a = gen_to(dir.path(), "a.txt", &args);
    let b = gen_to(dir.path(), "b.txt", &args);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(
        stdout(&bin(&["gen", "queries", "--n", "9", "--q", "0"])),
        ""
    );
}

#[test]
fn every_algorithm_verifies_on_generated_instances() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let mut checked = 0;
    for seed in 0..100 {
        let s = seed.to_string();
        let n = (4 + seed % 40).to_string();
        let run = |args: &[&str]| {
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let mut full = vec!["trirange", "--seed", &s];
            full.extend_from_slice(args);
            let code = cli::run(full, &mut out, &mut err);
            (
                code,
                String::from_utf8(out).unwrap(),
                String::from_utf8(err).unwrap(),
            )
        };
        let arr = d.join(format!("a{seed}")).to_str().unwrap().to_string();
        let single = d.join(format!("s{seed}")).to_str().unwrap().to_string();
        let pairs = d.join(format!("p{seed}")).to_str().unwrap().to_string();
        assert_eq!(
            run(&["gen", "array", "--n", &n, "--hi", "5", "--out", &arr]).0,
            0
        );
        assert_eq!(
            run(&["gen", "queries", "--n", &n, "--q", "30", "--out", &single]).0,
            0
        );
        assert_eq!(
            run(&["gen", "queries", "--n", &n, "--q", "30", "--pairs", "--out", &pairs]).0,
            0
        );
        for problem in ["riq", "req", "2riq", "2req", "2rdq"] {
            let q = if problem.starts_with('2') {
                &pairs
            } else {
                &single
            };
            for algo in ["mo", "mo-online", "online-eq", "via-triangle", "oracle"] {
                let (code, out, err) = run(&[
                    "verify",
                    "--problem",
                    problem,
                    "--algo",
                    algo,
                    "--array",
                    &arr,
                    "--queries",
                    q,
                ]);
                assert_eq!(code, 0, "{problem} {algo} seed {seed}: {out} {err}");
                assert!(out.starts_with("PASS"));
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 2500);
}

#[test]
fn corrupted_answers_fail_with_the_index() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let a = write(d, "a.txt", "5\n1 2 1 2 1\n");
    let q = write(d, "q.txt", "1 5\n2 4\n1 1\n");
    let (a, q) = (a.to_str().unwrap(), q.to_str().unwrap());
    let o = bin(&[
        "solve",
        "--problem",
        "req",
        "--algo",
        "mo",
        "--array",
        a,
        "--queries",
        q,
    ]);
    assert_eq!(stdout(&o), "4\n1\n0\n");
    let good = write(d, "good.txt", &stdout(&o));
    let bad = write(d, "bad.txt", "4\n2\n0\n");
    let v = |ans: &Path| {
        bin(&[
            "verify",
            "--problem",
            "req",
            "--array",
            a,
            "--queries",
            q,
            "--answers",
            ans.to_str().unwrap(),
        ])
    };
    assert_eq!(v(&good).status.code(), Some(0));
    let o = v(&bad);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("query 2: expected 1, got 2"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn empty_query_set_passes() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", "3\n1 1 1\n");
    let q = write(dir.path(), "q.txt", "");
    let o = bin(&[
        "verify",
        "--problem",
        "2req",
        "--algo",
        "via-triangle",
        "--array",
        a.to_str().unwrap(),
        "--queries",
        q.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS: 0"));
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", "3\n1 2 3\n");
    let q = write(dir.path(), "q.txt", "1 2\n1 9\n");
    let o = bin(&[
        "solve",
        "--problem",
        "riq",
        "--algo",
        "mo",
        "--array",
        a.to_str().unwrap(),
        "--queries",
        q.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let g = write(dir.path(), "g.txt", "3 2\n1 2\n2 x\n");
    let o = bin(&["count", "--graph", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(bin(&["solve"]).status.code(), Some(2));
}

#[test]
fn reduce_prints_a_verdict() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", "6\n3 1 2 3 1 2\n");
    let q = write(dir.path(), "q.txt", "1 2 4 6\n1 3 5 5\n");
    let (a, q) = (a.to_str().unwrap(), q.to_str().unwrap());
    for (from, to) in [
        ("2riq", "2req"),
        ("2req", "etc"),
        ("2rdq", "etd"),
        ("2req", "req"),
    ] {
        let o = bin(&[
            "reduce",
            "--from",
            from,
            "--to",
            to,
            "--array",
            a,
            "--queries",
            q,
            "--verify",
        ]);
        assert_eq!(o.status.code(), Some(0), "{from} -> {to}");
        assert!(stdout(&o).lines().last().unwrap().starts_with("PASS"));
    }
    assert_eq!(
        bin(&[
            "reduce",
            "--from",
            "riq",
            "--to",
            "etc",
            "--array",
            a,
            "--queries",
            q
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn minmax_solvers_agree() {
    let dir = TempDir::new().unwrap();
    let a = gen_to(
        dir.path(),
        "a.txt",
        &["--seed", "1", "gen", "matrix", "--rows", "7"],
    );
    let b = gen_to(
        dir.path(),
        "b.txt",
        &["--seed", "2", "gen", "matrix", "--rows", "7"],
    );
    let outs: Vec<String> = ["oracle", "via-2rdq", "via-etd"]
        .iter()
        .map(|s| stdout(&bin(&["minmax", "--a", &a, "--b", &b, "--solver", s])))
        .collect();
    assert_eq!(outs[0].lines().next(), Some("7 7"));
    assert!(outs.iter().all(|o| o == &outs[0]));
    assert_eq!(
        bin(&[
            "verify",
            "--problem",
            "minmax",
            "--algo",
            "via-etd",
            "--a",
            &a,
            "--b",
            &b
        ])
        .status
        .code(),
        Some(0)
    );
}

#[test]
fn seeded_runs_are_identical() {
    let dir = TempDir::new().unwrap();
    let g = gen_to(
        dir.path(),
        "g.txt",
        &[
            "--seed", "3", "gen", "graph", "--model", "gnp", "--n", "40", "--p", "0.3",
        ],
    );
    for args in [
        vec![
            "--seed", "9", "--zeta", "4", "list", "--graph", &g, "--t", "50", "--algo", "main",
        ],
        vec![
            "--seed",
            "9",
            "detect",
            "--graph",
            &g,
            "--algo",
            "via-listing",
        ],
    ] {
        let (x, y) = (bin(&args), bin(&args));
        assert!(x.status.success());
        assert_eq!(x.stdout, y.stdout);
    }
    let o = bin(&[
        "verify",
        "--problem",
        "list",
        "--algo",
        "via-detection",
        "--graph",
        &g,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bench_writes_one_row_per_repetition() {
    let o = bin(&[
        "--format",
        "csv",
        "bench",
        "--problems",
        "req",
        "--algos",
        "online-eq",
        "--sizes",
        "128",
        "--reps",
        "3",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "problem,algorithm,n,m,q,t,seed,rep,wall_ns,extender_steps,matmul_calls,inner_calls,status"
    );
    assert!(lines[1..]
        .iter()
        .all(|l| l.starts_with("req,online-eq,128,0,128,") && l.ends_with(",ok")));
    let o = bin(&[
        "--format",
        "csv",
        "bench",
        "--problems",
        "2req",
        "--algos",
        "mo-online",
        "--sizes",
        "64",
        "--budget",
        "10",
    ]);
    assert!(stdout(&o).lines().nth(1).unwrap().contains("skipped"));
}
