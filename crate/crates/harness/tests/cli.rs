use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use tempfile::TempDir;
use tradeoff_harness::cli::run;

fn tradeoff(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tradeoff").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const P5: &str = "c path on five vertices\np edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n";
const FOUR_CLAUSES: &str = "p cnf 4 4\n1 -2 3 0\n1 2 -3 0\n-1 2 -4 0\n2 -3 4 0\n";

#[test]
fn solve_mids_on_p5() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "p5.dimacs", P5);
    let (code, out, _) = tradeoff(&[
        "solve",
        "--problem",
        "mids",
        "--ratio",
        "2",
        "--input",
        p(&input),
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["solution"], serde_json::json!([1, 4]));
    assert_eq!(v["nodes_enumerated"], 16);
}

#[test]
fn atsp_at_ratio_one_is_optimal() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "m.txt", "3\n0 2 9\n1 0 6\n15 7 0\n");
    let (code, out, err) = tradeoff(&[
        "solve",
        "--problem",
        "atsp",
        "--ratio",
        "1",
        "--closure",
        "--input",
        p(&input),
    ]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    // 1 -> 2 -> 3 -> 1 costs 2 + 6 + 8 after closure
    assert_eq!(v["value"], 16);
    let (code, _, _) = tradeoff(&[
        "solve",
        "--problem",
        "atsp",
        "--ratio",
        "1",
        "--input",
        p(&input),
    ]);
    assert_eq!(code, 65, "unclosed metric violates the triangle inequality");
}

#[test]
fn setcover_delta_takes_greedy_branch() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "s.txt", "4 4\n2 1 2\n2 3 4\n2 1 3\n2 2 4\n");
    let (code, out, err) = tradeoff(&[
        "solve",
        "--problem",
        "setcover",
        "--delta",
        "0.5",
        "--input",
        p(&input),
    ]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 2);
    assert!(v["notes"].to_string().contains("Greedy"), "{out}");
}

#[test]
fn reduce_four_clause_formula() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "f.cnf", FOUR_CLAUSES);
    let tau = write(dir.path(), "f.sol", "v 1 2 -3 4 0\n");
    let prefix = dir.path().join("gadget");
    let (code, _, err) = tradeoff(&[
        "reduce",
        "--from",
        "cnf",
        "--to",
        "ipath",
        "--r",
        "1",
        "--input",
        p(&input),
        "--witness",
        p(&tau),
        "--output",
        p(&prefix),
    ]);
    assert_eq!(code, 0, "{err}");
    let graph = fs::read_to_string(prefix.with_extension("dimacs")).unwrap();
    assert!(
        graph.lines().any(|l| l.starts_with("p edge 32 ")),
        "{graph}"
    );
    let roles = fs::read_to_string(prefix.with_extension("roles")).unwrap();
    assert_eq!(roles.lines().filter(|l| !l.starts_with('c')).count(), 32);
    assert_eq!(
        roles.lines().filter(|l| l.contains(" connector ")).count(),
        4
    );
    let witness = fs::read_to_string(prefix.with_extension("witness")).unwrap();
    assert_eq!(witness.split_whitespace().filter(|t| *t != "0").count(), 8);

    let falsifying = write(dir.path(), "bad.sol", "-1 -2 3 -4\n");
    let (code, _, _) = tradeoff(&[
        "reduce",
        "--from",
        "cnf",
        "--to",
        "ipath",
        "--input",
        p(&input),
        "--witness",
        p(&falsifying),
    ]);
    assert_eq!(code, 65);
}

#[test]
fn reduce_csp_and_graph_gadgets() {
    let dir = TempDir::new().unwrap();
    let csp = write(dir.path(), "one.csp", "2 2 1\n1 2 1 1 2\n");
    let (code, out, _) = tradeoff(&[
        "reduce",
        "--from",
        "csp",
        "--to",
        "mids",
        "--r",
        "2",
        "--input",
        p(&csp),
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("p edge 10 ")), "{out}");

    let k2 = write(dir.path(), "k2.dimacs", "p edge 2 1\ne 1 2\n");
    let (code, out, _) = tradeoff(&[
        "reduce",
        "--from",
        "graph",
        "--to",
        "mmvc",
        "--r",
        "2",
        "--input",
        p(&k2),
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("p edge 6 5")), "{out}");
    let (code, out, _) = tradeoff(&[
        "reduce",
        "--from",
        "graph",
        "--to",
        "itree",
        "--input",
        p(&k2),
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("p edge 3 3")), "{out}");

    let (code, _, _) = tradeoff(&["reduce", "--from", "cnf", "--to", "mids", "--input", p(&k2)]);
    assert_eq!(code, 64);
}

#[test]
fn verify_reports_certification() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "p5.dimacs", P5);
    let (code, out, _) = tradeoff(&[
        "verify",
        "--problem",
        "mmvc",
        "--ratio",
        "2",
        "--input",
        p(&input),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS"), "{out}");
    let (code, out, _) = tradeoff(&[
        "verify",
        "--problem",
        "ipath",
        "--ratio",
        "2",
        "--input",
        p(&input),
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["opt"], 5);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write(dir.path(), "p5.dimacs", P5);
    let bad = write(dir.path(), "bad.dimacs", "p edge 3 1\ne 1 7\n");
    let missing = dir.path().join("missing.dimacs");
    let cases: [(&[&str], i32); 6] = [
        (
            &[
                "solve",
                "--problem",
                "mis",
                "--ratio",
                "0.5",
                "--input",
                p(&good),
            ],
            64,
        ),
        (&["solve", "--problem", "mis", "--input", p(&good)], 64),
        (
            &[
                "solve",
                "--problem",
                "mis",
                "--ratio",
                "2",
                "--input",
                p(&bad),
            ],
            65,
        ),
        (
            &[
                "solve",
                "--problem",
                "mis",
                "--ratio",
                "2",
                "--input",
                p(&missing),
            ],
            66,
        ),
        (&["frobnicate"], 64),
        (&["--help"], 0),
    ];
    for (args, want) in cases {
        let (code, _, err) = tradeoff(args);
        assert_eq!(code, want, "{args:?}: {err}");
    }
}

#[test]
fn generated_instances_round_trip() {
    let dir = TempDir::new().unwrap();
    let specs: [(&[&str], &str, &str); 5] = [
        (&["--kind", "graph", "--n", "9", "--p", "0.4"], "mis", "2"),
        (&["--kind", "metric", "--n", "6"], "atsp", "2"),
        (&["--kind", "sets", "--n", "8", "--m", "6"], "setcover", "2"),
        (&["--kind", "cnf", "--vars", "4", "--clauses", "3"], "", ""),
        (&["--kind", "csp", "--n", "3", "--s", "2"], "", ""),
    ];
    for (i, (spec, problem, ratio)) in specs.iter().enumerate() {
        let path = dir.path().join(format!("inst{i}"));
        let mut args = vec!["generate"];
        args.extend_from_slice(spec);
        args.extend_from_slice(&["--seed", "11", "--output", p(&path)]);
        let (code, _, err) = tradeoff(&args);
        assert_eq!(code, 0, "{err}");
        let first = fs::read_to_string(&path).unwrap();
        let (_, again, _) = tradeoff(&args[..args.len() - 2]);
        assert_eq!(first, again, "same seed, same instance");
        if !problem.is_empty() {
            let (code, _, err) = tradeoff(&[
                "verify",
                "--problem",
                problem,
                "--ratio",
                ratio,
                "--input",
                p(&path),
            ]);
            assert_eq!(code, 0, "{problem}: {err}");
        }
    }
}

#[test]
fn sweep_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.dimacs", P5);
    let b = write(
        dir.path(),
        "b.dimacs",
        "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
    );
    let args = [
        "sweep",
        "--problem",
        "ipath",
        "--input",
        p(&b),
        p(&a),
        "--ratios",
        "2,1",
        "--oracle",
        "--csv",
    ];
    let strip = |csv: String| -> Vec<String> {
        csv.lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    let (code, first, _) = tradeoff(&args);
    assert_eq!(code, 0);
    let (_, second, _) = tradeoff(&args);
    let rows = strip(first);
    assert_eq!(rows, strip(second));
    assert_eq!(
        rows[0],
        "problem,instance,size,r,guarantee,value,opt,ratio,nodes"
    );
    assert_eq!(rows[1], "ipath,a,5,1.0,1.0,5,5,1.0,32");
    assert_eq!(rows[2], "ipath,a,5,2.0,2.5,2,5,2.5,16");
    assert_eq!(rows.len(), 5);
}
