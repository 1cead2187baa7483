//! End-to-end tests of the command line: exit codes, prose, JSON envelopes,
//! determinism, and `verify --replay` round trips.

use std::path::{Path, PathBuf};

use coopcolor::cli::run_cli;
use serde_json::{json, Value};

struct Cli {
    dir: tempfile::TempDir,
}

struct Run {
    code: i32,
    stdout: String,
}

impl Cli {
    fn new() -> Cli {
        Cli { dir: tempfile::tempdir().expect("tempdir") }
    }

    fn write(&self, name: &str, value: &Value) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
        path
    }

    fn run(&self, args: &[&str]) -> Run {
        let mut argv = vec!["coopcolor".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let mut out = Vec::new();
        let code = run_cli(&argv, &mut out);
        Run { code, stdout: String::from_utf8(out).unwrap() }
    }
}

fn k4_edges() -> Value {
    json!([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])
}

fn k4_pair_file() -> Value {
    json!({
        "ground": 6,
        "matroids": [
            {"kind": "graphic", "vertices": 4, "edges": k4_edges()},
            {"kind": "graphic", "vertices": 4, "edges": k4_edges()}
        ]
    })
}

fn u21_pair_file() -> Value {
    json!({
        "ground": 2,
        "matroids": [
            {"kind": "uniform", "n": 2, "rank": 1},
            {"kind": "uniform", "n": 2, "rank": 1}
        ],
        "lists": {"0": [1, 2], "1": [1, 2]}
    })
}

fn path_of(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).expect("stdout is one JSON document")
}

#[test]
fn chromatic_prose_and_exit_code() {
    let cli = Cli::new();
    let file = cli.write("k4.json", &k4_pair_file());
    let run = cli.run(&["chromatic", file.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(run.stdout.contains("chromatic number: 2"), "{}", run.stdout);
    assert!(run.stdout.contains("argmax subset"), "{}", run.stdout);
}

#[test]
fn chromatic_json_is_byte_identical_across_runs() {
    let cli = Cli::new();
    let file = cli.write("k4.json", &k4_pair_file());
    let a = cli.run(&["chromatic", file.to_str().unwrap(), "--json", "--seed", "7"]);
    let b = cli.run(&["chromatic", file.to_str().unwrap(), "--json", "--seed", "7"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let v = path_of(&a);
    assert_eq!(v["result"]["chromatic_number"], 2);
    assert_eq!(v["command"], "chromatic");
}

#[test]
fn check_k_exit_codes_and_certificate() {
    let cli = Cli::new();
    let file = cli.write(
        "u42.json",
        &json!({"ground": 4, "matroids": [{"kind": "uniform", "n": 4, "rank": 2}]}),
    );
    let no = cli.run(&["check-k", file.to_str().unwrap(), "--k", "1"]);
    assert_eq!(no.code, 1, "{}", no.stdout);
    assert!(no.stdout.contains("certificate"), "{}", no.stdout);
    let yes = cli.run(&["check-k", file.to_str().unwrap(), "--k", "2"]);
    assert_eq!(yes.code, 0, "{}", yes.stdout);
}

#[test]
fn partition_feasible_and_not() {
    let cli = Cli::new();
    let good = cli.write("k4pair.json", &k4_pair_file());
    let run = cli.run(&["partition", good.to_str().unwrap(), "--json"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    let v = path_of(&run);
    assert_eq!(v["result"]["feasible"], true);
    let parts = v["result"]["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    let covered: usize = parts.iter().map(|p| p.as_array().unwrap().len()).sum();
    assert_eq!(covered, 6);

    let bad = cli.write(
        "u42.json",
        &json!({"ground": 4, "matroids": [{"kind": "uniform", "n": 4, "rank": 2}]}),
    );
    let run = cli.run(&["partition", bad.to_str().unwrap(), "--json"]);
    assert_eq!(run.code, 1);
    let v = path_of(&run);
    assert_eq!(v["result"]["feasible"], false);
    assert!(v["result"]["certificate"]["witness"].is_array());
}

#[test]
fn coop_color_assigns_distinct_colors_to_parallel_elements() {
    let cli = Cli::new();
    let file = cli.write("pair.json", &u21_pair_file());
    let run = cli.run(&["coop-color", file.to_str().unwrap(), "--json"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    let v = path_of(&run);
    let coloring = v["result"]["coloring"].as_object().unwrap();
    assert_ne!(coloring["0"], coloring["1"]);
    let verdicts = v["result"]["class_independent"].as_array().unwrap();
    assert!(verdicts.iter().all(|b| b.as_bool().unwrap()));
}

#[test]
fn list_color_uses_file_lists_and_reports_infeasibility() {
    let cli = Cli::new();
    let file = cli.write("pair.json", &u21_pair_file());
    let run = cli.run(&["list-color", file.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stdout);

    let infeasible = cli.write(
        "single.json",
        &json!({
            "ground": 2,
            "matroids": [{"kind": "uniform", "n": 2, "rank": 1}],
            "lists": {"0": [1], "1": [1]}
        }),
    );
    let run = cli.run(&["list-color", infeasible.to_str().unwrap(), "--json"]);
    assert_eq!(run.code, 1, "{}", run.stdout);
    let v = path_of(&run);
    assert_eq!(v["result"]["feasible"], false);
}

#[test]
fn arbor_perm_with_seeded_random_permutations() {
    let cli = Cli::new();
    let file = cli.write(
        "k4.json",
        &json!({"ground": 6, "matroids": [{"kind": "graphic", "vertices": 4, "edges": k4_edges()}]}),
    );
    let a = cli.run(&["arbor-perm", file.to_str().unwrap(), "--perms", "2", "--seed", "3", "--json"]);
    assert_eq!(a.code, 0, "{}", a.stdout);
    let v = path_of(&a);
    let checks = v["result"]["forest_checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|b| b.as_bool().unwrap()));
    let b = cli.run(&["arbor-perm", file.to_str().unwrap(), "--perms", "2", "--seed", "3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn games_report_winners_with_exit_codes() {
    let cli = Cli::new();
    let pair = cli.write("pair.json", &u21_pair_file());
    let run = cli.run(&["game", "indicated", pair.to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("winner: Ann"), "{}", run.stdout);

    let single = cli.write(
        "single.json",
        &json!({"ground": 2, "matroids": [{"kind": "uniform", "n": 2, "rank": 1}]}),
    );
    let run = cli.run(&["game", "indicated", single.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("winner: Ben"), "{}", run.stdout);

    let run = cli.run(&["game", "marking", pair.to_str().unwrap(), "--first", "ben"]);
    assert_eq!(run.code, 0, "{}", run.stdout);

    let run = cli.run(&["game", "painting", pair.to_str().unwrap(), "--k", "2"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    let run = cli.run(&[
        "game",
        "painting",
        pair.to_str().unwrap(),
        "--k",
        "2",
        "--rules",
        "strict-all-colored",
    ]);
    assert_eq!(run.code, 1, "{}", run.stdout);
}

#[test]
fn conjecture_search_jsonl_and_parallel_determinism() {
    let cli = Cli::new();
    let file = cli.write(
        "pool.json",
        &json!({
            "ground": 2,
            "matroids": [
                {"kind": "uniform", "n": 2, "rank": 1},
                {"kind": "uniform", "n": 2, "rank": 2}
            ],
            "names": ["u21", "free2"],
            "k": 2
        }),
    );
    let a = cli.run(&["conjecture-search", file.to_str().unwrap(), "--json"]);
    assert_eq!(a.code, 0, "{}", a.stdout);
    let lines: Vec<&str> = a.stdout.lines().collect();
    assert_eq!(lines.len(), 5); // 4 instances + summary
    for line in &lines {
        let _: Value = serde_json::from_str(line).expect("every line is JSON");
    }
    let summary: Value = serde_json::from_str(lines[4]).unwrap();
    assert_eq!(summary["summary"]["solved"], 4);
    assert_eq!(summary["summary"]["ben_wins"].as_array().unwrap().len(), 0);

    let b = cli.run(&["conjecture-search", file.to_str().unwrap(), "--json", "--parallel", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_runs_the_suite() {
    let cli = Cli::new();
    let file = cli.write("pair.json", &u21_pair_file());
    let run = cli.run(&["verify", file.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(run.stdout.contains("all checks passed"), "{}", run.stdout);
    assert!(run.stdout.contains("axioms"), "{}", run.stdout);
    assert!(run.stdout.contains("union-rank-equivalence"), "{}", run.stdout);
}

fn replay_round_trip(cli: &Cli, args: &[&str], expect_code: i32) {
    let run = {
        let mut with_json = args.to_vec();
        with_json.push("--json");
        cli.run(&with_json)
    };
    assert_eq!(run.code, expect_code, "{} {:?}", run.stdout, args);
    let result_path = cli.dir.path().join("result.json");
    std::fs::write(&result_path, &run.stdout).unwrap();
    let replay = cli.run(&["verify", "--replay", result_path.to_str().unwrap()]);
    assert_eq!(replay.code, 0, "replay of {:?} failed:\n{}", args, replay.stdout);
    assert!(replay.stdout.contains("replay: verified"), "{}", replay.stdout);
}

#[test]
fn every_result_kind_replays_and_reverifies() {
    let cli = Cli::new();
    let k4 = cli.write("k4.json", &k4_pair_file());
    let pair = cli.write("pair.json", &u21_pair_file());
    let u42 = cli.write(
        "u42.json",
        &json!({"ground": 4, "matroids": [{"kind": "uniform", "n": 4, "rank": 2}]}),
    );
    let k4_single = cli.write(
        "k4single.json",
        &json!({"ground": 6, "matroids": [{"kind": "graphic", "vertices": 4, "edges": k4_edges()}]}),
    );

    let k4_path = k4.to_str().unwrap();
    let pair_path = pair.to_str().unwrap();
    let u42_path = u42.to_str().unwrap();
    let k4s_path = k4_single.to_str().unwrap();

    replay_round_trip(&cli, &["rank", k4_path, "--subset", "0,3,5"], 0);
    replay_round_trip(&cli, &["chromatic", k4_path], 0);
    replay_round_trip(&cli, &["partition", k4_path], 0);
    replay_round_trip(&cli, &["partition", u42_path], 1);
    replay_round_trip(&cli, &["check-k", u42_path, "--k", "2"], 0);
    replay_round_trip(&cli, &["check-k", u42_path, "--k", "1"], 1);
    replay_round_trip(&cli, &["coop-color", pair_path], 0);
    replay_round_trip(&cli, &["list-color", pair_path], 0);
    replay_round_trip(&cli, &["arbor-perm", k4s_path, "--perms", "2", "--seed", "11"], 0);
    replay_round_trip(&cli, &["game", "indicated", pair_path], 0);
    replay_round_trip(&cli, &["game", "marking", pair_path], 0);
    replay_round_trip(&cli, &["game", "painting", pair_path, "--k", "2"], 0);
}

#[test]
fn malformed_inputs_exit_2() {
    let cli = Cli::new();
    let missing = cli.run(&["chromatic", "/nonexistent/nope.json"]);
    assert_eq!(missing.code, 2);

    let bad = cli.write(
        "bad.json",
        &json!({"ground": 3, "matroids": [{"kind": "uniform", "n": 4, "rank": 2}]}),
    );
    let run = cli.run(&["chromatic", bad.to_str().unwrap()]);
    assert_eq!(run.code, 2);

    let looped = cli.write(
        "loop.json",
        &json!({"ground": 1, "matroids": [{"kind": "graphic", "vertices": 1, "edges": [[0, 0]]}]}),
    );
    let run = cli.run(&["chromatic", looped.to_str().unwrap()]);
    assert_eq!(run.code, 2);

    let pool = cli.write("pool.json", &u21_pair_file());
    let run = cli.run(&["conjecture-search", pool.to_str().unwrap()]);
    assert_eq!(run.code, 2, "missing --k must be an input error");

    let run = cli.run(&["chromatic", pool.to_str().unwrap(), "--definitely-not-a-flag"]);
    assert_eq!(run.code, 2);

    let run = cli.run(&["no-such-command"]);
    assert_eq!(run.code, 2);
}

#[test]
fn guard_violations_exit_2() {
    let cli = Cli::new();
    // 9 elements exceed the indicated-game guard
    let file = cli.write(
        "big.json",
        &json!({"ground": 9, "matroids": [{"kind": "uniform", "n": 9, "rank": 9}]}),
    );
    let run = cli.run(&["game", "indicated", file.to_str().unwrap()]);
    assert_eq!(run.code, 2, "{}", run.stdout);
}

#[test]
fn help_exits_zero() {
    let cli = Cli::new();
    let run = cli.run(&["--help"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("coopcolor"));
}

#[test]
fn emitted_system_files_reload() {
    // the envelope embeds the system; writing it back out must reload cleanly
    let cli = Cli::new();
    let file = cli.write("pair.json", &u21_pair_file());
    let run = cli.run(&["coop-color", file.to_str().unwrap(), "--json"]);
    let v = path_of(&run);
    let system = cli.write("echoed.json", &v["system"]);
    let again = cli.run(&["coop-color", system.to_str().unwrap(), "--json"]);
    assert_eq!(run.stdout, again.stdout);
    let _ = Path::new("unused");
}
