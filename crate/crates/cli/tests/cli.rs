use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bdtw(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bdtw"))
        .args(args)
        .env_remove("BDTW_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn dtw_examples() {
    for (input, expected) in [
        ("00101100101\n0001100111\n", "2\n"),
        ("0\n0\n", "0\n"),
        ("000\n111\n", "3\n"),
    ] {
        let out = bdtw(&["dtw", "-", "--verify"], input);
        assert!(out.status.success());
        assert_eq!(stdout(&out), expected);
    }
}

#[test]
fn dtw_path_is_printed() {
    let out = bdtw(&["dtw", "-", "--path"], "01\n0011\n");
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("0"));
    assert_eq!(lines.next(), Some("1,1 1,2 2,3 2,4"));
}

#[test]
fn dtw_needs_two_strings() {
    let out = bdtw(&["dtw", "-"], "010\n");
    assert_eq!(out.status.code(), Some(2));
    let out = bdtw(&["dtw", "-"], "010\n012\n");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mean_examples() {
    let out = bdtw(&["mean", "-"], "000\n111\n");
    assert!(stdout(&out).starts_with(r#"{"optima":["01","10"],"objective":2,"landscape":["#));

    let out = bdtw(&["mean", "-", "--threshold", "1"], "000\n111\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).ends_with("NO\n"));

    let out = bdtw(&["mean", "-", "--threshold", "2"], "000\n111\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("YES\n"));

    let out = bdtw(&["mean", "-"], "0\n0\n0\n101\n101\n010\n010\n");
    assert!(stdout(&out).starts_with(r#"{"optima":["0"],"objective":6,"#));
}

#[test]
fn mean_center_and_weights() {
    let out = bdtw(&["mean", "-", "--objective", "max"], "000\n111\n");
    assert!(
        stdout(&out).contains(r#""objective":1"#),
        "{}",
        stdout(&out)
    );

    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    std::fs::write(&w, "1/2\n1/3\n").unwrap();
    let out = bdtw(
        &["mean", "-", "--weights", w.to_str().unwrap()],
        "000\n111\n",
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("objective_exact"));

    std::fs::write(&w, "1\n").unwrap();
    let out = bdtw(
        &["mean", "-", "--weights", w.to_str().unwrap()],
        "000\n111\n",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mean_exhaustive_guard() {
    let out = bdtw(&["mean", "-", "--algo", "exhaustive"], "01010101010101\n");
    assert_eq!(out.status.code(), Some(2));
    let out = bdtw(&["mean", "-", "--algo", "exhaustive"], "0101010101010\n");
    assert!(out.status.success());
}

#[test]
fn mss_examples() {
    assert_eq!(
        stdout(&bdtw(&["mss", "--values", "1,1,2,2,1,1", "--r", "2"], "")),
        "2\n"
    );
    assert_eq!(
        stdout(&bdtw(&["mss", "--values", "9", "--r", "1"], "")),
        "9\n"
    );
    let out = bdtw(&["mss", "--values", "3,1", "--r", "2"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("infeasible"));
}

#[test]
fn gen_examples() {
    let out = stdout(&bdtw(
        &[
            "gen",
            "--n",
            "5",
            "--sparsity",
            "1",
            "--k",
            "1",
            "--seed",
            "7",
        ],
        "",
    ));
    assert!(out == "01010\n" || out == "10101\n");

    let out = stdout(&bdtw(
        &[
            "gen",
            "--n",
            "5",
            "--sparsity",
            "0",
            "--k",
            "2",
            "--seed",
            "7",
        ],
        "",
    ));
    for line in out.lines() {
        assert!(line == "00000" || line == "11111");
    }
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn gen_seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_bdtw"))
            .args(["gen", "--n", "30", "--sparsity", "0.5", "--k", "3"])
            .env("BDTW_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    let flag = bdtw(
        &[
            "gen",
            "--n",
            "30",
            "--sparsity",
            "0.5",
            "--k",
            "3",
            "--seed",
            "99",
        ],
        "",
    );
    assert_eq!(run("99"), flag.stdout);
    assert_ne!(run("98"), flag.stdout);
}

#[test]
fn bench_rows() {
    let out = bdtw(
        &[
            "bench",
            "--k",
            "3",
            "--n",
            "50",
            "--sparsity",
            "0.5",
            "--seeds",
            "5",
            "--repetitions",
            "1",
        ],
        "",
    );
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("algorithm,k,n,sparsity,wall_time,objective")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows.iter().filter(|r| r[0] == "baseline").count(), 5);
    for pair in rows.chunks(2) {
        assert_eq!(pair[0][5], pair[1][5]);
    }
}

#[test]
fn bench_fast_only_beyond_cap() {
    let out = bdtw(
        &[
            "bench",
            "--n",
            "10000",
            "--algos",
            "fast",
            "--repetitions",
            "1",
        ],
        "",
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = bdtw(&["bench", "--n", "10000"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn struct_alternating_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let tables = dir.path().join("tables.txt");
    let out = bdtw(
        &[
            "struct",
            "--sparsity",
            "1.0",
            "--k",
            "5",
            "--runs",
            "10",
            "--n",
            "100",
            "--tables",
            tables.to_str().unwrap(),
        ],
        "",
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with(
        "sparsity,k,median_condensed_length,mean_length,length_diff,\
         first_symbol_match_majority,first_symbol_match_blocksum\n"
    ));
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    for row in rows {
        let diff: i64 = row.split(',').nth(4).unwrap().parse().unwrap();
        assert!((-2..=1).contains(&diff));
    }
    assert!(std::fs::read_to_string(&tables)
        .unwrap()
        .contains("majority"));
}

#[test]
fn struct_single_string() {
    let out = bdtw(
        &[
            "struct",
            "--sparsity",
            "0.3",
            "--k",
            "1",
            "--runs",
            "1",
            "--n",
            "50",
        ],
        "",
    );
    let text = stdout(&out);
    let row: Vec<_> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[2], row[3]);
    assert_eq!(&row[4..], ["0", "true", "true"]);
}

#[test]
fn ingest_sensor_log() {
    let log = "timestamp,sensor,value\n\
               0,D002,OPEN\n\
               1500,D002,CLOSE\n\
               2200,M001,ON\n\
               4100,M001,OFF\n";
    let out = bdtw(
        &["ingest", "-", "--interval", "1s", "--span", "0:5000"],
        log,
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out), "# D002\n10000\n# M001\n00110\n");

    let out = bdtw(
        &[
            "ingest",
            "-",
            "--interval",
            "1000",
            "--span",
            "0:5000",
            "--mode",
            "event-in-interval",
            "--sensor",
            "M001",
        ],
        log,
    );
    assert_eq!(stdout(&out), "# M001\n00101\n");

    let out = bdtw(&["ingest", "-", "--interval", "1s", "--sensor", "X9"], log);
    assert_eq!(out.status.code(), Some(2));
}
