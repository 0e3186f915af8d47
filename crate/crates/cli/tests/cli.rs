use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const FOUR_CHORD: &str = "O1- U2+ O3- U4+ U1- O2+ U3- O4+";

fn vknot(args: &[&str]) -> Output {
    run_with_stdin(args, None)
}

fn run_with_stdin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vknot"))
        .args(args)
        .env_remove("VKNOT_SEED")
        .env_remove("VKNOT_FORMAT")
        .env_remove("VKNOT_COUNT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn compute_inline_codes() {
    let o = vknot(&["compute", "--code", "O1+ U2+ U1+ O2+", "--code", FOUR_CHORD]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_lines(&o);
    assert_eq!(r[0]["v1"], serde_json::json!({"0": 1}));
    assert_eq!(r[1]["v1"], serde_json::json!({"3": -1, "1": -2}));
    assert_eq!(r[1]["v2"], serde_json::json!({"1": -1}));
}

#[test]
fn compute_file_keeps_order_and_warns_on_blank_lines() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    let mut text = String::from("# corpus\n");
    let codes: Vec<String> = (0..300).map(|i| match i % 3 {
        0 => FOUR_CHORD.to_string(),
        1 => "O1+ U2+ O3+ U1+ O2+ U3+".to_string(),
        _ => "-".to_string(),
    }).collect();
    for (i, c) in codes.iter().enumerate() {
        text.push_str(c);
        text.push('\n');
        if i == 10 {
            text.push('\n');
        }
    }
    f.write_all(text.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    let serial = vknot(&["compute", path]);
    let parallel = vknot(&["compute", "--jobs", "4", path]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(stdout(&serial), stdout(&parallel));
    assert!(stderr(&serial).contains(":13: warning: blank line skipped"), "{}", stderr(&serial));
    let r = json_lines(&serial);
    assert_eq!(r.len(), 300);
    for (row, code) in r.iter().zip(&codes) {
        let want = if code == "-" { "" } else { code.as_str() };
        assert_eq!(row["gauss_code"], want);
    }
}

#[test]
fn compute_reads_stdin() {
    let o = run_with_stdin(&["compute", "--format", "text"], Some("O1+ U2+ U1+ O2+\n"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("O1+ U2+ U1+ O2+\tn=2\tv1=1\t"), "{}", stdout(&o));
}

#[test]
fn parse_errors_report_line_and_column() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "O1+ U1+\nO1+ U2+ U1+ Q2+").unwrap();
    let path = f.path().to_str().unwrap();
    let o = vknot(&["compute", path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(&format!("{path}:2:13:")), "{}", stderr(&o));
    assert_eq!(json_lines(&o).len(), 1);
}

#[test]
fn realize_outputs() {
    let o = vknot(&["--format", "text", "realize", "0", "0"]);
    assert_eq!(stdout(&o), "\n");
    let o = vknot(&["--format", "text", "realize", "t^3", "0"]);
    assert_eq!(stdout(&o), "O1+ U2+ O3- O4- O5- U1+ U3- U4- U5- O2+\n");
    let o = vknot(&["realize", "-t^3-2*t", "-t", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let code = json_lines(&o)[0]["gauss_code"].as_str().unwrap().to_string();
    let back = vknot(&["compute", "--code", &code]);
    let r = &json_lines(&back)[0];
    assert_eq!(r["v1"], serde_json::json!({"3": -1, "1": -2}));
    assert_eq!(r["v2"], serde_json::json!({"1": -1}));
    let o = vknot(&["realize", "t^^2", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn delta_bound_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    let k7 = path("k7", "O1- U2+ U1- O2+\n");
    let o = vknot(&["delta-bound", &k7, &k7]);
    assert_eq!(stdout(&o), "{\"difference\":{},\"lower_bound\":0,\"obstruction\":false}\n");

    let k2 = path("k2", "O1+ U2+ O3- O4- U1+ U3- U4- O2+\n");
    let kp2 = path("kp2", "# K'(2)\nO1+ U2- O3- O4- U1+ U3- U4- O2-\n");
    let o = vknot(&["delta-bound", &k2, &kp2]);
    assert_eq!(json_lines(&o)[0]["obstruction"], true);
    assert_eq!(json_lines(&o)[0]["lower_bound"], Value::Null);

    let realized = |f: &str, g: &str| {
        let o = vknot(&["--format", "text", "realize", f, g]);
        stdout(&o).trim().to_string()
    };
    let a = path("a", &(realized("2*t+1+t^2", "t^2") + "\n"));
    let b = path("b", &(realized("t^2", "t^2-2*t-1") + "\n"));
    let o = vknot(&["delta-bound", &a, &b]);
    assert_eq!(json_lines(&o)[0]["lower_bound"], 3);

    let two = path("two", "O1+ U1+\nO1- U1-\n");
    assert_eq!(vknot(&["delta-bound", &two, &k7]).status.code(), Some(1));
}

#[test]
fn enumerate_counts_and_cap() {
    let o = vknot(&["--format", "text", "enumerate", "--max-chords", "2"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 4 + 48);
    assert_eq!(stdout(&o).lines().next(), Some("-"));
    let o = vknot(&["enumerate", "--max-chords", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
}

#[test]
fn random_is_seeded() {
    let a = vknot(&["random", "--count", "20", "--seed", "5"]);
    let b = Command::new(env!("CARGO_BIN_EXE_vknot"))
        .args(["random", "--count", "20"])
        .env("VKNOT_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(json_lines(&a).len(), 20);
    let c = vknot(&["random", "--count", "20", "--seed", "6"]);
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn verify_suites_pass() {
    for suite in ["invariance", "symmetry", "additivity", "finite-type", "delta", "welded"] {
        let o = vknot(&["verify", suite, "--count", "200", "--seed", "7", "--jobs", "2"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        let r = &json_lines(&o)[0];
        assert_eq!(r["cases"], 200);
        assert_eq!(r["failures"], serde_json::json!([]));
    }
    let a = vknot(&["verify", "invariance", "--count", "100", "--jobs", "1"]);
    let b = vknot(&["verify", "invariance", "--count", "100", "--jobs", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(vknot(&["verify", "nonsense"]).status.code(), Some(1));
}

#[test]
fn replay_transcripts() {
    let good = "0\tstart\t-\tO1+ U1+\n\
                1\tR2Insert\tgaps=0/2,overs_first=1,parallel=0,sign=-\tO1- O2+ O3+ U3+ U2+ U1-\n\
                2\tDelta\tskip\tO1- O2+ O3+ U3+ U2+ U1-\n";
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(good.as_bytes()).unwrap();
    let o = vknot(&["replay", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json_lines(&o)[0]["steps"], 2);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    bad.write_all(good.replacen("O1- O2+ O3+ U3+ U2+ U1-\n", "O1+ U1+\n", 1).as_bytes()).unwrap();
    assert_eq!(vknot(&["replay", bad.path().to_str().unwrap()]).status.code(), Some(2));

    let mut junk = tempfile::NamedTempFile::new().unwrap();
    junk.write_all(b"not a transcript\n").unwrap();
    assert_eq!(vknot(&["replay", junk.path().to_str().unwrap()]).status.code(), Some(1));
}
