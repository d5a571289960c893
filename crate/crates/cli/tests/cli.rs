use std::io::Write;
use std::process::{Command, Output, Stdio};

fn winertia(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_winertia"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn winertia");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const TRIANGLE: &str = "a b 1\nb c 1\nc a 1\n";

#[test]
fn inertia_both_methods_agree() {
    let o = winertia(&["inertia", "--method", "both"], TRIANGLE);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("i+=1 i-=2 i0=0").count(), 2, "{text}");
    assert!(text.contains("match"));
}

#[test]
fn inertia_json_output() {
    let o = winertia(
        &["inertia", "--method", "both", "--output", "json"],
        TRIANGLE,
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["structural"],
        serde_json::json!({"pos": 1, "neg": 2, "zero": 0})
    );
    assert_eq!(v["oracle"], v["structural"]);
    assert_eq!(v["match"], true);
}

#[test]
fn classify_reports_base() {
    let o = winertia(&["classify"], TRIANGLE);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("unicyclic"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(winertia(&["inertia"], "a b x\n").status.code(), Some(2));
    assert_eq!(winertia(&["inertia"], "a b 1/0\n").status.code(), Some(2));
    assert_eq!(winertia(&["frobnicate"], "").status.code(), Some(1));
    let o = winertia(&["inertia", "--format", "nope"], TRIANGLE);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error:"));
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let args = [
        "gen", "--class", "bicyclic", "--n", "11", "--seed", "7", "--format", "json",
    ];
    let first = stdout(&winertia(&args, ""));
    assert_eq!(first, stdout(&winertia(&args, "")));
    let o = winertia(
        &[
            "inertia", "--format", "json", "--method", "both", "--output", "json",
        ],
        &first,
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["match"], true);

    let edges = stdout(&winertia(
        &["gen", "--class", "bicyclic", "--n", "11", "--seed", "7"],
        "",
    ));
    let o = winertia(&["inertia", "--method", "both", "--output", "json"], &edges);
    let w: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(w["structural"], v["structural"]);
}

#[test]
fn gen_forced_branch() {
    let g = stdout(&winertia(
        &[
            "gen",
            "--class",
            "bicyclic",
            "--n",
            "10",
            "--seed",
            "1",
            "--branch",
            "theta33:eq",
        ],
        "",
    ));
    let o = winertia(&["inertia", "--method", "both"], &g);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match"));
    assert_eq!(
        winertia(
            &[
                "gen",
                "--class",
                "tree",
                "--n",
                "10",
                "--branch",
                "theta33:eq"
            ],
            ""
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn verify_summary() {
    let o = winertia(
        &[
            "verify", "--class", "bicyclic", "--count", "30", "--seed", "4", "--output", "json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total"], 30);
    assert_eq!(v["matched"], 30);
}

#[test]
fn table1_reproduces() {
    let o = winertia(&["table1", "--seed", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("29/29"), "{}", stdout(&o));
}

#[test]
fn reduce_prints_steps() {
    let o = winertia(&["reduce"], "a b 1\nb c 2\nc d 3\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pendant-pair"), "{}", stdout(&o));
}
