use std::process::{Command, Output};

fn binmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binmat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cat_prints_bmx() {
    let o = binmat(&["cat", "S10"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "bmx 1\n4 10\n1000011111\n0100101110\n0010110100\n0001111101\n");
}

#[test]
fn lambda_by_name_and_file() {
    let o = binmat(&["lambda", "P9", "1,2,5,6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("2"));
    assert!(out.contains("exact 3-separation, non-minimal"));

    let small = binmat(&["lambda", "P9", "1,2"]);
    assert!(small.status.success());
    assert!(stdout(&small).lines().nth(1).unwrap().starts_with("no "));

    let dir = std::env::temp_dir().join(format!("binmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f7.bmx");
    std::fs::write(&path, stdout(&binmat(&["cat", "F7"]))).unwrap();
    let o = binmat(&["lambda", path.to_str().unwrap(), "1,2,6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("2"));
}

#[test]
fn exts_and_exclusion() {
    let o = binmat(&["exts", "F7*"]);
    assert!(stdout(&o).starts_with("2 classes\n"));
    let o = binmat(&["exts", "E4", "--co", "--exclude", "S10,S10*"]);
    let out = stdout(&o);
    assert!(out.starts_with("4 classes\n"));
    assert!(out.contains("[01010]"));
}

#[test]
fn minor_splitter_decomposer() {
    assert!(stdout(&binmat(&["minor", "S10", "P9"])).starts_with("yes"));
    assert_eq!(stdout(&binmat(&["minor", "P9", "S10"])), "no\n");
    assert!(stdout(&binmat(&["splitter", "E5", "--exclude", "S10,S10*"])).starts_with("splitter: true"));
    let o = binmat(&["decomposer", "S8", "--sep", "1,2,5,6", "--k", "3", "--exclude", "P9,P9*"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("overall: induced\n"));
    let o = binmat(&[
        "decomposer", "E4", "--sep", "1,2,5,6,7,10", "--sep2", "1,2,3,4,8,9", "--k", "3",
        "--exclude", "S10,S10*", "--exempt", "T12/e,T12\\e",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("overall: induced-one-of-two\n"));
}

#[test]
fn verify_paper_exit_codes() {
    let o = binmat(&["verify-paper", "--claim", "claim3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("claim3.e5-splitter"));
    let strict = binmat(&["verify-paper", "--strict"]);
    assert_eq!(strict.status.code(), Some(1));
    let json = binmat(&["--threads", "2", "verify-paper", "--json"]);
    assert_eq!(json.status.code(), Some(0));
    assert_eq!(stdout(&json), stdout(&binmat(&["verify-paper", "--json", "--threads", "1"])));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(binmat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(binmat(&["cat", "R10"]).status.code(), Some(2));
    assert_eq!(binmat(&["lambda", "P9", "1,x"]).status.code(), Some(2));
    assert_eq!(binmat(&["verify-paper", "--claim", "nope"]).status.code(), Some(2));
    assert_eq!(binmat(&["--help"]).status.code(), Some(0));
}
