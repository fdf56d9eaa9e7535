use std::process::{Command, Output};

fn weakorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weakorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = weakorder(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn status_of(args: &[&str]) -> Option<i32> {
    weakorder(args).status.code()
}

#[test]
fn products() {
    assert_eq!(
        stdout_of(&["product", "--family", "cube", "--op", "star", "+", "-"]),
        "1 +--\n1 ++-\n"
    );
    assert_eq!(
        stdout_of(&["product", "--family", "perm", "--op", "over", "2 1", "1"]),
        "2 1 3\n"
    );
    assert_eq!(
        stdout_of(&["product", "--family", "perm", "--op", "under", "2 1", "1"]),
        "3 2 1\n"
    );
    assert_eq!(
        stdout_of(&["product", "--family", "tree", "--op", "star", "(|,|)", "(|,|)"]),
        "1 ((|,|),|)\n1 (|,(|,|))\n"
    );
    assert_eq!(
        stdout_of(&["product", "--family", "perm", "--op", "star", "1", "1"]),
        "1 1 2\n1 2 1\n"
    );
    assert_eq!(
        stdout_of(&["product", "--family", "perm", "--op", "prec", "1", "1"]),
        "1 2 1\n"
    );
    assert_eq!(
        stdout_of(&["product", "--family", "perm", "--op", "succ", "1", "1"]),
        "1 1 2\n"
    );
    assert_eq!(
        stdout_of(&["product", "--family", "cube", "--op", "over", "-", "()"]),
        "-\n"
    );
}

#[test]
fn maps() {
    assert_eq!(
        stdout_of(&["map", "--which", "psi", "3 4 1 6 2 5"]),
        "(((|,|),(|,|)),((|,|),|))\n"
    );
    assert_eq!(stdout_of(&["map", "--which", "phi", "((|,|),|)"]), "-\n");
    assert_eq!(stdout_of(&["map", "--which", "phi", "(|,(|,|))"]), "+\n");
    assert_eq!(
        stdout_of(&["map", "--which", "minperm", "((|,|),|)"]),
        "1 2\n"
    );
    assert_eq!(
        stdout_of(&["map", "--which", "maxperm", "((|,|),(|,|))"]),
        "2 3 1\n"
    );
    assert_eq!(
        stdout_of(&["map", "--which", "mintree", "-"]),
        "((|,|),|)\n"
    );
    assert_eq!(
        stdout_of(&["map", "--which", "maxtree", "+"]),
        "(|,(|,|))\n"
    );
    assert_eq!(
        stdout_of(&["map", "--which", "psistar", "((|,|),(|,|))"]),
        "1 1 3 2\n1 2 3 1\n"
    );
}

#[test]
fn intervals_and_fibers() {
    assert_eq!(
        stdout_of(&["interval", "--family", "perm", "2 1 3", "3 2 1"]),
        "2 1 3\n3 1 2\n3 2 1\n"
    );
    assert_eq!(
        stdout_of(&["interval", "--family", "cube", "--", "--+", "+++"]),
        "--+\n-++\n+-+\n+++\n"
    );
    assert_eq!(
        stdout_of(&["interval", "--family", "cube", "-+", "++"]),
        "-+\n++\n"
    );
    assert_eq!(
        stdout_of(&["fiber", "--which", "psi", "((|,|),(|,|))"]),
        "1 3 2\n2 3 1\n"
    );
    assert_eq!(stdout_of(&["fiber", "--which", "phi", "-"]), "((|,|),|)\n");
}

#[test]
fn hasse_is_deterministic_dot() {
    let a = stdout_of(&["hasse", "--family", "perm", "--n", "3"]);
    let b = stdout_of(&["hasse", "--family", "perm", "--n", "3", "--format", "dot"]);
    assert_eq!(a, b);
    assert!(a.starts_with("digraph S3 {"));
    assert_eq!(a.matches("->").count(), 6);
    assert_eq!(
        stdout_of(&["hasse", "--family", "cube", "--n", "3"])
            .matches("->")
            .count(),
        4
    );
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        status_of(&["verify", "--suite", "thm4.1", "--max-degree", "6"]),
        Some(0)
    );
    assert_eq!(
        status_of(&["verify", "--suite", "thm6.1", "--max-degree", "8"]),
        Some(0)
    );
    assert_eq!(
        status_of(&["verify", "--suite", "lemmas", "--max-degree", "4"]),
        Some(0)
    );
    assert_eq!(status_of(&["verify", "--suite", "nosuch"]), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        status_of(&["product", "--family", "perm", "--op", "star", "1 1", "1"]),
        Some(2)
    );
    assert_eq!(
        status_of(&["product", "--family", "perm", "--op", "prec", "", "1"]),
        Some(2)
    );
    assert_eq!(
        status_of(&["product", "--family", "cube", "--op", "prec", "+", "-"]),
        Some(2)
    );
    assert_eq!(
        status_of(&["product", "--family", "tree", "--op", "star", "(|,", "|"]),
        Some(2)
    );
    assert_eq!(status_of(&["map", "--which", "minperm", "|"]), Some(2));
    assert_eq!(
        status_of(&["interval", "--family", "perm", "1 2", "2 1 3"]),
        Some(2)
    );
    assert_eq!(status_of(&["frobnicate"]), Some(2));
    assert_eq!(status_of(&["hasse", "--family", "perm"]), Some(2));
}
