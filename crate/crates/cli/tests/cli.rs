use std::process::Command;

fn framix(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_framix"))
        .args(args)
        .env_remove(framix_cli::CATALOG_ENV)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn jones_of_the_trefoil() {
    let (code, out, _) = framix(&["invariant", "--kind", "jones", "--braid", "B2 s1 s1 s1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "q^2 + q^6 - q^8\n");
}

#[test]
fn link_names_and_latex() {
    let (code, out, _) = framix(&["invariant", "--kind", "homflypt", "--link", "3_1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "s^2*q^-2 + s^2*q^2 - s^4\n");
    let (_, out, _) = framix(&["invariant", "--link", "L2a1{1}", "--output", "latex"]);
    assert!(out.starts_with("\\frac{"), "{out}");
}

#[test]
fn esystem_listing() {
    let (code, out, _) = framix(&["esystem", "--d", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 15);
    assert!(out.contains("D={0,2} x=(1, 0, 1, 0) E=1/2\n"));
}

#[test]
fn ftl_suite_passes() {
    let (code, out, _) = framix(&["verify", "--suite", "ftl", "--d", "2"]);
    assert_eq!(code, 0);
    let checks: Vec<&str> = out.lines().filter(|l| l.starts_with("CHECK ")).collect();
    assert_eq!(checks.len(), 8);
    assert!(checks.iter().all(|l| l.split(' ').nth(2) == Some("PASS")));
    assert!(out.ends_with("SUMMARY 8 checks, 0 failed\n"));
}

#[test]
fn reports_repeat_for_a_seed() {
    let args = [
        "verify",
        "--suite",
        "skein",
        "--d",
        "2",
        "--n",
        "3",
        "--samples",
        "5",
        "--seed",
        "11",
    ];
    let (c1, a, _) = framix(&args);
    let (c2, b, _) = framix(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn failing_checks_exit_with_one() {
    let dir = std::env::temp_dir().join(format!("framix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.catalog");
    std::fs::write(&path, "hopf|2|1 1||homflypt=1\n").unwrap();
    let (code, out, _) = framix(&[
        "verify",
        "--suite",
        "catalog",
        "--d",
        "1",
        "--catalog",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("CHECK catalog.fixture[hopf] FAIL"), "{out}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["invariant", "--braid", "B2 s1", "--link", "3_1"],
        vec!["invariant", "--kind", "jones"],
        vec!["invariant", "--braid", "B2 s3"],
        vec!["invariant", "--link", "no_such_link"],
        vec![
            "invariant",
            "--kind",
            "theta_d",
            "--d",
            "2",
            "--subset",
            "5",
            "--braid",
            "s1",
        ],
        vec!["verify", "--suite", "nope"],
        vec!["esystem"],
    ] {
        let (code, _, err) = framix(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn catalog_from_the_environment() {
    let dir = std::env::temp_dir().join(format!("framix-env-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tiny.catalog");
    std::fs::write(&path, "hopf|2|1 1|\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_framix"))
        .args(["catalog"])
        .env(framix_cli::CATALOG_ENV, &path)
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "hopf components=2 B2 s1 s1\n"
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn compare_a_link_with_itself() {
    let (code, out, _) = framix(&[
        "compare", "L2a1{1}", "L2a1{1}", "--kind", "theta_d", "--d", "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "0\n");
}
