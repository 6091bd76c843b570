use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidnil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn dimension_table() {
    let t = stdout(&["table", "--nmax", "6", "--kmax", "5", "--pretty"]);
    let rows: Vec<&str> = t.lines().collect();
    assert_eq!(rows.len(), 5);
    assert!(rows[4]
        .split_whitespace()
        .eq(["5", "9", "41", "131", "336"]));
    let json = stdout(&["table", "--nmax", "3", "--kmax", "2"]);
    assert_eq!(json, r#"{"rows":[{"dim":3,"k":2,"n":3}]}"#);
}

#[test]
fn order_of_b1_delta5() {
    assert_eq!(
        stdout(&["order", "--n", "5", "a[1,2,4] (s4 s3 s2^-1 s1^-1)"]),
        "5"
    );
    assert_eq!(
        stdout(&["order", "--n", "5", "s4 s3 s2^-1 s1^-1"]),
        "infinite"
    );
}

#[test]
fn full_twist_suite() {
    assert_eq!(code(&["verify", "--suite", "fulltwist", "--n", "5"]), 0);
    let v = stdout(&["verify", "--suite", "fulltwist", "--n", "5", "--pretty"]);
    assert!(v.starts_with("pass"), "{v}");
}

#[test]
fn suites_pass() {
    for suite in ["pn3", "bn3"] {
        assert_eq!(
            code(&["verify", "--suite", suite, "--n", "4"]),
            0,
            "{suite}"
        );
    }
    assert_eq!(code(&["verify", "--suite", "b3"]), 0);
    assert_eq!(
        code(&["verify", "--suite", "b3", "--subgroup", "order3"]),
        0
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["collect", "--n", "3", "s1 ) s2"]), 2);
    assert_eq!(code(&["collect", "--n", "3", "{\"n\":3,"]), 2);
    assert_eq!(code(&["collect", "s1"]), 2);
    assert_eq!(code(&["collect", "--n", "3", "s3"]), 3);
    assert_eq!(code(&["delta-pow", "--n", "6"]), 3);
    assert_eq!(code(&["conjugacy", "--n", "5", "s1", "s2"]), 3);
    let err = String::from_utf8(run(&["collect", "--n", "3", "s1 ?"]).stderr).unwrap();
    assert!(err.contains("byte 3"), "{err}");
}

#[test]
fn json_round_trip_through_cli() {
    let x = stdout(&["collect", "--n", "4", "s3 S1 A[2,4]^3 a[1,3,4]^-2"]);
    assert_eq!(stdout(&["collect", &x]), x);
    let text = stdout(&["collect", &x, "--pretty"]);
    assert_eq!(stdout(&["collect", "--n", "4", &text]), x);
    let inv = stdout(&["inv", &x]);
    let one = stdout(&["mul", &x, &inv, "--pretty"]);
    assert_eq!(one, "()");
}

#[test]
fn delta_power_and_orbits() {
    let p = stdout(&["collect", "--n", "5", "--pretty", "(s4 s3 s2^-1 s1^-1)^5"]);
    assert_eq!(
        p,
        "a[1,2,4]^-1 a[1,3,4]^-1 a[1,3,5]^-1 a[2,3,5]^-1 a[2,4,5]^-1"
    );
    let d = stdout(&["delta-pow", "--n", "5"]);
    assert!(d.starts_with(r#"{"m":[0,-1],"n":5,"#), "{d}");
    let o = stdout(&["orbits", "--n", "5", "--pretty"]);
    assert_eq!(o.lines().count(), 2);
    assert!(o.lines().all(|l| l.contains("(5)")));
}

#[test]
fn torsion_and_conjugacy() {
    assert_eq!(
        stdout(&["torsion", "--n", "12", "--spectrum"]),
        r#"{"n":12,"spectrum":[5,7,11,35]}"#
    );
    let x = stdout(&["torsion", "--n", "12", "--cycle-type", "5,7"]);
    assert_eq!(stdout(&["order", &x]), "35");
    let r = stdout(&[
        "torsion",
        "--residues",
        r#"{"n":5,"residues":[[0,0,0,0,0],[1,0,0,0,0]]}"#,
    ]);
    assert_eq!(stdout(&["order", &r]), "5");
    let a = "a[1,2,4] (s4 s3 s2^-1 s1^-1)";
    let b = stdout(&["conj", "--n", "5", "s2 A[1,3]", a]);
    let w = stdout(&["conjugacy", "--n", "5", "--witness", a, &b]);
    assert!(
        w.starts_with(r#"{"conjugate":true,"in_proven_range":true,"witness":{"#),
        "{w}"
    );
}

#[test]
fn holonomy_matrices() {
    let h = stdout(&["holonomy", "--n", "3", "--b3-basis", "s2 s1"]);
    assert!(h.contains(r#""block1":[[0,0,1],[1,0,0],[0,1,0]]"#), "{h}");
    assert!(h.contains(r#""det":1"#));
    assert_eq!(code(&["holonomy", "--n", "4", "--b3-basis", "s1"]), 2);
}

#[test]
fn deterministic_output() {
    let args = ["verify", "--suite", "bn3", "--n", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = [
        "conjugacy",
        "--n",
        "7",
        "--witness",
        "a[1,2,3] (s6 s5 s4 s3^-1 s2^-1 s1^-1)",
        "s1 a[1,2,3] (s6 s5 s4 s3^-1 s2^-1 s1^-1) S1",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
