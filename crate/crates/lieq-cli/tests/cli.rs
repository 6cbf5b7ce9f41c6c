//! End-to-end tests that drive the compiled `lieq` binary and check its
//! stdout, stderr, and exit codes against frozen expectations.

use std::process::{Command, Output};

fn lieq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieq"))
        .args(args)
        .output()
        .expect("failed to launch the lieq binary")
}

/// Runs the binary, asserts success, and returns stdout as a string.
fn stdout_of(args: &[&str]) -> String {
    let out = lieq(args);
    assert!(
        out.status.success(),
        "command {args:?} exited with {:?}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr),
    );
    String::from_utf8(out.stdout).expect("stdout was not UTF-8")
}

fn exit_code(args: &[&str]) -> i32 {
    lieq(args).status.code().expect("process was killed by a signal")
}

#[test]
fn filtration_tables_match_the_golden_files() {
    let cases = [
        ("G2", include_str!("golden/filtration_g2.txt")),
        ("F4", include_str!("golden/filtration_f4.txt")),
        ("E8", include_str!("golden/filtration_e8.txt")),
    ];
    for (name, golden) in cases {
        assert_eq!(
            stdout_of(&["filtration-table", name]),
            golden,
            "filtration table for {name} drifted from the golden file"
        );
    }
}

#[test]
fn half_integral_sets_print_the_expected_weights() {
    let cases = [
        ("G2", "0\n"),
        ("E7", "0, 1/2*w7\n"),
        ("B3", "0, 1/2*w1\n"),
        ("C3", "0, 1/2*w3\n"),
        ("D4", "0, 1/2*w4, 1/2*w2, 1/2*w1\n"),
    ];
    for (name, expected) in cases {
        assert_eq!(stdout_of(&["half-integral", name]), expected, "set for {name}");
    }
}

#[test]
fn extraneous_table_lists_the_sp6_triple_orbit_point() {
    let out = stdout_of(&["extraneous", "C", "3", "2,2,2"]);
    assert!(out.contains("(0, 1/2, 1)"), "missing ambient coordinates: {out}");
    assert!(out.contains("1/2*w2 + 1/2*w3"), "missing weight combination: {out}");
    assert!(out.contains("O(3)"), "missing centralizer type: {out}");
}

#[test]
fn region_counts_match_the_product_formula_and_brute_force() {
    assert!(stdout_of(&["regions", "E8"]).contains("25080"));
    assert!(stdout_of(&["regions", "F4"]).contains("105"));
    assert_eq!(
        stdout_of(&["regions", "G2", "--brute-force"]),
        "regions(G2) = 8\nbrute force = 8\nagree = true\n"
    );
}

#[test]
fn roots_report_shows_the_highest_coroot_decomposition() {
    let out = stdout_of(&["roots", "G2"]);
    assert!(out.contains("3*a1v + 2*a2v"), "missing coroot combination: {out}");
    assert!(out.contains("highest coroot level: 5"), "missing level: {out}");
}

#[test]
fn json_output_parses_and_round_trips() {
    let commands: [&[&str]; 7] = [
        &["--format", "json", "roots", "A2"],
        &["--format", "json", "orbits", "G2"],
        &["--format", "json", "half-integral", "D4"],
        &["--format", "json", "extraneous", "C", "3", "2,2,2"],
        &["--format", "json", "fold", "A4", "2"],
        &["--format", "json", "regions", "G2", "--brute-force"],
        &["--format", "json", "azs-table"],
    ];
    for args in commands {
        let text = stdout_of(args);
        let value: serde_json::Value =
            serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: bad JSON: {e}"));
        let reparsed: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, reparsed, "round trip for {args:?}");
        assert!(!value.is_null(), "null payload for {args:?}");
    }

    let roots: serde_json::Value =
        serde_json::from_str(&stdout_of(&["--format", "json", "roots", "A2"])).unwrap();
    assert_eq!(roots["coxeter_number"], 3);

    let half: serde_json::Value =
        serde_json::from_str(&stdout_of(&["--format", "json", "half-integral", "D4"])).unwrap();
    assert_eq!(half["points"].as_array().unwrap().len(), 4);
}

#[test]
fn exit_codes_follow_the_contract() {
    // Domain errors: recognized command, invalid mathematical input.
    let bad_type = lieq(&["roots", "Z9"]);
    assert_eq!(bad_type.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_type.stderr).starts_with("error:"));

    assert_eq!(exit_code(&["extraneous", "C", "3", "9,9"]), 2);
    assert_eq!(exit_code(&["central-point", "G2", "B7"]), 2);
    assert_eq!(exit_code(&["orbit-from-pattern", "D4", "8,0,5,0,4,0,1", "--halfspin-top", "3"]), 2);

    // Usage errors: the command line itself is malformed.
    assert_eq!(exit_code(&["frobnicate"]), 1);
    assert_eq!(exit_code(&["weight-pattern", "E8", "adjoint"]), 1);
    assert_eq!(exit_code(&["cs-4a1"]), 1);

    // Help and version are not errors.
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
}

#[test]
fn property_a_checks_from_file_and_random_sampling() {
    let path = std::env::temp_dir().join(format!("lieq-cli-test-{}.tsv", std::process::id()));
    std::fs::write(&path, "i\tk\ta\n0\t1\t1\n").unwrap();
    let out = stdout_of(&[&["check-property-a"][..], &[path.to_str().unwrap()]].concat());
    assert!(out.contains("symmetric: false"), "{out}");
    assert!(out.contains("truncation@1"), "{out}");

    std::fs::write(&path, "i\tk\ta\nnot a number\n").unwrap();
    assert_eq!(exit_code(&["check-property-a", path.to_str().unwrap()]), 2);
    std::fs::remove_file(&path).ok();

    let random = stdout_of(&["--seed", "7", "check-property-a", "--random", "100"]);
    assert!(random.contains("instances: 100"), "{random}");
    assert!(random.contains("seed: 7"), "{random}");
    assert!(random.contains("violation: 0"), "{random}");
}

#[test]
fn azs_table_contains_the_seven_exceptional_rows() {
    let out = stdout_of(&["--format", "tsv", "azs-table"]);
    let expected = [
        "F4\tB3\tadjoint\t8\t2\t1",
        "F4\tA1+Ã1\tadjoint\t4\t1\t0",
        "E7\tD5(a1)+A1\tadjoint\t9\t1\t0",
        "E8\tD6\tadjoint\t16\t2\t1",
        "E8\tA6\tadjoint\t13\t1\t0",
        "E8\tA4+A2\tadjoint\t9\t1\t0",
        "E8\tA2+2A1\tadjoint\t5\t1\t0",
        "C3\t(2,2,2)\tstandard\t2\t1\t0",
    ];
    for line in expected {
        assert!(out.lines().any(|l| l == line), "missing row {line:?} in:\n{out}");
    }
    assert_eq!(out.lines().next(), Some("type\torbit\trep\ti0\tn_v\tn_u"));
}

#[test]
fn quarter_grid_scan_and_witness_for_the_extra_region() {
    assert_eq!(
        stdout_of(&["cs-4a1", "--witness"]),
        "witness (2/5, 21/50, 11/20, 59/100): base member = true, extra member = true\n"
    );
    assert!(stdout_of(&["cs-4a1", "--scan"]).contains("0 extra-region members"));
    assert_eq!(
        stdout_of(&["cs-4a1", "1/4,1/4,1/4,1/4"]),
        "(1/4, 1/4, 1/4, 1/4): base member = true, extra member = false\n"
    );
}

#[test]
fn folding_reductions_trace_their_eliminations() {
    assert_eq!(
        stdout_of(&["fold", "A5", "2"]),
        "fold: (A5, 2) -> B3\n\
         candidates: 0, 1/2*w1\n\
         trace:\n\
         \x20\x201/2*w1 | standard | eliminated\n\
         surviving: 0\n"
    );
    let a4 = stdout_of(&["fold", "A4", "2"]);
    assert!(a4.contains("-> C2"), "{a4}");
    assert!(a4.contains("rep-not-available"), "{a4}");
    assert!(a4.contains("surviving: 0, 1/2*w2"), "{a4}");
}

#[test]
fn pattern_and_orbit_commands_cover_the_triality_tie() {
    let resolved = stdout_of(&["orbit-from-pattern", "D4", "8,0,5,0,4,0,1", "--halfspin-top", "4"]);
    assert!(resolved.contains("(4,4) (I)"), "{resolved}");

    let trivial = stdout_of(&["orbit-from-pattern", "G2", "14"]);
    assert!(trivial.contains("G2/1"), "{trivial}");

    let central = stdout_of(&["central-point", "D4", "4,4", "--tag", "II"]);
    assert!(central.contains("(-1/2, 1/2, 3/2, 3/2)"), "{central}");

    let pattern = stdout_of(&["weight-pattern", "E8", "adjoint", "--orbit", "D6"]);
    assert!(pattern.contains("total = 248"), "{pattern}");
    assert!(pattern.contains("max index = 18"), "{pattern}");
}
