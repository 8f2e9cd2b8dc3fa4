//! Golden-output and exit-code tests for the `qlat` binary. Set
//! `UPDATE_GOLDEN=1` to rewrite the expected outputs.

use std::path::PathBuf;
use std::process::Command;

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

const CASES: &[Case] = &[
    case(
        "check_fig1_quasi",
        &["check", "fixtures/fig1.qlat", "--expect", "quasi-lattice"],
        0,
    ),
    case(
        "check_fig1_lattice",
        &["check", "fixtures/fig1.qlat", "--expect", "lattice"],
        1,
    ),
    case(
        "check_fig1_assoc",
        &["check", "fixtures/fig1.qlat", "--expect", "associative"],
        1,
    ),
    case(
        "check_fig1_identities",
        &["check", "fixtures/fig1.qlat", "--expect", "identities"],
        0,
    ),
    case(
        "check_n5_modular",
        &["check", "fixtures/n5.qlat", "--expect", "modular"],
        1,
    ),
    case(
        "check_m3_lattice",
        &["check", "fixtures/m3.qlat", "--expect", "lattice"],
        0,
    ),
    case("check_hex6", &["check", "fixtures/hex6.qlat"], 0),
    case(
        "check_antichain",
        &[
            "check",
            "tests/inputs/antichain.qlat",
            "--expect",
            "not-quasi-lattice",
        ],
        0,
    ),
    case(
        "check_antichain_assoc",
        &[
            "check",
            "tests/inputs/antichain.qlat",
            "--expect",
            "associative",
        ],
        1,
    ),
    case(
        "check_cover_first",
        &["check", "tests/inputs/cover_first.qlat"],
        2,
    ),
    case("check_cycle", &["check", "tests/inputs/cycle.qlat"], 2),
    case(
        "check_missing_file",
        &["check", "tests/inputs/absent.qlat"],
        2,
    ),
    case("mub_fig1", &["mub", "fixtures/fig1.qlat", "x", "y"], 0),
    case("mlb_fig1", &["mlb", "fixtures/fig1.qlat", "xy", "x_yz"], 0),
    case(
        "mub_unknown_label",
        &["mub", "fixtures/fig1.qlat", "x", "q"],
        2,
    ),
    case("ideals_n5", &["ideals", "fixtures/n5.qlat"], 0),
    case(
        "ideals_fig1_check",
        &["ideals", "fixtures/fig1.qlat", "--check", "0,x,y"],
        1,
    ),
    case(
        "ideals_chain3_lattice",
        &["ideals", "fixtures/chain3.qlat", "--lattice"],
        0,
    ),
    case(
        "filters_hex6_closure",
        &["filters", "fixtures/hex6.qlat", "--closure", "c"],
        0,
    ),
    case(
        "filters_hex6_check",
        &["filters", "fixtures/hex6.qlat", "--check", "c,⊤"],
        0,
    ),
    case("congruences_n5", &["congruences", "fixtures/n5.qlat"], 0),
    case(
        "congruences_chain3_bad",
        &["congruences", "fixtures/chain3.qlat", "--check", "0,1|m"],
        1,
    ),
    case(
        "congruences_partial",
        &["congruences", "fixtures/n5.qlat", "--check", "0,a|b"],
        2,
    ),
    case(
        "congruences_antichain",
        &["congruences", "tests/inputs/antichain.qlat"],
        1,
    ),
    case(
        "quotient_n5",
        &["quotient", "fixtures/n5.qlat", "--partition", "0|a,c|b|1"],
        0,
    ),
    case(
        "quotient_n5_bad",
        &["quotient", "fixtures/n5.qlat", "--partition", "0|a|b,c|1"],
        1,
    ),
    case(
        "hom_chain3_kernel",
        &[
            "hom",
            "fixtures/chain3.qlat",
            "fixtures/chain2.qlat",
            "--map",
            "0,0,1",
            "--kernel",
        ],
        0,
    ),
    case(
        "hom_hex6_collapse",
        &[
            "hom",
            "fixtures/hex6.qlat",
            "fixtures/chain3.qlat",
            "--map",
            "0,m,m,m,m,1",
        ],
        1,
    ),
    case(
        "hom_wrong_arity",
        &[
            "hom",
            "fixtures/chain3.qlat",
            "fixtures/chain2.qlat",
            "--map",
            "0,1",
        ],
        2,
    ),
    case("dot_chain3", &["dot", "fixtures/chain3.qlat"], 0),
    case("dot_fig1", &["dot", "fixtures/fig1.qlat"], 0),
    case(
        "enumerate_small",
        &[
            "enumerate",
            "--n",
            "3",
            "--claims",
            "thm23,lem42",
            "--jobs",
            "2",
        ],
        0,
    ),
    case(
        "enumerate_too_large",
        &["enumerate", "--n", "7", "--claims", "thm23"],
        2,
    ),
    case(
        "enumerate_unknown_claim",
        &["enumerate", "--claims", "thm99"],
        2,
    ),
    case("no_subcommand", &[], 2),
    case("unknown_subcommand", &["bogus"], 2),
];

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn golden_outputs_and_exit_codes() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for c in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_qlat"))
            .args(c.args)
            .current_dir(manifest_dir())
            .output()
            .expect("run qlat");
        let stdout = String::from_utf8(out.stdout).expect("utf-8 stdout");
        let stderr = String::from_utf8(out.stderr).expect("utf-8 stderr");
        let code = out.status.code().expect("exit code");
        if code != c.code {
            failures.push(format!(
                "{}: exit {code}, expected {}\n{stdout}{stderr}",
                c.name, c.code
            ));
            continue;
        }
        if code == 2 && stderr.trim().is_empty() {
            failures.push(format!("{}: usage error without a message", c.name));
        }
        if code != 2 && !stderr.is_empty() {
            failures.push(format!("{}: unexpected stderr {stderr}", c.name));
        }
        let path = manifest_dir()
            .join("tests/golden")
            .join(format!("{}.stdout", c.name));
        if update {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == stdout => {}
            Ok(expected) => failures.push(format!(
                "{}: stdout differs\n--- expected\n{expected}--- actual\n{stdout}",
                c.name
            )),
            Err(e) => failures.push(format!("{}: {}: {e}", c.name, path.display())),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn spec_examples() {
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_qlat"))
            .args(args)
            .current_dir(manifest_dir())
            .output()
            .unwrap();
        (
            out.status.code().unwrap(),
            String::from_utf8(out.stdout).unwrap(),
        )
    };
    let (code, _) = run(&["check", "fixtures/fig1.qlat", "--expect", "quasi-lattice"]);
    assert_eq!(code, 0);
    assert_eq!(
        run(&["mub", "fixtures/fig1.qlat", "x", "y"]),
        (0, "xy x_yz\n".to_string())
    );
    let (code, out) = run(&["check", "fixtures/fig1.qlat", "--expect", "lattice"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness (x, y)"), "{out}");
}

#[test]
fn counterexample_directory_is_left_alone_on_success() {
    let dir = std::env::temp_dir().join(format!("qlat-cli-test-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_qlat"))
        .args(["enumerate", "--n", "3", "--claims", "all", "--out-dir"])
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(!dir.exists());
}

#[test]
fn help_exits_zero() {
    let out = Command::new(env!("CARGO_BIN_EXE_qlat"))
        .arg("--help")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("enumerate"));
}
