use std::process::Command;
use std::str::FromStr;

use ellmirror_cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use ellmirror_core::Rat;
use serde_json::{json, Value};

/// Runs the CLI in-process on a whitespace-separated command line.
fn invoke(cmdline: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ellmirror").chain(cmdline.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("valid JSON")
}

fn rats(v: &Value) -> Vec<Rat> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| Rat::from_str(x.as_str().unwrap()).unwrap())
        .collect()
}

#[test]
fn i0_matches_the_factorial_series() {
    let (code, out, _) = invoke("compute --n 5 --degrees 5 --qmax 3 --what i0");
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    assert_eq!(v["series"], json!(["1", "120", "113400", "168168000"]));
    assert_eq!(v["model"], json!({ "n": 5, "degrees": [5] }));
    assert_eq!(v["qmax"], 3);
    assert_eq!(v["what"], "i0");
    assert!(v["version"].is_string());
}

#[test]
fn popa_and_pf_pass_on_the_quintic() {
    let (code, out, _) = invoke("verify --n 5 --degrees 5 --qmax 10 --suites popa,pf");
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    let outcomes = v["outcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 2);
    for o in outcomes {
        assert_eq!(o["passed"], true);
        assert!(o["first_failure"].is_null());
        assert_eq!(o["q_order"], 10);
    }
    assert_eq!(v["suites"], json!(["popa", "pf"]));
}

#[test]
fn verify_csv_has_one_row_per_suite() {
    let (code, out, _) = invoke("verify --n 4 --degrees 2,2 --qmax 3 --format csv");
    assert_eq!(code, EXIT_OK);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let suites: Vec<String> = reader
        .records()
        .map(|r| r.unwrap()[0].to_string())
        .collect();
    assert_eq!(suites, ["pf", "popa", "loop", "assembly"]);
}

#[test]
fn degrees_that_do_not_sum_to_n_are_a_usage_error() {
    let (code, out, err) = invoke("compute --n 5 --degrees 2,2 --qmax 3 --what i0");
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("degrees"));
}

#[test]
fn malformed_flags_are_usage_errors() {
    for cmdline in [
        "compute --n 5 --degrees 5 --qmax 0 --what i0",
        "compute --n 5 --degrees 5 --qmax 3 --what nope",
        "verify --n 5 --degrees 5 --qmax 3 --suites bogus",
        "compute --n 5 --qmax 3 --what i0",
        "table --n 5 --degrees 5 --qmax 3 --format xml",
    ] {
        assert_eq!(invoke(cmdline).0, EXIT_USAGE, "{cmdline}");
    }
}

#[test]
fn output_is_deterministic() {
    let cmdline = "compute --n 6 --degrees 3,3 --qmax 4 --what g1-gw";
    let a = invoke(cmdline);
    let b = invoke(cmdline);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a.1, b.1);
}

#[test]
fn csv_and_json_encode_the_same_rationals() {
    for what in ["g1-quasimap", "correction", "mu", "mirror-map"] {
        let base = format!("compute --n 6 --degrees 2,4 --qmax 4 --what {what}");
        let (_, j, _) = invoke(&base);
        let (code, c, _) = invoke(&format!("{base} --format csv"));
        assert_eq!(code, EXIT_OK);
        let from_json = rats(&parse(&j)["series"]);
        let mut reader = csv::Reader::from_reader(c.as_bytes());
        let from_csv: Vec<Rat> = reader
            .records()
            .map(|r| Rat::from_str(&r.unwrap()[2]).unwrap())
            .collect();
        assert_eq!(from_json, from_csv, "{what}");
        assert_eq!(from_json.len(), 5);
    }
}

#[test]
fn ck_lists_every_constant() {
    let (code, out, _) = invoke("compute --n 6 --degrees 3,3 --qmax 3 --what ck");
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    let cs = v["series"].as_array().unwrap();
    assert_eq!(cs.len(), 6);
    assert_eq!(cs[5], json!(["1", "0", "0", "0"]));
    assert_eq!(rats(&cs[0]), rats(&cs[4]));
}

#[test]
fn table_carries_marked_approximations() {
    let (code, out, _) = invoke("table --n 5 --degrees 5 --qmax 2 --decimal 3");
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    assert_eq!(v["table"][0]["n1"], "2875/12");
    assert_eq!(v["table"][0]["approx_decimal"], "239.583");
    assert_eq!(v["table"][1]["n1"], "407125/8");
}

#[test]
fn report_can_be_written_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r0.json");
    let (code, out, _) = invoke(&format!(
        "compute --n 5 --degrees 5 --qmax 2 --what r0 --output {}",
        path.display()
    ));
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let v = parse(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(v["series"][0], "1");
}

#[test]
fn unwritable_output_exits_with_failure() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.json");
    let (code, _, err) = invoke(&format!(
        "compute --n 5 --degrees 5 --qmax 2 --what i0 --output {}",
        missing.display()
    ));
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.starts_with("error:"));
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ellmirror");
    let status = |cmdline: &str| {
        let out = Command::new(bin)
            .args(cmdline.split_whitespace())
            .output()
            .unwrap();
        (out.status.code(), out.stderr.is_empty())
    };
    assert_eq!(
        status("compute --n 5 --degrees 5 --qmax 1 --what i0"),
        (Some(0), true)
    );
    assert_eq!(
        status("compute --n 5 --degrees 3 --qmax 1 --what i0"),
        (Some(2), false)
    );
}
