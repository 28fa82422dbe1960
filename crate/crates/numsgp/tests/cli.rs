use std::process::Command;

use numsgp::cli::run;
use serde_json::Value;

fn numsgp(args: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("numsgp").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &str) -> String {
    let (code, out, err) = numsgp(args);
    assert_eq!(code, 0, "{args}: {err}");
    assert!(err.is_empty());
    out
}

fn json(args: &str) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn fails(args: &str, exit: i32, code: &str) {
    let (c, out, err) = numsgp(args);
    assert_eq!(c, exit, "{args}: {err}");
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with(&format!("error[{code}]: ")), "{err}");
}

#[test]
fn info_three_four() {
    let out = ok("info 3 4");
    assert!(out.contains("frobenius: 5\n"));
    assert!(out.contains("genus: 3\n"));
    assert!(out.contains("gaps: {1,2,5}\n"));
    let v = json("info 3 4 --format json");
    assert_eq!(v["apery"], serde_json::json!([0, 4, 8]));
    assert_eq!(v["small_elements"], serde_json::json!([0, 3, 4]));
}

#[test]
fn info_naturals() {
    let v = json("info 1 --format json");
    assert_eq!(v["frobenius"], -1);
    assert_eq!(v["genus"], 0);
}

#[test]
fn input_errors_exit_two() {
    fails("info 2 4", 2, "NonCoprimeGenerators");
    fails("info 0 3", 2, "ZeroGenerator");
    fails("info", 2, "Usage");
    fails("info 3 4 --format svg", 2, "Usage");
    fails("frobnicate 3", 2, "Usage");
    fails("gf 3 4 5 -N 5 --method closed2", 2, "Usage");
    fails("gf 3 4 -N 5 --method family3", 2, "Usage");
    fails("gf 4 6 7 -N 5 --method tri", 2, "IneligibleTriple");
    fails("verify --family3 4", 2, "BadFamilyParameter");
    fails("verify --family3 1", 2, "BadFamilyParameter");
    fails("verify", 2, "Usage");
    fails("verify 2 3 --suite", 2, "Usage");
    fails("paths 3 4", 2, "Usage");
    fails("paths 3 6 --codim 1", 2, "NonCoprimeGenerators");
    fails("paths 3 4 --codim 13", 2, "Usage");
    fails("paths 3 4 --word RDXD", 2, "BadArguments");
    fails("grid 3 4 6", 2, "IneligibleTriple");
    fails("grid 4 5 7 --format svg --columns x", 2, "Usage");
}

#[test]
fn computational_errors_exit_one() {
    fails("gf 3 4 -N 3", 1, "NotStabilized");
    fails("census 5 7 8 -K 16 --budget 10", 1, "BudgetExceeded");
    fails("gf 5 7 8 -N 16 --budget 10", 1, "BudgetExceeded");
}

#[test]
fn gf_two_three_closed_and_oracle_agree() {
    let closed = json("gf 2 3 -N 6 --method closed2 --format json");
    assert_eq!(closed["coeffs"], serde_json::json!([1, 1, 2, 2, 2, 2, 2]));
    assert_eq!(closed["numerator"], serde_json::json!([1, 0, 1]));
    assert_eq!(closed["degree"], 1);
    let oracle = json("gf 2 3 -N 6 --method oracle --format json");
    for key in ["coeffs", "numerator", "degree", "generators"] {
        assert_eq!(closed[key], oracle[key], "{key}");
    }
    assert_eq!(oracle["method"], "oracle");
}

#[test]
fn gf_tri_and_family() {
    let v = json("gf 3 4 5 -N 10 --method tri --format json");
    assert_eq!(
        v["coeffs"],
        serde_json::json!([1, 1, 3, 4, 4, 4, 4, 4, 4, 4, 4])
    );
    assert_eq!(v["degree"], 2);
    let fam = json("gf 3 5 7 -N 12 --method family3 --format json");
    let tri = json("gf 3 5 7 -N 12 --method tri --format json");
    let oracle = json("gf 3 5 7 -N 12 --format json");
    assert_eq!(fam["coeffs"], oracle["coeffs"]);
    assert_eq!(tri["coeffs"], oracle["coeffs"]);
    assert_eq!(oracle["degree"], 4);
}

#[test]
fn gf_text_and_csv() {
    assert_eq!(
        ok("gf 2 3 -N 6 --method closed2"),
        "generators: 2 3\nmethod: closed2\ncoeffs: 1 1 2 2 2 2 2\nnumerator: 1 + q^2\ndegree: 1\n"
    );
    assert_eq!(
        ok("gf 2 3 -N 4 --format csv"),
        "k,m\n0,1\n1,1\n2,2\n3,2\n4,2\n"
    );
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        "gf 2 3 -N 6 --format json",
        "gf 3 5 7 -N 20 --method tri --format json",
        "info 4 5 7 --format json",
        "census 5 7 8 -K 12 --format json",
        "verify 3 4 5 --format json",
        "paths 3 4 --codim 3 --format json",
    ] {
        let text = ok(args);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap() + "\n", text, "{args}");
    }
}

#[test]
fn degree_is_frobenius_for_a_large_pair() {
    let v = json("gf 11 13 -N 200 --method closed2 --format json");
    assert_eq!(v["degree"], 11 * 13 - 11 - 13);
    // binom(24, 11) / 24
    assert_eq!(v["coeffs"][200], 104_006);
}

#[test]
fn census_text() {
    let out = ok("census 3 4 -K 8");
    assert!(out.starts_with("generators: 3 4\nk m(S,k)\n0 1\n1 1\n2 2\n3 3\n4 4\n5 4\n6 5\n"));
    assert!(out.ends_with("stable value 5 from k = 6\n"));
    let v = json("census 3 4 -K 3 --format json");
    assert_eq!(v["onset"], Value::Null);
}

#[test]
fn census_independent_of_threads() {
    let one = ok("census 4 5 7 -K 14 --format json");
    for t in [2, 3, 8] {
        assert_eq!(
            ok(&format!("census 4 5 7 -K 14 --format json --threads {t}")),
            one
        );
    }
}

#[test]
fn verify_examples() {
    let out = ok("verify 2 3");
    assert!(!out.contains("FAIL"));
    assert!(out.contains("INFO stabilization onset: expected constant from k = G = 1; actual constant from k = 2 = G + 1\n"));
    assert!(ok("verify 3 4 5").contains("PASS S1(q) / (1 - q^3) equals census to order 20"));
    assert!(ok("verify --family3 5").ends_with("4 checks: 4 passed, 0 failed, 0 skipped\n"));
    let (code, out, _) = numsgp("verify 3 4");
    assert_eq!(code, 1);
    assert!(out.contains("FAIL shift by one: ideal implies empty small part"));
}

#[test]
fn verify_report_is_deterministic() {
    assert_eq!(ok("verify 3 5 7"), ok("verify 3 5 7 --threads 4"));
    let timed = ok("verify 2 3 --timings");
    assert!(timed
        .lines()
        .filter(|l| l.starts_with("PASS"))
        .all(|l| l.ends_with(" s]")));
}

#[test]
fn paths_examples() {
    let out = ok("paths 3 4 --word RDRRDRD");
    assert!(out
        .starts_with("word: RDRRDRD\ngaps: {0,3,4,6,7,8,9,10}\nrow minima: 12,13,11\ncodim: 8\n"));
    assert_eq!(ok("paths 2 3 --codim 0"), "DD gaps {} row minima 0,3\n");
    assert_eq!(ok("paths 3 4 --codim 2").lines().count(), 2);
    let svg = ok("paths 3 4 --word RDRRDRD --format svg");
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
}

#[test]
fn invalid_word_names_condition() {
    let cases = [
        ("RDRRDRRRD", "condition (3)"),
        ("RDD", "condition (1)"),
        ("DDDR", "condition (2)"),
    ];
    for (w, cond) in cases {
        let (code, _, err) = numsgp(&format!("paths 3 4 --word {w}"));
        assert_eq!(code, 2);
        assert!(
            err.starts_with("error[InvalidWord]") && err.contains(cond),
            "{w}: {err}"
        );
    }
}

#[test]
fn grid_examples() {
    assert_eq!(
        ok("grid 3 4 5 --columns 4"),
        " 5  8 11 14\n 0  3  6  9\n 4  7 10 13\n"
    );
    assert_eq!(
        ok("grid 3 5 7 --columns 2 --format json"),
        "[[7,10],[0,3],[5,8]]\n"
    );
    assert_eq!(ok("grid 2 3 5 --columns 3 --format csv"), "0,2,4\n3,5,7\n");
    assert!(ok("grid 3 4 5 --columns 2 --format latex").starts_with("\\begin{tabular}{rr}\n"));
}

#[test]
fn binary_exit_codes_and_out_file() {
    let bin = env!("CARGO_BIN_EXE_numsgp");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gf.json");
    let status = Command::new(bin)
        .args(["gf", "2", "3", "-N", "6", "--format", "json", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with(r#"{"coeffs":[1,1,2,2,2,2,2],"degree":1,"#));

    let bad = Command::new(bin).args(["info", "2", "4"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));

    let starved = Command::new(bin)
        .args(["census", "5", "7", "8", "-K", "16"])
        .env("NUMSGP_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&starved.stderr).starts_with("error[BudgetExceeded]"));

    let missing_dir = dir.path().join("no/such/dir/out.txt");
    let io = Command::new(bin)
        .args(["info", "3", "4", "--out"])
        .arg(&missing_dir)
        .output()
        .unwrap();
    assert_eq!(io.status.code(), Some(1));
}
