use std::process::{Command, Output};

fn padic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_padic")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = padic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn series_prints_index_and_coefficient() {
    assert_eq!(stdout(&["series", "exp", "--order", "3"]), "0\t1\n1\t1\n2\t1/2\n3\t1/6\n");
    let log = stdout(&["series", "log1p", "--order", "4"]);
    assert!(log.ends_with("4\t-1/4\n"), "{log}");
    assert_eq!(padic(&["series", "nonsense"]).status.code(), Some(2));
}

#[test]
fn tables_in_both_formats() {
    let tsv = stdout(&["table", "stirling2", "--max", "4"]);
    assert_eq!(tsv.lines().nth(5), Some("0\t1\t7\t6\t1"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["table", "lah", "--max", "3", "--format", "json"])).unwrap();
    assert_eq!(json[0]["family"], "lah");
    assert_eq!(json[0]["rows"][3][1], "-6");
    let l = stdout(&["table", "lambda-stirling2", "--max", "2", "--param", "2"]);
    assert!(l.starts_with("# lambda-stirling2"), "{l}");
}

#[test]
fn sequences() {
    assert_eq!(stdout(&["seq", "fubini", "--max", "4"]), "0\t1\n1\t1\n2\t3\n3\t13\n4\t75\n");
}

#[test]
fn poly_parse_and_convert() {
    assert_eq!(stdout(&["poly", "parse", "x^2 - x", "--basis", "falling"]), "ff(2)\n");
    assert_eq!(stdout(&["poly", "parse", "ff(2)", "--basis", "monomial"]), "-x + x^2\n");
    assert_eq!(padic(&["poly", "parse", "x^"]).status.code(), Some(2));
}

#[test]
fn integrate_with_approximation() {
    assert_eq!(stdout(&["integrate", "--measure", "fermionic", "--poly", "ff(3)"]), "value\t-3/4\n");
    let out = stdout(&["integrate", "--measure", "volkenborn", "--poly", "x", "--approx", "3,2"]);
    assert_eq!(out, "value\t-1/2\nfinite_sum\t4\nord_3(difference)\t2\n");
    let bad = padic(&["integrate", "--measure", "fermionic", "--poly", "x", "--approx", "2,3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_json() {
    let out = stdout(&["verify", "--id", "VOLK.L1", "--id", "FAC.SCHLOMILCH", "--format", "json", "--max-n", "6"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 2);
    assert_eq!(items[0]["id"], "FAC.SCHLOMILCH");
    assert_eq!(items[0]["status"], "ERRATUM_CANDIDATE");
    assert_eq!(items[1]["status"], "PASS");
    for it in items {
        assert!(it["paper_eq"].is_string() && it["tested"].is_u64());
    }
    let errata = stdout(&["verify", "--id", "DIST.UNIT_INT", "--errata"]);
    assert!(errata.contains("== DIST.UNIT_INT"), "{errata}");
    assert_eq!(padic(&["verify", "--id", "NOPE"]).status.code(), Some(2));
}
