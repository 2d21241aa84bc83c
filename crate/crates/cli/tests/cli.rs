use std::process::{Command, Output};

fn kchevalley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kchevalley"))
        .args(args)
        .env_remove("KCHEV_MAX_WORD_LEN")
        .env_remove("KCHEV_MAX_GROUP_ORDER")
        .env_remove("KCHEV_MAX_REDUCED_WORDS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn a2_text_lists_three_terms() {
    let out = kchevalley(&[
        "expand", "--type", "A2", "--word", "2,1,2", "--weight", "1,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let names: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  "))
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(names, ["s2s1s2", "s1s2", "s2"]);
    assert!(text.contains("s2s1s2  e^(-rho2)"));
    assert!(text.contains("s1s2    e^(-rho1+rho2)"));
    assert!(text.contains("s2      e^(rho1)"));
}

#[test]
fn g2_ordinary_coefficients() {
    let out = kchevalley(&[
        "expand",
        "--type",
        "G2",
        "--word",
        "1,2,1,2",
        "--weight",
        "0,1",
        "--ordinary",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let coeffs: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| l.starts_with("  "))
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(coeffs, ["1", "3", "1", "3", "2", "2", "1"]);
}

#[test]
fn g2_root_coordinate_display() {
    let out = kchevalley(&[
        "expand",
        "--type",
        "G2",
        "--word",
        "1,2,1,2",
        "--weight",
        "0,1",
        "--display",
        "root-coords",
    ]);
    let text = stdout(&out);
    assert!(text.contains("s1        e^(3a1+2a2)"), "{text}");
    assert!(text.contains("s1s2      e^(-a1) + 1"), "{text}");
}

#[test]
fn bott_samelson_verify_passes() {
    let out = kchevalley(&[
        "bott-samelson",
        "--type",
        "G2",
        "--word",
        "1,2,1,2",
        "--weight",
        "0,1",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("nonzero cells: 11 of 16"));
    assert!(text.ends_with("verified: true\n"));
}

#[test]
fn non_reduced_word_is_an_input_error() {
    let out = kchevalley(&["expand", "--type", "A2", "--word", "2,2", "--weight", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not reduced"));

    let out = kchevalley(&[
        "expand",
        "--type",
        "A2",
        "--word",
        "2,2",
        "--weight",
        "1,0",
        "--auto-reduce",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["auto_reduced"], true);
    assert_eq!(doc["word"], serde_json::json!([]));
}

#[test]
fn unsupported_rank_and_usage_errors() {
    let out = kchevalley(&["expand", "--type", "G3", "--word", "1", "--weight", "1,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unsupported rank 3"));

    let out = kchevalley(&["expand", "--type", "A2", "--weight", "1,0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = kchevalley(&["expand", "--type", "A2", "--word", "1", "--weight", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = kchevalley(&[
        "table",
        "--type",
        "A2",
        "--weight",
        "1,0",
        "--max-group-order",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_order_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kchevalley"))
        .args(["table", "--type", "G2", "--weight", "1,0"])
        .env("KCHEV_MAX_GROUP_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("5"));
}

#[test]
fn json_schema_keys() {
    let out = kchevalley(&[
        "expand",
        "--type",
        "G2",
        "--word",
        "1,2,1,2",
        "--weight",
        "0,1",
        "--format",
        "json",
        "--verify",
        "--validate-json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let raw = stdout(&out);
    let pos = |k: &str| raw.find(&format!("\"{k}\"")).unwrap();
    assert!(
        pos("group") < pos("weight") && pos("weight") < pos("word") && pos("word") < pos("terms")
    );
    let doc: serde_json::Value = serde_json::from_str(&raw).unwrap();
    let keys: Vec<&str> = doc
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys, ["group", "terms", "verified", "weight", "word"]);
    assert_eq!(doc["group"], "G2");
    assert_eq!(doc["weight"], serde_json::json!([0, 1]));
    assert_eq!(doc["word"], serde_json::json!([1, 2, 1, 2]));
    assert_eq!(doc["verified"], true);
    let terms = doc["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 7);
    for t in terms {
        let keys: Vec<&str> = t.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["coefficient", "v_length", "v_word"]);
        for m in t["coefficient"].as_array().unwrap() {
            assert!(m["exponent"].is_array());
            assert!(m["coeff"].is_i64());
        }
    }
    assert_eq!(terms[0]["v_word"], serde_json::json!([1, 2, 1, 2]));
    assert_eq!(
        terms[0]["coefficient"],
        // e^{-3α1-α2} in fundamental coordinates
        serde_json::json!([{ "exponent": [-3, 1], "coeff": 1 }])
    );
}

#[test]
fn unverified_json_reports_false() {
    let out = kchevalley(&[
        "bott-samelson",
        "--type",
        "A2",
        "--word",
        "2,1,2",
        "--weight",
        "1,0",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["verified"], false);
    assert_eq!(doc["cells"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table",
        "--type",
        "B2",
        "--weight",
        "1,1",
        "--format",
        "json",
        "--threads",
        "3",
    ];
    let first = kchevalley(&args);
    assert_eq!(first.status.code(), Some(0));
    for _ in 0..3 {
        assert_eq!(kchevalley(&args).stdout, first.stdout);
    }
    let one_thread = kchevalley(&[
        "table",
        "--type",
        "B2",
        "--weight",
        "1,1",
        "--format",
        "json",
        "--threads",
        "1",
    ]);
    assert_eq!(one_thread.stdout, first.stdout);
}

#[test]
fn verify_suite_passes_on_g2() {
    let out = kchevalley(&[
        "verify", "--type", "G2", "--weight", "1,0", "--weight", "0,1", "--weight", "-1,1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("positivity: skipped (weight not dominant)"));
    assert!(text.ends_with("result: pass\n"));
}

#[test]
fn root_coordinate_input_and_matrix_types() {
    // 3α1+2α2 = ρ2 in G2.
    let a = kchevalley(&[
        "expand",
        "--type",
        "G2",
        "--word",
        "2,1",
        "--weight",
        "3,2",
        "--root-coords",
    ]);
    let b = kchevalley(&["expand", "--type", "G2", "--word", "2,1", "--weight", "0,1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let m = kchevalley(&[
        "expand",
        "--type",
        "[[2,-1],[-1,2]]",
        "--word",
        "2,1,2",
        "--weight",
        "1,0",
        "--format",
        "json",
    ]);
    assert_eq!(m.status.code(), Some(0), "{}", stderr(&m));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&m)).unwrap();
    assert_eq!(doc["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("kchevalley-cli-test-{}.tex", std::process::id()));
    let out = kchevalley(&[
        "expand",
        "--type",
        "A2",
        "--word",
        "2,1,2",
        "--weight",
        "1,0",
        "--format",
        "latex",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let tex = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(
        tex.starts_with("[\\mathcal{L}_{\\rho_{1}}]^H \\times \\mathcal{O}_{s_{2}s_{1}s_{2}}^H = ")
    );
}
