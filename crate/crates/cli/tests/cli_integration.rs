//! End-to-end runs of the `cliff` binary: exit codes, report shape,
//! determinism, config precedence and csv output.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cliff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn stderr_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stderr).unwrap_or_else(|e| {
        panic!(
            "stderr is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stderr)
        )
    })
}

#[test]
fn eval_gf2_example() {
    let out = cliff(&["eval", "--ring", "gf2", "--gens", "3", "a*b + 1"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["command"], "eval");
    assert_eq!(report["results"]["canonical"], "1 + e1*e2");
    assert_eq!(report["results"]["term_count"], 2);
    assert!(report["timestamp_unix"].is_u64());
}

#[test]
fn eval_rational_involution() {
    let out = cliff(&["eval", "--gens", "2", "T(e1*e2)"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["results"]["canonical"], "-e1*e2");
}

#[test]
fn eval_clifford_law() {
    let out = cliff(&["eval", "--signature", "+-", "e2*e2"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["results"]["canonical"], "-1");
}

#[test]
fn domain_error_exits_one_with_structured_stderr() {
    let out = cliff(&["eval", "--gens", "2", "e7"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr_json(&out);
    assert_eq!(err["kind"], "parse");
    assert_eq!(err["detail"]["kind"], "unknown_generator");
}

#[test]
fn usage_error_exits_two() {
    let unknown = cliff(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    let bad_format = cliff(&["--format", "csv", "eval", "--gens", "2", "1"]);
    assert_eq!(bad_format.status.code(), Some(2));
    let err = stderr_json(&bad_format);
    assert_eq!(err["kind"], "usage");
}

#[test]
fn binor_ops() {
    let out = cliff(&["binor", "--gens", "3", "sup", "a + b", "b + c"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["results"]["result"], "e1 + e2 + e3");

    let inf = cliff(&["binor", "--gens", "3", "inf", "a + b", "b + c"]);
    assert_eq!(stdout_json(&inf)["results"]["result"], "e2");

    let full = cliff(&["binor", "--gens", "2", "full-state"]);
    let report = stdout_json(&full);
    assert_eq!(report["results"]["term_count"], 4);
    assert_eq!(report["results"]["result"], "1 + e1 + e2 + e1*e2");

    let grade = cliff(&["binor", "--gens", "3", "grade", "a*b*c"]);
    assert_eq!(stdout_json(&grade)["results"]["grade"], 3);

    let crisp = cliff(&["binor", "--gens", "3", "grade", "a + b"]);
    assert_eq!(crisp.status.code(), Some(1));

    let por = cliff(&["binor", "bool-por", "10", "01"]);
    assert_eq!(stdout_json(&por)["results"]["result"], "11");
    let por_default = cliff(&["binor", "bool-por", "11", "10"]);
    assert_eq!(stdout_json(&por_default)["results"]["result"], "00");
}

#[test]
fn hierarchy_search_has_sixteen_ranked_rows() {
    let out = cliff(&["hierarchy", "--search"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let rows = report["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let counts: Vec<u64> = rows
        .iter()
        .map(|r| r["match_count"].as_u64().unwrap())
        .collect();
    assert!(counts.windows(2).all(|w| w[0] >= w[1]));
    assert_eq!(report["results"]["best"]["match_count"], 5);
}

#[test]
fn hierarchy_single_convention() {
    let out = cliff(&["hierarchy", "--max", "6", "--form", "i"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let chain = report["results"]["chain"].as_array().unwrap();
    assert_eq!(chain.len(), 6);
    assert_eq!(chain[4]["dim"], 65536);
    assert_eq!(chain[5]["generators"]["n_plus"], 32640);
    assert_eq!(chain[5]["generators"]["n_minus"], 32896);
}

#[test]
fn rep_json_and_csv() {
    let out = cliff(&["rep", "--signature", "++-"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["results"]["spinor_dim"], 4);
    assert_eq!(report["results"]["faithful"], true);
    assert_eq!(report["results"]["relations"]["ok"], true);
    assert_eq!(report["residuals"]["relation_max_deviation"], 0.0);

    let csv = cliff(&["--format", "csv", "rep", "--gens", "2"]);
    assert!(csv.status.success());
    let text = String::from_utf8(csv.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("generator,row,col,re,im"));
    // 2 generators, dim 2, one nonzero per row
    assert_eq!(lines.count(), 4);
}

#[test]
fn dirac_time_spectrum_n2() {
    let out = cliff(&["dirac", "--n", "2", "--report", "time-spectrum"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let eigenvalues = report["results"]["spectrum"]["eigenvalues"]
        .as_array()
        .unwrap();
    let values: Vec<(f64, u64)> = eigenvalues
        .iter()
        .map(|e| {
            (
                e["re"].as_f64().unwrap(),
                e["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(values.len(), 3);
    assert!((values[0].0 - -2.0).abs() < 1e-9);
    assert!((values[1].0).abs() < 1e-9);
    assert!((values[2].0 - 2.0).abs() < 1e-9);
    assert_eq!(values[0].1, 64);
    assert_eq!(values[1].1, 128);
    assert_eq!(values[2].1, 64);
    assert_eq!(report["config"]["dim"], 256);
}

#[test]
fn dirac_eta_csv() {
    let out = cliff(&[
        "--format",
        "csv",
        "dirac",
        "--n",
        "1",
        "--report",
        "eta-spectrum",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "re,im,multiplicity");
    assert_eq!(lines.len(), 3); // +-i with multiplicity 8 each
}

#[test]
fn dirac_commutators_and_factorization() {
    let out = cliff(&[
        "dirac",
        "--n",
        "1",
        "--report",
        "commutators",
        "--mu",
        "1",
        "--nu",
        "1",
    ]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let c = &report["results"]["commutators"][0];
    assert!((c["c_re"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    assert!(c["residual"].as_f64().unwrap() <= 1e-12);

    let fact = cliff(&["dirac", "--n", "2", "--report", "factorization"]);
    let report = stdout_json(&fact);
    assert_eq!(report["results"]["ok"], true);
}

#[test]
fn dirac_evolution_report() {
    let out = cliff(&["dirac", "--n", "1", "--report", "evolution"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let central = report["results"]["central_difference_rel_error"]
        .as_f64()
        .unwrap();
    assert!(central <= 1e-6, "central rel error {central}");
}

#[test]
fn reports_are_deterministic_modulo_timestamp() {
    let strip = |out: Output| {
        let mut v = stdout_json(&out);
        v.as_object_mut().unwrap().remove("timestamp_unix");
        serde_json::to_string_pretty(&v).unwrap()
    };
    for args in [
        vec!["eval", "--gens", "4", "(1 + e1)*(2 - e3) + 1/3"],
        vec!["hierarchy", "--search"],
        vec!["dirac", "--n", "1", "--report", "eta-spectrum"],
    ] {
        let a = strip(cliff(&args));
        let b = strip(cliff(&args));
        assert_eq!(a, b, "non-deterministic report for {args:?}");
    }
}

#[test]
fn config_file_precedence() {
    let dir = std::env::temp_dir().join(format!("cliff-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("config.json");
    std::fs::write(&path, r#"{"tau": 2.0, "octads": 1, "gens": 5}"#).unwrap();
    let path_str = path.to_str().unwrap();

    // file value applies
    let out = cliff(&["dirac", "--config", path_str, "--report", "time-spectrum"]);
    let report = stdout_json(&out);
    assert_eq!(report["config"]["tau"], 2.0);
    let top = report["results"]["spectrum"]["eigenvalues"][1]["re"]
        .as_f64()
        .unwrap();
    assert!((top - 2.0).abs() < 1e-9);

    // flag wins over file
    let out = cliff(&[
        "dirac",
        "--config",
        path_str,
        "--tau",
        "0.5",
        "--report",
        "time-spectrum",
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["config"]["tau"], 0.5);

    // eval picks up the default generator count from the file
    let out = cliff(&["eval", "--config", path_str, "e5"]);
    assert!(out.status.success());

    // malformed config is a usage-class failure
    std::fs::write(&path, "{nonsense").unwrap();
    let out = cliff(&["eval", "--config", path_str, "1"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}
