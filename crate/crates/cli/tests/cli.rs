use std::process::{Command, Output};

use serde_json::Value;

fn fcbsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcbsc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn stderr_line(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).trim().to_string()
}

#[test]
fn bound_reports_exact_rational() {
    let out = fcbsc(&["bound", "--q", "2", "--b", "2", "--t", "2", "--f", "1,0,0"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["plotkin_value"]["num"], "5");
    assert_eq!(doc["plotkin_value"]["den"], "6");
    assert_eq!(doc["plotkin_ceiling"], 1);
    assert_eq!(doc["s"], 7);
    assert_eq!(doc["params"]["k"], 3);
    assert_eq!(doc["params"]["l"], 1);
}

#[test]
fn bound_accepts_extension_fields() {
    let out = fcbsc(&["bound", "--q", "4", "--b", "2", "--t", "1", "--f", "identity:2"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["params"]["q"], 4);
    assert_eq!(doc["plotkin_value"]["num"], "0");
}

#[test]
fn bound_rejects_short_words() {
    let out = fcbsc(&["bound", "--q", "2", "--b", "3", "--f", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_line(&out).starts_with("error[invalid-input]: "));
    assert!(!stderr_line(&out).contains('\n'));
}

#[test]
fn verify_pins_the_projection_point() {
    let out = fcbsc(&["verify", "--q", "2", "--b", "2", "--t", "1", "--f", "1,0"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["chain"]["ceiling"], 0);
    assert_eq!(doc["chain"]["nb_B1"], 0);
    assert_eq!(doc["chain"]["oracle"], 1);
    assert_eq!(doc["chain"]["nb_B2"], 2);
    assert_eq!(doc["decode_failures"], 0);
}

#[test]
fn verify_pins_the_repetition_point() {
    let out = fcbsc(&["verify", "--q", "2", "--b", "1", "--t", "1", "--f", "identity:1"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["chain"]["ceiling"], 2);
    assert_eq!(doc["chain"]["nb_B1"], 2);
    assert_eq!(doc["chain"]["oracle"], 2);
    assert_eq!(doc["chain"]["nb_B2"], 2);
}

#[test]
fn verify_rejects_oversized_domains() {
    let out = fcbsc(&["verify", "--q", "2", "--b", "1", "--t", "1", "--f", "identity:9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_sweep_is_increasing_in_t() {
    let out = fcbsc(&["table", "--q", "2", "--b", "2", "--t", "1..3", "--f", "1,0,0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "q,k,l,b,t,s,plotkin_num,plotkin_den,ceiling,nb_B1,oracle,nb_B2"
    );
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 3);
    let frac = |row: &[String]| {
        (
            row[6].parse::<i128>().unwrap(),
            row[7].parse::<i128>().unwrap(),
        )
    };
    for pair in rows.windows(2) {
        let (an, ad) = frac(&pair[0]);
        let (bn, bd) = frac(&pair[1]);
        assert!(an * bd < bn * ad, "plotkin must increase with t");
    }
}

#[test]
fn empty_sweep_emits_header_only() {
    let out = fcbsc(&["table", "--q", "2", "--b", "2", "--t", "3..1", "--f", "1,0,0"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "q,k,l,b,t,s,plotkin_num,plotkin_den,ceiling,nb_B1,oracle,nb_B2\n"
    );
}

#[test]
fn bijective_rows_match_the_whole_length_bound() {
    let out = fcbsc(&["table", "--q", "2", "--b", "2", "--t", "1..3", "--f", "identity:3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let (k, t) = (
            cells[1].parse::<usize>().unwrap(),
            cells[4].parse::<usize>().unwrap(),
        );
        let num = cells[6].parse::<i128>().unwrap();
        let den = cells[7].parse::<i128>().unwrap();
        let ecc = fcbsc::bounds::ecc_length_bound(
            2,
            k,
            fcbsc::bsymbol::ChannelParams::new(2, t),
        );
        let lhs = fcbsc::bounds::ratio(num, den) + fcbsc::bounds::ratio(k as i128, 1);
        assert_eq!(lhs, ecc);
    }
}

#[test]
fn matrix_dumps_rows_as_csv() {
    let out = fcbsc(&["matrix", "--q", "2", "--b", "1", "--t", "1", "--f", "identity:1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0,2\n2,0\n");
}

#[test]
fn nb_search_emits_witness_digit_strings() {
    let out = fcbsc(&[
        "nb-search", "--q", "2", "--b", "2", "--t", "1", "--f", "1,0", "--kind", "b2",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["status"], "exact");
    assert_eq!(doc["min_length"], 2);
    let witness: Vec<&str> = doc["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(witness.len(), 4);
    assert!(witness.iter().all(|w| w.len() == 2));
}

#[test]
fn oracle_emits_encoder_table() {
    let out = fcbsc(&["oracle", "--q", "2", "--b", "2", "--t", "1", "--f", "1,0"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["optimal_redundancy"], 1);
    let enc = doc["witness"].as_object().unwrap();
    assert_eq!(enc.len(), 4);
    assert_eq!(enc["00"], "0");
    assert_eq!(enc["10"], "1");
    assert_eq!(enc["01"], "0");
    assert_eq!(enc["11"], "1");
}

#[test]
fn simulate_counts_failures_past_t() {
    let out = fcbsc(&[
        "simulate", "--q", "2", "--b", "2", "--t", "1", "--f", "1,0", "--max-weight", "2",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks[0]["failures"], 0);
    assert_eq!(checks[1]["failures"], 0);
    assert!(checks[2]["failures"].as_u64().unwrap() > 0);
}

#[test]
fn exhausted_budget_exits_inconclusive() {
    let out = fcbsc(&[
        "nb-search", "--q", "2", "--b", "1", "--t", "3", "--f", "identity:2",
        "--budget", "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let doc = stdout_json(&out);
    assert_eq!(doc["status"], "timeout");
    assert!(doc["refuted_below"].as_u64().unwrap() <= doc["upper_bound"].as_u64().unwrap());
    assert!(stderr_line(&out).starts_with("error[inconclusive]: "));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "--q", "3", "--b", "2", "--t", "1", "--f", "1,0"];
    let a = fcbsc(&args);
    let b = fcbsc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn function_files_load() {
    let dir = std::env::temp_dir().join("fcbsc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.csv");
    std::fs::write(&path, "1,0,0\n0,1,0\n").unwrap();
    let at_arg = format!("@{}", path.display());
    let out = fcbsc(&["bound", "--q", "2", "--b", "2", "--t", "2", "--f", &at_arg]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["params"]["l"], 2);
    assert_eq!(doc["s"], 2);
}

#[test]
fn explicit_modulus_is_accepted() {
    let out = fcbsc(&[
        "bound", "--p", "2", "--m", "2", "--modulus", "1,1,1",
        "--b", "2", "--t", "1", "--f", "identity:2",
    ]);
    assert!(out.status.success());
    let reducible = fcbsc(&[
        "bound", "--p", "2", "--m", "2", "--modulus", "1,0,1",
        "--b", "2", "--t", "1", "--f", "identity:2",
    ]);
    assert_eq!(reducible.status.code(), Some(2));
}
