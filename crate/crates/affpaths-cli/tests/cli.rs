use std::process::{Command, Output};

use affpaths_cli::json::{poly_from_json, series_from_json};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affpaths")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}

#[test]
fn onedsum_of_the_symmetric_example() {
    let args = ["onedsum", "--class", "unrestricted", "--kind", "sym", "--n", "3", "--mu", "2,2,1,1", "--lambda", "3,2,1"];
    assert_eq!(stdout(&args), "q+4q^2+6q^3+6q^4+4q^5+2q^6+q^7");
    let mut e = args.to_vec();
    e.push("--enumerate");
    assert_eq!(stdout(&e), "q+4q^2+6q^3+6q^4+4q^5+2q^6+q^7");
}

#[test]
fn kostka_methods_agree() {
    for m in ["charge", "kr", "path"] {
        assert_eq!(stdout(&["kostka", "--lambda", "3,2,1", "--mu", "2,2,1,1", "--method", m]), "q+2q^2+q^3");
    }
}

#[test]
fn generalized_restricted_sum() {
    let args = ["fermionic", "eval", "--formula", "Flrp", "--n", "3", "--l", "3", "--r", "1", "--eta", "2,2,1,1", "--mu", "2,1"];
    assert_eq!(stdout(&args), "q+3q^2+q^3");
    let hw = stdout(&["paths", "hw", "--n", "3", "--l", "3", "--r", "1", "--mu", "2,1"]);
    assert_eq!(hw.lines().count(), 2);
}

#[test]
fn energy_and_path_listing() {
    let e = json(&["energy", "--n", "3", "--path", "133⊗22⊗23⊗2", "--lines", "--json"]);
    assert_eq!(e["energy"], 4);
    assert_eq!(e["lines"].as_array().unwrap().len(), 3);
    let listing = json(&["paths", "enum", "--n", "3", "--mu", "2,2,1,1", "--lambda", "3,2,1", "--json"]);
    assert_eq!(listing["count"], 24);
    let anti = json(&[
        "paths", "enum", "--n", "3", "--kind", "antisym", "--mu", "2,2,2,1", "--class", "restricted", "--level", "1",
        "--lambda", "3,2,2", "--json",
    ]);
    assert_eq!(anti["count"], 1);
    assert_eq!(anti["paths"][0]["energy"], -4);
}

#[test]
fn json_round_trips() {
    let args = ["onedsum", "--n", "3", "--kind", "antisym", "--mu", "2,2,2,1", "--lambda", "3,2,2", "--json"];
    let v = json(&args);
    let p = poly_from_json(&v["result"]).unwrap();
    assert_eq!(p.to_string(), "2+3q+4q^2+2q^3+q^4");
    assert_eq!(v["result"]["text"], p.to_string());

    let datum = r#"{"cartan": [[2, -1], [-3, 2]], "symmetrizer": [1, 3]}"#;
    let args = ["fermionic", "series", "--which", "general", "--datum", datum, "--levels", "1", "--lambda", "0,1", "--order", "4", "--json"];
    let v = json(&args);
    let s = series_from_json(&v["result"]).unwrap();
    assert_eq!(s.to_string(), v["result"]["text"].as_str().unwrap());
    assert_eq!(s.order(), 4);
}

#[test]
fn series_and_limits() {
    let s = stdout(&["fermionic", "series", "--which", "rsos", "--n", "2", "--l", "2", "--t", "1", "--order", "6"]);
    let lim = stdout(&["limit", "--which", "rsos", "--n", "2", "--l", "2", "--t", "1", "--order", "6"]);
    assert_eq!(lim.lines().next().unwrap(), s);
    let lim = json(&["limit", "--n", "2", "--l", "1", "--class", "classical", "--lambda", "0,0", "--order", "5", "--json"]);
    let spinon = json(&["fermionic", "series", "--which", "spinon", "--n", "2", "--l", "1", "--order", "5", "--json"]);
    assert_eq!(lim["result"]["text"], spinon["result"]["text"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--suite", "paper-examples"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["kostka", "--lambda", "2,3", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(run(&["onedsum", "--n", "1", "--mu", "1", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_writes_a_json_report() {
    let dir = std::env::temp_dir().join(format!("affpaths-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("report.json");
    let out = run(&["--threads", "2", "verify", "--suite", "paper-examples", "--json", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["suite"], "paper-examples");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    let to_stdout = json(&["verify", "--suite", "paper-examples", "--json"]);
    assert_eq!(to_stdout["checks"].as_array().unwrap().len(), v["checks"].as_array().unwrap().len());
    std::fs::remove_dir_all(&dir).ok();
}
