use std::process::{Command, Output};

use serde_json::Value;

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("casimir-cli-{}-{name}", std::process::id()))
}

#[test]
fn character_cusps_and_a1() {
    let o = casimir(&["character", "A2", "--t", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3 3");
    assert_eq!(stdout(&casimir(&["character", "B3", "--t", "0", "0", "0"])).trim(), "8 21 7");
    let v: f64 = stdout(&casimir(&["character", "A1", "--t", "0.5"])).trim().parse().unwrap();
    let want = 2.0 * std::f64::consts::PI.cosh();
    assert!((v - want).abs() < 1e-12 * want);
}

#[test]
fn character_lambda_and_oracle() {
    let o = casimir(&["character", "B2", "--lambda", "0.3", "-0.2", "--b", "0.6", "--oracle", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = j["c"].as_array().unwrap();
    let w = j["oracle"].as_array().unwrap();
    for (a, b) in c.iter().zip(w) {
        let (a, b) = (a.as_f64().unwrap(), b.as_f64().unwrap());
        assert!((a - b).abs() <= 1e-9 * a.abs());
    }
    // λ without b is a usage error
    assert_eq!(casimir(&["character", "A1", "--lambda", "1"]).status.code(), Some(2));
    // degenerate point for the oracle
    assert_eq!(casimir(&["character", "A2", "--t", "0", "0", "--oracle"]).status.code(), Some(3));
    // wrong length
    assert_eq!(casimir(&["character", "A2", "--t", "1"]).status.code(), Some(2));
    // overflow
    assert_eq!(casimir(&["character", "F4", "--t", "9", "9", "9", "9"]).status.code(), Some(3));
}

#[test]
fn roots_output_and_bad_type() {
    let o = casimir(&["roots", "G2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["cartan"][1][0], -3);
    assert_eq!(j["positive_roots"].as_array().unwrap().len(), 6);
    let j: Value = serde_json::from_str(&stdout(&casimir(&["roots", "A1", "--json"]))).unwrap();
    assert_eq!(j["w0"], serde_json::json!([1]));
    assert_eq!(j["sigma"], serde_json::json!([1]));
    assert_eq!(casimir(&["roots", "D3"]).status.code(), Some(2));
    assert_eq!(casimir(&["roots", "Q7"]).status.code(), Some(2));
}

#[test]
fn verify_single_types() {
    for t in ["A2", "B2"] {
        let o = casimir(&["verify", t]);
        assert_eq!(o.status.code(), Some(0), "{t}");
        let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(j["schema"], 1);
        assert_eq!(j["ok"], true);
        assert!(j["fail"].as_array().unwrap().is_empty());
    }
    let j: Value = serde_json::from_str(&stdout(&casimir(&["verify", "B2"]))).unwrap();
    assert!(j["report"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["check"] == "b2_d_l_correction"));
}

#[test]
fn verify_all_is_clean() {
    let o = casimir(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["types"].as_array().unwrap().len(), 14);
}

#[test]
fn region_outputs() {
    let svg = tmp("b2.svg");
    let o = casimir(&["region", "B2", "--svg", svg.to_str().unwrap(), "--steps", "40"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains(r#"data-c1="4" data-c2="5""#));
    std::fs::remove_file(svg).ok();

    let o = casimir(&["region", "G2", "--svg", "-", "--steps", "20", "--log"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#"data-c1="14" data-c2="7""#));

    let csv = tmp("a3.csv");
    let o = casimir(&["region", "A3", "--csv", csv.to_str().unwrap(), "--steps", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 27_001);
    assert!(text.starts_with("t_1,t_2,t_3,C_1,C_2,C_3,D,D_s,D_l\n0,0,0,4,6,4,"));
    std::fs::remove_file(csv).ok();

    let o = casimir(&["region", "A2", "--json", "-", "--steps", "3", "--face", "2"]);
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j.as_array().unwrap().len(), 3);

    let a = stdout(&casimir(&["region", "B2", "--csv", "-", "--steps", "7"]));
    let b = stdout(&casimir(&["region", "B2", "--csv", "-", "--steps", "7"]));
    assert_eq!(a, b);
}

#[test]
fn region_bad_flags() {
    assert_eq!(casimir(&["region", "A3", "--svg", "-"]).status.code(), Some(2));
    assert_eq!(casimir(&["region", "A2"]).status.code(), Some(2));
    assert_eq!(casimir(&["region", "A2", "--csv", "-", "--steps", "1"]).status.code(), Some(2));
    assert_eq!(casimir(&["region", "A2", "--csv", "-", "--range", "7"]).status.code(), Some(2));
}

#[test]
fn virtual_examples() {
    let o = casimir(&["virtual", "A1", "--b", "0.6", "--lambda", "1.0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let q = 0.6 + 1.0 / 0.6;
    assert!((j["v"][0][0].as_f64().unwrap() + 2.0).abs() < 1e-12);
    assert!((j["v"][0][1].as_f64().unwrap() + q / 2.0).abs() < 1e-12);
    assert!((j["lowest"][0][0].as_f64().unwrap() - q / 2.0).abs() < 1e-12);
    assert_eq!(j["lowest"][0][1].as_f64().unwrap(), -1.0);

    let j: Value = serde_json::from_str(&stdout(&casimir(&[
        "virtual", "A2", "--b", "0.7", "--lambda", "0", "0", "--json",
    ])))
    .unwrap();
    assert!(j["v"].as_array().unwrap().iter().all(|v| v[0] == 0.0));

    let k = |w: &[&str]| {
        let mut args = vec!["virtual", "B2", "--b", "0.5", "--lambda", "1", "2", "--json", "--word"];
        args.extend_from_slice(w);
        let j: Value = serde_json::from_str(&stdout(&casimir(&args))).unwrap();
        j["k_scalars"].as_array().unwrap().iter()
            .flat_map(|z| z.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect::<Vec<_>>())
            .collect::<Vec<f64>>()
    };
    let a = k(&["1", "2", "1", "2"]);
    let b = k(&["2", "1", "2", "1"]);
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() <= 1e-10 * x.abs().max(1.0));
    }
    assert_eq!(casimir(&["virtual", "B2", "--b", "1.5", "--lambda", "1", "2"]).status.code(), Some(2));
    assert_eq!(
        casimir(&["virtual", "B2", "--b", "0.5", "--lambda", "1", "2", "--word", "1", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn weyl_cap_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(["character", "F4", "--t", "0.1", "0.2", "0.3", "0.4", "--oracle"])
        .env("CASIMIR_WEYL_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(["character", "A1", "--t", "0.1", "--oracle"])
        .env("CASIMIR_WEYL_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
