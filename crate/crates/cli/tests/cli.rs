use std::process::{Command, Output};

use whittaker_ext::{m_classical, m_pv, QuadratureSpec, WhittakerParams};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whittaker-ext"))
        .args(args)
        .env_remove("WHITTAKER_EXT_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(|v| v.trim().parse().unwrap()))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn eval_prints_the_library_value() {
    let o = run(&[
        "eval", "m_pv", "--p", "0.8", "--v", "1.0", "--lambda", "0.25", "--rho", "1.1", "--z", "2.0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lib = m_pv(
        &WhittakerParams::<f64>::new(0.8, 1.0, 0.25, 1.1).unwrap(),
        2.0,
        &QuadratureSpec::default(),
    )
    .unwrap();
    assert_eq!(field(&text, "value").to_bits(), lib.value.to_bits());
    assert!(text.contains("converged          true"));
    assert!(text.contains("work"));
}

#[test]
fn eval_beta_one_one() {
    let o = run(&["eval", "beta", "--a", "1", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "value"), 1.0);
}

#[test]
fn eval_json() {
    let o = run(&["eval", "bessel_k", "--nu", "0.5", "--x", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let expected = (std::f64::consts::PI / 4.0).sqrt() * (-2.0f64).exp();
    assert!((doc["value"].as_f64().unwrap() - expected).abs() < 1e-15);
    assert_eq!(doc["parameters"]["nu"], 0.5);
}

#[test]
fn domain_and_usage_errors_exit_2() {
    let o = run(&["eval", "beta_v", "--a", "1", "--b", "1", "--p", "-0.5", "--v", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p must be > 0"));
    assert_eq!(run(&["eval", "nosuch", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "beta", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "beta", "--a", "1", "--b", "x"]).status.code(), Some(2));
    assert_eq!(
        run(&["eval", "beta", "--a", "1", "--b", "1", "--z", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["eval", "beta", "--a", "1:2:3", "--b", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn non_convergence_exits_3() {
    let o = run(&[
        "eval",
        "beta_v",
        "--a",
        "1.5",
        "--b",
        "2.5",
        "--p",
        "1",
        "--v",
        "1",
        "--max-level",
        "3",
        "--rel-tol",
        "1e-15",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("converged          false"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "nosuch"]).status.code(), Some(2));
    let o = run(&["verify", "mellin-theorem", "--paper-literal", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["verify", "bessel-moment", "--seed", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 21);
}

#[test]
fn verify_writes_output_file() {
    let dir = std::env::temp_dir().join(format!("whittaker-ext-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&[
        "verify",
        "phi-transformation",
        "--samples",
        "4",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let reports: Vec<whittaker_ext_verify::IdentityReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports[0].samples.len(), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("PASS"));
    std::fs::remove_dir_all(dir).unwrap();
}

fn table_rows(args: &[&str]) -> Vec<Vec<f64>> {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    rdr.records()
        .map(|r| {
            let r = r.unwrap();
            r.iter().take(r.len() - 1).map(|f| f.parse().unwrap()).collect()
        })
        .collect()
}

#[test]
fn table_has_one_row_per_grid_point() {
    let rows = table_rows(&[
        "table", "m_pv", "--p", "0.5", "--v", "0", "--lambda", "0", "--rho", "0.5", "--z", "0.5:4:8",
    ]);
    assert_eq!(rows.len(), 8);
    let rows = table_rows(&[
        "table",
        "phi_p",
        "--b",
        "1:2:2",
        "--c",
        "3",
        "--p",
        "0.2:0.4:3",
        "--z",
        "1",
    ]);
    assert_eq!(rows.len(), 6);
    assert_eq!((rows[0][0], rows[0][2]), (1.0, 0.2));
    assert!(rows[1][0] == 1.0 && (rows[1][2] - 0.3).abs() < 1e-15);
    assert_eq!(rows[3][0], 2.0);
}

#[test]
fn table_reduces_to_classical_whittaker() {
    let rows = table_rows(&[
        "table", "m_pv", "--p", "0", "--v", "0", "--lambda", "0.2", "--rho", "0.7", "--z", "0.5:4:8",
    ]);
    for r in &rows {
        let classical = m_classical(0.2, 0.7, r[4]).unwrap().value;
        assert!((r[5] - classical).abs() <= 1e-14 * classical.abs(), "z = {}", r[4]);
    }
}

#[test]
fn table_values_reproduce_on_reevaluation() {
    let rows = table_rows(&[
        "table", "m_pv", "--p", "0.6", "--v", "0.5", "--lambda", "0.1", "--rho", "0.9", "--z", "0.5:3:4",
    ]);
    let spec = QuadratureSpec::default();
    for r in &rows {
        let params = WhittakerParams::new(r[0], r[1], r[2], r[3]).unwrap();
        assert_eq!(m_pv(&params, r[4], &spec).unwrap().value.to_bits(), r[5].to_bits());
    }
    let mut again = Vec::new();
    for r in &rows {
        let z = format!("{:.16e}", r[4]);
        let o = run(&[
            "eval", "m_pv", "--p", "0.6", "--v", "0.5", "--lambda", "0.1", "--rho", "0.9", "--z", &z,
        ]);
        again.push(field(&stdout(&o), "value"));
    }
    assert!(rows.iter().zip(&again).all(|(r, v)| r[5].to_bits() == v.to_bits()));
}

#[test]
fn malformed_grid_exits_2() {
    assert_eq!(
        run(&["table", "m", "--lambda", "0", "--rho", "0.5", "--z", "1:2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["table", "m", "--lambda", "0", "--rho", "0.5", "--z", "1:2:0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn mellin_prints_three_values_and_deviations() {
    let o = run(&[
        "mellin", "--v", "0", "--lambda", "0.2", "--rho", "1.0", "--r", "1.5", "--z", "1.0", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc["rel_dev_numeric_corrected"].as_f64().unwrap() < 1e-10);
    assert!(doc["rel_dev_numeric_paper_literal"].as_f64().unwrap() > 1e-2);
    assert!(doc["rel_dev_corrected_paper_literal"].as_f64().unwrap() > 1e-2);
}

#[test]
fn mellin_precondition_named() {
    let o = run(&[
        "mellin", "--v", "1", "--lambda", "0.2", "--rho", "1.0", "--r", "0.5", "--z", "1.0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("r - v > 0"));
}

#[test]
fn laplace_gauss_point() {
    let o = run(&[
        "laplace", "--p", "0", "--v", "0", "--lambda", "0.3", "--rho", "0.8", "--delta", "1.2", "--alpha", "2", "--mu",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(field(&text, "rel_dev(numeric, corrected)") <= 1e-5);
    let o = run(&[
        "laplace", "--p", "0.5", "--v", "0", "--lambda", "0.3", "--rho", "0.8", "--delta", "1.2", "--alpha", "0.4",
        "--mu", "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2 alpha > mu"));
}

#[test]
fn config_file_via_env() {
    let dir = std::env::temp_dir().join(format!("whittaker-ext-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cfg");
    std::fs::write(&path, "# test\nformat = json\nrel_tol = 1e-12\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_whittaker-ext"))
        .args(["eval", "beta_p", "--a", "1.5", "--b", "2.5", "--p", "1"])
        .env("WHITTAKER_EXT_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((doc["value"].as_f64().unwrap() - 1.6866083598275205e-3).abs() < 1e-16);

    std::fs::write(&path, "colour = blue\n").unwrap();
    let o = run(&[
        "eval",
        "beta",
        "--a",
        "1",
        "--b",
        "1",
        "--config",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}
