use std::process::{Command, Output};

fn qtheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtheta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_examples() {
    let o = qtheta(&["expand", "f(a,b)", "--degree", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        "1 + a + b + a^3*b + a*b^3 + a^6*b^3 + a^3*b^6"
    );
    let o = qtheta(&["expand", "f(-a,-b)", "--degree", "4"]);
    assert_eq!(stdout(&o).lines().next().unwrap(), "1 - a - b + a^3*b + a*b^3");
    let o = qtheta(&["expand", "f(a, a^-1)"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("non-convergent"));
    assert!(o.stdout.is_empty());
    let o = qtheta(&["expand", "f(a,"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qtheta(&["expand", "f(a, b)*a^-1*(b + 1)^-1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_examples() {
    let o = qtheta(&[
        "verify",
        "f(omega*a, omega*b) = omega*f(a,b) + (1-omega)*f(a^6*b^3, a^3*b^6)",
        "--degree",
        "40",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified"));
    let o = qtheta(&["verify", "f(a,b) = f(a,b) + a"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first mismatch at a:"));
    let o = qtheta(&["verify", "f(a,b = "]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 6"));
    let o = qtheta(&["verify", "f(i*a, i*b) = f(a,b)", "--order", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_examples() {
    let o = qtheta(&["catalog", "all", "--degree", "60", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let total = doc["summary"]["total"].as_u64().unwrap();
    assert!(total >= 17);
    assert_eq!(doc["summary"]["verified"].as_u64(), Some(total));
    assert_eq!(doc["summary"]["failed"].as_u64(), Some(0));

    let o = qtheta(&["catalog", "entry9a", "entry9b", "--show", "--degree", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rhs: Vec<&str> = text.lines().filter(|l| l.trim_start().starts_with("rhs:")).collect();
    assert_eq!(rhs.len(), 2);
    assert_eq!(rhs[0], rhs[1]);

    let o = qtheta(&["catalog", "no_such_entry"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dissect_examples() {
    let o = qtheta(&["dissect", "--m", "2", "--k", "0", "--mode", "both", "--degree", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("filter: 1 + a^3*b + a*b^3"));
    assert!(text.contains("closed: 1 + a^3*b + a*b^3"));
    assert!(text.contains("agree"));
    let o = qtheta(&["dissect", "--m", "4", "--mode", "both", "--degree", "30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4/4 agree"));
    let o = qtheta(&["dissect", "--m", "2", "--k", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qtheta(&["dissect", "--m", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn flag_validation() {
    assert_eq!(qtheta(&["expand", "a", "--degree", "-1"]).status.code(), Some(2));
    assert_eq!(qtheta(&["catalog", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(qtheta(&["catalog", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(qtheta(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn text_output_is_deterministic_across_thread_counts() {
    let runs: Vec<Vec<u8>> = ["1", "4", "auto"]
        .iter()
        .map(|jobs| qtheta(&["catalog", "--degree", "25", "--jobs", jobs]).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let a = qtheta(&["dissect", "--m", "6", "--degree", "40", "--jobs", "1"]).stdout;
    let b = qtheta(&["dissect", "--m", "6", "--degree", "40", "--jobs", "8"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn out_path_receives_the_document() {
    let dir = std::env::temp_dir().join(format!("qtheta-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.json");
    let o = qtheta(&["catalog", "entry7", "--degree", "12", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["reports"][0]["name"], "entry7");
    std::fs::remove_dir_all(&dir).unwrap();
}
