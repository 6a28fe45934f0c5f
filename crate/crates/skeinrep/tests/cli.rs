use serde_json::{json, Value};
use skeinrep::presentations::{normal_form, AlgebraId, NFElement};
use skeinrep::CycloField;
use std::path::PathBuf;
use std::process::{Command, Output};

fn skeinrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skeinrep")).args(args).env_remove("SKEINREP_ORDER").output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad report ({e}): {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn write_tmp(name: &str, v: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("skeinrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

#[test]
fn nf_of_ef() {
    let out = skeinrep(&["nf", "--algebra", "dqb", "--word", "E F"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], 1);
    let f = CycloField::of(3).unwrap();
    let got = NFElement::from_json(&r["cases"][0]["detail"], f).unwrap();
    let k_minus_l =
        normal_form(AlgebraId::DqB, f, "Kh Kh").unwrap().sub(&normal_form(AlgebraId::DqB, f, "Lh Lh").unwrap());
    let want = normal_form(AlgebraId::DqB, f, "F E").unwrap().add(&k_minus_l.scale(&f.q_diff().inv().unwrap()));
    assert_eq!(got, want);
}

#[test]
fn counts_two_central_punctures() {
    let spec = write_tmp(
        "two_p2_punctures.json",
        &json!({ "punctures": [{ "class": "P2", "sign": 1, "mu": 2, "eps": 1, "n": 0 }, { "class": "P2", "sign": -1 }] }),
    );
    let out = skeinrep(&["counts", "--spec", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let d = &report(&out)["cases"][0]["detail"];
    assert_eq!(
        (d["weight"].as_u64(), d["irreducible"].as_u64(), d["projective"].as_u64()),
        (Some(16), Some(4), Some(4))
    );
}

#[test]
fn order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_skeinrep"))
        .args(["nf", "--algebra", "uq", "--word", "E E E"])
        .env("SKEINREP_ORDER", "5")
        .output()
        .unwrap();
    let r = report(&out);
    assert_eq!(r["order"], 5);
    // E^3 survives at N = 5 but vanishes in u_q at N = 3
    assert!(!r["cases"][0]["detail"]["terms"].as_array().unwrap().is_empty());
    let r3 = report(&skeinrep(&["nf", "--algebra", "uq", "--word", "E E E"]));
    assert!(r3["cases"][0]["detail"]["terms"].as_array().unwrap().is_empty());
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(skeinrep(&["bogus"]).status.code(), Some(2));
    assert_eq!(skeinrep(&["nf", "--algebra", "nope", "--word", "E"]).status.code(), Some(2));
    assert_eq!(skeinrep(&["nf", "--order", "4", "--algebra", "dqb", "--word", "E"]).status.code(), Some(2));
    let bad = write_tmp("bad.json", &json!({ "family": "V", "colour": 3 }));
    assert_eq!(skeinrep(&["build", "--spec", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(skeinrep(&["build", "--spec", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn build_and_verify() {
    let spec = write_tmp("s.json", &json!({ "family": "S", "mu": 2, "eps": 1, "n": 1 }));
    let out = skeinrep(&["build", "--order", "5", "--spec", spec.to_str().unwrap(), "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let ids: Vec<&str> = r["cases"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["module", "relations", "shadow"]);

    // the verbatim Vtilde formula breaks a weight relation
    let printed = write_tmp("vt.json", &json!({ "family": "Vtilde", "lambda": 2, "mu": 3, "c": 1, "printed": true }));
    let out = skeinrep(&["build", "--order", "5", "--spec", printed.to_str().unwrap(), "--verify"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let rel = r["cases"].as_array().unwrap().iter().find(|c| c["id"] == "relations").unwrap();
    assert_eq!(rel["verdict"], false);
    assert!(!rel["witness"]["failed"].as_array().unwrap().is_empty());
}

#[test]
fn sl2_commands() {
    let inst = write_tmp(
        "prout.json",
        &json!({ "a": [[0, 1], [-1, 0]], "b": [[0, -1], [1, 0]], "c": [[1, 0], [0, 1]], "d": [[1, 0], [0, 1]] }),
    );
    let out = skeinrep(&["sl2", "prout", "--in", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["cases"][0]["detail"]["outcome"], "degenerate");

    let m = write_tmp("m.json", &json!([[2, 1], [1, 1]]));
    let out = skeinrep(&["sl2", "lift", "--in", m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let w = write_tmp("w.json", &json!([[0, 1], [-1, 0]]));
    assert_eq!(skeinrep(&["sl2", "lift", "--matrix", w.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn classify_and_oracle() {
    let spec = write_tmp("one.json", &json!({ "punctures": [{ "class": "P2", "sign": 1, "mu": 2 }] }));
    let out = skeinrep(&["classify", "--spec", spec.to_str().unwrap(), "--kmax", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["cases"][0]["detail"]["count"], 16);
    assert_eq!(r["cases"][1]["detail"]["pairwise_non_isomorphic"], true);

    let out = skeinrep(&["oracle", "kronecker", "--maxdim", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["cases"][0]["detail"]["all_roots"], true);
}

#[test]
fn reports_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("skeinrep-det-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    for p in [&a, &b] {
        let out = skeinrep(&["selftest", "--order", "3", "--seed", "11", "--no-rerun", "--out", p.to_str().unwrap()]);
        assert!(out.stdout.is_empty());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
    let r: Value = serde_json::from_slice(&x).unwrap();
    assert_eq!((r["seed"].as_u64(), r["order"].as_u64()), (Some(11), Some(3)));
}
