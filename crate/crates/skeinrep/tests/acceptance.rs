//! Acceptance suite: runs `skeinrep selftest` twice and prints one line per
//! criterion. Criteria in `KNOWN_FAILURES` fail because the published
//! formulas they test do not hold; they are printed as FAIL and the suite
//! exits non-zero if any other criterion fails or a known failure starts
//! passing.

use serde_json::Value;
use std::process::Command;

const SEED: &str = "7";
const KNOWN_FAILURES: [usize; 2] = [3, 12];

fn run_selftest() -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_skeinrep"))
        .args(["selftest", "--seed", SEED])
        .env_remove("SKEINREP_ORDER")
        .output()
        .expect("run skeinrep");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn summary(id: &str, d: &Value) -> String {
    let per_order = |f: &dyn Fn(&Value) -> String| {
        d.as_array()
            .map(|rows| rows.iter().map(|r| format!("N={}: {}", r["order"], f(r))).collect::<Vec<_>>().join("; "))
            .unwrap_or_default()
    };
    match id {
        "c01" => format!("{} modules, {} failed", d["modules_checked"], d["failed"]),
        "c02" => per_order(&|r| {
            format!(
                "identity {} H central {} C central {}",
                r["casimir_identity"], r["h_bdry_central"], r["casimir_central"]
            )
        }),
        "c03" => per_order(&|r| {
            format!("{} of 7 relations, omega {}", r["relations_passed"].as_array().map_or(0, Vec::len), r["omega"])
        }),
        "c04" => format!("S {} Pproj {} P {} Ptilde {} sequences", d["S"], d["Pproj"], d["P"], d["Ptilde"]),
        "c05" => format!("{} hom spaces", d["spaces_checked"]),
        "c06" => format!("{} admissible, {} inadmissible draws", d["admissible"], d["inadmissible"]),
        "c07" => {
            let counts: Vec<String> = d["counts"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|c| {
                    format!(
                        "m={}: {}/{}/{} (module-level weight {})",
                        c["m"], c["weight"], c["irreducible"], c["projective"], c["semantic_weight"]
                    )
                })
                .collect();
            let labels: Vec<String> =
                d["fibers"].as_array().into_iter().flatten().map(|f| f["labels"].to_string()).collect();
            format!("fibers of {} labels; {}", labels.join("+"), counts.join(", "))
        }
        "c08" => format!("{} shadows, {} generic V", d["shadows_checked"], d["generic_v_checked"]),
        "c09" => format!(
            "PBW {}; weighted decomposition total {}, printed projector total {}",
            d["pbw"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|p| format!("N={}: {}", p["order"], p["basis"]))
                .collect::<Vec<_>>()
                .join(", "),
            d["decomposition"]["total_dim"],
            d["printed_projector"]["total_dim"]
        ),
        "c10" => format!(
            "{} gluing isomorphisms, dimension vectors {}",
            d["isomorphisms"], d["bruteforce"]["dimension_vectors"]
        ),
        "c11" => format!(
            "Jordan brute force {} sizes, {} fibers",
            d["bruteforce"].as_array().map_or(0, Vec::len),
            d["fibers"].as_array().map_or(0, Vec::len)
        ),
        "c12" => per_order(&|r| {
            format!(
                "D=C^-1U' solved {}/200, D=U'C^-1 solved {}/200, degenerate certified {}, lifts {}/100",
                r["prout_cd_construction"]["solved"],
                r["prout_dc_construction"]["solved"],
                r["documented_degenerate_certified"],
                r["lifts_exact"]
            )
        }),
        "c13" => per_order(&|r| format!("braid {}", r["braid_and_hecke"])),
        _ => d.to_string(),
    }
}

fn main() {
    let (a, b) = std::thread::scope(|s| {
        let h1 = s.spawn(run_selftest);
        let h2 = s.spawn(run_selftest);
        (h1.join().expect("first run"), h2.join().expect("second run"))
    });
    let ((out1, code1), (out2, _)) = (a, b);
    let report: Value = match serde_json::from_slice(&out1) {
        Ok(v) => v,
        Err(e) => {
            println!("FAIL  selftest produced no report (exit {code1}): {e}");
            std::process::exit(1);
        }
    };
    let cases = report["cases"].as_array().cloned().unwrap_or_default();
    let mut failed = 0;
    let mut unexpected = 0;
    for (i, name) in skeinrep::selftest::CRITERIA.iter().enumerate() {
        let id = format!("c{:02}", i + 1);
        let case = cases.iter().find(|c| c["id"] == id.as_str());
        let (pass, text) = match (i + 1, case) {
            (14, Some(c)) => {
                let same = out1 == out2;
                (
                    c["verdict"] == true && same,
                    format!("in-process rerun {}, two processes byte-identical {same}", c["verdict"]),
                )
            }
            (_, Some(c)) => (c["verdict"] == true, summary(&id, &c["detail"])),
            (_, None) => (false, "missing from report".to_string()),
        };
        let known = KNOWN_FAILURES.contains(&(i + 1));
        if !pass {
            failed += 1;
        }
        if pass == known {
            unexpected += 1;
        }
        let tag = match (pass, known) {
            (true, false) => "PASS",
            (true, true) => "PASS (expected to fail)",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("{tag}  {:>2} {}: {}", i + 1, name, text);
    }
    println!(
        "{} of 14 criteria pass (seed {SEED}, selftest exit {code1}); unexpected outcomes: {unexpected}",
        14 - failed
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
