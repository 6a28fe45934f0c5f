//! The `skeinrep` command line: JSON in, versioned JSON reports out.
//!
//! Exit codes: 0 when every check in the report passes, 1 when one fails,
//! 2 on usage or input errors.

use crate::classify::{
    count_summary, default_probes, enumerate_colorings, fiber_check, kronecker_bruteforce, PunctureClass, ShadowSpec,
};
use crate::cyclofield::CycloField;
use crate::presentations::{normal_form, AlgebraId};
use crate::repfactory::{build_module, is_semiweight, shadow, verify_relations, FamilySpec};
use crate::report::{Case, Report};
use crate::selftest::{run_selftest, SelftestConfig};
use crate::sl2kit::{bruhat_factor, gluing_lift, prout_memberships, prout_solve, ProutOutcome, SL2Mat};
use crate::{Error, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "skeinrep", version, about = "Exact checks for quantum Borel double and small quantum group modules")]
pub struct Cli {
    /// Odd root order N (3 when unset; `selftest` then runs its default orders).
    #[arg(long, global = true, env = "SKEINREP_ORDER")]
    pub order: Option<u32>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Skip the rerun that checks determinism.
        #[arg(long)]
        no_rerun: bool,
    },
    /// Build a family member from a JSON spec.
    Build {
        #[arg(long)]
        spec: PathBuf,
        /// Check every defining relation.
        #[arg(long)]
        verify: bool,
    },
    /// Enumerate colorings and check the fibers of a shadow spec.
    Classify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 1)]
        kmax: usize,
    },
    /// Weight, irreducible and projective counts for a shadow spec.
    Counts {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 1)]
        kmax: usize,
    },
    /// Normal form of a word of generators.
    Nf {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        word: String,
    },
    /// 2x2 solvers.
    Sl2 {
        #[command(subcommand)]
        op: Sl2Op,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum Sl2Op {
    /// `{"a":..,"b":..,"c":..,"d":..}` with 2x2 matrices.
    Prout {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// A 2x2 matrix in the big cell.
    Lift {
        #[arg(long = "in", alias = "matrix")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleOp {
    Kronecker {
        #[arg(long, default_value_t = 4)]
        maxdim: usize,
    },
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn field(order: Option<u32>) -> Result<&'static CycloField> {
    CycloField::of(order.unwrap_or(3) as i64)
}

fn single(command: &str, order: Option<u32>, case: Case) -> Report {
    Report::new(command, Some(order.unwrap_or(3)), None, vec![case])
}

fn build(order: Option<u32>, spec: &Path, verify: bool) -> Result<Report> {
    let f = field(order)?;
    let spec = FamilySpec::from_json(&read_json(spec)?, f)?;
    let rep = build_module(&spec)?;
    let mut cases = vec![Case::new("module", "build", spec.to_json(), true, rep.to_json())];
    if is_semiweight(&rep) {
        cases.push(Case::new("shadow", "shadow", spec.to_json(), true, json!(shadow(&rep)?)));
    }
    if verify {
        let r = verify_relations(&rep);
        let ok = r.all_pass();
        cases.push(
            Case::new("relations", "verify_relations", spec.to_json(), ok, json!(r))
                .with_witness(json!({ "failed": r.failures() })),
        );
    }
    Ok(Report::new("build", Some(f.order()), None, cases))
}

fn classify(order: Option<u32>, spec: &Path, kmax: usize) -> Result<Report> {
    let f = field(order)?;
    let raw = read_json(spec)?;
    let sh = ShadowSpec::from_json(&raw, f)?;
    let probes = default_probes(f);
    let colorings = enumerate_colorings(&sh, kmax, &probes);
    let listed: Vec<Vec<String>> =
        colorings.iter().map(|c| c.assignment.iter().map(ToString::to_string).collect()).collect();
    let mut cases = vec![Case::new(
        "colorings",
        "enumerate_colorings",
        json!({ "spec": raw, "k_max": kmax }),
        true,
        json!({ "count": colorings.len(), "colorings": listed }),
    )];
    for (i, p) in sh.punctures.iter().enumerate() {
        if p.class != PunctureClass::P2 {
            continue;
        }
        let r = fiber_check(&p.mu, p.eps, p.n, kmax, &probes)?;
        let ok = r.shadows_equal && r.pairwise_non_isomorphic;
        cases.push(
            Case::new(
                format!("fiber{i:03}"),
                "fiber_check",
                json!({ "puncture": i, "k_max": kmax }),
                ok,
                json!({
                    "labels": r.labels,
                    "shadow": r.shadow,
                    "shadows_equal": r.shadows_equal,
                    "pairwise_non_isomorphic": r.pairwise_non_isomorphic,
                }),
            )
            .with_witness(json!(r.failures)),
        );
    }
    Ok(Report::new("classify", Some(f.order()), None, cases))
}

fn counts(order: Option<u32>, spec: &Path, kmax: usize) -> Result<Report> {
    let f = field(order)?;
    let raw = read_json(spec)?;
    let c = count_summary(&ShadowSpec::from_json(&raw, f)?, kmax)?;
    let detail = json!({
        "weight": c.weight_count,
        "irreducible": c.irreducible_count,
        "projective": c.projective_count,
        "summary": c,
    });
    let case = Case::new("counts", "count_summary", json!({ "spec": raw, "k_max": kmax }), c.formulas_match, detail)
        .with_witness(
            json!({ "got": [c.weight_count, c.irreducible_count, c.projective_count], "expected": c.expected }),
        );
    Ok(single("counts", Some(f.order()), case))
}

fn nf(order: Option<u32>, algebra: &str, word: &str) -> Result<Report> {
    let f = field(order)?;
    let alg = AlgebraId::parse(algebra)?;
    let x = normal_form(alg, f, word)?;
    let case = Case::new("nf", "normal_form", json!({ "algebra": alg, "word": word }), true, x.to_json());
    Ok(single("nf", Some(f.order()), case))
}

fn prout(order: Option<u32>, input: &Path) -> Result<Report> {
    let f = field(order)?;
    let raw = read_json(input)?;
    let get = |k: &str| -> Result<SL2Mat> {
        SL2Mat::from_json(raw.get(k).ok_or_else(|| Error::Parse(format!("missing matrix {k:?}")))?, f)
    };
    let (a, b, c, d) = (get("a")?, get("b")?, get("c")?, get("d")?);
    let out = prout_solve(&a, &b, &c, &d)?;
    let ok = match &out {
        ProutOutcome::Solved { g } => prout_memberships(&a, &b, &c, &d, g),
        ProutOutcome::Degenerate(cert) => cert.certifies(),
    };
    let case = Case::new("prout", "prout_solve", raw, ok, json!(out));
    Ok(single("sl2 prout", Some(f.order()), case))
}

fn lift(order: Option<u32>, input: &Path) -> Result<Report> {
    let f = field(order)?;
    let raw = read_json(input)?;
    let m = SL2Mat::from_json(&raw, f)?;
    let (lo, up) = bruhat_factor(&m)?;
    let (a, b) = gluing_lift(&m)?;
    let ok = lo.mul(&up) == m && a.mul(&b) == m && !a.in_big_cell() && !b.in_big_cell();
    let detail = json!({ "m_minus": lo, "m_plus": up, "a": a, "b": b });
    let case = Case::new("lift", "gluing_lift", raw, ok, detail.clone()).with_witness(detail);
    Ok(single("sl2 lift", Some(f.order()), case))
}

fn kronecker(order: Option<u32>, maxdim: usize) -> Result<Report> {
    let f = field(order)?;
    let r = kronecker_bruteforce(f, maxdim)?;
    let case =
        Case::new("kronecker", "kronecker_bruteforce", json!({ "max_total_dim": maxdim }), r.all_roots, json!(r))
            .with_witness(json!({ "dimension_vectors": r.dimension_vectors }));
    Ok(single("oracle kronecker", Some(f.order()), case))
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let o = cli.order;
    match &cli.command {
        Command::Selftest { seed, no_rerun } => {
            if let Some(n) = o {
                CycloField::of(n as i64)?;
            }
            Ok(run_selftest(&SelftestConfig { order: o, seed: *seed, determinism: !no_rerun }))
        }
        Command::Build { spec, verify } => build(o, spec, *verify),
        Command::Classify { spec, kmax } => classify(o, spec, *kmax),
        Command::Counts { spec, kmax } => counts(o, spec, *kmax),
        Command::Nf { algebra, word } => nf(o, algebra, word),
        Command::Sl2 { op: Sl2Op::Prout { input } } => prout(o, input),
        Command::Sl2 { op: Sl2Op::Lift { input } } => lift(o, input),
        Command::Oracle { op: OracleOp::Kronecker { maxdim } } => kronecker(o, *maxdim),
    }
}

/// Parse `argv`, run the command and emit its report. Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = report.to_json_string();
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    if report.pass {
        0
    } else {
        1
    }
}
