//! `qosc`: run the verification suites, the braiding search, and
//! representation builds from the command line.
//!
//! Exit codes: 0 when every check passes, 1 on a check failure or rejected
//! parameters, 2 on usage or configuration errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use qosc::field::{FieldElem, Specialization};
use qosc::qgroup::Subgroup;
use qosc::report::{verify, Scope, VerifyParams};
use qosc::reps::{
    build_rep_a, build_rep_b, casimir_check, verify_rep, CasimirReport, RelationSet, RepError, RepParamsA, RepParamsB,
    RepVerification, TruncatedRep,
};
use qosc::rmatrix::{
    braiding_constraints_at_q_squared, solve_braidings_numeric, FifthReading, SolveOptions, SolveReport,
};

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "qosc",
    version,
    about = "Verification engine for the two-parameter deformed oscillator"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the symbolic verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        scope: Scope,
        /// full, A or B.
        #[arg(long)]
        subgroup: Option<Subgroup>,
        /// `generic` or a value such as `1`, `3/2` or `q^2`.
        #[arg(long = "Q1")]
        q1: Option<String>,
        /// Numeric q for the representation checks.
        #[arg(long)]
        q: Option<f64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Search numerically for braidings R' at Q1 = q^2.
    Solve {
        #[arg(long)]
        q: f64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        starts: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build and check a truncated subgroup representation.
    Rep {
        #[arg(long)]
        paramfile: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Verify {
            scope,
            subgroup,
            q1,
            q,
            json,
        } => cmd_verify(scope, subgroup, q1.as_deref(), q, json.as_deref()),
        Cmd::Solve { q, seed, starts, json } => cmd_solve(q, seed, starts, json.as_deref()),
        Cmd::Rep { paramfile, json } => cmd_rep(&paramfile, json.as_deref()),
    };
    ExitCode::from(code)
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    USAGE
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), u8> {
    let Some(path) = path else { return Ok(()) };
    let s = serde_json::to_string_pretty(value).map_err(usage)?;
    std::fs::write(path, s + "\n").map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parse_q1(s: &str) -> Result<Specialization, String> {
    if s == "generic" {
        return Ok(Specialization::generic());
    }
    let v: FieldElem = s.parse().map_err(|e| format!("--Q1 `{s}`: {e}"))?;
    Ok(Specialization::q1(v))
}

fn cmd_verify(scope: Scope, subgroup: Option<Subgroup>, q1: Option<&str>, q: Option<f64>, json: Option<&Path>) -> u8 {
    let q1 = match q1.map(parse_q1).transpose() {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    if let Some(q) = q {
        if !(q > 0.0 && q.is_finite()) || q == 1.0 {
            return usage(format!("--q must be positive and different from 1 (got {q})"));
        }
    }
    let params = VerifyParams { subgroup, q1, q };
    let report = verify(scope, &params);
    print!("{}", report.render());
    if let Err(c) = write_json(json, &report) {
        return c;
    }
    if report.passed {
        PASS
    } else {
        FAIL
    }
}

/// Solutions expected at every admissible point: the specialization of R'
/// and the three named ones.
const EXPECTED_SOLUTIONS: usize = 4;

fn cmd_solve(q: f64, seed: u64, starts: usize, json: Option<&Path>) -> u8 {
    let cs = braiding_constraints_at_q_squared(FifthReading::Exchange);
    let opts = SolveOptions {
        q0: q,
        seed,
        starts,
        ..Default::default()
    };
    let report: SolveReport = match solve_braidings_numeric(&cs, &opts) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    println!(
        "q0 = {q}, seed {seed}: {} of {} starts converged, {} distinct solutions",
        report.converged,
        report.starts,
        report.solutions.len()
    );
    let mut unlabeled = 0;
    for (i, s) in report.solutions.iter().enumerate() {
        let Some(label) = &s.label else {
            unlabeled += 1;
            continue;
        };
        println!(
            "  #{i:<3} {label:<12} residual {:.2e}  hits {:<4} {}",
            s.residual,
            s.hits,
            if s.on_family { "on a family" } else { "isolated" }
        );
    }
    if unlabeled > 0 {
        let worst = report
            .solutions
            .iter()
            .filter(|s| s.label.is_none())
            .map(|s| s.residual)
            .fold(0.0, f64::max);
        println!("  {unlabeled} unlabeled solutions, max residual {worst:.2e}");
    }
    for t in &report.templates {
        println!(
            "  template {:<12} residual {:.2e}  recovered {}  on family {}",
            t.label, t.residual, t.recovered, t.on_family
        );
    }
    if report.family_dim > 0 {
        println!(
            "  family of dimension {} varying in {:?}",
            report.family_dim, report.family_varying
        );
    }
    if let Err(c) = write_json(json, &report) {
        return c;
    }
    let ok = report.solutions.len() == EXPECTED_SOLUTIONS
        && report.templates.iter().all(|t| t.recovered)
        && report.solutions.iter().all(|s| s.residual < opts.verify_tol);
    if ok {
        PASS
    } else {
        println!("FAILED: expected {EXPECTED_SOLUTIONS} isolated labeled solutions");
        FAIL
    }
}

/// A complex parameter: a bare number or `[re, im]`.
#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(untagged)]
enum Cx {
    Re(f64),
    Pair([f64; 2]),
}

impl Cx {
    fn value(self) -> Complex64 {
        match self {
            Cx::Re(x) => Complex64::new(x, 0.0),
            Cx::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ParamFile {
    subgroup: Subgroup,
    q: f64,
    #[serde(rename = "Q1")]
    q1: Option<f64>,
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: Cx,
    #[serde(rename = "C")]
    c: Option<Cx>,
    #[serde(rename = "D")]
    d: Option<Cx>,
    dim: usize,
    #[serde(default)]
    window_start: i32,
}

#[derive(Serialize)]
struct RepReport<'a> {
    params: &'a ParamFile,
    verification: Option<RepVerification>,
    casimir: Option<CasimirReport>,
    error: Option<String>,
    passed: bool,
}

fn build(p: &ParamFile) -> Result<(TruncatedRep, Option<RepParamsB>), RepError> {
    match p.subgroup {
        Subgroup::A => {
            if let Some(q1) = p.q1 {
                if (q1 - p.q * p.q).abs() > 1e-12 * q1.abs().max(1.0) {
                    return Err(RepError::InvalidParams(format!(
                        "subgroup A lives at Q1 = q^2, got Q1 = {q1}"
                    )));
                }
            }
            let need = |x: Option<Cx>, n: &str| {
                x.map(Cx::value)
                    .ok_or_else(|| RepError::InvalidParams(format!("subgroup A needs {n}")))
            };
            let pa = RepParamsA {
                a: p.a,
                b: p.b.value(),
                c: need(p.c, "C")?,
                d: need(p.d, "D")?,
                q: p.q,
                dim: p.dim,
            };
            Ok((build_rep_a(&pa)?, None))
        }
        Subgroup::B => {
            let q1 =
                p.q1.ok_or_else(|| RepError::InvalidParams("subgroup B needs Q1".into()))?;
            let pb = RepParamsB {
                window_start: p.window_start,
                ..RepParamsB::new(p.a, p.b.value(), p.q, q1, p.dim)
            };
            Ok((build_rep_b(&pb)?, Some(pb)))
        }
        Subgroup::Full => Err(RepError::InvalidParams(
            "representations exist for subgroups A and B only".into(),
        )),
    }
}

fn cmd_rep(path: &Path, json: Option<&Path>) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    let p: ParamFile = match serde_json::from_str(&text) {
        Ok(p) => p,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    let mut out = RepReport {
        params: &p,
        verification: None,
        casimir: None,
        error: None,
        passed: false,
    };
    let run = |out: &mut RepReport| -> Result<(), RepError> {
        let (rep, pb) = build(&p)?;
        let v = verify_rep(&rep, &RelationSet::printed(p.subgroup)?)?;
        println!(
            "subgroup {}, dim {}, interior states {}..={}: hermitian {}, max residual {:.2e}, max scaled {:.2e}",
            p.subgroup.name(),
            v.dim,
            v.interior.0,
            v.interior.1,
            v.hermitian,
            v.max,
            v.max_scaled
        );
        for r in v.residuals.iter().filter(|r| r.scaled > qosc::reps::REP_TOL) {
            println!("  {}: scaled residual {:.2e} at {:?}", r.relation, r.scaled, r.location);
        }
        let mut passed = v.passed;
        out.verification = Some(v);
        if let Some(pb) = pb {
            let c = casimir_check(&rep, &pb)?;
            println!(
                "Casimir: C = {} on the first interior state, scalar on interior {}, max commutator {:.2e}, central at {:?}",
                c.scalar, c.scalar_on_interior, c.max_commutator, c.central_at
            );
            if let Some(d) = &c.discrepancy {
                println!("  note: {d}");
            }
            // C is only asserted where it is central
            if c.central_at.iter().any(|s| s == "Q1 = 1") && (pb.q1 - 1.0).abs() < 1e-15 {
                passed &= c.scalar_on_interior;
            }
            out.casimir = Some(c);
        }
        out.passed = passed;
        Ok(())
    };
    let code = match run(&mut out) {
        Ok(()) if out.passed => PASS,
        Ok(()) => FAIL,
        Err(e) => {
            println!("rejected: {e}");
            out.error = Some(e.to_string());
            FAIL
        }
    };
    if let Err(c) = write_json(json, &out) {
        return c;
    }
    println!("{}", if code == PASS { "PASSED" } else { "FAILED" });
    code
}
