//! Command-line surface: parse spec files, run the checks and
//! computations, and emit one JSON report on stdout plus a short human
//! summary on stderr.
//!
//! Exit codes: 0 success, 1 validation failure, 2 hypothesis violation,
//! 3 parse error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{Bimodule, FiniteAlgebra, HomPair, ValidationReport};
use crate::cohomology::{derivation_space, leibniz_violations, TriCohomology};
use crate::duals::{
    build_obstruction_derivation, obstruction_inner_test, transfer_along_quotient,
    weak_amenability_check,
};
use crate::linalg::Mat;
use crate::specfile::{load_spec, load_tri, AlgebraSpec, SpecFile};
use crate::triangular::TriangularAlgebra;
use crate::Error;

#[derive(Parser)]
#[command(
    name = "tricohom",
    about = "Exact first twisted cohomology of finite-dimensional algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the axioms of an algebra, hom, bimodule, tri or ideal file.
    Check { path: PathBuf },
    /// Compute dim Z1, dim B1 and dim H1 for (algebra, module, sigma, tau).
    H1 {
        algebra: PathBuf,
        module: PathBuf,
        sigma: PathBuf,
        tau: PathBuf,
        /// Include the Z1 and B1 basis matrices in the report.
        #[arg(long)]
        basis: bool,
        /// Re-check every basis element against the product rule.
        #[arg(long)]
        verify: bool,
    },
    /// Build a triangular algebra from component files.
    TriBuild {
        tri: PathBuf,
        /// Include a re-parseable algebra spec of the result.
        #[arg(long)]
        emit_spec: bool,
    },
    /// Check the corner decomposition of H1 (requires X_AB = 0).
    VerifyDecomposition {
        tri: PathBuf,
        module: PathBuf,
        sigma: PathBuf,
        tau: PathBuf,
    },
    /// Compare H1 into an odd dual of T with the two corner computations.
    WeakAmenability {
        tri: PathBuf,
        sigma: PathBuf,
        tau: PathBuf,
        /// Dual tower level n; the module used is the (2n-1)-th dual.
        #[arg(long, default_value_t = 1)]
        level: usize,
    },
    /// Build the off-diagonal obstruction derivation for sigma and test
    /// whether it is inner.
    Obstruction { tri: PathBuf, sigma: PathBuf },
    /// Build the quotient by an ideal, induce sigma and tau on it, and
    /// compare H1 into dual modules on both levels.
    Quotient {
        ideal: PathBuf,
        sigma: PathBuf,
        tau: PathBuf,
        /// Bimodule files over the quotient algebra; defaults to its
        /// regular bimodule.
        modules: Vec<PathBuf>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 3,
        Error::Hypothesis(_) => 2,
        _ => 1,
    }
}

struct Input {
    spec: SpecFile,
    path: PathBuf,
    sha256: String,
}

fn load_input(path: &Path) -> Result<Input, Error> {
    let bytes =
        std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let sha256 = format!("{:x}", Sha256::digest(&bytes));
    let spec = load_spec(path)?;
    Ok(Input {
        spec,
        path: path.to_path_buf(),
        sha256,
    })
}

fn inputs_field<S: AsRef<str>>(inputs: &[(S, &Input)]) -> Value {
    let mut m = Map::new();
    for (role, input) in inputs {
        m.insert(
            role.as_ref().to_string(),
            json!({
                "path": input.path.display().to_string(),
                "sha256": input.sha256,
            }),
        );
    }
    Value::Object(m)
}

fn mat_rows(m: &Mat) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
        .collect();
    json!(rows)
}

fn violations_field(report: &ValidationReport) -> Value {
    serde_json::to_value(&report.violations).expect("violations serialize")
}

fn expect_algebra(input: &Input) -> Result<FiniteAlgebra, Error> {
    match &input.spec {
        SpecFile::Algebra(a) => a.to_algebra(),
        _ => Err(Error::Parse(format!(
            "{}: expected kind \"algebra\"",
            input.path.display()
        ))),
    }
}

fn expect_bimodule(input: &Input) -> Result<Bimodule, Error> {
    match &input.spec {
        SpecFile::Bimodule(m) => m.to_bimodule(),
        _ => Err(Error::Parse(format!(
            "{}: expected kind \"bimodule\"",
            input.path.display()
        ))),
    }
}

fn expect_hom(input: &Input, over: &FiniteAlgebra) -> Result<crate::AlgebraHom, Error> {
    match &input.spec {
        SpecFile::Hom(h) => {
            let hom = h.to_hom()?;
            if !hom.source.same_structure(over) {
                return Err(Error::Shape(format!(
                    "{}: hom is over a different algebra",
                    input.path.display()
                )));
            }
            Ok(hom)
        }
        _ => Err(Error::Parse(format!(
            "{}: expected kind \"hom\"",
            input.path.display()
        ))),
    }
}

fn expect_tri(input: &Input) -> Result<TriangularAlgebra, Error> {
    match &input.spec {
        SpecFile::Tri(t) => load_tri(&input.path, t),
        _ => Err(Error::Parse(format!(
            "{}: expected kind \"tri\"",
            input.path.display()
        ))),
    }
}

/// The outcome of one command: the JSON report, the stderr summary and
/// the exit code.
struct Outcome {
    report: Value,
    summary: String,
    code: i32,
}

fn cmd_check(path: &Path) -> Result<Outcome, Error> {
    let input = load_input(path)?;
    let (kind, report) = match &input.spec {
        SpecFile::Algebra(a) => ("algebra", a.to_algebra()?.check()),
        SpecFile::Hom(h) => ("hom", h.to_hom()?.check()),
        SpecFile::Bimodule(m) => ("bimodule", m.to_bimodule()?.check()),
        SpecFile::Tri(t) => {
            // component validity is enforced by the builder
            load_tri(&input.path, t)?;
            ("tri", ValidationReport::default())
        }
        SpecFile::Ideal(i) => {
            let (ambient, ideal) = i.to_parts()?;
            ("ideal", ideal.check(&ambient)?)
        }
    };
    let valid = report.is_valid();
    Ok(Outcome {
        report: json!({
            "command": "check",
            "inputs": inputs_field(&[("spec", &input)]),
            "kind": kind,
            "valid": valid,
            "violations": violations_field(&report),
        }),
        summary: format!(
            "check {}: {} ({} violations)",
            path.display(),
            if valid { "valid" } else { "INVALID" },
            report.violations.len()
        ),
        code: if valid { 0 } else { 1 },
    })
}

fn cmd_h1(
    algebra: &Path,
    module: &Path,
    sigma: &Path,
    tau: &Path,
    basis: bool,
    verify: bool,
) -> Result<Outcome, Error> {
    let alg_in = load_input(algebra)?;
    let mod_in = load_input(module)?;
    let sig_in = load_input(sigma)?;
    let tau_in = load_input(tau)?;
    let a = expect_algebra(&alg_in)?;
    let x = expect_bimodule(&mod_in)?;
    if !x.check().is_valid() {
        return Err(Error::Invalid(format!(
            "{}: the module fails the bimodule axioms",
            mod_in.path.display()
        )));
    }
    let pair = HomPair::new(expect_hom(&sig_in, &a)?, expect_hom(&tau_in, &a)?)?;
    let ds = derivation_space(&a, &x, &pair)?;
    let mut report = Map::new();
    report.insert("command".into(), json!("h1"));
    report.insert(
        "inputs".into(),
        inputs_field(&[
            ("algebra", &alg_in),
            ("module", &mod_in),
            ("sigma", &sig_in),
            ("tau", &tau_in),
        ]),
    );
    report.insert(
        "dimensions".into(),
        json!({"z1": ds.z1_basis.len(), "b1": ds.b1_basis.len(), "h1": ds.h1_dim}),
    );
    if basis {
        report.insert(
            "z1_basis".into(),
            Value::Array(ds.z1_basis.iter().map(mat_rows).collect()),
        );
        report.insert(
            "b1_basis".into(),
            Value::Array(ds.b1_basis.iter().map(mat_rows).collect()),
        );
    }
    if verify {
        let all_ok = ds
            .z1_basis
            .iter()
            .chain(&ds.b1_basis)
            .all(|d| leibniz_violations(&a, &x, &pair, d).is_empty());
        if !all_ok {
            return Err(Error::Invalid(
                "a computed basis element fails the product rule".into(),
            ));
        }
        report.insert("verified".into(), json!(true));
    }
    Ok(Outcome {
        report: Value::Object(report),
        summary: format!(
            "h1: Z1={} B1={} H1={}",
            ds.z1_basis.len(),
            ds.b1_basis.len(),
            ds.h1_dim
        ),
        code: 0,
    })
}

fn cmd_tri_build(tri: &Path, emit_spec: bool) -> Result<Outcome, Error> {
    let tri_in = load_input(tri)?;
    let t = expect_tri(&tri_in)?;
    let mut report = Map::new();
    report.insert("command".into(), json!("tri-build"));
    report.insert("inputs".into(), inputs_field(&[("tri", &tri_in)]));
    report.insert(
        "dimensions".into(),
        json!({"a": t.a_dim(), "m": t.m_dim(), "b": t.b_dim(), "total": t.dim()}),
    );
    report.insert("valid".into(), json!(true));
    if emit_spec {
        let spec = SpecFile::Algebra(AlgebraSpec::from_algebra(t.algebra()));
        report.insert(
            "emitted_spec".into(),
            serde_json::to_value(&spec).expect("spec serializes"),
        );
    }
    Ok(Outcome {
        report: Value::Object(report),
        summary: format!(
            "tri-build: dim {} = {} + {} + {}",
            t.dim(),
            t.a_dim(),
            t.m_dim(),
            t.b_dim()
        ),
        code: 0,
    })
}

fn cmd_verify_decomposition(
    tri: &Path,
    module: &Path,
    sigma: &Path,
    tau: &Path,
) -> Result<Outcome, Error> {
    let tri_in = load_input(tri)?;
    let mod_in = load_input(module)?;
    let sig_in = load_input(sigma)?;
    let tau_in = load_input(tau)?;
    let t = expect_tri(&tri_in)?;
    let x = expect_bimodule(&mod_in)?;
    let pair = HomPair::new(
        expect_hom(&sig_in, t.algebra())?,
        expect_hom(&tau_in, t.algebra())?,
    )?;
    let ctx = TriCohomology::new(&t, &x, &pair)?;
    let theorem = ctx.verify_main_theorem()?;
    let ok = theorem.sum_holds && theorem.kernel_matches_inner;
    Ok(Outcome {
        report: json!({
            "command": "verify-decomposition",
            "inputs": inputs_field(&[
                ("tri", &tri_in),
                ("module", &mod_in),
                ("sigma", &sig_in),
                ("tau", &tau_in),
            ]),
            "dimensions": {"h1_t": theorem.h1_t, "h1_a": theorem.h1_a, "h1_b": theorem.h1_b},
            "sum_holds": theorem.sum_holds,
            "kernel_matches_inner": theorem.kernel_matches_inner,
        }),
        summary: format!(
            "verify-decomposition: h1_T={} h1_A={} h1_B={} sum={} kernel={}",
            theorem.h1_t,
            theorem.h1_a,
            theorem.h1_b,
            theorem.sum_holds,
            theorem.kernel_matches_inner
        ),
        code: if ok { 0 } else { 1 },
    })
}

fn cmd_weak_amenability(
    tri: &Path,
    sigma: &Path,
    tau: &Path,
    level: usize,
) -> Result<Outcome, Error> {
    let tri_in = load_input(tri)?;
    let sig_in = load_input(sigma)?;
    let tau_in = load_input(tau)?;
    let t = expect_tri(&tri_in)?;
    let pair = HomPair::new(
        expect_hom(&sig_in, t.algebra())?,
        expect_hom(&tau_in, t.algebra())?,
    )?;
    let r = weak_amenability_check(&t, &pair, level)?;
    Ok(Outcome {
        report: json!({
            "command": "weak-amenability",
            "inputs": inputs_field(&[("tri", &tri_in), ("sigma", &sig_in), ("tau", &tau_in)]),
            "level": r.level,
            "dimensions": {"h1_t": r.h1_t, "h1_a": r.h1_a, "h1_b": r.h1_b},
            "identity_holds": r.identity_holds,
            "weakly_amenable": r.weakly_amenable,
        }),
        summary: format!(
            "weak-amenability level {}: h1_T={} h1_A={} h1_B={} identity={} amenable={}",
            r.level, r.h1_t, r.h1_a, r.h1_b, r.identity_holds, r.weakly_amenable
        ),
        code: 0,
    })
}

fn cmd_obstruction(tri: &Path, sigma: &Path) -> Result<Outcome, Error> {
    let tri_in = load_input(tri)?;
    let sig_in = load_input(sigma)?;
    let t = expect_tri(&tri_in)?;
    let sigma_hom = expect_hom(&sig_in, t.algebra())?;
    let d = build_obstruction_derivation(&t, &sigma_hom)?;
    let verdict = obstruction_inner_test(&t, &sigma_hom, &d)?;
    Ok(Outcome {
        report: json!({
            "command": "obstruction",
            "inputs": inputs_field(&[("tri", &tri_in), ("sigma", &sig_in)]),
            "derivation_is_zero": d.matrix.is_zero(),
            "leibniz_ok": true,
            "inner": verdict.inner,
            "sigma_m_rank": d.sigma_m.rank(),
            "sigma_m_is_zero": verdict.sigma_m_is_zero,
            "determinations_agree": verdict.determinations_agree(),
        }),
        summary: format!(
            "obstruction: D {}, {}, rank sigma|M = {}",
            if d.matrix.is_zero() {
                "zero"
            } else {
                "nonzero"
            },
            if verdict.inner { "inner" } else { "not inner" },
            d.sigma_m.rank()
        ),
        code: 0,
    })
}

fn cmd_quotient(
    ideal: &Path,
    sigma: &Path,
    tau: &Path,
    modules: &[PathBuf],
) -> Result<Outcome, Error> {
    let ideal_in = load_input(ideal)?;
    let sig_in = load_input(sigma)?;
    let tau_in = load_input(tau)?;
    let (ambient, ideal_obj) = match &ideal_in.spec {
        SpecFile::Ideal(i) => i.to_parts()?,
        _ => {
            return Err(Error::Parse(format!(
                "{}: expected kind \"ideal\"",
                ideal_in.path.display()
            )))
        }
    };
    let check = ideal_obj.check(&ambient)?;
    if !check.is_valid() {
        return Err(Error::Inclusion(
            "the given subspace is not a two-sided ideal".into(),
        ));
    }
    let pair = HomPair::new(
        expect_hom(&sig_in, &ambient)?,
        expect_hom(&tau_in, &ambient)?,
    )?;
    let q = crate::algebra::quotient_algebra(&ambient, &ideal_obj)?;
    let mut module_inputs = Vec::new();
    let family: Vec<Bimodule> = if modules.is_empty() {
        vec![Bimodule::regular(&q.algebra)]
    } else {
        let mut fam = Vec::new();
        for m in modules {
            let input = load_input(m)?;
            let x = expect_bimodule(&input)?;
            if !x.left_algebra().same_structure(&q.algebra)
                || !x.right_algebra().same_structure(&q.algebra)
            {
                return Err(Error::Shape(format!(
                    "{}: module is not over the quotient algebra",
                    input.path.display()
                )));
            }
            module_inputs.push(input);
            fam.push(x);
        }
        fam
    };
    let r = transfer_along_quotient(&ambient, &ideal_obj, &pair, &family)?;
    let mut inputs = vec![
        ("ideal".to_string(), &ideal_in),
        ("sigma".to_string(), &sig_in),
        ("tau".to_string(), &tau_in),
    ];
    for (k, input) in module_inputs.iter().enumerate() {
        inputs.push((format!("module{k}"), input));
    }
    let consistent = r.flagged.iter().all(|&f| !f);
    Ok(Outcome {
        report: json!({
            "command": "quotient",
            "inputs": inputs_field(&inputs),
            "quotient_dim": r.quotient_dim,
            "quotient_h1": r.quotient_h1,
            "ambient_h1": r.ambient_h1,
            "flagged": r.flagged,
            "consistent": consistent,
        }),
        summary: format!(
            "quotient: dim {} -> {}, h1 quotient {:?} vs ambient {:?}",
            ambient.dim(),
            r.quotient_dim,
            r.quotient_h1,
            r.ambient_h1
        ),
        code: if consistent { 0 } else { 1 },
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Check { path } => cmd_check(path),
        Command::H1 {
            algebra,
            module,
            sigma,
            tau,
            basis,
            verify,
        } => cmd_h1(algebra, module, sigma, tau, *basis, *verify),
        Command::TriBuild { tri, emit_spec } => cmd_tri_build(tri, *emit_spec),
        Command::VerifyDecomposition {
            tri,
            module,
            sigma,
            tau,
        } => cmd_verify_decomposition(tri, module, sigma, tau),
        Command::WeakAmenability {
            tri,
            sigma,
            tau,
            level,
        } => cmd_weak_amenability(tri, sigma, tau, *level),
        Command::Obstruction { tri, sigma } => cmd_obstruction(tri, sigma),
        Command::Quotient {
            ideal,
            sigma,
            tau,
            modules,
        } => cmd_quotient(ideal, sigma, tau, modules),
    }
}

/// Runs the parsed command line and returns the process exit code. The
/// JSON report goes to stdout, the summary (or error) to stderr.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.report).expect("report serializes")
            );
            eprintln!("{}", outcome.summary);
            outcome.code
        }
        Err(e) => {
            let code = exit_code(&e);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "error": e.to_string(),
                    "exit_code": code,
                }))
                .expect("report serializes")
            );
            eprintln!("error: {e}");
            code
        }
    }
}
