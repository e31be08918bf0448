//! Command-line interface: file-driven validation, cohomology tables,
//! the full identity-check suite, reconstruction, and catalog export.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical identity
//! is violated, 2 for input errors (unparseable file, unknown name,
//! bad shapes).

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::cochain::Cochain;
use crate::cohomology::{
    check_alpha_chain_map, check_beta_chain_map, check_d_squared, check_leibniz_diamond,
    check_leibniz_trivial, cohomology_dims, verify_iso, TheoremCheckResult,
};
use crate::format::{
    self, algebra_from_doc, entry_to_doc, family_from_doc, parse_input, to_toml, AlgebraDoc,
    InputDoc, ReportDoc, Status,
};
use crate::homlie::{format_vec, HomLieAlgebra, Representation};
use crate::reconstruct::{reconstruct, OperatorFamily};

#[derive(Parser)]
#[command(
    name = "homcoh",
    about = "Exact cohomology and representation checks for finite-dimensional Hom-Lie algebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every defining identity of the algebra and its representations in a file
    Validate {
        path: PathBuf,
        /// Write the structured report here as well
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cohomology dimension tables per shift, plus the cross-shift dimension verdict
    Cohomology {
        path: PathBuf,
        /// Representation name from the file
        #[arg(long)]
        rep: String,
        /// Shifts to compute, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = vec![0, 1, 2, 3])]
        s: Vec<u32>,
        /// Highest degree to report (defaults to the algebra dimension)
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full suite: squared differential, both chain maps, both
    /// Leibniz rules on random cochains, and the cohomology isomorphism
    Check {
        path: PathBuf,
        /// Representation name from the file
        #[arg(long)]
        rep: String,
        /// Shifts to check, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = vec![0, 1, 2, 3])]
        s: Vec<u32>,
        /// Random cochain pairs per shift for the Leibniz rules (0 disables)
        #[arg(long, default_value_t = 100)]
        trials: u32,
        /// Seed for the randomized layer, echoed in the report
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the action and bracket from coboundary matrices and verify them
    Reconstruct {
        path: PathBuf,
        /// Representation to assemble the family from (algebra files only)
        #[arg(long)]
        rep: Option<String>,
        /// Shift at which the family is assembled
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List or export the built-in instances
    Catalog {
        /// Export NAME to PATH as an algebra file
        #[arg(long, num_args = 2, value_names = ["NAME", "PATH"])]
        export: Option<Vec<String>>,
        /// Print the available names
        #[arg(long)]
        list: bool,
    },
}

/// Anything that should terminate with exit code 2.
#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Format(#[from] format::FormatError),
    #[error("{0}")]
    Other(String),
}

pub fn run() -> u8 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate { path, out } => cmd_validate(&path, out.as_deref()),
        Command::Cohomology {
            path,
            rep,
            s,
            max_degree,
            out,
        } => cmd_cohomology(&path, &rep, &s, max_degree, out.as_deref()),
        Command::Check {
            path,
            rep,
            s,
            trials,
            seed,
            out,
        } => cmd_check(&path, &rep, &s, trials, seed, out.as_deref()),
        Command::Reconstruct { path, rep, s, out } => {
            cmd_reconstruct(&path, rep.as_deref(), s, out.as_deref())
        }
        Command::Catalog { export, list } => cmd_catalog(export.as_deref(), list),
    };
    match outcome {
        Ok(Status::Ok) => 0,
        Ok(Status::Violated) => 1,
        Ok(Status::Error) | Err(_) => {
            if let Err(e) = outcome {
                eprintln!("error: {e}");
            }
            2
        }
    }
}

fn load_algebra_doc(path: &Path) -> Result<AlgebraDoc, InputError> {
    let text = std::fs::read_to_string(path)?;
    match parse_input(&text)? {
        InputDoc::Algebra(doc) => Ok(doc),
        InputDoc::Family(_) => Err(InputError::Other(format!(
            "{} holds an operator family, not an algebra",
            path.display()
        ))),
    }
}

fn find_rep<'a>(
    reps: &'a [(String, Representation)],
    name: &str,
    path: &Path,
) -> Result<&'a Representation, InputError> {
    reps.iter()
        .find(|(n, _)| n == name)
        .map(|(_, r)| r)
        .ok_or_else(|| {
            let known: Vec<&str> = reps.iter().map(|(n, _)| n.as_str()).collect();
            InputError::Other(format!(
                "representation {name:?} not found in {}; known: {}",
                path.display(),
                if known.is_empty() {
                    "(none)".to_string()
                } else {
                    known.join(", ")
                }
            ))
        })
}

fn emit(report: &ReportDoc, out: Option<&Path>) -> Result<Status, InputError> {
    render_report(report);
    if let Some(path) = out {
        std::fs::write(path, to_toml(report))?;
    }
    Ok(report.status)
}

fn render_report(report: &ReportDoc) {
    for record in &report.cohomology {
        println!("shift s={}", record.s);
        println!(
            "  {:>3} {:>7} {:>7} {:>7} {:>7}",
            "k", "dim C", "dim Z", "dim B", "dim H"
        );
        for d in &record.degrees {
            println!(
                "  {:>3} {:>7} {:>7} {:>7} {:>7}",
                d.k, d.dim_cochains, d.dim_cocycles, d.dim_coboundaries, d.dim_cohomology
            );
        }
    }
    for v in &report.violations {
        println!(
            "violated {} [{}] at indices {:?}: {} != {}",
            v.identity, v.context, v.indices, v.left, v.right
        );
    }
    for c in &report.checks {
        if c.holds {
            println!("check {:<40} ok", c.name);
        } else {
            println!("check {:<40} VIOLATED", c.name);
            for w in &c.witnesses {
                println!("    at {}: {} != {}", w.inputs, w.left, w.right);
            }
        }
    }
    let status = match report.status {
        Status::Ok => "ok",
        Status::Violated => "violated",
        Status::Error => "error",
    };
    println!("status: {status}");
}

fn cmd_validate(path: &Path, out: Option<&Path>) -> Result<Status, InputError> {
    let doc = load_algebra_doc(path)?;
    let (algebra, reps) = algebra_from_doc(&doc)?;
    let mut report = ReportDoc::new("validate");
    report.input = Some(path.display().to_string());
    report.add_validation("algebra", &algebra.validate());
    for (name, rep) in &reps {
        report.add_validation(&format!("representation {name}"), &rep.validate());
    }
    emit(&report, out)
}

fn cmd_cohomology(
    path: &Path,
    rep_name: &str,
    shifts: &[u32],
    max_degree: Option<usize>,
    out: Option<&Path>,
) -> Result<Status, InputError> {
    let doc = load_algebra_doc(path)?;
    let (algebra, reps) = algebra_from_doc(&doc)?;
    let rep = find_rep(&reps, rep_name, path)?;
    let kmax = resolve_max_degree(&algebra, max_degree)?;

    let mut report = ReportDoc::new("cohomology");
    report.input = Some(path.display().to_string());
    report.representation = Some(rep_name.to_string());
    let mut dims = Vec::new();
    for &s in shifts {
        let r = cohomology_dims(rep, s, kmax);
        dims.push((s, r.cohomology_dims()));
        report.add_cohomology(&r);
    }
    // cross-shift verdict on cohomology dimensions
    for pair in dims.windows(2) {
        let ((s1, d1), (s2, d2)) = (&pair[0], &pair[1]);
        let mut check = TheoremCheckResult::new(format!("equal_cohomology_dims s={s1},{s2}"));
        if d1 != d2 {
            check.fail(
                format!("shifts {s1} and {s2}"),
                format!("{d1:?}"),
                format!("{d2:?}"),
            );
        }
        report.add_check(&check);
    }
    emit(&report, out)
}

fn resolve_max_degree(
    algebra: &HomLieAlgebra,
    max_degree: Option<usize>,
) -> Result<usize, InputError> {
    let n = algebra.dim();
    let kmax = max_degree.unwrap_or(n);
    if kmax > n {
        return Err(InputError::Other(format!(
            "max degree {kmax} exceeds the algebra dimension {n}"
        )));
    }
    Ok(kmax)
}

fn cmd_check(
    path: &Path,
    rep_name: &str,
    shifts: &[u32],
    trials: u32,
    seed: u64,
    out: Option<&Path>,
) -> Result<Status, InputError> {
    let doc = load_algebra_doc(path)?;
    let (algebra, reps) = algebra_from_doc(&doc)?;
    let rep = find_rep(&reps, rep_name, path)?;
    let n = algebra.dim();

    let mut report = ReportDoc::new("check");
    report.input = Some(path.display().to_string());
    report.representation = Some(rep_name.to_string());
    report.seed = Some(seed);
    report.trials = Some(trials);

    report.add_validation("algebra", &algebra.validate());
    report.add_validation(&format!("representation {rep_name}"), &rep.validate());

    for &s in shifts {
        report.add_check(&check_d_squared(rep, s, n));
        report.add_check(&check_beta_chain_map(rep, s, n));
        report.add_check(&check_alpha_chain_map(rep, s, n));
        report.add_check(&verify_iso(rep, s, n));
    }

    if trials > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for &s in shifts {
            let mut wedge_result =
                TheoremCheckResult::new(format!("leibniz_wedge trials={trials}"));
            let mut diamond_result =
                TheoremCheckResult::new(format!("leibniz_diamond shift={s} trials={trials}"));
            for trial in 0..trials {
                let k = random_degree(&mut rng, 1, 2.min(n));
                let l = random_degree(&mut rng, 0, 2.min(n.saturating_sub(k)));
                let xi = Cochain::random(&mut rng, n, k, 1);
                let xi2 = Cochain::random(&mut rng, n, l, 1);
                let eta = Cochain::random(&mut rng, n, l, rep.vdim());

                merge_trial(
                    &mut wedge_result,
                    trial,
                    check_leibniz_trivial(&algebra, &xi, &xi2),
                );
                merge_trial(
                    &mut diamond_result,
                    trial,
                    check_leibniz_diamond(rep, s, &xi, &eta),
                );
            }
            report.add_check(&wedge_result);
            report.add_check(&diamond_result);
        }
    }
    emit(&report, out)
}

fn random_degree(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    if lo >= hi {
        return lo;
    }
    rand::Rng::gen_range(rng, lo..=hi)
}

fn merge_trial(into: &mut TheoremCheckResult, trial: u32, result: TheoremCheckResult) {
    for w in result.witnesses {
        into.fail(format!("trial {trial}: {}", w.inputs), w.left, w.right);
    }
}

fn cmd_reconstruct(
    path: &Path,
    rep_name: Option<&str>,
    s: u32,
    out: Option<&Path>,
) -> Result<Status, InputError> {
    let text = std::fs::read_to_string(path)?;
    let mut report = ReportDoc::new("reconstruct");
    report.input = Some(path.display().to_string());

    let (family, original) = match parse_input(&text)? {
        InputDoc::Family(doc) => (family_from_doc(&doc)?, None),
        InputDoc::Algebra(doc) => {
            let (_, reps) = algebra_from_doc(&doc)?;
            let name = rep_name.ok_or_else(|| {
                InputError::Other("algebra input requires --rep to pick a representation".into())
            })?;
            let rep = find_rep(&reps, name, path)?.clone();
            report.representation = Some(name.to_string());
            (OperatorFamily::from_representation(&rep, s), Some(rep))
        }
    };

    let recon = reconstruct(&family).map_err(|e| InputError::Other(e.to_string()))?;
    // recovered-vs-original diff; empty exactly when recovery is bit-exact
    if let Some(rep) = &original {
        let mut diff = TheoremCheckResult::new("recovered_equals_original");
        for i in 0..family.n {
            if &recon.rho[i] != rep.rho(i) {
                diff.fail(
                    format!("action of basis vector {}", i + 1),
                    format!("{:?}", recon.rho[i]),
                    format!("{:?}", rep.rho(i)),
                );
            }
            for j in i + 1..family.n {
                if recon.bracket[i][j] != rep.algebra().structure(i, j) {
                    diff.fail(
                        format!("bracket ({}, {})", i + 1, j + 1),
                        format_vec(&recon.bracket[i][j]),
                        format_vec(rep.algebra().structure(i, j)),
                    );
                }
            }
        }
        report.add_check(&diff);
    }
    for d in &recon.diagnostics {
        report.add_check(d);
    }
    emit(&report, out)
}

fn cmd_catalog(export: Option<&[String]>, list: bool) -> Result<Status, InputError> {
    if list || export.is_none() {
        for name in catalog::BUILTIN_NAMES {
            println!("{name}");
        }
    }
    if let Some(args) = export {
        let (name, path) = (&args[0], &args[1]);
        let entry = catalog::builtin(name).map_err(|e| InputError::Other(e.to_string()))?;
        std::fs::write(path, to_toml(&entry_to_doc(&entry)))?;
        println!("wrote {name} to {path}");
    }
    Ok(Status::Ok)
}
