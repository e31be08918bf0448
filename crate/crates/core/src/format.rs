//! On-disk format for algebras, representations, operator families, and
//! reports: TOML documents whose scalars are decimal or `p/q` strings,
//! so exactness survives every round trip.
//!
//! Files index basis vectors from 1; everything in memory is 0-based.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::homlie::{AlgebraError, HomLieAlgebra, Representation, ValidationReport};
use crate::linalg::{format_rat, Matrix, Rat};
use crate::reconstruct::OperatorFamily;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("TOML parse error: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
}

impl FormatError {
    fn field(field: impl Into<String>, message: impl ToString) -> Self {
        FormatError::Field {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

/// Algebra document: dimension, twist, bracket table on pairs `i < j`
/// (unlisted pairs are zero), and optional named representations.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub alpha: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bracket: Vec<BracketRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representations: BTreeMap<String, RepRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepRecord {
    pub vdim: usize,
    pub beta: Vec<Vec<String>>,
    pub rho: Vec<Vec<Vec<String>>>,
}

/// Operator-family document, for feeding externally produced coboundary
/// matrices into reconstruction.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub operator_family: FamilyRecord,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyRecord {
    pub n: usize,
    pub m: usize,
    pub s: u32,
    pub alpha: Vec<Vec<String>>,
    pub beta: Vec<Vec<String>>,
    pub d0: Vec<Vec<String>>,
    pub d1: Vec<Vec<String>>,
    pub dtriv1: Vec<Vec<String>>,
}

/// Either kind of input document, detected by the presence of the
/// `operator_family` table.
#[derive(Debug, Clone)]
pub enum InputDoc {
    Algebra(AlgebraDoc),
    Family(FamilyDoc),
}

pub fn parse_input(text: &str) -> Result<InputDoc, FormatError> {
    let value: toml::Value = toml::from_str(text)?;
    let is_family = value
        .as_table()
        .is_some_and(|t| t.contains_key("operator_family"));
    if is_family {
        Ok(InputDoc::Family(toml::from_str(text)?))
    } else {
        Ok(InputDoc::Algebra(toml::from_str(text)?))
    }
}

fn parse_rat_at(field: &str, s: &str) -> Result<Rat, FormatError> {
    crate::linalg::parse_rat(s).map_err(|e| FormatError::field(field, e))
}

fn parse_matrix(
    field: &str,
    rows: &[Vec<String>],
    expect_rows: usize,
    expect_cols: usize,
) -> Result<Matrix, FormatError> {
    if rows.len() != expect_rows {
        return Err(FormatError::field(
            field,
            format!("has {} rows, expected {expect_rows}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(expect_rows);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != expect_cols {
            return Err(FormatError::field(
                format!("{field}[{i}]"),
                format!("has {} entries, expected {expect_cols}", row.len()),
            ));
        }
        let mut parsed = Vec::with_capacity(expect_cols);
        for (j, s) in row.iter().enumerate() {
            parsed.push(parse_rat_at(&format!("{field}[{i}][{j}]"), s)?);
        }
        out.push(parsed);
    }
    Matrix::from_rows(out).map_err(|e| FormatError::field(field, e))
}

fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rat).collect())
        .collect()
}

/// Decode an algebra document into the in-memory algebra and its named
/// representations. Shapes and rationals are checked here; the algebra
/// identities themselves are the validators' business.
pub fn algebra_from_doc(
    doc: &AlgebraDoc,
) -> Result<(HomLieAlgebra, Vec<(String, Representation)>), FormatError> {
    let n = doc.dim;
    if n == 0 {
        return Err(FormatError::field("dim", "must be positive"));
    }
    let alpha = parse_matrix("alpha", &doc.alpha, n, n)?;
    let mut pairs = Vec::with_capacity(doc.bracket.len());
    for (r, rec) in doc.bracket.iter().enumerate() {
        let field = format!("bracket[{r}]");
        if rec.i < 1 || rec.j < 1 || rec.i > n || rec.j > n {
            return Err(FormatError::field(
                &field,
                format!("indices ({}, {}) out of range 1..={n}", rec.i, rec.j),
            ));
        }
        if rec.i >= rec.j {
            return Err(FormatError::field(
                &field,
                format!("requires i < j, got ({}, {})", rec.i, rec.j),
            ));
        }
        if rec.coeffs.len() != n {
            return Err(FormatError::field(
                format!("{field}.coeffs"),
                format!("has {} coordinates, expected {n}", rec.coeffs.len()),
            ));
        }
        let mut coeffs = Vec::with_capacity(n);
        for (c, s) in rec.coeffs.iter().enumerate() {
            coeffs.push(parse_rat_at(&format!("{field}.coeffs[{c}]"), s)?);
        }
        pairs.push((rec.i - 1, rec.j - 1, coeffs));
    }
    let algebra = HomLieAlgebra::from_bracket_pairs(n, &pairs, alpha)
        .map_err(|e| FormatError::field("bracket", e))?;

    let mut reps = Vec::with_capacity(doc.representations.len());
    for (name, rec) in &doc.representations {
        let field = format!("representations.{name}");
        let m = rec.vdim;
        if m == 0 {
            return Err(FormatError::field(
                format!("{field}.vdim"),
                "must be positive",
            ));
        }
        let beta = parse_matrix(&format!("{field}.beta"), &rec.beta, m, m)?;
        if rec.rho.len() != n {
            return Err(FormatError::field(
                format!("{field}.rho"),
                format!("has {} matrices, expected {n}", rec.rho.len()),
            ));
        }
        let mut rho = Vec::with_capacity(n);
        for (i, rows) in rec.rho.iter().enumerate() {
            rho.push(parse_matrix(&format!("{field}.rho[{i}]"), rows, m, m)?);
        }
        let rep = Representation::new(algebra.clone(), rho, beta)
            .map_err(|e| FormatError::field(&field, e))?;
        reps.push((name.clone(), rep));
    }
    Ok((algebra, reps))
}

/// Encode a catalog entry as a document; only nonzero brackets on
/// pairs `i < j` are written, with 1-based indices.
pub fn entry_to_doc(entry: &CatalogEntry) -> AlgebraDoc {
    let a = &entry.algebra;
    let n = a.dim();
    let mut bracket = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let coeffs = a.structure(i, j);
            if coeffs.iter().any(|c| !num::Zero::is_zero(c)) {
                bracket.push(BracketRecord {
                    i: i + 1,
                    j: j + 1,
                    coeffs: coeffs.iter().map(format_rat).collect(),
                });
            }
        }
    }
    let representations = entry
        .representations
        .iter()
        .map(|(name, r)| {
            (
                name.clone(),
                RepRecord {
                    vdim: r.vdim(),
                    beta: matrix_to_strings(r.beta()),
                    rho: (0..n).map(|i| matrix_to_strings(r.rho(i))).collect(),
                },
            )
        })
        .collect();
    AlgebraDoc {
        dim: n,
        alpha: matrix_to_strings(a.alpha()),
        bracket,
        representations,
    }
}

pub fn family_from_doc(doc: &FamilyDoc) -> Result<OperatorFamily, FormatError> {
    let rec = &doc.operator_family;
    let (n, m) = (rec.n, rec.m);
    let pairs = crate::cochain::tuple_count(n, 2);
    let alpha = parse_matrix("operator_family.alpha", &rec.alpha, n, n)?;
    let beta = parse_matrix("operator_family.beta", &rec.beta, m, m)?;
    let d0 = parse_matrix("operator_family.d0", &rec.d0, n * m, m)?;
    let d1 = parse_matrix("operator_family.d1", &rec.d1, pairs * m, n * m)?;
    let dtriv1 = parse_matrix("operator_family.dtriv1", &rec.dtriv1, pairs, n)?;
    OperatorFamily::new(n, m, rec.s, alpha, beta, d0, d1, dtriv1)
        .map_err(|e| FormatError::field("operator_family", e))
}

pub fn family_to_doc(f: &OperatorFamily) -> FamilyDoc {
    FamilyDoc {
        operator_family: FamilyRecord {
            n: f.n,
            m: f.m,
            s: f.shift,
            alpha: matrix_to_strings(&f.alpha),
            beta: matrix_to_strings(&f.beta),
            d0: matrix_to_strings(&f.d0),
            d1: matrix_to_strings(&f.d1),
            dtriv1: matrix_to_strings(&f.dtriv1),
        },
    }
}

pub fn to_toml<T: Serialize>(value: &T) -> String {
    toml::to_string(value).expect("documents serialize")
}

/// Overall verdict of a command run, also reflected in its exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violated,
    Error,
}

/// Report document written by every command: an overall status plus the
/// structured results that produced it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDoc {
    pub status: Status,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<ViolationRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cohomology: Vec<CohomologyRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckRecord>,
}

impl ReportDoc {
    pub fn new(command: &str) -> Self {
        ReportDoc {
            status: Status::Ok,
            command: command.to_string(),
            input: None,
            representation: None,
            seed: None,
            trials: None,
            violations: Vec::new(),
            cohomology: Vec::new(),
            checks: Vec::new(),
        }
    }

    /// Fold validator output in; indices are shifted to the 1-based file
    /// convention.
    pub fn add_validation(&mut self, context: &str, report: &ValidationReport) {
        for v in &report.violations {
            self.status = Status::Violated;
            self.violations.push(ViolationRecord {
                context: context.to_string(),
                identity: v.identity.clone(),
                indices: v.indices.iter().map(|i| i + 1).collect(),
                left: v.left.clone(),
                right: v.right.clone(),
            });
        }
    }

    pub fn add_check(&mut self, result: &crate::cohomology::TheoremCheckResult) {
        if !result.holds() {
            self.status = Status::Violated;
        }
        self.checks.push(CheckRecord {
            name: result.name.clone(),
            holds: result.holds(),
            witnesses: result
                .witnesses
                .iter()
                .map(|w| WitnessRecord {
                    inputs: w.inputs.clone(),
                    left: w.left.clone(),
                    right: w.right.clone(),
                })
                .collect(),
        });
    }

    pub fn add_cohomology(&mut self, report: &crate::cohomology::CohomologyReport) {
        self.cohomology.push(CohomologyRecord {
            s: report.shift,
            degrees: report
                .degrees
                .iter()
                .map(|d| DegreeRecord {
                    k: d.degree,
                    dim_cochains: d.dim_cochains,
                    dim_cocycles: d.dim_cocycles,
                    dim_coboundaries: d.dim_coboundaries,
                    dim_cohomology: d.dim_cohomology,
                })
                .collect(),
        });
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub context: String,
    pub identity: String,
    pub indices: Vec<usize>,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub inputs: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CohomologyRecord {
    pub s: u32,
    pub degrees: Vec<DegreeRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub k: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
}

/// Convert shape/lookup errors from the algebra layer into field errors.
impl From<AlgebraError> for FormatError {
    fn from(e: AlgebraError) -> Self {
        FormatError::field("input", e)
    }
}
