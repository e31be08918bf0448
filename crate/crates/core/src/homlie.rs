//! Hom-Lie algebras, their representations, and exact validation of the
//! defining identities.
//!
//! An algebra is stored as a full structure-constant table plus the twist
//! map; skew-symmetry is *checked*, not forced, so user input errors
//! surface as violations instead of being silently symmetrized. All
//! identities are multilinear, so verifying them on basis tuples is
//! complete.

use crate::linalg::{format_rat, LinalgError, Matrix, Rat};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One failed identity: which law, at which basis indices, and both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub left: String,
    pub right: String,
}

/// Outcome of a validator; `valid()` holds exactly when no violations
/// were collected.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, identity: &str, indices: &[usize], left: String, right: String) {
        self.violations.push(Violation {
            identity: identity.to_string(),
            indices: indices.to_vec(),
            left,
            right,
        });
    }
}

pub(crate) fn format_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("[{}]", parts.join(", "))
}

fn format_mat(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| format_vec(m.row(i))).collect();
    format!("[{}]", rows.join(", "))
}

/// A finite-dimensional Hom-Lie algebra: bracket structure constants on a
/// fixed basis together with the twist map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    dim: usize,
    /// `structure[i][j]` holds the coordinates of the bracket of basis
    /// vectors `i` and `j`. Full table, including the redundant `j > i`
    /// and diagonal entries.
    structure: Vec<Vec<Vec<Rat>>>,
    alpha: Matrix,
}

impl HomLieAlgebra {
    pub fn new(structure: Vec<Vec<Vec<Rat>>>, alpha: Matrix) -> Result<Self, AlgebraError> {
        let dim = structure.len();
        for (i, row) in structure.iter().enumerate() {
            if row.len() != dim {
                return Err(AlgebraError::Input(format!(
                    "structure table row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (j, c) in row.iter().enumerate() {
                if c.len() != dim {
                    return Err(AlgebraError::Input(format!(
                        "structure constants [{i}][{j}] have {} coordinates, expected {dim}",
                        c.len()
                    )));
                }
            }
        }
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(AlgebraError::Input(format!(
                "twist map is {}x{}, expected {dim}x{dim}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        Ok(HomLieAlgebra {
            dim,
            structure,
            alpha,
        })
    }

    /// Build the full table from brackets on pairs `i < j` (0-based); the
    /// lower triangle is filled skew-symmetrically and the diagonal is zero.
    pub fn from_bracket_pairs(
        dim: usize,
        pairs: &[(usize, usize, Vec<Rat>)],
        alpha: Matrix,
    ) -> Result<Self, AlgebraError> {
        let mut structure = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for (i, j, coeffs) in pairs {
            if *i >= *j || *j >= dim {
                return Err(AlgebraError::Input(format!(
                    "bracket pair ({i}, {j}) out of order or out of range for dimension {dim}"
                )));
            }
            if coeffs.len() != dim {
                return Err(AlgebraError::Input(format!(
                    "bracket pair ({i}, {j}) has {} coordinates, expected {dim}",
                    coeffs.len()
                )));
            }
            structure[*i][*j] = coeffs.clone();
            structure[*j][*i] = coeffs.iter().map(|c| -c).collect();
        }
        HomLieAlgebra::new(structure, alpha)
    }

    /// Abelian algebra (all brackets zero) with the given twist.
    pub fn abelian(dim: usize, alpha: Matrix) -> Result<Self, AlgebraError> {
        HomLieAlgebra::from_bracket_pairs(dim, &[], alpha)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Coordinates of the bracket of basis vectors `i` and `j`.
    pub fn structure(&self, i: usize, j: usize) -> &[Rat] {
        &self.structure[i][j]
    }

    /// Coordinates of the twist applied to basis vector `i` (column `i`).
    pub fn alpha_basis(&self, i: usize) -> Vec<Rat> {
        self.alpha.col(i)
    }

    pub fn apply_alpha(&self, x: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
        Ok(self.alpha.mul_vec(x)?)
    }

    /// Bilinear extension of the structure constants to arbitrary vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(AlgebraError::Input(format!(
                "bracket arguments have lengths {} and {}, expected {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    *o += &scale * c;
                }
            }
        }
        Ok(out)
    }

    /// Check skew-symmetry entrywise, twist multiplicativity on basis
    /// pairs, and the twisted Jacobi identity on basis triples.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let neg: Vec<Rat> = self.structure[j][i].iter().map(|c| -c).collect();
                if self.structure[i][j] != neg {
                    report.push(
                        "skew_symmetry",
                        &[i, j],
                        format_vec(&self.structure[i][j]),
                        format_vec(&neg),
                    );
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                // alpha([e_i, e_j]) vs [alpha(e_i), alpha(e_j)]
                let lhs = self.alpha.mul_vec(&self.structure[i][j]).expect("shape");
                let rhs = self
                    .bracket(&self.alpha_basis(i), &self.alpha_basis(j))
                    .expect("shape");
                if lhs != rhs {
                    report.push(
                        "alpha_multiplicativity",
                        &[i, j],
                        format_vec(&lhs),
                        format_vec(&rhs),
                    );
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    match self.hom_jacobi_sum(i, j, k) {
                        Ok(sum) if sum.iter().all(Rat::is_zero) => {}
                        Ok(sum) => report.push(
                            "hom_jacobi",
                            &[i, j, k],
                            format_vec(&sum),
                            format_vec(&vec![Rat::zero(); n]),
                        ),
                        Err(_) => unreachable!("validated shapes"),
                    }
                }
            }
        }
        report
    }

    /// `[alpha(e_i), [e_j, e_k]] + [alpha(e_j), [e_k, e_i]] + [alpha(e_k), [e_i, e_j]]`.
    fn hom_jacobi_sum(&self, i: usize, j: usize, k: usize) -> Result<Vec<Rat>, AlgebraError> {
        let mut total = vec![Rat::zero(); self.dim];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.structure[b][c].clone();
            let term = self.bracket(&self.alpha_basis(a), &inner)?;
            for (t, v) in total.iter_mut().zip(term) {
                *t += v;
            }
        }
        Ok(total)
    }
}

/// A representation of a Hom-Lie algebra on an `m`-dimensional space,
/// given by the action of each basis vector plus an invertible map that
/// twists the module structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: HomLieAlgebra,
    vdim: usize,
    rho: Vec<Matrix>,
    beta: Matrix,
    beta_inv: Matrix,
}

impl Representation {
    /// Fails when shapes disagree or `beta` is singular.
    pub fn new(
        algebra: HomLieAlgebra,
        rho: Vec<Matrix>,
        beta: Matrix,
    ) -> Result<Self, AlgebraError> {
        let n = algebra.dim();
        if rho.len() != n {
            return Err(AlgebraError::Input(format!(
                "expected {n} action matrices, got {}",
                rho.len()
            )));
        }
        let m = beta.rows();
        if beta.cols() != m {
            return Err(AlgebraError::Input(format!(
                "beta is {}x{}, expected square",
                beta.rows(),
                beta.cols()
            )));
        }
        for (i, r) in rho.iter().enumerate() {
            if r.rows() != m || r.cols() != m {
                return Err(AlgebraError::Input(format!(
                    "action matrix {i} is {}x{}, expected {m}x{m}",
                    r.rows(),
                    r.cols()
                )));
            }
        }
        let beta_inv = beta.inverse()?;
        Ok(Representation {
            algebra,
            vdim: m,
            rho,
            beta,
            beta_inv,
        })
    }

    /// Zero action with identity twist on an `m`-dimensional space.
    pub fn trivial(algebra: HomLieAlgebra, vdim: usize) -> Self {
        let rho = vec![Matrix::zero(vdim, vdim); algebra.dim()];
        let beta = Matrix::identity(vdim);
        Representation::new(algebra, rho, beta).expect("identity beta is invertible")
    }

    /// Adjoint representation: each basis vector acts by bracketing, and
    /// the module twist is the algebra twist. For an untwisted algebra
    /// this is the classical adjoint.
    pub fn adjoint(algebra: HomLieAlgebra) -> Self {
        let n = algebra.dim();
        let rho: Vec<Matrix> = (0..n)
            .map(|i| Matrix::from_fn(n, n, |r, c| algebra.structure(i, c)[r].clone()))
            .collect();
        let beta = algebra.alpha().clone();
        Representation::new(algebra, rho, beta).expect("adjoint requires an invertible twist")
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn beta_inv(&self) -> &Matrix {
        &self.beta_inv
    }

    /// Power of `beta`; negative exponents use the cached inverse.
    pub fn beta_power(&self, e: i64) -> Matrix {
        let base = if e < 0 { &self.beta_inv } else { &self.beta };
        let mut out = Matrix::identity(self.vdim);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(base).expect("square");
        }
        out
    }

    /// Linear extension of the action to an arbitrary algebra vector.
    pub fn rho_of(&self, x: &[Rat]) -> Result<Matrix, AlgebraError> {
        if x.len() != self.algebra.dim() {
            return Err(AlgebraError::Input(format!(
                "vector has length {}, expected {}",
                x.len(),
                self.algebra.dim()
            )));
        }
        let mut out = Matrix::zero(self.vdim, self.vdim);
        for (xi, r) in x.iter().zip(&self.rho) {
            if !xi.is_zero() {
                out = out.add(&r.scale(xi)).expect("shape");
            }
        }
        Ok(out)
    }

    /// Action of the twisted basis vector `alpha(e_i)`.
    pub fn rho_alpha_basis(&self, i: usize) -> Matrix {
        self.rho_of(&self.algebra.alpha_basis(i)).expect("shape")
    }

    /// Check both representation identities as exact matrix equalities on
    /// all basis indices / pairs.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.algebra.dim();
        for i in 0..n {
            // rho(alpha(e_i)) . beta = beta . rho(e_i)
            let lhs = self.rho_alpha_basis(i).mul(&self.beta).expect("shape");
            let rhs = self.beta.mul(&self.rho[i]).expect("shape");
            if lhs != rhs {
                report.push(
                    "rho_alpha_beta_compat",
                    &[i],
                    format_mat(&lhs),
                    format_mat(&rhs),
                );
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                // rho([e_i, e_j]) . beta = rho(alpha(e_i)) rho(e_j) - rho(alpha(e_j)) rho(e_i)
                let lhs = self
                    .rho_of(self.algebra.structure(i, j))
                    .expect("shape")
                    .mul(&self.beta)
                    .expect("shape");
                let rhs = self
                    .rho_alpha_basis(i)
                    .mul(&self.rho[j])
                    .expect("shape")
                    .sub(&self.rho_alpha_basis(j).mul(&self.rho[i]).expect("shape"))
                    .expect("shape");
                if lhs != rhs {
                    report.push(
                        "rho_bracket_compat",
                        &[i, j],
                        format_mat(&lhs),
                        format_mat(&rhs),
                    );
                }
            }
        }
        report
    }
}

/// Check that `psi` intertwines brackets and twists of two algebras.
pub fn is_morphism(
    psi: &Matrix,
    a: &HomLieAlgebra,
    b: &HomLieAlgebra,
) -> Result<ValidationReport, AlgebraError> {
    if psi.rows() != b.dim() || psi.cols() != a.dim() {
        return Err(AlgebraError::Input(format!(
            "morphism matrix is {}x{}, expected {}x{}",
            psi.rows(),
            psi.cols(),
            b.dim(),
            a.dim()
        )));
    }
    let mut report = ValidationReport::default();
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            let lhs = psi.mul_vec(a.structure(i, j))?;
            let rhs = b.bracket(&psi.col(i), &psi.col(j))?;
            if lhs != rhs {
                report.push(
                    "bracket_intertwine",
                    &[i, j],
                    format_vec(&lhs),
                    format_vec(&rhs),
                );
            }
        }
    }
    let lhs = psi.mul(a.alpha())?;
    let rhs = b.alpha().mul(psi)?;
    if lhs != rhs {
        report.push("twist_intertwine", &[], format_mat(&lhs), format_mat(&rhs));
    }
    Ok(report)
}

/// Check that the column span of `span` is twist-stable and closed under
/// the bracket; membership is decided by exact solve.
pub fn is_subalgebra(a: &HomLieAlgebra, span: &Matrix) -> Result<ValidationReport, AlgebraError> {
    if span.rows() != a.dim() {
        return Err(AlgebraError::Input(format!(
            "span vectors have length {}, expected {}",
            span.rows(),
            a.dim()
        )));
    }
    if span.rank() != span.cols() {
        return Err(AlgebraError::Input(
            "span columns are linearly dependent".to_string(),
        ));
    }
    let mut report = ValidationReport::default();
    let in_span = |v: &[Rat]| -> bool {
        let rhs = Matrix::from_rows(v.iter().map(|x| vec![x.clone()]).collect()).expect("column");
        span.solve(&rhs).expect("shape").is_some()
    };
    for j in 0..span.cols() {
        let img = a.apply_alpha(&span.col(j))?;
        if !in_span(&img) {
            report.push(
                "twist_stability",
                &[j],
                format_vec(&img),
                "span membership".to_string(),
            );
        }
    }
    for i in 0..span.cols() {
        for j in i + 1..span.cols() {
            let br = a.bracket(&span.col(i), &span.col(j))?;
            if !in_span(&br) {
                report.push(
                    "bracket_closure",
                    &[i, j],
                    format_vec(&br),
                    "span membership".to_string(),
                );
            }
        }
    }
    Ok(report)
}

/// Deform an ordinary Lie algebra by an automorphism `phi`: the new
/// bracket is `phi` composed with the old one and the twist is `phi`.
/// The result is always a valid Hom-Lie algebra.
pub fn yau_twist(l: &HomLieAlgebra, phi: &Matrix) -> Result<HomLieAlgebra, AlgebraError> {
    if l.alpha() != &Matrix::identity(l.dim()) {
        return Err(AlgebraError::Input(
            "base algebra must be untwisted (identity twist)".to_string(),
        ));
    }
    if phi.inverse().is_err() {
        return Err(AlgebraError::Input("phi is not invertible".to_string()));
    }
    let morphism = is_morphism(phi, l, l)?;
    if !morphism.valid() {
        return Err(AlgebraError::Input(
            "phi is not an automorphism of the base algebra".to_string(),
        ));
    }
    let n = l.dim();
    let mut structure = vec![vec![vec![Rat::zero(); n]; n]; n];
    for (i, row) in structure.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = phi.mul_vec(l.structure(i, j))?;
        }
    }
    HomLieAlgebra::new(structure, phi.clone())
}
