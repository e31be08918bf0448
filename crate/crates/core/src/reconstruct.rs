//! Recovery of an algebra action and bracket from a family of
//! degree-0/1 coboundary matrices, and verification that the recovered
//! data satisfies every defining identity.
//!
//! The bracket is read off the trivial-action differential (no solving
//! needed); the degree-1 matrix of the value complex is then used as a
//! redundant cross-check that the family is consistent with what was
//! recovered.

use num::Zero;

use crate::cochain::{coboundary_matrix, trivial_coboundary_matrix, tuple_count, TupleBasis};
use crate::cohomology::TheoremCheckResult;
use crate::homlie::{format_vec, AlgebraError, HomLieAlgebra, Representation};
use crate::linalg::{Matrix, Rat};

/// The inputs of a reconstruction: dimensions, both twists, the shift at
/// which the value differentials are supplied, the degree-0 and degree-1
/// matrices of the value complex, and the degree-1 matrix of the
/// trivial-action complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorFamily {
    pub n: usize,
    pub m: usize,
    pub shift: u32,
    pub alpha: Matrix,
    pub beta: Matrix,
    pub d0: Matrix,
    pub d1: Matrix,
    pub dtriv1: Matrix,
}

impl OperatorFamily {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: usize,
        m: usize,
        shift: u32,
        alpha: Matrix,
        beta: Matrix,
        d0: Matrix,
        d1: Matrix,
        dtriv1: Matrix,
    ) -> Result<Self, AlgebraError> {
        let pairs = tuple_count(n, 2);
        let expect = [
            ("alpha", alpha.rows(), alpha.cols(), n, n),
            ("beta", beta.rows(), beta.cols(), m, m),
            ("d0", d0.rows(), d0.cols(), n * m, m),
            ("d1", d1.rows(), d1.cols(), pairs * m, n * m),
            ("dtriv1", dtriv1.rows(), dtriv1.cols(), pairs, n),
        ];
        for (name, rows, cols, er, ec) in expect {
            if (rows, cols) != (er, ec) {
                return Err(AlgebraError::Input(format!(
                    "{name} is {rows}x{cols}, expected {er}x{ec}"
                )));
            }
        }
        Ok(OperatorFamily {
            n,
            m,
            shift,
            alpha,
            beta,
            d0,
            d1,
            dtriv1,
        })
    }

    /// Assemble the family a valid representation induces at one shift.
    pub fn from_representation(r: &Representation, shift: u32) -> Self {
        OperatorFamily {
            n: r.algebra().dim(),
            m: r.vdim(),
            shift,
            alpha: r.algebra().alpha().clone(),
            beta: r.beta().clone(),
            d0: coboundary_matrix(r, shift, 0),
            d1: coboundary_matrix(r, shift, 1),
            dtriv1: trivial_coboundary_matrix(r.algebra(), 1),
        }
    }
}

/// Everything a reconstruction yields: the recovered action matrices and
/// structure constants plus the diagnostics that certify them.
#[derive(Debug, Clone)]
pub struct ReconstructionResult {
    pub rho: Vec<Matrix>,
    pub bracket: Vec<Vec<Vec<Rat>>>,
    pub diagnostics: Vec<TheoremCheckResult>,
}

impl ReconstructionResult {
    pub fn all_hold(&self) -> bool {
        self.diagnostics.iter().all(TheoremCheckResult::holds)
    }
}

/// Undo the twist-power conjugation in each basis block row of the
/// degree-0 matrix to recover the action of every basis vector.
pub fn extract_rho(f: &OperatorFamily) -> Result<Vec<Matrix>, AlgebraError> {
    let s = f.shift as i64;
    let left = f.beta.pow(-1 - s)?;
    let right = f.beta.pow(2 + s)?;
    (0..f.n)
        .map(|i| {
            let block = f.d0.row_block(i * f.m, (i + 1) * f.m);
            Ok(left.mul(&block)?.mul(&right)?)
        })
        .collect()
}

/// Read the structure constants from the degree-1 trivial differential:
/// the pairing of a dual basis vector with a bracket is the negated
/// matrix entry at (pair row, coordinate column).
pub fn extract_bracket(f: &OperatorFamily) -> Vec<Vec<Vec<Rat>>> {
    let pair_basis = TupleBasis::new(f.n, 2);
    let mut structure = vec![vec![vec![Rat::zero(); f.n]; f.n]; f.n];
    for (row, pair) in pair_basis.tuples().iter().enumerate() {
        let (i, j) = (pair[0], pair[1]);
        for coord in 0..f.n {
            let c = -f.dtriv1.get(row, coord);
            structure[i][j][coord] = c.clone();
            structure[j][i][coord] = -c;
        }
    }
    structure
}

/// Redundant consistency check of the recovered bracket against the
/// degree-1 matrix of the value complex: for every basis pair and every
/// basis 1-cochain, the twisted-action expression minus the supplied
/// differential must equal the cochain evaluated on the recovered
/// bracket.
pub fn cross_check_bracket(
    f: &OperatorFamily,
    rho: &[Matrix],
    bracket: &[Vec<Vec<Rat>>],
) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new("bracket_cross_check");
    let s = f.shift as i64;
    let Ok(back) = f.beta.pow(-3 - s) else {
        result.fail("beta power", "singular beta", "invertible beta");
        return result;
    };
    let front = f.beta.pow(2 + s).expect("positive power");
    let pair_basis = TupleBasis::new(f.n, 2);
    // conjugated action per basis index, shared across all cochains
    let acted: Vec<Matrix> = rho
        .iter()
        .map(|r| front.mul(r).expect("shape").mul(&back).expect("shape"))
        .collect();
    for (prow, pair) in pair_basis.tuples().iter().enumerate() {
        let (i, j) = (pair[0], pair[1]);
        for a in 0..f.n {
            for b in 0..f.m {
                // eta = dual basis a tensor value coordinate b, so
                // eta(alpha(e_j)) has a single nonzero coordinate
                let mut eta_alpha_j = vec![Rat::zero(); f.m];
                eta_alpha_j[b] = f.alpha.get(a, j).clone();
                let mut eta_alpha_i = vec![Rat::zero(); f.m];
                eta_alpha_i[b] = f.alpha.get(a, i).clone();
                // the differential of eta on (e_i, e_j), read off d1
                let col = a * f.m + b;
                let d_eta: Vec<Rat> = (0..f.m)
                    .map(|r| f.d1.get(prow * f.m + r, col).clone())
                    .collect();

                let t1 = acted[i].mul_vec(&eta_alpha_j).expect("shape");
                let t2 = acted[j].mul_vec(&eta_alpha_i).expect("shape");
                let rhs: Vec<Rat> = (0..f.m).map(|r| &t1[r] - &t2[r] - &d_eta[r]).collect();

                // eta([e_i, e_j]) = coordinate a of the bracket, in slot b
                let mut lhs = vec![Rat::zero(); f.m];
                lhs[b] = bracket[i][j][a].clone();

                if lhs != rhs {
                    result.fail(
                        format!("pair ({i}, {j}), cochain ({a}, {b})"),
                        format_vec(&lhs),
                        format_vec(&rhs),
                    );
                }
            }
        }
    }
    result
}

/// Check the four identities the recovered data must satisfy, on all
/// basis indices: action/twist compatibility, twist multiplicativity,
/// action/bracket compatibility, and the twisted Jacobi identity.
pub fn verify_axioms(
    f: &OperatorFamily,
    rho: &[Matrix],
    bracket: &[Vec<Vec<Rat>>],
) -> Vec<TheoremCheckResult> {
    let algebra =
        HomLieAlgebra::new(bracket.to_vec(), f.alpha.clone()).expect("shapes fixed by extraction");
    let rho_of = |x: &[Rat]| -> Matrix {
        let mut out = Matrix::zero(f.m, f.m);
        for (xi, r) in x.iter().zip(rho) {
            if !xi.is_zero() {
                out = out.add(&r.scale(xi)).expect("shape");
            }
        }
        out
    };
    let fm = |m: &Matrix| -> String {
        let rows: Vec<String> = (0..m.rows()).map(|i| format_vec(m.row(i))).collect();
        format!("[{}]", rows.join(", "))
    };

    let mut compat = TheoremCheckResult::new("rho_alpha_beta_compat");
    for i in 0..f.n {
        let lhs = rho_of(&f.alpha.col(i)).mul(&f.beta).expect("shape");
        let rhs = f.beta.mul(&rho[i]).expect("shape");
        if lhs != rhs {
            compat.fail(format!("basis index {i}"), fm(&lhs), fm(&rhs));
        }
    }

    let mut mult = TheoremCheckResult::new("alpha_multiplicativity");
    for i in 0..f.n {
        for j in i + 1..f.n {
            let lhs = f.alpha.mul_vec(&bracket[i][j]).expect("shape");
            let rhs = algebra
                .bracket(&f.alpha.col(i), &f.alpha.col(j))
                .expect("shape");
            if lhs != rhs {
                mult.fail(
                    format!("pair ({i}, {j})"),
                    format_vec(&lhs),
                    format_vec(&rhs),
                );
            }
        }
    }

    let mut act = TheoremCheckResult::new("rho_bracket_compat");
    for i in 0..f.n {
        for j in i + 1..f.n {
            let lhs = rho_of(&f.alpha.col(i))
                .mul(&rho[j])
                .expect("shape")
                .sub(&rho_of(&f.alpha.col(j)).mul(&rho[i]).expect("shape"))
                .expect("shape");
            let rhs = rho_of(&bracket[i][j]).mul(&f.beta).expect("shape");
            if lhs != rhs {
                act.fail(format!("pair ({i}, {j})"), fm(&lhs), fm(&rhs));
            }
        }
    }

    let mut jacobi = TheoremCheckResult::new("hom_jacobi");
    for i in 0..f.n {
        for j in i + 1..f.n {
            for k in j + 1..f.n {
                let mut total = vec![Rat::zero(); f.n];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let term = algebra
                        .bracket(&bracket[a][b], &f.alpha.col(c))
                        .expect("shape");
                    for (t, v) in total.iter_mut().zip(term) {
                        *t += v;
                    }
                }
                if !total.iter().all(Rat::is_zero) {
                    jacobi.fail(
                        format!("triple ({i}, {j}, {k})"),
                        format_vec(&total),
                        format_vec(&vec![Rat::zero(); f.n]),
                    );
                }
            }
        }
    }

    vec![compat, mult, act, jacobi]
}

/// Full reconstruction: extract the action and bracket, then attach the
/// cross-check and the four identity diagnostics.
pub fn reconstruct(f: &OperatorFamily) -> Result<ReconstructionResult, AlgebraError> {
    let rho = extract_rho(f)?;
    let bracket = extract_bracket(f);
    let mut diagnostics = vec![cross_check_bracket(f, &rho, &bracket)];
    diagnostics.extend(verify_axioms(f, &rho, &bracket));
    Ok(ReconstructionResult {
        rho,
        bracket,
        diagnostics,
    })
}

/// Assemble the family of a valid representation, reconstruct from it,
/// and demand bit-exact recovery of the action and bracket along with
/// clean diagnostics.
pub fn roundtrip(r: &Representation, shift: u32) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new(format!("reconstruction_roundtrip shift={shift}"));
    let family = OperatorFamily::from_representation(r, shift);
    let recon = match reconstruct(&family) {
        Ok(recon) => recon,
        Err(e) => {
            result.fail("reconstruction", e.to_string(), "success");
            return result;
        }
    };
    let n = r.algebra().dim();
    for i in 0..n {
        if &recon.rho[i] != r.rho(i) {
            result.fail(
                format!("recovered action of basis vector {i}"),
                format!("{:?}", recon.rho[i]),
                format!("{:?}", r.rho(i)),
            );
        }
        for j in 0..n {
            if recon.bracket[i][j] != r.algebra().structure(i, j) {
                result.fail(
                    format!("recovered bracket ({i}, {j})"),
                    format_vec(&recon.bracket[i][j]),
                    format_vec(r.algebra().structure(i, j)),
                );
            }
        }
    }
    for d in &recon.diagnostics {
        for w in &d.witnesses {
            result.fail(
                format!("diagnostic {}: {}", d.name, w.inputs),
                w.left.clone(),
                w.right.clone(),
            );
        }
    }
    result
}
