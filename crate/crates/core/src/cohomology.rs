//! Cocycle/coboundary/cohomology dimensions per shift and degree, and
//! executable checks of the chain-map, Leibniz, and isomorphism
//! statements about the coboundary family.
//!
//! Checks return witness data instead of aborting, so the same code
//! doubles as a debugging tool for user-supplied algebras.

use crate::cochain::{
    alpha_bar, alpha_bar_matrix, beta_bar_matrix, coboundary, coboundary_matrix, diamond,
    trivial_coboundary, tuple_count, wedge, Cochain, TupleBasis,
};
use crate::homlie::{format_vec, HomLieAlgebra, Representation};
use crate::linalg::{format_rat, Matrix};

/// Exact dimension data for one degree at a fixed shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDims {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
}

/// Dimensions of cochains, cocycles, coboundaries, and cohomology for
/// every degree up to the requested maximum, at one shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub shift: u32,
    pub degrees: Vec<DegreeDims>,
}

impl CohomologyReport {
    /// Cohomology dimensions in degree order.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim_cohomology).collect()
    }
}

/// One failing instance of a checked statement: what was fed in and the
/// two sides that should have agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub inputs: String,
    pub left: String,
    pub right: String,
}

/// Outcome of a single verified statement; it holds exactly when no
/// witnesses were collected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheckResult {
    pub name: String,
    pub witnesses: Vec<Witness>,
}

impl TheoremCheckResult {
    pub fn new(name: impl Into<String>) -> Self {
        TheoremCheckResult {
            name: name.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn fail(
        &mut self,
        inputs: impl Into<String>,
        left: impl Into<String>,
        right: impl Into<String>,
    ) {
        self.witnesses.push(Witness {
            inputs: inputs.into(),
            left: left.into(),
            right: right.into(),
        });
    }

    /// Record a mismatch between two matrices at the first differing entry.
    fn compare_matrices(&mut self, inputs: &str, left: &Matrix, right: &Matrix) {
        if left == right {
            return;
        }
        let diff = left.sub(right).expect("shape");
        let (i, j) = diff.first_nonzero().expect("matrices differ");
        self.fail(
            format!("{inputs}, entry ({i}, {j})"),
            format_rat(left.get(i, j)),
            format_rat(right.get(i, j)),
        );
    }

    /// Record a mismatch between two cochains at the first differing tuple.
    fn compare_cochains(&mut self, inputs: &str, left: &Cochain, right: &Cochain) {
        if left == right {
            return;
        }
        for t in TupleBasis::new(left.n(), left.degree()).tuples() {
            let (lv, rv) = (left.coeff(t), right.coeff(t));
            if lv != rv {
                self.fail(
                    format!("{inputs}, tuple {t:?}"),
                    format_vec(&lv),
                    format_vec(&rv),
                );
                return;
            }
        }
    }
}

/// Exact cohomology dimensions from assembled coboundary matrices, for
/// degrees `0..=kmax` at the given shift.
pub fn cohomology_dims(r: &Representation, shift: u32, kmax: usize) -> CohomologyReport {
    let (n, m) = (r.algebra().dim(), r.vdim());
    let mats: Vec<Matrix> = (0..=kmax).map(|k| coboundary_matrix(r, shift, k)).collect();
    let degrees = (0..=kmax)
        .map(|k| {
            let dim_cochains = tuple_count(n, k) * m;
            let dim_cocycles = dim_cochains - mats[k].rank();
            let dim_coboundaries = if k == 0 { 0 } else { mats[k - 1].rank() };
            DegreeDims {
                degree: k,
                dim_cochains,
                dim_cocycles,
                dim_coboundaries,
                // saturates on invalid input where the differentials do
                // not square to zero; the d-squared check reports that
                dim_cohomology: dim_cocycles.saturating_sub(dim_coboundaries),
            }
        })
        .collect();
    CohomologyReport { shift, degrees }
}

/// Composite of consecutive coboundary matrices must vanish exactly.
pub fn check_d_squared(r: &Representation, shift: u32, kmax: usize) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new(format!("d_squared shift={shift}"));
    for k in 0..kmax {
        let first = coboundary_matrix(r, shift, k);
        let second = coboundary_matrix(r, shift, k + 1);
        let product = second.mul(&first).expect("chain shapes");
        if let Some((i, j)) = product.first_nonzero() {
            result.fail(
                format!("shift={shift} degree={k}, entry ({i}, {j})"),
                format_rat(product.get(i, j)),
                "0",
            );
        }
    }
    result
}

/// Value-twisting intertwines consecutive shifts:
/// `beta_bar . d^s = d^(s+1) . beta_bar` as exact matrices.
pub fn check_beta_chain_map(r: &Representation, shift: u32, kmax: usize) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new(format!("beta_chain_map shift={shift}"));
    for k in 0..=kmax {
        let d_s = coboundary_matrix(r, shift, k);
        let d_s1 = coboundary_matrix(r, shift + 1, k);
        let b_k = beta_bar_matrix(r, k, false);
        let b_k1 = beta_bar_matrix(r, k + 1, false);
        let lhs = b_k1.mul(&d_s).expect("shape");
        let rhs = d_s1.mul(&b_k).expect("shape");
        result.compare_matrices(&format!("shift={shift} degree={k}"), &lhs, &rhs);
    }
    result
}

/// Argument-twisting intertwines consecutive shifts:
/// `alpha_bar . d^s = d^(s+1) . alpha_bar` as exact matrices.
pub fn check_alpha_chain_map(r: &Representation, shift: u32, kmax: usize) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new(format!("alpha_chain_map shift={shift}"));
    let a = r.algebra();
    for k in 0..=kmax {
        let d_s = coboundary_matrix(r, shift, k);
        let d_s1 = coboundary_matrix(r, shift + 1, k);
        let a_k = alpha_bar_matrix(a, k, r.vdim());
        let a_k1 = alpha_bar_matrix(a, k + 1, r.vdim());
        let lhs = a_k1.mul(&d_s).expect("shape");
        let rhs = d_s1.mul(&a_k).expect("shape");
        result.compare_matrices(&format!("shift={shift} degree={k}"), &lhs, &rhs);
    }
    result
}

/// Graded Leibniz rule of the trivial-action coboundary over the wedge:
/// `d(xi1 ^ xi2) = d xi1 ^ alpha_bar(xi2) + (-1)^k alpha_bar(xi1) ^ d xi2`.
pub fn check_leibniz_trivial(
    a: &HomLieAlgebra,
    xi1: &Cochain,
    xi2: &Cochain,
) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new("leibniz_wedge");
    let k = xi1.degree();
    let lhs = trivial_coboundary(a, &wedge(xi1, xi2));
    let mut rhs = wedge(&trivial_coboundary(a, xi1), &alpha_bar(a, xi2));
    let second = wedge(&alpha_bar(a, xi1), &trivial_coboundary(a, xi2));
    rhs = if k % 2 == 0 {
        rhs.add(&second)
    } else {
        rhs.sub(&second)
    };
    result.compare_cochains(&format!("degrees ({k}, {})", xi2.degree()), &lhs, &rhs);
    result
}

/// Leibniz rule of the shifted coboundary over the module action, with
/// the shift growing by the scalar factor's degree on the right:
/// `d^s(xi <> eta) = d xi <> alpha_bar(eta) + (-1)^k alpha_bar(xi) <> d^(s+k) eta`.
pub fn check_leibniz_diamond(
    r: &Representation,
    shift: u32,
    xi: &Cochain,
    eta: &Cochain,
) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new(format!("leibniz_diamond shift={shift}"));
    let a = r.algebra();
    let k = xi.degree();
    let lhs = coboundary(r, shift, &diamond(xi, eta));
    let mut rhs = diamond(&trivial_coboundary(a, xi), &alpha_bar(a, eta));
    let second = diamond(&alpha_bar(a, xi), &coboundary(r, shift + k as u32, eta));
    rhs = if k % 2 == 0 {
        rhs.add(&second)
    } else {
        rhs.sub(&second)
    };
    result.compare_cochains(
        &format!("shift={shift} degrees ({k}, {})", eta.degree()),
        &lhs,
        &rhs,
    );
    result
}

/// Verify that value-twisting induces an isomorphism between the
/// cohomologies at consecutive shifts: equal dimensions in every degree,
/// plus the four cocycle/coboundary inclusions (forward under the twist,
/// backward under its inverse) by exact membership of mapped bases.
pub fn verify_iso(r: &Representation, shift: u32, kmax: usize) -> TheoremCheckResult {
    let mut result = TheoremCheckResult::new(format!("cohomology_iso shift={shift}"));

    let lo = cohomology_dims(r, shift, kmax);
    let hi = cohomology_dims(r, shift + 1, kmax);
    for (dl, dh) in lo.degrees.iter().zip(&hi.degrees) {
        if dl.dim_cohomology != dh.dim_cohomology {
            result.fail(
                format!("dimension at degree {}", dl.degree),
                format!("dim H at shift {shift}: {}", dl.dim_cohomology),
                format!("dim H at shift {}: {}", shift + 1, dh.dim_cohomology),
            );
        }
    }

    let d_lo: Vec<Matrix> = (0..=kmax).map(|k| coboundary_matrix(r, shift, k)).collect();
    let d_hi: Vec<Matrix> = (0..=kmax)
        .map(|k| coboundary_matrix(r, shift + 1, k))
        .collect();
    for k in 0..=kmax {
        let fwd = beta_bar_matrix(r, k, false);
        let bwd = beta_bar_matrix(r, k, true);

        // cocycles map forward: d^(s+1) annihilates the twisted kernel
        let mapped = fwd.mul(&d_lo[k].kernel_basis()).expect("shape");
        let image = d_hi[k].mul(&mapped).expect("shape");
        if let Some((i, j)) = image.first_nonzero() {
            result.fail(
                format!("cocycle inclusion (forward) degree={k}, kernel column {j}, row {i}"),
                format_rat(image.get(i, j)),
                "0",
            );
        }
        // and backward under the inverse twist
        let mapped = bwd.mul(&d_hi[k].kernel_basis()).expect("shape");
        let image = d_lo[k].mul(&mapped).expect("shape");
        if let Some((i, j)) = image.first_nonzero() {
            result.fail(
                format!("cocycle inclusion (backward) degree={k}, kernel column {j}, row {i}"),
                format_rat(image.get(i, j)),
                "0",
            );
        }

        if k == 0 {
            continue;
        }
        // coboundaries map forward: each twisted image column of d^s is in
        // the column space of d^(s+1)
        let mapped = fwd.mul(&d_lo[k - 1]).expect("shape");
        if d_hi[k - 1].solve(&mapped).expect("shape").is_none() {
            result.fail(
                format!("coboundary inclusion (forward) degree={k}"),
                "twisted image of lower shift".to_string(),
                format!("column space at shift {}", shift + 1),
            );
        }
        // and backward under the inverse twist
        let mapped = bwd.mul(&d_hi[k - 1]).expect("shape");
        if d_lo[k - 1].solve(&mapped).expect("shape").is_none() {
            result.fail(
                format!("coboundary inclusion (backward) degree={k}"),
                "inverse-twisted image of higher shift".to_string(),
                format!("column space at shift {shift}"),
            );
        }
    }
    result
}
