//! Shared oracles for the integration suites. Both are deliberately
//! independent of the library's evaluation and assembly code paths: the
//! differential matrix is built by direct combinatorial expansion, and
//! cochain evaluation is a full sum over raw index maps.

use homcoh::cochain::Cochain;
use homcoh::homlie::HomLieAlgebra;
use homcoh::linalg::{Matrix, Rat};
use num::Zero;

/// All strictly increasing k-subsets of 0..n via bitmask filtering, in
/// lexicographic order after sorting (different algorithm from the
/// library's recursive enumeration).
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Sign of the permutation sorting `args`, or None when repeats occur.
fn sort_sign(args: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut sorted = args.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut inversions = 0;
    for i in 0..args.len() {
        for j in i + 1..args.len() {
            if args[i] > args[j] {
                inversions += 1;
            }
        }
    }
    Some((sorted, if inversions % 2 == 0 { 1 } else { -1 }))
}

/// Matrix of the classical (untwisted) degree-k differential for an
/// action given by `rho` per basis vector: the textbook alternating sum
/// with no twist maps and no conjugating powers. Rows and columns follow
/// the same tuple-major, coordinate-minor order as the library.
pub fn classical_differential_matrix(a: &HomLieAlgebra, rho: &[Matrix], k: usize) -> Matrix {
    let n = a.dim();
    let m = rho.first().map_or(1, Matrix::rows);
    let cols_basis = subsets(n, k);
    let rows_basis = subsets(n, k + 1);
    let mut out = Matrix::zero(rows_basis.len() * m, cols_basis.len() * m);

    for (ci, idx) in cols_basis.iter().enumerate() {
        for c in 0..m {
            let col = ci * m + c;
            for (ri, t) in rows_basis.iter().enumerate() {
                // action term: drop one argument, hit the value with rho
                for pos in 0..t.len() {
                    let rest: Vec<usize> = t
                        .iter()
                        .enumerate()
                        .filter(|&(q, _)| q != pos)
                        .map(|(_, &x)| x)
                        .collect();
                    if &rest != idx {
                        continue;
                    }
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    for r in 0..m {
                        let add = rho[t[pos]].get(r, c) * homcoh::linalg::rat(sign);
                        let v = out.get(ri * m + r, col) + add;
                        out.set(ri * m + r, col, v);
                    }
                }
                // bracket term: contract a pair, expand over structure
                // constants, reorder the arguments into the basis tuple
                for a_pos in 0..t.len() {
                    for b_pos in a_pos + 1..t.len() {
                        let pair_sign = if (a_pos + b_pos) % 2 == 0 { 1i64 } else { -1 };
                        let rest: Vec<usize> = t
                            .iter()
                            .enumerate()
                            .filter(|&(q, _)| q != a_pos && q != b_pos)
                            .map(|(_, &x)| x)
                            .collect();
                        let w = a.structure(t[a_pos], t[b_pos]);
                        for (u, coeff) in w.iter().enumerate() {
                            if coeff.is_zero() {
                                continue;
                            }
                            let mut args = vec![u];
                            args.extend(&rest);
                            let Some((sorted, tau)) = sort_sign(&args) else {
                                continue;
                            };
                            if &sorted != idx {
                                continue;
                            }
                            let add = coeff * homcoh::linalg::rat(pair_sign * tau);
                            let v = out.get(ri * m + c, col) + add;
                            out.set(ri * m + c, col, v);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Evaluate a cochain by brute force: sum over every raw index map
/// (repeats included, which contribute nothing), taking the coefficient
/// at the sorted tuple with the sorting permutation's sign.
pub fn eval_bruteforce(eta: &Cochain, args: &[Vec<Rat>]) -> Vec<Rat> {
    let (n, k, m) = (eta.n(), eta.degree(), eta.vdim());
    assert_eq!(args.len(), k);
    let mut out = vec![Rat::zero(); m];
    let mut map = vec![0usize; k];
    loop {
        if let Some((sorted, sign)) = sort_sign(&map) {
            let mut scale = homcoh::linalg::rat(sign);
            for (t, &i) in map.iter().enumerate() {
                scale *= &args[t][i];
            }
            if !scale.is_zero() {
                for (o, c) in out.iter_mut().zip(eta.coeff(&sorted)) {
                    *o += &scale * &c;
                }
            }
        }
        // odometer over [0, n)^k
        let mut pos = 0;
        loop {
            if pos == k {
                return out;
            }
            map[pos] += 1;
            if map[pos] < n {
                break;
            }
            map[pos] = 0;
            pos += 1;
        }
    }
}
