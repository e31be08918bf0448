//! Cochain spaces, the induced twist maps, wedge and module products, and
//! the shift-indexed family of coboundary operators, plus their matrix
//! assembly in a fixed basis order.
//!
//! A degree-`k` cochain is stored by its values on strictly increasing
//! basis index tuples; skew multilinearity recovers the value anywhere
//! else. Matrix assembly orders basis cochains with the index tuple as
//! the major key (lexicographic) and the value coordinate as the minor
//! key, so matrices are reproducible across runs and implementations.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::Rng;

use crate::homlie::{AlgebraError, HomLieAlgebra, Representation};
use crate::linalg::{Matrix, Rat};

/// All strictly increasing `k`-tuples over `0..n`, lexicographically sorted.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Number of strictly increasing `k`-tuples over `0..n`.
pub fn tuple_count(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut c: usize = 1;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// The fixed enumeration of degree-`k` basis index tuples. Every matrix
/// in the crate indexes rows and columns through this order.
#[derive(Debug, Clone)]
pub struct TupleBasis {
    n: usize,
    k: usize,
    tuples: Vec<Vec<usize>>,
}

impl TupleBasis {
    pub fn new(n: usize, k: usize) -> Self {
        TupleBasis {
            n,
            k,
            tuples: increasing_tuples(n, k),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Rank of a tuple in the enumeration (tuples are lex-sorted, so this
    /// is a binary search).
    pub fn position(&self, t: &[usize]) -> Option<usize> {
        self.tuples
            .binary_search_by(|probe| probe.as_slice().cmp(t))
            .ok()
    }
}

/// A skew-symmetric multilinear map from `k` copies of the algebra to a
/// `vdim`-dimensional value space; `vdim = 1` encodes scalar cochains.
///
/// Coefficients are kept canonical: explicitly stored vectors are nonzero
/// and keyed by strictly increasing tuples, so derived equality is exact
/// equality of maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    n: usize,
    degree: usize,
    vdim: usize,
    coeffs: BTreeMap<Vec<usize>, Vec<Rat>>,
}

impl Cochain {
    pub fn zero(n: usize, degree: usize, vdim: usize) -> Self {
        Cochain {
            n,
            degree,
            vdim,
            coeffs: BTreeMap::new(),
        }
    }

    /// Degree-0 cochain holding a single value vector.
    pub fn constant(n: usize, value: Vec<Rat>) -> Self {
        let vdim = value.len();
        let mut c = Cochain::zero(n, 0, vdim);
        c.set_coeff(&[], value);
        c
    }

    /// Basis cochain: value `v_coord` on the tuple `idx`, zero elsewhere.
    pub fn basis(n: usize, degree: usize, vdim: usize, idx: &[usize], coord: usize) -> Self {
        let mut v = vec![Rat::zero(); vdim];
        v[coord] = Rat::one();
        let mut c = Cochain::zero(n, degree, vdim);
        c.set_coeff(idx, v);
        c
    }

    pub fn from_coeffs(
        n: usize,
        degree: usize,
        vdim: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<Rat>)>,
    ) -> Result<Self, AlgebraError> {
        let mut c = Cochain::zero(n, degree, vdim);
        for (idx, v) in entries {
            if idx.len() != degree
                || idx.windows(2).any(|w| w[0] >= w[1])
                || idx.iter().any(|&i| i >= n)
            {
                return Err(AlgebraError::Input(format!(
                    "index tuple {idx:?} is not strictly increasing within 0..{n} of length {degree}"
                )));
            }
            if v.len() != vdim {
                return Err(AlgebraError::Input(format!(
                    "coefficient at {idx:?} has {} coordinates, expected {vdim}",
                    v.len()
                )));
            }
            c.set_coeff(&idx, v);
        }
        Ok(c)
    }

    /// Seeded random cochain with small numerators and denominators.
    pub fn random(rng: &mut impl Rng, n: usize, degree: usize, vdim: usize) -> Self {
        let mut c = Cochain::zero(n, degree, vdim);
        for idx in increasing_tuples(n, degree) {
            let v: Vec<Rat> = (0..vdim)
                .map(|_| {
                    let num = rng.gen_range(-3i64..=3);
                    let den = [1i64, 2][rng.gen_range(0..2)];
                    crate::linalg::frac(num, den)
                })
                .collect();
            c.set_coeff(&idx, v);
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value on a strictly increasing basis tuple (zeros when unset).
    pub fn coeff(&self, idx: &[usize]) -> Vec<Rat> {
        self.coeffs
            .get(idx)
            .cloned()
            .unwrap_or_else(|| vec![Rat::zero(); self.vdim])
    }

    pub fn set_coeff(&mut self, idx: &[usize], v: Vec<Rat>) {
        debug_assert_eq!(idx.len(), self.degree);
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(v.len(), self.vdim);
        if v.iter().all(Rat::is_zero) {
            self.coeffs.remove(idx);
        } else {
            self.coeffs.insert(idx.to_vec(), v);
        }
    }

    /// Scalar value of a `vdim = 1` cochain on a basis tuple.
    pub fn scalar_coeff(&self, idx: &[usize]) -> Rat {
        debug_assert_eq!(self.vdim, 1);
        self.coeff(idx).pop().expect("vdim 1")
    }

    /// Evaluate on arbitrary algebra vectors by skew multilinear extension:
    /// each stored tuple contributes its coefficient times the minor of the
    /// argument matrix picked out by the tuple.
    pub fn eval(&self, args: &[Vec<Rat>]) -> Result<Vec<Rat>, AlgebraError> {
        if args.len() != self.degree {
            return Err(AlgebraError::Input(format!(
                "evaluated degree-{} cochain on {} arguments",
                self.degree,
                args.len()
            )));
        }
        for (p, a) in args.iter().enumerate() {
            if a.len() != self.n {
                return Err(AlgebraError::Input(format!(
                    "argument {p} has length {}, expected {}",
                    a.len(),
                    self.n
                )));
            }
        }
        let mut out = vec![Rat::zero(); self.vdim];
        for (idx, v) in &self.coeffs {
            let minor = Matrix::from_fn(self.degree, self.degree, |a, b| args[b][idx[a]].clone());
            let d = minor.det().expect("square minor");
            if d.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(v) {
                *o += &d * c;
            }
        }
        Ok(out)
    }

    /// Coefficients flattened in basis order: tuple major, coordinate minor.
    pub fn coefficient_vector(&self) -> Vec<Rat> {
        let basis = TupleBasis::new(self.n, self.degree);
        let mut out = Vec::with_capacity(basis.len() * self.vdim);
        for t in basis.tuples() {
            out.extend(self.coeff(t));
        }
        out
    }

    pub fn from_coefficient_vector(
        n: usize,
        degree: usize,
        vdim: usize,
        v: &[Rat],
    ) -> Result<Self, AlgebraError> {
        let basis = TupleBasis::new(n, degree);
        if v.len() != basis.len() * vdim {
            return Err(AlgebraError::Input(format!(
                "coefficient vector has length {}, expected {}",
                v.len(),
                basis.len() * vdim
            )));
        }
        let mut c = Cochain::zero(n, degree, vdim);
        for (p, t) in basis.tuples().iter().enumerate() {
            c.set_coeff(t, v[p * vdim..(p + 1) * vdim].to_vec());
        }
        Ok(c)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(
            (self.n, self.degree, self.vdim),
            (other.n, other.degree, other.vdim),
            "cochain shape mismatch in add"
        );
        let mut out = self.clone();
        for (idx, v) in &other.coeffs {
            let mut cur = out.coeff(idx);
            for (c, w) in cur.iter_mut().zip(v) {
                *c += w;
            }
            out.set_coeff(idx, cur);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Cochain {
        let mut out = Cochain::zero(self.n, self.degree, self.vdim);
        if c.is_zero() {
            return out;
        }
        for (idx, v) in &self.coeffs {
            out.set_coeff(idx, v.iter().map(|x| x * c).collect());
        }
        out
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&-Rat::one()))
    }
}

/// Precompose all arguments with the algebra twist.
pub fn alpha_bar(a: &HomLieAlgebra, eta: &Cochain) -> Cochain {
    assert_eq!(a.dim(), eta.n(), "algebra dimension mismatch");
    let cols: Vec<Vec<Rat>> = (0..a.dim()).map(|i| a.alpha_basis(i)).collect();
    let mut out = Cochain::zero(eta.n(), eta.degree(), eta.vdim());
    for t in increasing_tuples(eta.n(), eta.degree()) {
        let args: Vec<Vec<Rat>> = t.iter().map(|&i| cols[i].clone()).collect();
        out.set_coeff(&t, eta.eval(&args).expect("basis arity"));
    }
    out
}

/// Postcompose values with the module twist (or its inverse).
pub fn beta_bar(r: &Representation, eta: &Cochain, inverse: bool) -> Cochain {
    assert_eq!(r.vdim(), eta.vdim(), "value dimension mismatch");
    let b = if inverse { r.beta_inv() } else { r.beta() };
    let mut out = Cochain::zero(eta.n(), eta.degree(), eta.vdim());
    for t in increasing_tuples(eta.n(), eta.degree()) {
        out.set_coeff(&t, b.mul_vec(&eta.coeff(&t)).expect("shape"));
    }
    out
}

/// Splittings of `0..total` into an increasing `k`-part and its
/// complement, with the sign of the corresponding permutation.
fn unshuffles(total: usize, k: usize) -> Vec<(Vec<usize>, Vec<usize>, Rat)> {
    increasing_tuples(total, k)
        .into_iter()
        .map(|first| {
            let rest: Vec<usize> = (0..total).filter(|p| !first.contains(p)).collect();
            let crossings: usize = first.iter().enumerate().map(|(i, &s)| s - i).sum();
            let sign = if crossings % 2 == 0 {
                Rat::one()
            } else {
                -Rat::one()
            };
            (first, rest, sign)
        })
        .collect()
}

/// Exterior product of two scalar cochains over the same algebra.
pub fn wedge(xi1: &Cochain, xi2: &Cochain) -> Cochain {
    assert_eq!(xi1.vdim(), 1, "wedge takes scalar cochains");
    assert_eq!(xi2.vdim(), 1, "wedge takes scalar cochains");
    assert_eq!(xi1.n(), xi2.n(), "algebra dimension mismatch");
    let (k, l) = (xi1.degree(), xi2.degree());
    let mut out = Cochain::zero(xi1.n(), k + l, 1);
    for t in increasing_tuples(xi1.n(), k + l) {
        let mut acc = Rat::zero();
        for (first, rest, sign) in unshuffles(k + l, k) {
            let a: Vec<usize> = first.iter().map(|&p| t[p]).collect();
            let b: Vec<usize> = rest.iter().map(|&p| t[p]).collect();
            acc += sign * xi1.scalar_coeff(&a) * xi2.scalar_coeff(&b);
        }
        out.set_coeff(&t, vec![acc]);
    }
    out
}

/// Module action of a scalar cochain on a value cochain via signed
/// unshuffle sums; restricted to scalar values this is the wedge.
pub fn diamond(xi: &Cochain, eta: &Cochain) -> Cochain {
    assert_eq!(xi.vdim(), 1, "left factor must be scalar");
    assert_eq!(xi.n(), eta.n(), "algebra dimension mismatch");
    let (k, l) = (xi.degree(), eta.degree());
    let mut out = Cochain::zero(eta.n(), k + l, eta.vdim());
    for t in increasing_tuples(eta.n(), k + l) {
        let mut acc = vec![Rat::zero(); eta.vdim()];
        for (first, rest, sign) in unshuffles(k + l, k) {
            let a: Vec<usize> = first.iter().map(|&p| t[p]).collect();
            let b: Vec<usize> = rest.iter().map(|&p| t[p]).collect();
            let scalar = sign * xi.scalar_coeff(&a);
            if scalar.is_zero() {
                continue;
            }
            for (o, c) in acc.iter_mut().zip(eta.coeff(&b)) {
                *o += &scalar * c;
            }
        }
        out.set_coeff(&t, acc);
    }
    out
}

/// The two module-twist powers a degree-`k` coboundary conjugates the
/// action with; computed once and shared across a whole assembly.
fn conjugating_powers(r: &Representation, s: u32, k: usize) -> (Matrix, Matrix) {
    let front = r.beta_power(k as i64 + 1 + s as i64);
    let back = r.beta_power(-(k as i64 + 2 + s as i64));
    (front, back)
}

/// The shift-`s` coboundary operator on value cochains.
///
/// On a degree-`k` cochain the module term conjugates the action by the
/// `(k+1+s)`-th and `-(k+2+s)`-th powers of the module twist, while the
/// bracket term twists every surviving argument.
pub fn coboundary(r: &Representation, s: u32, eta: &Cochain) -> Cochain {
    let (front, back) = conjugating_powers(r, s, eta.degree());
    coboundary_with_powers(r, eta, &front, &back)
}

fn coboundary_with_powers(
    r: &Representation,
    eta: &Cochain,
    front: &Matrix,
    back: &Matrix,
) -> Cochain {
    let a = r.algebra();
    assert_eq!(a.dim(), eta.n(), "algebra dimension mismatch");
    assert_eq!(r.vdim(), eta.vdim(), "value dimension mismatch");
    let (n, k) = (eta.n(), eta.degree());
    let alpha_cols: Vec<Vec<Rat>> = (0..n).map(|i| a.alpha_basis(i)).collect();

    let mut out = Cochain::zero(n, k + 1, eta.vdim());
    for t in increasing_tuples(n, k + 1) {
        let mut acc = vec![Rat::zero(); eta.vdim()];
        // module term: drop one argument, twist the rest
        for pos in 0..k + 1 {
            let args: Vec<Vec<Rat>> = t
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != pos)
                .map(|(_, &i)| alpha_cols[i].clone())
                .collect();
            let v = eta.eval(&args).expect("basis arity");
            if v.iter().all(Rat::is_zero) {
                continue;
            }
            let w = front
                .mul_vec(
                    &r.rho(t[pos])
                        .mul_vec(&back.mul_vec(&v).expect("shape"))
                        .expect("shape"),
                )
                .expect("shape");
            let negate = pos % 2 == 1;
            for (o, c) in acc.iter_mut().zip(w) {
                if negate {
                    *o -= c;
                } else {
                    *o += c;
                }
            }
        }
        // bracket term: contract one pair, twist the rest
        for a_pos in 0..k + 1 {
            for b_pos in a_pos + 1..k + 1 {
                let mut args = Vec::with_capacity(k);
                args.push(a.structure(t[a_pos], t[b_pos]).to_vec());
                for (q, &i) in t.iter().enumerate() {
                    if q != a_pos && q != b_pos {
                        args.push(alpha_cols[i].clone());
                    }
                }
                let v = eta.eval(&args).expect("basis arity");
                let negate = (a_pos + b_pos) % 2 == 1;
                for (o, c) in acc.iter_mut().zip(v) {
                    if negate {
                        *o -= c;
                    } else {
                        *o += c;
                    }
                }
            }
        }
        out.set_coeff(&t, acc);
    }
    out
}

/// Coboundary of a scalar cochain for the zero action: only the bracket
/// term survives, and no module twist powers appear.
pub fn trivial_coboundary(a: &HomLieAlgebra, xi: &Cochain) -> Cochain {
    assert_eq!(a.dim(), xi.n(), "algebra dimension mismatch");
    assert_eq!(xi.vdim(), 1, "trivial coboundary acts on scalar cochains");
    let (n, k) = (xi.n(), xi.degree());
    let alpha_cols: Vec<Vec<Rat>> = (0..n).map(|i| a.alpha_basis(i)).collect();
    let mut out = Cochain::zero(n, k + 1, 1);
    for t in increasing_tuples(n, k + 1) {
        let mut acc = Rat::zero();
        for a_pos in 0..k + 1 {
            for b_pos in a_pos + 1..k + 1 {
                let mut args = Vec::with_capacity(k);
                args.push(a.structure(t[a_pos], t[b_pos]).to_vec());
                for (q, &i) in t.iter().enumerate() {
                    if q != a_pos && q != b_pos {
                        args.push(alpha_cols[i].clone());
                    }
                }
                let v = xi.eval(&args).expect("basis arity").pop().expect("scalar");
                if (a_pos + b_pos) % 2 == 1 {
                    acc -= v;
                } else {
                    acc += v;
                }
            }
        }
        out.set_coeff(&t, vec![acc]);
    }
    out
}

/// Matrix of the shift-`s` coboundary from degree `k` to `k+1` in the
/// fixed basis order; `tuple_count(n,k+1)*m` rows by `tuple_count(n,k)*m`
/// columns.
pub fn coboundary_matrix(r: &Representation, s: u32, k: usize) -> Matrix {
    let (n, m) = (r.algebra().dim(), r.vdim());
    let src = TupleBasis::new(n, k);
    let rows = tuple_count(n, k + 1) * m;
    let (front, back) = conjugating_powers(r, s, k);
    let mut out = Matrix::zero(rows, src.len() * m);
    for (p, idx) in src.tuples().iter().enumerate() {
        for j in 0..m {
            let image =
                coboundary_with_powers(r, &Cochain::basis(n, k, m, idx, j), &front, &back);
            for (row, v) in image.coefficient_vector().into_iter().enumerate() {
                out.set(row, p * m + j, v);
            }
        }
    }
    out
}

/// Matrix of the trivial-action coboundary on scalar cochains.
pub fn trivial_coboundary_matrix(a: &HomLieAlgebra, k: usize) -> Matrix {
    let n = a.dim();
    let src = TupleBasis::new(n, k);
    let mut out = Matrix::zero(tuple_count(n, k + 1), src.len());
    for (p, idx) in src.tuples().iter().enumerate() {
        let image = trivial_coboundary(a, &Cochain::basis(n, k, 1, idx, 0));
        for (row, v) in image.coefficient_vector().into_iter().enumerate() {
            out.set(row, p, v);
        }
    }
    out
}

/// Matrix of argument-twisting on degree-`k` cochains with `vdim`-valued
/// coefficients.
pub fn alpha_bar_matrix(a: &HomLieAlgebra, k: usize, vdim: usize) -> Matrix {
    let n = a.dim();
    let basis = TupleBasis::new(n, k);
    let dim = basis.len() * vdim;
    let mut out = Matrix::zero(dim, dim);
    for (p, idx) in basis.tuples().iter().enumerate() {
        for j in 0..vdim {
            let image = alpha_bar(a, &Cochain::basis(n, k, vdim, idx, j));
            for (row, v) in image.coefficient_vector().into_iter().enumerate() {
                out.set(row, p * vdim + j, v);
            }
        }
    }
    out
}

/// Matrix of value-twisting on degree-`k` cochains: block diagonal with
/// one twist block per index tuple.
pub fn beta_bar_matrix(r: &Representation, k: usize, inverse: bool) -> Matrix {
    let (n, m) = (r.algebra().dim(), r.vdim());
    let blocks = tuple_count(n, k);
    let b = if inverse { r.beta_inv() } else { r.beta() };
    Matrix::from_fn(blocks * m, blocks * m, |i, j| {
        if i / m == j / m {
            b.get(i % m, j % m).clone()
        } else {
            Rat::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homlie::HomLieAlgebra;
    use crate::linalg::{frac, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sl2() -> HomLieAlgebra {
        HomLieAlgebra::from_bracket_pairs(
            3,
            &[
                (0, 1, vec![rat(0), rat(0), rat(1)]),
                (0, 2, vec![rat(-2), rat(0), rat(0)]),
                (1, 2, vec![rat(0), rat(2), rat(0)]),
            ],
            Matrix::identity(3),
        )
        .unwrap()
    }

    fn basis_vec(n: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![rat(0); n];
        v[i] = rat(1);
        v
    }

    #[test]
    fn tuple_enumeration() {
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(
            increasing_tuples(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(increasing_tuples(3, 4), Vec::<Vec<usize>>::new());
        for n in 0..=6 {
            for k in 0..=n + 1 {
                let ts = increasing_tuples(n, k);
                assert_eq!(ts.len(), tuple_count(n, k));
                let mut sorted = ts.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, ts, "lex-sorted and duplicate-free");
            }
        }
        let basis = TupleBasis::new(4, 2);
        for (p, t) in basis.tuples().iter().enumerate() {
            assert_eq!(basis.position(t), Some(p));
        }
        assert_eq!(basis.position(&[1, 0]), None);
    }

    #[test]
    fn eval_transposition_sign() {
        let eta = Cochain::from_coeffs(3, 2, 2, [(vec![0, 1], vec![rat(5), rat(7)])]).unwrap();
        let got = eta.eval(&[basis_vec(3, 1), basis_vec(3, 0)]).unwrap();
        assert_eq!(got, vec![rat(-5), rat(-7)]);
    }

    #[test]
    fn eval_repeated_argument_is_zero() {
        let eta = Cochain::from_coeffs(3, 2, 1, [(vec![0, 1], vec![rat(3)])]).unwrap();
        let x = vec![rat(1), frac(1, 2), rat(-2)];
        assert_eq!(eta.eval(&[x.clone(), x]).unwrap(), vec![rat(0)]);
    }

    #[test]
    fn eval_linearity() {
        let eta = Cochain::from_coeffs(
            3,
            2,
            1,
            [(vec![0, 2], vec![rat(4)]), (vec![1, 2], vec![rat(9)])],
        )
        .unwrap();
        let sum: Vec<Rat> = basis_vec(3, 0)
            .iter()
            .zip(&basis_vec(3, 1))
            .map(|(a, b)| a + b)
            .collect();
        let got = eta.eval(&[sum, basis_vec(3, 2)]).unwrap();
        assert_eq!(got, vec![rat(13)]);
    }

    #[test]
    fn eval_arity_error() {
        let eta = Cochain::zero(3, 2, 1);
        assert!(eta.eval(&[basis_vec(3, 0)]).is_err());
        assert!(eta.eval(&[vec![rat(1)], vec![rat(0)]]).is_err());
    }

    #[test]
    fn alpha_bar_identity_and_scaling() {
        let a = sl2();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let eta = Cochain::random(&mut rng, 3, 2, 3);
        assert_eq!(alpha_bar(&a, &eta), eta);

        let doubled = HomLieAlgebra::abelian(3, Matrix::identity(3).scale(&rat(2))).unwrap();
        let one = Cochain::random(&mut rng, 3, 1, 2);
        assert_eq!(alpha_bar(&doubled, &one), one.scale(&rat(2)));
        let two = Cochain::random(&mut rng, 3, 2, 2);
        assert_eq!(alpha_bar(&doubled, &two), two.scale(&rat(4)));
    }

    #[test]
    fn beta_bar_identity_inverse_diagonal() {
        let r = crate::homlie::Representation::trivial(sl2(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let eta = Cochain::random(&mut rng, 3, 1, 2);
        assert_eq!(beta_bar(&r, &eta, false), eta);

        let diag = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        let r =
            crate::homlie::Representation::new(sl2(), vec![Matrix::zero(2, 2); 3], diag).unwrap();
        let eta = Cochain::from_coeffs(3, 1, 2, [(vec![0], vec![rat(1), rat(1)])]).unwrap();
        let mapped = beta_bar(&r, &eta, false);
        assert_eq!(mapped.coeff(&[0]), vec![rat(2), rat(3)]);
        assert_eq!(beta_bar(&r, &mapped, true), eta);
    }

    #[test]
    fn wedge_dual_basis_pairing() {
        let e1 = Cochain::basis(3, 1, 1, &[0], 0);
        let e2 = Cochain::basis(3, 1, 1, &[1], 0);
        let w = wedge(&e1, &e2);
        assert_eq!(
            w.eval(&[basis_vec(3, 0), basis_vec(3, 1)]).unwrap(),
            vec![rat(1)]
        );
        // sign rule
        assert_eq!(wedge(&e2, &e1), w.scale(&rat(-1)));
    }

    #[test]
    fn wedge_odd_square_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for degree in [1usize, 3] {
            let xi = Cochain::random(&mut rng, 4, degree, 1);
            assert!(wedge(&xi, &xi).is_zero(), "degree {degree}");
        }
    }

    #[test]
    fn diamond_scalar_action_and_wedge_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        // degree-0 scalar acts by scaling
        let c = Cochain::constant(3, vec![frac(3, 2)]);
        let eta = Cochain::random(&mut rng, 3, 2, 2);
        assert_eq!(diamond(&c, &eta), eta.scale(&frac(3, 2)));

        // k = 1, l = 0: (xi <> v)(x) = xi(x) * v
        let xi = Cochain::basis(3, 1, 1, &[0], 0);
        let v = Cochain::constant(3, vec![rat(2), rat(5)]);
        let d = diamond(&xi, &v);
        assert_eq!(d.coeff(&[0]), vec![rat(2), rat(5)]);
        assert_eq!(d.coeff(&[1]), vec![rat(0), rat(0)]);

        // scalar values: diamond coincides with wedge
        for (k, l) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
            let xi = Cochain::random(&mut rng, 4, k, 1);
            let eta = Cochain::random(&mut rng, 4, l, 1);
            assert_eq!(diamond(&xi, &eta), wedge(&xi, &eta), "degrees ({k},{l})");
        }
    }

    #[test]
    fn diamond_associates_over_wedge() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let xi1 = Cochain::random(&mut rng, 4, 1, 1);
            let xi2 = Cochain::random(&mut rng, 4, 1, 1);
            let eta = Cochain::random(&mut rng, 4, 1, 2);
            assert_eq!(
                diamond(&wedge(&xi1, &xi2), &eta),
                diamond(&xi1, &diamond(&xi2, &eta))
            );
        }
    }

    #[test]
    fn coboundary_degree_zero_is_action() {
        // with identity module twist, d v evaluated on e_i is rho(e_i) v
        let r = crate::homlie::Representation::adjoint(sl2());
        let v = vec![rat(1), rat(2), rat(3)];
        for s in 0..3u32 {
            let d = coboundary(&r, s, &Cochain::constant(3, v.clone()));
            for i in 0..3 {
                assert_eq!(d.coeff(&[i]), r.rho(i).mul_vec(&v).unwrap(), "s={s} i={i}");
            }
        }
    }

    #[test]
    fn coboundary_trivial_rep_abelian_vanishes() {
        let alpha = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let a = HomLieAlgebra::abelian(2, alpha).unwrap();
        let r = crate::homlie::Representation::trivial(a, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for k in 0..=2usize {
            let eta = Cochain::random(&mut rng, 2, k, 2);
            assert!(coboundary(&r, 1, &eta).is_zero(), "degree {k}");
        }
    }

    #[test]
    fn trivial_coboundary_examples() {
        // abelian: everything closed
        let a = HomLieAlgebra::abelian(3, Matrix::identity(3)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 0..=2usize {
            let xi = Cochain::random(&mut rng, 3, k, 1);
            assert!(trivial_coboundary(&a, &xi).is_zero());
        }

        // sl2, xi = dual of h: d xi (e, f) = -xi([e,f]) = -1
        let a = sl2();
        let h_dual = Cochain::basis(3, 1, 1, &[2], 0);
        let d = trivial_coboundary(&a, &h_dual);
        assert_eq!(d.scalar_coeff(&[0, 1]), rat(-1));

        // degree-0 scalars are closed
        let c = Cochain::constant(3, vec![rat(5)]);
        assert!(trivial_coboundary(&a, &c).is_zero());
    }

    #[test]
    fn trivial_coboundary_agrees_with_zero_action_coboundary() {
        let a = sl2();
        let r = crate::homlie::Representation::trivial(a.clone(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for k in 0..=2usize {
            let xi = Cochain::random(&mut rng, 3, k, 1);
            for s in 0..4u32 {
                assert_eq!(trivial_coboundary(&a, &xi), coboundary(&r, s, &xi));
            }
        }
    }

    #[test]
    fn matrix_assembly_shapes() {
        let alpha = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let a = HomLieAlgebra::abelian(2, alpha).unwrap();
        let r = crate::homlie::Representation::trivial(a, 2);
        let m = coboundary_matrix(&r, 0, 1);
        assert_eq!((m.rows(), m.cols()), (2, 4));
        assert!(m.is_zero());
        // top degree: no codomain tuples
        let top = coboundary_matrix(&r, 0, 2);
        assert_eq!((top.rows(), top.cols()), (0, 2));
    }

    #[test]
    fn matrix_matches_functional_coboundary() {
        let r = crate::homlie::Representation::adjoint(sl2());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for k in 0..=2usize {
            for s in 0..3u32 {
                let eta = Cochain::random(&mut rng, 3, k, 3);
                let via_matrix = coboundary_matrix(&r, s, k)
                    .mul_vec(&eta.coefficient_vector())
                    .unwrap();
                let direct = coboundary(&r, s, &eta).coefficient_vector();
                assert_eq!(via_matrix, direct, "k={k} s={s}");
            }
        }
    }

    #[test]
    fn coboundary_output_skew_on_repeats() {
        let r = crate::homlie::Representation::adjoint(sl2());
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let eta = Cochain::random(&mut rng, 3, 1, 3);
        let d = coboundary(&r, 0, &eta);
        let x = vec![rat(1), rat(-1), frac(1, 2)];
        let y = vec![rat(2), rat(0), rat(3)];
        let got = d.eval(&[x.clone(), x.clone()]).unwrap();
        assert!(got.iter().all(Rat::is_zero));
        let xy = d.eval(&[x.clone(), y.clone()]).unwrap();
        let yx = d.eval(&[y, x]).unwrap();
        let neg: Vec<Rat> = yx.iter().map(|c| -c).collect();
        assert_eq!(xy, neg);
    }

    #[test]
    fn beta_bar_matrix_is_block_diagonal() {
        let diag = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        let r =
            crate::homlie::Representation::new(sl2(), vec![Matrix::zero(2, 2); 3], diag).unwrap();
        let m = beta_bar_matrix(&r, 1, false);
        assert_eq!((m.rows(), m.cols()), (6, 6));
        let minv = beta_bar_matrix(&r, 1, true);
        assert_eq!(m.mul(&minv).unwrap(), Matrix::identity(6));
        // action on a coefficient vector agrees with beta_bar
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let eta = Cochain::random(&mut rng, 3, 1, 2);
        assert_eq!(
            m.mul_vec(&eta.coefficient_vector()).unwrap(),
            beta_bar(&r, &eta, false).coefficient_vector()
        );
    }

    #[test]
    fn alpha_bar_matrix_matches_functional() {
        let phi = Matrix::from_rows(vec![
            vec![rat(4), rat(0), rat(0)],
            vec![rat(0), frac(1, 4), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ])
        .unwrap();
        let twisted = crate::homlie::yau_twist(&sl2(), &phi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for k in 0..=3usize {
            let eta = Cochain::random(&mut rng, 3, k, 2);
            let m = alpha_bar_matrix(&twisted, k, 2);
            assert_eq!(
                m.mul_vec(&eta.coefficient_vector()).unwrap(),
                alpha_bar(&twisted, &eta).coefficient_vector()
            );
        }
    }
}
