//! Built-in desk-scale algebras and representations, and a seeded
//! generator of twisted instances; every verification suite in the crate
//! runs against these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::homlie::{yau_twist, AlgebraError, HomLieAlgebra, Representation};
use crate::linalg::{frac, rat, Matrix, Rat};

/// A named algebra together with its named representations.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: HomLieAlgebra,
    pub representations: Vec<(String, Representation)>,
}

impl CatalogEntry {
    pub fn representation(&self, name: &str) -> Option<&Representation> {
        self.representations
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r)
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["abelian2", "abelian3", "heisenberg3", "sl2", "sl2_twisted"];

fn sl2_algebra() -> HomLieAlgebra {
    // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    HomLieAlgebra::from_bracket_pairs(
        3,
        &[
            (0, 1, vec![rat(0), rat(0), rat(1)]),
            (0, 2, vec![rat(-2), rat(0), rat(0)]),
            (1, 2, vec![rat(0), rat(2), rat(0)]),
        ],
        Matrix::identity(3),
    )
    .expect("well-formed table")
}

fn sl2_twist_map() -> Matrix {
    // diagonal automorphism e -> 4e, f -> f/4, h -> h
    Matrix::from_rows(vec![
        vec![rat(4), rat(0), rat(0)],
        vec![rat(0), frac(1, 4), rat(0)],
        vec![rat(0), rat(0), rat(1)],
    ])
    .expect("square literal")
}

/// Look up a built-in entry by name.
pub fn builtin(name: &str) -> Result<CatalogEntry, AlgebraError> {
    let entry = match name {
        "abelian2" => {
            let alpha = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
            let algebra = HomLieAlgebra::abelian(2, alpha)?;
            CatalogEntry {
                name: name.to_string(),
                representations: vec![(
                    "trivial".to_string(),
                    Representation::trivial(algebra.clone(), 1),
                )],
                algebra,
            }
        }
        "abelian3" => {
            let alpha = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
            let algebra = HomLieAlgebra::abelian(3, alpha)?;
            CatalogEntry {
                name: name.to_string(),
                representations: vec![(
                    "trivial".to_string(),
                    Representation::trivial(algebra.clone(), 1),
                )],
                algebra,
            }
        }
        "heisenberg3" => {
            let algebra = HomLieAlgebra::from_bracket_pairs(
                3,
                &[(0, 1, vec![rat(0), rat(0), rat(1)])],
                Matrix::identity(3),
            )?;
            CatalogEntry {
                name: name.to_string(),
                representations: vec![
                    (
                        "trivial".to_string(),
                        Representation::trivial(algebra.clone(), 1),
                    ),
                    (
                        "adjoint".to_string(),
                        Representation::adjoint(algebra.clone()),
                    ),
                ],
                algebra,
            }
        }
        "sl2" => {
            let algebra = sl2_algebra();
            CatalogEntry {
                name: name.to_string(),
                representations: vec![
                    (
                        "trivial".to_string(),
                        Representation::trivial(algebra.clone(), 1),
                    ),
                    (
                        "adjoint".to_string(),
                        Representation::adjoint(algebra.clone()),
                    ),
                ],
                algebra,
            }
        }
        "sl2_twisted" => {
            let algebra = yau_twist(&sl2_algebra(), &sl2_twist_map())?;
            CatalogEntry {
                name: name.to_string(),
                representations: vec![(
                    "adjoint".to_string(),
                    Representation::adjoint(algebra.clone()),
                )],
                algebra,
            }
        }
        other => {
            return Err(AlgebraError::Input(format!(
                "unknown catalog entry {other:?}; known: {}",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    Ok(entry)
}

/// All built-in entries.
pub fn all_builtin() -> Vec<CatalogEntry> {
    BUILTIN_NAMES
        .iter()
        .map(|n| builtin(n).expect("built-in names resolve"))
        .collect()
}

fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    frac(rng.gen_range(-2i64..=2), [1, 1, 2][rng.gen_range(0..3)])
}

fn small_nonzero(rng: &mut ChaCha8Rng) -> Rat {
    let choices = [rat(1), rat(-1), rat(2), rat(-2), frac(1, 2), frac(-1, 2)];
    choices[rng.gen_range(0..choices.len())].clone()
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| small_rat(rng));
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// Candidate automorphism of the dimension-3 algebra with a single
/// central bracket: the central direction scales by the determinant of
/// the action on the first two coordinates.
fn heisenberg_automorphism(rng: &mut ChaCha8Rng) -> Matrix {
    let (a, p) = (small_nonzero(rng), small_rat(rng));
    let (b, q) = (small_rat(rng), small_nonzero(rng));
    let (u, v) = (small_rat(rng), small_rat(rng));
    let det = &a * &q - &p * &b;
    Matrix::from_rows(vec![
        vec![a, b, rat(0)],
        vec![p, q, rat(0)],
        vec![u, v, det],
    ])
    .expect("square literal")
}

/// Candidate automorphism of the dimension-4 filiform algebra with
/// brackets `[e1,e2] = e3`, `[e1,e3] = e4`.
fn filiform_automorphism(rng: &mut ChaCha8Rng) -> Matrix {
    let a = small_nonzero(rng);
    let q = small_nonzero(rng);
    let s = small_rat(rng);
    let r = small_rat(rng);
    let t = small_rat(rng);
    let aq = &a * &q;
    let ar = &a * &r;
    let aaq = &a * &aq;
    Matrix::from_rows(vec![
        vec![a, rat(0), rat(0), rat(0)],
        vec![s, q, rat(0), rat(0)],
        vec![rat(0), r, aq, rat(0)],
        vec![rat(0), t, ar, aaq],
    ])
    .expect("square literal")
}

/// Deterministically sample a nilpotent bracket and a compatible
/// automorphism, and return the twisted algebra with trivial and adjoint
/// representations. Falls back to an abelian twist, so it always returns
/// a valid entry.
pub fn random_twisted(seed: u64, n: usize) -> Result<CatalogEntry, AlgebraError> {
    if n == 0 || n > 4 {
        return Err(AlgebraError::Input(format!(
            "random_twisted supports dimensions 1..=4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("random_twisted_{seed}_{n}");

    let attempt = |rng: &mut ChaCha8Rng| -> Option<HomLieAlgebra> {
        let (base, phi) = match n {
            3 => {
                let c = small_nonzero(rng);
                let base = HomLieAlgebra::from_bracket_pairs(
                    3,
                    &[(0, 1, vec![rat(0), rat(0), c])],
                    Matrix::identity(3),
                )
                .ok()?;
                (base, heisenberg_automorphism(rng))
            }
            4 => {
                let base = HomLieAlgebra::from_bracket_pairs(
                    4,
                    &[
                        (0, 1, vec![rat(0), rat(0), rat(1), rat(0)]),
                        (0, 2, vec![rat(0), rat(0), rat(0), rat(1)]),
                    ],
                    Matrix::identity(4),
                )
                .ok()?;
                (base, filiform_automorphism(rng))
            }
            _ => {
                let base = HomLieAlgebra::abelian(n, Matrix::identity(n)).ok()?;
                (base, random_invertible(rng, n))
            }
        };
        let twisted = yau_twist(&base, &phi).ok()?;
        if !twisted.validate().valid() {
            return None;
        }
        let adjoint = Representation::adjoint(twisted.clone());
        adjoint.validate().valid().then_some(twisted)
    };

    let mut algebra = None;
    for _ in 0..40 {
        if let Some(found) = attempt(&mut rng) {
            algebra = Some(found);
            break;
        }
    }
    let algebra = match algebra {
        Some(a) => a,
        None => {
            let phi = random_invertible(&mut rng, n);
            let base = HomLieAlgebra::abelian(n, Matrix::identity(n))?;
            yau_twist(&base, &phi)?
        }
    };

    Ok(CatalogEntry {
        name,
        representations: vec![
            (
                "trivial".to_string(),
                Representation::trivial(algebra.clone(), 1),
            ),
            (
                "adjoint".to_string(),
                Representation::adjoint(algebra.clone()),
            ),
        ],
        algebra,
    })
}
