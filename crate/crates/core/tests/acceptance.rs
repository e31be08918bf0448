//! Acceptance suite: one test per release criterion, every comparison
//! exact. Each test prints a single pass line; run with `--nocapture`
//! to see them.

mod common;

use homcoh::catalog::{all_builtin, builtin};
use homcoh::cochain::Cochain;
use homcoh::cohomology::{
    check_alpha_chain_map, check_beta_chain_map, check_d_squared, check_leibniz_diamond,
    check_leibniz_trivial, cohomology_dims, verify_iso,
};
use homcoh::format::{algebra_from_doc, entry_to_doc, parse_input, to_toml, InputDoc};
use homcoh::homlie::Representation;
use homcoh::linalg::{frac, Matrix, Rat};
use homcoh::reconstruct::{reconstruct, roundtrip, OperatorFamily};
use homcoh::HomLieAlgebra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn criterion_1_squared_differential_vanishes() {
    for entry in all_builtin() {
        for (rname, rep) in &entry.representations {
            let n = entry.algebra.dim();
            for s in 0..=3u32 {
                let result = check_d_squared(rep, s, n);
                assert!(
                    result.holds(),
                    "{} / {rname} shift {s}: {:?}",
                    entry.name,
                    result.witnesses
                );
            }
        }
    }
    println!("acceptance 1 (squared differential vanishes exactly): pass");
}

#[test]
fn criterion_2_reduction_to_classical_differential() {
    // with identity twists on both sides, every shift must reproduce the
    // textbook differential matrix entry-for-entry
    for name in ["sl2", "heisenberg3"] {
        let entry = builtin(name).unwrap();
        let n = entry.algebra.dim();
        for (rname, rep) in &entry.representations {
            assert_eq!(rep.algebra().alpha(), &Matrix::identity(n));
            assert_eq!(rep.beta(), &Matrix::identity(rep.vdim()));
            let rho: Vec<Matrix> = (0..n).map(|i| rep.rho(i).clone()).collect();
            for k in 0..=n {
                let oracle = common::classical_differential_matrix(&entry.algebra, &rho, k);
                for s in 0..=3u32 {
                    let assembled = homcoh::cochain::coboundary_matrix(rep, s, k);
                    assert_eq!(assembled, oracle, "{name} / {rname} shift {s} degree {k}");
                }
            }
        }
    }
    println!("acceptance 2 (classical-differential reduction oracle): pass");
}

#[test]
fn criterion_3_reference_cohomology_dimensions() {
    let sl2 = builtin("sl2").unwrap();
    let trivial = sl2.representation("trivial").unwrap();
    for s in 0..=3u32 {
        assert_eq!(
            cohomology_dims(trivial, s, 3).cohomology_dims(),
            vec![1, 0, 0, 1],
            "sl2 trivial shift {s}"
        );
    }
    let abelian3 = builtin("abelian3").unwrap();
    let trivial = abelian3.representation("trivial").unwrap();
    for s in 0..=3u32 {
        assert_eq!(
            cohomology_dims(trivial, s, 3).cohomology_dims(),
            vec![1, 3, 3, 1],
            "abelian3 trivial shift {s}"
        );
    }
    println!("acceptance 3 (reference cohomology dimensions): pass");
}

#[test]
fn criterion_4_chain_map_identities() {
    for entry in all_builtin() {
        let n = entry.algebra.dim();
        for (rname, rep) in &entry.representations {
            for s in 0..=2u32 {
                let beta = check_beta_chain_map(rep, s, n);
                assert!(
                    beta.holds(),
                    "{} / {rname} beta chain map shift {s}: {:?}",
                    entry.name,
                    beta.witnesses
                );
                let alpha = check_alpha_chain_map(rep, s, n);
                assert!(
                    alpha.holds(),
                    "{} / {rname} alpha chain map shift {s}: {:?}",
                    entry.name,
                    alpha.witnesses
                );
            }
        }
    }
    println!("acceptance 4 (chain-map identities): pass");
}

#[test]
fn criterion_5_cohomology_isomorphism_across_shifts() {
    for entry in all_builtin() {
        let n = entry.algebra.dim();
        for (rname, rep) in &entry.representations {
            for s in 0..=2u32 {
                let result = verify_iso(rep, s, n);
                assert!(
                    result.holds(),
                    "{} / {rname} shift {s}: {:?}",
                    entry.name,
                    result.witnesses
                );
            }
        }
    }
    println!("acceptance 5 (cohomology isomorphism between shifts): pass");
}

#[test]
fn criterion_6_leibniz_rules_on_random_cochains() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0C0A);
    for entry in all_builtin() {
        let n = entry.algebra.dim();
        for (rname, rep) in &entry.representations {
            for s in 0..=2u32 {
                for trial in 0..100 {
                    let k = rng.gen_range(1..=2usize.min(n));
                    let l = rng.gen_range(0..=2usize.min(n - k));
                    let xi = Cochain::random(&mut rng, n, k, 1);
                    let xi2 = Cochain::random(&mut rng, n, l, 1);
                    let eta = Cochain::random(&mut rng, n, l, rep.vdim());

                    let wedge_rule = check_leibniz_trivial(&entry.algebra, &xi, &xi2);
                    assert!(
                        wedge_rule.holds(),
                        "{} wedge rule trial {trial}: {:?}",
                        entry.name,
                        wedge_rule.witnesses
                    );
                    let diamond_rule = check_leibniz_diamond(rep, s, &xi, &eta);
                    assert!(
                        diamond_rule.holds(),
                        "{} / {rname} diamond rule shift {s} trial {trial}: {:?}",
                        entry.name,
                        diamond_rule.witnesses
                    );
                }
            }
        }
    }
    println!("acceptance 6 (Leibniz rules, 100 seeded pairs per entry and shift): pass");
}

#[test]
fn criterion_7_reconstruction_roundtrip_and_perturbations() {
    for entry in all_builtin() {
        for (rname, rep) in &entry.representations {
            for s in 0..=2u32 {
                let result = roundtrip(rep, s);
                assert!(
                    result.holds(),
                    "{} / {rname} shift {s}: {:?}",
                    entry.name,
                    result.witnesses
                );
            }

            // perturbation harness: bump every entry of the degree-0
            // matrix by one, one at a time; each bumped family must
            // either fail a named diagnostic or (when the bump happens
            // to encode different-but-valid data) reconstruct to
            // something that passes both validators
            let family = OperatorFamily::from_representation(rep, 0);
            let mut detected = 0usize;
            for i in 0..family.d0.rows() {
                for j in 0..family.d0.cols() {
                    let mut bumped = family.clone();
                    let v = bumped.d0.get(i, j) + homcoh::linalg::rat(1);
                    bumped.d0.set(i, j, v);
                    let recon = reconstruct(&bumped).unwrap();
                    if recon.all_hold() {
                        let algebra =
                            HomLieAlgebra::new(recon.bracket.clone(), bumped.alpha.clone())
                                .unwrap();
                        assert!(algebra.validate().valid());
                        let rebuilt =
                            Representation::new(algebra, recon.rho.clone(), bumped.beta.clone())
                                .unwrap();
                        assert!(
                            rebuilt.validate().valid(),
                            "{} / {rname} undetected bump at ({i}, {j}) is invalid",
                            entry.name
                        );
                    } else {
                        detected += 1;
                        let failing: Vec<&str> = recon
                            .diagnostics
                            .iter()
                            .filter(|d| !d.holds())
                            .map(|d| d.name.as_str())
                            .collect();
                        assert!(!failing.is_empty());
                    }
                }
            }
            assert!(
                detected > 0,
                "{} / {rname}: no single-entry bump was detected",
                entry.name
            );
        }
    }
    println!("acceptance 7 (reconstruction round-trip and perturbation detection): pass");
}

#[test]
fn criterion_8_multilinear_evaluation_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xEBA1);
    for n in 2..=4usize {
        for degree in 0..=3usize.min(n) {
            for vdim in [1usize, 2] {
                for _ in 0..5 {
                    let eta = Cochain::random(&mut rng, n, degree, vdim);
                    // random rational arguments
                    let args: Vec<Vec<Rat>> = (0..degree)
                        .map(|_| {
                            (0..n)
                                .map(|_| frac(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)))
                                .collect()
                        })
                        .collect();
                    assert_eq!(
                        eta.eval(&args).unwrap(),
                        common::eval_bruteforce(&eta, &args),
                        "n={n} degree={degree} vdim={vdim}"
                    );
                    // raw basis tuples, permutations and repeats included
                    for _ in 0..10 {
                        let picks: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..n)).collect();
                        let basis_args: Vec<Vec<Rat>> = picks
                            .iter()
                            .map(|&i| {
                                let mut v = vec![Rat::from_integer(0.into()); n];
                                v[i] = Rat::from_integer(1.into());
                                v
                            })
                            .collect();
                        assert_eq!(
                            eta.eval(&basis_args).unwrap(),
                            common::eval_bruteforce(&eta, &basis_args),
                            "n={n} degree={degree} picks={picks:?}"
                        );
                    }
                }
            }
        }
    }
    println!("acceptance 8 (multilinear evaluation against brute force): pass");
}

#[test]
fn criterion_9_serialization_fidelity() {
    for entry in all_builtin() {
        let n = entry.algebra.dim();
        let text = to_toml(&entry_to_doc(&entry));
        let InputDoc::Algebra(doc) = parse_input(&text).unwrap() else {
            panic!("expected algebra document");
        };
        let (algebra, reps) = algebra_from_doc(&doc).unwrap();
        assert!(algebra.validate().valid(), "{}", entry.name);
        for (rname, original) in &entry.representations {
            let (_, parsed) = reps.iter().find(|(rn, _)| rn == rname).unwrap();
            assert!(parsed.validate().valid(), "{} / {rname}", entry.name);
            for s in 0..=3u32 {
                assert_eq!(
                    cohomology_dims(parsed, s, n),
                    cohomology_dims(original, s, n),
                    "{} / {rname} shift {s}",
                    entry.name
                );
            }
        }
    }
    println!("acceptance 9 (serialization fidelity): pass");
}
