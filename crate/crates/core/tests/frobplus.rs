use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tannaka_core::exactalg::{Field, Matrix, Scalar};
use tannaka_core::frobplus::*;
use tannaka_core::groups::FiniteGroup;
use tannaka_core::limits::Limits;
use tannaka_core::rep::{find_isomorphism, Representation};

fn f(p: u32, m: u8) -> Field {
    Field::finite(p, m).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn groups() -> Vec<Arc<FiniteGroup>> {
    vec![Arc::new(FiniteGroup::trivial()), Arc::new(FiniteGroup::cyclic(3)), Arc::new(FiniteGroup::symmetric(3))]
}

#[test]
fn invariant_and_coinvariant_dims_count_orbits() {
    let limits = Limits::default();
    for (field, d) in [(f(2, 1), 1), (f(2, 1), 2), (f(2, 2), 3), (f(2, 1), 4), (f(3, 1), 2), (f(3, 2), 3), (f(5, 1), 2)] {
        let p = field.characteristic() as usize;
        let v = Representation::trivial(Arc::new(FiniteGroup::trivial()), field, d);
        // Cyclic orbits on p-tuples: the d constant ones plus free orbits of size p.
        let cyc_orbits = d + (d.pow(p as u32) - d) / p;
        let r = fr_plus(&v, &limits).unwrap();
        assert_eq!(r.invariants.len(), cyc_orbits);
        assert_eq!(r.coinvariants.dim(), cyc_orbits);
        assert_eq!(r.dim(), d);
        // Symmetric orbits are multisets.
        let s = fr_plus_with(&v, SymmetryChoice::Symmetric, &limits).unwrap();
        assert_eq!(s.invariants.len(), binomial(d + p - 1, p));
        assert_eq!(s.coinvariants.dim(), binomial(d + p - 1, p));
        assert_eq!(s.dim(), d);
    }
}

#[test]
fn corpora_have_dimension_and_bijective_t() {
    let limits = Limits::default();
    for field in [f(2, 1), f(2, 2), f(3, 1), f(3, 2)] {
        for g in groups() {
            for (k, v) in fr_corpus(&g, field, 3, 11).iter().enumerate() {
                let r = fr_plus(v, &limits).unwrap();
                assert_eq!(r.dim(), v.dim());
                let rep = t_map(&r, 20, k as u64).unwrap();
                assert!(rep.passed(), "{} {} {:?}", g.name(), field, rep.witness);
                // Independent of t: some isomorphism Fr₊V ≅ V^{(p)} exists.
                let twist = v.frobenius_twist().unwrap();
                assert!(find_isomorphism(&twist, &r.rep).unwrap().is_some());
            }
        }
    }
}

#[test]
fn s3_two_dimensional_over_f2() {
    let v = Representation::standard_symmetric(3, f(2, 1));
    assert_eq!(v.dim(), 2);
    let r = fr_plus(&v, &Limits::default()).unwrap();
    assert_eq!(r.dim(), 2);
    // Over F_2 Frobenius fixes entries, so Fr₊V ≅ V.
    assert!(find_isomorphism(&v, &r.rep).unwrap().is_some());
}

#[test]
fn characters_of_c3_are_raised_to_the_p() {
    let k = f(2, 2);
    let Field::Finite(ff) = k else { unreachable!() };
    let w = Scalar::generator(ff);
    let chi = Representation::cyclic_character(3, &w).unwrap();
    let chi2 = Representation::cyclic_character(3, &w.pow(2)).unwrap();
    let limits = Limits::default();
    let a = fr_plus(&chi, &limits).unwrap();
    let b = fr_plus(&chi2, &limits).unwrap();
    assert_eq!(a.rep.matrix(1), chi2.matrix(1));
    assert_eq!(b.rep.matrix(1), chi.matrix(1));
    let probe = faithfulness_probe(&a, &b).unwrap();
    assert_eq!((probe.hom_dim, probe.fr_hom_dim), (0, 0));
    assert!(probe.fully_faithful());
}

#[test]
fn faithfulness_on_small_pairs() {
    let limits = Limits::default();
    let f2 = f(2, 1);
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    let std2 = Representation::standard_symmetric(3, f2);
    let triv = Representation::trivial(s3.clone(), f2, 1);
    let a = fr_plus(&std2, &limits).unwrap();
    let b = fr_plus(&triv, &limits).unwrap();
    let r = faithfulness_probe(&a, &b).unwrap();
    assert_eq!(r.hom_dim, r.fr_hom_dim);
    assert!(r.fully_faithful());
    let t = faithfulness_probe(&b, &b).unwrap();
    assert_eq!((t.hom_dim, t.fr_hom_dim, t.rank), (1, 1, 1));
}

#[test]
fn faithfulness_across_corpora() {
    let limits = Limits::default();
    for field in [f(2, 1), f(2, 2)] {
        for g in [Arc::new(FiniteGroup::cyclic(3)), Arc::new(FiniteGroup::symmetric(3))] {
            let corpus: Vec<FrPlusResult> =
                fr_corpus(&g, field, 3, 5).iter().step_by(3).map(|v| fr_plus(v, &limits).unwrap()).collect();
            for a in &corpus {
                for b in &corpus {
                    let r = faithfulness_probe(a, b).unwrap();
                    assert!(r.fully_faithful(), "{} {field} {r:?}", g.name());
                }
            }
        }
    }
}

#[test]
fn exactness_on_permutation_filtrations() {
    let limits = Limits::default();
    for field in [f(2, 1), f(3, 1), f(2, 2)] {
        for seq in [
            ShortExactSequence::constants_in_permutation(3, field).unwrap(),
            ShortExactSequence::sum_zero_in_permutation(3, field).unwrap(),
        ] {
            for choice in [SymmetryChoice::Cyclic, SymmetryChoice::Symmetric] {
                let r = exactness_probe(&seq, choice, &limits).unwrap();
                assert!(r.passed(), "{field} {r:?}");
                assert_eq!(r.fr_dims, r.dims);
            }
        }
    }
}

#[test]
fn splitting_depends_on_characteristic() {
    // 3 is invertible mod 2, so the constants split off; in characteristic 3
    // they lie inside the sum-zero vectors and do not.
    assert!(ShortExactSequence::constants_in_permutation(3, f(2, 1)).unwrap().splits().unwrap());
    assert!(!ShortExactSequence::constants_in_permutation(3, f(3, 1)).unwrap().splits().unwrap());
    let r = exactness_probe(
        &ShortExactSequence::constants_in_permutation(3, f(3, 1)).unwrap(),
        SymmetryChoice::Cyclic,
        &Limits::default(),
    )
    .unwrap();
    assert!(r.passed());
}

#[test]
fn tensor_dimensions_multiply() {
    let limits = Limits::default();
    let c3 = Arc::new(FiniteGroup::cyclic(3));
    let field = f(2, 2);
    let corpus = fr_corpus(&c3, field, 2, 3);
    for v in corpus.iter().take(6) {
        for w in corpus.iter().take(6) {
            assert!(tensor_dimension_check(v, w, &limits).unwrap());
        }
    }
}

#[test]
fn symmetric_and_cyclic_choices_agree() {
    let limits = Limits::default();
    for field in [f(2, 1), f(2, 2), f(3, 1), f(3, 2)] {
        for g in groups() {
            for v in fr_corpus(&g, field, 3, 2).iter().step_by(2) {
                let c = compare_choices(v, &limits).unwrap();
                assert!(c.identical(), "{} {field} {c:?}", g.name());
            }
        }
    }
}

#[test]
fn functoriality_and_naturality() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for field in [f(2, 1), f(2, 2), f(3, 1)] {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let reps = fr_corpus(&s3, field, 3, 4);
        let results: Vec<FrPlusResult> = reps.iter().step_by(2).map(|v| fr_plus(v, &limits).unwrap()).collect();
        for a in &results {
            for b in &results {
                let hab = a.base.hom_space(&b.base).unwrap();
                if hab.is_empty() {
                    continue;
                }
                let ta = a.t_matrix();
                let tb = b.t_matrix();
                for phi in &hab {
                    let fphi = fr_plus_morphism(a, b, phi).unwrap();
                    // t(W) ∘ φ^{(p)} = Fr₊(φ) ∘ t(V).
                    assert_eq!(&tb * &phi.frobenius().unwrap(), &fphi * &ta);
                }
                // Additivity and λ^p-homogeneity on a random pair.
                let l = Scalar::random(field, &mut rng);
                let x = &hab[0].scale(&l) + hab.last().unwrap();
                let lhs = fr_plus_morphism(a, b, &x).unwrap();
                let rhs = &fr_plus_morphism(a, b, &hab[0]).unwrap().scale(&l.frobenius().unwrap())
                    + &fr_plus_morphism(a, b, hab.last().unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                for c in &results {
                    let hbc = b.base.hom_space(&c.base).unwrap();
                    if let Some(psi) = hbc.first() {
                        let comp = psi * &hab[0];
                        assert_eq!(
                            fr_plus_morphism(a, c, &comp).unwrap(),
                            &fr_plus_morphism(b, c, psi).unwrap() * &fr_plus_morphism(a, b, &hab[0]).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn untwist_on_monomial_and_permutation() {
    let limits = Limits::default();
    let k = f(2, 2);
    let Field::Finite(ff) = k else { unreachable!() };
    let w = Scalar::generator(ff);
    let chi = Representation::cyclic_character(3, &w).unwrap();
    let perm = Representation::natural_symmetric(3, f(3, 2));
    let mono = chi.direct_sum(&Representation::cyclic_character(3, &w.pow(2)).unwrap()).unwrap();
    for rep in [chi, perm, mono] {
        let r = untwist_witness(&rep, &limits).unwrap();
        assert!(r.certified(), "{r:?}");
    }
    let dense = Representation::standard_symmetric(3, f(2, 2))
        .conjugate(&Matrix::from_i64(f(2, 2), &[&[1, 1], &[0, 1]]))
        .unwrap();
    let r = untwist_witness(&dense, &limits).unwrap();
    assert!(r.isomorphic);
}

#[test]
fn size_cap() {
    let v = Representation::trivial(Arc::new(FiniteGroup::trivial()), f(3, 1), 7);
    assert!(fr_plus(&v, &Limits::default()).is_err());
    let small = Limits { max_tensor_dim: 8, ..Limits::default() };
    let w = Representation::trivial(Arc::new(FiniteGroup::trivial()), f(2, 1), 3);
    assert!(fr_plus(&w, &small).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_reps_keep_dimension(seed in 0u64..1000, which in 0usize..3, fi in 0usize..3) {
        let field = [f(2, 1), f(2, 2), f(3, 1)][fi];
        let g = groups()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = Representation::random(g, field, 3, &mut rng);
        let r = fr_plus(&v, &Limits::default()).unwrap();
        prop_assert_eq!(r.dim(), v.dim());
        let t = t_map(&r, 5, seed).unwrap();
        prop_assert!(t.passed());
    }
}
