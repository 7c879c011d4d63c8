use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tannaka_core::exactalg::{Field, Matrix, Scalar};
use tannaka_core::groups::{AmalgamPresentation, FiniteGroup, GroupHom};
use tannaka_core::rep::{find_isomorphism, glue, round_trip_witness, split, v_a, GluedTriple, Representation};

fn f(p: u32) -> Field {
    Field::finite(p, 1).unwrap()
}

/// All d x d matrices over F_p.
fn all_matrices(p: u32, d: usize) -> Vec<Matrix> {
    let field = f(p);
    let n = d * d;
    (0..(p as u64).pow(n as u32))
        .map(|mut code| {
            Matrix::from_fn(field, d, d, |_, _| {
                let x = code % p as u64;
                code /= p as u64;
                Scalar::from_i64(field, x as i64)
            })
        })
        .collect()
}

/// Counts intertwiners by checking every matrix against every group element.
fn brute_hom_count(a: &Representation, b: &Representation, p: u32) -> usize {
    assert_eq!(a.dim(), b.dim());
    all_matrices(p, a.dim())
        .into_iter()
        .filter(|m| a.group().elements().all(|g| &(m * a.matrix(g)) == &(b.matrix(g) * m)))
        .count()
}

#[test]
fn hom_dimension_matches_brute_force_count() {
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    for p in [2, 3] {
        let reps = [
            Representation::trivial(s3.clone(), f(p), 2),
            Representation::sign(3, f(p)).direct_sum(&Representation::trivial(s3.clone(), f(p), 1)).unwrap(),
            Representation::standard_symmetric(3, f(p)),
        ];
        for a in &reps {
            for b in &reps {
                let dim = a.hom_space(b).unwrap().len() as u32;
                assert_eq!(brute_hom_count(a, b, p), (p as usize).pow(dim), "p = {p}");
            }
        }
    }
}

#[test]
fn schur_for_v_a() {
    for field in [Field::Rational, f(5), f(7)] {
        for a in [2, 3] {
            let v = v_a(&Scalar::from_i64(field, a)).unwrap();
            let end = v.hom_space(&v).unwrap();
            assert_eq!(end.len(), 1, "{field}, a = {a}");
            assert!(v.is_intertwiner(&v, &Matrix::identity(field, 2)));
        }
    }
}

#[test]
fn conjugate_representations_are_isomorphic() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    for field in [Field::Rational, f(5)] {
        let r = Representation::random(s3.clone(), field, 3, &mut rng);
        let p = Matrix::random_invertible(field, r.dim(), &mut rng);
        let c = r.conjugate(&p).unwrap();
        let iso = find_isomorphism(&r, &c).unwrap().expect("conjugates are isomorphic");
        assert!(iso.is_invertible() && r.is_intertwiner(&c, &iso));
    }
    let sign = Representation::sign(3, Field::Rational);
    let triv = Representation::trivial(s3, Field::Rational, 1);
    assert!(find_isomorphism(&sign, &triv).unwrap().is_none());
}

#[test]
fn incompatible_gluing_is_rejected() {
    // Over C2 *_C2 C2 the gluing map must intertwine the restrictions.
    let c2 = Arc::new(FiniteGroup::cyclic(2));
    let p = Arc::new(AmalgamPresentation::new("C2*_C2 C2", GroupHom::identity(c2.clone()), GroupHom::identity(c2.clone())).unwrap());
    let q = Field::Rational;
    let sign = Representation::cyclic_character(2, &Scalar::from_i64(q, -1)).unwrap();
    let triv = Representation::trivial(c2, q, 1);
    assert!(GluedTriple::new(p, sign, triv, Matrix::identity(q, 1)).is_err());
}

fn presentations() -> Vec<Arc<AmalgamPresentation>> {
    let c = |n| Arc::new(FiniteGroup::cyclic(n));
    let sq = GroupHom::new(c(2), c(4), vec![0, 2]).unwrap();
    vec![
        Arc::new(AmalgamPresentation::new("C4*_C2 C4", sq.clone(), sq).unwrap()),
        Arc::new(AmalgamPresentation::free("C2*C3", c(2), c(3))),
        Arc::new(AmalgamPresentation::free("C2*S3", c(2), Arc::new(FiniteGroup::symmetric(3)))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn glue_split_round_trip_and_hom_equality(seed in any::<u64>(), which in 0usize..3, p in prop::sample::select(vec![0u32, 5, 7])) {
        let field = if p == 0 { Field::Rational } else { f(p) };
        let pres = presentations()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = GluedTriple::random(pres.clone(), field, 3, 40, &mut rng);
        let t = GluedTriple::random(pres, field, 3, 40, &mut rng);
        if let (Some(s), Some(t)) = (s, t) {
            let (m, ok) = round_trip_witness(&s).unwrap();
            prop_assert!(ok);
            let back = split(&glue(&s).unwrap());
            prop_assert!(back.is_morphism(&s, &m));
            let gs = glue(&s).unwrap();
            let gt = glue(&t).unwrap();
            prop_assert_eq!(gs.check_word_invariance(3).unwrap(), None);
            prop_assert_eq!(s.hom_space(&t).unwrap().len(), gs.hom_space(&gt).unwrap().len());
        }
    }
}
