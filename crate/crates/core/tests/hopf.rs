use std::sync::Arc;

use tannaka_core::exactalg::{Field, Matrix, Scalar};
use tannaka_core::groups::{FiniteGroup, GroupHom};
use tannaka_core::hopf::{dualize_hom, verify_hopf_axioms, FunctionHopfAlgebra};

fn fields() -> [Field; 3] {
    [Field::Rational, Field::finite(2, 1).unwrap(), Field::finite(3, 2).unwrap()]
}

#[test]
fn function_algebras_are_hopf_algebras() {
    for field in fields() {
        for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)] {
            let a = FunctionHopfAlgebra::new(field, Arc::new(g));
            let report = verify_hopf_axioms(&a);
            assert!(report.passed(), "{field}: {:?}", report.checks);
        }
    }
}

#[test]
fn structure_maps_on_delta_functions() {
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    let a = FunctionHopfAlgebra::new(Field::Rational, s3.clone());
    for g in s3.elements() {
        let d = a.delta(g);
        // ε(δ_g) = [g = e], S(δ_g) = δ_{g^-1}, Δ(δ_g)(x, y) = [xy = g].
        assert_eq!(a.counit(&d), Scalar::from_i64(Field::Rational, (g == s3.identity()) as i64));
        assert_eq!(a.antipode(&d), a.delta(s3.inv(g)));
        let cm = a.comultiply(&d);
        for x in s3.elements() {
            for y in s3.elements() {
                assert_eq!(cm[(x, y)], Scalar::from_i64(Field::Rational, (s3.mul(x, y) == g) as i64));
            }
        }
    }
}

#[test]
fn tampered_antipode_is_caught() {
    let a = FunctionHopfAlgebra::new(Field::Rational, Arc::new(FiniteGroup::cyclic(3)));
    let mut t = a.tables();
    t.antipode = Matrix::identity(Field::Rational, 3);
    assert!(!t.verify().passed());
}

#[test]
fn dual_maps_compose_contravariantly() {
    let c = |n| Arc::new(FiniteGroup::cyclic(n));
    let psi = GroupHom::new(c(2), c(4), vec![0, 2]).unwrap();
    let phi = GroupHom::new(c(4), c(8), vec![0, 2, 4, 6]).unwrap();
    for field in fields() {
        let composite = dualize_hom(field, &phi.compose(&psi).unwrap());
        let chained = dualize_hom(field, &psi).compose(&dualize_hom(field, &phi)).unwrap();
        assert_eq!(composite.matrix, chained.matrix);
        assert!(composite.verify().passed());
        assert!(dualize_hom(field, &phi).compose(&dualize_hom(field, &psi)).is_err());
    }
}
