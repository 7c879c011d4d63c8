use std::sync::Arc;

use serde::Serialize;

use super::glue::{glue, AmalgamRep, GluedTriple};
use super::representation::Representation;
use crate::error::{Error, Result};
use crate::exactalg::{matrix_to_strings, Field, Matrix, Scalar};
use crate::groups::{AmalgamPresentation, Factor, FiniteGroup, Letter};

/// `C2 * C2`, the presentation carrying the `V_a` family.
pub fn c2_free_product() -> Arc<AmalgamPresentation> {
    let c2 = Arc::new(FiniteGroup::cyclic(2));
    Arc::new(AmalgamPresentation::free("C2*C2", c2.clone(), c2))
}

/// The triple defining `V_a` on `k^2`: the first involution is
/// `diag(1, -1)`, the second has `+1`-eigenvector `(1, 1)` and
/// `-1`-eigenvector `(1, a)`; `c = I`.
pub fn v_a_triple(a: &Scalar) -> Result<GluedTriple> {
    let field = a.field();
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedField("the V_a family needs characteristic != 2".into()));
    }
    if a.is_zero() || a.is_one() {
        return Err(Error::UnsupportedField(format!("parameter a = {a} must avoid 0 and 1")));
    }
    let p = c2_free_product();
    let one = Scalar::one(field);
    let d = Matrix::from_i64(field, &[&[1, 0], &[0, -1]]);
    let basis = Matrix::from_rows(field, vec![vec![one.clone(), one.clone()], vec![one, a.clone()]])?;
    let s2 = &(&basis * &d) * &basis.inverse().expect("a != 1");
    let v1 = Representation::from_generators(p.factor(Factor::One).clone(), field, 2, &[(1, d)])?;
    let v2 = Representation::from_generators(p.factor(Factor::Two).clone(), field, 2, &[(1, s2)])?;
    GluedTriple::new(p, v1, v2, Matrix::identity(field, 2))
}

pub fn v_a(a: &Scalar) -> Result<AmalgamRep> {
    glue(&v_a_triple(a)?)
}

/// The two non-trivial involutions `[s1, s2]` of `C2 * C2`.
pub fn involution_word() -> Vec<Letter> {
    vec![Letter::new(Factor::One, 1), Letter::new(Factor::Two, 1)]
}

/// `C4 * C6` acting on `Q^2` through `(0 -1; 1 0)` and `(1 -1; 1 0)`.
pub fn sl2_rep() -> AmalgamRep {
    let q = Field::Rational;
    let p = Arc::new(AmalgamPresentation::free(
        "C4*C6",
        Arc::new(FiniteGroup::cyclic(4)),
        Arc::new(FiniteGroup::cyclic(6)),
    ));
    let a = Matrix::from_i64(q, &[&[0, -1], &[1, 0]]);
    let b = Matrix::from_i64(q, &[&[1, -1], &[1, 0]]);
    let r1 = Representation::from_generators(p.factor(Factor::One).clone(), q, 2, &[(1, a)])
        .expect("A has order 4");
    let r2 = Representation::from_generators(p.factor(Factor::Two).clone(), q, 2, &[(1, b)])
        .expect("B has order 6");
    AmalgamRep::new(p, r1, r2).expect("free product")
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2Certificate {
    pub a: Vec<Vec<String>>,
    pub b: Vec<Vec<String>>,
    pub m: Vec<Vec<String>>,
    pub trace: String,
    pub a_fourth_power_is_identity: bool,
    pub b_sixth_power_is_identity: bool,
    pub m_is_plus_minus_identity: bool,
    /// `(M - (tr/2) I)^2 = 0`, i.e. `M` is `±` a unipotent matrix.
    pub m_is_plus_minus_unipotent: bool,
    /// `M^k` for `k = 1..=12`.
    pub powers: Vec<Vec<Vec<String>>>,
    pub no_power_is_identity: bool,
    pub infinite_order: bool,
}

/// Shows that the image of `C4 * C6` in `GL2(Q)` contains an element of
/// infinite order: `M = ρ(g4)ρ(g6)` has trace `±2`, is `±` unipotent and is
/// not `±I`.
pub fn sl2_infinite_order_certificate() -> Sl2Certificate {
    let r = sl2_rep();
    let q = Field::Rational;
    let a = r.letter_matrix(&Letter::new(Factor::One, 1)).clone();
    let b = r.letter_matrix(&Letter::new(Factor::Two, 1)).clone();
    let m = r
        .evaluate_raw(&[Letter::new(Factor::One, 1), Letter::new(Factor::Two, 1)])
        .expect("valid letters");
    let trace = m.trace();
    let id = Matrix::identity(q, 2);
    let minus_id = id.scale(&Scalar::from_i64(q, -1));
    let half = &trace / &Scalar::from_i64(q, 2);
    let n = &m - &Matrix::scalar_matrix(&half, 2);
    let unipotent = (&n * &n).is_zero();
    let trace_pm2 = trace == Scalar::from_i64(q, 2) || trace == Scalar::from_i64(q, -2);
    let pm_id = m == id || m == minus_id;
    let powers: Vec<Matrix> = (1..=12).map(|k| m.pow(k)).collect();
    let no_power_is_identity = powers.iter().all(|p| !p.is_identity());
    Sl2Certificate {
        a: matrix_to_strings(&a),
        b: matrix_to_strings(&b),
        m: matrix_to_strings(&m),
        trace: trace.to_string(),
        a_fourth_power_is_identity: a.pow(4).is_identity(),
        b_sixth_power_is_identity: b.pow(6).is_identity(),
        m_is_plus_minus_identity: pm_id,
        m_is_plus_minus_unipotent: unipotent,
        powers: powers.iter().map(matrix_to_strings).collect(),
        no_power_is_identity,
        infinite_order: trace_pm2 && unipotent && !pm_id,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_product_matches_hand_computation() {
        let q = Field::Rational;
        let r = sl2_rep();
        let m = r
            .evaluate_raw(&[Letter::new(Factor::One, 1), Letter::new(Factor::Two, 1)])
            .unwrap();
        assert_eq!(m, Matrix::from_i64(q, &[&[-1, 0], &[1, -1]]));
        let cert = sl2_infinite_order_certificate();
        assert_eq!(cert.trace, "-2/1");
        assert!(cert.a_fourth_power_is_identity && cert.b_sixth_power_is_identity);
        assert!(cert.infinite_order && cert.no_power_is_identity);
        assert_eq!(cert.powers.len(), 12);
    }

    #[test]
    fn v_a_rejects_degenerate_parameters() {
        let q = Field::Rational;
        assert!(v_a(&Scalar::zero(q)).is_err());
        assert!(v_a(&Scalar::one(q)).is_err());
        let f4 = crate::exactalg::FiniteField::new(2, 2).unwrap();
        assert!(matches!(v_a(&Scalar::generator(f4)), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn v_a_second_involution() {
        // P diag(1,-1) P^{-1} with P = [[1,1],[1,a]] equals
        // 1/(a-1) [[a+1, -2], [2a, -(a+1)]].
        let q = Field::Rational;
        for a in [2i64, 3, 5, -1] {
            let r = v_a(&Scalar::from_i64(q, a)).unwrap();
            let s2 = r.letter_matrix(&Letter::new(Factor::Two, 1));
            let want = Matrix::from_i64(q, &[&[a + 1, -2], &[2 * a, -(a + 1)]])
                .scale(&Scalar::rational(1, a - 1));
            assert_eq!(s2, &want);
            let w = r.evaluate_raw(&involution_word()).unwrap();
            assert_eq!(w, &Matrix::from_i64(q, &[&[1, 0], &[0, -1]]) * &want);
        }
    }
}
