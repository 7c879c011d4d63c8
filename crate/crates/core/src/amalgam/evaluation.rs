use serde::Serialize;

use super::coherence::check_coherence;
use super::element::{letters_of, TruncatedElement};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::groups::{Factor, Letter, ReducedWord};

/// Value of the component spelled by a raw word.
pub fn evaluate_raw(f: &TruncatedElement, word: &[Letter]) -> Result<Scalar> {
    if word.len() > f.degree() {
        return Err(Error::SizeCap(format!(
            "word of length {} above truncation degree {}",
            word.len(),
            f.degree()
        )));
    }
    let p = f.presentation();
    for l in word {
        p.check_letter(l)?;
    }
    let seq: Vec<Factor> = word.iter().map(|l| l.factor).collect();
    let tuple: Vec<usize> = word.iter().map(|l| l.element).collect();
    Ok(f.value(&seq, &tuple).clone())
}

/// Value of a coherent element on a group element, read off its shortest
/// raw spelling.
pub fn evaluation_on_group(f: &TruncatedElement, w: &ReducedWord) -> Result<Scalar> {
    let report = check_coherence(f);
    if !report.passed() {
        return Err(Error::NotCoherent(format!(
            "{:?}",
            report.families.iter().find(|r| !r.passed).map(|r| r.family)
        )));
    }
    evaluate_raw(f, &w.to_raw(f.presentation()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfIdentityWitness {
    pub sequence: Vec<u8>,
    pub tuple: Vec<usize>,
    pub value: String,
    pub counit: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfIdentityReport {
    pub max_half_length: usize,
    pub checked: usize,
    pub passed: bool,
    pub witness: Option<HopfIdentityWitness>,
}

/// Checks `f_{in..i1 i1..in}(gn^{-1}, .., g1^{-1}, g1, .., gn) = f_∅` for
/// every sequence with `2n <= N` and every tuple.
pub fn hopf_identity_check(f: &TruncatedElement) -> HopfIdentityReport {
    let p = f.presentation().clone();
    let layout = f.layout().clone();
    let half = f.degree() / 2;
    let eps = f.counit();
    let mut checked = 0;
    for seq in layout.sequences().filter(|s| s.len() <= half) {
        let pal: Vec<Factor> = seq.iter().rev().chain(seq.iter()).copied().collect();
        for t in layout.tuples(&seq) {
            let inv: Vec<usize> = seq.iter().zip(&t).rev().map(|(&i, &g)| p.factor(i).inv(g)).collect();
            let full: Vec<usize> = inv.into_iter().chain(t.iter().copied()).collect();
            let v = f.value(&pal, &full);
            checked += 1;
            if *v != eps {
                return HopfIdentityReport {
                    max_half_length: half,
                    checked,
                    passed: false,
                    witness: Some(HopfIdentityWitness {
                        sequence: seq.iter().map(|x| x.number()).collect(),
                        tuple: t,
                        value: v.to_string(),
                        counit: eps.to_string(),
                    }),
                };
            }
        }
    }
    HopfIdentityReport { max_half_length: half, checked, passed: true, witness: None }
}

/// All raw words of length `<= n`, grouped by sequence in layout order.
fn raw_words(f: &TruncatedElement, n: usize) -> Vec<Vec<Letter>> {
    let layout = f.layout();
    layout
        .sequences()
        .filter(|s| s.len() <= n)
        .flat_map(|s| layout.tuples(&s).map(move |t| letters_of(&s, &t)).collect::<Vec<_>>())
        .collect()
}

/// The block `Δ(f)_{(u, v)}`: rows are tuples of `u`, columns tuples of
/// `v`, entries `f(u·v)`.
pub fn coproduct_block(f: &TruncatedElement, u: &[Factor], v: &[Factor]) -> Result<Matrix> {
    if u.len() + v.len() > f.degree() {
        return Err(Error::SizeCap("bidegree above truncation degree".into()));
    }
    let layout = f.layout();
    let us: Vec<Vec<usize>> = layout.tuples(u).collect();
    let vs: Vec<Vec<usize>> = layout.tuples(v).collect();
    let seq: Vec<Factor> = u.iter().chain(v).copied().collect();
    Ok(Matrix::from_fn(f.field(), us.len(), vs.len(), |r, c| {
        let t: Vec<usize> = us[r].iter().chain(&vs[c]).copied().collect();
        f.value(&seq, &t).clone()
    }))
}

/// `(ε ⊗ id)Δ(f) = f = (id ⊗ ε)Δ(f)`: the blocks of bidegree `(0, n)` and
/// `(n, 0)` reproduce the components of `f`.
pub fn counit_law_check(f: &TruncatedElement) -> Result<bool> {
    for seq in f.layout().sequences() {
        let comp = f.component(&seq).values;
        let left = coproduct_block(f, &[], &seq)?;
        let right = coproduct_block(f, &seq, &[])?;
        if left.row(0) != comp.as_slice() || right.column(0) != comp {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluation matrix `M[u][v] = f(u·v)` over raw words `u` of length
/// `<= left` and `v` of length `<= right`.
pub fn evaluation_matrix(f: &TruncatedElement, left: usize, right: usize) -> Result<Matrix> {
    if left + right > f.degree() {
        return Err(Error::SizeCap("evaluation matrix above truncation degree".into()));
    }
    let us = raw_words(f, left);
    let vs = raw_words(f, right);
    let mut rows = Vec::with_capacity(us.len());
    for u in &us {
        let mut row = Vec::with_capacity(vs.len());
        for v in &vs {
            let w: Vec<Letter> = u.iter().chain(v).copied().collect();
            row.push(evaluate_raw(f, &w)?);
        }
        rows.push(row);
    }
    Matrix::from_rows_shaped(f.field(), us.len(), vs.len(), rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
}

/// Rank of the evaluation matrix with words split at `⌊N/2⌋`: a lower
/// bound for the dimension of the translate space of `f`.
pub fn representativity_rank(f: &TruncatedElement) -> Result<RankReport> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::SizeCap("representativity rank needs degree >= 2".into()));
    }
    let m = evaluation_matrix(f, n / 2, n - n / 2)?;
    Ok(RankReport { degree: n, rows: m.rows(), cols: m.cols(), rank: m.rank() })
}

/// `M = L · R` with `L` of full column rank and `R` of full row rank; the
/// columns of `L` and rows of `R` give `Δ(f) = Σ g_i ⊗ h_i` on the
/// sampled bidegrees.
pub fn rank_factorization(m: &Matrix) -> (Matrix, Matrix) {
    let ech = m.echelon();
    let r = ech.pivots.len();
    let left = m.submatrix(&(0..m.rows()).collect::<Vec<_>>(), &ech.pivots);
    let right = ech.reduced.submatrix(&(0..r).collect::<Vec<_>>(), &(0..m.cols()).collect::<Vec<_>>());
    (left, right)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::amalgam::{matrix_coefficient_element, Layout};
    use crate::exactalg::Field;
    use crate::rep::v_a;

    #[test]
    fn rank_factorization_reproduces() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (l, r) = rank_factorization(&m);
        assert_eq!(l.cols(), 2);
        assert_eq!(&l * &r, m);
    }

    #[test]
    fn v_a_coefficients_have_rank_at_most_two() {
        let r = v_a(&Scalar::from_i64(Field::Rational, 2)).unwrap();
        let l = Arc::new(Layout::new(r.presentation().clone(), 4).unwrap());
        let f = matrix_coefficient_element(&r, 0, 0, l).unwrap();
        assert!(representativity_rank(&f).unwrap().rank <= 2);
        assert!(counit_law_check(&f).unwrap());
    }
}
