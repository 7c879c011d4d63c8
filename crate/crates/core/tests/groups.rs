use std::sync::Arc;

use proptest::prelude::*;
use tannaka_core::groups::*;

fn c(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n))
}

fn c4_over_c2() -> AmalgamPresentation {
    let sq = GroupHom::new(c(2), c(4), vec![0, 2]).unwrap();
    AmalgamPresentation::new("C4*_C2 C4", sq.clone(), sq).unwrap()
}

/// Alternating sequences of non-identity elements, of length <= n, from
/// factors with `a` and `b` non-identity elements.
fn alternating_count(a: usize, b: usize, n: usize) -> usize {
    fn extend(a: usize, b: usize, left: usize, last: Option<bool>) -> usize {
        if left == 0 {
            return 0;
        }
        let mut total = 0;
        for (first, k) in [(true, a), (false, b)] {
            if last != Some(first) {
                total += k * (1 + extend(a, b, left - 1, Some(first)));
            }
        }
        total
    }
    1 + extend(a, b, n, None)
}

fn letters(o1: usize, o2: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        prop_oneof![(0..o1).prop_map(|g| Letter::new(Factor::One, g)), (0..o2).prop_map(|g| Letter::new(Factor::Two, g))],
        0..7,
    )
}

#[test]
fn group_tables_satisfy_axioms() {
    for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(6), FiniteGroup::symmetric(3), FiniteGroup::symmetric(4)] {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(a, g.identity()), a);
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        assert_eq!(g.subgroup_generated(&g.generators()).len(), n);
    }
    assert!(!FiniteGroup::symmetric(3).is_abelian());
    assert_eq!(FiniteGroup::symmetric(4).order(), 24);
}

#[test]
fn free_product_counts_match_brute_force() {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (4, 6)] {
        let p = AmalgamPresentation::free("free", c(m), c(n));
        for len in 0..=4 {
            let words = enumerate_reduced_words(&p, len).unwrap();
            assert_eq!(words.len(), alternating_count(m - 1, n - 1, len), "C{m}*C{n}, N = {len}");
            let closed: usize = (0..=len).map(|k| free_product_count_exact(m - 1, n - 1, k)).sum();
            assert_eq!(words.len(), closed);
        }
    }
}

#[test]
fn enumeration_agrees_with_rewriting() {
    for p in [c4_over_c2(), AmalgamPresentation::free("C2*C3", c(2), c(3))] {
        for n in 0..=3 {
            let mut a = enumerate_reduced_words(&p, n).unwrap();
            let mut b = enumerate_by_rewriting(&p, n).unwrap();
            a.sort_by_key(|w| w.to_string());
            b.sort_by_key(|w| w.to_string());
            assert_eq!(a, b, "{} N = {n}", p.name());
        }
    }
}

#[test]
fn amalgamated_relation_holds() {
    // The squares of the two generators are identified.
    let p = c4_over_c2();
    let x = normal_form(&p, &[Letter::new(Factor::One, 2)]).unwrap();
    let y = normal_form(&p, &[Letter::new(Factor::Two, 2)]).unwrap();
    assert_eq!(x, y);
    let one = normal_form(&p, &[Letter::new(Factor::One, 2), Letter::new(Factor::Two, 2)]).unwrap();
    assert!(one.is_empty());
}

#[test]
fn non_homomorphisms_are_rejected() {
    assert!(GroupHom::new(c(2), c(3), vec![0, 1]).is_err());
    assert!(GroupHom::new(c(3), c(6), vec![0, 2, 4]).is_ok());
}

proptest! {
    #[test]
    fn word_multiplication_is_a_group_law(
        a in letters(4, 4),
        b in letters(4, 4),
        w in letters(4, 4),
    ) {
        let p = c4_over_c2();
        let a = normal_form(&p, &a).unwrap();
        let b = normal_form(&p, &b).unwrap();
        let w = normal_form(&p, &w).unwrap();
        let ab_w = multiply_words(&p, &multiply_words(&p, &a, &b).unwrap(), &w).unwrap();
        let a_bw = multiply_words(&p, &a, &multiply_words(&p, &b, &w).unwrap()).unwrap();
        prop_assert_eq!(ab_w, a_bw);
        let inv = invert_word(&p, &a).unwrap();
        prop_assert!(multiply_words(&p, &a, &inv).unwrap().is_empty());
        prop_assert_eq!(multiply_words(&p, &ReducedWord::identity(&p), &a).unwrap(), a.clone());
    }

    #[test]
    fn normal_form_is_idempotent(
        w in letters(2, 3),
    ) {
        let p = AmalgamPresentation::free("C2*C3", c(2), c(3));
        let nf = normal_form(&p, &w).unwrap();
        prop_assert_eq!(normal_form(&p, &nf.to_raw(&p)).unwrap(), nf.clone());
        prop_assert!(nf.len() <= w.len());
    }
}
