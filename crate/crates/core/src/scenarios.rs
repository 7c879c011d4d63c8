//! The acceptance scenarios, one per criterion, each producing a
//! [`Report`] whose checks compare computed values against an independent
//! oracle.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::amalgam::{
    check_coherence, coherent_basis_with, hopf_identity_check, matrix_coefficient_element, quotient_embedding_check,
    representativity_rank, Layout,
};
use crate::error::Result;
use crate::exactalg::{Field, Matrix, Scalar};
use crate::frobplus::{
    compare_choices, exactness_probe, faithfulness_probe, fr_corpus, fr_plus, fr_plus_linear, t_map, FrPlusResult,
    ShortExactSequence, SymmetryChoice,
};
use crate::groups::{enumerate_reduced_words_with, free_product_count_exact, FiniteGroup};
use crate::limits::Limits;
use crate::presets::{presentation, v_a_preset};
use crate::report::{Report, SuiteReport};
use crate::rep::{glue, round_trip_witness, sl2_infinite_order_certificate, GluedTriple};
use crate::topo::models::{model_equivalence_check, pseudo_circle4, pseudo_circle6, wedge_cover};
use crate::topo::{random_gluing, svk_check};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScenarioConfig {
    pub seed: u64,
    pub limits: Limits,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig { seed: 2024, limits: Limits::default() }
    }
}

/// A named acceptance scenario: the operation it drives and the property
/// it checks.
#[derive(Clone, Copy, Debug)]
pub struct Scenario {
    pub name: &'static str,
    pub criterion: u8,
    pub operation: &'static str,
    pub property: &'static str,
    pub run: fn(&ScenarioConfig) -> Result<Report>,
}

impl Scenario {
    /// Runs the scenario; an error becomes a failing report.
    pub fn execute(&self, cfg: &ScenarioConfig) -> Report {
        match (self.run)(cfg) {
            Ok(r) => r,
            Err(e) => {
                let mut r = Report::new(self.name);
                r.fail(format!("error: {e}"));
                r
            }
        }
    }
}

pub fn all() -> Vec<Scenario> {
    vec![
        Scenario {
            name: "c01-coherent-dimensions",
            criterion: 1,
            operation: "amalgam coherent-dim",
            property: "coherent dimension of C2*C2 equals the reduced-word count for N = 1, 2, 3",
            run: coherent_dimensions,
        },
        Scenario {
            name: "c02-amalgamation-collapse",
            criterion: 2,
            operation: "amalgam coherent-dim",
            property: "C2 *_C2 C2 has coherent dimension 2; C4 *_C2 C4 embeds in C4 * C4 at N = 2",
            run: amalgamation_collapse,
        },
        Scenario {
            name: "c03-hopf-structure",
            criterion: 3,
            operation: "amalgam verify-hopf",
            property: "V_a coefficients are coherent, satisfy the antipode identity, S^2 = id, rank <= 2",
            run: hopf_structure,
        },
        Scenario {
            name: "c04-fibre-product",
            criterion: 4,
            operation: "reps glue",
            property: "glue/split round trip and Hom-dimension equality over Q and F5",
            run: fibre_product,
        },
        Scenario {
            name: "c05-v-a-family",
            criterion: 5,
            operation: "reps hom",
            property: "End(V_a) = 1 and Hom(V_a, V_b) = 0 for distinct a, b in {2, 3, 5}",
            run: v_a_family,
        },
        Scenario {
            name: "c06-sl2-certificate",
            criterion: 6,
            operation: "reps sl2-cert",
            property: "trace -2, not +-I, no power <= 12 is I, A^4 = B^6 = I",
            run: sl2_certificate,
        },
        Scenario {
            name: "c07-frobenius-functor",
            criterion: 7,
            operation: "frobplus check",
            property: "dim Fr+ V = dim V, t bijective, lambda^p-semilinearity, exactness",
            run: frobenius_functor,
        },
        Scenario {
            name: "c08-perfectness",
            criterion: 8,
            operation: "frobplus faithful",
            property: "Fr+ bijective on Hom for C3 and S3 corpora; cyclic and symmetric images agree",
            run: perfectness,
        },
        Scenario {
            name: "c09-seifert-van-kampen",
            criterion: 9,
            operation: "topo svk",
            property: "svk_check on the wedge cover for rank-1 and rank-2 systems over Q and F7",
            run: seifert_van_kampen,
        },
        Scenario {
            name: "c10-circle-models",
            criterion: 10,
            operation: "topo models",
            property: "4- and 6-point circles give the same classification and End dimensions",
            run: circle_models,
        },
    ]
}

pub fn find(name: &str) -> Option<Scenario> {
    all().into_iter().find(|s| s.name == name || s.criterion.to_string() == name)
}

/// Runs every scenario on its own thread; reports come back sorted by name.
pub fn run_all(cfg: &ScenarioConfig) -> SuiteReport {
    let scenarios = all();
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = scenarios.iter().map(|sc| s.spawn(move || sc.execute(cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("scenario thread")).collect()
    });
    SuiteReport::new(reports)
}

fn rng(cfg: &ScenarioConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn finite(p: u32, m: u8) -> Field {
    Field::finite(p, m).expect("supported field")
}

fn coherent_dimensions(cfg: &ScenarioConfig) -> Result<Report> {
    let p = presentation("c2-star-c2")?;
    let mut r = Report::new("c01-coherent-dimensions");
    let mut dims = Vec::new();
    let mut words = Vec::new();
    let mut closed = Vec::new();
    for n in 1..=3 {
        dims.push(coherent_basis_with(p.clone(), n, Field::Rational, &cfg.limits)?.dim());
        words.push(enumerate_reduced_words_with(&p, n, &cfg.limits)?.len());
        closed.push((0..=n).map(|m| free_product_count_exact(1, 1, m)).sum::<usize>());
    }
    r.value("coherent dimension, N = 1..3", &dims, "computed: coherent_basis over Q");
    r.value("reduced words of length <= N", &words, "oracle: reduced-word enumeration");
    r.value("closed-form element count", &closed, "oracle: free-product length formula");
    r.check("dimension equals word count", dims == words, "oracle: reduced-word enumeration");
    r.check("word count equals closed form", words == closed, "oracle: free-product length formula");
    Ok(r)
}

fn amalgamation_collapse(cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c02-amalgamation-collapse");
    let p = presentation("c2-amalg-c2")?;
    let order = p.factor(crate::groups::Factor::One).order();
    let dims: Vec<usize> = (1..=cfg.limits.max_degree.min(4))
        .map(|n| coherent_basis_with(p.clone(), n, Field::Rational, &cfg.limits).map(|b| b.dim()))
        .collect::<Result<_>>()?;
    r.value("C2 *_C2 C2 coherent dimension, N = 1..", &dims, "computed: coherent_basis over Q");
    r.value("|G|", order, "oracle: G *_G G = G");
    r.check("dimension equals |G| at every N", dims.iter().all(|&d| d == order), "oracle: G *_G G = G");
    let q = quotient_embedding_check(presentation("c4-amalg-c4")?, 2, &cfg.limits)?;
    r.value("C4 *_C2 C4 coherent dimension at N = 2", q.amalgamated_dimension, "computed");
    r.value("C4 * C4 coherent dimension at N = 2", q.free_dimension, "computed");
    if let Some(w) = q.witness {
        r.witness(format!("amalgamated basis vector {w} violates a free-product condition"));
    }
    r.check("quotient embedding", q.inclusion_holds, "oracle: free-product conditions re-checked");
    Ok(r)
}

fn hopf_structure(cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c03-hopf-structure");
    let n = 4;
    let p = presentation("c2-star-c2")?;
    let layout = Arc::new(Layout::with_limits(p, n, &cfg.limits)?);
    let (mut coherent, mut xi, mut s2, mut ranks) = (true, true, true, Vec::new());
    for a in [2, 3] {
        let rho = v_a_preset(a, Field::Rational)?;
        for i in 0..2 {
            for j in 0..2 {
                let f = matrix_coefficient_element(&rho, i, j, layout.clone())?;
                let c = check_coherence(&f);
                if !c.passed() {
                    coherent = false;
                    r.witness(serde_json::json!({ "a": a, "i": i, "j": j, "coherence": c }));
                }
                let h = hopf_identity_check(&f);
                if !h.passed {
                    xi = false;
                    r.witness(serde_json::json!({ "a": a, "i": i, "j": j, "antipode_identity": h }));
                }
                if f.antipode().antipode() != f {
                    s2 = false;
                    r.witness(format!("S^2 != id on coefficient ({i}, {j}) of V_{a}"));
                }
                ranks.push(representativity_rank(&f)?.rank);
            }
        }
    }
    r.value("representativity ranks at N = 4", &ranks, "computed: evaluation matrix rank");
    r.check("coefficients coherent", coherent, "oracle: condition families re-checked");
    r.check("antipode identity for 2n <= 4", xi, "oracle: counit comparison");
    r.check("S^2 = id", s2, "oracle: coordinatewise comparison");
    r.check("rank <= dim V_a = 2", ranks.iter().all(|&k| k <= 2), "oracle: dim V_a bound");
    Ok(r)
}

fn fibre_product(cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c04-fibre-product");
    let per_presentation = 5;
    let mut total = 0;
    let (mut round_trips, mut pairs, mut equal) = (0, 0, 0);
    for (salt, field) in [(1, Field::Rational), (2, finite(5, 1))] {
        let mut g = rng(cfg, salt);
        for name in ["c4-amalg-c4", "c2-star-c3"] {
            let p = presentation(name)?;
            let triples: Vec<GluedTriple> = (0..per_presentation)
                .filter_map(|_| GluedTriple::random(p.clone(), field, 3, 64, &mut g))
                .collect();
            total += triples.len();
            let glued = triples.iter().map(glue).collect::<Result<Vec<_>>>()?;
            for t in &triples {
                let (_, ok) = round_trip_witness(t)?;
                round_trips += usize::from(ok);
            }
            for (x, gx) in triples.iter().zip(&glued) {
                for (y, gy) in triples.iter().zip(&glued) {
                    pairs += 1;
                    let a = x.hom_space(y)?.len();
                    let b = gx.hom_space(gy)?.len();
                    if a == b {
                        equal += 1;
                    } else {
                        r.witness(format!("{name} over {field}: fibre-product Hom {a}, amalgam Hom {b}"));
                    }
                }
            }
        }
    }
    r.value("sampled triples", total, "computed");
    r.check("at least 10 triples per field", total >= 20, "oracle: corpus size");
    r.check("every round trip witnessed", round_trips == total, "oracle: (id, c) isomorphism checked");
    r.value("Hom pairs compared", pairs, "computed");
    r.check("Hom dimensions equal", equal == pairs, "oracle: fibre-product Hom solved independently");
    Ok(r)
}

fn v_a_family(_cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c05-v-a-family");
    let params = [2, 3, 5];
    let reps = params.iter().map(|&a| v_a_preset(a, Field::Rational)).collect::<Result<Vec<_>>>()?;
    let mut table = Vec::new();
    for x in &reps {
        table.push(reps.iter().map(|y| x.hom_space(y).map(|h| h.len())).collect::<Result<Vec<_>>>()?);
    }
    r.value("dim Hom(V_a, V_b), a, b in {2, 3, 5}", &table, "computed");
    let expected: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| usize::from(i == j)).collect()).collect();
    r.check("identity matrix of dimensions", table == expected, "oracle: Schur's lemma for distinct irreducibles");
    Ok(r)
}

fn sl2_certificate(_cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c06-sl2-certificate");
    let c = sl2_infinite_order_certificate();
    r.value("M = A B", &c.m, "computed");
    r.value("trace", &c.trace, "computed");
    r.check("trace is -2", c.trace == Scalar::from_i64(Field::Rational, -2).to_string(), "oracle: hand-computed trace");
    r.check("M is not +-I", !c.m_is_plus_minus_identity, "oracle: entrywise comparison");
    r.check("M^k != I for k <= 12", c.no_power_is_identity, "oracle: power table");
    r.check("A^4 = I", c.a_fourth_power_is_identity, "oracle: power table");
    r.check("B^6 = I", c.b_sixth_power_is_identity, "oracle: power table");
    Ok(r)
}

fn frobenius_functor(cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c07-frobenius-functor");
    let limits = &cfg.limits;
    let groups = [
        Arc::new(FiniteGroup::trivial()),
        Arc::new(FiniteGroup::cyclic(3)),
        Arc::new(FiniteGroup::symmetric(3)),
    ];
    let (mut count, mut dims_ok, mut t_ok) = (0, 0, 0);
    for (fi, field) in [finite(2, 1), finite(2, 2), finite(3, 1)].into_iter().enumerate() {
        for (gi, g) in groups.iter().enumerate() {
            for (k, v) in fr_corpus(g, field, 3, cfg.seed).iter().enumerate() {
                count += 1;
                let res = fr_plus(v, limits)?;
                if res.dim() == v.dim() {
                    dims_ok += 1;
                } else {
                    r.witness(format!("{} over {field}, rep {k}: dim Fr+ = {}, dim V = {}", g.name(), res.dim(), v.dim()));
                }
                let t = t_map(&res, 8, cfg.seed + (100 * fi + 10 * gi + k) as u64)?;
                if t.passed() {
                    t_ok += 1;
                } else {
                    r.witness(serde_json::json!({ "group": g.name(), "field": field.to_string(), "rep": k, "t": t }));
                }
            }
        }
    }
    r.value("representations checked", count, "computed");
    r.check("dim Fr+ V = dim V", dims_ok == count, "oracle: dim V");
    r.check("t(V) bijective and semilinear", t_ok == count, "oracle: rank and twisted-linearity checks");

    let mut semi = 0;
    let mut semi_total = 0;
    let mut g = rng(cfg, 7);
    for field in [finite(2, 2), finite(3, 2)] {
        for grp in [Arc::new(FiniteGroup::cyclic(3)), Arc::new(FiniteGroup::symmetric(3))] {
            let corpus: Vec<FrPlusResult> =
                fr_corpus(&grp, field, 2, cfg.seed).iter().step_by(2).map(|v| fr_plus(v, limits)).collect::<Result<_>>()?;
            for a in &corpus {
                for b in &corpus {
                    let phi = Matrix::random(field, b.base.dim(), a.base.dim(), &mut g);
                    let lambda = Scalar::random(field, &mut g);
                    let lhs = fr_plus_linear(a, b, &phi.scale(&lambda))?;
                    let rhs = fr_plus_linear(a, b, &phi)?.scale(&lambda.frobenius()?);
                    semi_total += 1;
                    if lhs == rhs {
                        semi += 1;
                    } else {
                        r.witness(format!("Fr+(lambda phi) != lambda^p Fr+(phi) over {field}, lambda = {lambda}"));
                    }
                }
            }
        }
    }
    r.value("semilinearity checks over F4 and F9", semi_total, "computed");
    r.check("Fr+(lambda phi) = lambda^p Fr+(phi)", semi == semi_total, "oracle: entrywise Frobenius of lambda");

    let seq = ShortExactSequence::constants_in_permutation(3, finite(2, 1))?;
    for choice in [SymmetryChoice::Cyclic, SymmetryChoice::Symmetric] {
        let e = exactness_probe(&seq, choice, limits)?;
        r.value(format!("Fr+ dims of 1 -> k^3 -> k^3/1 ({choice:?})"), e.fr_dims, "computed");
        r.check(format!("exactness on the S3 permutation filtration ({choice:?})"), e.passed(), "oracle: kernel = image rank test");
    }
    Ok(r)
}

fn perfectness(cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c08-perfectness");
    let (mut pairs, mut faithful, mut reps, mut identical) = (0, 0, 0, 0);
    for field in [finite(2, 1), finite(2, 2)] {
        for g in [Arc::new(FiniteGroup::cyclic(3)), Arc::new(FiniteGroup::symmetric(3))] {
            let corpus = fr_corpus(&g, field, 3, cfg.seed);
            let results = corpus.iter().map(|v| fr_plus(v, &cfg.limits)).collect::<Result<Vec<_>>>()?;
            for (i, a) in results.iter().enumerate() {
                for (j, b) in results.iter().enumerate() {
                    pairs += 1;
                    let probe = faithfulness_probe(a, b)?;
                    if probe.fully_faithful() {
                        faithful += 1;
                    } else {
                        r.witness(serde_json::json!({ "group": g.name(), "field": field.to_string(), "pair": [i, j], "probe": probe }));
                    }
                }
            }
            for (k, v) in corpus.iter().enumerate() {
                reps += 1;
                let c = compare_choices(v, &cfg.limits)?;
                if c.identical() {
                    identical += 1;
                } else {
                    r.witness(serde_json::json!({ "group": g.name(), "field": field.to_string(), "rep": k, "choices": c }));
                }
            }
        }
    }
    r.value("pairs probed", pairs, "computed");
    r.check("Fr+ bijective on every Hom space", faithful == pairs, "oracle: Hom dimensions solved independently");
    r.value("representations compared", reps, "computed");
    r.check("cyclic and symmetric images identical", identical == reps, "oracle: comparison through H0 surjection");
    Ok(r)
}

fn seifert_van_kampen(cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c09-seifert-van-kampen");
    let cover = wedge_cover();
    let base = cover.poset().index_of("b")?;
    let mut total = 0;
    for (salt, field) in [(3, Field::Rational), (4, finite(7, 1))] {
        let mut g = rng(cfg, salt);
        let samples = (0..12).map(|k| random_gluing(&cover, field, 1 + k % 2, &mut g)).collect::<Result<Vec<_>>>()?;
        let rep = svk_check(&cover, &samples, base)?;
        total += rep.samples;
        r.value(format!("Hom dims over {field} [i, j, on X, fibre product]"), &rep.hom_dims, "computed");
        if let Some(w) = &rep.witness {
            r.witness(w);
        }
        r.check(format!("glue/split round trips over {field}"), rep.round_trips == rep.samples, "oracle: explicit isomorphism");
        r.check(format!("Hom-dimension equality over {field}"), rep.hom_equalities == rep.pairs, "oracle: fibre-product Hom solved independently");
        r.check(format!("loops of U1, U2 generate over {field}"), rep.generated == rep.samples, "oracle: generated matrix algebra");
        r.check(format!("svk_check over {field}"), rep.passed(), "oracle: all of the above");
    }
    r.check("at least 20 samples", total >= 20, "oracle: corpus size");
    Ok(r)
}

fn circle_models(cfg: &ScenarioConfig) -> Result<Report> {
    let mut r = Report::new("c10-circle-models");
    let q = Field::Rational;
    let mut g = rng(cfg, 5);
    let mut samples: Vec<Vec<Matrix>> = [1, -1, 2, 2, 3, -1]
        .iter()
        .map(|&x| vec![Matrix::from_i64(q, &[&[x]])])
        .collect();
    samples.push(vec![Matrix::from_i64(q, &[&[0, 1], &[1, 0]])]);
    samples.push(vec![Matrix::from_i64(q, &[&[1, 1], &[0, 1]])]);
    samples.push(vec![Matrix::from_i64(q, &[&[1, 0], &[0, -1]])]);
    for _ in 0..3 {
        samples.push(vec![Matrix::random_invertible(q, 2, &mut g)]);
    }
    let p4 = Arc::new(pseudo_circle4());
    let p6 = Arc::new(pseudo_circle6());
    let mut gauge_rng = rng(cfg, 6);
    let mut gauge = |n: usize, _model: usize| Matrix::random_invertible(q, n, &mut gauge_rng);
    let rep = model_equivalence_check(&p4, &p6, q, &samples, &mut gauge)?;
    r.value("free ranks", rep.free_ranks, "oracle: Euler characteristic of the order complex");
    r.value("End dimensions [circle4, circle6]", &rep.end_dims, "computed");
    r.value("isomorphic pairs [circle4, circle6]", rep.isomorphic_pairs, "computed");
    if let Some(w) = &rep.witness {
        r.witness(w);
    }
    r.check("at least 10 monodromies", rep.samples >= 10, "oracle: corpus size");
    r.check("monodromy recovered on both models", rep.classified == rep.samples, "oracle: conjugacy to the input");
    r.check("End dimensions agree", rep.end_dims.iter().all(|d| d[0] == d[1]), "oracle: circle6 computation");
    r.check("classifications agree", rep.classification_agrees == rep.hom_pairs, "oracle: circle6 computation");
    r.check("Hom dimensions agree", rep.hom_pairs_equal == rep.hom_pairs, "oracle: circle6 computation");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_sorted_by_criterion() {
        let s = all();
        for w in s.windows(2) {
            assert!(w[0].name < w[1].name);
            assert_eq!(w[0].criterion + 1, w[1].criterion);
        }
        assert_eq!(find("3").unwrap().name, "c03-hopf-structure");
    }
}
