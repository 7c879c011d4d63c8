use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tannaka_core::amalgam::{
    check_coherence, coherent_basis_with, counit_law_check, hopf_identity_check, matrix_coefficient_element,
    projected_coherent_basis, representativity_rank, ElementDocument, Layout, TruncatedElement,
};
use tannaka_core::exactalg::{matrix_to_strings, Field, Matrix, Scalar};
use tannaka_core::frobplus::{
    compare_choices, faithfulness_probe, fr_corpus, fr_plus, fr_plus_with, t_map, SymmetryChoice,
};
use tannaka_core::groups::io::{builtin_group, load_presentation};
use tannaka_core::groups::{enumerate_reduced_words_with, AmalgamPresentation};
use tannaka_core::limits::Limits;
use tannaka_core::presets::{self, presentation, sl2_preset, v_a_preset, OTHER_PRESETS, PRESENTATIONS};
use tannaka_core::rep::io::{load_rep, load_triple};
use tannaka_core::rep::{
    glue, round_trip_witness, sl2_infinite_order_certificate, v_a_triple, AmalgamRep, GluedTriple, Representation,
};
use tannaka_core::report::{Report, SuiteReport};
use tannaka_core::scenarios::{self, ScenarioConfig};
use tannaka_core::topo::io::load_local_system;
use tannaka_core::topo::models::{model_equivalence_check, pseudo_circle4, pseudo_circle6};
use tannaka_core::topo::{
    evaluate_relator, monodromy_with, pi1_presentation_with, random_gluing, svk_check, TreeChoice,
};
use tannaka_core::{Error, Result};

use crate::{AmalgamCmd, Choice, Common, CorpusSource, ElementSource, FrobCmd, RepsCmd, TopoCmd, Tree};

fn field(c: &Common) -> Result<Field> {
    Field::parse(&c.field)
}

fn rng(c: &Common) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(c.seed)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn amalgam_presentation(c: &Common, file: Option<&PathBuf>, default: &str, limits: &Limits) -> Result<Arc<AmalgamPresentation>> {
    match file {
        Some(path) => Ok(Arc::new(load_presentation(path, limits)?)),
        None => presentation(c.preset.as_deref().unwrap_or(default)),
    }
}

pub fn presets() -> String {
    let mut s = String::from("presentations:\n");
    for (name, what) in PRESENTATIONS {
        let _ = writeln!(s, "  {name:<14} {what}");
    }
    s.push_str("other presets:\n");
    for (name, what) in OTHER_PRESETS {
        let _ = writeln!(s, "  {name:<14} {what}");
    }
    s.push_str("scenarios:\n");
    for sc in scenarios::all() {
        let _ = writeln!(s, "  {:<28} {}", sc.name, sc.property);
    }
    s
}

pub fn amalgam(c: &Common, cmd: &AmalgamCmd) -> Result<Report> {
    let limits = Limits::from_env();
    match cmd {
        AmalgamCmd::CoherentDim { presentation } => {
            let p = amalgam_presentation(c, presentation.as_ref(), "c2-star-c2", &limits)?;
            let n = c.degree.unwrap_or(2);
            let f = field(c)?;
            let mut r = Report::new("amalgam coherent-dim");
            r.value("presentation", p.name(), "input");
            r.value("degree", n, "input");
            let raw = coherent_basis_with(p.clone(), n, f, &limits)?.dim();
            let projected = projected_coherent_basis(p.clone(), n, 1, f, &limits)?.dim();
            r.value("coherent dimension", raw, "computed: coherence classes at degree N");
            r.value("projected dimension", projected, "computed: projection from degree N+1");
            if p.is_injective() {
                let relaxed = Limits { max_word_degree: limits.max_word_degree.max(n), ..limits };
                let words = enumerate_reduced_words_with(&p, n, &relaxed)?.len();
                r.value("reduced-word count", words, "oracle: reduced-word enumeration");
                if p.amalgamated().order() == 1 {
                    r.check("coherent dimension equals word count", raw == words, "oracle: reduced-word enumeration");
                }
                r.check("projected dimension equals word count", projected == words, "oracle: reduced-word enumeration");
            }
            Ok(r)
        }
        AmalgamCmd::VerifyHopf(src) => {
            let mut r = Report::new("amalgam verify-hopf");
            let targets = elements(c, src, &limits)?;
            let (mut coherent, mut counit, mut xi, mut s2, mut instances) = (0, 0, 0, 0, 0);
            for (label, f, _) in &targets {
                let coh = check_coherence(f);
                if coh.passed() {
                    coherent += 1;
                } else {
                    r.witness(serde_json::json!({ "element": label, "coherence": coh }));
                }
                if counit_law_check(f)? {
                    counit += 1;
                } else {
                    r.witness(format!("{label}: counit law fails"));
                }
                let h = hopf_identity_check(f);
                instances += h.checked;
                if h.passed {
                    xi += 1;
                } else {
                    r.witness(serde_json::json!({ "element": label, "antipode_identity": h }));
                }
                if f.antipode().antipode() == *f {
                    s2 += 1;
                } else {
                    r.witness(format!("{label}: S^2 != id"));
                }
            }
            let n = targets.len();
            r.value("elements", targets.iter().map(|t| t.0.clone()).collect::<Vec<_>>(), "input");
            r.value("antipode identity instances", instances, "computed");
            r.check("coherent", coherent == n, "oracle: condition families re-checked");
            r.check("counit law", counit == n, "oracle: coproduct blocks against f");
            r.check("antipode identity", xi == n, "oracle: counit comparison");
            r.check("S^2 = id", s2 == n, "oracle: coordinatewise comparison");
            Ok(r)
        }
        AmalgamCmd::Rank(src) => {
            let mut r = Report::new("amalgam rank");
            let targets = elements(c, src, &limits)?;
            let mut bounded = true;
            let mut ranks = Vec::new();
            for (label, f, dim) in &targets {
                let k = representativity_rank(f)?;
                if let Some(d) = dim {
                    bounded &= k.rank <= *d;
                }
                ranks.push(serde_json::json!({ "element": label, "rows": k.rows, "cols": k.cols, "rank": k.rank }));
            }
            r.value("ranks", ranks, "computed: evaluation matrix rank");
            if let Some(d) = targets.first().and_then(|t| t.2) {
                r.check(format!("rank <= dim V = {d}"), bounded, "oracle: dim V bound");
            }
            Ok(r)
        }
    }
}

/// Elements to check: a document, or matrix coefficients of a
/// representation preset. The third entry is the representation dimension.
fn elements(c: &Common, src: &ElementSource, limits: &Limits) -> Result<Vec<(String, TruncatedElement, Option<usize>)>> {
    if let Some(path) = &src.element {
        let doc: ElementDocument =
            serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let p = amalgam_presentation(c, src.presentation.as_ref(), "c2-star-c2", limits)?;
        let layout = Arc::new(Layout::with_limits(p, doc.degree, limits)?);
        let f = TruncatedElement::from_document(layout, &doc)?;
        return Ok(vec![(path.display().to_string(), f, None)]);
    }
    let rho: AmalgamRep = match c.preset.as_deref().unwrap_or("v-a") {
        "v-a" => v_a_preset(src.param, field(c)?)?,
        "sl2" => sl2_preset(),
        other => return Err(Error::Parse(format!("`{other}` is not a representation preset (v-a, sl2)"))),
    };
    let layout = Arc::new(Layout::with_limits(rho.presentation().clone(), c.degree.unwrap_or(4), limits)?);
    let d = rho.dim();
    let entries: Vec<(usize, usize)> = match &src.entry {
        Some(e) => {
            let parts: Vec<usize> = e
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad entry `{e}`, expected i,j"))))
                .collect::<Result<_>>()?;
            match parts[..] {
                [i, j] => vec![(i, j)],
                _ => return Err(Error::Parse(format!("bad entry `{e}`, expected i,j"))),
            }
        }
        None => (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect(),
    };
    entries
        .into_iter()
        .map(|(i, j)| Ok((format!("({i},{j})"), matrix_coefficient_element(&rho, i, j, layout.clone())?, Some(d))))
        .collect()
}

pub fn reps(c: &Common, cmd: &RepsCmd) -> Result<Report> {
    let limits = Limits::from_env();
    match cmd {
        RepsCmd::Glue { triple, param } => {
            let t = match triple {
                Some(path) => load_triple(path, &limits)?,
                None => v_a_triple(&Scalar::from_i64(field(c)?, *param))?,
            };
            let g = glue(&t)?;
            let mut r = Report::new("reps glue");
            r.value("presentation", t.presentation().name(), "input");
            r.value("dimension", g.dim(), "computed");
            let gens: Vec<_> = g.generator_matrices().iter().map(matrix_to_strings).collect();
            r.value("generator matrices", gens, "computed");
            let (_, ok) = round_trip_witness(&t)?;
            r.check("split(glue(t)) isomorphic to t", ok, "oracle: (id, c) checked as a morphism");
            let n = c.degree.unwrap_or(3);
            let bad = g.check_word_invariance(n)?;
            if let Some(w) = &bad {
                r.witness(w.iter().map(|l| l.to_string()).collect::<Vec<_>>());
            }
            r.check(format!("word invariance up to length {n}"), bad.is_none(), "oracle: normal-form evaluation");
            Ok(r)
        }
        RepsCmd::Hom { a, b, params } => {
            let mut r = Report::new("reps hom");
            let (labels, triples): (Vec<String>, Vec<GluedTriple>) = match (a, b) {
                (Some(a), Some(b)) => (
                    vec![a.display().to_string(), b.display().to_string()],
                    vec![load_triple(a, &limits)?, load_triple(b, &limits)?],
                ),
                _ => {
                    let f = field(c)?;
                    let ts = params.iter().map(|&x| v_a_triple(&Scalar::from_i64(f, x))).collect::<Result<Vec<_>>>()?;
                    (params.iter().map(|x| format!("V_{x}")).collect(), ts)
                }
            };
            let glued = triples.iter().map(glue).collect::<Result<Vec<_>>>()?;
            let mut fibre = Vec::new();
            let mut amalgam = Vec::new();
            for (x, gx) in triples.iter().zip(&glued) {
                fibre.push(triples.iter().map(|y| x.hom_space(y).map(|h| h.len())).collect::<Result<Vec<_>>>()?);
                amalgam.push(glued.iter().map(|gy| gx.hom_space(gy).map(|h| h.len())).collect::<Result<Vec<_>>>()?);
            }
            r.value("representations", labels, "input");
            r.value("fibre-product Hom dimensions", &fibre, "computed: pairs (a, b) with a c = c' b");
            r.value("amalgam Hom dimensions", &amalgam, "oracle: intertwiners of the glued representations");
            r.check("dimensions agree", fibre == amalgam, "oracle: intertwiners of the glued representations");
            Ok(r)
        }
        RepsCmd::Sl2Cert => {
            let cert = sl2_infinite_order_certificate();
            let mut r = Report::new("reps sl2-cert");
            r.value("A", &cert.a, "input: image of the generator of C4");
            r.value("B", &cert.b, "input: image of the generator of C6");
            r.value("M = A B", &cert.m, "computed");
            r.value("trace(M)", &cert.trace, "computed");
            r.value("M^k, k = 1..12", &cert.powers, "computed: power table");
            r.check("trace is -2", cert.trace == Scalar::from_i64(Field::Rational, -2).to_string(), "oracle: trace of the product");
            r.check("M is not +-I", !cert.m_is_plus_minus_identity, "oracle: entrywise comparison");
            r.check("(M - tr/2)^2 = 0", cert.m_is_plus_minus_unipotent, "oracle: Cayley-Hamilton");
            r.check("M^k != I for k <= 12", cert.no_power_is_identity, "oracle: power table");
            r.check("A^4 = I", cert.a_fourth_power_is_identity, "oracle: power table");
            r.check("B^6 = I", cert.b_sixth_power_is_identity, "oracle: power table");
            r.check("M has infinite order", cert.infinite_order, "oracle: nontrivial unipotent part");
            Ok(r)
        }
    }
}

fn corpus(c: &Common, src: &CorpusSource, limits: &Limits) -> Result<Vec<(String, Representation)>> {
    if let Some(path) = &src.rep {
        return Ok(vec![(path.display().to_string(), load_rep(path, limits)?)]);
    }
    let g = builtin_group(&src.group, limits)?
        .ok_or_else(|| Error::Parse(format!("unknown group `{}` (trivial, C<n>, S<k>)", src.group)))?;
    let f = field(c)?;
    if f.characteristic() == 0 {
        return Err(Error::CharacteristicZero("Fr+ needs a finite field; pass --field p or p^m".into()));
    }
    Ok(fr_corpus(&Arc::new(g), f, src.max_dim, c.seed)
        .into_iter()
        .enumerate()
        .map(|(k, v)| (format!("{}#{k}", src.group), v))
        .collect())
}

pub fn frobplus(c: &Common, cmd: &FrobCmd) -> Result<Report> {
    let limits = Limits::from_env();
    match cmd {
        FrobCmd::Check { source, choice } => {
            let choice = match choice {
                Choice::Cyclic => SymmetryChoice::Cyclic,
                Choice::Symmetric => SymmetryChoice::Symmetric,
            };
            let mut r = Report::new("frobplus check");
            let reps = corpus(c, source, &limits)?;
            let (mut dims, mut dims_ok, mut t_ok) = (Vec::new(), 0, 0);
            for (k, (label, v)) in reps.iter().enumerate() {
                let res = fr_plus_with(v, choice, &limits)?;
                dims.push([v.dim(), res.dim()]);
                dims_ok += usize::from(res.dim() == v.dim());
                let t = t_map(&res, 8, c.seed.wrapping_add(k as u64))?;
                if t.passed() {
                    t_ok += 1;
                } else {
                    r.witness(serde_json::json!({ "rep": label, "t": t }));
                }
            }
            r.value("choice", choice, "input");
            r.value("[dim V, dim Fr+ V]", &dims, "computed");
            r.check("dim Fr+ V = dim V", dims_ok == reps.len(), "oracle: dim V");
            r.check("t(V) bijective and p-semilinear", t_ok == reps.len(), "oracle: rank and twisted-linearity checks");
            Ok(r)
        }
        FrobCmd::Faithful { source, other } => {
            let mut r = Report::new("frobplus faithful");
            let mut reps = corpus(c, source, &limits)?;
            if let Some(path) = other {
                reps.push((path.display().to_string(), load_rep(path, &limits)?));
            }
            let results = reps.iter().map(|(_, v)| fr_plus(v, &limits)).collect::<Result<Vec<_>>>()?;
            let (mut pairs, mut ok) = (0, 0);
            for (i, a) in results.iter().enumerate() {
                for (j, b) in results.iter().enumerate() {
                    pairs += 1;
                    let probe = faithfulness_probe(a, b)?;
                    if probe.fully_faithful() {
                        ok += 1;
                    } else {
                        r.witness(serde_json::json!({ "pair": [&reps[i].0, &reps[j].0], "probe": probe }));
                    }
                }
            }
            let mut same = 0;
            for (label, v) in &reps {
                let cmp = compare_choices(v, &limits)?;
                if cmp.identical() {
                    same += 1;
                } else {
                    r.witness(serde_json::json!({ "rep": label, "choices": cmp }));
                }
            }
            r.value("representations", reps.len(), "computed");
            r.value("pairs", pairs, "computed");
            r.check("Fr+ bijective on Hom", ok == pairs, "oracle: Hom dimensions solved independently");
            r.check("cyclic and symmetric images identical", same == reps.len(), "oracle: comparison through H0 surjection");
            Ok(r)
        }
    }
}

pub fn topo(c: &Common, cmd: &TopoCmd) -> Result<Report> {
    match cmd {
        TopoCmd::Monodromy { system, base, tree } => {
            let mut r = Report::new("topo monodromy");
            let (poset, local) = match system {
                Some(path) => {
                    let l = load_local_system(path)?;
                    (l.poset().clone(), Some(l))
                }
                None => (Arc::new(presets::poset(c.preset.as_deref().unwrap_or("circle4"))?), None),
            };
            let b = match base {
                Some(name) => poset.index_of(name)?,
                None => 0,
            };
            let tree = match tree {
                Tree::Bfs => TreeChoice::Bfs,
                Tree::Dfs => TreeChoice::Dfs,
            };
            let pres = pi1_presentation_with(&poset, b, tree)?;
            let name = |x: usize| poset.name(x).to_string();
            r.value("points", poset.names(), "input");
            r.value("base", name(b), "input");
            r.value("tree edges", pres.tree_edges.iter().map(|&(x, y)| format!("{}<{}", name(x), name(y))).collect::<Vec<_>>(), "computed");
            r.value("generators", pres.generators.iter().map(|g| format!("{}<{}", name(g.edge.0), name(g.edge.1))).collect::<Vec<_>>(), "computed");
            r.value("relators", pres.relators.len(), "computed");
            r.value("abelian rank", pres.abelian_rank(), "computed");
            r.value("free rank", pres.free_rank(), "computed: Tietze elimination");
            if let Some(l) = local {
                let m = monodromy_with(&l, pres.clone())?;
                r.value("monodromy", m.generators.iter().map(matrix_to_strings).collect::<Vec<_>>(), "computed");
                let all = pres
                    .relators
                    .iter()
                    .map(|w| evaluate_relator(&m.generators, w).map(|x| x.is_identity()))
                    .collect::<Result<Vec<_>>>()?;
                r.check("relators act trivially", all.iter().all(|&b| b), "oracle: relator evaluation");
            }
            Ok(r)
        }
        TopoCmd::Svk { samples, max_rank } => {
            let cover = presets::cover(c.preset.as_deref().unwrap_or("wedge7"))?;
            let f = field(c)?;
            let mut g = rng(c);
            let data = (0..*samples)
                .map(|k| random_gluing(&cover, f, 1 + k % (*max_rank).max(1), &mut g))
                .collect::<Result<Vec<_>>>()?;
            let base = cover.intersection()[0];
            let rep = svk_check(&cover, &data, base)?;
            let mut r = Report::new("topo svk");
            let names = |s: &[usize]| s.iter().map(|&x| cover.poset().name(x).to_string()).collect::<Vec<_>>();
            r.value("U1", names(cover.u1()), "input");
            r.value("U2", names(cover.u2()), "input");
            r.value("base", cover.poset().name(base), "input");
            r.value("samples", rep.samples, "computed");
            r.value("Hom dims [i, j, on X, fibre product]", &rep.hom_dims, "computed");
            if let Some(w) = &rep.witness {
                r.witness(w);
            }
            r.check("glue/split round trips", rep.round_trips == rep.samples, "oracle: explicit isomorphism");
            r.check("Hom-dimension equality", rep.hom_equalities == rep.pairs, "oracle: fibre-product Hom solved independently");
            r.check("U1 and U2 loops generate", rep.generated == rep.samples, "oracle: generated matrix algebra");
            Ok(r)
        }
        TopoCmd::Models { samples } => {
            let f = field(c)?;
            let mut g = rng(c);
            let gens: Vec<Vec<Matrix>> = (0..*samples)
                .map(|k| {
                    if k % 2 == 0 {
                        let mut x = Scalar::random(f, &mut g);
                        while x.is_zero() {
                            x = Scalar::random(f, &mut g);
                        }
                        vec![Matrix::scalar_matrix(&x, 1)]
                    } else {
                        vec![Matrix::random_invertible(f, 2, &mut g)]
                    }
                })
                .collect();
            let mut gauge = |n: usize, _m: usize| Matrix::random_invertible(f, n, &mut g);
            let rep = model_equivalence_check(&Arc::new(pseudo_circle4()), &Arc::new(pseudo_circle6()), f, &gens, &mut gauge)?;
            let mut r = Report::new("topo models");
            r.value("free ranks", rep.free_ranks, "computed: Tietze elimination");
            r.value("End dimensions [circle4, circle6]", &rep.end_dims, "computed");
            r.value("isomorphic pairs [circle4, circle6]", rep.isomorphic_pairs, "computed");
            if let Some(w) = &rep.witness {
                r.witness(w);
            }
            r.check("monodromy recovered on both models", rep.classified == rep.samples, "oracle: conjugacy to the input");
            r.check("End dimensions agree", rep.end_dims.iter().all(|d| d[0] == d[1]), "oracle: circle6 computation");
            r.check("classifications agree", rep.classification_agrees == rep.hom_pairs, "oracle: circle6 computation");
            r.check("Hom dimensions agree", rep.hom_pairs_equal == rep.hom_pairs, "oracle: circle6 computation");
            Ok(r)
        }
    }
}

pub fn suite(c: &Common, scenario: Option<&str>) -> std::result::Result<SuiteReport, String> {
    let cfg = ScenarioConfig { seed: c.seed, limits: Limits::from_env() };
    match scenario {
        Some(name) => {
            let sc = scenarios::find(name).ok_or_else(|| format!("unknown scenario `{name}`"))?;
            Ok(SuiteReport::new(vec![sc.execute(&cfg)]))
        }
        None => Ok(scenarios::run_all(&cfg)),
    }
}
