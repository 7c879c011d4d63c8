//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

use std::time::Instant;

use serde_json::{json, Value};
use tannaka_core::report::Report;
use tannaka_core::scenarios::{self, ScenarioConfig};
use tannaka_core::topo::models::{pseudo_circle4, pseudo_circle6, wedge7};
use tannaka_core::topo::{pi1_presentation, FinitePoset};

fn value<'a>(r: &'a Report, name: &str) -> &'a Value {
    &r.values.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("{}: no value `{name}`", r.scenario)).value
}

/// Words `x1 x2 .. xk` over two involutions with `x_i != x_{i+1}`, counted
/// by brute force over all strings.
fn alternating_words(n: usize) -> usize {
    (0..=n).map(|k| (0..1usize << k).filter(|w| (1..k).all(|i| (w >> i & 1) != (w >> (i - 1) & 1))).count()).sum()
}

fn mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut m = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

fn pow(a: [[i64; 2]; 2], k: usize) -> [[i64; 2]; 2] {
    (0..k).fold([[1, 0], [0, 1]], |acc, _| mul(acc, a))
}

/// `1 - χ` of a connected poset of height one (a graph).
fn graph_rank(p: &FinitePoset) -> usize {
    p.relations().len() + 1 - p.len()
}

fn local_oracle(criterion: u8, r: &Report) -> Result<(), String> {
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    match criterion {
        1 => {
            let words: Vec<usize> = (1..=3).map(alternating_words).collect();
            check(*value(r, "coherent dimension, N = 1..3") == json!(words), "dimensions differ from brute-force word count")
        }
        2 => {
            let dims = value(r, "C2 *_C2 C2 coherent dimension, N = 1..").as_array().cloned().unwrap_or_default();
            check(!dims.is_empty() && dims.iter().all(|d| *d == json!(2)), "dimension is not |C2| = 2")
        }
        3 => {
            let ranks = value(r, "representativity ranks at N = 4").as_array().cloned().unwrap_or_default();
            check(ranks.len() == 8 && ranks.iter().all(|k| k.as_u64().is_some_and(|k| k <= 2)), "rank above dim V_a")
        }
        5 => {
            let id: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| usize::from(i == j)).collect()).collect();
            check(*value(r, "dim Hom(V_a, V_b), a, b in {2, 3, 5}") == json!(id), "Hom table is not the identity")
        }
        6 => {
            let a = [[0, -1], [1, 0]];
            let b = [[1, -1], [1, 0]];
            let m = mul(a, b);
            let text: Vec<Vec<String>> = m.iter().map(|row| row.iter().map(|x| format!("{x}/1")).collect()).collect();
            check(*value(r, "M = A B") == json!(text), "product differs from integer arithmetic")?;
            check(*value(r, "trace") == json!(format!("{}/1", m[0][0] + m[1][1])), "trace differs")?;
            check(m[0][0] + m[1][1] == -2, "integer trace is not -2")?;
            check((1..=12).all(|k| pow(m, k) != [[1, 0], [0, 1]]), "integer power table hits I")?;
            check(pow(a, 4) == [[1, 0], [0, 1]] && pow(b, 6) == [[1, 0], [0, 1]], "A^4 or B^6 is not I")
        }
        9 => {
            let p = wedge7();
            let b = p.index_of("b").map_err(|e| e.to_string())?;
            check(pi1_presentation(&p, b).map_err(|e| e.to_string())?.free_rank() == Some(graph_rank(&p)), "wedge rank")
        }
        10 => {
            let ranks = [graph_rank(&pseudo_circle4()), graph_rank(&pseudo_circle6())];
            check(*value(r, "free ranks") == json!(ranks), "free ranks differ from Euler characteristic")?;
            // The first six samples are rank one: End is the scalars.
            let ends = value(r, "End dimensions [circle4, circle6]").as_array().cloned().unwrap_or_default();
            check(ends.len() >= 10 && ends[..6].iter().all(|e| *e == json!([1, 1])), "rank-1 End is not 1")
        }
        _ => Ok(()),
    }
}

#[test]
fn acceptance_criteria() {
    let start = Instant::now();
    let suite = scenarios::run_all(&ScenarioConfig::default());
    let mut failures = Vec::new();
    for (sc, report) in scenarios::all().iter().zip(&suite.scenarios) {
        assert_eq!(sc.name, report.scenario);
        let oracle = local_oracle(sc.criterion, report);
        let ok = report.passed() && oracle.is_ok();
        println!("criterion {:>2} {:<28} {}", sc.criterion, sc.name, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures.push(format!("{}\n{}oracle: {:?}", sc.name, report.to_text(), oracle.err()));
        }
    }
    println!("suite finished in {:.1?}", start.elapsed());
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
