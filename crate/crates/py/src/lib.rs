//! Python bindings. Reports cross the boundary as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use tannaka_core::amalgam::coherent_basis_with;
use tannaka_core::exactalg::Field;
use tannaka_core::groups::enumerate_reduced_words_with;
use tannaka_core::limits::Limits;
use tannaka_core::presets::{self, presentation, v_a_preset};
use tannaka_core::scenarios::{self, ScenarioConfig};
use tannaka_core::topo::pi1_presentation;

fn py_err(e: tannaka_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Dimension of the degree-`degree` coherent space of a preset amalgam.
#[pyfunction]
#[pyo3(signature = (preset, degree, field = "q"))]
fn coherent_dim(preset: &str, degree: usize, field: &str) -> PyResult<usize> {
    let f = Field::parse(field).map_err(py_err)?;
    let p = presentation(preset).map_err(py_err)?;
    Ok(coherent_basis_with(p, degree, f, &Limits::from_env()).map_err(py_err)?.dim())
}

/// Number of reduced words of length at most `degree`.
#[pyfunction]
fn reduced_word_count(preset: &str, degree: usize) -> PyResult<usize> {
    let p = presentation(preset).map_err(py_err)?;
    Ok(enumerate_reduced_words_with(&p, degree, &Limits::from_env()).map_err(py_err)?.len())
}

/// `dim Hom(V_a, V_b)` for all pairs of parameters.
#[pyfunction]
#[pyo3(signature = (params, field = "q"))]
fn hom_table(params: Vec<i64>, field: &str) -> PyResult<Vec<Vec<usize>>> {
    let f = Field::parse(field).map_err(py_err)?;
    let reps = params.iter().map(|&a| v_a_preset(a, f)).collect::<tannaka_core::Result<Vec<_>>>().map_err(py_err)?;
    reps.iter()
        .map(|a| reps.iter().map(|b| a.hom_space(b).map(|h| h.len())).collect::<tannaka_core::Result<Vec<_>>>())
        .collect::<tannaka_core::Result<_>>()
        .map_err(py_err)
}

/// Free rank of the edge-path group of a built-in poset, or `None` when
/// relators survive.
#[pyfunction]
fn pi1_free_rank(poset: &str, base: &str) -> PyResult<Option<usize>> {
    let p = presets::poset(poset).map_err(py_err)?;
    let b = p.index_of(base).map_err(py_err)?;
    Ok(pi1_presentation(&p, b).map_err(py_err)?.free_rank())
}

/// One acceptance scenario, by name or criterion number, as a JSON report.
#[pyfunction]
#[pyo3(signature = (name, seed = 2024))]
fn scenario(name: &str, seed: u64) -> PyResult<String> {
    let sc = scenarios::find(name).ok_or_else(|| PyValueError::new_err(format!("unknown scenario `{name}`")))?;
    let cfg = ScenarioConfig { seed, limits: Limits::from_env() };
    Ok(sc.execute(&cfg).to_json())
}

#[pyfunction]
fn scenario_names() -> Vec<&'static str> {
    scenarios::all().iter().map(|s| s.name).collect()
}

#[pymodule]
fn tannaka(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(coherent_dim, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_word_count, m)?)?;
    m.add_function(wrap_pyfunction!(hom_table, m)?)?;
    m.add_function(wrap_pyfunction!(pi1_free_rank, m)?)?;
    m.add_function(wrap_pyfunction!(scenario, m)?)?;
    m.add_function(wrap_pyfunction!(scenario_names, m)?)?;
    Ok(())
}
