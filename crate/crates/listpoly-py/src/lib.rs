//! Python bindings over the listpoly crate: the law suites, the
//! adjunction checker, the polynomial bijection check, and term
//! evaluation. Each function returns `(report, passed)` or the printed
//! value; failures surface as ValueError.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use listpoly::cli::{self, EvalArgs, LawsArgs, PolyArgs};

fn err_to_py(e: listpoly::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Runs the arithmetic and list law suites; returns (report, all_pass).
#[pyfunction]
#[pyo3(signature = (nat_max=4, len_max=3, card_x=2, seed=0, samples=10))]
fn laws(
    nat_max: u64,
    len_max: u64,
    card_x: u64,
    seed: u64,
    samples: usize,
) -> PyResult<(String, bool)> {
    let outcome = cli::cmd_laws(&LawsArgs { nat_max, len_max, card_x, seed, samples })
        .map_err(err_to_py)?;
    Ok((outcome.report, outcome.code == 0))
}

/// Solves an instance (file text) and returns (report, all_pass).
#[pyfunction]
fn adjoint(instance_text: &str) -> PyResult<(String, bool)> {
    let outcome = cli::cmd_adjoint_text(instance_text).map_err(err_to_py)?;
    Ok((outcome.report, outcome.code == 0))
}

/// Evaluates the list polynomial at X; returns (report, bijection_ok).
#[pyfunction]
#[pyo3(signature = (card_x=2, max_len=3))]
fn poly(card_x: u64, max_len: u64) -> PyResult<(String, bool)> {
    let outcome = cli::cmd_poly(&PolyArgs { card_x, max_len }).map_err(err_to_py)?;
    Ok((outcome.report, outcome.code == 0))
}

/// Evaluates a term of the internal language and returns the printed
/// value. `x` names the elements of a finite object X ("a,b,c");
/// `binds` are "name=term" strings for the context variables.
#[pyfunction]
#[pyo3(signature = (term, ctx="", x=None, binds=vec![]))]
fn eval_term(term: &str, ctx: &str, x: Option<String>, binds: Vec<String>) -> PyResult<String> {
    let args = EvalArgs { term: term.to_string(), ctx: ctx.to_string(), x, binds };
    let outcome = cli::cmd_eval(&args).map_err(err_to_py)?;
    Ok(outcome.report.trim_end().to_string())
}

#[pymodule]
fn listpoly_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(laws, m)?)?;
    m.add_function(wrap_pyfunction!(adjoint, m)?)?;
    m.add_function(wrap_pyfunction!(poly, m)?)?;
    m.add_function(wrap_pyfunction!(eval_term, m)?)?;
    Ok(())
}
