//! Python bindings. Index sets travel as sorted lists of ints, cells as
//! `(row, col)` tuples, tableaux as lists of `(top, bot)` pairs, notched
//! tableau pairs as `(P, Q)` row lists, and verification reports as JSON
//! strings.

use std::collections::HashMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use brsk::{AdmissiblePair, Cell, DominationMode, Error, IndexSet, Monomial, StandardTableau};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Inconsistency(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn index_set(entries: Vec<u32>) -> PyResult<IndexSet> {
    let d = entries.len() as u32;
    IndexSet::new(entries, 2 * d).map_err(to_py_err)
}

fn index_set_in(entries: Vec<u32>, ambient: u32) -> PyResult<IndexSet> {
    IndexSet::new(entries, ambient).map_err(to_py_err)
}

fn monomial(v: &IndexSet, cells: Vec<(u32, u32)>) -> PyResult<Monomial> {
    Monomial::new(v.clone(), cells.into_iter().map(|(r, c)| Cell::new(r, c)))
        .map_err(to_py_err)
}

fn cells_out(m: &Monomial) -> Vec<(u32, u32)> {
    m.expanded().iter().map(|c| (c.row, c.col)).collect()
}

fn tableau(v: &IndexSet, pairs: Vec<(Vec<u32>, Vec<u32>)>) -> PyResult<StandardTableau> {
    let pairs = pairs
        .into_iter()
        .map(|(top, bot)| {
            AdmissiblePair::new(
                index_set_in(top, v.ambient())?,
                index_set_in(bot, v.ambient())?,
            )
            .map_err(to_py_err)
        })
        .collect::<PyResult<Vec<_>>>()?;
    StandardTableau::new(pairs).map_err(to_py_err)
}

/// The conjugate index `j* = 2d+1-j`.
#[pyfunction]
fn star(j: u32, d: u32) -> u32 {
    brsk::star(j, d)
}

/// Does `v` pick exactly one of each conjugate pair `{j, j*}`?
#[pyfunction]
fn is_symplectic_member(v: Vec<u32>, d: u32) -> PyResult<bool> {
    let x = index_set_in(v, 2 * d)?;
    brsk::is_symplectic_member(&x, d).map_err(to_py_err)
}

/// The four cell grids of `v` as lists of `(row, col)` tuples, keyed
/// `"R"`, `"N"`, `"N_tilde"`, `"N_folded"`.
#[pyfunction]
fn grids(v: Vec<u32>) -> PyResult<HashMap<String, Vec<(u32, u32)>>> {
    let v = index_set(v)?;
    let g = brsk::build_grids(&v).map_err(to_py_err)?;
    let pack = |cells: &[Cell]| cells.iter().map(|c| (c.row, c.col)).collect();
    Ok(HashMap::from([
        ("R".to_string(), pack(&g.r)),
        ("N".to_string(), pack(&g.n)),
        ("N_tilde".to_string(), pack(&g.n_tilde)),
        ("N_folded".to_string(), pack(&g.n_folded)),
    ]))
}

/// Peel a monomial to exhaustion: returns `(words, distinguished)` where
/// `words[r]` is the r-th replaced index set and `distinguished[r]` the
/// cells extracted at step r.
#[pyfunction]
fn pitilde(
    v: Vec<u32>,
    cells: Vec<(u32, u32)>,
) -> PyResult<(Vec<Vec<u32>>, Vec<Vec<(u32, u32)>>)> {
    let v = index_set(v)?;
    let m = monomial(&v, cells)?;
    let trace = brsk::peel(&m).map_err(to_py_err)?;
    let words = trace
        .words()
        .words()
        .iter()
        .map(|w| w.entries().to_vec())
        .collect();
    let distinguished = trace
        .steps()
        .iter()
        .map(|s| s.distinguished.iter().map(|c| (c.row, c.col)).collect())
        .collect();
    Ok((words, distinguished))
}

/// Bounded insertion of a monomial: returns the `(P, Q)` row lists.
#[pyfunction(name = "brsk")]
fn brsk_map(v: Vec<u32>, cells: Vec<(u32, u32)>) -> PyResult<(Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    let v = index_set(v)?;
    let m = monomial(&v, cells)?;
    let t = brsk::brsk(&m).map_err(to_py_err)?;
    Ok((t.p_rows().to_vec(), t.q_rows().to_vec()))
}

/// Invert a notched tableau pair back to its monomial.
#[pyfunction]
fn brsk_inverse(
    v: Vec<u32>,
    p: Vec<Vec<u32>>,
    q: Vec<Vec<u32>>,
) -> PyResult<Vec<(u32, u32)>> {
    let v = index_set(v)?;
    let t = brsk::NotchedTableauPair::new(p, q).map_err(to_py_err)?;
    let m = brsk::brsk_inverse(&t, &v).map_err(to_py_err)?;
    Ok(cells_out(&m))
}

/// Map a standard tableau (list of `(top, bot)` pairs) to its folded-grid
/// monomial.
#[pyfunction]
fn eta(v: Vec<u32>, pairs: Vec<(Vec<u32>, Vec<u32>)>) -> PyResult<Vec<(u32, u32)>> {
    let v = index_set(v)?;
    let t = tableau(&v, pairs)?;
    let image = brsk::eta(&t, &v).map_err(to_py_err)?;
    Ok(cells_out(&image))
}

/// Depth of every distinct strictly-lower cell of the monomial.
#[pyfunction]
fn depth(v: Vec<u32>, cells: Vec<(u32, u32)>) -> PyResult<HashMap<(u32, u32), u32>> {
    let v = index_set(v)?;
    let m = monomial(&v, cells)?;
    Ok(brsk::depth_map(&m)
        .into_iter()
        .map(|(c, k)| ((c.row, c.col), k))
        .collect())
}

/// Degree-indexed counts of w-dominated monomials, `m = 0..=max_m`.
#[pyfunction]
#[pyo3(signature = (v, w, max_m, all_chains = false))]
fn hilbert(v: Vec<u32>, w: Vec<u32>, max_m: usize, all_chains: bool) -> PyResult<Vec<u64>> {
    let v = index_set(v)?;
    let w = index_set_in(w, v.ambient())?;
    let mode = if all_chains {
        DominationMode::AllChains
    } else {
        DominationMode::MaximalChains
    };
    Ok(brsk::hilbert_function(&v, &w, max_m, mode)
        .map_err(to_py_err)?
        .counts)
}

/// All w-dominated monomials of degree `m`, as cell lists.
#[pyfunction]
fn enumerate_dominated(v: Vec<u32>, w: Vec<u32>, m: usize) -> PyResult<Vec<Vec<(u32, u32)>>> {
    let v = index_set(v)?;
    let w = index_set_in(w, v.ambient())?;
    let monomials =
        brsk::enumerate_dominated_monomials(&v, &w, m, DominationMode::MaximalChains)
            .map_err(to_py_err)?;
    Ok(monomials.iter().map(cells_out).collect())
}

/// All anti-dominated v-compatible tableaux up to `max_degree`, as lists of
/// `(top, bot)` pairs.
#[pyfunction]
fn enumerate_anti_dominated(
    v: Vec<u32>,
    max_degree: u32,
) -> PyResult<Vec<Vec<(Vec<u32>, Vec<u32>)>>> {
    let v = index_set(v)?;
    let tableaux =
        brsk::enumerate_anti_dominated_tableaux(&v, max_degree).map_err(to_py_err)?;
    Ok(tableaux
        .iter()
        .map(|t| {
            t.pairs()
                .iter()
                .map(|p| (p.top().entries().to_vec(), p.bot().entries().to_vec()))
                .collect()
        })
        .collect())
}

fn report_json(r: &brsk::VerificationReport) -> String {
    r.to_json().to_string()
}

/// Exhaustive peeling-vs-insertion check; returns the report as JSON.
#[pyfunction]
fn verify_main(v: Vec<u32>, max_size: usize) -> PyResult<String> {
    let v = index_set(v)?;
    Ok(report_json(&brsk::verify::main_theorem(&v, max_size)))
}

#[pyfunction]
fn verify_roundtrip(v: Vec<u32>, max_size: usize) -> PyResult<String> {
    let v = index_set(v)?;
    Ok(report_json(&brsk::verify::round_trip(&v, max_size)))
}

#[pyfunction]
fn verify_eta(v: Vec<u32>, max_degree: u32) -> PyResult<String> {
    let v = index_set(v)?;
    let r = brsk::verify::eta_bijection(&v, max_degree).map_err(to_py_err)?;
    Ok(report_json(&r))
}

#[pyfunction]
fn verify_counting(v: Vec<u32>, w: Vec<u32>, max_m: u32) -> PyResult<String> {
    let v = index_set(v)?;
    let w = index_set_in(w, v.ambient())?;
    let r = brsk::verify::counting(&v, &w, max_m, DominationMode::MaximalChains)
        .map_err(to_py_err)?;
    Ok(report_json(&r))
}

#[pymodule]
fn brsk_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(is_symplectic_member, m)?)?;
    m.add_function(wrap_pyfunction!(grids, m)?)?;
    m.add_function(wrap_pyfunction!(pitilde, m)?)?;
    m.add_function(wrap_pyfunction!(brsk_map, m)?)?;
    m.add_function(wrap_pyfunction!(brsk_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(depth, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_dominated, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_anti_dominated, m)?)?;
    m.add_function(wrap_pyfunction!(verify_main, m)?)?;
    m.add_function(wrap_pyfunction!(verify_roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(verify_eta, m)?)?;
    m.add_function(wrap_pyfunction!(verify_counting, m)?)?;
    Ok(())
}
