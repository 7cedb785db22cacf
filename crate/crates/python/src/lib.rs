use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use g2_crystal::cartan::{Index, Weight};
use g2_crystal::error::Error;
use g2_crystal::monomial::{self, CrystalConfig};
use g2_crystal::tableaux::{e_tab, f_tab};
use g2_crystal::verify::{map_element, Realization};
use g2_crystal::xalgebra::{normal_form_traced, xword_monomial, DEFAULT_REWRITE_CAP};
use g2_crystal::{iso, XWord, DEFAULT_VERTEX_CAP};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::VertexCapExceeded { .. } | Error::RewriteCapExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn index(i: u8) -> PyResult<Index> {
    Index::try_from(i).map_err(py_err)
}

fn weight(w: (i32, i32)) -> Weight {
    Weight::new(w.0, w.1)
}

fn config(c12: i32) -> PyResult<CrystalConfig> {
    CrystalConfig::new(c12, 1 - c12).map_err(py_err)
}

fn realization(name: &str) -> PyResult<Realization> {
    name.parse().map_err(py_err)
}

/// A Laurent monomial in the variables `Y_i(n)`.
#[pyclass(frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Monomial(monomial::Monomial);

#[pymethods]
impl Monomial {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Monomial).map_err(py_err)
    }

    #[staticmethod]
    #[pyo3(signature = (m, n, variant="standard"))]
    fn highest(m: i32, n: i32, variant: &str) -> PyResult<Self> {
        let v = match variant {
            "standard" => monomial::Variant::Standard,
            "negative" => monomial::Variant::Negative,
            _ => return Err(PyValueError::new_err("variant must be 'standard' or 'negative'")),
        };
        monomial::highest_monomial(Weight::new(m, n), v).map(Monomial).map_err(py_err)
    }

    fn weight(&self) -> (i32, i32) {
        let w = self.0.weight();
        (w.c1, w.c2)
    }

    fn phi(&self, i: u8) -> PyResult<u32> {
        Ok(self.0.phi(index(i)?))
    }

    fn epsilon(&self, i: u8) -> PyResult<u32> {
        Ok(self.0.epsilon(index(i)?))
    }

    #[pyo3(signature = (i, c12=1))]
    fn f(&self, i: u8, c12: i32) -> PyResult<Option<Monomial>> {
        Ok(monomial::f_op(index(i)?, &self.0, config(c12)?).map(Monomial))
    }

    #[pyo3(signature = (i, c12=1))]
    fn e(&self, i: u8, c12: i32) -> PyResult<Option<Monomial>> {
        Ok(monomial::e_op(index(i)?, &self.0, config(c12)?).map(Monomial))
    }

    fn __mul__(&self, other: &Monomial) -> Monomial {
        Monomial(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Monomial('{}')", self.0)
    }
}

/// A two-row G2 tableau, written `kind=S; shape=m,n; top=...; bottom=...`.
#[pyclass(frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Tableau(g2_crystal::Tableau);

#[pymethods]
impl Tableau {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Tableau).map_err(py_err)
    }

    fn weight(&self) -> (i32, i32) {
        let w = self.0.weight();
        (w.c1, w.c2)
    }

    fn is_valid(&self) -> bool {
        self.0.is_valid()
    }

    fn f(&self, i: u8) -> PyResult<Option<Tableau>> {
        Ok(f_tab(index(i)?, &self.0).map_err(py_err)?.map(Tableau))
    }

    fn e(&self, i: u8) -> PyResult<Option<Tableau>> {
        Ok(e_tab(index(i)?, &self.0).map_err(py_err)?.map(Tableau))
    }

    fn to_monomial(&self) -> PyResult<Monomial> {
        iso::psi_inv(&self.0).map(Monomial).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tableau('{}')", self.0)
    }
}

#[pyfunction]
fn weyl_dim(m: i32, n: i32) -> PyResult<u64> {
    g2_crystal::weyl_dim(Weight::new(m, n)).map_err(py_err)
}

/// JSON document of the component of highest weight `(m, n)`.
#[pyfunction]
#[pyo3(signature = (weight_mn, real="monomial", c12=1, cap=DEFAULT_VERTEX_CAP))]
fn generate(weight_mn: (i32, i32), real: &str, c12: i32, cap: usize) -> PyResult<String> {
    let doc = realization(real)?.generate_doc(weight(weight_mn), config(c12)?, cap).map_err(py_err)?;
    Ok(doc.to_json())
}

/// DOT rendering of the same component.
#[pyfunction]
#[pyo3(signature = (weight_mn, real="monomial", c12=1, cap=DEFAULT_VERTEX_CAP))]
fn generate_dot(weight_mn: (i32, i32), real: &str, c12: i32, cap: usize) -> PyResult<String> {
    let doc = realization(real)?.generate_doc(weight(weight_mn), config(c12)?, cap).map_err(py_err)?;
    Ok(doc.to_dot())
}

/// Runs every cross-check; returns `(all_passed, table)`.
#[pyfunction]
#[pyo3(signature = (weight_mn, c12=1, cap=DEFAULT_VERTEX_CAP))]
fn verify(weight_mn: (i32, i32), c12: i32, cap: usize) -> PyResult<(bool, String)> {
    let report = g2_crystal::verify::verify(weight(weight_mn), config(c12)?, cap).map_err(py_err)?;
    Ok((report.all_passed(), report.to_string()))
}

#[pyfunction]
#[pyo3(name = "map", signature = (element, source, target, weight_mn, c12=1, cap=DEFAULT_VERTEX_CAP))]
fn map_py(element: &str, source: &str, target: &str, weight_mn: (i32, i32), c12: i32, cap: usize) -> PyResult<String> {
    map_element(element, realization(source)?, realization(target)?, weight(weight_mn), config(c12)?, cap).map_err(py_err)
}

/// Canonical factorization `[M]` and its expanded monomial.
#[pyfunction]
#[pyo3(signature = (word, cap=DEFAULT_REWRITE_CAP))]
fn normal_form(word: &str, cap: usize) -> PyResult<(String, String)> {
    let w: XWord = word.parse().map_err(py_err)?;
    let nf = normal_form_traced(&w, cap).map_err(py_err)?;
    Ok((nf.word.to_string(), xword_monomial(&nf.word).to_string()))
}

#[pyfunction]
fn psi(word: &str) -> PyResult<Tableau> {
    let w: XWord = word.parse().map_err(py_err)?;
    iso::psi(&w).map(Tableau).map_err(py_err)
}

#[pymodule]
fn g2crystal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Monomial>()?;
    m.add_class::<Tableau>()?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(generate_dot, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(map_py, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    Ok(())
}
