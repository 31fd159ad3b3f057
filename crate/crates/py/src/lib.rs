//! Python bindings. Rationals cross the boundary as `fractions.Fraction`.

use std::path::Path;

use lietriple_core::catalog::{Catalog, CatalogEntry};
use lietriple_core::env2::embed_casimir;
use lietriple_core::liealg::{self, killing_form, LieAlgebra};
use lietriple_core::pairs::{check_transitive_triple, TripleDescriptor, Verdict};
use lietriple_core::parabolic::{is_spherical_triple, PickOrder};
use lietriple_core::ratlin::{parse_rational, Q};
use lietriple_core::spectra::lorentzian_spectrum_report;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, x: &Q) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((x.to_string(),))
}

fn fractions<'py>(py: Python<'py>, xs: &[Q]) -> PyResult<Bound<'py, PyList>> {
    let items = xs.iter().map(|x| fraction(py, x)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Accepts `int`, `str` ("p/q") or anything whose `str()` parses, e.g. `Fraction`.
fn rational(x: &Bound<'_, PyAny>) -> PyResult<Q> {
    parse_rational(&x.str()?.to_string()).map_err(err)
}

#[pyclass(name = "Algebra", module = "lietriple", frozen)]
struct PyAlgebra {
    inner: LieAlgebra,
}

#[pymethods]
impl PyAlgebra {
    #[staticmethod]
    #[pyo3(signature = (p, q=0))]
    fn so(p: usize, q: usize) -> PyResult<Self> {
        liealg::so(p, q).map(|inner| Self { inner }).map_err(err)
    }

    #[staticmethod]
    fn sl(n: usize) -> PyResult<Self> {
        liealg::sl(n).map(|inner| Self { inner }).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (p, q=0))]
    fn su(p: usize, q: usize) -> PyResult<Self> {
        liealg::su(p, q).map(|inner| Self { inner }).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (p, q=0))]
    fn u(p: usize, q: usize) -> PyResult<Self> {
        liealg::u(p, q).map(|inner| Self { inner }).map_err(err)
    }

    #[staticmethod]
    fn g2_split() -> PyResult<Self> {
        liealg::g2_split().map(|inner| Self { inner }).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn bracket<'py>(
        &self,
        py: Python<'py>,
        x: Vec<Bound<'py, PyAny>>,
        y: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyList>> {
        let d = self.inner.dim();
        if x.len() != d || y.len() != d {
            return Err(PyValueError::new_err(format!("expected vectors of length {d}")));
        }
        let x = x.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        let y = y.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        fractions(py, &self.inner.bracket(&x, &y))
    }

    /// Gram matrix of the Killing form in the standard basis.
    fn killing_form<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let b = killing_form(&self.inner);
        let gram = b.gram();
        let rows = (0..gram.rows())
            .map(|i| fractions(py, &(0..gram.cols()).map(|j| gram.get(i, j).clone()).collect::<Vec<_>>()))
            .collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, rows)
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={})", self.inner.dim())
    }
}

#[pyclass(name = "Triple", module = "lietriple", frozen)]
struct PyTriple {
    inner: TripleDescriptor,
}

#[pymethods]
impl PyTriple {
    /// Looks up a named entry in the shipped catalog, or in `path` when given.
    #[staticmethod]
    #[pyo3(signature = (name, path=None))]
    fn from_catalog(name: &str, path: Option<&str>) -> PyResult<Self> {
        let catalog = match path {
            Some(p) => Catalog::load(Path::new(p)).map_err(err)?,
            None => Catalog::shipped(),
        };
        let CatalogEntry { descriptor, .. } = catalog.entry(name).map_err(err)?;
        Ok(Self { inner: descriptor })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = check_transitive_triple(&self.inner);
        let d = PyDict::new(py);
        d.set_item("reductive", r.reductive)?;
        d.set_item("transitive", r.transitive)?;
        d.set_item("compact_intersection", r.compact_intersection)?;
        d.set_item("dim_g", r.dims.g)?;
        d.set_item("dim_h", r.dims.h)?;
        d.set_item("dim_l", r.dims.l)?;
        d.set_item("dim_l_cap_h", r.dims.l_cap_h)?;
        d.set_item("is_transitive_triple", r.verdict == Verdict::TransitiveTriple)?;
        Ok(d)
    }

    #[pyo3(signature = (reversed=false))]
    fn spherical<'py>(&self, py: Python<'py>, reversed: bool) -> PyResult<Bound<'py, PyDict>> {
        let order = if reversed { PickOrder::Reversed } else { PickOrder::Forward };
        let e = is_spherical_triple(&self.inner, order).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("spherical", e.spherical)?;
        d.set_item("dim_l", e.dim_l)?;
        d.set_item("dim_l_cap_h", e.dim_l_cap_h)?;
        d.set_item("dim_m", e.dim_m)?;
        d.set_item("dim_a", e.dim_a)?;
        d.set_item("dim_n", e.dim_n)?;
        d.set_item("dim_p", e.dim_p)?;
        d.set_item("dim_p_cap_l_cap_h", e.dim_p_cap_l_cap_h)?;
        d.set_item("dim_sum", e.dim_sum)?;
        Ok(d)
    }

    /// Writes the embedded Casimir in terms of the requested generators.
    #[pyo3(signature = (generators=None))]
    fn casimir_embed<'py>(
        &self,
        py: Python<'py>,
        generators: Option<Vec<String>>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let names = generators.unwrap_or_else(|| {
            ["omega_l", "omega_l_cap_k", "omega_l_cap_s_cap_q"].map(String::from).to_vec()
        });
        if let Some(bad) = names
            .iter()
            .find(|n| !matches!(n.as_str(), "omega_l" | "omega_l_cap_k" | "omega_l_cap_s_cap_q"))
        {
            return Err(PyValueError::new_err(format!("unknown generator {bad:?}")));
        }
        let e = embed_casimir(&self.inner, &names).map_err(err)?;
        let l = self.inner.l_algebra();
        let d = PyDict::new(py);
        d.set_item("generators", e.generator_names.clone())?;
        match &e.coefficients {
            Some(c) => d.set_item("coefficients", fractions(py, c)?)?,
            None => d.set_item("coefficients", py.None())?,
        }
        d.set_item("unique", e.unique)?;
        d.set_item("residual_zero", e.residual.is_zero())?;
        let terms = PyDict::new(py);
        for (mono, c) in e.residual.terms(&l) {
            terms.set_item(mono, fraction(py, &c)?)?;
        }
        d.set_item("residual", terms)?;
        d.set_item("iota_omega_g", e.iota_omega_g.display(&l))?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Triple({:?})", self.inner.name)
    }
}

#[pyfunction]
#[pyo3(signature = (path=None))]
fn catalog_names(path: Option<&str>) -> PyResult<Vec<String>> {
    match path {
        Some(p) => Catalog::load(Path::new(p)).map(|c| c.names()).map_err(err),
        None => Ok(Catalog::shipped().names()),
    }
}

/// Spectrum of the Laplacian on the Lorentzian quotient of dimension `n`.
#[pyfunction]
#[pyo3(signature = (n, cutoff=None))]
fn spectrum_report<'py>(
    py: Python<'py>,
    n: usize,
    cutoff: Option<Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyDict>> {
    let cutoff = match cutoff {
        Some(c) => rational(&c)?,
        None => Q::from_integer(100.into()),
    };
    let r = lorentzian_spectrum_report(n, &cutoff).map_err(err)?;
    let bands = r
        .bands
        .iter()
        .map(|b| {
            let d = PyDict::new(py);
            match &b.lower {
                Some(x) => d.set_item("lower", fraction(py, x)?)?,
                None => d.set_item("lower", py.None())?,
            }
            d.set_item("lower_closed", b.lower_closed)?;
            match &b.upper {
                Some(x) => d.set_item("upper", fraction(py, x)?)?,
                None => d.set_item("upper", py.None())?,
            }
            d.set_item("upper_closed", b.upper_closed)?;
            d.set_item("attribution", &b.attribution)?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    let discrete = r
        .discrete_positive
        .iter()
        .map(|e| Ok((e.ell, fraction(py, &e.value)?)))
        .collect::<PyResult<Vec<_>>>()?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("bands", bands)?;
    d.set_item("discrete_positive", discrete)?;
    d.set_item("eigenspace_note", &r.eigenspace_note)?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "lietriple")]
fn lietriple_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyTriple>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_report, m)?)?;
    Ok(())
}
