//! Python bindings. Index sets cross the boundary as sorted lists of 1-based
//! variable indices, monomials as exponent lists.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use veronese_core::cli::{run, Actions, Input, OutputFormat, Request};
use veronese_core::oracle::{self, OracleBudget};
use veronese_core::polymatroid::{radical_via_rank, translation_normalize, veronese_bases};
use veronese_core::veronese::{self as closed, WitnessedPrime};
use veronese_core::{IndexSet, Monomial, MonomialIdeal, SquarefreeIdeal};

create_exception!(veronese, VeroneseError, PyValueError);

fn py_err(e: veronese_core::Error) -> PyErr {
    VeroneseError::new_err(e.to_string())
}

fn lists(sets: &[IndexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn primes(found: Vec<WitnessedPrime>) -> Vec<(Vec<usize>, Vec<u32>)> {
    found
        .into_iter()
        .map(|w| (w.indices.to_vec(), w.witness.exps().to_vec()))
        .collect()
}

fn ideal_from(nvars: usize, generators: Vec<Vec<u32>>) -> PyResult<MonomialIdeal> {
    let gens = generators
        .into_iter()
        .map(Monomial::new)
        .collect::<veronese_core::Result<Vec<_>>>()
        .map_err(py_err)?;
    MonomialIdeal::minimalize(nvars, gens).map_err(py_err)
}

type PairWithViolations = (Option<(usize, usize)>, Vec<Vec<usize>>);

/// Parameters `(d; a_1, ..., a_n)` of an ideal of Veronese type.
#[pyclass(name = "Veronese", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyVeronese {
    inner: veronese_core::VeroneseParams,
}

#[pymethods]
impl PyVeronese {
    #[new]
    fn new(d: u32, a: Vec<u32>) -> PyResult<Self> {
        let inner = veronese_core::VeroneseParams::new(d, a).map_err(py_err)?;
        Ok(PyVeronese { inner })
    }

    /// Parses `"d;a1,...,an"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = veronese_core::cli::parse_params(text).map_err(py_err)?;
        Ok(PyVeronese { inner })
    }

    #[getter]
    fn d(&self) -> u32 {
        self.inner.d()
    }

    #[getter]
    fn caps(&self) -> Vec<u32> {
        self.inner.caps().to_vec()
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    fn is_feasible(&self) -> bool {
        self.inner.is_feasible()
    }

    fn contains(&self, exponents: Vec<u32>) -> PyResult<bool> {
        let z = Monomial::new(exponents).map_err(py_err)?;
        self.inner.ideal_contains(&z).map_err(py_err)
    }

    /// Minimal generators as exponent lists, largest first.
    fn generators(&self) -> PyResult<Vec<Vec<u32>>> {
        let ideal = self.inner.ideal().map_err(py_err)?;
        Ok(ideal.gens().iter().map(|g| g.exps().to_vec()).collect())
    }

    fn radical(&self) -> PyResult<Vec<Vec<usize>>> {
        let nf = closed::normalize(&self.inner).map_err(py_err)?;
        Ok(lists(nf.radical().map_err(py_err)?.gens()))
    }

    /// Borel generators of the core radical, in core indices.
    fn borel(&self) -> PyResult<Vec<Vec<usize>>> {
        let rep = closed::is_equidimensional(&self.inner).map_err(py_err)?;
        Ok(lists(&rep.borel))
    }

    /// `(m, b)` of the core radical, or `None` when there is no core.
    fn mb(&self) -> PyResult<Option<(usize, usize)>> {
        let rep = closed::is_equidimensional(&self.inner).map_err(py_err)?;
        Ok(rep.mb.map(|mb| (mb.m, mb.b)))
    }

    fn is_equidimensional(&self) -> PyResult<bool> {
        Ok(closed::is_equidimensional(&self.inner)
            .map_err(py_err)?
            .verdict)
    }

    fn cover_cardinality(&self) -> PyResult<Option<usize>> {
        Ok(closed::is_equidimensional(&self.inner)
            .map_err(py_err)?
            .cover_cardinality)
    }

    /// `((p, l), violations)` in core indices.
    fn maximal_pair(&self) -> PyResult<PairWithViolations> {
        let rep = closed::maximal_pair(&self.inner).map_err(py_err)?;
        Ok((rep.pair, lists(&rep.violations)))
    }

    /// `[(indices, witness_exponents), ...]`.
    fn associated_primes(&self) -> PyResult<Vec<(Vec<usize>, Vec<u32>)>> {
        Ok(primes(
            closed::associated_primes(&self.inner).map_err(py_err)?,
        ))
    }

    fn is_unmixed(&self) -> PyResult<bool> {
        closed::is_unmixed(&self.inner).map_err(py_err)
    }

    /// One of `Principal`, `Veronese`, `SquarefreeVeronese`,
    /// `NotCohenMacaulay`.
    fn classify(&self) -> PyResult<String> {
        Ok(format!(
            "{:?}",
            closed::classify(&self.inner).map_err(py_err)?
        ))
    }

    fn alexander_dual(&self) -> PyResult<Vec<Vec<usize>>> {
        let nf = closed::normalize(&self.inner).map_err(py_err)?;
        let dual = nf
            .radical()
            .and_then(|r| r.alexander_dual())
            .map_err(py_err)?;
        Ok(lists(dual.gens()))
    }

    fn bases(&self) -> PyResult<PyBaseSet> {
        Ok(PyBaseSet {
            inner: veronese_bases(&self.inner).map_err(py_err)?,
        })
    }

    /// The full JSON report, optionally cross-checked by brute force.
    #[pyo3(signature = (oracle = false))]
    fn analyze(&self, oracle: bool) -> PyResult<String> {
        let req = Request {
            input: Input::Veronese(self.inner.clone()),
            actions: Actions::all(),
            oracle_check: oracle,
            format: OutputFormat::Json,
            budget: OracleBudget::default(),
            inject_fault: false,
        };
        let report = run(&req).map_err(py_err)?;
        Ok(report.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Veronese({}, {:?})", self.inner.d(), self.inner.caps())
    }

    fn __str__(&self) -> String {
        format!("I_{{{}}}", self.inner)
    }
}

/// Bases of a discrete polymatroid.
#[pyclass(name = "BaseSet", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyBaseSet {
    inner: veronese_core::BaseSet,
}

#[pymethods]
impl PyBaseSet {
    #[new]
    fn new(vectors: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(PyBaseSet {
            inner: veronese_core::BaseSet::new(vectors).map_err(py_err)?,
        })
    }

    #[getter]
    fn vectors(&self) -> Vec<Vec<u32>> {
        self.inner.vectors().to_vec()
    }

    #[getter]
    fn rank(&self) -> u64 {
        self.inner.rank()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn check_exchange(&self) -> bool {
        self.inner.check_exchange()
    }

    fn check_strong_exchange(&self) -> bool {
        self.inner.check_strong_exchange()
    }

    fn rank_of(&self, indices: Vec<usize>) -> PyResult<u64> {
        let set = IndexSet::from_indices(indices).map_err(py_err)?;
        self.inner.rank_of(set).map_err(py_err)
    }

    /// `(offset, Veronese)` for a base set with the strong exchange property.
    fn translation_normalize(&self) -> PyResult<(Vec<u32>, PyVeronese)> {
        let t = translation_normalize(&self.inner).map_err(py_err)?;
        Ok((t.offset, PyVeronese { inner: t.params }))
    }

    fn radical_via_rank(&self) -> PyResult<Vec<Vec<usize>>> {
        let radical = radical_via_rank(&self.inner).map_err(py_err)?;
        let sq = SquarefreeIdeal::from_ideal(&radical).map_err(py_err)?;
        Ok(lists(sq.gens()))
    }

    fn __repr__(&self) -> String {
        format!("BaseSet({:?})", self.inner.vectors())
    }
}

/// Generators of `sqrt I` for normalized parameters `d > a_1 >= ... >= a_n >= 1`.
#[pyfunction]
fn radical_generators(d: u32, a: Vec<u32>) -> PyResult<Vec<Vec<usize>>> {
    let p = veronese_core::VeroneseParams::new(d, a).map_err(py_err)?;
    Ok(lists(&closed::radical_generators(&p).map_err(py_err)?))
}

/// Borel generators of a squarefree strongly stable ideal.
#[pyfunction]
fn borel_generators(nvars: usize, generators: Vec<Vec<usize>>) -> PyResult<Vec<Vec<usize>>> {
    let sets = generators
        .into_iter()
        .map(IndexSet::from_indices)
        .collect::<veronese_core::Result<Vec<_>>>()
        .map_err(py_err)?;
    let ideal = SquarefreeIdeal::new(nvars, sets).map_err(py_err)?;
    Ok(lists(&ideal.borel_generators().map_err(py_err)?))
}

/// Minimal vertex covers of the monomial ideal with the given exponent lists.
#[pyfunction]
fn minimal_vertex_covers(nvars: usize, generators: Vec<Vec<u32>>) -> PyResult<Vec<Vec<usize>>> {
    let ideal = ideal_from(nvars, generators)?;
    Ok(lists(
        &oracle::minimal_vertex_covers(&ideal, &OracleBudget::default()).map_err(py_err)?,
    ))
}

/// Associated primes by colon enumeration, with lexicographically least witnesses.
#[pyfunction]
fn associated_primes_bruteforce(
    nvars: usize,
    generators: Vec<Vec<u32>>,
) -> PyResult<Vec<(Vec<usize>, Vec<u32>)>> {
    let ideal = ideal_from(nvars, generators)?;
    Ok(primes(
        oracle::associated_primes_bruteforce(&ideal, &OracleBudget::default()).map_err(py_err)?,
    ))
}

#[pymodule]
pub fn veronese(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("VeroneseError", m.py().get_type::<VeroneseError>())?;
    m.add_class::<PyVeronese>()?;
    m.add_class::<PyBaseSet>()?;
    m.add_function(wrap_pyfunction!(radical_generators, m)?)?;
    m.add_function(wrap_pyfunction!(borel_generators, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_vertex_covers, m)?)?;
    m.add_function(wrap_pyfunction!(associated_primes_bruteforce, m)?)?;
    Ok(())
}
