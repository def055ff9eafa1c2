//! Python bindings. Sets cross the boundary as lists of element labels in
//! universe order, set families as lists of such lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rough_matroid as rm;
use rough_matroid::cli;

fn to_py(e: rm::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn labels(set: &rm::ElemSet) -> Vec<String> {
    set.labels().into_iter().map(str::to_string).collect()
}

fn family(f: &rm::SetFamily) -> Vec<Vec<String>> {
    f.iter().map(|s| labels(&s)).collect()
}

fn set_of(universe: &rm::Universe, items: Vec<String>) -> PyResult<rm::ElemSet> {
    universe.set_from_labels(items).map_err(to_py)
}

fn element(universe: &rm::Universe, label: &str) -> PyResult<usize> {
    universe
        .index_of(label)
        .ok_or_else(|| PyValueError::new_err(format!("unknown element {label:?}")))
}

/// A binary relation on a labelled universe.
#[pyclass(
    name = "Relation",
    module = "rough_matroid",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyRelation(rm::BinaryRelation);

#[pymethods]
impl PyRelation {
    #[new]
    fn new(universe: Vec<String>, pairs: Vec<(String, String)>) -> PyResult<Self> {
        let u = rm::Universe::new(universe).map_err(to_py)?;
        rm::BinaryRelation::from_label_pairs(&u, pairs)
            .map(Self)
            .map_err(to_py)
    }

    /// Parses the `universe:` / `relation:` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        cli::parse_relation(text).map(Self).map_err(to_py)
    }

    fn universe(&self) -> Vec<String> {
        self.0.universe().labels().to_vec()
    }

    fn pairs(&self) -> Vec<(String, String)> {
        let u = self.0.universe();
        self.0
            .pairs()
            .map(|(x, y)| (u.label(x).to_string(), u.label(y).to_string()))
            .collect()
    }

    fn neighborhood(&self, x: &str) -> PyResult<Vec<String>> {
        let i = element(self.0.universe(), x)?;
        Ok(labels(&self.0.neighborhood(i).map_err(to_py)?))
    }

    /// Dict of the serial, transitive, reflexive, symmetric and equivalence flags.
    fn properties<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let p = self.0.properties();
        let d = PyDict::new(py);
        d.set_item("serial", p.serial)?;
        d.set_item("transitive", p.transitive)?;
        d.set_item("reflexive", p.reflexive)?;
        d.set_item("symmetric", p.symmetric)?;
        d.set_item("equivalence", p.equivalence)?;
        Ok(d)
    }

    fn reflexive_closure(&self) -> Self {
        Self(self.0.reflexive_closure())
    }

    fn lower_approx(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let x = set_of(self.0.universe(), x)?;
        Ok(labels(&self.0.lower_approx(&x).map_err(to_py)?))
    }

    fn upper_approx(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let x = set_of(self.0.universe(), x)?;
        Ok(labels(&self.0.upper_approx(&x).map_err(to_py)?))
    }

    fn minimal_neighborhoods(&self) -> Vec<Vec<String>> {
        family(&rm::minimal_neighborhood_family(&self.0))
    }

    /// The induced matroid; raises ValueError unless serial and transitive.
    fn to_matroid(&self) -> PyResult<PyMatroid> {
        rm::matroid_from_relation(&self.0)
            .map(PyMatroid)
            .map_err(to_py)
    }

    fn round_trip(&self) -> PyResult<Self> {
        rm::compose_relation_matroid_relation(&self.0)
            .map(Self)
            .map_err(to_py)
    }

    fn upper_decomposition(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let x = set_of(self.0.universe(), x)?;
        Ok(labels(
            &rm::equivalence_upper_decomposition(&self.0, &x).map_err(to_py)?,
        ))
    }

    fn to_text(&self) -> String {
        cli::format_relation_document(&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Relation({})", self.0.pair_notation())
    }
}

/// A matroid given by its circuits.
#[pyclass(
    name = "Matroid",
    module = "rough_matroid",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyMatroid(rm::Matroid);

#[pymethods]
impl PyMatroid {
    #[new]
    fn new(universe: Vec<String>, circuits: Vec<Vec<String>>) -> PyResult<Self> {
        let u = rm::Universe::new(universe).map_err(to_py)?;
        let sets = circuits
            .into_iter()
            .map(|c| set_of(&u, c))
            .collect::<PyResult<Vec<_>>>()?;
        let f = rm::SetFamily::new(&u, sets).map_err(to_py)?;
        rm::Matroid::from_circuits(f).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn from_independents(universe: Vec<String>, independents: Vec<Vec<String>>) -> PyResult<Self> {
        let u = rm::Universe::new(universe).map_err(to_py)?;
        let sets = independents
            .into_iter()
            .map(|c| set_of(&u, c))
            .collect::<PyResult<Vec<_>>>()?;
        let f = rm::SetFamily::new(&u, sets).map_err(to_py)?;
        rm::Matroid::from_independents(f).map(Self).map_err(to_py)
    }

    /// Parses the `universe:` / `circuits:` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        cli::parse_matroid(text).map(Self).map_err(to_py)
    }

    fn universe(&self) -> Vec<String> {
        self.0.universe().labels().to_vec()
    }

    fn circuits(&self) -> Vec<Vec<String>> {
        family(self.0.circuits())
    }

    fn independents(&self) -> Vec<Vec<String>> {
        family(self.0.independents())
    }

    fn closure(&self, x: Vec<String>) -> PyResult<Vec<String>> {
        let x = set_of(self.0.universe(), x)?;
        Ok(labels(&self.0.closure(&x).map_err(to_py)?))
    }

    fn rank(&self, x: Vec<String>) -> PyResult<usize> {
        let x = set_of(self.0.universe(), x)?;
        self.0.rank(&x).map_err(to_py)
    }

    fn is_2circuit(&self) -> bool {
        self.0.is_2circuit()
    }

    fn to_relation(&self) -> PyRelation {
        PyRelation(rm::relation_from_matroid(&self.0))
    }

    fn round_trip(&self) -> Self {
        Self(rm::compose_matroid_relation_matroid(&self.0))
    }

    fn to_text(&self) -> String {
        cli::format_matroid_document(&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Matroid(circuits={:?})", self.0.circuits())
    }
}

fn report_dict<'py>(py: Python<'py>, r: &rm::VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theorem_id", &r.theorem_id)?;
    d.set_item("kind", r.kind.to_string())?;
    d.set_item("statement", &r.statement)?;
    d.set_item("universe_sizes", r.universe_sizes.clone())?;
    d.set_item("space_size", r.space_size)?;
    d.set_item("hypothesis_count", r.hypothesis_count)?;
    d.set_item("outcome", r.outcome.to_string())?;
    d.set_item(
        "witnesses",
        r.witnesses
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>(),
    )?;
    d.set_item("elapsed", r.elapsed.as_secs_f64())?;
    Ok(d)
}

#[pyfunction]
fn run_theorem<'py>(
    py: Python<'py>,
    theorem_id: &str,
    max_n: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let report = py
        .detach(|| rm::run_theorem(theorem_id, max_n))
        .map_err(to_py)?;
    report_dict(py, &report)
}

#[pyfunction]
fn run_all<'py>(py: Python<'py>, max_n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let reports = py.detach(|| rm::run_all(max_n)).map_err(to_py)?;
    reports.iter().map(|r| report_dict(py, r)).collect()
}

/// `(id, kind, statement)` for every catalog entry.
#[pyfunction]
fn catalog() -> Vec<(String, String, String)> {
    rm::catalog()
        .iter()
        .map(|e| {
            (
                e.id.to_string(),
                e.kind.to_string(),
                e.statement.to_string(),
            )
        })
        .collect()
}

#[pymodule]
#[pyo3(name = "rough_matroid")]
fn rough_matroid_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRelation>()?;
    m.add_class::<PyMatroid>()?;
    m.add_function(wrap_pyfunction!(run_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(run_all, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    Ok(())
}
