//! Python bindings: profiles, graphs, realizability checks, builders, the
//! census operations and the exhaustive oracle.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ndeg_core::census::{self, Family};
use ndeg_core::graph::{Format, Mode};
use ndeg_core::oracle::{self, OracleQuery};

fn to_py_err(e: ndeg_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    mode.parse().map_err(to_py_err)
}

fn parse_family(family: &str) -> PyResult<Family> {
    family.parse().map_err(to_py_err)
}

/// A neighborhood-degree profile `(d_l^{n_l} ... d_1^{n_1})`.
#[pyclass(frozen, eq, hash, skip_from_py_object)]
#[derive(PartialEq, Eq, Hash, Clone)]
struct Profile {
    inner: ndeg_core::Profile,
}

#[pymethods]
impl Profile {
    /// Parses the compact form ("3^4 2^1") or a raw non-increasing list
    /// ("3,3,3,3,2").
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Profile {
            inner: text.parse().map_err(to_py_err)?,
        })
    }

    /// `(degree, count)` blocks, degrees strictly decreasing.
    #[getter]
    fn blocks(&self) -> Vec<(usize, usize)> {
        self.inner.blocks().to_vec()
    }

    /// Count of degree-0 demands stripped during normalization.
    #[getter]
    fn isolated(&self) -> usize {
        self.inner.isolated()
    }

    fn total_len(&self) -> usize {
        self.inner.total_len()
    }

    /// The profile expanded into a non-increasing list of demands.
    fn values(&self) -> Vec<usize> {
        self.inner.to_values()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Profile(\"{}\")", self.inner)
    }
}

/// A labeled simple undirected graph.
#[pyclass(frozen, eq, skip_from_py_object)]
#[derive(PartialEq, Clone)]
struct Graph {
    inner: ndeg_core::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        for &(u, v) in &edges {
            if u == v || u >= n || v >= n {
                return Err(PyValueError::new_err(format!(
                    "invalid edge ({u}, {v}) for n={n}"
                )));
            }
        }
        let mut sorted: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != edges.len() {
            return Err(PyValueError::new_err("duplicate edge"));
        }
        Ok(Graph {
            inner: ndeg_core::Graph::from_edges(n, &sorted),
        })
    }

    #[staticmethod]
    fn parse_edge_list(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: ndeg_core::Graph::parse_edge_list(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.deg(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Per-vertex neighborhood-degree values for a mode
    /// ("min-closed", "max-closed" or "max-open").
    fn ndeg_values(&self, mode: &str) -> PyResult<Vec<usize>> {
        self.inner.ndeg_values(parse_mode(mode)?).map_err(to_py_err)
    }

    fn profile_of(&self, mode: &str) -> PyResult<Profile> {
        Ok(Profile {
            inner: self
                .inner
                .profile_of(parse_mode(mode)?)
                .map_err(to_py_err)?,
        })
    }

    /// True iff this graph realizes the profile under the mode (and is
    /// connected, when required).
    #[pyo3(signature = (profile, mode = "max-closed", connected = false))]
    fn verify(&self, profile: &Profile, mode: &str, connected: bool) -> PyResult<bool> {
        Ok(self
            .inner
            .verify(&profile.inner, parse_mode(mode)?, connected))
    }

    fn to_edge_list(&self) -> String {
        self.inner.serialize(Format::EdgeList)
    }

    fn to_dot(&self) -> String {
        self.inner.serialize(Format::Dot)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Decides realizability; returns "realizable", "not-realizable" or
/// "unknown".
#[pyfunction]
#[pyo3(signature = (profile, mode = "max-closed", connected = false))]
fn check(profile: &Profile, mode: &str, connected: bool) -> PyResult<String> {
    let verdict = ndeg_core::check_profile(&profile.inner, parse_mode(mode)?, connected)
        .map_err(to_py_err)?;
    Ok(verdict.to_string())
}

/// Constructs a witness graph, raising ValueError when the profile is not
/// realizable (or undecided).
#[pyfunction]
#[pyo3(signature = (profile, mode = "max-closed", connected = false))]
fn realize(profile: &Profile, mode: &str, connected: bool) -> PyResult<Graph> {
    let r = ndeg_core::realize_profile(&profile.inner, parse_mode(mode)?, connected)
        .map_err(to_py_err)?;
    Ok(Graph { inner: r.graph })
}

/// Exact count of realizable profiles of length `n` for a family
/// ("ccon", "ocon", "cgen", "ogenl", "ogenu", or "ogen-exact").
#[pyfunction]
fn count(n: usize, family: &str) -> PyResult<BigUint> {
    if family == "ogen-exact" {
        return census::ogen_exact(n).map_err(to_py_err);
    }
    census::count(n, parse_family(family)?).map_err(to_py_err)
}

/// All realizable profiles of length `n` (families ccon, ocon, cgen).
#[pyfunction]
fn enumerate_profiles(n: usize, family: &str) -> PyResult<Vec<Profile>> {
    Ok(census::enumerate(n, parse_family(family)?)
        .map_err(to_py_err)?
        .map(|inner| Profile { inner })
        .collect())
}

/// Uniformly random realizable profile; identical seeds give identical
/// profiles.
#[pyfunction]
fn sample(n: usize, family: &str, seed: u64) -> PyResult<Profile> {
    Ok(Profile {
        inner: census::sample(n, parse_family(family)?, seed).map_err(to_py_err)?,
    })
}

/// Exhaustive ground truth: the first witness over all labeled graphs, or
/// None. Limited to profiles of total length `n_limit <= 8`.
#[pyfunction]
#[pyo3(signature = (profile, mode = "max-closed", connected = false, n_limit = 7))]
fn oracle_realizable(
    profile: &Profile,
    mode: &str,
    connected: bool,
    n_limit: usize,
) -> PyResult<Option<Graph>> {
    let q = OracleQuery::new(profile.inner.clone(), parse_mode(mode)?, connected)
        .with_limit(n_limit)
        .map_err(to_py_err)?;
    Ok(oracle::oracle_realizable(&q)
        .map_err(to_py_err)?
        .map(|inner| Graph { inner }))
}

/// The exact set of realizable isolated-free profiles of length `n`.
#[pyfunction]
#[pyo3(signature = (n, mode = "max-closed", connected = false, n_limit = 7))]
fn oracle_all_profiles(
    n: usize,
    mode: &str,
    connected: bool,
    n_limit: usize,
) -> PyResult<Vec<Profile>> {
    Ok(
        oracle::oracle_all_profiles(n, parse_mode(mode)?, connected, n_limit)
            .map_err(to_py_err)?
            .into_iter()
            .map(|inner| Profile { inner })
            .collect(),
    )
}

/// True iff the profile admits a realization with disjoint leader and
/// follower sets (equivalently, SC holds for every prefix).
#[pyfunction]
fn check_dlf(profile: &Profile) -> bool {
    ndeg_core::minndeg::check_dlf(&profile.inner)
}

#[pymodule]
fn ndeg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Profile>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_profiles, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_realizable, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_all_profiles, m)?)?;
    m.add_function(wrap_pyfunction!(check_dlf, m)?)?;
    Ok(())
}
