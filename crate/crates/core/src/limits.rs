use serde::{Deserialize, Serialize};

/// Size bounds for the exponential routines.
///
/// Every exact search checks its bound up front and returns
/// [`Error::BoundExceeded`](crate::Error::BoundExceeded) instead of running
/// unbounded or degrading to an approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Edge bound for the `lambda`/`mu` and `nu_k` branch and bound.
    pub solver_edges: usize,
    /// Edge bound for full enumeration of optimal disjoint pairs.
    pub enumeration_edges: usize,
    /// Edge bound for the new-edge check, which enumerates pairs and re-solves
    /// once per non-edge.
    pub new_edge_edges: usize,
    /// Vertex bound for exact Hamiltonian path search.
    pub hamiltonian_vertices: usize,
    /// Edge bound for the exhaustive matching oracle.
    pub brute_force_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            solver_edges: 40,
            enumeration_edges: 20,
            new_edge_edges: 16,
            hamiltonian_vertices: 20,
            brute_force_edges: 24,
        }
    }
}

impl Limits {
    pub const ENV_SOLVER_EDGES: &'static str = "MATCHCOVER_SOLVER_EDGES";
    pub const ENV_ENUMERATION_EDGES: &'static str = "MATCHCOVER_ENUM_EDGES";
    pub const ENV_NEW_EDGE_EDGES: &'static str = "MATCHCOVER_NEW_EDGE_EDGES";

    /// Defaults, overridden by any of the `MATCHCOVER_*_EDGES` environment
    /// variables that parse as an unsigned integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        let read = |key: &str| std::env::var(key).ok().and_then(|v| v.trim().parse().ok());
        if let Some(v) = read(Self::ENV_SOLVER_EDGES) {
            limits.solver_edges = v;
        }
        if let Some(v) = read(Self::ENV_ENUMERATION_EDGES) {
            limits.enumeration_edges = v;
        }
        if let Some(v) = read(Self::ENV_NEW_EDGE_EDGES) {
            limits.new_edge_edges = v;
        }
        limits
    }

    pub(crate) fn check(what: &'static str, limit: usize, actual: usize) -> crate::Result<()> {
        if actual > limit {
            Err(crate::Error::BoundExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
