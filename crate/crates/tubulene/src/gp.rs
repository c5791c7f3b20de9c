//! The Graovac-Pisanski index by two independent routes.
//!
//! By definition the index is `|V| / (2|Aut|)` times the total displacement
//! `sum_u sum_α d(u, α(u))`; equivalently it is `|V| * sum_i W(V_i)/|V_i|`
//! over the orbits `V_i` of the natural action. Both routes are kept as
//! permanent library surface so they can cross-verify each other on demand.
//! Results are exact rationals: on tubulenes the value is an integer, but
//! that is asserted by callers, never assumed here.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::symmetry::{Automorphism, OrbitPartition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GpError {
    #[error("automorphism list is empty")]
    EmptyGroup,
    #[error("automorphism image length {got} does not match vertex count {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("orbit list is not a partition of the vertex set")]
    NotAPartition,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `|V| / (2|Aut|) * sum_u sum_α d(u, α(u))`, exactly.
///
/// One BFS row per vertex is reused across all automorphisms, so the cost
/// is `O(|V| * (|E| + |Aut|))`.
pub fn gp_by_definition(g: &Graph, auts: &[Automorphism]) -> Result<BigRational, GpError> {
    if auts.is_empty() {
        return Err(GpError::EmptyGroup);
    }
    let n = g.vertex_count();
    if let Some(bad) = auts.iter().find(|a| a.len() != n) {
        return Err(GpError::LengthMismatch {
            got: bad.len(),
            expected: n,
        });
    }
    let mut displacement = 0u64;
    for u in 0..n {
        let row = g.bfs_distances(u)?;
        displacement += auts.iter().map(|a| row.dist[a.apply(u)]).sum::<u64>();
    }
    let scale = BigRational::new(BigInt::from(n), BigInt::from(2 * auts.len()));
    Ok(scale * BigRational::from_integer(BigInt::from(displacement)))
}

/// `|V| * sum_i W(V_i) / |V_i|` over an orbit partition, exactly.
pub fn gp_by_orbits(g: &Graph, partition: &OrbitPartition) -> Result<BigRational, GpError> {
    if !partition.is_partition_of(g.vertex_count()) {
        return Err(GpError::NotAPartition);
    }
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for orbit in partition.orbits() {
        let w = g.wiener_of_subset(orbit)?;
        sum += BigRational::new(BigInt::from(w), BigInt::from(orbit.len()));
    }
    Ok(BigRational::from_integer(BigInt::from(g.vertex_count())) * sum)
}

/// `W'(G)`: the sum of the Wiener indices of the orbits.
pub fn w_prime(g: &Graph, partition: &OrbitPartition) -> Result<u64, GpError> {
    if !partition.is_partition_of(g.vertex_count()) {
        return Err(GpError::NotAPartition);
    }
    let mut total = 0u64;
    for orbit in partition.orbits() {
        total += g.wiener_of_subset(orbit)?;
    }
    Ok(total)
}
