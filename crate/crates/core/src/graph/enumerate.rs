//! Isomorph-free enumeration of all graphs of a small order.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex, with every
//! possible neighbourhood, to each class representative on `n - 1` vertices,
//! then collapsing duplicates by canonical form.

use std::collections::BTreeMap;

use super::{canonical_graph, Graph, GraphError};
use crate::par::{self, Execution};

pub const ENUM_MAX_ORDER: usize = 8;

fn extend(g: &Graph, mask: u32) -> Graph {
    let n = g.order();
    let mut h = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        h.set_edge(u, v, true);
    }
    for u in 0..n {
        if mask >> u & 1 == 1 {
            h.set_edge(u, n, true);
        }
    }
    h
}

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by canonical form.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
    exec: Execution,
) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyOrder);
    }
    if n > ENUM_MAX_ORDER {
        return Err(GraphError::OrderTooLarge {
            n,
            max: ENUM_MAX_ORDER,
        });
    }
    let mut layer = vec![Graph::empty(1)];
    for k in 1..n {
        let seeds: Vec<(usize, u32)> = (0..layer.len())
            .flat_map(|i| (0..1u32 << k).map(move |m| (i, m)))
            .collect();
        let canon = par::map(&seeds, exec, |&(i, m)| {
            canonical_graph(&extend(&layer[i], m)).expect("order within cap")
        });
        let uniq: BTreeMap<String, Graph> = canon
            .into_iter()
            .map(|g| (super::encode_graph6(&g), g))
            .collect();
        layer = uniq.into_values().collect();
    }
    if connected_only {
        layer.retain(Graph::is_connected);
    }
    Ok(layer)
}
