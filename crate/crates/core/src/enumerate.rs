//! All graphs of a given order up to isomorphism.
//!
//! Level `n` is built from level `n - 1` by adding a vertex with every
//! possible neighbourhood and keeping one canonical form per class.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::graph::{Graph, VertexSet};
use crate::iso::canonical_form;

/// Number of graphs on `n` vertices up to isomorphism, `n = 0..=9`.
pub const KNOWN_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

/// Canonical graphs on `n + 1` vertices obtained by extending `level`.
pub fn extend(level: &[Graph]) -> Vec<Graph> {
    let found: BTreeSet<Graph> = level
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.order();
            (0u64..1 << n).map(move |nbrs| {
                let mut h = g.disjoint_union(&Graph::new(1).unwrap()).unwrap();
                for w in VertexSet::from_bits(nbrs).iter() {
                    h.add_edge(n, w).unwrap();
                }
                canonical_form(&h)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_iter().collect()
}

/// `levels[n]` holds the canonical graphs on `n` vertices, sorted.
pub fn graphs_up_to(n_max: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::new(0).unwrap()]];
    for _ in 0..n_max {
        let next = extend(levels.last().unwrap());
        levels.push(next);
    }
    levels
}

pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    graphs_up_to(n).pop().unwrap()
}
