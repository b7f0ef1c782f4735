//! Homogeneous sets, twins and (anti)simplicial vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A nontrivial homogeneous set together with the split of the outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSet {
    pub members: VertexSet,
    pub complete_side: VertexSet,
    pub anticomplete_side: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
    pub simplicial: bool,
}

/// Every vertex outside `x` is complete or anticomplete to `x`.
pub fn is_homogeneous(g: &Graph, x: VertexSet) -> bool {
    g.vertices().difference(x).iter().all(|w| {
        let seen = g.neighbors(w).intersection(x);
        seen.is_empty() || seen == x
    })
}

/// Inclusion-minimal homogeneous set containing `u` and `v`.
pub fn smallest_module_containing(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(module_closure(g, VertexSet::singleton(u).with(v)))
}

pub(crate) fn module_closure(g: &Graph, seed: VertexSet) -> VertexSet {
    let mut x = seed;
    loop {
        let splitters: VertexSet = g
            .vertices()
            .difference(x)
            .iter()
            .filter(|&w| {
                let seen = g.neighbors(w).intersection(x);
                !seen.is_empty() && seen != x
            })
            .collect();
        if splitters.is_empty() {
            return x;
        }
        x = x.union(splitters);
    }
}

/// First nontrivial homogeneous set found by closing pairs in lexicographic
/// order; `None` iff `g` is prime. Graphs on at most two vertices are prime.
pub fn find_nontrivial_homogeneous_set(g: &Graph) -> Option<HomogeneousSet> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let members = module_closure(g, VertexSet::singleton(u).with(v));
            if members.len() < n {
                let complete_side = g.common_neighbors(members);
                let anticomplete_side = g.vertices().difference(members).difference(complete_side);
                return Some(HomogeneousSet {
                    members,
                    complete_side,
                    anticomplete_side,
                });
            }
        }
    }
    None
}

pub fn is_prime(g: &Graph) -> bool {
    find_nontrivial_homogeneous_set(g).is_none()
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    g.is_clique(g.neighbors(v))
}

pub fn is_antisimplicial(g: &Graph, v: usize) -> bool {
    g.is_stable(g.non_neighbors(v))
}

pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let outside = g.vertices().without(u).without(v);
    u != v && g.neighbors(u).intersection(outside) == g.neighbors(v).intersection(outside)
}

fn twin_pair(g: &Graph, u: usize, v: usize) -> TwinPair {
    TwinPair {
        u,
        v,
        adjacent: g.has_edge(u, v),
        simplicial: is_simplicial(g, u),
    }
}

/// Least pair `u < v` of adjacent twins that are simplicial.
pub fn find_adjacent_simplicial_twins(g: &Graph) -> Option<TwinPair> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v) && are_twins(g, u, v) && is_simplicial(g, u))
        .map(|(u, v)| twin_pair(g, u, v))
}

pub fn find_nonadjacent_twins(g: &Graph) -> Option<TwinPair> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v) && are_twins(g, u, v))
        .map(|(u, v)| twin_pair(g, u, v))
}

pub fn find_simplicial_vertex(g: &Graph) -> Option<usize> {
    (0..g.order()).find(|&v| is_simplicial(g, v))
}
