//! Isomorphism testing and canonical labelling for small graphs.
//!
//! [`are_isomorphic`] is a plain permutation search with degree pruning.
//! [`canonical_form`] refines an ordered partition by neighbour counts and
//! branches on the first non-singleton cell, keeping the lexicographically
//! least relabelled adjacency matrix. Two vertices that are twins can be
//! swapped by an automorphism fixing everything else, so only one vertex per
//! twin class is tried at each branching cell.

use crate::graph::{Graph, VertexSet};

/// Brute-force isomorphism test. Intended for `n <= 10`.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let degree_a = da.clone();
    let degree_b = db.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = Vec::with_capacity(n);
    fn search(
        a: &Graph,
        b: &Graph,
        da: &[usize],
        db: &[usize],
        map: &mut Vec<usize>,
        used: VertexSet,
    ) -> bool {
        let i = map.len();
        if i == a.order() {
            return true;
        }
        for v in b.vertices().difference(used).iter() {
            if db[v] != da[i] {
                continue;
            }
            if map
                .iter()
                .enumerate()
                .all(|(j, &w)| a.has_edge(i, j) == b.has_edge(v, w))
            {
                map.push(v);
                if search(a, b, da, db, map, used.with(v)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    search(a, b, &degree_a, &degree_b, &mut map, VertexSet::EMPTY)
}

/// Canonical relabelling: `labels[v]` is the new name of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let twin_class = twin_classes(g);
    let cells = refine(g, vec![g.vertices()]);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &twin_class, &mut best);
    best.expect("search reaches at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
}

/// `class[v]` is the least vertex in the twin class of `v`.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut class: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if class[u] == u {
                let outside = g.vertices().without(u).without(v);
                if g.neighbors(u).intersection(outside) == g.neighbors(v).intersection(outside) {
                    class[v] = u;
                    break;
                }
            }
        }
    }
    class
}

/// Splits cells by neighbour counts into every cell until stable. The new
/// cell order depends only on old cell order and counts, so it commutes with
/// relabelling.
fn refine(g: &Graph, mut cells: Vec<VertexSet>) -> Vec<VertexSet> {
    loop {
        let mut next = Vec::with_capacity(cells.len());
        for &cell in &cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|v| {
                    let key = cells
                        .iter()
                        .map(|&c| g.neighbors(v).intersection(c).len())
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut current = VertexSet::EMPTY;
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(current);
                    current = VertexSet::EMPTY;
                }
                current.insert(keyed[i].1);
            }
            next.push(current);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(
    g: &Graph,
    cells: Vec<VertexSet>,
    twin_class: &[usize],
    best: &mut Option<(Vec<u64>, Vec<usize>)>,
) {
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let mut labels = vec![0; g.order()];
        for (i, c) in cells.iter().enumerate() {
            labels[c.first().unwrap()] = i;
        }
        let key = g.permute(&labels).rows();
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            *best = Some((key, labels));
        }
        return;
    };
    let cell = cells[pos];
    let mut tried_classes = VertexSet::EMPTY;
    for v in cell.iter() {
        if tried_classes.contains(twin_class[v]) {
            continue;
        }
        tried_classes.insert(twin_class[v]);
        let mut split = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..pos]);
        split.push(VertexSet::singleton(v));
        split.push(cell.without(v));
        split.extend_from_slice(&cells[pos + 1..]);
        search(g, refine(g, split), twin_class, best);
    }
}
