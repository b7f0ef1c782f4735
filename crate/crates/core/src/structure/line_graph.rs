//! Line graphs of triangle-free graphs and their roots.
//!
//! When the root is triangle-free every clique of the line graph is a star,
//! so the maximal cliques with at least one edge are exactly the stars at
//! root vertices of degree two or more. Recognition therefore takes those
//! cliques as the Krausz partition and checks it, with no search.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Edge cliques of a graph: each edge in exactly one, each vertex in at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrauszPartition {
    pub cliques: Vec<VertexSet>,
}

/// A root together with the host vertex to root edge map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGraph {
    pub root: Graph,
    /// `edge_map[v]` is the root edge `(a, b)`, `a < b`, for host vertex `v`.
    pub edge_map: Vec<(usize, usize)>,
}

impl RootGraph {
    /// The map is a bijection onto the root's edges and `L(root) = host` under it.
    pub fn verify(&self, host: &Graph) -> bool {
        let n = host.order();
        if self.edge_map.len() != n || self.root.edge_count() != n {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &self.edge_map {
            if a >= b || !self.root.has_edge(a, b) || !seen.insert((a, b)) {
                return false;
            }
        }
        (0..n).all(|u| {
            (0..u).all(|v| {
                let (a, b) = self.edge_map[u];
                let (c, d) = self.edge_map[v];
                let share = a == c || a == d || b == c || b == d;
                share == host.has_edge(u, v)
            })
        })
    }
}

/// Least triangle, or `None` if `g` is triangle-free.
pub fn is_triangle_free(g: &Graph) -> Option<VertexSet> {
    for u in 0..g.order() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some([u, v, w].into_iter().collect());
            }
        }
    }
    None
}

/// Vertices are the edges of `h` in lexicographic order.
pub fn line_graph(h: &Graph) -> Result<Graph> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(Error::Precondition(
            "line graph of an edgeless graph".into(),
        ));
    }
    let mut l = Graph::new(edges.len())?;
    for i in 0..edges.len() {
        for j in 0..i {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j)?;
            }
        }
    }
    Ok(l)
}

/// All maximal cliques of `g`, ascending by bit pattern.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn bron_kerbosch(
        g: &Graph,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| g.neighbors(u).intersection(p).len())
            .unwrap();
        let (mut p, mut x) = (p, x);
        for v in p.difference(g.neighbors(pivot)).iter() {
            let nv = g.neighbors(v);
            bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.order() > 0 {
        bron_kerbosch(
            g,
            VertexSet::EMPTY,
            g.vertices(),
            VertexSet::EMPTY,
            &mut out,
        );
    }
    out.sort();
    out
}

/// The Krausz partition whose intersection graph is triangle-free, if any.
pub fn triangle_free_krausz_partition(g: &Graph) -> Option<KrauszPartition> {
    let cliques: Vec<VertexSet> = maximal_cliques(g)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let covered: usize = cliques.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
    // maximal cliques cover every edge, so equality means no edge is covered twice
    if covered != g.edge_count() {
        return None;
    }
    let mut count = vec![0u8; g.order()];
    for c in &cliques {
        for v in c.iter() {
            count[v] += 1;
            if count[v] > 2 {
                return None;
            }
        }
    }
    let t = cliques.len();
    for i in 0..t {
        for j in i + 1..t {
            if cliques[i].is_disjoint(cliques[j]) {
                continue;
            }
            for k in j + 1..t {
                if !cliques[i].is_disjoint(cliques[k]) && !cliques[j].is_disjoint(cliques[k]) {
                    return None;
                }
            }
        }
    }
    Some(KrauszPartition { cliques })
}

/// A triangle-free root of `g`, or `None` if `g` is not the line graph of a
/// triangle-free graph. Isolated vertices of `g` become disjoint root edges.
pub fn recognize_line_graph_triangle_free(g: &Graph) -> Option<RootGraph> {
    let partition = triangle_free_krausz_partition(g)?;
    let n = g.order();
    let mut next = partition.cliques.len();
    let mut edge_map = Vec::with_capacity(n);
    for v in 0..n {
        let mut owners = partition
            .cliques
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(v))
            .map(|(i, _)| i);
        let edge = match (owners.next(), owners.next()) {
            (Some(a), Some(b)) => (a, b),
            (Some(a), None) => {
                next += 1;
                (a, next - 1)
            }
            _ => {
                next += 2;
                (next - 2, next - 1)
            }
        };
        edge_map.push(edge);
    }
    let mut root = Graph::new(next).ok()?;
    for &(a, b) in &edge_map {
        root.add_edge(a, b).ok()?;
    }
    Some(RootGraph { root, edge_map })
}

/// Two-colouring by search; `None` if `g` has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].unwrap();
            for w in g.neighbors(u).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        stack.push(w);
                    }
                    Some(sw) if sw == su => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Line graph of a bipartite graph. Roots of connected line graphs are unique
/// except for the triangle, whose triangle-free root is the claw, so checking
/// the triangle-free root suffices.
pub fn is_line_graph_of_bipartite(g: &Graph) -> bool {
    recognize_line_graph_triangle_free(g).is_some_and(|r| bipartition(&r.root).is_some())
}
