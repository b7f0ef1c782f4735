//! Exact clique and chromatic numbers for small graphs, Vizing edge
//! colouring, and the constructive colouring of uncluttered graphs with at
//! most `2 * omega` colours.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::to_graph6;
use crate::modular::{find_nonadjacent_twins, find_simplicial_vertex};
use crate::pattern::is_uncluttered;
use crate::structure::{is_triangle_free, line_graph, recognize_line_graph_triangle_free};

/// Largest order accepted by [`chromatic_number_exact`].
pub const EXACT_CHROMATIC_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
    pub omega: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("colourings serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    /// Edges in lexicographic order.
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl EdgeColoring {
    pub fn is_proper(&self, h: &Graph) -> bool {
        if self.edges != h.edges() || self.colors.len() != self.edges.len() {
            return false;
        }
        (0..self.edges.len()).all(|i| {
            (0..i).all(|j| {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                let share = a == c || a == d || b == c || b == d;
                !share || self.colors[i] != self.colors[j]
            })
        })
    }
}

/// Greedy colouring of `p` in ascending vertex order; returns vertices with
/// their colour number (1-based), sorted by colour.
fn greedy_bound(g: &Graph, p: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut left = p;
    let mut color = 0;
    while !left.is_empty() {
        color += 1;
        let mut avail = left;
        while let Some(v) = avail.first() {
            out.push((v, color));
            left.remove(v);
            avail = avail.without(v).difference(g.neighbors(v));
        }
    }
    out
}

pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, p: VertexSet, best: &mut usize) {
        let mut p = p;
        let order = greedy_bound(g, p);
        for &(v, bound) in order.iter().rev() {
            if size + bound <= *best {
                return;
            }
            let next = p.intersection(g.neighbors(v));
            if next.is_empty() {
                *best = (*best).max(size + 1);
            } else {
                expand(g, size + 1, next, best);
            }
            p.remove(v);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertices(), &mut best);
    best
}

fn k_colorable(g: &Graph, k: usize, colors: &mut [Option<usize>], used: usize) -> bool {
    // most saturated uncoloured vertex, ties by degree then index
    let mut pick: Option<(usize, usize, usize)> = None;
    for v in 0..g.order() {
        if colors[v].is_some() {
            continue;
        }
        let mut seen = 0u64;
        for w in g.neighbors(v).iter() {
            if let Some(c) = colors[w] {
                seen |= 1 << c;
            }
        }
        let sat = seen.count_ones() as usize;
        if sat >= k {
            return false;
        }
        let key = (sat, g.degree(v));
        if pick.is_none_or(|(s, d, _)| key > (s, d)) {
            pick = Some((key.0, key.1, v));
        }
    }
    let Some((_, _, v)) = pick else {
        return true;
    };
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|w| colors[w] == Some(c)) {
            continue;
        }
        colors[v] = Some(c);
        if k_colorable(g, k, colors, used.max(c + 1)) {
            return true;
        }
        colors[v] = None;
    }
    false
}

/// Exact chromatic number, for graphs with at most
/// [`EXACT_CHROMATIC_LIMIT`] vertices.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > EXACT_CHROMATIC_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: EXACT_CHROMATIC_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let upper = greedy_bound(g, g.vertices())
        .iter()
        .map(|&(_, c)| c)
        .max()
        .unwrap_or(0);
    let mut k = clique_number(g);
    while k < upper {
        if k_colorable(g, k, &mut vec![None; n], 0) {
            return Ok(k);
        }
        k += 1;
    }
    Ok(upper)
}

/// Proper edge colouring with at most `max_degree + 1` colours, by
/// Misra and Gries' fan rotation and alternating path inversion.
pub fn vizing_edge_color(h: &Graph) -> EdgeColoring {
    let n = h.order();
    let palette = h.max_degree() + 1;
    let mut col: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    let free = |col: &Vec<Vec<Option<usize>>>, x: usize, c: usize| {
        h.neighbors(x).iter().all(|y| col[x][y] != Some(c))
    };
    let set = |col: &mut Vec<Vec<Option<usize>>>, a: usize, b: usize, c: Option<usize>| {
        col[a][b] = c;
        col[b][a] = c;
    };
    let edges = h.edges();
    for &(u, v) in &edges {
        if let Some(c) = (0..palette).find(|&c| free(&col, u, c) && free(&col, v, c)) {
            set(&mut col, u, v, Some(c));
            continue;
        }
        // maximal fan at u starting with v
        let mut fan = vec![v];
        let mut in_fan = VertexSet::singleton(v);
        loop {
            let last = *fan.last().unwrap();
            let next = h
                .neighbors(u)
                .iter()
                .find(|&x| !in_fan.contains(x) && col[u][x].is_some_and(|c| free(&col, last, c)));
            match next {
                Some(x) => {
                    fan.push(x);
                    in_fan.insert(x);
                }
                None => break,
            }
        }
        let c = (0..palette)
            .find(|&c| free(&col, u, c))
            .expect("u has a free colour");
        let d = (0..palette)
            .find(|&d| free(&col, *fan.last().unwrap(), d))
            .expect("fan end has a free colour");
        if c != d {
            // invert the c/d path starting at u; it starts with a d edge
            let mut path = vec![u];
            let mut want = d;
            let mut at = u;
            while let Some(y) = h.neighbors(at).iter().find(|&y| col[at][y] == Some(want)) {
                path.push(y);
                at = y;
                want = if want == c { d } else { c };
            }
            for w in path.windows(2) {
                let old = col[w[0]][w[1]].unwrap();
                set(&mut col, w[0], w[1], Some(if old == c { d } else { c }));
            }
        }
        // longest prefix that is still a fan, then first member with d free
        let mut j = None;
        for i in 0..fan.len() {
            if i > 0 && !col[u][fan[i]].is_some_and(|x| free(&col, fan[i - 1], x)) {
                break;
            }
            if free(&col, fan[i], d) {
                j = Some(i);
                break;
            }
        }
        let j = j.expect("a fan member with d free exists after inversion");
        for i in 0..j {
            let next = col[u][fan[i + 1]];
            set(&mut col, u, fan[i], next);
        }
        set(&mut col, u, fan[j], Some(d));
    }
    let colors: Vec<usize> = edges.iter().map(|&(a, b)| col[a][b].unwrap()).collect();
    let num_colors = colors.iter().max().map_or(0, |&m| m + 1);
    EdgeColoring {
        edges,
        colors,
        num_colors,
    }
}

/// Colours `edges` of `h` as vertices of the complement of its line graph.
/// The ends of a greedy maximal matching form a vertex cover, which is then
/// pruned to a minimal one; each edge takes the index of its least covering
/// endpoint.
fn cover_colors(h: &Graph, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut cover = VertexSet::EMPTY;
    for (a, b) in h.edges() {
        if !cover.contains(a) && !cover.contains(b) {
            cover = cover.with(a).with(b);
        }
    }
    for v in cover.iter() {
        if h.neighbors(v).is_subset(cover.without(v)) {
            cover.remove(v);
        }
    }
    let members = cover.to_vec();
    edges
        .iter()
        .map(|&(a, b)| {
            let end = if cover.contains(a.min(b)) {
                a.min(b)
            } else {
                a.max(b)
            };
            members.binary_search(&end).expect("cover meets every edge")
        })
        .collect()
}

/// Colouring of `complement(line_graph(h))` with at most twice the size of a
/// maximum matching of `h`. Vertex `i` of the target is the `i`-th edge of `h`
/// in lexicographic order.
pub fn cover_color_complement_line(h: &Graph) -> Result<Coloring> {
    if let Some(t) = is_triangle_free(h) {
        return Err(Error::Precondition(format!("root has a triangle {:?}", t)));
    }
    let target = line_graph(h)?.complement();
    let colors = normalize(cover_colors(h, &h.edges()));
    Ok(finish(colors, clique_number(&target)))
}

fn normalize(colors: Vec<usize>) -> Vec<usize> {
    let mut used: Vec<usize> = colors.clone();
    used.sort_unstable();
    used.dedup();
    colors
        .iter()
        .map(|c| used.binary_search(c).unwrap())
        .collect()
}

fn finish(colors: Vec<usize>, omega: usize) -> Coloring {
    let num_colors = colors.iter().max().map_or(0, |&m| m + 1);
    Coloring {
        colors,
        num_colors,
        omega,
    }
}

/// Proper colouring of an uncluttered graph with at most `2 * omega`
/// colours, following the induction on the number of vertices.
pub fn color_uncluttered(g: &Graph) -> Result<Coloring> {
    if let Some(w) = is_uncluttered(g) {
        return Err(Error::NotUncluttered(w));
    }
    let colors = normalize(color_rec(g)?);
    Ok(finish(colors, clique_number(g)))
}

fn place(colors: &mut [usize], part: VertexSet, sub: &[usize], offset: usize) {
    for (v, &c) in part.iter().zip(sub) {
        colors[v] = c + offset;
    }
}

fn color_rec(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n <= 1 {
        return Ok(vec![0; n]);
    }
    let comps = g.components();
    if comps.len() >= 2 {
        let mut colors = vec![0; n];
        for &c in &comps {
            place(&mut colors, c, &color_rec(&g.induced_unchecked(c))?, 0);
        }
        return Ok(colors);
    }
    let anti = g.anticomponents();
    if anti.len() >= 2 {
        let mut colors = vec![0; n];
        let mut offset = 0;
        for &c in &anti {
            let sub = normalize(color_rec(&g.induced_unchecked(c))?);
            place(&mut colors, c, &sub, offset);
            offset += sub.iter().max().map_or(0, |&m| m + 1);
        }
        return Ok(colors);
    }
    if let Some(v) = find_simplicial_vertex(g) {
        let rest = g.vertices().without(v);
        let mut colors = vec![0; n];
        place(
            &mut colors,
            rest,
            &color_rec(&g.induced_unchecked(rest))?,
            0,
        );
        let taken: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).unwrap();
        return Ok(colors);
    }
    if let Some(t) = find_nonadjacent_twins(g) {
        let rest = g.vertices().without(t.u);
        let mut colors = vec![0; n];
        place(
            &mut colors,
            rest,
            &color_rec(&g.induced_unchecked(rest))?,
            0,
        );
        colors[t.u] = colors[t.v];
        return Ok(colors);
    }
    if let Some(r) = recognize_line_graph_triangle_free(g) {
        let ec = vizing_edge_color(&r.root);
        return Ok(r
            .edge_map
            .iter()
            .map(|e| ec.colors[ec.edges.binary_search(e).unwrap()])
            .collect());
    }
    if let Some(r) = recognize_line_graph_triangle_free(&g.complement()) {
        return Ok(cover_colors(&r.root, &r.edge_map));
    }
    Err(Error::TheoremViolation {
        graph6: to_graph6(g),
        reason: "no colouring case applies".into(),
    })
}
