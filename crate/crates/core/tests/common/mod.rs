#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uncluttered::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random graph made triangle-free by deleting an edge of each triangle found.
pub fn random_triangle_free(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    while let Some(t) = uncluttered::structure::is_triangle_free(&g) {
        let v = t.to_vec();
        let (a, b) = match rng.gen_range(0..3) {
            0 => (v[0], v[1]),
            1 => (v[0], v[2]),
            _ => (v[1], v[2]),
        };
        g.remove_edge(a, b).unwrap();
    }
    g
}

/// Vertex-disjoint union of cliques `y[i]` and stable sets `z[i]` wired as a
/// candelabrum; returns the graph and the parts.
pub fn candelabrum(ys: &[usize], zs: &[usize]) -> (Graph, Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n: usize = ys.iter().sum::<usize>() + zs.iter().sum::<usize>();
    let mut g = Graph::new(n).unwrap();
    let mut next = 0;
    let mut take = |k: usize| {
        let part: Vec<usize> = (next..next + k).collect();
        next += k;
        part
    };
    let y: Vec<Vec<usize>> = ys.iter().map(|&k| take(k)).collect();
    let z: Vec<Vec<usize>> = zs.iter().map(|&k| take(k)).collect();
    for i in 0..y.len() {
        for (a, &u) in y[i].iter().enumerate() {
            for &v in &y[i][a + 1..] {
                g.add_edge(u, v).unwrap();
            }
            for &w in &z[i] {
                g.add_edge(u, w).unwrap();
            }
        }
        for j in i + 1..z.len() {
            for &u in &z[i] {
                for &w in &z[j] {
                    g.add_edge(u, w).unwrap();
                }
            }
        }
    }
    (g, y, z)
}
