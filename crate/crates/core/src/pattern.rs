//! Named small patterns and induced-subgraph search.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedPattern {
    Fork,
    Antifork,
    Claw,
    Anticlaw,
    Diamond,
    Bull,
    Net,
    Antinet,
    #[serde(rename = "P4")]
    P4,
    Triangle,
}

impl NamedPattern {
    pub const ALL: [NamedPattern; 10] = [
        NamedPattern::Fork,
        NamedPattern::Antifork,
        NamedPattern::Claw,
        NamedPattern::Anticlaw,
        NamedPattern::Diamond,
        NamedPattern::Bull,
        NamedPattern::Net,
        NamedPattern::Antinet,
        NamedPattern::P4,
        NamedPattern::Triangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedPattern::Fork => "fork",
            NamedPattern::Antifork => "antifork",
            NamedPattern::Claw => "claw",
            NamedPattern::Anticlaw => "anticlaw",
            NamedPattern::Diamond => "diamond",
            NamedPattern::Bull => "bull",
            NamedPattern::Net => "net",
            NamedPattern::Antinet => "antinet",
            NamedPattern::P4 => "P4",
            NamedPattern::Triangle => "triangle",
        }
    }

    /// Edge list of the canonical labelled graph.
    fn edges(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            // path 0-1-2-3, vertex 4 on the second path vertex
            NamedPattern::Fork => (5, &[(0, 1), (1, 2), (2, 3), (1, 4)]),
            // path 0-1-2-3, vertex 4 on the first three path vertices
            NamedPattern::Antifork => (5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4)]),
            NamedPattern::Claw => (4, &[(0, 1), (0, 2), (0, 3)]),
            NamedPattern::Anticlaw => (4, &[(0, 1), (0, 2), (1, 2)]),
            // K4 minus 23; 0 and 1 have degree three
            NamedPattern::Diamond => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            // path 0-1-2-3, vertex 4 on the two middle vertices
            NamedPattern::Bull => (5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
            // triangle 0,1,2 with pendants 3,4,5
            NamedPattern::Net => (6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
            // triangle 0,1,2; vertex 3+i sees the two triangle vertices other than i
            NamedPattern::Antinet => (
                6,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (0, 4),
                    (2, 4),
                    (0, 5),
                    (1, 5),
                ],
            ),
            NamedPattern::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
            NamedPattern::Triangle => (3, &[(0, 1), (0, 2), (1, 2)]),
        }
    }
}

impl fmt::Display for NamedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        NamedPattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownPattern(s.to_string()))
    }
}

pub fn pattern(name: NamedPattern) -> Graph {
    let (n, edges) = name.edges();
    Graph::from_edges(n, edges).expect("pattern tables are well formed")
}

/// Ordered embedding of a pattern: pattern vertex `i` maps to `embedding[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternWitness {
    pub name: Option<NamedPattern>,
    pub pattern: Graph,
    pub embedding: Vec<usize>,
}

impl PatternWitness {
    pub fn pattern_name(&self) -> String {
        self.name
            .map(|p| p.name().to_string())
            .unwrap_or_else(|| crate::io::to_graph6(&self.pattern))
    }

    /// The embedding is injective and preserves both edges and non-edges.
    pub fn verify(&self, host: &Graph) -> bool {
        let k = self.pattern.order();
        if self.embedding.len() != k || self.embedding.iter().any(|&v| v >= host.order()) {
            return false;
        }
        let image: VertexSet = self.embedding.iter().copied().collect();
        if image.len() != k {
            return false;
        }
        (0..k).all(|i| {
            (0..i).all(|j| {
                self.pattern.has_edge(i, j) == host.has_edge(self.embedding[i], self.embedding[j])
            })
        })
    }
}

/// Lexicographically least induced embedding of `pattern` in `host`.
pub fn find_induced(pattern: &Graph, host: &Graph) -> Option<PatternWitness> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let mut embedding = Vec::with_capacity(k);
    extend(pattern, host, &mut embedding, VertexSet::EMPTY).then(|| PatternWitness {
        name: None,
        pattern: pattern.clone(),
        embedding,
    })
}

pub fn find_named(name: NamedPattern, host: &Graph) -> Option<PatternWitness> {
    find_induced(&pattern(name), host).map(|w| PatternWitness {
        name: Some(name),
        ..w
    })
}

fn extend(pattern: &Graph, host: &Graph, embedding: &mut Vec<usize>, used: VertexSet) -> bool {
    let i = embedding.len();
    if i == pattern.order() {
        return true;
    }
    let need_deg = pattern.degree(i);
    let need_non = pattern.order() - 1 - need_deg;
    for v in host.vertices().difference(used).iter() {
        if host.degree(v) < need_deg || host.order() - 1 - host.degree(v) < need_non {
            continue;
        }
        let consistent = embedding
            .iter()
            .enumerate()
            .all(|(j, &w)| pattern.has_edge(i, j) == host.has_edge(v, w));
        if consistent {
            embedding.push(v);
            if extend(pattern, host, embedding, used.with(v)) {
                return true;
            }
            embedding.pop();
        }
    }
    false
}

/// Which of fork/antifork (if either) a five-vertex graph is.
fn fork_or_antifork(g: &Graph) -> Option<NamedPattern> {
    fn is_fork(g: &Graph) -> bool {
        if g.edge_count() != 4 || !g.is_connected() {
            return false;
        }
        // the only tree on five vertices with degree sequence 3,2,1,1,1
        let mut degs: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        degs == [1, 1, 1, 2, 3]
    }
    if is_fork(g) {
        Some(NamedPattern::Fork)
    } else if is_fork(&g.complement()) {
        Some(NamedPattern::Antifork)
    } else {
        None
    }
}

/// `None` iff `g` has no induced fork or antifork; otherwise a witness on the
/// first offending 5-subset in lexicographic order.
pub fn is_uncluttered(g: &Graph) -> Option<PatternWitness> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    let mut idx = [0usize, 1, 2, 3, 4];
    loop {
        let s: VertexSet = idx.iter().copied().collect();
        let sub = g.induced_unchecked(s);
        if let Some(name) = fork_or_antifork(&sub) {
            let local = find_named(name, &sub).expect("classified subset embeds its pattern");
            return Some(PatternWitness {
                embedding: local.embedding.iter().map(|&i| idx[i]).collect(),
                ..local
            });
        }
        // next 5-combination of 0..n
        let mut i = 4;
        loop {
            if idx[i] < n - 5 + i {
                idx[i] += 1;
                for j in i + 1..5 {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return None;
            }
            i -= 1;
        }
    }
}
