//! Candelabra and candled graphs.
//!
//! A candelabrum is partitioned into cliques `Y_1..Y_k` and stable sets
//! `Z_1..Z_k`; the `Y_i` are pairwise anticomplete, the `Z_i` pairwise
//! complete, and `Y_i` is complete to `Z_j` exactly when `i = j`. A graph is
//! candled when it contains an induced candelabrum whose base `Z` is complete,
//! and whose remaining vertices are anticomplete, to everything outside it.
//!
//! Recognition seeds on a vertex `y` assumed to lie in `Y_1`. The closed
//! twins of `y` are then exactly `Y_1` (the complete-graph case aside),
//! `N[y] \ Y_1 = Z_1`, and for any `z` in `Z_1` the vertices outside
//! `N[z] ∪ Z_1` are `Y \ Y_1`. That fixes `Y`; the `Y_i` are the components
//! of `G[Y]`, each `Z_i` is the outside neighbourhood of `Y_i`, and the
//! remaining vertices are the rest set. Trying every seed is exact.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandelabrumStructure {
    pub y: Vec<VertexSet>,
    pub z: Vec<VertexSet>,
}

impl CandelabrumStructure {
    pub fn k(&self) -> usize {
        self.y.len()
    }

    pub fn base(&self) -> VertexSet {
        self.z.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s))
    }

    pub fn vertices(&self) -> VertexSet {
        self.y.iter().fold(self.base(), |acc, &s| acc.union(s))
    }

    /// The three defining conditions, evaluated inside `g` (the parts need
    /// not cover `g`).
    pub fn holds_in(&self, g: &Graph) -> bool {
        let k = self.y.len();
        if k == 0 || self.z.len() != k {
            return false;
        }
        let parts = self.y.iter().chain(&self.z);
        let mut seen = VertexSet::EMPTY;
        for &p in parts {
            if p.is_empty() || !p.is_subset(g.vertices()) || !p.is_disjoint(seen) {
                return false;
            }
            seen = seen.union(p);
        }
        for i in 0..k {
            if !g.is_clique(self.y[i]) || !g.is_stable(self.z[i]) {
                return false;
            }
            for j in 0..k {
                let yz = if i == j {
                    g.complete_to(self.y[i], self.z[j])
                } else {
                    g.anticomplete_to(self.y[i], self.z[j])
                };
                if !yz {
                    return false;
                }
                if i < j
                    && !(g.anticomplete_to(self.y[i], self.y[j])
                        && g.complete_to(self.z[i], self.z[j]))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// A candelabrum on `V(G) \ rest` with base complete and the rest of the
/// candelabrum anticomplete to `rest`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandledDecomposition {
    pub candelabrum: CandelabrumStructure,
    pub rest: VertexSet,
}

impl CandledDecomposition {
    pub fn verify(&self, g: &Graph) -> bool {
        let h = self.candelabrum.vertices();
        let base = self.candelabrum.base();
        h.is_disjoint(self.rest)
            && h.union(self.rest) == g.vertices()
            && self.candelabrum.holds_in(g)
            && g.complete_to(base, self.rest)
            && g.anticomplete_to(h.difference(base), self.rest)
    }
}

/// Checks whether `(y, z)` is a candelabrum structure of the whole of `g`.
/// Errors if the parts are not disjoint, nonempty, equal in number and
/// covering `V(g)`.
pub fn check_candelabrum(g: &Graph, y: &[VertexSet], z: &[VertexSet]) -> Result<bool> {
    if y.is_empty() || y.len() != z.len() {
        return Err(Error::MalformedPartition(format!(
            "need k >= 1 cliques and as many stable sets, got {} and {}",
            y.len(),
            z.len()
        )));
    }
    let mut seen = VertexSet::EMPTY;
    for &p in y.iter().chain(z) {
        g.check_set(p)?;
        if p.is_empty() {
            return Err(Error::MalformedPartition("empty part".into()));
        }
        if !p.is_disjoint(seen) {
            return Err(Error::MalformedPartition(format!(
                "part {p:?} overlaps another"
            )));
        }
        seen = seen.union(p);
    }
    if seen != g.vertices() {
        return Err(Error::MalformedPartition(format!(
            "parts miss vertices {:?}",
            g.vertices().difference(seen)
        )));
    }
    Ok(CandelabrumStructure {
        y: y.to_vec(),
        z: z.to_vec(),
    }
    .holds_in(g))
}

/// The unique structure with `seed` in `Y_1`, if there is one.
fn from_seed(g: &Graph, seed: usize) -> Option<CandledDecomposition> {
    let closed = g.neighbors(seed).with(seed);
    let twins: VertexSet = closed
        .iter()
        .filter(|&v| g.neighbors(v).with(v) == closed)
        .collect();
    let (y1, z1) = if twins == closed {
        // N[seed] is a clique module; only a complete graph can still be a
        // candelabrum, with k = 1 and a single base vertex
        if closed != g.vertices() || closed.len() < 2 {
            return None;
        }
        let z = closed.last().filter(|&z| z != seed).or(closed.first())?;
        (closed.without(z), VertexSet::singleton(z))
    } else {
        (twins, closed.difference(twins))
    };
    let z0 = z1.first()?;
    let other_y = g
        .vertices()
        .difference(g.neighbors(z0).with(z0))
        .difference(z1);
    let y_all = y1.union(other_y);
    let ys = g.components_within(y_all);
    let zs: Vec<VertexSet> = ys
        .iter()
        .map(|&yi| {
            let mut nb = VertexSet::EMPTY;
            for v in yi.iter() {
                nb = nb.union(g.neighbors(v));
            }
            nb.difference(y_all)
        })
        .collect();
    let candelabrum = CandelabrumStructure { y: ys, z: zs };
    let rest = g.vertices().difference(candelabrum.vertices());
    let d = CandledDecomposition { candelabrum, rest };
    d.verify(g).then_some(d)
}

/// One candelabrum structure of `g`, or `None`.
pub fn recognize_candelabrum(g: &Graph) -> Option<CandelabrumStructure> {
    (0..g.order())
        .filter_map(|v| from_seed(g, v))
        .find(|d| d.rest.is_empty())
        .map(|d| d.candelabrum)
}

/// A candled decomposition of `g`, preferring one with empty rest.
pub fn detect_candled(g: &Graph) -> Option<CandledDecomposition> {
    let mut first = None;
    for v in 0..g.order() {
        if let Some(d) = from_seed(g, v) {
            if d.rest.is_empty() {
                return Some(d);
            }
            first.get_or_insert(d);
        }
    }
    first
}

pub const EXHAUSTIVE_LIMIT: usize = 16;

/// Exhaustive recognition over every choice of base set. For auditing.
pub fn recognize_candelabrum_exhaustive(g: &Graph) -> Result<Option<CandelabrumStructure>> {
    let n = g.order();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: EXHAUSTIVE_LIMIT,
        });
    }
    for bits in 1u64..(1 << n) {
        let z = VertexSet::from_bits(bits);
        if let Some(c) = structure_with_base(g, g.vertices(), z) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Exhaustive candled detection over every rest set. For auditing.
pub fn detect_candled_exhaustive(g: &Graph) -> Result<Option<CandledDecomposition>> {
    let n = g.order();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: EXHAUSTIVE_LIMIT,
        });
    }
    if let Some(c) = recognize_candelabrum_exhaustive(g)? {
        return Ok(Some(CandledDecomposition {
            candelabrum: c,
            rest: VertexSet::EMPTY,
        }));
    }
    for bits in 1u64..(1 << n) {
        let rest = VertexSet::from_bits(bits);
        let h = g.vertices().difference(rest);
        // the base is forced: exactly the vertices of H complete to the rest
        let base = g.common_neighbors(rest).intersection(h);
        if let Some(c) = structure_with_base(g, h, base) {
            let d = CandledDecomposition {
                candelabrum: c,
                rest,
            };
            if d.verify(g) {
                return Ok(Some(d));
            }
        }
    }
    Ok(None)
}

/// Given the base, the parts are forced: `Y_i` are the components of `G[H \ Z]`
/// and `Z_i` their neighbourhoods in `Z`.
fn structure_with_base(g: &Graph, h: VertexSet, z: VertexSet) -> Option<CandelabrumStructure> {
    let y_all = h.difference(z);
    if y_all.is_empty() || z.is_empty() {
        return None;
    }
    let ys = g.components_within(y_all);
    let zs = ys
        .iter()
        .map(|&yi| {
            g.common_neighbors(VertexSet::singleton(yi.first().unwrap()))
                .intersection(z)
        })
        .collect();
    let c = CandelabrumStructure { y: ys, z: zs };
    (c.vertices() == h && c.holds_in(g)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn singletons(vs: impl IntoIterator<Item = usize>) -> Vec<VertexSet> {
        vs.into_iter().map(VertexSet::singleton).collect()
    }

    /// K_k on `0..k` with pendant `k + i` on vertex `i`.
    fn clique_with_pendants(k: usize) -> Graph {
        let mut g = Graph::complete(k)
            .unwrap()
            .disjoint_union(&Graph::new(k).unwrap())
            .unwrap();
        for i in 0..k {
            g.add_edge(i, k + i).unwrap();
        }
        g
    }

    #[test]
    fn check_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert!(check_candelabrum(&k2, &[set(&[0])], &[set(&[1])]).unwrap());
        let g = clique_with_pendants(5);
        assert!(check_candelabrum(&g, &singletons(5..10), &singletons(0..5)).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert!(!check_candelabrum(&c4, &[set(&[0]), set(&[2])], &[set(&[1]), set(&[3])]).unwrap());
    }

    #[test]
    fn check_rejects_malformed() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(check_candelabrum(&c4, &[], &[]).is_err());
        assert!(check_candelabrum(&c4, &[set(&[0])], &[set(&[1]), set(&[2])]).is_err());
        assert!(check_candelabrum(&c4, &[set(&[0, 1])], &[set(&[1, 2, 3])]).is_err());
        assert!(check_candelabrum(&c4, &[set(&[0])], &[set(&[1, 2])]).is_err());
        assert!(check_candelabrum(
            &c4,
            &[set(&[0]), VertexSet::EMPTY],
            &[set(&[1, 2]), set(&[3])]
        )
        .is_err());
    }

    #[test]
    fn recognition_examples() {
        assert!(recognize_candelabrum(&Graph::complete(1).unwrap()).is_none());
        let g = clique_with_pendants(5);
        let c = recognize_candelabrum(&g).unwrap();
        assert_eq!(c.k(), 5);
        assert!(c.y.iter().chain(&c.z).all(|p| p.len() == 1));
        assert!(check_candelabrum(&g, &c.y, &c.z).unwrap());
        assert!(recognize_candelabrum(&Graph::cycle(5).unwrap()).is_none());
        assert!(recognize_candelabrum_exhaustive(&Graph::cycle(5).unwrap())
            .unwrap()
            .is_none());
        let k4 = Graph::complete(4).unwrap();
        let c = recognize_candelabrum(&k4).unwrap();
        assert_eq!((c.k(), c.base().len()), (1, 1));
    }

    #[test]
    fn candled_examples() {
        let g = clique_with_pendants(5);
        let d = detect_candled(&g).unwrap();
        assert!(d.rest.is_empty());

        // C5 on 10..15 made complete to the base 0..5
        let mut g = clique_with_pendants(5)
            .disjoint_union(&Graph::cycle(5).unwrap())
            .unwrap();
        for z in 0..5 {
            for r in 10..15 {
                g.add_edge(z, r).unwrap();
            }
        }
        let d = detect_candled(&g).unwrap();
        assert!(d.verify(&g));
        assert_eq!(d.rest, set(&[10, 11, 12, 13, 14]));
        assert!(g.complete_to(d.candelabrum.base(), d.rest));

        let c5 = Graph::cycle(5).unwrap();
        assert!(detect_candled(&c5).is_none());
        assert!(detect_candled_exhaustive(&c5).unwrap().is_none());
    }

    #[test]
    fn exhaustive_guard() {
        let big = Graph::new(EXHAUSTIVE_LIMIT + 1).unwrap();
        assert!(matches!(
            detect_candled_exhaustive(&big),
            Err(Error::TooLarge { .. })
        ));
    }
}
