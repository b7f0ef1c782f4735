mod common;

use rand::seq::SliceRandom;
use rand::Rng;
use uncluttered::enumerate::graphs_up_to;
use uncluttered::{
    classify, decomposition_tree, from_graph6, is_uncluttered, verify_certificate, CaseTag,
    Certificate, Graph, TreeNode, VertexSet,
};

fn k5_with_pendants() -> Graph {
    let mut g = Graph::complete(5)
        .unwrap()
        .disjoint_union(&Graph::new(5).unwrap())
        .unwrap();
    for i in 0..5 {
        g.add_edge(i, i + 5).unwrap();
    }
    g
}

#[test]
fn candelabrum_tree_has_a_candelabrum_leaf() {
    let g = from_graph6("GKXc{w").unwrap();
    let t = decomposition_tree(&g, 16).unwrap();
    let TreeNode::Certified(Certificate::Candled(d)) = &t.node else {
        panic!("expected a candled node, got {:?}", t.node);
    };
    assert!(d.rest.is_empty());
    assert_eq!(t.children.len(), 1);
    assert!(matches!(t.children[0].node, TreeNode::Candelabrum(_)));
    assert_eq!(t.children[0].vertices, g.vertices());
}

#[test]
fn k5_with_pendants_is_a_line_graph() {
    // it is a candelabrum, but LINEGRAPH_TF comes first in the case order:
    // the root is a star with every edge subdivided
    let g = k5_with_pendants();
    assert!(uncluttered::structure::recognize_candelabrum(&g).is_some());
    let c = classify(&g).unwrap();
    assert_eq!(c.tag(), CaseTag::LineGraphTf);
    assert!(verify_certificate(&g, &c));
}

#[test]
fn candled_with_rest() {
    let g = from_graph6("G?Cj|{").unwrap();
    let t = decomposition_tree(&g, 16).unwrap();
    let TreeNode::Certified(Certificate::Candled(d)) = &t.node else {
        panic!("expected a candled node");
    };
    assert!(!d.rest.is_empty());
    assert_eq!(t.children[0].vertices, d.rest);
}

#[test]
fn trees_stay_within_depth_two_n() {
    for level in graphs_up_to(8) {
        for g in level.iter().filter(|g| is_uncluttered(g).is_none()) {
            let t = decomposition_tree(g, 2 * g.order()).unwrap();
            assert!(t.depth() <= 2 * g.order());
        }
    }
}

fn mutate_set(rng: &mut impl Rng, s: VertexSet, n: usize) -> VertexSet {
    let members = s.to_vec();
    let out = *members.choose(rng).unwrap();
    let candidates: Vec<usize> = (0..n).filter(|&v| v != out).collect();
    let into = *candidates.choose(rng).unwrap();
    s.without(out).with(into)
}

/// Swaps one vertex of the payload for another or drops a component.
fn mutate(rng: &mut impl Rng, c: &Certificate, n: usize) -> Certificate {
    let mut c = c.clone();
    match &mut c {
        Certificate::Disconnected(p) | Certificate::AntiDisconnected(p) => {
            if rng.gen_bool(0.5) {
                let i = rng.gen_range(0..p.len());
                p.remove(i);
            } else {
                // move one vertex into another part
                let i = rng.gen_range(0..p.len());
                let j = (i + rng.gen_range(1..p.len())) % p.len();
                let v = *p[i].to_vec().choose(rng).unwrap();
                p[i].remove(v);
                p[j].insert(v);
            }
        }
        Certificate::SimplicialTwins(t) | Certificate::AntiSimplicialTwins(t) => {
            let other = (0..n).filter(|&x| x != t.u && x != t.v).collect::<Vec<_>>();
            let x = *other.choose(rng).unwrap();
            if rng.gen_bool(0.5) {
                t.u = x;
            } else {
                t.v = x;
            }
        }
        Certificate::LineGraphTf(r) | Certificate::AntiLineGraphTf(r) => {
            let i = rng.gen_range(0..r.edge_map.len());
            let (a, b) = r.edge_map[i];
            let fresh: Vec<usize> = (0..r.root.order()).filter(|&x| x != a && x != b).collect();
            let x = *fresh.choose(rng).unwrap();
            r.edge_map[i] = if rng.gen_bool(0.5) {
                (a.min(x), a.max(x))
            } else {
                (b.min(x), b.max(x))
            };
        }
        Certificate::Candled(d) | Certificate::AntiCandled(d) => {
            let k = d.candelabrum.k();
            let i = rng.gen_range(0..k);
            if rng.gen_bool(0.5) {
                d.candelabrum.y[i] = mutate_set(rng, d.candelabrum.y[i], n);
            } else {
                d.candelabrum.z[i] = mutate_set(rng, d.candelabrum.z[i], n);
            }
        }
        Certificate::NotUncluttered(w) => {
            let i = rng.gen_range(0..w.embedding.len());
            let fresh: Vec<usize> = (0..n).filter(|x| !w.embedding.contains(x)).collect();
            if let Some(&x) = fresh.choose(rng) {
                w.embedding[i] = x;
            } else {
                w.embedding.swap(0, 1);
            }
        }
        Certificate::Small => unreachable!(),
    }
    c
}

fn certificates_by_case() -> Vec<Vec<(Graph, Certificate)>> {
    let mut by_case: Vec<Vec<(Graph, Certificate)>> = vec![Vec::new(); CaseTag::ALL.len()];
    for level in graphs_up_to(8).into_iter().skip(2) {
        for g in level {
            let c = classify(&g).unwrap();
            let i = CaseTag::ALL.iter().position(|&t| t == c.tag()).unwrap();
            by_case[i].push((g, c));
        }
    }
    by_case.retain(|v| !v.is_empty());
    by_case
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

fn partition_ok(g: &Graph, parts: &[VertexSet]) -> bool {
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    parts.len() >= 2
        && parts.iter().all(|p| !p.is_empty())
        && owner.iter().all(|&o| o != usize::MAX)
        && pairs(n).all(|(a, b)| owner[a] == owner[b] || !g.has_edge(a, b))
}

fn twins_ok(g: &Graph, u: usize, v: usize) -> bool {
    let n = g.order();
    u < n
        && v < n
        && u != v
        && g.has_edge(u, v)
        && (0..n)
            .filter(|&w| w != u && w != v)
            .all(|w| g.has_edge(u, w) == g.has_edge(v, w))
        && pairs(n).all(|(a, b)| !(g.has_edge(u, a) && g.has_edge(u, b)) || g.has_edge(a, b))
}

fn root_ok(g: &Graph, root: &Graph, map: &[(usize, usize)]) -> bool {
    let n = g.order();
    let m = root.order();
    let triangle = (0..m).any(|a| {
        pairs(m).any(|(b, c)| root.has_edge(a, b) && root.has_edge(a, c) && root.has_edge(b, c))
    });
    map.len() == n
        && root.edge_count() == n
        && !triangle
        && map
            .iter()
            .all(|&(a, b)| a < b && b < m && root.has_edge(a, b))
        && pairs(n).all(|(i, j)| {
            let (a, b) = map[i];
            let (c, d) = map[j];
            map[i] != map[j] && g.has_edge(i, j) == (a == c || a == d || b == c || b == d)
        })
}

fn candled_ok(g: &Graph, y: &[VertexSet], z: &[VertexSet], rest: VertexSet) -> bool {
    let n = g.order();
    let k = y.len();
    let mut all: Vec<VertexSet> = y.to_vec();
    all.extend_from_slice(z);
    all.push(rest);
    let mut seen = vec![0; n];
    for p in &all {
        for v in p.iter() {
            if v >= n {
                return false;
            }
            seen[v] += 1;
        }
    }
    let adj = |s: VertexSet, t: VertexSet, want: bool| {
        s.iter()
            .all(|a| t.iter().all(|b| a == b || g.has_edge(a, b) == want))
    };
    let base: VertexSet = z.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    let tops: VertexSet = y.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    k >= 1
        && z.len() == k
        && seen.iter().all(|&c| c == 1)
        && y.iter().chain(z).all(|p| !p.is_empty())
        && (0..k).all(|i| adj(y[i], y[i], true) && adj(z[i], z[i], false))
        && (0..k)
            .all(|i| (0..k).all(|j| i == j || (adj(y[i], y[j], false) && adj(z[i], z[j], true))))
        && (0..k).all(|i| (0..k).all(|j| adj(y[i], z[j], i == j)))
        && adj(base, rest, true)
        && adj(tops, rest, false)
}

/// Independent check of a payload straight from the definitions.
fn genuine(g: &Graph, c: &Certificate) -> bool {
    let co = g.complement();
    match c {
        Certificate::Small => g.order() <= 1,
        Certificate::Disconnected(p) => partition_ok(g, p),
        Certificate::AntiDisconnected(p) => partition_ok(&co, p),
        Certificate::SimplicialTwins(t) => twins_ok(g, t.u, t.v) && t.adjacent && t.simplicial,
        Certificate::AntiSimplicialTwins(t) => {
            twins_ok(&co, t.u, t.v) && t.adjacent && t.simplicial
        }
        Certificate::LineGraphTf(r) => root_ok(g, &r.root, &r.edge_map),
        Certificate::AntiLineGraphTf(r) => root_ok(&co, &r.root, &r.edge_map),
        Certificate::Candled(d) => candled_ok(g, &d.candelabrum.y, &d.candelabrum.z, d.rest),
        Certificate::AntiCandled(d) => candled_ok(&co, &d.candelabrum.y, &d.candelabrum.z, d.rest),
        Certificate::NotUncluttered(w) => {
            let e = &w.embedding;
            let named = matches!(
                w.name,
                Some(uncluttered::NamedPattern::Fork | uncluttered::NamedPattern::Antifork)
            );
            named
                && w.pattern == uncluttered::pattern(w.name.unwrap())
                && e.len() == w.pattern.order()
                && e.iter().all(|&v| v < g.order())
                && (0..e.len()).all(|i| (0..i).all(|j| e[i] != e[j]))
                && (0..e.len())
                    .all(|i| (0..i).all(|j| w.pattern.has_edge(i, j) == g.has_edge(e[i], e[j])))
        }
    }
}

/// 1000 mutations from `pool`; the verifier must agree with [`genuine`] on
/// every one, so every invalid mutation is rejected. Some mutations land on
/// another valid payload (a third member of a twin class, a second fork in a
/// dense host), so the raw rejection rate is reported rather than asserted.
fn fuzz(pool: &[&[(Graph, Certificate)]], seed: u64) -> (usize, usize) {
    let mut rng = common::rng(seed);
    let (mut rejected, mut invalid) = (0, 0);
    for _ in 0..1000 {
        let (g, c) = pool.choose(&mut rng).unwrap().choose(&mut rng).unwrap();
        assert!(verify_certificate(g, c) && genuine(g, c));
        let m = mutate(&mut rng, c, g.order());
        let verdict = verify_certificate(g, &m);
        assert_eq!(
            verdict,
            genuine(g, &m),
            "{}: {} -> {}",
            uncluttered::to_graph6(g),
            c.to_json(),
            m.to_json()
        );
        rejected += !verdict as usize;
        invalid += !genuine(g, &m) as usize;
    }
    (rejected, invalid)
}

#[test]
fn mutated_certificates_are_rejected() {
    let by_case = certificates_by_case();
    let balanced: Vec<&[(Graph, Certificate)]> = by_case.iter().map(Vec::as_slice).collect();
    let theorem: Vec<&[(Graph, Certificate)]> = by_case
        .iter()
        .filter(|v| v[0].1.tag() != CaseTag::NotUncluttered)
        .map(Vec::as_slice)
        .collect();
    let all: Vec<(Graph, Certificate)> = by_case.iter().flatten().cloned().collect();
    let every = [all.as_slice()];
    for (name, pool) in [
        ("balanced", &balanced[..]),
        ("uncluttered", &theorem[..]),
        ("all", &every[..]),
    ] {
        let (rejected, invalid) = fuzz(pool, 2024);
        assert_eq!(rejected, invalid);
        println!("{name}: {rejected} of 1000 mutations rejected; every invalid one was rejected");
    }
}
