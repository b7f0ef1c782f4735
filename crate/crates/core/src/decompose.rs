//! Classification of uncluttered graphs by the structure theorem, with
//! certificates that can be checked independently of how they were found.
//!
//! Cases are tried in a fixed order and the first that applies wins:
//! `DISCONNECTED`, `ANTI_DISCONNECTED`, `SIMPLICIAL_TWINS`,
//! `ANTI_SIMPLICIAL_TWINS`, `LINEGRAPH_TF`, `ANTI_LINEGRAPH_TF`, `CANDLED`,
//! `ANTI_CANDLED`. Each `ANTI_*` case is the primal case found in the
//! complement, and its payload is expressed in terms of the complement.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::to_graph6;
use crate::modular::{are_twins, find_adjacent_simplicial_twins, is_simplicial, TwinPair};
use crate::pattern::{is_uncluttered, pattern, NamedPattern, PatternWitness};
use crate::structure::{
    detect_candled, is_triangle_free, recognize_line_graph_triangle_free, CandelabrumStructure,
    CandledDecomposition, RootGraph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    Small,
    NotUncluttered,
    Disconnected,
    AntiDisconnected,
    SimplicialTwins,
    AntiSimplicialTwins,
    LineGraphTf,
    AntiLineGraphTf,
    Candled,
    AntiCandled,
}

impl CaseTag {
    pub const ALL: [CaseTag; 10] = [
        CaseTag::Small,
        CaseTag::NotUncluttered,
        CaseTag::Disconnected,
        CaseTag::AntiDisconnected,
        CaseTag::SimplicialTwins,
        CaseTag::AntiSimplicialTwins,
        CaseTag::LineGraphTf,
        CaseTag::AntiLineGraphTf,
        CaseTag::Candled,
        CaseTag::AntiCandled,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Small => "SMALL",
            CaseTag::NotUncluttered => "NOT_UNCLUTTERED",
            CaseTag::Disconnected => "DISCONNECTED",
            CaseTag::AntiDisconnected => "ANTI_DISCONNECTED",
            CaseTag::SimplicialTwins => "SIMPLICIAL_TWINS",
            CaseTag::AntiSimplicialTwins => "ANTI_SIMPLICIAL_TWINS",
            CaseTag::LineGraphTf => "LINEGRAPH_TF",
            CaseTag::AntiLineGraphTf => "ANTI_LINEGRAPH_TF",
            CaseTag::Candled => "CANDLED",
            CaseTag::AntiCandled => "ANTI_CANDLED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Small,
    NotUncluttered(PatternWitness),
    Disconnected(Vec<VertexSet>),
    AntiDisconnected(Vec<VertexSet>),
    SimplicialTwins(TwinPair),
    AntiSimplicialTwins(TwinPair),
    LineGraphTf(RootGraph),
    AntiLineGraphTf(RootGraph),
    Candled(CandledDecomposition),
    AntiCandled(CandledDecomposition),
}

impl Certificate {
    pub fn tag(&self) -> CaseTag {
        match self {
            Certificate::Small => CaseTag::Small,
            Certificate::NotUncluttered(_) => CaseTag::NotUncluttered,
            Certificate::Disconnected(_) => CaseTag::Disconnected,
            Certificate::AntiDisconnected(_) => CaseTag::AntiDisconnected,
            Certificate::SimplicialTwins(_) => CaseTag::SimplicialTwins,
            Certificate::AntiSimplicialTwins(_) => CaseTag::AntiSimplicialTwins,
            Certificate::LineGraphTf(_) => CaseTag::LineGraphTf,
            Certificate::AntiLineGraphTf(_) => CaseTag::AntiLineGraphTf,
            Certificate::Candled(_) => CaseTag::Candled,
            Certificate::AntiCandled(_) => CaseTag::AntiCandled,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    fn complemented(self) -> Certificate {
        match self {
            Certificate::Disconnected(c) => Certificate::AntiDisconnected(c),
            Certificate::SimplicialTwins(t) => Certificate::AntiSimplicialTwins(t),
            Certificate::LineGraphTf(r) => Certificate::AntiLineGraphTf(r),
            Certificate::Candled(d) => Certificate::AntiCandled(d),
            other => other,
        }
    }
}

#[derive(Clone, Copy)]
enum Stage {
    Disconnected,
    SimplicialTwins,
    LineGraph,
    Candled,
}

fn primal(stage: Stage, g: &Graph) -> Option<Certificate> {
    match stage {
        Stage::Disconnected => {
            let comps = g.components();
            (comps.len() >= 2).then_some(Certificate::Disconnected(comps))
        }
        Stage::SimplicialTwins => {
            find_adjacent_simplicial_twins(g).map(Certificate::SimplicialTwins)
        }
        Stage::LineGraph => recognize_line_graph_triangle_free(g).map(Certificate::LineGraphTf),
        Stage::Candled => detect_candled(g).map(Certificate::Candled),
    }
}

/// Which case of the structure theorem applies to `g`.
///
/// Returns `NOT_UNCLUTTERED` with a witness for graphs outside the class and
/// `SMALL` for `n <= 1`. An uncluttered graph for which no case applies is
/// reported as [`Error::TheoremViolation`].
pub fn classify(g: &Graph) -> Result<Certificate> {
    if let Some(w) = is_uncluttered(g) {
        return Ok(Certificate::NotUncluttered(w));
    }
    if g.order() <= 1 {
        return Ok(Certificate::Small);
    }
    let co = g.complement();
    for stage in [
        Stage::Disconnected,
        Stage::SimplicialTwins,
        Stage::LineGraph,
        Stage::Candled,
    ] {
        if let Some(c) = primal(stage, g) {
            return Ok(c);
        }
        if let Some(c) = primal(stage, &co) {
            return Ok(c.complemented());
        }
    }
    Err(Error::TheoremViolation {
        graph6: to_graph6(g),
        reason: "no case of the structure theorem applies".into(),
    })
}

fn verify_partition_anticomplete(g: &Graph, parts: &[VertexSet]) -> bool {
    if parts.len() < 2 {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &p in parts {
        if p.is_empty() || !p.is_disjoint(seen) {
            return false;
        }
        seen = seen.union(p);
    }
    if seen != g.vertices() {
        return false;
    }
    (0..parts.len()).all(|i| (i + 1..parts.len()).all(|j| g.anticomplete_to(parts[i], parts[j])))
}

fn verify_twins(g: &Graph, t: &TwinPair) -> bool {
    t.u < g.order()
        && t.v < g.order()
        && t.u != t.v
        && t.adjacent
        && t.simplicial
        && g.has_edge(t.u, t.v)
        && are_twins(g, t.u, t.v)
        && is_simplicial(g, t.u)
        && is_simplicial(g, t.v)
}

fn verify_root(g: &Graph, r: &RootGraph) -> bool {
    r.verify(g) && is_triangle_free(&r.root).is_none()
}

/// Re-checks a certificate against `g` from the definitions alone.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> bool {
    match c {
        Certificate::Small => g.order() <= 1,
        Certificate::NotUncluttered(w) => {
            matches!(w.name, Some(NamedPattern::Fork | NamedPattern::Antifork))
                && w.pattern == pattern(w.name.unwrap())
                && w.verify(g)
        }
        Certificate::Disconnected(parts) => verify_partition_anticomplete(g, parts),
        Certificate::AntiDisconnected(parts) => {
            verify_partition_anticomplete(&g.complement(), parts)
        }
        Certificate::SimplicialTwins(t) => verify_twins(g, t),
        Certificate::AntiSimplicialTwins(t) => verify_twins(&g.complement(), t),
        Certificate::LineGraphTf(r) => verify_root(g, r),
        Certificate::AntiLineGraphTf(r) => verify_root(&g.complement(), r),
        Certificate::Candled(d) => d.verify(g),
        Certificate::AntiCandled(d) => d.verify(&g.complement()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeNode {
    Certified(Certificate),
    /// The node's graph is a candelabrum.
    Candelabrum(CandelabrumStructure),
    /// The complement of the node's graph is a candelabrum.
    AntiCandelabrum(CandelabrumStructure),
}

/// Recursive application of [`classify`]. Each node records which vertices of
/// the input graph it covers; its payload uses the node's own labels, i.e.
/// positions within `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTree {
    pub vertices: VertexSet,
    pub node: TreeNode,
    pub children: Vec<DecompositionTree>,
}

impl DecompositionTree {
    /// Number of edges on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trees serialize")
    }

    pub fn nodes(&self) -> usize {
        1 + self.children.iter().map(|c| c.nodes()).sum::<usize>()
    }
}

/// Position of each member of `sub` inside `within`.
fn relabel(sub: VertexSet, within: VertexSet) -> VertexSet {
    sub.iter()
        .map(|v| VertexSet::from_bits(within.bits() & ((1u64 << v) - 1)).len())
        .collect()
}

/// Members of `within` at the local positions in `local`.
fn lift(local: VertexSet, within: VertexSet) -> VertexSet {
    let members = within.to_vec();
    local.iter().map(|i| members[i]).collect()
}

pub fn decomposition_tree(g: &Graph, depth_limit: usize) -> Result<DecompositionTree> {
    if let Some(w) = is_uncluttered(g) {
        return Err(Error::NotUncluttered(w));
    }
    build(g, g.vertices(), 0, depth_limit)
}

fn build(g: &Graph, vertices: VertexSet, depth: usize, limit: usize) -> Result<DecompositionTree> {
    if depth > limit {
        return Err(Error::DepthExceeded { limit });
    }
    let cert = classify(g)?;
    let child = |local: VertexSet| -> Result<DecompositionTree> {
        let sub = g.induced_unchecked(local);
        build(&sub, lift(local, vertices), depth + 1, limit)
    };
    let mut children = Vec::new();
    match &cert {
        Certificate::Disconnected(parts) | Certificate::AntiDisconnected(parts) => {
            for &p in parts {
                children.push(child(p)?);
            }
        }
        Certificate::SimplicialTwins(t) | Certificate::AntiSimplicialTwins(t) => {
            children.push(child(g.vertices().without(t.v))?);
        }
        Certificate::Candled(d) | Certificate::AntiCandled(d) => {
            if !d.rest.is_empty() {
                children.push(child(d.rest)?);
            }
            let h = d.candelabrum.vertices();
            let local = CandelabrumStructure {
                y: d.candelabrum.y.iter().map(|&s| relabel(s, h)).collect(),
                z: d.candelabrum.z.iter().map(|&s| relabel(s, h)).collect(),
            };
            let node = if matches!(cert, Certificate::Candled(_)) {
                TreeNode::Candelabrum(local)
            } else {
                TreeNode::AntiCandelabrum(local)
            };
            if depth + 1 > limit {
                return Err(Error::DepthExceeded { limit });
            }
            children.push(DecompositionTree {
                vertices: lift(h, vertices),
                node,
                children: Vec::new(),
            });
        }
        Certificate::NotUncluttered(w) => return Err(Error::NotUncluttered(w.clone())),
        Certificate::Small | Certificate::LineGraphTf(_) | Certificate::AntiLineGraphTf(_) => {}
    }
    Ok(DecompositionTree {
        vertices,
        node: TreeNode::Certified(cert),
        children,
    })
}

#[derive(Serialize)]
#[serde(untagged)]
enum Payload<'a> {
    Witness {
        pattern: String,
        embedding: &'a [usize],
    },
    Components {
        components: &'a [VertexSet],
    },
    Twins(&'a TwinPair),
    Candled {
        k: usize,
        y: &'a [VertexSet],
        z: &'a [VertexSet],
        base: VertexSet,
        rest: VertexSet,
    },
    Candelabrum {
        k: usize,
        y: &'a [VertexSet],
        z: &'a [VertexSet],
        base: VertexSet,
    },
    Root {
        root_order: usize,
        edge_map: &'a [(usize, usize)],
    },
}

fn payload(c: &Certificate) -> Option<Payload<'_>> {
    Some(match c {
        Certificate::Small => return None,
        Certificate::NotUncluttered(w) => Payload::Witness {
            pattern: w.pattern_name(),
            embedding: &w.embedding,
        },
        Certificate::Disconnected(p) | Certificate::AntiDisconnected(p) => {
            Payload::Components { components: p }
        }
        Certificate::SimplicialTwins(t) | Certificate::AntiSimplicialTwins(t) => Payload::Twins(t),
        Certificate::LineGraphTf(r) | Certificate::AntiLineGraphTf(r) => Payload::Root {
            root_order: r.root.order(),
            edge_map: &r.edge_map,
        },
        Certificate::Candled(d) | Certificate::AntiCandled(d) => Payload::Candled {
            k: d.candelabrum.k(),
            y: &d.candelabrum.y,
            z: &d.candelabrum.z,
            base: d.candelabrum.base(),
            rest: d.rest,
        },
    })
}

fn candelabrum_payload(c: &CandelabrumStructure) -> Payload<'_> {
    Payload::Candelabrum {
        k: c.k(),
        y: &c.y,
        z: &c.z,
        base: c.base(),
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Certificate", 2)?;
        st.serialize_field("case", self.tag().as_str())?;
        st.serialize_field("payload", &payload(self))?;
        st.end()
    }
}

impl Serialize for DecompositionTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DecompositionTree", 4)?;
        st.serialize_field("vertices", &self.vertices)?;
        match &self.node {
            TreeNode::Certified(c) => {
                st.serialize_field("case", c.tag().as_str())?;
                st.serialize_field("payload", &payload(c))?;
            }
            TreeNode::Candelabrum(c) => {
                st.serialize_field("case", "CANDELABRUM")?;
                st.serialize_field("payload", &Some(candelabrum_payload(c)))?;
            }
            TreeNode::AntiCandelabrum(c) => {
                st.serialize_field("case", "ANTI_CANDELABRUM")?;
                st.serialize_field("payload", &Some(candelabrum_payload(c)))?;
            }
        }
        st.serialize_field("children", &self.children)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn disconnected_example() {
        let g = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        let c = classify(&g).unwrap();
        assert_eq!(
            c,
            Certificate::Disconnected(vec![set(&[0, 1]), set(&[2, 3])])
        );
        assert!(verify_certificate(&g, &c));
    }

    #[test]
    fn c5_is_a_line_graph_leaf() {
        let c5 = Graph::cycle(5).unwrap();
        let c = classify(&c5).unwrap();
        assert_eq!(c.tag(), CaseTag::LineGraphTf);
        assert!(verify_certificate(&c5, &c));
        assert!(!verify_certificate(
            &c5,
            &Certificate::Disconnected(vec![set(&[0, 1]), set(&[2, 3, 4])])
        ));
        let t = decomposition_tree(&c5, 10).unwrap();
        assert!(t.children.is_empty());
    }

    #[test]
    fn k2_is_anti_disconnected_but_twins_also_verify() {
        // the fixed case order puts ANTI_DISCONNECTED before SIMPLICIAL_TWINS
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(classify(&k2).unwrap().tag(), CaseTag::AntiDisconnected);
        let twins = Certificate::SimplicialTwins(TwinPair {
            u: 0,
            v: 1,
            adjacent: true,
            simplicial: true,
        });
        assert!(verify_certificate(&k2, &twins));
    }

    #[test]
    fn wrong_root_is_rejected() {
        let c5 = Graph::cycle(5).unwrap();
        let p5 = Graph::path(5).unwrap();
        let bogus = RootGraph {
            edge_map: p5.edges(),
            root: p5,
        };
        assert!(!verify_certificate(&c5, &Certificate::LineGraphTf(bogus)));
    }

    #[test]
    fn not_uncluttered_is_reported() {
        let fork = pattern(NamedPattern::Fork);
        let c = classify(&fork).unwrap();
        assert_eq!(c.tag(), CaseTag::NotUncluttered);
        assert!(verify_certificate(&fork, &c));
        assert!(matches!(
            decomposition_tree(&fork, 10),
            Err(Error::NotUncluttered(_))
        ));
    }

    #[test]
    fn small_graphs() {
        for n in 0..2 {
            let g = Graph::new(n).unwrap();
            assert_eq!(classify(&g).unwrap(), Certificate::Small);
            assert!(verify_certificate(&g, &Certificate::Small));
        }
        assert!(!verify_certificate(
            &Graph::new(2).unwrap(),
            &Certificate::Small
        ));
    }

    #[test]
    fn triangle_tree_bottoms_out_in_small_leaves() {
        let k3 = Graph::complete(3).unwrap();
        let t = decomposition_tree(&k3, 6).unwrap();
        assert_eq!(t.node, TreeNode::Certified(classify(&k3).unwrap()));
        assert_eq!(t.children.len(), 3);
        for c in &t.children {
            assert_eq!(c.node, TreeNode::Certified(Certificate::Small));
        }
    }

    #[test]
    fn depth_limit_is_enforced() {
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(
            decomposition_tree(&k3, 0),
            Err(Error::DepthExceeded { limit: 0 })
        ));
    }

    #[test]
    fn relabel_and_lift_invert() {
        let within = set(&[1, 4, 6, 9]);
        assert_eq!(relabel(set(&[4, 9]), within), set(&[1, 3]));
        assert_eq!(lift(set(&[1, 3]), within), set(&[4, 9]));
    }

    #[test]
    fn json_shape() {
        let c5 = Graph::cycle(5).unwrap();
        let json = classify(&c5).unwrap().to_json();
        assert!(
            json.starts_with(r#"{"case":"LINEGRAPH_TF","payload":{"root_order":5,"edge_map":["#)
        );
        assert_eq!(
            Certificate::Small.to_json(),
            r#"{"case":"SMALL","payload":null}"#
        );
        let g = Graph::new(2).unwrap();
        assert_eq!(
            classify(&g).unwrap().to_json(),
            r#"{"case":"DISCONNECTED","payload":{"components":[[0],[1]]}}"#
        );
    }
}
