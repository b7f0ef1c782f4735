//! Exhaustive checks of the structure theorem, the colouring bound and the
//! supporting lemmas over every graph up to a given order.
//!
//! Each graph is checked independently and the per-graph outcomes are merged
//! in input order, so a report does not depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{chromatic_number_exact, clique_number, color_uncluttered};
use crate::decompose::{classify, decomposition_tree, verify_certificate, CaseTag};
use crate::enumerate::graphs_up_to;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::to_graph6;
use crate::modular::{find_adjacent_simplicial_twins, is_prime};
use crate::pattern::{find_named, is_uncluttered, NamedPattern};
use crate::structure::{
    detect_candled, detect_candled_exhaustive, is_line_graph_of_bipartite, maximal_cliques,
    recognize_line_graph_triangle_free, EXHAUSTIVE_LIMIT,
};

/// Largest `n_max` accepted without an explicit override.
pub const DEFAULT_N_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    MainTheorem,
    ChiBound,
    Diamond,
    MixedTriangle,
    ClawAnticlaw,
    NoHomog,
    PrimeLinegraph,
    CandledAudit,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::MainTheorem,
        Suite::ChiBound,
        Suite::Diamond,
        Suite::MixedTriangle,
        Suite::ClawAnticlaw,
        Suite::NoHomog,
        Suite::PrimeLinegraph,
        Suite::CandledAudit,
    ];

    pub const LEMMAS: [Suite; 5] = [
        Suite::Diamond,
        Suite::MixedTriangle,
        Suite::ClawAnticlaw,
        Suite::NoHomog,
        Suite::PrimeLinegraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::ChiBound => "chi-bound",
            Suite::Diamond => "diamond",
            Suite::MixedTriangle => "mixed-triangle",
            Suite::ClawAnticlaw => "claw-anticlaw",
            Suite::NoHomog => "no-homog",
            Suite::PrimeLinegraph => "prime-linegraph",
            Suite::CandledAudit => "candled-audit",
        }
    }

    /// Largest order at which the suite is required to pass.
    pub fn stated_range(self) -> usize {
        match self {
            Suite::MainTheorem | Suite::ChiBound | Suite::ClawAnticlaw | Suite::CandledAudit => 8,
            Suite::Diamond | Suite::MixedTriangle | Suite::NoHomog | Suite::PrimeLinegraph => 7,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

/// Parses a comma separated suite list; `all` selects every suite.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub n: usize,
    pub graphs: usize,
    pub uncluttered: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCounts {
    pub suite: &'static str,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub n: usize,
    pub graph6: String,
    pub suite: &'static str,
    pub reason: String,
}

/// Largest `chi / omega` seen, kept as an exact fraction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioRecord {
    pub chi: usize,
    pub omega: usize,
    pub value: f64,
    pub graph6: String,
}

impl RatioRecord {
    fn beats(&self, other: &RatioRecord) -> bool {
        self.chi * other.omega > other.chi * self.omega
    }

    /// `chi / omega > num / den`, exactly.
    pub fn exceeds(&self, num: usize, den: usize) -> bool {
        self.chi * den > num * self.omega
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub n_min: usize,
    pub n_max: usize,
    pub suites: Vec<&'static str>,
    pub graphs_scanned: usize,
    pub uncluttered_count: usize,
    pub per_order: Vec<OrderCounts>,
    pub case_histogram: BTreeMap<&'static str, usize>,
    pub suite_counts: Vec<SuiteCounts>,
    pub max_ratio: Option<RatioRecord>,
    pub failures: Vec<Failure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn order(&self, n: usize) -> Option<&OrderCounts> {
        self.per_order.iter().find(|o| o.n == n)
    }

    pub fn suite(&self, s: Suite) -> Option<&SuiteCounts> {
        self.suite_counts.iter().find(|c| c.suite == s.name())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Default)]
struct Outcome {
    uncluttered: bool,
    case: Option<CaseTag>,
    checks: Vec<(Suite, Option<String>)>,
    ratio: Option<(usize, usize)>,
}

/// Audits every graph on `1..=n_max` vertices up to isomorphism.
pub fn audit(
    n_max: usize,
    suites: &[Suite],
    jobs: usize,
    allow_large: bool,
) -> Result<AuditReport> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    if n_max > DEFAULT_N_CAP && !allow_large {
        return Err(Error::TooLarge {
            n: n_max,
            max: DEFAULT_N_CAP,
        });
    }
    let pool = pool(jobs)?;
    let graphs: Vec<Graph> = pool
        .install(|| graphs_up_to(n_max))
        .into_iter()
        .skip(1)
        .flatten()
        .collect();
    let mut report = audit_graphs(&graphs, suites, jobs)?;
    report.n_min = 1;
    report.n_max = n_max;
    Ok(report)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))
}

/// Audits the given graphs, e.g. read from a graph6 stream.
pub fn audit_graphs(graphs: &[Graph], suites: &[Suite], jobs: usize) -> Result<AuditReport> {
    let outcomes: Vec<Outcome> =
        pool(jobs)?.install(|| graphs.par_iter().map(|g| check(g, suites)).collect());

    let mut per_order: BTreeMap<usize, OrderCounts> = BTreeMap::new();
    let mut case_histogram = BTreeMap::new();
    let mut counts: BTreeMap<Suite, SuiteCounts> = suites
        .iter()
        .map(|&s| {
            let c = SuiteCounts {
                suite: s.name(),
                checked: 0,
                passed: 0,
                failed: 0,
            };
            (s, c)
        })
        .collect();
    let mut failures = Vec::new();
    let mut max_ratio: Option<RatioRecord> = None;

    for (g, out) in graphs.iter().zip(outcomes) {
        let n = g.order();
        let row = per_order.entry(n).or_insert(OrderCounts {
            n,
            graphs: 0,
            uncluttered: 0,
        });
        row.graphs += 1;
        row.uncluttered += out.uncluttered as usize;
        if let Some(tag) = out.case {
            *case_histogram.entry(tag.as_str()).or_insert(0) += 1;
        }
        for (suite, problem) in out.checks {
            let c = counts.get_mut(&suite).expect("selected suite");
            c.checked += 1;
            match problem {
                None => c.passed += 1,
                Some(reason) => {
                    c.failed += 1;
                    failures.push(Failure {
                        n,
                        graph6: to_graph6(g),
                        suite: suite.name(),
                        reason,
                    });
                }
            }
        }
        if let Some((chi, omega)) = out.ratio {
            let rec = RatioRecord {
                chi,
                omega,
                value: chi as f64 / omega as f64,
                graph6: to_graph6(g),
            };
            if max_ratio.as_ref().is_none_or(|best| rec.beats(best)) {
                max_ratio = Some(rec);
            }
        }
    }
    failures.sort();
    let per_order: Vec<OrderCounts> = per_order.into_values().collect();
    Ok(AuditReport {
        n_min: per_order.first().map_or(0, |o| o.n),
        n_max: per_order.last().map_or(0, |o| o.n),
        suites: suites.iter().map(|s| s.name()).collect(),
        graphs_scanned: graphs.len(),
        uncluttered_count: per_order.iter().map(|o| o.uncluttered).sum(),
        per_order,
        case_histogram,
        suite_counts: counts.into_values().collect(),
        max_ratio,
        failures,
    })
}

fn check(g: &Graph, suites: &[Suite]) -> Outcome {
    let mut out = Outcome {
        uncluttered: is_uncluttered(g).is_none(),
        ..Outcome::default()
    };
    if out.uncluttered {
        out.case = classify(g).ok().map(|c| c.tag());
    }
    let prime = out.uncluttered && is_prime(g);
    for &suite in suites {
        let problem = match suite {
            Suite::MainTheorem if out.uncluttered => Some(main_theorem(g)),
            Suite::ChiBound if out.uncluttered => {
                let (problem, ratio) = chi_bound(g);
                out.ratio = ratio;
                Some(problem)
            }
            Suite::Diamond if prime => Some(diamonds_dominate(g)),
            Suite::MixedTriangle if prime && !is_line_graph_of_bipartite(g) => {
                Some(mixed_triangle(g))
            }
            Suite::ClawAnticlaw
                if find_named(NamedPattern::Claw, g).is_none()
                    && find_named(NamedPattern::Anticlaw, g).is_none() =>
            {
                Some(claw_anticlaw(g))
            }
            Suite::NoHomog if out.uncluttered => no_homog(g),
            Suite::PrimeLinegraph if prime => Some(prime_linegraph(g)),
            Suite::CandledAudit if g.order() <= EXHAUSTIVE_LIMIT => Some(candled_audit(g)),
            _ => None,
        };
        if let Some(p) = problem {
            out.checks.push((suite, p));
        }
    }
    out
}

fn main_theorem(g: &Graph) -> Option<String> {
    let cert = match classify(g) {
        Ok(c) => c,
        Err(e) => return Some(e.to_string()),
    };
    if !verify_certificate(g, &cert) {
        return Some(format!("certificate {} rejected", cert.tag().as_str()));
    }
    match decomposition_tree(g, 2 * g.order()) {
        Ok(_) => None,
        Err(e) => Some(format!("decomposition tree: {e}")),
    }
}

fn chi_bound(g: &Graph) -> (Option<String>, Option<(usize, usize)>) {
    let col = match color_uncluttered(g) {
        Ok(c) => c,
        Err(e) => return (Some(e.to_string()), None),
    };
    if !col.is_proper(g) {
        return (Some("colouring is not proper".into()), None);
    }
    let omega = clique_number(g);
    if col.num_colors > 2 * omega {
        return (
            Some(format!("{} colours with omega {}", col.num_colors, omega)),
            None,
        );
    }
    let chi = match chromatic_number_exact(g) {
        Ok(c) => c,
        Err(e) => return (Some(e.to_string()), None),
    };
    if chi > 2 * omega {
        return (Some(format!("chi {chi} exceeds 2 * omega {omega}")), None);
    }
    (None, (omega > 0).then_some((chi, omega)))
}

/// Every induced diamond, and every triangle inside one, is dominating.
fn diamonds_dominate(g: &Graph) -> Option<String> {
    let n = g.order();
    for bits in 0u64..1 << n {
        let d = VertexSet::from_bits(bits);
        if d.len() != 4 {
            continue;
        }
        let h = g.induced_unchecked(d);
        if h.edge_count() != 5 {
            continue;
        }
        if !g.is_dominating(d) {
            return Some(format!("diamond {:?} is not dominating", d.to_vec()));
        }
        for v in d.iter() {
            let t = d.without(v);
            if g.is_clique(t) && !g.is_dominating(t) {
                return Some(format!(
                    "triangle {:?} in a diamond is not dominating",
                    t.to_vec()
                ));
            }
        }
    }
    None
}

/// Either every triangle is dominating or no clique is dominating.
fn mixed_triangle(g: &Graph) -> Option<String> {
    let n = g.order();
    let bad_triangle = (0u64..1 << n)
        .map(VertexSet::from_bits)
        .find(|&t| t.len() == 3 && g.is_clique(t) && !g.is_dominating(t));
    let dominating_clique = maximal_cliques(g).into_iter().find(|&c| g.is_dominating(c));
    match (bad_triangle, dominating_clique) {
        (Some(t), Some(c)) => Some(format!(
            "triangle {:?} is not dominating but clique {:?} is",
            t.to_vec(),
            c.to_vec()
        )),
        _ => None,
    }
}

fn paths_and_cycles(h: &Graph) -> bool {
    h.max_degree() <= 2
}

/// For the graph or its complement: every component is a path or a cycle,
/// or there are at most nine vertices and it is the line graph of a
/// bipartite graph.
fn claw_anticlaw(g: &Graph) -> Option<String> {
    let co = g.complement();
    let ok = [g, &co]
        .into_iter()
        .any(|h| paths_and_cycles(h) || (h.order() <= 9 && is_line_graph_of_bipartite(h)));
    (!ok).then(|| "neither the graph nor its complement has the claimed structure".into())
}

fn candled(g: &Graph) -> std::result::Result<bool, String> {
    if g.order() <= EXHAUSTIVE_LIMIT {
        detect_candled_exhaustive(g)
            .map(|d| d.is_some())
            .map_err(|e| e.to_string())
    } else {
        Ok(detect_candled(g).is_some())
    }
}

/// Graphs outside every reducible case have no nontrivial homogeneous set.
/// Returns `None` when the hypotheses do not apply.
fn no_homog(g: &Graph) -> Option<Option<String>> {
    let co = g.complement();
    if !g.is_connected()
        || !g.is_anticonnected()
        || find_adjacent_simplicial_twins(g).is_some()
        || find_adjacent_simplicial_twins(&co).is_some()
    {
        return None;
    }
    match (candled(g), candled(&co)) {
        (Ok(false), Ok(false)) => {}
        (Err(e), _) | (_, Err(e)) => return Some(Some(e)),
        _ => return None,
    }
    Some((!is_prime(g)).then(|| "has a nontrivial homogeneous set".into()))
}

fn prime_linegraph(g: &Graph) -> Option<String> {
    let ok = recognize_line_graph_triangle_free(g).is_some()
        || recognize_line_graph_triangle_free(&g.complement()).is_some();
    (!ok).then(|| {
        "neither the graph nor its complement is a line graph of a triangle-free graph".into()
    })
}

fn candled_audit(g: &Graph) -> Option<String> {
    let fast = detect_candled(g);
    let slow = match detect_candled_exhaustive(g) {
        Ok(d) => d,
        Err(e) => return Some(e.to_string()),
    };
    if fast.is_some() != slow.is_some() {
        return Some(format!(
            "detector says {}, exhaustive search says {}",
            fast.is_some(),
            slow.is_some()
        ));
    }
    if fast.is_some_and(|d| !d.verify(g)) || slow.is_some_and(|d| !d.verify(g)) {
        return Some("candled decomposition does not verify".into());
    }
    None
}
