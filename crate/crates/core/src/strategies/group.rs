//! Group algebras: `m : 2 -> 1`, `i : 1 -> 1`, `u : 0 -> 1` over one
//! Frobenius colour. Structural rules (associativity, unit, inverse) fire
//! whenever they match; naturality rules only when they lower the depth
//! profile under the reverse-lexicographic order.

use std::cmp::Ordering;

use serde::Serialize;

use crate::cospan::InterfacedGraph;
use crate::dpoi::{for_each_match, rewrite_step, LogRecord, Rule};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, NodeId};
use crate::signature::Signature;

/// Counts of hyperedges per branching depth, index = depth.
pub type DepthProfile = Vec<usize>;

pub const STRUCTURAL_RULES: [(&str, &str); 4] = [
    ("assoc", "(m + id[1]) ; m => (id[1] + m) ; m"),
    ("inverse", "frob.comult ; (id[1] + i) ; m => frob.counit ; u"),
    ("left-unit", "(u + id[1]) ; m => id[1]"),
    ("right-unit", "(id[1] + u) ; m => id[1]"),
];

pub const NATURALITY_RULES: [(&str, &str); 6] = [
    ("m-nat", "m ; frob.comult => (frob.comult + frob.comult) ; (id[1] + sym[1,1] + id[1]) ; (m + m)"),
    ("m-nat2", "m ; frob.counit => frob.counit + frob.counit"),
    ("i-nat", "i ; frob.comult => frob.comult ; (i + i)"),
    ("i-nat2", "i ; frob.counit => frob.counit"),
    ("u-nat", "u ; frob.comult => u + u"),
    ("u-nat2", "u ; frob.counit => id[0]"),
];

/// `colours: w`, `m : 2 -> 1`, `i : 1 -> 1`, `u : 0 -> 1`.
pub fn group_signature() -> Signature {
    let mut s = Signature::monochrome();
    s.add_mono("m", 2, 1);
    s.add_mono("i", 1, 1);
    s.add_mono("u", 0, 1);
    s
}

#[derive(Clone, Debug)]
pub struct GroupPack {
    pub structural: Vec<Rule>,
    pub naturality: Vec<Rule>,
}

impl GroupPack {
    pub fn new(sig: &Signature) -> Result<GroupPack> {
        let mk = |(name, body): &(&str, &str)| Rule::parse(&format!("{name} : {body}"), sig);
        Ok(GroupPack {
            structural: STRUCTURAL_RULES.iter().map(mk).collect::<Result<_>>()?,
            naturality: NATURALITY_RULES.iter().map(mk).collect::<Result<_>>()?,
        })
    }
}

/// `max(0, deg(v) + legs(v) - 2)`.
pub fn branching_degree(g: &InterfacedGraph, v: NodeId) -> usize {
    let legs = g.interface.iter().filter(|w| **w == v).count();
    let deg = g.graph.connections(v).len();
    (deg + legs).saturating_sub(2)
}

/// Minimal total branching degree from each node to a sink, where a sink is
/// a node that is not a source of any hyperedge.
fn node_weights(g: &InterfacedGraph) -> Result<Vec<usize>> {
    let h = &g.graph;
    let order = h.topological_order().ok_or(Error::Cyclic)?;
    let mut out_edges: Vec<Vec<EdgeId>> = vec![Vec::new(); h.node_count()];
    for (i, e) in h.edges.iter().enumerate() {
        for s in &e.sources {
            out_edges[*s].push(i);
        }
    }
    let mut w = vec![0usize; h.node_count()];
    for &v in order.iter().rev() {
        let rest = out_edges[v]
            .iter()
            .map(|e| h.edges[*e].targets.iter().map(|t| w[*t]).min().unwrap_or(0))
            .min()
            .unwrap_or(0);
        w[v] = branching_degree(g, v) + rest;
    }
    Ok(w)
}

/// Branching depth of every hyperedge: the cheapest node-weighted path from
/// the edge to a sink.
pub fn branching_depths(g: &InterfacedGraph) -> Result<Vec<usize>> {
    let w = node_weights(g)?;
    Ok(g.graph.edges.iter().map(|e| e.targets.iter().map(|t| w[*t]).min().unwrap_or(0)).collect())
}

pub fn branching_depth(g: &InterfacedGraph, h: EdgeId) -> Result<usize> {
    Ok(branching_depths(g)?[h])
}

pub fn depth_profile(g: &InterfacedGraph) -> Result<DepthProfile> {
    let d = branching_depths(g)?;
    let mut p = vec![0; d.iter().max().map_or(0, |m| m + 1)];
    for k in d {
        p[k] += 1;
    }
    Ok(p)
}

/// Reverse-lexicographic comparison: length first, then from the last
/// letter backwards.
pub fn revlex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

pub fn revlex_less(a: &[usize], b: &[usize]) -> bool {
    revlex_cmp(a, b) == Ordering::Less
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Structural,
    Naturality,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupStep {
    pub phase: Phase,
    pub accepted: bool,
    pub before: DepthProfile,
    pub after: DepthProfile,
    #[serde(flatten)]
    pub record: LogRecord,
}

#[derive(Clone, Debug)]
pub struct GroupRun {
    pub result: InterfacedGraph,
    /// Accepted steps, in order.
    pub steps: Vec<GroupStep>,
    /// Naturality candidates turned down by the profile gate.
    pub rejected: Vec<GroupStep>,
    pub fixpoint: bool,
}

impl GroupRun {
    pub fn log_json_lines(&self) -> String {
        self.steps.iter().map(|s| serde_json::to_string(s).expect("log serializes")).collect::<Vec<_>>().join("\n")
    }
}

/// Number of `m` edges whose target feeds the first input of another `m`.
pub fn left_nesting(g: &Hypergraph, m: crate::hypergraph::Label) -> usize {
    let mut first_of = vec![0usize; g.node_count()];
    for e in &g.edges {
        if e.label == m {
            first_of[e.sources[0]] += 1;
        }
    }
    g.edges.iter().filter(|e| e.label == m).map(|e| first_of[e.targets[0]]).sum()
}

/// Runs the strategy for at most `max_steps` accepted steps. `observe` sees
/// every accepted intermediate graph.
pub fn group_reduce_with(
    pack: &GroupPack,
    host: &InterfacedGraph,
    max_steps: usize,
    observe: &mut dyn FnMut(&GroupStep, &InterfacedGraph) -> Result<()>,
) -> Result<GroupRun> {
    let mut g = host.clone();
    let mut profile = depth_profile(&g)?;
    let mut steps = Vec::new();
    let mut rejected = Vec::new();
    while steps.len() < max_steps {
        let n = steps.len();
        let mut next: Option<(GroupStep, InterfacedGraph)> = None;
        for rule in &pack.structural {
            let mut err = None;
            for_each_match(rule, &g, &mut |m| match rewrite_step(rule, &m) {
                Ok(h) => match depth_profile(&h) {
                    Ok(after) => {
                        let step = GroupStep {
                            phase: Phase::Structural,
                            accepted: true,
                            before: profile.clone(),
                            after,
                            record: LogRecord::new(n, rule, &m),
                        };
                        next = Some((step, h));
                        false
                    }
                    Err(Error::Cyclic) => true,
                    Err(e) => {
                        err = Some(e);
                        false
                    }
                },
                Err(e) => {
                    err = Some(e);
                    false
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
            if next.is_some() {
                break;
            }
        }
        if next.is_none() {
            for rule in &pack.naturality {
                let mut err = None;
                for_each_match(rule, &g, &mut |m| {
                    let h = match rewrite_step(rule, &m) {
                        Ok(h) => h,
                        Err(e) => {
                            err = Some(e);
                            return false;
                        }
                    };
                    let after = match depth_profile(&h) {
                        Ok(p) => p,
                        Err(Error::Cyclic) => return true,
                        Err(e) => {
                            err = Some(e);
                            return false;
                        }
                    };
                    let accepted = revlex_less(&after, &profile);
                    let step = GroupStep {
                        phase: Phase::Naturality,
                        accepted,
                        before: profile.clone(),
                        after,
                        record: LogRecord::new(n, rule, &m),
                    };
                    if accepted {
                        next = Some((step, h));
                        false
                    } else {
                        rejected.push(step);
                        true
                    }
                })?;
                if let Some(e) = err {
                    return Err(e);
                }
                if next.is_some() {
                    break;
                }
            }
        }
        match next {
            None => return Ok(GroupRun { result: g, steps, rejected, fixpoint: true }),
            Some((step, h)) => {
                observe(&step, &h)?;
                profile = step.after.clone();
                g = h;
                steps.push(step);
            }
        }
    }
    Ok(GroupRun { result: g, steps, rejected, fixpoint: false })
}

pub fn group_reduce(pack: &GroupPack, host: &InterfacedGraph, max_steps: usize) -> Result<GroupRun> {
    group_reduce_with(pack, host, max_steps, &mut |_, _| Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{interp, parse};
    use crate::dpoi::first_match;
    use crate::hypergraph::Label;

    fn host(sig: &Signature, t: &str) -> InterfacedGraph {
        interp(sig, &parse(t, sig).unwrap()).unwrap().fold().0
    }

    #[test]
    fn branching_degree_cases() {
        let sig = group_signature();
        // a node with two connections
        let g = host(&sig, "i ; i");
        let mid = g.graph.edges[0].targets[0];
        assert_eq!(branching_degree(&g, mid), 0);
        // one connection plus three legs
        let g = host(&sig, "u ; frob.comult ; (frob.comult + id[1])");
        assert_eq!(branching_degree(&g, 0), 2);
    }

    #[test]
    fn depth_through_fan_out() {
        let sig = group_signature();
        // u -> v, v feeds three i edges whose targets are sinks
        let g = host(&sig, "u ; frob.comult ; (frob.comult + id[1]) ; (i + i + i) ; (frob.counit + frob.counit + frob.counit)");
        let d = branching_depths(&g).unwrap();
        let u_edge = g.graph.edges.iter().position(|e| e.sources.is_empty()).unwrap();
        // v has degree 4 and no legs: 2; each i target has degree 1: 0
        assert_eq!(d[u_edge], 2);
        assert_eq!(d.iter().filter(|k| **k == 0).count(), 3);
    }

    #[test]
    fn depth_takes_the_cheapest_route() {
        let sig = group_signature();
        // x -> i -> y (sink, deg 1 + leg... ) and x -> i -> z -> i -> w
        let g = host(&sig, "frob.comult ; (i + (i ; frob.comult ; (i + i)))");
        let d = branching_depths(&g).unwrap();
        let p = depth_profile(&g).unwrap();
        assert_eq!(p.iter().sum::<usize>(), g.graph.edge_count());
        // the edge feeding the fan-out node has depth 1, everything else 0
        assert_eq!(d.iter().filter(|k| **k == 1).count(), 1);
    }

    #[test]
    fn assoc_can_keep_left_nesting_constant() {
        // ((a . (p . q)) . c) -> (a . ((p . q) . c)): the nested pair moves
        let sig = group_signature();
        let pack = GroupPack::new(&sig).unwrap();
        let g = host(&sig, "(id[1] + m + id[1]) ; (m + id[1]) ; m");
        let m = Label::Gen(sig.gen_id("m").unwrap());
        let assoc = &pack.structural[0];
        let h = rewrite_step(assoc, &first_match(assoc, &g).unwrap().unwrap()).unwrap();
        assert_eq!(left_nesting(&g.graph, m), 1);
        assert_eq!(left_nesting(&h.graph, m), 1);
        assert!(first_match(assoc, &h).unwrap().is_some());
    }

    #[test]
    fn revlex_examples() {
        assert!(revlex_less(&[3], &[1, 1]));
        assert!(revlex_less(&[5, 2], &[0, 3]));
        assert!(revlex_less(&[1, 2], &[4, 2]));
        assert!(!revlex_less(&[1, 2], &[1, 2]));
        assert!(revlex_less(&[], &[0]));
    }

    #[test]
    fn left_unit_removes_two_edges() {
        let sig = group_signature();
        let pack = GroupPack::new(&sig).unwrap();
        let g = host(&sig, "(u + i) ; m ; i");
        let run = group_reduce(&pack, &g, 20).unwrap();
        assert!(run.fixpoint);
        assert_eq!(run.steps[0].record.rule, "left-unit");
        assert_eq!(run.result.graph.edge_count(), g.graph.edge_count() - 2);
    }

    #[test]
    fn inverse_collapses() {
        let sig = group_signature();
        let pack = GroupPack::new(&sig).unwrap();
        let g = host(&sig, "frob.comult ; (id[1] + i) ; m");
        let run = group_reduce(&pack, &g, 20).unwrap();
        let expected = host(&sig, "frob.counit ; u");
        assert!(crate::cospan::interfaced_iso(&run.result, &expected));
    }

    #[test]
    fn copied_inverse_is_not_pushed_back() {
        // i ; comult ; (i + i) would grow without bound under i-nat; the
        // gate stops it
        let sig = group_signature();
        let pack = GroupPack::new(&sig).unwrap();
        let g = host(&sig, "i ; frob.comult ; (id[1] + i)");
        let run = group_reduce(&pack, &g, 50).unwrap();
        assert!(run.fixpoint);
        for s in &run.steps {
            if s.phase == Phase::Naturality {
                assert!(revlex_less(&s.after, &s.before));
            }
        }
        assert!(run.rejected.iter().all(|s| !revlex_less(&s.after, &s.before)));
    }

    #[test]
    fn normal_host_unchanged() {
        let sig = group_signature();
        let pack = GroupPack::new(&sig).unwrap();
        let g = host(&sig, "(id[1] + m) ; m");
        let run = group_reduce(&pack, &g, 10).unwrap();
        assert!(run.steps.is_empty());
        assert_eq!(run.result, g);
    }

    #[test]
    fn cyclic_host_rejected() {
        let sig = group_signature();
        let pack = GroupPack::new(&sig).unwrap();
        let mut g = Hypergraph::new();
        let a = g.add_node(0);
        g.add_edge(crate::hypergraph::Label::Gen(1), vec![a], vec![a]);
        let h = InterfacedGraph::new(g, vec![]);
        assert_eq!(group_reduce(&pack, &h, 5).unwrap_err(), Error::Cyclic);
    }
}
