//! Double-pushout rewriting with interfaces.
//!
//! A rule `L <- K -> R` comes from a pair of cospans with equal boundary
//! words; `K` is the discrete graph `inputs ++ outputs`. A match is a
//! homomorphism `L -> G` together with a pushout complement `C` through which
//! the host's interface `J -> G` factors.

use serde::Serialize;

use crate::cospan::{Cospan, InterfacedGraph};
use crate::error::{Error, Result};
use crate::hypergraph::{for_each_homomorphism, pushout_discrete, EdgeId, Homomorphism, Hypergraph, NodeId};
use crate::signature::{Signature, Word};
use crate::term::{interp, parse, Term};
use crate::unionfind::UnionFind;

/// Largest fibre whose set partitions are enumerated.
pub const FIBRE_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub name: String,
    pub lhs: Cospan,
    pub rhs: Cospan,
}

impl Rule {
    pub fn new(name: &str, lhs: Cospan, rhs: Cospan) -> Result<Rule> {
        if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
            return Err(Error::TypeMismatch(format!("rule `{name}`: sides have different boundaries")));
        }
        Ok(Rule { name: name.to_string(), lhs, rhs })
    }

    pub fn from_terms(sig: &Signature, name: &str, l: &Term, r: &Term) -> Result<Rule> {
        let (ld, lc) = l.type_of(sig)?;
        let (rd, rc) = r.type_of(sig)?;
        if ld != rd || lc != rc {
            return Err(Error::TypeMismatch(format!(
                "rule `{name}`: {} -> {} versus {} -> {}",
                sig.word_name(&ld),
                sig.word_name(&lc),
                sig.word_name(&rd),
                sig.word_name(&rc)
            )));
        }
        Rule::new(name, interp(sig, l)?, interp(sig, r)?)
    }

    /// Parses `name : lterm => rterm`.
    pub fn parse(src: &str, sig: &Signature) -> Result<Rule> {
        let (name, body) = src
            .split_once(':')
            .ok_or_else(|| Error::Format(format!("expected `name : l => r`, got `{src}`")))?;
        let (l, r) = body
            .split_once("=>")
            .ok_or_else(|| Error::Format(format!("rule `{}` has no `=>`", name.trim())))?;
        Rule::from_terms(sig, name.trim(), &parse(l, sig)?, &parse(r, sig)?)
    }

    /// `K -> L` as a node map.
    pub fn k_to_l(&self) -> Vec<NodeId> {
        self.lhs.inputs.iter().chain(self.lhs.outputs.iter()).copied().collect()
    }

    pub fn k_to_r(&self) -> Vec<NodeId> {
        self.rhs.inputs.iter().chain(self.rhs.outputs.iter()).copied().collect()
    }

    pub fn k_word(&self) -> Word {
        self.k_to_l().iter().map(|v| self.lhs.graph.nodes[*v]).collect()
    }

    pub fn left_is_mono(&self) -> bool {
        let mut k = self.k_to_l();
        k.sort_unstable();
        k.windows(2).all(|w| w[0] != w[1])
    }

    pub fn reversed(&self) -> Rule {
        Rule { name: format!("{}^-1", self.name), lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }
}

/// Why a homomorphism is not a match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Host edge `edge` outside the image touches `node`, the image of an
    /// interior node of `L`.
    Dangling { node: NodeId, edge: EdgeId },
    /// Two `L` nodes, not both on the boundary, are merged at host node `node`.
    IdentifiesNodes { node: NodeId, a: NodeId, b: NodeId },
    /// Two `L` edges are sent to the same host edge.
    IdentifiesEdges { edge: EdgeId, a: EdgeId, b: EdgeId },
    /// The host interface has a leg on the image of an interior node.
    Interface { node: NodeId, leg: usize },
}

fn boundary_mask(rule: &Rule) -> Vec<bool> {
    let mut b = vec![false; rule.lhs.graph.node_count()];
    for v in rule.k_to_l() {
        b[v] = true;
    }
    b
}

/// The gluing conditions: no dangling edges and no identification.
pub fn check_conditions(rule: &Rule, host: &Hypergraph, hom: &Homomorphism) -> std::result::Result<(), Violation> {
    let boundary = boundary_mask(rule);
    for (a, ha) in hom.edges.iter().enumerate() {
        if let Some(b) = hom.edges[..a].iter().position(|hb| hb == ha) {
            return Err(Violation::IdentifiesEdges { edge: *ha, a: b, b: a });
        }
    }
    for a in 0..hom.nodes.len() {
        for b in 0..a {
            if hom.nodes[a] == hom.nodes[b] && !(boundary[a] && boundary[b]) {
                return Err(Violation::IdentifiesNodes { node: hom.nodes[a], a: b, b: a });
            }
        }
    }
    let interior: Vec<bool> = {
        let mut m = vec![false; host.node_count()];
        for (v, hv) in hom.nodes.iter().enumerate() {
            if !boundary[v] {
                m[*hv] = true;
            }
        }
        m
    };
    let mut in_image = vec![false; host.edge_count()];
    for e in &hom.edges {
        in_image[*e] = true;
    }
    for (e, edge) in host.edges.iter().enumerate() {
        if in_image[e] {
            continue;
        }
        for v in edge.sources.iter().chain(edge.targets.iter()) {
            if interior[*v] {
                return Err(Violation::Dangling { node: *v, edge: e });
            }
        }
    }
    Ok(())
}

/// A pushout complement `K -> C -> G` with the interface factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub graph: Hypergraph,
    pub k_map: Vec<NodeId>,
    pub to_host: Homomorphism,
    pub interface: Vec<NodeId>,
    /// Chosen partition as a class index per fibre element (empty when the
    /// complement is unique).
    pub partition: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Match {
    pub hom: Homomorphism,
    pub complement: Complement,
}

/// The unique complement when `K -> L` is mono: remove the image of the
/// interior of `L`. `None` when the host interface does not factor.
pub fn complement_mono(rule: &Rule, host: &InterfacedGraph, hom: &Homomorphism) -> Result<Option<Complement>> {
    if !rule.left_is_mono() {
        return Err(Error::Graph(format!("rule `{}` has a non-injective boundary", rule.name)));
    }
    if let Err(v) = check_conditions(rule, &host.graph, hom) {
        return Err(Error::Graph(format!("not a match: {v:?}")));
    }
    let g = &host.graph;
    let boundary = boundary_mask(rule);
    let mut keep_n = vec![true; g.node_count()];
    for (v, hv) in hom.nodes.iter().enumerate() {
        if !boundary[v] {
            keep_n[*hv] = false;
        }
    }
    let mut keep_e = vec![true; g.edge_count()];
    for e in &hom.edges {
        keep_e[*e] = false;
    }
    if host.interface.iter().any(|v| !keep_n[*v]) {
        return Ok(None);
    }
    let (c, nmap, emap) = g.restrict(&keep_n, &keep_e);
    let mut to_nodes = vec![0; c.node_count()];
    for (v, m) in nmap.iter().enumerate() {
        if let Some(m) = m {
            to_nodes[*m] = v;
        }
    }
    let mut to_edges = vec![0; c.edge_count()];
    for (e, m) in emap.iter().enumerate() {
        if let Some(m) = m {
            to_edges[*m] = e;
        }
    }
    let k_map = rule.k_to_l().iter().map(|v| nmap[hom.nodes[*v]].expect("boundary kept")).collect();
    let interface = host.interface.iter().map(|v| nmap[*v].expect("checked")).collect();
    Ok(Some(Complement {
        graph: c,
        k_map,
        to_host: Homomorphism { nodes: to_nodes, edges: to_edges },
        interface,
        partition: Vec::new(),
    }))
}

/// An element of the exploded context lying over an image node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum FibreElement {
    /// Boundary node `k` of the rule.
    Boundary(usize),
    /// Fresh copy of an endpoint of a host edge outside the image.
    Endpoint { edge: EdgeId, polarity: char, index: usize },
    /// Fresh copy of the host interface leg at this position.
    Leg(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibre {
    pub host_node: NodeId,
    /// Exploded-context node ids, with what each one stands for.
    pub elements: Vec<(NodeId, FibreElement)>,
}

/// Result of enumerating all complements for one homomorphism.
#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    pub fibres: Vec<Fibre>,
    /// Size of the space of combined fibre partitions.
    pub examined: usize,
    pub complements: Vec<Complement>,
}

/// All restricted-growth strings of length `n` (set partitions of `0..n`).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 0 } else { max + 1 };
        for b in 0..=limit {
            cur.push(b);
            go(cur, max.max(b), n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

/// Enumerates pushout complements through the exploded context `K + G~`,
/// quotienting only inside fibres over image nodes. A quotient is kept when
/// pushing it out along `K -> L` gives back exactly the host.
pub fn complements_enumerate(rule: &Rule, host: &InterfacedGraph, hom: &Homomorphism) -> Result<Enumeration> {
    let g = &host.graph;
    if !hom.is_edge_injective() {
        return Ok(Enumeration::default());
    }
    let k_to_l = rule.k_to_l();
    let mut in_image = vec![false; g.node_count()];
    for hv in &hom.nodes {
        in_image[*hv] = true;
    }
    let mut edge_in_image = vec![false; g.edge_count()];
    for e in &hom.edges {
        edge_in_image[*e] = true;
    }

    // exploded context: K first, then host nodes outside the image, then
    // fresh copies created while attaching edges and interface legs
    let mut x = Hypergraph::new();
    let mut q: Vec<NodeId> = Vec::new();
    let mut tag: Vec<Option<FibreElement>> = Vec::new();
    for (k, lv) in k_to_l.iter().enumerate() {
        x.add_node(rule.lhs.graph.nodes[*lv]);
        q.push(hom.nodes[*lv]);
        tag.push(Some(FibreElement::Boundary(k)));
    }
    let mut outside = vec![usize::MAX; g.node_count()];
    for v in 0..g.node_count() {
        if !in_image[v] {
            outside[v] = x.add_node(g.nodes[v]);
            q.push(v);
            tag.push(None);
        }
    }
    let fresh = |x: &mut Hypergraph, v: NodeId, t: FibreElement, q: &mut Vec<NodeId>, tag: &mut Vec<_>| {
        if in_image[v] {
            let n = x.add_node(g.nodes[v]);
            q.push(v);
            tag.push(Some(t));
            n
        } else {
            outside[v]
        }
    };
    let mut x_edges = Vec::new();
    for (e, edge) in g.edges.iter().enumerate() {
        if edge_in_image[e] {
            continue;
        }
        let s = edge
            .sources
            .iter()
            .enumerate()
            .map(|(i, v)| fresh(&mut x, *v, FibreElement::Endpoint { edge: e, polarity: 's', index: i }, &mut q, &mut tag))
            .collect();
        let t = edge
            .targets
            .iter()
            .enumerate()
            .map(|(i, v)| fresh(&mut x, *v, FibreElement::Endpoint { edge: e, polarity: 't', index: i }, &mut q, &mut tag))
            .collect();
        x.add_edge(edge.label, s, t);
        x_edges.push(e);
    }
    let x_iface: Vec<NodeId> = host
        .interface
        .iter()
        .enumerate()
        .map(|(j, v)| fresh(&mut x, *v, FibreElement::Leg(j), &mut q, &mut tag))
        .collect();

    let mut fibres = Vec::new();
    for v in 0..g.node_count() {
        if !in_image[v] {
            continue;
        }
        let elements: Vec<(NodeId, FibreElement)> = (0..x.node_count())
            .filter(|n| q[*n] == v && tag[*n].is_some())
            .map(|n| (n, tag[n].expect("tagged")))
            .collect();
        if elements.len() > FIBRE_LIMIT {
            return Err(Error::FibreTooLarge { node: v, size: elements.len(), limit: FIBRE_LIMIT });
        }
        fibres.push(Fibre { host_node: v, elements });
    }

    // Gluing along K -> L stays inside a fibre, so a combined quotient is a
    // complement iff every fibre on its own glues back to a single node.
    let mut l_over: Vec<Vec<NodeId>> = vec![Vec::new(); g.node_count()];
    for (lv, hv) in hom.nodes.iter().enumerate() {
        l_over[*hv].push(lv);
    }
    let mut examined = 1usize;
    let mut choices: Vec<Vec<Vec<usize>>> = Vec::new();
    for f in &fibres {
        let all = set_partitions(f.elements.len());
        examined = examined.saturating_mul(all.len());
        let ls = &l_over[f.host_node];
        let ok = |rgs: &Vec<usize>| {
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            let mut uf = UnionFind::new(blocks + ls.len());
            for (i, (_, t)) in f.elements.iter().enumerate() {
                if let FibreElement::Boundary(k) = t {
                    let at = ls.iter().position(|l| *l == k_to_l[*k]).expect("boundary lies over its L node");
                    uf.union(rgs[i], blocks + at);
                }
            }
            uf.classes().1 == 1
        };
        choices.push(all.into_iter().filter(ok).collect());
    }
    let mut odometer = vec![0usize; fibres.len()];
    let mut out = Enumeration { fibres, examined, complements: Vec::new() };
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        let mut uf = UnionFind::new(x.node_count());
        let mut flat = Vec::new();
        for (f, fibre) in out.fibres.iter().enumerate() {
            let rgs = &choices[f][odometer[f]];
            let mut first = vec![usize::MAX; fibre.elements.len()];
            for (i, (n, _)) in fibre.elements.iter().enumerate() {
                if first[rgs[i]] == usize::MAX {
                    first[rgs[i]] = *n;
                } else {
                    uf.union(first[rgs[i]], *n);
                }
            }
            flat.extend_from_slice(rgs);
        }
        let (class, count) = uf.classes();
        let c = x.quotient(&class, count)?;
        let k_map: Vec<NodeId> = (0..k_to_l.len()).map(|k| class[k]).collect();
        let (p, _, _) = pushout_discrete(&rule.lhs.graph, &k_to_l, &c, &k_map)?;
        if p.node_count() == g.node_count() {
            let mut to_nodes = vec![0; count];
            for n in 0..x.node_count() {
                to_nodes[class[n]] = q[n];
            }
            let comp = Complement {
                graph: c,
                k_map,
                to_host: Homomorphism { nodes: to_nodes, edges: x_edges.clone() },
                interface: x_iface.iter().map(|n| class[*n]).collect(),
                partition: flat,
            };
            verify_square(rule, host, hom, &comp)?;
            out.complements.push(comp);
        }
        // advance the odometer, last fibre fastest
        let mut i = out.fibres.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            odometer[i] += 1;
            if odometer[i] < choices[i].len() {
                break;
            }
            odometer[i] = 0;
        }
    }
}

/// Checks that `L +_K C` maps isomorphically onto the host via `hom` and
/// `to_host`, and that the interface factors.
pub fn verify_square(rule: &Rule, host: &InterfacedGraph, hom: &Homomorphism, c: &Complement) -> Result<()> {
    let g = &host.graph;
    let k_to_l = rule.k_to_l();
    for (k, lv) in k_to_l.iter().enumerate() {
        if hom.nodes[*lv] != c.to_host.nodes[c.k_map[k]] {
            return Err(Error::Graph("square does not commute".into()));
        }
    }
    let (p, il, ic) = pushout_discrete(&rule.lhs.graph, &k_to_l, &c.graph, &c.k_map)?;
    let mut to_g = vec![usize::MAX; p.node_count()];
    for (v, pv) in il.iter().enumerate() {
        to_g[*pv] = hom.nodes[v];
    }
    for (v, pv) in ic.iter().enumerate() {
        if to_g[*pv] != usize::MAX && to_g[*pv] != c.to_host.nodes[v] {
            return Err(Error::Graph("induced map is not well defined".into()));
        }
        to_g[*pv] = c.to_host.nodes[v];
    }
    let mut seen = vec![false; g.node_count()];
    for t in &to_g {
        if seen[*t] {
            return Err(Error::Graph("induced map is not injective".into()));
        }
        seen[*t] = true;
    }
    let edge_to_g: Vec<EdgeId> = hom.edges.iter().chain(c.to_host.edges.iter()).copied().collect();
    if p.edge_count() != g.edge_count() {
        return Err(Error::Graph("edge count differs from host".into()));
    }
    let mut eseen = vec![false; g.edge_count()];
    for (pe, ge) in edge_to_g.iter().enumerate() {
        if eseen[*ge] {
            return Err(Error::Graph("edge fibre is not trivial".into()));
        }
        eseen[*ge] = true;
        let a = &p.edges[pe];
        let b = &g.edges[*ge];
        let s: Vec<NodeId> = a.sources.iter().map(|v| to_g[*v]).collect();
        let t: Vec<NodeId> = a.targets.iter().map(|v| to_g[*v]).collect();
        if a.label != b.label || s != b.sources || t != b.targets {
            return Err(Error::Graph("induced map is not a homomorphism".into()));
        }
    }
    for (j, v) in host.interface.iter().enumerate() {
        if c.to_host.nodes[c.interface[j]] != *v {
            return Err(Error::Graph("interface does not factor".into()));
        }
    }
    Ok(())
}

/// Visits the matches of `rule` in `host` in deterministic order.
pub fn for_each_match(
    rule: &Rule,
    host: &InterfacedGraph,
    f: &mut dyn FnMut(Match) -> bool,
) -> Result<()> {
    let mono = rule.left_is_mono();
    let mut err = None;
    for_each_homomorphism(&rule.lhs.graph, &host.graph, &[], &mut |hom| {
        if check_conditions(rule, &host.graph, hom).is_err() {
            return true;
        }
        if mono {
            match complement_mono(rule, host, hom) {
                Ok(Some(c)) => f(Match { hom: hom.clone(), complement: c }),
                Ok(None) => true,
                Err(e) => {
                    err = Some(e);
                    false
                }
            }
        } else {
            match complements_enumerate(rule, host, hom) {
                Ok(en) => {
                    for c in en.complements {
                        if !f(Match { hom: hom.clone(), complement: c }) {
                            return false;
                        }
                    }
                    true
                }
                Err(e) => {
                    err = Some(e);
                    false
                }
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

pub fn find_matches(rule: &Rule, host: &InterfacedGraph) -> Result<Vec<Match>> {
    let mut out = Vec::new();
    for_each_match(rule, host, &mut |m| {
        out.push(m);
        true
    })?;
    Ok(out)
}

pub fn first_match(rule: &Rule, host: &InterfacedGraph) -> Result<Option<Match>> {
    let mut out = None;
    for_each_match(rule, host, &mut |m| {
        out = Some(m);
        false
    })?;
    Ok(out)
}

/// The second pushout `C <- K -> R`, carrying the interface along.
pub fn rewrite_step(rule: &Rule, m: &Match) -> Result<InterfacedGraph> {
    let c = &m.complement;
    let (h, ic, _) = pushout_discrete(&c.graph, &c.k_map, &rule.rhs.graph, &rule.k_to_r())?;
    Ok(InterfacedGraph { graph: h, interface: c.interface.iter().map(|v| ic[*v]).collect() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogRecord {
    pub step: usize,
    pub rule: String,
    pub hom_nodes: Vec<NodeId>,
    pub hom_edges: Vec<EdgeId>,
    pub partition: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LogRecord {
    pub fn new(step: usize, rule: &Rule, m: &Match) -> LogRecord {
        LogRecord {
            step,
            rule: rule.name.clone(),
            hom_nodes: m.hom.nodes.clone(),
            hom_edges: m.hom.edges.clone(),
            partition: m.complement.partition.clone(),
            note: None,
        }
    }
}

/// A derivation: the final graph, the log, and whether it stopped at a
/// fixpoint (`false` means the step budget ran out).
#[derive(Clone, Debug)]
pub struct Derivation {
    pub result: InterfacedGraph,
    pub log: Vec<LogRecord>,
    pub fixpoint: bool,
}

impl Derivation {
    pub fn log_json_lines(&self) -> String {
        self.log
            .iter()
            .map(|r| serde_json::to_string(r).expect("log serializes"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Picks the next step: a rule index and one of its matches.
pub type Strategy<'a> = dyn FnMut(&[Rule], &InterfacedGraph) -> Result<Option<(usize, Match)>> + 'a;

/// First rule (in order) with a match, first match.
pub fn first_match_strategy(rules: &[Rule], host: &InterfacedGraph) -> Result<Option<(usize, Match)>> {
    for (i, r) in rules.iter().enumerate() {
        if let Some(m) = first_match(r, host)? {
            return Ok(Some((i, m)));
        }
    }
    Ok(None)
}

pub fn rewrite_closure(
    rules: &[Rule],
    host: &InterfacedGraph,
    max_steps: usize,
    strategy: &mut Strategy<'_>,
) -> Result<Derivation> {
    let mut g = host.clone();
    let mut log = Vec::new();
    for step in 0..max_steps {
        match strategy(rules, &g)? {
            None => return Ok(Derivation { result: g, log, fixpoint: true }),
            Some((i, m)) => {
                g = rewrite_step(&rules[i], &m)?;
                log.push(LogRecord::new(step, &rules[i], &m));
            }
        }
    }
    let fixpoint = strategy(rules, &g)?.is_none();
    Ok(Derivation { result: g, log, fixpoint })
}

impl std::fmt::Display for FibreElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FibreElement::Boundary(k) => write!(f, "k{k}"),
            FibreElement::Endpoint { edge, polarity, index } => write!(f, "e{edge}.{polarity}{index}"),
            FibreElement::Leg(j) => write!(f, "j{j}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cospan::interfaced_iso;

    fn fg() -> Signature {
        Signature::parse("f : 1 -> 1\ng : 1 -> 1\n").unwrap()
    }

    fn host(sig: &Signature, t: &str) -> InterfacedGraph {
        interp(sig, &parse(t, sig).unwrap()).unwrap().fold().0
    }

    #[test]
    fn boundary_of_identity_rule_is_not_mono() {
        let s = fg();
        let r = Rule::parse("r : id[1] => f ; g", &s).unwrap();
        assert!(!r.left_is_mono());
        assert_eq!(r.lhs.graph.node_count(), 1);
        assert_eq!(r.k_to_l(), vec![0, 0]);
        let lr = Rule::parse("r : f ; g => id[1]", &s).unwrap();
        assert!(lr.left_is_mono());
    }

    #[test]
    fn bell_numbers() {
        let b: Vec<usize> = (0..7).map(|n| set_partitions(n).len()).collect();
        assert_eq!(b, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn dangling_witness() {
        let s = fg();
        let r = Rule::parse("r : f ; g => id[1]", &s).unwrap();
        // host f ; g with an extra g hanging off the middle node
        let mut h = host(&s, "f ; g");
        h.graph.add_node(0);
        let mid = h.graph.edges[0].targets[0];
        h.graph.add_edge(crate::hypergraph::Label::Gen(1), vec![mid], vec![2]);
        let homs = crate::hypergraph::find_homomorphisms(&r.lhs.graph, &h.graph);
        let v = check_conditions(&r, &h.graph, &homs[0]).unwrap_err();
        assert_eq!(v, Violation::Dangling { node: mid, edge: 2 });
    }

    #[test]
    fn identification_witness() {
        let s = Signature::parse("h : 1 -> 1\n").unwrap();
        let r = Rule::parse("r : h ; h => h", &s).unwrap();
        // a single h loop forces all three L nodes together
        let mut g = Hypergraph::new();
        g.add_node(0);
        g.add_edge(crate::hypergraph::Label::Gen(0), vec![0], vec![0]);
        let hom = Homomorphism { nodes: vec![0, 0, 0], edges: vec![0, 0] };
        assert!(matches!(check_conditions(&r, &g, &hom), Err(Violation::IdentifiesEdges { .. })));
        let hom2 = Homomorphism { nodes: vec![0, 0, 0], edges: vec![0, 1] };
        g.add_edge(crate::hypergraph::Label::Gen(0), vec![0], vec![0]);
        assert!(matches!(check_conditions(&r, &g, &hom2), Err(Violation::IdentifiesNodes { .. })));
    }

    #[test]
    fn identity_rule_complement_is_host() {
        let s = fg();
        let r = Rule::parse("r : f => f", &s).unwrap();
        let h = host(&s, "f ; g ; f");
        let ms = find_matches(&r, &h).unwrap();
        assert_eq!(ms.len(), 2);
        for m in &ms {
            let out = rewrite_step(&r, m).unwrap();
            assert!(interfaced_iso(&out, &h));
        }
    }

    #[test]
    fn swap_rewrite() {
        let s = fg();
        let r = Rule::parse("swap : f ; g => g ; f", &s).unwrap();
        let h = host(&s, "f ; g ; f");
        let ms = find_matches(&r, &h).unwrap();
        assert_eq!(ms.len(), 1);
        let out = rewrite_step(&r, &ms[0]).unwrap();
        assert!(interfaced_iso(&out, &host(&s, "g ; f ; f")));
    }

    #[test]
    fn mono_enumeration_agrees_with_complement_mono() {
        let s = fg();
        let r = Rule::parse("swap : f ; g => g ; f", &s).unwrap();
        let h = host(&s, "(f ; g) + (f ; g ; f)");
        for hom in crate::hypergraph::find_homomorphisms(&r.lhs.graph, &h.graph) {
            let a = complement_mono(&r, &h, &hom).unwrap().unwrap();
            let en = complements_enumerate(&r, &h, &hom).unwrap();
            assert_eq!(en.complements.len(), 1);
            let b = &en.complements[0];
            let ia = InterfacedGraph { graph: a.graph.clone(), interface: a.k_map.iter().chain(a.interface.iter()).copied().collect() };
            let ib = InterfacedGraph { graph: b.graph.clone(), interface: b.k_map.iter().chain(b.interface.iter()).copied().collect() };
            assert!(interfaced_iso(&ia, &ib));
        }
    }

    #[test]
    fn interface_blocks_match() {
        // the interface pins the middle node of f ; g
        let s = fg();
        let r = Rule::parse("r : f ; g => id[1]", &s).unwrap();
        let mut h = host(&s, "f ; g");
        let mid = h.graph.edges[0].targets[0];
        h.interface.push(mid);
        assert!(find_matches(&r, &h).unwrap().is_empty());
    }

    #[test]
    fn section_example_counts() {
        let s = fg();
        let h = host(&s, "(f ; g) + (f ; g)");
        let lr = Rule::parse("lr : f ; g => id[1]", &s).unwrap();
        assert_eq!(find_matches(&lr, &h).unwrap().len(), 2);

        let rl = lr.reversed();
        let a1 = h.graph.edges[0].targets[0];
        let hom = Homomorphism { nodes: vec![a1], edges: vec![] };
        let en = complements_enumerate(&rl, &h, &hom).unwrap();
        let big: Vec<&Fibre> = en.fibres.iter().filter(|f| f.elements.len() > 1).collect();
        assert_eq!(big.len(), 1);
        let names: Vec<String> = big[0].elements.iter().map(|e| e.1.to_string()).collect();
        assert_eq!(names, vec!["k0", "k1", "e0.t0", "e1.s0"]);
        assert_eq!(en.examined, 15);
        assert_eq!(en.complements.len(), 5);
        let results: Vec<InterfacedGraph> = en
            .complements
            .iter()
            .map(|c| rewrite_step(&rl, &Match { hom: hom.clone(), complement: c.clone() }).unwrap())
            .collect();
        for i in 0..5 {
            for j in 0..i {
                assert!(!interfaced_iso(&results[i], &results[j]), "{i} ~ {j}");
            }
        }
    }

    #[test]
    fn empty_rule_set_is_fixpoint() {
        let s = fg();
        let h = host(&s, "f ; g");
        let d = rewrite_closure(&[], &h, 10, &mut first_match_strategy).unwrap();
        assert!(d.fixpoint);
        assert!(d.log.is_empty());
        assert_eq!(d.result, h);
    }

    #[test]
    fn expanding_rule_exhausts_budget() {
        let s = fg();
        let r = Rule::parse("grow : f => f ; g ; f", &s).unwrap();
        let h = host(&s, "f");
        let d = rewrite_closure(&[r], &h, 25, &mut first_match_strategy).unwrap();
        assert!(!d.fixpoint);
        assert_eq!(d.log.len(), 25);
    }
}
