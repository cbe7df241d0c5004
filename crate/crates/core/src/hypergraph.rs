//! Labelled directed hypergraphs with ordered endpoints.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::signature::{ColourId, GenId, Signature};
use crate::unionfind::UnionFind;

pub type NodeId = usize;
pub type EdgeId = usize;

/// Hyperedge label: a signature generator or a colour changer `chg[a,b]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Gen(GenId),
    Chg(ColourId, ColourId),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: Label,
    pub sources: Vec<NodeId>,
    pub targets: Vec<NodeId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Source,
    Target,
}

/// An attachment of a node to a hyperedge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Connection {
    pub polarity: Polarity,
    pub edge: EdgeId,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Hypergraph {
    /// Colour of each node; the node id is the position.
    pub nodes: Vec<ColourId>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<EdgeId>,
}

impl Homomorphism {
    pub fn is_edge_injective(&self) -> bool {
        let mut seen = self.edges.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

impl Hypergraph {
    pub fn new() -> Self {
        Hypergraph::default()
    }

    pub fn add_node(&mut self, colour: ColourId) -> NodeId {
        self.nodes.push(colour);
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, label: Label, sources: Vec<NodeId>, targets: Vec<NodeId>) -> EdgeId {
        self.edges.push(Edge { label, sources, targets });
        self.edges.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty() && self.edges.is_empty()
    }

    /// All connections of `v`, ordered by edge then polarity then index.
    pub fn connections(&self, v: NodeId) -> Vec<Connection> {
        let mut out = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            for (i, s) in edge.sources.iter().enumerate() {
                if *s == v {
                    out.push(Connection { polarity: Polarity::Source, edge: e, index: i });
                }
            }
            for (i, t) in edge.targets.iter().enumerate() {
                if *t == v {
                    out.push(Connection { polarity: Polarity::Target, edge: e, index: i });
                }
            }
        }
        out
    }

    /// Number of connections, counting repeated attachments separately.
    pub fn degree(&self, v: NodeId) -> Result<usize> {
        if v >= self.nodes.len() {
            return Err(Error::Graph(format!("unknown node {v}")));
        }
        Ok(self.degrees()[v])
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for e in &self.edges {
            for v in e.sources.iter().chain(e.targets.iter()) {
                d[*v] += 1;
            }
        }
        d
    }

    /// Checks endpoint ids and, given a signature, the labelling condition.
    pub fn check(&self, sig: Option<&Signature>) -> Result<()> {
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.sources.iter().chain(e.targets.iter()) {
                if *v >= self.nodes.len() {
                    return Err(Error::Graph(format!("edge {i} refers to unknown node {v}")));
                }
            }
            if let Some(sig) = sig {
                if let Label::Gen(g) = e.label {
                    if g >= sig.generators.len() {
                        return Err(Error::Graph(format!("edge {i} has unknown generator {g}")));
                    }
                }
                let (a, b) = sig.label_type(&e.label);
                let sa: Vec<ColourId> = e.sources.iter().map(|v| self.nodes[*v]).collect();
                let tb: Vec<ColourId> = e.targets.iter().map(|v| self.nodes[*v]).collect();
                if sa != a || tb != b {
                    return Err(Error::Graph(format!(
                        "edge {i} labelled `{}` has endpoints of type {} -> {}, expected {} -> {}",
                        sig.label_name(&e.label),
                        sig.word_name(&sa),
                        sig.word_name(&tb),
                        sig.word_name(&a),
                        sig.word_name(&b)
                    )));
                }
            }
        }
        if let Some(sig) = sig {
            for (v, c) in self.nodes.iter().enumerate() {
                if *c >= sig.colours.len() {
                    return Err(Error::Graph(format!("node {v} has unknown colour {c}")));
                }
            }
        }
        Ok(())
    }

    /// Appends a copy of `other`; returns the node and edge offsets.
    pub fn append(&mut self, other: &Hypergraph) -> (usize, usize) {
        let no = self.nodes.len();
        let eo = self.edges.len();
        self.nodes.extend_from_slice(&other.nodes);
        for e in &other.edges {
            self.edges.push(Edge {
                label: e.label,
                sources: e.sources.iter().map(|v| v + no).collect(),
                targets: e.targets.iter().map(|v| v + no).collect(),
            });
        }
        (no, eo)
    }

    /// Quotient by a node partition given as dense class indices.
    pub fn quotient(&self, class: &[usize], count: usize) -> Result<Hypergraph> {
        let mut nodes = vec![usize::MAX; count];
        for (v, c) in class.iter().enumerate() {
            if nodes[*c] == usize::MAX {
                nodes[*c] = self.nodes[v];
            } else if nodes[*c] != self.nodes[v] {
                let first = class.iter().position(|d| d == c).unwrap_or(v);
                return Err(Error::ColourClash(first, v));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                label: e.label,
                sources: e.sources.iter().map(|v| class[*v]).collect(),
                targets: e.targets.iter().map(|v| class[*v]).collect(),
            })
            .collect();
        Ok(Hypergraph { nodes, edges })
    }

    /// Keeps the marked nodes and edges; kept edges must only touch kept nodes.
    /// Returns the subgraph and the old-to-new node and edge maps.
    pub fn restrict(
        &self,
        keep_nodes: &[bool],
        keep_edges: &[bool],
    ) -> (Hypergraph, Vec<Option<NodeId>>, Vec<Option<EdgeId>>) {
        let mut nmap = vec![None; self.nodes.len()];
        let mut g = Hypergraph::new();
        for (v, c) in self.nodes.iter().enumerate() {
            if keep_nodes[v] {
                nmap[v] = Some(g.add_node(*c));
            }
        }
        let mut emap = vec![None; self.edges.len()];
        for (i, e) in self.edges.iter().enumerate() {
            if keep_edges[i] {
                let s = e.sources.iter().map(|v| nmap[*v].expect("kept edge on removed node")).collect();
                let t = e.targets.iter().map(|v| nmap[*v].expect("kept edge on removed node")).collect();
                emap[i] = Some(g.add_edge(e.label, s, t));
            }
        }
        (g, nmap, emap)
    }

    /// Successor lists of the node graph: `s -> t` whenever some edge has
    /// `s` among its sources and `t` among its targets.
    pub fn node_successors(&self) -> Vec<Vec<NodeId>> {
        let mut succ = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            for s in &e.sources {
                for t in &e.targets {
                    succ[*s].push(*t);
                }
            }
        }
        for l in &mut succ {
            l.sort_unstable();
            l.dedup();
        }
        succ
    }

    /// True iff no directed path visits a node twice.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn ordering of the node graph, `None` when cyclic.
    pub fn topological_order(&self) -> Option<Vec<NodeId>> {
        let succ = self.node_successors();
        let mut indeg = vec![0usize; self.nodes.len()];
        for l in &succ {
            for t in l {
                indeg[*t] += 1;
            }
        }
        let mut stack: Vec<NodeId> = (0..self.nodes.len()).rev().filter(|v| indeg[*v] == 0).collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(v) = stack.pop() {
            order.push(v);
            for t in &succ[v] {
                indeg[*t] -= 1;
                if indeg[*t] == 0 {
                    stack.push(*t);
                }
            }
        }
        if order.len() == self.nodes.len() {
            Some(order)
        } else {
            None
        }
    }

    /// Incident edge lists per node.
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.nodes.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.sources.iter().chain(e.targets.iter()) {
                inc[*v].push(i);
            }
        }
        for l in &mut inc {
            l.dedup();
        }
        inc
    }

    /// Sorted multiset of (colour, label) pairs, a cheap isomorphism invariant.
    pub fn label_profile(&self) -> (Vec<ColourId>, Vec<Label>) {
        let mut c = self.nodes.clone();
        c.sort_unstable();
        let mut l: Vec<Label> = self.edges.iter().map(|e| e.label).collect();
        l.sort_unstable();
        (c, l)
    }
}

/// Enumerates homomorphisms `pattern -> host`, depth first, pattern edges in
/// the order given, candidate host edges in id order, then isolated pattern
/// nodes in id order. The callback returns `false` to stop.
struct Search<'a> {
    p: &'a Hypergraph,
    h: &'a Hypergraph,
    injective: bool,
    order: Vec<EdgeId>,
    isolated: Vec<NodeId>,
    by_label: BTreeMap<Label, Vec<EdgeId>>,
    node_map: Vec<Option<NodeId>>,
    edge_map: Vec<Option<EdgeId>>,
    node_used: Vec<usize>,
    edge_used: Vec<bool>,
    node_ok: &'a dyn Fn(NodeId, NodeId) -> bool,
}

impl<'a> Search<'a> {
    fn new(
        p: &'a Hypergraph,
        h: &'a Hypergraph,
        injective: bool,
        order: Vec<EdgeId>,
        node_ok: &'a dyn Fn(NodeId, NodeId) -> bool,
    ) -> Self {
        let mut touched = vec![false; p.nodes.len()];
        for e in &p.edges {
            for v in e.sources.iter().chain(e.targets.iter()) {
                touched[*v] = true;
            }
        }
        let isolated = (0..p.nodes.len()).filter(|v| !touched[*v]).collect();
        let mut by_label: BTreeMap<Label, Vec<EdgeId>> = BTreeMap::new();
        for (i, e) in h.edges.iter().enumerate() {
            by_label.entry(e.label).or_default().push(i);
        }
        Search {
            p,
            h,
            injective,
            order,
            isolated,
            by_label,
            node_map: vec![None; p.nodes.len()],
            edge_map: vec![None; p.edges.len()],
            node_used: vec![0; h.nodes.len()],
            edge_used: vec![false; h.edges.len()],
            node_ok,
        }
    }

    fn fix(&mut self, pv: NodeId, hv: NodeId) -> bool {
        match self.node_map[pv] {
            Some(x) => x == hv,
            None => {
                if self.p.nodes[pv] != self.h.nodes[hv] || !(self.node_ok)(pv, hv) {
                    return false;
                }
                if self.injective && self.node_used[hv] > 0 {
                    return false;
                }
                self.node_map[pv] = Some(hv);
                self.node_used[hv] += 1;
                true
            }
        }
    }

    fn unfix(&mut self, assigned: &[NodeId]) {
        for pv in assigned {
            if let Some(hv) = self.node_map[*pv].take() {
                self.node_used[hv] -= 1;
            }
        }
    }

    fn try_edge(&mut self, pe: EdgeId, he: EdgeId) -> Option<Vec<NodeId>> {
        let pedge = &self.p.edges[pe];
        let hedge = &self.h.edges[he];
        if pedge.sources.len() != hedge.sources.len() || pedge.targets.len() != hedge.targets.len() {
            return None;
        }
        let pairs: Vec<(NodeId, NodeId)> = pedge
            .sources
            .iter()
            .zip(hedge.sources.iter())
            .chain(pedge.targets.iter().zip(hedge.targets.iter()))
            .map(|(a, b)| (*a, *b))
            .collect();
        let mut assigned = Vec::new();
        for (pv, hv) in pairs {
            let was = self.node_map[pv].is_none();
            if !self.fix(pv, hv) {
                self.unfix(&assigned);
                return None;
            }
            if was {
                assigned.push(pv);
            }
        }
        Some(assigned)
    }

    fn run(&mut self, depth: usize, f: &mut dyn FnMut(&Homomorphism) -> bool) -> bool {
        if depth < self.order.len() {
            let pe = self.order[depth];
            let label = self.p.edges[pe].label;
            let cands = self.by_label.get(&label).cloned().unwrap_or_default();
            for he in cands {
                if self.injective && self.edge_used[he] {
                    continue;
                }
                if let Some(assigned) = self.try_edge(pe, he) {
                    self.edge_map[pe] = Some(he);
                    self.edge_used[he] = true;
                    let go_on = self.run(depth + 1, f);
                    self.edge_used[he] = false;
                    self.edge_map[pe] = None;
                    self.unfix(&assigned);
                    if !go_on {
                        return false;
                    }
                }
            }
            return true;
        }
        let k = depth - self.order.len();
        if k < self.isolated.len() {
            let pv = self.isolated[k];
            if self.node_map[pv].is_some() {
                return self.run(depth + 1, f);
            }
            for hv in 0..self.h.nodes.len() {
                if self.fix(pv, hv) {
                    let go_on = self.run(depth + 1, f);
                    self.unfix(&[pv]);
                    if !go_on {
                        return false;
                    }
                }
            }
            return true;
        }
        let hom = Homomorphism {
            nodes: self.node_map.iter().map(|x| x.expect("all nodes mapped")).collect(),
            edges: self.edge_map.iter().map(|x| x.expect("all edges mapped")).collect(),
        };
        f(&hom)
    }
}

/// Visits every homomorphism `pattern -> host` extending the `fixed` node
/// pairs, in deterministic order. Stop early by returning `false`.
pub fn for_each_homomorphism(
    pattern: &Hypergraph,
    host: &Hypergraph,
    fixed: &[(NodeId, NodeId)],
    f: &mut dyn FnMut(&Homomorphism) -> bool,
) {
    let ok = |_: NodeId, _: NodeId| true;
    let order: Vec<EdgeId> = (0..pattern.edges.len()).collect();
    let mut s = Search::new(pattern, host, false, order, &ok);
    for (pv, hv) in fixed {
        if *hv >= host.nodes.len() || !s.fix(*pv, *hv) {
            return;
        }
    }
    s.run(0, f);
}

/// All label- and colour-preserving homomorphisms, not necessarily injective.
pub fn find_homomorphisms(pattern: &Hypergraph, host: &Hypergraph) -> Vec<Homomorphism> {
    let mut out = Vec::new();
    for_each_homomorphism(pattern, host, &[], &mut |h| {
        out.push(h.clone());
        true
    });
    out
}

/// Edge order for isomorphism search: breadth first from the seeded nodes so
/// that endpoints are usually already fixed when an edge is tried.
fn connected_order(g: &Hypergraph, seeds: &[NodeId]) -> Vec<EdgeId> {
    let inc = g.incidence();
    let mut seen_e = vec![false; g.edges.len()];
    let mut seen_n = vec![false; g.nodes.len()];
    let mut order = Vec::new();
    let mut queue: std::collections::VecDeque<NodeId> = seeds.iter().copied().collect();
    for s in seeds {
        seen_n[*s] = true;
    }
    let mut next_start = 0;
    loop {
        while let Some(v) = queue.pop_front() {
            for e in &inc[v] {
                if !seen_e[*e] {
                    seen_e[*e] = true;
                    order.push(*e);
                    for w in g.edges[*e].sources.iter().chain(g.edges[*e].targets.iter()) {
                        if !seen_n[*w] {
                            seen_n[*w] = true;
                            queue.push_back(*w);
                        }
                    }
                }
            }
        }
        while next_start < g.edges.len() && seen_e[next_start] {
            next_start += 1;
        }
        if next_start == g.edges.len() {
            break;
        }
        seen_e[next_start] = true;
        order.push(next_start);
        for w in g.edges[next_start].sources.iter().chain(g.edges[next_start].targets.iter()) {
            if !seen_n[*w] {
                seen_n[*w] = true;
                queue.push_back(*w);
            }
        }
    }
    order
}

/// An isomorphism `g -> h` sending each `fixed.0` to `fixed.1`, if one exists.
/// `node_ok` may veto individual node pairs.
pub fn isomorphism_with(
    g: &Hypergraph,
    h: &Hypergraph,
    fixed: &[(NodeId, NodeId)],
    node_ok: &dyn Fn(NodeId, NodeId) -> bool,
) -> Option<Homomorphism> {
    if g.nodes.len() != h.nodes.len() || g.edges.len() != h.edges.len() {
        return None;
    }
    if g.label_profile() != h.label_profile() {
        return None;
    }
    let dg = g.degrees();
    let dh = h.degrees();
    {
        let mut a: Vec<(ColourId, usize)> = g.nodes.iter().copied().zip(dg.iter().copied()).collect();
        let mut b: Vec<(ColourId, usize)> = h.nodes.iter().copied().zip(dh.iter().copied()).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let ok = |a: NodeId, b: NodeId| dg[a] == dh[b] && node_ok(a, b);
    let seeds: Vec<NodeId> = fixed.iter().map(|p| p.0).collect();
    let order = connected_order(g, &seeds);
    let mut s = Search::new(g, h, true, order, &ok);
    for (a, b) in fixed {
        if *a >= g.nodes.len() || *b >= h.nodes.len() || !s.fix(*a, *b) {
            return None;
        }
    }
    let mut found = None;
    s.run(0, &mut |hom| {
        found = Some(hom.clone());
        false
    });
    found
}

pub fn are_isomorphic(g: &Hypergraph, h: &Hypergraph) -> Option<Homomorphism> {
    isomorphism_with(g, h, &[], &|_, _| true)
}

/// Pushout of `g <- K -> k` for a discrete `K` given by the two node maps.
/// Returns the glued graph and the injections of `g` and `k` (node maps; the
/// edges of `g` come first, then those of `k`).
pub fn pushout_discrete(
    g: &Hypergraph,
    f: &[NodeId],
    k: &Hypergraph,
    h: &[NodeId],
) -> Result<(Hypergraph, Vec<NodeId>, Vec<NodeId>)> {
    if f.len() != h.len() {
        return Err(Error::Graph("pushout legs have different lengths".into()));
    }
    let mut u = g.clone();
    let (off, _) = u.append(k);
    let mut uf = UnionFind::new(u.nodes.len());
    for (a, b) in f.iter().zip(h.iter()) {
        if *a >= g.nodes.len() || *b >= k.nodes.len() {
            return Err(Error::Graph("pushout leg refers to unknown node".into()));
        }
        if g.nodes[*a] != k.nodes[*b] {
            return Err(Error::ColourClash(*a, off + *b));
        }
        uf.union(*a, off + *b);
    }
    let (class, count) = uf.classes();
    let q = u.quotient(&class, count)?;
    let inj_g = class[..off].to_vec();
    let inj_k = class[off..].to_vec();
    Ok((q, inj_g, inj_k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(i: usize) -> Label {
        Label::Gen(i)
    }

    /// h1 : 3 -> 3, h2 : 2 -> 1, h3 : 1 -> 0 over nodes v1..v8.
    fn example_graph() -> Hypergraph {
        let mut g = Hypergraph::new();
        for _ in 0..8 {
            g.add_node(0);
        }
        g.add_edge(gen(0), vec![0, 1, 2], vec![4, 5, 5]);
        g.add_edge(gen(1), vec![2, 3], vec![7]);
        g.add_edge(gen(2), vec![5], vec![]);
        g
    }

    #[test]
    fn degree_counts_repeated_connections() {
        let g = example_graph();
        assert_eq!(g.degree(5).unwrap(), 3);
        assert_eq!(g.degree(6).unwrap(), 0);
        assert!(g.degree(8).is_err());
        let mut h = Hypergraph::new();
        h.add_node(0);
        h.add_node(0);
        h.add_edge(gen(0), vec![0, 0], vec![1]);
        assert_eq!(h.degree(0).unwrap(), 2);
    }

    #[test]
    fn example_graph_is_acyclic_by_path_enumeration() {
        let g = example_graph();
        // independent oracle: depth-first enumeration of all simple paths
        let succ = g.node_successors();
        fn revisits(v: usize, succ: &[Vec<usize>], stack: &mut Vec<usize>) -> bool {
            if stack.contains(&v) {
                return true;
            }
            stack.push(v);
            let r = succ[v].iter().any(|w| revisits(*w, succ, stack));
            stack.pop();
            r
        }
        let oracle = (0..g.node_count()).any(|v| revisits(v, &succ, &mut Vec::new()));
        assert!(!oracle);
        assert!(g.is_acyclic());
    }

    #[test]
    fn self_loop_is_cyclic() {
        let mut g = Hypergraph::new();
        g.add_node(0);
        g.add_edge(gen(0), vec![0], vec![0]);
        assert!(!g.is_acyclic());
        assert!(Hypergraph::new().is_acyclic());
    }

    #[test]
    fn homomorphisms_into_two_copies() {
        let mut p = Hypergraph::new();
        p.add_node(0);
        p.add_node(0);
        p.add_edge(gen(0), vec![0], vec![1]);
        let mut h = Hypergraph::new();
        h.append(&p);
        h.append(&p);
        let homs = find_homomorphisms(&p, &h);
        assert_eq!(homs.len(), 2);
        assert_eq!(homs[0].edges, vec![0]);
        assert_eq!(homs[1].edges, vec![1]);
    }

    #[test]
    fn no_homomorphism_without_colour() {
        let mut p = Hypergraph::new();
        p.add_node(1);
        let mut h = Hypergraph::new();
        h.add_node(0);
        h.add_node(0);
        assert!(find_homomorphisms(&p, &h).is_empty());
    }

    #[test]
    fn isomorphism_under_renumbering() {
        let g = example_graph();
        let perm = [3, 7, 0, 5, 1, 6, 2, 4];
        let mut h = Hypergraph::new();
        for _ in 0..8 {
            h.add_node(0);
        }
        for e in g.edges.iter().rev() {
            h.add_edge(
                e.label,
                e.sources.iter().map(|v| perm[*v]).collect(),
                e.targets.iter().map(|v| perm[*v]).collect(),
            );
        }
        let iso = are_isomorphic(&g, &h).expect("iso");
        assert_eq!(iso.nodes, perm.to_vec());
    }

    #[test]
    fn different_labels_not_isomorphic() {
        let g = example_graph();
        let mut h = g.clone();
        h.edges[2].label = gen(3);
        assert!(are_isomorphic(&g, &h).is_none());
    }

    #[test]
    fn pushout_of_frobenius_cospans() {
        // {0,1,2} + {3,4,5,6} glued along [5]
        let mut a = Hypergraph::new();
        for _ in 0..3 {
            a.add_node(0);
        }
        let mut b = Hypergraph::new();
        for _ in 0..4 {
            b.add_node(0);
        }
        let j = [0, 0, 2, 2, 2];
        let k = [0, 1, 1, 2, 3];
        let (q, ia, ib) = pushout_discrete(&a, &j, &b, &k).unwrap();
        assert_eq!(q.node_count(), 2);
        let x = ia[0];
        assert_eq!(ia, vec![x, 1 - x, x]);
        assert_eq!(ib, vec![x; 4]);
        assert_eq!(x, 0);
    }

    #[test]
    fn pushout_with_empty_apex_is_disjoint_union() {
        let g = example_graph();
        let (q, _, ib) = pushout_discrete(&g, &[], &g, &[]).unwrap();
        assert_eq!(q.node_count(), 16);
        assert_eq!(q.edge_count(), 6);
        assert_eq!(ib[0], 8);
    }

    #[test]
    fn pushout_along_identity_is_the_graph() {
        let g = example_graph();
        let id: Vec<usize> = (0..8).collect();
        let mut k = Hypergraph::new();
        for _ in 0..8 {
            k.add_node(0);
        }
        let (q, ig, _) = pushout_discrete(&g, &id, &k, &id).unwrap();
        assert_eq!(q, g);
        assert_eq!(ig, id);
    }

    #[test]
    fn pushout_rejects_colour_clash() {
        let mut a = Hypergraph::new();
        a.add_node(0);
        let mut b = Hypergraph::new();
        b.add_node(1);
        assert!(matches!(pushout_discrete(&a, &[0], &b, &[0]), Err(Error::ColourClash(..))));
    }
}
