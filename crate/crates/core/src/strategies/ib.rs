//! Interacting bialgebras: black and red Frobenius colours joined by
//! changers. Interior black nodes are eliminated one at a time with `K_mn`,
//! after which the boundary is tidied into reduced form.
//!
//! The graph operations are written directly rather than through DPOI
//! matching: edge direction is irrelevant up to rule (D), and parallel
//! black-red edges cancel in pairs by rule (H).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cospan::InterfacedGraph;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Label, NodeId};
use crate::semantics::gf2::IbColours;
use crate::signature::Signature;

/// Two Frobenius colours, `b` (variables) and `r` (parity).
pub fn ib_signature() -> Signature {
    Signature::new(&["b", "r"])
}

pub const IB: IbColours = IbColours { black: 0, red: 1 };

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IbEvent {
    pub step: usize,
    pub action: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<NodeId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<NodeId>,
    pub added: usize,
    pub removed: usize,
}

#[derive(Clone, Debug)]
pub struct IbRun {
    pub result: InterfacedGraph,
    pub n_inputs: usize,
    pub initial_interior: usize,
    /// Iterations of the elimination loop.
    pub iterations: usize,
    pub log: Vec<IbEvent>,
}

impl IbRun {
    pub fn log_json_lines(&self) -> String {
        self.log.iter().map(|e| serde_json::to_string(e).expect("log serializes")).collect::<Vec<_>>().join("\n")
    }
}

fn check_bipartite(g: &InterfacedGraph, c: IbColours) -> Result<()> {
    for (i, e) in g.graph.edges.iter().enumerate() {
        let ok = matches!(e.label, Label::Chg(..)) && e.sources.len() == 1 && e.targets.len() == 1 && {
            let (a, b) = (g.graph.nodes[e.sources[0]], g.graph.nodes[e.targets[0]]);
            (a == c.black && b == c.red) || (a == c.red && b == c.black)
        };
        if !ok {
            return Err(Error::Graph(format!("edge {i} is not a changer between the two colours")));
        }
    }
    if let Some(v) = g.graph.nodes.iter().position(|col| *col != c.black && *col != c.red) {
        return Err(Error::Graph(format!("node {v} has a third colour")));
    }
    Ok(())
}

/// Interior nodes of the primary colour, in id order.
pub fn interior_black(g: &InterfacedGraph, c: IbColours) -> Vec<NodeId> {
    let legs = g.leg_counts();
    (0..g.graph.node_count()).filter(|v| g.graph.nodes[*v] == c.black && legs[*v] == 0).collect()
}

/// Neighbours across an odd number of edges, in id order.
fn neighbours(g: &Hypergraph, v: NodeId) -> Vec<NodeId> {
    let mut count: BTreeMap<NodeId, usize> = BTreeMap::new();
    for e in &g.edges {
        let (s, t) = (e.sources[0], e.targets[0]);
        if s == v {
            *count.entry(t).or_default() += 1;
        } else if t == v {
            *count.entry(s).or_default() += 1;
        }
    }
    count.into_iter().filter(|(_, k)| k % 2 == 1).map(|(u, _)| u).collect()
}

fn remove(g: &InterfacedGraph, nodes: &[NodeId], edges: &[bool]) -> InterfacedGraph {
    let mut keep_n = vec![true; g.graph.node_count()];
    for v in nodes {
        keep_n[*v] = false;
    }
    let keep_e: Vec<bool> = edges.iter().map(|k| !k).collect();
    let (h, nmap, _) = g.graph.restrict(&keep_n, &keep_e);
    InterfacedGraph {
        graph: h,
        interface: g.interface.iter().map(|v| nmap[*v].expect("legs stay on kept nodes")).collect(),
    }
}

/// Rule (H) on every parallel pair, then (U) on isolated secondary nodes
/// without legs. Returns the new graph and the number of removed edges and
/// nodes.
pub fn cancel_parallel(g: &InterfacedGraph, c: IbColours) -> (InterfacedGraph, usize, usize) {
    let mut groups: BTreeMap<(NodeId, NodeId), Vec<usize>> = BTreeMap::new();
    for (i, e) in g.graph.edges.iter().enumerate() {
        let (s, t) = (e.sources[0], e.targets[0]);
        groups.entry((s.min(t), s.max(t))).or_default().push(i);
    }
    let mut drop = vec![false; g.graph.edge_count()];
    let mut dropped = 0;
    for es in groups.values() {
        let cancel = es.len() - es.len() % 2;
        for i in &es[es.len() - cancel..] {
            drop[*i] = true;
            dropped += 1;
        }
    }
    let legs = g.leg_counts();
    let mut touched = vec![false; g.graph.node_count()];
    for (i, e) in g.graph.edges.iter().enumerate() {
        if !drop[i] {
            touched[e.sources[0]] = true;
            touched[e.targets[0]] = true;
        }
    }
    let isolated: Vec<NodeId> = (0..g.graph.node_count())
        .filter(|v| g.graph.nodes[*v] == c.red && legs[*v] == 0 && !touched[*v])
        .collect();
    let n = isolated.len();
    (remove(g, &isolated, &drop), dropped, n)
}

/// Outcome of one `K_mn` application.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KmnReport {
    /// Other secondary neighbours of `v`.
    pub m: usize,
    /// Other primary neighbours of `w`.
    pub n: usize,
    /// Edges left after cancelling against existing ones.
    pub added: usize,
    pub cancelled: usize,
}

/// Removes the interior node `v` and its neighbour `w`, joining every other
/// neighbour of `v` to every other neighbour of `w`; parallel pairs then
/// cancel.
pub fn apply_kmn(g: &InterfacedGraph, v: NodeId, w: NodeId, c: IbColours) -> Result<(InterfacedGraph, KmnReport)> {
    check_bipartite(g, c)?;
    let legs = g.leg_counts();
    if g.graph.nodes[v] != c.black || legs[v] != 0 {
        return Err(Error::Graph(format!("node {v} is not an interior node of the eliminated colour")));
    }
    if g.graph.nodes[w] != c.red || legs[w] != 0 {
        return Err(Error::Graph(format!("node {w} is not an interior node of the other colour")));
    }
    let nv = neighbours(&g.graph, v);
    if !nv.contains(&w) {
        return Err(Error::Graph(format!("nodes {v} and {w} are not adjacent")));
    }
    let reds: Vec<NodeId> = nv.into_iter().filter(|r| *r != w).collect();
    let blacks: Vec<NodeId> = neighbours(&g.graph, w).into_iter().filter(|b| *b != v).collect();
    let mut h = g.clone();
    for b in &blacks {
        for r in &reds {
            h.graph.add_edge(Label::Chg(c.black, c.red), vec![*b], vec![*r]);
        }
    }
    let incident: Vec<bool> = h
        .graph
        .edges
        .iter()
        .map(|e| [v, w].contains(&e.sources[0]) || [v, w].contains(&e.targets[0]))
        .collect();
    let h = remove(&h, &[v.max(w), v.min(w)], &incident);
    let before = h.graph.edge_count();
    let (h, cancelled, _) = cancel_parallel(&h, c);
    let report = KmnReport {
        m: reds.len(),
        n: blacks.len(),
        added: (blacks.len() * reds.len()).saturating_sub(cancelled),
        cancelled,
    };
    debug_assert_eq!(h.graph.edge_count(), before - cancelled);
    Ok((h, report))
}

/// Why a graph is not in reduced form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotReduced {
    Cyclic,
    Interior(NodeId),
    /// Neither (I), (O) nor (IO).
    BadBoundary(NodeId),
}

impl fmt::Display for NotReduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotReduced::Cyclic => write!(f, "graph is cyclic"),
            NotReduced::Interior(v) => write!(f, "node {v} is interior"),
            NotReduced::BadBoundary(v) => write!(f, "node {v} is neither of type I, O nor IO"),
        }
    }
}

/// Every primary node is (I) one input leg and no in-edges, (O) one output
/// leg and no out-edges, or (IO) legs on both sides; and the graph is
/// acyclic.
pub fn ib_is_reduced(g: &InterfacedGraph, n_inputs: usize, c: IbColours) -> std::result::Result<(), NotReduced> {
    if !g.graph.is_acyclic() {
        return Err(NotReduced::Cyclic);
    }
    let n = g.graph.node_count();
    let (mut ins, mut outs) = (vec![0usize; n], vec![0usize; n]);
    for (p, v) in g.interface.iter().enumerate() {
        if p < n_inputs {
            ins[*v] += 1;
        } else {
            outs[*v] += 1;
        }
    }
    let (mut in_edges, mut out_edges) = (vec![0usize; n], vec![0usize; n]);
    for e in &g.graph.edges {
        for s in &e.sources {
            out_edges[*s] += 1;
        }
        for t in &e.targets {
            in_edges[*t] += 1;
        }
    }
    for v in 0..n {
        if g.graph.nodes[v] != c.black {
            continue;
        }
        if ins[v] + outs[v] == 0 {
            return Err(NotReduced::Interior(v));
        }
        let ty_i = ins[v] == 1 && outs[v] == 0 && in_edges[v] == 0;
        let ty_o = outs[v] == 1 && ins[v] == 0 && out_edges[v] == 0;
        let ty_io = ins[v] >= 1 && outs[v] >= 1;
        if !(ty_i || ty_o || ty_io) {
            return Err(NotReduced::BadBoundary(v));
        }
    }
    Ok(())
}

/// Converse of (CA): a primary node with `k >= 2` legs, all on one side, is
/// split into `k` nodes chained through `k - 1` fresh secondary nodes. Its
/// edges stay on the first copy.
fn split_one_sided(g: &InterfacedGraph, n_inputs: usize, c: IbColours) -> (InterfacedGraph, Vec<IbEvent>) {
    let mut h = g.clone();
    let mut events = Vec::new();
    for v in 0..g.graph.node_count() {
        if g.graph.nodes[v] != c.black {
            continue;
        }
        let legs: Vec<usize> = (0..g.interface.len()).filter(|p| g.interface[*p] == v).collect();
        let ins = legs.iter().filter(|p| **p < n_inputs).count();
        if legs.len() < 2 || (ins != 0 && ins != legs.len()) {
            continue;
        }
        let mut prev = v;
        for p in &legs[1..] {
            let b = h.graph.add_node(c.black);
            let r = h.graph.add_node(c.red);
            h.graph.add_edge(Label::Chg(c.black, c.red), vec![prev], vec![r]);
            h.graph.add_edge(Label::Chg(c.black, c.red), vec![b], vec![r]);
            h.interface[*p] = b;
            prev = b;
        }
        events.push(IbEvent { step: 0, action: "split", node: Some(v), partner: None, added: 2 * (legs.len() - 1), removed: 0 });
    }
    (h, events)
}

/// Rule (D): every changer runs from a primary node with input legs to a
/// secondary node, or from a secondary node to a primary node without them.
fn orient(g: &InterfacedGraph, n_inputs: usize, c: IbColours) -> (InterfacedGraph, usize) {
    let mut has_input = vec![false; g.graph.node_count()];
    for v in &g.interface[..n_inputs] {
        has_input[*v] = true;
    }
    let mut h = g.clone();
    let mut flipped = 0;
    for e in &mut h.graph.edges {
        let (s, t) = (e.sources[0], e.targets[0]);
        let (b, r) = if g.graph.nodes[s] == c.black { (s, t) } else { (t, s) };
        let (ns, nt) = if has_input[b] { (b, r) } else { (r, b) };
        if (ns, nt) != (s, t) {
            flipped += 1;
            e.sources = vec![ns];
            e.targets = vec![nt];
            e.label = Label::Chg(g.graph.nodes[ns], g.graph.nodes[nt]);
        }
    }
    (h, flipped)
}

/// Runs steps 1 to 5. `observe` is called after every graph change.
pub fn ib_reduce_with(
    host: &InterfacedGraph,
    n_inputs: usize,
    c: IbColours,
    observe: &mut dyn FnMut(&IbEvent, &InterfacedGraph) -> Result<()>,
) -> Result<IbRun> {
    check_bipartite(host, c)?;
    if let Some(v) = host.interface.iter().find(|v| host.graph.nodes[**v] != c.black) {
        return Err(Error::InterfaceColour(format!("#{} on node {v}", host.graph.nodes[*v])));
    }
    let mut g = host.clone();
    let mut log: Vec<IbEvent> = Vec::new();
    let mut push = |mut ev: IbEvent, g: &InterfacedGraph, log: &mut Vec<IbEvent>| -> Result<()> {
        ev.step = log.len();
        observe(&ev, g)?;
        log.push(ev);
        Ok(())
    };
    let initial_interior = interior_black(&g, c).len();
    let mut iterations = 0;
    loop {
        let (h, edges, nodes) = cancel_parallel(&g, c);
        if edges + nodes > 0 {
            g = h;
            push(IbEvent { step: 0, action: "cancel", node: None, partner: None, added: 0, removed: edges + nodes }, &g, &mut log)?;
        }
        let Some(&v) = interior_black(&g, c).first() else { break };
        iterations += 1;
        match neighbours(&g.graph, v).first() {
            None => {
                let incident: Vec<bool> =
                    g.graph.edges.iter().map(|e| e.sources[0] == v || e.targets[0] == v).collect();
                g = remove(&g, &[v], &incident);
                push(IbEvent { step: 0, action: "delete", node: Some(v), partner: None, added: 0, removed: 1 }, &g, &mut log)?;
            }
            Some(&w) => {
                let (h, rep) = apply_kmn(&g, v, w, c)?;
                g = h;
                push(
                    IbEvent { step: 0, action: "kmn", node: Some(v), partner: Some(w), added: rep.added, removed: 2 },
                    &g,
                    &mut log,
                )?;
            }
        }
    }
    let (h, events) = split_one_sided(&g, n_inputs, c);
    g = h;
    for ev in events {
        push(ev, &g, &mut log)?;
    }
    let (h, flipped) = orient(&g, n_inputs, c);
    g = h;
    push(IbEvent { step: 0, action: "orient", node: None, partner: None, added: flipped, removed: 0 }, &g, &mut log)?;
    if let Err(e) = ib_is_reduced(&g, n_inputs, c) {
        return Err(Error::Graph(format!("strategy left a non-reduced graph: {e}")));
    }
    Ok(IbRun { result: g, n_inputs, initial_interior, iterations, log })
}

pub fn ib_reduce(host: &InterfacedGraph, n_inputs: usize, c: IbColours) -> Result<IbRun> {
    ib_reduce_with(host, n_inputs, c, &mut |_, _| Ok(()))
}

/// Moves every leg onto a fresh secondary node joined to its old node by a
/// changer, so the interface is entirely of the secondary colour.
pub fn wrap_interface(g: &InterfacedGraph, n_inputs: usize, c: IbColours) -> InterfacedGraph {
    let mut h = g.clone();
    for p in 0..g.interface.len() {
        let v = g.interface[p];
        if g.graph.nodes[v] != c.black {
            continue;
        }
        let r = h.graph.add_node(c.red);
        if p < n_inputs {
            h.graph.add_edge(Label::Chg(c.red, c.black), vec![r], vec![v]);
        } else {
            h.graph.add_edge(Label::Chg(c.black, c.red), vec![v], vec![r]);
        }
        h.interface[p] = r;
    }
    h
}

/// The colour-swapped run, producing the span form.
pub fn ib_reduce_swapped(host: &InterfacedGraph, n_inputs: usize, c: IbColours) -> Result<IbRun> {
    ib_reduce(&wrap_interface(host, n_inputs, c), n_inputs, c.swapped())
}

/// One equation of the cospan form: in-edge variables on the left, out-edge
/// variables on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub red: NodeId,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[String]| if s.is_empty() { "0".to_string() } else { s.join(" + ") };
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

/// Leg names: `x0, x1, ...` for inputs and `y0, y1, ...` for outputs.
pub fn leg_name(p: usize, n_inputs: usize) -> String {
    if p < n_inputs {
        format!("x{p}")
    } else {
        format!("y{}", p - n_inputs)
    }
}

/// Transcribes a reduced graph as a system of equations, one per secondary
/// node in id order. Each primary node is named after its first leg.
pub fn readoff_system(g: &InterfacedGraph, n_inputs: usize, c: IbColours) -> Result<Vec<Equation>> {
    let mut name = vec![None; g.graph.node_count()];
    for (p, v) in g.interface.iter().enumerate() {
        if name[*v].is_none() {
            name[*v] = Some(leg_name(p, n_inputs));
        }
    }
    let mut eqs = Vec::new();
    for r in 0..g.graph.node_count() {
        if g.graph.nodes[r] != c.red {
            continue;
        }
        let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
        for e in &g.graph.edges {
            let (s, t) = (e.sources[0], e.targets[0]);
            let var = |v: NodeId| name[v].clone().ok_or_else(|| Error::Graph(format!("node {v} is interior")));
            if t == r {
                lhs.push(var(s)?);
            } else if s == r {
                rhs.push(var(t)?);
            }
        }
        for (p, v) in g.interface.iter().enumerate() {
            if *v == r {
                if p < n_inputs {
                    lhs.push(leg_name(p, n_inputs));
                } else {
                    rhs.push(leg_name(p, n_inputs));
                }
            }
        }
        eqs.push(Equation { red: r, lhs, rhs });
    }
    Ok(eqs)
}

/// The existentially quantified system with interior variable `z0`:
/// `x0 + x1 = z0`, `z0 = y0`, `0 = y0`, `z0 = 0`.
pub fn existential_example() -> (InterfacedGraph, usize) {
    let mut g = Hypergraph::new();
    let x0 = g.add_node(IB.black);
    let x1 = g.add_node(IB.black);
    let y0 = g.add_node(IB.black);
    let z0 = g.add_node(IB.black);
    let d0 = g.add_node(IB.red);
    let e0 = g.add_node(IB.red);
    let e1 = g.add_node(IB.red);
    let e2 = g.add_node(IB.red);
    let br = Label::Chg(IB.black, IB.red);
    let rb = Label::Chg(IB.red, IB.black);
    g.add_edge(br, vec![x0], vec![d0]);
    g.add_edge(br, vec![x1], vec![d0]);
    g.add_edge(rb, vec![d0], vec![z0]);
    g.add_edge(br, vec![z0], vec![e0]);
    g.add_edge(rb, vec![e0], vec![y0]);
    g.add_edge(rb, vec![e1], vec![y0]);
    g.add_edge(br, vec![z0], vec![e2]);
    (InterfacedGraph::new(g, vec![x0, x1, y0]), 2)
}
